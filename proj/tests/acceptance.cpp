// Acceptance sweep: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dpb/bracket_families.hpp"
#include "dpb/centralizer.hpp"
#include "dpb/cli_io.hpp"
#include "dpb/rep_poisson.hpp"
#include "fixtures.hpp"

using namespace dpb;

namespace {

int failures = 0;

void criterion(int n, const char* label, double budget_s,
               const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" [exception: ") + e.what() + "]";
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    if (budget_s > 0 && secs > budget_s) {
        ok = false;
        note += " [over budget]";
    }
    if (!ok)
        ++failures;
    std::printf("criterion %2d: %s  (%6.1fs)  %s%s\n", n,
                ok ? "PASS" : "FAIL", secs, label, note.c_str());
    std::fflush(stdout);
}

struct Instance {
    StructureConstants s;
    bool associative;
    bool commutative;
};

std::vector<Instance> linear_catalog() {
    std::vector<Instance> out;
    { // diagonal product e_i e_j = -δ_ij e_i
        StructureConstants s = StructureConstants::zero(2);
        s.at(1, 1, 1) = -1;
        s.at(2, 2, 2) = -1;
        out.push_back({s, true, true});
    }
    out.push_back({StructureConstants::zero(2), true, true});
    { // truncated polynomial ring on three basis vectors
        StructureConstants s = StructureConstants::zero(3);
        auto set = [&](int i, int j, int k) { s.at(k, i, j) = 1; };
        set(1, 1, 1);
        set(1, 2, 2);
        set(2, 1, 2);
        set(1, 3, 3);
        set(3, 1, 3);
        set(2, 2, 3);
        out.push_back({s, true, true});
    }
    { // upper-triangular 2x2 matrices: associative, noncommutative
        StructureConstants s = StructureConstants::zero(3);
        s.at(1, 1, 1) = 1;
        s.at(2, 1, 2) = 1;
        s.at(2, 2, 3) = 1;
        s.at(3, 3, 3) = 1;
        out.push_back({s, true, false});
    }
    { // cross-product style: anticommutative, nonassociative
        StructureConstants s = StructureConstants::zero(3);
        s.at(3, 1, 2) = 1;
        s.at(3, 2, 1) = -1;
        s.at(1, 2, 3) = 1;
        s.at(1, 3, 2) = -1;
        s.at(2, 3, 1) = 1;
        s.at(2, 1, 3) = -1;
        out.push_back({s, false, false});
    }
    { // commutative, nonassociative
        StructureConstants s = StructureConstants::zero(2);
        s.at(2, 1, 1) = 1;
        s.at(1, 2, 2) = 1;
        out.push_back({s, false, true});
    }
    { // neither
        StructureConstants s = StructureConstants::zero(2);
        s.at(1, 1, 2) = 1;
        out.push_back({s, false, false});
    }
    return out;
}

} // namespace

int main() {
    criterion(1, "double jacobi for the standard bracket, L<=3, words<=4", 10,
              [] {
                  for (int L = 1; L <= 3; ++L)
                      if (!check_double_jacobi(kks(L), 4, 25, 101).passed)
                          return false;
                  return true;
              });

    criterion(2,
              "linear family: jacobi <=> associative, sign-flip adapted <=> "
              "commutative, over a 7-instance catalog",
              10, [] {
                  for (const Instance& inst : linear_catalog()) {
                      DoubleBracket b = linear_bracket(inst.s);
                      CheckReport jac = check_double_jacobi(b, 3, 24, 9);
                      if (jac.passed != inst.associative)
                          return false;
                      if (check_associative(inst.s).passed !=
                          inst.associative)
                          return false;
                      CheckReport ad = check_phi_adapted(
                          b, InvolutionSpec::phi_minus(inst.s.L));
                      if (ad.passed != inst.commutative)
                          return false;
                      if (check_commutative(inst.s).passed !=
                          inst.commutative)
                          return false;
                  }
                  return true;
              });

    criterion(3,
              "quadratic family pipeline at lambda=(0,1) and (0,1,3), plus a "
              "mutated-r witness",
              30, [] {
                  for (const auto& lambda :
                       {std::vector<Rat>{Rat(0), Rat(1)},
                        std::vector<Rat>{Rat(0), Rat(1), Rat(3)}}) {
                      RTensor r = ors_example(lambda);
                      if (!check_r_skew(r).passed ||
                          !check_r_upper_symmetric(r).passed ||
                          !check_aybe(r).passed)
                          return false;
                      DoubleBracket b = quadratic_bracket(r);
                      if (!check_double_jacobi(b, 3, 16, 2).passed)
                          return false;
                      int L = r.L;
                      if (!check_phi_adapted(b, InvolutionSpec::phi_plus(L))
                               .passed ||
                          !check_phi_adapted(b, InvolutionSpec::phi_minus(L))
                               .passed)
                          return false;
                  }
                  RTensor bad = ors_example({Rat(0), Rat(1)});
                  bad.at(1, 2, 1, 2) += 1;
                  bad.at(2, 1, 2, 1) -= 1;
                  CheckReport rep = check_aybe(bad);
                  return !rep.passed && rep.counterexample.has_value();
              });

    criterion(4,
              "coproduct/P operator lemmas for d=2..4 and the dual-involution "
              "identity for symmetric and skew forms",
              10, [] {
                  for (int d = 2; d <= 4; ++d)
                      if (!verify_coalgebra_lemmas(d).passed)
                          return false;
                  for (int d = 2; d <= 4; ++d) {
                      TauCoeffs t = MatrixInvolution::from_form(
                                        standard_identity_form(d))
                                        .coeffs();
                      if (!verify_dual_involution_swap(t).passed ||
                          !verify_dual_involution_chain(t).passed)
                          return false;
                  }
                  for (int d : {2, 4}) {
                      TauCoeffs t = MatrixInvolution::from_form(
                                        standard_symplectic_form(d))
                                        .coeffs();
                      if (!verify_dual_involution_swap(t).passed ||
                          !verify_dual_involution_chain(t).passed)
                          return false;
                  }
                  return true;
              });

    criterion(5,
              "plain induced structure at d=2,3: exhaustive jacobi, "
              "multiplicativity (words<=3), gl(d)-equivariance",
              60, [] {
                  for (int d = 2; d <= 3; ++d) {
                      PoissonStructure P =
                          PoissonStructure::induce_plain(kks(2), d);
                      if (!check_jacobi_ring(P, true, 0, 1, 4).passed)
                          return false;
                      if (!check_multiplicative(P, 3).passed)
                          return false;
                      if (!check_equivariance(P).passed)
                          return false;
                  }
                  return true;
              });

    criterion(6,
              "twisted induced structure: transpose d=3 (L=2) and symplectic "
              "d=2 (L=2), d=4 (L=1); skew, well-definedness, exhaustive "
              "jacobi, equivariance",
              300, [] {
                  struct Cfg {
                      BilinearForm form;
                      int L;
                  };
                  std::vector<Cfg> cfgs;
                  cfgs.push_back({standard_identity_form(3), 2});
                  cfgs.push_back({standard_symplectic_form(2), 2});
                  cfgs.push_back({standard_symplectic_form(4), 1});
                  for (const Cfg& cfg : cfgs) {
                      int d = cfg.form.d;
                      InvolutionSpec phi = InvolutionSpec::phi_minus(cfg.L);
                      MatrixInvolution tau =
                          MatrixInvolution::from_form(cfg.form);
                      if (!check_twisted_well_defined(kks(cfg.L), phi, tau, d)
                               .passed)
                          return false;
                      PoissonStructure P = PoissonStructure::induce_twisted(
                          kks(cfg.L), phi, tau, d);
                      for (const VarId& x : P.ring_vars())
                          for (const VarId& y : P.ring_vars())
                              if (P.pair_bracket(x, y) !=
                                  -P.pair_bracket(y, x))
                                  return false;
                      if (!check_jacobi_ring(P, true, 0, 1, 4).passed)
                          return false;
                      if (!check_equivariance(P).passed)
                          return false;
                  }
                  return true;
              });

    criterion(7,
              "two-sided jacobiator identity at d=2, plain and twisted, for "
              "the standard bracket and the non-Poisson fixture (>=50 "
              "triples each)",
              120, [] {
                  InvolutionSpec phi = InvolutionSpec::phi_minus(2);
                  TauCoeffs tau = MatrixInvolution::from_form(
                                      standard_identity_form(2))
                                      .coeffs();
                  CheckReport a = check_jacobiator_formula(
                      kks(2), 2, RingMode::plain, nullptr, nullptr, 50, 3,
                      31);
                  CheckReport b = check_jacobiator_formula(
                      non_poisson_fixture(), 2, RingMode::plain, nullptr,
                      nullptr, 50, 3, 32);
                  CheckReport c = check_jacobiator_formula(
                      kks(2), 2, RingMode::twisted, &phi, &tau, 50, 3, 33);
                  CheckReport d = check_jacobiator_formula(
                      non_poisson_fixture(), 2, RingMode::twisted, &phi, &tau,
                      50, 3, 34);
                  auto nonzero = [](const CheckReport& r) {
                      return r.scope.find("nonzero instances: 0") ==
                             std::string::npos;
                  };
                  return a.passed && b.passed && c.passed && d.passed &&
                         nonzero(b) && nonzero(d);
              });

    criterion(8,
              "word-element bracket formula over the symmetric algebra: N=3 "
              "orthogonal and N=4 symplectic, L=2, words<=2 (single letters "
              "included)",
              600, [] {
                  return check_word_bracket_formula(3, GroupKind::orthogonal,
                                                    2, 2, false, 4)
                             .passed &&
                         check_word_bracket_formula(4, GroupKind::symplectic,
                                                    2, 2, false, 4)
                             .passed;
              });

    criterion(9,
              "negative controls produce concrete counterexamples: "
              "plus-involution, wrong sign map, mutated P operator",
              60, [] {
                  CheckReport a =
                      check_phi_adapted(kks(2), InvolutionSpec::phi_plus(2));
                  CheckReport b = check_word_bracket_formula(
                      3, GroupKind::orthogonal, 1, 1, true);
                  CheckReport c = verify_coalgebra_lemmas(2, true);
                  auto witnessed = [](const CheckReport& r) {
                      return !r.passed && r.counterexample.has_value() &&
                             !r.counterexample->inputs.empty();
                  };
                  return witnessed(a) && witnessed(b) && witnessed(c);
              });

    criterion(10,
              "identical spec and seed give byte-identical JSON reports "
              "across two runs",
              60, [] {
                  const char* text = "[bracket]\nfamily = kks\nL = 2\n"
                                     "[involution]\nkind = phi_minus\n"
                                     "[form]\nkind = identity\nd = 3\n"
                                     "[checks]\ncheck = jacobi\n"
                                     "check = adapted\ncheck = well_defined\n"
                                     "check = ring_jacobi\n"
                                     "check = equivariance\n"
                                     "max_word_len = 3\nsamples = 10\n"
                                     "seed = 7\nexhaustive = true\n";
                  JobSpec job = parse_spec(text);
                  std::string one =
                      report_json(run_job(job, 2, true)).dump(2);
                  std::string two =
                      report_json(run_job(job, 4, true)).dump(2);
                  return !one.empty() && one == two;
              });

    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
