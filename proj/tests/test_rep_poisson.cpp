#include "doctest.h"

#include "dpb/bracket_families.hpp"
#include "dpb/rep_poisson.hpp"
#include "dpb/rng.hpp"
#include "fixtures.hpp"

using namespace dpb;

TEST_CASE("entry polynomials") {
    // (α1α2)_{ij} = Σ_r v[1][i,r]·v[2][r,j]
    PolyElem p = entry_poly(FreeElem::term({1, 2}), 1, 2, 2, 2);
    PolyElem expect;
    expect += poly_mul(poly_var({1, 1, 1}), poly_var({2, 1, 2}));
    expect += poly_mul(poly_var({1, 1, 2}), poly_var({2, 2, 2}));
    CHECK(p == expect);
    // 1_{ij} = δ_ij
    CHECK(entry_poly(free_one(), 1, 1, 2, 2) == poly_const(Rat(1)));
    CHECK(entry_poly(free_one(), 1, 2, 2, 2).zero());
    // linearity
    CHECK(entry_poly(free_gen(1) + free_gen(2), 1, 1, 2, 2) ==
          poly_var({1, 1, 1}) + poly_var({2, 1, 1}));
    CHECK_THROWS_AS(entry_poly(free_gen(1), 0, 1, 2, 2), IndexOutOfRange);
    CHECK_THROWS_AS(entry_poly(free_gen(3), 1, 1, 2, 2), IndexOutOfRange);
}

TEST_CASE("plain induced bracket values for the standard bracket, d=2") {
    PoissonStructure P = PoissonStructure::induce_plain(kks(2), 2);
    CHECK(P.pair_bracket({1, 1, 1}, {1, 1, 2}) == poly_var({1, 1, 2}));
    CHECK(P.pair_bracket({1, 1, 2}, {1, 2, 1}) ==
          poly_var({1, 1, 1}) - poly_var({1, 2, 2}));
    // independent generators commute
    CHECK(P.pair_bracket({1, 1, 2}, {2, 1, 1}).zero());
    // {f, 1} = 0
    CHECK(poisson_eval(P, poly_var({1, 1, 1}), poly_const(Rat(3))).zero());
}

TEST_CASE("poisson_eval is a skew biderivation") {
    PoissonStructure P = PoissonStructure::induce_plain(kks(2), 2);
    std::vector<VarId> vars = P.ring_vars();
    SplitMix64 rng(17);
    auto rand_poly = [&]() {
        PolyElem p;
        for (int t = 0; t < 3; ++t) {
            PolyMono m;
            int deg = 1 + static_cast<int>(rng.below(2));
            for (int k = 0; k < deg; ++k)
                m.push_back(vars[rng.below(vars.size())]);
            std::sort(m.begin(), m.end());
            p.add(std::move(m), Rat(1 + static_cast<int>(rng.below(5))));
        }
        return p;
    };
    for (int n = 0; n < 20; ++n) {
        PolyElem f = rand_poly(), g = rand_poly(), h = rand_poly();
        CHECK(poisson_eval(P, f, f).zero());
        CHECK(poisson_eval(P, f, g) == -poisson_eval(P, g, f));
        CHECK(poisson_eval(P, poly_mul(f, g), h) ==
              poly_mul(f, poisson_eval(P, g, h)) +
                  poly_mul(poisson_eval(P, f, h), g));
    }
}

TEST_CASE("normal form ranks per generator") {
    // sign-flip involution with symmetric vs skew forms
    for (int d = 2; d <= 4; ++d) {
        NormalForm sym = NormalForm::build(
            2, d, InvolutionSpec::phi_minus(2),
            MatrixInvolution::from_form(standard_identity_form(d)).coeffs());
        CHECK(static_cast<int>(sym.free_vars().size()) ==
              2 * d * (d - 1) / 2);
        if (d % 2 == 0) {
            NormalForm skew = NormalForm::build(
                2, d, InvolutionSpec::phi_minus(2),
                MatrixInvolution::from_form(standard_symplectic_form(d))
                    .coeffs());
            CHECK(static_cast<int>(skew.free_vars().size()) ==
                  2 * d * (d + 1) / 2);
        }
    }
    // reduction is idempotent and kills the relations
    NormalForm nf = NormalForm::build(
        1, 3, InvolutionSpec::phi_minus(1),
        MatrixInvolution::from_form(standard_identity_form(3)).coeffs());
    for (int i = 1; i <= 3; ++i) {
        CHECK(nf.reduce(poly_var({1, i, i})).zero());
        for (int j = 1; j <= 3; ++j) {
            PolyElem rel = poly_var({1, i, j}) + poly_var({1, j, i});
            CHECK(nf.reduce(rel).zero());
            CHECK(nf.reduce(nf.reduce(poly_var({1, i, j}))) ==
                  nf.reduce(poly_var({1, i, j})));
        }
    }
}

TEST_CASE("twisted structure for the standard bracket reproduces the "
          "antisymmetric-matrix table at d=3") {
    PoissonStructure P = PoissonStructure::induce_twisted(
        kks(1), InvolutionSpec::phi_minus(1),
        MatrixInvolution::from_form(standard_identity_form(3)), 3);
    // {v[1][1,2], v[1][1,3]} = -v[1][2,3] after reduction
    PolyElem lhs = poisson_eval(P, P.reduce(poly_var({1, 1, 2})),
                                P.reduce(poly_var({1, 1, 3})));
    CHECK(lhs == P.reduce(-poly_var({1, 2, 3})));
    // skew on all reduced variable pairs
    for (const VarId& x : P.ring_vars())
        for (const VarId& y : P.ring_vars())
            CHECK(P.pair_bracket(x, y) == -P.pair_bracket(y, x));
}

TEST_CASE("adaptedness guard on twisted construction") {
    CHECK_THROWS_AS(
        PoissonStructure::induce_twisted(
            kks(1), InvolutionSpec::phi_plus(1),
            MatrixInvolution::from_form(standard_identity_form(2)), 2),
        NotPhiAdapted);
}

TEST_CASE("ring-level jacobi: pass for the standard bracket, witness for "
          "the fixture") {
    CHECK(check_jacobi_ring(PoissonStructure::induce_plain(kks(2), 2), true)
              .passed);
    CheckReport bad = check_jacobi_ring(
        PoissonStructure::induce_plain(non_poisson_fixture(), 2), true);
    CHECK_FALSE(bad.passed);
    REQUIRE(bad.counterexample.has_value());
    CHECK(bad.counterexample->rhs == "0");

    // threaded sweep returns the same counterexample
    CheckReport bad4 = check_jacobi_ring(
        PoissonStructure::induce_plain(non_poisson_fixture(), 2), true, 0, 1,
        4);
    REQUIRE(bad4.counterexample.has_value());
    CHECK(bad4.counterexample->inputs == bad.counterexample->inputs);
}

TEST_CASE("twisted well-definedness and its negative control") {
    DoubleBracket b = kks(2);
    MatrixInvolution tr =
        MatrixInvolution::from_form(standard_identity_form(2));
    CHECK(check_twisted_well_defined(b, InvolutionSpec::phi_minus(2), tr, 2)
              .passed);
    CheckReport forced =
        check_twisted_well_defined(b, InvolutionSpec::phi_plus(2), tr, 2);
    CHECK_FALSE(forced.passed);
    REQUIRE(forced.counterexample.has_value());
}

TEST_CASE("equivariance: plain, twisted, and the corrupted control") {
    PoissonStructure plain = PoissonStructure::induce_plain(kks(2), 2);
    CHECK(check_equivariance(plain).passed);
    CheckReport broken = check_equivariance(plain, true);
    CHECK_FALSE(broken.passed);
    REQUIRE(broken.counterexample.has_value());

    PoissonStructure tw = PoissonStructure::induce_twisted(
        kks(1), InvolutionSpec::phi_minus(1),
        MatrixInvolution::from_form(standard_identity_form(3)), 3);
    CheckReport r = check_equivariance(tw);
    CHECK(r.passed);
    CHECK(r.scope.find("3 basis elements") != std::string::npos);
}

TEST_CASE("point evaluation") {
    PolyElem p = entry_poly(FreeElem::term({1, 2}), 1, 1, 2, 2);
    std::map<VarId, Rat> point;
    for (int g = 1; g <= 2; ++g)
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                point[{g, i, j}] = (i == j) ? 1 : 0; // both matrices identity
    CHECK(evaluate_at_point(p, point) == 1);
    CHECK(evaluate_at_point(entry_poly(free_one(), 1, 2, 2, 2), point) == 0);

    std::map<VarId, Rat> partial = {{{1, 1, 1}, Rat(2)}};
    CHECK_THROWS_AS(evaluate_at_point(p, partial), MissingVariable);

    NormalForm nf = NormalForm::build(
        1, 2, InvolutionSpec::phi_minus(1),
        MatrixInvolution::from_form(standard_identity_form(2)).coeffs());
    std::map<VarId, Rat> bad = {{{1, 1, 1}, Rat(5)}};
    CHECK_THROWS_AS(evaluate_at_point(poly_var({1, 1, 1}), bad, &nf),
                    RelationViolated);
    std::map<VarId, Rat> ok = {{{1, 1, 2}, Rat(3)}, {{1, 2, 1}, Rat(-3)}};
    CHECK(evaluate_at_point(poly_var({1, 2, 1}), ok, &nf) == -3);
}

TEST_CASE("jacobiator identity, plain mode") {
    CheckReport good =
        check_jacobiator_formula(kks(2), 2, RingMode::plain, nullptr,
                                 nullptr, 50, 3, 21);
    CHECK(good.passed);
    CheckReport fixture =
        check_jacobiator_formula(non_poisson_fixture(), 2, RingMode::plain,
                                 nullptr, nullptr, 50, 3, 22);
    CHECK(fixture.passed);
    // both sides agree *and* are nonzero somewhere for the fixture
    CHECK(fixture.scope.find("nonzero instances: 0") == std::string::npos);
}

TEST_CASE("jacobiator identity, twisted mode") {
    InvolutionSpec phi2 = InvolutionSpec::phi_minus(2);
    TauCoeffs tr2 =
        MatrixInvolution::from_form(standard_identity_form(2)).coeffs();
    CheckReport good = check_jacobiator_formula(kks(2), 2, RingMode::twisted,
                                                &phi2, &tr2, 50, 3, 23);
    CHECK(good.passed);
    CheckReport fixture = check_jacobiator_formula(
        non_poisson_fixture(), 2, RingMode::twisted, &phi2, &tr2, 50, 3, 24);
    CHECK(fixture.passed);
    CHECK(fixture.scope.find("nonzero instances: 0") == std::string::npos);
}
