#include "doctest.h"

#include "dpb/bracket_families.hpp"

using namespace dpb;

namespace {

// Catalog of small structure-constant instances with known properties.
struct Instance {
    const char* name;
    StructureConstants s;
    bool associative;
    bool commutative;
};

std::vector<Instance> catalog() {
    std::vector<Instance> out;

    { // diagonal product e_i e_j = -δ_ij e_i (the standard family's source)
        StructureConstants s = StructureConstants::zero(2);
        s.at(1, 1, 1) = -1;
        s.at(2, 2, 2) = -1;
        out.push_back({"neg_diagonal", s, true, true});
    }
    { // zero multiplication
        out.push_back({"zero", StructureConstants::zero(2), true, true});
    }
    { // k[x]/(x^3): e_1 = 1, e_2 = x, e_3 = x^2
        StructureConstants s = StructureConstants::zero(3);
        auto set = [&](int i, int j, int k) { s.at(k, i, j) = 1; };
        set(1, 1, 1);
        set(1, 2, 2);
        set(2, 1, 2);
        set(1, 3, 3);
        set(3, 1, 3);
        set(2, 2, 3);
        out.push_back({"truncated_poly", s, true, true});
    }
    { // 2x2 of upper triangular: e_1 = E11, e_2 = E12, e_3 = E22 —
      // associative, noncommutative
        StructureConstants s = StructureConstants::zero(3);
        s.at(1, 1, 1) = 1; // E11 E11
        s.at(2, 1, 2) = 1; // E11 E12
        s.at(2, 2, 3) = 1; // E12 E22
        s.at(3, 3, 3) = 1; // E22 E22
        out.push_back({"upper_triangular", s, true, false});
    }
    { // cross-product-like: e_1 e_2 = e_3 = -e_2 e_1, cyclic —
      // anticommutative, not associative
        StructureConstants s = StructureConstants::zero(3);
        s.at(3, 1, 2) = 1;
        s.at(3, 2, 1) = -1;
        s.at(1, 2, 3) = 1;
        s.at(1, 3, 2) = -1;
        s.at(2, 3, 1) = 1;
        s.at(2, 1, 3) = -1;
        out.push_back({"cross_product", s, false, false});
    }
    { // commutative but not associative: e_1 e_1 = e_2, e_2 e_2 = e_1
        StructureConstants s = StructureConstants::zero(2);
        s.at(2, 1, 1) = 1;
        s.at(1, 2, 2) = 1;
        out.push_back({"comm_nonassoc", s, false, true});
    }
    { // noncommutative and nonassociative
        StructureConstants s = StructureConstants::zero(2);
        s.at(1, 1, 2) = 1;
        out.push_back({"left_shift", s, false, false});
    }
    return out;
}

} // namespace

TEST_CASE("standard bracket equals the linear family at s = -delta") {
    for (int L = 1; L <= 3; ++L) {
        StructureConstants s = StructureConstants::zero(L);
        for (int i = 1; i <= L; ++i)
            s.at(i, i, i) = -1;
        DoubleBracket a = kks(L);
        DoubleBracket b = linear_bracket(s);
        for (int i = 1; i <= L; ++i)
            for (int j = 1; j <= L; ++j)
                CHECK(a.generator_pair(i, j) == b.generator_pair(i, j));
    }
}

TEST_CASE("linear family: jacobi iff associative, adapted iff commutative") {
    for (const Instance& inst : catalog()) {
        CAPTURE(inst.name);
        DoubleBracket b = linear_bracket(inst.s);
        CheckReport jac = check_double_jacobi(b, 3, 24, 9);
        CHECK(jac.passed == check_associative(inst.s).passed);
        CHECK(jac.passed == inst.associative);
        CheckReport ad =
            check_phi_adapted(b, InvolutionSpec::phi_minus(inst.s.L));
        CHECK(ad.passed == check_commutative(inst.s).passed);
        CHECK(ad.passed == inst.commutative);
    }
}

TEST_CASE("parameterized quadratic family passes the whole pipeline") {
    for (const auto& lambda :
         {std::vector<Rat>{Rat(0), Rat(1)},
          std::vector<Rat>{Rat(0), Rat(1), Rat(3)}}) {
        RTensor r = ors_example(lambda);
        CHECK(check_r_skew(r).passed);
        CHECK(check_r_upper_symmetric(r).passed);
        CHECK(check_aybe(r).passed);
        DoubleBracket b = quadratic_bracket(r);
        CHECK(check_double_jacobi(b, 3, 16, 2).passed);
        const int L = r.L;
        CHECK(check_phi_adapted(b, InvolutionSpec::phi_plus(L)).passed);
        CHECK(check_phi_adapted(b, InvolutionSpec::phi_minus(L)).passed);
    }
}

TEST_CASE("quadratic example values at lambda = (0,1)") {
    RTensor r = ors_example({Rat(0), Rat(1)});
    // 1/(λ_1-λ_2) = -1
    CHECK(r.at(1, 2, 1, 2) == -1);
    CHECK(r.at(2, 1, 1, 2) == -1);
    CHECK(r.at(1, 1, 1, 2) == 1);
    CHECK(r.at(2, 2, 1, 2) == 1);
    CHECK(r.at(1, 1, 1, 1) == 0);
}

TEST_CASE("mutated r tensor fails the operator equation with a witness") {
    RTensor r = ors_example({Rat(0), Rat(1)});
    r.at(1, 2, 1, 2) += 1;
    r.at(2, 1, 2, 1) -= 1; // keep skew so the failure is specific
    CHECK(check_r_skew(r).passed);
    CheckReport rep = check_aybe(r);
    CHECK_FALSE(rep.passed);
    REQUIRE(rep.counterexample.has_value());
    CHECK_FALSE(rep.counterexample->inputs.empty());

    RTensor not_skew = ors_example({Rat(0), Rat(1)});
    not_skew.at(1, 2, 1, 2) += 1;
    CHECK_FALSE(check_r_skew(not_skew).passed);
    CHECK_THROWS_AS(quadratic_bracket(not_skew), RSkewViolation);
}

TEST_CASE("degenerate parameters are rejected") {
    CHECK_THROWS_AS(ors_example({Rat(1), Rat(1)}), DegenerateParameters);
    try {
        ors_example({Rat(0), Rat(2), Rat(2)});
        FAIL("expected throw");
    } catch (const DegenerateParameters& e) {
        CHECK(e.i == 2);
        CHECK(e.j == 3);
    }
}
