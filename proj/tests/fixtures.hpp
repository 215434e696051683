#ifndef TESTS_FIXTURES_HPP
#define TESTS_FIXTURES_HPP

#include "dpb/bracket_families.hpp"

// Designated non-Poisson fixture: the linear bracket of the commutative but
// non-associative multiplication e₁e₁ = e₂, e₂e₂ = e₁ on two generators.
// Commutativity makes it compatible with the sign-flip involution, while the
// failed associativity breaks the double Jacobi identity — and, unlike some
// single-generator candidates, the induced ring bracket at d = 2 also fails
// Jacobi with a concrete witness.
inline dpb::DoubleBracket non_poisson_fixture() {
    using namespace dpb;
    StructureConstants s = StructureConstants::zero(2);
    s.at(2, 1, 1) = 1;
    s.at(1, 2, 2) = 1;
    return linear_bracket(s);
}

#endif
