#ifndef DPB_CENTRALIZER_HPP
#define DPB_CENTRALIZER_HPP

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dpb/check_report.hpp"
#include "dpb/free_algebra.hpp"
#include "dpb/lin_comb.hpp"
#include "dpb/matrix_involutions.hpp"

namespace dpb {

// Variable F_{i,j|r}: basis element F_{ij} taken from the r-th summand of
// the direct sum, stored as (r, i, j). Only canonical representatives ever
// appear inside a CentElem.
using CentVar = std::tuple<int, int, int>;
using CentMono = std::vector<CentVar>; // sorted factor list
using CentElem = LinComb<CentMono>;

std::string cent_var_str(const CentVar& v); // F[i,j|r]
std::string cent_str(const CentElem& p);

CentElem cent_const(const Rat& c);
CentElem cent_mul(const CentElem& a, const CentElem& b);

// The orthogonal/symplectic Lie algebra realized inside gl(N) with the signed
// index set {-r,...,r} (0 dropped for N even) and basis
// F_{ij} = E_{ij} - θ(ij)E_{-j,-i}, subject to F_{ij} = -θ(ij)F_{-j,-i}.
// θ ≡ 1 in the orthogonal case, θ(i) = sgn(i) in the symplectic one.
class LieData {
public:
    static LieData build(int N, GroupKind kind); // throws BadParity

    int size() const { return N_; }
    GroupKind kind() const { return kind_; }
    const std::vector<int>& indices() const { return indices_; }
    int theta(int i) const;
    int theta2(int i, int j) const { return theta(i) * theta(j); }

    // F_{ij|r} rewritten on canonical representatives: the lexicographically
    // smaller of {(i,j), (-j,-i)} carries the variable; F_{i,-i} collapses to
    // zero in the orthogonal case.
    CentElem basic(int i, int j, int r) const;

    // The representative pairs whose variables are nonzero, in lex order.
    const std::vector<std::pair<int, int>>& canonical_pairs() const {
        return pairs_;
    }

private:
    LieData(int N, GroupKind kind, std::vector<int> indices,
            std::vector<std::pair<int, int>> pairs)
        : N_(N), kind_(kind), indices_(std::move(indices)),
          pairs_(std::move(pairs)) {}

    int N_;
    GroupKind kind_;
    std::vector<int> indices_;
    std::vector<std::pair<int, int>> pairs_;
};

// Canonical Lie-Poisson bracket of the direct sum: on variables
// [F_{ij}, F_{kl}] = δ_kj F_il - δ_il F_kj - θ(ij)(δ_{k,-i}F_{-j,l} -
// δ_{-j,l}F_{k,-i}) within one summand, zero across distinct summands,
// extended to polynomials by the Leibniz rule.
CentElem lie_poisson_bracket(const LieData& ld, const CentElem& f,
                             const CentElem& g);

// Path-sum polynomial f_{ij}(w) = Σ F_{i,a1|w1}·F_{a1,a2|w2}···F_{a_{m-1},j|wm}
// over internal indices; the empty word gives δ_ij.
CentElem f_word(const LieData& ld, int i, int j, const Word& w, int L);

// Sweeps all index 4-tuples and all word pairs up to max_word_len, comparing
// {f_ij(w), f_kl(t)} against the two-summand word formula driven by the
// standard double bracket and the sign-flip antiautomorphism. break_theta
// swaps in the wrong sign map on the second summand (negative control).
CheckReport check_word_bracket_formula(int N, GroupKind kind, int L,
                                       int max_word_len,
                                       bool break_theta = false,
                                       int threads = 1);

} // namespace dpb

#endif
