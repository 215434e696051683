#ifndef DPB_BRACKET_FAMILIES_HPP
#define DPB_BRACKET_FAMILIES_HPP

#include <stdexcept>
#include <vector>

#include "dpb/check_report.hpp"
#include "dpb/double_bracket.hpp"
#include "dpb/rational.hpp"

namespace dpb {

// Structure constants s^k_{ij} of a bilinear multiplication on k^L,
// flat-indexed in order (k;i,j).
struct StructureConstants {
    int L = 0;
    std::vector<Rat> s; // size L^3

    const Rat& at(int k, int i, int j) const {
        return s[((k - 1) * L + (i - 1)) * L + (j - 1)];
    }
    Rat& at(int k, int i, int j) {
        return s[((k - 1) * L + (i - 1)) * L + (j - 1)];
    }

    static StructureConstants zero(int L) {
        return {L, std::vector<Rat>(static_cast<std::size_t>(L) * L * L)};
    }
};

// r^{kl}_{ij} of an operator on k^L ⊗ k^L, flat-indexed in order (k,l;i,j).
struct RTensor {
    int L = 0;
    std::vector<Rat> r; // size L^4

    const Rat& at(int k, int l, int i, int j) const {
        return r[(((k - 1) * L + (l - 1)) * L + (i - 1)) * L + (j - 1)];
    }
    Rat& at(int k, int l, int i, int j) {
        return r[(((k - 1) * L + (l - 1)) * L + (i - 1)) * L + (j - 1)];
    }

    static RTensor zero(int L) {
        return {L, std::vector<Rat>(static_cast<std::size_t>(L) * L * L * L)};
    }
};

struct RSkewViolation : std::runtime_error {
    RSkewViolation() : std::runtime_error("r tensor is not skew: r^{kl}_{ij} != -r^{lk}_{ji}") {}
};

struct DegenerateParameters : std::runtime_error {
    DegenerateParameters(int i_, int j_)
        : std::runtime_error("ors parameters: lambda_" + std::to_string(i_) +
                             " == lambda_" + std::to_string(j_)),
          i(i_), j(j_) {}
    int i, j;
};

// ⟦α_i,α_j⟧ = δ_ij(1⊗α_i − α_i⊗1).
DoubleBracket kks(int L);

// ⟦α_i,α_j⟧ = Σ_k (s^k_{ij}(α_k⊗1) − s^k_{ji}(1⊗α_k)).
DoubleBracket linear_bracket(const StructureConstants& s);

// Σ_m s^m_{ij}s^n_{mk} = Σ_m s^n_{im}s^m_{jk} for all i,j,k,n.
CheckReport check_associative(const StructureConstants& s);
// s^k_{ij} = s^k_{ji}.
CheckReport check_commutative(const StructureConstants& s);

// R^{12} = -R^{21}, i.e. r^{kl}_{ij} = -r^{lk}_{ji}.
CheckReport check_r_skew(const RTensor& r);
// R^{12}R^{13} - R^{23}R^{12} + R^{13}R^{23} = 0 on (k^L)^{⊗3}; the
// equivalent variant R^{12}R^{23} - R^{23}R^{13} - R^{13}R^{12} = 0 is
// verified alongside it.
CheckReport check_aybe(const RTensor& r);
// r^{kl}_{ij} = r^{lk}_{ij}.
CheckReport check_r_upper_symmetric(const RTensor& r);

// ⟦α_i,α_j⟧ = Σ_{k,l} r^{kl}_{ij} α_k⊗α_l. Throws RSkewViolation unless
// check_r_skew passes.
DoubleBracket quadratic_bracket(const RTensor& r);

// ⟦α_i,α_j⟧ = (α_i⊗α_j + α_j⊗α_i − α_i⊗α_i − α_j⊗α_j)/(λ_i−λ_j), i≠j.
RTensor ors_example(const std::vector<Rat>& lambda);

} // namespace dpb

#endif
