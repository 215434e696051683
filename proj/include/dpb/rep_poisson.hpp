#ifndef DPB_REP_POISSON_HPP
#define DPB_REP_POISSON_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "dpb/double_bracket.hpp"
#include "dpb/matrix_involutions.hpp"

namespace dpb {

// Matrix-entry variable v[g][i,j] of the g-th generator, serialized "g:i:j".
using VarId = std::tuple<int, int, int>;
// Commutative monomial: sorted list of variables (with repetition).
using PolyMono = std::vector<VarId>;
using PolyElem = LinComb<PolyMono>;
// Linear form in the variables.
using LinExpr = LinComb<VarId>;

std::string var_str(const VarId& v);
std::string poly_str(const PolyElem& p);

PolyElem poly_var(const VarId& v);
inline PolyElem poly_const(Rat c) { return PolyElem::term({}, std::move(c)); }
PolyElem poly_mul(const PolyElem& a, const PolyElem& b);

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what)
        : std::out_of_range(what) {}
};
struct MissingVariable : std::runtime_error {
    explicit MissingVariable(const VarId& v);
    VarId var;
};
struct RelationViolated : std::runtime_error {
    explicit RelationViolated(const VarId& v);
    VarId var;
};
struct NotPhiAdapted : std::runtime_error {
    NotPhiAdapted() : std::runtime_error(
        "double bracket is not compatible with the given involution") {}
};

// (w₁…w_m)_{ij} = Σ v[w₁][i,a₁]v[w₂][a₁,a₂]…v[w_m][a_{m−1},j], linearly
// extended; the unit word gives δ_ij.
PolyElem entry_poly(const FreeElem& a, int i, int j, int L, int d);

// Solved form of the linear identification
//   ε_g·v[π(g)][i,j] = Σ_{kl} τ^{ij}_{kl}·v[g][k,l]
// over all (g,i,j): every variable maps to a combination of free variables.
// Solved once by exact Gaussian elimination with lexicographic variable
// order; free variables are the non-pivot columns.
class NormalForm {
public:
    static NormalForm build(int L, int d, const InvolutionSpec& phi,
                            const TauCoeffs& tau);

    int generator_count() const { return L_; }
    int dim() const { return d_; }
    const LinExpr& reduce_var(const VarId& v) const;
    PolyElem reduce(const PolyElem& p) const;
    bool is_free(const VarId& v) const;
    const std::vector<VarId>& free_vars() const { return free_; }
    const std::map<VarId, LinExpr>& substitution() const { return subst_; }

private:
    NormalForm(int L, int d) : L_(L), d_(d) {}
    int L_, d_;
    std::map<VarId, LinExpr> subst_;
    std::vector<VarId> free_;
};

enum class RingMode { plain, twisted };

// The induced Poisson structure on matrix-entry variables: on variable
// pairs, {a_{ij},b_{kl}} = ⟦a,b⟧′_{kj}⟦a,b⟧″_{il}, plus in twisted mode
// the correction Σ_{mn} τ^{ij}_{mn}⟦φ(a),b⟧′_{kn}⟦φ(a),b⟧″_{ml}; values on
// twisted variables are stored reduced to normal form.
class PoissonStructure {
public:
    static PoissonStructure induce_plain(DoubleBracket bracket, int d);
    // Throws NotPhiAdapted unless the generator-pair compatibility check
    // passes. induce_twisted_unchecked skips that guard (negative controls).
    static PoissonStructure induce_twisted(DoubleBracket bracket,
                                           InvolutionSpec phi,
                                           MatrixInvolution tau, int d);
    static PoissonStructure induce_twisted_unchecked(DoubleBracket bracket,
                                                     InvolutionSpec phi,
                                                     MatrixInvolution tau,
                                                     int d);

    RingMode mode() const { return mode_; }
    int dim() const { return d_; }
    int generator_count() const { return bracket_.generator_count(); }
    const DoubleBracket& bracket() const { return bracket_; }
    const InvolutionSpec& phi() const { return *phi_; }
    const MatrixInvolution& tau() const { return *tau_; }
    const NormalForm& normal_form() const { return *nf_; }

    // All variables in plain mode; the free variables in twisted mode.
    const std::vector<VarId>& ring_vars() const { return ring_vars_; }
    PolyElem reduce(const PolyElem& p) const;

    const PolyElem& pair_bracket(const VarId& a, const VarId& b) const;

    // { (a|E*_{ij}), (b|E*_{kl}) } for arbitrary algebra elements, computed
    // directly from the defining formula (reduced in twisted mode).
    PolyElem bracket_entry(const FreeElem& a, const FreeElem& b, int i, int j,
                           int k, int l) const;

    // Testing hook: negates one stored pair-bracket entry so that downstream
    // identity checks must fail.
    void corrupt_one_entry_for_negative_control();

private:
    PoissonStructure(DoubleBracket bracket, int d)
        : bracket_(std::move(bracket)), d_(d) {}
    void build_table();
    PolyElem raw_bracket_entry(const FreeElem& a, const FreeElem& b, int i,
                               int j, int k, int l) const;

    DoubleBracket bracket_;
    int d_;
    RingMode mode_ = RingMode::plain;
    std::optional<InvolutionSpec> phi_;
    std::optional<MatrixInvolution> tau_;
    std::optional<NormalForm> nf_;
    std::vector<VarId> ring_vars_;
    std::map<std::pair<VarId, VarId>, PolyElem> table_;
};

// Biderivation extension of the variable-pair table; inputs are reduced
// first in twisted mode.
PolyElem poisson_eval(const PoissonStructure& P, const PolyElem& f,
                      const PolyElem& g);

// {f,{g,h}} + {g,{h,f}} + {h,{f,g}} = 0 over all ring-variable triples
// (exhaustive) or `samples` pseudorandom triples.
CheckReport check_jacobi_ring(const PoissonStructure& P, bool exhaustive,
                              int samples = 0, std::uint64_t seed = 1,
                              int threads = 1);

// {(uv)_{ij}, t_{kl}} computed at word level equals the Leibniz expansion
// of Σ_r u_{ir}v_{rj} through poisson_eval, for words up to max_word_len.
CheckReport check_multiplicative(const PoissonStructure& P, int max_word_len);

// The defining formula applied to (φ(α_g))_{ij} (a word-level input) reduces
// to the same normal form as the τ-coefficient expansion of the same class.
CheckReport check_substitution_symmetry(const PoissonStructure& P);

// Both of the above for a twisted structure built without the compatibility
// guard, so non-adapted involutions can be pushed through as negative
// controls.
CheckReport check_twisted_well_defined(const DoubleBracket& bracket,
                                       const InvolutionSpec& phi,
                                       const MatrixInvolution& tau, int d,
                                       int max_word_len = 3);

// D_X{f,h} = {D_X f,h} + {f,D_X h} on all ring-variable pairs, for X running
// over a basis of gl(d) (plain) or {x : τ(x) = −x} (twisted), with
// D_X(v[g][i,j]) = Σ_k (X_{ik}v[g][k,j] − v[g][i,k]X_{kj}).
CheckReport check_equivariance(const PoissonStructure& P,
                               bool corrupt = false);

// Exact evaluation; `nf` (when given) makes the assignment satisfy the
// normal-form relations or throw RelationViolated.
Rat evaluate_at_point(const PolyElem& f, const std::map<VarId, Rat>& point,
                      const NormalForm* nf = nullptr);

// Two-sided identity for the Jacobiator of the induced bracket on the
// ambient symmetric algebra whose variables are (word, dual-matrix-unit)
// pairs: the cyclic sum of nested brackets of simple tensors equals the
// stated combination of triple-bracket contractions — two terms in plain
// mode, four in twisted mode (where the basic identification
// φ(a)⊗x = a⊗τ*(x) is imposed on the variables). Holds for every double
// bracket, Poisson or not.
CheckReport check_jacobiator_formula(const DoubleBracket& bracket, int d,
                                     RingMode mode,
                                     const InvolutionSpec* phi = nullptr,
                                     const TauCoeffs* tau = nullptr,
                                     int samples = 50, int max_word_len = 3,
                                     std::uint64_t seed = 1);

} // namespace dpb

#endif
