#ifndef DPB_MATRIX_INVOLUTIONS_HPP
#define DPB_MATRIX_INVOLUTIONS_HPP

#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "dpb/check_report.hpp"
#include "dpb/lin_comb.hpp"
#include "dpb/rational.hpp"

namespace dpb {

struct SingularForm : std::runtime_error {
    SingularForm() : std::runtime_error("bilinear form matrix is singular") {}
};

struct BadParity : std::runtime_error {
    explicit BadParity(const std::string& what) : std::runtime_error(what) {}
};

// Dense rational d×d matrix, 1-based accessors.
struct RatMat {
    int d = 0;
    std::vector<Rat> a; // row-major, size d*d

    static RatMat zero(int d) {
        return {d, std::vector<Rat>(static_cast<std::size_t>(d) * d)};
    }
    static RatMat identity(int d);

    const Rat& at(int i, int j) const { return a[(i - 1) * static_cast<std::size_t>(d) + (j - 1)]; }
    Rat& at(int i, int j) { return a[(i - 1) * static_cast<std::size_t>(d) + (j - 1)]; }

    RatMat transpose() const;
    RatMat inverse() const; // throws SingularForm
    friend RatMat operator*(const RatMat& x, const RatMat& y);
    friend bool operator==(const RatMat& x, const RatMat& y) = default;
};

enum class FormKind { symmetric, skew };
enum class GroupKind { orthogonal, symplectic };

// Nondegenerate symmetric or skew-symmetric form. labels[p-1] is the
// external index of internal row p (signed labels for the theta styles,
// 1..d otherwise).
struct BilinearForm {
    int d = 0;
    RatMat g;
    FormKind kind = FormKind::symmetric;
    std::vector<int> labels;

    // Validates invertibility, gᵗ = ±g, parity. Throws SingularForm/BadParity.
    static BilinearForm make(RatMat g, FormKind kind, std::vector<int> labels = {});
};

BilinearForm standard_identity_form(int d);
BilinearForm standard_symplectic_form(int d); // d even, g = [[0,I],[-I,0]] blocks of the 2x2 J for d=2; general: antidiagonal-free block J
// <e_i,e_j> = θ(i)δ_{i,-j} on the signed index set {-r..r} (0 dropped for N
// even); θ ≡ 1 (orthogonal) or θ(i) = sgn(i) (symplectic).
BilinearForm theta_form(int N, GroupKind kind);

// Coefficients τ^{mn}_{ij} with τ(E_{ij}) = Σ τ^{mn}_{ij} E_{mn},
// flat-indexed in order (m,n;i,j).
struct TauCoeffs {
    int d = 0;
    std::vector<Rat> c; // size d^4

    const Rat& at(int m, int n, int i, int j) const {
        return c[(((m - 1) * d + (n - 1)) * static_cast<std::size_t>(d) + (i - 1)) * d + (j - 1)];
    }
    Rat& at(int m, int n, int i, int j) {
        return c[(((m - 1) * d + (n - 1)) * static_cast<std::size_t>(d) + (i - 1)) * d + (j - 1)];
    }

    static TauCoeffs zero(int d) {
        std::size_t n = static_cast<std::size_t>(d) * d * d * d;
        return {d, std::vector<Rat>(n)};
    }
};

// The involution M ↦ g Mᵗ g⁻¹ together with its coefficient tensor.
// τ∘τ = id and the antiautomorphism property are validated at construction.
class MatrixInvolution {
public:
    static MatrixInvolution from_form(BilinearForm form);

    int dim() const { return form_.d; }
    const BilinearForm& form() const { return form_; }
    const TauCoeffs& coeffs() const { return coeffs_; }

    RatMat apply(const RatMat& m) const; // g mᵗ g⁻¹

private:
    MatrixInvolution(BilinearForm form, TauCoeffs coeffs, RatMat ginv)
        : form_(std::move(form)), coeffs_(std::move(coeffs)),
          ginv_(std::move(ginv)) {}

    BilinearForm form_;
    TauCoeffs coeffs_;
    RatMat ginv_;
};

// Elements of Mat*(d) and its tensor powers in the dual basis {E*_{ij}}.
using IJ = std::pair<int, int>;
using DualElem = LinComb<IJ>;
using DualT2 = LinComb<std::pair<IJ, IJ>>;
using DualT3 = LinComb<std::tuple<IJ, IJ, IJ>>;

std::string dual_str(const DualElem& x);
std::string dual2_str(const DualT2& x);
std::string dual3_str(const DualT3& x);

// τ*(E*_{ij}) = Σ_{kl} τ^{ij}_{kl} E*_{kl}; the dual map to τ.
DualElem tau_star(const TauCoeffs& tau, const DualElem& x);
DualT2 tau_star2(const TauCoeffs& tau, const DualT2& x);
DualT3 tau_star3(const TauCoeffs& tau, const DualT3& x);

// P(E*_{ij}⊗E*_{kl}) = E*_{kj}⊗E*_{il}.
DualT2 p_op(const DualT2& x);
inline DualT2 p_op(const DualElem& x, const DualElem& y) {
    DualT2 t;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms())
            t.add({kx, ky}, cx * cy);
    return p_op(t);
}
DualT3 p12(const DualT3& x);
DualT3 p23(const DualT3& x);
// P12P23(x,y,z) = P(x, P(y,z)')⊗P(y,z)''.
DualT3 p12_p23(const DualT3& x);

DualT2 swap12(const DualT2& x);
DualT3 dual_s3(const struct Perm3& s, const DualT3& x);

// Δ(E*_{ij}) = Σ_p E*_{ip}⊗E*_{pj}, applied to the first/second factor.
DualT3 delta_left(int d, const DualT2& x);
DualT3 delta_right(int d, const DualT2& x);

// Coproduct laws plus the four P identities, on full dual bases. When
// mutate_p is set, a single sign of P is flipped (negative control).
CheckReport verify_coalgebra_lemmas(int d, bool mutate_p = false);

// (τ*)^{⊗2}P(x,y) = (12)P(τ*(x),τ*(y)) on the full dual basis, plus the
// σ-invariance τ^{⊗2}(σ) = σ.
CheckReport verify_dual_involution_swap(const TauCoeffs& tau);

// (12)(τ*)^{⊗3}P12P23 = P12P23(23)(τ*)^{⊗3} on all dual basis triples.
CheckReport verify_dual_involution_chain(const TauCoeffs& tau);

} // namespace dpb

#endif
