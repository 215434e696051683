#ifndef DPB_FREE_ALGEBRA_HPP
#define DPB_FREE_ALGEBRA_HPP

#include <array>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dpb/lin_comb.hpp"
#include "dpb/rational.hpp"

namespace dpb {

// A monomial in the free unital algebra on generators 1..L: a sequence of
// generator indices. The empty word is the multiplicative identity.
using Word = std::vector<int>;

using FreeElem = LinComb<Word>;
using Tensor2 = LinComb<std::pair<Word, Word>>;
using Tensor3 = LinComb<std::tuple<Word, Word, Word>>;

// Serialized as bracketed index list, e.g. [1,2,1]; [] is the unit.
std::string word_str(const Word& w);
std::string free_str(const FreeElem& a);
std::string tensor2_str(const Tensor2& x);
std::string tensor3_str(const Tensor3& x);

inline Word concat(const Word& u, const Word& v) {
    Word w = u;
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

inline FreeElem free_one() { return FreeElem::term(Word{}); }
inline FreeElem free_gen(int i) { return FreeElem::term(Word{i}); }

FreeElem mul_free(const FreeElem& a, const FreeElem& b);

inline Tensor2 tensor2(const FreeElem& a, const FreeElem& b) {
    Tensor2 r;
    for (const auto& [u, c] : a.terms())
        for (const auto& [v, e] : b.terms())
            r.add({u, v}, c * e);
    return r;
}

// x = x'⊗x'' maps to x''⊗x'.
Tensor2 flip(const Tensor2& x);

// Outer bimodule structure: b·(x'⊗x'')·c = (b x')⊗(x'' c).
// Inner bimodule structure: b ∗ (x'⊗x'') ∗ c = (x' c)⊗(b x'').
enum class BimoduleMode { outer, inner };
Tensor2 bimodule_act(BimoduleMode mode, const FreeElem& b, const Tensor2& x,
                     const FreeElem& c);

// Permutation of {1,2,3}; image[k-1] = s(k).
struct Perm3 {
    std::array<int, 3> image;

    static Perm3 identity() { return {{1, 2, 3}}; }
    // The 3-cycle 1->2->3->1, acting on tensors as
    // (123)·(x'⊗x''⊗x''') = x'''⊗x'⊗x''.
    static Perm3 cyc123() { return {{2, 3, 1}}; }
    static Perm3 swap23() { return {{1, 3, 2}}; }
    static Perm3 swap12() { return {{2, 1, 3}}; }

    int apply(int k) const { return image[k - 1]; }
    int inverse(int k) const;
    Perm3 then(const Perm3& second) const; // composition second∘this
};

// s·(x_1⊗x_2⊗x_3) = x_{s^{-1}(1)}⊗x_{s^{-1}(2)}⊗x_{s^{-1}(3)}.
Tensor3 s3_act(const Perm3& s, const Tensor3& x);

// Involutive antiautomorphism given on generators by α_i -> ε_i·α_{π(i)}.
// φ+ is (π = id, ε ≡ +1), φ- is (π = id, ε ≡ -1).
class InvolutionSpec {
public:
    static InvolutionSpec phi_plus(int L);
    static InvolutionSpec phi_minus(int L);
    // Throws std::invalid_argument unless π∘π = id and ε_i·ε_{π(i)} = 1.
    static InvolutionSpec signed_perm(std::vector<int> pi, std::vector<int> eps);

    int generator_count() const { return static_cast<int>(pi_.size()); }
    int perm(int i) const { return pi_[i - 1]; }
    int sign(int i) const { return eps_[i - 1]; }
    const std::string& name() const { return name_; }

private:
    InvolutionSpec(std::vector<int> pi, std::vector<int> eps, std::string name)
        : pi_(std::move(pi)), eps_(std::move(eps)), name_(std::move(name)) {}

    std::vector<int> pi_;
    std::vector<int> eps_;
    std::string name_;
};

FreeElem apply_involution(const InvolutionSpec& phi, const FreeElem& a);
Tensor2 apply_involution2(const InvolutionSpec& phi, const Tensor2& x);
Tensor3 apply_involution3(const InvolutionSpec& phi, const Tensor3& x);

} // namespace dpb

#endif
