#ifndef DPB_DOUBLE_BRACKET_HPP
#define DPB_DOUBLE_BRACKET_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "dpb/check_report.hpp"
#include "dpb/free_algebra.hpp"

namespace dpb {

struct SkewViolation : std::runtime_error {
    SkewViolation(int i_, int j_, Tensor2 difference_);
    int i, j;
    Tensor2 difference; // table[i][j] + flip(table[j][i])
};

// A double bracket given by its values on generator pairs; the Leibniz rules
// determine it on the whole free algebra. The skew invariant
// table[i][j] = -flip(table[j][i]) is validated at construction.
class DoubleBracket {
public:
    // table is 0-based L×L with entry (i-1,j-1) = ⟦α_i, α_j⟧.
    static DoubleBracket make(int L, std::vector<std::vector<Tensor2>> table);

    int generator_count() const { return L_; }
    const Tensor2& generator_pair(int i, int j) const {
        return table_[i - 1][j - 1];
    }

private:
    DoubleBracket(int L, std::vector<std::vector<Tensor2>> table)
        : L_(L), table_(std::move(table)) {}

    int L_;
    std::vector<std::vector<Tensor2>> table_;
};

// Word-pair evaluator with a per-instance memo table. Each concurrent worker
// owns its own BracketEval; the underlying DoubleBracket is immutable.
class BracketEval {
public:
    explicit BracketEval(const DoubleBracket& bracket) : bracket_(bracket) {}

    Tensor2 operator()(const FreeElem& a, const FreeElem& b);
    const Tensor2& words(const Word& a, const Word& b);

private:
    const DoubleBracket& bracket_;
    std::map<std::pair<Word, Word>, Tensor2> memo_;
};

Tensor2 eval_bracket(const DoubleBracket& bracket, const FreeElem& a,
                     const FreeElem& b);

enum class Slot { left, right };

// left:  ⟦a,x⟧_L = ⟦a,x'⟧⊗x'';  right: ⟦a,x⟧_R = x'⊗⟦a,x''⟧.
Tensor3 bracket_on_tensor(const DoubleBracket& bracket, const FreeElem& a,
                          const Tensor2& x, Slot side);

// ⟦a,b,c⟧ = ⟦a,⟦b,c⟧⟧_L + (123)·⟦b,⟦c,a⟧⟧_L + (123)²·⟦c,⟦a,b⟧⟧_L.
Tensor3 triple_bracket(const DoubleBracket& bracket, const FreeElem& a,
                       const FreeElem& b, const FreeElem& c);

// ⟦a,b,c⟧ = 0 on all generator triples and on `samples` pseudorandom word
// triples with lengths up to max_word_len.
CheckReport check_double_jacobi(const DoubleBracket& bracket, int max_word_len,
                                int samples, std::uint64_t seed);

// φ^{⊗2}(⟦a,b⟧) = ⟦φ(a),φ(b)⟧° on all generator pairs (which suffices),
// plus randomized word-pair spot checks.
CheckReport check_phi_adapted(const DoubleBracket& bracket,
                              const InvolutionSpec& phi, int samples = 64,
                              int max_word_len = 4, std::uint64_t seed = 1);

Word random_word(class SplitMix64& rng, int L, int max_len);

} // namespace dpb

#endif
