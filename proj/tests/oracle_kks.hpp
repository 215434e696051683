#ifndef TESTS_ORACLE_KKS_HPP
#define TESTS_ORACLE_KKS_HPP

#include "dpb/free_algebra.hpp"

// Test-only oracle: closed-form value of the standard generator bracket on a
// pair of words, summing over common letters,
//   sum over w = w'αw'', t = t'αt'' of (t'w'' ⊗ w'αt'' − t'αw'' ⊗ w't'').
// Independent of the recursive evaluator in the library.
inline dpb::Tensor2 kks_word_oracle(const dpb::Word& w, const dpb::Word& t) {
    using namespace dpb;
    Tensor2 r;
    for (std::size_t p = 0; p < w.size(); ++p)
        for (std::size_t q = 0; q < t.size(); ++q) {
            if (w[p] != t[q])
                continue;
            Word w1(w.begin(), w.begin() + p);
            Word w2(w.begin() + p + 1, w.end());
            Word t1(t.begin(), t.begin() + q);
            Word t2(t.begin() + q + 1, t.end());
            Word a{w[p]};
            r.add({concat(t1, w2), concat(w1, concat(a, t2))}, Rat(1));
            r.add({concat(t1, concat(a, w2)), concat(w1, t2)}, Rat(-1));
        }
    return r;
}

#endif
