#include "dpb/double_bracket.hpp"

#include <sstream>

#include "dpb/rng.hpp"

namespace dpb {

SkewViolation::SkewViolation(int i_, int j_, Tensor2 difference_)
    : std::runtime_error("skew symmetry violated at generator pair (" +
                         std::to_string(i_) + "," + std::to_string(j_) + ")"),
      i(i_), j(j_), difference(std::move(difference_)) {}

DoubleBracket DoubleBracket::make(int L,
                                  std::vector<std::vector<Tensor2>> table) {
    if (L < 0 || static_cast<int>(table.size()) != L)
        throw std::invalid_argument("double bracket: table must be LxL");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != L)
            throw std::invalid_argument("double bracket: table must be LxL");
    for (int i = 1; i <= L; ++i)
        for (int j = i; j <= L; ++j) {
            Tensor2 diff = table[i - 1][j - 1] + flip(table[j - 1][i - 1]);
            if (!diff.zero())
                throw SkewViolation(i, j, std::move(diff));
        }
    return DoubleBracket(L, std::move(table));
}

const Tensor2& BracketEval::words(const Word& a, const Word& b) {
    auto it = memo_.find({a, b});
    if (it != memo_.end())
        return it->second;

    Tensor2 result;
    if (a.empty() || b.empty()) {
        // ⟦1,b⟧ = ⟦a,1⟧ = 0
    } else if (a.size() == 1 && b.size() == 1) {
        result = bracket_.generator_pair(a[0], b[0]);
    } else if (b.size() > 1) {
        // ⟦a, b'c⟧ = ⟦a,b'⟧c + b'⟦a,c⟧, splitting off the last letter of b.
        Word head(b.begin(), b.end() - 1);
        Word last{b.back()};
        FreeElem head_e = FreeElem::term(head);
        FreeElem last_e = FreeElem::term(last);
        result = bimodule_act(BimoduleMode::outer, free_one(), words(a, head),
                              last_e) +
                 bimodule_act(BimoduleMode::outer, head_e, words(a, last),
                              free_one());
    } else {
        // ⟦ha', c⟧ = ⟦h,c⟧∗a' + h∗⟦a',c⟧, splitting off the first letter of a.
        Word first{a.front()};
        Word tail(a.begin() + 1, a.end());
        FreeElem first_e = FreeElem::term(first);
        FreeElem tail_e = FreeElem::term(tail);
        result = bimodule_act(BimoduleMode::inner, free_one(), words(first, b),
                              tail_e) +
                 bimodule_act(BimoduleMode::inner, first_e, words(tail, b),
                              free_one());
    }
    return memo_.emplace(std::make_pair(a, b), std::move(result))
        .first->second;
}

Tensor2 BracketEval::operator()(const FreeElem& a, const FreeElem& b) {
    Tensor2 r;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms())
            r += words(u, v) * (cu * cv);
    return r;
}

Tensor2 eval_bracket(const DoubleBracket& bracket, const FreeElem& a,
                     const FreeElem& b) {
    BracketEval ev(bracket);
    return ev(a, b);
}

Tensor3 bracket_on_tensor(const DoubleBracket& bracket, const FreeElem& a,
                          const Tensor2& x, Slot side) {
    BracketEval ev(bracket);
    Tensor3 r;
    for (const auto& [k, c] : x.terms()) {
        const auto& [x1, x2] = k;
        const Word& slot = (side == Slot::left) ? x1 : x2;
        const Word& rest = (side == Slot::left) ? x2 : x1;
        Tensor2 inner = ev(a, FreeElem::term(slot));
        for (const auto& [ik, ic] : inner.terms()) {
            if (side == Slot::left)
                r.add({ik.first, ik.second, rest}, c * ic);
            else
                r.add({rest, ik.first, ik.second}, c * ic);
        }
    }
    return r;
}

Tensor3 triple_bracket(const DoubleBracket& bracket, const FreeElem& a,
                       const FreeElem& b, const FreeElem& c) {
    BracketEval ev(bracket);
    const Perm3 cyc = Perm3::cyc123();
    Tensor3 t1 = bracket_on_tensor(bracket, a, ev(b, c), Slot::left);
    Tensor3 t2 = bracket_on_tensor(bracket, b, ev(c, a), Slot::left);
    Tensor3 t3 = bracket_on_tensor(bracket, c, ev(a, b), Slot::left);
    return t1 + s3_act(cyc, t2) + s3_act(cyc.then(cyc), t3);
}

Word random_word(SplitMix64& rng, int L, int max_len) {
    int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len) + 1));
    Word w(len);
    for (int& letter : w)
        letter = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(L)));
    return w;
}

CheckReport check_double_jacobi(const DoubleBracket& bracket, int max_word_len,
                                int samples, std::uint64_t seed) {
    const int L = bracket.generator_count();
    std::ostringstream scope;
    scope << "generator triples L=" << L << " plus " << samples
          << " random word triples (max_word_len=" << max_word_len
          << ", seed=" << seed << ", prng=" << SplitMix64::algorithm << ")";

    auto test = [&](const Word& a, const Word& b,
                    const Word& c) -> std::optional<Counterexample> {
        Tensor3 t = triple_bracket(bracket, FreeElem::term(a),
                                   FreeElem::term(b), FreeElem::term(c));
        if (t.zero())
            return std::nullopt;
        return Counterexample{"a=" + word_str(a) + " b=" + word_str(b) +
                                  " c=" + word_str(c),
                              tensor3_str(t), "0"};
    };

    for (int i = 1; i <= L; ++i)
        for (int j = 1; j <= L; ++j)
            for (int k = 1; k <= L; ++k)
                if (auto ce = test({i}, {j}, {k}))
                    return CheckReport::fail(scope.str(), *ce);

    SplitMix64 rng(seed);
    for (int n = 0; n < samples; ++n) {
        Word a = random_word(rng, L, max_word_len);
        Word b = random_word(rng, L, max_word_len);
        Word c = random_word(rng, L, max_word_len);
        if (auto ce = test(a, b, c))
            return CheckReport::fail(scope.str(), *ce);
    }
    return CheckReport::pass(scope.str());
}

CheckReport check_phi_adapted(const DoubleBracket& bracket,
                              const InvolutionSpec& phi, int samples,
                              int max_word_len, std::uint64_t seed) {
    const int L = bracket.generator_count();
    if (phi.generator_count() != L)
        throw std::invalid_argument(
            "check_phi_adapted: involution and bracket disagree on generator "
            "count");
    std::ostringstream scope;
    scope << "generator pairs L=" << L << " (sufficient) plus " << samples
          << " random word pairs (max_word_len=" << max_word_len
          << ", seed=" << seed << ", prng=" << SplitMix64::algorithm << ")";

    BracketEval ev(bracket);
    auto test = [&](const FreeElem& a,
                    const FreeElem& b) -> std::optional<Counterexample> {
        Tensor2 lhs = apply_involution2(phi, ev(a, b));
        Tensor2 rhs = flip(ev(apply_involution(phi, a), apply_involution(phi, b)));
        if (lhs == rhs)
            return std::nullopt;
        return Counterexample{"a=" + free_str(a) + " b=" + free_str(b),
                              tensor2_str(lhs), tensor2_str(rhs)};
    };

    for (int i = 1; i <= L; ++i)
        for (int j = 1; j <= L; ++j)
            if (auto ce = test(free_gen(i), free_gen(j)))
                return CheckReport::fail(scope.str(), *ce);

    SplitMix64 rng(seed);
    for (int n = 0; n < samples; ++n) {
        FreeElem a = FreeElem::term(random_word(rng, L, max_word_len));
        FreeElem b = FreeElem::term(random_word(rng, L, max_word_len));
        if (auto ce = test(a, b))
            return CheckReport::fail(scope.str(), *ce);
    }
    return CheckReport::pass(scope.str());
}

} // namespace dpb
