#include "dpb/free_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace dpb {

std::string word_str(const Word& w) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            os << ',';
        os << w[i];
    }
    os << ']';
    return os.str();
}

namespace {

template <class T, class KeyPrinter>
std::string comb_str(const T& x, KeyPrinter print_key) {
    if (x.zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : x.terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << to_string(c) << '*' << print_key(k);
    }
    return os.str();
}

} // namespace

std::string free_str(const FreeElem& a) {
    return comb_str(a, [](const Word& w) { return word_str(w); });
}

std::string tensor2_str(const Tensor2& x) {
    return comb_str(x, [](const std::pair<Word, Word>& k) {
        return word_str(k.first) + "x" + word_str(k.second);
    });
}

std::string tensor3_str(const Tensor3& x) {
    return comb_str(x, [](const std::tuple<Word, Word, Word>& k) {
        return word_str(std::get<0>(k)) + "x" + word_str(std::get<1>(k)) + "x" +
               word_str(std::get<2>(k));
    });
}

FreeElem mul_free(const FreeElem& a, const FreeElem& b) {
    FreeElem r;
    for (const auto& [u, c] : a.terms())
        for (const auto& [v, e] : b.terms())
            r.add(concat(u, v), c * e);
    return r;
}

Tensor2 flip(const Tensor2& x) {
    Tensor2 r;
    for (const auto& [k, c] : x.terms())
        r.add({k.second, k.first}, c);
    return r;
}

Tensor2 bimodule_act(BimoduleMode mode, const FreeElem& b, const Tensor2& x,
                     const FreeElem& c) {
    Tensor2 r;
    for (const auto& [k, e] : x.terms()) {
        const auto& [x1, x2] = k;
        for (const auto& [u, cb] : b.terms())
            for (const auto& [v, cc] : c.terms()) {
                if (mode == BimoduleMode::outer)
                    r.add({concat(u, x1), concat(x2, v)}, e * cb * cc);
                else
                    r.add({concat(x1, v), concat(u, x2)}, e * cb * cc);
            }
    }
    return r;
}

int Perm3::inverse(int k) const {
    for (int j = 1; j <= 3; ++j)
        if (image[j - 1] == k)
            return j;
    return 0; // unreachable for a valid permutation
}

Perm3 Perm3::then(const Perm3& second) const {
    Perm3 r{};
    for (int k = 1; k <= 3; ++k)
        r.image[k - 1] = second.apply(apply(k));
    return r;
}

Tensor3 s3_act(const Perm3& s, const Tensor3& x) {
    Tensor3 r;
    for (const auto& [k, c] : x.terms()) {
        std::array<const Word*, 3> w = {&std::get<0>(k), &std::get<1>(k),
                                        &std::get<2>(k)};
        r.add({*w[s.inverse(1) - 1], *w[s.inverse(2) - 1], *w[s.inverse(3) - 1]},
              c);
    }
    return r;
}

InvolutionSpec InvolutionSpec::phi_plus(int L) {
    std::vector<int> pi(L), eps(L, 1);
    for (int i = 0; i < L; ++i)
        pi[i] = i + 1;
    return InvolutionSpec(std::move(pi), std::move(eps), "phi_plus");
}

InvolutionSpec InvolutionSpec::phi_minus(int L) {
    std::vector<int> pi(L), eps(L, -1);
    for (int i = 0; i < L; ++i)
        pi[i] = i + 1;
    return InvolutionSpec(std::move(pi), std::move(eps), "phi_minus");
}

InvolutionSpec InvolutionSpec::signed_perm(std::vector<int> pi,
                                           std::vector<int> eps) {
    const int L = static_cast<int>(pi.size());
    if (static_cast<int>(eps.size()) != L)
        throw std::invalid_argument("involution: pi/eps length mismatch");
    for (int i = 1; i <= L; ++i) {
        int p = pi[i - 1];
        if (p < 1 || p > L)
            throw std::invalid_argument("involution: pi out of range");
        if (pi[p - 1] != i)
            throw std::invalid_argument("involution: pi is not an involution");
        if (eps[i - 1] != 1 && eps[i - 1] != -1)
            throw std::invalid_argument("involution: eps must be +-1");
        if (eps[i - 1] * eps[p - 1] != 1)
            throw std::invalid_argument("involution: eps_i * eps_pi(i) != 1");
    }
    return InvolutionSpec(std::move(pi), std::move(eps), "signed");
}

namespace {

// φ(w_1…w_k) = (∏ ε_{w_r}) α_{π(w_k)}…α_{π(w_1)}.
std::pair<Word, int> involve_word(const InvolutionSpec& phi, const Word& w) {
    Word out;
    out.reserve(w.size());
    int sign = 1;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(phi.perm(*it));
    for (int letter : w)
        sign *= phi.sign(letter);
    return {std::move(out), sign};
}

} // namespace

FreeElem apply_involution(const InvolutionSpec& phi, const FreeElem& a) {
    FreeElem r;
    for (const auto& [w, c] : a.terms()) {
        auto [u, s] = involve_word(phi, w);
        r.add(std::move(u), c * s);
    }
    return r;
}

Tensor2 apply_involution2(const InvolutionSpec& phi, const Tensor2& x) {
    Tensor2 r;
    for (const auto& [k, c] : x.terms()) {
        auto [u, su] = involve_word(phi, k.first);
        auto [v, sv] = involve_word(phi, k.second);
        r.add({std::move(u), std::move(v)}, c * su * sv);
    }
    return r;
}

Tensor3 apply_involution3(const InvolutionSpec& phi, const Tensor3& x) {
    Tensor3 r;
    for (const auto& [k, c] : x.terms()) {
        auto [u, su] = involve_word(phi, std::get<0>(k));
        auto [v, sv] = involve_word(phi, std::get<1>(k));
        auto [w, sw] = involve_word(phi, std::get<2>(k));
        r.add({std::move(u), std::move(v), std::move(w)}, c * su * sv * sw);
    }
    return r;
}

} // namespace dpb
