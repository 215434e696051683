#include "dpb/centralizer.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>

#include "dpb/bracket_families.hpp"
#include "dpb/double_bracket.hpp"
#include "dpb/parallel.hpp"
#include "dpb/rep_poisson.hpp"

namespace dpb {

std::string cent_var_str(const CentVar& v) {
    std::ostringstream os;
    os << "F[" << std::get<1>(v) << "," << std::get<2>(v) << "|"
       << std::get<0>(v) << "]";
    return os.str();
}

std::string cent_str(const CentElem& p) {
    if (p.zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << to_string(c);
        for (const CentVar& v : m)
            os << "*" << cent_var_str(v);
    }
    return os.str();
}

CentElem cent_const(const Rat& c) { return CentElem::term(CentMono{}, c); }

namespace {

CentMono mono_mul(const CentMono& a, const CentMono& b) {
    CentMono m = a;
    m.insert(m.end(), b.begin(), b.end());
    std::sort(m.begin(), m.end());
    return m;
}

CentMono mono_without(const CentMono& a, std::size_t p) {
    CentMono m = a;
    m.erase(m.begin() + static_cast<std::ptrdiff_t>(p));
    return m;
}

} // namespace

CentElem cent_mul(const CentElem& a, const CentElem& b) {
    CentElem r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            r.add(mono_mul(ma, mb), ca * cb);
    return r;
}

LieData LieData::build(int N, GroupKind kind) {
    if (N < 2)
        throw BadParity("lie algebra size must be at least 2");
    if (kind == GroupKind::symplectic && N % 2 != 0)
        throw BadParity("symplectic size must be even");
    int r = N / 2;
    std::vector<int> indices;
    for (int i = -r; i <= r; ++i) {
        if (i == 0 && N % 2 == 0)
            continue;
        indices.push_back(i);
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i : indices)
        for (int j : indices) {
            if (kind == GroupKind::orthogonal && j == -i)
                continue; // F_{i,-i} = -F_{i,-i}
            if (std::make_pair(i, j) <= std::make_pair(-j, -i))
                pairs.emplace_back(i, j);
        }
    return LieData(N, kind, std::move(indices), std::move(pairs));
}

int LieData::theta(int i) const {
    if (kind_ == GroupKind::orthogonal)
        return 1;
    return i < 0 ? -1 : 1;
}

CentElem LieData::basic(int i, int j, int r) const {
    if (kind_ == GroupKind::orthogonal && j == -i)
        return {};
    if (std::make_pair(i, j) <= std::make_pair(-j, -i))
        return CentElem::term({{r, i, j}});
    // F_{ij} = -θ(ij) F_{-j,-i}
    return CentElem::term({{r, -j, -i}}, Rat(-theta2(i, j)));
}

namespace {

// [F_{ij|r}, F_{kl|s}] on single variables (already canonical).
CentElem var_bracket(const LieData& ld, const CentVar& x, const CentVar& y) {
    auto [r, i, j] = x;
    auto [s, k, l] = y;
    if (r != s)
        return {};
    CentElem res;
    if (k == j)
        res += ld.basic(i, l, r);
    if (i == l)
        res -= ld.basic(k, j, r);
    int th = ld.theta2(i, j);
    if (k == -i)
        res -= Rat(th) * ld.basic(-j, l, r);
    if (-j == l)
        res += Rat(th) * ld.basic(k, -i, r);
    return res;
}

} // namespace

CentElem lie_poisson_bracket(const LieData& ld, const CentElem& f,
                             const CentElem& g) {
    CentElem res;
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms())
            for (std::size_t p = 0; p < mf.size(); ++p)
                for (std::size_t q = 0; q < mg.size(); ++q) {
                    CentElem vb = var_bracket(ld, mf[p], mg[q]);
                    if (vb.zero())
                        continue;
                    CentElem rest = CentElem::term(
                        mono_mul(mono_without(mf, p), mono_without(mg, q)),
                        cf * cg);
                    res += cent_mul(rest, vb);
                }
    return res;
}

CentElem f_word(const LieData& ld, int i, int j, const Word& w, int L) {
    const std::vector<int>& idx = ld.indices();
    auto in_set = [&](int a) {
        return std::find(idx.begin(), idx.end(), a) != idx.end();
    };
    if (!in_set(i) || !in_set(j))
        throw IndexOutOfRange("f_word: matrix index outside the signed set");
    for (int letter : w)
        if (letter < 1 || letter > L)
            throw IndexOutOfRange("f_word: word letter outside the alphabet");
    if (w.empty())
        return i == j ? cent_const(Rat(1)) : CentElem{};
    // front[a] = sum of path products from i to a through the processed part
    std::map<int, CentElem> front;
    front[i] = cent_const(Rat(1));
    for (int letter : w) {
        std::map<int, CentElem> next;
        for (const auto& [a, partial] : front)
            for (int b : idx) {
                CentElem step = ld.basic(a, b, letter);
                if (step.zero())
                    continue;
                auto [it, ignored] = next.try_emplace(b);
                it->second += cent_mul(partial, step);
            }
        front = std::move(next);
    }
    auto it = front.find(j);
    return it == front.end() ? CentElem{} : it->second;
}

namespace {

// Σ over tensor terms u⊗v of c · f_pq(u) · f_uv... with the four outer
// indices fixed.
CentElem f_tensor(const LieData& ld, int p, int q, int u, int v,
                  const Tensor2& x, int L) {
    CentElem res;
    for (const auto& [k, c] : x.terms())
        res += Rat(c) * cent_mul(f_word(ld, p, q, k.first, L),
                                 f_word(ld, u, v, k.second, L));
    return res;
}

void all_words(int L, int max_len, std::vector<Word>& out) {
    out.push_back({});
    std::size_t lo = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t hi = out.size();
        for (std::size_t n = lo; n < hi; ++n)
            for (int g = 1; g <= L; ++g) {
                Word w = out[n];
                w.push_back(g);
                out.push_back(std::move(w));
            }
        lo = hi;
    }
}

} // namespace

CheckReport check_word_bracket_formula(int N, GroupKind kind, int L,
                                       int max_word_len, bool break_theta,
                                       int threads) {
    LieData ld = LieData::build(N, kind);
    DoubleBracket kb = kks(L);
    InvolutionSpec phi = InvolutionSpec::phi_minus(L);

    std::vector<Word> words;
    all_words(L, max_word_len, words);

    // one bracket evaluation per word pair, shared across all index tuples
    struct PairData {
        const Word* w;
        const Word* t;
        Tensor2 plainpart;
        Tensor2 twisted;
    };
    std::vector<PairData> pairs;
    {
        BracketEval ev(kb);
        for (const Word& w : words)
            for (const Word& t : words) {
                PairData pd{&w, &t, ev.words(w, t),
                            eval_bracket(kb, apply_involution(
                                                 phi, FreeElem::term(w)),
                                         FreeElem::term(t))};
                pairs.push_back(std::move(pd));
            }
    }

    const std::vector<int>& idx = ld.indices();
    std::size_t ni = idx.size();
    std::size_t tuples = ni * ni * ni * ni;
    std::size_t total = tuples * pairs.size();

    auto wrong_theta2 = [&](int i, int j) {
        // the sign map of the other series
        if (kind == GroupKind::orthogonal)
            return (i < 0 ? -1 : 1) * (j < 0 ? -1 : 1);
        return 1;
    };

    std::atomic<std::size_t> largest{0};
    auto fn = [&](std::size_t n) -> std::optional<Counterexample> {
        const PairData& pd = pairs[n / tuples];
        std::size_t m = n % tuples;
        int i = idx[m / (ni * ni * ni)];
        int j = idx[m / (ni * ni) % ni];
        int k = idx[m / ni % ni];
        int l = idx[m % ni];

        CentElem lhs = lie_poisson_bracket(ld, f_word(ld, i, j, *pd.w, L),
                                           f_word(ld, k, l, *pd.t, L));
        int th = break_theta ? wrong_theta2(i, j) : ld.theta2(i, j);
        CentElem rhs = f_tensor(ld, k, j, i, l, pd.plainpart, L) +
                       Rat(th) * f_tensor(ld, k, -i, -j, l, pd.twisted, L);

        std::size_t sz = std::max(lhs.size(), rhs.size());
        std::size_t seen = largest.load();
        while (seen < sz && !largest.compare_exchange_weak(seen, sz)) {
        }

        if (lhs == rhs)
            return std::nullopt;
        std::ostringstream in;
        in << "(i,j,k,l)=(" << i << "," << j << "," << k << "," << l
           << "), w=" << word_str(*pd.w) << ", t=" << word_str(*pd.t);
        return Counterexample{in.str(), cent_str(lhs), cent_str(rhs)};
    };

    auto ce = parallel_first_failure(total, threads, fn);
    std::ostringstream scope;
    scope << "N=" << N << " "
          << (kind == GroupKind::orthogonal ? "orthogonal" : "symplectic")
          << ", L=" << L << ", words up to length " << max_word_len << ": "
          << tuples << " index tuples x " << pairs.size() << " word pairs";
    if (ce)
        return CheckReport::fail(scope.str(), std::move(*ce));
    scope << "; largest polynomial: " << largest.load() << " terms";
    return CheckReport::pass(scope.str());
}

} // namespace dpb
