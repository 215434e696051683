#include "dpb/rep_poisson.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "dpb/parallel.hpp"
#include "dpb/rng.hpp"

namespace dpb {

std::string var_str(const VarId& v) {
    return std::to_string(std::get<0>(v)) + ":" +
           std::to_string(std::get<1>(v)) + ":" +
           std::to_string(std::get<2>(v));
}

std::string poly_str(const PolyElem& p) {
    if (p.zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << to_string(c);
        for (const VarId& v : m)
            os << "*" << var_str(v);
    }
    return os.str();
}

PolyElem poly_var(const VarId& v) { return PolyElem::term({v}); }

namespace {

PolyMono mono_mul(const PolyMono& a, const PolyMono& b) {
    PolyMono m = a;
    m.insert(m.end(), b.begin(), b.end());
    std::sort(m.begin(), m.end());
    return m;
}

// a with the factor at position p removed
PolyMono mono_without(const PolyMono& a, std::size_t p) {
    PolyMono m = a;
    m.erase(m.begin() + static_cast<std::ptrdiff_t>(p));
    return m;
}

} // namespace

PolyElem poly_mul(const PolyElem& a, const PolyElem& b) {
    PolyElem r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            r.add(mono_mul(ma, mb), ca * cb);
    return r;
}

MissingVariable::MissingVariable(const VarId& v)
    : std::runtime_error("no value assigned to variable " + var_str(v)),
      var(v) {}

RelationViolated::RelationViolated(const VarId& v)
    : std::runtime_error("assignment violates the ring relation solved for " +
                         var_str(v)),
      var(v) {}

PolyElem entry_poly(const FreeElem& a, int i, int j, int L, int d) {
    if (i < 1 || i > d || j < 1 || j > d)
        throw IndexOutOfRange("entry index out of range");
    PolyElem r;
    for (const auto& [w, c] : a.terms()) {
        for (int letter : w)
            if (letter < 1 || letter > L)
                throw IndexOutOfRange("generator index out of range");
        if (w.empty()) {
            if (i == j)
                r.add({}, c);
            continue;
        }
        // path sum over intermediate indices
        std::vector<std::pair<PolyMono, int>> states = {{{}, i}};
        for (std::size_t p = 0; p < w.size(); ++p) {
            std::vector<std::pair<PolyMono, int>> next;
            bool last = (p + 1 == w.size());
            for (const auto& [m, cur] : states) {
                if (last) {
                    next.push_back({mono_mul(m, {{w[p], cur, j}}), j});
                } else {
                    for (int k = 1; k <= d; ++k)
                        next.push_back({mono_mul(m, {{w[p], cur, k}}), k});
                }
            }
            states = std::move(next);
        }
        for (auto& [m, cur] : states)
            r.add(std::move(m), c);
    }
    return r;
}

NormalForm NormalForm::build(int L, int d, const InvolutionSpec& phi,
                             const TauCoeffs& tau) {
    if (phi.generator_count() != L || tau.d != d)
        throw std::invalid_argument("normal form: dimension mismatch");
    const int N = L * d * d;
    auto index = [d](const VarId& v) {
        return ((std::get<0>(v) - 1) * d + (std::get<1>(v) - 1)) * d +
               (std::get<2>(v) - 1);
    };
    auto var_of = [d](int idx) {
        return VarId{idx / (d * d) + 1, (idx / d) % d + 1, idx % d + 1};
    };

    // ε_g·v[π(g)][i,j] − Σ_{kl} τ^{ij}_{kl}·v[g][k,l] = 0
    std::vector<std::vector<Rat>> rows;
    rows.reserve(static_cast<std::size_t>(N));
    for (int g = 1; g <= L; ++g)
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j) {
                std::vector<Rat> row(static_cast<std::size_t>(N));
                row[index({phi.perm(g), i, j})] += phi.sign(g);
                for (int k = 1; k <= d; ++k)
                    for (int l = 1; l <= d; ++l)
                        row[index({g, k, l})] -= tau.at(i, j, k, l);
                rows.push_back(std::move(row));
            }

    // reduced row echelon form with columns in variable order
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int col = 0; col < N && rank < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel == rows.size())
            continue;
        std::swap(rows[rank], rows[sel]);
        Rat p = rows[rank][col];
        for (int c = 0; c < N; ++c)
            rows[rank][c] /= p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0)
                continue;
            Rat f = rows[r][col];
            for (int c = 0; c < N; ++c)
                rows[r][c] -= f * rows[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    NormalForm nf(L, d);
    std::vector<bool> is_pivot(static_cast<std::size_t>(N), false);
    for (int c : pivot_col)
        is_pivot[static_cast<std::size_t>(c)] = true;
    for (int c = 0; c < N; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) {
            VarId v = var_of(c);
            nf.subst_[v] = LinExpr::term(v);
            nf.free_.push_back(v);
        }
    for (std::size_t r = 0; r < rank; ++r) {
        LinExpr e;
        for (int c = pivot_col[r] + 1; c < N; ++c)
            if (!is_pivot[static_cast<std::size_t>(c)] && rows[r][c] != 0)
                e.add(var_of(c), -rows[r][c]);
        nf.subst_[var_of(pivot_col[r])] = std::move(e);
    }
    return nf;
}

const LinExpr& NormalForm::reduce_var(const VarId& v) const {
    auto it = subst_.find(v);
    if (it == subst_.end())
        throw IndexOutOfRange("variable outside the ring: " + var_str(v));
    return it->second;
}

bool NormalForm::is_free(const VarId& v) const {
    const LinExpr& e = reduce_var(v);
    return e.size() == 1 && e.terms().begin()->first == v &&
           e.terms().begin()->second == 1;
}

PolyElem NormalForm::reduce(const PolyElem& p) const {
    PolyElem r;
    for (const auto& [m, c] : p.terms()) {
        PolyElem acc = poly_const(c);
        for (const VarId& v : m) {
            const LinExpr& e = reduce_var(v);
            PolyElem lin;
            for (const auto& [w, cw] : e.terms())
                lin.add({w}, cw);
            acc = poly_mul(acc, lin);
        }
        r += acc;
    }
    return r;
}

PoissonStructure PoissonStructure::induce_plain(DoubleBracket bracket, int d) {
    if (d < 1)
        throw std::invalid_argument("dimension must be positive");
    PoissonStructure P(std::move(bracket), d);
    P.mode_ = RingMode::plain;
    for (int g = 1; g <= P.generator_count(); ++g)
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                P.ring_vars_.push_back({g, i, j});
    P.build_table();
    return P;
}

PoissonStructure PoissonStructure::induce_twisted_unchecked(
    DoubleBracket bracket, InvolutionSpec phi, MatrixInvolution tau, int d) {
    if (d < 1 || tau.dim() != d)
        throw std::invalid_argument("dimension mismatch");
    if (phi.generator_count() != bracket.generator_count())
        throw std::invalid_argument("involution/bracket generator mismatch");
    PoissonStructure P(std::move(bracket), d);
    P.mode_ = RingMode::twisted;
    P.nf_ = NormalForm::build(P.bracket_.generator_count(), d, phi,
                              tau.coeffs());
    P.phi_ = std::move(phi);
    P.tau_ = std::move(tau);
    P.ring_vars_ = P.nf_->free_vars();
    P.build_table();
    return P;
}

PoissonStructure PoissonStructure::induce_twisted(DoubleBracket bracket,
                                                  InvolutionSpec phi,
                                                  MatrixInvolution tau,
                                                  int d) {
    if (!check_phi_adapted(bracket, phi, 8, 3, 1).passed)
        throw NotPhiAdapted();
    return induce_twisted_unchecked(std::move(bracket), std::move(phi),
                                    std::move(tau), d);
}

PolyElem PoissonStructure::raw_bracket_entry(const FreeElem& a,
                                             const FreeElem& b, int i, int j,
                                             int k, int l) const {
    const int L = generator_count();
    BracketEval ev(bracket_);
    PolyElem r;
    Tensor2 ab = ev(a, b);
    for (const auto& [t, c] : ab.terms())
        r += poly_mul(entry_poly(FreeElem::term(t.first, c), k, j, L, d_),
                      entry_poly(FreeElem::term(t.second), i, l, L, d_));
    if (mode_ == RingMode::twisted) {
        Tensor2 fab = ev(apply_involution(*phi_, a), b);
        const TauCoeffs& tc = tau_->coeffs();
        for (int m = 1; m <= d_; ++m)
            for (int n = 1; n <= d_; ++n) {
                // τ^{ij}_{mn}: coefficient of E*_{mn} in τ*(E*_{ij})
                const Rat& coeff = tc.at(i, j, m, n);
                if (coeff == 0)
                    continue;
                for (const auto& [t, c] : fab.terms())
                    r += poly_mul(entry_poly(FreeElem::term(t.first,
                                                            c * coeff),
                                             k, n, L, d_),
                                  entry_poly(FreeElem::term(t.second), m, l,
                                             L, d_));
            }
    }
    return r;
}

PolyElem PoissonStructure::bracket_entry(const FreeElem& a, const FreeElem& b,
                                         int i, int j, int k, int l) const {
    return reduce(raw_bracket_entry(a, b, i, j, k, l));
}

PolyElem PoissonStructure::reduce(const PolyElem& p) const {
    return mode_ == RingMode::twisted ? nf_->reduce(p) : p;
}

void PoissonStructure::build_table() {
    for (const VarId& x : ring_vars_)
        for (const VarId& y : ring_vars_) {
            auto [g, i, j] = x;
            auto [h, k, l] = y;
            table_[{x, y}] =
                bracket_entry(free_gen(g), free_gen(h), i, j, k, l);
        }
}

const PolyElem& PoissonStructure::pair_bracket(const VarId& a,
                                               const VarId& b) const {
    auto it = table_.find({a, b});
    if (it == table_.end())
        throw IndexOutOfRange("no bracket table entry for (" + var_str(a) +
                              ", " + var_str(b) + ")");
    return it->second;
}

void PoissonStructure::corrupt_one_entry_for_negative_control() {
    for (const VarId& x : ring_vars_) {
        if (std::get<1>(x) == std::get<2>(x))
            continue;
        for (const VarId& y : ring_vars_) {
            table_[{x, y}] += poly_const(Rat(1));
            return;
        }
    }
    // d = 1 fallback: corrupt whatever entry exists
    if (!table_.empty())
        table_.begin()->second += poly_const(Rat(1));
}

PolyElem poisson_eval(const PoissonStructure& P, const PolyElem& f,
                      const PolyElem& g) {
    PolyElem rf = P.reduce(f), rg = P.reduce(g);
    PolyElem r;
    for (const auto& [mf, cf] : rf.terms())
        for (const auto& [mg, cg] : rg.terms())
            for (std::size_t p = 0; p < mf.size(); ++p)
                for (std::size_t q = 0; q < mg.size(); ++q) {
                    PolyElem rest = PolyElem::term(
                        mono_mul(mono_without(mf, p), mono_without(mg, q)),
                        cf * cg);
                    r += poly_mul(rest, P.pair_bracket(mf[p], mg[q]));
                }
    return r;
}

namespace {

std::string mode_tag(const PoissonStructure& P) {
    return P.mode() == RingMode::plain ? "plain" : "twisted";
}

} // namespace

CheckReport check_jacobi_ring(const PoissonStructure& P, bool exhaustive,
                              int samples, std::uint64_t seed, int threads) {
    const auto& vars = P.ring_vars();
    const std::size_t n = vars.size();
    std::ostringstream scope;
    scope << mode_tag(P) << " d=" << P.dim() << " L=" << P.generator_count()
          << ", " << n << " ring variables, ";
    std::vector<std::array<std::size_t, 3>> triples;
    if (exhaustive) {
        scope << "all unordered variable triples";
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a; b < n; ++b)
                for (std::size_t c = b; c < n; ++c)
                    triples.push_back({a, b, c});
    } else {
        scope << samples << " sampled triples (seed=" << seed
              << ", prng=" << SplitMix64::algorithm << ")";
        SplitMix64 rng(seed);
        for (int s = 0; s < samples; ++s)
            triples.push_back({static_cast<std::size_t>(rng.below(n)),
                               static_cast<std::size_t>(rng.below(n)),
                               static_cast<std::size_t>(rng.below(n))});
    }

    auto ce = parallel_first_failure(
        triples.size(), threads,
        [&](std::size_t idx) -> std::optional<Counterexample> {
            PolyElem x = poly_var(vars[triples[idx][0]]);
            PolyElem y = poly_var(vars[triples[idx][1]]);
            PolyElem z = poly_var(vars[triples[idx][2]]);
            PolyElem jac = poisson_eval(P, x, poisson_eval(P, y, z)) +
                           poisson_eval(P, y, poisson_eval(P, z, x)) +
                           poisson_eval(P, z, poisson_eval(P, x, y));
            if (jac.zero())
                return std::nullopt;
            return Counterexample{
                "(" + var_str(vars[triples[idx][0]]) + ", " +
                    var_str(vars[triples[idx][1]]) + ", " +
                    var_str(vars[triples[idx][2]]) + ")",
                poly_str(jac), "0"};
        });
    if (ce)
        return CheckReport::fail(scope.str(), *ce);
    return CheckReport::pass(scope.str());
}

namespace {

std::vector<Word> words_up_to(int L, int max_len, int min_len = 1) {
    std::vector<Word> out;
    std::vector<Word> cur = {{}};
    for (int len = 0; len <= max_len; ++len) {
        if (len >= min_len)
            out.insert(out.end(), cur.begin(), cur.end());
        std::vector<Word> next;
        for (const Word& w : cur)
            for (int g = 1; g <= L; ++g) {
                Word v = w;
                v.push_back(g);
                next.push_back(std::move(v));
            }
        cur = std::move(next);
    }
    return out;
}

} // namespace

CheckReport check_multiplicative(const PoissonStructure& P,
                                 int max_word_len) {
    const int L = P.generator_count();
    const int d = P.dim();
    std::ostringstream scope;
    scope << mode_tag(P) << " d=" << d << " L=" << L
          << ", products of word pairs with total length <= " << max_word_len
          << " against words of length <= " << std::max(1, max_word_len - 1)
          << ", all entry indices";

    std::vector<Word> parts = words_up_to(L, max_word_len - 1);
    std::vector<Word> rights = words_up_to(L, std::max(1, max_word_len - 1));
    for (const Word& u : parts)
        for (const Word& v : parts) {
            if (static_cast<int>(u.size() + v.size()) > max_word_len)
                continue;
            FreeElem uv = FreeElem::term(concat(u, v));
            for (const Word& t : rights) {
                FreeElem te = FreeElem::term(t);
                for (int i = 1; i <= d; ++i)
                    for (int j = 1; j <= d; ++j)
                        for (int k = 1; k <= d; ++k)
                            for (int l = 1; l <= d; ++l) {
                                PolyElem lhs =
                                    P.bracket_entry(uv, te, i, j, k, l);
                                PolyElem rhs = poisson_eval(
                                    P, entry_poly(uv, i, j, L, d),
                                    entry_poly(te, k, l, L, d));
                                if (lhs == rhs)
                                    continue;
                                std::ostringstream in;
                                in << "u=" << word_str(u)
                                   << " v=" << word_str(v)
                                   << " t=" << word_str(t) << " (i,j,k,l)=("
                                   << i << ',' << j << ',' << k << ',' << l
                                   << ')';
                                return CheckReport::fail(
                                    scope.str(),
                                    {in.str(), poly_str(lhs), poly_str(rhs)});
                            }
            }
        }
    return CheckReport::pass(scope.str());
}

CheckReport check_substitution_symmetry(const PoissonStructure& P) {
    if (P.mode() != RingMode::twisted)
        throw std::invalid_argument(
            "substitution symmetry requires a twisted structure");
    const int L = P.generator_count();
    const int d = P.dim();
    std::ostringstream scope;
    scope << "twisted d=" << d << " L=" << L
          << ", all generator pairs and entry indices";
    const TauCoeffs& tc = P.tau().coeffs();
    for (int g = 1; g <= L; ++g)
        for (int h = 1; h <= L; ++h) {
            FreeElem fg = apply_involution(P.phi(), free_gen(g));
            for (int i = 1; i <= d; ++i)
                for (int j = 1; j <= d; ++j)
                    for (int k = 1; k <= d; ++k)
                        for (int l = 1; l <= d; ++l) {
                            PolyElem lhs =
                                P.bracket_entry(fg, free_gen(h), i, j, k, l);
                            PolyElem rhs;
                            for (int m = 1; m <= d; ++m)
                                for (int n = 1; n <= d; ++n) {
                                    const Rat& c = tc.at(i, j, m, n);
                                    if (c != 0)
                                        rhs += P.bracket_entry(
                                                   free_gen(g), free_gen(h),
                                                   m, n, k, l) *
                                               c;
                                }
                            if (lhs == rhs)
                                continue;
                            std::ostringstream in;
                            in << "g=" << g << " h=" << h << " (i,j,k,l)=("
                               << i << ',' << j << ',' << k << ',' << l
                               << ')';
                            return CheckReport::fail(
                                scope.str(),
                                {in.str(), poly_str(lhs), poly_str(rhs)});
                        }
        }
    return CheckReport::pass(scope.str());
}

CheckReport check_twisted_well_defined(const DoubleBracket& bracket,
                                       const InvolutionSpec& phi,
                                       const MatrixInvolution& tau, int d,
                                       int max_word_len) {
    PoissonStructure P = PoissonStructure::induce_twisted_unchecked(
        bracket, phi, tau, d);
    CheckReport sub = check_substitution_symmetry(P);
    if (!sub.passed)
        return sub;
    CheckReport mult = check_multiplicative(P, max_word_len);
    if (!mult.passed)
        return mult;
    return CheckReport::pass("substitution symmetry [" + sub.scope +
                             "] and multiplicativity [" + mult.scope + "]");
}

CheckReport check_equivariance(const PoissonStructure& P_in, bool corrupt) {
    PoissonStructure P = P_in; // copy so the corruption hook stays local
    if (corrupt)
        P.corrupt_one_entry_for_negative_control();
    const int d = P.dim();
    std::ostringstream scope;

    // Lie algebra basis: gl(d) in plain mode, {x : τ(x) = -x} in twisted.
    std::vector<RatMat> basis;
    if (P.mode() == RingMode::plain) {
        for (int a = 1; a <= d; ++a)
            for (int b = 1; b <= d; ++b) {
                RatMat e = RatMat::zero(d);
                e.at(a, b) = 1;
                basis.push_back(std::move(e));
            }
        scope << "plain, all " << basis.size() << " gl(" << d
              << ") basis elements";
    } else {
        // null space of (M + id) where M is the matrix of τ on the E-basis
        const int N = d * d;
        const TauCoeffs& tc = P.tau().coeffs();
        std::vector<std::vector<Rat>> rows(
            static_cast<std::size_t>(N),
            std::vector<Rat>(static_cast<std::size_t>(N)));
        auto idx = [d](int i, int j) { return (i - 1) * d + (j - 1); };
        for (int m = 1; m <= d; ++m)
            for (int n = 1; n <= d; ++n)
                for (int i = 1; i <= d; ++i)
                    for (int j = 1; j <= d; ++j)
                        rows[idx(m, n)][idx(i, j)] = tc.at(m, n, i, j);
        for (int i = 0; i < N; ++i)
            rows[i][i] += 1;
        // RREF, then read off the null space from the free columns
        std::vector<int> pivot_col;
        std::size_t rank = 0;
        for (int col = 0; col < N && rank < rows.size(); ++col) {
            std::size_t sel = rows.size();
            for (std::size_t r = rank; r < rows.size(); ++r)
                if (rows[r][col] != 0) {
                    sel = r;
                    break;
                }
            if (sel == rows.size())
                continue;
            std::swap(rows[rank], rows[sel]);
            Rat p = rows[rank][col];
            for (int c = 0; c < N; ++c)
                rows[rank][c] /= p;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][col] == 0)
                    continue;
                Rat f = rows[r][col];
                for (int c = 0; c < N; ++c)
                    rows[r][c] -= f * rows[rank][c];
            }
            pivot_col.push_back(col);
            ++rank;
        }
        std::vector<bool> is_pivot(static_cast<std::size_t>(N), false);
        for (int c : pivot_col)
            is_pivot[static_cast<std::size_t>(c)] = true;
        for (int freec = 0; freec < N; ++freec) {
            if (is_pivot[static_cast<std::size_t>(freec)])
                continue;
            RatMat x = RatMat::zero(d);
            x.at(freec / d + 1, freec % d + 1) = 1;
            for (std::size_t r = 0; r < rank; ++r)
                if (rows[r][freec] != 0)
                    x.at(pivot_col[r] / d + 1, pivot_col[r] % d + 1) =
                        -rows[r][freec];
            basis.push_back(std::move(x));
        }
        scope << "twisted, all " << basis.size()
              << " basis elements of the anti-fixed space of tau, d=" << d;
    }
    if (corrupt)
        scope << " (corrupted table entry)";

    auto derive_var = [&](const RatMat& X, const VarId& v) {
        auto [g, i, j] = v;
        PolyElem r;
        for (int k = 1; k <= d; ++k) {
            if (X.at(i, k) != 0)
                r.add({{g, k, j}}, X.at(i, k));
            if (X.at(k, j) != 0)
                r.add({{g, i, k}}, -X.at(k, j));
        }
        return P.reduce(r);
    };
    auto derive_poly = [&](const RatMat& X, const PolyElem& p) {
        PolyElem r;
        for (const auto& [m, c] : p.terms())
            for (std::size_t pos = 0; pos < m.size(); ++pos)
                r += poly_mul(PolyElem::term(mono_without(m, pos), c),
                              derive_var(X, m[pos]));
        return P.reduce(r);
    };

    for (std::size_t bi = 0; bi < basis.size(); ++bi) {
        const RatMat& X = basis[bi];
        for (const VarId& x : P.ring_vars())
            for (const VarId& y : P.ring_vars()) {
                PolyElem lhs = derive_poly(X, P.pair_bracket(x, y));
                PolyElem rhs =
                    poisson_eval(P, derive_var(X, x), poly_var(y)) +
                    poisson_eval(P, poly_var(x), derive_var(X, y));
                if (lhs == rhs)
                    continue;
                std::ostringstream in;
                in << "basis element #" << bi + 1 << ", pair (" << var_str(x)
                   << ", " << var_str(y) << ")";
                return CheckReport::fail(scope.str(),
                                         {in.str(), poly_str(lhs),
                                          poly_str(rhs)});
            }
    }
    return CheckReport::pass(scope.str());
}

Rat evaluate_at_point(const PolyElem& f, const std::map<VarId, Rat>& point,
                      const NormalForm* nf) {
    if (nf) {
        for (const auto& [v, val] : point) {
            const LinExpr& e = nf->reduce_var(v);
            Rat expect;
            bool complete = true;
            for (const auto& [w, c] : e.terms()) {
                auto it = point.find(w);
                if (it == point.end()) {
                    complete = false;
                    break;
                }
                expect += c * it->second;
            }
            if (complete && expect != val)
                throw RelationViolated(v);
        }
    }
    Rat r;
    for (const auto& [m, c] : f.terms()) {
        Rat term = c;
        for (const VarId& v : m) {
            auto it = point.find(v);
            if (it == point.end())
                throw MissingVariable(v);
            term *= it->second;
        }
        r += term;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Jacobiator identity on the ambient symmetric algebra whose variables are
// (word, dual matrix unit) pairs.

namespace {

using SymVar = std::pair<Word, IJ>;
using SymMono = std::vector<SymVar>; // sorted
using SymPoly = LinComb<SymMono>;

std::string symvar_str(const SymVar& v) {
    return "(" + word_str(v.first) + "|E*_{" + std::to_string(v.second.first) +
           "," + std::to_string(v.second.second) + "})";
}

std::string sympoly_str(const SymPoly& p) {
    if (p.zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << to_string(c);
        for (const SymVar& v : m)
            os << "*" << symvar_str(v);
    }
    return os.str();
}

SymMono sym_mono_mul(const SymMono& a, const SymMono& b) {
    SymMono m = a;
    m.insert(m.end(), b.begin(), b.end());
    std::sort(m.begin(), m.end());
    return m;
}

SymPoly sym_mul(const SymPoly& a, const SymPoly& b) {
    SymPoly r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            r.add(sym_mono_mul(ma, mb), ca * cb);
    return r;
}

struct JacobiatorContext {
    const DoubleBracket& bracket;
    int d;
    RingMode mode;
    const InvolutionSpec* phi;
    const TauCoeffs* tau;
    BracketEval ev;

    explicit JacobiatorContext(const DoubleBracket& b, int d_, RingMode m,
                               const InvolutionSpec* p, const TauCoeffs* t)
        : bracket(b), d(d_), mode(m), phi(p), tau(t), ev(b) {}

    // canonical form of the variable class under φ(a)⊗x = a⊗τ*(x)
    LinComb<SymVar> reduce_var(const SymVar& v) {
        LinComb<SymVar> out;
        if (mode == RingMode::plain) {
            out.add(v, Rat(1));
            return out;
        }
        FreeElem img = apply_involution(*phi, FreeElem::term(v.first));
        const auto& [wt, eps] = *img.terms().begin();
        DualElem tx = tau_star(*tau, DualElem::term(v.second));
        if (wt < v.first) {
            // w⊗x = ε·w̃⊗τ*(x) with w̃ lexicographically smaller
            for (const auto& [ij, c] : tx.terms())
                out.add({wt, ij}, c * eps);
        } else if (wt == v.first) {
            // project onto the surviving eigenspace: x ↦ (x + ε·τ*(x))/2
            out.add(v, Rat(1, 2));
            for (const auto& [ij, c] : tx.terms())
                out.add({v.first, ij}, c * eps / 2);
        } else {
            out.add(v, Rat(1));
        }
        return out;
    }

    SymPoly reduce(const SymPoly& p) {
        if (mode == RingMode::plain)
            return p;
        SymPoly r;
        for (const auto& [m, c] : p.terms()) {
            SymPoly acc = SymPoly::term({}, c);
            for (const SymVar& v : m) {
                SymPoly lin;
                LinComb<SymVar> rv = reduce_var(v);
                for (const auto& [w, cw] : rv.terms())
                    lin.add({w}, cw);
                acc = sym_mul(acc, lin);
            }
            r += acc;
        }
        return r;
    }

    // {a⊗x, b⊗y}: ⟦a,b⟧⊗²P(x,y), plus ⟦φ(a),b⟧⊗²P(τ*(x),y) when twisted
    SymPoly pair(const FreeElem& a, const DualElem& x, const FreeElem& b,
                 const DualElem& y) {
        SymPoly r = pair_core(a, x, b, y);
        if (mode == RingMode::twisted)
            r += pair_core(apply_involution(*phi, a), tau_star(*tau, x), b,
                           y);
        return r;
    }

    SymPoly pair_core(const FreeElem& a, const DualElem& x, const FreeElem& b,
                      const DualElem& y) {
        SymPoly r;
        Tensor2 ab = ev(a, b);
        for (const auto& [t, c] : ab.terms())
            for (const auto& [ij, cx] : x.terms())
                for (const auto& [kl, cy] : y.terms()) {
                    // P(E*_ij ⊗ E*_kl) = E*_kj ⊗ E*_il
                    SymVar v1{t.first, {kl.first, ij.second}};
                    SymVar v2{t.second, {ij.first, kl.second}};
                    r.add(sym_mono_mul({v1}, {v2}), c * cx * cy);
                }
        return r;
    }

    // {a⊗x, q} for a polynomial q, by the Leibniz rule
    SymPoly against(const FreeElem& a, const DualElem& x, const SymPoly& q) {
        SymPoly r;
        for (const auto& [m, c] : q.terms())
            for (std::size_t p = 0; p < m.size(); ++p) {
                SymPoly rest = SymPoly::term(
                    [&] {
                        SymMono mm = m;
                        mm.erase(mm.begin() +
                                 static_cast<std::ptrdiff_t>(p));
                        return mm;
                    }(),
                    c);
                r += sym_mul(rest, pair(a, x, FreeElem::term(m[p].first),
                                        DualElem::term(m[p].second)));
            }
        return r;
    }

    // contraction of an algebra tensor cube against a dual tensor cube into
    // a cubic polynomial
    SymPoly contract3(const Tensor3& t, const DualT3& x) {
        SymPoly r;
        for (const auto& [w, c] : t.terms())
            for (const auto& [ijs, e] : x.terms()) {
                SymMono m = {{std::get<0>(w), std::get<0>(ijs)},
                             {std::get<1>(w), std::get<1>(ijs)},
                             {std::get<2>(w), std::get<2>(ijs)}};
                std::sort(m.begin(), m.end());
                r.add(std::move(m), c * e);
            }
        return r;
    }

    SymPoly V(const FreeElem& a, const FreeElem& b, const FreeElem& c,
              const DualElem& x, const DualElem& y, const DualElem& z) {
        DualT3 xyz, xzy;
        for (const auto& [ij, cx] : x.terms())
            for (const auto& [kl, cy] : y.terms())
                for (const auto& [mn, cz] : z.terms()) {
                    xyz.add({ij, kl, mn}, cx * cy * cz);
                    xzy.add({ij, mn, kl}, cx * cy * cz);
                }
        return contract3(triple_bracket(bracket, a, b, c), p12_p23(xyz)) -
               contract3(triple_bracket(bracket, a, c, b), p12_p23(xzy));
    }
};

} // namespace

CheckReport check_jacobiator_formula(const DoubleBracket& bracket, int d,
                                     RingMode mode, const InvolutionSpec* phi,
                                     const TauCoeffs* tau, int samples,
                                     int max_word_len, std::uint64_t seed) {
    if (mode == RingMode::twisted && (!phi || !tau))
        throw std::invalid_argument(
            "twisted jacobiator check needs an involution and a form");
    const int L = bracket.generator_count();
    JacobiatorContext ctx(bracket, d, mode, phi, tau);

    int nonzero = 0;
    auto test = [&](const Word& a, const Word& b, const Word& c, IJ x, IJ y,
                    IJ z) -> std::optional<Counterexample> {
        FreeElem fa = FreeElem::term(a), fb = FreeElem::term(b),
                 fc = FreeElem::term(c);
        DualElem dx = DualElem::term(x), dy = DualElem::term(y),
                 dz = DualElem::term(z);
        SymPoly lhs = ctx.against(fa, dx, ctx.pair(fb, dy, fc, dz)) +
                      ctx.against(fb, dy, ctx.pair(fc, dz, fa, dx)) +
                      ctx.against(fc, dz, ctx.pair(fa, dx, fb, dy));
        SymPoly rhs = ctx.V(fa, fb, fc, dx, dy, dz);
        if (mode == RingMode::twisted) {
            rhs += ctx.V(apply_involution(*phi, fa), fb, fc,
                         tau_star(*tau, dx), dy, dz);
            rhs += ctx.V(fa, apply_involution(*phi, fb), fc, dx,
                         tau_star(*tau, dy), dz);
            rhs += ctx.V(fa, fb, apply_involution(*phi, fc), dx, dy,
                         tau_star(*tau, dz));
        }
        SymPoly lr = ctx.reduce(lhs), rr = ctx.reduce(rhs);
        if (!lr.zero())
            ++nonzero;
        if (lr == rr)
            return std::nullopt;
        return Counterexample{"a=" + word_str(a) + " b=" + word_str(b) +
                                  " c=" + word_str(c) + " x=" +
                                  symvar_str({{}, x}) + " y=" +
                                  symvar_str({{}, y}) + " z=" +
                                  symvar_str({{}, z}),
                              sympoly_str(lr), sympoly_str(rr)};
    };

    std::optional<Counterexample> failure;
    for (int i = 1; i <= L && !failure; ++i)
        for (int j = 1; j <= L && !failure; ++j)
            for (int k = 1; k <= L && !failure; ++k)
                failure = test({i}, {j}, {k}, {1, 1}, {1, d}, {d, 1});
    SplitMix64 rng(seed);
    auto rand_ij = [&]() -> IJ {
        return {1 + static_cast<int>(rng.below(d)),
                1 + static_cast<int>(rng.below(d))};
    };
    for (int s = 0; s < samples && !failure; ++s)
        failure = test(random_word(rng, L, max_word_len),
                       random_word(rng, L, max_word_len),
                       random_word(rng, L, max_word_len), rand_ij(),
                       rand_ij(), rand_ij());

    std::ostringstream scope;
    scope << (mode == RingMode::plain ? "plain" : "twisted") << " d=" << d
          << " L=" << L << ", generator triples plus " << samples
          << " sampled word triples (max_word_len=" << max_word_len
          << ", seed=" << seed << ", prng=" << SplitMix64::algorithm
          << "); nonzero instances: " << nonzero;
    if (failure)
        return CheckReport::fail(scope.str(), *failure);
    return CheckReport::pass(scope.str());
}

} // namespace dpb
