#include "dpb/bracket_families.hpp"

#include <sstream>

namespace dpb {

DoubleBracket kks(int L) {
    if (L < 1)
        throw std::invalid_argument("kks: L must be >= 1");
    std::vector<std::vector<Tensor2>> table(L, std::vector<Tensor2>(L));
    for (int i = 1; i <= L; ++i) {
        Tensor2 t;
        t.add({Word{}, Word{i}}, Rat(1));
        t.add({Word{i}, Word{}}, Rat(-1));
        table[i - 1][i - 1] = std::move(t);
    }
    return DoubleBracket::make(L, std::move(table));
}

DoubleBracket linear_bracket(const StructureConstants& s) {
    const int L = s.L;
    std::vector<std::vector<Tensor2>> table(L, std::vector<Tensor2>(L));
    for (int i = 1; i <= L; ++i)
        for (int j = 1; j <= L; ++j) {
            Tensor2 t;
            for (int k = 1; k <= L; ++k) {
                t.add({Word{k}, Word{}}, s.at(k, i, j));
                t.add({Word{}, Word{k}}, -s.at(k, j, i));
            }
            table[i - 1][j - 1] = std::move(t);
        }
    return DoubleBracket::make(L, std::move(table));
}

CheckReport check_associative(const StructureConstants& s) {
    const int L = s.L;
    std::string scope = "all (i,j,k,n) in 1.." + std::to_string(L);
    for (int i = 1; i <= L; ++i)
        for (int j = 1; j <= L; ++j)
            for (int k = 1; k <= L; ++k)
                for (int n = 1; n <= L; ++n) {
                    Rat lhs, rhs;
                    for (int m = 1; m <= L; ++m) {
                        lhs += s.at(m, i, j) * s.at(n, m, k);
                        rhs += s.at(n, i, m) * s.at(m, j, k);
                    }
                    if (lhs != rhs) {
                        std::ostringstream in;
                        in << "(i,j,k,n)=(" << i << ',' << j << ',' << k << ','
                           << n << ')';
                        return CheckReport::fail(
                            scope, {in.str(), to_string(lhs), to_string(rhs)});
                    }
                }
    return CheckReport::pass(scope);
}

CheckReport check_commutative(const StructureConstants& s) {
    const int L = s.L;
    std::string scope = "all (k,i,j) in 1.." + std::to_string(L);
    for (int k = 1; k <= L; ++k)
        for (int i = 1; i <= L; ++i)
            for (int j = i + 1; j <= L; ++j)
                if (s.at(k, i, j) != s.at(k, j, i)) {
                    std::ostringstream in;
                    in << "(k,i,j)=(" << k << ',' << i << ',' << j << ')';
                    return CheckReport::fail(scope,
                                             {in.str(), to_string(s.at(k, i, j)),
                                              to_string(s.at(k, j, i))});
                }
    return CheckReport::pass(scope);
}

CheckReport check_r_skew(const RTensor& r) {
    const int L = r.L;
    std::string scope = "all (k,l,i,j) in 1.." + std::to_string(L);
    for (int k = 1; k <= L; ++k)
        for (int l = 1; l <= L; ++l)
            for (int i = 1; i <= L; ++i)
                for (int j = 1; j <= L; ++j)
                    if (r.at(k, l, i, j) != -r.at(l, k, j, i)) {
                        std::ostringstream in;
                        in << "(k,l,i,j)=(" << k << ',' << l << ',' << i << ','
                           << j << ')';
                        return CheckReport::fail(
                            scope, {in.str(), to_string(r.at(k, l, i, j)),
                                    to_string(-r.at(l, k, j, i))});
                    }
    return CheckReport::pass(scope);
}

CheckReport check_r_upper_symmetric(const RTensor& r) {
    const int L = r.L;
    std::string scope = "all (k,l,i,j) in 1.." + std::to_string(L);
    for (int k = 1; k <= L; ++k)
        for (int l = k + 1; l <= L; ++l)
            for (int i = 1; i <= L; ++i)
                for (int j = 1; j <= L; ++j)
                    if (r.at(k, l, i, j) != r.at(l, k, i, j)) {
                        std::ostringstream in;
                        in << "(k,l,i,j)=(" << k << ',' << l << ',' << i << ','
                           << j << ')';
                        return CheckReport::fail(
                            scope, {in.str(), to_string(r.at(k, l, i, j)),
                                    to_string(r.at(l, k, i, j))});
                    }
    return CheckReport::pass(scope);
}

namespace {

// Dense operator on (k^L)^{⊗3}; index = ((i1-1)L + (i2-1))L + (i3-1).
using Op3 = std::vector<Rat>;

int enc(int L, int i1, int i2, int i3) {
    return ((i1 - 1) * L + (i2 - 1)) * L + (i3 - 1);
}

// Matrix of R acting on tensor slots (a,b) of the cube, columns = inputs.
Op3 slot_matrix(const RTensor& r, int a, int b) {
    const int L = r.L;
    const int n = L * L * L;
    Op3 m(static_cast<std::size_t>(n) * n);
    int in[4], out[4]; // 1-based slots
    for (in[1] = 1; in[1] <= L; ++in[1])
        for (in[2] = 1; in[2] <= L; ++in[2])
            for (in[3] = 1; in[3] <= L; ++in[3]) {
                int col = enc(L, in[1], in[2], in[3]);
                for (int p = 1; p <= L; ++p)
                    for (int q = 1; q <= L; ++q) {
                        const Rat& c = r.at(p, q, in[a], in[b]);
                        if (c == 0)
                            continue;
                        out[1] = in[1];
                        out[2] = in[2];
                        out[3] = in[3];
                        out[a] = p;
                        out[b] = q;
                        m[static_cast<std::size_t>(
                              enc(L, out[1], out[2], out[3])) *
                              n +
                          col] += c;
                    }
            }
    return m;
}

Op3 mul(const Op3& x, const Op3& y, int n) {
    Op3 z(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Rat& c = x[static_cast<std::size_t>(i) * n + k];
            if (c == 0)
                continue;
            for (int j = 0; j < n; ++j) {
                const Rat& e = y[static_cast<std::size_t>(k) * n + j];
                if (e != 0)
                    z[static_cast<std::size_t>(i) * n + j] += c * e;
            }
        }
    return z;
}

std::optional<Counterexample> first_nonzero(const Op3& m, int L,
                                            const char* form) {
    const int n = L * L * L;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& c = m[static_cast<std::size_t>(i) * n + j];
            if (c != 0) {
                std::ostringstream in;
                in << form << " at input basis tuple ("
                   << j / (L * L) + 1 << ',' << (j / L) % L + 1 << ','
                   << j % L + 1 << "), output tuple (" << i / (L * L) + 1 << ','
                   << (i / L) % L + 1 << ',' << i % L + 1 << ')';
                return Counterexample{in.str(), to_string(c), "0"};
            }
        }
    return std::nullopt;
}

} // namespace

CheckReport check_aybe(const RTensor& r) {
    const int L = r.L;
    const int n = L * L * L;
    std::string scope =
        "operator identity on full basis of (k^L)^3, L=" + std::to_string(L) +
        ", both equation variants";
    Op3 r12 = slot_matrix(r, 1, 2);
    Op3 r13 = slot_matrix(r, 1, 3);
    Op3 r23 = slot_matrix(r, 2, 3);

    // R12 R13 - R23 R12 + R13 R23
    Op3 b = mul(r12, r13, n);
    {
        Op3 t = mul(r23, r12, n);
        for (std::size_t i = 0; i < b.size(); ++i)
            b[i] -= t[i];
        t = mul(r13, r23, n);
        for (std::size_t i = 0; i < b.size(); ++i)
            b[i] += t[i];
    }
    if (auto ce = first_nonzero(b, L, "R12R13-R23R12+R13R23"))
        return CheckReport::fail(scope, *ce);

    // Cross-validation via the skew relation: R12 R23 - R23 R13 - R13 R12
    Op3 a = mul(r12, r23, n);
    {
        Op3 t = mul(r23, r13, n);
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] -= t[i];
        t = mul(r13, r12, n);
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] -= t[i];
    }
    if (auto ce = first_nonzero(a, L, "R12R23-R23R13-R13R12"))
        return CheckReport::fail(scope, *ce);

    return CheckReport::pass(scope);
}

DoubleBracket quadratic_bracket(const RTensor& r) {
    if (!check_r_skew(r).passed)
        throw RSkewViolation();
    const int L = r.L;
    std::vector<std::vector<Tensor2>> table(L, std::vector<Tensor2>(L));
    for (int i = 1; i <= L; ++i)
        for (int j = 1; j <= L; ++j) {
            Tensor2 t;
            for (int k = 1; k <= L; ++k)
                for (int l = 1; l <= L; ++l)
                    t.add({Word{k}, Word{l}}, r.at(k, l, i, j));
            table[i - 1][j - 1] = std::move(t);
        }
    return DoubleBracket::make(L, std::move(table));
}

RTensor ors_example(const std::vector<Rat>& lambda) {
    const int L = static_cast<int>(lambda.size());
    for (int i = 1; i <= L; ++i)
        for (int j = i + 1; j <= L; ++j)
            if (lambda[i - 1] == lambda[j - 1])
                throw DegenerateParameters(i, j);
    RTensor r = RTensor::zero(L);
    for (int i = 1; i <= L; ++i)
        for (int j = 1; j <= L; ++j) {
            if (i == j)
                continue;
            Rat c = Rat(1) / (lambda[i - 1] - lambda[j - 1]);
            r.at(i, j, i, j) += c;
            r.at(j, i, i, j) += c;
            r.at(i, i, i, j) -= c;
            r.at(j, j, i, j) -= c;
        }
    return r;
}

} // namespace dpb
