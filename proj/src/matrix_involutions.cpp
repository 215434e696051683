#include "dpb/matrix_involutions.hpp"

#include <sstream>

#include "dpb/free_algebra.hpp" // Perm3

namespace dpb {

RatMat RatMat::identity(int d) {
    RatMat m = zero(d);
    for (int i = 1; i <= d; ++i)
        m.at(i, i) = 1;
    return m;
}

RatMat RatMat::transpose() const {
    RatMat m = zero(d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            m.at(i, j) = at(j, i);
    return m;
}

RatMat operator*(const RatMat& x, const RatMat& y) {
    RatMat z = RatMat::zero(x.d);
    for (int i = 1; i <= x.d; ++i)
        for (int k = 1; k <= x.d; ++k) {
            const Rat& c = x.at(i, k);
            if (c == 0)
                continue;
            for (int j = 1; j <= x.d; ++j)
                z.at(i, j) += c * y.at(k, j);
        }
    return z;
}

RatMat RatMat::inverse() const {
    // Gauss-Jordan over Q.
    RatMat a = *this;
    RatMat inv = identity(d);
    for (int col = 1; col <= d; ++col) {
        int pivot = 0;
        for (int row = col; row <= d; ++row)
            if (a.at(row, col) != 0) {
                pivot = row;
                break;
            }
        if (!pivot)
            throw SingularForm();
        if (pivot != col)
            for (int j = 1; j <= d; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rat p = a.at(col, col);
        for (int j = 1; j <= d; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int row = 1; row <= d; ++row) {
            if (row == col)
                continue;
            Rat f = a.at(row, col);
            if (f == 0)
                continue;
            for (int j = 1; j <= d; ++j) {
                a.at(row, j) -= f * a.at(col, j);
                inv.at(row, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

BilinearForm BilinearForm::make(RatMat g, FormKind kind,
                                std::vector<int> labels) {
    const int d = g.d;
    if (labels.empty()) {
        labels.resize(d);
        for (int i = 0; i < d; ++i)
            labels[i] = i + 1;
    }
    if (static_cast<int>(labels.size()) != d)
        throw std::invalid_argument("form: label table size mismatch");
    RatMat gt = g.transpose();
    if (kind == FormKind::symmetric) {
        if (!(gt == g))
            throw std::invalid_argument("form: matrix is not symmetric");
    } else {
        if (d % 2 != 0)
            throw BadParity("skew form requires even dimension");
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                if (gt.at(i, j) != -g.at(i, j))
                    throw std::invalid_argument("form: matrix is not skew");
    }
    g.inverse(); // nondegeneracy; throws SingularForm
    return BilinearForm{d, std::move(g), kind, std::move(labels)};
}

BilinearForm standard_identity_form(int d) {
    return BilinearForm::make(RatMat::identity(d), FormKind::symmetric);
}

BilinearForm standard_symplectic_form(int d) {
    if (d % 2 != 0)
        throw BadParity("symplectic form requires even dimension");
    // [[0,I],[-I,0]]; for d=2 this is [[0,1],[-1,0]].
    int h = d / 2;
    RatMat g = RatMat::zero(d);
    for (int i = 1; i <= h; ++i) {
        g.at(i, i + h) = 1;
        g.at(i + h, i) = -1;
    }
    return BilinearForm::make(std::move(g), FormKind::skew);
}

BilinearForm theta_form(int N, GroupKind kind) {
    if (kind == GroupKind::symplectic && N % 2 != 0)
        throw BadParity("symplectic theta form requires even N");
    int r = N / 2;
    std::vector<int> labels;
    for (int i = -r; i <= r; ++i) {
        if (i == 0 && N % 2 == 0)
            continue;
        labels.push_back(i);
    }
    RatMat g = RatMat::zero(N);
    for (int p = 1; p <= N; ++p)
        for (int q = 1; q <= N; ++q) {
            int i = labels[p - 1], j = labels[q - 1];
            if (i == -j)
                g.at(p, q) = (kind == GroupKind::orthogonal) ? 1
                             : (i > 0 ? 1 : -1);
        }
    return BilinearForm::make(
        std::move(g),
        kind == GroupKind::orthogonal ? FormKind::symmetric : FormKind::skew,
        std::move(labels));
}

RatMat MatrixInvolution::apply(const RatMat& m) const {
    return form_.g * m.transpose() * ginv_;
}

MatrixInvolution MatrixInvolution::from_form(BilinearForm form) {
    const int d = form.d;
    RatMat ginv = form.g.inverse();
    TauCoeffs tau = TauCoeffs::zero(d);
    // (g E_ji g^{-1})_{mn} = g_{mj} (g^{-1})_{in}
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            for (int m = 1; m <= d; ++m)
                for (int n = 1; n <= d; ++n)
                    tau.at(m, n, i, j) = form.g.at(m, j) * ginv.at(i, n);

    auto image = [&](int i, int j) {
        RatMat m = RatMat::zero(d);
        for (int p = 1; p <= d; ++p)
            for (int q = 1; q <= d; ++q)
                m.at(p, q) = tau.at(p, q, i, j);
        return m;
    };
    auto apply_coeffs = [&](const RatMat& m) {
        RatMat out = RatMat::zero(d);
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j) {
                if (m.at(i, j) == 0)
                    continue;
                for (int p = 1; p <= d; ++p)
                    for (int q = 1; q <= d; ++q)
                        out.at(p, q) += m.at(i, j) * tau.at(p, q, i, j);
            }
        return out;
    };

    // τ∘τ = id and τ(MN) = τ(N)τ(M) on the basis.
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            RatMat unit = RatMat::zero(d);
            unit.at(i, j) = 1;
            if (!(apply_coeffs(image(i, j)) == unit))
                throw std::logic_error("matrix involution: tau^2 != id");
        }
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            for (int k = 1; k <= d; ++k)
                for (int l = 1; l <= d; ++l) {
                    RatMat lhs = RatMat::zero(d); // τ(E_ij E_kl)
                    if (j == k)
                        lhs = image(i, l);
                    if (!(lhs == image(k, l) * image(i, j)))
                        throw std::logic_error(
                            "matrix involution: not an antiautomorphism");
                }

    return MatrixInvolution(std::move(form), std::move(tau), std::move(ginv));
}

namespace {

std::string ij_str(const IJ& x) {
    return "E*_{" + std::to_string(x.first) + "," + std::to_string(x.second) +
           "}";
}

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

std::string dual_str(const DualElem& x) {
    return comb_str(x, ij_str);
}
std::string dual2_str(const DualT2& x) {
    return comb_str(x, [](const std::pair<IJ, IJ>& k) {
        return ij_str(k.first) + "(x)" + ij_str(k.second);
    });
}
std::string dual3_str(const DualT3& x) {
    return comb_str(x, [](const std::tuple<IJ, IJ, IJ>& k) {
        return ij_str(std::get<0>(k)) + "(x)" + ij_str(std::get<1>(k)) +
               "(x)" + ij_str(std::get<2>(k));
    });
}

DualElem tau_star(const TauCoeffs& tau, const DualElem& x) {
    DualElem r;
    for (const auto& [k, c] : x.terms())
        for (int p = 1; p <= tau.d; ++p)
            for (int q = 1; q <= tau.d; ++q) {
                const Rat& e = tau.at(k.first, k.second, p, q);
                if (e != 0)
                    r.add({p, q}, c * e);
            }
    return r;
}

DualT2 tau_star2(const TauCoeffs& tau, const DualT2& x) {
    DualT2 r;
    for (const auto& [k, c] : x.terms()) {
        DualElem a = tau_star(tau, DualElem::term(k.first));
        DualElem b = tau_star(tau, DualElem::term(k.second));
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kb, cb] : b.terms())
                r.add({ka, kb}, c * ca * cb);
    }
    return r;
}

DualT3 tau_star3(const TauCoeffs& tau, const DualT3& x) {
    DualT3 r;
    for (const auto& [k, c] : x.terms()) {
        DualElem a = tau_star(tau, DualElem::term(std::get<0>(k)));
        DualElem b = tau_star(tau, DualElem::term(std::get<1>(k)));
        DualElem e = tau_star(tau, DualElem::term(std::get<2>(k)));
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kb, cb] : b.terms())
                for (const auto& [ke, ce] : e.terms())
                    r.add({ka, kb, ke}, c * ca * cb * ce);
    }
    return r;
}

DualT2 p_op(const DualT2& x) {
    DualT2 r;
    for (const auto& [k, c] : x.terms()) {
        const auto& [ij, kl] = k;
        r.add({{kl.first, ij.second}, {ij.first, kl.second}}, c);
    }
    return r;
}

DualT3 p12(const DualT3& x) {
    DualT3 r;
    for (const auto& [k, c] : x.terms()) {
        const auto& [ij, kl, mn] = k;
        r.add({{kl.first, ij.second}, {ij.first, kl.second}, mn}, c);
    }
    return r;
}

DualT3 p23(const DualT3& x) {
    DualT3 r;
    for (const auto& [k, c] : x.terms()) {
        const auto& [ij, kl, mn] = k;
        r.add({ij, {mn.first, kl.second}, {kl.first, mn.second}}, c);
    }
    return r;
}

DualT3 p12_p23(const DualT3& x) { return p12(p23(x)); }

DualT2 swap12(const DualT2& x) {
    DualT2 r;
    for (const auto& [k, c] : x.terms())
        r.add({k.second, k.first}, c);
    return r;
}

DualT3 dual_s3(const Perm3& s, const DualT3& x) {
    DualT3 r;
    for (const auto& [k, c] : x.terms()) {
        std::array<const IJ*, 3> w = {&std::get<0>(k), &std::get<1>(k),
                                      &std::get<2>(k)};
        r.add({*w[s.inverse(1) - 1], *w[s.inverse(2) - 1], *w[s.inverse(3) - 1]},
              c);
    }
    return r;
}

DualT3 delta_left(int d, const DualT2& x) {
    DualT3 r;
    for (const auto& [k, c] : x.terms()) {
        const auto& [ij, kl] = k;
        for (int p = 1; p <= d; ++p)
            r.add({{ij.first, p}, {p, ij.second}, kl}, c);
    }
    return r;
}

DualT3 delta_right(int d, const DualT2& x) {
    DualT3 r;
    for (const auto& [k, c] : x.terms()) {
        const auto& [ij, kl] = k;
        for (int p = 1; p <= d; ++p)
            r.add({ij, {kl.first, p}, {p, kl.second}}, c);
    }
    return r;
}

CheckReport verify_coalgebra_lemmas(int d, bool mutate_p) {
    std::string scope = "full dual bases, d=" + std::to_string(d) +
                        (mutate_p ? " (mutated P)" : "");

    // P with an optional single flipped sign, used as the negative control.
    auto p2 = [&](const DualT2& x) {
        DualT2 r = p_op(x);
        if (mutate_p) {
            DualT2 out;
            for (const auto& [k, c] : x.terms()) {
                const auto& [ij, kl] = k;
                bool flip = (ij == IJ{1, 1} && kl == IJ{1, 1});
                out.add({{kl.first, ij.second}, {ij.first, kl.second}},
                        flip ? -c : c);
            }
            return out;
        }
        return r;
    };
    auto p12m = [&](const DualT3& x) {
        DualT3 r;
        for (const auto& [k, c] : x.terms()) {
            DualT2 pair = p2(DualT2::term({std::get<0>(k), std::get<1>(k)}, c));
            for (const auto& [pk, pc] : pair.terms())
                r.add({pk.first, pk.second, std::get<2>(k)}, pc);
        }
        return r;
    };
    auto p23m = [&](const DualT3& x) {
        DualT3 r;
        for (const auto& [k, c] : x.terms()) {
            DualT2 pair = p2(DualT2::term({std::get<1>(k), std::get<2>(k)}, c));
            for (const auto& [pk, pc] : pair.terms())
                r.add({std::get<0>(k), pk.first, pk.second}, pc);
        }
        return r;
    };

    auto fail = [&](const std::string& name, const std::string& inputs,
                    const std::string& lhs, const std::string& rhs) {
        return CheckReport::fail(scope, {name + " at " + inputs, lhs, rhs});
    };

    // Coproduct laws on the dual basis.
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            DualT2 dx;
            for (int p = 1; p <= d; ++p)
                dx.add({{i, p}, {p, j}}, Rat(1));
            // coassociativity
            DualT3 lhs = delta_left(d, dx), rhs = delta_right(d, dx);
            if (!(lhs == rhs))
                return fail("coassociativity", ij_str({i, j}), dual3_str(lhs),
                            dual3_str(rhs));
            // counit laws: (ε⊗id)Δ = id = (id⊗ε)Δ
            DualElem left, right;
            for (const auto& [k, c] : dx.terms()) {
                if (k.first.first == k.first.second)
                    left.add(k.second, c);
                if (k.second.first == k.second.second)
                    right.add(k.first, c);
            }
            DualElem unit = DualElem::term({i, j});
            if (!(left == unit) || !(right == unit))
                return fail("counit", ij_str({i, j}), dual_str(left),
                            dual_str(right));
        }

    const Perm3 s12 = Perm3::swap12();
    const Perm3 cyc = Perm3::cyc123();
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            for (int k = 1; k <= d; ++k)
                for (int l = 1; l <= d; ++l) {
                    DualT2 base = DualT2::term({{i, j}, {k, l}});
                    std::string in = ij_str({i, j}) + "(x)" + ij_str({k, l});
                    {
                        DualT2 lhs = swap12(p2(base));
                        DualT2 rhs = p2(swap12(base));
                        if (!(lhs == rhs))
                            return fail("(12)P=P(12)", in, dual2_str(lhs),
                                        dual2_str(rhs));
                    }
                    {
                        DualT3 lhs = delta_left(d, p2(base));
                        DualT3 rhs = p23m(dual_s3(s12, delta_right(d, base)));
                        if (!(lhs == rhs))
                            return fail("DL.P=P23(12)DR", in, dual3_str(lhs),
                                        dual3_str(rhs));
                    }
                    {
                        DualT3 lhs = delta_right(d, p2(base));
                        DualT3 rhs = p12m(delta_right(d, base));
                        if (!(lhs == rhs))
                            return fail("DR.P=P12DR", in, dual3_str(lhs),
                                        dual3_str(rhs));
                    }
                }

    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            for (int k = 1; k <= d; ++k)
                for (int l = 1; l <= d; ++l)
                    for (int m = 1; m <= d; ++m)
                        for (int n = 1; n <= d; ++n) {
                            DualT3 base =
                                DualT3::term({{i, j}, {k, l}, {m, n}});
                            DualT3 lhs = p12m(p23m(dual_s3(cyc, base)));
                            DualT3 rhs = dual_s3(cyc, p12m(p23m(base)));
                            if (!(lhs == rhs))
                                return fail("P12P23(123)=(123)P12P23",
                                            dual3_str(base), dual3_str(lhs),
                                            dual3_str(rhs));
                        }

    return CheckReport::pass(scope);
}

CheckReport verify_dual_involution_swap(const TauCoeffs& tau) {
    const int d = tau.d;
    std::string scope = "full dual basis pairs, d=" + std::to_string(d) +
                        ", plus sigma invariance";

    // τ^{⊗2}(σ) = σ with σ = Σ E_{ij}⊗E_{ji}.
    LinComb<std::pair<IJ, IJ>> sigma_img, sigma;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            sigma.add({{i, j}, {j, i}}, Rat(1));
            for (int m = 1; m <= d; ++m)
                for (int n = 1; n <= d; ++n)
                    for (int p = 1; p <= d; ++p)
                        for (int q = 1; q <= d; ++q) {
                            Rat c = tau.at(m, n, i, j) * tau.at(p, q, j, i);
                            if (c != 0)
                                sigma_img.add({{m, n}, {p, q}}, c);
                        }
        }
    if (!(sigma_img == sigma))
        return CheckReport::fail(scope, {"tau^(x2)(sigma)",
                                         dual2_str(sigma_img),
                                         dual2_str(sigma)});

    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            for (int k = 1; k <= d; ++k)
                for (int l = 1; l <= d; ++l) {
                    DualElem x = DualElem::term({i, j});
                    DualElem y = DualElem::term({k, l});
                    DualT2 lhs = tau_star2(tau, p_op(x, y));
                    DualT2 rhs = swap12(p_op(tau_star(tau, x), tau_star(tau, y)));
                    if (!(lhs == rhs))
                        return CheckReport::fail(
                            scope, {ij_str({i, j}) + "(x)" + ij_str({k, l}),
                                    dual2_str(lhs), dual2_str(rhs)});
                }
    return CheckReport::pass(scope);
}

CheckReport verify_dual_involution_chain(const TauCoeffs& tau) {
    const int d = tau.d;
    std::string scope = "full dual basis triples, d=" + std::to_string(d);
    const Perm3 s12 = Perm3::swap12();
    const Perm3 s23 = Perm3::swap23();
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            for (int k = 1; k <= d; ++k)
                for (int l = 1; l <= d; ++l)
                    for (int m = 1; m <= d; ++m)
                        for (int n = 1; n <= d; ++n) {
                            DualT3 base =
                                DualT3::term({{i, j}, {k, l}, {m, n}});
                            DualT3 lhs =
                                dual_s3(s12, tau_star3(tau, p12_p23(base)));
                            DualT3 rhs = p12_p23(
                                dual_s3(s23, tau_star3(tau, base)));
                            if (!(lhs == rhs))
                                return CheckReport::fail(
                                    scope, {dual3_str(base), dual3_str(lhs),
                                            dual3_str(rhs)});
                        }
    return CheckReport::pass(scope);
}

} // namespace dpb
