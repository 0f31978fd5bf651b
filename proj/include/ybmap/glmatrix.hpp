#pragma once

// YB map on GL_2 x GL_2 built from a family of commuting matrices K_a, its
// invariant conditions, and the ternary system mu(A, B, C) = V(BA^-1, CB^-1) A.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybmap/engine.hpp"
#include "ybmap/matrix.hpp"
#include "ybmap/objects.hpp"
#include "ybmap/verify.hpp"

namespace ybmap {

/// a -> K_a with K_a K_b = K_b K_a.
template <Field F>
struct CommutingFamily {
    std::string name;
    std::size_t order = 2;
    std::size_t param_arity = 2;
    std::function<SquareMatrix<Elem<F>>(const Params<F>&)> eval;

    SquareMatrix<Elem<F>> operator()(const Params<F>& a) const { return eval(a); }
};

/// K_a = diag(a1, a2).
template <Field F>
CommutingFamily<F> diagonal_family() {
    return {"diagonal", 2, 2, [](const Params<F>& a) { return SquareMatrix<Elem<F>>::diagonal(a); }};
}

/// K_a = a1 I + a2 J for a fixed J.
template <Field F>
CommutingFamily<F> polynomial_family(const F& field, SquareMatrix<Elem<F>> j) {
    if (j.order() != 2) throw UnsupportedOrder(j.order());
    const auto id = SquareMatrix<Elem<F>>::identity(2, field.one());
    return {"a1*I+a2*J(J=" + j.to_string() + ")", 2, 2,
            [id, j](const Params<F>& a) { return id.scale(a[0]) + j.scale(a[1]); }};
}

/// det(X - zeta K) = f2 zeta^2 - f1 zeta + f0.
template <Field F>
struct CharCoeffs {
    Elem<F> f2, f1, f0;

    friend bool operator==(const CharCoeffs&, const CharCoeffs&) = default;
};

/// Interpolates det(X - zeta K) at zeta = 0, 1, -1.
template <Field F>
CharCoeffs<F> char_coeffs(const F& field, const SquareMatrix<Elem<F>>& x, const SquareMatrix<Elem<F>>& k) {
    if (x.order() != 2 || k.order() != 2) throw UnsupportedOrder(x.order() != 2 ? x.order() : k.order());
    const Elem<F> p0 = x.det();
    const Elem<F> p1 = (x - k).det();
    const Elem<F> pm = (x + k).det();
    const Elem<F> half = field.one() / field.from_int(2);
    return {(p1 + pm) * half - p0, (pm - p1) * half, p0};
}

template <Field F>
CharCoeffs<F> char_coeffs(const F& field, const SquareMatrix<Elem<F>>& x, const CommutingFamily<F>& k,
                          const Params<F>& a) {
    return char_coeffs(field, x, k(a));
}

/// U = (f2 YX - f0 K_a K_b)(f2 (Y K_a + K_b X) - f1 K_a K_b)^-1 K_a,
/// V = K_a^-1 (Y K_a + K_b X - U K_b), with f_i = f_i^a(X).
template <Field F>
YBMap<F> gl_yb_map(const F& field, const CommutingFamily<F>& k, std::string name = "gl2_map") {
    if (k.order != 2) throw UnsupportedOrder(k.order);
    YBMap<F> r;
    r.name = std::move(name);
    r.carrier = Carrier::matrices(2);
    r.param_arity = k.param_arity;
    r.degree = 64;
    r.note = "GL_2 map from the commuting family " + k.name;
    auto fam = k.eval;
    r.eval = [field, fam](const Point<F>& xp, const Params<F>& a, const Point<F>& yp, const Params<F>& b) {
        using M = SquareMatrix<Elem<F>>;
        const M x = as_matrix(xp), y = as_matrix(yp);
        const M ka = fam(a), kb = fam(b);
        const auto c = char_coeffs(field, x, ka);
        const M kk = ka * kb;
        const M s = y * ka + kb * x;
        const M u = ((y * x).scale(c.f2) - kk.scale(c.f0)) * (s.scale(c.f2) - kk.scale(c.f1)).inverse() * ka;
        const M v = ka.inverse() * (s - u * kb);
        return PointPair<F>{u.entries(), v.entries()};
    };
    return r;
}

/// mu(A, B, C) = V(B A^-1, C B^-1) A.
template <Field F>
Ternary<F> gl_ternary(const F& field, const CommutingFamily<F>& k, std::string name = "gl2_ternary") {
    const YBMap<F> r = gl_yb_map(field, k);
    auto eval = r.eval;
    Ternary<F> t;
    t.name = std::move(name);
    t.carrier = Carrier::matrices(2);
    t.param_arity = k.param_arity;
    t.degree = 2 * r.degree;
    t.note = "GL_2 ternary system from the commuting family " + k.name;
    t.eval = [eval](const Params<F>& al, const Params<F>& be, const Point<F>& ap, const Point<F>& bp,
                    const Point<F>& cp) {
        const auto a = as_matrix(ap), b = as_matrix(bp), c = as_matrix(cp);
        const Point<F> v = eval((b * a.inverse()).entries(), al, (c * b.inverse()).entries(), be).second;
        return (as_matrix(v) * a).entries();
    };
    return t;
}

template <Field F>
VerificationReport check_commutation(const CommutingFamily<F>& k, const Context<F>& ctx) {
    Trial<F> trial = [&](Sampler<F>& s) -> std::optional<Witness> {
        Params<F> a = sample_params(s, k.param_arity), b = sample_params(s, k.param_arity);
        const auto l = k(a) * k(b);
        const auto r = k(b) * k(a);
        if (l == r) return std::nullopt;
        return Witness{detail::join_points<F>({{"alpha", &a}, {"beta", &b}}), l.to_string(), r.to_string()};
    };
    return run_trials(ctx, "commutation", k.name, 4, trial);
}

/// (U - zK_a)(V - zK_b) = (Y - zK_b)(X - zK_a) at three sampled z.
template <Field F>
VerificationReport check_gl_matrix_invariant(const YBMap<F>& r, const CommutingFamily<F>& k, const Context<F>& ctx) {
    Trial<F> trial = [&](Sampler<F>& s) -> std::optional<Witness> {
        Point<F> xp = sample_point(s, r.carrier), yp = sample_point(s, r.carrier);
        Params<F> a = sample_params(s, r.param_arity), b = sample_params(s, r.param_arity);
        auto [up, vp] = r(xp, a, yp, b);
        const auto x = as_matrix(xp), y = as_matrix(yp), u = as_matrix(up), v = as_matrix(vp);
        const auto ka = k(a), kb = k(b);
        for (int i = 0; i < 3; ++i) {
            const Elem<F> z = s.draw();
            const auto lhs = (u - ka.scale(z)) * (v - kb.scale(z));
            const auto rhs = (y - kb.scale(z)) * (x - ka.scale(z));
            if (lhs != rhs) {
                return Witness{detail::join_points<F>({{"X", &xp}, {"Y", &yp}, {"alpha", &a}, {"beta", &b}}) +
                                   ", zeta=" + z.to_string(),
                               lhs.to_string(), rhs.to_string()};
            }
        }
        return std::nullopt;
    };
    return run_trials(ctx, "gl_matrix_invariant", r.name, r.degree + 4, trial);
}

/// f_i^a(U) = f_i^a(X) and f_i^b(V) = f_i^b(Y) for i = 0, 1, 2.
template <Field F>
VerificationReport check_gl_spectral_invariants(const YBMap<F>& r, const CommutingFamily<F>& k,
                                                const Context<F>& ctx) {
    Trial<F> trial = [&](Sampler<F>& s) -> std::optional<Witness> {
        Point<F> xp = sample_point(s, r.carrier), yp = sample_point(s, r.carrier);
        Params<F> a = sample_params(s, r.param_arity), b = sample_params(s, r.param_arity);
        auto [up, vp] = r(xp, a, yp, b);
        const auto ka = k(a), kb = k(b);
        const auto cu = char_coeffs(ctx.field, as_matrix(up), ka), cx = char_coeffs(ctx.field, as_matrix(xp), ka);
        const auto cv = char_coeffs(ctx.field, as_matrix(vp), kb), cy = char_coeffs(ctx.field, as_matrix(yp), kb);
        if (cu == cx && cv == cy) return std::nullopt;
        auto show = [](const CharCoeffs<F>& c) {
            return "(" + c.f2.to_string() + ", " + c.f1.to_string() + ", " + c.f0.to_string() + ")";
        };
        return Witness{detail::join_points<F>({{"X", &xp}, {"Y", &yp}, {"alpha", &a}, {"beta", &b}}),
                       "f(U)=" + show(cu) + ", f(V)=" + show(cv), "f(X)=" + show(cx) + ", f(Y)=" + show(cy)};
    };
    return run_trials(ctx, "gl_spectral_invariants", r.name, r.degree + 4, trial);
}

}  // namespace ybmap
