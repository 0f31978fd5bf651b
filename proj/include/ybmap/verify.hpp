#pragma once

// Sampled verifiers for the defining identities: YB equation, dynamical YB
// equation, 3D consistency of ternary systems, symmetry conditions,
// invariance and involutivity.

#include <algorithm>
#include <array>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>

#include "ybmap/engine.hpp"
#include "ybmap/errors.hpp"
#include "ybmap/objects.hpp"
#include "ybmap/quasigroup.hpp"

namespace ybmap {

/// R(lambda)(x, y) with phi(lambda, x) = lambda . x in `quasigroup`.
template <Field F>
struct DynamicalYBMap {
    using Eval = std::function<PointPair<F>(const Point<F>& lambda, const Point<F>& x, const Params<F>& a,
                                            const Point<F>& y, const Params<F>& b)>;

    std::string name;
    Quasigroup<F> quasigroup;
    std::size_t param_arity = 1;
    Eval eval;
    std::string note;
    unsigned degree = 64;

    Point<F> phi(const Point<F>& lambda, const Point<F>& x) const { return quasigroup.op(lambda, x); }
};

/// Views a plain YB map as a dynamical one that ignores lambda.
template <Field F>
DynamicalYBMap<F> lift_to_dynamical(const YBMap<F>& r, Quasigroup<F> q) {
    auto eval = r.eval;
    return {r.name + "[lifted]", std::move(q), r.param_arity,
            [eval](const Point<F>&, const Point<F>& x, const Params<F>& a, const Point<F>& y, const Params<F>& b) {
                return eval(x, a, y, b);
            },
            r.note, r.degree};
}

namespace detail {

template <Field F>
std::string join_points(std::initializer_list<std::pair<const char*, const Point<F>*>> items) {
    std::string s;
    for (const auto& [label, p] : items) {
        if (!s.empty()) s += ", ";
        s += label;
        s += "=";
        s += format_point<F>(*p);
    }
    return s;
}

template <Field F>
std::string triple(const Point<F>& a, const Point<F>& b, const Point<F>& c) {
    return "[" + format_point<F>(a) + ", " + format_point<F>(b) + ", " + format_point<F>(c) + "]";
}

template <Field F>
std::string pair_str(const Point<F>& a, const Point<F>& b) {
    return "[" + format_point<F>(a) + ", " + format_point<F>(b) + "]";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// YB equation

/// Both sides of R23 R13 R12 = R12 R13 R23 at ((x,a), (y,b), (z,c)).
template <Field F>
std::pair<std::array<Point<F>, 3>, std::array<Point<F>, 3>> yb_sides(const YBMap<F>& r, const Point<F>& x,
                                                                     const Params<F>& a, const Point<F>& y,
                                                                     const Params<F>& b, const Point<F>& z,
                                                                     const Params<F>& c) {
    // left: R12 first, then R13, then R23
    auto [x1, y1] = r(x, a, y, b);
    auto [x2, z1] = r(x1, a, z, c);
    auto [y2, z2] = r(y1, b, z1, c);
    // right: R23 first, then R13, then R12
    auto [yr, zr] = r(y, b, z, c);
    auto [xr, zr2] = r(x, a, zr, c);
    auto [xr2, yr2] = r(xr, a, yr, b);
    return {{x2, y2, z2}, {xr2, yr2, zr2}};
}

template <Field F>
VerificationReport check_yb(const YBMap<F>& r, const Context<F>& ctx) {
    Trial<F> trial = [&](Sampler<F>& s) -> std::optional<Witness> {
        Point<F> x = sample_point(s, r.carrier), y = sample_point(s, r.carrier), z = sample_point(s, r.carrier);
        auto [a, b, c] = sample_param_triple(s, r.param_arity, ctx.opt.equal_params);
        auto [lhs, rhs] = yb_sides(r, x, a, y, b, z, c);
        if (lhs == rhs) return std::nullopt;
        return Witness{detail::join_points<F>({{"x", &x}, {"y", &y}, {"z", &z}, {"alpha", &a}, {"beta", &b},
                                               {"gamma", &c}}),
                       detail::triple<F>(lhs[0], lhs[1], lhs[2]), detail::triple<F>(rhs[0], rhs[1], rhs[2])};
    };
    return run_trials(ctx, "yb_equation", r.name, r.degree, trial);
}

// ---------------------------------------------------------------------------
// Dynamical YB equation

/// R23(l) R13(phi(l, X2)) R12(l) = R12(phi(l, X3)) R13(l) R23(phi(l, X1)) on (u, v, w),
/// where X_k is the k-th component of the triple the factor is applied to.
/// Factor ij carries the parameter pair of slots i and j.
template <Field F>
VerificationReport check_dynamical_yb(const DynamicalYBMap<F>& d, const Context<F>& ctx) {
    const Carrier carrier = d.quasigroup.carrier;
    Trial<F> trial = [&](Sampler<F>& s) -> std::optional<Witness> {
        Point<F> lam = sample_point(s, carrier);
        Point<F> u = sample_point(s, carrier), v = sample_point(s, carrier), w = sample_point(s, carrier);
        auto [a, b, c] = sample_param_triple(s, d.param_arity, ctx.opt.equal_params);

        auto [u1, v1] = d.eval(lam, u, a, v, b);
        auto [u2, w1] = d.eval(d.phi(lam, v1), u1, a, w, c);
        auto [v2, w2] = d.eval(lam, v1, b, w1, c);

        auto [vr, wr] = d.eval(d.phi(lam, u), v, b, w, c);
        auto [ur, wr2] = d.eval(lam, u, a, wr, c);
        auto [ur2, vr2] = d.eval(d.phi(lam, wr2), ur, a, vr, b);

        if (u2 == ur2 && v2 == vr2 && w2 == wr2) return std::nullopt;
        return Witness{detail::join_points<F>({{"lambda", &lam}, {"u", &u}, {"v", &v}, {"w", &w}, {"alpha", &a},
                                               {"beta", &b}, {"gamma", &c}}),
                       detail::triple<F>(u2, v2, w2), detail::triple<F>(ur2, vr2, wr2)};
    };
    return run_trials(ctx, "dynamical_yb_equation", d.name, d.degree, trial);
}

/// Samples R(l1) and R(l2) at the same (x, y) and reports any difference.
template <Field F>
VerificationReport check_lambda_independence(const DynamicalYBMap<F>& d, const Context<F>& ctx) {
    const Carrier carrier = d.quasigroup.carrier;
    Trial<F> trial = [&](Sampler<F>& s) -> std::optional<Witness> {
        Point<F> l1 = sample_point(s, carrier), l2 = sample_point(s, carrier);
        Point<F> x = sample_point(s, carrier), y = sample_point(s, carrier);
        Params<F> a = sample_params(s, d.param_arity), b = sample_params(s, d.param_arity);
        auto r1 = d.eval(l1, x, a, y, b);
        auto r2 = d.eval(l2, x, a, y, b);
        if (r1 == r2) return std::nullopt;
        return Witness{detail::join_points<F>({{"lambda1", &l1}, {"lambda2", &l2}, {"x", &x}, {"y", &y},
                                               {"alpha", &a}, {"beta", &b}}),
                       detail::pair_str<F>(r1.first, r1.second), detail::pair_str<F>(r2.first, r2.second)};
    };
    return run_trials(ctx, "lambda_independence", d.name, d.degree, trial);
}

// ---------------------------------------------------------------------------
// 3D consistency

/// Values on the consistency cube: w1, w2 and both routes to w3, w4.
template <Field F>
struct CubeValues {
    Point<F> w1, w2, w3_via_w1, w3_via_w2, w4_via_w2, w4_via_w1;

    bool consistent() const { return w3_via_w1 == w3_via_w2 && w4_via_w2 == w4_via_w1; }
};

template <Field F>
CubeValues<F> cube_values(const Ternary<F>& t, const Params<F>& alpha, const Params<F>& beta, const Params<F>& gamma,
                          const Point<F>& a, const Point<F>& b, const Point<F>& c, const Point<F>& d) {
    CubeValues<F> v;
    v.w1 = t(alpha, beta, a, b, c);
    v.w2 = t(beta, gamma, b, c, d);
    const Point<F> m = t(alpha, gamma, v.w1, c, d);
    v.w3_via_w1 = t(beta, gamma, a, v.w1, m);
    v.w3_via_w2 = t(alpha, gamma, a, b, v.w2);
    v.w4_via_w2 = t(alpha, beta, v.w3_via_w2, v.w2, d);
    v.w4_via_w1 = m;
    return v;
}

template <Field F>
VerificationReport check_3d_consistency(const Ternary<F>& t, const Context<F>& ctx) {
    Trial<F> trial = [&](Sampler<F>& s) -> std::optional<Witness> {
        auto [al, be, ga] = sample_param_triple(s, t.param_arity, ctx.opt.equal_params);
        Point<F> a = sample_point(s, t.carrier), b = sample_point(s, t.carrier), c = sample_point(s, t.carrier),
                 d = sample_point(s, t.carrier);
        auto cube = cube_values(t, al, be, ga, a, b, c, d);
        if (cube.consistent()) return std::nullopt;
        return Witness{detail::join_points<F>({{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}, {"alpha", &al},
                                               {"beta", &be}, {"gamma", &ga}}),
                       "w3=" + format_point<F>(cube.w3_via_w1) + ", w4=" + format_point<F>(cube.w4_via_w2),
                       "w3=" + format_point<F>(cube.w3_via_w2) + ", w4=" + format_point<F>(cube.w4_via_w1)};
    };
    return run_trials(ctx, "3d_consistency", t.name, t.degree, trial);
}

// ---------------------------------------------------------------------------
// Symmetry conditions

enum class SymmetryKind {
    Homogeneous,  // mu(l.a, l.b, l.c) = l.mu(a, b, c) in the structure's operation
    Division,     // l mu(a,b,c) = mu(a/l, l b, c/l)
    Loop,         // l + mu(a,b,c) = mu(a-l, l+b, c-l)
    Abelian,      // l.mu(a,b,c) = mu(a.l^-1, l.b, c.l^-1) in an abelian group
};

inline const char* to_string(SymmetryKind k) {
    switch (k) {
        case SymmetryKind::Homogeneous: return "homogeneous";
        case SymmetryKind::Division: return "division";
        case SymmetryKind::Loop: return "loop";
        case SymmetryKind::Abelian: return "abelian";
    }
    return "?";
}

inline SymmetryKind parse_symmetry_kind(const std::string& s) {
    if (s == "homogeneous") return SymmetryKind::Homogeneous;
    if (s == "division") return SymmetryKind::Division;
    if (s == "loop") return SymmetryKind::Loop;
    if (s == "abelian") return SymmetryKind::Abelian;
    throw std::invalid_argument("unknown symmetry kind '" + s + "'");
}

/// The abelian group whose symmetry identity a kind tests against `q`.
/// Division and loop kinds are the abelian identity on F* and (F, +).
template <Field F>
Quasigroup<F> symmetry_group(SymmetryKind kind, const Quasigroup<F>& q, const F& field) {
    switch (kind) {
        case SymmetryKind::Homogeneous: return q;
        case SymmetryKind::Division:
            if (q.name != "division" && q.name != "multiplicative") {
                throw IncompatibleStructure("division symmetry needs the division quasigroup, got '" + q.name + "'");
            }
            return multiplicative_group(field);
        case SymmetryKind::Loop:
            if (q.name != "subtraction_loop" && q.name != "additive") {
                throw IncompatibleStructure("loop symmetry needs the subtraction loop, got '" + q.name + "'");
            }
            return additive_group(field);
        case SymmetryKind::Abelian:
            if (!q.is_group || !q.is_abelian || !q.left_identity) {
                throw IncompatibleStructure("abelian symmetry needs an abelian group, got '" + q.name + "'");
            }
            return q;
    }
    return q;
}

template <Field F>
VerificationReport check_symmetry(const Ternary<F>& t, SymmetryKind kind, const Quasigroup<F>& q,
                                  const Context<F>& ctx) {
    const Quasigroup<F> g = symmetry_group(kind, q, ctx.field);
    if (g.carrier.dim != t.carrier.dim) {
        throw IncompatibleStructure("ternary '" + t.name + "' does not live on the carrier of '" + q.name + "'");
    }
    Trial<F> trial = [&](Sampler<F>& s) -> std::optional<Witness> {
        Params<F> al = sample_params(s, t.param_arity), be = sample_params(s, t.param_arity);
        Point<F> lam = sample_point(s, g.carrier);
        Point<F> a = sample_point(s, g.carrier), b = sample_point(s, g.carrier), c = sample_point(s, g.carrier);
        Point<F> lhs, rhs;
        if (kind == SymmetryKind::Homogeneous) {
            lhs = t(al, be, g.op(lam, a), g.op(lam, b), g.op(lam, c));
            rhs = g.op(lam, t(al, be, a, b, c));
        } else {
            const Point<F> inv = g.ldiv(lam, *g.left_identity);
            lhs = g.op(lam, t(al, be, a, b, c));
            rhs = t(al, be, g.op(a, inv), g.op(lam, b), g.op(c, inv));
        }
        if (lhs == rhs) return std::nullopt;
        return Witness{detail::join_points<F>({{"lambda", &lam}, {"a", &a}, {"b", &b}, {"c", &c}, {"alpha", &al},
                                               {"beta", &be}}),
                       format_point<F>(lhs), format_point<F>(rhs)};
    };
    return run_trials(ctx, std::string("symmetry:") + to_string(kind) + "@" + q.name, t.name, t.degree, trial);
}

// ---------------------------------------------------------------------------
// Invariance and involutivity

/// v(x,y) * u(x,y) = x * y in the quasigroup operation.
template <Field F>
VerificationReport check_invariance(const YBMap<F>& r, const Quasigroup<F>& q, const Context<F>& ctx) {
    if (r.carrier.dim != q.carrier.dim) {
        throw IncompatibleStructure("map '" + r.name + "' does not act on the carrier of '" + q.name + "'");
    }
    Trial<F> trial = [&](Sampler<F>& s) -> std::optional<Witness> {
        Point<F> x = sample_point(s, q.carrier), y = sample_point(s, q.carrier);
        Params<F> a = sample_params(s, r.param_arity), b = sample_params(s, r.param_arity);
        auto [u, v] = r(x, a, y, b);
        Point<F> lhs = q.op(v, u);
        Point<F> rhs = q.op(x, y);
        if (lhs == rhs) return std::nullopt;
        return Witness{detail::join_points<F>({{"x", &x}, {"y", &y}, {"alpha", &a}, {"beta", &b}}),
                       format_point<F>(lhs), format_point<F>(rhs)};
    };
    return run_trials(ctx, "invariance@" + q.name, r.name, r.degree, trial);
}

/// Pass means R_{a,b} o R_{a,b} = id at every sample.
template <Field F>
VerificationReport check_involution(const YBMap<F>& r, const Context<F>& ctx) {
    Trial<F> trial = [&](Sampler<F>& s) -> std::optional<Witness> {
        Point<F> x = sample_point(s, r.carrier), y = sample_point(s, r.carrier);
        Params<F> a = sample_params(s, r.param_arity), b = sample_params(s, r.param_arity);
        auto [u, v] = r(x, a, y, b);
        auto [u2, v2] = r(u, a, v, b);
        if (u2 == x && v2 == y) return std::nullopt;
        return Witness{detail::join_points<F>({{"x", &x}, {"y", &y}, {"alpha", &a}, {"beta", &b}}),
                       detail::pair_str<F>(u2, v2), detail::pair_str<F>(x, y)};
    };
    return run_trials(ctx, "involution", r.name, 2 * r.degree, trial);
}

// ---------------------------------------------------------------------------
// Pointwise equality of two objects of the same shape

template <Field F>
VerificationReport check_same_map(const YBMap<F>& r1, const YBMap<F>& r2, const Context<F>& ctx,
                                  std::optional<Carrier> carrier = std::nullopt) {
    if (r1.param_arity != r2.param_arity || r1.carrier.dim != r2.carrier.dim) {
        throw IncompatibleStructure("maps '" + r1.name + "' and '" + r2.name + "' have different shapes");
    }
    const Carrier c = carrier.value_or(r1.carrier);
    Trial<F> trial = [&](Sampler<F>& s) -> std::optional<Witness> {
        Point<F> x = sample_point(s, c), y = sample_point(s, c);
        Params<F> a = sample_params(s, r1.param_arity), b = sample_params(s, r1.param_arity);
        auto p1 = r1(x, a, y, b);
        auto p2 = r2(x, a, y, b);
        if (p1 == p2) return std::nullopt;
        return Witness{detail::join_points<F>({{"x", &x}, {"y", &y}, {"alpha", &a}, {"beta", &b}}),
                       detail::pair_str<F>(p1.first, p1.second), detail::pair_str<F>(p2.first, p2.second)};
    };
    return run_trials(ctx, "pointwise_equal", r1.name + " == " + r2.name, std::max(r1.degree, r2.degree), trial);
}

template <Field F>
VerificationReport check_same_ternary(const Ternary<F>& t1, const Ternary<F>& t2, const Context<F>& ctx,
                                      std::optional<Carrier> carrier = std::nullopt) {
    if (t1.param_arity != t2.param_arity || t1.carrier.dim != t2.carrier.dim) {
        throw IncompatibleStructure("ternaries '" + t1.name + "' and '" + t2.name + "' have different shapes");
    }
    const Carrier c = carrier.value_or(t1.carrier);
    Trial<F> trial = [&](Sampler<F>& s) -> std::optional<Witness> {
        Params<F> al = sample_params(s, t1.param_arity), be = sample_params(s, t1.param_arity);
        Point<F> a = sample_point(s, c), b = sample_point(s, c), cc = sample_point(s, c);
        auto w1 = t1(al, be, a, b, cc);
        auto w2 = t2(al, be, a, b, cc);
        if (w1 == w2) return std::nullopt;
        return Witness{detail::join_points<F>({{"a", &a}, {"b", &b}, {"c", &cc}, {"alpha", &al}, {"beta", &be}}),
                       format_point<F>(w1), format_point<F>(w2)};
    };
    return run_trials(ctx, "pointwise_equal", t1.name + " == " + t2.name, std::max(t1.degree, t2.degree), trial);
}

}  // namespace ybmap
