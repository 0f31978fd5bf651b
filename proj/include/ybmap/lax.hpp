#pragma once

// Lax matrices: the refactorization identity L(u;a) L(v;b) = L(y;b) L(x;a)
// and a falsification test for strongness.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ybmap/engine.hpp"
#include "ybmap/objects.hpp"
#include "ybmap/verify.hpp"

namespace ybmap {

namespace detail {

/// zeta = 0 first, then `count` further distinct values.
template <Field F>
std::vector<Elem<F>> zeta_values(Sampler<F>& s, std::size_t count) {
    std::vector<Elem<F>> z{s.field().zero()};
    while (z.size() < count + 1) {
        z.push_back(s.draw([&](const Elem<F>& e) { return std::find(z.begin(), z.end(), e) == z.end(); }));
    }
    return z;
}

/// Index of the first zeta where the two products differ, if any.
template <Field F>
std::optional<std::size_t> refactorization_mismatch(const LaxMatrix<F>& L, const Point<F>& x, const Params<F>& a,
                                                    const Point<F>& y, const Params<F>& b, const Point<F>& u,
                                                    const Point<F>& v, const std::vector<Elem<F>>& zetas) {
    for (std::size_t i = 0; i < zetas.size(); ++i) {
        if (L(u, a, zetas[i]) * L(v, b, zetas[i]) != L(y, b, zetas[i]) * L(x, a, zetas[i])) return i;
    }
    return std::nullopt;
}

template <Field F>
void check_lax_shape(const LaxMatrix<F>& L, const YBMap<F>& r) {
    if (L.dim != r.carrier.dim || L.param_arity != r.param_arity) {
        throw IncompatibleStructure("Lax matrix '" + L.name + "' does not fit map '" + r.name + "'");
    }
}

}  // namespace detail

/// Compares both products at zeta = 0, at `zeta_points` random values and at
/// one extra random value (the extra one guards the degree bound).
template <Field F>
VerificationReport check_refactorization(const LaxMatrix<F>& L, const YBMap<F>& r, const Context<F>& ctx) {
    detail::check_lax_shape(L, r);
    const std::size_t zp = ctx.opt.zeta_points;
    if (zp < 2 * L.degree + 1) {
        throw std::invalid_argument("zeta_points must be >= " + std::to_string(2 * L.degree + 1) + ", got " +
                                    std::to_string(zp));
    }
    Trial<F> trial = [&](Sampler<F>& s) -> std::optional<Witness> {
        Point<F> x = sample_point(s, r.carrier), y = sample_point(s, r.carrier);
        Params<F> a = sample_params(s, r.param_arity), b = sample_params(s, r.param_arity);
        auto [u, v] = r(x, a, y, b);
        const auto zetas = detail::zeta_values(s, zp + 1);
        auto bad = detail::refactorization_mismatch(L, x, a, y, b, u, v, zetas);
        if (!bad) return std::nullopt;
        const Elem<F>& z = zetas[*bad];
        return Witness{detail::join_points<F>({{"x", &x}, {"y", &y}, {"alpha", &a}, {"beta", &b}}) +
                           ", zeta=" + z.to_string(),
                       (L(u, a, z) * L(v, b, z)).to_string(), (L(y, b, z) * L(x, a, z)).to_string()};
    };
    return run_trials(ctx, "lax_refactorization", L.name + " / " + r.name,
                      r.degree * 2 + static_cast<unsigned>(4 * L.degree), trial);
}

/// Falsification protocol. For each sample the true image must satisfy the
/// refactorization, and every perturbed candidate (u + d e_k, v) and
/// (u, v + d e_k) must violate it. Passing is evidence that the Lax matrix
/// pins down (u, v), not a proof.
template <Field F>
VerificationReport check_strongness(const LaxMatrix<F>& L, const YBMap<F>& r, const Context<F>& ctx) {
    detail::check_lax_shape(L, r);
    const std::size_t perturbations = ctx.opt.perturbations;
    if (perturbations < 1) throw std::invalid_argument("perturbations must be >= 1");
    const std::size_t zp = std::max(ctx.opt.zeta_points, 2 * L.degree + 1);
    Trial<F> trial = [&](Sampler<F>& s) -> std::optional<Witness> {
        Point<F> x = sample_point(s, r.carrier), y = sample_point(s, r.carrier);
        Params<F> a = sample_params(s, r.param_arity), b = sample_params(s, r.param_arity);
        auto [u, v] = r(x, a, y, b);
        const auto zetas = detail::zeta_values(s, zp + 1);
        const std::string inputs = detail::join_points<F>({{"x", &x}, {"y", &y}, {"alpha", &a}, {"beta", &b}});
        if (detail::refactorization_mismatch(L, x, a, y, b, u, v, zetas)) {
            return Witness{inputs, "image (u, v) = " + detail::pair_str<F>(u, v), "refactorization does not hold"};
        }
        for (std::size_t j = 0; j < perturbations; ++j) {
            const std::size_t k = j % r.carrier.dim;
            for (int side = 0; side < 2; ++side) {
                for (std::size_t attempt = 0;; ++attempt) {
                    Point<F> pu = u, pv = v;
                    Point<F>& target = side == 0 ? pu : pv;
                    target[k] = target[k] + s.draw_nonzero();
                    try {
                        if (!detail::refactorization_mismatch(L, x, a, y, b, pu, pv, zetas)) {
                            return Witness{inputs, "perturbed candidate " + detail::pair_str<F>(pu, pv),
                                           "satisfies the refactorization"};
                        }
                        break;
                    } catch (const PoleError&) {
                        if (attempt >= ctx.opt.pole_budget) throw;
                    }
                }
            }
        }
        return std::nullopt;
    };
    return run_trials(ctx, "lax_strongness", L.name + " / " + r.name,
                      r.degree * 2 + static_cast<unsigned>(4 * L.degree), trial);
}

/// L(x; a; zeta) = I, which every candidate satisfies.
template <Field F>
LaxMatrix<F> identity_lax(const F& field, std::size_t dim, std::size_t param_arity) {
    LaxMatrix<F> L;
    L.name = "identity_lax";
    L.dim = dim;
    L.param_arity = param_arity;
    L.degree = 1;
    L.eval = [field](const Point<F>&, const Params<F>&, const Elem<F>&) {
        return SquareMatrix<Elem<F>>::identity(2, field.one());
    };
    return L;
}

}  // namespace ybmap
