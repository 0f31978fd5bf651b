#pragma once

// Evaluable objects shared by every verifier: points of X = F^d, carriers
// (which subset of F^d inputs are drawn from), parametric YB maps, ternary
// systems and Lax matrices. All of them are thin wrappers over pure closures.

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ybmap/field.hpp"
#include "ybmap/matrix.hpp"
#include "ybmap/sampling.hpp"

namespace ybmap {

template <Field F>
using Point = std::vector<Elem<F>>;

template <Field F>
using Params = std::vector<Elem<F>>;

template <Field F>
using PointPair = std::pair<Point<F>, Point<F>>;

/// The set inputs are sampled from.
struct Carrier {
    enum class Kind { Scalars, NonzeroScalars, InvertibleMatrices };

    Kind kind = Kind::Scalars;
    std::size_t dim = 1;  // coordinates per point; n*n for matrices

    static Carrier scalars(std::size_t d = 1) { return {Kind::Scalars, d}; }
    static Carrier nonzero(std::size_t d = 1) { return {Kind::NonzeroScalars, d}; }
    static Carrier matrices(std::size_t order) { return {Kind::InvertibleMatrices, order * order}; }

    std::string to_string() const {
        switch (kind) {
            case Kind::Scalars: return "F^" + std::to_string(dim);
            case Kind::NonzeroScalars: return "(F*)^" + std::to_string(dim);
            case Kind::InvertibleMatrices: return "GL_" + std::to_string(matrix_order_of(dim));
        }
        return "?";
    }

    friend bool operator==(const Carrier&, const Carrier&) = default;
};

template <Field F>
Point<F> sample_point(Sampler<F>& s, const Carrier& c) {
    Point<F> p;
    p.reserve(c.dim);
    switch (c.kind) {
        case Carrier::Kind::Scalars:
            for (std::size_t i = 0; i < c.dim; ++i) p.push_back(s.draw());
            return p;
        case Carrier::Kind::NonzeroScalars:
            return s.draw_nonzero(c.dim);
        case Carrier::Kind::InvertibleMatrices:
            for (std::size_t attempt = 0; attempt < kDrawBudget; ++attempt) {
                p.clear();
                for (std::size_t i = 0; i < c.dim; ++i) p.push_back(s.draw());
                if (!as_matrix(p).det().is_zero()) return p;
            }
            throw SamplingExhausted(kDrawBudget);
    }
    return p;
}

/// Parameter vectors are drawn with nonzero components.
template <Field F>
Params<F> sample_params(Sampler<F>& s, std::size_t arity) {
    return s.draw_nonzero(arity);
}

template <Field F>
std::string format_point(const Point<F>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ", ";
        s += p[i].to_string();
    }
    return s + ")";
}

/// A birational map (x, alpha, y, beta) -> (u, v) on X x X.
template <Field F>
struct YBMap {
    using Eval = std::function<PointPair<F>(const Point<F>& x, const Params<F>& a, const Point<F>& y,
                                            const Params<F>& b)>;

    std::string name;
    Carrier carrier;
    std::size_t param_arity = 1;
    Eval eval;
    std::string source = "catalog";  // catalog | dsl | constructed | reduced
    std::string note;
    unsigned degree = 64;  // total-degree estimate used for the false-accept bound

    PointPair<F> operator()(const Point<F>& x, const Params<F>& a, const Point<F>& y,
                            const Params<F>& b) const {
        return eval(x, a, y, b);
    }
};

/// A parametric ternary operation mu_{alpha,beta}(a, b, c).
template <Field F>
struct Ternary {
    using Eval = std::function<Point<F>(const Params<F>& alpha, const Params<F>& beta, const Point<F>& a,
                                        const Point<F>& b, const Point<F>& c)>;

    std::string name;
    Carrier carrier;
    std::size_t param_arity = 1;
    Eval eval;
    std::string source = "catalog";
    std::string note;
    unsigned degree = 64;

    Point<F> operator()(const Params<F>& alpha, const Params<F>& beta, const Point<F>& a, const Point<F>& b,
                        const Point<F>& c) const {
        return eval(alpha, beta, a, b, c);
    }
};

/// L(x; alpha; zeta), polynomial of degree `degree` in zeta.
template <Field F>
struct LaxMatrix {
    using Eval = std::function<SquareMatrix<Elem<F>>(const Point<F>& x, const Params<F>& a, const Elem<F>& zeta)>;

    std::string name;
    std::size_t order = 2;
    std::size_t dim = 1;
    std::size_t param_arity = 1;
    std::size_t degree = 1;
    Eval eval;
    std::string note;

    SquareMatrix<Elem<F>> operator()(const Point<F>& x, const Params<F>& a, const Elem<F>& zeta) const {
        return eval(x, a, zeta);
    }
};

}  // namespace ybmap
