#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ybmap/errors.hpp"

namespace ybmap {

/// Dense n x n matrix over an exact field, row-major.
template <class E>
class SquareMatrix {
public:
    SquareMatrix() = default;

    SquareMatrix(std::size_t order, std::vector<E> entries) : n_(order), a_(std::move(entries)) {
        if (n_ == 0 || a_.size() != n_ * n_) throw std::invalid_argument("SquareMatrix: bad shape");
    }

    SquareMatrix(std::initializer_list<std::initializer_list<E>> rows) : n_(rows.size()) {
        for (const auto& r : rows) {
            if (r.size() != n_) throw std::invalid_argument("SquareMatrix: ragged rows");
            a_.insert(a_.end(), r.begin(), r.end());
        }
        if (n_ == 0) throw std::invalid_argument("SquareMatrix: empty");
    }

    static SquareMatrix identity(std::size_t n, const E& one) {
        const E zero = one - one;
        std::vector<E> a(n * n, zero);
        for (std::size_t i = 0; i < n; ++i) a[i * n + i] = one;
        return SquareMatrix(n, std::move(a));
    }

    static SquareMatrix diagonal(const std::vector<E>& d) {
        const std::size_t n = d.size();
        if (n == 0) throw std::invalid_argument("SquareMatrix::diagonal: empty");
        const E zero = d[0] - d[0];
        std::vector<E> a(n * n, zero);
        for (std::size_t i = 0; i < n; ++i) a[i * n + i] = d[i];
        return SquareMatrix(n, std::move(a));
    }

    std::size_t order() const { return n_; }
    const E& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    E& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const std::vector<E>& entries() const { return a_; }

    friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
        x.same_order(y);
        const std::size_t n = x.n_;
        std::vector<E> out;
        out.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                E s = x(i, 0) * y(0, j);
                for (std::size_t k = 1; k < n; ++k) s = s + x(i, k) * y(k, j);
                out.push_back(std::move(s));
            }
        }
        return SquareMatrix(n, std::move(out));
    }

    friend SquareMatrix operator+(const SquareMatrix& x, const SquareMatrix& y) {
        x.same_order(y);
        std::vector<E> out;
        out.reserve(x.a_.size());
        for (std::size_t i = 0; i < x.a_.size(); ++i) out.push_back(x.a_[i] + y.a_[i]);
        return SquareMatrix(x.n_, std::move(out));
    }

    friend SquareMatrix operator-(const SquareMatrix& x, const SquareMatrix& y) {
        x.same_order(y);
        std::vector<E> out;
        out.reserve(x.a_.size());
        for (std::size_t i = 0; i < x.a_.size(); ++i) out.push_back(x.a_[i] - y.a_[i]);
        return SquareMatrix(x.n_, std::move(out));
    }

    SquareMatrix scale(const E& s) const {
        std::vector<E> out;
        out.reserve(a_.size());
        for (const auto& e : a_) out.push_back(s * e);
        return SquareMatrix(n_, std::move(out));
    }

    friend bool operator==(const SquareMatrix& x, const SquareMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }

    E det() const {
        if (n_ == 1) return a_[0];
        if (n_ == 2) return a_[0] * a_[3] - a_[1] * a_[2];
        // Gaussian elimination; the determinant picks up the pivots.
        std::vector<E> m = a_;
        const E zero = a_[0] - a_[0];
        bool negate = false;
        E acc{};
        bool have_acc = false;
        for (std::size_t c = 0; c < n_; ++c) {
            std::size_t piv = c;
            while (piv < n_ && m[piv * n_ + c].is_zero()) ++piv;
            if (piv == n_) return zero;
            if (piv != c) {
                for (std::size_t k = 0; k < n_; ++k) std::swap(m[c * n_ + k], m[piv * n_ + k]);
                negate = !negate;
            }
            const E p = m[c * n_ + c];
            acc = have_acc ? acc * p : p;
            have_acc = true;
            const E pinv = p.inverse();
            for (std::size_t r = c + 1; r < n_; ++r) {
                if (m[r * n_ + c].is_zero()) continue;
                const E f = m[r * n_ + c] * pinv;
                for (std::size_t k = c; k < n_; ++k) m[r * n_ + k] = m[r * n_ + k] - f * m[c * n_ + k];
            }
        }
        return negate ? zero - acc : acc;
    }

    /// Gauss-Jordan inverse; throws SingularMatrix when det = 0.
    SquareMatrix inverse() const {
        if (n_ == 2) {
            const E d = det();
            if (d.is_zero()) throw SingularMatrix();
            const E di = d.inverse();
            return SquareMatrix(2, {a_[3] * di, -a_[1] * di, -a_[2] * di, a_[0] * di});
        }
        std::vector<E> m = a_;
        std::vector<E> inv;
        {
            // build identity without needing a field handle
            std::size_t nz = 0;
            while (nz < a_.size() && a_[nz].is_zero()) ++nz;
            if (nz == a_.size()) throw SingularMatrix();
            const E one = a_[nz] / a_[nz];
            inv = identity(n_, one).a_;
        }
        for (std::size_t c = 0; c < n_; ++c) {
            std::size_t piv = c;
            while (piv < n_ && m[piv * n_ + c].is_zero()) ++piv;
            if (piv == n_) throw SingularMatrix();
            if (piv != c) {
                for (std::size_t k = 0; k < n_; ++k) {
                    std::swap(m[c * n_ + k], m[piv * n_ + k]);
                    std::swap(inv[c * n_ + k], inv[piv * n_ + k]);
                }
            }
            const E pinv = m[c * n_ + c].inverse();
            for (std::size_t k = 0; k < n_; ++k) {
                m[c * n_ + k] = m[c * n_ + k] * pinv;
                inv[c * n_ + k] = inv[c * n_ + k] * pinv;
            }
            for (std::size_t r = 0; r < n_; ++r) {
                if (r == c || m[r * n_ + c].is_zero()) continue;
                const E f = m[r * n_ + c];
                for (std::size_t k = 0; k < n_; ++k) {
                    m[r * n_ + k] = m[r * n_ + k] - f * m[c * n_ + k];
                    inv[r * n_ + k] = inv[r * n_ + k] - f * inv[c * n_ + k];
                }
            }
        }
        return SquareMatrix(n_, std::move(inv));
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < n_; ++i) {
            s += i ? ", [" : "[";
            for (std::size_t j = 0; j < n_; ++j) {
                if (j) s += ", ";
                s += (*this)(i, j).to_string();
            }
            s += "]";
        }
        return s + "]";
    }

private:
    void same_order(const SquareMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("SquareMatrix: order mismatch");
    }

    std::size_t n_ = 0;
    std::vector<E> a_;
};

/// Order of a matrix stored as a flat point of n*n coordinates.
inline std::size_t matrix_order_of(std::size_t flat_size) {
    auto n = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(flat_size))));
    if (n * n != flat_size || n == 0) throw std::invalid_argument("point is not a square matrix");
    return n;
}

template <class E>
SquareMatrix<E> as_matrix(const std::vector<E>& flat) {
    return SquareMatrix<E>(matrix_order_of(flat.size()), flat);
}

}  // namespace ybmap
