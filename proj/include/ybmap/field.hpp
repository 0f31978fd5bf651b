#pragma once

// Exact coefficient fields: arbitrary-precision rationals (GMP) and prime fields.
//
// Every scalar in the library is an element of one of these. Generic code is
// written against the `Field` concept below; the field object carries whatever
// context is needed to build constants (the modulus, for prime fields), while
// elements carry enough state to do arithmetic on their own.

#include <gmpxx.h>

#include <array>
#include <charconv>
#include <concepts>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ybmap/errors.hpp"

namespace ybmap {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; independent of the standard
/// library's distribution implementation so streams are portable.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    for (;;) {
        const std::uint64_t r = rng();
        if (r < limit) return r % bound;
    }
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent stream for (seed, index).
inline Rng derive_rng(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

// ---------------------------------------------------------------------------
// Primality

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the first twelve prime bases are exact for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto p : bases) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : bases) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

// ---------------------------------------------------------------------------
// Rational

class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static Rational fraction(long num, long den) {
        if (den == 0) throw DivisionByZero();
        return Rational(mpq_class(mpz_class(num), mpz_class(den)));
    }

    /// Parses "n", "-n" or "n/d".
    static Rational parse(std::string_view text) {
        mpq_class q;
        if (q.set_str(std::string(text), 10) != 0) {
            throw std::invalid_argument("not a rational literal: " + std::string(text));
        }
        if (q.get_den() == 0) throw DivisionByZero();
        return Rational(std::move(q));
    }

    const mpq_class& value() const { return q_; }
    bool is_zero() const { return sgn(q_) == 0; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(mpq_class(1) / q_);
    }

    std::string to_string() const { return q_.get_str(10); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_), 0); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_), 0); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_), 0); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero();
        return Rational(mpq_class(a.q_ / b.q_), 0);
    }
    Rational operator-() const { return Rational(mpq_class(-q_), 0); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

private:
    // gmpxx arithmetic on canonical operands already yields canonical results.
    Rational(mpq_class q, int) : q_(std::move(q)) {}

    mpq_class q_;
};

// ---------------------------------------------------------------------------
// Prime field element. The modulus travels with the value so elements are
// self-contained; mixing moduli is a programming error.

class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp inverse() const {
        if (v_ == 0) throw DivisionByZero();
        // extended Euclid on signed 128-bit
        __int128 t = 0, new_t = 1;
        __int128 r = p_, new_r = v_;
        while (new_r != 0) {
            __int128 q = r / new_r;
            __int128 tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += p_;
        return raw(static_cast<std::uint64_t>(t), p_);
    }

    std::string to_string() const { return std::to_string(v_); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        check(a, b);
        std::uint64_t s = a.v_ + b.v_;  // p < 2^63 keeps this from overflowing
        if (s >= a.p_) s -= a.p_;
        return raw(s, a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        check(a, b);
        return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + (a.p_ - b.v_), a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        check(a, b);
        return raw(mul(a.v_, b.v_, a.p_), a.p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        check(a, b);
        return a.v_ == b.v_;
    }

private:
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp f;
        f.v_ = v;
        f.p_ = p;
        return f;
    }
    static void check(const Fp& a, const Fp& b) {
        if (a.p_ != b.p_) throw std::logic_error("Fp: mixed or unset moduli");
    }
    static std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
        if (p == kMersenne61) {
            std::uint64_t lo = static_cast<std::uint64_t>(prod & kMersenne61);
            std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
            std::uint64_t s = lo + hi;
            if (s >= kMersenne61) s -= kMersenne61;
            return s;
        }
        return static_cast<std::uint64_t>(prod % p);
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

// ---------------------------------------------------------------------------
// Field descriptors

template <class F>
concept Field = requires(const F& f, Rng& rng, typename F::element e, std::string_view s) {
    { f.from_int(std::int64_t{}) } -> std::same_as<typename F::element>;
    { f.parse(s) } -> std::same_as<typename F::element>;
    { f.random(rng, std::int64_t{}) } -> std::same_as<typename F::element>;
    { f.zero() } -> std::same_as<typename F::element>;
    { f.one() } -> std::same_as<typename F::element>;
    { f.name() } -> std::convertible_to<std::string>;
    { e.is_zero() } -> std::same_as<bool>;
    { e.inverse() } -> std::same_as<typename F::element>;
    { e.to_string() } -> std::same_as<std::string>;
    { e + e } -> std::same_as<typename F::element>;
    { e * e } -> std::same_as<typename F::element>;
    { e / e } -> std::same_as<typename F::element>;
    { e == e } -> std::same_as<bool>;
};

class RationalField {
public:
    using element = Rational;

    element from_int(std::int64_t n) const { return Rational(static_cast<long>(n)); }
    element zero() const { return Rational(0L); }
    element one() const { return Rational(1L); }
    element parse(std::string_view text) const { return Rational::parse(text); }

    /// n/d with |n|, |d| <= bound and d != 0.
    element random(Rng& rng, std::int64_t bound) const {
        if (bound < 1) throw std::invalid_argument("sample bound must be >= 1");
        const auto width = static_cast<std::uint64_t>(2 * bound + 1);
        const long n = static_cast<long>(uniform_below(rng, width)) - bound;
        long d = 0;
        while (d == 0) d = static_cast<long>(uniform_below(rng, width)) - bound;
        return Rational::fraction(n, d);
    }

    std::string name() const { return "q"; }
    std::uint64_t modulus() const { return 0; }
};

class PrimeField {
public:
    using element = Fp;

    explicit PrimeField(std::uint64_t p = kMersenne61) : p_(p) {
        if (p >= (std::uint64_t{1} << 63) || !is_prime(p)) {
            throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^63");
        }
    }

    std::uint64_t modulus() const { return p_; }

    element from_int(std::int64_t n) const {
        if (n >= 0) return Fp(static_cast<std::uint64_t>(n), p_);
        return -Fp(static_cast<std::uint64_t>(-(n + 1)) + 1, p_);
    }
    element zero() const { return Fp(0, p_); }
    element one() const { return Fp(1, p_); }

    /// Accepts "n", "-n" or "n/d" with decimal integers of any length.
    element parse(std::string_view text) const {
        const auto slash = text.find('/');
        if (slash != std::string_view::npos) {
            return parse(text.substr(0, slash)) / parse(text.substr(slash + 1));
        }
        bool neg = false;
        if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
            neg = text[0] == '-';
            text.remove_prefix(1);
        }
        if (text.empty()) throw std::invalid_argument("empty literal");
        Fp acc(0, p_);
        const Fp ten(10, p_);
        for (char c : text) {
            if (c < '0' || c > '9') throw std::invalid_argument("not a decimal literal: " + std::string(text));
            acc = acc * ten + Fp(static_cast<std::uint64_t>(c - '0'), p_);
        }
        return neg ? -acc : acc;
    }

    element random(Rng& rng, std::int64_t /*bound*/) const { return Fp(uniform_below(rng, p_), p_); }

    std::string name() const { return "fp:" + std::to_string(p_); }

private:
    std::uint64_t p_;
};

static_assert(Field<RationalField>);
static_assert(Field<PrimeField>);

template <Field F>
using Elem = typename F::element;

/// Integer power with negative exponents allowed; 0^0 is 1.
template <Field F>
Elem<F> power(const F& field, const Elem<F>& base, long long exponent) {
    if (exponent < 0) return power(field, base.inverse(), -exponent);
    Elem<F> result = field.one();
    Elem<F> b = base;
    auto e = static_cast<unsigned long long>(exponent);
    while (e) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

}  // namespace ybmap
