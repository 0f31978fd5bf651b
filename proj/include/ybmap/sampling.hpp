#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ybmap/field.hpp"

namespace ybmap {

enum class FieldKind { ExactRational, PrimeField };

struct FieldConfig {
    FieldKind kind = FieldKind::PrimeField;
    std::uint64_t modulus = kMersenne61;
    std::uint64_t rng_seed = 1;
    std::int64_t sample_bound = 100;

    std::string name() const {
        return kind == FieldKind::ExactRational ? "q" : "fp:" + std::to_string(modulus);
    }

    void validate() const {
        if (kind == FieldKind::PrimeField && (modulus >= (std::uint64_t{1} << 63) || !is_prime(modulus))) {
            throw std::invalid_argument("modulus " + std::to_string(modulus) + " is not prime");
        }
        if (sample_bound < 1) throw std::invalid_argument("sample_bound must be positive");
    }
};

/// Retry budget per drawn element before `SamplingExhausted`.
inline constexpr std::size_t kDrawBudget = 1000;

/// Owns one RNG stream and draws field elements from it.
template <Field F>
class Sampler {
public:
    using E = Elem<F>;

    Sampler(F field, std::int64_t sample_bound, Rng rng)
        : field_(std::move(field)), bound_(sample_bound), rng_(std::move(rng)) {}

    const F& field() const { return field_; }
    Rng& rng() { return rng_; }

    E draw() { return field_.random(rng_, bound_); }

    template <class Pred>
    E draw(Pred&& accept) {
        for (std::size_t i = 0; i < kDrawBudget; ++i) {
            E e = draw();
            if (accept(e)) return e;
        }
        throw SamplingExhausted(kDrawBudget);
    }

    E draw_nonzero() {
        return draw([](const E& e) { return !e.is_zero(); });
    }

    std::vector<E> draw_nonzero(std::size_t count) {
        std::vector<E> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(draw_nonzero());
        return out;
    }

private:
    F field_;
    std::int64_t bound_;
    Rng rng_;
};

/// Draws `count` elements satisfying `accept`; stream 0 of `cfg.rng_seed`.
template <Field F>
std::vector<Elem<F>> sample(const F& field, const FieldConfig& cfg, std::size_t count,
                            const std::function<bool(const Elem<F>&)>& accept) {
    if (count < 1) throw std::invalid_argument("sample: count must be >= 1");
    Sampler<F> s(field, cfg.sample_bound, derive_rng(cfg.rng_seed, 0));
    std::vector<Elem<F>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(s.draw(accept));
    return out;
}

}  // namespace ybmap
