#pragma once

// Randomized identity-testing driver shared by all verifiers.
//
// Sample i draws its inputs from its own stream derive_rng(seed, i), so the
// outcome is the same whatever the worker count. A trial that hits a pole
// (PoleError) is redrawn as a whole tuple from the same stream, at most
// `pole_budget` times, before the sample is counted as exhausted.

#include <algorithm>
#include <array>
#include <stdexcept>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ybmap/objects.hpp"
#include "ybmap/report.hpp"
#include "ybmap/sampling.hpp"

namespace ybmap {

struct VerifyOptions {
    std::size_t samples = 200;
    std::size_t jobs = 0;  // 0: hardware concurrency
    std::size_t pole_budget = 50;
    std::size_t max_witnesses = 5;
    bool equal_params = false;  // non-parametric reading: alpha = beta = gamma
    std::size_t zeta_points = 3;
    std::size_t perturbations = 10;
};

template <Field F>
struct Context {
    F field;
    FieldConfig cfg;
    VerifyOptions opt;

    Context(F f, FieldConfig c, VerifyOptions o = {}) : field(std::move(f)), cfg(c), opt(o) {}

    Context with_samples(std::size_t n) const {
        Context c = *this;
        c.opt.samples = n;
        return c;
    }
};

inline Context<RationalField> make_context(const RationalField& f, std::uint64_t seed, VerifyOptions opt = {}) {
    FieldConfig cfg;
    cfg.kind = FieldKind::ExactRational;
    cfg.modulus = 0;
    cfg.rng_seed = seed;
    return {f, cfg, opt};
}

inline Context<PrimeField> make_context(const PrimeField& f, std::uint64_t seed, VerifyOptions opt = {}) {
    FieldConfig cfg;
    cfg.kind = FieldKind::PrimeField;
    cfg.modulus = f.modulus();
    cfg.rng_seed = seed;
    return {f, cfg, opt};
}

/// A trial draws its inputs and returns a witness on mismatch.
template <Field F>
using Trial = std::function<std::optional<Witness>(Sampler<F>&)>;

template <Field F>
VerificationReport run_trials(const Context<F>& ctx, std::string identity, std::string subject, unsigned degree,
                              const Trial<F>& trial) {
    const std::size_t n = ctx.opt.samples;
    if (n < 1) throw std::invalid_argument("samples must be >= 1");

    struct Outcome {
        enum { Pass, Fail, Exhausted } status = Pass;
        std::size_t resamples = 0;
        std::optional<Witness> witness;
    };
    std::vector<Outcome> outcomes(n);

    auto run_one = [&](std::size_t i) {
        Sampler<F> sampler(ctx.field, ctx.cfg.sample_bound, derive_rng(ctx.cfg.rng_seed, i));
        Outcome& out = outcomes[i];
        for (std::size_t attempt = 0;; ++attempt) {
            try {
                auto w = trial(sampler);
                if (w) {
                    out.status = Outcome::Fail;
                    out.witness = std::move(w);
                }
                return;
            } catch (const PoleError&) {
            } catch (const SamplingExhausted&) {
            }
            if (attempt >= ctx.opt.pole_budget) {
                out.status = Outcome::Exhausted;
                return;
            }
            ++out.resamples;
        }
    };

    std::size_t jobs = ctx.opt.jobs ? ctx.opt.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min(jobs, n);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) run_one(i);
    } else {
        std::vector<std::exception_ptr> errors(jobs);
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (std::size_t t = 0; t < jobs; ++t) {
            workers.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < n; i += jobs) run_one(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& w : workers) w.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    VerificationReport r;
    r.identity = std::move(identity);
    r.subject = std::move(subject);
    r.field = ctx.cfg.name();
    r.seed = ctx.cfg.rng_seed;
    r.requested = n;
    r.confidence = confidence_note(r.field, ctx.cfg.kind == FieldKind::PrimeField ? ctx.cfg.modulus : 0, degree);
    for (auto& o : outcomes) {
        r.resampled += o.resamples;
        switch (o.status) {
            case Outcome::Pass: ++r.used; break;
            case Outcome::Fail:
                ++r.used;
                ++r.failure_count;
                if (r.failures.size() < ctx.opt.max_witnesses) r.failures.push_back(std::move(*o.witness));
                break;
            case Outcome::Exhausted: ++r.exhausted; break;
        }
    }
    r.finalize();
    return r;
}

/// Three parameter vectors for a YB-type test, honoring equal_params.
template <Field F>
std::array<Params<F>, 3> sample_param_triple(Sampler<F>& s, std::size_t arity, bool equal) {
    Params<F> a = sample_params(s, arity);
    if (equal) return {a, a, a};
    Params<F> b = sample_params(s, arity);
    Params<F> c = sample_params(s, arity);
    return {std::move(a), std::move(b), std::move(c)};
}

}  // namespace ybmap
