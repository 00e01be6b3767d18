#pragma once

#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "iswp/errors.hpp"
#include "iswp/exact.hpp"
#include "iswp/graph.hpp"
#include "iswp/labelled.hpp"
#include "iswp/numbers.hpp"
#include "iswp/property.hpp"
#include "iswp/rng.hpp"

namespace iswp {

struct SampleEstimate {
    Rational estimate = 0;     // z = (hits/samples) * n!/(n-k)!
    std::uint64_t samples = 0; // t
    std::uint64_t hits = 0;
    std::uint64_t seed = 0;
    Rational epsilon = 0;
    Rational delta = 0;
    Rational g_k = 1;
    Rational q_n = 1;
};

namespace detail {

inline std::uint64_t sample_count(const Rational& epsilon, const Rational& delta,
                                  const Rational& gq, const Limits& lim) {
    double ln_inv_delta = std::log(1.0 / static_cast<double>(delta));
    double scale = static_cast<double>(gq / (epsilon * epsilon));
    double t_real = 4.0 * ln_inv_delta * scale;
    if (!(t_real < 9e18))
        throw budget_error("sample count does not fit in 64 bits; relax epsilon/delta");
    auto t = static_cast<std::uint64_t>(std::ceil(t_real));
    if (t == 0) t = 1;
    check_budget(Count(t), lim, "sampling trials");
    return t;
}

} // namespace detail

// Unbiased tuple-sampling estimator: draw t uniform injective k-tuples with
// replacement, count property hits (restricted to colourful tuples when a
// colouring is given), scale the hit rate by n!/(n-k)!. The (epsilon, delta)
// guarantee holds for inputs whose true count is either zero or at least
// n!/((n-k)! * g_k * q_n); a zero count yields estimate 0 on every seed.
// Trials split across workers with per-worker derived streams, so a result
// depends only on (seed, threads), never on scheduling.
inline SampleEstimate approximate_count_sampling(const PropertyFamily& phi, const Graph& g, int k,
                                                 const Rational& epsilon, const Rational& delta,
                                                 const Rational& g_k, const Rational& q_n,
                                                 std::uint64_t seed,
                                                 const std::optional<Colouring>& f = std::nullopt,
                                                 int threads = 1, const Limits& lim = {}) {
    check_mask_order(k);
    if (k < 0) throw input_error("negative arity");
    if (epsilon <= 0) throw input_error("epsilon must be positive");
    if (delta <= 0 || delta >= 1) throw input_error("delta must lie in (0,1)");
    if (g_k <= 0 || q_n <= 0) throw input_error("density parameters must be positive");
    if (threads < 1) throw input_error("thread count must be at least 1");
    if (f) detail::check_colouring_arity(*f, g, k);

    SampleEstimate result;
    result.seed = seed;
    result.epsilon = epsilon;
    result.delta = delta;
    result.g_k = g_k;
    result.q_n = q_n;
    int n = g.order();
    if (k > n) return result; // no injective tuples: the count is certainly 0

    std::uint64_t t = detail::sample_count(epsilon, delta, g_k * q_n, lim);
    result.samples = t;

    auto workers = static_cast<std::uint64_t>(threads);
    if (workers > t) workers = t;
    std::vector<std::uint64_t> hits(workers, 0);
    std::vector<std::exception_ptr> failures(workers);
    auto run_worker = [&](std::uint64_t w) {
        try {
            std::uint64_t begin = w * t / workers;
            std::uint64_t end = (w + 1) * t / workers;
            SplitMix64 rng(mix_seed(seed, w));
            std::uint64_t local = 0;
            for (std::uint64_t trial = begin; trial < end; ++trial) {
                std::vector<int> tuple = random_tuple(rng, n, k);
                if ((!f || f->colourful(tuple)) && phi.holds(k, mask_from_tuple(g, tuple)))
                    ++local;
            }
            hits[w] = local;
        } catch (...) {
            failures[w] = std::current_exception();
        }
    };
    if (workers <= 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
        for (auto& th : pool) th.join();
    }
    for (auto& failure : failures)
        if (failure) std::rethrow_exception(failure);

    for (std::uint64_t h : hits) result.hits += h;
    result.estimate = Rational(result.hits, t) * Rational(falling_factorial(n, k));
    return result;
}

} // namespace iswp
