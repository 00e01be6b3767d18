#pragma once

#include <string>

#include "iswp/errors.hpp"
#include "iswp/exact.hpp"
#include "iswp/graph.hpp"
#include "iswp/numbers.hpp"
#include "iswp/property.hpp"

namespace iswp {

namespace detail {

inline Count ramsey_threshold(int k) {
    if (k < 0) throw input_error("negative arity");
    if (k > 30) throw input_error("clique-or-IS arity above 30 is not supported");
    return Count(1) << (2 * k);
}

} // namespace detail

// Every graph on at least 2^(2k) vertices contains a k-clique or an
// independent k-set, so above that order the answer is YES with no work;
// below it the instance is brute forced.
inline Decision decide_clique_or_is(const Graph& g, int k, const Limits& lim = {}) {
    if (Count(g.order()) >= detail::ramsey_threshold(k)) {
        Decision yes;
        yes.yes = true;
        yes.note = "graph order reaches the guarantee threshold 2^(2k)";
        return yes;
    }
    return decide_exact_bruteforce(find_property("clique_or_is"), g, k, std::nullopt, lim);
}

// Exact lower bound on the number of clique-or-IS k-tuples above the
// threshold: n!/(n-k)! divided by the falling factorial of 2^(2k).
inline Rational ramsey_density_bound(int n, int k) {
    Count threshold = detail::ramsey_threshold(k);
    if (Count(n) < threshold)
        throw input_error("the density bound requires n >= 2^(2k) = " + threshold.str());
    Count denom = falling_factorial(static_cast<std::uint64_t>(threshold), k);
    return Rational(falling_factorial(n, k), denom);
}

// The matching promise parameter for the sampling estimator: with this
// g_k * q_n, the guaranteed density above makes the estimator's accuracy
// promise unconditional for clique_or_is.
inline Count ramsey_promise_gq(int k) {
    return falling_factorial(static_cast<std::uint64_t>(detail::ramsey_threshold(k)), k);
}

} // namespace iswp
