#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "disjunct/combinatorics.hpp"
#include "disjunct/disjunctness.hpp"
#include "disjunct/errors.hpp"
#include "disjunct/matrix.hpp"

namespace disjunct {

/// n x n identity: every item tested on its own.
inline BinaryMatrix identity_matrix(std::size_t n) {
    if (n < 1) throw ParameterError("identity_matrix requires n >= 1");
    std::vector<ColumnSupport> cols;
    cols.reserve(n);
    for (std::size_t j = 0; j < n; ++j) cols.emplace_back(BitSet(n, {j}));
    return BinaryMatrix(n, std::move(cols));
}

/// Point-line incidence matrix of the affine plane AG(2,q), q prime.
///
/// Row x*q + y is the point (x, y). Columns are the lines y = m*x + b for
/// slope m = 0..q-1 and intercept b = 0..q-1 (slope-major), followed by the
/// q vertical lines x = x0. The result is q^2 x (q^2 + q) with constant
/// column weight q and is (q-1)-disjunct.
inline BinaryMatrix affine_plane_matrix(std::size_t q) {
    if (!is_prime(q)) throw ParameterError("affine_plane_matrix requires a prime order q");
    const std::size_t t = q * q;
    std::vector<ColumnSupport> cols;
    cols.reserve(t + q);
    for (std::size_t m = 0; m < q; ++m)
        for (std::size_t b = 0; b < q; ++b) {
            BitSet line(t);
            for (std::size_t x = 0; x < q; ++x) line.set(x * q + (m * x + b) % q);
            cols.emplace_back(std::move(line));
        }
    for (std::size_t x0 = 0; x0 < q; ++x0) {
        BitSet line(t);
        for (std::size_t y = 0; y < q; ++y) line.set(x0 * q + y);
        cols.emplace_back(std::move(line));
    }
    return BinaryMatrix(t, std::move(cols));
}

enum class WeightMode {
    constant,  // every column has weight d+1
    mixed,     // weights uniform in [d+1, max(d+1, floor(5d/3))]
};

struct CorpusOptions {
    std::size_t d = 1;
    std::size_t t = 4;
    std::size_t n = 5;
    std::uint64_t seed = 0;
    std::size_t attempts = 100;
    WeightMode weights = WeightMode::constant;
    std::size_t max_weight = 0;  // overrides the mixed-mode cap when nonzero
};

namespace detail {

// Uniform draw in [0, bound) by rejection, so results do not depend on
// the standard library's distribution implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

inline BitSet random_subset(std::mt19937_64& rng, std::size_t t, std::size_t k) {
    std::vector<std::size_t> pool(t);
    for (std::size_t i = 0; i < t; ++i) pool[i] = i;
    BitSet s(t);
    for (std::size_t i = 0; i < k; ++i) {
        auto r = i + uniform_below(rng, t - i);
        std::swap(pool[i], pool[r]);
        s.set(pool[i]);
    }
    return s;
}

inline std::mt19937_64 attempt_rng(std::uint64_t seed, std::uint64_t attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(attempt >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace detail

/// One random t x n matrix for the given attempt index, before filtering.
inline BinaryMatrix random_candidate(const CorpusOptions& opt, std::uint64_t attempt) {
    const std::size_t lo = std::min(opt.d + 1, opt.t);
    std::size_t hi = lo;
    if (opt.weights == WeightMode::mixed)
        hi = opt.max_weight ? opt.max_weight : std::max(lo, 5 * opt.d / 3);
    hi = std::clamp(hi, lo, opt.t);

    auto rng = detail::attempt_rng(opt.seed, attempt);
    std::vector<ColumnSupport> cols;
    cols.reserve(opt.n);
    for (std::size_t j = 0; j < opt.n; ++j) {
        const std::size_t w = lo + detail::uniform_below(rng, hi - lo + 1);
        cols.emplace_back(detail::random_subset(rng, opt.t, w));
    }
    return BinaryMatrix(opt.t, std::move(cols));
}

/// Sample `attempts` random matrices and keep the d-disjunct ones.
/// Attempt k draws from its own generator seeded by (seed, k), so the
/// corpus for a fixed seed is reproducible.
inline std::vector<BinaryMatrix> random_disjunct_corpus(const CorpusOptions& opt) {
    if (opt.d < 1 || opt.t < 1 || opt.n < 1) throw ParameterError("corpus parameters must be positive");
    std::vector<BinaryMatrix> out;
    for (std::size_t a = 0; a < opt.attempts; ++a) {
        auto m = random_candidate(opt, a);
        if (is_d_disjunct(m, opt.d).is_disjunct) out.push_back(std::move(m));
    }
    return out;
}

struct GrowOptions {
    std::size_t d = 2;
    std::size_t t = 12;
    std::size_t tries = 300;     // random columns proposed per matrix
    std::uint64_t seed = 0;
    std::size_t max_weight = 0;  // 0 means 2d-1; weights are uniform in [d+1, max_weight]
};

/// Grow a t-row d-disjunct matrix by proposing random columns and keeping
/// each one that leaves the matrix d-disjunct. Deterministic in (seed, attempt).
inline BinaryMatrix grow_disjunct(const GrowOptions& opt, std::uint64_t attempt) {
    if (opt.d < 1 || opt.t < 1) throw ParameterError("grow_disjunct parameters must be positive");
    const std::size_t lo = std::min(opt.d + 1, opt.t);
    const std::size_t hi = std::clamp(opt.max_weight ? opt.max_weight : 2 * opt.d - 1, lo, opt.t);

    auto rng = detail::attempt_rng(opt.seed, attempt);
    std::vector<ColumnSupport> cols;
    for (std::size_t k = 0; k < opt.tries; ++k) {
        const std::size_t w = lo + detail::uniform_below(rng, hi - lo + 1);
        cols.emplace_back(detail::random_subset(rng, opt.t, w));
        // Only the new column and the columns it meets can have become covered.
        const BinaryMatrix m(opt.t, cols);
        const ColumnId x = cols.size() - 1;
        bool ok = !find_cover(m, x, opt.d).has_value();
        for (ColumnId j = 0; ok && j < x; ++j)
            if (cols[j].rows().intersects(cols[x].rows())) ok = !find_cover(m, j, opt.d).has_value();
        if (!ok) cols.pop_back();
    }
    return BinaryMatrix(opt.t, std::move(cols));
}

/// Grown matrices peeled to a fixpoint, keeping those left with more than
/// d columns. Stops after `count` matrices or `attempts` growths.
inline std::vector<BinaryMatrix> isolated_free_corpus(const GrowOptions& opt, std::size_t count,
                                                      std::size_t attempts) {
    std::vector<BinaryMatrix> out;
    for (std::size_t a = 0; a < attempts && out.size() < count; ++a) {
        auto m = peel_to_fixpoint(grow_disjunct(opt, a));
        if (m.cols() > opt.d) out.push_back(std::move(m));
    }
    return out;
}

}  // namespace disjunct
