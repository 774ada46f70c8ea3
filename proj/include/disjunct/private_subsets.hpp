#pragma once

// Private / non-private 2-subsets of a column and the matching-number
// bound on the non-private ones.
//
// A set of rows is private when exactly one column contains it. For a
// column c in a d-disjunct matrix with no isolated columns and weight d+s,
// the non-private pairs N(c) cannot contain s pairwise disjoint pairs
// (otherwise s columns cover 2s rows of c and d-s more columns cover the
// rest). The Erdos-Gallai theorem then caps |N(c)|.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "disjunct/combinatorics.hpp"
#include "disjunct/disjunctness.hpp"
#include "disjunct/errors.hpp"
#include "disjunct/matching.hpp"
#include "disjunct/matrix.hpp"

namespace disjunct {

/// Unordered row pair, stored with first < second.
using RowPair = std::pair<RowId, RowId>;

struct PairClassification {
    ColumnId column = 0;
    std::vector<RowPair> private_pairs;
    std::vector<RowPair> nonprivate_pairs;
};

/// Graph on the rows of one column whose edges are its non-private pairs.
struct PairGraph {
    std::vector<RowId> vertices;
    std::vector<RowPair> edges;
};

inline bool pair_is_private(const BinaryMatrix& m, RowId a, RowId b) {
    return m.row(a).cols().intersection_count(m.row(b).cols()) < 2;
}

inline PairClassification classify_pairs(const BinaryMatrix& m, ColumnId j) {
    PairClassification pc;
    pc.column = j;
    const auto rows = m.column(j).rows().indices();
    for (std::size_t x = 0; x < rows.size(); ++x)
        for (std::size_t y = x + 1; y < rows.size(); ++y) {
            RowPair p{rows[x], rows[y]};
            (pair_is_private(m, p.first, p.second) ? pc.private_pairs : pc.nonprivate_pairs).push_back(p);
        }
    return pc;
}

inline std::size_t count_private_pairs(const BinaryMatrix& m, ColumnId j) {
    const auto rows = m.column(j).rows().indices();
    std::size_t c = 0;
    for (std::size_t x = 0; x < rows.size(); ++x)
        for (std::size_t y = x + 1; y < rows.size(); ++y) c += pair_is_private(m, rows[x], rows[y]);
    return c;
}

inline PairGraph nonprivate_pair_graph(const BinaryMatrix& m, const PairClassification& pc) {
    return PairGraph{m.column(pc.column).rows().indices(), pc.nonprivate_pairs};
}

/// Exact matching number of the graph.
inline std::size_t matching_number(const PairGraph& g) {
    std::unordered_map<RowId, std::size_t> local;
    for (std::size_t k = 0; k < g.vertices.size(); ++k) local.emplace(g.vertices[k], k);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(g.edges.size());
    for (auto [a, b] : g.edges) {
        auto ia = local.find(a), ib = local.find(b);
        if (ia == local.end() || ib == local.end())
            throw ParameterError("pair graph edge endpoint is not a vertex");
        edges.emplace_back(ia->second, ib->second);
    }
    return maximum_matching_size(g.vertices.size(), edges);
}

/// Erdos-Gallai: a graph on k vertices with matching number at most mu has
/// at most max{C(2mu+1,2), C(k,2) - C(k-mu,2)} edges. Requires k >= 2mu+1.
inline std::uint64_t erdos_gallai_bound(std::uint64_t k, std::uint64_t mu) {
    if (k < 2 * mu + 1) throw ParameterError("erdos_gallai_bound requires k >= 2*mu + 1");
    return std::max(choose(2 * mu + 1, 2), choose(k, 2) - choose(k - mu, 2));
}

/// Brute-force m(k,2,mu) for every mu: entry mu is the largest edge count
/// of a graph on k labeled vertices whose matching number is at most mu.
/// Enumerates all 2^C(k,2) graphs, so k <= 7.
inline std::vector<std::uint64_t> extremal_edge_counts(std::size_t k) {
    if (k > 7) throw ParameterError("extremal_edge_counts: k must be at most 7");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) edges.emplace_back(a, b);
    const std::size_t e = edges.size();
    std::vector<std::uint32_t> touching(e, 0);
    for (std::size_t x = 0; x < e; ++x)
        for (std::size_t y = 0; y < e; ++y) {
            auto [a, b] = edges[x];
            auto [c, d] = edges[y];
            if (a == c || a == d || b == c || b == d) touching[x] |= std::uint32_t{1} << y;
        }

    // nu[mask] from the lowest edge: either skip it or take it and drop its neighbours.
    const std::uint32_t total = std::uint32_t{1} << e;
    std::vector<std::uint8_t> nu(total, 0);
    std::vector<std::uint64_t> best(k / 2 + 1, 0);
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        const auto low = static_cast<std::size_t>(std::countr_zero(mask));
        nu[mask] = std::max<std::uint8_t>(nu[mask & (mask - 1)],
                                          static_cast<std::uint8_t>(1 + nu[mask & ~touching[low]]));
    }
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        const auto edges_here = static_cast<std::uint64_t>(std::popcount(mask));
        for (std::size_t mu = nu[mask]; mu < best.size(); ++mu) best[mu] = std::max(best[mu], edges_here);
    }
    return best;
}

/// Upper bound on |N(c)| for a column of weight d+s:
/// max{C(2s-1,2), C(d+s,2) - C(d+1,2)}. The first term wins exactly when
/// 3s > 2d+2; at 3s == 2d+2 both agree.
inline std::uint64_t nonprivate_pair_cap(std::uint64_t d, std::uint64_t s) {
    if (s < 1) throw ParameterError("nonprivate_pair_cap requires s >= 1");
    const auto spread = choose(d + s, 2) - choose(d + 1, 2);
    const auto dense = choose(2 * s - 1, 2);
    if (3 * s == 2 * d + 2 && spread != dense)
        throw std::logic_error("nonprivate_pair_cap: branches disagree at the boundary");
    return std::max(spread, dense);
}

struct NonprivateBoundOptions {
    bool allow_out_of_range = false;  // evaluate columns with s >= d, flagged
    bool check_matrix = true;         // verify d-disjunct and isolated-free first
};

struct NonprivateBoundReport {
    ColumnId column = 0;
    std::size_t weight = 0;
    std::size_t s = 0;
    std::size_t private_count = 0;
    std::size_t nonprivate_count = 0;
    std::size_t matching = 0;
    std::uint64_t bound = 0;
    bool in_range = true;        // 1 <= s <= d-1
    bool count_ok = false;       // |N(c)| <= bound
    bool matching_ok = false;    // nu(N(c)) <= s-1

    bool holds() const noexcept { return count_ok && matching_ok; }
};

namespace detail {

inline void require_disjunct_isolated_free(const BinaryMatrix& m, std::size_t d) {
    if (!is_d_disjunct(m, d).is_disjunct)
        throw ParameterError("precondition: matrix is not " + std::to_string(d) + "-disjunct");
    if (!find_isolated_columns(m).empty())
        throw ParameterError("precondition: matrix has isolated columns");
}

inline NonprivateBoundReport nonprivate_report(const BinaryMatrix& m, ColumnId j, std::size_t d,
                                               bool allow_out_of_range) {
    NonprivateBoundReport r;
    r.column = j;
    r.weight = m.column(j).weight();
    if (r.weight <= d)
        throw ParameterError("precondition: column " + std::to_string(j) + " has weight " +
                             std::to_string(r.weight) + " <= d");
    r.s = r.weight - d;
    r.in_range = r.s <= d - 1;
    if (!r.in_range && !allow_out_of_range)
        throw ParameterError("precondition: column " + std::to_string(j) + " has s = " +
                             std::to_string(r.s) + " outside 1 <= s <= d-1");

    const auto pc = classify_pairs(m, j);
    r.private_count = pc.private_pairs.size();
    r.nonprivate_count = pc.nonprivate_pairs.size();
    r.matching = matching_number(nonprivate_pair_graph(m, pc));
    const std::uint64_t mu = r.s - 1;
    r.bound = r.weight >= 2 * mu + 1 ? erdos_gallai_bound(r.weight, mu) : choose(r.weight, 2);
    r.count_ok = r.nonprivate_count <= r.bound;
    r.matching_ok = r.matching <= mu;
    return r;
}

}  // namespace detail

/// Check |N(c_j)| <= m(d+s,2,s-1) and nu(N(c_j)) <= s-1 on one column.
inline NonprivateBoundReport verify_nonprivate_bound(const BinaryMatrix& m, ColumnId j, std::size_t d,
                                                     NonprivateBoundOptions opt = {}) {
    if (d < 1) throw ParameterError("d must be at least 1");
    m.column(j);
    if (opt.check_matrix) detail::require_disjunct_isolated_free(m, d);
    return detail::nonprivate_report(m, j, d, opt.allow_out_of_range);
}

/// The same check over every eligible column, matrix preconditions tested
/// once. Columns outside the s-range are skipped unless allowed.
inline std::vector<NonprivateBoundReport> verify_nonprivate_bound_all(const BinaryMatrix& m,
                                                                      std::size_t d,
                                                                      NonprivateBoundOptions opt = {}) {
    if (d < 1) throw ParameterError("d must be at least 1");
    if (opt.check_matrix) detail::require_disjunct_isolated_free(m, d);
    std::vector<NonprivateBoundReport> out;
    for (ColumnId j = 0; j < m.cols(); ++j) {
        const auto w = m.column(j).weight();
        if (w <= d) continue;
        if (w - d > d - 1 && !opt.allow_out_of_range) continue;
        out.push_back(detail::nonprivate_report(m, j, d, opt.allow_out_of_range));
    }
    return out;
}

struct PairBudget {
    std::uint64_t sum = 0;     // total private pairs over all columns
    std::uint64_t budget = 0;  // C(t,2)
    bool ok = true;
};

/// Private pairs of distinct columns are distinct, so their total never
/// exceeds C(t,2).
inline PairBudget private_pair_budget(const BinaryMatrix& m) {
    PairBudget b;
    for (ColumnId j = 0; j < m.cols(); ++j) b.sum += count_private_pairs(m, j);
    b.budget = choose(m.rows(), 2);
    b.ok = b.sum <= b.budget;
    return b;
}

}  // namespace disjunct
