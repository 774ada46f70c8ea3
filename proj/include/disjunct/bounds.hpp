#pragma once

// Lower bounds on the number of tests of a d-disjunct matrix, and replays
// of their counting arguments on concrete matrices.
//
// T(d) is the least t for which some t x n d-disjunct matrix has n > t.
// Known: T(d) >= C(d+2,2), T(d) >= kappa*d^2 with kappa = (15+sqrt(33))/24,
// and T(d) <= (d+1)^2 whenever d+1 is a prime power (affine planes).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "disjunct/combinatorics.hpp"
#include "disjunct/disjunctness.hpp"
#include "disjunct/errors.hpp"
#include "disjunct/matrix.hpp"
#include "disjunct/private_subsets.hpp"

namespace disjunct {

/// kappa = (15 + sqrt 33) / 24, the larger root of 12k^2 - 15k + 4 = 0.
inline double kappa() { return (15.0 + std::sqrt(33.0)) / 24.0; }

/// floor(kappa * num / den), exact. kappa*x is irrational for every
/// rational x != 0, so the ceiling is this plus one.
inline std::uint64_t floor_kappa_times(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw ParameterError("floor_kappa_times: zero denominator");
    if (num == 0) return 0;
    using i128 = __int128;
    // m <= kappa*num/den  <=>  24*den*m - 15*num <= sqrt(33)*num
    auto within = [&](std::uint64_t m) {
        const i128 lhs = i128(24) * den * m - i128(15) * num;
        return lhs <= 0 || lhs * lhs <= i128(33) * num * num;
    };
    auto guess = static_cast<std::uint64_t>(std::floor(static_cast<long double>(kappa()) * num / den));
    std::uint64_t m = guess > 2 ? guess - 2 : 0;
    while (within(m + 1)) ++m;
    while (m > 0 && !within(m)) --m;
    return m;
}

inline std::uint64_t ceil_kappa_d2(std::uint64_t d) {
    return d == 0 ? 0 : floor_kappa_times(d * d, 1) + 1;
}

struct BoundReport {
    std::size_t d = 0;
    std::uint64_t bassalygo = 0;    // C(d+2,2)
    double kappa_real = 0;          // kappa * d^2
    std::uint64_t kappa_bound = 0;  // ceil(kappa * d^2)
    std::uint64_t conjectured = 0;  // (d+1)^2
    double ratio = 0;               // kappa_bound / d^2

    /// Strongest proven lower bound on T(d).
    std::uint64_t best() const noexcept { return std::max(bassalygo, kappa_bound); }
};

inline BoundReport lower_bounds(std::size_t d) {
    if (d < 1) throw ParameterError("d must be at least 1");
    BoundReport r;
    r.d = d;
    r.bassalygo = choose(d + 2, 2);
    r.kappa_real = kappa() * static_cast<double>(d) * static_cast<double>(d);
    r.kappa_bound = ceil_kappa_d2(d);
    r.conjectured = static_cast<std::uint64_t>(d + 1) * (d + 1);
    r.ratio = static_cast<double>(r.kappa_bound) / (static_cast<double>(d) * static_cast<double>(d));
    return r;
}

enum class BoundSource { item_count, bassalygo, kappa };

inline const char* to_string(BoundSource s) {
    switch (s) {
        case BoundSource::item_count: return "n";
        case BoundSource::bassalygo: return "bassalygo";
        case BoundSource::kappa: return "kappa";
    }
    return "?";
}

struct RowBound {
    std::uint64_t value = 0;
    BoundSource source = BoundSource::item_count;
};

/// Lower bound on t(d,n): max over min{C(d+2,2), n} and min{ceil(kappa d^2), n}.
inline RowBound t_dn_lower_bound(std::size_t d, std::uint64_t n) {
    if (n < 1) throw ParameterError("n must be at least 1");
    const auto r = lower_bounds(d);
    const auto best = r.best();
    if (n <= best) return {n, BoundSource::item_count};
    return {best, r.kappa_bound > r.bassalygo ? BoundSource::kappa : BoundSource::bassalygo};
}

/// Replay of the constant-weight argument: with every column of weight d+1,
/// no isolated columns and n > t, some row lies in at least d+2 columns,
/// those columns pairwise meet only in that row, and their union has
/// 1 + |C(i0)|*d >= (d+1)^2 rows.
struct ConstantWeightCertificate {
    RowId row = 0;                     // i0, the busiest row (lowest on ties)
    std::size_t degree = 0;            // |C(i0)|
    std::size_t required_degree = 0;   // ceil((d+1)(t+1)/t)
    bool pairwise_single = false;      // c & c' == {i0} for distinct c, c' in C(i0)
    std::size_t union_weight = 0;
    std::size_t predicted_union = 0;   // 1 + degree*d
    std::uint64_t target = 0;          // (d+1)^2
    bool fits = false;                 // t >= union_weight

    bool holds() const noexcept {
        return degree >= required_degree && pairwise_single && union_weight == predicted_union &&
               union_weight >= target && fits;
    }
};

inline ConstantWeightCertificate constant_weight_certificate(const BinaryMatrix& m, std::size_t d) {
    if (d < 1) throw ParameterError("d must be at least 1");
    if (constant_column_weight(m) != static_cast<long>(d + 1))
        throw ParameterError("precondition: column weights are not all d+1");
    if (!find_isolated_columns(m).empty()) throw ParameterError("precondition: matrix has isolated columns");
    if (m.cols() <= m.rows()) throw ParameterError("precondition: n must exceed t");

    const std::size_t t = m.rows();
    ConstantWeightCertificate c;
    for (RowId i = 0; i < t; ++i)
        if (m.row(i).size() > c.degree) {
            c.degree = m.row(i).size();
            c.row = i;
        }
    c.required_degree = ((d + 1) * (t + 1) + t - 1) / t;

    const auto members = m.row(c.row).cols().indices();
    BitSet only_row(t, {c.row});
    BitSet acc(t);
    c.pairwise_single = true;
    for (std::size_t a = 0; a < members.size(); ++a) {
        acc |= m.column(members[a]).rows();
        for (std::size_t b = a + 1; b < members.size(); ++b)
            if ((m.column(members[a]).rows() & m.column(members[b]).rows()) != only_row)
                c.pairwise_single = false;
    }
    c.union_weight = acc.count();
    c.predicted_union = 1 + c.degree * d;
    c.target = static_cast<std::uint64_t>(d + 1) * (d + 1);
    c.fits = t >= c.union_weight;
    return c;
}

struct ColumnPairAudit {
    ColumnId column = 0;
    std::size_t weight = 0;
    std::size_t s = 0;
    std::size_t private_count = 0;
    bool light = false;         // weight <= floor(2 kappa d)
    bool spread_branch = false; // 3*weight <= 5d + 2
    bool in_range = false;      // 1 <= s <= d-1
    bool meets_half_kappa = false;  // |P(c)| >= kappa d^2 / 2
    bool meets_choose = false;      // |P(c)| >= C(d+1,2)
};

/// Column-by-column replay of the private-pair counting bound.
struct PrivatePairAudit {
    std::size_t d = 0, t = 0, n = 0;
    std::vector<ColumnPairAudit> columns;
    std::size_t weight_threshold = 0;  // floor(2 kappa d)
    bool all_light = false;
    bool light_columns_ok = false;     // every light column meets kappa d^2/2
    std::uint64_t private_sum = 0;
    std::uint64_t budget = 0;          // C(t,2)
    bool budget_ok = false;
    std::size_t min_private = 0;
    std::uint64_t implied_t = 0;       // least t' with C(t',2) >= (t'+1) * min_private
    bool implied_ok = false;           // t >= implied_t
    bool capped_weights = false;       // every weight <= floor(5d/3)
    bool capped_columns_ok = false;    // every column meets C(d+1,2)
    bool exceeds_d2_d_1 = false;       // t > d^2 + d + 1
};

inline PrivatePairAudit private_pair_audit(const BinaryMatrix& m, std::size_t d) {
    if (d < 1) throw ParameterError("d must be at least 1");
    if (m.cols() <= m.rows()) throw ParameterError("precondition: n must exceed t");
    detail::require_disjunct_isolated_free(m, d);

    PrivatePairAudit a;
    a.d = d;
    a.t = m.rows();
    a.n = m.cols();
    a.weight_threshold = floor_kappa_times(2 * d, 1);
    const auto half_kappa = ceil_kappa_d2(d);  // 2|P| >= kappa d^2  <=>  2|P| >= ceil(kappa d^2)
    const auto choose_floor = choose(d + 1, 2);

    a.all_light = a.light_columns_ok = a.capped_weights = a.capped_columns_ok = true;
    a.min_private = ~std::size_t{0};
    for (ColumnId j = 0; j < m.cols(); ++j) {
        ColumnPairAudit c;
        c.column = j;
        c.weight = m.column(j).weight();
        c.s = c.weight > d ? c.weight - d : 0;
        c.private_count = count_private_pairs(m, j);
        c.light = c.weight <= a.weight_threshold;
        c.spread_branch = 3 * c.weight <= 5 * d + 2;
        c.in_range = c.s >= 1 && c.s <= d - 1;
        c.meets_half_kappa = 2 * c.private_count >= half_kappa;
        c.meets_choose = c.private_count >= choose_floor;

        a.all_light = a.all_light && c.light;
        if (c.light) a.light_columns_ok = a.light_columns_ok && c.meets_half_kappa;
        a.capped_weights = a.capped_weights && c.weight <= 5 * d / 3;
        a.capped_columns_ok = a.capped_columns_ok && c.meets_choose;
        a.private_sum += c.private_count;
        a.min_private = std::min(a.min_private, c.private_count);
        a.columns.push_back(c);
    }
    a.budget = choose(a.t, 2);
    a.budget_ok = a.private_sum <= a.budget;
    a.implied_t = 1;
    while (choose(a.implied_t, 2) < (a.implied_t + 1) * static_cast<std::uint64_t>(a.min_private))
        ++a.implied_t;
    a.implied_ok = a.t >= a.implied_t;
    a.exceeds_d2_d_1 = a.t > static_cast<std::size_t>(d) * d + d + 1;
    return a;
}

}  // namespace disjunct
