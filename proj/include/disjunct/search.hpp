#pragma once

// Exhaustive search for the threshold T(d): the least t admitting a
// t x (t+1) d-disjunct matrix.
//
// Columns are bitmasks over at most max_search_rows rows, chosen in
// increasing (weight, mask) order so each family is generated once up to
// column order. Row symmetry is broken by fixing the first (lightest)
// column to rows {0, ..., w-1}.
//
// If no smaller t admits a solution, every solution at t has no isolated
// column and no row covered fewer than twice: peeling an isolated column
// (or deleting an empty row) would leave a smaller one. The search then
// only considers columns of weight >= d+1 and checks row degrees at the
// leaves.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "disjunct/combinatorics.hpp"
#include "disjunct/constructions.hpp"
#include "disjunct/disjunctness.hpp"
#include "disjunct/errors.hpp"
#include "disjunct/matrix.hpp"

namespace disjunct {

inline constexpr std::size_t max_search_rows = 20;

struct SearchCertificate {
    std::size_t d = 0;
    std::size_t t = 0;
    bool found = false;
    std::optional<BinaryMatrix> matrix;  // t x (t+1), d-disjunct, when found
    bool exhausted = false;              // nonexistence proven (found == false only)
    std::uint64_t nodes = 0;             // search nodes spent at this t
    std::string method;                  // "search", "padded", "affine", or "none"
};

namespace detail {

using Mask = std::uint32_t;

// Is `target` inside the union of at most `depth` members of `family`,
// skipping index `skip`?
inline bool mask_covered(Mask target, const std::vector<Mask>& family, std::size_t skip,
                         std::size_t depth) {
    if (target == 0) return true;
    if (depth == 0) return false;
    const Mask low = target & (~target + 1);
    for (std::size_t k = 0; k < family.size(); ++k) {
        if (k == skip || !(family[k] & low)) continue;
        if (mask_covered(target & ~family[k], family, skip, depth - 1)) return true;
    }
    return false;
}

class ThresholdSearch {
public:
    ThresholdSearch(std::size_t d, std::size_t t, bool isolated_free, std::uint64_t budget)
        : d_(d), t_(t), isolated_free_(isolated_free), budget_(budget) {
        const std::size_t wmin = isolated_free ? d + 1 : 1;
        for (std::size_t w = wmin; w < t; ++w)
            for (Mask m = 0; m < (Mask{1} << t); ++m)
                if (static_cast<std::size_t>(std::popcount(m)) == w) candidates_.push_back(m);
    }

    /// nullopt when the node budget ran out.
    std::optional<bool> run() {
        const std::size_t need = t_ + 1;
        for (std::size_t i = 0; i < candidates_.size(); ++i) {
            const Mask m = candidates_[i];
            if (m != (Mask{1} << std::popcount(m)) - 1) continue;  // first column is {0..w-1}
            family_.assign(1, m);
            auto r = extend(i + 1, need);
            if (!r) return std::nullopt;
            if (*r) return true;
        }
        return false;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }
    const std::vector<Mask>& family() const noexcept { return family_; }

private:
    bool keeps_disjunct(Mask x) const {
        if (mask_covered(x, family_, family_.size(), d_)) return false;
        // Only covers that use x are new.
        for (std::size_t y = 0; y < family_.size(); ++y)
            if (mask_covered(family_[y] & ~x, family_, y, d_ - 1)) return false;
        return true;
    }

    bool degrees_ok() const {
        for (std::size_t r = 0; r < t_; ++r) {
            std::size_t deg = 0;
            for (auto m : family_) deg += (m >> r) & 1u;
            if (deg < 2) return false;
        }
        return true;
    }

    std::optional<bool> extend(std::size_t from, std::size_t need) {
        if (++nodes_ > budget_) return std::nullopt;
        if (family_.size() == need) return !isolated_free_ || degrees_ok();
        if (candidates_.size() - from < need - family_.size()) return false;
        for (std::size_t i = from; i < candidates_.size(); ++i) {
            if (candidates_.size() - i < need - family_.size()) break;
            const Mask x = candidates_[i];
            if (!keeps_disjunct(x)) continue;
            family_.push_back(x);
            auto r = extend(i + 1, need);
            if (!r || *r) return r;
            family_.pop_back();
        }
        return false;
    }

    std::size_t d_, t_;
    bool isolated_free_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Mask> candidates_;
    std::vector<Mask> family_;
};

inline BinaryMatrix masks_to_matrix(std::size_t t, const std::vector<Mask>& family) {
    std::vector<std::vector<RowId>> cols;
    for (auto m : family) {
        std::vector<RowId> rows;
        for (std::size_t r = 0; r < t; ++r)
            if ((m >> r) & 1u) rows.push_back(r);
        cols.push_back(std::move(rows));
    }
    return BinaryMatrix::from_columns(t, cols);
}

// Grow a t0 x n0 matrix to t rows by adding (t - t0) private row/column
// pairs, then keep the first t+1 columns.
inline BinaryMatrix pad_to(const BinaryMatrix& base, std::size_t t) {
    std::vector<ColumnSupport> cols;
    for (const auto& c : base.columns()) {
        BitSet s(t);
        c.rows().for_each([&](RowId i) { s.set(i); });
        cols.emplace_back(std::move(s));
    }
    for (std::size_t r = base.rows(); r < t; ++r) cols.emplace_back(BitSet(t, {r}));
    cols.resize(t + 1);
    return BinaryMatrix(t, std::move(cols));
}

}  // namespace detail

/// Certificates for t = 1..t_max. `node_budget` bounds the search at each t.
/// When the budget runs out the certificate falls back to padding a smaller
/// solution or an affine plane of prime order q >= d+1 with q^2 <= t.
inline std::vector<SearchCertificate> exhaustive_threshold(std::size_t d, std::size_t t_max,
                                                           std::uint64_t node_budget) {
    if (d < 1) throw ParameterError("d must be at least 1");
    std::vector<SearchCertificate> out;
    bool none_below = true;
    std::optional<BinaryMatrix> smallest;

    for (std::size_t t = 1; t <= t_max; ++t) {
        SearchCertificate cert;
        cert.d = d;
        cert.t = t;
        cert.method = "none";

        if (t <= max_search_rows) {
            detail::ThresholdSearch search(d, t, none_below, node_budget);
            auto r = search.run();
            cert.nodes = search.nodes();
            if (r && *r) {
                cert.found = true;
                cert.matrix = detail::masks_to_matrix(t, search.family());
                cert.method = "search";
            } else if (r) {
                cert.exhausted = true;
            }
        }

        if (!cert.found && !cert.exhausted) {
            if (smallest) {
                cert.found = true;
                cert.matrix = detail::pad_to(*smallest, t);
                cert.method = "padded";
            } else {
                for (std::size_t q = d + 1; q * q <= t; ++q) {
                    if (!is_prime(q)) continue;
                    cert.found = true;
                    cert.matrix = detail::pad_to(affine_plane_matrix(q), t);
                    cert.method = "affine";
                    break;
                }
            }
        }

        if (cert.found) {
            if (cert.matrix->cols() != t + 1 || !is_d_disjunct(*cert.matrix, d).is_disjunct)
                throw std::logic_error("search certificate failed its self-check");
            if (!smallest) smallest = *cert.matrix;
        }
        none_below = none_below && cert.exhausted;
        out.push_back(std::move(cert));
    }
    return out;
}

}  // namespace disjunct
