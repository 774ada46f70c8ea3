#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "disjunct/bitset.hpp"
#include "disjunct/errors.hpp"
#include "disjunct/matrix.hpp"

namespace disjunct {

/// A column together with at most d other columns whose union contains it.
struct CoverWitness {
    ColumnId column = 0;
    std::vector<ColumnId> cover;
};

struct DisjunctVerdict {
    bool is_disjunct = true;
    std::optional<CoverWitness> witness;  // present iff !is_disjunct
    bool vacuous = false;                 // d >= n: no d columns plus another exist
};

namespace detail {

// Exact decision: can `target` (a set over its own local row indices) be
// covered by at most `depth` of `traces`? Traces are pairwise
// non-dominated. Branches on the uncovered row with the fewest covering
// traces, lowest row on ties.
class CoverSearch {
public:
    CoverSearch(std::size_t width, std::vector<BitSet> traces)
        : width_(width), traces_(std::move(traces)) {}

    bool run(const BitSet& uncovered, std::size_t depth) {
        chosen_.clear();
        return step(uncovered, depth);
    }

    const std::vector<std::size_t>& chosen() const noexcept { return chosen_; }

private:
    bool step(const BitSet& uncovered, std::size_t depth) {
        const std::size_t need = uncovered.count();
        if (need == 0) return true;
        if (depth == 0) return false;

        std::size_t best_gain = 0;
        for (const auto& tr : traces_) best_gain = std::max(best_gain, tr.intersection_count(uncovered));
        if (best_gain * depth < need) return false;

        std::size_t pivot = width_;
        std::size_t pivot_deg = traces_.size() + 1;
        uncovered.for_each([&](std::size_t r) {
            std::size_t deg = 0;
            for (const auto& tr : traces_) deg += tr.test(r);
            if (deg < pivot_deg) {
                pivot_deg = deg;
                pivot = r;
            }
        });
        if (pivot_deg == 0) return false;

        std::vector<std::size_t> options;
        for (std::size_t k = 0; k < traces_.size(); ++k)
            if (traces_[k].test(pivot)) options.push_back(k);
        std::stable_sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) {
            return traces_[a].intersection_count(uncovered) > traces_[b].intersection_count(uncovered);
        });

        for (auto k : options) {
            chosen_.push_back(k);
            if (step(uncovered - traces_[k], depth - 1)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    std::size_t width_;
    std::vector<BitSet> traces_;
    std::vector<std::size_t> chosen_;
};

}  // namespace detail

/// Find at most `d` columns other than `c` whose union contains column c.
/// Returns their ids (ascending) or nullopt when no such cover exists.
inline std::optional<std::vector<ColumnId>> find_cover(const BinaryMatrix& m, ColumnId c,
                                                       std::size_t d) {
    const auto& target = m.column(c).rows();
    const std::vector<RowId> local = target.indices();
    const std::size_t w = local.size();
    if (w == 0) return std::vector<ColumnId>{};

    // Trace of every other column on c, re-indexed to 0..w-1.
    struct Trace {
        BitSet rows;
        ColumnId owner;
        std::size_t size;
    };
    std::vector<Trace> traces;
    for (ColumnId j = 0; j < m.cols(); ++j) {
        if (j == c) continue;
        const auto& other = m.column(j).rows();
        if (!other.intersects(target)) continue;
        BitSet tr(w);
        for (std::size_t k = 0; k < w; ++k)
            if (other.test(local[k])) tr.set(k);
        auto sz = tr.count();
        traces.push_back({std::move(tr), j, sz});
    }

    // Keep one representative per maximal trace: larger first, then lowest owner.
    std::stable_sort(traces.begin(), traces.end(),
                     [](const Trace& a, const Trace& b) { return a.size > b.size; });
    std::vector<Trace> kept;
    for (auto& tr : traces) {
        bool dominated = std::any_of(kept.begin(), kept.end(),
                                     [&](const Trace& k) { return tr.rows.is_subset_of(k.rows); });
        if (!dominated) kept.push_back(std::move(tr));
    }

    std::vector<BitSet> rows;
    rows.reserve(kept.size());
    for (const auto& k : kept) rows.push_back(k.rows);
    detail::CoverSearch search(w, std::move(rows));
    if (!search.run(BitSet::full(w), d)) return std::nullopt;

    std::vector<ColumnId> cover;
    for (auto k : search.chosen()) cover.push_back(kept[k].owner);
    std::sort(cover.begin(), cover.end());
    return cover;
}

/// Exact d-disjunctness test. The witness, when present, names the
/// lowest-indexed column that is covered.
inline DisjunctVerdict is_d_disjunct(const BinaryMatrix& m, std::size_t d) {
    if (d < 1) throw ParameterError("d must be at least 1");
    DisjunctVerdict v;
    if (d >= m.cols()) {
        v.vacuous = true;
        return v;
    }
    for (ColumnId c = 0; c < m.cols(); ++c) {
        if (auto cover = find_cover(m, c, d)) {
            v.is_disjunct = false;
            v.witness = CoverWitness{c, std::move(*cover)};
            return v;
        }
    }
    return v;
}

/// Largest d >= 0 with is_d_disjunct(m, d); 0 when some column lies inside
/// another (or the matrix has a single column).
inline std::size_t max_disjunct_order(const BinaryMatrix& m) {
    std::size_t best = 0;
    for (std::size_t d = 1; d + 1 <= m.cols(); ++d) {
        if (!is_d_disjunct(m, d).is_disjunct) break;
        best = d;
    }
    return best;
}

/// Columns owning at least one row that no other column touches.
inline std::vector<ColumnId> find_isolated_columns(const BinaryMatrix& m) {
    BitSet isolated(m.cols());
    for (const auto& r : m.row_supports())
        if (r.size() == 1) isolated.set(r.cols().first());
    return isolated.indices();
}

struct PeelResult {
    BinaryMatrix reduced;
    ColumnId removed_column = 0;
    std::vector<RowId> removed_rows;
};

/// Remove isolated column j together with its private rows.
inline PeelResult peel_isolated(const BinaryMatrix& m, ColumnId j) {
    const auto& col = m.column(j);
    BitSet private_rows(m.rows());
    col.rows().for_each([&](RowId i) {
        if (m.row(i).size() == 1) private_rows.set(i);
    });
    if (private_rows.none()) throw ParameterError("column " + std::to_string(j) + " is not isolated");
    BitSet drop_col(m.cols());
    drop_col.set(j);
    return PeelResult{m.without(private_rows, drop_col), j, private_rows.indices()};
}

/// Repeatedly peel the lowest isolated column until none remain.
inline BinaryMatrix peel_to_fixpoint(BinaryMatrix m) {
    while (m.cols() > 0) {
        auto iso = find_isolated_columns(m);
        if (iso.empty()) break;
        m = peel_isolated(m, iso.front()).reduced;
    }
    return m;
}

/// Remove column j and every row it touches. The result is
/// (t - |c_j|) x (n - 1) with survivor order preserved.
inline BinaryMatrix delete_column_and_rows(const BinaryMatrix& m, ColumnId j) {
    if (m.cols() < 2) throw ParameterError("delete_column_and_rows needs at least two columns");
    const auto& col = m.column(j);
    BitSet drop_col(m.cols());
    drop_col.set(j);
    return m.without(col.rows(), drop_col);
}

}  // namespace disjunct
