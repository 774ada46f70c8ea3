#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "disjunct/bitset.hpp"
#include "disjunct/errors.hpp"

namespace disjunct {

using RowId = std::size_t;
using ColumnId = std::size_t;

/// The set of rows (tests) in which one column (item) participates.
class ColumnSupport {
public:
    ColumnSupport() = default;
    explicit ColumnSupport(BitSet rows) : rows_(std::move(rows)) {}
    ColumnSupport(std::size_t t, std::initializer_list<RowId> rows) : rows_(t, rows) {}

    const BitSet& rows() const noexcept { return rows_; }
    std::size_t weight() const noexcept { return rows_.count(); }
    std::size_t row_count() const noexcept { return rows_.universe(); }
    bool contains(RowId i) const noexcept { return i < rows_.universe() && rows_.test(i); }

    friend bool operator==(const ColumnSupport&, const ColumnSupport&) = default;

private:
    BitSet rows_;
};

/// The set of columns having a 1 in one row.
class RowSupport {
public:
    RowSupport() = default;
    explicit RowSupport(BitSet cols) : cols_(std::move(cols)) {}

    const BitSet& cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return cols_.count(); }

    friend bool operator==(const RowSupport&, const RowSupport&) = default;

private:
    BitSet cols_;
};

/// Union of supports. All inputs must share the same row count; the empty
/// list yields the empty support over zero rows.
inline ColumnSupport boolean_sum(std::span<const ColumnSupport> cols) {
    if (cols.empty()) return ColumnSupport{};
    BitSet acc(cols.front().row_count());
    for (const auto& c : cols) {
        if (c.row_count() != acc.universe())
            throw ParameterError("boolean_sum: columns have different row counts");
        acc |= c.rows();
    }
    return ColumnSupport(std::move(acc));
}

inline ColumnSupport boolean_sum(std::initializer_list<ColumnSupport> cols) {
    return boolean_sum(std::span<const ColumnSupport>(cols.begin(), cols.size()));
}

/// True iff b's support is a subset of a's support.
inline bool contains(const ColumnSupport& a, const ColumnSupport& b) {
    if (a.row_count() == b.row_count()) return b.rows().is_subset_of(a.rows());
    // Only reachable with the zero-row result of boolean_sum({}).
    bool ok = true;
    b.rows().for_each([&](RowId i) { ok = ok && a.contains(i); });
    return ok;
}

/// A t x n binary incidence matrix stored as n column supports.
///
/// Immutable after construction. Row supports are built alongside the
/// columns so all queries are const and thread-safe. Degenerate shapes
/// (zero rows or zero columns) can arise from deletion operations and are
/// representable; the .dmat reader rejects them.
class BinaryMatrix {
public:
    BinaryMatrix() = default;

    BinaryMatrix(std::size_t t, std::vector<ColumnSupport> columns)
        : t_(t), columns_(std::move(columns)) {
        for (const auto& c : columns_)
            if (c.row_count() != t_)
                throw ParameterError("column support does not match row count");
        build_rows();
    }

    /// Build from explicit row-index lists, one per column.
    static BinaryMatrix from_columns(std::size_t t,
                                     const std::vector<std::vector<RowId>>& cols) {
        std::vector<ColumnSupport> supports;
        supports.reserve(cols.size());
        for (const auto& rows : cols) {
            BitSet s(t);
            for (auto r : rows) {
                if (r >= t) throw ParameterError("row index out of range");
                s.set(r);
            }
            supports.emplace_back(std::move(s));
        }
        return BinaryMatrix(t, std::move(supports));
    }

    /// Build from row strings of '0'/'1', e.g. {"10", "01"}.
    static BinaryMatrix from_rows(const std::vector<std::string_view>& rows) {
        if (rows.empty()) throw ParameterError("from_rows: no rows");
        const std::size_t n = rows.front().size();
        std::vector<BitSet> cols(n, BitSet(rows.size()));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != n) throw ParameterError("from_rows: ragged rows");
            for (std::size_t j = 0; j < n; ++j) {
                if (rows[i][j] == '1') cols[j].set(i);
                else if (rows[i][j] != '0') throw ParameterError("from_rows: invalid character");
            }
        }
        std::vector<ColumnSupport> supports;
        supports.reserve(n);
        for (auto& c : cols) supports.emplace_back(std::move(c));
        return BinaryMatrix(rows.size(), std::move(supports));
    }

    std::size_t rows() const noexcept { return t_; }
    std::size_t cols() const noexcept { return columns_.size(); }

    const ColumnSupport& column(ColumnId j) const {
        if (j >= columns_.size()) throw ParameterError("column index out of range");
        return columns_[j];
    }
    const RowSupport& row(RowId i) const {
        if (i >= rows_.size()) throw ParameterError("row index out of range");
        return rows_[i];
    }
    std::span<const ColumnSupport> columns() const noexcept { return columns_; }
    std::span<const RowSupport> row_supports() const noexcept { return rows_; }

    bool at(RowId i, ColumnId j) const { return column(j).contains(i); }

    /// Total number of 1 entries.
    std::size_t ones() const noexcept {
        std::size_t s = 0;
        for (const auto& c : columns_) s += c.weight();
        return s;
    }

    /// Keep the listed columns (in the given order) and all rows.
    BinaryMatrix select_columns(std::span<const ColumnId> keep) const {
        std::vector<ColumnSupport> out;
        out.reserve(keep.size());
        for (auto j : keep) out.push_back(column(j));
        return BinaryMatrix(t_, std::move(out));
    }

    /// Drop the given rows and columns; survivors keep their relative order.
    BinaryMatrix without(const BitSet& drop_rows, const BitSet& drop_cols) const {
        std::vector<RowId> row_map(t_, t_);
        std::size_t t2 = 0;
        for (RowId i = 0; i < t_; ++i)
            if (!(i < drop_rows.universe() && drop_rows.test(i))) row_map[i] = t2++;
        std::vector<ColumnSupport> out;
        for (ColumnId j = 0; j < columns_.size(); ++j) {
            if (j < drop_cols.universe() && drop_cols.test(j)) continue;
            BitSet s(t2);
            columns_[j].rows().for_each([&](RowId i) {
                if (row_map[i] != t_) s.set(row_map[i]);
            });
            out.emplace_back(std::move(s));
        }
        return BinaryMatrix(t2, std::move(out));
    }

    friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
        return a.t_ == b.t_ && a.columns_ == b.columns_;
    }

private:
    void build_rows() {
        rows_.assign(t_, RowSupport{});
        std::vector<BitSet> acc(t_, BitSet(columns_.size()));
        for (ColumnId j = 0; j < columns_.size(); ++j)
            columns_[j].rows().for_each([&](RowId i) { acc[i].set(j); });
        for (RowId i = 0; i < t_; ++i) rows_[i] = RowSupport(std::move(acc[i]));
    }

    std::size_t t_ = 0;
    std::vector<ColumnSupport> columns_;
    std::vector<RowSupport> rows_;
};

/// Columns with no 1 entries.
inline std::vector<ColumnId> find_empty_columns(const BinaryMatrix& m) {
    std::vector<ColumnId> out;
    for (ColumnId j = 0; j < m.cols(); ++j)
        if (m.column(j).weight() == 0) out.push_back(j);
    return out;
}

/// Pairs (first, later) of identical columns; each later column is listed
/// once against its lowest-indexed twin.
inline std::vector<std::pair<ColumnId, ColumnId>> find_duplicate_columns(const BinaryMatrix& m) {
    std::vector<std::pair<ColumnId, ColumnId>> out;
    for (ColumnId b = 1; b < m.cols(); ++b)
        for (ColumnId a = 0; a < b; ++a)
            if (m.column(a) == m.column(b)) {
                out.emplace_back(a, b);
                break;
            }
    return out;
}

/// Every column has the same weight w; returns w, or -1 otherwise.
inline long constant_column_weight(const BinaryMatrix& m) {
    if (m.cols() == 0) return -1;
    const auto w = m.column(0).weight();
    for (const auto& c : m.columns())
        if (c.weight() != w) return -1;
    return static_cast<long>(w);
}

}  // namespace disjunct
