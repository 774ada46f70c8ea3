#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "disjunct/bitset.hpp"
#include "disjunct/combinatorics.hpp"
#include "disjunct/errors.hpp"
#include "disjunct/matrix.hpp"

namespace disjunct {

/// Test results: bit i is set iff test i contained a positive item.
struct OutcomeVector {
    BitSet bits;

    static OutcomeVector parse(std::string_view s) {
        OutcomeVector o{BitSet(s.size())};
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') o.bits.set(i);
            else if (s[i] != '0') throw ParameterError("outcome string may contain only 0 and 1");
        }
        return o;
    }

    std::string str() const {
        std::string s(bits.universe(), '0');
        bits.for_each([&](std::size_t i) { s[i] = '1'; });
        return s;
    }

    friend bool operator==(const OutcomeVector&, const OutcomeVector&) = default;
};

inline OutcomeVector outcomes(const BinaryMatrix& m, std::span<const ColumnId> positives) {
    OutcomeVector o{BitSet(m.rows())};
    for (auto j : positives) {
        if (j >= m.cols()) throw ParameterError("positive item " + std::to_string(j) + " out of range");
        o.bits |= m.column(j).rows();
    }
    return o;
}

/// Every item that appears in no negative test. Not truncated to d.
inline std::vector<ColumnId> naive_decode(const BinaryMatrix& m, const OutcomeVector& o) {
    if (o.bits.universe() != m.rows())
        throw ParameterError("outcome length " + std::to_string(o.bits.universe()) +
                             " does not match t = " + std::to_string(m.rows()));
    std::vector<ColumnId> out;
    for (ColumnId j = 0; j < m.cols(); ++j)
        if (m.column(j).rows().is_subset_of(o.bits)) out.push_back(j);
    return out;
}

struct IdentificationResult {
    bool identifies = true;
    std::uint64_t cases = 0;                 // positive sets examined
    std::vector<ColumnId> failing_set;       // first P whose decode != P
    std::vector<ColumnId> decoded;           // what the decoder returned for it
};

inline constexpr std::uint64_t default_case_budget = 10'000'000;

/// Number of positive sets of size at most d among n items.
inline std::uint64_t identification_cases(std::size_t n, std::size_t d) {
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= d && k <= n; ++k) {
        const auto c = choose(n, k);
        if (total > ~std::uint64_t{0} - c) return ~std::uint64_t{0};
        total += c;
    }
    return total;
}

/// Decode every positive set P with |P| <= d (the empty set included) and
/// confirm the decoder returns exactly P. Sets are visited in lexicographic
/// order of their sorted members ({}, {0}, {0,1}, ..., {1}, ...), so the
/// reported failure is the lexicographically smallest one.
inline IdentificationResult verify_identification(const BinaryMatrix& m, std::size_t d,
                                                  std::uint64_t max_cases = default_case_budget) {
    const auto total = identification_cases(m.cols(), d);
    if (total > max_cases)
        throw BudgetError("verify_identification needs " + std::to_string(total) +
                          " cases, budget is " + std::to_string(max_cases));

    IdentificationResult res;
    const std::size_t n = m.cols();
    std::vector<ColumnId> pos;
    auto visit = [&]() {
        ++res.cases;
        auto dec = naive_decode(m, outcomes(m, pos));
        if (dec == pos) return true;
        res.identifies = false;
        res.failing_set = pos;
        res.decoded = std::move(dec);
        return false;
    };

    if (!visit()) return res;
    while (true) {
        const std::size_t next = pos.empty() ? 0 : pos.back() + 1;
        if (pos.size() < d && next < n) {
            pos.push_back(next);
        } else {
            while (!pos.empty() && pos.back() + 1 >= n) pos.pop_back();
            if (pos.empty()) break;
            ++pos.back();
        }
        if (!visit()) return res;
    }
    return res;
}

}  // namespace disjunct
