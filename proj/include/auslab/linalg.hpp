#ifndef AUSLAB_LINALG_HPP
#define AUSLAB_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace auslab {

/// Sparse vector: (column, value) pairs sorted by column, no zero values.
template <class F>
using SparseVector = std::vector<std::pair<std::size_t, F>>;

/// Sorts by column, merges duplicates and drops zeros.
template <class F>
void canonicalize(SparseVector<F>& v) {
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i + 1;
        F sum = std::move(v[i].second);
        while (j < v.size() && v[j].first == v[i].first) {
            sum += v[j].second;
            ++j;
        }
        if (!sum.is_zero()) {
            v[out].first = v[i].first;
            v[out].second = std::move(sum);
            ++out;
        }
        i = j;
    }
    v.resize(out);
}

/*
 * Reduced row echelon basis of a subspace of F^cols, stored sparsely.
 *
 * The pivot of a row is its smallest column; every row is monic at its
 * pivot and has zeros in every other pivot column.  Consequently the rows
 * whose pivot is >= c span the intersection of the subspace with the
 * coordinate subspace on columns >= c, and the non-pivot columns index a
 * complement (the "standard" coordinates).
 *
 * F needs +=, -=, *, inverse(), is_zero(), unary minus.
 */
template <class F>
class SparseRref {
public:
    using Vector = SparseVector<F>;

    explicit SparseRref(std::size_t cols = 0) : pivot_row_(cols, kNone), col_rows_(cols) {}

    std::size_t cols() const { return pivot_row_.size(); }
    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == pivot_row_.size(); }

    bool is_pivot(std::size_t col) const { return pivot_row_.at(col) != kNone; }
    const Vector& row_for_pivot(std::size_t col) const { return rows_.at(pivot_row_.at(col)); }
    const std::vector<Vector>& rows() const { return rows_; }

    /// Pivot columns in increasing order.
    std::vector<std::size_t> pivots() const {
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < pivot_row_.size(); ++c) {
            if (pivot_row_[c] != kNone) {
                out.push_back(c);
            }
        }
        return out;
    }

    std::size_t pivots_at_or_after(std::size_t col) const {
        std::size_t count = 0;
        for (std::size_t c = col; c < pivot_row_.size(); ++c) {
            count += pivot_row_[c] != kNone;
        }
        return count;
    }

    /// Remainder of v modulo the subspace, expressed on non-pivot columns.
    Vector reduce(const Vector& v) const {
        Vector acc;
        acc.reserve(v.size());
        bool touched = false;
        for (const auto& [c, a] : v) {
            check_col(c);
            if (pivot_row_[c] == kNone) {
                acc.emplace_back(c, a);
                continue;
            }
            touched = true;
            for (const auto& [rc, rb] : rows_[pivot_row_[c]]) {
                if (rc != c) {
                    acc.emplace_back(rc, -(a * rb));
                }
            }
        }
        if (touched) {
            canonicalize(acc);
        }
        return acc;
    }

    bool contains(const Vector& v) const { return reduce(v).empty(); }

    /// Adds v to the span. Returns true when the rank grew.
    bool insert(const Vector& v) {
        if (full() || v.empty()) {
            return false;
        }
        Vector r = reduce(v);
        if (r.empty()) {
            return false;
        }
        const std::size_t p = r.front().first;
        const F inv = r.front().second.inverse();
        for (auto& [c, a] : r) {
            a = a * inv;
        }
        // Clear column p from existing rows.
        std::vector<std::uint32_t> holders;
        holders.swap(col_rows_[p]);
        for (std::uint32_t idx : holders) {
            Vector& row = rows_[idx];
            auto it = std::lower_bound(row.begin(), row.end(), p,
                                       [](const auto& e, std::size_t col) { return e.first < col; });
            if (it == row.end() || it->first != p) {
                continue;
            }
            const F factor = it->second;
            Vector merged;
            merged.reserve(row.size() + r.size());
            auto a = row.begin();
            auto b = r.begin();
            while (a != row.end() || b != r.end()) {
                if (b == r.end() || (a != row.end() && a->first < b->first)) {
                    merged.push_back(std::move(*a));
                    ++a;
                } else if (a == row.end() || b->first < a->first) {
                    merged.emplace_back(b->first, -(factor * b->second));
                    col_rows_[b->first].push_back(idx);
                    ++b;
                } else {
                    F val = std::move(a->second);
                    val -= factor * b->second;
                    if (!val.is_zero()) {
                        merged.emplace_back(a->first, std::move(val));
                    }
                    ++a;
                    ++b;
                }
            }
            row = std::move(merged);
        }
        const auto idx = static_cast<std::uint32_t>(rows_.size());
        for (std::size_t i = 1; i < r.size(); ++i) {
            col_rows_[r[i].first].push_back(idx);
        }
        pivot_row_[p] = idx;
        rows_.push_back(std::move(r));
        return true;
    }

private:
    static constexpr std::uint32_t kNone = 0xffffffffu;

    void check_col(std::size_t c) const {
        if (c >= pivot_row_.size()) {
            throw std::out_of_range("sparse vector column out of range");
        }
    }

    std::vector<Vector> rows_;
    std::vector<std::uint32_t> pivot_row_;
    // For each non-pivot column, rows that may hold an entry there.
    std::vector<std::vector<std::uint32_t>> col_rows_;
};

}  // namespace auslab

#endif
