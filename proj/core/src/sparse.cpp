#include "poisson/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace poisson {

SparseVector::SparseVector(std::vector<Entry> entries)
{
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (auto& e : entries) {
        if (!entries_.empty() && entries_.back().first == e.first)
            entries_.back().second += e.second;
        else
            entries_.push_back(std::move(e));
    }
    std::erase_if(entries_, [](const Entry& e) { return e.second == 0; });
}

Rational SparseVector::at(std::size_t index) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::size_t i) { return e.first < i; });
    return (it != entries_.end() && it->first == index) ? it->second : Rational(0);
}

void SparseVector::axpy(const Rational& factor, const SparseVector& other)
{
    if (factor == 0 || other.empty())
        return;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == entries_.end() || b->first < a->first) {
            merged.emplace_back(b->first, factor * b->second);
            ++b;
        } else {
            Rational v = a->second + factor * b->second;
            if (v != 0)
                merged.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(merged);
}

void SparseVector::scale(const Rational& factor)
{
    if (factor == 0) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_)
        e.second *= factor;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

void SparseMatrix::set_column(std::size_t j, SparseVector v)
{
    if (!v.empty() && v.entries().back().first >= rows_)
        throw std::out_of_range("sparse column entry beyond row count");
    columns_.at(j) = std::move(v);
}

SparseVector SparseMatrix::operator*(const SparseVector& v) const
{
    SparseVector out;
    for (const auto& [j, a] : v.entries())
        out.axpy(a, columns_.at(j));
    return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const
{
    if (cols() != rhs.rows())
        throw std::invalid_argument("matrix shape mismatch");
    SparseMatrix out(rows_, rhs.cols());
    for (std::size_t j = 0; j < rhs.cols(); ++j)
        out.columns_[j] = *this * rhs.columns_[j];
    return out;
}

bool SparseMatrix::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& c) { return c.empty(); });
}

std::vector<SparseVector> SparseMatrix::row_vectors() const
{
    std::vector<std::vector<SparseVector::Entry>> rows(rows_);
    for (std::size_t j = 0; j < columns_.size(); ++j)
        for (const auto& [i, a] : columns_[j].entries())
            rows[i].emplace_back(j, a);
    std::vector<SparseVector> out;
    out.reserve(rows_);
    for (auto& r : rows)
        out.emplace_back(std::move(r));
    return out;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows)
{
    const std::size_t n = rows.empty() ? 0 : rows.front().size();
    SparseMatrix m(rows.size(), n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<SparseVector::Entry> col;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i].at(j) != 0)
                col.emplace_back(i, rows[i][j]);
        m.columns_[j] = SparseVector(std::move(col));
    }
    return m;
}

SparseVector RowEchelon::reduce(SparseVector v) const
{
    // Rows are zero at every other pivot, so one pass over v's original
    // pivot entries suffices.
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (const auto& [i, a] : v.entries())
        if (auto it = pivot_row_.find(i); it != pivot_row_.end())
            hits.emplace_back(it->second, a);
    for (const auto& [row, a] : hits)
        v.axpy(-a, rows_[row]);
    return v;
}

bool RowEchelon::insert(SparseVector v)
{
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    const std::size_t pivot = v.leading();
    Rational lead = v.entries().front().second;
    v.scale(1 / lead);
    for (auto& row : rows_) {
        Rational a = row.at(pivot);
        if (a != 0)
            row.axpy(-a, v);
    }
    pivot_row_.emplace(pivot, rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

std::vector<SparseVector> RowEchelon::rows() const
{
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (const auto& [pivot, row] : pivot_row_)
        out.push_back(rows_[row]);
    return out;
}

std::vector<std::size_t> RowEchelon::pivots() const
{
    std::vector<std::size_t> out;
    for (const auto& [pivot, row] : pivot_row_)
        out.push_back(pivot);
    return out;
}

RankKernel rank_kernel(const SparseMatrix& m)
{
    RowEchelon echelon;
    auto rows = m.row_vectors();
    // Short rows first keeps fill-in down; the final RREF does not depend on order.
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SparseVector& a, const SparseVector& b) { return a.nnz() < b.nnz(); });
    for (auto& r : rows)
        echelon.insert(std::move(r));

    RankKernel out;
    out.rank = echelon.rank();
    out.pivot_columns = echelon.pivots();
    const auto reduced = echelon.rows();

    // Column f free: v_f = 1, v_p = -R[p][f] for each pivot row.
    std::vector<std::vector<SparseVector::Entry>> kernel_entries(m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : out.pivot_columns)
        is_pivot[p] = true;
    for (std::size_t r = 0; r < reduced.size(); ++r)
        for (const auto& [j, a] : reduced[r].entries())
            if (!is_pivot[j])
                kernel_entries[j].emplace_back(out.pivot_columns[r], -a);
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        kernel_entries[f].emplace_back(f, Rational(1));
        out.kernel.emplace_back(std::move(kernel_entries[f]));
    }
    return out;
}

}  // namespace poisson
