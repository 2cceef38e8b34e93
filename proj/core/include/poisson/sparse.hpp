#pragma once

#include "poisson/rational.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace poisson {

/// Sparse vector: (index, value) pairs, strictly increasing indices, no zeros.
class SparseVector {
public:
    using Entry = std::pair<std::size_t, Rational>;

    SparseVector() = default;
    /// Entries need not be sorted; duplicates are summed, zeros dropped.
    explicit SparseVector(std::vector<Entry> entries);

    static SparseVector unit(std::size_t index) { return SparseVector({{index, Rational(1)}}); }

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }
    Rational at(std::size_t index) const;
    /// Index of the first nonzero entry. Precondition: !empty().
    std::size_t leading() const { return entries_.front().first; }

    /// this += factor * other
    void axpy(const Rational& factor, const SparseVector& other);
    void scale(const Rational& factor);

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    std::vector<Entry> entries_;
};

/// Column-major sparse rational matrix.
class SparseMatrix {
public:
    SparseMatrix(std::size_t rows = 0, std::size_t cols = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    const SparseVector& column(std::size_t j) const { return columns_.at(j); }
    void set_column(std::size_t j, SparseVector v);

    SparseMatrix operator*(const SparseMatrix& rhs) const;
    SparseVector operator*(const SparseVector& v) const;
    bool is_zero() const;
    /// Rows as sparse vectors (the transpose's columns).
    std::vector<SparseVector> row_vectors() const;

    static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

private:
    std::size_t rows_;
    std::vector<SparseVector> columns_;
};

/// Fully reduced row echelon basis of a subspace, grown one vector at a
/// time. Every stored row has leading coefficient 1 and is zero at the
/// pivot positions of all other rows.
class RowEchelon {
public:
    /// Reduces v modulo the span (result is zero at every pivot).
    SparseVector reduce(SparseVector v) const;
    /// Adds v to the span. Returns false if it was already in the span.
    bool insert(SparseVector v);
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }

    std::size_t rank() const { return rows_.size(); }
    /// Rows ordered by pivot position.
    std::vector<SparseVector> rows() const;
    std::vector<std::size_t> pivots() const;
    bool is_pivot(std::size_t index) const { return pivot_row_.count(index) != 0; }

private:
    std::vector<SparseVector> rows_;
    std::map<std::size_t, std::size_t> pivot_row_;  // pivot column -> row slot
};

struct RankKernel {
    std::size_t rank = 0;
    /// Basis of {v : M v = 0}, one vector per free column, in column order.
    std::vector<SparseVector> kernel;
    std::vector<std::size_t> pivot_columns;
};

/// Exact rank and null space by Gauss-Jordan elimination on the rows.
RankKernel rank_kernel(const SparseMatrix& m);

}  // namespace poisson
