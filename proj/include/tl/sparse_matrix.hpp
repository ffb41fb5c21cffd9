#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "tl/ring.hpp"

namespace tl {

/// Sparse matrix with exact entries, stored column-major with rows sorted
/// inside each column. No explicit zeros are kept.
class SparseMatrix {
  public:
    using Entry = std::pair<std::uint32_t, Scalar>;  // (row, value)

    SparseMatrix() : rows_(0) {}
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static SparseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }
    std::size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }
    bool is_identity() const;

    // Accumulates v into (r, c); erases the entry if the sum becomes zero.
    void add(std::size_t r, std::size_t c, const Scalar& v);

    // Replaces column c. Entries must be sorted by row, nonzero, in bounds.
    void set_column(std::size_t c, std::vector<Entry> entries);

    Scalar get(std::size_t r, std::size_t c) const;
    const std::vector<Entry>& column(std::size_t c) const { return cols_[c]; }

    SparseMatrix multiply(const SparseMatrix& rhs) const;  // this * rhs

    void for_each(const std::function<void(std::size_t, std::size_t, const Scalar&)>& fn) const;

    bool operator==(const SparseMatrix& other) const;
    bool operator!=(const SparseMatrix& other) const { return !(*this == other); }

    // Entries may be unreduced sums (e.g. from multiply); zero in the ring.
    bool is_zero_in(const RingSpec& ring) const;

  private:
    std::size_t rows_;
    std::vector<std::vector<Entry>> cols_;
};

}  // namespace tl
