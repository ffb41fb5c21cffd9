#include "tl/sparse_matrix.hpp"

#include <algorithm>
#include <map>

namespace tl {

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.cols_[i].emplace_back(static_cast<std::uint32_t>(i), Scalar(1));
    return m;
}

std::size_t SparseMatrix::nnz() const {
    std::size_t total = 0;
    for (const auto& col : cols_)
        total += col.size();
    return total;
}

bool SparseMatrix::is_identity() const {
    if (rows_ != cols())
        return false;
    for (std::size_t c = 0; c < cols(); ++c) {
        if (cols_[c].size() != 1 || cols_[c][0].first != c || cols_[c][0].second != 1)
            return false;
    }
    return true;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Scalar& v) {
    if (r >= rows_ || c >= cols())
        throw std::out_of_range("SparseMatrix::add index out of range");
    if (v == 0)
        return;
    auto& col = cols_[c];
    auto row = static_cast<std::uint32_t>(r);
    auto it = std::lower_bound(col.begin(), col.end(), row,
                               [](const Entry& e, std::uint32_t key) { return e.first < key; });
    if (it != col.end() && it->first == row) {
        it->second += v;
        if (it->second == 0)
            col.erase(it);
    } else {
        col.insert(it, Entry(row, v));
    }
}

void SparseMatrix::set_column(std::size_t c, std::vector<Entry> entries) {
    if (c >= cols())
        throw std::out_of_range("SparseMatrix::set_column index out of range");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].first >= rows_ || entries[i].second == 0 ||
            (i > 0 && entries[i - 1].first >= entries[i].first))
            throw std::invalid_argument("SparseMatrix::set_column malformed column");
    }
    cols_[c] = std::move(entries);
}

Scalar SparseMatrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols())
        throw std::out_of_range("SparseMatrix::get index out of range");
    const auto& col = cols_[c];
    auto row = static_cast<std::uint32_t>(r);
    auto it = std::lower_bound(col.begin(), col.end(), row,
                               [](const Entry& e, std::uint32_t key) { return e.first < key; });
    if (it != col.end() && it->first == row)
        return it->second;
    return Scalar(0);
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
    if (cols() != rhs.rows())
        throw std::invalid_argument("SparseMatrix::multiply shape mismatch");
    SparseMatrix out(rows_, rhs.cols());
    // Accumulate each output column as a sorted map; columns are short here.
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
        std::map<std::uint32_t, Scalar> acc;
        for (const auto& [k, v] : rhs.cols_[j]) {
            for (const auto& [r, w] : cols_[k]) {
                auto [it, inserted] = acc.emplace(r, v * w);
                if (!inserted) {
                    it->second += v * w;
                    if (it->second == 0)
                        acc.erase(it);
                }
            }
        }
        std::vector<Entry> col;
        col.reserve(acc.size());
        for (auto& [r, v] : acc)
            col.emplace_back(r, std::move(v));
        out.cols_[j] = std::move(col);
    }
    return out;
}

void SparseMatrix::for_each(
    const std::function<void(std::size_t, std::size_t, const Scalar&)>& fn) const {
    for (std::size_t c = 0; c < cols(); ++c)
        for (const auto& [r, v] : cols_[c])
            fn(r, c, v);
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
}

bool SparseMatrix::is_zero_in(const RingSpec& ring) const {
    for (const auto& col : cols_)
        for (const auto& [r, v] : col)
            if (!ring.is_zero(v))
                return false;
    return true;
}

}  // namespace tl
