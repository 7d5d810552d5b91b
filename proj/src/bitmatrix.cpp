#include "beclab/bitmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace beclab {

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::set_row(std::size_t r, BitVec v) {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::set_row: width mismatch");
    row_.at(r) = std::move(v);
}

void BitMatrix::append_row(BitVec v) {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::append_row: width mismatch");
    row_.push_back(std::move(v));
    ++rows_;
}

BitMatrix& BitMatrix::row_xor(std::size_t target_row, std::size_t source_row) {
    if (target_row >= rows_ || source_row >= rows_)
        throw std::out_of_range("BitMatrix::row_xor: row index out of range");
    if (target_row == source_row) {
        row_[target_row].clear_all();
        return *this;
    }
    row_[target_row].xor_with(row_[source_row]);
    return *this;
}

std::size_t BitMatrix::rank() const {
    std::vector<BitVec> work(row_);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < work.size(); ++c) {
        std::size_t pivot = BitVec::npos;
        for (std::size_t i = r; i < work.size(); ++i) {
            if (work[i].get(c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == BitVec::npos) continue;
        std::swap(work[r], work[pivot]);
        for (std::size_t i = 0; i < work.size(); ++i)
            if (i != r && work[i].get(c)) work[i].xor_with(work[r]);
        ++r;
    }
    return r;
}

BitVec BitMatrix::mul(const BitVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::mul: dimension mismatch");
    BitVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.set(i, BitVec::dot(row_[i], v));
    return out;
}

SolveResult BitMatrix::solve_unique(const BitVec& b) const {
    if (b.size() != rows_) throw std::invalid_argument("BitMatrix::solve_unique: rhs length mismatch");
    std::vector<BitVec> a(row_);
    BitVec rhs = b;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = BitVec::npos;
        for (std::size_t i = r; i < rows_; ++i) {
            if (a[i].get(c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == BitVec::npos) continue;
        std::swap(a[r], a[pivot]);
        {
            const bool t = rhs.get(r);
            rhs.set(r, rhs.get(pivot));
            rhs.set(pivot, t);
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i != r && a[i].get(c)) {
                a[i].xor_with(a[r]);
                rhs.set(i, rhs.get(i) ^ rhs.get(r));
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    // Zero rows with nonzero rhs mean there is no solution at all.
    for (std::size_t i = r; i < rows_; ++i)
        if (rhs.get(i)) return {SolveStatus::Inconsistent, BitVec()};
    if (r < cols_) return {SolveStatus::Underdetermined, BitVec()};
    BitVec x(cols_);
    for (std::size_t i = 0; i < r; ++i) x.set(pivot_col[i], rhs.get(i));
    return {SolveStatus::Unique, x};
}

BitMatrix BitMatrix::gather_columns(const std::vector<std::size_t>& idx) const {
    BitMatrix out(rows_, idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) {
        if (idx[c] >= cols_) throw std::out_of_range("BitMatrix::gather_columns: column out of range");
        for (std::size_t r = 0; r < rows_; ++r)
            if (row_[r].get(idx[c])) out.set(r, c, true);
    }
    return out;
}

std::vector<BitVec> BitMatrix::nullspace_basis() const {
    std::vector<BitVec> a(row_);
    std::vector<std::size_t> pivot_of_col(cols_, BitVec::npos);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = BitVec::npos;
        for (std::size_t i = r; i < rows_; ++i) {
            if (a[i].get(c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == BitVec::npos) continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = 0; i < rows_; ++i)
            if (i != r && a[i].get(c)) a[i].xor_with(a[r]);
        pivot_of_col[c] = r;
        ++r;
    }
    std::vector<BitVec> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (pivot_of_col[c] != BitVec::npos) continue;
        BitVec v(cols_);
        v.set(c, true);
        for (std::size_t pc = 0; pc < cols_; ++pc) {
            if (pivot_of_col[pc] != BitVec::npos && a[pivot_of_col[pc]].get(c)) v.set(pc, true);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace beclab
