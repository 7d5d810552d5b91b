#pragma once

#include <cstdint>
#include <vector>

#include "beclab/bitvec.hpp"

namespace beclab {

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct SolveResult {
    SolveStatus status = SolveStatus::Underdetermined;
    BitVec x;  // populated when status == Unique
};

// Dense bit-packed GF(2) matrix, one BitVec per row.  rank() and
// solve_unique() work on an internal copy; row_xor mutates in place so the
// decoders can share snapshots cheaply.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_(rows, BitVec(cols)) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return row_.at(r).get(c); }
    void set(std::size_t r, std::size_t c, bool v) { row_.at(r).set(c, v); }

    const BitVec& row(std::size_t r) const { return row_.at(r); }
    void set_row(std::size_t r, BitVec v);
    void append_row(BitVec v);

    // target_row ^= source_row; returns *this (in-place row operation).
    BitMatrix& row_xor(std::size_t target_row, std::size_t source_row);

    std::size_t rank() const;

    BitVec mul(const BitVec& v) const;  // m.cols == v.len

    // Solve a*x = b.  Unique requires rank == cols and consistency;
    // otherwise distinguishes Underdetermined from Inconsistent.
    SolveResult solve_unique(const BitVec& b) const;

    // Columns gathered in the given order into a rows() x idx.size() matrix.
    BitMatrix gather_columns(const std::vector<std::size_t>& idx) const;

    // Basis of the right null space {x : m*x = 0}; size = cols - rank.
    std::vector<BitVec> nullspace_basis() const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> row_;
};

}  // namespace beclab
