#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace vko {

using Index = std::uint32_t;

/// Column-major sparse matrix with arbitrary-precision integer entries.
/// No explicit zeros are stored; each column is sorted by row index.
class SparseIntMatrix {
public:
    struct Entry {
        Index row;
        mpz_class value;
    };

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    std::size_t nonzeros() const;

    /// Adds `v` to entry (r, c); a resulting zero is removed.
    void add(Index r, Index c, const mpz_class& v);
    void set(Index r, Index c, const mpz_class& v);
    mpz_class at(Index r, Index c) const;

    std::span<const Entry> column(Index c) const { return columns_.at(c); }

    /// Replaces the entries of column c; input need not be sorted and may contain repeats.
    void assign_column(Index c, std::vector<Entry> entries);

    SparseIntMatrix transposed() const;
    SparseIntMatrix reduced_mod2() const;
    SparseIntMatrix operator*(const SparseIntMatrix& other) const;
    std::vector<mpz_class> operator*(std::span<const mpz_class> x) const;

    bool is_zero() const;
    bool operator==(const SparseIntMatrix& other) const;

    std::vector<std::vector<mpz_class>> to_dense() const;
    static SparseIntMatrix from_dense(const std::vector<std::vector<mpz_class>>& m);

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

} // namespace vko
