#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "sqfree/combinatorics.hpp"
#include "sqfree/field.hpp"

namespace sqfree {

// Dense row-major matrix over GF(q). Entries are raw canonical encodings so
// matrices compare bit-exactly and can be hashed/serialized directly.
class GfMatrix {
  public:
    GfMatrix() = default;
    GfMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static GfMatrix from_rows(FieldPtr field, const std::vector<std::vector<unsigned>>& rows);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

    const std::vector<Elem>& data() const { return data_; }

    GfMatrix transpose() const;
    GfMatrix operator*(const GfMatrix& rhs) const;
    bool operator==(const GfMatrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }

    void swap_rows(std::size_t a, std::size_t b);
    void scale_row(std::size_t i, unsigned c);
    // row[dst] += c * row[src]
    void add_scaled_row(std::size_t dst, std::size_t src, unsigned c);

  private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

struct RrefResult {
    GfMatrix mat;
    std::vector<std::size_t> pivots;
};

// Unique reduced row echelon form and its pivot columns.
RrefResult rref(GfMatrix m);

std::size_t rank(const GfMatrix& m);

// Nonzero rows of the RREF: a canonical basis of the row space.
GfMatrix row_basis(const GfMatrix& m);

// Rows form a basis of { v : M v^T = 0 }; row count = cols - rank.
GfMatrix nullspace_basis(const GfMatrix& m);

// Column indices that are nonzero somewhere in B. When the rows of B span a
// subcode this equals the support of the whole span, since a column vanishes
// on a basis iff it vanishes on every combination.
std::vector<std::size_t> row_space_support(const GfMatrix& b);

// ---- Canonical enumeration of r-dimensional subspaces of F_q^k ----
//
// Every subspace has a unique RREF basis matrix, so enumerating RREF matrices
// by pivot-column pattern visits each subspace exactly once. The pattern list
// doubles as a deterministic chunking of the stream: chunks are disjoint, and
// consumers combine per-chunk minima with an order-independent reduction.

std::vector<std::vector<std::size_t>> pivot_patterns(std::size_t k, std::size_t r);

// Free (row, col) positions of the RREF shape for one pivot pattern.
std::vector<std::pair<std::size_t, std::size_t>> free_cells(
    std::size_t k, std::span<const std::size_t> pivots);

// Prepares `buf` as the RREF skeleton (ones at pivots, zeros elsewhere).
void init_pattern_matrix(GfMatrix& buf, std::span<const std::size_t> pivots);

// Visits every RREF matrix with the given pivot pattern. The buffer is
// mutated in place between calls; callbacks must not retain the reference.
template <typename Fn>
void for_each_subspace_in_pattern(const Field& f, GfMatrix& buf,
                                  std::span<const std::size_t> pivots, Fn&& fn) {
    init_pattern_matrix(buf, pivots);
    const auto cells = free_cells(buf.cols(), pivots);
    fn(static_cast<const GfMatrix&>(buf));
    if (cells.empty()) return;
    const unsigned q = f.q();
    std::vector<unsigned> digits(cells.size(), 0);
    while (true) {
        std::size_t i = 0;
        while (i < cells.size()) {
            if (++digits[i] < q) break;
            digits[i] = 0;
            ++i;
        }
        if (i == cells.size()) return;
        for (std::size_t j = 0; j <= i; ++j)
            buf(cells[j].first, cells[j].second) = static_cast<Elem>(digits[j]);
        fn(static_cast<const GfMatrix&>(buf));
    }
}

// Visits every r-dimensional subspace of F_q^k once, as its RREF basis.
// Throws CapExceeded (carrying the exact count) if there are more than `cap`.
template <typename Fn>
void for_each_subspace(const FieldPtr& field, std::size_t k, std::size_t r, const BigInt& cap,
                       Fn&& fn) {
    if (r > k) throw BadArgs("subspace dimension exceeds ambient dimension");
    BigInt count = gaussian_binomial(static_cast<int>(k), static_cast<int>(r), field->q());
    if (count > cap) throw CapExceeded("subspace count exceeds cap", count);
    GfMatrix buf(field, r, k);
    for (const auto& pattern : pivot_patterns(k, r))
        for_each_subspace_in_pattern(*field, buf, pattern, fn);
}

}  // namespace sqfree
