#include "sqfree/linalg.hpp"

#include <algorithm>

namespace sqfree {

GfMatrix GfMatrix::from_rows(FieldPtr field, const std::vector<std::vector<unsigned>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    GfMatrix out(std::move(field), r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("ragged row lengths");
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j] >= out.field_->q()) throw BadArgs("entry encoding out of range");
            out(i, j) = static_cast<Elem>(rows[i][j]);
        }
    }
    return out;
}

GfMatrix GfMatrix::transpose() const {
    GfMatrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

GfMatrix GfMatrix::operator*(const GfMatrix& rhs) const {
    if (!field_ || !rhs.field_ || !field_->same_as(*rhs.field_))
        throw SpecMismatch("matrix product over different fields");
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape");
    const Field& f = *field_;
    GfMatrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t l = 0; l < cols_; ++l) {
            const Elem a = (*this)(i, l);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) = f.add(out(i, j), f.mul(a, rhs(l, j)));
        }
    return out;
}

void GfMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void GfMatrix::scale_row(std::size_t i, unsigned c) {
    const Field& f = *field_;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = f.mul((*this)(i, j), c);
}

void GfMatrix::add_scaled_row(std::size_t dst, std::size_t src, unsigned c) {
    if (c == 0) return;
    const Field& f = *field_;
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(dst, j) = f.add((*this)(dst, j), f.mul(c, (*this)(src, j)));
}

RrefResult rref(GfMatrix m) {
    const Field& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < m.rows() && m(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        m.swap_rows(pr, sel);
        m.scale_row(pr, f.inv(m(pr, c)));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pr || m(i, c) == 0) continue;
            m.add_scaled_row(i, pr, f.neg(m(i, c)));
        }
        pivots.push_back(c);
        ++pr;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const GfMatrix& m) { return rref(m).pivots.size(); }

GfMatrix row_basis(const GfMatrix& m) {
    auto [r, pivots] = rref(m);
    GfMatrix out(m.field(), pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = r(i, j);
    return out;
}

GfMatrix nullspace_basis(const GfMatrix& m) {
    const Field& f = *m.field();
    auto [r, pivots] = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    GfMatrix out(m.field(), n - pivots.size(), n);
    std::size_t row = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        out(row, free) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) out(row, pivots[i]) = f.neg(r(i, free));
        ++row;
    }
    return out;
}

std::vector<std::size_t> row_space_support(const GfMatrix& b) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < b.rows(); ++i) {
            if (b(i, j) != 0) {
                out.push_back(j);
                break;
            }
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> pivot_patterns(std::size_t k, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    if (r > k) return out;
    if (r == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == k - r + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> free_cells(std::size_t k,
                                                            std::span<const std::size_t> pivots) {
    std::vector<bool> is_pivot(k, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t c = pivots[i] + 1; c < k; ++c)
            if (!is_pivot[c]) cells.emplace_back(i, c);
    return cells;
}

void init_pattern_matrix(GfMatrix& buf, std::span<const std::size_t> pivots) {
    for (std::size_t i = 0; i < buf.rows(); ++i)
        for (std::size_t j = 0; j < buf.cols(); ++j) buf(i, j) = 0;
    for (std::size_t i = 0; i < pivots.size(); ++i) buf(i, pivots[i]) = 1;
}

}  // namespace sqfree
