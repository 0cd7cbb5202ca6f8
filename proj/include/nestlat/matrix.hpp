#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "nestlat/ring.hpp"

namespace nestlat {

/// Row/column partition of a block matrix. Parts are positive; their sums
/// give the ambient dimensions.
struct BlockShape {
    std::vector<std::size_t> row_parts;
    std::vector<std::size_t> col_parts;

    BlockShape(std::vector<std::size_t> rp, std::vector<std::size_t> cp)
        : row_parts(std::move(rp)), col_parts(std::move(cp)) {
        for (auto p : row_parts)
            if (p == 0) throw std::invalid_argument("block shape: zero row part");
        for (auto p : col_parts)
            if (p == 0) throw std::invalid_argument("block shape: zero col part");
        if (row_parts.empty() || col_parts.empty())
            throw std::invalid_argument("block shape: empty partition");
    }

    std::size_t rows() const {
        return std::accumulate(row_parts.begin(), row_parts.end(), std::size_t{0});
    }
    std::size_t cols() const {
        return std::accumulate(col_parts.begin(), col_parts.end(), std::size_t{0});
    }
    std::size_t block_rows() const { return row_parts.size(); }
    std::size_t block_cols() const { return col_parts.size(); }

    std::size_t row_offset(std::size_t i) const {
        return std::accumulate(row_parts.begin(), row_parts.begin() + i, std::size_t{0});
    }
    std::size_t col_offset(std::size_t j) const {
        return std::accumulate(col_parts.begin(), col_parts.begin() + j, std::size_t{0});
    }

    bool square() const { return row_parts == col_parts; }

    /// Shape of the op-transposed matrix: partitions swap and reverse.
    BlockShape op_transposed() const {
        std::vector<std::size_t> rp(col_parts.rbegin(), col_parts.rend());
        std::vector<std::size_t> cp(row_parts.rbegin(), row_parts.rend());
        return BlockShape(std::move(rp), std::move(cp));
    }

    bool operator==(const BlockShape& o) const {
        return row_parts == o.row_parts && col_parts == o.col_parts;
    }
};

/// Dense exact matrix over a division ring. Indices are 0-based.
class Matrix {
public:
    Matrix(const Ring& ring, std::size_t rows, std::size_t cols)
        : ring_(ring), rows_(rows), cols_(cols), e_(rows * cols, Elem::zero(ring)) {}

    static Matrix zero(const Ring& ring, std::size_t rows, std::size_t cols) {
        return Matrix(ring, rows, cols);
    }

    /// I_{m×n}: ones on the main diagonal up to min(m, n).
    static Matrix identity(const Ring& ring, std::size_t rows, std::size_t cols) {
        Matrix m(ring, rows, cols);
        for (std::size_t i = 0; i < std::min(rows, cols); ++i)
            m.at(i, i) = Elem::one(ring);
        return m;
    }
    static Matrix identity(const Ring& ring, std::size_t n) {
        return identity(ring, n, n);
    }

    /// Standard matrix E_{ij}.
    static Matrix standard(const Ring& ring, std::size_t rows, std::size_t cols,
                           std::size_t i, std::size_t j) {
        Matrix m(ring, rows, cols);
        m.at(i, j) = Elem::one(ring);  // at() range-checks
        return m;
    }

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Elem& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return e_[i * cols_ + j];
    }
    Elem& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return e_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r(ring_, rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(ring_, rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const { return *this + (-o); }

    Matrix operator*(const Matrix& o) const {
        if (ring_ != o.ring_) throw std::invalid_argument("mat_mul: ring mismatch");
        if (cols_ != o.rows_) throw std::invalid_argument("mat_mul: shape mismatch");
        Matrix r(ring_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Elem& aik = at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
            }
        return r;
    }

    /// Left scalar action: each entry becomes s * entry.
    Matrix scale_left(const Elem& s) const {
        Matrix r(ring_, rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = s * e_[i];
        return r;
    }
    /// Right scalar action: entry * s.
    Matrix scale_right(const Elem& s) const {
        Matrix r(ring_, rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
        return r;
    }

    Matrix row(std::size_t i) const { return submatrix(i, 0, 1, cols_); }
    Matrix col(std::size_t j) const { return submatrix(0, j, rows_, 1); }

    Matrix submatrix(std::size_t i0, std::size_t j0, std::size_t h, std::size_t w) const {
        if (i0 + h > rows_ || j0 + w > cols_)
            throw std::invalid_argument("submatrix out of range");
        Matrix r(ring_, h, w);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < w; ++j) r.at(i, j) = at(i0 + i, j0 + j);
        return r;
    }

    /// Vertical stack; both operands must share ring and column count.
    static Matrix vstack(const Matrix& top, const Matrix& bottom) {
        if (top.ring_ != bottom.ring_ || top.cols_ != bottom.cols_)
            throw std::invalid_argument("vstack mismatch");
        Matrix r(top.ring_, top.rows_ + bottom.rows_, top.cols_);
        for (std::size_t i = 0; i < top.rows_; ++i)
            for (std::size_t j = 0; j < top.cols_; ++j) r.at(i, j) = top.at(i, j);
        for (std::size_t i = 0; i < bottom.rows_; ++i)
            for (std::size_t j = 0; j < top.cols_; ++j)
                r.at(top.rows_ + i, j) = bottom.at(i, j);
        return r;
    }
    static Matrix hstack(const Matrix& left, const Matrix& right) {
        if (left.ring_ != right.ring_ || left.rows_ != right.rows_)
            throw std::invalid_argument("hstack mismatch");
        Matrix r(left.ring_, left.rows_, left.cols_ + right.cols_);
        for (std::size_t i = 0; i < left.rows_; ++i) {
            for (std::size_t j = 0; j < left.cols_; ++j) r.at(i, j) = left.at(i, j);
            for (std::size_t j = 0; j < right.cols_; ++j)
                r.at(i, left.cols_ + j) = right.at(i, j);
        }
        return r;
    }

    /// Copy of this matrix resized to (rows × cols): truncates or zero-pads.
    Matrix resized(std::size_t rows, std::size_t cols) const {
        Matrix r(ring_, rows, cols);
        for (std::size_t i = 0; i < std::min(rows, rows_); ++i)
            for (std::size_t j = 0; j < std::min(cols, cols_); ++j) r.at(i, j) = at(i, j);
        return r;
    }

    /// Transpose over the opposite ring. An anti-isomorphism:
    /// op_transpose(A*B) == op_transpose(B) * op_transpose(A).
    Matrix op_transpose() const {
        Matrix r(Ring::opposite(ring_), cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r.at(j, i) = at(i, j).retag_opposite();
        return r;
    }

    /// Transpose across the anti-diagonal into the opposite ring: the same
    /// anti-isomorphism law as op_transpose, but block upper triangular
    /// matrices stay block upper triangular for the op_transposed shape.
    Matrix anti_transpose() const {
        Matrix r(Ring::opposite(ring_), cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r.at(cols_ - 1 - j, rows_ - 1 - i) = at(i, j).retag_opposite();
        return r;
    }

    // --- block access under an explicit shape ---

    void check_shape(const BlockShape& s) const {
        if (s.rows() != rows_ || s.cols() != cols_)
            throw std::invalid_argument("matrix does not conform to block shape");
    }

    Matrix block(const BlockShape& s, std::size_t bi, std::size_t bj) const {
        check_shape(s);
        if (bi >= s.block_rows() || bj >= s.block_cols())
            throw std::invalid_argument("block index out of range");
        return submatrix(s.row_offset(bi), s.col_offset(bj), s.row_parts[bi],
                         s.col_parts[bj]);
    }

    Matrix block_row(const BlockShape& s, std::size_t bi) const {
        check_shape(s);
        if (bi >= s.block_rows()) throw std::invalid_argument("block row out of range");
        return submatrix(s.row_offset(bi), 0, s.row_parts[bi], cols_);
    }

    Matrix block_col(const BlockShape& s, std::size_t bj) const {
        check_shape(s);
        if (bj >= s.block_cols()) throw std::invalid_argument("block col out of range");
        return submatrix(0, s.col_offset(bj), rows_, s.col_parts[bj]);
    }

    /// Full-size matrix with X at block (bi, bj) and zero elsewhere.
    static Matrix embed_block(const Matrix& x, const BlockShape& s, std::size_t bi,
                              std::size_t bj) {
        if (bi >= s.block_rows() || bj >= s.block_cols())
            throw std::invalid_argument("block index out of range");
        if (x.rows() != s.row_parts[bi] || x.cols() != s.col_parts[bj])
            throw std::invalid_argument("embed_block: block size mismatch");
        Matrix r(x.ring(), s.rows(), s.cols());
        std::size_t i0 = s.row_offset(bi), j0 = s.col_offset(bj);
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) r.at(i0 + i, j0 + j) = x.at(i, j);
        return r;
    }

    /// Membership in the nest module: every block strictly below the block
    /// diagonal vanishes.
    bool nest_member(const BlockShape& s) const {
        check_shape(s);
        for (std::size_t i = 0; i < s.block_rows(); ++i)
            for (std::size_t j = 0; j < std::min(i, s.block_cols()); ++j)
                if (!block(s, i, j).is_zero()) return false;
        return true;
    }

    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            out += i ? "; " : "";
            for (std::size_t j = 0; j < cols_; ++j)
                out += (j ? ", " : "") + at(i, j).str();
        }
        return out + "]";
    }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::invalid_argument("index out of range");
    }
    void check_same_shape(const Matrix& o) const {
        if (ring_ != o.ring_ || rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape/ring mismatch");
    }

    Ring ring_;
    std::size_t rows_, cols_;
    std::vector<Elem> e_;
};

}  // namespace nestlat
