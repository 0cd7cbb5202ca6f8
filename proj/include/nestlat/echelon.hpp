#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nestlat/matrix.hpp"

namespace nestlat {

enum class Side { left_row, right_column };

/// A matrix certified to be in left-row (or right-column) reduced echelon
/// form: the canonical representative of its row (column) space.
struct EchelonMatrix {
    Side side;
    Matrix mat;
    std::vector<std::size_t> pivots;  // pivot columns (left) or pivot rows (right)

    std::size_t rank() const { return pivots.size(); }

    bool operator==(const EchelonMatrix& o) const {
        return side == o.side && mat == o.mat;
    }
    bool operator!=(const EchelonMatrix& o) const { return !(*this == o); }
};

namespace detail {

// Row elimination with left operations only: swap, left-scale by a nonzero
// scalar, add a left multiple of one row to another. Over a noncommutative
// ring these are exactly the operations preserving the left row space.
// Applies every operation to `mat` and, when `transform` is non-null, to it
// as well, so that on return mat = T * input.
inline std::vector<std::size_t> eliminate(Matrix& mat, Matrix* transform) {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t j = 0; j < mat.cols() && pr < mat.rows(); ++j) {
        std::size_t piv = pr;
        while (piv < mat.rows() && mat.at(piv, j).is_zero()) ++piv;
        if (piv == mat.rows()) continue;
        if (piv != pr) {
            for (std::size_t c = 0; c < mat.cols(); ++c)
                std::swap(mat.at(piv, c), mat.at(pr, c));
            if (transform)
                for (std::size_t c = 0; c < transform->cols(); ++c)
                    std::swap(transform->at(piv, c), transform->at(pr, c));
        }
        Elem s = mat.at(pr, j).inv();
        for (std::size_t c = 0; c < mat.cols(); ++c) mat.at(pr, c) = s * mat.at(pr, c);
        if (transform)
            for (std::size_t c = 0; c < transform->cols(); ++c)
                transform->at(pr, c) = s * transform->at(pr, c);
        for (std::size_t u = 0; u < mat.rows(); ++u) {
            if (u == pr || mat.at(u, j).is_zero()) continue;
            Elem c0 = mat.at(u, j);
            for (std::size_t c = 0; c < mat.cols(); ++c)
                mat.at(u, c) = mat.at(u, c) - c0 * mat.at(pr, c);
            if (transform)
                for (std::size_t c = 0; c < transform->cols(); ++c)
                    transform->at(u, c) = transform->at(u, c) - c0 * transform->at(pr, c);
        }
        pivots.push_back(j);
        ++pr;
    }
    return pivots;
}

}  // namespace detail

/// Left row reduced echelon form; unique for the left row space of A.
inline EchelonMatrix lrref(const Matrix& a) {
    Matrix r = a;
    auto pivots = detail::eliminate(r, nullptr);
    return {Side::left_row, std::move(r), std::move(pivots)};
}

/// lrref together with an invertible T such that result.mat == T * A.
inline std::pair<EchelonMatrix, Matrix> lrref_with_transform(const Matrix& a) {
    Matrix r = a;
    Matrix t = Matrix::identity(a.ring(), a.rows());
    auto pivots = detail::eliminate(r, &t);
    return {EchelonMatrix{Side::left_row, std::move(r), std::move(pivots)},
            std::move(t)};
}

/// Transport across the opposite-transpose duality, flipping the side.
inline EchelonMatrix echelon_dual(const EchelonMatrix& e) {
    return {e.side == Side::left_row ? Side::right_column : Side::left_row,
            e.mat.op_transpose(), e.pivots};
}

/// Right column reduced echelon form, computed through the duality.
inline EchelonMatrix rcref(const Matrix& a) {
    return echelon_dual(lrref(a.op_transpose()));
}

inline EchelonMatrix echelon_form(const Matrix& a, Side side) {
    return side == Side::left_row ? lrref(a) : rcref(a);
}

/// Reduce a single row vector against an echelon matrix (left side).
/// Returns the residual; zero residual means membership in the row space.
inline Matrix reduce_row(const Matrix& row, const EchelonMatrix& r) {
    Matrix x = row;
    for (std::size_t p = 0; p < r.pivots.size(); ++p) {
        const Elem& c = x.at(0, r.pivots[p]);
        if (c.is_zero()) continue;
        Elem c0 = c;
        for (std::size_t j = 0; j < x.cols(); ++j)
            x.at(0, j) = x.at(0, j) - c0 * r.mat.at(p, j);
    }
    return x;
}

/// LRS(A) ⊆ LRS(B)?  Equivalently: A = C B for some C.
inline bool lrs_leq(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("lrs_leq: column mismatch");
    if (a.ring() != b.ring()) throw std::invalid_argument("lrs_leq: ring mismatch");
    EchelonMatrix r = lrref(b);
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (!reduce_row(a.row(i), r).is_zero()) return false;
    return true;
}

/// RCS(A) ⊆ RCS(B)?  Equivalently: A = B C for some C.
inline bool rcs_leq(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("rcs_leq: row mismatch");
    return lrs_leq(a.op_transpose(), b.op_transpose());
}

/// Solve A = C B for C; throws std::domain_error when LRS(A) ⊄ LRS(B).
inline Matrix solve_left_factor(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("solve_left_factor: column mismatch");
    if (a.ring() != b.ring())
        throw std::invalid_argument("solve_left_factor: ring mismatch");
    auto [r, t] = lrref_with_transform(b);  // r.mat == t * b
    Matrix coeff(a.ring(), a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Matrix x = a.row(i);
        for (std::size_t p = 0; p < r.pivots.size(); ++p) {
            Elem c = x.at(0, r.pivots[p]);
            if (c.is_zero()) continue;
            coeff.at(i, p) = c;
            for (std::size_t j = 0; j < x.cols(); ++j)
                x.at(0, j) = x.at(0, j) - c * r.mat.at(p, j);
        }
        if (!x.is_zero())
            throw std::domain_error("solve_left_factor: LRS(A) not contained in LRS(B)");
    }
    return coeff * t;
}

namespace detail {

inline void check_joinable(const EchelonMatrix& a, const EchelonMatrix& b) {
    if (a.side != b.side) throw std::invalid_argument("join/meet: side mismatch");
    if (a.mat.ring() != b.mat.ring() || a.mat.rows() != b.mat.rows() ||
        a.mat.cols() != b.mat.cols())
        throw std::invalid_argument("join/meet: shape or ring mismatch");
}

}  // namespace detail

/// The unique echelon matrix spanning LRS(R1) + LRS(R2) (dually RCS).
/// Throws std::domain_error if the sum needs more rows than the ambient
/// shape provides.
inline EchelonMatrix join(const EchelonMatrix& a, const EchelonMatrix& b) {
    detail::check_joinable(a, b);
    if (a.side == Side::right_column)
        return echelon_dual(join(echelon_dual(a), echelon_dual(b)));
    EchelonMatrix stacked = lrref(Matrix::vstack(a.mat, b.mat));
    if (stacked.rank() > a.mat.rows())
        throw std::domain_error("join: sum does not fit in the ambient shape");
    return {Side::left_row, stacked.mat.resized(a.mat.rows(), a.mat.cols()),
            stacked.pivots};
}

/// The unique echelon matrix spanning LRS(R1) ∩ LRS(R2) (dually RCS).
/// Zassenhaus-style: row reduce [R1|R1; R2|0]; rows with zero left half
/// carry a spanning set of the intersection in their right half.
inline EchelonMatrix meet(const EchelonMatrix& a, const EchelonMatrix& b) {
    detail::check_joinable(a, b);
    if (a.side == Side::right_column)
        return echelon_dual(meet(echelon_dual(a), echelon_dual(b)));
    const std::size_t m = a.mat.rows(), n = a.mat.cols();
    Matrix top = Matrix::hstack(a.mat, a.mat);
    Matrix bottom = Matrix::hstack(b.mat, Matrix::zero(b.mat.ring(), m, n));
    Matrix stack = Matrix::vstack(top, bottom);
    detail::eliminate(stack, nullptr);
    Matrix gathered(a.mat.ring(), 2 * m, n);
    std::size_t out = 0;
    for (std::size_t i = 0; i < 2 * m; ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            left_zero = stack.at(i, j).is_zero();
        if (!left_zero) continue;
        for (std::size_t j = 0; j < n; ++j) gathered.at(out, j) = stack.at(i, n + j);
        ++out;
    }
    EchelonMatrix r = lrref(gathered);
    return {Side::left_row, r.mat.resized(m, n), r.pivots};
}

/// Partial order of the lattice: for left side LRS containment.
inline bool echelon_leq(const EchelonMatrix& a, const EchelonMatrix& b) {
    detail::check_joinable(a, b);
    if (a.side == Side::right_column) return rcs_leq(a.mat, b.mat);
    return lrs_leq(a.mat, b.mat);
}

}  // namespace nestlat
