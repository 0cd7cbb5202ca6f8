#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "nestlat/submodule.hpp"

namespace nestlat {

/// Canonical representative of a one-sided submodule of a nest module:
/// for the left side a descending chain (R_1,…,R_r) of n×n left-row forms
/// with block column j of R_i zero for all j < i; dually on the right.
struct NestTuple {
    Side side;
    BlockShape shape;
    std::vector<EchelonMatrix> reps;

    const Ring& ring() const { return reps.at(0).mat.ring(); }

    bool operator==(const NestTuple& o) const {
        return side == o.side && shape == o.shape && reps == o.reps;
    }
    bool operator!=(const NestTuple& o) const { return !(*this == o); }

    /// Largest 1-based index with a nonzero component; 0 for the zero tuple.
    std::size_t last_nonzero() const {
        for (std::size_t i = reps.size(); i > 0; --i)
            if (!reps[i - 1].mat.is_zero()) return i;
        return 0;
    }

    bool is_zero() const { return last_nonzero() == 0; }
};

inline NestTuple zero_tuple(const BlockShape& shape, Side side, const Ring& ring) {
    std::size_t count =
        side == Side::left_row ? shape.block_rows() : shape.block_cols();
    std::size_t dim = side == Side::left_row ? shape.cols() : shape.rows();
    std::vector<EchelonMatrix> reps(
        count, EchelonMatrix{side, Matrix::zero(ring, dim, dim), {}});
    return {side, shape, std::move(reps)};
}

namespace detail {

/// Component transport under the anti-diagonal transpose: the involution
/// pairing left and right tuples.
inline EchelonMatrix tuple_component_dual(const EchelonMatrix& e) {
    Side nside = e.side == Side::left_row ? Side::right_column : Side::left_row;
    Matrix m = e.mat.anti_transpose();
    std::size_t n = m.rows();
    std::vector<std::size_t> pivots;
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it)
        pivots.push_back(n - 1 - *it);
    return {nside, std::move(m), std::move(pivots)};
}

}  // namespace detail

/// Transport a right tuple across the anti-transpose duality: block order
/// reverses and each component flips side.
inline NestTuple tuple_dual(const NestTuple& t) {
    Side nside = t.side == Side::left_row ? Side::right_column : Side::left_row;
    std::vector<EchelonMatrix> reps;
    reps.reserve(t.reps.size());
    for (auto it = t.reps.rbegin(); it != t.reps.rend(); ++it)
        reps.push_back(detail::tuple_component_dual(*it));
    return {nside, t.shape.op_transposed(), std::move(reps)};
}

namespace detail {

inline BlockShape rep_col_shape(const BlockShape& shape) {
    return BlockShape({shape.cols()}, shape.col_parts);
}

inline void check_tuple_compat(const NestTuple& a, const NestTuple& b) {
    if (a.side != b.side || !(a.shape == b.shape) || a.ring() != b.ring())
        throw std::invalid_argument("nest tuple mismatch");
}

inline bool validate_left(const NestTuple& t) {
    const std::size_t r = t.shape.block_rows(), s = t.shape.block_cols();
    const std::size_t n = t.shape.cols();
    if (t.reps.size() != r) return false;
    BlockShape cshape = rep_col_shape(t.shape);
    for (std::size_t i = 0; i < r; ++i) {
        const EchelonMatrix& e = t.reps[i];
        if (e.side != Side::left_row || e.mat.rows() != n || e.mat.cols() != n)
            return false;
        if (lrref(e.mat) != e) return false;  // canonical member of R_n
        for (std::size_t j = 0; j < std::min(i, s); ++j)
            if (!e.mat.block_col(cshape, j).is_zero()) return false;
        if (i + 1 < r && !lrs_leq(t.reps[i + 1].mat, e.mat)) return false;
    }
    return true;
}

}  // namespace detail

/// Membership predicate of the tuple space: chain, canonicity, and block
/// column vanishing.
inline bool validate_tuple(const NestTuple& t) {
    if (t.side == Side::left_row) return detail::validate_left(t);
    return detail::validate_left(tuple_dual(t));
}

namespace detail {

inline NestTuple nest_phi_left(const std::vector<Matrix>& gens,
                               const BlockShape& shape, const Ring& ring) {
    const std::size_t r = shape.block_rows(), n = shape.cols(), m = shape.rows();
    for (const auto& g : gens) {
        if (g.rows() != m || g.cols() != n || g.ring() != ring)
            throw std::invalid_argument("nest_phi_from_generators: generator mismatch");
        if (!g.nest_member(shape))
            throw std::domain_error("nest_phi_from_generators: generator outside nest");
    }
    NestTuple t = zero_tuple(shape, Side::left_row, ring);
    for (std::size_t i = 0; i < r; ++i) {
        // R_i spans all block rows k >= i of all generators.
        Matrix stack(ring, 1, n);
        bool first = true;
        for (const auto& g : gens)
            for (std::size_t k = i; k < r; ++k) {
                Matrix row = g.block_row(shape, k);
                stack = first ? row : Matrix::vstack(stack, row);
                first = false;
            }
        if (first) continue;  // no generators: zero component
        EchelonMatrix e = lrref(stack);
        t.reps[i] = {Side::left_row, e.mat.resized(n, n), e.pivots};
    }
    return t;
}

}  // namespace detail

/// Canonical tuple of the one-sided submodule generated by `gens`.
inline NestTuple nest_phi_from_generators(const std::vector<Matrix>& gens,
                                          const BlockShape& shape, Side side,
                                          const Ring& ring) {
    if (side == Side::left_row) return detail::nest_phi_left(gens, shape, ring);
    std::vector<Matrix> tgens;
    tgens.reserve(gens.size());
    for (const auto& g : gens) tgens.push_back(g.anti_transpose());
    NestTuple lt = detail::nest_phi_left(tgens, shape.op_transposed(),
                                         Ring::opposite(ring));
    return tuple_dual(lt);
}

/// A ∈ J iff every block row (column) of A lies in the corresponding span.
inline bool nest_contains(const NestTuple& t, const Matrix& a) {
    if (t.side == Side::right_column)
        return nest_contains(tuple_dual(t), a.anti_transpose());
    a.check_shape(t.shape);
    if (a.ring() != t.ring()) throw std::invalid_argument("nest_contains: ring mismatch");
    if (!a.nest_member(t.shape))
        throw std::domain_error("nest_contains: matrix outside nest");
    for (std::size_t i = 0; i < t.reps.size(); ++i)
        if (!lrs_leq(a.block_row(t.shape, i), t.reps[i].mat)) return false;
    return true;
}

inline NestTuple nest_sum(const NestTuple& a, const NestTuple& b) {
    detail::check_tuple_compat(a, b);
    NestTuple out = a;
    for (std::size_t i = 0; i < a.reps.size(); ++i)
        out.reps[i] = join(a.reps[i], b.reps[i]);
    return out;
}

inline NestTuple nest_intersect(const NestTuple& a, const NestTuple& b) {
    detail::check_tuple_compat(a, b);
    NestTuple out = a;
    for (std::size_t i = 0; i < a.reps.size(); ++i)
        out.reps[i] = meet(a.reps[i], b.reps[i]);
    return out;
}

inline bool nest_leq(const NestTuple& a, const NestTuple& b) {
    detail::check_tuple_compat(a, b);
    for (std::size_t i = 0; i < a.reps.size(); ++i)
        if (!echelon_leq(a.reps[i], b.reps[i])) return false;
    return true;
}

/// Does the single matrix A generate exactly the submodule of t?
inline bool check_generates(const NestTuple& t, const Matrix& a) {
    if (t.side == Side::right_column)
        return check_generates(tuple_dual(t), a.anti_transpose());
    a.check_shape(t.shape);
    if (!a.nest_member(t.shape))
        throw std::domain_error("check_generates: matrix outside nest");
    return nest_phi_from_generators({a}, t.shape, Side::left_row, t.ring()) == t;
}

/// Principality criterion: rank(R_i) − rank(R_{i+1}) ≤ m_i up to the last
/// nonzero component (with R_{k+1} read as 0).
inline bool nest_is_principal(const NestTuple& t) {
    if (!validate_tuple(t)) throw std::invalid_argument("nest_is_principal: invalid tuple");
    if (t.side == Side::right_column) return nest_is_principal(tuple_dual(t));
    std::size_t k = t.last_nonzero();
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t r_i = t.reps[i].rank();
        std::size_t r_next = i + 1 < t.reps.size() ? t.reps[i + 1].rank() : 0;
        if (r_i - r_next > t.shape.row_parts[i]) return false;
    }
    return true;
}

namespace detail {

inline Matrix nest_principal_generator_left(const NestTuple& t) {
    const std::size_t r = t.shape.block_rows(), n = t.shape.cols();
    const Ring& ring = t.ring();
    Matrix a(ring, t.shape.rows(), n);
    std::size_t k = t.last_nonzero();
    if (k == 0) return a;
    // Bottom-up: block row k spans R_k; block row i < k completes
    // LRS(R_{i+1}) to LRS(R_i), rows picked greedily from R_i in order.
    for (std::size_t i = k; i > 0; --i) {
        const EchelonMatrix& cur = t.reps[i - 1];
        EchelonMatrix acc = i < t.reps.size()
                                ? t.reps[i]
                                : EchelonMatrix{Side::left_row, Matrix::zero(ring, n, n), {}};
        std::size_t placed = 0;
        std::size_t base = t.shape.row_offset(i - 1);
        for (std::size_t u = 0; u < cur.rank(); ++u) {
            Matrix row = cur.mat.row(u);
            if (!reduce_row(row, acc).is_zero()) {
                for (std::size_t j = 0; j < n; ++j) a.at(base + placed, j) = row.at(0, j);
                ++placed;
                acc = join(acc, EchelonMatrix{Side::left_row, row.resized(n, n),
                                              lrref(row).pivots});
                acc = lrref(acc.mat);
            }
        }
    }
    return a;
}

}  // namespace detail

/// A single generator of a principal tuple, verified against
/// check_generates before returning.
inline Matrix nest_principal_generator(const NestTuple& t) {
    if (!nest_is_principal(t))
        throw std::domain_error("nest_principal_generator: tuple is not principal");
    if (t.side == Side::right_column) {
        Matrix a_t = detail::nest_principal_generator_left(tuple_dual(t));
        Matrix a = a_t.anti_transpose();
        if (!check_generates(t, a))
            throw std::logic_error("nest_principal_generator: verification failed");
        return a;
    }
    Matrix a = detail::nest_principal_generator_left(t);
    if (!check_generates(t, a))
        throw std::logic_error("nest_principal_generator: verification failed");
    return a;
}

/// Componentwise ∗ on tuples of a square nest: each component multiplied
/// with the hemiring product of R_n. Exposed alongside the genuine ideal
/// product (see bimodule.hpp) so the two readings can be compared.
inline NestTuple componentwise_star(const NestTuple& a, const NestTuple& b) {
    detail::check_tuple_compat(a, b);
    if (!a.shape.square())
        throw std::invalid_argument("componentwise_star: square nest required");
    if (a.side == Side::right_column)
        return tuple_dual(componentwise_star(tuple_dual(b), tuple_dual(a)));
    std::size_t n = a.shape.cols();
    NestTuple out = a;
    for (std::size_t i = 0; i < a.reps.size(); ++i) {
        FullSubmodule sa{a.side, n, n, a.reps[i]};
        FullSubmodule sb{b.side, n, n, b.reps[i]};
        out.reps[i] = star(sa, sb).rep;
    }
    return out;
}

}  // namespace nestlat
