#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "nestlat/nest.hpp"

namespace nestlat {

/// Classification datum of a subbimodule of T_{(M,N)}: the number i of
/// nonzero block rows and, for each, the leftmost nonzero block column
/// j_k (1-based, as in the classification). i = 0 is the zero subbimodule.
struct BimoduleDescriptor {
    BlockShape shape;
    std::vector<std::size_t> js;  // 1-based; js.size() == i

    std::size_t i() const { return js.size(); }

    bool operator==(const BimoduleDescriptor& o) const {
        return shape == o.shape && js == o.js;
    }
};

inline bool validate_descriptor(const BimoduleDescriptor& d) {
    const std::size_t r = d.shape.block_rows(), s = d.shape.block_cols();
    const std::size_t i = d.i();
    if (i > std::min(r, s)) return false;
    for (std::size_t k = 1; k <= i; ++k) {
        std::size_t jk = d.js[k - 1];
        if (jk < k || jk > s) return false;
        if (k < i && jk > d.js[k]) return false;            // nondecreasing
        if (k < i && jk == k && jk >= d.js[k]) return false; // strict on the diagonal
    }
    return true;
}

/// Descriptor of the smallest subbimodule containing the generators.
/// A nonzero block at (k', l') closes to every block (k, l) with k ≤ k'
/// and l ≥ l', each filled completely.
inline BimoduleDescriptor bimodule_closure(const std::vector<Matrix>& gens,
                                           const BlockShape& shape) {
    const std::size_t r = shape.block_rows(), s = shape.block_cols();
    for (const auto& g : gens) {
        g.check_shape(shape);
        if (!g.nest_member(shape))
            throw std::domain_error("bimodule_closure: generator outside nest");
    }
    // leftmost[k]: least 1-based block column of any generator support in
    // block rows >= k; s+1 when empty.
    std::vector<std::size_t> leftmost(r + 1, s + 1);
    for (const auto& g : gens)
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t l = k; l < s; ++l)
                if (!g.block(shape, k, l).is_zero())
                    leftmost[k] = std::min(leftmost[k], l + 1);
    for (std::size_t k = r; k > 0; --k)
        leftmost[k - 1] = std::min(leftmost[k - 1], leftmost[k]);
    std::size_t i = 0;
    for (std::size_t k = 0; k < r; ++k)
        if (leftmost[k] <= s) i = k + 1;
    std::vector<std::size_t> js(leftmost.begin(), leftmost.begin() + i);
    return {shape, std::move(js)};
}

/// The canonical left tuple of a subbimodule: each nonzero component is an
/// identity block in the top-right corner spanning the last r_k = n − x_k
/// columns, x_k the width of block columns before j_k.
inline NestTuple descriptor_to_tuple(const BimoduleDescriptor& d, const Ring& ring) {
    if (!validate_descriptor(d))
        throw std::invalid_argument("descriptor_to_tuple: invalid descriptor");
    NestTuple t = zero_tuple(d.shape, Side::left_row, ring);
    const std::size_t n = d.shape.cols();
    for (std::size_t k = 0; k < d.i(); ++k) {
        std::size_t x = d.shape.col_offset(d.js[k] - 1);
        std::size_t rk = n - x;
        Matrix m(ring, n, n);
        std::vector<std::size_t> pivots;
        for (std::size_t u = 0; u < rk; ++u) {
            m.at(u, x + u) = Elem::one(ring);
            pivots.push_back(x + u);
        }
        t.reps[k] = {Side::left_row, std::move(m), std::move(pivots)};
    }
    return t;
}

/// One nonzero entry per nonzero block row, sitting at the bottom-left of
/// block (k, j_k); its closure recovers the descriptor, which is verified.
inline Matrix bimodule_principal_generator(const BimoduleDescriptor& d,
                                           const Ring& ring) {
    if (!validate_descriptor(d))
        throw std::invalid_argument("bimodule_principal_generator: invalid descriptor");
    Matrix a(ring, d.shape.rows(), d.shape.cols());
    for (std::size_t k = 0; k < d.i(); ++k) {
        std::size_t row = d.shape.row_offset(k) + d.shape.row_parts[k] - 1;
        std::size_t col = d.shape.col_offset(d.js[k] - 1);
        a.at(row, col) = Elem::one(ring);
    }
    if (!(bimodule_closure({a}, d.shape) == d))
        throw std::logic_error("bimodule_principal_generator: closure check failed");
    return a;
}

/// Constructive form of the simplicity of M_{m×n} as a bimodule: from any
/// nonzero A every standard matrix E_ij is reached as
/// inv(a_{i0 j0}) · E_{i i0} A E_{j0 j}. Verified entry by entry.
inline bool is_simple_bimodule_witness(const Matrix& a) {
    if (a.is_zero()) throw std::domain_error("is_simple_bimodule_witness: zero matrix");
    const std::size_t m = a.rows(), n = a.cols();
    const Ring& ring = a.ring();
    std::size_t i0 = 0, j0 = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!a.at(i, j).is_zero()) {
                i0 = i;
                j0 = j;
            }
    Elem c = a.at(i0, j0).inv();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix b = Matrix::standard(ring, m, m, i, i0) * a *
                       Matrix::standard(ring, n, n, j0, j);
            if (b.scale_left(c) != Matrix::standard(ring, m, n, i, j)) return false;
        }
    return true;
}

/// Product of one-sided ideals of a square nest algebra, on canonical
/// tuples. Closed form: component i of the product joins every component
/// k of the right factor whose block column k is hit by the left factor.
/// Naive generator-pair spanning is unsound over a noncommutative ring;
/// this form is validated against the brute-force span product over
/// finite fields in the test suite.
inline NestTuple left_ideal_product(const NestTuple& a, const NestTuple& b) {
    detail::check_tuple_compat(a, b);
    if (!a.shape.square())
        throw std::invalid_argument("left_ideal_product: square nest required");
    if (a.side == Side::right_column) {
        // (J1 J2)^t = J2^t J1^t over the opposite nest.
        return tuple_dual(left_ideal_product(tuple_dual(b), tuple_dual(a)));
    }
    const std::size_t r = a.shape.block_rows();
    BlockShape cshape = detail::rep_col_shape(a.shape);
    NestTuple out = zero_tuple(a.shape, Side::left_row, a.ring());
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < a.shape.block_cols(); ++k) {
            if (a.reps[i].mat.block_col(cshape, k).is_zero()) continue;
            out.reps[i] = join(out.reps[i], b.reps[k]);
        }
    }
    return out;
}

}  // namespace nestlat
