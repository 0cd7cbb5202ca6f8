#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nestlat/echelon.hpp"

namespace nestlat {

/// Inverse of a square matrix; throws std::domain_error if singular.
inline Matrix invert(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("invert: not square");
    auto [r, t] = lrref_with_transform(a);
    if (r.rank() != a.rows()) throw std::domain_error("invert: singular matrix");
    return t;
}

/// A one-sided submodule of M_{m×n}, held as its canonical echelon
/// representative: an n×n left-row form R with I = M_{m×n} R (left side),
/// or an m×m right-column form C with I = C M_{m×n} (right side).
struct FullSubmodule {
    Side side;
    std::size_t m, n;
    EchelonMatrix rep;

    const Ring& ring() const { return rep.mat.ring(); }
    std::size_t rank() const { return rep.rank(); }

    bool operator!=(const FullSubmodule& o) const { return !(*this == o); }
    bool operator==(const FullSubmodule& o) const {
        return side == o.side && m == o.m && n == o.n && rep == o.rep;
    }
};

namespace detail {

inline void check_compatible(const FullSubmodule& a, const FullSubmodule& b) {
    if (a.side != b.side || a.m != b.m || a.n != b.n || a.ring() != b.ring())
        throw std::invalid_argument("submodule mismatch");
}

}  // namespace detail

/// The map of generators to the canonical representative: stack all
/// generator rows (columns) and reduce.
inline FullSubmodule phi_from_generators(const std::vector<Matrix>& gens,
                                         std::size_t m, std::size_t n, Side side,
                                         const Ring& ring) {
    for (const auto& g : gens)
        if (g.rows() != m || g.cols() != n || g.ring() != ring)
            throw std::invalid_argument("phi_from_generators: generator mismatch");
    if (side == Side::left_row) {
        Matrix stack(ring, gens.empty() ? n : gens.size() * m, n);
        for (std::size_t gi = 0; gi < gens.size(); ++gi)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    stack.at(gi * m + i, j) = gens[gi].at(i, j);
        EchelonMatrix r = lrref(stack);
        return {side, m, n, {Side::left_row, r.mat.resized(n, n), r.pivots}};
    }
    // Right side through the opposite-transpose duality.
    std::vector<Matrix> tgens;
    tgens.reserve(gens.size());
    for (const auto& g : gens) tgens.push_back(g.op_transpose());
    FullSubmodule lt =
        phi_from_generators(tgens, n, m, Side::left_row, Ring::opposite(ring));
    return {Side::right_column, m, n, echelon_dual(lt.rep)};
}

/// Membership: A ∈ I iff its rows (columns) lie in the span of the rep.
inline bool contains(const FullSubmodule& s, const Matrix& a) {
    if (a.rows() != s.m || a.cols() != s.n || a.ring() != s.ring())
        throw std::invalid_argument("contains: shape or ring mismatch");
    if (s.side == Side::left_row) return lrs_leq(a, s.rep.mat);
    return rcs_leq(a, s.rep.mat);
}

inline FullSubmodule submodule_sum(const FullSubmodule& a, const FullSubmodule& b) {
    detail::check_compatible(a, b);
    return {a.side, a.m, a.n, join(a.rep, b.rep)};
}

inline FullSubmodule submodule_intersect(const FullSubmodule& a,
                                         const FullSubmodule& b) {
    detail::check_compatible(a, b);
    return {a.side, a.m, a.n, meet(a.rep, b.rep)};
}

inline bool submodule_leq(const FullSubmodule& a, const FullSubmodule& b) {
    detail::check_compatible(a, b);
    return echelon_leq(a.rep, b.rep);
}

/// Dimension of I as a one-sided D-vector space: m·rank(R) on the left,
/// rank(C)·n on the right.
inline std::size_t dim(const FullSubmodule& s) {
    return s.side == Side::left_row ? s.m * s.rank() : s.rank() * s.n;
}

/// A left submodule is principal iff its rank fits into m rows (dually n).
inline bool is_principal(const FullSubmodule& s) {
    return s.side == Side::left_row ? s.rank() <= s.m : s.rank() <= s.n;
}

/// A single m×n generator: the nonzero rows (columns) of the rep, padded.
inline Matrix principal_generator(const FullSubmodule& s) {
    if (!is_principal(s)) throw std::domain_error("submodule is not principal");
    return s.rep.mat.resized(s.m, s.n);
}

/// Hemiring product on canonical reps of one-sided ideals of M_n:
/// R1 ∗ R2 represents the product ideal (M_n R1)·(M_n R2). Generated by
/// {R1 · E_kl · R2 : all standard E_kl}; left coefficients pass out of the
/// left factor, so this additive recipe is exact over any division ring.
inline FullSubmodule star(const FullSubmodule& a, const FullSubmodule& b) {
    detail::check_compatible(a, b);
    if (a.m != a.n) throw std::invalid_argument("star: square ambient required");
    const std::size_t n = a.n;
    const Ring& ring = a.ring();
    std::vector<Matrix> gens;
    gens.reserve(n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            gens.push_back(a.rep.mat * Matrix::standard(ring, n, n, k, l) * b.rep.mat);
    return phi_from_generators(gens, n, n, a.side, ring);
}

namespace detail {

// Column reduce an n×n left-row echelon matrix to [[I_r,0],[0,0]] by right
// multiplication, accumulating the applied operations in P.
inline std::pair<Matrix, Matrix> column_canonicalize(const EchelonMatrix& rep) {
    const std::size_t n = rep.mat.rows();
    Matrix w = rep.mat;
    Matrix p = Matrix::identity(w.ring(), n);
    for (std::size_t t = 0; t < rep.pivots.size(); ++t) {
        std::size_t pc = rep.pivots[t];
        if (pc != t)
            for (std::size_t u = 0; u < n; ++u) {
                std::swap(w.at(u, t), w.at(u, pc));
                std::swap(p.at(u, t), p.at(u, pc));
            }
        for (std::size_t j = 0; j < n; ++j) {
            if (j == t || w.at(t, j).is_zero()) continue;
            Elem c = w.at(t, j);
            for (std::size_t u = 0; u < n; ++u) {
                w.at(u, j) = w.at(u, j) - w.at(u, t) * c;
                p.at(u, j) = p.at(u, j) - p.at(u, t) * c;
            }
        }
    }
    return {std::move(w), std::move(p)};
}

}  // namespace detail

/// An invertible P with φ(P⁻¹ I P) = [[I_r,0],[0,0]], together with that
/// canonical submodule. Square ambient only.
inline std::pair<Matrix, FullSubmodule> conjugate_to_canonical(const FullSubmodule& s) {
    if (s.m != s.n)
        throw std::invalid_argument("conjugate_to_canonical: square ambient required");
    const std::size_t n = s.n;
    if (s.side == Side::left_row) {
        auto [canon, p] = detail::column_canonicalize(s.rep);
        EchelonMatrix crep = lrref(canon);  // already canonical; recompute pivots
        return {p, FullSubmodule{Side::left_row, n, n, std::move(crep)}};
    }
    // Right side: find S with S·C canonical by running the left algorithm on
    // the op-transposed rep; then P = S⁻¹.
    EchelonMatrix dualrep = echelon_dual(s.rep);
    auto [canon_t, q] = detail::column_canonicalize(dualrep);
    Matrix p = invert(q.op_transpose());
    EchelonMatrix crep = rcref(canon_t.op_transpose());
    return {p, FullSubmodule{Side::right_column, n, n, std::move(crep)}};
}

}  // namespace nestlat
