#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "nestlat/bimodule.hpp"

namespace nestlat {
namespace oracle {

enum class ClosureKind { left, right, bimodule };

/// A submodule listed element by element: brute-force ground truth for the
/// canonical-form machinery. Elements are kept sorted by a canonical key.
struct ExplicitModule {
    Ring ring;
    BlockShape shape;
    ClosureKind kind;
    std::vector<Matrix> elements;
    std::set<std::string> keys;

    std::size_t size() const { return elements.size(); }

    bool contains(const Matrix& m) const { return keys.count(m.str()) != 0; }

    bool subset_of(const ExplicitModule& o) const {
        return std::includes(o.keys.begin(), o.keys.end(), keys.begin(), keys.end());
    }

    bool operator==(const ExplicitModule& o) const { return keys == o.keys; }
    bool operator!=(const ExplicitModule& o) const { return keys != o.keys; }
    bool operator<(const ExplicitModule& o) const { return keys < o.keys; }

    /// Deterministic identity of the element set.
    std::string key() const {
        std::string out;
        for (const auto& k : keys) out += k + "|";
        return out;
    }
};

inline std::size_t budget() {
    if (const char* env = std::getenv("NESTLAT_BUDGET")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 1u << 16;
}

namespace detail {

inline void check_finite(const Ring& ring, const BlockShape& shape) {
    if (!ring.finite()) throw std::domain_error("oracle: finite ring required");
    std::size_t total = 1;
    for (std::size_t i = 0; i < shape.rows() * shape.cols(); ++i) {
        total *= ring.modulus();
        if (total > budget())
            throw std::domain_error("oracle: ambient matrix count exceeds budget");
    }
}

/// All scaled standard matrices x·e_{pq} of the acting nest algebra:
/// positions within the block-upper-triangular pattern of the partition.
inline std::vector<Matrix> acting_units(const Ring& ring,
                                        const std::vector<std::size_t>& parts) {
    BlockShape sq(parts, parts);
    std::size_t d = sq.rows();
    std::vector<Matrix> out;
    auto block_of = [&](std::size_t idx) {
        std::size_t b = 0;
        while (sq.row_offset(b + 1) <= idx) ++b;
        return b;
    };
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
            if (block_of(p) > block_of(q)) continue;
            for (std::uint64_t x = 1; x < ring.modulus(); ++x) {
                Matrix e(ring, d, d);
                e.at(p, q) = Elem::gf(x, ring);
                out.push_back(std::move(e));
            }
        }
    return out;
}

}  // namespace detail

/// Least submodule of the declared kind containing the generators:
/// fixpoint closure under addition and the declared one-sided actions.
inline ExplicitModule closure(const std::vector<Matrix>& gens, const Ring& ring,
                              const BlockShape& shape, ClosureKind kind) {
    detail::check_finite(ring, shape);
    for (const auto& g : gens) {
        g.check_shape(shape);
        if (!g.nest_member(shape)) throw std::domain_error("oracle: generator outside nest");
    }
    std::vector<Matrix> left_units, right_units;
    if (kind != ClosureKind::right)
        left_units = detail::acting_units(ring, shape.row_parts);
    if (kind != ClosureKind::left)
        right_units = detail::acting_units(ring, shape.col_parts);

    ExplicitModule mod{ring, shape, kind, {}, {}};
    auto add = [&](const Matrix& m) {
        std::string k = m.str();
        if (mod.keys.insert(k).second) {
            mod.elements.push_back(m);
            if (mod.elements.size() > budget())
                throw std::domain_error("oracle: closure exceeds budget");
            return true;
        }
        return false;
    };
    add(Matrix::zero(ring, shape.rows(), shape.cols()));
    for (const auto& g : gens) add(g);

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Matrix> snapshot = mod.elements;
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i; j < snapshot.size(); ++j)
                grew |= add(snapshot[i] + snapshot[j]);
        for (const auto& a : snapshot) {
            for (const auto& u : left_units) grew |= add(u * a);
            for (const auto& u : right_units) grew |= add(a * u);
        }
    }
    std::sort(mod.elements.begin(), mod.elements.end(),
              [](const Matrix& a, const Matrix& b) { return a.str() < b.str(); });
    return mod;
}

/// Every distinct submodule of the declared kind: cyclic closures of each
/// ambient element, then joins until the set is stable.
inline std::vector<ExplicitModule> enumerate_submodules(const Ring& ring,
                                                        const BlockShape& shape,
                                                        ClosureKind kind) {
    detail::check_finite(ring, shape);
    // Enumerate the ambient nest module by filling free positions.
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    {
        BlockShape s = shape;
        for (std::size_t bi = 0; bi < s.block_rows(); ++bi)
            for (std::size_t bj = bi; bj < s.block_cols(); ++bj)
                for (std::size_t i = 0; i < s.row_parts[bi]; ++i)
                    for (std::size_t j = 0; j < s.col_parts[bj]; ++j)
                        free_pos.emplace_back(s.row_offset(bi) + i, s.col_offset(bj) + j);
    }
    std::vector<Matrix> ambient;
    Matrix cur(ring, shape.rows(), shape.cols());
    std::vector<std::uint64_t> digits(free_pos.size(), 0);
    while (true) {
        Matrix m(ring, shape.rows(), shape.cols());
        for (std::size_t t = 0; t < free_pos.size(); ++t)
            m.at(free_pos[t].first, free_pos[t].second) = Elem::gf(digits[t], ring);
        ambient.push_back(std::move(m));
        if (ambient.size() > budget())
            throw std::domain_error("oracle: ambient enumeration exceeds budget");
        std::size_t t = 0;
        while (t < digits.size() && ++digits[t] == ring.modulus()) digits[t++] = 0;
        if (t == digits.size()) break;
    }

    std::map<std::string, ExplicitModule> found;
    auto note = [&](ExplicitModule m) {
        found.emplace(m.key(), std::move(m));
    };
    note(closure({}, ring, shape, kind));
    for (const auto& a : ambient)
        if (!a.is_zero()) note(closure({a}, ring, shape, kind));
    // Close under pairwise sums of submodules.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<const ExplicitModule*> mods;
        for (const auto& kv : found) mods.push_back(&kv.second);
        for (std::size_t i = 0; i < mods.size(); ++i)
            for (std::size_t j = i + 1; j < mods.size(); ++j) {
                if (mods[i]->subset_of(*mods[j]) || mods[j]->subset_of(*mods[i]))
                    continue;
                std::vector<Matrix> gens = mods[i]->elements;
                gens.insert(gens.end(), mods[j]->elements.begin(),
                            mods[j]->elements.end());
                ExplicitModule s = closure(gens, ring, shape, kind);
                if (!found.count(s.key())) {
                    note(std::move(s));
                    grew = true;
                }
            }
    }
    std::vector<ExplicitModule> out;
    for (auto& kv : found) out.push_back(std::move(kv.second));
    std::sort(out.begin(), out.end(), [](const ExplicitModule& a, const ExplicitModule& b) {
        return a.size() != b.size() ? a.size() < b.size() : a.key() < b.key();
    });
    return out;
}

/// Set-level sum and intersection; both stay closed.
inline ExplicitModule module_sum(const ExplicitModule& a, const ExplicitModule& b) {
    std::vector<Matrix> gens = a.elements;
    gens.insert(gens.end(), b.elements.begin(), b.elements.end());
    return closure(gens, a.ring, a.shape, a.kind);
}

inline ExplicitModule module_intersect(const ExplicitModule& a, const ExplicitModule& b) {
    ExplicitModule out{a.ring, a.shape, a.kind, {}, {}};
    for (const auto& m : a.elements)
        if (b.contains(m)) {
            out.keys.insert(m.str());
            out.elements.push_back(m);
        }
    return out;
}

/// The definitional product of one-sided ideals: the additive span of all
/// pairwise products.
inline ExplicitModule span_product(const ExplicitModule& j1, const ExplicitModule& j2) {
    if (j1.ring != j2.ring) throw std::invalid_argument("span_product: ring mismatch");
    if (j1.shape.cols() != j2.shape.rows())
        throw std::invalid_argument("span_product: incompatible shapes");
    BlockShape shape(j1.shape.row_parts, j2.shape.col_parts);
    ExplicitModule out{j1.ring, shape, j1.kind, {}, {}};
    auto add = [&](const Matrix& m) {
        if (out.keys.insert(m.str()).second) {
            out.elements.push_back(m);
            if (out.elements.size() > budget())
                throw std::domain_error("oracle: span product exceeds budget");
            return true;
        }
        return false;
    };
    add(Matrix::zero(j1.ring, shape.rows(), shape.cols()));
    for (const auto& a : j1.elements)
        for (const auto& b : j2.elements) add(a * b);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Matrix> snapshot = out.elements;
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i; j < snapshot.size(); ++j)
                grew |= add(snapshot[i] + snapshot[j]);
    }
    std::sort(out.elements.begin(), out.elements.end(),
              [](const Matrix& a, const Matrix& b) { return a.str() < b.str(); });
    return out;
}

/// All m×n matrices over a finite ring that are fixed points of lrref,
/// i.e. the members of R_{m×n}. Brute force, for desk-scale shapes.
inline std::vector<EchelonMatrix> enumerate_echelon_forms(const Ring& ring,
                                                          std::size_t m,
                                                          std::size_t n) {
    if (!ring.finite()) throw std::domain_error("oracle: finite ring required");
    std::vector<EchelonMatrix> out;
    std::vector<std::uint64_t> digits(m * n, 0);
    std::size_t count = 0;
    while (true) {
        Matrix mat(ring, m, n);
        for (std::size_t t = 0; t < digits.size(); ++t)
            mat.at(t / n, t % n) = Elem::gf(digits[t], ring);
        EchelonMatrix e = lrref(mat);
        if (e.mat == mat) out.push_back(std::move(e));
        if (++count > budget())
            throw std::domain_error("oracle: echelon enumeration exceeds budget");
        std::size_t t = 0;
        while (t < digits.size() && ++digits[t] == ring.modulus()) digits[t++] = 0;
        if (t == digits.size()) break;
    }
    return out;
}

/// All members of the left tuple space R_N(r) over a finite ring: tuples of
/// echelon forms filtered by the membership predicate.
inline std::vector<NestTuple> enumerate_nest_tuples(const Ring& ring,
                                                    const BlockShape& shape) {
    const std::size_t r = shape.block_rows(), n = shape.cols();
    std::vector<EchelonMatrix> forms = enumerate_echelon_forms(ring, n, n);
    std::vector<NestTuple> out;
    std::vector<std::size_t> idx(r, 0);
    while (true) {
        NestTuple t{Side::left_row, shape, {}};
        for (std::size_t i = 0; i < r; ++i) t.reps.push_back(forms[idx[i]]);
        if (validate_tuple(t)) out.push_back(std::move(t));
        std::size_t i = 0;
        while (i < r && ++idx[i] == forms.size()) idx[i++] = 0;
        if (i == r) break;
    }
    return out;
}

/// Outcome of checking a brute-force lattice against canonical forms.
struct LatticeReport {
    bool ok = true;
    std::vector<std::string> mismatches;

    void fail(std::string what) {
        ok = false;
        mismatches.push_back(std::move(what));
    }
};

/// Verify that the explicit submodule lattice and the canonical tuples are
/// the same lattice: bijection, order, sums ↔ joins, intersections ↔ meets.
inline LatticeReport compare_lattices(const std::vector<ExplicitModule>& mods,
                                      const std::vector<NestTuple>& tuples) {
    LatticeReport rep;
    if (mods.size() != tuples.size()) {
        rep.fail("count mismatch: " + std::to_string(mods.size()) + " explicit vs " +
                 std::to_string(tuples.size()) + " canonical");
        return rep;
    }
    Side side = tuples.empty() ? Side::left_row : tuples[0].side;
    std::vector<NestTuple> images;
    for (const auto& m : mods)
        images.push_back(
            nest_phi_from_generators(m.elements, m.shape, side, m.ring));
    // Bijection with the provided canonical list.
    std::vector<bool> used(tuples.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        bool matched = false;
        for (std::size_t j = 0; j < tuples.size(); ++j)
            if (!used[j] && images[i] == tuples[j]) {
                used[j] = true;
                matched = true;
                break;
            }
        if (!matched) rep.fail("explicit module " + std::to_string(i) +
                               " has no canonical preimage");
    }
    for (std::size_t i = 0; i < mods.size(); ++i)
        for (std::size_t j = 0; j < mods.size(); ++j) {
            if (i == j) continue;
            bool sub = mods[i].subset_of(mods[j]);
            if (sub != nest_leq(images[i], images[j]))
                rep.fail("order mismatch at pair (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
            if (i < j) {
                NestTuple s = nest_phi_from_generators(
                    module_sum(mods[i], mods[j]).elements, mods[i].shape, side,
                    mods[i].ring);
                if (s != nest_sum(images[i], images[j]))
                    rep.fail("sum/join mismatch at pair (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
                NestTuple x = nest_phi_from_generators(
                    module_intersect(mods[i], mods[j]).elements, mods[i].shape, side,
                    mods[i].ring);
                if (x != nest_intersect(images[i], images[j]))
                    rep.fail("intersection/meet mismatch at pair (" + std::to_string(i) +
                             "," + std::to_string(j) + ")");
            }
        }
    return rep;
}

}  // namespace oracle
}  // namespace nestlat
