#include <doctest.h>

#include "test_util.hpp"
#include "nestlat/nest.hpp"

using namespace nestlat;
using testutil::mat;

namespace {
const Ring Q = Ring::rationals();
const Ring G2 = Ring::prime_field(2);
const BlockShape T2{{1, 1}, {1, 1}};

NestTuple left_tuple(const Ring& r, const BlockShape& shape,
                     std::vector<Matrix> reps) {
    NestTuple t = zero_tuple(shape, Side::left_row, r);
    for (std::size_t i = 0; i < reps.size(); ++i) t.reps[i] = lrref(reps[i]);
    return t;
}
}  // namespace

TEST_SUITE("nest") {

TEST_CASE("validate_tuple") {
    Matrix e12 = mat(Q, 2, 2, {0, 1, 0, 0});
    CHECK(validate_tuple(left_tuple(Q, T2, {Matrix::identity(Q, 2), e12})));
    // chain violated
    CHECK_FALSE(validate_tuple(left_tuple(Q, T2, {e12, Matrix::identity(Q, 2)})));
    // block column 1 of R_2 must vanish
    Matrix e11 = mat(Q, 2, 2, {1, 0, 0, 0});
    CHECK_FALSE(validate_tuple(left_tuple(Q, T2, {e11, e11})));
    // non-canonical component
    NestTuple bad = zero_tuple(T2, Side::left_row, Q);
    bad.reps[0] = {Side::left_row, mat(Q, 2, 2, {2, 0, 0, 0}), {0}};
    CHECK_FALSE(validate_tuple(bad));
}

TEST_CASE("nest_phi_from_generators") {
    NestTuple t = nest_phi_from_generators({Matrix::identity(Q, 2)}, T2,
                                           Side::left_row, Q);
    CHECK(t.reps[0].mat == Matrix::identity(Q, 2));
    CHECK(t.reps[1].mat == mat(Q, 2, 2, {0, 1, 0, 0}));
    CHECK(validate_tuple(t));

    NestTuple u = nest_phi_from_generators({mat(Q, 2, 2, {0, 1, 0, 0})}, T2,
                                           Side::left_row, Q);
    CHECK(u.reps[0].mat == mat(Q, 2, 2, {0, 1, 0, 0}));
    CHECK(u.reps[1].mat.is_zero());

    NestTuple z = nest_phi_from_generators({}, T2, Side::left_row, Q);
    CHECK(z.is_zero());

    CHECK_THROWS_AS(nest_phi_from_generators({mat(Q, 2, 2, {0, 0, 1, 0})}, T2,
                                             Side::left_row, Q),
                    std::domain_error);
}

TEST_CASE("nest_contains") {
    NestTuple full = nest_phi_from_generators({Matrix::identity(Q, 2)}, T2,
                                              Side::left_row, Q);
    CHECK(nest_contains(full, mat(Q, 2, 2, {3, 5, 0, 7})));
    NestTuple corner = nest_phi_from_generators({mat(Q, 2, 2, {0, 1, 0, 0})}, T2,
                                                Side::left_row, Q);
    CHECK_FALSE(nest_contains(corner, mat(Q, 2, 2, {1, 0, 0, 0})));
    CHECK(nest_contains(corner, Matrix::zero(Q, 2, 2)));
}

TEST_CASE("sum and intersection are componentwise") {
    Matrix e12 = mat(G2, 2, 2, {0, 1, 0, 0});
    NestTuple t1 = left_tuple(G2, T2, {e12});
    NestTuple t2 = left_tuple(G2, T2, {e12, e12});
    NestTuple s = nest_sum(t1, t2);
    CHECK(s == t2);
    CHECK(nest_intersect(t1, t2) == t1);
    CHECK(nest_intersect(t2, t2) == t2);
    CHECK(nest_sum(t1, zero_tuple(T2, Side::left_row, G2)) == t1);
    CHECK(validate_tuple(s));
}

TEST_CASE("check_generates") {
    NestTuple full = nest_phi_from_generators({Matrix::identity(Q, 2)}, T2,
                                              Side::left_row, Q);
    CHECK(check_generates(full, Matrix::identity(Q, 2)));
    CHECK_FALSE(check_generates(full, mat(Q, 2, 2, {1, 1, 0, 0})));
    CHECK(check_generates(nest_phi_from_generators({}, T2, Side::left_row, Q),
                          Matrix::zero(Q, 2, 2)));
}

TEST_CASE("upper triangular special case: row spans accumulate upward") {
    // all-parts-one nest: each R_i spans the rows i..m of the generator
    BlockShape t3{{1, 1, 1}, {1, 1, 1}};
    std::mt19937_64 rng(41);
    Matrix a = testutil::random_nest_member(Q, t3, rng);
    NestTuple t = nest_phi_from_generators({a}, t3, Side::left_row, Q);
    for (std::size_t i = 0; i < 3; ++i) {
        Matrix stack = a.submatrix(i, 0, 3 - i, 3);
        CHECK(t.reps[i] == lrref(stack.resized(3, 3)));
    }
    CHECK(check_generates(t, a));
}

TEST_CASE("principality criterion") {
    Matrix e12 = mat(Q, 2, 2, {0, 1, 0, 0});
    CHECK(nest_is_principal(left_tuple(Q, T2, {Matrix::identity(Q, 2), e12})));
    CHECK_FALSE(nest_is_principal(left_tuple(Q, T2, {Matrix::identity(Q, 2)})));
    CHECK(nest_is_principal(zero_tuple(T2, Side::left_row, Q)));
}

TEST_CASE("principal generator") {
    NestTuple full = left_tuple(Q, T2, {Matrix::identity(Q, 2),
                                        mat(Q, 2, 2, {0, 1, 0, 0})});
    Matrix a = nest_principal_generator(full);
    CHECK(a == Matrix::identity(Q, 2));
    CHECK(nest_principal_generator(zero_tuple(T2, Side::left_row, Q)).is_zero());
    CHECK_THROWS_AS(nest_principal_generator(left_tuple(Q, T2, {Matrix::identity(Q, 2)})),
                    std::domain_error);
}

TEST_CASE("generator soundness on random principal tuples") {
    std::mt19937_64 rng(43);
    BlockShape shape{{1, 2}, {1, 2}};
    for (Ring r : {Q, G2, Ring::quaternions()}) {
        for (int t = 0; t < 10; ++t) {
            Matrix g = testutil::random_nest_member(r, shape, rng);
            NestTuple tup = nest_phi_from_generators({g}, shape, Side::left_row, r);
            REQUIRE(validate_tuple(tup));
            REQUIRE(nest_is_principal(tup));  // generated by one matrix
            Matrix back = nest_principal_generator(tup);
            CHECK(nest_phi_from_generators({back}, shape, Side::left_row, r) == tup);
        }
    }
}

TEST_CASE("block rows are closed under left multiplication") {
    std::mt19937_64 rng(47);
    BlockShape shape{{2, 1}, {2, 1}};
    Matrix g = testutil::random_nest_member(Q, shape, rng);
    NestTuple t = nest_phi_from_generators({g}, shape, Side::left_row, Q);
    for (std::size_t i = 0; i < t.reps.size(); ++i) {
        CHECK(lrref(t.reps[i].mat) == t.reps[i]);
        // random left multiplier keeps the block row inside its span
        std::size_t mi = shape.row_parts[i];
        Matrix b = testutil::random_matrix(Q, mi, mi, rng);
        Matrix row = t.reps[i].mat.resized(mi, shape.cols());
        CHECK(lrs_leq(b * row, t.reps[i].mat));
    }
}

TEST_CASE("right side transport") {
    NestTuple t = nest_phi_from_generators({Matrix::identity(Q, 2)}, T2,
                                           Side::right_column, Q);
    CHECK(t.side == Side::right_column);
    CHECK(validate_tuple(t));
    // block column 1 of J spans e_1; block column 2 spans everything
    CHECK(t.reps[0].mat == mat(Q, 2, 2, {0, 1, 0, 0}));
    CHECK(rcref(t.reps[0].mat).mat == mat(Q, 2, 2, {1, 0, 0, 0}));
    CHECK(t.reps[1].mat == Matrix::identity(Q, 2));
    CHECK(nest_contains(t, mat(Q, 2, 2, {1, 2, 0, 3})));

    CHECK(nest_is_principal(t));
    Matrix g = nest_principal_generator(t);
    CHECK(nest_phi_from_generators({g}, T2, Side::right_column, Q) == t);

    // transport law: duality round-trips
    CHECK(tuple_dual(tuple_dual(t)) == t);

    // a triangular generator invertible inside the nest algebra also
    // generates everything on the right
    NestTuple c = nest_phi_from_generators({mat(Q, 2, 2, {1, 2, 0, 3})}, T2,
                                           Side::right_column, Q);
    CHECK(c == t);
}

TEST_CASE("componentwise star stays in the tuple space") {
    auto corner = left_tuple(G2, T2, {mat(G2, 2, 2, {0, 1, 0, 0})});
    auto full = left_tuple(G2, T2, {Matrix::identity(G2, 2),
                                    mat(G2, 2, 2, {0, 1, 0, 0})});
    NestTuple p = componentwise_star(corner, full);
    CHECK(validate_tuple(p));
    NestTuple q = componentwise_star(full, full);
    CHECK(validate_tuple(q));
}

}  // TEST_SUITE
