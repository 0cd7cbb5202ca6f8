#include <doctest.h>

#include "test_util.hpp"

using namespace nestlat;

namespace {
const Ring Q = Ring::rationals();
const Ring H = Ring::quaternions();

Matrix quat1x1(const Elem& e) {
    Matrix m(H, 1, 1);
    m.at(0, 0) = e;
    return m;
}
}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("standard matrices") {
    Matrix e12 = Matrix::standard(Q, 2, 2, 0, 1);
    CHECK(e12.at(0, 1).is_one());
    CHECK(e12.at(0, 0).is_zero());
    Matrix e11 = Matrix::standard(Q, 1, 3, 0, 0);
    CHECK(e11.at(0, 0).is_one());
    CHECK_THROWS_AS(Matrix::standard(Q, 2, 2, 2, 0), std::invalid_argument);
}

TEST_CASE("multiplication") {
    Matrix e12 = Matrix::standard(Q, 2, 2, 0, 1);
    Matrix e21 = Matrix::standard(Q, 2, 2, 1, 0);
    CHECK(e12 * e21 == Matrix::standard(Q, 2, 2, 0, 0));
    CHECK(quat1x1(quat_i()) * quat1x1(quat_j()) == quat1x1(quat_k()));
    CHECK(quat1x1(quat_j()) * quat1x1(quat_i()) == quat1x1(-quat_k()));
    CHECK_THROWS_AS(e12 * Matrix::identity(Q, 3), std::invalid_argument);
}

TEST_CASE("standard matrix action picks out rows and columns") {
    std::mt19937_64 rng(3);
    Matrix a = testutil::random_matrix(H, 3, 4, rng);
    // E_ij A has row j of A in its i-th row, zero elsewhere.
    Matrix lhs = Matrix::standard(H, 3, 3, 0, 2) * a;
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(lhs.at(0, j) == a.at(2, j));
        CHECK(lhs.at(1, j).is_zero());
        CHECK(lhs.at(2, j).is_zero());
    }
    // A E_ij has column i of A in its j-th column.
    Matrix rhs = a * Matrix::standard(H, 4, 4, 1, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(rhs.at(i, 3) == a.at(i, 1));
        CHECK(rhs.at(i, 0).is_zero());
    }
}

TEST_CASE("blocks") {
    BlockShape s({1, 2}, {1, 2});
    Matrix i3 = Matrix::identity(Q, 3);
    CHECK(i3.block(s, 0, 1) == Matrix::zero(Q, 1, 2));
    CHECK(i3.block(s, 1, 1) == Matrix::identity(Q, 2));
    CHECK_THROWS_AS(i3.block(BlockShape({1, 1}, {1, 2}), 0, 0), std::invalid_argument);

    Matrix x(Q, 1, 1);
    x.at(0, 0) = Elem::one(Q);
    BlockShape s11({1, 1}, {1, 1});
    CHECK(Matrix::embed_block(x, s11, 0, 1) == Matrix::standard(Q, 2, 2, 0, 1));
    CHECK(Matrix::embed_block(Matrix::zero(Q, 1, 2), s, 0, 1).is_zero());
    CHECK_THROWS_AS(Matrix::embed_block(Matrix::zero(Q, 2, 2), s, 0, 0),
                    std::invalid_argument);
}

TEST_CASE("nest membership") {
    BlockShape s11({1, 1}, {1, 1});
    CHECK(Matrix::identity(Q, 2).nest_member(s11));
    CHECK_FALSE(Matrix::standard(Q, 2, 2, 1, 0).nest_member(s11));
    std::mt19937_64 rng(5);
    Matrix a = testutil::random_matrix(Q, 2, 2, rng);
    CHECK(a.nest_member(BlockShape({2}, {2})));  // single block: no constraint
}

TEST_CASE("op_transpose") {
    Matrix e11 = Matrix::standard(Q, 2, 2, 0, 0);
    Matrix t = e11.op_transpose();
    CHECK(t.ring() == Ring::opposite(Q));
    CHECK(t.at(0, 0).is_one());

    // anti-isomorphism: (AB)^t = B^t A^t over the opposite ring
    Matrix ij = quat1x1(quat_i()) * quat1x1(quat_j());
    CHECK(ij.op_transpose() ==
          quat1x1(quat_j()).op_transpose() * quat1x1(quat_i()).op_transpose());

    std::mt19937_64 rng(9);
    for (int tcase = 0; tcase < 50; ++tcase) {
        Matrix a = testutil::random_matrix(H, 2, 3, rng);
        Matrix b = testutil::random_matrix(H, 3, 2, rng);
        CHECK((a * b).op_transpose() == b.op_transpose() * a.op_transpose());
        CHECK(a.op_transpose().op_transpose() == a);  // involution
    }
}

TEST_CASE("anti_transpose") {
    // mirrors across the anti-diagonal, so upper triangular stays upper
    Matrix a = testutil::mat(Q, 2, 2, {1, 2, 0, 3});
    Matrix t = a.anti_transpose();
    CHECK(t == testutil::mat(Ring::opposite(Q), 2, 2, {3, 2, 0, 1}));
    BlockShape t2{{1, 1}, {1, 1}};
    CHECK(t.nest_member(t2.op_transposed()));

    std::mt19937_64 rng(11);
    for (int tcase = 0; tcase < 50; ++tcase) {
        Matrix x = testutil::random_matrix(H, 2, 3, rng);
        Matrix y = testutil::random_matrix(H, 3, 2, rng);
        CHECK((x * y).anti_transpose() == y.anti_transpose() * x.anti_transpose());
        CHECK(x.anti_transpose().anti_transpose() == x);
    }
}

TEST_CASE("associativity over quaternions") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 30; ++t) {
        Matrix a = testutil::random_matrix(H, 2, 3, rng);
        Matrix b = testutil::random_matrix(H, 3, 2, rng);
        Matrix c = testutil::random_matrix(H, 2, 2, rng);
        CHECK((a * b) * c == a * (b * c));
    }
}

}  // TEST_SUITE
