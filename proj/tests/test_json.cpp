#include <doctest.h>

#include "nestlat/json_io.hpp"
#include "test_util.hpp"

using namespace nestlat;
using testutil::mat;

namespace {
const Ring Q = Ring::rationals();
const Ring G7 = Ring::prime_field(7);
const Ring H = Ring::quaternions();
}  // namespace

TEST_SUITE("json") {

TEST_CASE("matrix round trip is byte stable") {
    std::mt19937_64 rng(53);
    for (Ring r : {Q, G7, H}) {
        for (int t = 0; t < 20; ++t) {
            Matrix m = testutil::random_matrix(r, 3, 2, rng);
            Json j = matrix_to_json(m);
            Matrix back = matrix_from_json(j);
            CHECK(back == m);
            CHECK(matrix_to_json(back).dump() == j.dump());
        }
    }
}

TEST_CASE("rational literals") {
    Json j = Json::parse(R"({"ring":"Q","rows":1,"cols":2,"entries":[["2/4","-3"]]})");
    Matrix m = matrix_from_json(j);
    CHECK(m.at(0, 0).as_rational() == mpq_class(1, 2));  // canonicalized
    CHECK(m.at(0, 1).as_rational() == mpq_class(-3));
    CHECK(elem_to_json(m.at(0, 0)) == Json("1/2"));
    CHECK(parse_rational(Json(5)) == mpq_class(5));
    CHECK_THROWS_AS(parse_rational(Json("1/0")), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(Json("abc")), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(Json(1.5)), std::invalid_argument);
}

TEST_CASE("prime field literals wrap into the field") {
    Json j = Json::parse(R"x({"ring":"GF(7)","rows":1,"cols":3,"entries":[[9,-1,"6"]]})x");
    Matrix m = matrix_from_json(j);
    CHECK(m.at(0, 0) == Elem::gf(2, G7));
    CHECK(m.at(0, 1) == Elem::gf(6, G7));
    CHECK(m.at(0, 2) == Elem::gf(6, G7));
    CHECK(elem_to_json(m.at(0, 0)) == Json(2));
}

TEST_CASE("quaternion literals") {
    Json lit = Json::array({"1", "-1/2", "0", "3"});
    Elem e = elem_from_json(lit, H);
    CHECK(e.as_quaternion() ==
          Quaternion(mpq_class(1), mpq_class(-1, 2), mpq_class(0), mpq_class(3)));
    CHECK(elem_to_json(e) == Json::array({"1", "-1/2", "0", "3"}));
    CHECK_THROWS_AS(elem_from_json(Json::array({"1", "2", "3"}), H),
                    std::invalid_argument);
}

TEST_CASE("shape and size errors") {
    Json bad = Json::parse(R"({"ring":"Q","rows":2,"cols":2,"entries":[["1","2"]]})");
    CHECK_THROWS_AS(matrix_from_json(bad), std::invalid_argument);
    Json ragged =
        Json::parse(R"({"ring":"Q","rows":1,"cols":2,"entries":[["1","2","3"]]})");
    CHECK_THROWS_AS(matrix_from_json(ragged), std::invalid_argument);
    CHECK_THROWS_AS(Ring::parse("GF(6)"), std::invalid_argument);
}

TEST_CASE("generators document") {
    Json j = Json::parse(
        R"x({"ring":"GF(7)","rows":1,"cols":2,"generators":[[[1,0]],[[0,1]]]})x");
    Ring ring = Q;
    std::size_t rows = 0, cols = 0;
    auto gens = generators_from_json(j, &ring, &rows, &cols);
    CHECK(gens.size() == 2);
    CHECK(ring == G7);
    CHECK(rows == 1);
    CHECK(cols == 2);
    CHECK(gens[0] == mat(G7, 1, 2, {1, 0}));
}

TEST_CASE("echelon and tuple documents") {
    EchelonMatrix e = lrref(mat(Q, 2, 2, {0, 2, 1, 1}));
    Json j = echelon_to_json(e);
    CHECK(j["side"] == "left");
    CHECK(j["rank"] == 2);
    CHECK(j["pivots"] == Json::array({0, 1}));
    CHECK(matrix_from_json(j["matrix"]) == Matrix::identity(Q, 2));

    BlockShape t2{{1, 1}, {1, 1}};
    NestTuple t = nest_phi_from_generators({Matrix::identity(Q, 2)}, t2,
                                           Side::left_row, Q);
    Json tj = tuple_to_json(t);
    CHECK(tj["side"] == "left");
    CHECK(tj["shape"]["M"] == Json::array({1, 1}));
    CHECK(tj["reps"].size() == 2);

    Json dj = descriptor_to_json({t2, {1, 2}});
    CHECK(dj["i"] == 2);
    CHECK(dj["js"] == Json::array({1, 2}));
}

TEST_CASE("parse_shape") {
    BlockShape s = parse_shape("M=(1,2);N=(1,2)");
    CHECK(s.row_parts == std::vector<std::size_t>{1, 2});
    CHECK(s.col_parts == std::vector<std::size_t>{1, 2});
    CHECK(parse_shape("M=(3);N=(2)").rows() == 3);
    CHECK_THROWS_AS(parse_shape("M=(1,2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape("M=(1,x);N=(1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape("K=(1);N=(1)"), std::invalid_argument);
}

}  // TEST_SUITE
