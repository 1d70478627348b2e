#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "qframes/errors.hpp"
#include "qframes/harness.hpp"
#include "qframes/json_io.hpp"

using namespace qframes;

TEST_CASE("scalar, vector, and matrix round trips are bit exact") {
    Rng rng(81);
    for (int t = 0; t < 50; ++t) {
        const Quaternion q = gen_quaternion(rng);
        CHECK(quaternion_from_json(Json::parse(dump_json(to_json(q)))) == q);

        const QVector v = gen_vector(rng, 5);
        CHECK(qvector_from_json(Json::parse(dump_json(to_json(v)))) == v);

        const QMatrix m = gen_matrix(rng, 3, 4);
        CHECK(qmatrix_from_json(Json::parse(dump_json(to_json(m)))) == m);
    }
}

TEST_CASE("frame and super frame round trips") {
    Rng rng(82);
    const FrameSystem f = gen_frame(rng, 4, 8);
    const FrameSystem f2 = frame_from_json(Json::parse(dump_json(to_json(f))));
    CHECK(f2.dim == f.dim);
    REQUIRE(f2.length() == f.length());
    for (std::size_t i = 0; i < f.length(); ++i) {
        CHECK(f2.vectors[i] == f.vectors[i]);
    }
    CHECK(f2.synthesis == f.synthesis);

    const SuperFrame sf = make_super_frame(gen_frame(rng, 4, 8), gen_frame(rng, 3, 8));
    const SuperFrame sf2 = super_frame_from_json(Json::parse(dump_json(to_json(sf))));
    CHECK(sf2.dim_left() == 4);
    CHECK(sf2.dim_right() == 3);
    CHECK(sf2.combined.synthesis == sf.combined.synthesis);
}

TEST_CASE("operator files accept single matrices and block pairs") {
    Rng rng(83);
    const QMatrix k = gen_matrix(rng, 4, 4);
    const LoadedOperator single = operator_from_json(to_json(k));
    REQUIRE(single.single);
    CHECK(*single.single == k);
    CHECK_FALSE(single.blocks);

    const QMatrix k2 = gen_matrix(rng, 3, 3);
    const LoadedOperator blocks =
        operator_from_json(Json{{"K1", to_json(k)}, {"K2", to_json(k2)}});
    REQUIRE(blocks.blocks);
    CHECK(blocks.blocks->first == k);
    CHECK(blocks.blocks->second == k2);
}

TEST_CASE("malformed documents raise ParseError") {
    CHECK_THROWS_AS(quaternion_from_json(Json::array({1.0, 2.0})), ParseError);
    CHECK_THROWS_AS(quaternion_from_json(Json::array({1.0, 2.0, "x", 4.0})), ParseError);
    CHECK_THROWS_AS(qmatrix_from_json(Json{{"rows", 2}, {"cols", 2}}), ParseError);
    CHECK_THROWS_AS(
        qmatrix_from_json(Json{{"rows", 2}, {"cols", 2}, {"data", Json::array()}}),
        ParseError);
    CHECK_THROWS_AS(frame_from_json(Json{{"dim", 2}, {"vectors", Json::array()}}),
                    ParseError);
    Json short_vec{{"dim", 2},
                   {"vectors", Json::array({Json::array({Json::array({1.0, 0, 0, 0})})})}};
    CHECK_THROWS_AS(frame_from_json(short_vec), ParseError);
}

TEST_CASE("file loading reports positions for broken JSON") {
    const std::string path = "broken_test_input.json";
    {
        std::ofstream out(path);
        out << "{ \"dim\": 2, ";
    }
    CHECK_THROWS_AS(load_json_file(path), ParseError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_json_file("does_not_exist.json"), ParseError);
}

TEST_CASE("serialization is stable") {
    Rng rng(84);
    const FrameSystem f = gen_frame(rng, 3, 5);
    const std::string once = dump_json(to_json(f));
    const std::string twice = dump_json(to_json(frame_from_json(Json::parse(once))));
    CHECK(once == twice);
}
