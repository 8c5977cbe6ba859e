#include <doctest.h>

#include <json.hpp>

#include "test_util.hpp"
#include "vest/json_io.hpp"

using namespace vest;
using namespace vest::testutil;

TEST_CASE("instance round trip") {
    const FieldTag q = FieldTag::rational();
    Matrix t(q, 2, 2);
    t.set(0, 0, Scalar::rational(1, 2));
    t.set(0, 1, Scalar::of(q, -3));
    const VestInstance inst(q, 2, {t, Matrix::identity(q, 2)}, q_matrix({{1, 0}}),
                            q_vector({0, 1}), TargetVariant::VectorZero);
    const std::string text = instance_to_json(inst, 4);
    const InstanceFile file = instance_from_json(text);
    CHECK(file.instance.tag == inst.tag);
    CHECK(file.instance.dim == 2);
    CHECK(file.instance.transforms == inst.transforms);
    CHECK(*file.instance.s == *inst.s);
    CHECK(*file.instance.v == *inst.v);
    CHECK(file.instance.target == TargetVariant::VectorZero);
    CHECK(file.k == 4);
    // Serialization is canonical, so a second pass is byte-identical.
    CHECK(instance_to_json(file.instance, file.k) == text);
}

TEST_CASE("instance documents use the documented schema") {
    const auto doc = nlohmann::json::parse(instance_to_json(sample_z2_instance(), 2));
    CHECK(doc.at("field").at("kind") == "prime");
    CHECK(doc.at("field").at("p") == 2);
    CHECK(doc.at("dim") == 1);
    CHECK(doc.at("target") == "vector_zero");
    CHECK(doc.at("s").is_array());
    CHECK(doc.at("v") == nlohmann::json::array({"1"}));
    CHECK(doc.at("matrices").size() == 2);
    CHECK(doc.at("k") == 2);
}

TEST_CASE("matrix-target instances serialize s and v as null") {
    const VestInstance inst = make_matrix_target_instance(
        {Matrix::identity(FieldTag::rational(), 2)}, TargetVariant::MatrixZero);
    const auto doc = nlohmann::json::parse(instance_to_json(inst));
    CHECK(doc.at("s").is_null());
    CHECK(doc.at("v").is_null());
    CHECK(doc.at("k").is_null());
    const InstanceFile file = instance_from_json(instance_to_json(inst));
    CHECK(file.instance.target == TargetVariant::MatrixZero);
    CHECK_FALSE(file.k.has_value());
}

TEST_CASE("integer shorthand is accepted on input") {
    const std::string text = R"({
        "field": {"kind": "rational"}, "dim": 1, "target": "vector_zero",
        "s": null, "v": [1], "matrices": [[[ -2 ]], [["1/2"]]], "k": null})";
    const InstanceFile file = instance_from_json(text);
    CHECK(file.instance.transforms[0].at(0, 0) == Scalar::of(FieldTag::rational(), -2));
    CHECK(file.instance.transforms[1].at(0, 0) == Scalar::rational(1, 2));
}

TEST_CASE("malformed instances are rejected with MalformedInputError") {
    CHECK_THROWS_AS(instance_from_json("not json"), MalformedInputError);
    CHECK_THROWS_AS(instance_from_json("{}"), MalformedInputError);
    CHECK_THROWS_AS(instance_from_json(R"({"field": {"kind": "prime", "p": 4},
        "dim": 1, "target": "vector_zero", "s": null, "v": ["1"],
        "matrices": [[["1"]]], "k": null})"),
                    MalformedInputError);
    CHECK_THROWS_AS(instance_from_json(R"({"field": {"kind": "rational"},
        "dim": 1, "target": "nonsense", "s": null, "v": ["1"],
        "matrices": [[["1"]]], "k": null})"),
                    MalformedInputError);
    CHECK_THROWS_AS(load_instance("/nonexistent/path.json"), MalformedInputError);
}

TEST_CASE("graph text format") {
    const Graph g = graph_from_text("3 2\n0 1\n1 2\n");
    CHECK(g.n == 3);
    CHECK(g.edges.size() == 2);
    CHECK_THROWS_AS(graph_from_text(""), MalformedInputError);
    CHECK_THROWS_AS(graph_from_text("2 1\n0 0\n"), MalformedInputError); // loop
    CHECK_THROWS_AS(graph_from_text("2 2\n0 1\n1 0\n"), MalformedInputError); // multi-edge
    CHECK_THROWS_AS(graph_from_text("2 1\n"), MalformedInputError); // missing edge
}

TEST_CASE("set system and word pair documents") {
    const SetSystem sys = set_system_from_json(R"({"universe": 3, "sets": [[1, 3], [2]]})");
    CHECK(sys.universe == 3);
    CHECK(sys.sets == std::vector<std::vector<int>>{{1, 3}, {2}});
    CHECK_THROWS_AS(set_system_from_json(R"({"universe": 2, "sets": [[5]]})"),
                    MalformedInputError);
    CHECK_THROWS_AS(set_system_from_json(R"({"universe": 2, "sets": [[]]})"),
                    MalformedInputError);

    const PcpInstance bare = pcp_from_json(R"([["01", "1"], ["", "0"]])");
    CHECK(bare.pairs.size() == 2);
    const PcpInstance wrapped = pcp_from_json(R"({"pairs": [["0", "0"]]})");
    CHECK(wrapped.pairs.size() == 1);
    CHECK_THROWS_AS(pcp_from_json(R"([["0", "2"]])"), MalformedInputError);
}

TEST_CASE("integer sets accept numbers and strings") {
    const auto plain = integer_set_from_json("[1, -3, \"12345678901234567890\"]");
    REQUIRE(plain.size() == 3);
    CHECK(plain[2] == mpz_class("12345678901234567890"));
    const auto wrapped = integer_set_from_json(R"({"numbers": ["4"]})");
    CHECK(wrapped == std::vector<mpz_class>{4});
    CHECK_THROWS_AS(integer_set_from_json(R"(["x"])"), MalformedInputError);
}

TEST_CASE("number-set documents") {
    const auto doc = nlohmann::json::parse(
        rational_set_to_json("k_product_with_repetition_target_1",
                             {mpq_class(10), mpq_class(1, 150)}, 3));
    CHECK(doc.at("kind") == "k_product_with_repetition_target_1");
    CHECK(doc.at("numbers") == nlohmann::json::array({"10", "1/150"}));
    CHECK(doc.at("k") == 3);
}
