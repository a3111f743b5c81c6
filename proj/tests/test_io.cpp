#include "doctest.h"

#include "layersort/instance_io.hpp"

#include "fixtures.hpp"

using namespace layersort;

namespace {

const std::string kData = LAYERSORT_DATA_DIR;

std::string interval_model_text() {
    return R"({
      "kind": "interval-value",
      "alpha_d": 0.7,
      "criteria": [
        {"name": "yield", "weight": [0.2, 0.4]},
        {"name": "purity", "weight": [0.3, 0.35]},
        {"name": "margin", "weight": [0.3, 0.45]}
      ],
      "classes": ["Reject", "Review", "Accept"],
      "boundaries": [
        {"actions": [
          {"layer": "upper", "id": "u1", "performance": [[1, 2], 1, [1, 1.5]]},
          {"layer": "lower", "id": "l1", "performance": [[4, 5], 4, [4, 4.5]]}
        ]},
        {"actions": [
          {"layer": "upper", "id": "u2", "performance": [[7, 8], 7, [7, 7.5]]},
          {"layer": "lower", "id": "l2", "performance": [[10, 11], 10, [10, 10.5]]}
        ]}
      ]
    })";
}

}  // namespace

TEST_CASE("the packaged model files load into the worked instances") {
    const auto one = load_model(kData + "/example1.model");
    CHECK(one.kind == ModelKind::Electre);
    CHECK(one.criterion_names == std::vector<std::string>{"g1", "g2", "g3", "g4", "g5"});
    CHECK(one.minimized == std::vector<bool>(5, false));
    CHECK(one.electre == fixtures::example1());

    const auto two = load_model(kData + "/example2.model");
    CHECK(two.dimension() == 4);
    CHECK(two.electre.params.lambda == doctest::Approx(0.85));
    CHECK(two.electre.system == fixtures::example2().system);
    // criterion names in the file are descriptive; numerics must agree
    const auto expected = fixtures::example2().params;
    for (std::size_t j = 0; j < 4; ++j) {
        const auto& got = two.electre.params.criteria[j];
        const auto& want = expected.criteria[j];
        CHECK(got.weight == doctest::Approx(want.weight));
        CHECK(got.q == doctest::Approx(want.q));
        CHECK(got.p == doctest::Approx(want.p));
        CHECK(*got.u == doctest::Approx(*want.u));
        CHECK(*got.v == doctest::Approx(*want.v));
    }
    CHECK(load_model(kData + "/example2.model") == two);
    CHECK_THROWS_AS(load_model(kData + "/no-such-file.model"), IoError);
}

TEST_CASE("serialization round-trips both model kinds") {
    const auto one = load_model(kData + "/example1.model");
    CHECK(parse_model(serialize_model(one)) == one);
    const auto iv = parse_model(interval_model_text());
    CHECK(parse_model(serialize_model(iv)) == iv);
}

TEST_CASE("minimizing criteria are negated into canonical form") {
    std::string text = R"({
      "kind": "electre", "lambda": 0.7,
      "criteria": [
        {"name": "cost", "direction": "min", "weight": 0.5, "q": 0, "p": 1},
        {"name": "value", "direction": "max", "weight": 0.5, "q": 0, "p": 1}
      ],
      "classes": ["Bad", "Good"],
      "boundaries": [
        {"actions": [
          {"layer": "upper", "id": "u", "performance": [5, 1]},
          {"layer": "lower", "id": "l", "performance": [2, 4]}
        ]}
      ]
    })";
    const auto inst = parse_model(text);
    CHECK(inst.minimized == std::vector<bool>{true, false});
    CHECK(inst.electre.system.boundary(1).upper[0].scores == std::vector<double>{-5, 1});
    CHECK(inst.electre.system.boundary(1).lower[0].scores == std::vector<double>{-2, 4});
    // canonical serialization emits the negated scores as "max"
    const auto round = parse_model(serialize_model(inst));
    CHECK(round.minimized == std::vector<bool>{false, false});
    CHECK(round.electre.system == inst.electre.system);

    const auto actions = parse_actions("a, 3, 2\n", inst);
    REQUIRE(actions.size() == 1);
    CHECK(actions[0].scores == std::vector<double>{-3, 2});
}

TEST_CASE("model parsing rejects malformed documents") {
    const auto base = load_model(kData + "/example1.model");
    (void)base;
    CHECK_THROWS_AS(parse_model("not json"), IoError);
    CHECK_THROWS_AS(parse_model(R"({"kind": "promethee"})"), IoError);
    SUBCASE("boundary count must match the class count") {
        std::string text = R"({
          "kind": "electre", "lambda": 0.7,
          "criteria": [{"name": "g1", "weight": 1, "q": 0, "p": 1}],
          "classes": ["A", "B", "C"],
          "boundaries": [
            {"actions": [{"layer": "upper", "id": "u", "performance": [1]},
                         {"layer": "lower", "id": "l", "performance": [3]}]}
          ]
        })";
        CHECK_THROWS_WITH_AS(parse_model(text), doctest::Contains("boundaries"), IoError);
    }
    SUBCASE("invalid parameters are rejected at load time") {
        std::string text = R"({
          "kind": "electre", "lambda": 0.4,
          "criteria": [{"name": "g1", "weight": 1, "q": 0, "p": 1}],
          "classes": ["A", "B"],
          "boundaries": [
            {"actions": [{"layer": "upper", "id": "u", "performance": [1]},
                         {"layer": "lower", "id": "l", "performance": [3]}]}
          ]
        })";
        CHECK_THROWS_AS(parse_model(text), ParameterError);
    }
    SUBCASE("interval models refuse minimizing criteria") {
        std::string text = R"({
          "kind": "interval-value", "alpha_d": 0.7,
          "criteria": [{"name": "g1", "direction": "min", "weight": [1, 1]}],
          "classes": ["A", "B"],
          "boundaries": [
            {"actions": [{"layer": "upper", "id": "u", "performance": [1]},
                         {"layer": "lower", "id": "l", "performance": [3]}]}
          ]
        })";
        CHECK_THROWS_WITH_AS(parse_model(text), doctest::Contains("minimizing"), IoError);
    }
    SUBCASE("interval scores must be nonnegative") {
        auto text = interval_model_text();
        const auto pos = text.find("[1, 2]");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 6, "[-1, 2]");
        CHECK_THROWS_WITH_AS(parse_model(text), doctest::Contains("negative"), IoError);
    }
}

TEST_CASE("action tables parse with headers, comments and validation") {
    const auto inst = load_model(kData + "/example1.model");
    const std::string table =
        "id, g1, g2, g3, g4, g5\n"
        "# audit batch 7\n"
        "x, 2, 1, 2, 1, 2\n"
        "\n"
        "y, 0, 0, 0, 0, 0  # baseline\n";
    const auto actions = parse_actions(table, inst);
    REQUIRE(actions.size() == 2);
    CHECK(actions[0] == fixtures::example1_x());
    CHECK(actions[1].id == "y");

    CHECK_THROWS_WITH_AS(parse_actions("x, 1, 2\n", inst), doctest::Contains("columns"), IoError);
    CHECK_THROWS_WITH_AS(parse_actions("x, 1, 2, 3, 4, oops\n", inst),
                         doctest::Contains("non-numeric"), IoError);
    CHECK_THROWS_WITH_AS(parse_actions("x, 1, 2, 3, 4, 5\nx, 1, 2, 3, 4, 5\n", inst),
                         doctest::Contains("duplicate"), IoError);
}

TEST_CASE("interval action tables accept lo:hi cells") {
    const auto inst = parse_model(interval_model_text());
    const auto actions = parse_interval_actions("a, 1:2, 3, 0.5:0.5\n", inst);
    REQUIRE(actions.size() == 1);
    CHECK(actions[0].scores[0] == IntervalNumber{1, 2});
    CHECK(actions[0].scores[1] == IntervalNumber{3, 3});
    CHECK(actions[0].scores[2] == IntervalNumber{0.5, 0.5});
    CHECK_THROWS_WITH_AS(parse_interval_actions("a, 2:1, 3, 4\n", inst),
                         doctest::Contains("bad interval"), IoError);
    CHECK_THROWS_WITH_AS(parse_interval_actions("a, -1, 3, 4\n", inst),
                         doctest::Contains("negative"), IoError);
}

TEST_CASE("save and load through the filesystem") {
    const auto inst = load_model(kData + "/example1.model");
    const std::string path = "roundtrip-test.model";
    save_model(inst, path);
    CHECK(load_model(path) == inst);
    std::remove(path.c_str());
}
