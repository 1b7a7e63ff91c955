#include <doctest.h>

#include "hadlab/json_io.hpp"

using namespace hadlab;

TEST_CASE("matrix JSON round trip with mixed entry forms") {
    const Json j = Json::parse(R"({
        "rows": 2, "cols": 6,
        "entries": [
          [{"re":1,"im":0},{"phase_turns":0.25},{"re":-1,"im":0},
           {"phase_turns":0.75},{"re":1,"im":0},{"re":-1,"im":0}],
          [{"phase_turns":0},{"re":0,"im":1},{"phase_turns":0.5},
           {"re":0,"im":-1},{"re":-1,"im":0},{"re":1,"im":0}]
        ]})");
    const CHMatrix m = matrix_from_json(j);
    CHECK(m.rows() == 2);
    CHECK(std::abs(m.value(0, 1) - std::complex<double>(0, 1)) <= 1e-15);
    CHECK(std::abs(m.value(1, 2) + 1.0) <= 1e-15);

    const CHMatrix again = matrix_from_json(matrix_to_json(m));
    CHECK(again.entrywise_close(m, 0.0));
}

TEST_CASE("matrix JSON validation") {
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":6})")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(
                        R"({"rows":2,"cols":6,"entries":[[],[]]})")),
                    std::invalid_argument);
    // Off-modulus entries are rejected at the gate.
    Json j = matrix_to_json(CHMatrix(2, 6));
    j["entries"][0][0] = Json::parse(R"({"re":2,"im":0})");
    CHECK_THROWS_AS(matrix_from_json(j), std::invalid_argument);
    j["entries"][0][0] = Json::parse(R"({"misnamed":1})");
    CHECK_THROWS_AS(matrix_from_json(j), std::invalid_argument);
}

TEST_CASE("dense grids accept unrestricted moduli but fixed shape") {
    Json j;
    j["rows"] = 6;
    j["cols"] = 6;
    Json rows = Json::array();
    for (int r = 0; r < 6; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 6; ++c) {
            Json e;
            e["re"] = (r == c) ? 0.5 : 0.0;
            e["im"] = 0.0;
            row.push_back(e);
        }
        rows.push_back(row);
    }
    j["entries"] = rows;
    const DenseMatrix d = dense_from_json(j);
    CHECK(std::abs(d.at(3, 3) - 0.5) <= 1e-15);

    j["rows"] = 4;
    CHECK_THROWS_AS(dense_from_json(j), std::invalid_argument);
}

TEST_CASE("reports serialize with stable keys") {
    Rng rng(51);
    const ClassificationReport rep = classify(d6(rng.unimodular()));
    const Json j = report_to_json(rep);
    CHECK(j["verdict"] == "TwoCirculant");
    CHECK(j["pattern_a_row"].is_null());
    CHECK(j["pattern_b"]["rows"] == Json::array({1, 2, 3}));
    CHECK(j["regular"] == true);
    CHECK(j["karlsson"]["row_pairs"].size() == 3);

    const EquivalenceMove mv = random_move(rng);
    const Json mj = move_to_json(mv);
    CHECK(mj["row_perm"].size() == 6);
    CHECK(mj["col_phases"][0].contains("re"));

    const Json wj = witness_to_json(witness_check_p63());
    CHECK(wj["holds"] == true);
    CHECK(wj["residual"] == "0");
}
