// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "povmkit.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    povmkit_string_free(s);
    return out;
}

} // namespace

TEST_CASE("version and error reporting") {
    CHECK(povmkit_version() != nullptr);
    povmkit_vector_set* set = nullptr;
    CHECK(povmkit_vector_set_builtin("no-such-entry", -1, &set) == POVMKIT_ERROR_INVALID_INPUT);
    CHECK(std::strlen(povmkit_last_error()) > 0);
    CHECK(set == nullptr);
}

TEST_CASE("builtin sets through the c api") {
    povmkit_vector_set* set = nullptr;
    REQUIRE(povmkit_vector_set_builtin("trine", -1, &set) == POVMKIT_OK);
    CHECK(povmkit_vector_set_size(set) == 3);

    char* text = nullptr;
    REQUIRE(povmkit_vector_set_to_json(set, &text) == POVMKIT_OK);
    const json doc = json::parse(take(text));
    CHECK(doc.at("kind") == "vector_set");
    CHECK(doc.at("vectors").size() == 3);
    povmkit_vector_set_free(set);

    povmkit_vector_set* pentagon = nullptr;
    REQUIRE(povmkit_vector_set_builtin("polygon", 5, &pentagon) == POVMKIT_OK);
    CHECK(povmkit_vector_set_size(pentagon) == 5);
    povmkit_vector_set_free(pentagon);

    CHECK(povmkit_vector_set_builtin(nullptr, -1, &set) == POVMKIT_ERROR_INVALID_INPUT);
}

TEST_CASE("vector sets parse from json") {
    const char* good = R"({"kind":"vector_set","vectors":[[0,0,1],[0,0,-1]]})";
    povmkit_vector_set* set = nullptr;
    REQUIRE(povmkit_vector_set_from_json(good, &set) == POVMKIT_OK);
    CHECK(povmkit_vector_set_size(set) == 2);
    povmkit_vector_set_free(set);

    const char* unbalanced = R"({"kind":"vector_set","vectors":[[0,0,1],[1,0,0]]})";
    CHECK(povmkit_vector_set_from_json(unbalanced, &set) == POVMKIT_ERROR_INVALID_INPUT);
    CHECK(std::string(povmkit_last_error()).find("completeness") != std::string::npos);

    CHECK(povmkit_vector_set_from_json("{bad", &set) == POVMKIT_ERROR_INVALID_INPUT);
}

TEST_CASE("analyze through the c api") {
    povmkit_vector_set* set = nullptr;
    REQUIRE(povmkit_vector_set_builtin("trine", -1, &set) == POVMKIT_OK);

    char* report = nullptr;
    REQUIRE(povmkit_analyze(set, 20, 0.0, 1, &report) == POVMKIT_OK);
    const json doc = json::parse(take(report));
    CHECK(doc.at("kind") == "admissibility");
    std::set<int> allowed;
    for (const auto& row : doc.at("rows"))
        if (row.at("allowed").get<bool>()) allowed.insert(row.at("l").get<int>());
    CHECK(allowed == std::set<int>{0, 1});

    REQUIRE(povmkit_analyze(set, 6, 0.0, 0, &report) == POVMKIT_OK);
    CHECK(take(report).find("allowed: 0 1") != std::string::npos);

    CHECK(povmkit_analyze(set, 0, 0.0, 1, &report) == POVMKIT_ERROR_INVALID_INPUT);
    povmkit_vector_set_free(set);
}

TEST_CASE("platonic table through the c api") {
    char* report = nullptr;
    REQUIRE(povmkit_platonic_table(17, 1, &report) == POVMKIT_OK);
    const json doc = json::parse(take(report));
    REQUIRE(doc.at("rows").size() == 5);
    CHECK(doc.at("rows")[0].at("allowed") == json::array({0, 1, 2, 5}));
    for (const auto& row : doc.at("rows"))
        CHECK(row.at("matches_reference") == true);
    CHECK(povmkit_platonic_table(3, 1, &report) == POVMKIT_ERROR_INVALID_INPUT);
}

TEST_CASE("decompose through the c api") {
    const char* effect = R"({"dim":2,"re":[[0.3,0],[0,0.7]],"im":[[0,0],[0,0]]})";
    char* report = nullptr;
    REQUIRE(povmkit_decompose(effect, 1, &report) == POVMKIT_OK);
    const json doc = json::parse(take(report));
    CHECK(doc.at("terms").size() == 3);
    CHECK(doc.at("reconstruction_error").get<double>() < 1e-12);

    const char* not_effect = R"({"dim":2,"re":[[2,0],[0,0.5]],"im":[[0,0],[0,0]]})";
    CHECK(povmkit_decompose(not_effect, 1, &report) == POVMKIT_ERROR_INVALID_INPUT);
}

TEST_CASE("validate through the c api") {
    const char* good = R"({"kind":"povm","effects":[
        {"dim":2,"re":[[1,0],[0,0]],"im":[[0,0],[0,0]]},
        {"dim":2,"re":[[0,0],[0,1]],"im":[[0,0],[0,0]]}]})";
    char* report = nullptr;
    REQUIRE(povmkit_validate_povm(good, 1, &report) == POVMKIT_OK);
    const json doc = json::parse(take(report));
    CHECK(doc.at("valid") == true);

    const char* incomplete = R"({"kind":"povm","effects":[
        {"dim":2,"re":[[1,0],[0,0]],"im":[[0,0],[0,0]]}]})";
    CHECK(povmkit_validate_povm(incomplete, 1, &report) == POVMKIT_ERROR_INVALID_INPUT);
    CHECK(std::string(povmkit_last_error()).find("identity") != std::string::npos);
}

TEST_CASE("reconstruct through the c api") {
    // Samples generated from W = 1/2: the four required qubit effects are
    // I/sqrt(2) and (sigma/sqrt(2) + 1)/2; Born values are 1/sqrt(2) and 1/2.
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const double h = 0.5 * inv_sqrt2;
    json samples = {
        {"kind", "frame_samples"},
        {"dim", 2},
        {"samples",
         json::array(
             {{{"effect",
                {{"dim", 2},
                 {"re", {{inv_sqrt2, 0.0}, {0.0, inv_sqrt2}}},
                 {"im", {{0.0, 0.0}, {0.0, 0.0}}}}},
               {"value", inv_sqrt2}},
              {{"effect",
                {{"dim", 2}, {"re", {{0.5, h}, {h, 0.5}}}, {"im", {{0.0, 0.0}, {0.0, 0.0}}}}},
               {"value", 0.5}},
              {{"effect",
                {{"dim", 2}, {"re", {{0.5, 0.0}, {0.0, 0.5}}}, {"im", {{0.0, -h}, {h, 0.0}}}}},
               {"value", 0.5}},
              {{"effect",
                {{"dim", 2},
                 {"re", {{0.5 + h, 0.0}, {0.0, 0.5 - h}}},
                 {"im", {{0.0, 0.0}, {0.0, 0.0}}}}},
               {"value", 0.5}}})}};

    char* density = nullptr;
    char* diagnostics = nullptr;
    REQUIRE(povmkit_reconstruct(samples.dump().c_str(), &density, &diagnostics) == POVMKIT_OK);
    const json w = json::parse(take(density));
    CHECK(w.at("dim") == 2);
    CHECK(w.at("re")[0][0].get<double>() == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(w.at("re")[1][1].get<double>() == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(take(diagnostics).find("trace deviation") != std::string::npos);

    // Perturb the last value: semantic failure with diagnostics.
    samples["samples"][3]["value"] = 0.5 + 0.4;
    CHECK(povmkit_reconstruct(samples.dump().c_str(), &density, &diagnostics) ==
          POVMKIT_ERROR_SEMANTIC);
    CHECK(std::strlen(povmkit_last_error()) > 0);

    // Drop one sample: invalid input.
    samples["samples"][3]["value"] = 0.5;
    samples["samples"].erase(2);
    CHECK(povmkit_reconstruct(samples.dump().c_str(), &density, &diagnostics) ==
          POVMKIT_ERROR_INVALID_INPUT);
}

TEST_CASE("null argument handling") {
    CHECK(povmkit_vector_set_from_json(nullptr, nullptr) == POVMKIT_ERROR_INVALID_INPUT);
    CHECK(povmkit_vector_set_size(nullptr) == 0);
    povmkit_vector_set_free(nullptr); // must be a no-op
    povmkit_string_free(nullptr);
}
