// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "povmkit/catalog.hpp"
#include "test_util.hpp"

using namespace povmkit;
using namespace povmkit::test;

namespace {

bool contains_vector(const UnitVectorSet& set, const Vector3& v, double tol = 1e-12) {
    return std::any_of(set.vectors().begin(), set.vectors().end(),
                       [&](const Vector3& w) { return (w - v).norm() < tol; });
}

bool antipodally_symmetric(const UnitVectorSet& set) {
    return std::all_of(set.vectors().begin(), set.vectors().end(),
                       [&](const Vector3& v) { return contains_vector(set, (-v).eval()); });
}

} // namespace

TEST_CASE("catalog coordinates") {
    const CatalogEntry trine = builtin_set("trine");
    REQUIRE(trine.vectors.size() == 3);
    const double h = std::sqrt(3.0) / 2.0;
    CHECK((trine.vectors.vectors()[0] - Vector3(1, 0, 0)).norm() < 1e-15);
    CHECK((trine.vectors.vectors()[1] - Vector3(-0.5, 0, h)).norm() < 1e-15);
    CHECK((trine.vectors.vectors()[2] - Vector3(-0.5, 0, -h)).norm() < 1e-15);

    const CatalogEntry tet2 = builtin_set("tet2");
    REQUIRE(tet2.vectors.size() == 4);
    const double a = 1.0 / 3.0;
    const double b = 2.0 * std::sqrt(2.0) / 3.0;
    const double c = std::sqrt(2.0) / 3.0;
    const double d = std::sqrt(2.0 / 3.0);
    CHECK((tet2.vectors.vectors()[0] - Vector3(0, 0, 1)).norm() < 1e-15);
    CHECK((tet2.vectors.vectors()[1] - Vector3(b, 0, -a)).norm() < 1e-15);
    CHECK((tet2.vectors.vectors()[2] - Vector3(-c, d, -a)).norm() < 1e-15);
    CHECK((tet2.vectors.vectors()[3] - Vector3(-c, -d, -a)).norm() < 1e-15);

    CHECK(builtin_set("octahedron").vectors.size() == 6);
    CHECK(builtin_set("cube").vectors.size() == 8);
    CHECK(builtin_set("dodecahedron").vectors.size() == 20);
    CHECK(builtin_set("icosahedron").vectors.size() == 12);
    CHECK(builtin_set("antipodal").vectors.size() == 2);

    const CatalogEntry digon = builtin_set("polygon", 2);
    REQUIRE(digon.vectors.size() == 2);
    CHECK((digon.vectors.vectors()[0] - Vector3(1, 0, 0)).norm() < 1e-15);
    CHECK((digon.vectors.vectors()[1] - Vector3(-1, 0, 0)).norm() < 1e-12);
}

TEST_CASE("catalog errors") {
    CHECK_THROWS_AS(builtin_set("hexagon"), UnknownNameError);
    CHECK_THROWS_AS(builtin_set("polygon"), BadParameterError);
    CHECK_THROWS_AS(builtin_set("polygon", 1), BadParameterError);
    CHECK_THROWS_AS(builtin_set("trine", 3), BadParameterError);
}

TEST_CASE("every catalog set yields a valid povm") {
    for (const std::string& name : builtin_names()) {
        const CatalogEntry entry =
            (name == "polygon") ? builtin_set(name, 7) : builtin_set(name);
        const Povm povm = effects_from_vector_set(entry.vectors);
        CHECK(povm.completeness_residual() < tol::complete);
    }
}

TEST_CASE("cube is tet1 with its antipodes; symmetry classes are right") {
    const UnitVectorSet cube = builtin_set("cube").vectors;
    const UnitVectorSet tet1 = builtin_set("tet1").vectors;
    for (const Vector3& v : tet1.vectors()) {
        CHECK(contains_vector(cube, v));
        CHECK(contains_vector(cube, (-v).eval()));
    }
    CHECK(antipodally_symmetric(cube));
    CHECK(antipodally_symmetric(builtin_set("octahedron").vectors));
    CHECK(antipodally_symmetric(builtin_set("dodecahedron").vectors));
    CHECK(antipodally_symmetric(builtin_set("icosahedron").vectors));
    CHECK_FALSE(antipodally_symmetric(tet1));
    CHECK_FALSE(antipodally_symmetric(builtin_set("trine").vectors));
}

TEST_CASE("tet1 rotated by -90 degrees about y matches tet2") {
    const UnitVectorSet tet1 = builtin_set("tet1").vectors;
    const UnitVectorSet tet2 = builtin_set("tet2").vectors;
    const UnitVectorSet rotated =
        rotate_set(tet1, Rotation3::axis_angle(Vector3::UnitY(), -std::numbers::pi / 2.0));
    for (std::size_t j = 0; j < 4; ++j)
        CHECK((rotated.vectors()[j] - tet2.vectors()[j]).norm() < 1e-12);
}

TEST_CASE("platonic second moments are isotropic; planar sets are not") {
    for (const char* name : {"tet1", "tet2", "octahedron", "cube", "dodecahedron", "icosahedron"})
        CHECK(second_moment(builtin_set(name).vectors).isotropic);
    CHECK_FALSE(second_moment(builtin_set("trine").vectors).isotropic);
    for (int n = 3; n <= 9; ++n)
        CHECK_FALSE(second_moment(builtin_set("polygon", n).vectors).isotropic);
}

TEST_CASE("polygon rule closed form") {
    CHECK(polygon_rule(3, 20) == std::set<int>{0, 1});
    CHECK(polygon_rule(5, 20) == std::set<int>{0, 1, 3});
    CHECK(polygon_rule(4, 9) == std::set<int>{0, 1, 3, 5, 7, 9});
    std::set<int> even_expected = odds_up_to(20);
    even_expected.insert(0);
    CHECK(polygon_rule(2, 20) == even_expected);
    CHECK(polygon_rule(8, 20) == even_expected);
    CHECK_THROWS_AS(polygon_rule(1, 20), BadParameterError);
}

TEST_CASE("numerical polygon admissibility matches the closed form") {
    for (int n = 2; n <= 9; ++n) {
        const UnitVectorSet polygon = builtin_set("polygon", n).vectors;
        const AdmissibilitySet numeric =
            admissible_harmonics(polygon, 20, default_tol_zero(polygon.size()));
        CHECK(numeric.allowed == polygon_rule(n, 20));
    }
}

TEST_CASE("platonic table") {
    const std::vector<PlatonicRow> rows = platonic_table(17);
    REQUIRE(rows.size() == 5);

    std::set<int> tet_expected = {0, 1, 2, 5};
    CHECK(rows[0].solid == "tetrahedron");
    CHECK(rows[0].harmonics.allowed == tet_expected);

    std::set<int> octa_expected = odds_up_to(17);
    octa_expected.insert(0);
    octa_expected.insert(2);
    CHECK(rows[1].solid == "octahedron");
    CHECK(rows[1].harmonics.allowed == octa_expected);
    CHECK(rows[2].solid == "cube");
    CHECK(rows[2].harmonics.allowed == octa_expected);

    std::set<int> dodeca_expected = odds_up_to(17);
    for (int l : {0, 2, 4, 8, 14}) dodeca_expected.insert(l);
    CHECK(rows[3].solid == "dodecahedron");
    CHECK(rows[3].harmonics.allowed == dodeca_expected);
    CHECK(rows[4].solid == "icosahedron");
    CHECK(rows[4].harmonics.allowed == dodeca_expected);

    // Smallest supported cutoff still shows the full tetrahedron row.
    const std::vector<PlatonicRow> small = platonic_table(5);
    CHECK(small[0].harmonics.allowed == tet_expected);

    CHECK_THROWS_AS(platonic_table(4), BadParameterError);
}

TEST_CASE("octahedron admissibility is unchanged for the rotated variant") {
    // Axes along +-x plus the four diagonal directions of the y-z plane:
    // the axis-aligned octahedron rotated by 45 degrees about x.
    const UnitVectorSet axis_aligned = builtin_set("octahedron").vectors;
    const UnitVectorSet rotated =
        rotate_set(axis_aligned, Rotation3::axis_angle(Vector3::UnitX(), std::numbers::pi / 4.0));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(contains_vector(rotated, Vector3(1, 0, 0)));
    CHECK(contains_vector(rotated, Vector3(0, inv_sqrt2, inv_sqrt2)));
    const AdmissibilitySet a = admissible_harmonics(axis_aligned, 14, default_tol_zero(6));
    const AdmissibilitySet b = admissible_harmonics(rotated, 14, default_tol_zero(6));
    CHECK(a.allowed == b.allowed);
}

TEST_CASE("platonic reference sets") {
    CHECK(platonic_reference("tetrahedron", 17) == std::set<int>{0, 1, 2, 5});
    std::set<int> cube_ref = odds_up_to(15);
    cube_ref.insert(0);
    cube_ref.insert(2);
    CHECK(platonic_reference("cube", 17) == cube_ref);
    CHECK(platonic_reference("cube", 20) == platonic_reference("cube", 15));
    CHECK_THROWS_AS(platonic_reference("pyramid", 17), UnknownNameError);
}

TEST_CASE("uniform povm admissibility is analytic") {
    const AdmissibilitySet all = uniform_povm_admissibility(5);
    CHECK(all.allowed == std::set<int>{0, 1, 2, 3, 4, 5});
    for (const auto& [l, evidence] : all.evidence)
        CHECK(evidence == 0.0);
    CHECK(uniform_povm_admissibility(0).allowed == std::set<int>{0});
    CHECK(all.marginal.empty());
}
