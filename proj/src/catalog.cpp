// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "povmkit/catalog.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace povmkit {

namespace {

// All coordinates are built from run-time square roots; no truncated
// decimal constants.

std::vector<Vector3> trine_vectors() {
    const double h = std::sqrt(3.0) / 2.0;
    return {{1.0, 0.0, 0.0}, {-0.5, 0.0, h}, {-0.5, 0.0, -h}};
}

std::vector<Vector3> tet1_vectors() {
    const double a = 1.0 / 3.0;
    const double b = 2.0 * std::sqrt(2.0) / 3.0;
    const double c = std::sqrt(2.0) / 3.0;
    const double d = std::sqrt(2.0 / 3.0);
    return {{1.0, 0.0, 0.0}, {-a, 0.0, -b}, {-a, d, c}, {-a, -d, c}};
}

std::vector<Vector3> tet2_vectors() {
    const double a = 1.0 / 3.0;
    const double b = 2.0 * std::sqrt(2.0) / 3.0;
    const double c = std::sqrt(2.0) / 3.0;
    const double d = std::sqrt(2.0 / 3.0);
    return {{0.0, 0.0, 1.0}, {b, 0.0, -a}, {-c, d, -a}, {-c, -d, -a}};
}

std::vector<Vector3> octahedron_vectors() {
    return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
}

std::vector<Vector3> cube_vectors() {
    std::vector<Vector3> out = tet1_vectors();
    const std::size_t n = out.size();
    for (std::size_t j = 0; j < n; ++j) out.push_back(-out[j]);
    return out;
}

void push_cyclic(std::vector<Vector3>& out, double a, double b, double c) {
    out.emplace_back(a, b, c);
    out.emplace_back(c, a, b);
    out.emplace_back(b, c, a);
}

std::vector<Vector3> icosahedron_vectors() {
    const double phi = std::numbers::phi;
    const double scale = 1.0 / std::sqrt(1.0 + phi * phi);
    std::vector<Vector3> out;
    out.reserve(12);
    for (double s1 : {1.0, -1.0})
        for (double s2 : {1.0, -1.0})
            push_cyclic(out, 0.0, s1 * scale, s2 * phi * scale);
    return out;
}

std::vector<Vector3> dodecahedron_vectors() {
    const double phi = std::numbers::phi;
    const double s3 = 1.0 / std::sqrt(3.0);
    std::vector<Vector3> out;
    out.reserve(20);
    for (double sx : {1.0, -1.0})
        for (double sy : {1.0, -1.0})
            for (double sz : {1.0, -1.0})
                out.emplace_back(sx * s3, sy * s3, sz * s3);
    for (double s1 : {1.0, -1.0})
        for (double s2 : {1.0, -1.0})
            push_cyclic(out, 0.0, s1 * s3 / phi, s2 * phi * s3);
    return out;
}

std::vector<Vector3> polygon_vectors(int n) {
    std::vector<Vector3> out;
    out.reserve(n);
    for (int j = 0; j < n; ++j) {
        const double angle = 2.0 * std::numbers::pi * j / n;
        out.emplace_back(std::cos(angle), std::sin(angle), 0.0);
    }
    return out;
}

} // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {
        "trine", "tet1", "tet2", "octahedron", "cube",
        "dodecahedron", "icosahedron", "polygon", "antipodal"};
    return names;
}

CatalogEntry builtin_set(const std::string& name, std::optional<int> param) {
    if (name != "polygon" && param.has_value())
        throw BadParameterError("only the polygon entry takes a parameter");
    if (name == "trine")
        return {name, std::nullopt, UnitVectorSet(trine_vectors()),
                "three coplanar unit vectors at 120 degrees (x-z plane)"};
    if (name == "tet1")
        return {name, std::nullopt, UnitVectorSet(tet1_vectors()),
                "tetrahedron with one vertex along +x"};
    if (name == "tet2")
        return {name, std::nullopt, UnitVectorSet(tet2_vectors()),
                "tet1 rotated by -90 degrees about the y axis; one vertex along +z"};
    if (name == "octahedron")
        return {name, std::nullopt, UnitVectorSet(octahedron_vectors()),
                "the six signed coordinate axes"};
    if (name == "cube")
        return {name, std::nullopt, UnitVectorSet(cube_vectors()),
                "tet1 together with its antipodal points"};
    if (name == "dodecahedron")
        return {name, std::nullopt, UnitVectorSet(dodecahedron_vectors()),
                "20 vertices from the golden-ratio construction"};
    if (name == "icosahedron")
        return {name, std::nullopt, UnitVectorSet(icosahedron_vectors()),
                "12 vertices, cyclic permutations of (0, +-1, +-phi), normalized"};
    if (name == "antipodal")
        return {name, std::nullopt, UnitVectorSet({{0, 0, 1}, {0, 0, -1}}),
                "projective pair along +-z"};
    if (name == "polygon") {
        if (!param.has_value())
            throw BadParameterError("polygon requires a vertex count parameter");
        if (*param < 2)
            throw BadParameterError("polygon needs at least 2 vertices");
        std::ostringstream notes;
        notes << "regular " << *param << "-gon in the x-y plane";
        return {name, param, UnitVectorSet(polygon_vectors(*param)), notes.str()};
    }
    std::ostringstream msg;
    msg << "unknown catalog entry '" << name << "'; known names:";
    for (const std::string& n : builtin_names()) msg << ' ' << n;
    throw UnknownNameError(msg.str());
}

std::set<int> polygon_rule(int n_vertices, int l_max) {
    if (n_vertices < 2)
        throw BadParameterError("polygon needs at least 2 vertices");
    if (l_max < 0)
        throw BadParameterError("l_max must be >= 0");
    std::set<int> allowed = {0};
    const int odd_limit = (n_vertices % 2 == 0) ? l_max : std::min(n_vertices - 2, l_max);
    for (int l = 1; l <= odd_limit; l += 2) allowed.insert(l);
    return allowed;
}

AdmissibilitySet uniform_povm_admissibility(int l_max) {
    if (l_max < 0)
        throw BadParameterError("l_max must be >= 0");
    AdmissibilitySet out;
    out.l_max = l_max;
    for (int l = 0; l <= l_max; ++l) {
        out.allowed.insert(l);
        out.evidence[l] = 0.0;
    }
    return out;
}

std::vector<PlatonicRow> platonic_table(int l_max) {
    if (l_max < 5)
        throw BadParameterError("the platonic table needs l_max >= 5");
    std::vector<PlatonicRow> rows;
    for (const char* solid : {"tetrahedron", "octahedron", "cube", "dodecahedron", "icosahedron"}) {
        const std::string name = (std::string(solid) == "tetrahedron") ? "tet1" : solid;
        const CatalogEntry entry = builtin_set(name);
        rows.push_back({solid, admissible_harmonics(entry.vectors, l_max,
                                                    default_tol_zero(entry.vectors.size()))});
    }
    return rows;
}

std::set<int> platonic_reference(const std::string& solid, int l_max) {
    const int lim = std::min(l_max, platonic_reference_l_limit);
    std::set<int> out;
    auto add_odds = [&out, lim]() {
        for (int l = 1; l <= lim; l += 2) out.insert(l);
    };
    if (solid == "tetrahedron") {
        for (int l : {0, 1, 2, 5})
            if (l <= lim) out.insert(l);
        return out;
    }
    if (solid == "octahedron" || solid == "cube") {
        out.insert(0);
        if (lim >= 2) out.insert(2);
        add_odds();
        return out;
    }
    if (solid == "dodecahedron" || solid == "icosahedron") {
        for (int l : {0, 2, 4, 8, 14})
            if (l <= lim) out.insert(l);
        add_odds();
        return out;
    }
    throw UnknownNameError("unknown platonic solid '" + solid + "'");
}

} // namespace povmkit
