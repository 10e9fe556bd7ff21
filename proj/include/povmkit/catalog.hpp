// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "povmkit/harmonics.hpp"

namespace povmkit {

struct CatalogEntry {
    std::string name;
    std::optional<int> parameter; // polygon vertex count
    UnitVectorSet vectors;
    std::string notes;
};

// Built-in fiducial vector sets. Names: trine, tet1, tet2, octahedron,
// cube, dodecahedron, icosahedron, polygon (requires param N >= 2),
// antipodal.
CatalogEntry builtin_set(const std::string& name, std::optional<int> param = std::nullopt);

const std::vector<std::string>& builtin_names();

// Closed-form admissibility for the regular N-gon in a plane: N even
// gives {0} and all odd harmonics; N odd gives {0} and the odd
// harmonics l <= N - 2.
std::set<int> polygon_rule(int n_vertices, int l_max);

// The measurement whose outcomes cover every direction constrains only
// the normalization, so every harmonic is admissible. Analytic; the
// evidence entries are exact zeros.
AdmissibilitySet uniform_povm_admissibility(int l_max);

struct PlatonicRow {
    std::string solid;
    AdmissibilitySet harmonics;
};

// Runs the sum-condition analysis on the five platonic vertex sets.
std::vector<PlatonicRow> platonic_table(int l_max);

// Known classification for the platonic solids, established up to
// l = 15: tetrahedron {0,1,2,5}; octahedron and cube {0,2} plus odds;
// dodecahedron and icosahedron {0,2,4,8,14} plus odds. Classifications
// above this limit are new territory.
inline constexpr int platonic_reference_l_limit = 15;
std::set<int> platonic_reference(const std::string& solid, int l_max);

} // namespace povmkit
