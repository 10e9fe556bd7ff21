// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "povmkit/catalog.hpp"
#include "povmkit/frame.hpp"

namespace povmkit::io {

using json = nlohmann::json;

// Canonical serialization used for every report and file this library
// writes: two-space indent, trailing newline. Identical inputs produce
// byte-identical output.
std::string dump(const json& j);

// Parse wrapper mapping syntax errors onto ParseError.
json parse(const std::string& text);

// Matrix encoding shared by all file formats:
//   {"dim": d, "re": [[...]], "im": [[...]]}
// with row-major d x d arrays of doubles.
json matrix_to_json(const HermitianOperator& h);
HermitianOperator matrix_from_json(const json& j, const std::string& path = "matrix");

// {"kind": "povm", "effects": [<matrix>, ...]}
json povm_to_json(const Povm& p);
Povm povm_from_json(const json& j);

// {"kind": "vector_set", "vectors": [[x, y, z], ...]}
json vector_set_to_json(const UnitVectorSet& set);
UnitVectorSet vector_set_from_json(const json& j);

// {"kind": "frame_samples", "dim": d,
//  "samples": [{"effect": <matrix>, "value": v}, ...]}
json frame_samples_to_json(int dim, const std::vector<FrameSample>& samples);
std::pair<int, std::vector<FrameSample>> frame_samples_from_json(const json& j);

// {"kind": "admissibility", "l_max": L, "tol": t,
//  "rows": [{"l": l, "max_abs": v, "allowed": b, "marginal": b}, ...]}
json admissibility_to_json(const AdmissibilitySet& a, double tol);
std::string admissibility_to_text(const AdmissibilitySet& a, double tol);

json decomposition_to_json(const ConvexDecomposition& d, int dim, double reconstruction_error);
std::string decomposition_to_text(const ConvexDecomposition& d, int dim,
                                  double reconstruction_error);

json povm_validation_to_json(const Povm& p);
std::string povm_validation_to_text(const Povm& p);

json platonic_table_to_json(const std::vector<PlatonicRow>& rows, int l_max);
std::string platonic_table_to_text(const std::vector<PlatonicRow>& rows, int l_max);

} // namespace povmkit::io
