// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "povmkit/io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace povmkit::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError("parse error at " + path + ": " + what);
}

const json& require(const json& j, const char* key, const std::string& path) {
    if (!j.is_object())
        fail(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end())
        fail(path + "." + key, "missing field");
    return *it;
}

double require_double(const json& j, const std::string& path) {
    if (!j.is_number())
        fail(path, "expected a number");
    return j.get<double>();
}

int require_int(const json& j, const std::string& path) {
    if (!j.is_number_integer())
        fail(path, "expected an integer");
    return j.get<int>();
}

void require_kind(const json& j, const char* kind, const std::string& path) {
    const json& k = require(j, "kind", path);
    if (!k.is_string() || k.get<std::string>() != kind)
        fail(path + ".kind", std::string("expected \"") + kind + "\"");
}

std::vector<std::vector<double>> require_square(const json& j, int dim, const std::string& path) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        fail(path, "expected an array of " + std::to_string(dim) + " rows");
    std::vector<std::vector<double>> rows;
    rows.reserve(dim);
    for (int i = 0; i < dim; ++i) {
        const json& row = j[i];
        const std::string row_path = path + "[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            fail(row_path, "expected an array of " + std::to_string(dim) + " numbers");
        std::vector<double> vals;
        vals.reserve(dim);
        for (int k = 0; k < dim; ++k)
            vals.push_back(require_double(row[k], row_path + "[" + std::to_string(k) + "]"));
        rows.push_back(std::move(vals));
    }
    return rows;
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.5e", v);
    return buf;
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string joined_set(const std::set<int>& values) {
    std::ostringstream out;
    bool first = true;
    for (int v : values) {
        if (!first) out << ' ';
        out << v;
        first = false;
    }
    return out.str();
}

} // namespace

std::string dump(const json& j) {
    return j.dump(2) + "\n";
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("parse error at input: ") + e.what());
    }
}

json matrix_to_json(const HermitianOperator& h) {
    const int d = h.dim();
    json re = json::array();
    json im = json::array();
    for (int i = 0; i < d; ++i) {
        json re_row = json::array();
        json im_row = json::array();
        for (int k = 0; k < d; ++k) {
            re_row.push_back(h.matrix()(i, k).real());
            im_row.push_back(h.matrix()(i, k).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return json{{"dim", d}, {"re", std::move(re)}, {"im", std::move(im)}};
}

HermitianOperator matrix_from_json(const json& j, const std::string& path) {
    const int dim = require_int(require(j, "dim", path), path + ".dim");
    if (dim < 1)
        fail(path + ".dim", "dimension must be >= 1");
    const auto re = require_square(require(j, "re", path), dim, path + ".re");
    const auto im = require_square(require(j, "im", path), dim, path + ".im");
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k)
            m(i, k) = Complex(re[i][k], im[i][k]);
    return HermitianOperator(std::move(m));
}

json povm_to_json(const Povm& p) {
    json effects = json::array();
    for (const Effect& e : p.effects()) effects.push_back(matrix_to_json(e.op()));
    return json{{"kind", "povm"}, {"effects", std::move(effects)}};
}

Povm povm_from_json(const json& j) {
    require_kind(j, "povm", "povm");
    const json& arr = require(j, "effects", "povm");
    if (!arr.is_array() || arr.empty())
        fail("povm.effects", "expected a nonempty array");
    std::vector<Effect> effects;
    effects.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
        effects.emplace_back(
            matrix_from_json(arr[i], "povm.effects[" + std::to_string(i) + "]"));
    return Povm(std::move(effects));
}

json vector_set_to_json(const UnitVectorSet& set) {
    json vectors = json::array();
    for (const Vector3& v : set.vectors())
        vectors.push_back(json::array({v.x(), v.y(), v.z()}));
    return json{{"kind", "vector_set"}, {"vectors", std::move(vectors)}};
}

UnitVectorSet vector_set_from_json(const json& j) {
    require_kind(j, "vector_set", "vector_set");
    const json& arr = require(j, "vectors", "vector_set");
    if (!arr.is_array())
        fail("vector_set.vectors", "expected an array");
    std::vector<Vector3> vectors;
    vectors.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string path = "vector_set.vectors[" + std::to_string(i) + "]";
        const json& row = arr[i];
        if (!row.is_array() || row.size() != 3)
            fail(path, "expected [x, y, z]");
        vectors.emplace_back(require_double(row[0], path + "[0]"),
                             require_double(row[1], path + "[1]"),
                             require_double(row[2], path + "[2]"));
    }
    return UnitVectorSet::from_raw(std::move(vectors));
}

json frame_samples_to_json(int dim, const std::vector<FrameSample>& samples) {
    json arr = json::array();
    for (const FrameSample& s : samples)
        arr.push_back(json{{"effect", matrix_to_json(s.effect.op())}, {"value", s.value}});
    return json{{"kind", "frame_samples"}, {"dim", dim}, {"samples", std::move(arr)}};
}

std::pair<int, std::vector<FrameSample>> frame_samples_from_json(const json& j) {
    require_kind(j, "frame_samples", "frame_samples");
    const int dim = require_int(require(j, "dim", "frame_samples"), "frame_samples.dim");
    if (dim < 1)
        fail("frame_samples.dim", "dimension must be >= 1");
    const json& arr = require(j, "samples", "frame_samples");
    if (!arr.is_array())
        fail("frame_samples.samples", "expected an array");
    std::vector<FrameSample> samples;
    samples.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string path = "frame_samples.samples[" + std::to_string(i) + "]";
        const json& entry = arr[i];
        Effect effect(matrix_from_json(require(entry, "effect", path), path + ".effect"));
        const double value = require_double(require(entry, "value", path), path + ".value");
        samples.push_back({std::move(effect), value});
    }
    return {dim, std::move(samples)};
}

json admissibility_to_json(const AdmissibilitySet& a, double tol) {
    json rows = json::array();
    for (int l = 0; l <= a.l_max; ++l) {
        rows.push_back(json{{"l", l},
                            {"max_abs", a.evidence.at(l)},
                            {"allowed", a.allowed.count(l) > 0},
                            {"marginal", a.marginal.count(l) > 0}});
    }
    return json{{"kind", "admissibility"}, {"l_max", a.l_max}, {"tol", tol},
                {"rows", std::move(rows)}};
}

std::string admissibility_to_text(const AdmissibilitySet& a, double tol) {
    std::ostringstream out;
    out << "admissibility report  (l_max = " << a.l_max << ", tol = " << sci(tol) << ")\n\n";
    out << pad_left("l", 5) << pad_left("max_abs", 15) << pad_left("allowed", 10)
        << pad_left("marginal", 10) << "\n";
    for (int l = 0; l <= a.l_max; ++l) {
        out << pad_left(std::to_string(l), 5) << pad_left(sci(a.evidence.at(l)), 15)
            << pad_left(a.allowed.count(l) ? "yes" : "no", 10)
            << pad_left(a.marginal.count(l) ? "yes" : "no", 10) << "\n";
    }
    out << "\nallowed: " << joined_set(a.allowed) << "\n";
    return out.str();
}

json decomposition_to_json(const ConvexDecomposition& d, int dim, double reconstruction_error) {
    json terms = json::array();
    for (const WeightedProjector& t : d.terms()) {
        terms.push_back(json{{"weight", t.weight},
                             {"rank", t.projector.rank()},
                             {"projector", matrix_to_json(t.projector.op())}});
    }
    return json{{"kind", "decomposition"},
                {"dim", dim},
                {"reconstruction_error", reconstruction_error},
                {"terms", std::move(terms)}};
}

std::string decomposition_to_text(const ConvexDecomposition& d, int dim,
                                  double reconstruction_error) {
    std::ostringstream out;
    out << "convex decomposition  (dim = " << dim << ", " << d.size()
        << " terms, reconstruction error = " << sci(reconstruction_error) << ")\n\n";
    out << pad_left("term", 6) << pad_left("weight", 15) << pad_left("rank", 6) << "\n";
    int index = 0;
    for (const WeightedProjector& t : d.terms()) {
        out << pad_left(std::to_string(index++), 6) << pad_left(sci(t.weight), 15)
            << pad_left(std::to_string(t.projector.rank()), 6) << "\n";
    }
    return out.str();
}

json povm_validation_to_json(const Povm& p) {
    return json{{"kind", "povm_validation"},
                {"dim", p.dim()},
                {"effect_count", p.size()},
                {"max_residual", p.completeness_residual()},
                {"valid", true}};
}

std::string povm_validation_to_text(const Povm& p) {
    std::ostringstream out;
    out << "povm validation\n\n";
    out << pad_right("dim", 16) << p.dim() << "\n";
    out << pad_right("effects", 16) << p.size() << "\n";
    out << pad_right("max residual", 16) << sci(p.completeness_residual()) << "\n";
    out << pad_right("valid", 16) << "yes\n";
    return out.str();
}

json platonic_table_to_json(const std::vector<PlatonicRow>& rows, int l_max) {
    json out_rows = json::array();
    for (const PlatonicRow& row : rows) {
        const std::set<int> reference = platonic_reference(row.solid, l_max);
        std::set<int> computed_within_reference;
        for (int l : row.harmonics.allowed)
            if (l <= platonic_reference_l_limit) computed_within_reference.insert(l);
        json harmonics = json::array();
        for (int l = 0; l <= l_max; ++l) {
            harmonics.push_back(json{{"l", l},
                                     {"max_abs", row.harmonics.evidence.at(l)},
                                     {"allowed", row.harmonics.allowed.count(l) > 0},
                                     {"marginal", row.harmonics.marginal.count(l) > 0},
                                     {"beyond_reference", l > platonic_reference_l_limit}});
        }
        out_rows.push_back(json{{"solid", row.solid},
                                {"allowed", json(row.harmonics.allowed)},
                                {"matches_reference", computed_within_reference == reference},
                                {"harmonics", std::move(harmonics)}});
    }
    return json{{"kind", "platonic_table"}, {"l_max", l_max}, {"rows", std::move(out_rows)}};
}

std::string platonic_table_to_text(const std::vector<PlatonicRow>& rows, int l_max) {
    std::ostringstream out;
    out << "platonic solid admissibility  (l_max = " << l_max << ")\n\n";
    out << pad_right("solid", 15) << pad_right("allowed harmonics", 44)
        << "reference (l <= " << platonic_reference_l_limit << ")\n";
    for (const PlatonicRow& row : rows) {
        const std::set<int> reference = platonic_reference(row.solid, l_max);
        std::set<int> computed_within_reference;
        for (int l : row.harmonics.allowed)
            if (l <= platonic_reference_l_limit) computed_within_reference.insert(l);
        out << pad_right(row.solid, 15) << pad_right(joined_set(row.harmonics.allowed), 44)
            << (computed_within_reference == reference ? "match" : "MISMATCH") << "\n";
    }
    if (l_max > platonic_reference_l_limit)
        out << "\nclassifications above l = " << platonic_reference_l_limit
            << " extend beyond the reference table\n";
    return out.str();
}

} // namespace povmkit::io
