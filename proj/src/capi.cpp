// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "povmkit.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>

#include "povmkit/io.hpp"

namespace {

thread_local std::string g_last_error;

template <typename Fn>
povmkit_status guarded(Fn&& fn) {
    try {
        fn();
        return POVMKIT_OK;
    } catch (const povmkit::SemanticError& e) {
        g_last_error = e.what();
        return POVMKIT_ERROR_SEMANTIC;
    } catch (const povmkit::InvalidInput& e) {
        g_last_error = e.what();
        return POVMKIT_ERROR_INVALID_INPUT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return POVMKIT_ERROR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require_arg(const void* p, const char* what) {
    if (p == nullptr)
        throw povmkit::BadParameterError(std::string(what) + " must not be null");
}

} // namespace

struct povmkit_vector_set {
    povmkit::UnitVectorSet set;
};

extern "C" {

const char* povmkit_version(void) {
    return "0.1.0";
}

const char* povmkit_last_error(void) {
    return g_last_error.c_str();
}

void povmkit_string_free(char* s) {
    std::free(s);
}

povmkit_status povmkit_vector_set_from_json(const char* json_text, povmkit_vector_set** out) {
    return guarded([&] {
        require_arg(json_text, "json_text");
        require_arg(out, "out");
        auto set = povmkit::io::vector_set_from_json(povmkit::io::parse(json_text));
        *out = new povmkit_vector_set{std::move(set)};
    });
}

povmkit_status povmkit_vector_set_builtin(const char* name, int param, povmkit_vector_set** out) {
    return guarded([&] {
        require_arg(name, "name");
        require_arg(out, "out");
        std::optional<int> p;
        if (param >= 0)
            p = param;
        auto entry = povmkit::builtin_set(name, p);
        *out = new povmkit_vector_set{std::move(entry.vectors)};
    });
}

void povmkit_vector_set_free(povmkit_vector_set* set) {
    delete set;
}

size_t povmkit_vector_set_size(const povmkit_vector_set* set) {
    return set == nullptr ? 0 : set->set.size();
}

povmkit_status povmkit_vector_set_to_json(const povmkit_vector_set* set, char** out_json) {
    return guarded([&] {
        require_arg(set, "set");
        require_arg(out_json, "out_json");
        *out_json = dup_string(povmkit::io::dump(povmkit::io::vector_set_to_json(set->set)));
    });
}

povmkit_status povmkit_analyze(const povmkit_vector_set* set, int l_max, double tol, int as_json,
                               char** out_report) {
    return guarded([&] {
        require_arg(set, "set");
        require_arg(out_report, "out_report");
        const double threshold = tol > 0.0 ? tol : povmkit::default_tol_zero(set->set.size());
        const auto result = povmkit::admissible_harmonics(set->set, l_max, threshold);
        const std::string report =
            as_json ? povmkit::io::dump(povmkit::io::admissibility_to_json(result, threshold))
                    : povmkit::io::admissibility_to_text(result, threshold);
        *out_report = dup_string(report);
    });
}

povmkit_status povmkit_platonic_table(int l_max, int as_json, char** out_report) {
    return guarded([&] {
        require_arg(out_report, "out_report");
        const auto rows = povmkit::platonic_table(l_max);
        const std::string report =
            as_json ? povmkit::io::dump(povmkit::io::platonic_table_to_json(rows, l_max))
                    : povmkit::io::platonic_table_to_text(rows, l_max);
        *out_report = dup_string(report);
    });
}

povmkit_status povmkit_decompose(const char* effect_json, int as_json, char** out_report) {
    return guarded([&] {
        require_arg(effect_json, "effect_json");
        require_arg(out_report, "out_report");
        const povmkit::Effect effect(
            povmkit::io::matrix_from_json(povmkit::io::parse(effect_json)));
        const auto decomposition = povmkit::convex_decompose(effect);
        const double error =
            povmkit::max_abs_diff(decomposition.reconstruct(), effect.matrix());
        const std::string report =
            as_json ? povmkit::io::dump(povmkit::io::decomposition_to_json(
                          decomposition, effect.dim(), error))
                    : povmkit::io::decomposition_to_text(decomposition, effect.dim(), error);
        *out_report = dup_string(report);
    });
}

povmkit_status povmkit_validate_povm(const char* povm_json, int as_json, char** out_report) {
    return guarded([&] {
        require_arg(povm_json, "povm_json");
        require_arg(out_report, "out_report");
        const povmkit::Povm povm = povmkit::io::povm_from_json(povmkit::io::parse(povm_json));
        const std::string report =
            as_json ? povmkit::io::dump(povmkit::io::povm_validation_to_json(povm))
                    : povmkit::io::povm_validation_to_text(povm);
        *out_report = dup_string(report);
    });
}

povmkit_status povmkit_reconstruct(const char* samples_json, char** out_density_json,
                                   char** out_diagnostics) {
    return guarded([&] {
        require_arg(samples_json, "samples_json");
        require_arg(out_density_json, "out_density_json");
        const auto [dim, samples] =
            povmkit::io::frame_samples_from_json(povmkit::io::parse(samples_json));
        const povmkit::DensityOperator density =
            povmkit::reconstruct_from_samples(dim, samples);
        Eigen::SelfAdjointEigenSolver<povmkit::Matrix> solver(density.matrix());
        std::ostringstream diag;
        diag << "dim " << dim << ", trace deviation "
             << std::abs(density.matrix().trace().real() - 1.0) << ", eigenvalues ["
             << solver.eigenvalues().minCoeff() << ", " << solver.eigenvalues().maxCoeff()
             << "]";
        *out_density_json =
            dup_string(povmkit::io::dump(povmkit::io::matrix_to_json(density.op())));
        if (out_diagnostics != nullptr)
            *out_diagnostics = dup_string(diag.str());
    });
}

} // extern "C"
