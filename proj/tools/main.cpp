// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the library exclusively through the
// C API; file handling and argument parsing live here.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "povmkit.h"

namespace {

struct Config {
    std::string input;
    std::string output;
    std::string name;
    int l_max = 20;
    bool l_max_given = false;
    double tol = 0.0; // <= 0 selects the per-set default
    std::uint64_t seed = 0;
    std::string format = "text";
    int polygon_n = -1;
};

struct StringDeleter {
    void operator()(char* s) const { povmkit_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct SetDeleter {
    void operator()(povmkit_vector_set* s) const { povmkit_vector_set_free(s); }
};
using ApiSet = std::unique_ptr<povmkit_vector_set, SetDeleter>;

int fail(povmkit_status status) {
    std::cerr << "error: " << povmkit_last_error() << "\n";
    return static_cast<int>(status);
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open input file '" << path << "'\n";
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

// Writes to the output path when given, otherwise to stdout.
int emit(const Config& cfg, const char* text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << cfg.output << "'\n";
        return 2;
    }
    out << text;
    return out ? 0 : 1;
}

int load_set(const Config& cfg, ApiSet& set) {
    povmkit_vector_set* raw = nullptr;
    if (!cfg.name.empty() && !cfg.input.empty()) {
        std::cerr << "error: --input and --name are mutually exclusive\n";
        return 2;
    }
    if (!cfg.name.empty()) {
        const povmkit_status status =
            povmkit_vector_set_builtin(cfg.name.c_str(), cfg.polygon_n, &raw);
        if (status != POVMKIT_OK)
            return fail(status);
    } else if (!cfg.input.empty()) {
        std::string text;
        if (!read_file(cfg.input, text))
            return 2;
        const povmkit_status status = povmkit_vector_set_from_json(text.c_str(), &raw);
        if (status != POVMKIT_OK)
            return fail(status);
    } else {
        std::cerr << "error: supply --input FILE or --name ENTRY\n";
        return 2;
    }
    set.reset(raw);
    return 0;
}

int run_analyze(const Config& cfg) {
    ApiSet set;
    if (const int rc = load_set(cfg, set); rc != 0)
        return rc;
    char* report = nullptr;
    const povmkit_status status =
        povmkit_analyze(set.get(), cfg.l_max, cfg.tol, cfg.format == "json", &report);
    if (status != POVMKIT_OK)
        return fail(status);
    const ApiString holder(report);
    return emit(cfg, report);
}

int run_table(const Config& cfg) {
    // The table defaults to the reference range unless a cutoff was given.
    const int l_max = cfg.l_max_given ? cfg.l_max : 17;
    char* report = nullptr;
    const povmkit_status status = povmkit_platonic_table(l_max, cfg.format == "json", &report);
    if (status != POVMKIT_OK)
        return fail(status);
    const ApiString holder(report);
    return emit(cfg, report);
}

int run_decompose(const Config& cfg) {
    if (cfg.input.empty()) {
        std::cerr << "error: decompose requires --input FILE (matrix JSON)\n";
        return 2;
    }
    std::string text;
    if (!read_file(cfg.input, text))
        return 2;
    char* report = nullptr;
    const povmkit_status status =
        povmkit_decompose(text.c_str(), cfg.format == "json", &report);
    if (status != POVMKIT_OK)
        return fail(status);
    const ApiString holder(report);
    return emit(cfg, report);
}

int run_validate(const Config& cfg) {
    if (cfg.input.empty()) {
        std::cerr << "error: validate requires --input FILE (povm JSON)\n";
        return 2;
    }
    std::string text;
    if (!read_file(cfg.input, text))
        return 2;
    char* report = nullptr;
    const povmkit_status status =
        povmkit_validate_povm(text.c_str(), cfg.format == "json", &report);
    if (status != POVMKIT_OK)
        return fail(status);
    const ApiString holder(report);
    return emit(cfg, report);
}

int run_reconstruct(const Config& cfg) {
    if (cfg.input.empty()) {
        std::cerr << "error: reconstruct requires --input FILE (frame-sample JSON)\n";
        return 2;
    }
    std::string text;
    if (!read_file(cfg.input, text))
        return 2;
    char* density = nullptr;
    char* diagnostics = nullptr;
    const povmkit_status status = povmkit_reconstruct(text.c_str(), &density, &diagnostics);
    if (status != POVMKIT_OK)
        return fail(status);
    const ApiString density_holder(density);
    const ApiString diag_holder(diagnostics);
    std::cerr << "reconstruction: " << diagnostics << "\n";
    return emit(cfg, density);
}

int run_catalog(const Config& cfg) {
    if (cfg.name.empty()) {
        std::cerr << "error: catalog requires --name ENTRY\n";
        return 2;
    }
    ApiSet set;
    if (const int rc = load_set(cfg, set); rc != 0)
        return rc;
    char* text = nullptr;
    const povmkit_status status = povmkit_vector_set_to_json(set.get(), &text);
    if (status != POVMKIT_OK)
        return fail(status);
    const ApiString holder(text);
    return emit(cfg, text);
}

} // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"Measurement-family analysis: effect decomposition, POVM validation, "
                 "density-operator reconstruction, and spherical-harmonic admissibility "
                 "of fiducial vector sets."};
    app.require_subcommand(1);
    app.set_version_flag("--version", povmkit_version());

    auto add_common = [&cfg](CLI::App* cmd, bool with_lmax) {
        cmd->add_option("--output", cfg.output, "Write the report to this file instead of stdout");
        cmd->add_option("--format", cfg.format, "Report format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_option("--seed", cfg.seed, "Seed for seeded randomized checks")
            ->capture_default_str();
        if (with_lmax) {
            cmd->add_option("--lmax", cfg.l_max, "Largest harmonic degree to classify")
                ->check(CLI::PositiveNumber)
                ->each([&cfg](const std::string&) { cfg.l_max_given = true; });
            cmd->add_option("--tol", cfg.tol,
                            "Zero threshold for the sum conditions (default: 1e-8 sqrt(N))");
        }
    };

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Classify admissible harmonics for a fiducial vector set");
    analyze->add_option("--input", cfg.input, "Vector-set JSON file");
    analyze->add_option("--name", cfg.name, "Catalog entry to analyze instead of a file");
    analyze->add_option("--n", cfg.polygon_n, "Vertex count when --name polygon");
    add_common(analyze, true);

    CLI::App* table = app.add_subcommand(
        "table", "Admissibility table for the five platonic vertex sets");
    add_common(table, true);

    CLI::App* reconstruct = app.add_subcommand(
        "reconstruct", "Reconstruct a density operator from frame samples");
    reconstruct->add_option("--input", cfg.input, "Frame-sample JSON file");
    add_common(reconstruct, false);

    CLI::App* decompose = app.add_subcommand(
        "decompose", "Expand an effect over projector extreme points");
    decompose->add_option("--input", cfg.input, "Effect matrix JSON file");
    add_common(decompose, false);

    CLI::App* validate = app.add_subcommand("validate", "Validate a POVM file");
    validate->add_option("--input", cfg.input, "POVM JSON file");
    add_common(validate, false);

    CLI::App* catalog = app.add_subcommand(
        "catalog", "Emit a built-in vector set as JSON");
    catalog->add_option("--name", cfg.name,
                        "Entry name: trine, tet1, tet2, octahedron, cube, dodecahedron, "
                        "icosahedron, polygon (with --n), antipodal");
    catalog->add_option("--n", cfg.polygon_n, "Vertex count when --name polygon");
    add_common(catalog, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // argument errors are invalid input
    }

    if (analyze->parsed())
        return run_analyze(cfg);
    if (table->parsed())
        return run_table(cfg);
    if (reconstruct->parsed())
        return run_reconstruct(cfg);
    if (decompose->parsed())
        return run_decompose(cfg);
    if (validate->parsed())
        return run_validate(cfg);
    if (catalog->parsed())
        return run_catalog(cfg);
    return 2;
}
