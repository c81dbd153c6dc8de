#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nsbf/potential.hpp"
#include "nsbf/spectral.hpp"

namespace nsbf::cli {

struct RunConfig {
    // [problem]
    std::string potential = "x^2";
    std::string potential_csv;  // when set, samples come from this file
    double l = 1.5;
    double b = 3.141592653589793;
    // [mesh]
    long mesh_points = 20001;
    double cutoff_slack = 100.0;
    // [series]
    int N = 100;
    double picard_tol = 1e-14;
    int picard_max_iter = 100;
    // [spectral]
    Boundary boundary = Boundary::Dirichlet;
    double robin_h = 0.0;
    double omega_lo = 0.5;
    double omega_hi = 11.0;
    int scan_points = 0;
    // [solve]
    std::vector<double> omegas{0.0, 1.0, 5.0};
    std::vector<double> xs{3.141592653589793};
    // [sweep]
    std::vector<double> l_values{0.5, 1.0, 1.5, 2.0};
    // [output]
    std::string out_dir = "nsbf-out";
    bool oracle = false;
    int coeff_points = 11;

    bool operator==(const RunConfig&) const = default;

    void validate() const;
};

RunConfig parse_config(const std::string& text);
std::string emit_config(const RunConfig& c);
RunConfig load_config(const std::filesystem::path& path);

// FNV-1a 64 of the canonical emitted form, as 16 hex digits.
std::string config_hash(const RunConfig& c);

// Writes output files; returns their paths.
std::vector<std::filesystem::path> cmd_coeffs(const RunConfig& c);
std::vector<std::filesystem::path> cmd_eigen(const RunConfig& c, const std::optional<std::filesystem::path>& reference = {});
std::vector<std::filesystem::path> cmd_solve(const RunConfig& c);
std::vector<std::filesystem::path> cmd_decay_sweep(const RunConfig& c);

// Entry point; returns the process exit code.
int run(int argc, char** argv);

std::string format_double(double v);
std::vector<double> parse_number_list(const std::string& text);

}  // namespace nsbf::cli
