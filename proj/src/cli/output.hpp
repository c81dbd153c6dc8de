#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "nsbf/cli.hpp"

namespace nsbf::cli {

struct Provenance {
    std::string command;
    std::string config_hash;
    long m = 0;
    int N = 0;
    int N_opt = 0;
    double beta_floor = 0.0;
    double gamma_floor = 0.0;
    bool converged = true;
};

// '#'-prefixed provenance block; `comment` is the line prefix.
void write_provenance(std::ostream& o, const Provenance& p, const std::string& comment = "# ");

class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const Provenance& prov, const std::vector<std::string>& columns);

    CsvWriter& cell(double v);
    CsvWriter& cell(long v);
    CsvWriter& cell(const std::string& v);
    void end_row();

private:
    std::ofstream out_;
    bool first_ = true;
};

// Whitespace-separated two-column data for plotting.
void write_plot_data(const std::filesystem::path& path, const Provenance& prov, const std::string& xlabel,
                     const std::string& ylabel, const std::vector<std::pair<double, double>>& points);

std::ofstream open_output(const std::filesystem::path& path);

}  // namespace nsbf::cli
