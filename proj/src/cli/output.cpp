#include "output.hpp"

namespace nsbf::cli {

std::ofstream open_output(const std::filesystem::path& path)
{
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream o(path, std::ios::binary);
    if (!o) throw ConfigError("cannot write " + path.string());
    return o;
}

void write_provenance(std::ostream& o, const Provenance& p, const std::string& comment)
{
    o << comment << "nsbf " << p.command << "\n"
      << comment << "config_hash = " << p.config_hash << "\n"
      << comment << "mesh_points = " << p.m << "\n"
      << comment << "N = " << p.N << "\n"
      << comment << "N_opt = " << p.N_opt << (p.converged ? "" : " (not converged: increase N or mesh)") << "\n"
      << comment << "beta_floor = " << format_double(p.beta_floor) << "\n"
      << comment << "gamma_floor = " << format_double(p.gamma_floor) << "\n";
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const Provenance& prov, const std::vector<std::string>& columns)
    : out_(open_output(path))
{
    write_provenance(out_, prov);
    for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
    out_ << "\n";
}

CsvWriter& CsvWriter::cell(double v) { return cell(format_double(v)); }

CsvWriter& CsvWriter::cell(long v) { return cell(std::to_string(v)); }

CsvWriter& CsvWriter::cell(const std::string& v)
{
    if (!first_) out_ << ",";
    out_ << v;
    first_ = false;
    return *this;
}

void CsvWriter::end_row()
{
    out_ << "\n";
    first_ = true;
}

void write_plot_data(const std::filesystem::path& path, const Provenance& prov, const std::string& xlabel,
                     const std::string& ylabel, const std::vector<std::pair<double, double>>& points)
{
    auto o = open_output(path);
    write_provenance(o, prov);
    o << "# " << xlabel << " " << ylabel << "\n";
    for (const auto& [x, y] : points) o << format_double(x) << " " << format_double(y) << "\n";
}

}  // namespace nsbf::cli
