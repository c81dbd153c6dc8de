#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "nsbf/cli.hpp"

namespace nsbf::cli {

namespace pt = boost::property_tree;

namespace {

std::string trim(const std::string& s)
{
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& raw, const std::string& key)
{
    const std::string s = trim(raw);
    if (s == "pi") return 3.141592653589793;
    double v = 0.0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size() || !std::isfinite(v))
        throw ConfigError("key '" + key + "': expected a finite number, got '" + raw + "'");
    return v;
}

long parse_integer(const std::string& raw, const std::string& key)
{
    const std::string s = trim(raw);
    long v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size())
        throw ConfigError("key '" + key + "': expected an integer, got '" + raw + "'");
    return v;
}

bool parse_bool(const std::string& raw, const std::string& key)
{
    const std::string s = trim(raw);
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw ConfigError("key '" + key + "': expected true or false, got '" + raw + "'");
}

std::string join(const std::vector<double>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += format_double(v[i]);
    }
    return s;
}

std::string shortest(double v)
{
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

}  // namespace

std::string format_double(double v)
{
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
    return std::string(buf, r.ptr);
}

std::vector<double> parse_number_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (trim(item).empty()) continue;
        out.push_back(parse_number(item, "list"));
    }
    return out;
}

RunConfig parse_config(const std::string& text)
{
    pt::ptree tree;
    std::istringstream in(text);
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError("config syntax error at line " + std::to_string(e.line()) + ": " + e.message());
    }

    RunConfig c;
    using Setter = void (*)(RunConfig&, const std::string&, const std::string&);
    struct Key {
        const char* section;
        const char* name;
        Setter set;
    };
    static const Key keys[] = {
        {"problem", "potential", [](RunConfig& c, const std::string& v, const std::string&) { c.potential = trim(v); }},
        {"problem", "potential_csv", [](RunConfig& c, const std::string& v, const std::string&) { c.potential_csv = trim(v); }},
        {"problem", "l", [](RunConfig& c, const std::string& v, const std::string& k) { c.l = parse_number(v, k); }},
        {"problem", "b", [](RunConfig& c, const std::string& v, const std::string& k) { c.b = parse_number(v, k); }},
        {"mesh", "points", [](RunConfig& c, const std::string& v, const std::string& k) { c.mesh_points = parse_integer(v, k); }},
        {"mesh", "cutoff_slack", [](RunConfig& c, const std::string& v, const std::string& k) { c.cutoff_slack = parse_number(v, k); }},
        {"series", "N", [](RunConfig& c, const std::string& v, const std::string& k) { c.N = static_cast<int>(parse_integer(v, k)); }},
        {"series", "picard_tol", [](RunConfig& c, const std::string& v, const std::string& k) { c.picard_tol = parse_number(v, k); }},
        {"series", "picard_max_iter", [](RunConfig& c, const std::string& v, const std::string& k) { c.picard_max_iter = static_cast<int>(parse_integer(v, k)); }},
        {"spectral", "boundary", [](RunConfig& c, const std::string& v, const std::string&) { c.boundary = parse_boundary(trim(v)); }},
        {"spectral", "robin_h", [](RunConfig& c, const std::string& v, const std::string& k) { c.robin_h = parse_number(v, k); }},
        {"spectral", "omega_lo", [](RunConfig& c, const std::string& v, const std::string& k) { c.omega_lo = parse_number(v, k); }},
        {"spectral", "omega_hi", [](RunConfig& c, const std::string& v, const std::string& k) { c.omega_hi = parse_number(v, k); }},
        {"spectral", "scan_points", [](RunConfig& c, const std::string& v, const std::string& k) { c.scan_points = static_cast<int>(parse_integer(v, k)); }},
        {"solve", "omegas", [](RunConfig& c, const std::string& v, const std::string&) { c.omegas = parse_number_list(v); }},
        {"solve", "xs", [](RunConfig& c, const std::string& v, const std::string&) { c.xs = parse_number_list(v); }},
        {"sweep", "l_values", [](RunConfig& c, const std::string& v, const std::string&) { c.l_values = parse_number_list(v); }},
        {"output", "dir", [](RunConfig& c, const std::string& v, const std::string&) { c.out_dir = trim(v); }},
        {"output", "oracle", [](RunConfig& c, const std::string& v, const std::string& k) { c.oracle = parse_bool(v, k); }},
        {"output", "coeff_points", [](RunConfig& c, const std::string& v, const std::string& k) { c.coeff_points = static_cast<int>(parse_integer(v, k)); }},
    };

    for (const auto& [section, body] : tree) {
        if (body.empty() && !body.data().empty())
            throw ConfigError("key '" + section + "' appears outside a section");
        for (const auto& [name, value] : body) {
            const Key* hit = nullptr;
            for (const auto& k : keys)
                if (section == k.section && name == k.name) hit = &k;
            if (!hit) throw ConfigError("unknown config key '" + section + "." + name + "'");
            hit->set(c, value.data(), section + "." + name);
        }
    }
    return c;
}

std::string emit_config(const RunConfig& c)
{
    std::ostringstream o;
    o << "[problem]\n"
      << "potential = " << c.potential << "\n";
    if (!c.potential_csv.empty()) o << "potential_csv = " << c.potential_csv << "\n";
    o << "l = " << shortest(c.l) << "\n"
      << "b = " << shortest(c.b) << "\n\n"
      << "[mesh]\n"
      << "points = " << c.mesh_points << "\n"
      << "cutoff_slack = " << shortest(c.cutoff_slack) << "\n\n"
      << "[series]\n"
      << "N = " << c.N << "\n"
      << "picard_tol = " << shortest(c.picard_tol) << "\n"
      << "picard_max_iter = " << c.picard_max_iter << "\n\n"
      << "[spectral]\n"
      << "boundary = " << boundary_name(c.boundary) << "\n"
      << "robin_h = " << shortest(c.robin_h) << "\n"
      << "omega_lo = " << shortest(c.omega_lo) << "\n"
      << "omega_hi = " << shortest(c.omega_hi) << "\n"
      << "scan_points = " << c.scan_points << "\n\n"
      << "[solve]\n"
      << "omegas = " << join(c.omegas) << "\n"
      << "xs = " << join(c.xs) << "\n\n"
      << "[sweep]\n"
      << "l_values = " << join(c.l_values) << "\n\n"
      << "[output]\n"
      << "dir = " << c.out_dir << "\n"
      << "oracle = " << (c.oracle ? "true" : "false") << "\n"
      << "coeff_points = " << c.coeff_points << "\n";
    return o.str();
}

RunConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string config_hash(const RunConfig& c)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : emit_config(c)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[i] = hex[h & 0xf];
    return s;
}

void RunConfig::validate() const
{
    if (potential_csv.empty()) {
        const auto spec = PotentialSpec::parse(potential);
        if (spec.kind == PotentialSpec::Kind::Semicircle && b > 3.141592653589793)
            throw ConfigError("potential sqrt(pi^2-x^2) needs b <= pi");
    }
    if (!(l >= -0.5)) throw ConfigError("problem.l must be >= -1/2");
    if (!(b > 0.0)) throw ConfigError("problem.b must be positive");
    if (mesh_points < 6 || mesh_points > 10000001) throw ConfigError("mesh.points must be in [6, 10000001]");
    if (!(cutoff_slack > 0.0)) throw ConfigError("mesh.cutoff_slack must be positive");
    if (N < 0 || N > 400) throw ConfigError("series.N must be in [0, 400]");
    if (!(picard_tol > 0.0)) throw ConfigError("series.picard_tol must be positive");
    if (picard_max_iter < 1) throw ConfigError("series.picard_max_iter must be >= 1");
    if (!(omega_lo >= 0.0) || !(omega_hi > omega_lo)) throw ConfigError("spectral window needs 0 <= omega_lo < omega_hi");
    if (scan_points != 0 && scan_points < 2) throw ConfigError("spectral.scan_points must be 0 or >= 2");
    for (double w : omegas)
        if (w < 0.0) throw ConfigError("solve.omegas must be >= 0");
    for (double x : xs)
        if (x < 0.0 || x > b) throw ConfigError("solve.xs must lie in [0, b]");
    for (double v : l_values)
        if (v < -0.5) throw ConfigError("sweep.l_values must be >= -1/2");
    if (coeff_points < 1) throw ConfigError("output.coeff_points must be >= 1");
    if (out_dir.empty()) throw ConfigError("output.dir must not be empty");
}

}  // namespace nsbf::cli
