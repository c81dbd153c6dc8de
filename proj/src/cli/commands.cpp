#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsbf/cli.hpp"
#include "nsbf/oracle.hpp"
#include "nsbf/solution.hpp"
#include "nsbf/spectral.hpp"
#include "output.hpp"

namespace nsbf::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto a = item.find_first_not_of(" \t\r");
        const auto b = item.find_last_not_of(" \t\r");
        out.push_back(a == std::string::npos ? std::string() : item.substr(a, b - a + 1));
    }
    return out;
}

bool to_number(const std::string& s, double& v)
{
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    return r.ec == std::errc() && r.ptr == s.data() + s.size();
}

// Rows of numbers from a CSV file; '#' lines and one leading header row are skipped.
std::vector<std::vector<double>> read_numeric_csv(const fs::path& path, std::vector<std::string>* header = nullptr)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path.string());
    std::vector<std::vector<double>> rows;
    std::string line;
    bool seen_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto cells = split_csv_line(line);
        std::vector<double> row;
        bool numeric = true;
        for (const auto& c : cells) {
            double v;
            if (!to_number(c, v)) {
                numeric = false;
                break;
            }
            row.push_back(v);
        }
        if (!numeric) {
            if (rows.empty() && !seen_header) {
                seen_header = true;
                if (header) *header = cells;
                continue;
            }
            throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": non-numeric row");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Potential<double> load_potential_csv(const RunConfig& c, double l)
{
    const auto rows = read_numeric_csv(c.potential_csv);
    const long m = static_cast<long>(rows.size());
    if (m < 6) throw ConfigError("potential CSV needs at least 6 rows");
    for (const auto& r : rows)
        if (r.size() != 2) throw ConfigError("potential CSV rows must be (x, q)");
    const double b = rows.back()[0];
    if (rows.front()[0] != 0.0) throw ConfigError("potential CSV must start at x = 0");
    if (m % 5 != 1) throw ConfigError("potential CSV row count must be 1 mod 5, got " + std::to_string(m));
    if (std::abs(b - c.b) > 1e-12 * c.b || m != c.mesh_points)
        throw ConfigError("potential CSV grid (b = " + format_double(b) + ", m = " + std::to_string(m) +
                          ") does not match problem.b / mesh.points");
    UniformMesh mesh(c.b, m);
    VecD q(m);
    for (long i = 0; i < m; ++i) {
        if (std::abs(rows[i][0] - mesh.x(i)) > 1e-9 * mesh.h())
            throw ConfigError("potential CSV is not on a uniform grid at row " + std::to_string(i + 1));
        q[i] = rows[i][1];
    }
    return Potential<double>::from_samples(mesh, l, q);
}

struct Pipeline {
    std::optional<PotentialSpec> spec;
    NsbfSolution solution;
};

Pipeline build_pipeline(const RunConfig& c, double l)
{
    std::optional<PotentialSpec> spec;
    std::optional<Potential<double>> p;
    if (!c.potential_csv.empty()) {
        p = load_potential_csv(c, l);
    } else {
        spec = PotentialSpec::parse(c.potential);
        p = Potential<double>::from_spec(*spec, UniformMesh::at_least(c.b, c.mesh_points), l);
    }
    SolverOptions opt{c.picard_tol, c.picard_max_iter, c.cutoff_slack};
    return {spec, NsbfSolution::build(*p, c.N, opt)};
}

ShootingOracle make_oracle(const Pipeline& pl)
{
    if (!pl.spec) throw ConfigError("the shooting oracle needs a built-in potential, not CSV samples");
    return ShootingOracle(*pl.spec, pl.solution.l(), pl.solution.b());
}

Provenance provenance(const std::string& command, const RunConfig& c, const NsbfSolution& s)
{
    const auto& t = s.tables();
    return {command, config_hash(c), static_cast<long>(s.mesh().m()), t.N, t.N_opt, t.beta_floor, t.gamma_floor,
            t.converged};
}

SpectralProblem spectral_problem(const RunConfig& c)
{
    return {c.boundary, c.robin_h, c.omega_lo, c.omega_hi, c.scan_points};
}

json fit_json(const VecD& v, int N)
{
    json j;
    try {
        const auto f = decay_fit(v, 10, N);
        j["exponent"] = f.exponent;
        j["points"] = f.points;
        j["floor"] = f.floor;
    } catch (const Error& e) {
        j["error"] = e.what();
    }
    return j;
}

VecD endpoint_values(const NsbfSolution& s, bool gamma)
{
    const auto& t = s.tables();
    const auto last = s.mesh().m() - 1;
    VecD v(t.N + 1);
    for (int n = 0; n <= t.N; ++n) v[n] = (gamma ? t.gamma[n] : t.beta[n])(last);
    return v;
}

std::vector<std::pair<double, double>> loglog_points(const VecD& v)
{
    std::vector<std::pair<double, double>> pts;
    for (int n = 1; n < v.size(); ++n) pts.emplace_back(n, std::abs(v[n]));
    return pts;
}

std::string l_tag(double l)
{
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, l);
    return "l" + std::string(buf, r.ptr);
}

void write_json(const fs::path& path, const json& j)
{
    auto o = open_output(path);
    o << j.dump(2) << "\n";
}

}  // namespace

std::vector<fs::path> cmd_coeffs(const RunConfig& c)
{
    c.validate();
    const auto pl = build_pipeline(c, c.l);
    const auto& s = pl.solution;
    const auto& t = s.tables();
    const auto prov = provenance("coeffs", c, s);
    const fs::path dir = c.out_dir;
    std::vector<fs::path> written;

    {
        const fs::path path = dir / "coefficients.csv";
        CsvWriter w(path, prov, {"n", "x", "beta_n", "gamma_n"});
        const long m = s.mesh().m();
        std::vector<long> idx;
        if (c.coeff_points == 1) {
            idx.push_back(m - 1);
        } else {
            for (int k = 0; k < c.coeff_points; ++k)
                idx.push_back(std::lround(double(k) * double(m - 1) / double(c.coeff_points - 1)));
        }
        for (int n = 0; n <= t.N; ++n)
            for (long i : idx) {
                w.cell(long(n)).cell(s.mesh().x(i)).cell(t.beta[n](i)).cell(t.gamma[n](i));
                w.end_row();
            }
        written.push_back(path);
    }
    {
        const fs::path path = dir / "residuals.csv";
        CsvWriter w(path, prov, {"K", "beta_residual", "gamma_residual"});
        for (int k = 0; k <= t.N; ++k) {
            w.cell(long(k)).cell(t.beta_residual[k]).cell(t.gamma_residual[k]);
            w.end_row();
        }
        written.push_back(path);
    }
    const VecD bv = endpoint_values(s, false), gv = endpoint_values(s, true);
    {
        json j;
        j["config_hash"] = prov.config_hash;
        j["potential"] = c.potential_csv.empty() ? c.potential : c.potential_csv;
        j["l"] = c.l;
        j["b"] = s.b();
        j["mesh_points"] = s.mesh().m();
        j["N"] = t.N;
        j["N_opt"] = t.N_opt;
        j["converged"] = t.converged;
        j["beta_floor"] = t.beta_floor;
        j["gamma_floor"] = t.gamma_floor;
        j["picard_iterations"] = s.particular().iterations;
        j["u0_residual"] = s.particular().residual;
        j["fit_range"] = {10, t.N};
        j["beta_fit"] = fit_json(bv, t.N);
        j["gamma_fit"] = fit_json(gv, t.N);
        const fs::path path = dir / "decay.json";
        write_json(path, j);
        written.push_back(path);
    }
    written.push_back(dir / "beta_decay.dat");
    write_plot_data(written.back(), prov, "n", "|beta_n(b)|", loglog_points(bv));
    written.push_back(dir / "gamma_decay.dat");
    write_plot_data(written.back(), prov, "n", "|gamma_n(b)|", loglog_points(gv));
    return written;
}

std::vector<fs::path> cmd_eigen(const RunConfig& c, const std::optional<fs::path>& reference)
{
    c.validate();
    const auto pl = build_pipeline(c, c.l);
    const auto& s = pl.solution;
    const auto prov = provenance("eigen", c, s);
    const auto prob = spectral_problem(c);
    const auto eig = find_eigenvalues(s, prob);
    const fs::path dir = c.out_dir;
    std::vector<fs::path> written;
    {
        const fs::path path = dir / "eigenvalues.csv";
        CsvWriter w(path, prov, {"index", "omega", "residual", "bracket_width"});
        for (const auto& e : eig) {
            w.cell(long(e.index)).cell(e.omega).cell(e.char_residual).cell(e.refinement_width);
            w.end_row();
        }
        written.push_back(path);
    }
    if (c.oracle) {
        const auto oracle = make_oracle(pl);
        const fs::path path = dir / "oracle_comparison.csv";
        CsvWriter w(path, prov, {"index", "omega", "omega_oracle", "abs_error"});
        for (const auto& e : eig) {
            const double ref = oracle.eigenvalue_near(prob, e.omega);
            w.cell(long(e.index)).cell(e.omega).cell(ref).cell(std::abs(e.omega - ref));
            w.end_row();
        }
        written.push_back(path);
    }
    if (reference) {
        std::vector<std::string> header;
        const auto rows = read_numeric_csv(*reference, &header);
        std::size_t ci = 0, co = 1;
        for (std::size_t k = 0; k < header.size(); ++k) {
            if (header[k] == "index") ci = k;
            if (header[k] == "omega") co = k;
        }
        std::map<long, double> ref;
        for (const auto& r : rows) {
            if (r.size() <= std::max(ci, co)) throw ConfigError("reference CSV row has too few columns");
            ref[std::lround(r[ci])] = r[co];
        }
        const fs::path path = dir / "reference_comparison.csv";
        CsvWriter w(path, prov, {"index", "omega", "omega_reference", "abs_error"});
        for (const auto& e : eig) {
            const auto it = ref.find(e.index);
            if (it == ref.end()) continue;
            w.cell(long(e.index)).cell(e.omega).cell(it->second).cell(std::abs(e.omega - it->second));
            w.end_row();
        }
        written.push_back(path);
    }
    return written;
}

std::vector<fs::path> cmd_solve(const RunConfig& c)
{
    c.validate();
    const auto pl = build_pipeline(c, c.l);
    const auto& s = pl.solution;
    const auto prov = provenance("solve", c, s);
    std::optional<ShootingOracle> oracle;
    if (c.oracle) oracle = make_oracle(pl);
    std::vector<std::string> cols{"omega", "x", "u", "u_prime", "eps_beta", "eps_gamma"};
    if (oracle) cols.insert(cols.end(), {"u_oracle", "u_prime_oracle", "abs_error_u", "abs_error_u_prime"});
    const fs::path path = fs::path(c.out_dir) / "solution.csv";
    CsvWriter w(path, prov, cols);
    for (double omega : c.omegas)
        for (double x : c.xs) {
            const auto [u, du] = s.eval(omega, x);
            const auto [eb, eg] = s.error_indicator(x);
            w.cell(omega).cell(x).cell(u).cell(du).cell(eb).cell(eg);
            if (oracle) {
                if (x >= 1e-6) {
                    const auto [ou, odu] = oracle->solve(omega, x);
                    w.cell(double(ou)).cell(double(odu)).cell(std::abs(u - double(ou))).cell(std::abs(du - double(odu)));
                } else {
                    w.cell(std::string()).cell(std::string()).cell(std::string()).cell(std::string());
                }
            }
            w.end_row();
        }
    return {path};
}

std::vector<fs::path> cmd_decay_sweep(const RunConfig& c)
{
    c.validate();
    if (c.l_values.empty()) throw ConfigError("sweep.l_values is empty");
    const fs::path dir = c.out_dir;
    std::vector<fs::path> written;
    json sweep = json::array();
    for (double l : c.l_values) {
        const auto pl = build_pipeline(c, l);
        const auto& s = pl.solution;
        const auto prov = provenance("decay-sweep " + l_tag(l), c, s);
        const VecD bv = endpoint_values(s, false), gv = endpoint_values(s, true);
        written.push_back(dir / ("beta_decay_" + l_tag(l) + ".dat"));
        write_plot_data(written.back(), prov, "n", "|beta_n(b)|", loglog_points(bv));
        written.push_back(dir / ("gamma_decay_" + l_tag(l) + ".dat"));
        write_plot_data(written.back(), prov, "n", "|gamma_n(b)|", loglog_points(gv));
        json j;
        j["l"] = l;
        j["N_opt"] = s.tables().N_opt;
        j["beta_fit"] = fit_json(bv, s.tables().N);
        j["gamma_fit"] = fit_json(gv, s.tables().N);
        sweep.push_back(j);
    }
    json root;
    root["config_hash"] = config_hash(c);
    root["fit_range"] = {10, c.N};
    root["runs"] = sweep;
    written.push_back(dir / "sweep.json");
    write_json(written.back(), root);
    return written;
}

int run(int argc, char** argv)
{
    CLI::App app{"NSBF solver for the perturbed Bessel equation"};
    app.require_subcommand(1);

    std::string config_path, out_dir, omegas, xs, l_list, reference;
    std::optional<long> mesh;
    std::optional<int> N;
    bool oracle = false;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "config file")->check(CLI::ExistingFile);
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--mesh", mesh, "mesh point count (rounded up to 1 mod 5)");
        sub->add_option("--N", N, "series truncation order");
        sub->add_flag("--oracle", oracle, "compare against the shooting oracle");
    };
    auto* coeffs = app.add_subcommand("coeffs", "coefficient tables, residuals and decay fits");
    auto* eigen = app.add_subcommand("eigen", "eigenvalues in the configured window");
    auto* solve = app.add_subcommand("solve", "evaluate u and u' on an (omega, x) grid");
    auto* sweep = app.add_subcommand("decay-sweep", "decay data for several l");
    auto* show = app.add_subcommand("print-config", "print the effective configuration");
    for (auto* sub : {coeffs, eigen, solve, sweep, show}) common(sub);
    eigen->add_option("--reference", reference, "reference eigenvalue CSV (index, omega)")->check(CLI::ExistingFile);
    solve->add_option("--omegas", omegas, "comma-separated omega values");
    solve->add_option("--xs", xs, "comma-separated x values");
    sweep->add_option("--l-list", l_list, "comma-separated l values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        RunConfig c = config_path.empty() ? RunConfig{} : load_config(config_path);
        if (!out_dir.empty()) c.out_dir = out_dir;
        if (mesh) {
            c.mesh_points = *mesh;
            while (c.mesh_points > 0 && c.mesh_points % 5 != 1) ++c.mesh_points;
        }
        if (N) c.N = *N;
        if (oracle) c.oracle = true;
        if (!omegas.empty()) c.omegas = parse_number_list(omegas);
        if (!xs.empty()) c.xs = parse_number_list(xs);
        if (!l_list.empty()) c.l_values = parse_number_list(l_list);
        c.validate();

        std::vector<fs::path> files;
        if (*show) {
            std::cout << emit_config(c);
            return 0;
        }
        if (*coeffs) files = cmd_coeffs(c);
        if (*eigen) files = cmd_eigen(c, reference.empty() ? std::nullopt : std::optional<fs::path>(reference));
        if (*solve) files = cmd_solve(c);
        if (*sweep) files = cmd_decay_sweep(c);
        for (const auto& f : files) std::cout << "wrote " << f.string() << "\n";
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidMesh& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "numerical breakdown: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace nsbf::cli
