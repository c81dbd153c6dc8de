#include "nsbf/solution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nsbf/special_functions.hpp"

namespace nsbf {

NsbfSolution::NsbfSolution(Potential<double> p, ParticularSolution<double> u0, CoefficientTables<double> tables,
                           int n_used)
    : p_(std::move(p)), u0_(std::move(u0)), tables_(std::move(tables)), n_used_(n_used < 0 ? tables_.N_opt : n_used)
{
    if (n_used_ > tables_.N)
        throw DomainError("N_used = " + std::to_string(n_used_) + " exceeds table order " + std::to_string(tables_.N));
}

NsbfSolution NsbfSolution::build(const Potential<double>& p, int N, const SolverOptions& opt)
{
    auto u0 = build_u0(p, opt.picard_tol, opt.picard_max_iter);
    auto tables = build_tables(u0, p, N, opt.cutoff_slack);
    return NsbfSolution(p, std::move(u0), std::move(tables));
}

NsbfSolution NsbfSolution::with_truncation(int n_used) const
{
    if (n_used < 0) throw DomainError("N_used must be >= 0");
    return NsbfSolution(p_, u0_, tables_, n_used);
}

void NsbfSolution::check_args(double omega, double x) const
{
    if (!(omega >= 0.0) || !std::isfinite(omega)) throw DomainError("omega must be finite and >= 0");
    if (!(x >= 0.0) || x > b() * (1 + 1e-14)) throw DomainError("x = " + std::to_string(x) + " is outside [0, b]");
}

NsbfSolution::Stencil NsbfSolution::stencil(double x) const
{
    const UniformMesh& mesh = p_.mesh;
    const double t = x / mesh.h();
    const double r = std::round(t);
    Stencil s;
    if (std::abs(t - r) <= 1e-9) {
        s.start = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(r), mesh.m() - 1);
        return s;
    }
    s.count = 6;
    s.start = std::clamp<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(std::floor(t)) - 2, 0, mesh.m() - 6);
    const double u = t - static_cast<double>(s.start);
    for (int k = 0; k < 6; ++k) {
        double w = 1.0;
        for (int j = 0; j < 6; ++j)
            if (j != k) w *= (u - j) / static_cast<double>(k - j);
        s.w[k] = w;
    }
    return s;
}

double NsbfSolution::apply(const Stencil& s, const VecD& v)
{
    double acc = 0.0;
    for (int k = 0; k < s.count; ++k) acc += s.w[k] * v[s.start + k];
    return acc;
}

std::pair<double, double> NsbfSolution::eval(double omega, double x) const
{
    check_args(omega, x);
    x = std::min(x, b());
    const double l = p_.l;
    const double z = omega * x;
    const Stencil st = stencil(x);
    const double Q = apply(st, p_.Q.values());

    const double lam = bessel_lambda(l, z);
    double u = std::pow(x, l + 1) * lam;
    double du;
    if (x == 0.0) {
        du = l > 0 ? 0.0 : (l == 0 ? 1.0 : std::numeric_limits<double>::infinity());
    } else {
        du = std::pow(x, l) * (l + 1 + 0.5 * Q * x) * lam -
             omega * omega / (2 * l + 3) * std::pow(x, l + 2) * bessel_lambda(l + 1, z);
    }

    const VecD j = spherical_j_sequence(2 * n_used_, z);
    double su = 0.0, sdu = 0.0;
    for (int n = 0; n <= n_used_; ++n) {
        const double sj = (n % 2 ? -1.0 : 1.0) * j[2 * n];
        if (sj == 0.0) continue;
        su += sj * apply(st, tables_.beta[n].values());
        sdu += sj * apply(st, tables_.gamma[n].values());
    }
    return {u + su, du + sdu};
}

double NsbfSolution::eval_u(double omega, double x) const { return eval(omega, x).first; }

double NsbfSolution::eval_u_prime(double omega, double x) const { return eval(omega, x).second; }

std::pair<double, double> NsbfSolution::error_indicator(double x) const
{
    check_args(0.0, x);
    if (x == 0.0) return {0.0, 0.0};
    x = std::min(x, b());
    const Stencil st = stencil(x);
    double sb = 0.0, sg = 0.0;
    for (int n = 0; n <= n_used_; ++n) {
        sb += apply(st, tables_.beta[n].values());
        sg += apply(st, tables_.gamma[n].values());
    }
    return {std::abs(sb) / x, std::abs(sg) / x};
}

}  // namespace nsbf
