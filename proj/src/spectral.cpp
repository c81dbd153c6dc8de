#include "nsbf/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace nsbf {

Boundary parse_boundary(const std::string& name)
{
    if (name == "dirichlet") return Boundary::Dirichlet;
    if (name == "neumann") return Boundary::Neumann;
    if (name == "robin") return Boundary::Robin;
    throw ConfigError("unknown boundary condition '" + name + "' (dirichlet, neumann, robin)");
}

std::string boundary_name(Boundary b)
{
    switch (b) {
    case Boundary::Dirichlet: return "dirichlet";
    case Boundary::Neumann: return "neumann";
    case Boundary::Robin: return "robin";
    }
    return "dirichlet";
}

int SpectralProblem::effective_scan_points() const
{
    if (scan_points > 0) return scan_points;
    return std::max(2, static_cast<int>(std::ceil(20.0 * (omega_hi - omega_lo))) + 1);
}

void SpectralProblem::validate() const
{
    if (!(omega_lo >= 0.0) || !(omega_hi > omega_lo) || !std::isfinite(omega_hi))
        throw DomainError("omega window must satisfy 0 <= omega_lo < omega_hi");
    if (scan_points != 0 && scan_points < 2) throw DomainError("scan_points must be at least 2");
    if (!std::isfinite(robin_h)) throw DomainError("Robin coefficient must be finite");
}

double boundary_value(const SpectralProblem& prob, double u, double du)
{
    switch (prob.boundary) {
    case Boundary::Dirichlet: return u;
    case Boundary::Neumann: return du;
    case Boundary::Robin: return du + prob.robin_h * u;
    }
    return u;
}

double characteristic(const NsbfSolution& s, const SpectralProblem& prob, double omega)
{
    if (!(omega > 0.0)) throw DomainError("characteristic function needs omega > 0");
    const auto [u, du] = s.eval(omega, s.b());
    return std::pow(omega, s.l() + 1) * boundary_value(prob, u, du);
}

std::vector<Eigenpair> find_eigenvalues(const NsbfSolution& s, const SpectralProblem& prob)
{
    return find_roots([&](double w) { return characteristic(s, prob, w); }, prob);
}

DecayFit decay_fit(const VecD& c, int n_lo, int n_hi)
{
    if (n_lo < 1 || n_hi < n_lo || n_hi >= c.size())
        throw DomainError("decay fit range must satisfy 1 <= n_lo <= n_hi < size");
    if (n_hi - n_lo < 10) throw InsufficientData("decay fit needs a range of at least 10 orders");
    std::vector<double> mags;
    for (int n = n_lo; n <= n_hi; ++n) mags.push_back(std::abs(c[n]));
    std::vector<double> sorted = mags;
    std::sort(sorted.begin(), sorted.end());
    const double floor = sorted[std::min<std::size_t>(2, sorted.size() - 1)];

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int k = 0;
    for (int n = n_lo; n <= n_hi; ++n) {
        const double v = mags[n - n_lo];
        if (!(v > 0.0) || v < 10.0 * floor || !std::isfinite(v)) continue;
        const double x = std::log(double(n)), y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++k;
    }
    if (k < 10)
        throw InsufficientData("decay fit has only " + std::to_string(k) + " usable points above the floor");
    const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    return {slope, (sy - slope * sx) / k, k, floor};
}

}  // namespace nsbf
