#pragma once

#include <utility>
#include <vector>

#include "nsbf/potential.hpp"
#include "nsbf/spectral.hpp"

namespace nsbf {

// Reference solver: adaptive Runge-Kutta-Fehlberg 7(8) in long double, started at
// x0 = 1e-6 with u = x0^{l+1} (1 + a x0 + c x0^2) and its derivative, a and c from the
// Frobenius expansion at the origin.
class ShootingOracle {
public:
    ShootingOracle(PotentialSpec spec, double l, double b, double x0 = 1e-6, double rel_tol = 1e-17);

    // (u(omega, x), u'(omega, x)) for x in [x0, b].
    std::pair<long double, long double> solve(double omega, double x) const;

    // Same, at increasing x values in one sweep.
    std::vector<std::pair<long double, long double>> solve_at(double omega, const std::vector<double>& xs) const;

    double characteristic(const SpectralProblem& prob, double omega) const;

    // Root of the boundary expression in [lo, hi]; the bracket must change sign.
    double refine_eigenvalue(const SpectralProblem& prob, double lo, double hi) const;

    // Root near an approximate eigenvalue, bracketing outwards from +-delta.
    double eigenvalue_near(const SpectralProblem& prob, double omega, double delta = 1e-6) const;

    std::vector<Eigenpair> find_eigenvalues(const SpectralProblem& prob) const;

private:
    PotentialSpec spec_;
    double l_, b_, x0_, tol_;
};

}  // namespace nsbf
