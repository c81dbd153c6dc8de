#pragma once

#include <string>
#include <vector>

#include "nsbf/solution.hpp"

namespace nsbf {

enum class Boundary { Dirichlet, Neumann, Robin };

Boundary parse_boundary(const std::string& name);
std::string boundary_name(Boundary b);

struct SpectralProblem {
    Boundary boundary = Boundary::Dirichlet;
    double robin_h = 0.0;
    double omega_lo = 0.0;
    double omega_hi = 10.0;
    int scan_points = 0;  // 0: 20 samples per unit omega

    int effective_scan_points() const;
    void validate() const;
};

struct Eigenpair {
    int index = 0;
    double omega = 0.0;
    double char_residual = 0.0;
    double refinement_width = 0.0;
    double residual_scale = 0.0;  // max |Phi| at the final bracket ends
};

// Phi(omega) = omega^{l+1} * (boundary expression at x = b)
double characteristic(const NsbfSolution& s, const SpectralProblem& prob, double omega);

// Boundary expression for given (u(b), u'(b)).
double boundary_value(const SpectralProblem& prob, double u, double du);

std::vector<Eigenpair> find_eigenvalues(const NsbfSolution& s, const SpectralProblem& prob);

template <typename F>
std::vector<Eigenpair> find_roots(F&& phi, const SpectralProblem& prob);

struct DecayFit {
    double exponent = 0.0;
    double intercept = 0.0;  // log |c| at n = 1
    int points = 0;
    double floor = 0.0;
};

// Least-squares slope of log|c_n| against log n over [n_lo, n_hi]; c is indexed by n.
DecayFit decay_fit(const VecD& c, int n_lo, int n_hi);

}  // namespace nsbf

#include "nsbf/detail/root_scan.hpp"
