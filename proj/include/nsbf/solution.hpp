#pragma once

#include <utility>

#include "nsbf/coefficients.hpp"
#include "nsbf/potential.hpp"
#include "nsbf/spps.hpp"

namespace nsbf {

struct SolverOptions {
    double picard_tol = 1e-14;
    int picard_max_iter = 100;
    double cutoff_slack = 100.0;
};

// Truncated series u_{l;N}(omega, x) and its x-derivative for real omega >= 0.
class NsbfSolution {
public:
    // n_used < 0 selects tables.N_opt.
    NsbfSolution(Potential<double> p, ParticularSolution<double> u0, CoefficientTables<double> tables, int n_used = -1);

    static NsbfSolution build(const Potential<double>& p, int N, const SolverOptions& opt = {});

    double eval_u(double omega, double x) const;
    double eval_u_prime(double omega, double x) const;
    std::pair<double, double> eval(double omega, double x) const;

    // (|sum beta_n(x)| / x, |sum gamma_n(x)| / x) over n <= N_used.
    std::pair<double, double> error_indicator(double x) const;

    NsbfSolution with_truncation(int n_used) const;

    const Potential<double>& potential() const { return p_; }
    const ParticularSolution<double>& particular() const { return u0_; }
    const CoefficientTables<double>& tables() const { return tables_; }
    const UniformMesh& mesh() const { return p_.mesh; }
    double l() const { return p_.l; }
    double b() const { return p_.mesh.b(); }
    int N_used() const { return n_used_; }

private:
    struct Stencil {
        std::ptrdiff_t start = 0;
        int count = 1;
        double w[6] = {1, 0, 0, 0, 0, 0};
    };

    Stencil stencil(double x) const;
    static double apply(const Stencil& s, const VecD& v);
    void check_args(double omega, double x) const;

    Potential<double> p_;
    ParticularSolution<double> u0_;
    CoefficientTables<double> tables_;
    int n_used_;
};

}  // namespace nsbf
