#include "nsbf/oracle.hpp"

#include <array>
#include <cmath>
#include <string>

#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

namespace nsbf {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::array<long double, 2>;

}  // namespace

ShootingOracle::ShootingOracle(PotentialSpec spec, double l, double b, double x0, double rel_tol)
    : spec_(spec), l_(l), b_(b), x0_(x0), tol_(rel_tol)
{
    if (l < -0.5) throw DomainError("oracle needs l >= -1/2");
    if (!(b > x0)) throw DomainError("oracle needs b > x0");
}

std::vector<std::pair<long double, long double>> ShootingOracle::solve_at(double omega,
                                                                           const std::vector<double>& xs) const
{
    const long double l = l_, w2 = static_cast<long double>(omega) * omega, ll = l * (l + 1);
    auto rhs = [&](const State& y, State& dy, long double x) {
        dy[0] = y[1];
        dy[1] = (ll / (x * x) + spec_.q<long double>(x) - w2) * y[0];
    };
    long double x = x0_;
    // u ~ x^{l+1} (1 + a x + c x^2) with x q -> Z, q - Z/x -> q0 at the origin
    const long double x0 = x0_;
    const long double Z = spec_.singular_origin() ? spec_.xq<long double>(0.0L) : 0.0L;
    const long double q0 = spec_.singular_origin() ? 0.0L : spec_.q<long double>(0.0L);
    const long double a = Z / (2 * (l + 1)), c = (a * Z + q0 - w2) / (4 * l + 6);
    State y{std::pow(x0, l + 1) * (1 + a * x0 + c * x0 * x0),
            std::pow(x0, l) * ((l + 1) + (l + 2) * a * x0 + (l + 3) * c * x0 * x0)};
    auto stepper = odeint::make_controlled(static_cast<long double>(tol_) * 1e-12L, static_cast<long double>(tol_),
                                           odeint::runge_kutta_fehlberg78<State, long double>());
    std::vector<std::pair<long double, long double>> out;
    for (double target : xs) {
        if (target < x0_ || target > b_ * (1 + 1e-14))
            throw DomainError("oracle evaluation point " + std::to_string(target) + " is outside [x0, b]");
        const long double t = target;
        if (t > x) {
            long double dt = std::min<long double>(1e-3L * x, t - x);
            odeint::integrate_adaptive(stepper, rhs, y, x, t, dt);
            x = t;
        }
        out.emplace_back(y[0], y[1]);
    }
    return out;
}

std::pair<long double, long double> ShootingOracle::solve(double omega, double x) const
{
    return solve_at(omega, {x}).front();
}

double ShootingOracle::characteristic(const SpectralProblem& prob, double omega) const
{
    const auto [u, du] = solve(omega, b_);
    const long double h = prob.robin_h;
    long double v = u;
    if (prob.boundary == Boundary::Neumann) v = du;
    if (prob.boundary == Boundary::Robin) v = du + h * u;
    return static_cast<double>(v);
}

double ShootingOracle::refine_eigenvalue(const SpectralProblem& prob, double lo, double hi) const
{
    auto f = [&](double w) { return characteristic(prob, w); };
    const double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0) == (fhi < 0)) throw ConvergenceError("oracle bracket does not change sign");
    boost::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(52),
                                                     iters);
    return 0.5 * (r.first + r.second);
}

double ShootingOracle::eigenvalue_near(const SpectralProblem& prob, double omega, double delta) const
{
    double d = delta;
    for (int k = 0; k < 40; ++k, d *= 2) {
        const double lo = std::max(omega - d, 1e-12), hi = omega + d;
        const double flo = characteristic(prob, lo), fhi = characteristic(prob, hi);
        if ((flo < 0) != (fhi < 0) || flo == 0.0 || fhi == 0.0) return refine_eigenvalue(prob, lo, hi);
    }
    throw ConvergenceError("oracle found no sign change near omega = " + std::to_string(omega));
}

std::vector<Eigenpair> ShootingOracle::find_eigenvalues(const SpectralProblem& prob) const
{
    auto scan = find_roots([&](double w) { return characteristic(prob, w); }, prob);
    return scan;
}

}  // namespace nsbf
