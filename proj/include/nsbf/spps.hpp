#pragma once

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/special_functions/factorials.hpp>

#include "nsbf/potential.hpp"
#include "nsbf/quadrature.hpp"

namespace nsbf {

// Non-vanishing solution of the omega = 0 equation with u0 ~ x^{l+1}.
// w = u0/x^{l+1} and wd = u0'/x^l are kept as the regular parts.
template <typename Scalar = double>
struct ParticularSolution {
    GridFunction<Scalar> u0;
    GridFunction<Scalar> u0_prime;  // sample at 0 is 0 when l < 0
    Scalar l;
    int iterations = 0;
    double residual = 0.0;
    Vec<Scalar> w;
    Vec<Scalar> wd;
};

namespace detail {

template <typename Scalar>
struct PicardState {
    Vec<Scalar> w, wd;
};

template <typename Scalar>
bool is_half(Scalar l)
{
    return l == Scalar(-0.5);
}

}  // namespace detail

// One sweep of the Volterra map w -> 1 + (A - x^{-2l-1} B)/(2l+1).
template <typename Scalar>
detail::PicardState<Scalar> picard_sweep(const Potential<Scalar>& p, const Vec<Scalar>& w)
{
    using std::log;
    using std::pow;
    const UniformMesh& mesh = p.mesh;
    const Scalar h = mesh.template step<Scalar>();
    const Scalar l = p.l;
    const Vec<Scalar> x = mesh.template points<Scalar>();
    const Vec<Scalar> sqw = p.xq.values() * w;
    const Vec<Scalar> A = cumulative_integral(sqw, h);
    detail::PicardState<Scalar> out{Vec<Scalar>(x.size()), Vec<Scalar>(x.size())};

    if (detail::is_half(l)) {
        Vec<Scalar> g(x.size());
        g[0] = Scalar(0);
        for (std::ptrdiff_t i = 1; i < x.size(); ++i) g[i] = log(x[i]) * sqw[i];
        const Vec<Scalar> C = cumulative_integral_guarded(g, h);
        out.w[0] = Scalar(1);
        out.wd[0] = Scalar(0.5);
        for (std::ptrdiff_t i = 1; i < x.size(); ++i) {
            out.w[i] = 1 + log(x[i]) * A[i] - C[i];
            out.wd[i] = out.w[i] / 2 + A[i];
        }
        return out;
    }

    const Scalar b(mesh.b());
    const Scalar e = 2 * l + 1;
    Vec<Scalar> xi_e(x.size());
    for (std::ptrdiff_t i = 0; i < x.size(); ++i) xi_e[i] = pow(x[i] / b, e);
    const Vec<Scalar> Bh = cumulative_integral(Vec<Scalar>(xi_e * sqw), h);
    for (std::ptrdiff_t i = 0; i < x.size(); ++i) {
        const Scalar t = xi_e[i] > Scalar(0) ? Bh[i] / xi_e[i] : Scalar(0);
        out.w[i] = 1 + (A[i] - t) / e;
        out.wd[i] = (l + 1) + ((l + 1) * A[i] + l * t) / e;
    }
    return out;
}

namespace detail {

// max over interior points of |u0'' - (l(l+1)/x^2 + q) u0| / (1 + |u0''|)
template <typename Scalar>
double ode_defect(const Potential<Scalar>& p, const Vec<Scalar>& u0)
{
    using std::abs;
    const std::ptrdiff_t m = u0.size();
    const Vec<Scalar> x = p.mesh.template points<Scalar>();
    const Scalar h = p.mesh.template step<Scalar>();
    const Scalar ll = p.l * (p.l + 1);
    const std::ptrdiff_t first = std::max<std::ptrdiff_t>(10, m / 100);
    Scalar worst(0);
    for (std::ptrdiff_t i = first; i <= m - 3; ++i) {
        const Scalar d2 = (-u0[i - 2] + 16 * u0[i - 1] - 30 * u0[i] + 16 * u0[i + 1] - u0[i + 2]) / (12 * h * h);
        const Scalar rhs = (ll / (x[i] * x[i]) + p.xq(i) / x[i]) * u0[i];
        const Scalar r = abs(d2 - rhs) / (1 + abs(d2));
        if (r > worst) worst = r;
    }
    return static_cast<double>(worst);
}

template <typename Scalar>
void require_positive(const UniformMesh& mesh, const Vec<Scalar>& w)
{
    for (std::ptrdiff_t i = 1; i < w.size(); ++i)
        if (!(w[i] > 0))
            throw NonVanishingError("u0 vanishes or changes sign near x = " + std::to_string(mesh.x(i)) +
                                    "; a non-vanishing particular solution is required");
}

}  // namespace detail

template <typename Scalar = double>
ParticularSolution<Scalar> build_u0(const Potential<Scalar>& p, double tol = 1e-14, int max_iter = 100)
{
    using std::abs;
    using std::pow;
    if (!(tol > 0.0)) throw DomainError("Picard tolerance must be positive");
    if (max_iter < 1) throw DomainError("Picard iteration limit must be at least 1");
    const std::ptrdiff_t m = p.mesh.m();
    const Vec<Scalar> x = p.mesh.template points<Scalar>();
    Vec<Scalar> w = Vec<Scalar>::Ones(m);
    detail::PicardState<Scalar> s;
    int it = 0;
    for (;;) {
        s = picard_sweep(p, w);
        ++it;
        const Scalar change = (s.w - w).abs().maxCoeff();
        const Scalar size = std::max(Scalar(1), Scalar(s.w.abs().maxCoeff()));
        w = s.w;
        if (change <= Scalar(tol) * size) break;
        if (it >= max_iter) {
            detail::require_positive(p.mesh, s.w);
            std::ostringstream msg;
            msg << "Picard iteration for u0 did not converge in " << max_iter << " sweeps (last change "
                << std::scientific << std::setprecision(3) << static_cast<double>(change) << ")";
            throw ConvergenceError(msg.str());
        }
    }
    detail::require_positive(p.mesh, s.w);

    Vec<Scalar> u0(m), du0(m);
    for (std::ptrdiff_t i = 0; i < m; ++i) {
        u0[i] = pow(x[i], p.l + 1) * s.w[i];
        if (i == 0)
            du0[i] = p.l == 0 ? s.wd[0] : Scalar(0);
        else
            du0[i] = pow(x[i], p.l) * s.wd[i];
    }
    const double residual = detail::ode_defect(p, u0);
    return ParticularSolution<Scalar>{GridFunction<Scalar>(p.mesh, std::move(u0)),
                                      GridFunction<Scalar>(p.mesh, std::move(du0)),
                                      p.l,
                                      it,
                                      residual,
                                      std::move(s.w),
                                      std::move(s.wd)};
}

// Xtilde^(0..2N), phi_0..phi_N and phi_k'.
template <typename Scalar = double>
struct PhiFamily {
    std::vector<GridFunction<Scalar>> xtilde;
    std::vector<GridFunction<Scalar>> phi;
    std::vector<GridFunction<Scalar>> phi_prime;
    Scalar l;
};

template <typename Scalar = double>
PhiFamily<Scalar> build_phi_family(const ParticularSolution<Scalar>& u, int N)
{
    if (N < 0) throw DomainError("phi family order must be >= 0");
    const UniformMesh& mesh = u.u0.mesh();
    const std::ptrdiff_t m = mesh.m();
    const Scalar h = mesh.template step<Scalar>();
    const Vec<Scalar>& u0 = u.u0.values();
    const Vec<Scalar>& du0 = u.u0_prime.values();
    const Vec<Scalar> u0sq = u0 * u0;

    std::vector<Vec<Scalar>> X;
    X.push_back(Vec<Scalar>::Ones(m));
    for (int n = 1; n <= 2 * N; ++n) {
        if (n % 2 == 1) {
            X.push_back(cumulative_integral(Vec<Scalar>(u0sq * X.back()), h));
        } else {
            Vec<Scalar> g(m);
            g[0] = Scalar(0);
            g.tail(m - 1) = X.back().tail(m - 1) / u0sq.tail(m - 1);
            X.push_back(-cumulative_integral_guarded(g, h));
        }
    }

    PhiFamily<Scalar> fam{{}, {}, {}, u.l};
    for (auto& v : X) fam.xtilde.emplace_back(mesh, v);
    for (int k = 0; k <= N; ++k) {
        const Scalar f = (k % 2 ? Scalar(-1) : Scalar(1)) * boost::math::factorial<Scalar>(2 * k);
        fam.phi.emplace_back(mesh, Vec<Scalar>(f * u0 * X[2 * k]));
        Vec<Scalar> d = du0 * X[2 * k];
        if (k > 0) {
            d[0] = Scalar(0);
            d.tail(m - 1) -= X[2 * k - 1].tail(m - 1) / u0.tail(m - 1);
        }
        fam.phi_prime.emplace_back(mesh, Vec<Scalar>(f * d));
    }
    return fam;
}

}  // namespace nsbf
