#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "nsbf/potential.hpp"
#include "nsbf/quadrature.hpp"
#include "nsbf/special_functions.hpp"
#include "nsbf/spps.hpp"

namespace nsbf {

// eta_n, kappa_n, theta_n, mu_n, each divided by x^{2n} (0 near the origin).
template <typename Scalar = double>
struct CoefficientAux {
    std::vector<Vec<Scalar>> eta, kappa, theta, mu;
    std::vector<std::ptrdiff_t> start;  // first index outside the zeroed near-origin zone
};

struct TruncationChoice {
    int K = 0;
    bool converged = true;
    double floor = 0.0;
};

template <typename Scalar = double>
struct CoefficientTables {
    std::vector<GridFunction<Scalar>> beta;
    std::vector<GridFunction<Scalar>> gamma;
    int N = 0;
    VecD beta_residual;   // |sum_{n<=K} beta_n(b)| / b
    VecD gamma_residual;
    int N_opt = 0;
    bool converged = true;
    double beta_floor = 0.0;
    double gamma_floor = 0.0;
};

namespace detail {

// Below this, (x/b)^{2n} is treated as underflowed and the quotient by it as 0.
inline constexpr double kPowerFloor = 1e-200;

template <typename Scalar>
struct RecurrenceInputs {
    Vec<Scalar> x, xi, u0, du0, q, Q, xl1, kbase;
    Scalar b, h, l;
};

template <typename Scalar>
RecurrenceInputs<Scalar> recurrence_inputs(const ParticularSolution<Scalar>& u, const Potential<Scalar>& p)
{
    using std::pow;
    RecurrenceInputs<Scalar> in;
    in.x = p.mesh.template points<Scalar>();
    in.b = Scalar(p.mesh.b());
    in.h = p.mesh.template step<Scalar>();
    in.l = p.l;
    in.xi = in.x / in.b;
    in.u0 = u.u0.values();
    in.du0 = u.u0_prime.values();
    in.q = p.q.values();
    in.Q = p.Q.values();
    const std::ptrdiff_t m = in.x.size();
    in.xl1.resize(m);
    in.kbase.resize(m);
    for (std::ptrdiff_t i = 0; i < m; ++i) {
        in.xl1[i] = pow(in.x[i], p.l + 1);
        // u0 q x^{l+1} = w (xq) x^{2l+1}
        in.kbase[i] = i == 0 ? Scalar(0) : u.w[i] * p.xq(i) * pow(in.x[i], 2 * p.l + 1);
    }
    return in;
}

template <typename Scalar>
void check_finite(const Vec<Scalar>& v, const char* what, int n)
{
    using std::isfinite;
    for (std::ptrdiff_t i = 0; i < v.size(); ++i)
        if (!isfinite(v[i]))
            throw NumericalBreakdown(std::string("non-finite ") + what + "_" + std::to_string(n) +
                                     " near index " + std::to_string(i));
}

// Shared recurrence; gamma and aux are optional outputs.
template <typename Scalar>
std::vector<Vec<Scalar>> run_recurrence(const ParticularSolution<Scalar>& u, const Potential<Scalar>& p, int N,
                                        std::vector<Vec<Scalar>>* gamma, CoefficientAux<Scalar>* aux,
                                        double T)
{
    using std::pow;
    if (N < 0) throw DomainError("coefficient order N must be >= 0");
    if (!(u.u0.mesh() == p.mesh)) throw InvalidMesh("u0 and potential live on different meshes");
    const auto in = recurrence_inputs(u, p);
    const std::ptrdiff_t m = in.x.size();
    const Scalar l = in.l;

    std::vector<Vec<Scalar>> beta;
    beta.push_back(in.xl1 * (u.w - 1));
    if (gamma) {
        gamma->clear();
        Vec<Scalar> g0(m);
        for (std::ptrdiff_t i = 0; i < m; ++i) {
            // beta_0' - x^{l+1} Q / 2
            const Scalar db0 = i == 0 ? Scalar(0) : pow(in.x[i], l) * (u.wd[i] - (l + 1));
            g0[i] = db0 - in.xl1[i] * in.Q[i] / 2;
        }
        gamma->push_back(std::move(g0));
    }
    if (aux) *aux = CoefficientAux<Scalar>{};

    const Vec<Scalar> u0sq = in.u0 * in.u0;
    Vec<Scalar> xi2n1(m), xi2n(m), xi2n2 = Vec<Scalar>::Ones(m);
    Vec<Scalar> g(m);
    std::ptrdiff_t prev_start = 0;  // the unreliable zone only grows with n
    for (int n = 1; n <= N; ++n) {
        const Scalar Bn = gamma_ratio_Bn<Scalar>(n, l);
        const Scalar Cn = Bn / 2;
        const Vec<Scalar>& bprev = beta.back();
        for (std::ptrdiff_t i = 0; i < m; ++i) {
            xi2n1[i] = xi2n2[i] * in.xi[i];
            xi2n[i] = xi2n1[i] * in.xi[i];
        }

        const Vec<Scalar> E =
            cumulative_integral(Vec<Scalar>((in.x * in.du0 + Scalar(2 * n - 1) * in.u0) * xi2n2 * bprev), in.h);
        g[0] = Scalar(0);
        for (std::ptrdiff_t i = 1; i < m; ++i)
            g[i] = (E[i] - in.b * xi2n1[i] * bprev[i] * in.u0[i]) / u0sq[i];
        std::ptrdiff_t cut = 0, cut_mu = 0;
        const Vec<Scalar> Th = cumulative_integral_guarded(g, in.h, T, &cut);

        Vec<Scalar> K = Vec<Scalar>::Zero(m), M = Vec<Scalar>::Zero(m);
        if (Bn != 0) {
            K = cumulative_integral(Vec<Scalar>(in.kbase * xi2n), in.h);
            for (std::ptrdiff_t i = 1; i < m; ++i) g[i] = K[i] / u0sq[i];
            M = cumulative_integral_guarded(g, in.h, T, &cut_mu);
            cut = std::max(cut, cut_mu);
        }

        Vec<Scalar> bn = Vec<Scalar>::Zero(m);
        Vec<Scalar> gn = Vec<Scalar>::Zero(m);
        Vec<Scalar> eh = Vec<Scalar>::Zero(m), kh = eh, th = eh, mh = eh;
        const Scalar sgn = n % 2 ? Scalar(-1) : Scalar(1);
        const Scalar r = Scalar(4 * n + 1) / Scalar(4 * n - 3);
        const Scalar b2 = in.b * in.b;
        std::ptrdiff_t start = std::max({cut, prev_start, std::ptrdiff_t(1)});
        while (start < m && xi2n[start] < Scalar(kPowerFloor)) ++start;
        for (std::ptrdiff_t i = start; i < m; ++i) {
            th[i] = Th[i] / (b2 * xi2n[i]);
            eh[i] = E[i] / (b2 * xi2n[i]);
            mh[i] = M[i] / xi2n[i];
            kh[i] = K[i] / xi2n[i];
            bn[i] = r * (bprev[i] + in.u0[i] * (Scalar(2 * (4 * n - 1)) * th[i] + sgn * Scalar(4 * n - 3) * Bn * mh[i]));
            if (gamma) {
                const Vec<Scalar>& gprev = gamma->back();
                gn[i] = r * (gprev[i] + Scalar(4 * n - 1) * (2 * in.du0[i] * th[i] + 2 * eh[i] / in.u0[i] -
                                                            bprev[i] / in.x[i])) +
                        sgn * Scalar(4 * n + 1) *
                            (Bn * (mh[i] * in.du0[i] + kh[i] / in.u0[i]) - Cn * in.Q[i] * in.xl1[i]);
            }
        }
        // quotients by xi^{2n} blow rounding up near the origin; drop the non-smooth prefix
        if (start < m - 6) {
            std::ptrdiff_t rough = start + cutoff_start_index(bn.tail(m - start), T);
            if (gamma) rough = std::max(rough, start + cutoff_start_index(gn.tail(m - start), T));
            if (rough > start) {
                start = rough;
                for (Vec<Scalar>* v : {&bn, &gn, &eh, &kh, &th, &mh}) v->head(start).setZero();
            }
        }
        check_finite(bn, "beta", n);
        beta.push_back(std::move(bn));
        if (gamma) {
            check_finite(gn, "gamma", n);
            gamma->push_back(std::move(gn));
        }
        if (aux) {
            aux->eta.push_back(std::move(eh));
            aux->kappa.push_back(std::move(kh));
            aux->theta.push_back(std::move(th));
            aux->mu.push_back(std::move(mh));
            aux->start.push_back(start);
        }
        xi2n2 = xi2n;
        prev_start = start;
    }
    return beta;
}

template <typename Scalar>
std::vector<GridFunction<Scalar>> to_grid(const UniformMesh& mesh, std::vector<Vec<Scalar>>&& v)
{
    std::vector<GridFunction<Scalar>> out;
    out.reserve(v.size());
    for (auto& a : v) out.emplace_back(mesh, std::move(a));
    return out;
}

}  // namespace detail

template <typename Scalar = double>
std::vector<GridFunction<Scalar>> beta_recurrent(const ParticularSolution<Scalar>& u, const Potential<Scalar>& p,
                                                 int N, CoefficientAux<Scalar>* aux = nullptr, double T = 100.0)
{
    return detail::to_grid(p.mesh, detail::run_recurrence<Scalar>(u, p, N, nullptr, aux, T));
}

// gamma_0..gamma_N from beta and the stored auxiliaries of the same run.
template <typename Scalar = double>
std::vector<GridFunction<Scalar>> gamma_recurrent(const ParticularSolution<Scalar>& u, const Potential<Scalar>& p,
                                                  const std::vector<GridFunction<Scalar>>& beta,
                                                  const CoefficientAux<Scalar>& aux, int N)
{
    using std::pow;
    if (static_cast<int>(beta.size()) < N + 1 || static_cast<int>(aux.theta.size()) < N)
        throw DomainError("gamma_recurrent needs beta and auxiliaries up to order N");
    const auto in = detail::recurrence_inputs(u, p);
    const std::ptrdiff_t m = in.x.size();
    const Scalar l = in.l;
    std::vector<Vec<Scalar>> gamma;
    Vec<Scalar> g0(m);
    for (std::ptrdiff_t i = 0; i < m; ++i) {
        const Scalar db0 = i == 0 ? Scalar(0) : pow(in.x[i], l) * (u.wd[i] - (l + 1));
        g0[i] = db0 - in.xl1[i] * in.Q[i] / 2;
    }
    gamma.push_back(std::move(g0));
    for (int n = 1; n <= N; ++n) {
        const Scalar Bn = gamma_ratio_Bn<Scalar>(n, l);
        const Scalar Cn = Bn / 2;
        const Scalar sgn = n % 2 ? Scalar(-1) : Scalar(1);
        const Scalar r = Scalar(4 * n + 1) / Scalar(4 * n - 3);
        const auto& th = aux.theta[n - 1];
        const auto& eh = aux.eta[n - 1];
        const auto& mh = aux.mu[n - 1];
        const auto& kh = aux.kappa[n - 1];
        const Vec<Scalar>& bprev = beta[n - 1].values();
        Vec<Scalar> gn = Vec<Scalar>::Zero(m);
        for (std::ptrdiff_t i = aux.start[n - 1]; i < m; ++i) {
            gn[i] = r * (gamma.back()[i] +
                         Scalar(4 * n - 1) * (2 * in.du0[i] * th[i] + 2 * eh[i] / in.u0[i] - bprev[i] / in.x[i])) +
                    sgn * Scalar(4 * n + 1) * (Bn * (mh[i] * in.du0[i] + kh[i] / in.u0[i]) - Cn * in.Q[i] * in.xl1[i]);
        }
        detail::check_finite(gn, "gamma", n);
        gamma.push_back(std::move(gn));
    }
    return detail::to_grid(p.mesh, std::move(gamma));
}

// Smallest K whose next ten residuals all sit within 10x of the floor; N, flagged
// as not converged, when none does.
TruncationChoice select_truncation(const VecD& residual, double noise_floor = 0.0);

template <typename Scalar = double>
CoefficientTables<Scalar> build_tables(const ParticularSolution<Scalar>& u, const Potential<Scalar>& p, int N,
                                       double T = 100.0)
{
    using std::abs;
    std::vector<Vec<Scalar>> gamma;
    auto beta = detail::run_recurrence<Scalar>(u, p, N, &gamma, nullptr, T);
    CoefficientTables<Scalar> t;
    t.N = N;
    const std::ptrdiff_t last = p.mesh.m() - 1;
    const double b = p.mesh.b();
    t.beta_residual.resize(N + 1);
    t.gamma_residual.resize(N + 1);
    Scalar sb(0), sg(0);
    for (int n = 0; n <= N; ++n) {
        sb += beta[n][last];
        sg += gamma[n][last];
        t.beta_residual[n] = static_cast<double>(abs(sb)) / b;
        t.gamma_residual[n] = static_cast<double>(abs(sg)) / b;
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double u0b = static_cast<double>(abs(u.u0(last)));
    const double du0b = static_cast<double>(abs(u.u0_prime(last)));
    const auto cb = select_truncation(t.beta_residual, 16 * eps * u0b / b);
    const auto cg = select_truncation(t.gamma_residual, 16 * eps * du0b / b);
    t.N_opt = std::max(cb.K, cg.K);
    t.converged = cb.converged && cg.converged;
    t.beta_floor = cb.floor;
    t.gamma_floor = cg.floor;
    t.beta = detail::to_grid(p.mesh, std::move(beta));
    t.gamma = detail::to_grid(p.mesh, std::move(gamma));
    return t;
}

// (4n+1) sum_k l_{2k,2n} x^{-2k} (phi_k - c_{k,l} x^{2k+l+1}) at mesh index i > 0.
template <typename Scalar = double>
Scalar beta_direct(const PhiFamily<Scalar>& fam, int n, std::ptrdiff_t i)
{
    using std::pow;
    if (n > 12) throw RangeError("direct beta formula is limited to n <= 12; use the recurrent path");
    if (n < 0 || n >= static_cast<int>(fam.phi.size()))
        throw DomainError("phi family does not reach order " + std::to_string(n));
    const UniformMesh& mesh = fam.phi[0].mesh();
    if (i <= 0 || i >= mesh.m()) throw DomainError("beta_direct needs a mesh index in (0, m)");
    const Scalar x = mesh.template points<Scalar>()[i];
    const Vec<Scalar> lc = legendre_even_coeffs(n).template coeffs<Scalar>();
    Scalar s(0);
    for (int k = 0; k <= n; ++k)
        s += lc[2 * k] / pow(x, 2 * k) * (fam.phi[k](i) - c_kl<Scalar>(k, fam.l) * pow(x, 2 * k + fam.l + 1));
    return Scalar(4 * n + 1) * s;
}

template <typename Scalar = double>
Scalar gamma_direct(const PhiFamily<Scalar>& fam, const Potential<Scalar>& p, int n, std::ptrdiff_t i)
{
    using std::pow;
    if (n > 12) throw RangeError("direct gamma formula is limited to n <= 12; use the recurrent path");
    if (n < 0 || n >= static_cast<int>(fam.phi.size()))
        throw DomainError("phi family does not reach order " + std::to_string(n));
    if (i <= 0 || i >= p.mesh.m()) throw DomainError("gamma_direct needs a mesh index in (0, m)");
    const Scalar x = p.mesh.template points<Scalar>()[i];
    const Scalar l = fam.l;
    const Scalar Q = p.Q(i);
    const Vec<Scalar> lc = legendre_even_coeffs(n).template coeffs<Scalar>();
    Scalar s(0);
    for (int k = 0; k <= n; ++k) {
        const Scalar lead = (2 * k + l + 1) * pow(x, 2 * k + l) + Q / 2 * pow(x, 2 * k + l + 1);
        s += lc[2 * k] / pow(x, 2 * k) * (fam.phi_prime[k](i) - c_kl<Scalar>(k, l) * lead);
    }
    return Scalar(4 * n + 1) * s;
}

}  // namespace nsbf
