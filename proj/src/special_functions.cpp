#include "nsbf/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bessel.hpp>

namespace nsbf {

namespace {

void j01(double z, double& j0, double& j1)
{
    if (std::abs(z) < 0.5) {
        const double z2 = z * z;
        double t0 = 1.0, t1 = z / 3.0;
        j0 = t0;
        j1 = t1;
        for (int k = 1; k < 30; ++k) {
            t0 *= -z2 / ((2.0 * k) * (2.0 * k + 1.0));
            t1 *= -z2 / ((2.0 * k) * (2.0 * k + 3.0));
            j0 += t0;
            j1 += t1;
            if (std::abs(t0) < 1e-18 * std::abs(j0) && std::abs(t1) < 1e-18 * std::abs(j1)) break;
        }
        return;
    }
    const double s = std::sin(z), c = std::cos(z);
    j0 = s / z;
    j1 = (s / z - c) / z;
}

}  // namespace

VecD spherical_j_sequence(int n_max, double z)
{
    if (n_max < 0) throw DomainError("spherical_j_sequence needs n_max >= 0");
    if (!std::isfinite(z)) throw DomainError("spherical_j_sequence: non-finite argument");
    VecD j = VecD::Zero(n_max + 1);
    if (z == 0.0) {
        j[0] = 1.0;
        return j;
    }
    if (z < 0.0) {
        j = spherical_j_sequence(n_max, -z);
        for (int n = 1; n <= n_max; n += 2) j[n] = -j[n];
        return j;
    }
    double j0, j1;
    j01(z, j0, j1);
    j[0] = j0;
    if (n_max == 0) return j;
    j[1] = j1;
    if (n_max == 1) return j;

    if (z >= n_max) {
        for (int n = 1; n < n_max; ++n)
            j[n + 1] = (2.0 * n + 1.0) / z * j[n] - j[n - 1];
        return j;
    }

    // Miller: backward from a high start, then normalise against j_0 and j_1.
    const int start = n_max + static_cast<int>(std::ceil(1.5 * std::sqrt(40.0 * n_max))) + 20;
    double fp1 = 0.0, f = 1.0;
    for (int n = start; n >= 1; --n) {
        const double fm1 = (2.0 * n + 1.0) / z * f - fp1;
        fp1 = f;
        f = fm1;
        if (n - 1 <= n_max) j[n - 1] = f;
        if (n <= n_max) j[n] = fp1;
        if (std::abs(f) > 1e150) {
            f *= 1e-150;
            fp1 *= 1e-150;
            if (n - 1 <= n_max) j.segment(n - 1, n_max - n + 2) *= 1e-150;
        }
    }
    const double big = std::max(std::abs(j[0]), std::abs(j[1]));
    const double f0 = j[0] / big, f1 = j[1] / big;
    j *= (f0 * j0 + f1 * j1) / (f0 * f0 + f1 * f1) / big;
    return j;
}

double bessel_lambda(double l, double z)
{
    if (l < -0.5) throw DomainError("bessel_lambda needs l >= -1/2");
    if (z < 0.0 || !std::isfinite(z)) throw DomainError("bessel_lambda needs finite z >= 0");
    if (z <= 4.0) {
        const double w = -0.25 * z * z;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 200; ++k) {
            term *= w / (k * (l + 0.5 + k));
            sum += term;
            if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    const double nu = l + 0.5;
    const double J = boost::math::cyl_bessel_j(nu, z);
    if (J == 0.0) return 0.0;
    const double logpre = std::lgamma(l + 1.5) + nu * std::log(2.0 / z);
    return std::copysign(std::exp(logpre + std::log(std::abs(J))), J);
}

double b_l(double l, double z)
{
    if (l < -0.5) throw DomainError("b_l needs l >= -1/2");
    if (z < 0.0 || !std::isfinite(z)) throw DomainError("b_l needs finite z >= 0");
    if (z == 0.0) return l == -0.5 ? 1.0 : 0.0;
    if (z > 4.0) return std::sqrt(z) * boost::math::cyl_bessel_j(l + 0.5, z);
    // z^{l+1} Lambda_l(z) / (2^{l+1/2} Gamma(l+3/2))
    const double logpre = (l + 1.0) * std::log(z) - (l + 0.5) * std::log(2.0) - std::lgamma(l + 1.5);
    return std::exp(logpre) * bessel_lambda(l, z);
}

double b_l_prime(double l, double z)
{
    if (l < -0.5) throw DomainError("b_l_prime needs l >= -1/2");
    if (z < 0.0 || !std::isfinite(z)) throw DomainError("b_l_prime needs finite z >= 0");
    if (z == 0.0) {
        if (l > 0.0) return 0.0;
        if (l == 0.0) return std::sqrt(2.0 / boost::math::constants::pi<double>());
        return std::numeric_limits<double>::infinity();
    }
    return (l + 1.0) / z * b_l(l, z) - b_l(l + 1.0, z);
}

LegendreCoeffRow legendre_even_coeffs(int n)
{
    using boost::multiprecision::cpp_rational;
    if (n < 0) throw DomainError("legendre_even_coeffs needs n >= 0");
    if (n > kLegendreCap)
        throw RangeError("Legendre coefficients requested for P_" + std::to_string(2 * n) +
                         "; orders above P_" + std::to_string(2 * kLegendreCap) +
                         " are not supported, use the recurrent coefficient path");
    const int order = 2 * n;
    std::vector<cpp_rational> prev{cpp_rational(1)}, cur{cpp_rational(0), cpp_rational(1)};
    if (order == 0) return {0, prev};
    // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
    for (int k = 1; k < order; ++k) {
        std::vector<cpp_rational> next(k + 2, cpp_rational(0));
        for (int i = 0; i <= k; ++i) next[i + 1] += cpp_rational(2 * k + 1) * cur[i];
        for (int i = 0; i < k; ++i) next[i] -= cpp_rational(k) * prev[i];
        for (auto& c : next) c /= (k + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {n, cur};
}

}  // namespace nsbf
