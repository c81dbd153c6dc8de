#pragma once

#include <cmath>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "nsbf/error.hpp"
#include "nsbf/mesh.hpp"

namespace nsbf {

// j_0(z)..j_{n_max}(z).
VecD spherical_j_sequence(int n_max, double z);

// Lambda_l(z) = Gamma(l+3/2) (2/z)^{l+1/2} J_{l+1/2}(z), with Lambda_l(0) = 1.
double bessel_lambda(double l, double z);

// sqrt(z) J_{l+1/2}(z) and its derivative.
double b_l(double l, double z);
double b_l_prime(double l, double z);

// Gamma(l+3/2) Gamma(k+1/2) / (sqrt(pi) Gamma(k+l+3/2))
template <typename Scalar = double>
Scalar c_kl(int k, Scalar l)
{
    if (k < 0) throw DomainError("c_kl needs k >= 0");
    if (l < Scalar(-0.5)) throw DomainError("c_kl needs l >= -1/2");
    const Scalar half(0.5);
    return boost::math::tgamma_delta_ratio(Scalar(k) + half, l + 1) /
           boost::math::tgamma_delta_ratio(half, l + 1);
}

// (4n-1) Gamma(l+2) Gamma(l+3/2) Gamma(n-1/2) / (2 sqrt(pi) Gamma(l-n+2) Gamma(n+1) Gamma(n+l+3/2)).
// Gamma(l+2)/Gamma(l+2-n) is expanded as a falling product so integer l gives exact zeros.
template <typename Scalar = double>
Scalar gamma_ratio_Bn(int n, Scalar l)
{
    using std::sqrt;
    if (n < 1) throw DomainError("B_n needs n >= 1");
    if (l < Scalar(-0.5)) throw DomainError("B_n needs l >= -1/2");
    Scalar prod(1);
    for (int i = 1; i <= n; ++i)
        prod *= (l + 2 - i) / (l + Scalar(0.5) + i);
    const Scalar pi = boost::math::constants::pi<Scalar>();
    return Scalar(4 * n - 1) / (2 * sqrt(pi)) *
           boost::math::tgamma_delta_ratio(Scalar(n) - Scalar(0.5), Scalar(1.5)) * prod;
}

template <typename Scalar = double>
Scalar gamma_ratio_Cn(int n, Scalar l)
{
    return gamma_ratio_Bn<Scalar>(n, l) / 2;
}

inline constexpr int kLegendreCap = 30;

// Coefficients of x^k in P_{2n}, k = 0..2n.
struct LegendreCoeffRow {
    int n = 0;
    std::vector<boost::multiprecision::cpp_rational> exact;

    template <typename Scalar = double>
    Vec<Scalar> coeffs() const
    {
        Vec<Scalar> c(static_cast<std::ptrdiff_t>(exact.size()));
        for (std::size_t k = 0; k < exact.size(); ++k) {
            const auto num = boost::multiprecision::numerator(exact[k]);
            const auto den = boost::multiprecision::denominator(exact[k]);
            c[static_cast<std::ptrdiff_t>(k)] = num.template convert_to<Scalar>() / den.template convert_to<Scalar>();
        }
        return c;
    }
};

LegendreCoeffRow legendre_even_coeffs(int n);

}  // namespace nsbf
