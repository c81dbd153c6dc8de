#include <cmath>
#include <random>

#include <boost/math/special_functions/gamma.hpp>
#include <doctest.h>

#include "nsbf/special_functions.hpp"
#include "support/reference_values.hpp"

using namespace nsbf;
using boost::multiprecision::cpp_rational;

namespace {

double rel(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

const double kSqrt2OverPi = std::sqrt(2.0 / ref::kPi);

}  // namespace

TEST_CASE("j_0(1) closed form")
{
    const VecD j = spherical_j_sequence(3, 1.0);
    CHECK(j[0] == doctest::Approx(std::sin(1.0)).epsilon(1e-15));
    CHECK(j[1] == doctest::Approx(std::sin(1.0) - std::cos(1.0)).epsilon(1e-14));
}

TEST_CASE("spherical Bessel sequence at the origin")
{
    const VecD j = spherical_j_sequence(6, 0.0);
    REQUIRE(j.size() == 7);
    CHECK(j[0] == 1.0);
    CHECK((j.tail(6) == 0.0).all());
}

TEST_CASE("j_50(10) against a high-precision series")
{
    const VecD j = spherical_j_sequence(60, 10.0);
    CHECK(rel(j[50], ref::j50_at_10) < 1e-12);
}

TEST_CASE("spherical Bessel values at moderate arguments")
{
    // high-precision values of j_0, j_10, j_20
    struct Row {
        double z, j0, j10, j20;
    };
    const Row rows[] = {
        {12.0, -0.044714409833369578, 0.10662253056550484, 5.113386574266419e-5},
        {14.0, 0.070757668263919313, 0.057563111381557709, 0.00057149870365381125},
        {16.0, -0.017993957291566578, -0.04712974681063533, 0.0036928864946928889},
    };
    for (const auto& r : rows) {
        CAPTURE(r.z);
        for (int n_max : {20, 200}) {
            const VecD j = spherical_j_sequence(n_max, r.z);
            CHECK(rel(j[0], r.j0) < 1e-13);
            CHECK(rel(j[10], r.j10) < 1e-12);
            CHECK(rel(j[20], r.j20) < 1e-12);
        }
    }
}

TEST_CASE("spherical Bessel parity for negative arguments")
{
    const VecD a = spherical_j_sequence(8, 3.7), b = spherical_j_sequence(8, -3.7);
    for (int n = 0; n <= 8; ++n) CHECK(b[n] == doctest::Approx(n % 2 ? -a[n] : a[n]).epsilon(1e-15));
}

TEST_CASE("three-term recurrence holds")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> zd(0.01, 300.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double z = zd(rng);
        const VecD j = spherical_j_sequence(120, z);
        for (int n = 1; n < 120; ++n) {
            const double scale = std::max({std::abs(j[n - 1]), std::abs(j[n]), std::abs(j[n + 1])});
            if (scale < 1e-290) continue;
            CAPTURE(z);
            CAPTURE(n);
            CHECK(std::abs(j[n - 1] + j[n + 1] - (2 * n + 1) / z * j[n]) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("power bound on spherical Bessel functions")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> zd(-40.0, 40.0);
    std::uniform_int_distribution<int> nd(0, 80);
    for (int trial = 0; trial < 500; ++trial) {
        const double z = zd(rng);
        const int n = nd(rng);
        const VecD j = spherical_j_sequence(n, z);
        const double bound = std::exp(0.5 * std::log(ref::kPi) + n * std::log(std::abs(z) / 2) -
                                      std::lgamma(n + 1.5));
        CAPTURE(z);
        CAPTURE(n);
        CHECK(std::abs(j[n]) <= bound * (1 + 1e-12));
    }
}

TEST_CASE("spherical Bessel rejects a negative order")
{
    CHECK_THROWS_AS(spherical_j_sequence(-1, 1.0), DomainError);
}

TEST_CASE("b_l closed forms for l = 0 and l = 1")
{
    for (double z : {0.1, 0.7, 2.0, 9.5, 40.0}) {
        CAPTURE(z);
        CHECK(rel(b_l(0.0, z), kSqrt2OverPi * std::sin(z)) < 1e-13);
        CHECK(rel(b_l_prime(0.0, z), kSqrt2OverPi * std::cos(z)) < 1e-12);
        const double b1 = kSqrt2OverPi * (std::sin(z) / z - std::cos(z));
        CHECK(std::abs(b_l(1.0, z) - b1) < 1e-13 * (1 + std::abs(b1)));
    }
    CHECK(b_l(0.0, 0.0) == 0.0);
}

TEST_CASE("b_l at l = 3/2")
{
    CHECK(rel(b_l(1.5, 2.0), ref::b_three_halves_at_2) < 1e-14);
}

TEST_CASE("Lambda reduces to sin z / z for l = 0")
{
    CHECK(bessel_lambda(0.0, 0.0) == 1.0);
    CHECK(bessel_lambda(2.5, 0.0) == 1.0);
    for (double z : {1e-3, 0.5, 3.0, 4.5, 17.0, 123.0}) {
        CAPTURE(z);
        CHECK(std::abs(bessel_lambda(0.0, z) - std::sin(z) / z) < 1e-14);
        const double l1 = z < 0.1 ? 1 - z * z / 10 + std::pow(z, 4) / 280
                                  : 3 * (std::sin(z) / (z * z) - std::cos(z) / z) / z;
        CHECK(std::abs(bessel_lambda(1.0, z) - l1) < 1e-13);
    }
}

TEST_CASE("c_kl values")
{
    CHECK(c_kl(0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c_kl(0, 2.7) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c_kl(1, 0.0) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(rel(c_kl(10, 1.5), ref::c_10_three_halves) < 1e-14);
    CHECK_THROWS_AS(c_kl(-1, 1.0), DomainError);
    CHECK_THROWS_AS(c_kl(1, -0.7), DomainError);
}

TEST_CASE("c_kl ratio follows the gamma recurrence")
{
    for (double l : {-0.5, 0.0, 0.5, 1.0, 1.5, 4.25}) {
        for (int k = 0; k < 40; ++k) {
            const double r = c_kl(k + 1, l) / c_kl(k, l);
            CHECK(rel(r, (k + 0.5) / (k + l + 1.5)) < 1e-13);
        }
    }
}

TEST_CASE("B_n values")
{
    CHECK(gamma_ratio_Bn(2, 0.0) == 0.0);
    CHECK(gamma_ratio_Bn(1, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel(gamma_ratio_Bn(5, 1.5), ref::B5_three_halves) < 1e-14);
    CHECK(rel(gamma_ratio_Bn(3, 0.5), ref::B3_one_half) < 1e-14);
    CHECK(gamma_ratio_Cn(5, 1.5) == gamma_ratio_Bn(5, 1.5) / 2);
    CHECK_THROWS_AS(gamma_ratio_Bn(0, 1.0), DomainError);
}

TEST_CASE("B_n vanishes for integer l from n = l + 2 on")
{
    for (int l = 0; l <= 5; ++l)
        for (int n = l + 2; n <= 60; ++n) CHECK(gamma_ratio_Bn(n, double(l)) == 0.0);
    CHECK(gamma_ratio_Bn(3, 1.5) != 0.0);
    CHECK(std::isfinite(gamma_ratio_Bn(200, 1.5)));
}

TEST_CASE("B_n agrees with the plain gamma expression")
{
    for (double l : {0.5, 1.5, 2.25}) {
        for (int n = 1; n <= 8; ++n) {
            const double direct = (4 * n - 1) * std::tgamma(l + 2) * std::tgamma(l + 1.5) * std::tgamma(n - 0.5) /
                                  (2 * std::sqrt(ref::kPi) * std::tgamma(l - n + 2) * std::tgamma(n + 1.0) *
                                   std::tgamma(n + l + 1.5));
            CHECK(rel(gamma_ratio_Bn(n, l), direct) < 1e-12);
        }
    }
}

TEST_CASE("Legendre coefficient rows")
{
    const auto p0 = legendre_even_coeffs(0);
    REQUIRE(p0.exact.size() == 1);
    CHECK(p0.exact[0] == 1);

    const auto p2 = legendre_even_coeffs(1);
    REQUIRE(p2.exact.size() == 3);
    CHECK(p2.exact[0] == cpp_rational(-1, 2));
    CHECK(p2.exact[1] == 0);
    CHECK(p2.exact[2] == cpp_rational(3, 2));

    const auto p12 = legendre_even_coeffs(6);
    REQUIRE(p12.exact.size() == 13);
    cpp_rational at_one = 0;
    for (const auto& c : p12.exact) at_one += c;
    CHECK(at_one == 1);
    CHECK(p12.exact[0] == cpp_rational(231, 1024));
    for (std::size_t k = 1; k < p12.exact.size(); k += 2) CHECK(p12.exact[k] == 0);
    CHECK(p12.coeffs()[12] == doctest::Approx(676039.0 / 1024).epsilon(1e-15));
}

TEST_CASE("Legendre rows are capped")
{
    CHECK_NOTHROW(legendre_even_coeffs(kLegendreCap));
    CHECK_THROWS_AS(legendre_even_coeffs(kLegendreCap + 1), RangeError);
    CHECK_THROWS_AS(legendre_even_coeffs(-1), DomainError);
}
