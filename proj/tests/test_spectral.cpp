#include <cmath>
#include <vector>

#include <doctest.h>

#include "nsbf/oracle.hpp"
#include "nsbf/spectral.hpp"
#include "support/reference_values.hpp"

using namespace nsbf;

namespace {

const UniformMesh kMesh(ref::kPi, 20001);

NsbfSolution make(const char* q, double l, int N = 100)
{
    return NsbfSolution::build(Potential<double>::from_spec(PotentialSpec::parse(q), kMesh, l), N);
}

SpectralProblem window(double lo, double hi, Boundary bc = Boundary::Dirichlet)
{
    SpectralProblem p;
    p.boundary = bc;
    p.omega_lo = lo;
    p.omega_hi = hi;
    return p;
}

std::vector<double> omegas(const std::vector<Eigenpair>& e)
{
    std::vector<double> w;
    for (const auto& p : e) w.push_back(p.omega);
    return w;
}

}  // namespace

TEST_CASE("unperturbed l = 0 has integer eigenvalues")
{
    const auto w = omegas(find_eigenvalues(make("zero", 0.0, 10), window(0.5, 10.5)));
    REQUIRE(w.size() == 10);
    for (int k = 0; k < 10; ++k) CHECK(std::abs(w[k] - (k + 1)) < 1e-12);
}

TEST_CASE("unperturbed l = 3/2 eigenvalues are Bessel zeros over pi")
{
    const auto w = omegas(find_eigenvalues(make("zero", 1.5, 10), window(0.5, 8.0)));
    REQUIRE(w.size() == 7);
    for (int k = 0; k < 7; ++k) CHECK(std::abs(w[k] - ref::J2_zeros[k] / ref::kPi) < 1e-12);
}

TEST_CASE("characteristic function brackets the first eigenvalue")
{
    const auto s = make("x^2", 1.5);
    const auto p = window(0.5, 10.0);
    CHECK(characteristic(s, p, 2.4) * characteristic(s, p, 2.5) < 0);
    CHECK_THROWS_AS(characteristic(s, p, 0.0), DomainError);
    CHECK_THROWS_AS(characteristic(s, p, -1.0), DomainError);
}

TEST_CASE("characteristic function stays finite near zero")
{
    const auto s = make("x^2", 1.5);
    const auto p = window(0.0, 1.0);
    const double a = characteristic(s, p, 1e-8), b = characteristic(s, p, 1e-4);
    CHECK(std::isfinite(a));
    CHECK(a == doctest::Approx(b).epsilon(1e-6));
    CHECK(a > 0);
}

TEST_CASE("x^2, l = 3/2 eigenvalues")
{
    const auto s = make("x^2", 1.5);
    const auto w = omegas(find_eigenvalues(s, window(2.0, 11.0)));
    REQUIRE(w.size() == 10);
    for (const auto& r : ref::square_eigenvalues) {
        if (r.n > 10) continue;
        CAPTURE(r.n);
        CHECK(std::abs(w[r.n - 1] - r.omega) < 1e-10);
    }
}

TEST_CASE("x^2, l = 3/2 first 50 eigenvalues against the shooting oracle")
{
    const auto s = make("x^2", 1.5);
    const auto e = find_eigenvalues(s, window(2.0, 51.5));
    REQUIRE(e.size() == 50);
    const ShootingOracle oracle(PotentialSpec::parse("x^2"), 1.5, ref::kPi);
    const auto p = window(2.0, 51.5);
    double worst = 0;
    for (const auto& ep : e) worst = std::max(worst, std::abs(ep.omega - oracle.eigenvalue_near(p, ep.omega)));
    CHECK(worst < 1e-8);
}

TEST_CASE("hydrogen eigenvalues against the shooting oracle")
{
    const auto s = make("1/x", 1.0);
    const auto p = window(0.1, 11.0);
    const auto e = find_eigenvalues(s, p);
    REQUIRE(e.size() >= 10);
    const ShootingOracle oracle(PotentialSpec::parse("1/x"), 1.0, ref::kPi);
    for (int k = 0; k < 10; ++k) {
        CAPTURE(k);
        CHECK(std::abs(e[k].omega - oracle.eigenvalue_near(p, e[k].omega)) < 1e-7);
    }
}

TEST_CASE("Dirichlet and Neumann eigenvalues interlace")
{
    for (const char* q : {"x^2", "sqrt(pi^2-x^2)"}) {
        CAPTURE(q);
        const auto s = make(q, 1.5);
        const auto d = omegas(find_eigenvalues(s, window(0.1, 15.0)));
        const auto n = omegas(find_eigenvalues(s, window(0.1, 15.0, Boundary::Neumann)));
        REQUIRE(d.size() >= 10);
        REQUIRE(n.size() >= 10);
        // Neumann first: n_1 < d_1 < n_2 < d_2 < ...
        for (std::size_t k = 0; k + 1 < std::min(d.size(), n.size()); ++k) {
            CHECK(n[k] < d[k]);
            CHECK(d[k] < n[k + 1]);
        }
    }
}

TEST_CASE("a non-negative potential raises every eigenvalue")
{
    const auto w = omegas(find_eigenvalues(make("x^2", 1.5), window(0.5, 8.0)));
    REQUIRE(w.size() >= 7);
    for (int k = 0; k < 7; ++k) CHECK(w[k] > ref::J2_zeros[k] / ref::kPi);
}

TEST_CASE("doubling the scan density changes nothing")
{
    const auto s = make("x^2", 1.5);
    auto p = window(2.0, 20.0);
    const auto a = find_eigenvalues(s, p);
    p.scan_points = 2 * p.effective_scan_points();
    const auto b = find_eigenvalues(s, p);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        CHECK(std::abs(a[k].omega - b[k].omega) <= std::max(a[k].refinement_width, 1e-12 * a[k].omega));
}

TEST_CASE("root finder on an explicit function")
{
    auto p = window(0.0, 10.0);
    const auto e = find_roots([](double w) { return std::sin(w); }, p);
    REQUIRE(e.size() == 3);
    for (int k = 0; k < 3; ++k) {
        CHECK(e[k].index == k + 1);
        CHECK(std::abs(e[k].omega - (k + 1) * ref::kPi) < 1e-12);
    }
    CHECK(find_roots([](double w) { return 1.0 + w; }, p).empty());
    CHECK_THROWS_AS(find_roots([](double w) { return w > 5 ? std::nan("") : 1.0; }, p), NumericalBreakdown);
}

TEST_CASE("boundary names and problem validation")
{
    CHECK(parse_boundary("dirichlet") == Boundary::Dirichlet);
    CHECK(parse_boundary("neumann") == Boundary::Neumann);
    CHECK(parse_boundary(boundary_name(Boundary::Robin)) == Boundary::Robin);
    CHECK_THROWS_AS(parse_boundary("periodic"), ConfigError);
    CHECK_THROWS_AS(parse_boundary("Neumann"), ConfigError);

    CHECK_THROWS_AS(window(3.0, 2.0).validate(), DomainError);
    CHECK_THROWS_AS(window(-1.0, 2.0).validate(), DomainError);
    auto p = window(0.0, 2.0);
    p.scan_points = 1;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p.scan_points = 0;
    CHECK(p.effective_scan_points() >= 40);
    p.boundary = Boundary::Robin;
    p.robin_h = 2.0;
    CHECK(boundary_value(p, 1.5, -1.0) == 2.0);
}

TEST_CASE("decay fit of a pure power law")
{
    VecD c(101);
    c[0] = 1;
    for (int n = 1; n <= 100; ++n) c[n] = std::pow(n, -6.0);
    const auto f = decay_fit(c, 10, 100);
    CHECK(std::abs(f.exponent + 6) < 1e-6);
    CHECK(f.points >= 10);
}

TEST_CASE("decay fit excludes a noise floor")
{
    VecD c(101);
    c[0] = 1;
    for (int n = 1; n <= 100; ++n) c[n] = std::pow(n, -6.0) + 1e-14;
    const auto f = decay_fit(c, 10, 100);
    CHECK(std::abs(f.exponent + 6) < 0.2);
    CHECK(f.points < 91);
}

TEST_CASE("decay fit needs enough points")
{
    CHECK_THROWS_AS(decay_fit(VecD::Zero(101), 10, 100), InsufficientData);
    CHECK_THROWS_AS(decay_fit(VecD::Ones(101), 10, 15), InsufficientData);
    CHECK_THROWS_AS(decay_fit(VecD::Ones(50), 10, 100), DomainError);
}

TEST_CASE("decay of beta_n at pi for x^2, l = 3/2")
{
    const auto s = make("x^2", 1.5);
    VecD c(s.tables().N + 1);
    for (int n = 0; n <= s.tables().N; ++n) c[n] = s.tables().beta[n](kMesh.m() - 1);
    CHECK(std::abs(decay_fit(c, 10, 100).exponent + 6) < 0.5);
}
