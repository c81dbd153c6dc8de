#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "nsbf/mesh.hpp"

namespace nsbf {

namespace detail {

// Integral of the interpolating quintic from node 0 to node j, in units of h/1440.
inline constexpr std::array<std::array<int, 6>, 5> kPanelWeights{{
    {475, 1427, -798, 482, -173, 27},
    {448, 2064, 224, 224, -96, 16},
    {459, 1971, 1026, 1026, -189, 27},
    {448, 2048, 768, 2048, 448, 0},
    {475, 1875, 1250, 1250, 1875, 475},
}};

inline void check_panel_count(std::ptrdiff_t m)
{
    if (m < 6) throw InvalidMesh("cumulative integration needs at least 6 samples");
    if (m % 5 != 1) throw InvalidMesh("cumulative integration needs m = 1 (mod 5)");
}

}  // namespace detail

// F_i ~ int_0^{x_i} f on a uniform grid of step h; panels are chained with
// compensated summation.
template <typename Derived>
Vec<typename Derived::Scalar> cumulative_integral(const Eigen::ArrayBase<Derived>& f,
                                                  typename Derived::Scalar h)
{
    using Scalar = typename Derived::Scalar;
    using std::abs;
    const std::ptrdiff_t m = f.size();
    detail::check_panel_count(m);

    Vec<Scalar> F(m);
    F[0] = Scalar(0);
    Scalar sum(0), comp(0);
    const Scalar scale = h / Scalar(1440);
    for (std::ptrdiff_t p = 0; p + 5 < m; p += 5) {
        Scalar inc[5];
        for (int j = 0; j < 5; ++j) {
            Scalar acc(0);
            for (int k = 0; k < 6; ++k)
                acc += Scalar(detail::kPanelWeights[j][k]) * f[p + k];
            inc[j] = acc * scale;
        }
        for (int j = 0; j < 4; ++j)
            F[p + 1 + j] = sum + (comp + inc[j]);
        // Neumaier step
        const Scalar t = sum + inc[4];
        if (abs(sum) >= abs(inc[4]))
            comp += (sum - t) + inc[4];
        else
            comp += (inc[4] - t) + sum;
        sum = t;
        F[p + 5] = sum + comp;
    }
    return F;
}

inline GridFunction<double> cumulative_integral(const GridFunction<double>& f)
{
    return {f.mesh(), cumulative_integral(f.values(), f.mesh().h())};
}

// First index i whose 6-tuple f[i..i+5] has a fifth difference no larger than
// T times its second-smallest magnitude; m-6 when none qualifies.
template <typename Derived>
std::ptrdiff_t cutoff_start_index(const Eigen::ArrayBase<Derived>& f, double T = 100.0)
{
    using Scalar = typename Derived::Scalar;
    using std::abs;
    using std::isfinite;
    const std::ptrdiff_t m = f.size();
    if (m < 6) throw InvalidMesh("cut-off scan needs at least 6 samples");
    for (std::ptrdiff_t i = 0; i + 6 <= m; ++i) {
        std::array<Scalar, 6> a;
        bool finite = true;
        for (int k = 0; k < 6; ++k) {
            finite = finite && isfinite(f[i + k]);
            a[k] = abs(f[i + k]);
        }
        if (!finite) continue;
        const Scalar d5 = f[i] - 5 * f[i + 1] + 10 * f[i + 2] - 10 * f[i + 3] + 5 * f[i + 4] - f[i + 5];
        std::nth_element(a.begin(), a.begin() + 1, a.end());
        if (abs(d5) <= Scalar(T) * a[1]) return i;
    }
    return m - 6;
}

template <typename Derived>
Vec<typename Derived::Scalar> cumulative_integral_guarded(const Eigen::ArrayBase<Derived>& f,
                                                          typename Derived::Scalar h,
                                                          double T = 100.0,
                                                          std::ptrdiff_t* cut = nullptr)
{
    using Scalar = typename Derived::Scalar;
    Vec<Scalar> g = f;
    const std::ptrdiff_t c = cutoff_start_index(g, T);
    g.head(c).setZero();
    if (cut) *cut = c;
    return cumulative_integral(g, h);
}

inline std::ptrdiff_t cutoff_start_index(const GridFunction<double>& f, double T = 100.0)
{
    return cutoff_start_index(f.values(), T);
}

inline GridFunction<double> cumulative_integral_guarded(const GridFunction<double>& f, double T = 100.0)
{
    return {f.mesh(), cumulative_integral_guarded(f.values(), f.mesh().h(), T)};
}

}  // namespace nsbf
