#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace nsbf {

// Scan phi on a uniform grid over the window, bisect each sign change, polish by secant.
template <typename F>
std::vector<Eigenpair> find_roots(F&& phi, const SpectralProblem& prob)
{
    prob.validate();
    const int n = prob.effective_scan_points();
    const double lo = prob.omega_lo, hi = prob.omega_hi;
    const double step = (hi - lo) / (n - 1);

    auto eval = [&](double w) {
        const double v = phi(w);
        if (!std::isfinite(v))
            throw NumericalBreakdown("characteristic function is not finite at omega = " + std::to_string(w));
        return v;
    };

    std::vector<double> ws(n), fs(n);
    for (int k = 0; k < n; ++k) {
        ws[k] = k == n - 1 ? hi : lo + k * step;
        if (ws[k] == 0.0) ws[k] = 1e-6 * step;
        fs[k] = eval(ws[k]);
    }

    std::vector<Eigenpair> out;
    for (int k = 0; k + 1 < n; ++k) {
        double a = ws[k], b = ws[k + 1], fa = fs[k], fb = fs[k + 1];
        if (fa == 0.0) {
            if (k > 0 && fs[k - 1] == 0.0) continue;
            out.push_back({0, a, 0.0, 0.0, 0.0});
            continue;
        }
        if (fb == 0.0 || (fa < 0) == (fb < 0)) continue;
        while (b - a > 1e-13 * std::max(std::abs(a), std::abs(b))) {
            const double c = 0.5 * (a + b);
            if (c <= a || c >= b) break;
            const double fc = eval(c);
            if (fc == 0.0) {
                a = b = c;
                fa = fb = 0.0;
                break;
            }
            if ((fc < 0) == (fa < 0)) {
                a = c;
                fa = fc;
            } else {
                b = c;
                fb = fc;
            }
        }
        Eigenpair e;
        e.refinement_width = b - a;
        e.residual_scale = std::max(std::abs(fa), std::abs(fb));
        double w = a;
        if (b > a) {
            w = a - fa * (b - a) / (fb - fa);
            if (!(w >= a && w <= b)) w = 0.5 * (a + b);
        }
        e.omega = w;
        e.char_residual = b > a ? std::abs(eval(w)) : 0.0;
        out.push_back(e);
    }
    if (fs[n - 1] == 0.0 && (n < 2 || fs[n - 2] != 0.0)) out.push_back({0, ws[n - 1], 0.0, 0.0, 0.0});

    std::sort(out.begin(), out.end(), [](const Eigenpair& x, const Eigenpair& y) { return x.omega < y.omega; });
    std::vector<Eigenpair> merged;
    for (const auto& e : out) {
        if (!merged.empty() && e.omega - merged.back().omega < 1e-9) {
            if (e.char_residual < merged.back().char_residual) merged.back() = e;
            continue;
        }
        merged.push_back(e);
    }
    for (std::size_t i = 0; i < merged.size(); ++i) merged[i].index = static_cast<int>(i) + 1;
    return merged;
}

}  // namespace nsbf
