#include "nsbf/coefficients.hpp"

#include <algorithm>

namespace nsbf {

TruncationChoice select_truncation(const VecD& r, double noise_floor)
{
    const int N = static_cast<int>(r.size()) - 1;
    if (N < 0) throw DomainError("select_truncation needs a non-empty residual sequence");
    const double floor = std::max(r.minCoeff(), noise_floor);
    const double level = 10.0 * floor;
    for (int K = 0; K <= N; ++K) {
        const int hi = std::min(K + 10, N);
        if (K > 0 && hi - K < 10) break;
        if (r.segment(K, hi - K + 1).maxCoeff() <= level) return {K, true, r.minCoeff()};
    }
    return {N, false, r.minCoeff()};
}

}  // namespace nsbf
