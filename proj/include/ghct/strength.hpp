#ifndef GHCT_STRENGTH_HPP
#define GHCT_STRENGTH_HPP

#include <vector>

#include "ghct/graph.hpp"

namespace ghct {

/// Per-edge lower bounds on strong connectivity.
struct StrengthLabels {
    enum class Kind { Exact, Estimated };
    std::vector<double> labels;  // one per edge, > 0
    Kind kind = Kind::Estimated;
};

/// MST sensitivity bounds: d_e is the minimum weight on the maximum spanning
/// tree path between the endpoints of e. Satisfies d_e <= k_e <= n^2 d_e.
struct MstBounds {
    std::vector<double> d;
};

/// Recursive strength estimation for graphs whose strengths are all >= k0.
/// Unweighted root calls use k0 = 1 and satisfy sum 1/label <= 4(n-1) on
/// simple graphs.
StrengthLabels estimation(const Graph& g, double k0);

MstBounds mst_bounds(const Graph& g);

/// Windowed estimation for arbitrary positive weights: processes edges in
/// decreasing-d_e windows, contracting heavy edges before each estimation
/// pass. Labels satisfy label <= k_e and sum u_e/label <= 12(n-1).
StrengthLabels window_estimation(const Graph& g);

/// Exact strengths via the brute-force oracle; n is capped.
StrengthLabels exact_strengths(const Graph& g, int oracle_cap = 14);

}  // namespace ghct

#endif
