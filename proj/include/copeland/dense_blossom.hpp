#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace copeland {

struct DenseBlossomResult {
  long long total_weight = 0;
  std::vector<std::pair<int, int>> pairs;  // 0-indexed, u < v
};

// Maximum-weight matching on a general graph, O(V^3) primal-dual with
// blossom shrinking, exact over int64 weights. Vertices may stay unmatched;
// only edges with strictly positive weight are ever used (an optimal
// matching never needs a nonpositive edge). Edges are (u, v, w) with w > 0;
// duplicate pairs keep the heaviest weight.
DenseBlossomResult max_weight_matching_dense(
    int n, const std::vector<std::tuple<int, int, long long>>& edges);

}  // namespace copeland
