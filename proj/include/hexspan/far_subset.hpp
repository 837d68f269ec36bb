#pragma once

#include "hexspan/grid.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hexspan {

// Largest subset of points whose pairwise distances are all >= min_distance
// (a maximum clique in the "far apart" graph). Exact branch and bound;
// returns positions into `points`, ascending. Ties resolve to the
// lexicographically smallest position list found first in index order.
std::vector<std::size_t> max_far_subset(std::span<const Vertex> points, int min_distance);

// Reference implementation scanning every subset. Refuses more than 20 points.
std::vector<std::size_t> max_far_subset_exhaustive(std::span<const Vertex> points, int min_distance);

} // namespace hexspan
