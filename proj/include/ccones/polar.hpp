#ifndef CCONES_POLAR_HPP
#define CCONES_POLAR_HPP

#include <cstddef>
#include <vector>

#include "ccones/numeric.hpp"

namespace ccones {

using Generators = std::vector<VecQ>;

// Largest ambient dimension for which polar generators are enumerated.
inline constexpr std::size_t kMaxPolarDim = 8;

struct PolarResult {
  // False when some coordinate direction is unbounded in the polar; the
  // offending coordinates are listed and `generators` is empty.
  bool bounded = false;
  Generators generators;
  std::vector<std::size_t> unbounded_coordinates;
};

// Undominated nonzero vertices of {a >= 0 : <a,x> <= 1 for every x in points},
// computed by the double description method. Output is canonical (see
// reduce_generators). Throws CapabilityError when dim > kMaxPolarDim.
PolarResult polar_of_points(const Generators& points, std::size_t dim);

// Minimal subset with the same downward-closed convex hull (together with 0),
// sorted lexicographically. A point is dropped when it lies coordinate-wise
// below a convex combination of the remaining points and 0.
Generators reduce_generators(const Generators& points);

// True when x <= sum_j w_j g_j for some w >= 0 with sum_j w_j <= 1.
bool in_downward_hull(const VecQ& x, const Generators& gens);

// Coordinates on which every point vanishes.
std::vector<std::size_t> uncovered_coordinates(const Generators& points, std::size_t dim);

}  // namespace ccones

#endif  // CCONES_POLAR_HPP
