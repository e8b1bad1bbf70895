#ifndef CCONES_SAMPLING_HPP
#define CCONES_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "ccones/backends.hpp"
#include "ccones/cone.hpp"
#include "ccones/mall.hpp"

namespace ccones {

// Random inputs for property checks. Everything is driven by mt19937_64 and
// reduced with plain modular arithmetic, so a seed gives the same stream on
// every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::size_t index(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + index(hi - lo + 1); }
  // k / den with k uniform in [0, den].
  Rational fraction(long den);
  double uniform();  // [0, 1)
  double normal();

  VecQ nonnegative_vector(std::size_t dim, long den);
  // Nonnegative spanning generator set of at most max_gens points.
  Generators spanning_generators(std::size_t dim, std::size_t max_gens, long den = 4);
  // Polyhedral object with both generator lists (dim <= kMaxPolarDim).
  ConeObject polyhedral_object(std::size_t dim, std::size_t max_gens, const std::string& label);
  // Point of the primal ball of o: a random convex combination of generators,
  // shrunk by a random factor.
  VecQ ball_point(const ConeObject& o, long den = 6);
  // Nonnegative matrix scaled to norm exactly `target_norm` (or zero).
  Morphism contraction(const ConeObject& a, const ConeObject& b, long den = 4, const Rational& target_norm = 1);
  MatQ nonnegative_matrix(std::size_t rows, std::size_t cols, long den);
  // Random PSD matrix G G^T / n of size n, occasionally rank deficient.
  MatD psd_matrix(std::size_t n);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ccones

#endif  // CCONES_SAMPLING_HPP
