#include "ccones/sampling.hpp"

#include <cmath>

namespace ccones {

Rational Sampler::fraction(long den) {
  Rational q(static_cast<long>(index(static_cast<std::size_t>(den) + 1)), den);
  q.canonicalize();
  return q;
}

double Sampler::uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

double Sampler::normal() {
  // Box-Muller; avoids the implementation-defined std::normal_distribution.
  double u1 = uniform();
  double u2 = uniform();
  if (u1 < 1e-300) u1 = 1e-300;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

VecQ Sampler::nonnegative_vector(std::size_t dim, long den) {
  VecQ v(dim);
  for (auto& x : v) x = fraction(den);
  return v;
}

Generators Sampler::spanning_generators(std::size_t dim, std::size_t max_gens, long den) {
  const std::size_t k = between(1, std::max<std::size_t>(1, max_gens));
  Generators gens;
  for (std::size_t j = 0; j < k; ++j) {
    VecQ v = nonnegative_vector(dim, den);
    if (is_zero(v)) v[index(dim)] = 1;
    gens.push_back(std::move(v));
  }
  for (std::size_t i : uncovered_coordinates(gens, dim)) {
    VecQ& g = gens[index(gens.size())];
    g[i] = Rational(static_cast<long>(between(1, static_cast<std::size_t>(den))), den);
    g[i].canonicalize();
  }
  return gens;
}

ConeObject Sampler::polyhedral_object(std::size_t dim, std::size_t max_gens, const std::string& label) {
  Generators p = reduce_generators(spanning_generators(dim, max_gens));
  Generators q = polar_of_points(p, dim).generators;
  return make_polyhedral_object(dim, std::move(p), std::move(q), label);
}

VecQ Sampler::ball_point(const ConeObject& o, long den) {
  const Generators& g = o.require_p_gens();
  if (g.empty()) return VecQ(o.dim());
  VecQ w(g.size());
  Rational total = 0;
  for (auto& x : w) {
    x = fraction(den);
    total += x;
  }
  if (sgn(total) == 0) {
    w[index(w.size())] = 1;
    total = 1;
  }
  Rational shrink = fraction(den);
  if (sgn(shrink) == 0) shrink = 1;
  VecQ x(o.dim());
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < o.dim(); ++i) x[i] += shrink * w[j] / total * g[j][i];
  return x;
}

MatQ Sampler::nonnegative_matrix(std::size_t rows, std::size_t cols, long den) {
  MatQ m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = fraction(den);
  return m;
}

Morphism Sampler::contraction(const ConeObject& a, const ConeObject& b, long den, const Rational& target_norm) {
  MatQ m = nonnegative_matrix(b.dim(), a.dim(), den);
  Morphism f(a, b, m);
  if (sgn(f.norm()) == 0) return f;
  Rational s = target_norm / f.norm();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= s;
  return Morphism(a, b, std::move(m));
}

MatD Sampler::psd_matrix(std::size_t n) {
  const std::size_t rank = index(4) == 0 ? between(1, n) : n;
  MatD g(n, rank);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rank; ++j) g(i, j) = normal();
  return g * g.transpose() / static_cast<double>(n);
}

}  // namespace ccones
