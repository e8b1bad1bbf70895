#include "ccones/polar.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "ccones/lp.hpp"

namespace ccones {
namespace {

using IntVec = std::vector<Integer>;

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) {
    if (i / 64 >= words_.size()) words_.resize(i / 64 + 1, 0);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.words_.resize(std::min(words_.size(), o.words_.size()));
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
      if (words_[i] & ~other) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVec v;
  Bits zeros;  // indices of constraints tight at this ray
};

Integer dot_int(const IntVec& a, const IntVec& b) {
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  return acc;
}

void make_primitive(IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Row (-s * L, L) with L the lcm of the denominators of s, so that
// <row, (a, t)> >= 0  <=>  <s, a> <= t.
IntVec homogenized_row(const VecQ& s) {
  Integer lcm = 1;
  for (const auto& x : s) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  IntVec row(s.size() + 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    Rational scaledv = s[i] * Rational(lcm);
    row[i] = -scaledv.get_num();
  }
  row[s.size()] = lcm;
  return row;
}

}  // namespace

std::vector<std::size_t> uncovered_coordinates(const Generators& points, std::size_t dim) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim; ++i) {
    bool covered = false;
    for (const auto& p : points)
      if (sgn(p.at(i)) > 0) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(i);
  }
  return out;
}

bool in_downward_hull(const VecQ& x, const Generators& gens) {
  if (is_zero(x)) return true;
  if (gens.empty()) return false;
  LpProblem lp;
  lp.objective = VecQ(gens.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) <= 0) continue;
    LinearConstraint c;
    c.coeffs.resize(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) c.coeffs[j] = gens[j][i];
    c.relation = Relation::kGreaterEqual;
    c.rhs = x[i];
    lp.constraints.push_back(std::move(c));
  }
  lp.constraints.push_back({VecQ(gens.size(), Rational(1)), Relation::kLessEqual, 1});
  return lp_maximize(lp).status == LpStatus::kOptimal;
}

Generators reduce_generators(const Generators& points) {
  Generators pts;
  for (const auto& p : points) {
    if (!is_nonnegative(p)) throw DomainError("reduce_generators: negative coordinate in " + to_string(p));
    if (!is_zero(p)) pts.push_back(p);
  }
  if (pts.empty()) return pts;
  const std::size_t dim = pts.front().size();
  for (const auto& p : pts)
    if (p.size() != dim) throw DimensionError("reduce_generators: points have different lengths");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<bool> keep(pts.size(), true);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size() && keep[i]; ++j)
      if (i != j && keep[j] && dominated_by(pts[i], pts[j])) keep[i] = false;

  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!keep[i]) continue;
    Generators others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i && keep[j]) others.push_back(pts[j]);
    if (in_downward_hull(pts[i], others)) keep[i] = false;
  }
  Generators out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (keep[i]) out.push_back(pts[i]);
  return out;
}

PolarResult polar_of_points(const Generators& points, std::size_t dim) {
  if (dim == 0) return PolarResult{true, {}, {}};
  if (dim > kMaxPolarDim)
    throw CapabilityError("polar_of_points: vertex enumeration is limited to dimension " +
                          std::to_string(kMaxPolarDim) + " (got " + std::to_string(dim) + ")");
  Generators pts;
  for (const auto& p : points) {
    if (p.size() != dim) throw DimensionError("polar_of_points: point has wrong length");
    if (!is_nonnegative(p)) throw DomainError("polar_of_points: negative coordinate in " + to_string(p));
    if (!is_zero(p)) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  PolarResult result;
  result.unbounded_coordinates = uncovered_coordinates(pts, dim);
  if (!result.unbounded_coordinates.empty()) return result;

  // Homogenized cone {(a,t) : a >= 0, t >= 0, <s,a> <= t}; the polar is its
  // slice at t = 1. Start from the orthant, whose extreme rays are the unit
  // vectors, and add one constraint per point.
  const std::size_t amb = dim + 1;
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < amb; ++i) {
    Ray r;
    r.v.assign(amb, Integer(0));
    r.v[i] = 1;
    for (std::size_t k = 0; k < amb; ++k)
      if (k != i) r.zeros.set(k);
    rays.push_back(std::move(r));
  }
  std::size_t constraint_index = amb;
  for (const auto& s : pts) {
    const IntVec h = homogenized_row(s);
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot_int(h, rays[i].v);
      if (sgn(val[i]) > 0)
        pos.push_back(i);
      else if (sgn(val[i]) < 0)
        neg.push_back(i);
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (sgn(val[i]) < 0) continue;
      Ray r = rays[i];
      if (sgn(val[i]) == 0) r.zeros.set(constraint_index);
      next.push_back(std::move(r));
    }
    for (std::size_t p : pos)
      for (std::size_t n : neg) {
        Bits common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 2 < amb) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
          if (k != p && k != n && common.subset_of(rays[k].zeros)) adjacent = false;
        if (!adjacent) continue;
        Ray r;
        r.v.resize(amb);
        for (std::size_t c = 0; c < amb; ++c) r.v[c] = val[p] * rays[n].v[c] - val[n] * rays[p].v[c];
        make_primitive(r.v);
        r.zeros = common;
        r.zeros.set(constraint_index);
        next.push_back(std::move(r));
      }
    rays = std::move(next);
    ++constraint_index;
  }

  Generators vertices;
  for (const auto& r : rays) {
    if (sgn(r.v[dim]) <= 0) continue;  // cannot happen for spanning input
    VecQ a(dim);
    for (std::size_t i = 0; i < dim; ++i) a[i] = quotient(r.v[i], r.v[dim]);
    if (!is_zero(a)) vertices.push_back(std::move(a));
  }
  result.bounded = true;
  result.generators = reduce_generators(vertices);
  return result;
}

}  // namespace ccones
