#include "ccones/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace ccones {
namespace {

unsigned total(const Exponent& e) {
  unsigned s = 0;
  for (unsigned x : e) s += x;
  return s;
}

void check_inputs(const Polynomial& p, const Generators& gens) {
  if (!p.has_nonnegative_coefficients()) throw DomainError("polynomial has a negative coefficient");
  for (const auto& g : gens) {
    if (g.size() != p.nvars()) throw DimensionError("generator length does not match the polynomial");
    if (!is_nonnegative(g)) throw DomainError("generator " + to_string(g) + " is not nonnegative");
  }
}

VecQ mix(const Generators& gens, const VecQ& lambda, std::size_t dim) {
  VecQ x(dim);
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (sgn(lambda[j]) != 0)
      for (std::size_t i = 0; i < dim; ++i) x[i] += lambda[j] * gens[j][i];
  return x;
}

// p(sum_j lambda_j g_j) made homogeneous of its top degree with powers of
// sum_j lambda_j, which equals 1 on the simplex.
Polynomial homogeneous_pullback(const Polynomial& p, const Generators& gens) {
  const std::size_t k = gens.size();
  std::vector<Polynomial> subs;
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    Polynomial y(k);
    for (std::size_t j = 0; j < k; ++j) {
      Exponent e(k, 0);
      e[j] = 1;
      y.add_term(e, gens[j][i]);
    }
    subs.push_back(std::move(y));
  }
  Polynomial q = substitute(p, subs);
  const unsigned deg = q.degree();
  Polynomial sum(k);
  for (std::size_t j = 0; j < k; ++j) sum += Polynomial::variable(k, j);
  std::vector<Polynomial> sum_pow{Polynomial::constant(k, 1)};
  Polynomial h(k);
  for (const auto& [e, c] : q.terms()) {
    const unsigned gap = deg - total(e);
    while (sum_pow.size() <= gap) sum_pow.push_back(sum_pow.back().times(sum));
    Polynomial mono(k);
    mono.add_term(e, c);
    h += mono.times(sum_pow[gap]);
  }
  return h;
}

struct DoubleTerm {
  Exponent e;
  double c;
};

std::vector<DoubleTerm> to_double_terms(const Polynomial& h) {
  std::vector<DoubleTerm> out;
  for (const auto& [e, c] : h.terms()) out.push_back({e, to_double(c)});
  return out;
}

double eval_double(const std::vector<DoubleTerm>& terms, const std::vector<double>& x) {
  double acc = 0;
  for (const auto& t : terms) {
    double m = t.c;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (t.e[i]) m *= std::pow(x[i], static_cast<int>(t.e[i]));
    acc += m;
  }
  return acc;
}

std::vector<double> gradient_double(const std::vector<DoubleTerm>& terms, const std::vector<double>& x) {
  std::vector<double> g(x.size(), 0.0);
  for (const auto& t : terms)
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!t.e[j]) continue;
      double m = t.c * t.e[j];
      for (std::size_t i = 0; i < x.size(); ++i) {
        int p = static_cast<int>(t.e[i]) - (i == j ? 1 : 0);
        if (p) m *= std::pow(x[i], p);
      }
      g[j] += m;
    }
  return g;
}

double grid_count(std::size_t resolution, std::size_t k) {
  // C(resolution + k - 1, k - 1)
  double c = 1;
  for (std::size_t i = 1; i < k; ++i) c = c * static_cast<double>(resolution + i) / static_cast<double>(i);
  return c;
}

// Calls visit(counts) for every composition of `resolution` into k parts.
template <typename F>
void for_each_composition(std::size_t resolution, std::size_t k, F&& visit) {
  std::vector<std::size_t> counts(k, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == k) {
      counts[pos] = left;
      visit(counts);
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      counts[pos] = c;
      self(self, pos + 1, left - c);
    }
  };
  rec(rec, 0, resolution);
}

// Multiplicative ascent for homogeneous polynomials with nonnegative
// coefficients; every step stays on the simplex and does not decrease the
// value.
std::vector<double> ascend(const std::vector<DoubleTerm>& terms, std::vector<double> x, std::size_t iterations) {
  for (std::size_t it = 0; it < iterations; ++it) {
    auto g = gradient_double(terms, x);
    double denom = 0;
    for (std::size_t j = 0; j < x.size(); ++j) denom += x[j] * g[j];
    if (!(denom > 0)) break;
    double change = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      double nx = x[j] * g[j] / denom;
      change = std::max(change, std::abs(nx - x[j]));
      x[j] = nx;
    }
    if (change < 1e-15) break;
  }
  return x;
}

VecQ rationalize(const std::vector<double>& x, long denominator) {
  VecQ q(x.size());
  Rational s = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    q[j] = round_to_denominator(std::max(0.0, x[j]), denominator);
    s += q[j];
  }
  if (sgn(s) == 0) return {};
  for (auto& v : q) v /= s;
  return q;
}

Rational max_bernstein(const Polynomial& h, std::size_t k, const OracleParams& params) {
  if (h.is_zero()) return 0;
  const unsigned deg = h.degree();
  std::size_t r = 0;
  while (r < params.max_elevation &&
         grid_count(deg + r + 1, k) <= static_cast<double>(params.max_bernstein_terms))
    ++r;
  const unsigned top = deg + static_cast<unsigned>(r);
  std::vector<Integer> fact(top + 1);
  fact[0] = 1;
  for (unsigned i = 1; i <= top; ++i) fact[i] = fact[i - 1] * i;
  Rational best = 0;
  bool first = true;
  Exponent gamma(k);
  for_each_composition(top, k, [&](const std::vector<std::size_t>& counts) {
    for (std::size_t i = 0; i < k; ++i) gamma[i] = static_cast<unsigned>(counts[i]);
    // b_gamma = gamma! / top! * sum_beta c_beta * r! / (gamma - beta)!
    Rational acc = 0;
    for (const auto& [beta, c] : h.terms()) {
      Integer den = 1;
      bool fits = true;
      for (std::size_t i = 0; i < k && fits; ++i) {
        if (beta[i] > gamma[i]) fits = false;
        else den *= fact[gamma[i] - beta[i]];
      }
      if (!fits) continue;
      acc += c * quotient(fact[r], den);
    }
    Integer gfact = 1;
    for (std::size_t i = 0; i < k; ++i) gfact *= fact[gamma[i]];
    Rational b = acc * quotient(gfact, fact[top]);
    if (first || b > best) best = b;
    first = false;
  });
  return best;
}

// A subsimplex of the weight simplex, given by its k vertices.
struct Cell {
  std::vector<VecQ> vertices;
  Rational upper;
};

// Largest Bernstein coefficient of h on the cell, at the native degree.
Rational cell_upper(const Polynomial& h, const std::vector<VecQ>& v) {
  const std::size_t k = v.size();
  std::vector<Polynomial> subs;
  for (std::size_t i = 0; i < k; ++i) {
    Polynomial y(k);
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(v[j][i]) == 0) continue;
      Exponent e(k, 0);
      e[j] = 1;
      y.add_term(e, v[j][i]);
    }
    subs.push_back(std::move(y));
  }
  const Polynomial q = substitute(h, subs);
  const unsigned deg = h.degree();
  Rational best = 0;
  for (const auto& [alpha, c] : q.terms()) {
    // c_alpha = b_alpha * deg! / alpha!
    Rational b = c / factorial(deg);
    for (unsigned a : alpha) b *= factorial(a);
    if (b > best) best = b;
  }
  return best;
}

struct Refined {
  Rational lower;
  VecQ lambda;
  Rational upper;
  std::size_t cells;
};

// Branch and bound on the weight simplex: star subdivision at the best known
// point, then bisection of the longest edge of the cell with the largest
// bound. Midpoints are evaluated exactly and may raise the lower bound.
Refined refine(const Polynomial& h, const VecQ& start, const Rational& start_value, const OracleParams& params) {
  const std::size_t k = start.size();
  Refined out{start_value, start, 0, 0};
  auto cmp = [](const Cell& a, const Cell& b) { return a.upper < b.upper; };
  std::priority_queue<Cell, std::vector<Cell>, decltype(cmp)> open(cmp);
  auto push = [&](std::vector<VecQ> v) {
    Rational u = cell_upper(h, v);
    ++out.cells;
    if (u > out.lower) open.push(Cell{std::move(v), std::move(u)});
  };
  for (std::size_t j = 0; j < k; ++j) {
    if (sgn(start[j]) == 0) continue;
    std::vector<VecQ> v;
    for (std::size_t i = 0; i < k; ++i) v.push_back(i == j ? start : unit_vector(k, i));
    push(std::move(v));
  }
  while (!open.empty() && out.cells < params.max_cells) {
    Cell c = open.top();
    open.pop();
    if (c.upper <= out.lower) continue;
    std::size_t a = 0, b = 1;
    Rational longest = -1;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        Rational d = 0;
        for (std::size_t t = 0; t < k; ++t) d += (c.vertices[i][t] - c.vertices[j][t]) * (c.vertices[i][t] - c.vertices[j][t]);
        if (d > longest) {
          longest = d;
          a = i;
          b = j;
        }
      }
    VecQ mid(k);
    for (std::size_t t = 0; t < k; ++t) mid[t] = (c.vertices[a][t] + c.vertices[b][t]) / 2;
    const Rational v = h.evaluate(mid);
    if (v > out.lower) {
      out.lower = v;
      out.lambda = mid;
    }
    std::vector<VecQ> left = c.vertices, right = c.vertices;
    left[b] = mid;
    right[a] = mid;
    push(std::move(left));
    push(std::move(right));
  }
  while (!open.empty() && open.top().upper <= out.lower) open.pop();
  out.upper = open.empty() ? out.lower : open.top().upper;
  return out;
}

}  // namespace

Rational bernstein_upper_bound(const Polynomial& p, const Generators& gens, const OracleParams& params) {
  check_inputs(p, gens);
  if (gens.empty()) return p.evaluate(VecQ(p.nvars()));
  return max_bernstein(homogeneous_pullback(p, gens), gens.size(), params);
}

Bracket maximize_over_hull(const Polynomial& p, const Generators& gens, const OracleParams& params) {
  check_inputs(p, gens);
  const std::size_t dim = p.nvars();
  const std::size_t k = gens.size();
  if (k == 0) {
    Rational v = p.evaluate(VecQ(dim));
    return {v, v, VecQ(dim), "exact (empty ball)"};
  }
  if (k == 1) {
    Rational v = p.evaluate(gens[0]);
    return {v, v, gens[0], "exact (single generator)"};
  }
  if (p.degree() <= 1) {
    std::size_t arg = 0;
    Rational best = p.evaluate(gens[0]);
    for (std::size_t j = 1; j < k; ++j) {
      Rational v = p.evaluate(gens[j]);
      if (v > best) {
        best = v;
        arg = j;
      }
    }
    return {best, best, gens[arg], "exact (affine, vertex max)"};
  }

  const Polynomial h = homogeneous_pullback(p, gens);
  const auto terms = to_double_terms(h);

  std::size_t resolution = std::max<std::size_t>(1, params.grid_resolution);
  while (resolution > 1 && grid_count(resolution, k) > static_cast<double>(params.max_grid_points)) {
    resolution = std::max<std::size_t>(1, resolution * 3 / 4);
  }
  std::vector<std::size_t> best_counts;
  double best_grid = -1;
  std::vector<double> x(k);
  for_each_composition(resolution, k, [&](const std::vector<std::size_t>& counts) {
    for (std::size_t j = 0; j < k; ++j) x[j] = static_cast<double>(counts[j]) / static_cast<double>(resolution);
    double v = eval_double(terms, x);
    if (v > best_grid) {
      best_grid = v;
      best_counts = counts;
    }
  });

  std::vector<VecQ> candidates;
  VecQ grid_point(k);
  for (std::size_t j = 0; j < k; ++j) grid_point[j] = Rational(static_cast<long>(best_counts[j]), static_cast<long>(resolution));
  for (auto& v : grid_point) v.canonicalize();
  candidates.push_back(grid_point);
  std::vector<double> start(k);
  for (std::size_t j = 0; j < k; ++j) start[j] = to_double(grid_point[j]);
  candidates.push_back(rationalize(ascend(terms, start, params.ascent_iterations), params.rational_denominator));
  std::vector<double> center(k, 1.0 / static_cast<double>(k));
  candidates.push_back(rationalize(ascend(terms, center, params.ascent_iterations), params.rational_denominator));

  Rational lower = -1;
  VecQ best_lambda;
  for (const auto& lambda : candidates) {
    if (lambda.empty()) continue;
    Rational v = h.evaluate(lambda);
    if (v > lower) {
      lower = v;
      best_lambda = lambda;
    }
  }
  Rational upper = max_bernstein(h, k, params);
  if (upper < lower) throw std::logic_error("Bernstein bound below an attained value");
  if (upper == lower) return {lower, upper, mix(gens, best_lambda, dim), "exact (Bernstein bound attained)"};

  Refined r = refine(h, best_lambda, lower, params);
  if (r.upper < upper) upper = r.upper;
  lower = r.lower;
  if (upper < lower) throw std::logic_error("subdivision bound below an attained value");
  std::string method = upper == lower ? "exact (subdivision bound attained, " + std::to_string(r.cells) + " cells)"
                                      : "bracket (grid " + std::to_string(resolution) + " + ascent / Bernstein, " +
                                            std::to_string(r.cells) + " cells)";
  return {lower, upper, mix(gens, r.lambda, dim), method};
}

}  // namespace ccones
