#include "ccones/exponential.hpp"

#include <algorithm>
#include <stdexcept>

#include "ccones/lp.hpp"

namespace ccones {
namespace {

void require_constructive(const ConeObject& o, const char* what) {
  if (o.backend() == Backend::kSpectralFloat)
    throw CapabilityError(std::string(what) + ": spectral object '" + o.label() + "' is not supported");
}

const Generators& exact_ball(const ConeObject& o) {
  if (!o.has_exact_norms())
    throw CapabilityError("norms over '" + o.label() + "' need an exact polyhedral ball; nested exponentials are not supported");
  return o.require_p_gens();
}

bool compatible(const ConeObject& a, const ConeObject& b) {
  if (a.dim() != b.dim()) return false;
  if (structurally_equal(a, b)) return true;
  return a.dim() <= 64 && objects_equal(a, b);
}

// Points sum_j (c_j / resolution) g_j over all compositions c of resolution.
Generators simplex_grid(const Generators& gens, std::size_t resolution, std::size_t dim) {
  Generators out;
  const std::size_t k = gens.size();
  if (k == 0) return out;
  std::vector<std::size_t> counts(k, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == k) {
      counts[pos] = left;
      VecQ x(dim);
      for (std::size_t j = 0; j < k; ++j) {
        if (counts[j] == 0) continue;
        Rational w(static_cast<long>(counts[j]), static_cast<long>(resolution));
        w.canonicalize();
        for (std::size_t i = 0; i < dim; ++i) x[i] += w * gens[j][i];
      }
      out.push_back(std::move(x));
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      counts[pos] = c;
      self(self, pos + 1, left - c);
    }
  };
  rec(rec, 0, resolution);
  return out;
}

std::size_t bounded_resolution(std::size_t wanted, std::size_t k, std::size_t max_points) {
  auto count = [k](std::size_t r) {
    double c = 1;
    for (std::size_t i = 1; i < k; ++i) c = c * static_cast<double>(r + i) / static_cast<double>(i);
    return c;
  };
  while (wanted > 1 && count(wanted) > static_cast<double>(max_points)) --wanted;
  return std::max<std::size_t>(1, wanted);
}

Bracket series_bracket(const VecQ& f, const GradedBasis& basis, const Generators& ball, const OracleParams& params) {
  if (!is_nonnegative(f)) throw DomainError("series has a negative coefficient", {to_string(f)});
  return maximize_over_hull(series_polynomial(f, basis), ball, params);
}

// Primal norm on !base: sup of <f, y> over series f with ||f|| <= 1.
NormBracket distribution_bracket(const VecQ& y, const ConeObject& base, std::size_t N, const OracleParams& params) {
  if (is_zero(y)) return {0, 0, "exact (zero)"};
  const Generators& ball = exact_ball(base);
  const GradedBasis basis(base.dim(), N);
  const std::size_t k = ball.size();
  const std::size_t res = bounded_resolution(std::max({params.column_grid, N, k}), k, 2000);
  std::vector<VecQ> columns;
  for (const auto& x : simplex_grid(ball, res, base.dim())) columns.push_back(delta_coords(x, N));
  if (sgn(y[0]) > 0) {
    VecQ seed(base.dim());
    for (std::size_t i = 0; i < base.dim(); ++i) seed[i] = y[1 + i] / y[0];
    if (!is_zero(seed)) {
      Rational nb = norm_primal(base, seed);
      if (nb > 1) seed = scaled(seed, 1 / nb);
      columns.push_back(delta_coords(seed, N));
    }
  }
  Rational lower = 0;
  Rational upper = -1;
  for (std::size_t round = 0; round <= params.column_rounds; ++round) {
    LpProblem lp;
    lp.objective = y;
    for (const auto& c : columns) lp.constraints.push_back({c, Relation::kLessEqual, 1});
    LpResult r = lp_maximize(lp);
    if (r.status != LpStatus::kOptimal)
      throw CapabilityError(std::string("!-norm relaxation is ") + to_string(r.status) + " for '" + base.label() + "'");
    if (upper < 0 || r.value < upper) upper = r.value;
    Bracket b = series_bracket(r.witness, basis, ball, params);
    if (b.upper <= 1) {
      // The LP optimum is itself in the ?-ball, so its value is attained.
      lower = std::max(lower, Rational(r.value));
      break;
    }
    lower = std::max(lower, Rational(r.value / b.upper));
    if (b.lower <= 1) break;  // no violated cut available from the oracle
    columns.push_back(delta_coords(b.argmax, N));
  }
  return {lower, upper, lower == upper ? "exact (column generation)" : "bracket (column generation / Bernstein)"};
}

std::vector<Polynomial> variables(std::size_t n) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Polynomial::variable(n, i));
  return v;
}

std::string multiset_name(const std::vector<std::size_t>& idx, const std::vector<std::string>& names) {
  std::string s = "<";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + names.at(idx[i]);
  return s + ">";
}

// Coefficient map of x -> (p_0(x), ...) read on the series side: the linear
// map sending a series f with f(z) = sum_j f_j p_j(z) to its coefficients.
MatQ series_map(const std::vector<Polynomial>& polys, const GradedBasis& out) {
  return matrix_from_polys(polys, out).transpose();
}

}  // namespace

ConeObject sym_power_obj(const ConeObject& a, std::size_t n) {
  require_constructive(a, "sym_power_obj");
  if (n == 0) return unit_object();
  if (n == 1) return a;
  auto node = std::make_shared<detail::Node>();
  MultisetBasis basis(a.dim(), n);
  node->dim = basis.size();
  node->label = "S" + std::to_string(n) + "(" + a.label() + ")";
  node->structure = Structure::kSymPower;
  node->degree = n;
  node->operands = {a.node_ptr()};
  node->make_p = [a, n]() -> std::optional<Generators> {
    const Generators& g = a.require_p_gens();
    MultisetBasis target(a.dim(), n);
    MultisetBasis tuples(g.size(), n);
    Generators out;
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      std::vector<VecQ> args;
      for (std::size_t j : tuples.indices(t)) args.push_back(g[j]);
      out.push_back(symmetrized_product(args, target));
    }
    return reduce_generators(out);
  };
  node->make_layout = [a, n] {
    MultisetBasis b(a.dim(), n);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < b.size(); ++i) out.push_back(multiset_name(b.indices(i), a.layout()));
    return out;
  };
  return ConeObject::from_node(std::move(node));
}

Rational old_norm(const VecQ& f, const ConeObject& a, std::size_t n) {
  MultisetBasis basis(a.dim(), n);
  if (f.size() != basis.size()) throw DimensionError("functional has wrong number of coordinates");
  if (!is_nonnegative(f)) throw DomainError("functional has a negative coefficient", {to_string(f)});
  const Generators& g = exact_ball(a);
  MultisetBasis tuples(g.size(), n);
  Rational best = 0;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    std::vector<VecQ> args;
    for (std::size_t j : tuples.indices(t)) args.push_back(g[j]);
    Rational v = dot(f, symmetrized_product(args, basis));
    if (v > best) best = v;
  }
  return best;
}

Bracket new_norm_bounds(const VecQ& f, const ConeObject& a, std::size_t n, const OracleParams& params) {
  MultisetBasis basis(a.dim(), n);
  if (f.size() != basis.size()) throw DimensionError("functional has wrong number of coordinates");
  if (!is_nonnegative(f)) throw DomainError("functional has a negative coefficient", {to_string(f)});
  Polynomial p(a.dim());
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis.exponent(i), f[i] * Rational(basis.multiplicity(i)));
  Bracket b = maximize_over_hull(p, exact_ball(a), params);
  Rational old = old_norm(f, a, n);
  if (old < b.upper) {
    b.upper = old;
    if (b.exact()) b.method = "exact (old norm attained)";
  }
  return b;
}

Rational polarization_constant(std::size_t n) {
  Rational s = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), k, n);
    s += binomial(n, k) * Rational(p);
  }
  return s / factorial(n);
}

ConeObject bang_obj(const ConeObject& a, std::size_t N, const OracleParams& params) {
  require_constructive(a, "bang_obj");
  auto node = std::make_shared<detail::Node>();
  node->dim = GradedBasis(a.dim(), N).size();
  node->label = "!" + a.label();
  node->structure = Structure::kBang;
  node->degree = N;
  node->operands = {a.node_ptr()};
  node->make_p = [a, N]() -> std::optional<Generators> {
    const Generators& ball = a.require_p_gens();
    const std::size_t res = std::max<std::size_t>({N, ball.size(), 1});
    Generators out;
    for (const auto& x : simplex_grid(ball, res, a.dim())) out.push_back(delta_coords(x, N));
    return reduce_generators(out);
  };
  node->norm_hook = [a, N, params](Side side, const VecQ& v) -> NormBracket {
    if (side == Side::kDual) {
      Bracket b = series_bracket(v, GradedBasis(a.dim(), N), exact_ball(a), params);
      return {b.lower, b.upper, b.method};
    }
    return distribution_bracket(v, a, N, params);
  };
  node->make_layout = [a, N] {
    GradedBasis b(a.dim(), N);
    std::vector<std::string> out;
    for (std::size_t n = 0; n <= N; ++n)
      for (std::size_t i = 0; i < b.grade(n).size(); ++i) out.push_back(multiset_name(b.grade(n).indices(i), a.layout()));
    return out;
  };
  return ConeObject::from_node(std::move(node));
}

ConeObject whynot_obj(const ConeObject& a, std::size_t N, const OracleParams& params) {
  return dual_object(bang_obj(dual_object(a), N, params));
}

ConeObject exponential_base(const ConeObject& o) {
  if (o.structure() == Structure::kBang) return o.operand(0);
  if (o.structure() == Structure::kDual && o.operand(0).structure() == Structure::kBang)
    return dual_object(o.operand(0).operand(0));
  throw DomainError("'" + o.label() + "' is not an exponential object");
}

VecQ GradedSeries::grade(std::size_t n) const {
  GradedBasis b(base.dim(), truncation);
  return VecQ(coeffs.begin() + static_cast<long>(b.offset(n)), coeffs.begin() + static_cast<long>(b.offset(n + 1)));
}

GradedSeries GradedSeries::truncate(std::size_t n) const {
  if (n > truncation) throw DimensionError("cannot raise the truncation of a series");
  GradedBasis b(base.dim(), n);
  return {base, n, VecQ(coeffs.begin(), coeffs.begin() + static_cast<long>(b.size()))};
}

VecQ GradedDistribution::grade(std::size_t n) const {
  GradedBasis b(base.dim(), truncation);
  return VecQ(coords.begin() + static_cast<long>(b.offset(n)), coords.begin() + static_cast<long>(b.offset(n + 1)));
}

VecQ delta_coords(const VecQ& x, std::size_t N) {
  GradedBasis b(x.size(), N);
  VecQ out(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    Rational m(b.multiplicity(k));
    const Exponent& e = b.exponent(k);
    for (std::size_t i = 0; i < e.size() && sgn(m) != 0; ++i)
      for (unsigned p = 0; p < e[i]; ++p) m *= x[i];
    out[k] = m;
  }
  return out;
}

namespace {

void require_in_ball(const ConeObject& o, Side side, const VecQ& x, const char* what) {
  NormBracket b = norm_bracket(o, side, x);
  if (b.upper > 1)
    throw DomainError(std::string(what) + ": norm of " + to_string(x) + " is not certified <= 1 (bracket [" +
                          to_string(b.lower) + ", " + to_string(b.upper) + "])",
                      {to_string(x)});
}

}  // namespace

GradedDistribution delta(const ConeObject& a, const VecQ& x, std::size_t N) {
  require_in_ball(a, Side::kPrimal, x, "delta");
  return {a, N, delta_coords(x, N)};
}

Rational pairing(const GradedSeries& a, const GradedDistribution& d) {
  if (a.truncation != d.truncation || a.coeffs.size() != d.coords.size())
    throw DimensionError("pairing: series and distribution have different shapes");
  return dot(a.coeffs, d.coords);
}

Rational series_eval(const GradedSeries& a, const VecQ& x) {
  if (x.size() != a.base.dim()) throw DimensionError("series_eval: point has wrong length");
  require_in_ball(a.base, Side::kDual, x, "series_eval");
  return dot(a.coeffs, delta_coords(x, a.truncation));
}

NormBracket series_norm(const GradedSeries& a, const OracleParams& params) {
  return norm_bracket(whynot_obj(a.base, a.truncation, params), Side::kPrimal, a.coeffs);
}

AnalyticMap::AnalyticMap(ConeObject source, ConeObject target, std::size_t truncation, MatQ matrix)
    : source_(std::move(source)), target_(std::move(target)), truncation_(truncation), matrix_(std::move(matrix)) {
  require_constructive(source_, "AnalyticMap");
  require_constructive(target_, "AnalyticMap");
  GradedBasis b(source_.dim(), truncation_);
  if (matrix_.rows() != target_.dim() || matrix_.cols() != b.size())
    throw DimensionError("analytic map matrix is " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                         ", expected " + std::to_string(target_.dim()) + "x" + std::to_string(b.size()));
  for (std::size_t r = 0; r < matrix_.rows(); ++r)
    for (std::size_t c = 0; c < matrix_.cols(); ++c)
      if (sgn(matrix_(r, c)) < 0) throw DomainError("analytic map has a negative coefficient");
}

MatQ AnalyticMap::grade(std::size_t n) const {
  GradedBasis b(source_.dim(), truncation_);
  MatQ m(matrix_.rows(), b.grade(n).size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = matrix_(r, b.offset(n) + c);
  return m;
}

AnalyticMap AnalyticMap::truncate(std::size_t n) const {
  if (n > truncation_) throw DimensionError("cannot raise the truncation of an analytic map");
  GradedBasis b(source_.dim(), n);
  MatQ m(matrix_.rows(), b.size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = matrix_(r, c);
  return AnalyticMap(source_, target_, n, std::move(m));
}

std::vector<Polynomial> AnalyticMap::polynomials() const {
  GradedBasis b(source_.dim(), truncation_);
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < matrix_.rows(); ++r) out.push_back(series_polynomial(matrix_.row(r), b));
  return out;
}

AnalyticMap AnalyticMap::from_polynomials(ConeObject source, ConeObject target, std::size_t truncation,
                                          const std::vector<Polynomial>& polys) {
  MatQ m = matrix_from_polys(polys, GradedBasis(source.dim(), truncation));
  return AnalyticMap(std::move(source), std::move(target), truncation, std::move(m));
}

AnalyticMap AnalyticMap::linear(const Morphism& s, std::size_t truncation) {
  return from_polynomials(s.source(), s.target(), std::max<std::size_t>(truncation, 1), linear_polys(s.matrix()));
}

VecQ analytic_eval(const AnalyticMap& f, const VecQ& x) {
  if (x.size() != f.source().dim()) throw DimensionError("analytic_eval: point has wrong length");
  require_in_ball(f.source(), Side::kPrimal, x, "analytic_eval");
  return f.matrix().apply(delta_coords(x, f.truncation()));
}

Bracket analytic_norm_bounds(const AnalyticMap& f, const OracleParams& params) {
  Bracket out{0, 0, VecQ(f.source().dim()), "exact (zero target)"};
  if (f.target().dim() == 0) return out;
  const Generators& ball = exact_ball(f.source());
  if (!f.target().has_exact_norms()) throw CapabilityError("analytic map target does not have polyhedral norms");
  const auto polys = f.polynomials();
  bool first = true;
  bool all_exact = true;
  for (const auto& phi : f.target().require_q_gens()) {
    Polynomial p(f.source().dim());
    for (std::size_t j = 0; j < phi.size(); ++j)
      if (sgn(phi[j]) != 0) p += polys[j].scaled(phi[j]);
    Bracket b = maximize_over_hull(p, ball, params);
    all_exact = all_exact && b.exact();
    if (first || b.lower > out.lower) {
      out.lower = b.lower;
      out.argmax = b.argmax;
    }
    if (first || b.upper > out.upper) out.upper = b.upper;
    first = false;
  }
  out.method = out.exact() ? "exact" : "bracket (max over target dual generators)";
  return out;
}

AnalyticMap analytic_compose(const AnalyticMap& g, const AnalyticMap& f, std::size_t N, const OracleParams& params) {
  if (!compatible(f.target(), g.source()))
    throw DimensionError("analytic_compose: target '" + f.target().label() + "' does not match source '" +
                         g.source().label() + "'");
  Bracket nb = analytic_norm_bounds(f, params);
  if (nb.lower > 1)
    throw DomainError("analytic_compose: inner map has norm at least " + to_string(nb.lower) + " > 1",
                      {to_string(nb.argmax)});
  const auto y = f.polynomials();
  std::vector<Polynomial> h;
  for (const auto& gp : g.polynomials()) h.push_back(substitute(gp, y, static_cast<unsigned>(N)));
  return AnalyticMap::from_polynomials(f.source(), g.target(), N, h);
}

NormBracket morphism_norm_bracket(const Morphism& f, const OracleParams& params) {
  if (f.source().has_exact_norms() && f.target().has_exact_norms()) {
    const Rational& n = f.norm();
    return {n, n, "exact (generator pairs)"};
  }
  if (f.source().structure() == Structure::kBang && f.target().has_exact_norms()) {
    AnalyticMap as_map(f.source().operand(0), f.target(), f.source().degree(), f.matrix());
    Bracket b = analytic_norm_bounds(as_map, params);
    return {b.lower, b.upper, b.method};
  }
  throw CapabilityError("norm of a morphism from '" + f.source().label() + "' to '" + f.target().label() +
                        "' is not supported");
}

Morphism bang_mor(const Morphism& s, std::size_t N) {
  NormBracket nb = morphism_norm_bracket(s);
  if (nb.upper > 1)
    throw DomainError("bang_mor: ||S|| is not certified <= 1 (bracket [" + to_string(nb.lower) + ", " +
                      to_string(nb.upper) + "])");
  const std::size_t da = s.source().dim(), db = s.target().dim();
  auto polys = delta_polys(linear_polys(s.matrix()), GradedBasis(db, N));
  MatQ m = matrix_from_polys(polys, GradedBasis(da, N));
  return Morphism(bang_obj(s.source(), N), bang_obj(s.target(), N), std::move(m));
}

Morphism whynot_mor(const Morphism& l, std::size_t N) { return adjoint(bang_mor(adjoint(l), N)); }

Morphism eta(const ConeObject& a, std::size_t N) {
  if (N < 1) throw DimensionError("eta needs truncation at least 1");
  GradedBasis b(a.dim(), N);
  MatQ m(b.size(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m(b.offset(1) + i, i) = 1;
  return Morphism(a, whynot_obj(a, N), std::move(m));
}

Morphism monoid_unit(const ConeObject& a, std::size_t N) {
  GradedBasis b(a.dim(), N);
  MatQ m(b.size(), 1);
  m(0, 0) = 1;
  return Morphism(unit_object(), whynot_obj(a, N), std::move(m));
}

Morphism mu(const ConeObject& a, std::size_t N) {
  const ConeObject wa = whynot_obj(a, N);
  const GradedBasis inner(a.dim(), N);
  const GradedBasis outer(wa.dim(), N);
  const auto z = delta_polys(variables(a.dim()), inner, static_cast<unsigned>(N));
  const auto cols = delta_polys(z, outer, static_cast<unsigned>(N));
  return Morphism(whynot_obj(wa, N), wa, series_map(cols, inner));
}

Morphism diag_mult(const ConeObject& a, std::size_t N) {
  const ConeObject wa = whynot_obj(a, N);
  const GradedBasis b(a.dim(), N);
  const auto d = delta_polys(variables(a.dim()), b, static_cast<unsigned>(N));
  std::vector<Polynomial> cols;
  cols.reserve(b.size() * b.size());
  for (std::size_t p = 0; p < b.size(); ++p)
    for (std::size_t q = 0; q < b.size(); ++q) cols.push_back(d[p].times(d[q], static_cast<unsigned>(N)));
  return Morphism(cotensor_obj(wa, wa), wa, series_map(cols, b));
}

std::pair<Morphism, Morphism> exp_iso(const ConeObject& a, const ConeObject& b, std::size_t N) {
  require_constructive(a, "exp_iso");
  require_constructive(b, "exp_iso");
  const std::size_t da = a.dim(), db = b.dim();
  const GradedBasis ga(da, N), gb(db, N), gab(da + db, N);
  const auto vars = variables(da + db);
  const auto dx = delta_polys(std::vector<Polynomial>(vars.begin(), vars.begin() + static_cast<long>(da)), ga);
  const auto dy = delta_polys(std::vector<Polynomial>(vars.begin() + static_cast<long>(da), vars.end()), gb);
  std::vector<std::size_t> kept;
  std::vector<Polynomial> rows;
  for (std::size_t p = 0; p < ga.size(); ++p)
    for (std::size_t q = 0; q < gb.size(); ++q)
      if (ga.locate(p).first + gb.locate(q).first <= N) {
        kept.push_back(p * gb.size() + q);
        rows.push_back(dx[p].times(dy[q]));
      }
  MatQ phi = matrix_from_polys(rows, gab);
  // Phi is a scaled permutation matrix.
  MatQ inv(phi.cols(), phi.rows());
  std::vector<int> row_hits(phi.rows(), 0), col_hits(phi.cols(), 0);
  for (std::size_t r = 0; r < phi.rows(); ++r)
    for (std::size_t c = 0; c < phi.cols(); ++c)
      if (sgn(phi(r, c)) != 0) {
        inv(c, r) = 1 / phi(r, c);
        ++row_hits[r];
        ++col_hits[c];
      }
  for (int h : row_hits)
    if (h != 1) throw std::logic_error("exp_iso: coordinate map is not a bijection");
  for (int h : col_hits)
    if (h != 1) throw std::logic_error("exp_iso: coordinate map is not a bijection");
  const ConeObject source = bang_obj(product_obj(a, b), N);
  const ConeObject full = tensor_obj(bang_obj(a, N), bang_obj(b, N));
  const ConeObject target = project_obj(full, kept, full.label() + "[<=" + std::to_string(N) + "]");
  return {Morphism(source, target, std::move(phi)), Morphism(target, source, std::move(inv))};
}

}  // namespace ccones
