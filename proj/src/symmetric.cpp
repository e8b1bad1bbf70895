#include "ccones/symmetric.hpp"

#include <algorithm>

namespace ccones {
namespace {

Exponent to_exponent(const std::vector<std::size_t>& sorted, std::size_t dim) {
  Exponent e(dim, 0);
  for (std::size_t i : sorted) ++e[i];
  return e;
}

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

// Digits of `flat` in base `dim`, most significant first.
std::vector<std::size_t> tuple_of(std::size_t flat, std::size_t dim, std::size_t degree) {
  std::vector<std::size_t> t(degree);
  for (std::size_t k = degree; k-- > 0;) {
    t[k] = flat % dim;
    flat /= dim;
  }
  return t;
}

unsigned total(const Exponent& e) {
  unsigned s = 0;
  for (unsigned x : e) s += x;
  return s;
}

}  // namespace

MultisetBasis::MultisetBasis(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {
  std::vector<std::size_t> cur;
  Integer nfact;
  mpz_fac_ui(nfact.get_mpz_t(), degree);
  auto emit = [&] {
    Exponent e = to_exponent(cur, dim);
    Integer m = nfact;
    for (unsigned x : e) {
      Integer f;
      mpz_fac_ui(f.get_mpz_t(), x);
      m /= f;
    }
    lookup_.emplace(e, indices_.size());
    indices_.push_back(cur);
    exponents_.push_back(std::move(e));
    multiplicities_.push_back(std::move(m));
  };
  if (degree == 0) {
    emit();
    return;
  }
  if (dim == 0) return;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == degree) {
      emit();
      return;
    }
    for (std::size_t i = from; i < dim; ++i) {
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

std::optional<std::size_t> MultisetBasis::find(const Exponent& e) const {
  auto it = lookup_.find(e);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t MultisetBasis::index_of(const Exponent& e) const {
  auto i = find(e);
  if (!i) throw DimensionError("exponent is not in the multiset basis");
  return *i;
}

std::size_t MultisetBasis::index_of_sorted(const std::vector<std::size_t>& sorted) const {
  for (std::size_t i : sorted)
    if (i >= dim_) throw DimensionError("multiset index out of range");
  return index_of(to_exponent(sorted, dim_));
}

GradedBasis::GradedBasis(std::size_t dim, std::size_t truncation) : dim_(dim) {
  offsets_.push_back(0);
  for (std::size_t n = 0; n <= truncation; ++n) {
    grades_.emplace_back(dim, n);
    offsets_.push_back(offsets_.back() + grades_.back().size());
  }
}

std::pair<std::size_t, std::size_t> GradedBasis::locate(std::size_t flat) const {
  if (flat >= size()) throw DimensionError("graded coordinate out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), flat);
  std::size_t n = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  return {n, flat - offsets_[n]};
}

const Exponent& GradedBasis::exponent(std::size_t flat) const {
  auto [n, i] = locate(flat);
  return grades_[n].exponent(i);
}

const Integer& GradedBasis::multiplicity(std::size_t flat) const {
  auto [n, i] = locate(flat);
  return grades_[n].multiplicity(i);
}

std::optional<std::size_t> GradedBasis::find(const Exponent& e) const {
  if (e.size() != dim_) return std::nullopt;
  unsigned n = total(e);
  if (n > truncation()) return std::nullopt;
  auto i = grades_[n].find(e);
  if (!i) return std::nullopt;
  return offsets_[n] + *i;
}

VecQ SymTensor::to_full() const {
  MultisetBasis basis(dim, degree);
  if (coords.size() != basis.size()) throw DimensionError("symmetric tensor has wrong number of coordinates");
  const std::size_t total_size = ipow(dim, degree);
  VecQ full(total_size);
  for (std::size_t flat = 0; flat < total_size; ++flat) {
    auto t = tuple_of(flat, dim, degree);
    std::sort(t.begin(), t.end());
    std::size_t i = basis.index_of_sorted(t);
    full[flat] = variance == Variance::kFunctional ? coords[i] : Rational(coords[i] / Rational(basis.multiplicity(i)));
  }
  return full;
}

SymTensor SymTensor::from_full(std::size_t dim, std::size_t degree, Variance variance, const VecQ& full) {
  MultisetBasis basis(dim, degree);
  if (full.size() != ipow(dim, degree)) throw DimensionError("full tensor has wrong number of entries");
  SymTensor out{dim, degree, variance, VecQ(basis.size())};
  std::vector<bool> seen(basis.size(), false);
  std::vector<Rational> entry(basis.size());
  for (std::size_t flat = 0; flat < full.size(); ++flat) {
    auto t = tuple_of(flat, dim, degree);
    std::sort(t.begin(), t.end());
    std::size_t i = basis.index_of_sorted(t);
    if (!seen[i]) {
      seen[i] = true;
      entry[i] = full[flat];
    } else if (entry[i] != full[flat]) {
      throw DomainError("tensor is not symmetric at entry " + std::to_string(flat), {to_string(full[flat])});
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    out.coords[i] = variance == Variance::kFunctional ? entry[i] : Rational(entry[i] * Rational(basis.multiplicity(i)));
  return out;
}

Rational multilinear_eval(const SymTensor& f, const std::vector<VecQ>& args) {
  if (args.size() != f.degree) throw DimensionError("multilinear_eval: wrong number of arguments");
  for (const auto& a : args)
    if (a.size() != f.dim) throw DimensionError("multilinear_eval: argument has wrong length");
  SymTensor entries = f;
  if (f.variance == Variance::kTensor) {
    MultisetBasis basis(f.dim, f.degree);
    for (std::size_t i = 0; i < basis.size(); ++i) entries.coords[i] /= Rational(basis.multiplicity(i));
  }
  entries.variance = Variance::kFunctional;
  // Contract the last argument repeatedly.
  VecQ cur = entries.to_full();
  for (std::size_t k = f.degree; k-- > 0;) {
    VecQ next(cur.size() / f.dim);
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j < f.dim; ++j)
        if (sgn(args[k][j]) != 0) next[i] += cur[i * f.dim + j] * args[k][j];
    cur = std::move(next);
  }
  return cur.empty() ? Rational(0) : cur[0];
}

VecQ symmetrized_product(const std::vector<VecQ>& args, const MultisetBasis& basis) {
  if (args.size() != basis.degree()) throw DimensionError("symmetrized_product: wrong number of factors");
  const std::size_t dim = basis.dim();
  VecQ out(basis.size());
  const std::size_t total_size = ipow(dim, basis.degree());
  for (std::size_t flat = 0; flat < total_size; ++flat) {
    auto t = tuple_of(flat, dim, basis.degree());
    Rational p = 1;
    for (std::size_t k = 0; k < t.size() && sgn(p) != 0; ++k) p *= args[k].at(t[k]);
    if (sgn(p) == 0) continue;
    std::sort(t.begin(), t.end());
    out[basis.index_of_sorted(t)] += p;
  }
  return out;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Polynomial p(nvars);
  Exponent e(nvars, 0);
  e.at(i) = 1;
  p.add_term(e, 1);
  return p;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw DimensionError("monomial has wrong number of variables");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw DimensionError("adding polynomials in different variables");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r += b;
  return r;
}

Polynomial Polynomial::scaled(const Rational& s) const {
  Polynomial r(nvars_);
  if (sgn(s) == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
  return r;
}

Polynomial Polynomial::times(const Polynomial& other, std::optional<unsigned> max_degree) const {
  if (other.nvars_ != nvars_) throw DimensionError("multiplying polynomials in different variables");
  Polynomial r(nvars_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    const unsigned da = total(ea);
    for (const auto& [eb, cb] : other.terms_) {
      if (max_degree && da + total(eb) > *max_degree) continue;
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::truncated(unsigned max_degree) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_)
    if (total(e) <= max_degree) r.terms_.emplace(e, c);
  return r;
}

Rational Polynomial::evaluate(const VecQ& x) const {
  if (x.size() != nvars_) throw DimensionError("evaluating polynomial at a point of wrong length");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), x[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), x[i].get_den_mpz_t(), e[i]);
      m *= p;
    }
    acc += m;
  }
  return acc;
}

bool Polynomial::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return sgn(t.second) >= 0; });
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& subs, std::optional<unsigned> max_degree) {
  if (subs.size() != p.nvars()) throw DimensionError("substitute: wrong number of substitutions");
  if (subs.empty()) return p;
  const std::size_t nv = subs.front().nvars();
  // Cache of powers subs[i]^k.
  std::vector<std::vector<Polynomial>> powers(subs.size());
  auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Polynomial::constant(nv, 1));
    while (pw.size() <= k) pw.push_back(pw.back().times(subs[i], max_degree));
    return pw[k];
  };
  Polynomial out(nv);
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(nv, c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i)
      if (e[i] > 0) term = term.times(power(i, e[i]), max_degree);
    out += term;
  }
  return out;
}

std::vector<Polynomial> linear_polys(const MatQ& m) {
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < m.rows(); ++j) {
    Polynomial p(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) {
      Exponent e(m.cols(), 0);
      e[i] = 1;
      p.add_term(e, m(j, i));
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Polynomial> delta_polys(const std::vector<Polynomial>& y, const GradedBasis& out,
                                    std::optional<unsigned> max_degree) {
  if (y.size() != out.dim()) throw DimensionError("delta_polys: wrong number of coordinates");
  const std::size_t nv = y.empty() ? 0 : y.front().nvars();
  // Raw products prod y^b, built grade by grade from the sorted prefix.
  std::vector<std::vector<Polynomial>> raw(out.truncation() + 1);
  std::vector<Polynomial> result;
  result.reserve(out.size());
  for (std::size_t n = 0; n <= out.truncation(); ++n) {
    const MultisetBasis& g = out.grade(n);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (n == 0) {
        raw[0].push_back(Polynomial::constant(nv, 1));
      } else {
        std::vector<std::size_t> idx = g.indices(i);
        const std::size_t last = idx.back();
        idx.pop_back();
        const Polynomial& prefix = raw[n - 1][out.grade(n - 1).index_of_sorted(idx)];
        raw[n].push_back(prefix.times(y[last], max_degree));
      }
      result.push_back(raw[n].back().scaled(Rational(g.multiplicity(i))));
    }
  }
  return result;
}

Polynomial series_polynomial(const VecQ& coeffs, const GradedBasis& basis) {
  if (coeffs.size() != basis.size()) throw DimensionError("series has wrong number of coefficients");
  Polynomial p(basis.dim());
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (sgn(coeffs[k]) != 0) p.add_term(basis.exponent(k), coeffs[k] * Rational(basis.multiplicity(k)));
  return p;
}

MatQ matrix_from_polys(const std::vector<Polynomial>& rows, const GradedBasis& in) {
  MatQ m(rows.size(), in.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].nvars() != in.dim()) throw DimensionError("matrix_from_polys: polynomial in wrong number of variables");
    for (const auto& [e, c] : rows[j].terms()) {
      auto k = in.find(e);
      if (!k) throw DomainError("matrix_from_polys: term of degree " + std::to_string(total(e)) + " above truncation");
      m(j, *k) = c / Rational(in.multiplicity(*k));
    }
  }
  return m;
}

}  // namespace ccones
