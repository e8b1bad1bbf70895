#ifndef CCONES_SYMMETRIC_HPP
#define CCONES_SYMMETRIC_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ccones/numeric.hpp"

namespace ccones {

// Exponent vector of a monomial: exponent[i] is the power of variable i.
using Exponent = std::vector<unsigned>;

// Multisets of size `degree` over {0, ..., dim-1}, enumerated as sorted index
// sequences in lexicographic order.
//
// Coordinate convention for symmetric tensors, fixed here for the whole
// library. A symmetric tensor T of degree n is stored on the tensor side by
// its orbit sums s_a = sum of T[i] over the index tuples i that sort to a, so
// that s_a = multiplicity(a) * T[i]. A symmetric n-linear functional F is
// stored by its entries f_a = F[i]. The pairing of the two is then the plain
// dot product sum_a f_a s_a, the power x^{(x)n} has coordinates
// multiplicity(a) x^a, and f(x, ..., x) = <f, x^{(x)n}>.
class MultisetBasis {
 public:
  MultisetBasis(std::size_t dim, std::size_t degree);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return indices_.size(); }

  const std::vector<std::size_t>& indices(std::size_t i) const { return indices_.at(i); }
  const Exponent& exponent(std::size_t i) const { return exponents_.at(i); }
  // Number of distinct tuples in the orbit: degree! / prod(exponent!).
  const Integer& multiplicity(std::size_t i) const { return multiplicities_.at(i); }

  std::optional<std::size_t> find(const Exponent& e) const;
  std::size_t index_of(const Exponent& e) const;
  std::size_t index_of_sorted(const std::vector<std::size_t>& sorted) const;

 private:
  std::size_t dim_;
  std::size_t degree_;
  std::vector<std::vector<std::size_t>> indices_;
  std::vector<Exponent> exponents_;
  std::vector<Integer> multiplicities_;
  std::map<Exponent, std::size_t> lookup_;
};

// Direct sum of the multiset bases of degrees 0..truncation, in that order.
class GradedBasis {
 public:
  GradedBasis(std::size_t dim, std::size_t truncation);

  std::size_t dim() const { return dim_; }
  std::size_t truncation() const { return grades_.size() - 1; }
  std::size_t size() const { return offsets_.back(); }

  const MultisetBasis& grade(std::size_t n) const { return grades_.at(n); }
  std::size_t offset(std::size_t n) const { return offsets_.at(n); }

  // (degree, index within that degree) of a flat coordinate.
  std::pair<std::size_t, std::size_t> locate(std::size_t flat) const;
  const Exponent& exponent(std::size_t flat) const;
  const Integer& multiplicity(std::size_t flat) const;
  std::optional<std::size_t> find(const Exponent& e) const;

 private:
  std::size_t dim_;
  std::vector<MultisetBasis> grades_;
  std::vector<std::size_t> offsets_;
};

enum class Variance { kTensor, kFunctional };

// A symmetric tensor in multiset coordinates (see MultisetBasis for the
// convention on each side).
struct SymTensor {
  std::size_t dim = 0;
  std::size_t degree = 0;
  Variance variance = Variance::kTensor;
  VecQ coords;

  // Full tensor with dim^degree entries, index tuples in row-major order.
  VecQ to_full() const;
  // Throws DomainError if `full` is not symmetric.
  static SymTensor from_full(std::size_t dim, std::size_t degree, Variance variance, const VecQ& full);
};

// Symmetric multilinear functional f applied to (x_1, ..., x_n).
Rational multilinear_eval(const SymTensor& f, const std::vector<VecQ>& args);
// Orbit-sum coordinates of the symmetrization of x_1 (x) ... (x) x_n.
VecQ symmetrized_product(const std::vector<VecQ>& args, const MultisetBasis& basis);

// Sparse multivariate polynomial with rational coefficients.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  void add_term(const Exponent& e, const Rational& c);
  Rational coefficient(const Exponent& e) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial scaled(const Rational& s) const;
  // Product with all terms of total degree above max_degree dropped.
  Polynomial times(const Polynomial& other, std::optional<unsigned> max_degree = std::nullopt) const;
  Polynomial truncated(unsigned max_degree) const;

  Rational evaluate(const VecQ& x) const;
  bool has_nonnegative_coefficients() const;

  bool operator==(const Polynomial& other) const = default;

 private:
  std::size_t nvars_;
  std::map<Exponent, Rational> terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);

// p(subs[0], ..., subs[k-1]), truncated at max_degree when given.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& subs,
                      std::optional<unsigned> max_degree = std::nullopt);

// Linear forms y_j = sum_i m(j, i) x_i.
std::vector<Polynomial> linear_polys(const MatQ& m);

// Orbit-sum coordinates of delta_y = (1, y, y^{(x)2}, ...) over `out`, for y
// given as polynomials: entry (n, b) is multiplicity(b) * prod_j y_j^{b_j}.
std::vector<Polynomial> delta_polys(const std::vector<Polynomial>& y, const GradedBasis& out,
                                    std::optional<unsigned> max_degree = std::nullopt);

// The polynomial x -> <f, delta_x> of a functional with entry coordinates.
Polynomial series_polynomial(const VecQ& coeffs, const GradedBasis& basis);

// Matrix of the linear map delta_x -> (p_0(x), ..., p_{r-1}(x)): row j, column
// (n, a) holds coefficient(p_j, x^a) / multiplicity(a). Throws DomainError if
// some p_j has degree above the truncation of `in`.
MatQ matrix_from_polys(const std::vector<Polynomial>& rows, const GradedBasis& in);

}  // namespace ccones

#endif  // CCONES_SYMMETRIC_HPP
