#ifndef CCONES_NUMERIC_HPP
#define CCONES_NUMERIC_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ccones/errors.hpp"

namespace ccones {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation, but not after the
// two-argument constructor; use quotient() for that.
using Rational = mpq_class;
using Integer = mpz_class;

using VecQ = std::vector<Rational>;

// Dense row-major rational matrix.
class MatQ {
 public:
  MatQ() = default;
  MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static MatQ identity(std::size_t n);
  static MatQ from_rows(const std::vector<VecQ>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  VecQ row(std::size_t r) const;
  VecQ col(std::size_t c) const;

  MatQ transpose() const;
  VecQ apply(const VecQ& x) const;

  bool operator==(const MatQ& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

MatQ operator*(const MatQ& a, const MatQ& b);
MatQ operator+(const MatQ& a, const MatQ& b);
MatQ kronecker(const MatQ& a, const MatQ& b);

Rational dot(const VecQ& a, const VecQ& b);
VecQ kronecker(const VecQ& a, const VecQ& b);
VecQ scaled(const VecQ& v, const Rational& s);
VecQ add(const VecQ& a, const VecQ& b);
VecQ zeros(std::size_t n);
VecQ unit_vector(std::size_t n, std::size_t i);

bool is_nonnegative(const VecQ& v);
bool is_zero(const VecQ& v);
// Coordinate-wise a <= b.
bool dominated_by(const VecQ& a, const VecQ& b);

Rational quotient(const Integer& num, const Integer& den);  // canonical num/den

Rational binomial(std::size_t n, std::size_t k);
Rational factorial(std::size_t n);

// "p/q" or "p"; also accepts finite decimals such as "0.25".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const VecQ& v);

double to_double(const Rational& q);
// Nearest rational with the given denominator.
Rational round_to_denominator(double x, long denominator);

}  // namespace ccones

#endif  // CCONES_NUMERIC_HPP
