#include "ccones/numeric.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace ccones {

MatQ MatQ::identity(std::size_t n) {
  MatQ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MatQ MatQ::from_rows(const std::vector<VecQ>& rows, std::size_t cols) {
  MatQ m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("MatQ::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

VecQ MatQ::row(std::size_t r) const {
  return VecQ(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

VecQ MatQ::col(std::size_t c) const {
  VecQ v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

MatQ MatQ::transpose() const {
  MatQ t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

VecQ MatQ::apply(const VecQ& x) const {
  if (x.size() != cols_) throw DimensionError("MatQ::apply: vector has wrong length");
  VecQ y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0 && sgn(x[c]) != 0) acc += a * x[c];
    }
    y[r] = acc;
  }
  return y;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  MatQ c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

MatQ operator+(const MatQ& a, const MatQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum: shapes differ");
  MatQ c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

MatQ kronecker(const MatQ& a, const MatQ& b) {
  MatQ k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (sgn(b(p, q)) != 0) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

Rational dot(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) throw DimensionError("dot: lengths differ");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  return acc;
}

VecQ kronecker(const VecQ& a, const VecQ& b) {
  VecQ k(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) k[i * b.size() + j] = a[i] * b[j];
  return k;
}

VecQ scaled(const VecQ& v, const Rational& s) {
  VecQ out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

VecQ add(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) throw DimensionError("add: lengths differ");
  VecQ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

VecQ zeros(std::size_t n) { return VecQ(n); }

VecQ unit_vector(std::size_t n, std::size_t i) {
  VecQ v(n);
  v.at(i) = 1;
  return v;
}

bool is_nonnegative(const VecQ& v) {
  for (const auto& x : v)
    if (sgn(x) < 0) return false;
  return true;
}

bool is_zero(const VecQ& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

bool dominated_by(const VecQ& a, const VecQ& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Rational quotient(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

Rational factorial(std::size_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw DomainError("empty rational literal");
  auto dot_pos = s.find('.');
  if (dot_pos != std::string::npos) {
    bool negative = s[0] == '-';
    std::string body = negative || s[0] == '+' ? s.substr(1) : s;
    dot_pos = body.find('.');
    std::string digits = body.substr(0, dot_pos) + body.substr(dot_pos + 1);
    std::size_t frac_len = body.size() - dot_pos - 1;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw DomainError("malformed decimal literal '" + s + "'");
    Integer num(digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational q(num, den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw DomainError("malformed rational literal '" + s + "'");
  if (sgn(q.get_den()) == 0) throw DomainError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const VecQ& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << ')';
  return os.str();
}

double to_double(const Rational& q) { return q.get_d(); }

Rational round_to_denominator(double x, long denominator) {
  Rational q(static_cast<long>(std::llround(x * static_cast<double>(denominator))), denominator);
  q.canonicalize();
  return q;
}

}  // namespace ccones
