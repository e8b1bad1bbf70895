#ifndef CCONES_EXPONENTIAL_HPP
#define CCONES_EXPONENTIAL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ccones/cone.hpp"
#include "ccones/mall.hpp"
#include "ccones/oracle.hpp"
#include "ccones/symmetric.hpp"

namespace ccones {

inline constexpr std::size_t kDefaultTruncation = 3;

// Symmetric tensor power with the projective ("old") norm: the primal ball is
// generated by the symmetrized products of n primal generators of a, so the
// dual norm of a functional f is the max of f over generator n-tuples.
// Coordinates are MultisetBasis(a.dim(), n) in orbit-sum convention.
// n = 0 gives the unit object and n = 1 returns a.
ConeObject sym_power_obj(const ConeObject& a, std::size_t n);

// f is a symmetric n-linear functional on a, in entry coordinates.
Rational old_norm(const VecQ& f, const ConeObject& a, std::size_t n);
// Bracket for sup_{x in B+(a)} f(x, ..., x). The upper end is the smaller of
// the Bernstein bound and old_norm.
Bracket new_norm_bounds(const VecQ& f, const ConeObject& a, std::size_t n, const OracleParams& params = {});

// (1/n!) sum_{k=1}^n C(n,k) k^n, the polarization constant with
// old <= K_n * new.
Rational polarization_constant(std::size_t n);

// Truncated !a: coordinates are GradedBasis(a.dim(), N) in orbit-sum
// convention; delta_x has grade-n part x^{(x)n}. Norms are bracketed by the
// oracle: the dual (?-side) norm of a series is the sup of its polynomial
// over B+(a); the primal norm is obtained by column generation against it.
// Inside other connectives the ball is replaced by the finite surrogate
// generated by delta_x over a simplex grid of B+(a).
ConeObject bang_obj(const ConeObject& a, std::size_t N = kDefaultTruncation,
                    const OracleParams& params = {});
// Truncated ?a = (!(a^))^: power series on B+(a^) in entry coordinates.
ConeObject whynot_obj(const ConeObject& a, std::size_t N = kDefaultTruncation,
                      const OracleParams& params = {});

// Base object and truncation of a !-object (or of the ?-object dual to one).
ConeObject exponential_base(const ConeObject& o);

// Element of ?base: a power series on B+(base^), coefficients in entry
// coordinates over GradedBasis(base.dim(), N).
struct GradedSeries {
  ConeObject base;
  std::size_t truncation;
  VecQ coeffs;

  VecQ grade(std::size_t n) const;
  GradedSeries truncate(std::size_t n) const;
};

// Element of !base, coordinates in orbit-sum convention.
struct GradedDistribution {
  ConeObject base;
  std::size_t truncation;
  VecQ coords;

  VecQ grade(std::size_t n) const;
};

// (1, x, x^{(x)2}, ..., x^{(x)N}). Throws DomainError when ||x|| > 1.
GradedDistribution delta(const ConeObject& a, const VecQ& x, std::size_t N);
// Same coordinates without the norm check.
VecQ delta_coords(const VecQ& x, std::size_t N);

// <a, d>, where a is over base A and d over base A^.
Rational pairing(const GradedSeries& a, const GradedDistribution& d);
// sum_{n <= N} a_n(x) for x in B+(a.base^).
Rational series_eval(const GradedSeries& a, const VecQ& x);
NormBracket series_norm(const GradedSeries& a, const OracleParams& params = {});

// F(x) = sum_{n <= N} F_n(x^{(x)n}), stored as the linear map !P -> Q whose
// columns are indexed by GradedBasis(P.dim(), N).
class AnalyticMap {
 public:
  AnalyticMap(ConeObject source, ConeObject target, std::size_t truncation, MatQ matrix);

  const ConeObject& source() const { return source_; }
  const ConeObject& target() const { return target_; }
  std::size_t truncation() const { return truncation_; }
  const MatQ& matrix() const { return matrix_; }

  // Block acting on degree-n symmetric tensors.
  MatQ grade(std::size_t n) const;
  AnalyticMap truncate(std::size_t n) const;
  // One polynomial per target coordinate.
  std::vector<Polynomial> polynomials() const;
  static AnalyticMap from_polynomials(ConeObject source, ConeObject target, std::size_t truncation,
                                      const std::vector<Polynomial>& polys);
  static AnalyticMap linear(const Morphism& s, std::size_t truncation);

 private:
  ConeObject source_;
  ConeObject target_;
  std::size_t truncation_;
  MatQ matrix_;
};

// Exact truncated sum. Throws DomainError when ||x|| > 1.
VecQ analytic_eval(const AnalyticMap& f, const VecQ& x);
// sup_{x in B+(P)} ||F(x)||, bracketed coordinate functional by functional.
Bracket analytic_norm_bounds(const AnalyticMap& f, const OracleParams& params = {});
// (G truncated at its own degree) after F, truncated at output degree N.
// Throws DomainError when ||F|| > 1 is certified.
AnalyticMap analytic_compose(const AnalyticMap& g, const AnalyticMap& f, std::size_t N,
                             const OracleParams& params = {});

// Norm of a morphism whose source may be a !-object over an exact base:
// the sup over delta_x of the target norm, bracketed by the oracle. Exact for
// polyhedral endpoints.
NormBracket morphism_norm_bracket(const Morphism& f, const OracleParams& params = {});

// !S : !A -> !B with grade blocks S^{(x)n} restricted to symmetric tensors,
// so that (!S)(delta_x) = delta_{Sx}. Requires ||S|| <= 1, certified by
// morphism_norm_bracket.
Morphism bang_mor(const Morphism& s, std::size_t N);
// ?L = (!(L^))^ : ?A -> ?B.
Morphism whynot_mor(const Morphism& l, std::size_t N);

Morphism eta(const ConeObject& a, std::size_t N);          // A -> ?A, grade 1
Morphism mu(const ConeObject& a, std::size_t N);           // ??A -> ?A, f -> (x -> f(delta_x))
Morphism monoid_unit(const ConeObject& a, std::size_t N);  // 1 -> ?A, grade 0
Morphism diag_mult(const ConeObject& a, std::size_t N);    // ?A | ?A -> ?A, f -> (x -> f(x, x))

// Phi : !(A & B) -> !A (x) !B restricted to pairs of grades k + n <= N, and
// its inverse. Phi(delta_(x,y)) = delta_x (x) delta_y.
std::pair<Morphism, Morphism> exp_iso(const ConeObject& a, const ConeObject& b, std::size_t N);

}  // namespace ccones

#endif  // CCONES_EXPONENTIAL_HPP
