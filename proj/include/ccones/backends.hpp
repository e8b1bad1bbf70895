#ifndef CCONES_BACKENDS_HPP
#define CCONES_BACKENDS_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <vector>

#include "ccones/cone.hpp"
#include "ccones/mall.hpp"

namespace ccones {

// PCS objects: the ball is the downward closure of ball_gens, the dual side
// its polar. Throws DomainError when the generators are negative or do not
// span (the polar is then unbounded).
ConeObject pcs_object(const Generators& ball_gens, std::size_t dim, std::string label);
ConeObject simplex_pcs(std::size_t d);  // l1-type: unit vectors
ConeObject cube_pcs(std::size_t d);     // linf-type: the all-ones vector

struct PcsMorphism {
  Morphism morphism;
  Rational norm;
  bool contraction;
};

// u is indexed (source, target): (ux)_j = sum_i u_ij x_i. The morphism matrix
// is the transpose. Maps of norm > 1 are returned with contraction = false.
PcsMorphism pcs_matrix_to_morphism(const MatQ& u, const ConeObject& a, const ConeObject& b);
MatQ morphism_to_pcs_matrix(const Morphism& f);

// Spectral backend over real symmetric n x n matrices. Floating point; the
// exact core never sees these values.
inline constexpr double kPsdTolerance = 1e-9;
inline constexpr double kDualityTolerance = 1e-8;

using MatD = Eigen::MatrixXd;

// Object of packed dimension n(n+1)/2 with no generator lists. Constructive
// connectives reject it.
ConeObject qcs_object(std::size_t n, std::string label = "");

// Throws DomainError (witness: eigenvalues) unless m is symmetric and PSD
// within kPsdTolerance.
void require_psd(const MatD& m, const char* what);

double qcs_trace_norm(const MatD& m);  // sum of eigenvalues of PSD m
double qcs_op_norm(const MatD& l);     // largest eigenvalue of PSD l
double qcs_pair(const MatD& l, const MatD& m);  // tr(LM)

// sup over effects 0 <= L <= I of tr(LM): the projector onto the positive
// eigenspace of m attains it.
struct SpectralSup {
  double value;
  MatD witness;
};
SpectralSup sup_over_effects(const MatD& m);
// sup over states (M >= 0, tr M <= 1) of tr(LM): an eigenvector projector
// for the largest eigenvalue attains it.
SpectralSup sup_over_states(const MatD& l);

struct SpectralDualityCheck {
  double trace_gap;  // |sup_effects tr(LM) - tr M|
  double op_gap;     // |sup_states tr(LM) - lambda_max(L)|
  bool ok;
};
SpectralDualityCheck spectral_duality_check(const MatD& m);

// Upper triangle in row-major order, off-diagonal entries once.
std::vector<double> pack_symmetric(const MatD& m);
MatD unpack_symmetric(const std::vector<double>& packed, std::size_t n);
// Norm of a packed matrix on either side of a spectral object: trace norm on
// the primal side, operator norm on the dual side.
double spectral_norm(const ConeObject& o, Side side, const std::vector<double>& packed);

// Whether the cone generated by `rays` is a lattice in its own order, which
// for a pointed polyhedral cone means its extreme rays are linearly
// independent.
struct LatticeReport {
  bool lattice;
  std::size_t extreme_rays;
  std::size_t rank;
};
LatticeReport lattice_test(const Generators& rays);
// The positive cone of every polyhedral object is the orthant on its
// coordinates.
LatticeReport lattice_test(const ConeObject& o);

}  // namespace ccones

#endif  // CCONES_BACKENDS_HPP
