#include "ccones/backends.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ccones/lp.hpp"

namespace ccones {
namespace {

std::size_t packed_size(std::size_t n) { return n * (n + 1) / 2; }

Eigen::VectorXd eigenvalues_of(const MatD& m) {
  Eigen::SelfAdjointEigenSolver<MatD> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

std::string format_eigenvalues(const Eigen::VectorXd& ev) {
  std::ostringstream os;
  os.precision(12);
  os << '(';
  for (Eigen::Index i = 0; i < ev.size(); ++i) os << (i ? "," : "") << ev[i];
  os << ')';
  return os.str();
}

std::size_t exact_rank(std::vector<VecQ> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool in_cone(const VecQ& x, const Generators& gens) {
  if (gens.empty()) return is_zero(x);
  LpProblem lp;
  lp.objective = VecQ(gens.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    LinearConstraint c;
    c.coeffs.resize(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) c.coeffs[j] = gens[j][i];
    c.relation = Relation::kEqual;
    c.rhs = x[i];
    lp.constraints.push_back(std::move(c));
  }
  return lp_maximize(lp).status == LpStatus::kOptimal;
}

}  // namespace

ConeObject pcs_object(const Generators& ball_gens, std::size_t dim, std::string label) {
  for (const auto& g : ball_gens) {
    if (g.size() != dim) throw DimensionError("PCS generator " + to_string(g) + " does not have dimension " + std::to_string(dim));
    if (!is_nonnegative(g)) throw DomainError("PCS generator " + to_string(g) + " is not nonnegative", {to_string(g)});
  }
  auto uncovered = uncovered_coordinates(ball_gens, dim);
  if (!uncovered.empty()) {
    std::vector<std::string> witness;
    for (std::size_t i : uncovered) witness.push_back(std::to_string(i));
    throw DomainError("PCS generators do not span: coordinate " + witness.front() + " is never positive", witness);
  }
  Generators p = reduce_generators(ball_gens);
  std::optional<Generators> q;
  if (dim <= kMaxPolarDim) q = polar_of_points(p, dim).generators;
  return make_polyhedral_object(dim, std::move(p), std::move(q), std::move(label));
}

ConeObject simplex_pcs(std::size_t d) {
  Generators p;
  for (std::size_t i = 0; i < d; ++i) p.push_back(unit_vector(d, i));
  std::sort(p.begin(), p.end());
  return make_polyhedral_object(d, p, Generators{VecQ(d, Rational(1))}, "simplex" + std::to_string(d));
}

ConeObject cube_pcs(std::size_t d) {
  Generators q;
  for (std::size_t i = 0; i < d; ++i) q.push_back(unit_vector(d, i));
  std::sort(q.begin(), q.end());
  return make_polyhedral_object(d, Generators{VecQ(d, Rational(1))}, q, "cube" + std::to_string(d));
}

PcsMorphism pcs_matrix_to_morphism(const MatQ& u, const ConeObject& a, const ConeObject& b) {
  if (u.rows() != a.dim() || u.cols() != b.dim())
    throw DimensionError("PCS matrix is " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) + ", expected " +
                         std::to_string(a.dim()) + "x" + std::to_string(b.dim()));
  Morphism f(a, b, u.transpose());
  Rational n = f.norm();
  return {f, n, n <= 1};
}

MatQ morphism_to_pcs_matrix(const Morphism& f) { return f.matrix().transpose(); }

ConeObject qcs_object(std::size_t n, std::string label) {
  if (n == 0) throw DimensionError("qcs_object needs n >= 1");
  auto node = std::make_shared<detail::Node>();
  node->dim = packed_size(n);
  node->label = label.empty() ? "Q" + std::to_string(n) : std::move(label);
  node->backend = Backend::kSpectralFloat;
  node->structure = Structure::kSpectral;
  node->degree = n;
  node->make_p = [] { return std::optional<Generators>(Generators{}); };
  node->make_q = node->make_p;
  node->make_layout = [n] {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) out.push_back("m" + std::to_string(i) + std::to_string(j));
    return out;
  };
  return ConeObject::from_node(std::move(node));
}

void require_psd(const MatD& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) throw DimensionError(std::string(what) + ": matrix is not square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > kPsdTolerance * scale)
    throw DomainError(std::string(what) + ": matrix is not symmetric");
  Eigen::VectorXd ev = eigenvalues_of(m);
  if (ev.minCoeff() < -kPsdTolerance * scale)
    throw DomainError(std::string(what) + ": matrix is not positive semidefinite", {format_eigenvalues(ev)});
}

double qcs_trace_norm(const MatD& m) {
  require_psd(m, "qcs_trace_norm");
  return eigenvalues_of(m).sum();
}

double qcs_op_norm(const MatD& l) {
  require_psd(l, "qcs_op_norm");
  return eigenvalues_of(l).maxCoeff();
}

double qcs_pair(const MatD& l, const MatD& m) {
  if (l.rows() != m.rows() || l.cols() != m.cols()) throw DimensionError("qcs_pair: shapes differ");
  return (l * m).trace();
}

SpectralSup sup_over_effects(const MatD& m) {
  if (m.rows() != m.cols()) throw DimensionError("sup_over_effects: matrix is not square");
  Eigen::SelfAdjointEigenSolver<MatD> es(m);
  const auto& v = es.eigenvectors();
  MatD proj = MatD::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (es.eigenvalues()[i] > 0) proj += v.col(i) * v.col(i).transpose();
  return {qcs_pair(proj, m), proj};
}

SpectralSup sup_over_states(const MatD& l) {
  if (l.rows() != l.cols() || l.rows() == 0) throw DimensionError("sup_over_states: matrix is not square");
  Eigen::SelfAdjointEigenSolver<MatD> es(l);
  Eigen::Index top = l.rows() - 1;  // eigenvalues are sorted increasingly
  MatD state = es.eigenvectors().col(top) * es.eigenvectors().col(top).transpose();
  return {qcs_pair(l, state), state};
}

SpectralDualityCheck spectral_duality_check(const MatD& m) {
  const double trace_gap = std::abs(sup_over_effects(m).value - m.trace());
  const double op_gap = std::abs(sup_over_states(m).value - qcs_op_norm(m));
  return {trace_gap, op_gap, trace_gap <= kDualityTolerance && op_gap <= kDualityTolerance};
}

std::vector<double> pack_symmetric(const MatD& m) {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

MatD unpack_symmetric(const std::vector<double>& packed, std::size_t n) {
  if (packed.size() != packed_size(n)) throw DimensionError("packed symmetric matrix has wrong length");
  MatD m(n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = packed[k];
      m(j, i) = packed[k];
      ++k;
    }
  return m;
}

double spectral_norm(const ConeObject& o, Side side, const std::vector<double>& packed) {
  ConeObject base = o;
  while (base.structure() == Structure::kDual) {
    base = base.operand(0);
    side = flip(side);
  }
  if (base.structure() != Structure::kSpectral) throw CapabilityError("spectral_norm: '" + o.label() + "' is not spectral");
  MatD m = unpack_symmetric(packed, base.degree());
  return side == Side::kPrimal ? qcs_trace_norm(m) : qcs_op_norm(m);
}

LatticeReport lattice_test(const Generators& rays) {
  Generators r;
  for (const auto& v : rays) {
    if (is_zero(v)) continue;
    // Normalize to first nonzero entry 1 so that parallel rays coincide.
    std::size_t i = 0;
    while (sgn(v[i]) == 0) ++i;
    r.push_back(scaled(v, 1 / v[i]));
  }
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  Generators extreme;
  for (std::size_t i = 0; i < r.size(); ++i) {
    Generators others;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (j != i) others.push_back(r[j]);
    if (!in_cone(r[i], others)) extreme.push_back(r[i]);
  }
  std::size_t rank = exact_rank(extreme);
  return {rank == extreme.size(), extreme.size(), rank};
}

LatticeReport lattice_test(const ConeObject& o) {
  if (o.backend() == Backend::kSpectralFloat)
    throw CapabilityError("lattice_test: the PSD cone of '" + o.label() + "' is not polyhedral");
  Generators rays;
  for (std::size_t i = 0; i < o.dim(); ++i) rays.push_back(unit_vector(o.dim(), i));
  return lattice_test(rays);
}

}  // namespace ccones
