#ifndef CCONES_CONE_HPP
#define CCONES_CONE_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ccones/numeric.hpp"
#include "ccones/polar.hpp"

namespace ccones {

enum class Backend { kPolyhedralExact, kSpectralFloat };
enum class Side { kPrimal, kDual };

inline Side flip(Side s) { return s == Side::kPrimal ? Side::kDual : Side::kPrimal; }

// Which constructor produced an object. Used to recover operands (curry
// needs the factors of a tensor) and for structural equality of objects
// whose norms are not polyhedral.
enum class Structure {
  kAtom,
  kUnit,
  kZero,
  kDual,
  kTensor,
  kProduct,
  kSymPower,
  kBang,
  kProject,
  kSpectral,
};

// Two-sided bound on a norm value. Exact norms have lower == upper.
struct NormBracket {
  Rational lower;
  Rational upper;
  std::string method;

  bool exact() const { return lower == upper; }
};

class ConeObject;

namespace detail {

using GenProducer = std::function<std::optional<Generators>()>;
using NormHook = std::function<NormBracket(Side, const VecQ&)>;

struct Node {
  std::size_t dim = 0;
  std::string label;
  Backend backend = Backend::kPolyhedralExact;
  Structure structure = Structure::kAtom;
  std::vector<std::shared_ptr<const Node>> operands;
  std::size_t degree = 0;  // n for kSymPower, N for kBang, matrix size for kSpectral
  std::vector<std::size_t> selection;  // kept coordinates for kProject

  // Recipes for the two generator lists. Either may return nullopt, in which
  // case the side is obtained as the polar of the other when dim allows.
  GenProducer make_p;
  GenProducer make_q;
  // Non-polyhedral norms (truncated exponentials) override evaluation.
  NormHook norm_hook;
  std::function<std::vector<std::string>()> make_layout;

  mutable std::once_flag p_once, q_once, layout_once;
  mutable std::optional<Generators> p_cache, q_cache;
  mutable std::vector<std::string> layout_cache;
};

}  // namespace detail

// A finite-dimensional normed positive dual pair. The positive cone on both
// sides is the nonnegative orthant with the coordinate pairing; the norms are
// the gauges of the two unit balls, each the downward-closed convex hull of
// its generator list. Objects are immutable handles; copies share state.
class ConeObject {
 public:
  std::size_t dim() const { return node_->dim; }
  Backend backend() const { return node_->backend; }
  Structure structure() const { return node_->structure; }
  const std::string& label() const { return node_->label; }
  std::size_t degree() const { return node_->degree; }

  // Generators of B+(P) / B+(P*), or nullptr if that side is implicit.
  const Generators* p_ball_gens() const;
  const Generators* q_ball_gens() const;
  const Generators& require_p_gens() const;
  const Generators& require_q_gens() const;

  // Operand objects (factors of a tensor, the child of a dual, ...).
  ConeObject operand(std::size_t i) const;
  std::size_t operand_count() const { return node_->operands.size(); }

  // Names of the coordinates in ambient order.
  const std::vector<std::string>& layout() const;

  // True when norms on both sides are exact polyhedral gauges.
  bool has_exact_norms() const;

  const detail::Node& node() const { return *node_; }
  const std::shared_ptr<const detail::Node>& node_ptr() const { return node_; }

  static ConeObject from_node(std::shared_ptr<const detail::Node> node) {
    return ConeObject(std::move(node));
  }

 private:
  explicit ConeObject(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::Node> node_;
};

// Element of the primal cone of an object.
class Element {
 public:
  // Throws DomainError (with a separating functional) when coords are not in
  // the cone.
  Element(ConeObject object, VecQ coords);
  const ConeObject& object() const { return object_; }
  const VecQ& coords() const { return coords_; }

 private:
  ConeObject object_;
  VecQ coords_;
};

// An object with explicit generator lists. Missing sides are computed by
// polar_of_points when dim <= kMaxPolarDim. No validation is performed; see
// validate_object.
ConeObject make_polyhedral_object(std::size_t dim, std::optional<Generators> p_gens,
                                  std::optional<Generators> q_gens, std::string label);

ConeObject unit_object();
ConeObject zero_object();

// Swaps the two sides. dual_object(dual_object(o)) returns o itself.
ConeObject dual_object(const ConeObject& o);

// Throws DomainError with a witness functional if x is not in the cone on
// the given side of o.
void require_in_cone(const ConeObject& o, Side side, const VecQ& x);

// Norm on the given side. Exact for polyhedral objects (the sup over the
// other side's ball, attained at a generator); bracketed for truncated
// exponentials.
NormBracket norm_bracket(const ConeObject& o, Side side, const VecQ& x);

// Exact norms; throw CapabilityError when only a bracket is available.
Rational norm_primal(const ConeObject& o, const VecQ& x);
Rational norm_dual(const ConeObject& o, const VecQ& phi);
Rational norm_primal(const Element& x);

// Cross-check routes for polyhedral objects: the Minkowski gauge of the
// ball on `side` (an LP over that side's generators), and the max of the
// pairing over the other side's generators.
Rational gauge_norm(const ConeObject& o, Side side, const VecQ& x);
Rational sup_pairing_norm(const ConeObject& o, Side side, const VecQ& x);

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::string witness;  // empty when passed
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
  const ValidationCheck* find(const std::string& name) const;
};

// Checks the object invariants: nonnegative nonzero generators, canonical
// reduced form, mutual polarity (by vertex enumeration up to kMaxPolarDim,
// otherwise pairing bounds plus tightness spot checks), spanning, and
// nondegeneracy of the pairing on generators.
ValidationReport validate_object(const ConeObject& o);

// Coordinate-level equality: canonical generator lists for polyhedral
// objects, structural for exponentials and spectral objects.
bool objects_equal(const ConeObject& a, const ConeObject& b);

// Same construction tree, with leaves compared by objects_equal. Cheap: no
// generator lists of composite objects are materialized.
bool structurally_equal(const ConeObject& a, const ConeObject& b);

std::string to_string(Backend b);

}  // namespace ccones

#endif  // CCONES_CONE_HPP
