#include "ccones/cone.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ccones/lp.hpp"

namespace ccones {
namespace {

std::optional<Generators> fallback_polar(std::size_t dim, const detail::GenProducer& other) {
  if (dim > kMaxPolarDim || !other) return std::nullopt;
  auto gens = other();
  if (!gens) return std::nullopt;
  PolarResult r = polar_of_points(*gens, dim);
  if (!r.bounded) return std::nullopt;
  return r.generators;
}

const Generators* side_gens(const ConeObject& o, Side side) {
  return side == Side::kPrimal ? o.p_ball_gens() : o.q_ball_gens();
}

bool is_spectral(const ConeObject& o) { return o.backend() == Backend::kSpectralFloat; }

}  // namespace

std::string to_string(Backend b) {
  return b == Backend::kPolyhedralExact ? "polyhedral_exact" : "spectral_float";
}

const Generators* ConeObject::p_ball_gens() const {
  const auto& n = *node_;
  std::call_once(n.p_once, [&n] {
    if (n.make_p) n.p_cache = n.make_p();
    if (!n.p_cache) n.p_cache = fallback_polar(n.dim, n.make_q);
  });
  return n.p_cache ? &*n.p_cache : nullptr;
}

const Generators* ConeObject::q_ball_gens() const {
  const auto& n = *node_;
  std::call_once(n.q_once, [&n] {
    if (n.make_q) n.q_cache = n.make_q();
    if (!n.q_cache) n.q_cache = fallback_polar(n.dim, n.make_p);
  });
  return n.q_cache ? &*n.q_cache : nullptr;
}

const Generators& ConeObject::require_p_gens() const {
  if (is_spectral(*this)) throw CapabilityError("spectral object '" + label() + "' has no generator lists");
  const Generators* g = p_ball_gens();
  if (!g)
    throw CapabilityError("primal generators of '" + label() + "' are implicit and cannot be materialized in dimension " +
                          std::to_string(dim()));
  return *g;
}

const Generators& ConeObject::require_q_gens() const {
  if (is_spectral(*this)) throw CapabilityError("spectral object '" + label() + "' has no generator lists");
  const Generators* g = q_ball_gens();
  if (!g)
    throw CapabilityError("dual generators of '" + label() + "' are implicit and cannot be materialized in dimension " +
                          std::to_string(dim()));
  return *g;
}

ConeObject ConeObject::operand(std::size_t i) const { return ConeObject(node_->operands.at(i)); }

const std::vector<std::string>& ConeObject::layout() const {
  const auto& n = *node_;
  std::call_once(n.layout_once, [&n] {
    if (n.make_layout) {
      n.layout_cache = n.make_layout();
    } else {
      for (std::size_t i = 0; i < n.dim; ++i) n.layout_cache.push_back(n.label + "[" + std::to_string(i) + "]");
    }
  });
  return n.layout_cache;
}

bool ConeObject::has_exact_norms() const {
  const detail::Node* n = node_.get();
  while (n->structure == Structure::kDual) n = n->operands[0].get();
  return n->structure != Structure::kBang && n->structure != Structure::kSpectral;
}

Element::Element(ConeObject object, VecQ coords) : object_(std::move(object)), coords_(std::move(coords)) {
  require_in_cone(object_, Side::kPrimal, coords_);
}

ConeObject make_polyhedral_object(std::size_t dim, std::optional<Generators> p_gens, std::optional<Generators> q_gens,
                                  std::string label) {
  auto check = [dim](const std::optional<Generators>& g) {
    if (!g) return;
    for (const auto& v : *g)
      if (v.size() != dim) throw DimensionError("generator " + to_string(v) + " does not have dimension " + std::to_string(dim));
  };
  check(p_gens);
  check(q_gens);
  auto node = std::make_shared<detail::Node>();
  node->dim = dim;
  node->label = std::move(label);
  node->structure = Structure::kAtom;
  if (p_gens) node->make_p = [g = *p_gens] { return std::optional<Generators>(g); };
  if (q_gens) node->make_q = [g = *q_gens] { return std::optional<Generators>(g); };
  return ConeObject::from_node(std::move(node));
}

ConeObject unit_object() {
  static const ConeObject unit = [] {
    auto node = std::make_shared<detail::Node>();
    node->dim = 1;
    node->label = "1";
    node->structure = Structure::kUnit;
    node->make_p = [] { return std::optional<Generators>(Generators{VecQ{Rational(1)}}); };
    node->make_q = node->make_p;
    node->make_layout = [] { return std::vector<std::string>{"*"}; };
    return ConeObject::from_node(std::move(node));
  }();
  return unit;
}

ConeObject zero_object() {
  static const ConeObject zero = [] {
    auto node = std::make_shared<detail::Node>();
    node->dim = 0;
    node->label = "0";
    node->structure = Structure::kZero;
    node->make_p = [] { return std::optional<Generators>(Generators{}); };
    node->make_q = node->make_p;
    return ConeObject::from_node(std::move(node));
  }();
  return zero;
}

ConeObject dual_object(const ConeObject& o) {
  if (o.structure() == Structure::kDual) return o.operand(0);
  auto node = std::make_shared<detail::Node>();
  node->dim = o.dim();
  node->label = o.label() + "^";
  node->backend = o.backend();
  node->structure = Structure::kDual;
  node->operands = {o.node_ptr()};
  node->make_p = [o]() -> std::optional<Generators> {
    const Generators* g = o.q_ball_gens();
    return g ? std::optional<Generators>(*g) : std::nullopt;
  };
  node->make_q = [o]() -> std::optional<Generators> {
    const Generators* g = o.p_ball_gens();
    return g ? std::optional<Generators>(*g) : std::nullopt;
  };
  node->make_layout = [o] { return o.layout(); };
  return ConeObject::from_node(std::move(node));
}

void require_in_cone(const ConeObject& o, Side side, const VecQ& x) {
  if (x.size() != o.dim())
    throw DimensionError("vector of length " + std::to_string(x.size()) + " for object '" + o.label() + "' of dimension " +
                         std::to_string(o.dim()));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) < 0) {
      VecQ w = unit_vector(x.size(), i);
      throw DomainError("vector " + to_string(x) + " is outside the cone of '" + o.label() + "' (coordinate " +
                            std::to_string(i) + " is negative)",
                        {to_string(w)});
    }
  if (is_spectral(o)) return;
  const Generators* gens = side_gens(o, side);
  if (!gens) return;
  for (std::size_t i : uncovered_coordinates(*gens, o.dim()))
    if (sgn(x[i]) > 0) {
      VecQ w = scaled(unit_vector(x.size(), i), -1);
      throw DomainError("vector " + to_string(x) + " is outside the cone of '" + o.label() + "' (coordinate " +
                            std::to_string(i) + " is not spanned)",
                        {to_string(w)});
    }
}

Rational sup_pairing_norm(const ConeObject& o, Side side, const VecQ& x) {
  if (!o.has_exact_norms()) throw CapabilityError("object '" + o.label() + "' does not have polyhedral norms");
  require_in_cone(o, side, x);
  const Generators& other = side == Side::kPrimal ? o.require_q_gens() : o.require_p_gens();
  Rational best = 0;
  for (const auto& g : other) {
    Rational v = dot(g, x);
    if (v > best) best = v;
  }
  return best;
}

Rational gauge_norm(const ConeObject& o, Side side, const VecQ& x) {
  if (!o.has_exact_norms()) throw CapabilityError("object '" + o.label() + "' does not have polyhedral norms");
  require_in_cone(o, side, x);
  if (is_zero(x)) return 0;
  const Generators& gens = side == Side::kPrimal ? o.require_p_gens() : o.require_q_gens();
  // minimize sum(w) subject to sum_j w_j g_j >= x, w >= 0.
  LpProblem lp;
  lp.objective = VecQ(gens.size(), Rational(-1));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    LinearConstraint c;
    c.coeffs.resize(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) c.coeffs[j] = gens[j][i];
    c.relation = Relation::kGreaterEqual;
    c.rhs = x[i];
    lp.constraints.push_back(std::move(c));
  }
  LpResult r = lp_maximize(lp);
  if (r.status != LpStatus::kOptimal)
    throw DomainError("gauge LP for " + to_string(x) + " in '" + o.label() + "' is " + to_string(r.status));
  return -r.value;
}

NormBracket norm_bracket(const ConeObject& o, Side side, const VecQ& x) {
  if (x.size() != o.dim()) require_in_cone(o, side, x);  // throws the dimension error
  const auto& node = o.node();
  if (node.structure == Structure::kDual) return norm_bracket(o.operand(0), flip(side), x);
  if (is_spectral(o)) throw CapabilityError("spectral object '" + o.label() + "' has floating-point norms only");
  if (node.norm_hook) {
    require_in_cone(o, side, x);
    return node.norm_hook(side, x);
  }
  require_in_cone(o, side, x);
  const Generators* other = side == Side::kPrimal ? o.q_ball_gens() : o.p_ball_gens();
  if (other) {
    Rational v = sup_pairing_norm(o, side, x);
    return {v, v, "max over dual-ball generators"};
  }
  Rational v = gauge_norm(o, side, x);
  return {v, v, "gauge LP"};
}

Rational norm_primal(const ConeObject& o, const VecQ& x) {
  NormBracket b = norm_bracket(o, Side::kPrimal, x);
  if (!b.exact()) throw CapabilityError("norm in '" + o.label() + "' is only bracketed");
  return b.lower;
}

Rational norm_dual(const ConeObject& o, const VecQ& phi) {
  NormBracket b = norm_bracket(o, Side::kDual, phi);
  if (!b.exact()) throw CapabilityError("dual norm in '" + o.label() + "' is only bracketed");
  return b.lower;
}

Rational norm_primal(const Element& x) { return norm_primal(x.object(), x.coords()); }

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ValidationReport validate_object(const ConeObject& o) {
  ValidationReport report;
  auto add = [&report](std::string name, bool passed, std::string witness = {}) {
    report.checks.push_back({std::move(name), passed, passed ? std::string() : std::move(witness)});
  };
  if (is_spectral(o)) {
    add("backend", true);
    return report;
  }
  const Generators* p = o.p_ball_gens();
  const Generators* q = o.q_ball_gens();
  add("p_materialized", p != nullptr, "primal generators are implicit");
  add("q_materialized", q != nullptr, "dual generators are implicit");

  auto side_checks = [&](const char* tag, const Generators* gens) {
    if (!gens) return;
    std::string name(tag);
    std::string bad;
    for (const auto& g : *gens)
      if (!is_nonnegative(g) || is_zero(g)) {
        bad = to_string(g);
        break;
      }
    add(name + "_nonnegative_nonzero", bad.empty(), bad);
    if (!bad.empty()) return;
    Generators canon = reduce_generators(*gens);
    std::string witness;
    if (canon != *gens) {
      for (const auto& g : *gens)
        if (std::find(canon.begin(), canon.end(), g) == canon.end()) {
          witness = "dominated generator " + to_string(g);
          break;
        }
      if (witness.empty()) witness = "generators are not sorted";
    }
    add(name + "_canonical", canon == *gens, witness);
    auto missing = uncovered_coordinates(*gens, o.dim());
    add(name + "_spanning", missing.empty(), missing.empty() ? "" : "coordinate " + std::to_string(missing.front()));
  };
  side_checks("p", p);
  side_checks("q", q);

  if (p && q) {
    if (o.dim() <= kMaxPolarDim) {
      auto polar_matches = [&](const Generators& from, const Generators& to) -> std::string {
        PolarResult r = polar_of_points(from, o.dim());
        if (!r.bounded) return "polar unbounded on coordinate " + std::to_string(r.unbounded_coordinates.front());
        if (r.generators != to) {
          for (const auto& g : r.generators)
            if (std::find(to.begin(), to.end(), g) == to.end()) return "polar vertex " + to_string(g) + " missing";
          for (const auto& g : to)
            if (std::find(r.generators.begin(), r.generators.end(), g) == r.generators.end())
              return "generator " + to_string(g) + " is not a polar vertex";
        }
        return {};
      };
      std::string w = polar_matches(*p, *q);
      add("polar_p_is_q", w.empty(), w);
      w = polar_matches(*q, *p);
      add("polar_q_is_p", w.empty(), w);
    } else {
      // Pairing bounds and tightness: every generator of a polar pair pairs
      // to at most 1 with the other side and reaches 1 somewhere.
      std::string w;
      for (const auto& a : *p) {
        Rational best = 0;
        for (const auto& b : *q) {
          Rational v = dot(a, b);
          if (v > 1 && w.empty()) w = "<" + to_string(b) + "," + to_string(a) + "> = " + to_string(v);
          if (v > best) best = v;
        }
        if (best != 1 && w.empty()) w = "primal generator " + to_string(a) + " is not tight";
      }
      for (const auto& b : *q) {
        Rational best = 0;
        for (const auto& a : *p) best = std::max(best, Rational(dot(a, b)));
        if (best != 1 && w.empty()) w = "dual generator " + to_string(b) + " is not tight";
      }
      add("pairing_bounds", w.empty(), w);
    }
    auto nondegenerate = [&](const Generators& side, const Generators& other) -> std::string {
      std::map<VecQ, VecQ> seen;
      // The other ball is downward closed, so it also holds a multiple of
      // every coordinate functional it covers.
      std::vector<bool> covered(o.dim(), false);
      for (const auto& h : other)
        for (std::size_t i = 0; i < h.size(); ++i)
          if (sgn(h[i]) > 0) covered[i] = true;
      for (const auto& g : side) {
        VecQ profile;
        for (const auto& h : other) profile.push_back(dot(g, h));
        for (std::size_t i = 0; i < g.size(); ++i)
          if (covered[i]) profile.push_back(g[i]);
        auto [it, inserted] = seen.emplace(profile, g);
        if (!inserted) return to_string(it->second) + " and " + to_string(g) + " pair identically";
      }
      return {};
    };
    std::string w = nondegenerate(*p, *q);
    add("p_pairing_nondegenerate", w.empty(), w);
    w = nondegenerate(*q, *p);
    add("q_pairing_nondegenerate", w.empty(), w);
  }
  return report;
}

bool objects_equal(const ConeObject& a, const ConeObject& b) {
  if (a.dim() != b.dim() || a.backend() != b.backend()) return false;
  if (a.node_ptr() == b.node_ptr()) return true;
  if (a.structure() == Structure::kDual && b.structure() == Structure::kDual)
    return objects_equal(a.operand(0), b.operand(0));
  auto strip = [](ConeObject o, bool& flipped) {
    flipped = false;
    while (o.structure() == Structure::kDual) {
      flipped = !flipped;
      o = o.operand(0);
    }
    return o;
  };
  bool fa = false, fb = false;
  ConeObject ca = strip(a, fa), cb = strip(b, fb);
  auto exotic = [](const ConeObject& o) {
    return o.structure() == Structure::kBang || o.structure() == Structure::kSpectral;
  };
  if (exotic(ca) || exotic(cb)) {
    if (fa != fb || ca.structure() != cb.structure() || ca.degree() != cb.degree()) return false;
    if (ca.structure() == Structure::kSpectral) return true;
    return objects_equal(ca.operand(0), cb.operand(0));
  }
  const Generators* pa = a.p_ball_gens();
  const Generators* pb = b.p_ball_gens();
  if (pa && pb) return *pa == *pb;
  const Generators* qa = a.q_ball_gens();
  const Generators* qb = b.q_ball_gens();
  if (qa && qb) return *qa == *qb;
  throw CapabilityError("cannot compare '" + a.label() + "' and '" + b.label() + "': no common explicit generator side");
}

bool structurally_equal(const ConeObject& a, const ConeObject& b) {
  if (a.node_ptr() == b.node_ptr()) return true;
  if (a.structure() != b.structure() || a.dim() != b.dim() || a.degree() != b.degree() ||
      a.backend() != b.backend() || a.operand_count() != b.operand_count())
    return false;
  switch (a.structure()) {
    case Structure::kAtom:
    case Structure::kUnit:
    case Structure::kZero:
      return objects_equal(a, b);
    case Structure::kSpectral:
      return true;
    case Structure::kProject:
      if (a.node().selection != b.node().selection) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.operand_count(); ++i)
    if (!structurally_equal(a.operand(i), b.operand(i))) return false;
  return true;
}

}  // namespace ccones
