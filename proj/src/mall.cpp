#include "ccones/mall.hpp"

#include <algorithm>

namespace ccones {
namespace {

void require_constructive(const ConeObject& o, const char* what) {
  if (o.backend() == Backend::kSpectralFloat)
    throw CapabilityError(std::string(what) + ": spectral object '" + o.label() + "' is not supported by constructive connectives");
}

bool compatible(const ConeObject& a, const ConeObject& b) {
  if (a.dim() != b.dim()) return false;
  if (structurally_equal(a, b)) return true;
  return a.dim() <= 64 && objects_equal(a, b);
}

}  // namespace

Morphism::Morphism(ConeObject source, ConeObject target, MatQ matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)),
      cache_(std::make_shared<NormCache>()) {
  require_constructive(source_, "Morphism");
  require_constructive(target_, "Morphism");
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw DimensionError("morphism matrix is " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                         ", expected " + std::to_string(target_.dim()) + "x" + std::to_string(source_.dim()));
  for (std::size_t r = 0; r < matrix_.rows(); ++r)
    for (std::size_t c = 0; c < matrix_.cols(); ++c)
      if (sgn(matrix_(r, c)) < 0)
        throw DomainError("morphism is not positive: entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " +
                              to_string(matrix_(r, c)),
                          {to_string(unit_vector(source_.dim(), c))});
}

const Rational& Morphism::norm() const {
  std::call_once(cache_->once, [this] {
    if (!source_.has_exact_norms() || !target_.has_exact_norms())
      throw CapabilityError("morphism norm between '" + source_.label() + "' and '" + target_.label() +
                            "' is not polyhedral");
    Rational best = 0;
    if (source_.dim() == 0 || target_.dim() == 0) {
      cache_->value = 0;
      return;
    }
    const Generators* p = source_.p_ball_gens();
    const Generators* q = target_.q_ball_gens();
    if (p && q) {
      for (const auto& u : *p) {
        VecQ image = matrix_.apply(u);
        for (const auto& phi : *q) best = std::max(best, Rational(dot(phi, image)));
      }
    } else if (p) {
      for (const auto& u : *p) best = std::max(best, norm_primal(target_, matrix_.apply(u)));
    } else if (q) {
      MatQ t = matrix_.transpose();
      for (const auto& phi : *q) best = std::max(best, norm_dual(source_, t.apply(phi)));
    } else {
      throw CapabilityError("morphism norm: neither source primal nor target dual generators are available");
    }
    cache_->value = best;
  });
  return cache_->value;
}

bool morphisms_equal(const Morphism& f, const Morphism& g) {
  return f.matrix() == g.matrix() && compatible(f.source(), g.source()) && compatible(f.target(), g.target());
}

ConeObject tensor_obj(const ConeObject& a, const ConeObject& b) {
  require_constructive(a, "tensor");
  require_constructive(b, "tensor");
  auto node = std::make_shared<detail::Node>();
  node->dim = a.dim() * b.dim();
  node->label = "(" + a.label() + " * " + b.label() + ")";
  node->structure = Structure::kTensor;
  node->operands = {a.node_ptr(), b.node_ptr()};
  node->make_p = [a, b]() -> std::optional<Generators> {
    const Generators& ga = a.require_p_gens();
    const Generators& gb = b.require_p_gens();
    Generators k;
    k.reserve(ga.size() * gb.size());
    for (const auto& u : ga)
      for (const auto& v : gb) k.push_back(kronecker(u, v));
    return reduce_generators(k);
  };
  node->make_layout = [a, b] {
    std::vector<std::string> out;
    for (const auto& x : a.layout())
      for (const auto& y : b.layout()) out.push_back("(" + x + "*" + y + ")");
    return out;
  };
  return ConeObject::from_node(std::move(node));
}

ConeObject cotensor_obj(const ConeObject& a, const ConeObject& b) {
  return dual_object(tensor_obj(dual_object(a), dual_object(b)));
}

ConeObject hom_obj(const ConeObject& a, const ConeObject& b) { return cotensor_obj(dual_object(a), b); }

ConeObject product_obj(const ConeObject& a, const ConeObject& b) {
  require_constructive(a, "product");
  require_constructive(b, "product");
  auto node = std::make_shared<detail::Node>();
  node->dim = a.dim() + b.dim();
  node->label = "(" + a.label() + " & " + b.label() + ")";
  node->structure = Structure::kProduct;
  node->operands = {a.node_ptr(), b.node_ptr()};
  const std::size_t da = a.dim(), db = b.dim();
  node->make_p = [a, b, da, db]() -> std::optional<Generators> {
    Generators ga = a.require_p_gens(), gb = b.require_p_gens();
    ga.push_back(zeros(da));
    gb.push_back(zeros(db));
    Generators out;
    for (const auto& u : ga)
      for (const auto& v : gb) {
        VecQ w = u;
        w.insert(w.end(), v.begin(), v.end());
        out.push_back(std::move(w));
      }
    return reduce_generators(out);
  };
  node->make_q = [a, b, da, db]() -> std::optional<Generators> {
    const Generators* qa = a.q_ball_gens();
    const Generators* qb = b.q_ball_gens();
    if (!qa || !qb) return std::nullopt;
    Generators out;
    for (const auto& phi : *qa) {
      VecQ w = phi;
      w.resize(da + db);
      out.push_back(std::move(w));
    }
    for (const auto& psi : *qb) {
      VecQ w(da);
      w.insert(w.end(), psi.begin(), psi.end());
      out.push_back(std::move(w));
    }
    return reduce_generators(out);
  };
  node->make_layout = [a, b] {
    std::vector<std::string> out;
    for (const auto& x : a.layout()) out.push_back("1." + x);
    for (const auto& y : b.layout()) out.push_back("2." + y);
    return out;
  };
  return ConeObject::from_node(std::move(node));
}

ConeObject coproduct_obj(const ConeObject& a, const ConeObject& b) {
  return dual_object(product_obj(dual_object(a), dual_object(b)));
}

ConeObject project_obj(const ConeObject& a, std::vector<std::size_t> coords, std::string label) {
  require_constructive(a, "project");
  for (std::size_t c : coords)
    if (c >= a.dim()) throw DimensionError("project_obj: coordinate out of range");
  auto node = std::make_shared<detail::Node>();
  node->dim = coords.size();
  node->label = std::move(label);
  node->structure = Structure::kProject;
  node->operands = {a.node_ptr()};
  node->selection = coords;
  node->make_p = [a, coords]() -> std::optional<Generators> {
    Generators out;
    for (const auto& g : a.require_p_gens()) {
      VecQ r;
      r.reserve(coords.size());
      for (std::size_t c : coords) r.push_back(g[c]);
      out.push_back(std::move(r));
    }
    return reduce_generators(out);
  };
  node->make_layout = [a, coords] {
    std::vector<std::string> out;
    for (std::size_t c : coords) out.push_back(a.layout()[c]);
    return out;
  };
  return ConeObject::from_node(std::move(node));
}

std::optional<std::pair<ConeObject, ConeObject>> tensor_factors(const ConeObject& o) {
  if (o.structure() != Structure::kTensor) return std::nullopt;
  return std::make_pair(o.operand(0), o.operand(1));
}

std::optional<std::pair<ConeObject, ConeObject>> hom_factors(const ConeObject& o) {
  if (o.structure() != Structure::kDual) return std::nullopt;
  auto inner = tensor_factors(o.operand(0));
  if (!inner) return std::nullopt;
  return std::make_pair(inner->first, dual_object(inner->second));
}

std::optional<std::pair<ConeObject, ConeObject>> product_factors(const ConeObject& o) {
  if (o.structure() != Structure::kProduct) return std::nullopt;
  return std::make_pair(o.operand(0), o.operand(1));
}

std::optional<std::pair<ConeObject, ConeObject>> coproduct_factors(const ConeObject& o) {
  if (o.structure() != Structure::kDual) return std::nullopt;
  auto inner = product_factors(o.operand(0));
  if (!inner) return std::nullopt;
  return std::make_pair(dual_object(inner->first), dual_object(inner->second));
}

Morphism identity(const ConeObject& a) { return Morphism(a, a, MatQ::identity(a.dim())); }

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!compatible(f.target(), g.source()))
    throw DimensionError("compose: target '" + f.target().label() + "' does not match source '" + g.source().label() + "'");
  return Morphism(f.source(), g.target(), g.matrix() * f.matrix());
}

Morphism adjoint(const Morphism& f) {
  return Morphism(dual_object(f.target()), dual_object(f.source()), f.matrix().transpose());
}

Morphism tensor_mor(const Morphism& f, const Morphism& g) {
  return Morphism(tensor_obj(f.source(), g.source()), tensor_obj(f.target(), g.target()),
                  kronecker(f.matrix(), g.matrix()));
}

Morphism par_mor(const Morphism& f, const Morphism& g) {
  return Morphism(cotensor_obj(f.source(), g.source()), cotensor_obj(f.target(), g.target()),
                  kronecker(f.matrix(), g.matrix()));
}

Morphism curry(const Morphism& f) {
  auto factors = tensor_factors(f.source());
  if (!factors) throw DimensionError("curry: source '" + f.source().label() + "' is not a tensor");
  const auto& [a, b] = *factors;
  const ConeObject& c = f.target();
  const std::size_t da = a.dim(), db = b.dim(), dc = c.dim();
  MatQ g(db * dc, da);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < dc; ++k) g(j * dc + k, i) = f.matrix()(k, i * db + j);
  return Morphism(a, hom_obj(b, c), std::move(g));
}

Morphism uncurry(const Morphism& g) {
  auto factors = hom_factors(g.target());
  if (!factors) throw DimensionError("uncurry: target '" + g.target().label() + "' is not an internal hom");
  const auto& [b, c] = *factors;
  const ConeObject& a = g.source();
  const std::size_t da = a.dim(), db = b.dim(), dc = c.dim();
  MatQ f(dc, da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < dc; ++k) f(k, i * db + j) = g.matrix()(j * dc + k, i);
  return Morphism(tensor_obj(a, b), c, std::move(f));
}

Morphism assoc(const ConeObject& a, const ConeObject& b, const ConeObject& c) {
  const std::size_t n = a.dim() * b.dim() * c.dim();
  return Morphism(tensor_obj(tensor_obj(a, b), c), tensor_obj(a, tensor_obj(b, c)), MatQ::identity(n));
}

Morphism assoc_inv(const ConeObject& a, const ConeObject& b, const ConeObject& c) {
  const std::size_t n = a.dim() * b.dim() * c.dim();
  return Morphism(tensor_obj(a, tensor_obj(b, c)), tensor_obj(tensor_obj(a, b), c), MatQ::identity(n));
}

Morphism sym(const ConeObject& a, const ConeObject& b) {
  const std::size_t da = a.dim(), db = b.dim();
  MatQ m(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) m(j * da + i, i * db + j) = 1;
  return Morphism(tensor_obj(a, b), tensor_obj(b, a), std::move(m));
}

Morphism left_unitor(const ConeObject& a) {
  return Morphism(tensor_obj(unit_object(), a), a, MatQ::identity(a.dim()));
}
Morphism left_unitor_inv(const ConeObject& a) {
  return Morphism(a, tensor_obj(unit_object(), a), MatQ::identity(a.dim()));
}
Morphism right_unitor(const ConeObject& a) {
  return Morphism(tensor_obj(a, unit_object()), a, MatQ::identity(a.dim()));
}
Morphism right_unitor_inv(const ConeObject& a) {
  return Morphism(a, tensor_obj(a, unit_object()), MatQ::identity(a.dim()));
}

Morphism proj1(const ConeObject& a, const ConeObject& b) {
  MatQ m(a.dim(), a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m(i, i) = 1;
  return Morphism(product_obj(a, b), a, std::move(m));
}

Morphism proj2(const ConeObject& a, const ConeObject& b) {
  MatQ m(b.dim(), a.dim() + b.dim());
  for (std::size_t j = 0; j < b.dim(); ++j) m(j, a.dim() + j) = 1;
  return Morphism(product_obj(a, b), b, std::move(m));
}

Morphism pair(const Morphism& f, const Morphism& g) {
  if (!compatible(f.source(), g.source())) throw DimensionError("pair: sources differ");
  const std::size_t da = f.target().dim(), db = g.target().dim();
  MatQ m(da + db, f.source().dim());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t i = 0; i < da; ++i) m(i, c) = f.matrix()(i, c);
    for (std::size_t j = 0; j < db; ++j) m(da + j, c) = g.matrix()(j, c);
  }
  return Morphism(f.source(), product_obj(f.target(), g.target()), std::move(m));
}

Morphism inj1(const ConeObject& a, const ConeObject& b) {
  MatQ m(a.dim() + b.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m(i, i) = 1;
  return Morphism(a, coproduct_obj(a, b), std::move(m));
}

Morphism inj2(const ConeObject& a, const ConeObject& b) {
  MatQ m(a.dim() + b.dim(), b.dim());
  for (std::size_t j = 0; j < b.dim(); ++j) m(a.dim() + j, j) = 1;
  return Morphism(b, coproduct_obj(a, b), std::move(m));
}

Morphism copair(const Morphism& f, const Morphism& g) {
  if (!compatible(f.target(), g.target())) throw DimensionError("copair: targets differ");
  const std::size_t da = f.source().dim(), db = g.source().dim();
  MatQ m(f.target().dim(), da + db);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t i = 0; i < da; ++i) m(r, i) = f.matrix()(r, i);
    for (std::size_t j = 0; j < db; ++j) m(r, da + j) = g.matrix()(r, j);
  }
  return Morphism(coproduct_obj(f.source(), g.source()), f.target(), std::move(m));
}

Morphism eval(const ConeObject& a, const ConeObject& b) {
  const std::size_t da = a.dim(), db = b.dim();
  MatQ m(db, da * db * da);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) m(j, (i * db + j) * da + i) = 1;
  return Morphism(tensor_obj(hom_obj(a, b), a), b, std::move(m));
}

Morphism structural(const std::string& name, const std::vector<ConeObject>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw DimensionError("structural '" + name + "' takes " + std::to_string(n) + " objects, got " +
                           std::to_string(args.size()));
  };
  if (name == "assoc") {
    need(3);
    return assoc(args[0], args[1], args[2]);
  }
  if (name == "sym") {
    need(2);
    return sym(args[0], args[1]);
  }
  if (name == "lunit") {
    need(1);
    return left_unitor(args[0]);
  }
  if (name == "runit") {
    need(1);
    return right_unitor(args[0]);
  }
  if (name == "proj1") {
    need(2);
    return proj1(args[0], args[1]);
  }
  if (name == "proj2") {
    need(2);
    return proj2(args[0], args[1]);
  }
  if (name == "inj1") {
    need(2);
    return inj1(args[0], args[1]);
  }
  if (name == "inj2") {
    need(2);
    return inj2(args[0], args[1]);
  }
  if (name == "eval") {
    need(2);
    return eval(args[0], args[1]);
  }
  throw DomainError("unknown structural morphism '" + name + "'");
}

}  // namespace ccones
