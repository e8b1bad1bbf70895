#include "ccones/serialize.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>

#include "ccones/backends.hpp"

namespace ccones {
namespace {

const char* structure_name(Structure s) {
  switch (s) {
    case Structure::kAtom: return "atom";
    case Structure::kUnit: return "unit";
    case Structure::kZero: return "zero";
    case Structure::kDual: return "dual";
    case Structure::kTensor: return "tensor";
    case Structure::kProduct: return "product";
    case Structure::kSymPower: return "sym_power";
    case Structure::kBang: return "bang";
    case Structure::kProject: return "project";
    case Structure::kSpectral: return "spectral";
  }
  return "?";
}

bool contains_exponential(const detail::Node& n) {
  if (n.structure == Structure::kBang) return true;
  for (const auto& c : n.operands)
    if (contains_exponential(*c)) return true;
  return false;
}

std::string kind_key(FormulaKind k) {
  std::string s = kind_name(k);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

constexpr std::size_t kMaxReportedDim = 16;

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const VecQ& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const Generators& g) {
  Json a = Json::array();
  for (const auto& v : g) a.push_back(to_json(v));
  return a;
}

Json to_json(const MatQ& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
  return a;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.dump());
  if (j.is_number_float()) return parse_rational(j.dump());
  throw DomainError("expected a rational (string or number), got " + j.dump());
}

VecQ vector_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected an array of rationals, got " + j.dump());
  VecQ v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Generators generators_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected an array of vectors, got " + j.dump());
  Generators g;
  for (const auto& v : j) g.push_back(vector_from_json(v));
  return g;
}

MatQ matrix_from_json(const Json& j) {
  Generators rows = generators_from_json(j);
  if (rows.empty()) return MatQ();
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw DimensionError("matrix rows have different lengths");
  return MatQ::from_rows(rows, rows.front().size());
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

Json to_json(const NormBracket& b) {
  return Json{{"lower", to_json(b.lower)}, {"upper", to_json(b.upper)}, {"exact", b.exact()}, {"method", b.method}};
}

Json to_json(const Bracket& b) {
  return Json{{"lower", to_json(b.lower)},
              {"upper", to_json(b.upper)},
              {"exact", b.exact()},
              {"argmax", to_json(b.argmax)},
              {"method", b.method}};
}

Json to_json(const Formula& f) {
  Json j{{"kind", kind_key(f.kind)}};
  if (f.kind == FormulaKind::kAtom) j["name"] = f.name;
  if (!f.children.empty()) {
    Json ch = Json::array();
    for (const auto& c : f.children) ch.push_back(to_json(*c));
    j["children"] = ch;
  }
  return j;
}

Json to_json(const GradedSeries& s) {
  Json grades = Json::array();
  for (std::size_t n = 0; n <= s.truncation; ++n) grades.push_back(to_json(s.grade(n)));
  return Json{{"base", s.base.label()}, {"truncation", s.truncation}, {"grades", grades}};
}

Json to_json(const AnalyticMap& f) {
  Json grades = Json::array();
  for (std::size_t n = 0; n <= f.truncation(); ++n) grades.push_back(to_json(f.grade(n)));
  return Json{{"source", f.source().label()},
              {"target", f.target().label()},
              {"truncation", f.truncation()},
              {"grades", grades}};
}

Json describe_object(const ConeObject& o) {
  Json j{{"label", o.label()},
         {"dim", o.dim()},
         {"backend", to_string(o.backend())},
         {"structure", structure_name(o.structure())}};
  if (o.backend() == Backend::kSpectralFloat) {
    ConeObject base = o;
    while (base.structure() == Structure::kDual) base = base.operand(0);
    j["matrix_size"] = base.degree();
    j["norms"] = "float (trace norm / operator norm)";
    j["layout"] = o.layout();
    return j;
  }
  if (contains_exponential(o.node())) {
    const detail::Node* n = &o.node();
    bool dual = false;
    while (n->structure == Structure::kDual) {
      n = n->operands[0].get();
      dual = !dual;
    }
    if (n->structure == Structure::kBang) {
      GradedBasis b(n->operands[0]->dim, n->degree);
      Json grades = Json::array();
      for (std::size_t g = 0; g <= n->degree; ++g) grades.push_back(b.grade(g).size());
      j["exponential"] = Json{{"kind", dual ? "whynot" : "bang"}, {"truncation", n->degree}, {"grade_dims", grades}};
    }
    j["norms"] = "oracle bracket";
    j["layout"] = o.layout();
    return j;
  }
  j["norms"] = "exact";
  j["layout"] = o.layout();
  if (o.dim() <= kMaxReportedDim) {
    try {
      const Generators* p = o.p_ball_gens();
      const Generators* q = o.q_ball_gens();
      j["p_gens"] = p ? to_json(*p) : Json("implicit");
      j["q_gens"] = q ? to_json(*q) : Json("implicit");
    } catch (const CapabilityError&) {
      j["p_gens"] = "implicit";
      j["q_gens"] = "implicit";
    }
  }
  return j;
}

Environment environment_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_object())
    throw DomainError("environment must be an object with an \"atoms\" object");
  Environment env;
  for (const auto& [name, spec] : j["atoms"].items()) {
    const std::string kind = spec.value("kind", "");
    if (kind == "pcs") {
      const std::size_t dim = spec.at("dim").get<std::size_t>();
      env.emplace(name, pcs_object(generators_from_json(spec.at("ball_gens")), dim, name));
    } else if (kind == "polyhedral") {
      std::optional<Generators> p, q;
      if (spec.contains("p_gens")) p = generators_from_json(spec["p_gens"]);
      if (spec.contains("q_gens")) q = generators_from_json(spec["q_gens"]);
      if (!p && !q) throw DomainError("atom '" + name + "' needs p_gens or q_gens");
      std::size_t dim = spec.contains("dim") ? spec["dim"].get<std::size_t>()
                        : p && !p->empty()   ? p->front().size()
                        : q && !q->empty()   ? q->front().size()
                                             : 0;
      env.emplace(name, make_polyhedral_object(dim, std::move(p), std::move(q), name));
    } else if (kind == "qcs") {
      env.emplace(name, qcs_object(spec.at("n").get<std::size_t>(), name));
    } else {
      throw DomainError("atom '" + name + "' has unknown kind '" + kind + "'");
    }
  }
  return env;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace ccones
