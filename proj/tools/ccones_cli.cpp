#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "ccones/backends.hpp"
#include "ccones/checks.hpp"
#include "ccones/formula.hpp"
#include "ccones/serialize.hpp"

using namespace ccones;

namespace {

constexpr int kExitFailure = 1;  // a check failed
constexpr int kExitError = 2;    // bad input or unsupported request

struct Options {
  std::string env_path;
  std::string formula;
  std::string object;
  std::string vector_path;
  std::string side = "primal";
  std::string out = "json";
  std::string suite = "all";
  std::size_t trunc = kDefaultTruncation;
  std::uint64_t seed = 42;
  std::size_t trials = 10;
};

void emit(const Json& j, const std::string& out) {
  if (out == "text") {
    for (const auto& [k, v] : j.items()) {
      if (k == "schema") continue;
      std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

Json error_json(const std::string& command, const std::string& type, const std::string& message,
                const std::vector<std::string>& witness = {}) {
  Json e{{"type", type}, {"message", message}};
  if (!witness.empty()) e["witness"] = witness;
  return Json{{"schema", kSchemaVersion}, {"command", command}, {"error", e}};
}

int cmd_parse(const Options& o) {
  FormulaPtr f = parse_formula(o.formula);
  FormulaPtr n = normalize_duals(f);
  emit(Json{{"schema", kSchemaVersion},
            {"command", "parse"},
            {"input", o.formula},
            {"tree", to_tree_string(*f)},
            {"infix", to_infix_string(*f)},
            {"normalized", to_tree_string(*n)},
            {"ast", to_json(*f)}},
       o.out);
  return 0;
}

int cmd_interpret(const Options& o) {
  Environment env = environment_from_json(read_json_file(o.env_path));
  FormulaPtr f = parse_formula(o.formula);
  ConeObject obj = interpret(*f, env, o.trunc);
  emit(Json{{"schema", kSchemaVersion},
            {"command", "interpret"},
            {"formula", to_tree_string(*f)},
            {"truncation", o.trunc},
            {"object", describe_object(obj)}},
       o.out);
  return 0;
}

// The vector file is either a bare array or {"coords": [...], "side": ...}.
int cmd_norm(const Options& o) {
  Environment env = environment_from_json(read_json_file(o.env_path));
  ConeObject obj = interpret(*parse_formula(o.object), env, o.trunc);
  Json v = read_json_file(o.vector_path);
  std::string side_name = o.side;
  Json coords = v;
  if (v.is_object()) {
    coords = v.at("coords");
    side_name = v.value("side", side_name);
  }
  if (side_name != "primal" && side_name != "dual") throw DomainError("side must be 'primal' or 'dual'");
  const Side side = side_name == "primal" ? Side::kPrimal : Side::kDual;
  Json out{{"schema", kSchemaVersion}, {"command", "norm"}, {"object", obj.label()}, {"side", side_name}};
  if (obj.backend() == Backend::kSpectralFloat) {
    std::vector<double> packed;
    for (const auto& x : coords) packed.push_back(to_double(rational_from_json(x)));
    out["norm"] = Json{{"value", format_double(spectral_norm(obj, side, packed))},
                       {"method", side == Side::kPrimal ? "eigenvalue sum (trace norm)" : "largest eigenvalue"},
                       {"tolerance", format_double(kPsdTolerance)}};
  } else {
    VecQ x = vector_from_json(coords);
    if (x.size() != obj.dim())
      throw DimensionError("vector has " + std::to_string(x.size()) + " coordinates, object '" + obj.label() +
                           "' has " + std::to_string(obj.dim()));
    out["vector"] = to_json(x);
    out["norm"] = to_json(norm_bracket(obj, side, x));
  }
  emit(out, o.out);
  return 0;
}

int cmd_check(const Options& o) {
  Json report = check_report(run_suite(o.suite, o.seed, o.trials), o.seed, o.trials);
  if (o.out == "text") {
    for (const auto& s : report["suites"])
      for (const auto& c : s["checks"])
        std::cout << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << s["suite"].get<std::string>() << '/'
                  << c["name"].get<std::string>() << '\n';
  } else {
    std::cout << report.dump(2) << '\n';
  }
  return report["passed"].get<bool>() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite-dimensional coherent cones: formulas, norms and law checks"};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* parse = app.add_subcommand("parse", "Parse a formula and print its tree");
  parse->add_option("--formula", o.formula, "Formula text")->required();
  add_out(parse);

  auto* interp = app.add_subcommand("interpret", "Build the object denoted by a formula");
  interp->add_option("--env", o.env_path, "Environment JSON file")->required();
  interp->add_option("--formula", o.formula, "Formula text")->required();
  interp->add_option("--trunc", o.trunc, "Truncation degree of exponentials");
  add_out(interp);

  auto* norm = app.add_subcommand("norm", "Norm of a vector in an interpreted object");
  norm->add_option("--env", o.env_path, "Environment JSON file")->required();
  norm->add_option("--object", o.object, "Formula for the object")->required();
  norm->add_option("--vector", o.vector_path, "Vector JSON file")->required();
  norm->add_option("--side", o.side, "primal or dual")->check(CLI::IsMember({"primal", "dual"}));
  norm->add_option("--trunc", o.trunc, "Truncation degree of exponentials");
  add_out(norm);

  auto* check = app.add_subcommand("check", "Run law checks on sampled inputs");
  check->add_option("--suite", o.suite, "Suite")->check(CLI::IsMember({"mall", "exp", "pcs", "qcs", "all"}));
  check->add_option("--seed", o.seed, "Random seed");
  check->add_option("--trials", o.trials, "Samples per check");
  add_out(check);

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "parse") return cmd_parse(o);
    if (command == "interpret") return cmd_interpret(o);
    if (command == "norm") return cmd_norm(o);
    return cmd_check(o);
  } catch (const ParseError& e) {
    Json j = error_json(command, "parse", e.what());
    j["error"]["position"] = e.position();
    emit(j, o.out);
  } catch (const DomainError& e) {
    emit(error_json(command, "domain", e.what(), e.witness()), o.out);
  } catch (const DimensionError& e) {
    emit(error_json(command, "dimension", e.what()), o.out);
  } catch (const CapabilityError& e) {
    emit(error_json(command, "capability", e.what()), o.out);
  } catch (const std::exception& e) {
    emit(error_json(command, "internal", e.what()), o.out);
  }
  return kExitError;
}
