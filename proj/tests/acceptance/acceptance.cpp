// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Sample counts, seeds and tolerances are pinned below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "ccones/backends.hpp"
#include "ccones/exponential.hpp"
#include "ccones/sampling.hpp"

using namespace ccones;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr double kNormDualityBudgetSeconds = 10.0;
constexpr double kOracleRelTolerance = 1e-6;
constexpr double kTraceTolerance = 1e-9;     // same as kPsdTolerance
constexpr double kSpectralTolerance = 1e-8;  // same as kDualityTolerance
constexpr std::size_t kTruncation = 3;

struct Outcome {
  bool passed;
  std::string summary;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.passed) ++failures;
  std::cout << (o.passed ? "PASS" : "FAIL") << " [" << id << "] " << title << ": " << o.summary << std::endl;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

VecQ concat(const VecQ& a, const VecQ& b) {
  VecQ out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Outcome norm_duality() {
  Sampler s(kSeed + 1);
  const auto start = std::chrono::steady_clock::now();
  std::size_t mismatches = 0, comparisons = 0;
  for (int t = 0; t < 100; ++t) {
    ConeObject o = s.polyhedral_object(s.between(1, 4), 6, "a");
    for (int k = 0; k < 3; ++k) {
      VecQ x = s.nonnegative_vector(o.dim(), 7), phi = s.nonnegative_vector(o.dim(), 7);
      mismatches += gauge_norm(o, Side::kPrimal, x) != sup_pairing_norm(o, Side::kPrimal, x);
      mismatches += gauge_norm(o, Side::kDual, phi) != sup_pairing_norm(o, Side::kDual, phi);
      comparisons += 2;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {mismatches == 0 && secs < kNormDualityBudgetSeconds,
          std::to_string(comparisons) + " exact comparisons on 100 objects, " + std::to_string(mismatches) +
              " mismatches, " + fmt(secs) + " s (budget " + fmt(kNormDualityBudgetSeconds) + " s)"};
}

Outcome bipolar() {
  Sampler s(kSeed + 2);
  std::size_t mismatches = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = s.between(1, 4);
    Generators g = s.spanning_generators(dim, 6);
    Generators pp = polar_of_points(polar_of_points(g, dim).generators, dim).generators;
    mismatches += reduce_generators(pp) != reduce_generators(g);
  }
  return {mismatches == 0, "100 generator sets, " + std::to_string(mismatches) + " mismatches"};
}

Outcome star_autonomy() {
  Sampler s(kSeed + 3);
  std::size_t failures_here = 0;
  for (int t = 0; t < 50; ++t) {
    ConeObject a = s.polyhedral_object(s.between(1, 2), 4, "a");
    ConeObject b = s.polyhedral_object(s.between(1, 2), 4, "b");
    ConeObject c = s.polyhedral_object(s.between(1, 2), 4, "c");
    Morphism f = s.contraction(tensor_obj(a, b), c, 4, Rational(3, 4) * s.fraction(4) + Rational(1, 4));
    Morphism g = curry(f);
    bool ok = uncurry(g).matrix() == f.matrix() && g.norm() == f.norm() && f.norm() <= 1;
    // the other direction of the bijection
    Morphism h = s.contraction(a, hom_obj(b, c));
    ok = ok && curry(uncurry(h)).matrix() == h.matrix() && uncurry(h).norm() == h.norm();
    failures_here += !ok;
  }
  return {failures_here == 0, "50 contractions, both directions, " + std::to_string(failures_here) + " failures"};
}

Outcome additive() {
  Sampler s(kSeed + 4);
  std::size_t failures_here = 0;
  for (int t = 0; t < 50; ++t) {
    ConeObject a = s.polyhedral_object(s.between(1, 3), 5, "a");
    ConeObject b = s.polyhedral_object(s.between(1, 3), 5, "b");
    VecQ u = s.nonnegative_vector(a.dim(), 5), v = s.nonnegative_vector(b.dim(), 5);
    const Rational nu = norm_primal(a, u), nv = norm_primal(b, v);
    const Rational mx = nu < nv ? nv : nu;
    failures_here += norm_primal(product_obj(a, b), concat(u, v)) != mx;
    failures_here += norm_primal(coproduct_obj(a, b), concat(u, v)) != nu + nv;
  }
  const VecQ point{Rational(1), Rational(1)};
  const Rational w = norm_primal(product_obj(unit_object(), unit_object()), point);
  const Rational p = norm_primal(coproduct_obj(unit_object(), unit_object()), point);
  return {failures_here == 0 && w == 1 && p == 2,
          "50 pairs, " + std::to_string(failures_here) + " failures; Bool witness (1,1): with " + to_string(w) +
              ", plus " + to_string(p)};
}

Outcome sandwich() {
  Sampler s(kSeed + 5);
  std::size_t violations = 0, exact = 0;
  double max_ratio = 0, max_certified = 0;
  bool flagged = false;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + (t % 2), dim = 2 + ((t / 2) % 2);
    ConeObject a = s.polyhedral_object(dim, 4, "a");
    VecQ f = s.nonnegative_vector(MultisetBasis(dim, n).size(), 4);
    for (auto& c : f)
      if (s.index(2) == 0) c = 0;
    if (is_zero(f)) f[s.index(f.size())] = 1;
    const Rational old = old_norm(f, a, n);
    const Bracket b = new_norm_bounds(f, a, n);
    const double kn_upper = to_double(polarization_constant(n) * b.upper);
    if (b.lower > old || to_double(old) > kn_upper * (1 + kOracleRelTolerance)) ++violations;
    if (b.exact()) ++exact;
    const double ratio = to_double(old / b.lower), certified = to_double(old / b.upper);
    max_ratio = std::max(max_ratio, ratio);
    max_certified = std::max(max_certified, certified);
    if (ratio > std::pow(2.0, static_cast<double>(n))) flagged = true;
  }
  const VecQ x1x2{Rational(0), Rational(1, 2), Rational(0)};
  const Rational wo = old_norm(x1x2, simplex_pcs(2), 2);
  const Bracket wn = new_norm_bounds(x1x2, simplex_pcs(2), 2);
  const bool worked = wo == Rational(1, 2) && to_double(wn.lower) >= 0.25 - kOracleRelTolerance &&
                      to_double(wn.upper) <= 0.25 * (1 + kOracleRelTolerance);
  return {violations == 0 && worked,
          "50 samples, " + std::to_string(violations) + " violations, " + std::to_string(exact) +
              " exact brackets; max old/new in [" + fmt(max_certified) + ", " + fmt(max_ratio) + "]" +
              (flagged ? ", EXCEEDS 2^n" : ", within 2^n") + "; x1x2 on Bool: old " + to_string(wo) + ", new [" +
              to_string(wn.lower) + ", " + to_string(wn.upper) + "]"};
}

Outcome exponential_iso() {
  Sampler s(kSeed + 6);
  const ConeObject bases[] = {unit_object(), simplex_pcs(2)};
  std::size_t failures_here = 0, samples = 0;
  for (const auto& a : bases)
    for (const auto& b : bases) {
      auto [phi, inv] = exp_iso(a, b, kTruncation);
      failures_here += compose(inv, phi).matrix() != MatQ::identity(phi.source().dim());
      failures_here += compose(phi, inv).matrix() != MatQ::identity(phi.target().dim());
      const auto& sel = phi.target().node().selection;
      const MatQ phi_t = phi.matrix().transpose();
      for (int t = 0; t < 20; ++t) {
        VecQ x = s.ball_point(a), y = s.ball_point(b);
        const VecQ full = kronecker(delta_coords(x, kTruncation), delta_coords(y, kTruncation));
        VecQ split;
        for (std::size_t i : sel) split.push_back(full[i]);
        const VecQ dxy = delta_coords(concat(x, y), kTruncation);
        const VecQ f = s.nonnegative_vector(phi.target().dim(), 6);
        // <Phi* f, delta_(x,y)> = <f, delta_x (x) delta_y>
        failures_here += dot(phi_t.apply(f), dxy) != dot(f, split);
        ++samples;
      }
    }
  return {failures_here == 0, "4 base pairs at N=3, " + std::to_string(samples) + " sampled (x,y), " +
                                  std::to_string(failures_here) + " failures"};
}

Outcome monad_laws() {
  std::size_t failures_here = 0, checks = 0;
  for (const ConeObject& a : {unit_object(), simplex_pcs(2), cube_pcs(2)}) {
    ConeObject wa = whynot_obj(a, kTruncation);
    const MatQ id = MatQ::identity(wa.dim());
    Morphism m = diag_mult(a, kTruncation), e = monoid_unit(a, kTruncation), iw = identity(wa);
    failures_here += compose(mu(a, kTruncation), eta(wa, kTruncation)).matrix() != id;
    failures_here += compose(mu(a, kTruncation), whynot_mor(eta(a, kTruncation), kTruncation)).matrix() != id;
    failures_here += compose(m, par_mor(m, iw)).matrix() != compose(m, par_mor(iw, m)).matrix();
    failures_here += compose(m, par_mor(e, iw)).matrix() != id;
    failures_here += compose(m, par_mor(iw, e)).matrix() != id;
    checks += 5;
  }
  return {failures_here == 0, std::to_string(checks) + " identities (mu.eta, mu.?eta, diag assoc, two unit laws) on 3 bases at N=3, " +
                                  std::to_string(failures_here) + " failures"};
}

Outcome composition() {
  Sampler s(kSeed + 8);
  const ConeObject one = unit_object();
  const Polynomial t = Polynomial::variable(1, 0);
  AnalyticMap f = AnalyticMap::from_polynomials(one, one, 2, {t.times(t)});
  AnalyticMap g = AnalyticMap::from_polynomials(one, one, 2, {t + t.times(t)});
  const bool n4 = analytic_compose(g, f, 4).polynomials()[0] == t.times(t) + t.times(t).times(t.times(t));
  const bool n3 = analytic_compose(g, f, 3).polynomials()[0] == t.times(t);
  std::size_t violations = 0;
  for (int k = 0; k < 20; ++k) {
    const VecQ x{s.fraction(50)};
    Rational prev = 0;
    for (std::size_t n = 0; n <= 6; ++n) {
      const Rational v = analytic_eval(analytic_compose(g, f, n), x)[0];
      violations += v < prev;
      prev = v;
    }
    const Rational y = x[0] * x[0];
    violations += prev != y + y * y;
  }
  return {n4 && n3 && violations == 0, std::string("N=4 gives t^2+t^4: ") + (n4 ? "yes" : "no") +
                                           ", N=3 gives t^2: " + (n3 ? "yes" : "no") + "; 20 points, " +
                                           std::to_string(violations) + " monotonicity violations"};
}

Outcome pcs_round_trip() {
  Sampler s(kSeed + 9);
  std::size_t failures_here = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t da = s.between(1, 3), db = s.between(1, 3);
    ConeObject a = pcs_object(s.spanning_generators(da, 4), da, "a");
    ConeObject b = pcs_object(s.spanning_generators(db, 4), db, "b");
    const MatQ u = morphism_to_pcs_matrix(s.contraction(a, b));
    PcsMorphism pm = pcs_matrix_to_morphism(u, a, b);
    failures_here += !(morphism_to_pcs_matrix(pm.morphism) == u && pm.contraction);
  }
  return {failures_here == 0, "50 contraction matrices, " + std::to_string(failures_here) + " failures"};
}

Outcome spectral() {
  Sampler s(kSeed + 10);
  double trace_gap = 0, effect_gap = 0, op_gap = 0;
  for (int t = 0; t < 100; ++t) {
    MatD m = s.psd_matrix(s.between(1, 8));
    trace_gap = std::max(trace_gap, std::abs(qcs_trace_norm(m) - m.trace()));
    SpectralDualityCheck c = spectral_duality_check(m);
    effect_gap = std::max(effect_gap, c.trace_gap);
    op_gap = std::max(op_gap, c.op_gap);
  }
  return {trace_gap <= kTraceTolerance && effect_gap <= kSpectralTolerance && op_gap <= kSpectralTolerance,
          "100 PSD matrices, max gaps: trace " + fmt(trace_gap) + " (tol " + fmt(kTraceTolerance) + "), effects " +
              fmt(effect_gap) + ", operator " + fmt(op_gap) + " (tol " + fmt(kSpectralTolerance) + ")"};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli_goldens() {
  const std::string cli = CCONES_CLI_PATH;
  const std::string env = std::string(CCONES_ENV_DIR) + "/basic.json";
  const std::pair<const char*, std::string> cases[] = {
      {"parse_lollipop", "parse --formula '!a * b -o c'"},
      {"interpret_bang", "interpret --env '" + env + "' --formula '!(a & b)' --trunc 2"},
      {"check_all_42", "check --suite all --seed 42"},
  };
  std::filesystem::create_directories(CCONES_WORK_DIR);
  std::size_t mismatches = 0;
  std::string detail;
  for (const auto& [name, args] : cases) {
    std::string runs[2];
    for (int r = 0; r < 2; ++r) {
      const std::string out = std::string(CCONES_WORK_DIR) + "/" + name + "." + std::to_string(r) + ".json";
      const int rc = std::system((cli + " " + args + " > " + out).c_str());
      if (rc != 0) detail += std::string(" ") + name + " exit " + std::to_string(rc) + ";";
      runs[r] = read_file(out);
    }
    const std::string golden = read_file(std::string(CCONES_GOLDEN_DIR) + "/" + name + ".json");
    if (runs[0] != runs[1] || runs[0] != golden || golden.empty()) {
      ++mismatches;
      detail += std::string(" ") + name + " differs;";
    }
  }
  return {mismatches == 0 && detail.empty(),
          "parse, interpret, check --suite all --seed 42: two runs each against stored files," +
              (detail.empty() ? std::string(" byte-identical") : detail)};
}

}  // namespace

int main() {
  report(1, "norm duality", norm_duality);
  report(2, "bipolar idempotence", bipolar);
  report(3, "curry/uncurry bijection", star_autonomy);
  report(4, "additive norms", additive);
  report(5, "symmetric norm sandwich", sandwich);
  report(6, "exponential isomorphism", exponential_iso);
  report(7, "monad and comonoid laws", monad_laws);
  report(8, "analytic composition", composition);
  report(9, "PCS round trip", pcs_round_trip);
  report(10, "spectral backend", spectral);
  report(11, "CLI golden files", cli_goldens);
  std::cout << (failures == 0 ? "all 11 criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
