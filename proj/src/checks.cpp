#include "ccones/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ccones/backends.hpp"
#include "ccones/exponential.hpp"
#include "ccones/formula.hpp"
#include "ccones/sampling.hpp"

namespace ccones {
namespace {

constexpr double kSandwichTolerance = 1e-6;

std::uint64_t suite_seed(std::uint64_t seed, std::uint64_t k) { return seed + 0x9E3779B97F4A7C15ULL * (k + 1); }

// Runs a check body; an exception fails the check and is recorded.
CheckResult run_check(const std::string& name, const std::function<bool(Json&)>& body) {
  CheckResult r;
  r.name = name;
  r.detail = Json::object();
  try {
    r.passed = body(r.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail["error"] = e.what();
  }
  return r;
}

bool same_object(const ConeObject& a, const ConeObject& b) {
  try {
    return objects_equal(a, b);
  } catch (const CapabilityError&) {
    return structurally_equal(a, b);
  }
}

Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

// ---------------------------------------------------------------- mall

CheckResult check_norm_duality(Sampler& s, std::size_t trials) {
  return run_check("norm_duality", [&](Json& d) {
    std::size_t mismatches = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      ConeObject o = s.polyhedral_object(s.between(1, 4), 6, "a");
      VecQ x = s.nonnegative_vector(o.dim(), 5);
      VecQ phi = s.nonnegative_vector(o.dim(), 5);
      if (gauge_norm(o, Side::kPrimal, x) != sup_pairing_norm(o, Side::kPrimal, x)) ++mismatches;
      if (gauge_norm(o, Side::kDual, phi) != sup_pairing_norm(o, Side::kDual, phi)) ++mismatches;
    }
    d["samples"] = 2 * trials;
    d["mismatches"] = mismatches;
    d["comparison"] = "exact";
    return mismatches == 0;
  });
}

CheckResult check_bipolar(Sampler& s, std::size_t trials) {
  return run_check("bipolar", [&](Json& d) {
    std::size_t mismatches = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t dim = s.between(1, 4);
      Generators g = reduce_generators(s.spanning_generators(dim, 6));
      Generators pp = polar_of_points(polar_of_points(g, dim).generators, dim).generators;
      if (reduce_generators(pp) != g) ++mismatches;
    }
    d["samples"] = trials;
    d["mismatches"] = mismatches;
    return mismatches == 0;
  });
}

CheckResult check_de_morgan(Sampler& s, std::size_t trials) {
  return run_check("de_morgan", [&](Json& d) {
    std::size_t failures = 0, samples = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      ConeObject a = s.polyhedral_object(s.between(1, 2), 4, "a");
      ConeObject b = s.polyhedral_object(s.between(1, 2), 4, "b");
      const ConeObject da = dual_object(a), db = dual_object(b);
      const bool ok = same_object(dual_object(tensor_obj(a, b)), cotensor_obj(da, db)) &&
                      same_object(dual_object(product_obj(a, b)), coproduct_obj(da, db)) &&
                      same_object(dual_object(hom_obj(a, b)), tensor_obj(a, db));
      samples += 3;
      if (!ok) ++failures;
    }
    // Formula level: the dual-normalized formula denotes the dual object.
    Environment env{{"a", s.polyhedral_object(2, 3, "a")}, {"b", s.polyhedral_object(2, 3, "b")}};
    const char* formulas[] = {"a * b", "a -o b", "(a & b) | a^", "a + 1", "bot -o a", "top & b^", "!a * b"};
    for (const char* text : formulas) {
      FormulaPtr f = parse_formula(text);
      FormulaPtr nf = normalize_duals(make_node(FormulaKind::kDual, {f}));
      if (!same_object(interpret(*nf, env, 2), dual_object(interpret(*f, env, 2)))) ++failures;
      ++samples;
    }
    d["samples"] = samples;
    d["failures"] = failures;
    return failures == 0;
  });
}

CheckResult check_curry(Sampler& s, std::size_t trials) {
  return run_check("curry_bijection", [&](Json& d) {
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      ConeObject a = s.polyhedral_object(s.between(1, 2), 3, "a");
      ConeObject b = s.polyhedral_object(s.between(1, 2), 3, "b");
      ConeObject c = s.polyhedral_object(s.between(1, 2), 3, "c");
      Morphism f = s.contraction(tensor_obj(a, b), c);
      Morphism g = curry(f);
      bool ok = uncurry(g).matrix() == f.matrix() && g.norm() == f.norm();
      Morphism h = s.contraction(a, hom_obj(b, c));
      Morphism k = uncurry(h);
      ok = ok && curry(k).matrix() == h.matrix() && k.norm() == h.norm();
      if (!ok) ++failures;
    }
    d["samples"] = 2 * trials;
    d["failures"] = failures;
    return failures == 0;
  });
}

CheckResult check_additive(Sampler& s, std::size_t trials) {
  return run_check("additive_norms", [&](Json& d) {
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      ConeObject a = s.polyhedral_object(s.between(1, 3), 4, "a");
      ConeObject b = s.polyhedral_object(s.between(1, 3), 4, "b");
      ConeObject prod = product_obj(a, b), coprod = coproduct_obj(a, b);
      VecQ u = s.nonnegative_vector(a.dim(), 4), v = s.nonnegative_vector(b.dim(), 4);
      VecQ uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      const Rational nu = norm_primal(a, u), nv = norm_primal(b, v);
      const Rational fu = norm_dual(a, u), fv = norm_dual(b, v);
      bool ok = norm_primal(prod, uv) == rmax(nu, nv) && norm_primal(coprod, uv) == nu + nv &&
                norm_dual(prod, uv) == fu + fv && norm_dual(coprod, uv) == rmax(fu, fv);
      if (!ok) ++failures;
    }
    // Bool: 1 & 1 and 1 + 1 share coordinates but not norms.
    const VecQ ones{Rational(1), Rational(1)};
    const Rational with_norm = norm_primal(product_obj(unit_object(), unit_object()), ones);
    const Rational plus_norm = norm_primal(coproduct_obj(unit_object(), unit_object()), ones);
    d["samples"] = trials;
    d["failures"] = failures;
    d["bool_witness"] = Json{{"point", to_json(ones)}, {"with", to_json(with_norm)}, {"plus", to_json(plus_norm)}};
    return failures == 0 && with_norm == 1 && plus_norm == 2;
  });
}

CheckResult check_tensor_norms(Sampler& s, std::size_t trials) {
  return run_check("tensor_norms", [&](Json& d) {
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      ConeObject a = s.polyhedral_object(s.between(1, 2), 4, "a");
      ConeObject b = s.polyhedral_object(s.between(1, 2), 4, "b");
      ConeObject ab = tensor_obj(a, b);
      VecQ u = s.nonnegative_vector(a.dim(), 4), v = s.nonnegative_vector(b.dim(), 4);
      bool ok = norm_primal(ab, kronecker(u, v)) == norm_primal(a, u) * norm_primal(b, v) &&
                norm_dual(ab, kronecker(u, v)) == norm_dual(a, u) * norm_dual(b, v);
      Morphism f = s.contraction(a, b, 4, s.fraction(4) + 1);
      Morphism g = s.contraction(b, a, 4, s.fraction(4));
      ok = ok && tensor_mor(f, g).norm() == f.norm() * g.norm() && adjoint(f).norm() == f.norm() &&
           compose(g, f).norm() <= g.norm() * f.norm();
      if (!ok) ++failures;
    }
    d["samples"] = trials;
    d["failures"] = failures;
    return failures == 0;
  });
}

CheckResult check_coherence(Sampler& s, std::size_t trials) {
  return run_check("coherence", [&](Json& d) {
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      ConeObject a = s.polyhedral_object(s.between(1, 2), 3, "a");
      ConeObject b = s.polyhedral_object(s.between(1, 2), 3, "b");
      ConeObject c = s.polyhedral_object(s.between(1, 2), 3, "c");
      auto is_id = [](const Morphism& m) { return m.matrix() == MatQ::identity(m.source().dim()); };
      bool ok = is_id(compose(sym(b, a), sym(a, b))) && is_id(pair(proj1(a, b), proj2(a, b))) &&
                is_id(copair(inj1(a, b), inj2(a, b))) && is_id(compose(assoc(a, b, c), assoc_inv(a, b, c))) &&
                is_id(compose(left_unitor(a), left_unitor_inv(a))) &&
                is_id(compose(right_unitor(a), right_unitor_inv(a)));
      Morphism f = s.contraction(tensor_obj(a, b), c);
      ok = ok && compose(eval(b, c), tensor_mor(curry(f), identity(b))).matrix() == f.matrix();
      if (!ok) ++failures;
    }
    d["samples"] = trials;
    d["failures"] = failures;
    d["laws"] = Json::array({"sym.sym", "pair(proj1,proj2)", "copair(inj1,inj2)", "assoc.assoc_inv", "unitors",
                             "eval.(curry f * id)"});
    return failures == 0;
  });
}

// ---------------------------------------------------------------- exp

CheckResult check_sandwich(Sampler& s, std::size_t trials) {
  return run_check("norm_sandwich", [&](Json& d) {
    std::size_t failures = 0, exact = 0;
    double worst_certified = 0, worst_estimate = 0;
    bool flagged = false;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t n = s.between(2, 3), dim = s.between(2, 3);
      ConeObject a = s.polyhedral_object(dim, 4, "a");
      // Sparse forms: off-diagonal mass is where old and new norms separate.
      VecQ f = s.nonnegative_vector(MultisetBasis(dim, n).size(), 4);
      for (auto& c : f)
        if (s.index(2) == 0) c = 0;
      if (is_zero(f)) f[s.index(f.size())] = 1;
      const Rational old = old_norm(f, a, n);
      const Bracket b = new_norm_bounds(f, a, n);
      const Rational kn = polarization_constant(n);
      const bool ok = b.lower <= old && to_double(old) <= to_double(kn * b.upper) * (1 + kSandwichTolerance);
      if (!ok) ++failures;
      if (b.exact()) ++exact;
      // old / upper <= old / new <= old / lower
      const double certified = to_double(old / b.upper), estimate = to_double(old / b.lower);
      worst_certified = std::max(worst_certified, certified);
      worst_estimate = std::max(worst_estimate, estimate);
      if (estimate > std::pow(2.0, static_cast<double>(n))) flagged = true;
    }
    // x1 x2 on the simplex: generator pairs give 1/2, the diagonal 1/4.
    ConeObject simplex = simplex_pcs(2);
    const VecQ x1x2{Rational(0), Rational(1, 2), Rational(0)};
    const Rational wo = old_norm(x1x2, simplex, 2);
    const Bracket wn = new_norm_bounds(x1x2, simplex, 2);
    d["samples"] = trials;
    d["failures"] = failures;
    d["exact_brackets"] = exact;
    d["tolerance"] = format_double(kSandwichTolerance);
    d["max_ratio_certified"] = format_double(worst_certified);
    d["max_ratio_estimate"] = format_double(worst_estimate);
    d["exceeds_2^n"] = flagged;
    d["worked_instance"] = Json{{"old", to_json(wo)}, {"new", to_json(wn)}};
    return failures == 0 && wo == Rational(1, 2) && wn.lower == Rational(1, 4) && wn.upper == Rational(1, 4);
  });
}

CheckResult check_delta_norm(Sampler& s, std::size_t trials) {
  return run_check("delta_norm", [&](Json& d) {
    std::size_t failures = 0;
    Json methods = Json::array();
    const std::size_t n_samples = std::min<std::size_t>(trials, 4);
    for (std::size_t t = 0; t < n_samples; ++t) {
      ConeObject a = s.polyhedral_object(2, 3, "a");
      VecQ x = s.ball_point(a);
      NormBracket nb = norm_bracket(bang_obj(a, 3), Side::kPrimal, delta_coords(x, 3));
      if (nb.upper > 1 || nb.lower > nb.upper) ++failures;
      if (methods.empty() || methods.back() != nb.method) methods.push_back(nb.method);
    }
    d["samples"] = n_samples;
    d["failures"] = failures;
    d["methods"] = methods;
    return failures == 0;
  });
}

CheckResult check_monad(std::size_t N) {
  return run_check("monad_laws", [&](Json& d) {
    ConeObject a = simplex_pcs(2);
    ConeObject wa = whynot_obj(a, N);
    const MatQ id = MatQ::identity(wa.dim());
    const bool left = compose(mu(a, N), eta(wa, N)).matrix() == id;
    const bool right = compose(mu(a, N), whynot_mor(eta(a, N), N)).matrix() == id;
    d["base"] = a.label();
    d["truncation"] = N;
    d["mu.eta"] = left;
    d["mu.?eta"] = right;
    return left && right;
  });
}

CheckResult check_comonoid(std::size_t N) {
  return run_check("comonoid_laws", [&](Json& d) {
    ConeObject a = simplex_pcs(2);
    ConeObject wa = whynot_obj(a, N);
    Morphism m = diag_mult(a, N), id = identity(wa), e = monoid_unit(a, N);
    const bool assoc_ok = compose(m, par_mor(m, id)).matrix() == compose(m, par_mor(id, m)).matrix();
    const MatQ idm = MatQ::identity(wa.dim());
    const bool left = compose(m, par_mor(e, id)).matrix() == idm;
    const bool right = compose(m, par_mor(id, e)).matrix() == idm;
    d["base"] = a.label();
    d["truncation"] = N;
    d["associativity"] = assoc_ok;
    d["left_unit"] = left;
    d["right_unit"] = right;
    return assoc_ok && left && right;
  });
}

CheckResult check_functor(Sampler& s, std::size_t trials, std::size_t N) {
  return run_check("bang_functor", [&](Json& d) {
    std::size_t failures = 0;
    const std::size_t n_samples = std::min<std::size_t>(trials, 5);
    for (std::size_t t = 0; t < n_samples; ++t) {
      ConeObject a = s.polyhedral_object(2, 3, "a");
      ConeObject b = s.polyhedral_object(2, 3, "b");
      ConeObject c = s.polyhedral_object(2, 3, "c");
      Morphism f = s.contraction(a, b), g = s.contraction(b, c);
      bool ok = bang_mor(identity(a), N).matrix() == MatQ::identity(GradedBasis(2, N).size()) &&
                bang_mor(compose(g, f), N).matrix() == compose(bang_mor(g, N), bang_mor(f, N)).matrix();
      ok = ok && analytic_compose(AnalyticMap::linear(g, N), AnalyticMap::linear(f, N), N).matrix() ==
                     AnalyticMap::linear(compose(g, f), N).matrix();
      if (!ok) ++failures;
    }
    d["samples"] = n_samples;
    d["failures"] = failures;
    return failures == 0;
  });
}

CheckResult check_exp_iso(Sampler& s, std::size_t trials, std::size_t N) {
  return run_check("exp_iso", [&](Json& d) {
    std::size_t failures = 0, samples = 0;
    const ConeObject bases[] = {unit_object(), simplex_pcs(2)};
    Json cases = Json::array();
    for (const auto& a : bases)
      for (const auto& b : bases) {
        auto [phi, inv] = exp_iso(a, b, N);
        const bool inverse = compose(inv, phi).matrix() == MatQ::identity(phi.source().dim()) &&
                             compose(phi, inv).matrix() == MatQ::identity(phi.target().dim());
        if (!inverse) ++failures;
        const auto& sel = phi.target().node().selection;
        const MatQ inv_t = inv.matrix().transpose();
        for (std::size_t t = 0; t < trials; ++t) {
          VecQ x = s.ball_point(a), y = s.ball_point(b);
          VecQ xy = x;
          xy.insert(xy.end(), y.begin(), y.end());
          const VecQ dxy = delta_coords(xy, N);
          const VecQ full = kronecker(delta_coords(x, N), delta_coords(y, N));
          VecQ split(sel.size());
          for (std::size_t i = 0; i < sel.size(); ++i) split[i] = full[sel[i]];
          const VecQ f = s.nonnegative_vector(phi.source().dim(), 5);
          const bool ok = phi.apply(dxy) == split && dot(f, dxy) == dot(inv_t.apply(f), split);
          if (!ok) ++failures;
          ++samples;
        }
        cases.push_back(Json{{"a", a.label()}, {"b", b.label()}, {"dim", phi.source().dim()}, {"inverse", inverse}});
      }
    d["truncation"] = N;
    d["cases"] = cases;
    d["samples"] = samples;
    d["failures"] = failures;
    return failures == 0;
  });
}

CheckResult check_composition(Sampler& s, std::size_t trials) {
  return run_check("analytic_composition", [&](Json& d) {
    const ConeObject one = unit_object();
    const Polynomial t = Polynomial::variable(1, 0);
    const Polynomial f_poly = t.times(t);
    const Polynomial g_poly = t + t.times(t);
    AnalyticMap f = AnalyticMap::from_polynomials(one, one, 2, {f_poly});
    AnalyticMap g = AnalyticMap::from_polynomials(one, one, 2, {g_poly});
    const Polynomial at4 = analytic_compose(g, f, 4).polynomials()[0];
    const Polynomial at3 = analytic_compose(g, f, 3).polynomials()[0];
    const Polynomial t4 = t.times(t).times(t.times(t));
    const bool worked = at4 == f_poly + t4 && at3 == f_poly;
    std::size_t failures = 0;
    for (std::size_t k = 0; k < trials; ++k) {
      const VecQ x{s.fraction(20)};
      Rational prev = 0;
      for (std::size_t n = 0; n <= 6; ++n) {
        const Rational v = analytic_eval(analytic_compose(g, f, n), x)[0];
        if (v < prev) ++failures;
        prev = v;
      }
      const Rational y = x[0] * x[0];
      if (prev != y + y * y) ++failures;
    }
    d["worked_N4"] = "t^2 + t^4";
    d["worked_N3"] = "t^2";
    d["worked_ok"] = worked;
    d["samples"] = trials;
    d["failures"] = failures;
    return worked && failures == 0;
  });
}

// ---------------------------------------------------------------- pcs

CheckResult check_pcs_validate(Sampler& s, std::size_t trials) {
  return run_check("pcs_validate", [&](Json& d) {
    std::size_t failures = 0, samples = 0;
    for (std::size_t k = 1; k <= 4; ++k) {
      failures += !validate_object(simplex_pcs(k)).ok();
      failures += !validate_object(cube_pcs(k)).ok();
      samples += 2;
    }
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t dim = s.between(1, 4);
      ConeObject o = pcs_object(s.spanning_generators(dim, 5), dim, "p");
      if (!validate_object(o).ok()) ++failures;
      VecQ x = s.nonnegative_vector(dim, 4);
      if (gauge_norm(o, Side::kPrimal, x) != sup_pairing_norm(o, Side::kPrimal, x)) ++failures;
      ++samples;
    }
    d["samples"] = samples;
    d["failures"] = failures;
    return failures == 0;
  });
}

CheckResult check_pcs_round_trip(Sampler& s, std::size_t trials) {
  return run_check("pcs_round_trip", [&](Json& d) {
    std::size_t failures = 0, contractions = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t da = s.between(1, 3), db = s.between(1, 3);
      ConeObject a = pcs_object(s.spanning_generators(da, 4), da, "a");
      ConeObject b = pcs_object(s.spanning_generators(db, 4), db, "b");
      MatQ u = s.nonnegative_matrix(da, db, 4);
      PcsMorphism pm = pcs_matrix_to_morphism(u, a, b);
      bool ok = morphism_to_pcs_matrix(pm.morphism) == u && pm.contraction == (pm.norm <= 1);
      if (sgn(pm.norm) > 0) {
        MatQ scaled_u = u;
        for (std::size_t i = 0; i < da; ++i)
          for (std::size_t j = 0; j < db; ++j) scaled_u(i, j) /= pm.norm;
        PcsMorphism c = pcs_matrix_to_morphism(scaled_u, a, b);
        ok = ok && c.contraction && c.norm == 1 && morphism_to_pcs_matrix(c.morphism) == scaled_u;
        ++contractions;
      }
      if (!ok) ++failures;
    }
    d["samples"] = trials;
    d["contractions"] = contractions;
    d["failures"] = failures;
    return failures == 0;
  });
}

CheckResult check_lattice(Sampler& s, std::size_t trials) {
  return run_check("lattice_samples", [&](Json& d) {
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t dim = s.between(1, 4);
      if (!lattice_test(pcs_object(s.spanning_generators(dim, 5), dim, "p")).lattice) ++failures;
    }
    // Four extreme rays in a 3-dimensional space: not a lattice.
    const Generators square{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    const LatticeReport r = lattice_test(square);
    d["samples"] = trials;
    d["failures"] = failures;
    d["non_lattice_example"] = Json{{"extreme_rays", r.extreme_rays}, {"rank", r.rank}, {"lattice", r.lattice}};
    d["scope"] = "sampled objects only";
    return failures == 0 && !r.lattice;
  });
}

// ---------------------------------------------------------------- qcs

CheckResult check_trace_norm(Sampler& s, std::size_t trials) {
  return run_check("trace_norm", [&](Json& d) {
    std::size_t failures = 0;
    double worst = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      MatD m = s.psd_matrix(s.between(1, 8));
      const double gap = std::abs(qcs_trace_norm(m) - m.trace());
      worst = std::max(worst, gap);
      if (gap > kPsdTolerance) ++failures;
    }
    MatD diag = MatD::Zero(2, 2);
    diag(0, 0) = 1;
    diag(1, 1) = 2;
    MatD ones = MatD::Ones(2, 2);
    MatD mixed = MatD::Identity(3, 3) / 3.0;
    const bool examples = std::abs(qcs_trace_norm(diag) - 3) <= kPsdTolerance &&
                          std::abs(qcs_op_norm(ones) - 2) <= kPsdTolerance &&
                          std::abs(qcs_trace_norm(mixed) - 1) <= kPsdTolerance;
    d["samples"] = trials;
    d["failures"] = failures;
    d["max_gap"] = format_double(worst);
    d["tolerance"] = format_double(kPsdTolerance);
    d["examples"] = examples;
    return failures == 0 && examples;
  });
}

CheckResult check_spectral_duality(Sampler& s, std::size_t trials) {
  return run_check("spectral_duality", [&](Json& d) {
    std::size_t failures = 0;
    double worst_trace = 0, worst_op = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      SpectralDualityCheck c = spectral_duality_check(s.psd_matrix(s.between(1, 8)));
      worst_trace = std::max(worst_trace, c.trace_gap);
      worst_op = std::max(worst_op, c.op_gap);
      if (!c.ok) ++failures;
    }
    d["samples"] = trials;
    d["failures"] = failures;
    d["max_trace_gap"] = format_double(worst_trace);
    d["max_op_gap"] = format_double(worst_op);
    d["tolerance"] = format_double(kDualityTolerance);
    return failures == 0;
  });
}

CheckResult check_spectral_rejections() {
  return run_check("spectral_rejections", [&](Json& d) {
    ConeObject q = qcs_object(2);
    auto throws_capability = [](const std::function<void()>& fn) {
      try {
        fn();
      } catch (const CapabilityError&) {
        return true;
      }
      return false;
    };
    const bool tensor = throws_capability([&] { tensor_obj(q, q); });
    const bool bang = throws_capability([&] { bang_obj(q, 2); });
    const bool lattice = throws_capability([&] { lattice_test(q); });
    bool indefinite = false;
    try {
      MatD m = MatD::Identity(2, 2);
      m(1, 1) = -1;
      qcs_trace_norm(m);
    } catch (const DomainError&) {
      indefinite = true;
    }
    d["tensor"] = tensor;
    d["bang"] = bang;
    d["lattice_test"] = lattice;
    d["indefinite_input"] = indefinite;
    return tensor && bang && lattice && indefinite;
  });
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

SuiteReport run_mall_checks(std::uint64_t seed, std::size_t trials) {
  Sampler s(suite_seed(seed, 0));
  SuiteReport r{"mall", {}};
  r.checks.push_back(check_norm_duality(s, trials));
  r.checks.push_back(check_bipolar(s, trials));
  r.checks.push_back(check_de_morgan(s, trials));
  r.checks.push_back(check_curry(s, trials));
  r.checks.push_back(check_additive(s, trials));
  r.checks.push_back(check_tensor_norms(s, trials));
  r.checks.push_back(check_coherence(s, trials));
  return r;
}

SuiteReport run_exp_checks(std::uint64_t seed, std::size_t trials) {
  Sampler s(suite_seed(seed, 1));
  SuiteReport r{"exp", {}};
  r.checks.push_back(check_sandwich(s, trials));
  r.checks.push_back(check_delta_norm(s, trials));
  r.checks.push_back(check_monad(3));
  r.checks.push_back(check_comonoid(3));
  r.checks.push_back(check_functor(s, trials, 3));
  r.checks.push_back(check_exp_iso(s, trials, 3));
  r.checks.push_back(check_composition(s, trials));
  return r;
}

SuiteReport run_pcs_checks(std::uint64_t seed, std::size_t trials) {
  Sampler s(suite_seed(seed, 2));
  SuiteReport r{"pcs", {}};
  r.checks.push_back(check_pcs_validate(s, trials));
  r.checks.push_back(check_pcs_round_trip(s, trials));
  r.checks.push_back(check_lattice(s, trials));
  return r;
}

SuiteReport run_qcs_checks(std::uint64_t seed, std::size_t trials) {
  Sampler s(suite_seed(seed, 3));
  SuiteReport r{"qcs", {}};
  r.checks.push_back(check_trace_norm(s, trials));
  r.checks.push_back(check_spectral_duality(s, trials));
  r.checks.push_back(check_spectral_rejections());
  return r;
}

std::vector<SuiteReport> run_suite(const std::string& suite, std::uint64_t seed, std::size_t trials) {
  if (suite == "mall") return {run_mall_checks(seed, trials)};
  if (suite == "exp") return {run_exp_checks(seed, trials)};
  if (suite == "pcs") return {run_pcs_checks(seed, trials)};
  if (suite == "qcs") return {run_qcs_checks(seed, trials)};
  if (suite == "all")
    return {run_mall_checks(seed, trials), run_exp_checks(seed, trials), run_pcs_checks(seed, trials),
            run_qcs_checks(seed, trials)};
  throw DomainError("unknown suite '" + suite + "' (expected mall, exp, pcs, qcs or all)");
}

Json to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}};
}

Json check_report(const std::vector<SuiteReport>& suites, std::uint64_t seed, std::size_t trials) {
  Json arr = Json::array();
  bool ok = true;
  for (const auto& s : suites) {
    arr.push_back(to_json(s));
    ok = ok && s.passed();
  }
  return Json{{"schema", kSchemaVersion}, {"command", "check"}, {"seed", seed},
              {"trials", trials},         {"suites", arr},     {"passed", ok}};
}

}  // namespace ccones
