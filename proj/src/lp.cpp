#include "ccones/lp.hpp"

#include <cstddef>
#include <optional>

namespace ccones {
namespace {

// Dense tableau in canonical form: the columns listed in `basis` form an
// identity submatrix. Column `cols` (the last) holds the right-hand side.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows, VecQ(cols + 1)), basis_(rows), objective_(cols + 1) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  Rational& rhs(std::size_t r) { return cells_[r][cols_]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  // Loads "maximize <cost, x>" into the reduced-cost row z_j - c_j.
  void set_objective(const VecQ& cost) {
    for (std::size_t j = 0; j <= cols_; ++j) {
      Rational z = 0;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Rational& cb = cost[basis_[i]];
        if (sgn(cb) != 0 && sgn(cells_[i][j]) != 0) z += cb * cells_[i][j];
      }
      objective_[j] = j < cols_ ? z - cost[j] : z;
    }
  }

  Rational objective_value() const { return objective_[cols_]; }

  void pivot(std::size_t pr, std::size_t pc) {
    Rational inv = 1 / cells_[pr][pc];
    for (auto& v : cells_[pr]) v *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pr || sgn(cells_[i][pc]) == 0) continue;
      Rational f = cells_[i][pc];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(cells_[pr][j]) != 0) cells_[i][j] -= f * cells_[pr][j];
    }
    if (sgn(objective_[pc]) != 0) {
      Rational f = objective_[pc];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(cells_[pr][j]) != 0) objective_[j] -= f * cells_[pr][j];
    }
    basis_[pr] = pc;
  }

  // Bland's rule. Returns false when the problem is unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols_; ++j)
        if (allowed[j] && sgn(objective_[j]) < 0) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(cells_[i][*enter]) <= 0) continue;
        Rational ratio = cells_[i][cols_] / cells_[i][*enter];
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void drop_row(std::size_t r) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<VecQ> cells_;
  std::vector<std::size_t> basis_;
  VecQ objective_;
};

}  // namespace

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "?";
}

bool lp_satisfies(const LpProblem& problem, const VecQ& x) {
  const std::size_t n = problem.objective.size();
  if (x.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    bool nonneg = problem.nonnegative.empty() || problem.nonnegative[i];
    if (nonneg && sgn(x[i]) < 0) return false;
  }
  for (const auto& c : problem.constraints) {
    Rational lhs = dot(c.coeffs, x);
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

LpResult lp_maximize(const LpProblem& problem) {
  const std::size_t n = problem.objective.size();
  if (!problem.nonnegative.empty() && problem.nonnegative.size() != n)
    throw DimensionError("lp_maximize: nonnegativity flags do not match the variable count");
  for (const auto& c : problem.constraints)
    if (c.coeffs.size() != n) throw DimensionError("lp_maximize: constraint has wrong length");

  // Column layout: one column per nonnegative variable, two (x+, x-) per
  // free variable, then slack/surplus columns, then artificials.
  std::vector<std::size_t> plus_col(n), minus_col(n, SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    plus_col[i] = next++;
    if (!problem.nonnegative.empty() && !problem.nonnegative[i]) minus_col[i] = next++;
  }
  const std::size_t structural = next;

  const std::size_t m = problem.constraints.size();
  std::vector<Relation> rel(m);
  std::vector<bool> flip(m, false);
  std::size_t slack_count = 0, artificial_count = 0;
  for (std::size_t r = 0; r < m; ++r) {
    rel[r] = problem.constraints[r].relation;
    if (sgn(problem.constraints[r].rhs) < 0) {
      flip[r] = true;
      if (rel[r] == Relation::kLessEqual)
        rel[r] = Relation::kGreaterEqual;
      else if (rel[r] == Relation::kGreaterEqual)
        rel[r] = Relation::kLessEqual;
    }
    if (rel[r] != Relation::kEqual) ++slack_count;
    if (rel[r] != Relation::kLessEqual) ++artificial_count;
  }
  const std::size_t first_artificial = structural + slack_count;
  const std::size_t cols = first_artificial + artificial_count;

  Tableau t(m, cols);
  std::size_t slack = structural, artificial = first_artificial;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = problem.constraints[r];
    const Rational sign = flip[r] ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(c.coeffs[i]) == 0) continue;
      t.at(r, plus_col[i]) = sign * c.coeffs[i];
      if (minus_col[i] != SIZE_MAX) t.at(r, minus_col[i]) = -sign * c.coeffs[i];
    }
    t.rhs(r) = sign * c.rhs;
    if (rel[r] == Relation::kLessEqual) {
      t.at(r, slack) = 1;
      t.basis()[r] = slack++;
    } else {
      if (rel[r] == Relation::kGreaterEqual) t.at(r, slack++) = -1;
      t.at(r, artificial) = 1;
      t.basis()[r] = artificial++;
    }
  }

  std::vector<bool> allowed(cols, true);
  if (artificial_count > 0) {
    VecQ phase1(cols);
    for (std::size_t j = first_artificial; j < cols; ++j) phase1[j] = -1;
    t.set_objective(phase1);
    t.optimize(allowed);  // bounded above by zero
    if (sgn(t.objective_value()) < 0) return LpResult{LpStatus::kInfeasible, 0, {}};
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basis()[r] < first_artificial) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_artificial; ++j)
        if (sgn(t.at(r, j)) != 0) {
          col = j;
          break;
        }
      if (col) {
        t.pivot(r, *col);
        ++r;
      } else {
        t.drop_row(r);
      }
    }
    for (std::size_t j = first_artificial; j < cols; ++j) allowed[j] = false;
  }

  VecQ cost(cols);
  for (std::size_t i = 0; i < n; ++i) {
    cost[plus_col[i]] = problem.objective[i];
    if (minus_col[i] != SIZE_MAX) cost[minus_col[i]] = -problem.objective[i];
  }
  t.set_objective(cost);
  if (!t.optimize(allowed)) return LpResult{LpStatus::kUnbounded, 0, {}};

  VecQ column_values(cols);
  for (std::size_t r = 0; r < t.rows(); ++r) column_values[t.basis()[r]] = t.rhs(r);
  VecQ x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = column_values[plus_col[i]];
    if (minus_col[i] != SIZE_MAX) x[i] -= column_values[minus_col[i]];
  }
  Rational value = dot(problem.objective, x);
  return LpResult{LpStatus::kOptimal, value, std::move(x)};
}

}  // namespace ccones
