#include "eepc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eepc {

namespace {

struct Tableau {
  // rows x (cols + 1); last column is the rhs.
  std::vector<std::vector<double>> t;
  std::vector<double> cost;  // reduced-cost row, same width
  std::vector<int> basis;
  std::size_t cols = 0;

  void pivot(std::size_t row, std::size_t col) {
    const double p = t[row][col];
    for (auto& v : t[row]) v /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == row || t[i][col] == 0.0) continue;
      const double f = t[i][col];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[row][j];
    }
    if (cost[col] != 0.0) {
      const double f = cost[col];
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t[row][j];
    }
    basis[row] = static_cast<int>(col);
  }

  enum class Step { Progress, Optimal, Unbounded };

  // One Bland's-rule pivot; `allowed` bounds the columns eligible to enter.
  Step step(std::size_t allowed, double tol) {
    std::size_t enter = allowed;
    for (std::size_t j = 0; j < allowed; ++j) {
      if (cost[j] < -tol) {
        enter = j;
        break;
      }
    }
    if (enter == allowed) return Step::Optimal;
    std::size_t leave = t.size();
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i][enter] <= tol) continue;
      const double ratio = t[i][cols] / t[i][enter];
      if (leave == t.size() || ratio < best_ratio - 1e-15 ||
          (std::fabs(ratio - best_ratio) <= 1e-15 &&
           basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == t.size()) return Step::Unbounded;
    pivot(leave, enter);
    return Step::Progress;
  }

  Step run(std::size_t allowed, double tol) {
    Step s;
    while ((s = step(allowed, tol)) == Step::Progress) {
    }
    return s;
  }
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem, double tol) {
  const std::size_t n = problem.c.size();
  const std::size_t m_ub = problem.a_ub.size();
  const std::size_t m_eq = problem.a_eq.size();
  if (problem.b_ub.size() != m_ub || problem.b_eq.size() != m_eq)
    throw std::invalid_argument("lp: rhs size does not match row count");
  for (const auto& row : problem.a_ub)
    if (row.size() != n)
      throw std::invalid_argument("lp: a_ub row width does not match c");
  for (const auto& row : problem.a_eq)
    if (row.size() != n)
      throw std::invalid_argument("lp: a_eq row width does not match c");

  const std::size_t m = m_ub + m_eq;
  const std::size_t slack_start = n;
  const std::size_t art_start = n + m_ub;
  const std::size_t cols = n + m_ub + m;  // artificials for every row; the
                                          // superfluous ones stay nonbasic
  Tableau tab;
  tab.cols = cols;
  tab.t.assign(m, std::vector<double>(cols + 1, 0.0));
  tab.basis.assign(m, 0);

  for (std::size_t i = 0; i < m; ++i) {
    const auto& src = i < m_ub ? problem.a_ub[i] : problem.a_eq[i - m_ub];
    double rhs = i < m_ub ? problem.b_ub[i] : problem.b_eq[i - m_ub];
    const double sign = rhs < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = sign * src[j];
    if (i < m_ub) tab.t[i][slack_start + i] = sign;
    tab.t[i][cols] = sign * rhs;
    if (i < m_ub && sign > 0.0) {
      tab.basis[i] = static_cast<int>(slack_start + i);
    } else {
      tab.t[i][art_start + i] = 1.0;
      tab.basis[i] = static_cast<int>(art_start + i);
    }
  }

  LpSolution sol;
  // Phase 1: minimize the artificial sum.
  tab.cost.assign(cols + 1, 0.0);
  for (std::size_t j = art_start; j < cols; ++j) tab.cost[j] = 1.0;
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] >= static_cast<int>(art_start))
      for (std::size_t j = 0; j <= cols; ++j) tab.cost[j] -= tab.t[i][j];
  // The artificial sum is bounded below by zero, so phase 1 cannot be
  // unbounded; a nonzero optimum means the original program is infeasible.
  if (tab.run(art_start, tol) == Tableau::Step::Unbounded ||
      -tab.cost[cols] > tol) {
    sol.status = LpStatus::Infeasible;
    return sol;
  }
  // Pivot leftover artificials out; drop rows that are fully redundant.
  for (std::size_t i = 0; i < tab.t.size();) {
    if (tab.basis[i] < static_cast<int>(art_start)) {
      ++i;
      continue;
    }
    std::size_t j = 0;
    while (j < art_start && std::fabs(tab.t[i][j]) <= tol) ++j;
    if (j < art_start) {
      tab.pivot(i, j);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  // Phase 2: maximize c.x.
  tab.cost.assign(cols + 1, 0.0);
  for (std::size_t j = 0; j < n; ++j) tab.cost[j] = -problem.c[j];
  for (std::size_t i = 0; i < tab.t.size(); ++i) {
    const double f = tab.cost[tab.basis[i]];
    if (f != 0.0)
      for (std::size_t j = 0; j <= cols; ++j)
        tab.cost[j] -= f * tab.t[i][j];
  }
  if (tab.run(art_start, tol) == Tableau::Step::Unbounded) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.x.assign(n, 0.0);
  for (std::size_t i = 0; i < tab.t.size(); ++i)
    if (tab.basis[i] < static_cast<int>(n))
      sol.x[tab.basis[i]] = tab.t[i][tab.cols];
  sol.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) sol.objective += problem.c[j] * sol.x[j];
  return sol;
}

namespace {

// Solves the n x n system rows*x = rhs in place; returns false if singular.
bool solve_square(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (std::fabs(a[piv][col]) < 1e-11) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

}  // namespace

std::vector<std::vector<double>> enumerate_vertices(
    const std::vector<std::vector<double>>& a_ge,
    const std::vector<double>& b_ge,
    const std::vector<std::vector<double>>& a_eq,
    const std::vector<double>& b_eq, std::size_t dim, double tol) {
  if (a_ge.size() != b_ge.size() || a_eq.size() != b_eq.size())
    throw std::invalid_argument("vertices: rhs size does not match row count");
  for (const auto& row : a_ge)
    if (row.size() != dim)
      throw std::invalid_argument("vertices: a_ge row width != dim");
  for (const auto& row : a_eq)
    if (row.size() != dim)
      throw std::invalid_argument("vertices: a_eq row width != dim");
  if (a_eq.size() > dim)
    throw std::invalid_argument("vertices: more equalities than dimensions");

  // Inequality list includes the nonnegativity bounds.
  std::vector<std::vector<double>> rows = a_ge;
  std::vector<double> rhs = b_ge;
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<double> e(dim, 0.0);
    e[j] = 1.0;
    rows.push_back(e);
    rhs.push_back(0.0);
  }

  const std::size_t k = dim - a_eq.size();  // inequalities to activate
  const std::size_t m = rows.size();
  if (m > 64) throw std::invalid_argument("vertices: too many inequalities");
  double combos = 1.0;
  for (std::size_t i = 0; i < k; ++i)
    combos *= static_cast<double>(m - i) / static_cast<double>(i + 1);
  if (combos > 1e6)
    throw std::invalid_argument("vertices: basis count exceeds 1e6");

  std::vector<std::vector<double>> found;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  const auto advance = [&]() {
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (pick[i] + (k - i) < m) {
        ++pick[i];
        for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  if (k == 0) {
    std::vector<double> x;
    if (solve_square(a_eq, b_eq, x)) found.push_back(x);
    return found;
  }

  do {
    std::vector<std::vector<double>> sys = a_eq;
    std::vector<double> sys_rhs = b_eq;
    for (std::size_t i : pick) {
      sys.push_back(rows[i]);
      sys_rhs.push_back(rhs[i]);
    }
    std::vector<double> x;
    if (!solve_square(sys, sys_rhs, x)) continue;
    bool feasible = true;
    for (std::size_t r = 0; feasible && r < m; ++r) {
      double dot = 0.0;
      for (std::size_t j = 0; j < dim; ++j) dot += rows[r][j] * x[j];
      if (dot < rhs[r] - tol) feasible = false;
    }
    if (!feasible) continue;
    bool duplicate = false;
    for (const auto& v : found) {
      double dist = 0.0;
      for (std::size_t j = 0; j < dim; ++j)
        dist = std::max(dist, std::fabs(v[j] - x[j]));
      if (dist < 1e-8) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) found.push_back(x);
  } while (advance());

  return found;
}

}  // namespace eepc
