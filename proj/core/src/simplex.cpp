#include "graphsep/simplex.hpp"

#include <stdexcept>

namespace graphsep {

namespace {

// Tableau layout: columns [0, n) structural, [n, n+m) artificial, last column rhs.
struct Tableau {
  int m, n;
  std::vector<RationalVec> t;  // m rows
  RationalVec obj;             // reduced-cost row, length n + m + 1 (last = -objective)
  std::vector<int> basis;      // basic column per row
  long pivots = 0;
  long bland_after = 0;

  int art(int row) const { return n + row; }
  int rhs() const { return n + m; }

  void pivot(int row, int col) {
    ++pivots;
    RationalVec& pr = t[row];
    Rational inv = 1 / pr[col];
    for (auto& x : pr) x *= inv;
    pr[col] = 1;  // kill residual normalization noise
    for (int r = 0; r <= m; ++r) {
      RationalVec& target = (r == m) ? obj : t[r];
      if (r == row) continue;
      Rational f = target[col];
      if (f == 0) continue;
      for (int c2 = 0; c2 <= n + m; ++c2)
        if (pr[c2] != 0) target[c2] -= f * pr[c2];
      target[col] = 0;
    }
    basis[row] = col;
  }

  // Entering column: Dantzig first, Bland once the pivot budget is exhausted.
  int choose_entering(bool allow_artificial) {
    int limit = allow_artificial ? n + m : n;
    if (pivots < bland_after) {
      int best = -1;
      for (int c = 0; c < limit; ++c)
        if (obj[c] < 0 && (best < 0 || obj[c] < obj[best])) best = c;
      return best;
    }
    for (int c = 0; c < limit; ++c)
      if (obj[c] < 0) return c;
    return -1;
  }

  // Leaving row by minimum ratio; ties broken by smallest basis index (Bland-safe).
  int choose_leaving(int col) {
    int row = -1;
    Rational best;
    for (int r = 0; r < m; ++r) {
      if (t[r][col] <= 0) continue;
      Rational ratio = t[r][rhs()] / t[r][col];
      if (row < 0 || ratio < best || (ratio == best && basis[r] < basis[row])) {
        row = r;
        best = ratio;
      }
    }
    return row;
  }

  // Runs the simplex loop on the current objective row. Returns false if unbounded.
  bool iterate(bool allow_artificial) {
    while (true) {
      int col = choose_entering(allow_artificial);
      if (col < 0) return true;
      int row = choose_leaving(col);
      if (row < 0) return false;
      pivot(row, col);
    }
  }
};

}  // namespace

SimplexSolver::SimplexSolver(std::vector<RationalVec> rows, RationalVec rhs, RationalVec cost)
    : m_(static_cast<int>(rows.size())),
      n_(static_cast<int>(cost.size())),
      a_(std::move(rows)),
      b_(std::move(rhs)),
      c_(std::move(cost)) {
  if (static_cast<int>(b_.size()) != m_) throw std::invalid_argument("simplex: rhs size");
  for (const auto& r : a_)
    if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("simplex: row size");
}

LpResult SimplexSolver::solve() {
  Tableau tab;
  tab.m = m_;
  tab.n = n_;
  tab.bland_after = 2000 + 20l * m_;
  tab.t.assign(m_, RationalVec(n_ + m_ + 1, Rational(0)));
  std::vector<int> row_sign(m_, 1);
  for (int r = 0; r < m_; ++r) {
    int s = (b_[r] < 0) ? -1 : 1;
    row_sign[r] = s;
    for (int c = 0; c < n_; ++c) tab.t[r][c] = s * a_[r][c];
    tab.t[r][tab.art(r)] = 1;
    tab.t[r][tab.rhs()] = s * b_[r];
  }
  tab.basis.resize(m_);
  for (int r = 0; r < m_; ++r) tab.basis[r] = tab.art(r);

  // Phase 1: minimize the artificial sum. Reduced costs: 0 - sum of rows.
  tab.obj.assign(n_ + m_ + 1, Rational(0));
  for (int r = 0; r < m_; ++r)
    for (int c = 0; c <= n_ + m_; ++c) tab.obj[c] -= tab.t[r][c];
  for (int r = 0; r < m_; ++r) tab.obj[tab.art(r)] = 0;

  tab.iterate(/*allow_artificial=*/false);

  LpResult out;
  Rational phase1 = -tab.obj[tab.rhs()];
  if (phase1 > 0) {
    out.status = LpStatus::Infeasible;
    // Farkas vector from the artificial reduced costs: rc(art_r) = 1 - y_r
    // for the phase-1 cost vector, with row sign folded back in.
    out.dual.assign(m_, Rational(0));
    for (int r = 0; r < m_; ++r) out.dual[r] = row_sign[r] * (1 - tab.obj[tab.art(r)]);
    out.objective = phase1;
    return out;
  }

  // Drive degenerate artificials out of the basis: a basic artificial at zero
  // could otherwise turn positive again during phase 2, silently breaking the
  // equality constraints. A row with no structural entry left is redundant and
  // can never change again, so its artificial may stay.
  for (int r = 0; r < m_; ++r) {
    if (tab.basis[r] < n_) continue;
    for (int c = 0; c < n_; ++c)
      if (tab.t[r][c] != 0) {
        tab.pivot(r, c);
        break;
      }
  }

  // Phase 2 on the real objective; artificial columns stay but never enter.
  tab.obj.assign(n_ + m_ + 1, Rational(0));
  for (int c = 0; c < n_; ++c) tab.obj[c] = c_[c];
  for (int r = 0; r < m_; ++r) {
    int bc = tab.basis[r];
    Rational f = tab.obj[bc];
    if (f == 0) continue;
    for (int c = 0; c <= n_ + m_; ++c) tab.obj[c] -= f * tab.t[r][c];
    tab.obj[bc] = 0;
  }
  if (!tab.iterate(/*allow_artificial=*/false)) {
    out.status = LpStatus::Unbounded;
    return out;
  }

  out.status = LpStatus::Optimal;
  out.x.assign(n_, Rational(0));
  for (int r = 0; r < m_; ++r)
    if (tab.basis[r] < n_) out.x[tab.basis[r]] = tab.t[r][tab.rhs()];
  out.dual.assign(m_, Rational(0));
  for (int r = 0; r < m_; ++r) out.dual[r] = row_sign[r] * (-tab.obj[tab.art(r)]);
  out.objective = -tab.obj[tab.rhs()];
  return out;
}

LpResult solve_lp(std::vector<RationalVec> rows, RationalVec rhs, RationalVec cost) {
  return SimplexSolver(std::move(rows), std::move(rhs), std::move(cost)).solve();
}

}  // namespace graphsep
