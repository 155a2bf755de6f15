#include "assoc/exact_lp.hpp"

#include <stdexcept>

namespace assoc::exact {

bool feasible(const std::vector<Vector>& columns, const Vector& b) {
  const std::size_t m = b.size();
  const std::size_t n = columns.size();
  for (const auto& c : columns)
    if (c.size() != m) throw std::invalid_argument("column length does not match right-hand side");
  if (m == 0) return true;

  // tableau rows: [A | I | b] with each row signed so that b >= 0
  const std::size_t width = n + m + 1;
  std::vector<Vector> t(m, Vector(width, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * columns[j][i];
    t[i][n + i] = 1;
    t[i][width - 1] = sign * b[i];
    basis[i] = n + i;
  }
  // reduced costs of the phase-one objective (sum of artificials)
  Vector cost(width, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < n || j == width - 1) cost[j] -= t[i][j];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for a bounded-below objective
    Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    Rational f = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  return cost[width - 1] == 0;
}

bool in_convex_hull(const Vector& p, const std::vector<Vector>& points) {
  if (points.empty()) return false;
  std::vector<Vector> columns;
  for (const auto& q : points) {
    if (q.size() != p.size()) throw std::invalid_argument("points of different dimensions");
    Vector c = q;
    c.push_back(1);
    columns.push_back(std::move(c));
  }
  Vector b = p;
  b.push_back(1);
  return feasible(columns, b);
}

bool is_extreme(std::size_t i, const std::vector<Vector>& points) {
  std::vector<Vector> others;
  for (std::size_t j = 0; j < points.size(); ++j)
    if (j != i) others.push_back(points[j]);
  return !in_convex_hull(points[i], others);
}

}  // namespace assoc::exact
