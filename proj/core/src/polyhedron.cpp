#include "vnum/polyhedron.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "vnum/errors.hpp"

namespace vnum {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const RationalVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << ')';
  return os.str();
}

RationalPolyhedron::RationalPolyhedron(std::size_t dim, std::vector<LinearConstraint> constraints) : dim_(dim) {
  for (auto& c : constraints) add_constraint(std::move(c));
}

void RationalPolyhedron::add_constraint(LinearConstraint c) {
  if (c.coeffs.size() != dim_) throw StructuralError("constraint length does not match polyhedron dimension");
  constraints_.push_back(std::move(c));
}

bool RationalPolyhedron::contains(const RationalVector& y) const {
  if (y.size() != dim_) return false;
  for (const auto& v : y)
    if (v < 0) return false;
  for (const auto& c : constraints_) {
    Rational s = 0;
    for (std::size_t i = 0; i < dim_; ++i) s += c.coeffs[i] * y[i];
    if (s < c.rhs) return false;
  }
  return true;
}

Rational coordinate_sum(const RationalVector& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

namespace {

// Dense tableau: rows_[r] holds the constraint row with rhs in the last column;
// cost_ holds reduced costs with -objective value in the last column.
class Tableau {
 public:
  Tableau(std::vector<RationalVector> rows, std::vector<std::size_t> basis)
      : rows_(std::move(rows)), basis_(std::move(basis)) {}

  std::size_t ncols() const { return rows_.empty() ? 0 : rows_.front().size() - 1; }

  void set_objective(const RationalVector& c) {
    cost_ = c;
    cost_.resize(ncols() + 1, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Rational cb = cost_[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= ncols(); ++j) cost_[j] -= cb * rows_[r][j];
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    Rational p = rows_[r][col];
    for (auto& x : rows_[r]) x /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][col] == 0) continue;
      Rational f = rows_[i][col];
      for (std::size_t j = 0; j <= ncols(); ++j) rows_[i][j] -= f * rows_[r][j];
    }
    if (cost_[col] != 0) {
      Rational f = cost_[col];
      for (std::size_t j = 0; j <= ncols(); ++j) cost_[j] -= f * rows_[r][j];
    }
    basis_[r] = col;
  }

  /// Runs Bland's rule over columns < `usable`; returns false if unbounded.
  bool optimize(std::size_t usable) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < usable; ++j)
        if (cost_[j] < 0) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r][*enter] <= 0) continue;
        Rational ratio = rows_[r].back() / rows_[r][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  Rational objective_value() const { return -cost_.back(); }
  std::vector<RationalVector>& rows() { return rows_; }
  std::vector<std::size_t>& basis() { return basis_; }

 private:
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> basis_;
  RationalVector cost_;
};

}  // namespace

LpResult lp_minimize(const RationalPolyhedron& P, const RationalVector& objective) {
  const std::size_t n = P.dimension();
  const std::size_t m = P.constraints().size();
  if (objective.size() != n) throw StructuralError("objective length does not match polyhedron dimension");

  // Columns: y (n), surplus s (m), artificial a (m), rhs.  A y - s + a = b with b >= 0.
  const std::size_t cols = n + 2 * m;
  std::vector<RationalVector> rows(m, RationalVector(cols + 1, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = P.constraints()[r];
    int sign = c.rhs < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) rows[r][j] = sign * c.coeffs[j];
    rows[r][n + r] = -sign;
    rows[r][n + m + r] = 1;
    rows[r][cols] = sign * c.rhs;
    basis[r] = n + m + r;
  }
  Tableau t(std::move(rows), std::move(basis));

  RationalVector phase1(cols, 0);
  for (std::size_t r = 0; r < m; ++r) phase1[n + m + r] = 1;
  t.set_objective(phase1);
  t.optimize(cols);
  LpResult result;
  if (t.objective_value() != 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  // Drive remaining artificials out of the basis; drop rows that are redundant.
  for (std::size_t r = 0; r < t.rows().size();) {
    if (t.basis()[r] < n + m) {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n + m; ++j)
      if (t.rows()[r][j] != 0) {
        col = j;
        break;
      }
    if (col) {
      t.pivot(r, *col);
      ++r;
    } else {
      t.rows().erase(t.rows().begin() + static_cast<std::ptrdiff_t>(r));
      t.basis().erase(t.basis().begin() + static_cast<std::ptrdiff_t>(r));
    }
  }

  RationalVector phase2(cols, 0);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = objective[j];
  t.set_objective(phase2);
  if (!t.optimize(n + m)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.value = t.objective_value();
  result.point.assign(n, 0);
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    if (t.basis()[r] < n) result.point[t.basis()[r]] = t.rows()[r].back();
  return result;
}

namespace {

struct Row {
  RationalVector a;
  Rational b;
};

// Solves the square system given by `chosen` rows; nullopt when singular.
std::optional<RationalVector> solve_square(const std::vector<Row>& rows, const std::vector<std::size_t>& chosen,
                                           std::size_t n) {
  std::vector<RationalVector> m(n, RationalVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = rows[chosen[i]].a[j];
    m[i][n] = rows[chosen[i]].b;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col] / m[col][col];
      for (std::size_t j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  RationalVector y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = m[i][n] / m[i][i];
  return y;
}

// Reduces `v` against an echelon basis; true if v is independent of it.
bool independent_of(const std::vector<std::pair<std::size_t, RationalVector>>& echelon, RationalVector v,
                    RationalVector* reduced) {
  for (const auto& [lead, row] : echelon) {
    if (v[lead] == 0) continue;
    Rational f = v[lead] / row[lead];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
  }
  bool nonzero = std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  if (reduced) *reduced = std::move(v);
  return nonzero;
}

struct VertexScan {
  const std::vector<Row>& rows;
  const RationalPolyhedron& poly;
  std::size_t n;
  std::set<RationalVector> found;
  std::vector<std::size_t> chosen;
  std::vector<std::pair<std::size_t, RationalVector>> echelon;

  void run(std::size_t start) {
    if (chosen.size() == n) {
      auto y = solve_square(rows, chosen, n);
      if (y && poly.contains(*y)) found.insert(*y);
      return;
    }
    for (std::size_t i = start; i + (n - chosen.size()) <= rows.size(); ++i) {
      RationalVector reduced;
      if (!independent_of(echelon, rows[i].a, &reduced)) continue;
      std::size_t lead = 0;
      while (reduced[lead] == 0) ++lead;
      chosen.push_back(i);
      echelon.emplace_back(lead, std::move(reduced));
      run(i + 1);
      echelon.pop_back();
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<RationalVector> enumerate_vertices(const RationalPolyhedron& P, std::size_t dimension_cap) {
  const std::size_t n = P.dimension();
  if (n > dimension_cap)
    throw ResourceError("vertex enumeration: dimension " + std::to_string(n) + " exceeds cap " +
                        std::to_string(dimension_cap));
  std::vector<Row> rows;
  for (const auto& c : P.constraints()) rows.push_back({c.coeffs, c.rhs});
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n, 0);
    e[i] = 1;
    rows.push_back({std::move(e), 0});
  }
  if (n == 0) {
    if (P.contains({})) return {RationalVector{}};
    return {};
  }
  VertexScan scan{rows, P, n, {}, {}, {}};
  scan.run(0);
  return {scan.found.begin(), scan.found.end()};
}

}  // namespace vnum
