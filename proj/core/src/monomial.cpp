#include "vnum/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "vnum/errors.hpp"

namespace vnum {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) throw ResourceError("monomial exponent overflow");
  return a + b;
}

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw StructuralError("monomials live in rings of different sizes");
}

}  // namespace

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw StructuralError("variable index out of range");
  Monomial m(nvars);
  m.exps_[i] = 1;
  return m;
}

Monomial Monomial::square_free(std::size_t nvars, const std::vector<std::size_t>& vars) {
  Monomial m(nvars);
  for (auto v : vars) {
    if (v >= nvars) throw StructuralError("variable index out of range");
    m.exps_[v] = 1;
  }
  return m;
}

Monomial Monomial::from_mask(std::size_t nvars, std::uint64_t mask) {
  Monomial m(nvars);
  for (std::size_t i = 0; i < nvars && i < 64; ++i)
    if (mask >> i & 1U) m.exps_[i] = 1;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_square_free() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::is_pure_power() const {
  return std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e > 0; }) <= 1;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ring(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) out.push_back(i);
  return out;
}

std::uint64_t Monomial::support_mask() const {
  if (exps_.size() > 64) throw ResourceError("support mask needs at most 64 variables");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) mask |= std::uint64_t{1} << i;
  return mask;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  out *= b;
  return out;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  require_same_ring(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] = checked_add(exps_[i], other.exps_[i]);
  return *this;
}

Monomial Monomial::pow(std::uint64_t k) const {
  Monomial out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && k > std::numeric_limits<Exponent>::max() / exps_[i])
      throw ResourceError("monomial exponent overflow");
    out.exps_[i] = static_cast<Exponent>(exps_[i] * k);
  }
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& m, const Monomial& f) {
  require_same_ring(m, f);
  std::vector<Exponent> e(m.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = m[i] > f[i] ? m[i] - f[i] : 0;
  return Monomial(std::move(e));
}

Monomial divide(const Monomial& m, const Monomial& divisor) {
  if (!divisor.divides(m)) throw DomainError("divide: divisor does not divide monomial");
  return colon(m, divisor);
}

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (m[i] > 1) os << '^' << m[i];
  }
  if (first) os << '1';
  return os.str();
}

}  // namespace vnum
