#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace vnum {

using Exponent = std::uint32_t;

/// A monomial x_1^{a_1} ... x_n^{a_n} over a fixed, ordered variable set.
///
/// Exponent arithmetic is checked: any sum that would not fit in Exponent throws
/// ResourceError instead of wrapping.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial variable(std::size_t nvars, std::size_t i);
  /// Product of the variables whose indices are listed.
  static Monomial square_free(std::size_t nvars, const std::vector<std::size_t>& vars);
  static Monomial from_mask(std::size_t nvars, std::uint64_t mask);

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool is_square_free() const;
  /// True when at most one variable occurs.
  bool is_pure_power() const;
  bool divides(const Monomial& other) const;
  std::vector<std::size_t> support() const;
  /// Support as a bit mask; requires nvars() <= 64.
  std::uint64_t support_mask() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial& operator*=(const Monomial& other);
  Monomial pow(std::uint64_t k) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// Generator of the principal colon (m) : f, i.e. exponents max(m_i - f_i, 0).
Monomial colon(const Monomial& m, const Monomial& f);
/// Exact quotient; requires divisor | m.
Monomial divide(const Monomial& m, const Monomial& divisor);

/// Renders as `x1^2*x3`; the unit monomial renders as `1`.
std::string to_string(const Monomial& m);

}  // namespace vnum
