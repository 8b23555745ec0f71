#pragma once

#include "rbchar/element.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace rbchar {

/// Dense polynomial over Q; coeffs[i] is the coefficient of x^i. Trailing
/// zeros are trimmed, so the zero polynomial has no coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> coeffs);

  static RatPoly monomial(std::size_t degree, const mpq_class& c);

  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// `3/2*x^3 + x - 1`.
std::string to_string(const RatPoly& p);

/// Divided-power isomorphism a_m -> x^m / m! from the weight-zero algebra
/// over Q onto Q[x]. Throws std::invalid_argument for any other ring or
/// weight.
RatPoly to_poly(const RBElement& f);

/// Inverse map x^m -> m! a_m, landing in the weight-zero algebra over Q.
RBElement from_poly(const RatPoly& p);

}  // namespace rbchar
