#pragma once

#include "rbchar/element.hpp"
#include "rbchar/ideal.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rbchar {

/// The homogeneous ideal ⊕ Ω_i a_i attached to an ascent set.
class HomogeneousIdeal {
 public:
  explicit HomogeneousIdeal(AscentSet ascent) : ascent_(std::move(ascent)) {}

  const AscentSet& ascent() const { return ascent_; }
  KIdeal level(std::size_t degree) const { return ascent_.level_at(degree); }
  bool contains(const RBElement& f) const;
  /// {ω_j a_{s_j}}; generates the ideal as a Rota-Baxter ideal.
  std::vector<RBElement> generators(const AlgebraCtx& ctx) const;

 private:
  AscentSet ascent_;
};

HomogeneousIdeal ideal_from_ascent(const AscentSet& ascent);

/// Coefficientwise containment in ⊕ Ω_i a_i.
bool homogeneous_membership(const AscentSet& ascent, const RBElement& f);

/// A run of degrees [begin, end) on which the quotient is k / level.
/// end == nullopt marks the trailing infinite segment.
struct QuotientSegment {
  std::size_t begin;
  std::optional<std::size_t> end;
  KIdeal level;

  /// `Z`, `Z/4`, `Q`, `0`, ...
  std::string factor() const;
};

struct QuotientShape {
  std::vector<QuotientSegment> segments;

  /// `[0,1)->Z, [1,inf)->Z/2`.
  std::string to_string() const;
};

QuotientShape quotient_shape(const AscentSet& ascent);

/// Canonical representative of f modulo the ideal with the given ascent set
/// and ascent generating set (one generator per ascending point, in order,
/// with initial term ω_j a_{s_j}). Coefficients at degrees in [s_j, s_{j+1})
/// end up in the residue set of Ω_{s_j}: {0..ω-1} for Z and Z/n, {0} for
/// the unit ideal of Q. Throws std::invalid_argument on mismatched data.
RBElement reduce(const RBElement& f, const std::vector<RBElement>& ascent_gens,
                 const AscentSet& ascent);

/// The only possible element c_t a_t + ... + c_r a_r of an ideal with
/// starting point t and Ω_t = (c_t), in characteristic zero:
///   c_i = C(t-r, t-i) λ^{t-i} c_t,  r <= i < t.
/// Requires r <= t and ring Z or Q.
RBElement forced_coefficients(const AlgebraCtx& ctx, std::size_t t, std::size_t r, const Coeff& c_t);

struct SupportVerdict {
  bool pass = false;
  std::size_t starting_point = 0;
  std::optional<RBElement> counterexample;
  std::string detail;
};

/// Weight-zero checks on a stable saturation over Z or Q: no echelon row has
/// a term below the starting point t, and over Q every Ω_j with
/// t <= j <= bound is the unit ideal.
SupportVerdict weight0_support_check(const SaturationState& state);

struct ZAscentData {
  std::vector<std::pair<std::size_t, mpz_class>> pairs;
};

/// Throws std::invalid_argument for a non-Z ascent set or when consecutive
/// generators fail ω_{j+1} | ω_j, ω_{j+1} != ω_j.
ZAscentData z_ascent_data(const AscentSet& ascent);

struct PrimeReport {
  bool prime = false;
  /// `Z` or `Z/p` when prime; the quotient shape otherwise.
  std::string quotient;
  std::optional<std::pair<RBElement, RBElement>> witness;
};

/// Prime test for a proper nonzero Rota-Baxter ideal of the weight-zero
/// algebra over Z given by its ascent set. Non-prime verdicts carry a pair
/// f, g outside the ideal whose product lies in it. Throws
/// std::invalid_argument for a nonzero weight, a non-Z ring, the zero
/// ideal or the whole algebra.
PrimeReport is_prime_rb_ideal(const AscentSet& ascent, const Coeff& weight);

}  // namespace rbchar
