#pragma once

#include "rbchar/element.hpp"
#include "rbchar/ideal.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rbchar {

class IllDefinedOperator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnverifiedOperator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of Z/n_1 × ... × Z/n_k, one residue per component.
using RingElem = std::vector<std::int64_t>;

/// A finite commutative unital ring presented by its additive group
/// Z/n_1 × ... × Z/n_k and the products of the additive generators e_i.
class FiniteRing {
 public:
  /// mult[i][j] = e_i · e_j. The constructor checks well-definedness,
  /// commutativity, associativity and the unit law on generators and
  /// throws std::invalid_argument on failure.
  FiniteRing(std::vector<std::int64_t> orders, RingElem unit,
             std::vector<std::vector<RingElem>> mult);

  static FiniteRing zmod(std::int64_t n);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::size_t components() const { return orders_.size(); }
  const RingElem& unit() const { return unit_; }
  RingElem zero() const { return RingElem(orders_.size(), 0); }
  std::size_t size() const;
  /// All elements in lexicographic order of residues.
  std::vector<RingElem> elements() const;

  RingElem normalize(RingElem x) const;
  RingElem add(const RingElem& x, const RingElem& y) const;
  RingElem mul(const RingElem& x, const RingElem& y) const;
  RingElem scale(const mpz_class& c, const RingElem& x) const;
  RingElem scale(std::int64_t c, const RingElem& x) const;

 private:
  std::vector<std::int64_t> orders_;
  RingElem unit_;
  std::vector<std::vector<RingElem>> mult_;
};

/// An additive endomorphism, P(e_i) = Σ_j rows[i][j] e_j.
class RBOperatorTable {
 public:
  explicit RBOperatorTable(std::vector<std::vector<std::int64_t>> rows) : rows_(std::move(rows)) {}

  /// Multiplication by c on Z/n.
  static RBOperatorTable multiplication_by(std::int64_t c) { return RBOperatorTable(std::vector<std::vector<std::int64_t>>{{c}}); }
  static RBOperatorTable zero(std::size_t k);
  static RBOperatorTable identity(std::size_t k);

  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

  /// Throws IllDefinedOperator when the table does not respect the
  /// component orders of R.
  void check_well_defined(const FiniteRing& ring) const;
  RingElem apply(const FiniteRing& ring, const RingElem& x) const;

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

/// Exhaustive check of P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy) over all
/// pairs, with λ reduced into R.
bool verify_rb_operator(const FiniteRing& ring, const RBOperatorTable& op, std::int64_t weight);

/// All c in [0, n) for which multiplication by c is a Rota-Baxter operator
/// of weight λ on Z/n, in increasing order.
std::vector<std::int64_t> enumerate_rb_operators(std::int64_t n, std::int64_t weight);

/// φ(a_0), ..., φ(a_upto) with φ(a_0) = 1 and φ(a_{m+1}) = P(φ(a_m)).
/// Throws UnverifiedOperator unless (R, P) is Rota-Baxter of the weight.
std::vector<RingElem> structure_map_images(const FiniteRing& ring, const RBOperatorTable& op,
                                           std::int64_t weight, std::size_t upto);

/// φ(f) for f over Z, from precomputed images (enough of them to cover deg f).
RingElem apply_structure_map(const FiniteRing& ring, const std::vector<RingElem>& images,
                             const RBElement& f);

struct CharacteristicReport {
  AscentSet ascent;
  /// Ω_j of ker φ for j = 0..bound.
  std::vector<KIdeal> omegas;
  /// For each j with Ω_j != 0, a kernel element of degree j whose leading
  /// coefficient generates Ω_j.
  std::vector<std::optional<RBElement>> witnesses;
  /// φ(a_m) for m = 0..bound.
  std::vector<RingElem> images;
  /// First repeat in the orbit: φ(a_{orbit_start + orbit_period}) = φ(a_{orbit_start}).
  std::size_t orbit_start = 0;
  std::size_t orbit_period = 0;
  bool stable = false;
};

/// Rota-Baxter characteristic of (R, P) over the weight-λ algebra on Z:
/// Ω_j = {b : b φ(a_j) ∈ <φ(a_0), ..., φ(a_{j-1})>} for j <= bound, via a
/// Hermite basis of the relation lattice. Stable once the bound reaches the
/// first orbit repeat or Ω_bound is already Z.
CharacteristicReport characteristic(const FiniteRing& ring, const RBOperatorTable& op,
                                    std::int64_t weight, std::size_t bound);

}  // namespace rbchar
