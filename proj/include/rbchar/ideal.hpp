#pragma once

#include "rbchar/element.hpp"
#include "rbchar/hermite.hpp"
#include "rbchar/ring.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rbchar {

class InvalidAscentSet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnstableSaturation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoAscentWithinBound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AscentPair {
  std::size_t point;
  KIdeal level;

  friend bool operator==(const AscentPair& a, const AscentPair& b) {
    return a.point == b.point && a.level == b.level;
  }
};

/// The pairs (s_j, Ω_{s_j}) at which the chain of leading-coefficient ideals
/// strictly increases. Points and levels are both strictly increasing and
/// every level is nonzero. The empty set describes the zero ideal.
class AscentSet {
 public:
  /// Throws InvalidAscentSet when the invariants fail.
  AscentSet(CoeffRing ring, std::vector<AscentPair> pairs);

  const CoeffRing& ring() const { return ring_; }
  const std::vector<AscentPair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }

  /// Ω_i: the level of the last ascending point at or below i.
  KIdeal level_at(std::size_t degree) const;

  /// `{(1, 2Z), (3, Z)}`.
  std::string to_string() const;

  friend bool operator==(const AscentSet& a, const AscentSet& b) {
    return a.ring_ == b.ring_ && a.pairs_ == b.pairs_;
  }

 private:
  CoeffRing ring_;
  std::vector<AscentPair> pairs_;
};

/// Generators of a Rota-Baxter ideal. Zero generators are rejected.
class RBIdealGens {
 public:
  RBIdealGens(AlgebraCtx ctx, std::vector<RBElement> gens);

  const AlgebraCtx& ctx() const { return ctx_; }
  const std::vector<RBElement>& gens() const { return gens_; }

 private:
  AlgebraCtx ctx_;
  std::vector<RBElement> gens_;
};

struct SaturationConfig {
  std::size_t slack_start = 4;
  std::size_t slack_step = 2;
  std::size_t slack_max = 12;
  /// Closure passes allowed per slack before giving up.
  std::size_t max_passes = 256;
};

/// Degree-truncated span of a finitely generated Rota-Baxter ideal.
///
/// The span of the generators is closed under P and under multiplication by
/// a_n (n >= 1), keeping only elements of degree <= bound + slack. The
/// result is held as a Hermite basis indexed by degree. omegas[j] is the
/// ideal generated by the pivot in degree j; it is always contained in the
/// true Ω_j and is exact once the stable flag is set.
class SaturationState {
 public:
  const RBIdealGens& generators() const { return gens_; }
  const AlgebraCtx& ctx() const { return gens_.ctx(); }
  std::size_t bound() const { return bound_; }
  std::size_t slack() const { return slack_; }
  std::size_t top_degree() const { return bound_ + slack_; }
  bool stable() const { return stable_; }
  const std::string& diagnostic() const { return diagnostic_; }
  const std::vector<KIdeal>& omegas() const { return omegas_; }
  const HermiteBasis& echelon() const { return echelon_; }

  /// Nonzero echelon rows as elements of the algebra.
  std::vector<RBElement> echelon_rows() const;
  /// The echelon row whose initial term sits in the given degree.
  std::optional<RBElement> pivot_row(std::size_t degree) const;

 private:
  friend SaturationState saturate_at_slack(const RBIdealGens&, std::size_t, std::size_t,
                                           const SaturationConfig&);
  friend SaturationState saturate(const RBIdealGens&, std::size_t, const SaturationConfig&);

  SaturationState(RBIdealGens gens, std::size_t bound, std::size_t slack, HermiteBasis echelon)
      : gens_(std::move(gens)), bound_(bound), slack_(slack), echelon_(std::move(echelon)) {}

  RBIdealGens gens_;
  std::size_t bound_;
  std::size_t slack_;
  HermiteBasis echelon_;
  std::vector<KIdeal> omegas_;
  bool stable_ = false;
  std::string diagnostic_;
};

/// One closure at a fixed slack. The returned state is never marked stable.
SaturationState saturate_at_slack(const RBIdealGens& gens, std::size_t bound, std::size_t slack,
                                  const SaturationConfig& config = {});

/// Closure with growing slack until omegas[0..bound] agree for two
/// consecutive slacks (stable), or config.slack_max is reached (unstable,
/// with a diagnostic).
SaturationState saturate(const RBIdealGens& gens, std::size_t bound,
                         const SaturationConfig& config = {});

/// Throws std::out_of_range for j > bound.
KIdeal omega(const SaturationState& state, std::size_t j);

/// Least j <= bound with Ω_j != 0; throws NoAscentWithinBound otherwise.
std::size_t starting_point(const SaturationState& state);

/// Throws UnstableSaturation for an unstable state unless allow_unstable is
/// set, in which case the result only describes the ideal up to the bound.
AscentSet ascent_set(const SaturationState& state, bool allow_unstable = false);

/// The initial ideal in(I) is homogeneous and shares its ascent set with I,
/// so the ascent set is its complete description.
AscentSet initial_ideal(const SaturationState& state);

enum class Membership { Member, NotMemberUpToBound, Unknown };

std::string to_string(Membership m);

/// Reduces f against the echelon rows. Throws std::out_of_range when
/// deg f > bound.
Membership membership(const SaturationState& state, const RBElement& f);

/// One element per ascending point s_j, with initial term ω_j a_{s_j} where
/// ω_j is the canonical generator of Ω_{s_j}. Requires a stable state.
std::vector<RBElement> ascent_generating_set(const SaturationState& state);

}  // namespace rbchar
