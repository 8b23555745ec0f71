#include "rbchar/ideal.hpp"

#include <sstream>

namespace rbchar {

// ---------------------------------------------------------------------------
// AscentSet

AscentSet::AscentSet(CoeffRing ring, std::vector<AscentPair> pairs)
    : ring_(std::move(ring)), pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const AscentPair& p = pairs_[i];
    if (!(p.level.ring() == ring_)) throw InvalidAscentSet("ascent level from a different ring");
    if (p.level.is_zero()) throw InvalidAscentSet("ascent level must be nonzero");
    if (i == 0) continue;
    const AscentPair& prev = pairs_[i - 1];
    if (prev.point >= p.point) throw InvalidAscentSet("ascending points must strictly increase");
    if (!kideal_lt(prev.level, p.level))
      throw InvalidAscentSet("ascending levels must strictly increase: " + prev.level.to_string() +
                             " then " + p.level.to_string());
  }
}

KIdeal AscentSet::level_at(std::size_t degree) const {
  KIdeal level = KIdeal::zero(ring_);
  for (const auto& p : pairs_) {
    if (p.point > degree) break;
    level = p.level;
  }
  return level;
}

std::string AscentSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) os << ", ";
    os << '(' << pairs_[i].point << ", " << pairs_[i].level.to_string() << ')';
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Generators and conversions

RBIdealGens::RBIdealGens(AlgebraCtx ctx, std::vector<RBElement> gens)
    : ctx_(std::move(ctx)), gens_(std::move(gens)) {
  if (gens_.empty()) throw std::invalid_argument("an ideal needs at least one generator");
  for (const auto& g : gens_) {
    if (!(g.ctx() == ctx_)) throw RingMismatch("generator from a different algebra");
    if (g.is_zero()) throw std::invalid_argument("zero generator");
  }
}

namespace {

// Products for the lattice are computed over Z (with the lifted weight) for
// Z and Z/n, and over Q for Q.
AlgebraCtx working_ctx(const AlgebraCtx& ctx) {
  if (ctx.ring.kind() == CoeffRing::Kind::Rationals) return ctx;
  return AlgebraCtx(CoeffRing::integers(), CoeffRing::integers().make(ctx.ring.lift(ctx.weight)));
}

IntVector to_vector(const RBElement& f, std::size_t dim) {
  IntVector v(dim);
  mpz_class den = 1;
  for (const auto& [d, c] : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.value().get_den_mpz_t());
  for (const auto& [d, c] : f.terms()) {
    if (d >= dim) throw std::out_of_range("element degree exceeds tracked range");
    mpq_class scaled = c.value() * den;
    v[d] = scaled.get_num();
  }
  return v;
}

RBElement from_vector(const AlgebraCtx& ctx, const IntVector& v) {
  RBElement e(ctx);
  for (std::size_t d = 0; d < v.size(); ++d)
    if (sgn(v[d]) != 0) e.add_term(d, ctx.ring.make(v[d]));
  return e;
}

mpz_class modulus_of(const CoeffRing& ring) {
  return ring.kind() == CoeffRing::Kind::IntegersMod ? ring.modulus() : mpz_class(0);
}

std::vector<KIdeal> omegas_of(const HermiteBasis& basis, const CoeffRing& ring, std::size_t bound) {
  std::vector<KIdeal> out;
  out.reserve(bound + 1);
  for (std::size_t j = 0; j <= bound; ++j) {
    if (!basis.has_pivot(j)) {
      out.push_back(KIdeal::zero(ring));
    } else if (ring.is_field()) {
      out.push_back(KIdeal::unit(ring));
    } else {
      out.push_back(KIdeal(ring, basis.pivot_entry(j)));
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// SaturationState

std::vector<RBElement> SaturationState::echelon_rows() const {
  std::vector<RBElement> out;
  for (std::size_t d : echelon_.pivots()) {
    RBElement e = from_vector(ctx(), echelon_.row(d));
    if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

std::optional<RBElement> SaturationState::pivot_row(std::size_t degree) const {
  if (degree >= echelon_.dim() || !echelon_.has_pivot(degree)) return std::nullopt;
  RBElement e = from_vector(ctx(), echelon_.row(degree));
  if (e.is_zero()) return std::nullopt;
  return e;
}

SaturationState saturate_at_slack(const RBIdealGens& gens, std::size_t bound, std::size_t slack,
                                  const SaturationConfig& config) {
  const AlgebraCtx& ctx = gens.ctx();
  const std::size_t top = bound + slack;
  const std::size_t dim = top + 1;
  const AlgebraCtx work = working_ctx(ctx);

  HermiteBasis basis(dim, modulus_of(ctx.ring));
  for (const auto& g : gens.gens()) {
    if (*g.degree() > top) continue;
    RBElement lifted = ctx.ring.is_field() ? g : from_vector(work, to_vector(g, dim));
    basis.insert(to_vector(lifted, dim));
  }

  std::string diagnostic;
  bool closed = false;
  for (std::size_t pass = 0; pass < config.max_passes; ++pass) {
    bool grew = false;
    std::vector<IntVector> snapshot;
    for (std::size_t d : basis.pivots()) snapshot.push_back(basis.row(d));
    for (const IntVector& row : snapshot) {
      auto lead = leading_index(row);
      if (!lead) continue;
      const std::size_t deg = *lead;
      if (deg >= top) continue;
      RBElement f = from_vector(work, row);
      grew |= basis.insert(to_vector(operator_p(f), dim));
      for (std::size_t n = 1; n + deg <= top; ++n)
        grew |= basis.insert(to_vector(diamond(RBElement::basis(work, n), f), dim));
    }
    basis.reduce();
    if (!grew) {
      closed = true;
      break;
    }
  }
  if (!closed) diagnostic = "closure did not finish within " + std::to_string(config.max_passes) + " passes";

  SaturationState state(gens, bound, slack, std::move(basis));
  state.omegas_ = omegas_of(state.echelon_, ctx.ring, bound);
  state.diagnostic_ = std::move(diagnostic);
  return state;
}

SaturationState saturate(const RBIdealGens& gens, std::size_t bound, const SaturationConfig& config) {
  if (config.slack_step == 0) throw std::invalid_argument("slack step must be positive");
  SaturationState prev = saturate_at_slack(gens, bound, config.slack_start, config);
  if (!prev.diagnostic_.empty()) return prev;
  for (std::size_t slack = config.slack_start + config.slack_step; slack <= config.slack_max;
       slack += config.slack_step) {
    SaturationState cur = saturate_at_slack(gens, bound, slack, config);
    if (!cur.diagnostic_.empty()) return cur;
    if (cur.omegas_ == prev.omegas_) {
      cur.stable_ = true;
      return cur;
    }
    prev = std::move(cur);
  }
  prev.diagnostic_ = "leading-coefficient ideals still changing at slack " + std::to_string(prev.slack_);
  return prev;
}

KIdeal omega(const SaturationState& state, std::size_t j) {
  if (j > state.bound()) throw std::out_of_range("degree " + std::to_string(j) + " beyond bound");
  return state.omegas()[j];
}

std::size_t starting_point(const SaturationState& state) {
  for (std::size_t j = 0; j <= state.bound(); ++j)
    if (!state.omegas()[j].is_zero()) return j;
  throw NoAscentWithinBound("no ascent within bound " + std::to_string(state.bound()));
}

AscentSet ascent_set(const SaturationState& state, bool allow_unstable) {
  if (!state.stable() && !allow_unstable)
    throw UnstableSaturation("saturation is not stable: " + state.diagnostic());
  const CoeffRing& ring = state.ctx().ring;
  std::vector<AscentPair> pairs;
  KIdeal prev = KIdeal::zero(ring);
  for (std::size_t j = 0; j <= state.bound(); ++j) {
    const KIdeal& cur = state.omegas()[j];
    if (!(cur == prev)) {
      if (!kideal_leq(prev, cur))
        throw std::logic_error("leading-coefficient ideals are not increasing at degree " +
                               std::to_string(j));
      pairs.push_back({j, cur});
      prev = cur;
    }
  }
  return AscentSet(ring, std::move(pairs));
}

AscentSet initial_ideal(const SaturationState& state) { return ascent_set(state); }

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Member: return "member";
    case Membership::NotMemberUpToBound: return "not-member-up-to-bound";
    case Membership::Unknown: return "unknown";
  }
  return {};
}

Membership membership(const SaturationState& state, const RBElement& f) {
  if (!(f.ctx() == state.ctx())) throw RingMismatch("element from a different algebra");
  if (f.is_zero()) return Membership::Member;
  if (*f.degree() > state.bound())
    throw std::out_of_range("element degree " + std::to_string(*f.degree()) + " beyond bound " +
                            std::to_string(state.bound()));
  const std::size_t dim = state.echelon().dim();
  bool zero_remainder;
  if (state.ctx().ring.is_field()) {
    std::vector<mpq_class> v(dim);
    for (const auto& [d, c] : f.terms()) v[d] = c.value();
    zero_remainder = !leading_index(state.echelon().remainder(std::move(v)));
  } else {
    IntVector v(dim);
    for (const auto& [d, c] : f.terms()) v[d] = c.integer();
    zero_remainder = !leading_index(state.echelon().remainder(std::move(v)));
  }
  if (zero_remainder) return Membership::Member;
  return state.stable() ? Membership::NotMemberUpToBound : Membership::Unknown;
}

std::vector<RBElement> ascent_generating_set(const SaturationState& state) {
  if (!state.stable()) throw UnstableSaturation("saturation is not stable: " + state.diagnostic());
  const AlgebraCtx& ctx = state.ctx();
  std::vector<RBElement> out;
  const AscentSet a = ascent_set(state);
  for (const auto& pair : a.pairs()) {
    RBElement row = *state.pivot_row(pair.point);
    if (ctx.ring.is_field()) {
      Coeff lead = row.initial_term()->coeff;
      row = scalar_mul(ctx.ring.make(mpq_class(1) / lead.value()), row);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace rbchar
