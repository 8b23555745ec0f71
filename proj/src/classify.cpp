#include "rbchar/classify.hpp"

#include <algorithm>
#include <sstream>

namespace rbchar {

bool HomogeneousIdeal::contains(const RBElement& f) const {
  if (!(f.ring() == ascent_.ring())) throw RingMismatch("element over a different ring");
  for (const auto& [d, c] : f.terms())
    if (!kideal_contains(level(d), c)) return false;
  return true;
}

std::vector<RBElement> HomogeneousIdeal::generators(const AlgebraCtx& ctx) const {
  if (!(ctx.ring == ascent_.ring())) throw RingMismatch("context over a different ring");
  std::vector<RBElement> out;
  for (const auto& p : ascent_.pairs())
    out.push_back(RBElement::monomial(ctx, p.point, ctx.ring.make(p.level.generator())));
  return out;
}

HomogeneousIdeal ideal_from_ascent(const AscentSet& ascent) { return HomogeneousIdeal(ascent); }

bool homogeneous_membership(const AscentSet& ascent, const RBElement& f) {
  return HomogeneousIdeal(ascent).contains(f);
}

// ---------------------------------------------------------------------------

std::string QuotientSegment::factor() const {
  const CoeffRing& ring = level.ring();
  if (level.is_zero()) return ring.display();
  if (level.is_unit()) return "0";
  return "Z/" + level.generator().get_str();
}

std::string QuotientShape::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    if (i) os << ", ";
    os << '[' << s.begin << ',' << (s.end ? std::to_string(*s.end) : "inf") << ")->" << s.factor();
  }
  return os.str();
}

QuotientShape quotient_shape(const AscentSet& ascent) {
  QuotientShape shape;
  const auto& pairs = ascent.pairs();
  const KIdeal zero = KIdeal::zero(ascent.ring());
  if (pairs.empty()) {
    shape.segments.push_back({0, std::nullopt, zero});
    return shape;
  }
  if (pairs.front().point > 0) shape.segments.push_back({0, pairs.front().point, zero});
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::optional<std::size_t> end;
    if (i + 1 < pairs.size()) end = pairs[i + 1].point;
    shape.segments.push_back({pairs[i].point, end, pairs[i].level});
  }
  return shape;
}

// ---------------------------------------------------------------------------

RBElement reduce(const RBElement& f, const std::vector<RBElement>& ascent_gens, const AscentSet& ascent) {
  const CoeffRing& ring = f.ring();
  if (!(ring == ascent.ring())) throw RingMismatch("element over a different ring");
  const auto& pairs = ascent.pairs();
  if (ascent_gens.size() != pairs.size())
    throw std::invalid_argument("need exactly one generator per ascending point");
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const RBElement& g = ascent_gens[j];
    if (!(g.ctx() == f.ctx())) throw RingMismatch("generator from a different algebra");
    auto lead = g.initial_term();
    if (!lead || lead->degree != pairs[j].point)
      throw std::invalid_argument("generator " + to_string(g) + " does not start at degree " +
                                  std::to_string(pairs[j].point));
    bool matches = ring.is_field() ? !lead->coeff.is_zero() : lead->coeff.integer() == pairs[j].level.generator();
    if (!matches)
      throw std::invalid_argument("initial coefficient of " + to_string(g) + " does not generate " +
                                  pairs[j].level.to_string());
  }

  RBElement rest = f;
  if (f.is_zero() || pairs.empty()) return rest;
  for (std::size_t n = *f.degree() + 1; n-- > pairs.front().point;) {
    // r: last ascending point at or below n
    std::size_t r = 0;
    while (r + 1 < pairs.size() && pairs[r + 1].point <= n) ++r;
    Coeff b = rest.coeff(n);
    if (b.is_zero()) continue;
    Coeff kept = residue(pairs[r].level, b);
    Coeff lead = ascent_gens[r].initial_term()->coeff;
    Coeff c = ring.is_field()
                  ? ring.make(ring.sub(b, kept).value() / lead.value())
                  : ring.make(mpz_class((b.integer() - kept.integer()) / lead.integer()));
    rest -= scalar_mul(c, operator_p_pow(ascent_gens[r], n - pairs[r].point));
  }
  return rest;
}

RBElement forced_coefficients(const AlgebraCtx& ctx, std::size_t t, std::size_t r, const Coeff& c_t) {
  if (r > t) throw std::invalid_argument("lowest degree above the starting point");
  if (!ctx.ring.is_char0_domain())
    throw std::invalid_argument("forced coefficients need a characteristic-zero domain (Z or Q)");
  RBElement f = RBElement::monomial(ctx, t, c_t);
  for (std::size_t i = r; i < t; ++i) {
    Coeff c = ctx.ring.mul(ctx.ring.make(binomial(t - r, t - i)), ctx.ring.pow(ctx.weight, t - i));
    f.add_term(i, ctx.ring.mul(c, c_t));
  }
  return f;
}

SupportVerdict weight0_support_check(const SaturationState& state) {
  const AlgebraCtx& ctx = state.ctx();
  if (!ctx.weight.is_zero()) throw std::invalid_argument("support check needs weight 0");
  if (!ctx.ring.is_char0_domain()) throw std::invalid_argument("support check needs Z or Q");
  if (!state.stable()) throw UnstableSaturation("saturation is not stable: " + state.diagnostic());

  SupportVerdict verdict;
  verdict.starting_point = starting_point(state);
  const std::size_t t = verdict.starting_point;
  for (const RBElement& row : state.echelon_rows()) {
    if (*row.lowest_degree() < t) {
      verdict.counterexample = row;
      verdict.detail = "row " + to_string(row) + " has a term below degree " + std::to_string(t);
      return verdict;
    }
  }
  if (ctx.ring.is_field()) {
    for (std::size_t j = t; j <= state.bound(); ++j) {
      if (!state.omegas()[j].is_unit()) {
        verdict.detail = "leading ideal at degree " + std::to_string(j) + " is not Q";
        return verdict;
      }
    }
  }
  verdict.pass = true;
  return verdict;
}

ZAscentData z_ascent_data(const AscentSet& ascent) {
  if (ascent.ring().kind() != CoeffRing::Kind::Integers)
    throw std::invalid_argument("integer ascent data needs ring Z");
  ZAscentData data;
  for (const auto& p : ascent.pairs()) {
    const mpz_class& w = p.level.generator();
    if (!data.pairs.empty()) {
      const mpz_class& prev = data.pairs.back().second;
      if (w == prev || !mpz_divisible_p(prev.get_mpz_t(), w.get_mpz_t()))
        throw std::invalid_argument("ascent levels must satisfy w_{j+1} | w_j, w_{j+1} != w_j (got " +
                                    prev.get_str() + " then " + w.get_str() + ")");
    }
    data.pairs.emplace_back(p.point, w);
  }
  return data;
}

// ---------------------------------------------------------------------------

PrimeReport is_prime_rb_ideal(const AscentSet& ascent, const Coeff& weight) {
  const CoeffRing& ring = ascent.ring();
  if (ring.kind() != CoeffRing::Kind::Integers)
    throw std::invalid_argument("prime classification is only available over Z");
  if (!weight.is_zero()) throw std::invalid_argument("prime classification needs weight 0");
  if (ascent.empty()) throw std::invalid_argument("the zero ideal is excluded");
  const auto& pairs = ascent.pairs();
  if (pairs.front().point == 0 && pairs.front().level.is_unit())
    throw std::invalid_argument("the whole algebra is not a proper ideal");
  z_ascent_data(ascent);

  PrimeReport report;
  if (pairs.size() == 1 && pairs[0].point == 1 && pairs[0].level.is_unit()) {
    report.prime = true;
    report.quotient = "Z";
    return report;
  }
  if (pairs.size() == 2 && pairs[0].point == 0 && pairs[1].point == 1 && pairs[1].level.is_unit() &&
      mpz_probab_prime_p(pairs[0].level.generator().get_mpz_t(), 30) > 0) {
    report.prime = true;
    report.quotient = "Z/" + pairs[0].level.generator().get_str();
    return report;
  }

  report.quotient = quotient_shape(ascent).to_string();

  // Monomial zero divisors: c1 a_i, c2 a_j outside I with product inside.
  // Degrees up to max(s_max + 2, w_max) reach a_1 ⋄ a_{p-1} = p a_p, needed
  // when the ideal is p(everything).
  const AlgebraCtx ctx(ring, ring.zero());
  const HomogeneousIdeal ideal(ascent);
  const std::size_t s_max = pairs.back().point;
  const unsigned long w_max = pairs.front().level.generator().get_ui();
  const std::size_t max_degree = std::max<std::size_t>(s_max + 2, w_max);
  const long max_coeff = static_cast<long>(std::max<unsigned long>(w_max, 1));
  for (std::size_t total = 0; total <= 2 * max_degree; ++total) {
    for (std::size_t i = (total > max_degree ? total - max_degree : 0); 2 * i <= total; ++i) {
      const std::size_t j = total - i;
      for (long c1 = 1; c1 <= max_coeff; ++c1) {
        RBElement f = RBElement::monomial(ctx, i, c1);
        if (ideal.contains(f)) continue;
        for (long c2 = 1; c2 <= max_coeff; ++c2) {
          RBElement g = RBElement::monomial(ctx, j, c2);
          if (ideal.contains(g)) continue;
          if (ideal.contains(diamond(f, g))) {
            report.witness = std::make_pair(std::move(f), std::move(g));
            return report;
          }
        }
      }
    }
  }
  throw std::logic_error("no zero-divisor witness found for " + ascent.to_string());
}

}  // namespace rbchar
