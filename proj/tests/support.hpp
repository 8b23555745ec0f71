#pragma once

// Random generators and independent reference computations shared by the
// unit tests and the acceptance binary.

#include "rbchar/classify.hpp"
#include "rbchar/element.hpp"
#include "rbchar/ideal.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace rbtest {

using namespace rbchar;
using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline RBElement random_element(const AlgebraCtx& ctx, Rng& rng, std::size_t max_degree, long max_abs) {
  RBElement f(ctx);
  for (std::size_t d = 0; d <= max_degree; ++d)
    if (uniform(rng, 0, 2) != 0) f.add_term(d, ctx.ring.make(uniform(rng, -max_abs, max_abs)));
  return f;
}

inline RBElement random_nonzero(const AlgebraCtx& ctx, Rng& rng, std::size_t max_degree, long max_abs) {
  for (;;) {
    RBElement f = random_element(ctx, rng, max_degree, max_abs);
    if (!f.is_zero()) return f;
  }
}

/// Products of basis elements from the recursion a_0 = 1, a_{m+1} = P(a_m),
/// P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy), computed over Q with its own
/// binomial-free bookkeeping.
class ReferenceProduct {
 public:
  explicit ReferenceProduct(mpq_class weight) : weight_(std::move(weight)) {}

  using Vec = std::map<std::size_t, mpq_class>;

  const Vec& basis_product(std::size_t m, std::size_t n) {
    if (m > n) std::swap(m, n);
    auto key = std::make_pair(m, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Vec out;
    if (m == 0) {
      out[n] = 1;
    } else {
      auto shift_add = [&](const Vec& v, const mpq_class& scale) {
        for (const auto& [d, c] : v) out[d + 1] += scale * c;
      };
      Vec a = basis_product(m - 1, n);
      Vec b = basis_product(m, n - 1);
      Vec c = basis_product(m - 1, n - 1);
      shift_add(a, 1);
      shift_add(b, 1);
      shift_add(c, weight_);
      std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  RBElement product(const RBElement& f, const RBElement& g) {
    Vec acc;
    for (const auto& [m, cf] : f.terms())
      for (const auto& [n, cg] : g.terms())
        for (const auto& [d, c] : basis_product(m, n)) acc[d] += cf.value() * cg.value() * c;
    RBElement out(f.ctx());
    for (const auto& [d, c] : acc) out.add_term(d, f.ring().make(c));
    return out;
  }

 private:
  mpq_class weight_;
  std::map<std::pair<std::size_t, std::size_t>, Vec> memo_;
};

inline mpq_class lifted_weight(const AlgebraCtx& ctx) { return ctx.weight.value(); }

/// g2 = (t+1)P(f) - a_1 f - (λ(t-r) - λt) f for f with initial degree t and
/// lowest degree r; vanishes exactly when f has the forced shape.
inline RBElement g2_identity(const RBElement& f) {
  const AlgebraCtx& ctx = f.ctx();
  const std::size_t t = *f.degree();
  const std::size_t r = *f.lowest_degree();
  ReferenceProduct ref(lifted_weight(ctx));
  RBElement shifted(ctx);
  for (const auto& [d, c] : f.terms()) shifted.add_term(d + 1, c);
  RBElement g1 = scalar_mul(static_cast<long>(t + 1), shifted) - ref.product(RBElement::basis(ctx, 1), f);
  const Coeff b = ctx.ring.mul(ctx.weight, ctx.ring.make(static_cast<long>(t - r)));
  const Coeff lt = ctx.ring.mul(ctx.weight, ctx.ring.make(static_cast<long>(t)));
  return g1 - scalar_mul(ctx.ring.sub(b, lt), f);
}

/// A valid ascent set over Z: 1..max_points points in [0, max_s] with
/// generators ω_1, ..., ω_k, each a proper multiple of the next, all <= max_omega.
inline AscentSet random_z_ascent(Rng& rng, std::size_t max_points, std::size_t max_s, long max_omega) {
  const CoeffRing z = CoeffRing::integers();
  for (;;) {
    std::size_t k = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_points)));
    std::vector<std::size_t> points(max_s + 1);
    for (std::size_t i = 0; i <= max_s; ++i) points[i] = i;
    std::shuffle(points.begin(), points.end(), rng);
    if (k > points.size()) continue;
    points.resize(k);
    std::sort(points.begin(), points.end());
    long floor = 1L << (k - 1);
    if (floor > max_omega) continue;
    std::vector<long> omegas(k);
    omegas[k - 1] = uniform(rng, 1, max_omega / floor);
    bool ok = true;
    for (std::size_t j = k - 1; j-- > 0;) {
      long room = max_omega / omegas[j + 1];
      long reserve = 1L << j;
      if (room / reserve < 2) {
        ok = false;
        break;
      }
      omegas[j] = omegas[j + 1] * uniform(rng, 2, room / reserve);
    }
    if (!ok) continue;
    std::vector<AscentPair> pairs;
    for (std::size_t j = 0; j < k; ++j) pairs.push_back({points[j], KIdeal(z, omegas[j])});
    return AscentSet(z, std::move(pairs));
  }
}

}  // namespace rbtest
