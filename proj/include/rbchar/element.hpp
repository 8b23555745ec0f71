#pragma once

#include "rbchar/ring.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rbchar {

/// Coefficient ring together with the weight λ of the Rota-Baxter operator.
struct AlgebraCtx {
  AlgebraCtx(CoeffRing r, Coeff w) : ring(std::move(r)), weight(std::move(w)) {}
  AlgebraCtx(CoeffRing r, long w) : ring(std::move(r)), weight(ring.make(w)) {}

  CoeffRing ring;
  Coeff weight;

  friend bool operator==(const AlgebraCtx& a, const AlgebraCtx& b) {
    return a.ring == b.ring && a.weight == b.weight;
  }
};

struct Term {
  std::size_t degree;
  Coeff coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.degree == b.degree && a.coeff == b.coeff;
  }
};

/// A finite sum Σ c_m a_m in the free Rota-Baxter algebra on k, where a_m is
/// the m-fold application of P to the unit a_0. Zero coefficients are never
/// stored.
class RBElement {
 public:
  explicit RBElement(AlgebraCtx ctx) : ctx_(std::move(ctx)) {}

  static RBElement zero(const AlgebraCtx& ctx) { return RBElement(ctx); }
  static RBElement basis(const AlgebraCtx& ctx, std::size_t degree);
  static RBElement monomial(const AlgebraCtx& ctx, std::size_t degree, const Coeff& c);
  static RBElement monomial(const AlgebraCtx& ctx, std::size_t degree, long c);
  /// Repeated degrees are summed.
  static RBElement from_terms(const AlgebraCtx& ctx, const std::vector<Term>& terms);
  static RBElement from_ints(const AlgebraCtx& ctx, const std::vector<std::pair<std::size_t, long>>& terms);

  const AlgebraCtx& ctx() const { return ctx_; }
  const CoeffRing& ring() const { return ctx_.ring; }
  const std::map<std::size_t, Coeff>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Degree of a nonzero element; nullopt plays the role of deg 0 = -inf.
  std::optional<std::size_t> degree() const;
  std::optional<Term> initial_term() const;
  std::optional<std::size_t> lowest_degree() const;
  std::vector<Term> support() const;
  Coeff coeff(std::size_t degree) const;

  void add_term(std::size_t degree, const Coeff& c);

  RBElement& operator+=(const RBElement& o);
  RBElement& operator-=(const RBElement& o);

  friend bool operator==(const RBElement& a, const RBElement& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  AlgebraCtx ctx_;
  std::map<std::size_t, Coeff> terms_;
};

RBElement operator+(RBElement a, const RBElement& b);
RBElement operator-(RBElement a, const RBElement& b);
RBElement operator-(const RBElement& a);
RBElement scalar_mul(const Coeff& c, const RBElement& f);
RBElement scalar_mul(long c, const RBElement& f);

/// Binomial coefficient as an exact integer.
mpz_class binomial(unsigned long n, unsigned long k);

/// The weight-λ product, extended bilinearly from
///   a_m ⋄ a_n = Σ_{i=0}^{min(m,n)} C(m+n-i, m) C(m, i) λ^i a_{m+n-i}.
RBElement diamond(const RBElement& f, const RBElement& g);

/// Same product computed only from the Rota-Baxter identity
///   P(x)P(y) = P(x P(y)) + P(P(x) y) + λ P(x y)
/// with a_m = P(a_{m-1}) and a_0 as unit. Kept as an independent check of
/// diamond().
RBElement diamond_oracle(const RBElement& f, const RBElement& g);

/// P(a_m) = a_{m+1}, extended linearly.
RBElement operator_p(const RBElement& f);
RBElement operator_p_pow(const RBElement& f, std::size_t times);

/// `2a2 - a1 + 3a0`; `0` for the zero element.
std::string to_string(const RBElement& f);

}  // namespace rbchar
