#include "rbchar/element.hpp"

#include <algorithm>
#include <sstream>

namespace rbchar {

namespace {

void require_same_ctx(const RBElement& a, const RBElement& b) {
  if (!(a.ctx() == b.ctx())) throw RingMismatch("elements live in different algebras");
}

}  // namespace

RBElement RBElement::basis(const AlgebraCtx& ctx, std::size_t degree) {
  return monomial(ctx, degree, ctx.ring.one());
}

RBElement RBElement::monomial(const AlgebraCtx& ctx, std::size_t degree, const Coeff& c) {
  RBElement e(ctx);
  e.add_term(degree, c);
  return e;
}

RBElement RBElement::monomial(const AlgebraCtx& ctx, std::size_t degree, long c) {
  return monomial(ctx, degree, ctx.ring.make(c));
}

RBElement RBElement::from_terms(const AlgebraCtx& ctx, const std::vector<Term>& terms) {
  RBElement e(ctx);
  for (const auto& t : terms) e.add_term(t.degree, t.coeff);
  return e;
}

RBElement RBElement::from_ints(const AlgebraCtx& ctx,
                               const std::vector<std::pair<std::size_t, long>>& terms) {
  RBElement e(ctx);
  for (const auto& [d, c] : terms) e.add_term(d, ctx.ring.make(c));
  return e;
}

std::optional<std::size_t> RBElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<Term> RBElement::initial_term() const {
  if (terms_.empty()) return std::nullopt;
  return Term{terms_.rbegin()->first, terms_.rbegin()->second};
}

std::optional<std::size_t> RBElement::lowest_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::vector<Term> RBElement::support() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [d, c] : terms_) out.push_back({d, c});
  return out;
}

Coeff RBElement::coeff(std::size_t degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? ctx_.ring.zero() : it->second;
}

void RBElement::add_term(std::size_t degree, const Coeff& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(degree);
  if (it == terms_.end()) {
    // re-canonicalize in case c came from another ring with equal values
    terms_.emplace(degree, ctx_.ring.make(c.value()));
    return;
  }
  it->second = ctx_.ring.add(it->second, c);
  if (it->second.is_zero()) terms_.erase(it);
}

RBElement& RBElement::operator+=(const RBElement& o) {
  require_same_ctx(*this, o);
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

RBElement& RBElement::operator-=(const RBElement& o) {
  require_same_ctx(*this, o);
  for (const auto& [d, c] : o.terms_) add_term(d, ctx_.ring.neg(c));
  return *this;
}

RBElement operator+(RBElement a, const RBElement& b) { return a += b; }
RBElement operator-(RBElement a, const RBElement& b) { return a -= b; }
RBElement operator-(const RBElement& a) { return RBElement::zero(a.ctx()) - a; }

RBElement scalar_mul(const Coeff& c, const RBElement& f) {
  RBElement out(f.ctx());
  if (c.is_zero()) return out;
  for (const auto& [d, x] : f.terms()) out.add_term(d, f.ring().mul(c, x));
  return out;
}

RBElement scalar_mul(long c, const RBElement& f) { return scalar_mul(f.ring().make(c), f); }

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

RBElement diamond(const RBElement& f, const RBElement& g) {
  require_same_ctx(f, g);
  const CoeffRing& ring = f.ring();
  const mpq_class& lambda = f.ctx().weight.value();
  RBElement out(f.ctx());
  if (f.is_zero() || g.is_zero()) return out;

  std::size_t max_min = std::min(*f.degree(), *g.degree());
  std::vector<mpq_class> lambda_pow(max_min + 1);
  lambda_pow[0] = 1;
  for (std::size_t i = 1; i <= max_min; ++i) lambda_pow[i] = lambda_pow[i - 1] * lambda;

  // accumulate exactly in Q, map into the ring once per degree
  std::map<std::size_t, mpq_class> acc;
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [n, d] : g.terms()) {
      mpq_class cd = c.value() * d.value();
      for (std::size_t i = 0; i <= std::min(m, n); ++i) {
        if (i > 0 && sgn(lambda) == 0) break;
        mpz_class b = binomial(m + n - i, m) * binomial(m, i);
        acc[m + n - i] += cd * mpq_class(b) * lambda_pow[i];
      }
    }
  }
  for (auto& [deg, v] : acc) out.add_term(deg, ring.make(v));
  return out;
}

namespace {

class OracleProducts {
 public:
  explicit OracleProducts(const AlgebraCtx& ctx) : ctx_(ctx) {}

  const RBElement& basis_product(std::size_t m, std::size_t n) {
    if (m > n) std::swap(m, n);
    auto key = std::make_pair(m, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    RBElement result(ctx_);
    if (m == 0) {
      result = RBElement::basis(ctx_, n);
    } else {
      // a_m a_n = P(a_{m-1}) P(a_{n-1})
      //         = P(a_{m-1} a_n) + P(a_m a_{n-1}) + λ P(a_{m-1} a_{n-1})
      RBElement x_py = basis_product(m - 1, n);
      RBElement px_y = basis_product(m, n - 1);
      RBElement xy = basis_product(m - 1, n - 1);
      result = operator_p(x_py) + operator_p(px_y) + scalar_mul(ctx_.weight, operator_p(xy));
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  AlgebraCtx ctx_;
  std::map<std::pair<std::size_t, std::size_t>, RBElement> memo_;
};

}  // namespace

RBElement diamond_oracle(const RBElement& f, const RBElement& g) {
  require_same_ctx(f, g);
  OracleProducts products(f.ctx());
  RBElement out(f.ctx());
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [n, d] : g.terms()) {
      out += scalar_mul(f.ring().mul(c, d), products.basis_product(m, n));
    }
  }
  return out;
}

RBElement operator_p(const RBElement& f) { return operator_p_pow(f, 1); }

RBElement operator_p_pow(const RBElement& f, std::size_t times) {
  RBElement out(f.ctx());
  for (const auto& [d, c] : f.terms()) out.add_term(d + times, c);
  return out;
}

std::string to_string(const RBElement& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const mpq_class& v = it->second.value();
    bool negative = sgn(v) < 0;
    mpq_class mag = negative ? mpq_class(-v) : v;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    if (mag != 1) os << mag.get_str();
    os << 'a' << it->first;
    first = false;
  }
  return os.str();
}

}  // namespace rbchar
