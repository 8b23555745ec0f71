#include "rbchar/poly_bridge.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rbchar {

namespace {

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly RatPoly::monomial(std::size_t degree, const mpq_class& c) {
  std::vector<mpq_class> coeffs(degree + 1);
  coeffs[degree] = c;
  return RatPoly(std::move(coeffs));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<std::size_t> RatPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<mpq_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return RatPoly(std::move(out));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(out));
}

std::string to_string(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (sgn(c[i]) == 0) continue;
    bool negative = sgn(c[i]) < 0;
    mpq_class mag = negative ? mpq_class(-c[i]) : c[i];
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

RatPoly to_poly(const RBElement& f) {
  if (f.ring().kind() != CoeffRing::Kind::Rationals || !f.ctx().weight.is_zero())
    throw std::invalid_argument("the polynomial bridge needs ring Q and weight 0");
  if (f.is_zero()) return RatPoly();
  std::vector<mpq_class> coeffs(*f.degree() + 1);
  for (const auto& [m, c] : f.terms()) coeffs[m] = c.value() / mpq_class(factorial(m));
  return RatPoly(std::move(coeffs));
}

RBElement from_poly(const RatPoly& p) {
  const CoeffRing q = CoeffRing::rationals();
  const AlgebraCtx ctx(q, q.zero());
  RBElement f(ctx);
  for (std::size_t m = 0; m < p.coeffs().size(); ++m)
    f.add_term(m, q.make(p.coeffs()[m] * mpq_class(factorial(m))));
  return f;
}

}  // namespace rbchar
