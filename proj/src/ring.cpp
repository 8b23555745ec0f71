#include "rbchar/ring.hpp"

#include <cctype>
#include <stdexcept>

namespace rbchar {

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("empty integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

CoeffRing CoeffRing::integers_mod(const mpz_class& n) {
  if (n < 2) throw std::invalid_argument("Z/n requires n >= 2");
  return CoeffRing(Kind::IntegersMod, n);
}

CoeffRing CoeffRing::parse(std::string_view text) {
  if (text == "z" || text == "Z") return integers();
  if (text == "q" || text == "Q") return rationals();
  if (text.size() > 2 && (text[0] == 'z' || text[0] == 'Z') && text[1] == ':')
    return integers_mod(parse_integer(text.substr(2)));
  throw std::invalid_argument("unknown ring descriptor '" + std::string(text) +
                              "' (expected z, q or z:<n>)");
}

Coeff CoeffRing::canonical(mpq_class v) const {
  v.canonicalize();
  switch (kind_) {
    case Kind::Rationals:
      return Coeff(std::move(v));
    case Kind::Integers:
      if (v.get_den() != 1) throw std::domain_error("non-integral value in Z");
      return Coeff(std::move(v));
    case Kind::IntegersMod: {
      mpz_class num = v.get_num();
      if (v.get_den() != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), v.get_den_mpz_t(), modulus_.get_mpz_t()) == 0)
          throw std::domain_error("denominator not invertible in " + display());
        num *= inv;
      }
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), modulus_.get_mpz_t());
      return Coeff(mpq_class(r));
    }
  }
  return Coeff();
}

Coeff CoeffRing::make(const mpz_class& v) const { return canonical(mpq_class(v)); }
Coeff CoeffRing::make(const mpq_class& v) const { return canonical(v); }

Coeff CoeffRing::parse_coeff(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return make(parse_integer(text));
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make(mpq_class(num, den));
}

Coeff CoeffRing::add(const Coeff& a, const Coeff& b) const { return canonical(a.value_ + b.value_); }
Coeff CoeffRing::sub(const Coeff& a, const Coeff& b) const { return canonical(a.value_ - b.value_); }
Coeff CoeffRing::mul(const Coeff& a, const Coeff& b) const { return canonical(a.value_ * b.value_); }
Coeff CoeffRing::neg(const Coeff& a) const { return canonical(-a.value_); }

Coeff CoeffRing::pow(const Coeff& a, unsigned long e) const {
  if (kind_ == Kind::IntegersMod) {
    mpz_class r;
    mpz_powm_ui(r.get_mpz_t(), a.integer().get_mpz_t(), e, modulus_.get_mpz_t());
    return Coeff(mpq_class(r));
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), a.value_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), a.value_.get_den_mpz_t(), e);
  return canonical(mpq_class(num, den));
}

mpz_class CoeffRing::lift(const Coeff& a) const {
  if (kind_ == Kind::Rationals) throw std::logic_error("no integer lift over Q");
  return a.integer();
}

std::string CoeffRing::descriptor() const {
  switch (kind_) {
    case Kind::Integers: return "z";
    case Kind::Rationals: return "q";
    case Kind::IntegersMod: return "z:" + modulus_.get_str();
  }
  return {};
}

std::string CoeffRing::display() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::IntegersMod: return "Z/" + modulus_.get_str();
  }
  return {};
}

std::string to_string(const Coeff& c) { return c.value().get_str(); }

// ---------------------------------------------------------------------------

KIdeal::KIdeal(CoeffRing ring, const mpz_class& generator) : ring_(std::move(ring)) {
  switch (ring_.kind()) {
    case CoeffRing::Kind::Integers:
      gen_ = abs(generator);
      break;
    case CoeffRing::Kind::Rationals:
      gen_ = generator == 0 ? 0 : 1;
      break;
    case CoeffRing::Kind::IntegersMod:
      gen_ = gcd(generator, ring_.modulus());
      if (gen_ == ring_.modulus()) gen_ = 0;
      break;
  }
}

KIdeal KIdeal::generated_by(const CoeffRing& ring, const Coeff& c) {
  if (ring.kind() == CoeffRing::Kind::Rationals) return c.is_zero() ? zero(ring) : unit(ring);
  return KIdeal(ring, c.integer());
}

std::string KIdeal::to_string() const {
  if (gen_ == 0) return "0";
  switch (ring_.kind()) {
    case CoeffRing::Kind::Integers:
      return gen_ == 1 ? "Z" : gen_.get_str() + "Z";
    case CoeffRing::Kind::Rationals:
      return "Q";
    case CoeffRing::Kind::IntegersMod:
      return gen_ == 1 ? ring_.display() : gen_.get_str() + "(" + ring_.display() + ")";
  }
  return {};
}

KIdeal kideal_add(const KIdeal& a, const KIdeal& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("ideals of different rings");
  return KIdeal(a.ring(), gcd(a.generator(), b.generator()));
}

bool kideal_contains(const KIdeal& ideal, const Coeff& c) {
  if (c.is_zero()) return true;
  if (ideal.is_zero()) return false;
  if (ideal.ring().is_field()) return true;
  return mpz_divisible_p(c.integer().get_mpz_t(), ideal.generator().get_mpz_t()) != 0;
}

bool kideal_leq(const KIdeal& a, const KIdeal& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("ideals of different rings");
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  return mpz_divisible_p(a.generator().get_mpz_t(), b.generator().get_mpz_t()) != 0;
}

Coeff residue(const KIdeal& ideal, const Coeff& c) {
  const CoeffRing& ring = ideal.ring();
  if (ideal.is_zero()) return c;
  if (ring.is_field()) return ring.zero();
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), c.integer().get_mpz_t(), ideal.generator().get_mpz_t());
  return ring.make(r);
}

}  // namespace rbchar
