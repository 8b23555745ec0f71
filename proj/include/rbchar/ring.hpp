#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace rbchar {

/// Raised when two values from different coefficient rings or algebras meet.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact scalar. The value is always stored in the canonical form of the
/// ring that produced it: an integer for Z, a reduced fraction for Q and a
/// residue in [0, n) for Z/n. Arithmetic goes through CoeffRing.
class Coeff {
 public:
  Coeff() = default;

  const mpq_class& value() const { return value_; }
  /// Numerator; equal to the value itself for Z and Z/n.
  const mpz_class& integer() const { return value_.get_num(); }
  bool is_zero() const { return sgn(value_) == 0; }

  friend bool operator==(const Coeff& a, const Coeff& b) { return a.value_ == b.value_; }

 private:
  friend class CoeffRing;
  explicit Coeff(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

/// Coefficient ring k: the integers, the rationals or Z/nZ with n >= 2.
class CoeffRing {
 public:
  enum class Kind { Integers, Rationals, IntegersMod };

  static CoeffRing integers() { return CoeffRing(Kind::Integers, 0); }
  static CoeffRing rationals() { return CoeffRing(Kind::Rationals, 0); }
  static CoeffRing integers_mod(const mpz_class& n);

  /// Parses `z`, `q` or `z:<n>`.
  static CoeffRing parse(std::string_view text);

  Kind kind() const { return kind_; }
  const mpz_class& modulus() const { return modulus_; }
  bool is_field() const { return kind_ == Kind::Rationals; }
  /// Z and Q. Z/n is never treated as a domain here, even for prime n.
  bool is_char0_domain() const { return kind_ != Kind::IntegersMod; }

  Coeff zero() const { return Coeff(); }
  Coeff one() const { return make(1); }
  Coeff make(long v) const { return make(mpz_class(v)); }
  Coeff make(const mpz_class& v) const;
  /// Throws std::domain_error when v has no image in this ring
  /// (a proper fraction in Z, a non-invertible denominator in Z/n).
  Coeff make(const mpq_class& v) const;
  /// Parses an integer or `p/q` literal and maps it into the ring.
  Coeff parse_coeff(std::string_view text) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff pow(const Coeff& a, unsigned long e) const;

  /// Lift used by the integer lattice code: the integer itself for Z, the
  /// residue in [0, n) for Z/n. Throws for Q.
  mpz_class lift(const Coeff& a) const;

  /// Descriptor form: `z`, `q`, `z:12`.
  std::string descriptor() const;
  /// Display form: `Z`, `Q`, `Z/12`.
  std::string display() const;

  friend bool operator==(const CoeffRing& a, const CoeffRing& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  CoeffRing(Kind kind, const mpz_class& n) : kind_(kind), modulus_(n) {}
  Coeff canonical(mpq_class v) const;

  Kind kind_;
  mpz_class modulus_;
};

std::string to_string(const Coeff& c);

/// An ideal of the coefficient ring, stored by its canonical generator:
/// a nonnegative integer for Z, 0 or 1 for Q, and a positive divisor of n
/// (or 0 for the zero ideal) for Z/n. Equal ideals have equal generators.
class KIdeal {
 public:
  KIdeal(CoeffRing ring, const mpz_class& generator);

  static KIdeal zero(const CoeffRing& ring) { return KIdeal(ring, 0); }
  static KIdeal unit(const CoeffRing& ring) { return KIdeal(ring, 1); }
  /// The principal ideal (c).
  static KIdeal generated_by(const CoeffRing& ring, const Coeff& c);

  const CoeffRing& ring() const { return ring_; }
  const mpz_class& generator() const { return gen_; }
  bool is_zero() const { return gen_ == 0; }
  bool is_unit() const { return gen_ == 1; }

  /// `0`, `Z`, `6Z`, `Q`, `2(Z/12)`.
  std::string to_string() const;

  friend bool operator==(const KIdeal& a, const KIdeal& b) {
    return a.ring_ == b.ring_ && a.gen_ == b.gen_;
  }

 private:
  CoeffRing ring_;
  mpz_class gen_;
};

KIdeal kideal_add(const KIdeal& a, const KIdeal& b);
bool kideal_contains(const KIdeal& ideal, const Coeff& c);
/// a ⊆ b.
bool kideal_leq(const KIdeal& a, const KIdeal& b);
inline bool kideal_lt(const KIdeal& a, const KIdeal& b) { return kideal_leq(a, b) && !(a == b); }

/// Canonical residue of c modulo the ideal: [0, g) for Z and Z/n, 0 for the
/// unit ideal of Q, c itself for the zero ideal.
Coeff residue(const KIdeal& ideal, const Coeff& c);

}  // namespace rbchar
