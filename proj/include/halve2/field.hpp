#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace halve2 {

enum class FieldKind { Rationals, PrimeField };

/// Identifies an exact field: either Q or F_p with p an odd prime.
///
/// Instances are cheap to copy and immutable. Two specs compare equal iff
/// they have the same kind and modulus.
class FieldSpec {
 public:
  /// The field of rational numbers.
  static FieldSpec rationals();

  /// F_p. Throws EvenOrSmallModulus for p < 3 or p even, NotPrime for
  /// composites, ModulusTooLarge when primality cannot be decided
  /// deterministically.
  static FieldSpec prime_field(const mpz_class& p);

  /// Parses `"Q"` or `"Fp:<decimal prime>"`.
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const noexcept { return data_->kind; }
  bool is_rationals() const noexcept { return data_->kind == FieldKind::Rationals; }
  bool is_prime_field() const noexcept { return data_->kind == FieldKind::PrimeField; }

  /// Only meaningful for prime fields; zero for Q.
  const mpz_class& modulus() const noexcept { return data_->modulus; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b);

 private:
  struct Data {
    FieldKind kind;
    mpz_class modulus;
  };

  explicit FieldSpec(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

FieldSpec make_field(FieldKind kind, const std::optional<mpz_class>& modulus = std::nullopt);

/// Deterministic primality test. Exact for n below 3.3e24 (Miller-Rabin with
/// the first thirteen prime bases); throws ModulusTooLarge above that.
bool is_prime(const mpz_class& n);

/// An element of a FieldSpec.
///
/// Rationals are kept in lowest terms with positive denominator. Prime field
/// values are kept as integers in [0, p-1]. Mixing specs throws SpecMismatch.
class FieldElement {
 public:
  FieldElement(const FieldSpec& spec, long value);
  FieldElement(const FieldSpec& spec, const mpz_class& value);
  /// Rationals only; a prime-field spec throws SpecMismatch unless the
  /// denominator is invertible mod p, in which case the fraction is reduced.
  FieldElement(const FieldSpec& spec, const mpq_class& value);

  /// Element literal: `"<int>"` or `"<int>/<int>"` for Q, `"<int>"` for F_p
  /// (reduced mod p).
  static FieldElement parse(const FieldSpec& spec, std::string_view literal);

  static FieldElement zero(const FieldSpec& spec) { return {spec, 0L}; }
  static FieldElement one(const FieldSpec& spec) { return {spec, 1L}; }

  const FieldSpec& spec() const noexcept { return spec_; }
  const mpq_class& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return sgn(value_) == 0; }

  /// Canonical decimal literal, parseable by `parse`.
  std::string to_string() const;

  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const;

  FieldElement square() const { return *this * *this; }

  /// Exact equality. Elements of different fields are never equal.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Total order on representations (for use as a map key); not a field order.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

 private:
  void check_same(const FieldElement& o) const;
  void reduce();

  FieldSpec spec_;
  mpq_class value_;
};

/// True iff some r in the field has r*r == a.
bool is_square(const FieldElement& a);

/// The canonical square root when one exists: the nonnegative root over Q,
/// the root in [0, (p-1)/2] over F_p. The other root is its negative.
std::optional<FieldElement> sqrt_canonical(const FieldElement& a);

}  // namespace halve2
