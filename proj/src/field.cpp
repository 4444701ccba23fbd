#include "halve2/field.hpp"

#include <array>
#include <cctype>

#include "halve2/error.hpp"

namespace halve2 {

namespace {

// Miller-Rabin with the first 13 primes as bases is deterministic below this.
const mpz_class kDeterministicLimit("3317044064679887385961981");

constexpr std::array<unsigned long, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool strong_probable_prime(const mpz_class& n, unsigned long base) {
  mpz_class d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  mpz_class x;
  mpz_class a = base;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const mpz_class n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_decimal_integer(s))
    throw Error(ErrorKind::Parse, "not a decimal integer: '" + std::string(s) + "'");
  return mpz_class(std::string(s), 10);
}

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

// Tonelli-Shanks; `a` must be a nonzero quadratic residue mod the odd prime p.
mpz_class tonelli_shanks(const mpz_class& a, const mpz_class& p) {
  if (p % 4 == 3) return powm(a, (p + 1) / 4, p);

  mpz_class q = p - 1;
  unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);

  mpz_class z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;

  unsigned long m = s;
  mpz_class c = powm(z, q, p);
  mpz_class t = powm(a, q, p);
  mpz_class r = powm(a, (q + 1) / 2, p);
  while (t != 1) {
    unsigned long i = 0;
    mpz_class t2 = t;
    while (t2 != 1) {
      t2 = (t2 * t2) % p;
      ++i;
    }
    mpz_class b = c;
    for (unsigned long j = 0; j + 1 < m - i; ++j) b = (b * b) % p;
    m = i;
    c = (b * b) % p;
    t = (t * c) % p;
    r = (r * b) % p;
  }
  return r;
}

}  // namespace

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  for (unsigned long b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  if (n >= kDeterministicLimit)
    throw Error(ErrorKind::ModulusTooLarge,
                "primality of " + n.get_str() + " cannot be decided deterministically");
  for (unsigned long b : kBases)
    if (!strong_probable_prime(n, b)) return false;
  return true;
}

FieldSpec FieldSpec::rationals() {
  static const auto q = std::make_shared<const Data>(Data{FieldKind::Rationals, mpz_class(0)});
  return FieldSpec(q);
}

FieldSpec FieldSpec::prime_field(const mpz_class& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()))
    throw Error(ErrorKind::EvenOrSmallModulus,
                "modulus must be an odd prime >= 3, got " + p.get_str());
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, p.get_str() + " is not prime");
  return FieldSpec(std::make_shared<const Data>(Data{FieldKind::PrimeField, p}));
}

FieldSpec make_field(FieldKind kind, const std::optional<mpz_class>& modulus) {
  if (kind == FieldKind::Rationals) {
    if (modulus) throw Error(ErrorKind::InvalidArgument, "Q takes no modulus");
    return FieldSpec::rationals();
  }
  if (!modulus) throw Error(ErrorKind::InvalidArgument, "prime field requires a modulus");
  return FieldSpec::prime_field(*modulus);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  constexpr std::string_view prefix = "Fp:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    if (digits.empty() || digits.front() == '-' || !is_decimal_integer(digits))
      throw Error(ErrorKind::Parse, "bad prime in field spec '" + std::string(text) + "'");
    return prime_field(mpz_class(std::string(digits), 10));
  }
  throw Error(ErrorKind::Parse, "field spec must be 'Q' or 'Fp:<prime>', got '" +
                                    std::string(text) + "'");
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? std::string("Q") : "Fp:" + data_->modulus.get_str();
}

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->kind == b.data_->kind && a.data_->modulus == b.data_->modulus;
}

FieldElement::FieldElement(const FieldSpec& spec, long value) : spec_(spec), value_(value) {
  reduce();
}

FieldElement::FieldElement(const FieldSpec& spec, const mpz_class& value)
    : spec_(spec), value_(value) {
  reduce();
}

FieldElement::FieldElement(const FieldSpec& spec, const mpq_class& value)
    : spec_(spec), value_(value) {
  value_.canonicalize();
  reduce();
}

void FieldElement::reduce() {
  if (spec_.is_rationals()) return;
  const mpz_class& p = spec_.modulus();
  mpz_class num = value_.get_num();
  if (value_.get_den() != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), value_.get_den().get_mpz_t(), p.get_mpz_t()) == 0)
      throw Error(ErrorKind::DivisionByZero, "denominator vanishes mod " + p.get_str());
    num *= inv;
  }
  mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  value_ = num;
}

FieldElement FieldElement::parse(const FieldSpec& spec, std::string_view literal) {
  auto slash = literal.find('/');
  if (slash == std::string_view::npos) return FieldElement(spec, parse_integer(literal));
  if (spec.is_prime_field())
    throw Error(ErrorKind::Parse, "prime field literals are integers, got '" +
                                      std::string(literal) + "'");
  auto num = parse_integer(literal.substr(0, slash));
  auto den_text = literal.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-')
    throw Error(ErrorKind::Parse, "denominator must be positive in '" + std::string(literal) + "'");
  auto den = parse_integer(den_text);
  if (den == 0)
    throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(literal) + "'");
  return FieldElement(spec, mpq_class(num, den));
}

std::string FieldElement::to_string() const { return value_.get_str(10); }

void FieldElement::check_same(const FieldElement& o) const {
  if (!(spec_ == o.spec_))
    throw Error(ErrorKind::SpecMismatch,
                "cannot combine elements of " + spec_.to_string() + " and " + o.spec_.to_string());
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  value_ += o.value_;
  if (spec_.is_prime_field() && value_ >= spec_.modulus()) value_ -= spec_.modulus();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  value_ -= o.value_;
  if (spec_.is_prime_field() && sgn(value_) < 0) value_ += spec_.modulus();
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  value_ *= o.value_;
  if (spec_.is_prime_field()) {
    mpz_class r = value_.get_num() % spec_.modulus();
    value_ = r;
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same(o);
  return *this *= o.inverse();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (spec_.is_rationals()) return FieldElement(spec_, mpq_class(1) / value_);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), value_.get_num().get_mpz_t(), spec_.modulus().get_mpz_t());
  return FieldElement(spec_, inv);
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (spec_.is_rationals()) {
    r.value_ = -value_;
  } else if (!is_zero()) {
    r.value_ = spec_.modulus() - value_.get_num();
  }
  return r;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.spec_ == b.spec_ && a.value_ == b.value_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  if (a.spec_.kind() != b.spec_.kind()) return a.spec_.kind() < b.spec_.kind();
  if (a.spec_.modulus() != b.spec_.modulus()) return a.spec_.modulus() < b.spec_.modulus();
  return a.value_ < b.value_;
}

bool is_square(const FieldElement& a) {
  if (a.is_zero()) return true;
  if (a.spec().is_rationals()) {
    const mpq_class& v = a.value();
    return sgn(v) > 0 && mpz_perfect_square_p(v.get_num_mpz_t()) != 0 &&
           mpz_perfect_square_p(v.get_den_mpz_t()) != 0;
  }
  const mpz_class& p = a.spec().modulus();
  return powm(a.value().get_num(), (p - 1) / 2, p) == 1;
}

std::optional<FieldElement> sqrt_canonical(const FieldElement& a) {
  if (!is_square(a)) return std::nullopt;
  if (a.is_zero()) return a;
  if (a.spec().is_rationals()) {
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), a.value().get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), a.value().get_den_mpz_t());
    return FieldElement(a.spec(), mpq_class(num, den));
  }
  const mpz_class& p = a.spec().modulus();
  mpz_class r = tonelli_shanks(a.value().get_num(), p);
  if (r > (p - 1) / 2) r = p - r;
  return FieldElement(a.spec(), r);
}

}  // namespace halve2
