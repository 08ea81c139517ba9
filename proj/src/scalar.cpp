#include "scalg/scalar.hpp"

namespace scalg {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t reduce_signed(const mpz_class& z, std::uint64_t p) {
  mpz_class mod(static_cast<unsigned long>(p));
  mpz_class m = z % mod;
  if (m < 0) m += mod;
  return m.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % d == 0) return n == d;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw BuildError("modulus not prime: " + std::to_string(p));
  return Field(p);
}

Scalar Field::zero() const { return Scalar(*this); }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  Scalar s(*this);
  if (is_rational()) {
    s.q_ = mpq_class(static_cast<long>(n));
  } else {
    s.r_ = reduce_signed(mpz_class(static_cast<long>(n)), modulus_);
  }
  return s;
}

Scalar Field::parse(std::string_view text) const {
  auto parse_int = [&](std::string_view t) {
    if (t.empty()) throw BuildError("empty number");
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size()) throw BuildError("malformed number '" + std::string(text) + "'");
    for (std::size_t i = start; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') throw BuildError("malformed number '" + std::string(text) + "'");
    }
    std::string digits(t[0] == '+' ? t.substr(1) : t);
    return mpz_class(digits);
  };
  auto slash = text.find('/');
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    den = parse_int(text.substr(slash + 1));
    if (den == 0) throw BuildError("zero denominator in '" + std::string(text) + "'");
  }
  Scalar s(*this);
  if (is_rational()) {
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
  }
  Scalar n = zero();
  n.r_ = reduce_signed(num, modulus_);
  Scalar d = zero();
  d.r_ = reduce_signed(den, modulus_);
  if (d.is_zero()) throw BuildError("denominator vanishes modulo " + std::to_string(modulus_));
  return n / d;
}

std::string Field::describe() const {
  return is_rational() ? "rational" : "gf " + std::to_string(modulus_);
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::check(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw FieldMismatch("mixed field descriptors: " + field_.describe() + " vs " + o.field_.describe());
  }
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (field_.is_rational()) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = field_.modulus() - r_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  Scalar s(*this);
  if (field_.is_rational()) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = powmod(r_, field_.modulus() - 2, field_.modulus());
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    std::uint64_t p = field_.modulus();
    r_ = (r_ >= p - o.r_) ? r_ - (p - o.r_) : r_ + o.r_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (field_.is_rational()) {
    q_ *= o.q_;
  } else {
    r_ = mulmod(r_, o.r_, field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check(b);
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace scalg
