#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace scalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A construction contradicted a proven identity; this always means a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Input data that a builder refused, with the offending witness in the message.
class BuildError : public Error {
 public:
  using Error::Error;
};

class Scalar;

/// Ground field descriptor: the rationals, or GF(p) for a prime p.
class Field {
 public:
  static Field rational() { return Field(0); }
  /// Throws BuildError("modulus not prime") unless p is a prime >= 2.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return modulus_ == 0; }
  std::uint64_t modulus() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  /// Accepts "n", "-n" or "p/q".
  Scalar parse(std::string_view text) const;

  std::string describe() const;

  friend bool operator==(Field a, Field b) { return a.modulus_ == b.modulus_; }

 private:
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues live in [0, p). Binary operations require both
/// operands to share one field and throw FieldMismatch otherwise.
class Scalar {
 public:
  Scalar() = delete;

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  friend class Field;
  explicit Scalar(Field f) : field_(f) {}
  void check(const Scalar& o) const;

  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace scalg
