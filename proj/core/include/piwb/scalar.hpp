#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace piwb {

/// Thrown when two values from different coefficient domains meet.
class domain_mismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation would exceed a configured resource cap.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficient domain: p == 0 means the rationals, otherwise the prime field F_p.
struct Domain {
  std::uint32_t p = 0;

  bool is_rational() const { return p == 0; }
  friend bool operator==(const Domain&, const Domain&) = default;
  std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

/// An exact coefficient: a rational of arbitrary precision or a residue mod p.
/// All arithmetic is exact; there is no floating point in this library.
class Scalar {
 public:
  Scalar() : p_(0), q_(0) {}
  explicit Scalar(long n) : p_(0), q_(n) {}
  explicit Scalar(const mpq_class& q) : p_(0), q_(q) { q_.canonicalize(); }
  explicit Scalar(const mpz_class& z) : p_(0), q_(z) {}

  static Scalar rational(long num, long den);
  static Scalar mod_p(long v, std::uint32_t p);
  static Scalar zero(Domain d);
  static Scalar one(Domain d);

  Domain domain() const { return Domain{p_}; }
  bool is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  /// Rational value; throws if the domain is F_p.
  const mpq_class& rat() const;
  /// Residue in [0, p); throws if the domain is Q.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  std::string str() const;

 private:
  void check_same(const Scalar& o) const;

  std::uint32_t p_;    // 0 = rationals
  mpq_class q_;        // valid when p_ == 0
  std::uint64_t r_ = 0;  // valid when p_ > 0
};

}  // namespace piwb
