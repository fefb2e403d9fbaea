#include "piwb/scalar.hpp"

namespace piwb {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::mod_p(long v, std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("modulus must be a prime >= 2");
  Scalar s;
  s.p_ = p;
  long m = v % static_cast<long>(p);
  if (m < 0) m += p;
  s.r_ = static_cast<std::uint64_t>(m);
  return s;
}

Scalar Scalar::zero(Domain d) { return d.is_rational() ? Scalar() : mod_p(0, d.p); }

Scalar Scalar::one(Domain d) { return d.is_rational() ? Scalar(1) : mod_p(1, d.p); }

const mpq_class& Scalar::rat() const {
  if (p_ != 0) throw domain_mismatch("rational value requested from F_p scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (p_ == 0) throw domain_mismatch("residue requested from rational scalar");
  return r_;
}

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_)
    throw domain_mismatch("scalar domains differ: " + domain().str() + " vs " + o.domain().str());
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (p_ == 0)
    s.q_ = -s.q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_ == 0) {
    q_ -= o.q_;
  } else {
    r_ = (r_ + p_ - o.r_) % p_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    q_ *= o.q_;
  else
    r_ = mulmod(r_, o.r_, p_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (o.is_zero()) throw std::invalid_argument("scalar division by zero");
  if (p_ == 0)
    q_ /= o.q_;
  else
    r_ = mulmod(r_, powmod(o.r_, p_ - 2, p_), p_);
  return *this;
}

Scalar Scalar::inverse() const {
  return Scalar::one(domain()) / *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::str() const {
  if (p_ == 0) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace piwb
