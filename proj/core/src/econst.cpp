#include "piwb/econst.hpp"

#include <stdexcept>

namespace piwb {

mpz_class factorial(unsigned n) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

mpz_class binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

EEnclosure e_enclosure(int n_terms) {
  if (n_terms < 2) n_terms = 2;
  mpq_class sum = 0;
  mpz_class fact = 1;
  for (int k = 0; k <= n_terms; ++k) {
    if (k > 0) fact *= k;
    sum += mpq_class(1, 1) / mpq_class(fact);
  }
  mpq_class tail = mpq_class(1) / mpq_class(fact * n_terms);
  return EEnclosure{sum, sum + tail, n_terms};
}

int cmp_against_e_multiple(const mpq_class& a_in, const mpq_class& b_in) {
  mpq_class a = a_in, b = b_in;
  a.canonicalize();
  b.canonicalize();
  if (b <= 0) throw std::invalid_argument("cmp_against_e_multiple: b must be positive");
  for (int terms = 8; terms <= 512; terms *= 2) {
    EEnclosure e = e_enclosure(terms);
    if (a < b * e.lo) return -1;
    if (a > b * e.hi) return 1;
  }
  // e is irrational and a/b rational, so this is unreachable at sane inputs.
  throw std::runtime_error("cmp_against_e_multiple: enclosure failed to separate");
}

mpz_class ceil_e_multiple(const mpq_class& x_in, int* terms_used) {
  mpq_class x = x_in;
  x.canonicalize();
  if (x <= 0) throw std::invalid_argument("ceil_e_multiple: x must be positive");
  for (int terms = 8; terms <= 512; terms *= 2) {
    EEnclosure e = e_enclosure(terms);
    mpq_class lo = x * e.lo, hi = x * e.hi;
    mpz_class clo, chi;
    mpz_cdiv_q(clo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    mpz_cdiv_q(chi.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    if (clo == chi) {
      if (terms_used) *terms_used = terms;
      return clo;
    }
  }
  throw std::runtime_error("ceil_e_multiple: enclosure failed to pin the ceiling");
}

int cmp_power_against_target_times_e_power(const mpq_class& base_in, unsigned n,
                                           const mpq_class& target_in) {
  mpq_class base = base_in, target = target_in;
  base.canonicalize();
  target.canonicalize();
  // base^n < target * e^n  <=>  base^n / e^n < target; certify both directions
  // with the rational enclosure.
  for (int terms = 8; terms <= 512; terms *= 2) {
    EEnclosure e = e_enclosure(terms);
    mpq_class pow_base = 1, pow_lo = 1, pow_hi = 1;
    for (unsigned i = 0; i < n; ++i) {
      pow_base *= base;
      pow_lo *= e.lo;
      pow_hi *= e.hi;
    }
    if (pow_base < target * pow_lo) return -1;
    if (pow_base > target * pow_hi) return 1;
  }
  throw std::runtime_error("cmp_power_against_target_times_e_power: cannot separate");
}

}  // namespace piwb
