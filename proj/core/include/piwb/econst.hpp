#pragma once

#include <gmpxx.h>

namespace piwb {

/// Rational enclosure lo < e < hi obtained from the exponential series with
/// the tail bound sum_{k>N} 1/k! < 1/(N!*N).
struct EEnclosure {
  mpq_class lo, hi;
  int terms;
};

EEnclosure e_enclosure(int n_terms);

/// Certified sign of (a - b*e) for rationals a, b with b > 0. Never zero,
/// since e is irrational; precision is raised until the sign is determined.
int cmp_against_e_multiple(const mpq_class& a, const mpq_class& b);

/// Certified ceil(x * e) for rational x > 0, with the enclosure precision
/// used reported through terms_used.
mpz_class ceil_e_multiple(const mpq_class& x, int* terms_used = nullptr);

/// Certified strict comparison base^n vs target * e^n (b > 0): returns -1 if
/// base^n < target * e^n, +1 otherwise. Used for the hook dimension bounds.
int cmp_power_against_target_times_e_power(const mpq_class& base, unsigned n,
                                           const mpq_class& target);

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);

}  // namespace piwb
