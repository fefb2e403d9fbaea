#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "piwb/econst.hpp"
#include "piwb/report.hpp"
#include "piwb/scalar.hpp"
#include "piwb/symgroup.hpp"

namespace piwb {

/// Integer partition; parts weakly decreasing and positive.
class Partition {
 public:
  explicit Partition(std::vector<unsigned> parts);
  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned n() const { return n_; }
  unsigned rows() const { return static_cast<unsigned>(parts_.size()); }
  /// Number of boxes in column j (1-based).
  unsigned col_height(unsigned j) const;

  auto operator<=>(const Partition&) const = default;
  /// Comma-joined parts, e.g. "4,2".
  std::string str() const;
  static Partition parse(const std::string& text);

 private:
  std::vector<unsigned> parts_;
  unsigned n_;
};

std::vector<Partition> partitions_of(unsigned n);

/// Filled tableau: filling[i][j] holds the entry of box (i, j), a bijection
/// onto 1..n.
class Tableau {
 public:
  Tableau(Partition shape, std::vector<std::vector<unsigned>> filling);
  static Tableau row_major(const Partition& shape);  // 1..n left-to-right, top-to-bottom

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<unsigned>>& filling() const { return filling_; }
  bool is_standard() const;

 private:
  Partition shape_;
  std::vector<std::vector<unsigned>> filling_;
};

std::vector<Tableau> standard_tableaux(const Partition& shape);

/// Hook numbers h_{(i,j)} = arm + leg + 1, indexed like the filling.
struct HookGrid {
  std::vector<std::vector<unsigned>> hooks;
  mpz_class sum() const;
  mpz_class product() const;
};

HookGrid hooks(const Partition& shape);

/// Specht module dimension by the hook formula: n! / prod of hooks.
mpz_class dim_specht(const Partition& shape);

/// Exhaustive count of standard fillings (independent of the hook formula).
mpz_class count_standard_tableaux(const Partition& shape, unsigned cap = 12);

/// Young symmetrizer a_T = sum over column permutations q and row
/// permutations p of sgn(q) * (q * p).
GroupAlgElem young_symmetrizer(const Tableau& t, Domain d = {}, unsigned cap = 7);

/// The scalar alpha with a_T^2 = alpha * a_T; nullopt means a_T^2 is not a
/// scalar multiple of a_T (which would indicate a bug) or a_T = 0.
struct SymmetrizerScalar {
  bool a_t_zero = false;
  bool proportional = false;
  Scalar alpha;
};
SymmetrizerScalar symmetrizer_scalar(const Tableau& t, Domain d = {});

/// dim of the left ideal Q[S_n] a_T, as the rank of right multiplication.
unsigned left_ideal_dimension(const GroupAlgElem& a);

/// Closed form u*v*(u+v)/2 for the rectangle (u^v), cross-checked against the
/// hook grid.
struct RectHookSum {
  mpz_class closed_form;
  mpz_class grid_sum;
  bool match;
};
RectHookSum rect_hook_sum(unsigned u, unsigned v);

/// Wide staircase for prime p: rows (p-1)u, (p-1)(u-1), ..., (p-1).
Partition wide_staircase(unsigned p, unsigned u);

/// Closed form for the wide-staircase hook sum: the row with k blocks of
/// p-1 boxes contributes binom(p,2) k^2, so the total is
/// binom(p,2) u(u+1)(2u+1)/6. (Stating it through n = (p-1) binom(u+1,2)
/// gives binom(p,2)(2u+1) n / (3(p-1)).)
mpz_class staircase_hook_sum_closed(unsigned p, unsigned u);

/// Simplicity of the Specht module by the hook-valuation criterion for p > 2.
/// For p = 2 only the all-hooks-coprime sufficient condition is evaluated and
/// the result is flagged partial.
struct FayersResult {
  bool partial = false;          // true when only the p=2 sufficient condition ran
  bool all_hooks_coprime = false;
  std::optional<bool> simple;    // absent when partial and hooks are not coprime
};
FayersResult fayers_simple(const Partition& shape, unsigned p);

/// Strict inequality (n/(u+v))^n (2/e)^n < s^mu for the rectangle (u^v),
/// verified with certified rational e-bounds.
VerificationReport bound_hook5(unsigned u, unsigned v);

/// Strict inequality (6n/(p(p-1)(2u+1)))^n (1/e)^n < s^mu for the wide
/// staircase.
VerificationReport bound_hook51(unsigned p, unsigned u);

/// (d-1)^{2m}.
mpz_class regev_codim_bound(unsigned d, unsigned m);

/// d' = ceil(e (d-1)^4)^2 with the ceiling certified by nested rational
/// enclosures of e.
struct Char0Degree {
  mpz_class u;        // ceil(e (d-1)^4)
  mpz_class d_prime;  // u^2
  int e_terms_used;
};
Char0Degree strong_degree_char0(unsigned d);

/// Characteristic-p sparse-identity degree. `u` is the certified recipe value
/// ceil(2 p e (d-1)^2 / 3), which always satisfies the defining inequality
/// 3u(u+1)/(p(2u+1)) >= (d-1)^2 e; `u_minimal` is the least integer
/// satisfying that inequality, found by exact scan.
struct CharpDegree {
  mpz_class u;
  mpz_class d_prime;          // (p-1) p binom(u+1, 2)
  mpz_class u_minimal;
  mpz_class d_prime_minimal;
  int e_terms_used;
};
CharpDegree sparse_degree_charp(unsigned p, unsigned d);

/// n = r^{d'} + d'.
struct CapelliDegree {
  mpz_class n;
  bool r_flagged;  // r == 1: commutative case, bound degenerate
};
CapelliDegree capelli_degree_from_sparse(const mpz_class& r, const mpz_class& d_prime);

enum class ComposeMode { product, nilpotent_odd, nilpotent };
mpz_class compose_capelli_degree(ComposeMode mode, const std::vector<mpz_class>& args);

}  // namespace piwb
