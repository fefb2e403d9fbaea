#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "piwb/delta.hpp"
#include "piwb/freealg.hpp"
#include "piwb/report.hpp"

namespace piwb {

/// Resource limits for span construction. max_generators counts deduplicated
/// generators admitted to the elimination, checked while streaming.
/// unit_slots selects the unital T-ideal closure (alternating slots may take
/// the empty word, at most one per instance); switching it off restricts the
/// generators to constant-free alternating slots, a strictly smaller span.
struct Caps {
  std::size_t max_dim = 50000;
  std::size_t max_generators = 200000;
  bool unit_slots = true;
};

/// One multihomogeneous component of the T-ideal generated by Capl_m.
struct ComponentSpec {
  unsigned m = 0;
  std::map<Var, unsigned> degree;

  std::string degree_str() const;
};

using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;  // sorted by index

/// Row-reduced span of the component's generators: all multihomogeneous
/// instances a * Capl_m(p_1..p_m; q_1..q_m) * b of the target multidegree,
/// with word slots. Empty words are allowed for a, b, the q_i, and at most
/// one p_i: instances with two empty alternating slots vanish identically
/// (two equal slot words), while a single unit slot is a genuine unital
/// substitution instance and is needed for completeness -- already
/// Capl_3(x1, x2, 1; 1,1,1) = x1x2 - x2x1, which no instance with all p-slots
/// nonempty produces at total degree 2. Since Capl_m is multilinear in every
/// slot, these generators span the full multidegree component of the T-ideal.
class SpanBasis {
 public:
  const ComponentSpec& spec() const { return spec_; }
  const std::vector<Word>& words() const { return words_; }
  std::size_t dim() const { return words_.size(); }
  std::size_t rank() const { return pivot_order_.size(); }
  std::size_t generator_count() const { return generators_.size(); }
  bool complete() const { return complete_; }

  const SparseRow& generator(std::size_t id) const { return generators_[id]; }
  Poly generator_poly(std::size_t id) const;
  Poly poly_of_row(const SparseRow& r) const;
  SparseRow row_of(const Poly& q) const;  // throws on multidegree mismatch

  /// Deterministic fingerprint of the reduced rows (determinism contract).
  std::string canonical_digest() const;

 private:
  friend class ComponentEngine;
  struct Row {
    SparseRow vec;                        // fully reduced; pivot first with coefficient 1
    std::map<std::size_t, Scalar> combo;  // exact expression over generator ids
  };
  ComponentSpec spec_;
  std::vector<Word> words_;
  std::map<Word, std::uint32_t> index_;
  std::map<std::uint32_t, Row> rows_;    // keyed by pivot index
  std::vector<std::uint32_t> pivot_order_;  // pivots in insertion order
  std::vector<SparseRow> generators_;
  bool complete_ = false;
};

/// Exact witness: either coefficients expressing the query in the generators
/// or a dual functional vanishing on every generator but not on the query.
struct MembershipCertificate {
  bool member = false;
  std::vector<std::pair<std::size_t, Scalar>> combination;  // generator id -> coeff
  std::vector<std::pair<std::uint32_t, Scalar>> dual;       // word index -> value
  bool reverified = false;
  std::string hash;
};

/// Builds the full span (throws resource_limit_error past the caps).
SpanBasis component_span(const ComponentSpec& spec, const Caps& caps = {});

/// Decides membership against a fully built span; certificates are re-verified
/// by exact arithmetic before returning.
MembershipCertificate is_member(const Poly& q, const SpanBasis& basis);

/// Streaming decision: stops generating as soon as the query is absorbed, so
/// positive answers do not pay for the full span. `basis_out`, when non-null,
/// receives the basis state at exit.
MembershipCertificate certify_membership(const Poly& q, const ComponentSpec& spec,
                                         const Caps& caps = {}, SpanBasis* basis_out = nullptr);

struct CongruenceCheck {
  bool congruent = false;
  std::vector<std::pair<std::map<Var, unsigned>, MembershipCertificate>> components;
  std::size_t total_dim = 0;
  std::size_t total_rank = 0;
  std::string hash() const;
};

/// f == g modulo the Capelli T-ideal CAP_m, decided per multihomogeneous
/// component of f - g.
CongruenceCheck congruent(const Poly& f, const Poly& g, unsigned m, const Caps& caps = {});

/// Membership of zubrilin_sum_A(f, n) in CAP_{n+1}.
VerificationReport verify_zubrilin4(unsigned n, const Poly& f, const Caps& caps = {});

/// delta_{k,h}^{(x,n)}(f) == delta_{k,h}^{(y,n)}(f) mod CAP_{n+1}, where f is
/// the bridged product t1 s_n(x) t2 s_n(y) t3 (with_ts) or the t-free product
/// s_n(x) s_n(y).
VerificationReport verify_len2(unsigned n, bool with_ts, unsigned k, const Poly& h,
                               const Caps& caps = {});

/// The three commutation congruences for delta operators on a doubly
/// alternating t-free product, each modulo CAP_{n+1}; the mixed x/y case is
/// required to hold as exact equality.
VerificationReport verify_delta_commute(unsigned n, const Poly& h1, const Poly& h2,
                                        const Caps& caps = {}, unsigned k = 1, unsigned ell = 1);

/// Membership of sum_k (-1)^k h^{n-k} delta_{k,h}(f) in CAP_{n+1} for doubly
/// alternating f.
VerificationReport verify_integrality_relation(unsigned n, const Poly& f, const Poly& h,
                                               const Caps& caps = {});

/// The bridged doubly alternating product t1 s_n(x) t2 s_n(y) t3.
Poly bridged_double_product(unsigned n, Domain d = {});
/// The t-free doubly alternating product s_n(x) s_n(y).
Poly tfree_double_product(unsigned n, Domain d = {});
/// The reversed product s_n(y) s_n(x). Useful for the integrality sums: when
/// every word starts with an affected x, sum_k (-1)^k h^{n-k} delta_{k,h}
/// telescopes to zero termwise (the leading insertion is absorbed by the
/// h-power prefix), so the x-first product only exercises the trivial case.
Poly yfirst_double_product(unsigned n, Domain d = {});
/// Standard polynomial in y-variables (s_n of y_1..y_n).
Poly standard_poly_y(unsigned n, Domain d = {});

}  // namespace piwb
