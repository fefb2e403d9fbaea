#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "piwb/evalalg.hpp"
#include "piwb/report.hpp"
#include "piwb/scalar.hpp"
#include "piwb/symgroup.hpp"

namespace piwb {

/// Multilinear identity sum_{sigma in S_d} alpha_sigma x_{sigma(1)}..x_{sigma(d)}
/// normalized to alpha_id = 1, used as a rewrite rule: a monomial instance may
/// be replaced by -sum_{sigma != id} alpha_sigma (instance permuted by sigma).
class SparseIdentity {
 public:
  SparseIdentity(unsigned d, std::map<Perm, Scalar> coeffs);
  static SparseIdentity commutator();  // d = 2: x1 x2 - x2 x1

  unsigned degree() const { return d_; }
  const std::map<Perm, Scalar>& coeffs() const { return coeffs_; }

 private:
  unsigned d_;
  std::map<Perm, Scalar> coeffs_;
};

/// Monomial template with n marked slots: gap_0 slot_1 gap_1 ... slot_n gap_n.
/// Gaps are words over side letters b_1.. (indices into a separate alphabet);
/// slot contents are words over generator letters a_1..a_r.
struct SlottedMonomial {
  std::vector<std::vector<unsigned>> gaps;   // n+1 gap words over side letters
  std::vector<std::vector<unsigned>> slots;  // n slot words over generator letters

  std::vector<std::size_t> length_tuple() const;
  auto operator<=>(const SlottedMonomial&) const = default;
  std::string str() const;
};

/// Left lexicographic order on slot-length tuples; the strict descent order of
/// the rewrite.
bool lex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

class FormalCombination {
 public:
  FormalCombination() = default;
  const std::map<SlottedMonomial, Scalar>& terms() const { return terms_; }
  void add(const SlottedMonomial& m, const Scalar& c);
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

 private:
  std::map<SlottedMonomial, Scalar> terms_;
};

struct ReduceStep {
  bool reducible = false;
  FormalCombination result;
  std::vector<std::size_t> input_tuple;
  bool strict_descent = true;  // every output term lex-smaller than the input
};

/// One application of the rewrite on the d lowest-indexed slots of length
/// >= d, via the suffix factorization v_i = w_i u_i with |u_i| = d - i.
ReduceStep reduce_step(const SlottedMonomial& m, const SparseIdentity& id);

struct ReduceTrace {
  FormalCombination result;
  std::uint64_t steps = 0;
  bool terminated = true;
  std::vector<std::string> trace;  // optional human-readable descent log
};

/// Repeated reduce_step until every surviving monomial has at most d-1 slots
/// of length >= d. Terminates: the slot-length tuples descend strictly in a
/// well-founded order.
ReduceTrace reduce_full(const FormalCombination& c, const SparseIdentity& id,
                        bool keep_trace = false, std::uint64_t step_cap = 1000000);

/// Counting argument: words of length <= d-1 over r letters number
/// (r^d - 1)/(r - 1) < r^d, and n = r^d + d forces a repetition among n slot
/// words of which at most d-1 are long.
struct CountingCheck {
  mpz_class short_words;   // 1 + r + ... + r^{d-1}
  mpz_class r_pow_d;
  mpz_class n;             // r^d + d
  bool short_words_less;   // short_words < r^d
  bool pigeonhole_forced;  // n - (d-1) > r^d
  bool r_flagged;          // r < 2
};
CountingCheck capelli_vanishing_by_counting(const mpz_class& r, unsigned d);

/// Evaluation of a slotted combination in a concrete algebra: generator
/// letter a_i -> gen_assign[i-1], side letter b_i -> side_assign[i-1].
Element evaluate_combination(const FormalCombination& c, const FiniteAlgebra& alg,
                             const std::vector<Element>& gen_assign,
                             const std::vector<Element>& side_assign);

nlohmann::json combination_to_json(const FormalCombination& c);
FormalCombination combination_from_json(const nlohmann::json& j, Domain d = {});
nlohmann::json identity_to_json(const SparseIdentity& id);
SparseIdentity identity_from_json(const nlohmann::json& j, Domain d = {});

}  // namespace piwb
