#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "piwb/freealg.hpp"
#include "piwb/report.hpp"

namespace piwb {

/// Coordinate vector over a FiniteAlgebra basis.
using Element = std::vector<Scalar>;

/// Finite-dimensional algebra given by structure constants e_i e_j =
/// sum_l c_{ij}^l e_l. Associativity is verified exhaustively at
/// construction.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::vector<std::string> basis_names,
                std::map<std::pair<unsigned, unsigned>, std::vector<std::pair<unsigned, Scalar>>>
                    structure,
                std::optional<Element> unit, Domain d = {});

  static FiniteAlgebra matrix_algebra(unsigned n, Domain d = {});
  /// Unital Grassmann algebra on g generators (dimension 2^g).
  static FiniteAlgebra grassmann(unsigned g, Domain d = {});
  /// The base field as a 1-dimensional algebra.
  static FiniteAlgebra scalar_field(Domain d = {});
  /// Truncated polynomial algebra F[u]/(u^k), dimension k (commutative).
  static FiniteAlgebra truncated_polynomial(unsigned k, Domain d = {});

  static FiniteAlgebra from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  unsigned dim() const { return dim_; }
  Domain domain() const { return dom_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  bool is_unital() const { return unit_.has_value(); }
  const Element& unit() const;

  Element zero() const;
  Element basis_element(unsigned i) const;
  Element mul(const Element& a, const Element& b) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const Scalar& c, const Element& a) const;
  bool is_zero(const Element& a) const;
  std::string element_str(const Element& a) const;

 private:
  unsigned dim_;
  Domain dom_;
  std::vector<std::string> names_;
  // structure_[i * dim_ + j] = sparse product of e_i e_j
  std::vector<std::vector<std::pair<unsigned, Scalar>>> structure_;
  std::optional<Element> unit_;
};

/// Exact evaluation of p under a total assignment of its variables.
Element evaluate(const Poly& p, const std::map<Var, Element>& assign, const FiniteAlgebra& alg);

struct EvalReport {
  bool is_identity = false;
  bool complete = false;  // exhaustive (true) vs randomized sampling (false)
  std::string method;
  std::map<Var, unsigned> witness;  // variable -> basis index, when not an identity
  std::uint64_t assignments_checked = 0;
};

/// Exhaustive multilinear identity test over basis assignments (sound and
/// complete for multilinear p). Detects alternating variable families wider
/// than dim(alg) and short-circuits: on basis assignments two alternating
/// slots must repeat, so every evaluation vanishes.
EvalReport is_identity_multilinear(const Poly& p, const FiniteAlgebra& alg);

/// Randomized test for general p; incomplete by construction.
EvalReport is_identity_randomized(const Poly& p, const FiniteAlgebra& alg, unsigned trials,
                                  std::uint64_t seed);

struct CodimensionResult {
  unsigned n;
  std::uint64_t v_n_dim;   // n!
  unsigned codimension;    // rank of the evaluation map on V_n
  std::uint64_t identity_dim;  // n! - rank
};

/// c_n(alg) as the exact rank of the evaluation map from V_n to functions on
/// basis tuples.
CodimensionResult codimension(const FiniteAlgebra& alg, unsigned n, unsigned cap = 6);

/// Determines the sign pattern relating the delta layers of Capl_n to the
/// characteristic coefficients of the inserted matrix, then asserts it:
/// delta_k(Capl_n) evaluates to sigma_k * c_{n-k}(z) * Capl_n, where
/// det(lambda I - z) = sum_j c_j(z) lambda^j. The expected discovery is
/// sigma_k = (-1)^k, i.e. the layer multiplier is the k-th elementary
/// symmetric function of the eigenvalues of z.
VerificationReport cayley_hamilton_delta_check(unsigned n, unsigned random_samples = 100,
                                               std::uint64_t seed = 20240901);

/// Monic relation a^k + xi_1 a^{k-1} + ... + xi_k * 1 = 0 from the
/// characteristic polynomial of left multiplication; re-verified by exact
/// evaluation before returning.
std::vector<Scalar> integrality_witness(const Element& a, const FiniteAlgebra& alg);

/// Characteristic polynomial of a dim x dim matrix over Q (coefficients of
/// lambda^0 .. lambda^dim), by the Faddeev-LeVerrier recurrence.
std::vector<mpq_class> char_poly(const std::vector<std::vector<mpq_class>>& mat);

}  // namespace piwb
