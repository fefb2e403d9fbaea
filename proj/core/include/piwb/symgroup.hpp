#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "piwb/freealg.hpp"
#include "piwb/report.hpp"
#include "piwb/scalar.hpp"

namespace piwb {

/// Permutation of {1..m}, stored in one-line notation.
///
/// The product is function composition: (s * p)(i) = s(p(i)), i.e. p acts
/// first. With the identification sigma <-> x_{sigma(1)}...x_{sigma(m)} this
/// is the product for which renaming variables by sigma is left
/// multiplication and place permutation is right multiplication; it makes the
/// left/right action identities below hold literally.
class Perm {
 public:
  explicit Perm(unsigned m);  // identity
  static Perm from_one_line(const std::vector<unsigned>& images);
  static Perm transposition(unsigned m, unsigned a, unsigned b);
  static Perm from_cycle(unsigned m, const std::vector<unsigned>& cycle);

  unsigned size() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator()(unsigned i) const { return images_[i - 1]; }  // 1-based
  const std::vector<unsigned>& images() const { return images_; }

  friend Perm operator*(const Perm& s, const Perm& p);
  Perm inverse() const;
  bool is_identity() const;

  auto operator<=>(const Perm&) const = default;

  /// One-line serialization "[2,1,3]".
  std::string str() const;
  static Perm parse(const std::string& text);

 private:
  std::vector<unsigned> images_;
};

/// Parity via inversion count.
int sgn(const Perm& p);

/// All of S_m in lexicographic one-line order.
std::vector<Perm> symmetric_group(unsigned m);

/// Sparse element of the group algebra of S_m with exact coefficients.
class GroupAlgElem {
 public:
  explicit GroupAlgElem(unsigned m, Domain d = {}) : m_(m), dom_(d) {}
  static GroupAlgElem basis(const Perm& p, Domain d = {});

  unsigned group_size() const { return m_; }
  Domain domain() const { return dom_; }
  const std::map<Perm, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  void add_term(const Perm& p, const Scalar& c);
  GroupAlgElem& operator+=(const GroupAlgElem& o);
  GroupAlgElem& operator-=(const GroupAlgElem& o);
  GroupAlgElem operator-() const;
  GroupAlgElem scaled(const Scalar& c) const;
  friend GroupAlgElem operator+(GroupAlgElem a, const GroupAlgElem& b) { return a += b; }
  friend GroupAlgElem operator-(GroupAlgElem a, const GroupAlgElem& b) { return a -= b; }
  friend GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b);
  friend bool operator==(const GroupAlgElem& a, const GroupAlgElem& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  std::string to_json_string() const;

 private:
  unsigned m_;
  Domain dom_;
  std::map<Perm, Scalar> terms_;
};

/// sigma <-> M_sigma = x_{sigma(1)}...x_{sigma(m)}, extended linearly.
Poly to_poly(const GroupAlgElem& g);
/// Inverse of to_poly; defined exactly on multilinear polynomials in x1..xm.
GroupAlgElem from_poly(const Poly& p, unsigned m);

/// Left action: renaming x_i -> x_{sigma(i)}. Satisfies
/// left_act(s, to_poly(pi)) = to_poly(s * pi).
Poly left_act(const Perm& s, const Poly& p);
/// Right action: place permutation (letter at place pi(j) moves to place j).
/// Satisfies right_act(to_poly(s), pi) = to_poly(s * pi).
Poly right_act(const Poly& p, const Perm& pi);

/// P(Z) = sum over sigma in S_{2n} with sigma(Z) contained in Y of
/// sgn(sigma) sigma, where X = positions 1..n and Y = positions n+1..2n.
/// `z_mask` selects the subset Z of X by bit i-1 <-> x_i.
GroupAlgElem p_of_subset(unsigned n, std::uint32_t z_mask, Domain d = {});

/// Checks sum_{Z subset X} (-1)^{|Z|} P(Z) = sum_{sigma(X)=X} sgn(sigma) sigma
/// exactly in Q[S_{2n}].
VerificationReport verify_jan3(unsigned n, unsigned cap = 4);

}  // namespace piwb
