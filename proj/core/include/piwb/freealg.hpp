#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "piwb/scalar.hpp"

namespace piwb {

/// Typed indeterminate. The total order is X < Y < T < Z, then by index;
/// z carries no index.
enum class VarKind : std::uint8_t { X = 0, Y = 1, T = 2, Z = 3 };

struct Var {
  VarKind kind;
  std::uint32_t index;

  static Var x(std::uint32_t i) { return {VarKind::X, i}; }
  static Var y(std::uint32_t i) { return {VarKind::Y, i}; }
  static Var t(std::uint32_t i) { return {VarKind::T, i}; }
  static Var z() { return {VarKind::Z, 0}; }

  auto operator<=>(const Var&) const = default;
  std::string str() const;
};

/// A word is a finite string of indeterminates; the empty word is the unit.
using Word = std::vector<Var>;

std::string word_str(const Word& w);

/// Sparse element of the free unital associative algebra: a finite map
/// word -> nonzero coefficient. Equality is coefficient-wise on words.
class Poly {
 public:
  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly unit(Domain d = {});
  static Poly var(Var v, Domain d = {});
  static Poly term(Word w, Scalar c);

  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Domain of the coefficients; the zero polynomial reports Q.
  Domain domain() const;
  /// Set of variables occurring in some word.
  std::set<Var> variables() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
  Poly operator-() const;
  Poly scaled(const Scalar& c) const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  bool operator<(const Poly& o) const;

  /// Adds c to the coefficient of w, pruning a zero result.
  void add_term(const Word& w, const Scalar& c);

  std::string str() const;

 private:
  std::map<Word, Scalar> terms_;
};

Poly pow(const Poly& p, unsigned e);

/// Partial map Var -> Poly; unassigned variables map to themselves. Extends
/// uniquely to an algebra endomorphism.
class Substitution {
 public:
  Substitution() = default;
  Substitution& set(Var v, Poly image);
  const Poly* image(Var v) const;
  Poly apply(const Poly& p) const;

 private:
  std::map<Var, Poly> map_;
};

inline Poly substitute(const Poly& p, const Substitution& s) { return s.apply(p); }

/// Capelli polynomial of degree 2k: sum over pi in S_k of
/// sgn(pi) x_{pi(1)} y_1 ... x_{pi(k)} y_k.
Poly capelli(unsigned k, Domain d = {});

/// a * Capl_m(p_1..p_m; q_1..q_m) * b with arbitrary word slots.
Poly capelli_word_instance(unsigned m, const Word& a, const std::vector<Word>& p,
                           const std::vector<Word>& q, const Word& b, Domain d = {});

/// Capelli polynomial in x_1..x_n with the y-slots specialized to the unit;
/// equals the standard polynomial s_n(x_1, ..., x_n).
Poly standard_poly(unsigned n, Domain d = {});

/// t1 * Capl_n(x; t) * t2 * Capl_n(y; t') * t3, with the interleaved
/// t-indeterminates numbered consecutively after t3, x side first.
Poly double_capelli(unsigned n, Domain d = {});

struct AlternationReport {
  bool multilinear = false;        // every word contains each var exactly once
  bool swap_negates = false;       // every transposition of two vars negates p
  bool substitution_vanishes = false;  // specializing x_j to x_i gives 0
  bool alternating() const { return multilinear && swap_negates; }
};

AlternationReport alternation_report(const Poly& p, const std::set<Var>& vars);
bool is_alternating(const Poly& p, const std::set<Var>& vars);

/// Antisymmetrization over renamings of `vars`; maps multilinear input to an
/// alternating polynomial (possibly zero).
Poly alternator(const Poly& p, const std::vector<Var>& vars);

struct MultiDegree {
  bool homogeneous = false;
  std::map<Var, unsigned> degree;               // valid when homogeneous
  std::vector<std::map<Var, unsigned>> components;  // the decomposition otherwise
};

MultiDegree multidegree(const Poly& p);
std::map<Var, unsigned> word_degree(const Word& w);
/// Splits p into its multihomogeneous components.
std::vector<Poly> homogeneous_components(const Poly& p);
/// The part of p of degree k in variable v.
Poly component_of_degree(const Poly& p, Var v, unsigned k);

bool is_multilinear(const Poly& p, const std::set<Var>& vars);

/// Text format: terms joined by +/-, each an optional coefficient and a word
/// of '*'-separated variables ("x1*y1*x2*y2 - x2*y1*x1*y2"); the unit word
/// prints as "1". Parser and printer round-trip exactly.
std::string to_text(const Poly& p);
Poly parse_poly(const std::string& text, Domain d = {});
std::optional<Var> parse_var(const std::string& token);

}  // namespace piwb
