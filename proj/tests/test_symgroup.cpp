#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "piwb/econst.hpp"
#include "piwb/symgroup.hpp"
#include "test_util.hpp"

using namespace piwb;

namespace {

GroupAlgElem random_elem(std::mt19937_64& rng, unsigned m, unsigned terms = 3) {
  std::vector<Perm> group = symmetric_group(m);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  GroupAlgElem g(m);
  for (unsigned i = 0; i < terms; ++i) g.add_term(group[pick(rng)], Scalar(coeff(rng)));
  return g;
}

}  // namespace

TEST_CASE("sgn via inversion count") {
  CHECK(sgn(Perm(3)) == 1);
  CHECK(sgn(Perm::transposition(2, 1, 2)) == -1);
  CHECK(sgn(Perm::from_cycle(3, {1, 2, 3})) == 1);
}

TEST_CASE("sgn is a homomorphism on all of S_4") {
  for (const Perm& s : symmetric_group(4))
    for (const Perm& p : symmetric_group(4)) CHECK(sgn(s * p) == sgn(s) * sgn(p));
}

TEST_CASE("one-line serialization round-trips") {
  Perm p = Perm::from_one_line({2, 1, 3});
  CHECK(p.str() == "[2,1,3]");
  CHECK(Perm::parse("[2,1,3]") == p);
  CHECK_THROWS_AS(Perm::from_one_line({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("to_poly and from_poly") {
  CHECK(to_poly(GroupAlgElem::basis(Perm(2))) == parse_poly("x1*x2"));

  GroupAlgElem signed_sum(2);
  for (const Perm& s : symmetric_group(2)) signed_sum.add_term(s, Scalar(sgn(s)));
  CHECK(to_poly(signed_sum) == parse_poly("x1*x2 - x2*x1"));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    GroupAlgElem g = random_elem(rng, 4);
    CHECK(from_poly(to_poly(g), 4) == g);
  }

  CHECK_THROWS_AS(from_poly(parse_poly("x1*x2 + x1*x1"), 2), std::invalid_argument);
}

TEST_CASE("left action is renaming and matches the product") {
  Perm swap12 = Perm::transposition(2, 1, 2);
  CHECK(left_act(swap12, parse_poly("x1*x2")) == parse_poly("x2*x1"));
  CHECK(left_act(Perm(2), parse_poly("x2*x1")) == parse_poly("x2*x1"));

  for (const Perm& s : symmetric_group(3))
    for (const Perm& p : symmetric_group(3))
      CHECK(left_act(s, to_poly(GroupAlgElem::basis(p))) == to_poly(GroupAlgElem::basis(s * p)));
}

TEST_CASE("right action permutes places and matches the product") {
  Perm swap12 = Perm::transposition(2, 1, 2);
  CHECK(right_act(to_poly(GroupAlgElem::basis(swap12)), swap12) ==
        to_poly(GroupAlgElem::basis(swap12 * swap12)));
  CHECK(right_act(parse_poly("x2*x1"), Perm(2)) == parse_poly("x2*x1"));

  for (const Perm& s : symmetric_group(3))
    for (const Perm& p : symmetric_group(3))
      CHECK(right_act(to_poly(GroupAlgElem::basis(s)), p) == to_poly(GroupAlgElem::basis(s * p)));

  std::mt19937_64 rng(9);
  std::vector<Var> vars{Var::x(1), Var::x(2), Var::x(3), Var::x(4)};
  for (int i = 0; i < 5; ++i) {
    Poly f = testutil::random_multilinear(rng, vars);
    for (const Perm& pi : symmetric_group(4))
      for (const Perm& rho : symmetric_group(4))
        CHECK(right_act(right_act(f, pi), rho) == right_act(f, pi * rho));
  }
}

TEST_CASE("to_poly intertwines the group algebra product with the left action") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 15; ++i) {
    GroupAlgElem g = random_elem(rng, 3);
    GroupAlgElem h = random_elem(rng, 3);
    Poly lhs = to_poly(g * h);
    Poly rhs;
    for (const auto& [s, c] : g.terms()) rhs += left_act(s, to_poly(h)).scaled(c);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("p_of_subset") {
  GroupAlgElem p_empty = p_of_subset(1, 0);
  GroupAlgElem expect(2);
  expect.add_term(Perm(2), Scalar(1));
  expect.add_term(Perm::transposition(2, 1, 2), Scalar(-1));
  CHECK(p_empty == expect);

  GroupAlgElem p_full = p_of_subset(1, 1);
  GroupAlgElem swap_only(2);
  swap_only.add_term(Perm::transposition(2, 1, 2), Scalar(-1));
  CHECK(p_full == swap_only);

  for (unsigned n = 1; n <= 3; ++n) {
    mpz_class order = factorial(2 * n);
    CHECK(mpz_class(static_cast<unsigned long>(p_of_subset(n, 0).support_size())) == order);
  }

  CHECK_THROWS_AS(p_of_subset(2, 0b100), std::invalid_argument);
}

TEST_CASE("signed subset-sum identity in Q[S_2n]") {
  VerificationReport r1 = verify_jan3(1);
  CHECK(r1.passed());
  CHECK(r1.payload.at("rhs_support") == 1);  // both sides equal the identity permutation

  VerificationReport r2 = verify_jan3(2);
  CHECK(r2.passed());
  CHECK(r2.payload.at("rhs_support") == 4);  // S_2 x S_2

  VerificationReport r3 = verify_jan3(3);
  CHECK(r3.passed());
  CHECK(r3.payload.at("rhs_support") == 36);  // |S_3|^2

  CHECK(verify_jan3(5, 4).verdict == Verdict::skipped_cap);
}

TEST_CASE("per-permutation coefficient analysis of the subset sum") {
  for (unsigned n = 1; n <= 2; ++n) {
    GroupAlgElem lhs(2 * n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      GroupAlgElem pz = p_of_subset(n, mask);
      lhs += __builtin_popcount(mask) % 2 == 0 ? pz : -pz;
    }
    for (const Perm& s : symmetric_group(2 * n)) {
      // Z(s) = largest Z subset of X with s(Z) in Y; the coefficient is
      // sgn(s) when Z(s) is empty and 0 otherwise.
      bool z_empty = true;
      for (unsigned i = 1; i <= n; ++i)
        if (s(i) > n) z_empty = false;
      Scalar expect = z_empty ? Scalar(sgn(s)) : Scalar(0);
      auto it = lhs.terms().find(s);
      Scalar actual = it == lhs.terms().end() ? Scalar(0) : it->second;
      CHECK(actual == expect);
    }
  }
}

TEST_CASE("group algebra serialization") {
  GroupAlgElem g(2);
  g.add_term(Perm(2), Scalar::rational(1, 2));
  CHECK(g.to_json_string() == R"([{"coeff":"1/2","perm":"[1,2]"}])");
}
