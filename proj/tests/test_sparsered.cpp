#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "piwb/sparsered.hpp"

using namespace piwb;

namespace {

SparseIdentity standard3() {
  std::map<Perm, Scalar> c;
  for (const Perm& s : symmetric_group(3)) c.emplace(s, Scalar(sgn(s)));
  return SparseIdentity(3, std::move(c));
}

SlottedMonomial mono(std::vector<std::vector<unsigned>> slots) {
  SlottedMonomial m;
  m.slots = std::move(slots);
  m.gaps.assign(m.slots.size() + 1, {});
  return m;
}

unsigned long_slot_count(const SlottedMonomial& m, unsigned d) {
  unsigned c = 0;
  for (const auto& v : m.slots)
    if (v.size() >= d) ++c;
  return c;
}

std::mt19937_64 g_rng(2024);

SlottedMonomial random_mono(unsigned slots, unsigned total_len, unsigned letters) {
  std::uniform_int_distribution<unsigned> letter(1, letters);
  std::uniform_int_distribution<unsigned> pick(0, slots - 1);
  SlottedMonomial m = mono(std::vector<std::vector<unsigned>>(slots));
  for (unsigned i = 0; i < total_len; ++i) m.slots[pick(g_rng)].push_back(letter(g_rng));
  return m;
}

}  // namespace

TEST_CASE("sparse identity validation") {
  CHECK_NOTHROW(SparseIdentity::commutator());
  std::map<Perm, Scalar> bad;
  bad.emplace(Perm(2), Scalar(2));
  bad.emplace(Perm::transposition(2, 1, 2), Scalar(-1));
  CHECK_THROWS_AS(SparseIdentity(2, std::move(bad)), std::invalid_argument);

  std::map<Perm, Scalar> only_id;
  only_id.emplace(Perm(2), Scalar(1));
  CHECK_THROWS_AS(SparseIdentity(2, std::move(only_id)), std::invalid_argument);
}

TEST_CASE("one commutator rewrite step") {
  SparseIdentity comm = SparseIdentity::commutator();
  SlottedMonomial m = mono({{1, 1}, {2, 2}});
  ReduceStep step = reduce_step(m, comm);
  REQUIRE(step.reducible);
  CHECK(step.strict_descent);
  // v1 = w1 u1 with |u1| = 1, v2 = w2 u2 with |u2| = 0; the swap moves the
  // u-suffixes: (a1 a1, a2 a2) -> (a1, a2 a2 a1) with coefficient +1.
  REQUIRE(step.result.size() == 1);
  const auto& [out, coeff] = *step.result.terms().begin();
  CHECK(out.slots == std::vector<std::vector<unsigned>>{{1}, {2, 2, 1}});
  CHECK(coeff == Scalar(1));
  CHECK(lex_less(out.length_tuple(), m.length_tuple()));
}

TEST_CASE("short slots are not reducible") {
  SparseIdentity comm = SparseIdentity::commutator();
  CHECK_FALSE(reduce_step(mono({{1}, {2}}), comm).reducible);
  CHECK_FALSE(reduce_step(mono({{1, 1}, {2}}), comm).reducible);  // only one long slot
}

TEST_CASE("every output term descends strictly") {
  SparseIdentity s3 = standard3();
  for (int rep = 0; rep < 50; ++rep) {
    SlottedMonomial m = random_mono(4, 12, 2);
    ReduceStep step = reduce_step(m, s3);
    if (!step.reducible) continue;
    CHECK(step.strict_descent);
    for (const auto& [out, c] : step.result.terms())
      CHECK(lex_less(out.length_tuple(), m.length_tuple()));
  }
}

TEST_CASE("full reduction reaches the normal form") {
  SparseIdentity comm = SparseIdentity::commutator();

  SUBCASE("already reduced input is unchanged") {
    FormalCombination c;
    c.add(mono({{1}, {2}}), Scalar(1));
    ReduceTrace t = reduce_full(c, comm);
    CHECK(t.steps == 0);
    CHECK(t.result.terms() == c.terms());
  }

  SUBCASE("one long monomial") {
    FormalCombination c;
    c.add(mono({{1, 1}, {2, 2}}), Scalar(1));
    ReduceTrace t = reduce_full(c, comm);
    CHECK(t.terminated);
    for (const auto& [m, coeff] : t.result.terms()) CHECK(long_slot_count(m, 2) <= 1);
  }

  SUBCASE("termination on random combinations, d <= 3") {
    for (const SparseIdentity& id : {SparseIdentity::commutator(), standard3()}) {
      for (int rep = 0; rep < 20; ++rep) {
        FormalCombination c;
        c.add(random_mono(3, 12, 2), Scalar(1));
        c.add(random_mono(3, 9, 2), Scalar(-2));
        ReduceTrace t = reduce_full(c, id);
        CHECK(t.terminated);
        for (const auto& [m, coeff] : t.result.terms())
          CHECK(long_slot_count(m, id.degree()) <= id.degree() - 1);
      }
    }
  }

  SUBCASE("descent trace is recorded on request") {
    FormalCombination c;
    c.add(mono({{1, 1}, {2, 2}}), Scalar(1));
    ReduceTrace t = reduce_full(c, comm, true);
    CHECK(t.trace.size() == t.steps);
  }
}

TEST_CASE("reduction preserves values over an algebra satisfying the identity") {
  // The commutator is a sparse identity of any commutative unital algebra.
  FiniteAlgebra alg = FiniteAlgebra::truncated_polynomial(4);
  SparseIdentity comm = SparseIdentity::commutator();

  std::vector<Element> gens;  // a1 = 1 + u, a2 = u + u^2
  Element a1 = alg.zero(), a2 = alg.zero();
  a1[0] = Scalar(1);
  a1[1] = Scalar(1);
  a2[1] = Scalar(1);
  a2[2] = Scalar(1);
  gens = {a1, a2};
  std::vector<Element> sides{alg.unit(), alg.basis_element(1)};

  for (int rep = 0; rep < 20; ++rep) {
    FormalCombination c;
    c.add(random_mono(3, 8, 2), Scalar(2));
    c.add(random_mono(3, 6, 2), Scalar(-1));
    Element before = evaluate_combination(c, alg, gens, sides);
    ReduceTrace t = reduce_full(c, comm);
    REQUIRE(t.terminated);
    Element after = evaluate_combination(t.result, alg, gens, sides);
    CHECK(before == after);
  }
}

TEST_CASE("counting argument for the Capelli degree") {
  CountingCheck c22 = capelli_vanishing_by_counting(2, 2);
  CHECK(c22.short_words == 3);
  CHECK(c22.r_pow_d == 4);
  CHECK(c22.n == 6);
  CHECK(c22.short_words_less);
  CHECK(c22.pigeonhole_forced);

  for (unsigned r : {2u, 3u}) {
    for (unsigned d : {2u, 3u}) {
      CountingCheck c = capelli_vanishing_by_counting(r, d);
      CHECK(c.short_words_less);
      CHECK(c.pigeonhole_forced);
      CHECK_FALSE(c.r_flagged);
    }
  }
  CHECK(capelli_vanishing_by_counting(1, 2).r_flagged);
}

TEST_CASE("slotted monomial JSON round-trip") {
  FormalCombination c;
  SlottedMonomial m = mono({{1, 2}, {2}});
  m.gaps[1] = {1};
  c.add(m, Scalar::rational(3, 2));
  FormalCombination back = combination_from_json(combination_to_json(c));
  CHECK(back.terms() == c.terms());

  SparseIdentity id = standard3();
  SparseIdentity idback = identity_from_json(identity_to_json(id));
  CHECK(idback.degree() == 3);
  CHECK(idback.coeffs() == id.coeffs());
}
