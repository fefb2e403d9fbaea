// Acceptance suite: runs each acceptance criterion at zero tolerance and
// prints one pass/fail line per criterion. Exit 0 iff all pass.
//
// --long additionally runs the opt-in expensive tier (the bridged t1..t3
// product congruence at full degree 8), which at default caps reports
// skipped-cap with an explicit reason.

#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "piwb/delta.hpp"
#include "piwb/evalalg.hpp"
#include "piwb/sparsered.hpp"
#include "piwb/symgroup.hpp"
#include "piwb/tideal.hpp"
#include "piwb/young.hpp"

using namespace piwb;

namespace {

struct Criterion {
  int number;
  std::string description;
  double budget_s;
  std::function<bool(std::ostringstream&)> run;
};

std::vector<Var> xlist(unsigned n) {
  std::vector<Var> v;
  for (unsigned i = 1; i <= n; ++i) v.push_back(Var::x(i));
  return v;
}

bool criterion1(std::ostringstream& note) {
  for (unsigned n = 1; n <= 3; ++n) {
    VerificationReport r = verify_jan3(n);
    if (!r.passed()) {
      note << "n=" << n << " failed";
      return false;
    }
    if (n == 3) note << "|S_6| side computed in " << r.elapsed_ms << " ms";
  }
  return true;
}

bool criterion2(std::ostringstream& note) {
  std::mt19937_64 rng(424242);
  Poly z = Poly::var(Var::z());
  unsigned checked = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    std::vector<Var> vars = xlist(n);
    std::set<Var> vs(vars.begin(), vars.end());
    for (int rep = 0; rep < 50; ++rep) {
      Poly f = alternator(
          [&] {
            Poly p;
            for (int t = 0; t < 3; ++t) {
              Word w(vars.begin(), vars.end());
              std::shuffle(w.begin(), w.end(), rng);
              p.add_term(w, Scalar(1 + static_cast<long>(rng() % 3)));
            }
            return p;
          }(),
          vars);
      if (f.is_zero()) continue;
      ++checked;
      for (unsigned k = 0; k <= n; ++k)
        if (!is_alternating(delta(f, VarKind::X, n, k, z), vs)) {
          note << "failed at n=" << n << " k=" << k;
          return false;
        }
    }
  }
  note << checked << " alternating inputs";
  return true;
}

bool criterion3(std::ostringstream& note) {
  VerificationReport r1 = verify_zubrilin4(1, parse_poly("x1*x2"));
  VerificationReport r2 = verify_zubrilin4(2, standard_poly(2) * Poly::var(Var::x(3)));
  if (!r1.passed() || !r2.passed()) {
    note << "membership failed";
    return false;
  }
  // negative control: flip one sign of the n=1 sum
  MembershipCertificate bad = certify_membership(
      parse_poly("x1*z*x2 + z*x1*x2"), ComponentSpec{2, multidegree(parse_poly("x1*z*x2")).degree});
  if (bad.member || !bad.reverified) {
    note << "negative control accepted";
    return false;
  }
  note << "n=2 component dim " << r2.payload.at("component_dim");
  return true;
}

bool criterion4(std::ostringstream& note, bool long_tier) {
  VerificationReport fast = verify_len2(2, false, 1, Poly::var(Var::z()));
  if (!fast.passed()) {
    note << "fast tier failed";
    return false;
  }
  note << "fast tier dim " << fast.payload.at("component_dim");

  // x <-> y exchange for the t-free product
  Poly f = tfree_double_product(2);
  Substitution swap_xy;
  for (unsigned i = 1; i <= 2; ++i) {
    swap_xy.set(Var::x(i), Poly::var(Var::y(i)));
    swap_xy.set(Var::y(i), Poly::var(Var::x(i)));
  }
  if (!congruent(f, substitute(f, swap_xy), 3).congruent) {
    note << "; x<->y exchange failed";
    return false;
  }

  if (long_tier) {
    VerificationReport full = verify_len2(2, true, 1, Poly::var(Var::z()));
    note << "; full tier verdict " << verdict_str(full.verdict);
    if (full.verdict == Verdict::skipped_cap)
      note << " (" << full.payload.at("reason").get<std::string>().substr(0, 60) << "...)";
    return full.verdict != Verdict::fail;  // certified or an explicit cap report
  }
  return true;
}

bool criterion5(std::ostringstream& note) {
  VerificationReport r = verify_delta_commute(2, Poly::var(Var::t(4)), Poly::var(Var::t(5)));
  if (!r.passed()) {
    note << "congruences failed";
    return false;
  }
  if (r.payload.at("mixed_exact_equality") != true) {
    note << "mixed case not exact";
    return false;
  }
  note << "dim " << r.payload.at("component_dim");
  return true;
}

bool criterion6(std::ostringstream& note) {
  // y-first products keep the sums nonzero (x-first words telescope away).
  std::size_t dims = 0;
  for (unsigned n = 1; n <= 2; ++n) {
    Poly f = yfirst_double_product(n);
    for (const Poly& h : {Poly::var(Var::z()), Poly::unit()}) {
      VerificationReport r = verify_integrality_relation(n, f, h);
      if (!r.passed()) {
        note << "failed at n=" << n << " h=" << to_text(h);
        return false;
      }
      dims += r.payload.at("component_dim").get<std::size_t>();
    }
  }
  note << "total dim " << dims;
  return true;
}

bool criterion7(std::ostringstream& note) {
  unsigned shapes = 0;
  for (unsigned n = 1; n <= 8; ++n) {
    mpz_class sum_sq = 0;
    for (const Partition& shape : partitions_of(n)) {
      ++shapes;
      mpz_class d = dim_specht(shape);
      if (d != count_standard_tableaux(shape)) {
        note << "hook formula mismatch at " << shape.str();
        return false;
      }
      sum_sq += d * d;
    }
    if (sum_sq != factorial(n)) {
      note << "sum of squares failed at n=" << n;
      return false;
    }
  }
  note << shapes << " shapes";
  return true;
}

bool criterion8(std::ostringstream& note) {
  for (unsigned u = 1; u <= 8; ++u)
    for (unsigned v = 1; v <= 8; ++v)
      if (!rect_hook_sum(u, v).match) {
        note << "rectangle " << u << "x" << v;
        return false;
      }
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned u = 1; u <= 6; ++u)
      if (hooks(wide_staircase(p, u)).sum() != staircase_hook_sum_closed(p, u)) {
        note << "staircase sum p=" << p << " u=" << u;
        return false;
      }
  for (unsigned p : {3u, 5u, 7u})
    for (unsigned u = 1; u <= 6; ++u)
      for (const auto& row : hooks(wide_staircase(p, u)).hooks)
        for (unsigned h : row)
          if (h % p == 0) {
            note << "hook divisible by p=" << p;
            return false;
          }
  return true;
}

bool criterion9(std::ostringstream& note) {
  unsigned tableaux = 0;
  for (unsigned n = 2; n <= 5; ++n) {
    for (const Partition& shape : partitions_of(n)) {
      mpz_class dim = dim_specht(shape);
      for (const Tableau& t : standard_tableaux(shape)) {
        ++tableaux;
        SymmetrizerScalar sc = symmetrizer_scalar(t);
        if (sc.a_t_zero || !sc.proportional || sc.alpha.is_zero()) {
          note << "scalar failed at " << shape.str();
          return false;
        }
        if (mpz_class(left_ideal_dimension(young_symmetrizer(t))) != dim) {
          note << "ideal dimension failed at " << shape.str();
          return false;
        }
      }
    }
  }
  note << tableaux << " standard tableaux";
  return true;
}

bool criterion10(std::ostringstream& note) {
  Char0Degree c0 = strong_degree_char0(3);
  if (c0.d_prime != 1936) {
    note << "char0 d=3 gave " << c0.d_prime.get_str();
    return false;
  }
  CharpDegree cp = sparse_degree_charp(3, 2);
  if (cp.u != 6 || cp.d_prime != 126) {
    note << "charp (3,2) gave u=" << cp.u.get_str() << " d'=" << cp.d_prime.get_str();
    return false;
  }
  for (unsigned u = 1; u <= 4; ++u)
    for (unsigned v = 1; v <= 4; ++v)
      if (u * v <= 20 && !bound_hook5(u, v).passed()) {
        note << "hook5 failed at " << u << "," << v;
        return false;
      }
  for (unsigned p : {2u, 3u})
    for (unsigned u = 1; u <= 3; ++u)
      if (wide_staircase(p, u).n() <= 20 && !bound_hook51(p, u).passed()) {
        note << "hook51 failed at p=" << p << " u=" << u;
        return false;
      }
  // ceiling stability under doubled enclosure precision
  for (unsigned d = 2; d <= 4; ++d) {
    Char0Degree a = strong_degree_char0(d);
    EEnclosure coarse = e_enclosure(a.e_terms_used);
    EEnclosure fine = e_enclosure(2 * a.e_terms_used);
    mpz_class pow4 = 1;
    for (int i = 0; i < 4; ++i) pow4 *= (d - 1);
    auto ceil_of = [&](const mpq_class& q) {
      mpz_class c;
      mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
      return c;
    };
    if (ceil_of(mpq_class(pow4) * coarse.hi) != ceil_of(mpq_class(pow4) * fine.hi)) {
      note << "ceiling unstable at d=" << d;
      return false;
    }
  }
  note << "d'=1936, u=6/d'=126 (minimal scan u=" << cp.u_minimal.get_str() << ")";
  return true;
}

bool criterion11(std::ostringstream& note) {
  FiniteAlgebra m2 = FiniteAlgebra::matrix_algebra(2);

  EvalReport c4 = is_identity_multilinear(capelli(4), m2);
  if (c4.is_identity || c4.witness.empty()) {
    note << "Capl_4 verdict wrong";
    return false;
  }
  std::map<Var, Element> assign;
  for (const auto& [v, idx] : c4.witness) assign[v] = m2.basis_element(idx);
  if (m2.is_zero(evaluate(capelli(4), assign, m2))) {
    note << "Capl_4 witness does not re-verify";
    return false;
  }

  EvalReport c5 = is_identity_multilinear(capelli(5), m2);
  if (!c5.is_identity) {
    note << "Capl_5 should be an identity";
    return false;
  }

  if (codimension(m2, 2).codimension != 2 || codimension(m2, 3).codimension != 6) {
    note << "codimension values wrong";
    return false;
  }

  VerificationReport ch = cayley_hamilton_delta_check(2, 100);
  if (!ch.passed()) {
    note << "sign convention not consistent";
    return false;
  }
  note << "signs " << ch.payload.at("signs").dump();
  return true;
}

bool criterion12(std::ostringstream& note) {
  std::mt19937_64 rng(31337);
  std::vector<SparseIdentity> ids;
  ids.push_back(SparseIdentity::commutator());
  {
    std::map<Perm, Scalar> c;
    for (const Perm& s : symmetric_group(3)) c.emplace(s, Scalar(sgn(s)));
    ids.emplace_back(3, std::move(c));
  }

  auto random_mono = [&](unsigned slots, unsigned total) {
    SlottedMonomial m;
    m.slots.assign(slots, {});
    m.gaps.assign(slots + 1, {});
    for (unsigned i = 0; i < total; ++i)
      m.slots[rng() % slots].push_back(1 + static_cast<unsigned>(rng() % 2));
    return m;
  };

  FiniteAlgebra alg = FiniteAlgebra::truncated_polynomial(4);
  Element a1 = alg.zero(), a2 = alg.zero();
  a1[0] = Scalar(1);
  a1[1] = Scalar(1);
  a2[1] = Scalar(1);
  a2[2] = Scalar(2);
  std::vector<Element> gens{a1, a2};
  std::vector<Element> sides{alg.unit()};

  for (const SparseIdentity& id : ids) {
    for (int rep = 0; rep < 25; ++rep) {
      FormalCombination c;
      c.add(random_mono(3, 12), Scalar(1));
      ReduceTrace t = reduce_full(c, id);
      if (!t.terminated) {
        note << "reduction did not terminate";
        return false;
      }
      for (const auto& [m, coeff] : t.result.terms()) {
        unsigned long_count = 0;
        for (const auto& v : m.slots)
          if (v.size() >= id.degree()) ++long_count;
        if (long_count > id.degree() - 1) {
          note << "normal form has too many long slots";
          return false;
        }
      }
      if (id.degree() == 2) {
        Element before = evaluate_combination(c, alg, gens, sides);
        Element after = evaluate_combination(t.result, alg, gens, sides);
        if (before != after) {
          note << "evaluation changed under reduction";
          return false;
        }
      }
    }
  }

  for (unsigned r : {2u, 3u})
    for (unsigned d : {2u, 3u}) {
      CountingCheck c = capelli_vanishing_by_counting(r, d);
      if (!c.short_words_less || !c.pigeonhole_forced) {
        note << "counting check failed at r=" << r << " d=" << d;
        return false;
      }
    }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  bool long_tier = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--long") == 0) long_tier = true;

  std::vector<Criterion> criteria = {
      {1, "signed subset-sum identity in Q[S_2n], n = 1..3", 5.0, criterion1},
      {2, "delta layers of alternating inputs stay alternating", 10.0, criterion2},
      {3, "first Zubrilin sum in CAP_{n+1}, n = 1,2, negative control", 60.0, criterion3},
      {4, "x/y delta transfer mod CAP_3 (fast tier) and x<->y exchange", 60.0,
       [&](std::ostringstream& n) { return criterion4(n, long_tier); }},
      {5, "delta commutation congruences, mixed case exact", 60.0, criterion5},
      {6, "integrality relation sums in CAP_{n+1}, h in {z, 1}", 60.0, criterion6},
      {7, "hook formula vs exhaustive tableau counts, n <= 8", 30.0, criterion7},
      {8, "rectangle and staircase hook sums; coprimality", 5.0, criterion8},
      {9, "Young symmetrizer scalars and left ideal dimensions, n <= 5", 120.0, criterion9},
      {10, "bound calculators and certified ceilings", 5.0, criterion10},
      {11, "matrix algebra checks and sign-convention discovery", 120.0, criterion11},
      {12, "sparse reduction descent, termination, evaluation, counting", 60.0, criterion12},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Stopwatch sw;
    std::ostringstream note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note << "exception: " << e.what();
    }
    double s = sw.elapsed_ms() / 1000.0;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.description
              << " (" << s << " s";
    if (s > c.budget_s) std::cout << ", over the " << c.budget_s << " s budget";
    std::cout << ")";
    if (!note.str().empty()) std::cout << " -- " << note.str();
    std::cout << "\n";
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
