#include "piwb/delta.hpp"

#include <algorithm>

namespace piwb {

namespace {

void check_affected(const Poly& f, VarKind kind, unsigned n) {
  if (kind != VarKind::X && kind != VarKind::Y)
    throw std::invalid_argument("delta: affected kind must be X or Y");
  std::set<Var> affected;
  for (unsigned i = 1; i <= n; ++i) affected.insert(Var{kind, i});
  if (!is_multilinear(f, affected))
    throw std::invalid_argument("delta: f is not multilinear in the affected variables");
}

}  // namespace

Poly delta(const Poly& f, const DeltaSpec& spec) {
  return delta(f, spec.var_kind, spec.n, spec.k, spec.h);
}

Poly delta(const Poly& f, VarKind kind, unsigned n, unsigned k, const Poly& h) {
  if (k > n) throw std::invalid_argument("delta: k exceeds n");
  check_affected(f, kind, n);
  for (Var v : h.variables())
    if (v.kind == kind && v.index >= 1 && v.index <= n)
      throw std::invalid_argument("delta: h contains an affected variable");

  if (k == 0) return f;
  Domain d = f.domain();

  // Subsets {i_1 < ... < i_k} of {1..n}.
  std::vector<unsigned> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i + 1;
  Poly out;
  while (true) {
    Substitution s;
    for (unsigned i : idx) {
      Var v{kind, i};
      s.set(v, h * Poly::var(v, d));
    }
    out += s.apply(f);

    // next k-combination
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && idx[pos] == n - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

Poly tilde(const Poly& f, unsigned n) {
  std::set<Var> all;
  for (unsigned i = 1; i <= n + 1; ++i) all.insert(Var::x(i));
  if (!is_multilinear(f, all))
    throw std::invalid_argument("tilde: f is not multilinear in x1..x_{n+1}");
  std::set<Var> head(all);
  head.erase(Var::x(n + 1));
  if (!is_alternating(f, head))
    throw std::invalid_argument("tilde: f is not alternating in x1..xn");

  Domain d = f.domain();
  Poly out;
  for (unsigned k = 1; k <= n + 1; ++k) {
    // Argument list (x_1,...,x_{k-1}, x_{k+1},...,x_{n+1}, x_k): position i
    // receives x_i for i < k, x_{i+1} for k <= i <= n, and x_k at the end.
    Substitution s;
    for (unsigned i = k; i <= n; ++i) s.set(Var::x(i), Poly::var(Var::x(i + 1), d));
    s.set(Var::x(n + 1), Poly::var(Var::x(k), d));
    Poly img = s.apply(f);
    out += (k % 2 == 1) ? img : -img;
  }
  return out;
}

Poly zubrilin_sum_A(const Poly& f, unsigned n) {
  std::set<Var> all, head;
  for (unsigned i = 1; i <= n + 1; ++i) all.insert(Var::x(i));
  head = all;
  head.erase(Var::x(n + 1));
  if (!is_multilinear(f, all))
    throw std::invalid_argument("zubrilin_sum_A: f is not multilinear in x1..x_{n+1}");
  if (!is_alternating(f, head))
    throw std::invalid_argument("zubrilin_sum_A: f is not alternating in x1..xn");

  Domain d = f.domain();
  Poly z = Poly::var(Var::z(), d);
  Poly out;
  for (unsigned j = 0; j <= n; ++j) {
    Substitution s;
    s.set(Var::x(n + 1), pow(z, n - j) * Poly::var(Var::x(n + 1), d));
    Poly g = s.apply(f);
    Poly dj = delta(g, VarKind::X, n, j, z);
    out += (j % 2 == 0) ? dj : -dj;
  }
  return out;
}

Poly zubrilin_sum_B(const Poly& g, unsigned n, const Poly& h) {
  std::set<Var> xs;
  for (unsigned i = 1; i <= n; ++i) xs.insert(Var::x(i));
  if (!is_alternating(g, xs))
    throw std::invalid_argument("zubrilin_sum_B: g is not multilinear alternating in x1..xn");

  Poly out;
  for (unsigned k = 0; k <= n; ++k) {
    Poly term = pow(h, n - k) * delta(g, VarKind::X, n, k, h);
    out += (k % 2 == 0) ? term : -term;
  }
  return out;
}

VerificationReport epsilon_expansion_check(const Poly& f, unsigned n) {
  VerificationReport rep;
  rep.check = "epsilon-expansion";
  rep.params = {{"n", n}};
  Stopwatch sw;

  std::set<Var> xs;
  for (unsigned i = 1; i <= n; ++i) xs.insert(Var::x(i));
  if (!is_multilinear(f, xs))
    throw std::invalid_argument("epsilon_expansion_check: f not multilinear in x1..xn");
  for (Var v : f.variables())
    if (v.kind == VarKind::Z)
      throw std::invalid_argument("epsilon_expansion_check: f already contains z");

  Domain d = f.domain();
  Poly z_plus_1 = Poly::var(Var::z(), d) + Poly::unit(d);
  Substitution s;
  for (unsigned i = 1; i <= n; ++i) s.set(Var::x(i), z_plus_1 * Poly::var(Var::x(i), d));
  Poly expanded = s.apply(f);

  bool all_match = true;
  for (unsigned k = 0; k <= n; ++k) {
    Poly layer = component_of_degree(expanded, Var::z(), k);
    if (layer != delta(f, VarKind::X, n, k, Poly::var(Var::z(), d))) {
      all_match = false;
      break;
    }
  }
  rep.verdict = all_match ? Verdict::pass : Verdict::fail;
  rep.payload = {{"layers_checked", n + 1}};
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace piwb
