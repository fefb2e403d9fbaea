#pragma once

#include "piwb/freealg.hpp"
#include "piwb/report.hpp"

namespace piwb {

/// The operator delta_{k,h}^{(kind,n)}: sum over k-subsets {i_1<...<i_k} of
/// {1..n} of f with the simultaneous substitutions v_{i_j} -> h * v_{i_j},
/// where v_i are x_i or y_i by name. For h = z this is the degree-k-in-z
/// layer of f((z+1)v_1, ..., (z+1)v_n).
struct DeltaSpec {
  VarKind var_kind = VarKind::X;  // X or Y
  unsigned n = 0;                 // affected variables are v_1..v_n
  unsigned k = 0;                 // 0 <= k <= n
  Poly h;                         // often the single variable z
};

Poly delta(const Poly& f, const DeltaSpec& spec);
Poly delta(const Poly& f, VarKind kind, unsigned n, unsigned k, const Poly& h);

/// Signed rotation sum over k = 1..n+1 of f with argument order
/// (x_1,...,x_{k-1}, x_{k+1},...,x_{n+1}, x_k); the result is alternating in
/// x_1..x_{n+1} when f is alternating in x_1..x_n.
Poly tilde(const Poly& f, unsigned n);

/// sum_{j=0}^{n} (-1)^j delta_{j,z}^{(x,n)}( f(x_1..x_n, z^{n-j} x_{n+1}) );
/// homogeneous of degree n in z.
Poly zubrilin_sum_A(const Poly& f, unsigned n);

/// sum_{k=0}^{n} (-1)^k h^{n-k} delta_{k,h}^{(x,n)}(g).
Poly zubrilin_sum_B(const Poly& g, unsigned n, const Poly& h);

/// Verifies that the z-degree-k layer of f((z+1)x_1,...,(z+1)x_n) equals
/// delta_{k,z}^{(x,n)}(f) for every 0 <= k <= n.
VerificationReport epsilon_expansion_check(const Poly& f, unsigned n);

}  // namespace piwb
