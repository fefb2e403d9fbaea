// piwb: exact verification harness for the polynomial-identity workbench.
//
// Every check prints one JSON report line on stdout. Exit codes: 0 = all
// checks passed, 1 = a mathematical claim failed (witness in the report),
// 2 = usage or resource error.

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <vector>

#include "piwb/delta.hpp"
#include "piwb/evalalg.hpp"
#include "piwb/sparsered.hpp"
#include "piwb/symgroup.hpp"
#include "piwb/tideal.hpp"
#include "piwb/young.hpp"

using namespace piwb;

namespace {

struct Session {
  std::vector<VerificationReport> reports;
  std::string golden_dir;
  bool drift = false;

  void emit(VerificationReport rep) {
    std::cout << rep.to_json_line() << "\n";
    if (!golden_dir.empty()) compare_golden(rep);
    reports.push_back(std::move(rep));
  }

  static std::string slug(const VerificationReport& rep) {
    std::string s = rep.check;
    for (auto it = rep.params.begin(); it != rep.params.end(); ++it) {
      s += "_" + it.key();
      if (it->is_string())
        s += it->get<std::string>();
      else
        s += it->dump();
    }
    std::string out;
    for (char c : s)
      out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '-');
    return out;
  }

  void compare_golden(const VerificationReport& rep) {
    std::filesystem::path path = std::filesystem::path(golden_dir) / (slug(rep) + ".json");
    std::ifstream in(path);
    if (!in) {
      std::cerr << "golden: missing reference " << path << "\n";
      drift = true;
      return;
    }
    nlohmann::json expected = nlohmann::json::parse(in);
    std::string diff = report_drift(expected, rep.to_json());
    if (!diff.empty()) {
      std::cerr << "golden drift in " << path << ":\n" << diff;
      drift = true;
    }
  }

  void write_golden(const std::string& dir) const {
    std::filesystem::create_directories(dir);
    for (const auto& rep : reports) {
      std::filesystem::path path = std::filesystem::path(dir) / (slug(rep) + ".json");
      std::ofstream out(path);
      out << rep.to_json().dump(2) << "\n";
    }
  }

  int exit_code() const {
    if (drift) return 1;
    for (const auto& rep : reports)
      if (rep.verdict == Verdict::fail) return 1;
    return 0;
  }
};

Caps caps_from(std::size_t max_dim, std::size_t max_gens) {
  Caps caps;
  if (const char* env = std::getenv("PIWB_MAX_DIM")) caps.max_dim = std::stoull(env);
  if (const char* env = std::getenv("PIWB_MAX_GENS")) caps.max_generators = std::stoull(env);
  if (max_dim) caps.max_dim = max_dim;
  if (max_gens) caps.max_generators = max_gens;
  return caps;
}

VerificationReport hook_formula_report(unsigned max_n) {
  VerificationReport rep;
  rep.check = "hook-formula";
  rep.params = {{"max_n", max_n}};
  Stopwatch sw;
  bool ok = true;
  unsigned shapes = 0;
  for (unsigned n = 1; n <= max_n; ++n) {
    mpz_class sum_sq = 0;
    for (const Partition& shape : partitions_of(n)) {
      ++shapes;
      mpz_class d = dim_specht(shape);
      if (d != count_standard_tableaux(shape)) ok = false;
      sum_sq += d * d;
    }
    if (sum_sq != factorial(n)) ok = false;
  }
  rep.verdict = ok ? Verdict::pass : Verdict::fail;
  rep.payload = {{"shapes_checked", shapes}};
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport symmetrizer_report(unsigned max_n) {
  VerificationReport rep;
  rep.check = "symmetrizer";
  rep.params = {{"max_n", max_n}};
  Stopwatch sw;
  bool ok = true;
  unsigned tableaux = 0;
  for (unsigned n = 2; n <= max_n; ++n) {
    for (const Partition& shape : partitions_of(n)) {
      mpz_class dim = dim_specht(shape);
      for (const Tableau& t : standard_tableaux(shape)) {
        ++tableaux;
        SymmetrizerScalar sc = symmetrizer_scalar(t);
        if (sc.a_t_zero || !sc.proportional || sc.alpha.is_zero()) ok = false;
        if (mpz_class(left_ideal_dimension(young_symmetrizer(t))) != dim) ok = false;
      }
    }
  }
  rep.verdict = ok ? Verdict::pass : Verdict::fail;
  rep.payload = {{"tableaux_checked", tableaux}};
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport staircase_report(unsigned p, unsigned max_u) {
  VerificationReport rep;
  rep.check = "staircase";
  rep.params = {{"p", p}, {"max_u", max_u}};
  Stopwatch sw;
  bool ok = true;
  for (unsigned u = 1; u <= max_u; ++u) {
    Partition mu = wide_staircase(p, u);
    if (hooks(mu).sum() != staircase_hook_sum_closed(p, u)) ok = false;
    if (p > 2)
      for (const auto& row : hooks(mu).hooks)
        for (unsigned h : row)
          if (h % p == 0) ok = false;
    FayersResult fr = fayers_simple(mu, p);
    if (!fr.simple.has_value() || !*fr.simple) ok = false;
  }
  rep.verdict = ok ? Verdict::pass : Verdict::fail;
  rep.payload = {{"u_checked", max_u}};
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport capelli_matrix_report(unsigned k, unsigned n) {
  VerificationReport rep;
  rep.check = "capelli-matrix";
  rep.params = {{"k", k}, {"n", n}};
  Stopwatch sw;
  FiniteAlgebra alg = FiniteAlgebra::matrix_algebra(k);
  EvalReport er = is_identity_multilinear(capelli(n), alg);
  rep.verdict = er.is_identity ? Verdict::pass : Verdict::fail;
  nlohmann::json witness = nlohmann::json::object();
  for (const auto& [v, idx] : er.witness) witness[v.str()] = alg.basis_names()[idx];
  rep.payload = {{"is_identity", er.is_identity},
                 {"method", er.method},
                 {"assignments_checked", er.assignments_checked},
                 {"witness", witness}};
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport regev_report(unsigned d, unsigned m) {
  VerificationReport rep;
  rep.check = "bound-regev";
  rep.params = {{"d", d}, {"m", m}};
  Stopwatch sw;
  rep.verdict = Verdict::pass;
  rep.payload = {{"codimension_bound", regev_codim_bound(d, m).get_str()}};
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport char0_report(unsigned d) {
  VerificationReport rep;
  rep.check = "bound-char0";
  rep.params = {{"d", d}};
  Stopwatch sw;
  Char0Degree r = strong_degree_char0(d);
  rep.verdict = Verdict::pass;
  rep.payload = {{"u", r.u.get_str()},
                 {"d_prime", r.d_prime.get_str()},
                 {"e_terms_used", r.e_terms_used}};
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport charp_report(unsigned p, unsigned d) {
  VerificationReport rep;
  rep.check = "bound-charp";
  rep.params = {{"p", p}, {"d", d}};
  Stopwatch sw;
  CharpDegree r = sparse_degree_charp(p, d);
  rep.verdict = Verdict::pass;
  rep.payload = {{"u", r.u.get_str()},
                 {"d_prime", r.d_prime.get_str()},
                 {"u_minimal", r.u_minimal.get_str()},
                 {"d_prime_minimal", r.d_prime_minimal.get_str()},
                 {"e_terms_used", r.e_terms_used}};
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport capelli_bound_report(const mpz_class& r, bool charp, unsigned p, unsigned d) {
  VerificationReport rep;
  rep.check = "bound-capelli";
  rep.params = {{"r", r.get_str()}, {"d", d}};
  if (charp) rep.params["p"] = p;
  Stopwatch sw;
  mpz_class d_prime;
  if (charp) {
    CharpDegree cd = sparse_degree_charp(p, d);
    d_prime = cd.d_prime;
  } else {
    d_prime = strong_degree_char0(d).d_prime;
  }
  CapelliDegree deg = capelli_degree_from_sparse(r, d_prime);
  rep.verdict = Verdict::pass;
  rep.payload = {{"d_prime", d_prime.get_str()},
                 {"n", deg.n.get_str()},
                 {"r_flagged_commutative", deg.r_flagged}};
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport reduce_report(const std::string& file, bool trace) {
  VerificationReport rep;
  rep.check = "reduce-sparse";
  rep.params = {{"file", file}};
  Stopwatch sw;
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open " + file);
  nlohmann::json j = nlohmann::json::parse(in);
  SparseIdentity id = identity_from_json(j.at("identity"));
  FormalCombination comb = combination_from_json(j.at("combination"));
  ReduceTrace rt = reduce_full(comb, id, trace);

  // Postcondition: at most d-1 long slots anywhere in the result.
  bool post_ok = rt.terminated;
  for (const auto& [m, c] : rt.result.terms()) {
    unsigned long_count = 0;
    for (const auto& v : m.slots)
      if (v.size() >= id.degree()) ++long_count;
    if (long_count >= id.degree()) post_ok = false;
  }
  rep.verdict = post_ok ? Verdict::pass : Verdict::fail;
  rep.payload = {{"steps", rt.steps},
                 {"result_terms", rt.result.size()},
                 {"result", combination_to_json(rt.result)}};
  if (trace) rep.payload["trace"] = rt.trace;
  rep.certificate_hash = fnv1a_hex(combination_to_json(rt.result).dump());
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

FiniteAlgebra load_algebra(const std::string& spec) {
  if (spec == "Q" || spec == "q") return FiniteAlgebra::scalar_field();
  if ((spec[0] == 'M' || spec[0] == 'm') && spec.size() == 2 && std::isdigit(spec[1]))
    return FiniteAlgebra::matrix_algebra(static_cast<unsigned>(spec[1] - '0'));
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open algebra file " + spec);
  return FiniteAlgebra::from_json(nlohmann::json::parse(in));
}

VerificationReport codim_report(const std::string& alg_spec, unsigned n) {
  VerificationReport rep;
  rep.check = "codim";
  rep.params = {{"alg", alg_spec}, {"n", n}};
  Stopwatch sw;
  FiniteAlgebra alg = load_algebra(alg_spec);
  try {
    CodimensionResult r = codimension(alg, n);
    rep.verdict = Verdict::pass;
    rep.payload = {{"v_n_dim", r.v_n_dim},
                   {"codimension", r.codimension},
                   {"identity_dim", r.identity_dim}};
  } catch (const resource_limit_error& e) {
    rep.verdict = Verdict::skipped_cap;
    rep.payload = {{"reason", e.what()}};
  }
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for polynomial-identity combinatorics"};
  app.require_subcommand(1);
  app.fallthrough();

  Session session;
  std::string golden_dir, write_golden_dir;
  std::size_t max_dim = 0, max_gens = 0;
  app.add_option("--golden", golden_dir, "compare reports against a golden directory");
  app.add_option("--write-golden", write_golden_dir, "write reports into a golden directory");
  app.add_option("--max-dim", max_dim, "override the component dimension cap");
  app.add_option("--max-gens", max_gens, "override the generator cap");

  // verify ------------------------------------------------------------------
  CLI::App* verify = app.add_subcommand("verify", "run a verification check");
  verify->require_subcommand(1);

  unsigned jan3_n = 2;
  CLI::App* jan3 = verify->add_subcommand("jan3", "signed subset-sum identity in Q[S_2n]");
  jan3->add_option("--n", jan3_n)->required();

  unsigned z4_n = 1;
  CLI::App* z4 = verify->add_subcommand("zubrilin4", "first Zubrilin sum lies in CAP_{n+1}");
  z4->add_option("--n", z4_n)->required();

  unsigned z2_n = 1;
  CLI::App* z2 = verify->add_subcommand("zubrilin2", "second Zubrilin sum lies in CAP_{n+1}");
  z2->add_option("--n", z2_n)->required();

  unsigned l2_n = 1, l2_k = 1;
  bool l2_with_ts = false;
  CLI::App* l2 = verify->add_subcommand("len2", "x/y delta transfer modulo CAP_{n+1}");
  l2->add_option("--n", l2_n)->required();
  l2->add_option("--k", l2_k)->required();
  l2->add_flag("--with-ts", l2_with_ts, "use the bridged t1..t3 product (expensive tier)");

  unsigned dc_n = 2;
  CLI::App* dc = verify->add_subcommand("delta-commute", "delta operators commute mod CAP_{n+1}");
  dc->add_option("--n", dc_n)->required();

  unsigned sof_n = 1;
  CLI::App* sof = verify->add_subcommand("sof1", "integrality relation kills the double product");
  sof->add_option("--n", sof_n)->required();

  unsigned hf_max = 8;
  CLI::App* hf = verify->add_subcommand("hook-formula", "hook formula vs tableau enumeration");
  hf->add_option("--max-n", hf_max)->required();

  unsigned sym_max = 5;
  CLI::App* sym = verify->add_subcommand("symmetrizer", "Young symmetrizer identities");
  sym->add_option("--max-n", sym_max)->required();

  unsigned st_p = 3, st_max_u = 6;
  CLI::App* st = verify->add_subcommand("staircase", "wide staircase hook facts");
  st->add_option("--p", st_p)->required();
  st->add_option("--max-u", st_max_u)->required();

  unsigned ch_n = 2;
  CLI::App* ch = verify->add_subcommand("ch-delta", "delta layers vs characteristic coefficients");
  ch->add_option("--n", ch_n)->required();

  unsigned cm_k = 2, cm_n = 5;
  CLI::App* cm = verify->add_subcommand("capelli-matrix", "is Capl_n an identity of M_k");
  cm->add_option("--k", cm_k)->required();
  cm->add_option("--n", cm_n)->required();

  // bound -------------------------------------------------------------------
  CLI::App* bound = app.add_subcommand("bound", "evaluate a degree bound");
  bound->require_subcommand(1);

  unsigned rg_d = 2, rg_m = 1;
  CLI::App* rg = bound->add_subcommand("regev", "codimension growth bound (d-1)^{2m}");
  rg->add_option("--d", rg_d)->required();
  rg->add_option("--m", rg_m)->required();

  unsigned c0_d = 2;
  CLI::App* c0 = bound->add_subcommand("char0", "strong identity degree in characteristic 0");
  c0->add_option("--d", c0_d)->required();

  unsigned cp_p = 3, cp_d = 2;
  CLI::App* cp = bound->add_subcommand("charp", "sparse identity degree in characteristic p");
  cp->add_option("--p", cp_p)->required();
  cp->add_option("--d", cp_d)->required();

  std::string bc_r = "2";
  unsigned bc_d = 2, bc_p = 3;
  bool bc_char0 = false, bc_charp = false;
  CLI::App* bc = bound->add_subcommand("capelli", "Capelli degree r^{d'} + d'");
  bc->add_option("--r", bc_r)->required();
  bc->add_option("--d", bc_d)->required();
  bc->add_flag("--char0", bc_char0);
  CLI::Option* bc_popt = bc->add_option("--charp", bc_p);

  // reduce / codim ------------------------------------------------------------
  CLI::App* reduce = app.add_subcommand("reduce", "sparse reduction");
  reduce->require_subcommand(1);
  std::string rs_file;
  bool rs_trace = false;
  CLI::App* rs = reduce->add_subcommand("sparse", "rewrite a slotted combination to normal form");
  rs->add_option("--file", rs_file)->required();
  rs->add_flag("--trace", rs_trace, "include the full descent trace");

  std::string codim_alg;
  unsigned codim_n = 2;
  CLI::App* cd = app.add_subcommand("codim", "exact codimension of a finite algebra");
  cd->add_option("--alg", codim_alg)->required();
  cd->add_option("--n", codim_n)->required();

  // Global options (--golden, --max-dim, ...) may appear after a subcommand.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (CLI::App* sub : a->get_subcommands({})) enable_fallthrough(sub);
  };
  enable_fallthrough(&app);

  CLI11_PARSE(app, argc, argv);

  session.golden_dir = golden_dir;
  Caps caps = caps_from(max_dim, max_gens);

  try {
    if (jan3->parsed()) session.emit(verify_jan3(jan3_n));
    if (z4->parsed()) {
      Poly f = z4_n == 1 ? parse_poly("x1*x2")
                         : standard_poly(z4_n) * Poly::var(Var::x(z4_n + 1));
      session.emit(verify_zubrilin4(z4_n, f, caps));
    }
    if (z2->parsed()) {
      // Second Zubrilin sum for a y-first alternating generator, h in {z, 1}
      // (x-first generators telescope to zero termwise).
      for (const Poly& h : {Poly::var(Var::z()), Poly::unit()}) {
        Poly s = zubrilin_sum_B(yfirst_double_product(z2_n), z2_n, h);
        VerificationReport r;
        r.check = "zubrilin2";
        r.params = {{"n", z2_n}, {"h", to_text(h)}};
        Stopwatch sw;
        if (s.is_zero()) {
          r.verdict = Verdict::pass;
          r.payload = {{"member", true}, {"note", "sum collapses to zero"}};
        } else {
          try {
            ComponentSpec spec{z2_n + 1, multidegree(s).degree};
            SpanBasis basis;
            MembershipCertificate cert = certify_membership(s, spec, caps, &basis);
            r.verdict = cert.member && cert.reverified ? Verdict::pass : Verdict::fail;
            r.payload = {{"member", cert.member},
                         {"component_dim", basis.dim()},
                         {"span_rank", basis.rank()}};
            r.certificate_hash = cert.hash;
          } catch (const resource_limit_error& e) {
            r.verdict = Verdict::skipped_cap;
            r.payload = {{"reason", e.what()}};
          }
        }
        r.elapsed_ms = sw.elapsed_ms();
        session.emit(r);
      }
    }
    if (l2->parsed()) session.emit(verify_len2(l2_n, l2_with_ts, l2_k, Poly::var(Var::z()), caps));
    if (dc->parsed())
      session.emit(verify_delta_commute(dc_n, Poly::var(Var::t(4)), Poly::var(Var::t(5)), caps));
    if (sof->parsed()) {
      session.emit(
          verify_integrality_relation(sof_n, yfirst_double_product(sof_n), Poly::var(Var::z()),
                                      caps));
      session.emit(
          verify_integrality_relation(sof_n, yfirst_double_product(sof_n), Poly::unit(), caps));
    }
    if (hf->parsed()) session.emit(hook_formula_report(hf_max));
    if (sym->parsed()) session.emit(symmetrizer_report(sym_max));
    if (st->parsed()) session.emit(staircase_report(st_p, st_max_u));
    if (ch->parsed()) session.emit(cayley_hamilton_delta_check(ch_n));
    if (cm->parsed()) session.emit(capelli_matrix_report(cm_k, cm_n));
    if (rg->parsed()) session.emit(regev_report(rg_d, rg_m));
    if (c0->parsed()) session.emit(char0_report(c0_d));
    if (cp->parsed()) session.emit(charp_report(cp_p, cp_d));
    if (bc->parsed()) {
      const bool has_charp = bc_popt->count() > 0;
      if (bc_char0 == has_charp)
        throw std::invalid_argument("bound capelli: choose exactly one of --char0 / --charp P");
      session.emit(capelli_bound_report(mpz_class(bc_r), has_charp, bc_p, bc_d));
    }
    if (rs->parsed()) session.emit(reduce_report(rs_file, rs_trace));
    if (cd->parsed()) session.emit(codim_report(codim_alg, codim_n));
  } catch (const resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (!write_golden_dir.empty()) session.write_golden(write_golden_dir);
  return session.exit_code();
}
