#include "piwb/tideal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "piwb/econst.hpp"

namespace piwb {

std::string ComponentSpec::degree_str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : degree) {
    if (!first) os << ",";
    os << v.str() << ":" << e;
    first = false;
  }
  return os.str();
}

namespace {

std::string row_key(const SparseRow& r) {
  std::ostringstream os;
  for (const auto& [i, c] : r) os << i << ":" << c.str() << ";";
  return os.str();
}

// r -= factor * other, merging sorted supports.
void row_axpy(SparseRow& r, const Scalar& factor, const SparseRow& other) {
  SparseRow out;
  out.reserve(r.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < other.size()) {
    if (j == other.size() || (i < r.size() && r[i].first < other[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || other[j].first < r[i].first) {
      Scalar c = -(factor * other[j].second);
      if (!c.is_zero()) out.emplace_back(other[j].first, c);
      ++j;
    } else {
      Scalar c = r[i].second - factor * other[j].second;
      if (!c.is_zero()) out.emplace_back(r[i].first, c);
      ++i;
      ++j;
    }
  }
  r = std::move(out);
}

// m -= factor * other on generator-combination maps.
void combo_axpy(std::map<std::size_t, Scalar>& m, const Scalar& factor,
                const std::map<std::size_t, Scalar>& other) {
  for (const auto& [id, c] : other) {
    auto [it, fresh] = m.emplace(id, -(factor * c));
    if (!fresh) {
      it->second -= factor * c;
      if (it->second.is_zero()) m.erase(it);
    }
  }
}

void scale_row(SparseRow& r, const Scalar& f) {
  for (auto& [i, c] : r) c *= f;
}

int perm_parity(const std::vector<unsigned>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

const std::pair<std::uint32_t, Scalar>* find_entry(const SparseRow& r, std::uint32_t idx) {
  auto it = std::lower_bound(r.begin(), r.end(), idx,
                             [](const auto& e, std::uint32_t v) { return e.first < v; });
  return (it != r.end() && it->first == idx) ? &*it : nullptr;
}

}  // namespace

Poly SpanBasis::generator_poly(std::size_t id) const { return poly_of_row(generators_.at(id)); }

Poly SpanBasis::poly_of_row(const SparseRow& r) const {
  Poly p;
  for (const auto& [i, c] : r) p.add_term(words_[i], c);
  return p;
}

SparseRow SpanBasis::row_of(const Poly& q) const {
  SparseRow r;
  for (const auto& [w, c] : q.terms()) {
    auto it = index_.find(w);
    if (it == index_.end())
      throw std::invalid_argument("query multidegree does not match the component");
    r.emplace_back(it->second, c);
  }
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

std::string SpanBasis::canonical_digest() const {
  std::ostringstream os;
  for (std::uint32_t piv : pivot_order_) os << piv << "=" << row_key(rows_.at(piv).vec) << "\n";
  return fnv1a_hex(os.str());
}

/// Streams deduplicated generators of one component into a reduced
/// row-echelon basis (tails never touch a pivot column), optionally tracking
/// a query residue for early-exit membership. A residue clear of every pivot
/// column lies in the span iff it is zero, so positive answers are detected
/// the moment the residue empties.
class ComponentEngine {
 public:
  ComponentEngine(ComponentSpec spec, Caps caps, Domain dom) : caps_(caps), dom_(dom) {
    basis_.spec_ = std::move(spec);
    build_words();
    build_cuts();
  }

  SpanBasis take_basis() { return std::move(basis_); }
  const SpanBasis& basis() const { return basis_; }

  void set_query(const Poly& q) {
    residue_ = basis_.row_of(q);
    has_query_ = true;
    std::size_t scan = 0;
    while (scan < residue_.size()) {
      auto it = basis_.rows_.find(residue_[scan].first);
      if (it == basis_.rows_.end()) {
        ++scan;
        continue;
      }
      Scalar f = residue_[scan].second;
      combo_axpy(query_combo_, -f, it->second.combo);
      row_axpy(residue_, f, it->second.vec);
    }
  }

  bool query_absorbed() const { return has_query_ && residue_.empty(); }

  /// Returns true when the stream ran to completion (false = early exit on a
  /// zero residue).
  bool run() {
    if (query_absorbed()) return false;
    const unsigned m = basis_.spec_.m;
    Word arrangement = sorted_letters_;
    do {
      for (const auto& cut : cuts_) {
        emit(arrangement, cut, m);
        if (query_absorbed()) return false;
      }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    basis_.complete_ = true;
    return true;
  }

  MembershipCertificate certificate(const SparseRow& original_query) const {
    MembershipCertificate cert;
    if (!has_query_) throw std::logic_error("certificate requested without a query");
    if (residue_.empty()) {
      cert.member = true;
      cert.combination.assign(query_combo_.begin(), query_combo_.end());
      SparseRow acc;
      for (const auto& [gid, c] : cert.combination)
        row_axpy(acc, -c, basis_.generators_[gid]);  // acc += c * gen
      cert.reverified = acc == original_query;
    } else {
      cert.member = false;
      // Dual functional: 1 at the residue's leading index, 0 at the other
      // non-pivot columns; each pivot value is forced by its row.
      std::map<std::uint32_t, Scalar> phi;
      phi.emplace(residue_.front().first, Scalar::one(dom_));
      for (const auto& [piv, row] : basis_.rows_) {
        Scalar v = Scalar::zero(dom_);
        for (std::size_t i = 1; i < row.vec.size(); ++i) {
          auto ph = phi.find(row.vec[i].first);
          if (ph != phi.end()) v -= row.vec[i].second * ph->second;
        }
        if (!v.is_zero()) phi.emplace(piv, v);
      }
      cert.dual.assign(phi.begin(), phi.end());

      auto eval = [&](const SparseRow& r) {
        Scalar s = Scalar::zero(dom_);
        for (const auto& [i, c] : r) {
          auto ph = phi.find(i);
          if (ph != phi.end()) s += c * ph->second;
        }
        return s;
      };
      bool ok = true;
      for (const SparseRow& g : basis_.generators_)
        if (!eval(g).is_zero()) ok = false;
      if (eval(original_query).is_zero()) ok = false;
      cert.reverified = ok;
    }

    std::ostringstream os;
    os << (cert.member ? "member:" : "nonmember:");
    for (const auto& [i, c] : cert.combination) os << i << "*" << c.str() << ";";
    for (const auto& [i, c] : cert.dual) os << i << "=" << c.str() << ";";
    cert.hash = fnv1a_hex(os.str());
    return cert;
  }

 private:
  void build_words() {
    const auto& spec = basis_.spec_;
    if (spec.m < 1) throw std::invalid_argument("component_span: m must be >= 1");
    for (const auto& [v, e] : spec.degree)
      for (unsigned i = 0; i < e; ++i) sorted_letters_.push_back(v);
    if (sorted_letters_.empty()) throw std::invalid_argument("component_span: empty multidegree");
    std::sort(sorted_letters_.begin(), sorted_letters_.end());

    mpz_class count = factorial(static_cast<unsigned>(sorted_letters_.size()));
    for (const auto& [v, e] : spec.degree) count /= factorial(e);
    if (count > static_cast<long>(caps_.max_dim))
      throw resource_limit_error("component dimension " + count.get_str() + " exceeds cap " +
                                 std::to_string(caps_.max_dim) + " at multidegree " +
                                 spec.degree_str());

    Word w = sorted_letters_;
    do {
      basis_.index_.emplace(w, static_cast<std::uint32_t>(basis_.words_.size()));
      basis_.words_.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
  }

  void build_cuts() {
    const unsigned m = basis_.spec_.m;
    const unsigned slots = 2 * m + 2;
    const unsigned total = static_cast<unsigned>(sorted_letters_.size());
    std::vector<unsigned> cut(slots, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned slot, unsigned remaining) {
      if (slot + 1 == slots) {
        cut[slot] = remaining;
        unsigned empty_p = 0;
        for (unsigned i = 0; i < m; ++i)
          if (cut[1 + 2 * i] == 0) ++empty_p;
        // Two empty alternating slots cancel identically; one is a genuine
        // unital instance, admitted only under the unital closure.
        if (empty_p <= (caps_.unit_slots ? 1u : 0u)) cuts_.push_back(cut);
        return;
      }
      for (unsigned take = 0; take <= remaining; ++take) {
        cut[slot] = take;
        rec(slot + 1, remaining - take);
      }
    };
    rec(0, total);

    mpz_class raw = mpz_class(static_cast<unsigned long>(basis_.words_.size())) *
                    static_cast<unsigned long>(cuts_.size());
    if (raw > 100 * mpz_class(static_cast<unsigned long>(caps_.max_generators)))
      throw resource_limit_error("raw generator estimate " + raw.get_str() +
                                 " exceeds streaming budget (generator cap " +
                                 std::to_string(caps_.max_generators) + ") at multidegree " +
                                 basis_.spec_.degree_str() + ", dim " +
                                 std::to_string(basis_.words_.size()));
  }

  void emit(const Word& arrangement, const std::vector<unsigned>& cut, unsigned m) {
    std::vector<Word> slot(2 * m + 2);
    std::size_t pos = 0;
    for (std::size_t s = 0; s < cut.size(); ++s) {
      slot[s].assign(arrangement.begin() + pos, arrangement.begin() + pos + cut[s]);
      pos += cut[s];
    }
    std::vector<Word> p(m), q(m);
    for (unsigned i = 0; i < m; ++i) {
      p[i] = std::move(slot[1 + 2 * i]);
      q[i] = std::move(slot[2 + 2 * i]);
    }
    std::sort(p.begin(), p.end());
    for (unsigned i = 0; i + 1 < m; ++i)
      if (p[i] == p[i + 1]) return;  // equal alternating slots: the instance vanishes

    const Word& a = slot[0];
    const Word& b = slot[2 * m + 1];
    std::vector<unsigned> perm(m);
    std::iota(perm.begin(), perm.end(), 0u);
    std::map<std::uint32_t, Scalar> acc;
    Word w;
    do {
      w.assign(a.begin(), a.end());
      for (unsigned i = 0; i < m; ++i) {
        w.insert(w.end(), p[perm[i]].begin(), p[perm[i]].end());
        w.insert(w.end(), q[i].begin(), q[i].end());
      }
      w.insert(w.end(), b.begin(), b.end());
      std::uint32_t idx = basis_.index_.at(w);
      Scalar c = perm_parity(perm) > 0 ? Scalar::one(dom_) : -Scalar::one(dom_);
      auto [it, fresh] = acc.emplace(idx, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    admit(SparseRow(acc.begin(), acc.end()));
  }

  void admit(SparseRow gen) {
    if (gen.empty()) return;
    Scalar lead_inv = gen.front().second.inverse();
    if (!lead_inv.is_one()) scale_row(gen, lead_inv);
    if (!seen_.insert(row_key(gen)).second) return;
    if (basis_.generators_.size() >= caps_.max_generators)
      throw resource_limit_error("generator cap " + std::to_string(caps_.max_generators) +
                                 " exceeded at multidegree " + basis_.spec_.degree_str() +
                                 ", dim " + std::to_string(basis_.words_.size()));
    const std::size_t gen_id = basis_.generators_.size();
    basis_.generators_.push_back(gen);

    // Reduce the fresh generator against the current reduced rows. Tails
    // contain no pivot columns, so each pivot hit is final.
    SparseRow r = std::move(gen);
    std::map<std::size_t, Scalar> combo;
    combo.emplace(gen_id, Scalar::one(dom_));
    std::size_t scan = 0;
    while (scan < r.size()) {
      auto it = basis_.rows_.find(r[scan].first);
      if (it == basis_.rows_.end()) {
        ++scan;
        continue;
      }
      Scalar f = r[scan].second;
      combo_axpy(combo, f, it->second.combo);
      row_axpy(r, f, it->second.vec);
    }
    if (r.empty()) return;

    Scalar lead = r.front().second;
    if (!lead.is_one()) {
      Scalar inv = lead.inverse();
      scale_row(r, inv);
      for (auto& [id, c] : combo) c *= inv;
    }
    const std::uint32_t pivot = r.front().first;

    // Back-substitute the new pivot out of every existing row and out of the
    // query residue, keeping the basis fully reduced.
    for (auto& [piv, row] : basis_.rows_) {
      if (const auto* e = find_entry(row.vec, pivot)) {
        Scalar f = e->second;
        combo_axpy(row.combo, f, combo);
        row_axpy(row.vec, f, r);
      }
    }
    if (has_query_ && !residue_.empty()) {
      if (const auto* e = find_entry(residue_, pivot)) {
        Scalar f = e->second;
        combo_axpy(query_combo_, -f, combo);
        row_axpy(residue_, f, r);
      }
    }

    basis_.pivot_order_.push_back(pivot);
    basis_.rows_.emplace(pivot, SpanBasis::Row{std::move(r), std::move(combo)});
  }

  Caps caps_;
  Domain dom_;
  SpanBasis basis_;
  Word sorted_letters_;
  std::vector<std::vector<unsigned>> cuts_;
  std::unordered_set<std::string> seen_;
  bool has_query_ = false;
  SparseRow residue_;
  std::map<std::size_t, Scalar> query_combo_;  // query = sum combo * gen + residue
};

SpanBasis component_span(const ComponentSpec& spec, const Caps& caps) {
  ComponentEngine engine(spec, caps, Domain{});
  engine.run();
  return engine.take_basis();
}

MembershipCertificate is_member(const Poly& q, const SpanBasis& basis) {
  // Replays the deterministic stream for the basis's component, then tests q;
  // identical ComponentSpec inputs yield identical bases.
  Caps caps;
  caps.max_generators = std::max<std::size_t>(basis.generator_count() + 1, caps.max_generators);
  ComponentEngine fresh(basis.spec(), caps, q.is_zero() ? Domain{} : q.domain());
  SparseRow original = fresh.basis().row_of(q);
  fresh.set_query(q);
  fresh.run();
  return fresh.certificate(original);
}

MembershipCertificate certify_membership(const Poly& q, const ComponentSpec& spec,
                                         const Caps& caps, SpanBasis* basis_out) {
  ComponentEngine engine(spec, caps, q.is_zero() ? Domain{} : q.domain());
  SparseRow original = engine.basis().row_of(q);
  engine.set_query(q);
  engine.run();
  MembershipCertificate cert = engine.certificate(original);
  if (basis_out) *basis_out = engine.take_basis();
  return cert;
}

std::string CongruenceCheck::hash() const {
  std::ostringstream os;
  for (const auto& [deg, cert] : components) os << cert.hash << ";";
  return fnv1a_hex(os.str());
}

CongruenceCheck congruent(const Poly& f, const Poly& g, unsigned m, const Caps& caps) {
  CongruenceCheck out;
  Poly d = f - g;
  out.congruent = true;
  for (const Poly& comp : homogeneous_components(d)) {
    ComponentSpec spec;
    spec.m = m;
    spec.degree = multidegree(comp).degree;
    SpanBasis basis;
    MembershipCertificate cert = certify_membership(comp, spec, caps, &basis);
    out.total_dim += basis.dim();
    out.total_rank += basis.rank();
    if (!cert.member) out.congruent = false;
    out.components.emplace_back(spec.degree, std::move(cert));
  }
  return out;
}

Poly standard_poly_y(unsigned n, Domain d) {
  std::vector<Word> p(n), q(n);
  for (unsigned i = 0; i < n; ++i) p[i] = {Var::y(i + 1)};
  return capelli_word_instance(n, {}, p, q, {}, d);
}

Poly tfree_double_product(unsigned n, Domain d) {
  return standard_poly(n, d) * standard_poly_y(n, d);
}

Poly yfirst_double_product(unsigned n, Domain d) {
  return standard_poly_y(n, d) * standard_poly(n, d);
}

Poly bridged_double_product(unsigned n, Domain d) {
  return Poly::var(Var::t(1), d) * standard_poly(n, d) * Poly::var(Var::t(2), d) *
         standard_poly_y(n, d) * Poly::var(Var::t(3), d);
}

namespace {

VerificationReport membership_report(const std::string& check, nlohmann::json params,
                                     const Poly& query, unsigned m, const Caps& caps) {
  VerificationReport rep;
  rep.check = check;
  rep.params = std::move(params);
  Stopwatch sw;
  try {
    if (query.is_zero()) {
      rep.verdict = Verdict::pass;
      rep.payload = {{"query", "0"},
                     {"member", true},
                     {"note", "query is the zero polynomial"},
                     {"component_dim", 0},
                     {"span_rank", 0}};
      rep.elapsed_ms = sw.elapsed_ms();
      return rep;
    }
    MultiDegree md = multidegree(query);
    if (!md.homogeneous) throw std::invalid_argument(check + ": query is not multihomogeneous");
    ComponentSpec spec;
    spec.m = m;
    spec.degree = md.degree;
    SpanBasis basis;
    MembershipCertificate cert = certify_membership(query, spec, caps, &basis);
    rep.verdict = cert.member && cert.reverified ? Verdict::pass : Verdict::fail;
    rep.payload = {{"multidegree", spec.degree_str()},
                   {"component_dim", basis.dim()},
                   {"span_rank", basis.rank()},
                   {"generators", basis.generator_count()},
                   {"member", cert.member},
                   {"reverified", cert.reverified}};
    rep.certificate_hash = cert.hash;
  } catch (const resource_limit_error& e) {
    rep.verdict = Verdict::skipped_cap;
    rep.payload = {{"reason", e.what()}};
  }
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace

VerificationReport verify_zubrilin4(unsigned n, const Poly& f, const Caps& caps) {
  Poly s = zubrilin_sum_A(f, n);
  return membership_report("zubrilin4", {{"n", n}, {"f", to_text(f)}}, s, n + 1, caps);
}

VerificationReport verify_len2(unsigned n, bool with_ts, unsigned k, const Poly& h,
                               const Caps& caps) {
  VerificationReport rep;
  rep.check = "len2";
  rep.params = {{"n", n}, {"with_ts", with_ts}, {"k", k}, {"h", to_text(h)}};
  Stopwatch sw;
  try {
    Poly f = with_ts ? bridged_double_product(n) : tfree_double_product(n);
    Poly lhs = delta(f, VarKind::X, n, k, h);
    Poly rhs = delta(f, VarKind::Y, n, k, h);
    CongruenceCheck cc = congruent(lhs, rhs, n + 1, caps);
    rep.verdict = cc.congruent ? Verdict::pass : Verdict::fail;
    rep.payload = {{"component_dim", cc.total_dim},
                   {"span_rank", cc.total_rank},
                   {"components", cc.components.size()}};
    rep.certificate_hash = cc.hash();
  } catch (const resource_limit_error& e) {
    rep.verdict = Verdict::skipped_cap;
    rep.payload = {{"reason", e.what()}};
  }
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport verify_delta_commute(unsigned n, const Poly& h1, const Poly& h2,
                                        const Caps& caps, unsigned k, unsigned ell) {
  VerificationReport rep;
  rep.check = "delta-commute";
  rep.params = {{"n", n}, {"h1", to_text(h1)}, {"h2", to_text(h2)}, {"k", k}, {"ell", ell}};
  Stopwatch sw;
  try {
    Poly f = tfree_double_product(n);
    auto dx = [&](unsigned kk, const Poly& h, const Poly& g) {
      return delta(g, VarKind::X, n, kk, h);
    };
    auto dy = [&](unsigned kk, const Poly& h, const Poly& g) {
      return delta(g, VarKind::Y, n, kk, h);
    };

    // (i) x then x and (iii) y then y are congruences mod CAP_{n+1};
    // (ii) mixed x/y is an exact equality.
    CongruenceCheck ci =
        congruent(dx(k, h1, dx(ell, h2, f)), dx(ell, h2, dx(k, h1, f)), n + 1, caps);
    bool cii = dx(k, h1, dy(ell, h2, f)) == dy(ell, h2, dx(k, h1, f));
    CongruenceCheck ciii =
        congruent(dy(k, h1, dy(ell, h2, f)), dy(ell, h2, dy(k, h1, f)), n + 1, caps);
    bool ok = ci.congruent && cii && ciii.congruent;
    rep.verdict = ok ? Verdict::pass : Verdict::fail;
    rep.payload = {{"xx_congruent", ci.congruent},
                   {"mixed_exact_equality", cii},
                   {"yy_congruent", ciii.congruent},
                   {"component_dim", ci.total_dim + ciii.total_dim},
                   {"span_rank", ci.total_rank + ciii.total_rank}};
    rep.certificate_hash = fnv1a_hex(ci.hash() + ciii.hash());
  } catch (const resource_limit_error& e) {
    rep.verdict = Verdict::skipped_cap;
    rep.payload = {{"reason", e.what()}};
  }
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

VerificationReport verify_integrality_relation(unsigned n, const Poly& f, const Poly& h,
                                               const Caps& caps) {
  std::set<Var> xs, ys;
  for (unsigned i = 1; i <= n; ++i) {
    xs.insert(Var::x(i));
    ys.insert(Var::y(i));
  }
  if (!is_alternating(f, xs) || !is_alternating(f, ys))
    throw std::invalid_argument("verify_integrality_relation: f is not doubly alternating");
  Poly s = zubrilin_sum_B(f, n, h);
  return membership_report("sof1", {{"n", n}, {"f", to_text(f)}, {"h", to_text(h)}}, s, n + 1,
                           caps);
}

}  // namespace piwb
