#include "piwb/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "piwb/econst.hpp"

namespace piwb {

Perm::Perm(unsigned m) : images_(m) { std::iota(images_.begin(), images_.end(), 1u); }

Perm Perm::from_one_line(const std::vector<unsigned>& images) {
  std::vector<bool> seen(images.size(), false);
  for (unsigned v : images) {
    if (v < 1 || v > images.size() || seen[v - 1])
      throw std::invalid_argument("permutation images are not a bijection of {1..m}");
    seen[v - 1] = true;
  }
  Perm p(static_cast<unsigned>(images.size()));
  p.images_ = images;
  return p;
}

Perm Perm::transposition(unsigned m, unsigned a, unsigned b) {
  Perm p(m);
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Perm Perm::from_cycle(unsigned m, const std::vector<unsigned>& cycle) {
  Perm p(m);
  for (std::size_t i = 0; i < cycle.size(); ++i)
    p.images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
  return p;
}

Perm operator*(const Perm& s, const Perm& p) {
  if (s.size() != p.size()) throw std::invalid_argument("permutation sizes differ");
  Perm r(s.size());
  for (unsigned i = 1; i <= s.size(); ++i) r.images_[i - 1] = s(p(i));
  return r;
}

Perm Perm::inverse() const {
  Perm r(size());
  for (unsigned i = 1; i <= size(); ++i) r.images_[images_[i - 1] - 1] = i;
  return r;
}

bool Perm::is_identity() const {
  for (unsigned i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string Perm::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ",";
    os << images_[i];
  }
  os << "]";
  return os.str();
}

Perm Perm::parse(const std::string& text) {
  std::vector<unsigned> images;
  unsigned cur = 0;
  bool in_num = false;
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      cur = cur * 10 + static_cast<unsigned>(c - '0');
      in_num = true;
    } else {
      if (in_num) images.push_back(cur);
      cur = 0;
      in_num = false;
    }
  }
  if (in_num) images.push_back(cur);
  return from_one_line(images);
}

int sgn(const Perm& p) {
  int inv = 0;
  for (unsigned i = 1; i <= p.size(); ++i)
    for (unsigned j = i + 1; j <= p.size(); ++j)
      if (p(i) > p(j)) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

std::vector<Perm> symmetric_group(unsigned m) {
  std::vector<unsigned> images(m);
  std::iota(images.begin(), images.end(), 1u);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_one_line(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

GroupAlgElem GroupAlgElem::basis(const Perm& p, Domain d) {
  GroupAlgElem g(p.size(), d);
  g.add_term(p, Scalar::one(d));
  return g;
}

void GroupAlgElem::add_term(const Perm& p, const Scalar& c) {
  if (p.size() != m_) throw std::invalid_argument("permutation size does not match group algebra");
  if (c.is_zero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupAlgElem& GroupAlgElem::operator+=(const GroupAlgElem& o) {
  if (m_ != o.m_) throw std::invalid_argument("group algebra sizes differ");
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

GroupAlgElem& GroupAlgElem::operator-=(const GroupAlgElem& o) {
  if (m_ != o.m_) throw std::invalid_argument("group algebra sizes differ");
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

GroupAlgElem GroupAlgElem::operator-() const {
  GroupAlgElem r(m_, dom_);
  for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
  return r;
}

GroupAlgElem GroupAlgElem::scaled(const Scalar& c) const {
  GroupAlgElem r(m_, dom_);
  if (c.is_zero()) return r;
  for (const auto& [p, k] : terms_) {
    Scalar v = k * c;
    if (!v.is_zero()) r.terms_.emplace(p, v);
  }
  return r;
}

GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("group algebra sizes differ");
  GroupAlgElem r(a.m_, a.dom_);
  for (const auto& [p, c] : a.terms_)
    for (const auto& [q, d] : b.terms_) r.add_term(p * q, c * d);
  return r;
}

std::string GroupAlgElem::to_json_string() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [p, c] : terms_) arr.push_back({{"perm", p.str()}, {"coeff", c.str()}});
  return arr.dump();
}

Poly to_poly(const GroupAlgElem& g) {
  Poly out;
  for (const auto& [p, c] : g.terms()) {
    Word w;
    w.reserve(g.group_size());
    for (unsigned i = 1; i <= g.group_size(); ++i) w.push_back(Var::x(p(i)));
    out.add_term(w, c);
  }
  return out;
}

GroupAlgElem from_poly(const Poly& p, unsigned m) {
  std::set<Var> xs;
  for (unsigned i = 1; i <= m; ++i) xs.insert(Var::x(i));
  if (!is_multilinear(p, xs))
    throw std::invalid_argument("from_poly: input is not multilinear in x1..xm");
  GroupAlgElem g(m, p.domain());
  for (const auto& [w, c] : p.terms()) {
    if (w.size() != m) throw std::invalid_argument("from_poly: word outside V_m");
    std::vector<unsigned> images(m);
    for (unsigned i = 0; i < m; ++i) {
      if (w[i].kind != VarKind::X) throw std::invalid_argument("from_poly: non-x letter");
      images[i] = w[i].index;
    }
    g.add_term(Perm::from_one_line(images), c);
  }
  return g;
}

Poly left_act(const Perm& s, const Poly& p) {
  std::set<Var> xs;
  for (unsigned i = 1; i <= s.size(); ++i) xs.insert(Var::x(i));
  if (!is_multilinear(p, xs))
    throw std::invalid_argument("left_act: polynomial is not multilinear in x1..xm");
  Substitution sub;
  for (unsigned i = 1; i <= s.size(); ++i)
    sub.set(Var::x(i), Poly::var(Var::x(s(i)), p.domain()));
  return sub.apply(p);
}

Poly right_act(const Poly& p, const Perm& pi) {
  std::set<Var> xs;
  for (unsigned i = 1; i <= pi.size(); ++i) xs.insert(Var::x(i));
  if (!is_multilinear(p, xs))
    throw std::invalid_argument("right_act: polynomial is not multilinear in x1..xm");
  Poly out;
  for (const auto& [w, c] : p.terms()) {
    if (w.size() != pi.size()) throw std::invalid_argument("right_act: word outside V_m");
    Word moved(w.size());
    for (unsigned j = 1; j <= pi.size(); ++j) moved[j - 1] = w[pi(j) - 1];
    out.add_term(moved, c);
  }
  return out;
}

GroupAlgElem p_of_subset(unsigned n, std::uint32_t z_mask, Domain d) {
  if (z_mask >> n) throw std::invalid_argument("p_of_subset: Z is not a subset of X");
  GroupAlgElem out(2 * n, d);
  for (const Perm& s : symmetric_group(2 * n)) {
    bool maps_into_y = true;
    for (unsigned i = 1; i <= n && maps_into_y; ++i)
      if ((z_mask >> (i - 1)) & 1u)
        if (s(i) <= n) maps_into_y = false;
    if (!maps_into_y) continue;
    Scalar c = Scalar::one(d);
    if (sgn(s) < 0) c = -c;
    out.add_term(s, c);
  }
  return out;
}

VerificationReport verify_jan3(unsigned n, unsigned cap) {
  VerificationReport rep;
  rep.check = "jan3";
  rep.params = {{"n", n}};
  Stopwatch sw;
  if (n > cap) {
    rep.verdict = Verdict::skipped_cap;
    rep.payload = {{"reason", "n exceeds configured cap"}, {"cap", cap}};
    rep.elapsed_ms = sw.elapsed_ms();
    return rep;
  }

  GroupAlgElem lhs(2 * n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    GroupAlgElem pz = p_of_subset(n, mask);
    lhs += __builtin_popcount(mask) % 2 == 0 ? pz : -pz;
  }

  GroupAlgElem rhs(2 * n);
  for (const Perm& s : symmetric_group(2 * n)) {
    bool fixes_x = true;
    for (unsigned i = 1; i <= n && fixes_x; ++i)
      if (s(i) > n) fixes_x = false;
    if (!fixes_x) continue;
    Scalar c(1);
    if (sgn(s) < 0) c = -c;
    rhs.add_term(s, c);
  }

  bool equal = lhs == rhs;
  rep.verdict = equal ? Verdict::pass : Verdict::fail;
  rep.payload = {{"group_order", factorial(2 * n).get_str()},
                 {"lhs_support", lhs.support_size()},
                 {"rhs_support", rhs.support_size()}};
  rep.certificate_hash = fnv1a_hex(lhs.to_json_string());
  rep.elapsed_ms = sw.elapsed_ms();
  return rep;
}

}  // namespace piwb
