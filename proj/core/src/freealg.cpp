#include "piwb/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace piwb {

std::string Var::str() const {
  switch (kind) {
    case VarKind::X: return "x" + std::to_string(index);
    case VarKind::Y: return "y" + std::to_string(index);
    case VarKind::T: return "t" + std::to_string(index);
    case VarKind::Z: return "z";
  }
  return "?";
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += w[i].str();
  }
  return s;
}

Poly Poly::unit(Domain d) { return term({}, Scalar::one(d)); }

Poly Poly::var(Var v, Domain d) { return term({v}, Scalar::one(d)); }

Poly Poly::term(Word w, Scalar c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
  return p;
}

Domain Poly::domain() const {
  return terms_.empty() ? Domain{} : terms_.begin()->second.domain();
}

std::set<Var> Poly::variables() const {
  std::set<Var> vs;
  for (const auto& [w, c] : terms_) vs.insert(w.begin(), w.end());
  return vs;
}

void Poly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r;
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) {
    Scalar v = k * c;
    if (!v.is_zero()) r.terms_.emplace(w, v);
  }
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

bool Poly::operator<(const Poly& o) const {
  auto a = terms_.begin(), b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
    if (!(a->second == b->second)) return a->second.str() < b->second.str();
  }
  return b != o.terms_.end();
}

Poly pow(const Poly& p, unsigned e) {
  Poly r = Poly::unit(p.domain());
  for (unsigned i = 0; i < e; ++i) r = r * p;
  return r;
}

Substitution& Substitution::set(Var v, Poly image) {
  map_[v] = std::move(image);
  return *this;
}

const Poly* Substitution::image(Var v) const {
  auto it = map_.find(v);
  return it == map_.end() ? nullptr : &it->second;
}

Poly Substitution::apply(const Poly& p) const {
  Domain d = p.domain();
  Poly out;
  for (const auto& [w, c] : p.terms()) {
    Poly prod = Poly::term({}, c);
    for (Var v : w) {
      const Poly* img = image(v);
      prod = img ? prod * *img : prod * Poly::var(v, d);
    }
    out += prod;
  }
  return out;
}

namespace {

int permutation_sign(const std::vector<unsigned>& images) {
  int inversions = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

Poly capelli(unsigned k, Domain d) {
  if (k < 1) throw std::invalid_argument("capelli: k must be >= 1");
  std::vector<unsigned> perm(k);
  std::iota(perm.begin(), perm.end(), 1u);
  Poly out;
  do {
    Word w;
    w.reserve(2 * k);
    for (unsigned i = 0; i < k; ++i) {
      w.push_back(Var::x(perm[i]));
      w.push_back(Var::y(i + 1));
    }
    Scalar c = Scalar::one(d);
    if (permutation_sign(perm) < 0) c = -c;
    out.add_term(w, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Poly capelli_word_instance(unsigned m, const Word& a, const std::vector<Word>& p,
                           const std::vector<Word>& q, const Word& b, Domain d) {
  if (p.size() != m || q.size() != m)
    throw std::invalid_argument("capelli_word_instance: need m slot words on each side");
  std::vector<unsigned> perm(m);
  std::iota(perm.begin(), perm.end(), 0u);
  Poly out;
  do {
    Word w(a);
    for (unsigned i = 0; i < m; ++i) {
      const Word& pi = p[perm[i]];
      w.insert(w.end(), pi.begin(), pi.end());
      w.insert(w.end(), q[i].begin(), q[i].end());
    }
    w.insert(w.end(), b.begin(), b.end());
    Scalar c = Scalar::one(d);
    if (permutation_sign(perm) < 0) c = -c;
    out.add_term(w, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Poly standard_poly(unsigned n, Domain d) {
  std::vector<Word> p(n), q(n);
  for (unsigned i = 0; i < n; ++i) p[i] = {Var::x(i + 1)};
  return capelli_word_instance(n, {}, p, q, {}, d);
}

Poly double_capelli(unsigned n, Domain d) {
  if (n < 1) throw std::invalid_argument("double_capelli: n must be >= 1");
  auto capelli_with_ts = [&](VarKind kind, unsigned first_t) {
    std::vector<Word> p(n), q(n);
    for (unsigned i = 0; i < n; ++i) {
      p[i] = {Var{kind, i + 1}};
      q[i] = {Var::t(first_t + i)};
    }
    return capelli_word_instance(n, {}, p, q, {}, d);
  };
  Poly f = Poly::var(Var::t(1), d);
  f = f * capelli_with_ts(VarKind::X, 4);
  f = f * Poly::var(Var::t(2), d);
  f = f * capelli_with_ts(VarKind::Y, 4 + n);
  f = f * Poly::var(Var::t(3), d);
  return f;
}

bool is_multilinear(const Poly& p, const std::set<Var>& vars) {
  for (const auto& [w, c] : p.terms()) {
    std::map<Var, unsigned> deg = word_degree(w);
    for (Var v : vars) {
      auto it = deg.find(v);
      if (it == deg.end() || it->second != 1) return false;
    }
  }
  return true;
}

namespace {

Poly rename_swap(const Poly& p, Var a, Var b) {
  Substitution s;
  s.set(a, Poly::var(b, p.domain()));
  s.set(b, Poly::var(a, p.domain()));
  return s.apply(p);
}

}  // namespace

AlternationReport alternation_report(const Poly& p, const std::set<Var>& vars) {
  AlternationReport rep;
  rep.multilinear = is_multilinear(p, vars);
  if (!rep.multilinear) return rep;
  rep.swap_negates = true;
  rep.substitution_vanishes = true;
  std::vector<Var> vs(vars.begin(), vars.end());
  for (std::size_t i = 0; i < vs.size() && (rep.swap_negates || rep.substitution_vanishes); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (rep.swap_negates && rename_swap(p, vs[i], vs[j]) + p != Poly::zero())
        rep.swap_negates = false;
      if (rep.substitution_vanishes) {
        Substitution s;
        s.set(vs[j], Poly::var(vs[i], p.domain()));
        if (!s.apply(p).is_zero()) rep.substitution_vanishes = false;
      }
      if (!rep.swap_negates && !rep.substitution_vanishes) break;
    }
  }
  return rep;
}

bool is_alternating(const Poly& p, const std::set<Var>& vars) {
  return alternation_report(p, vars).alternating();
}

Poly alternator(const Poly& p, const std::vector<Var>& vars) {
  std::vector<unsigned> perm(vars.size());
  std::iota(perm.begin(), perm.end(), 0u);
  Poly out;
  do {
    Substitution s;
    for (std::size_t i = 0; i < vars.size(); ++i)
      s.set(vars[i], Poly::var(vars[perm[i]], p.domain()));
    Poly img = s.apply(p);
    out += permutation_sign(perm) < 0 ? -img : img;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::map<Var, unsigned> word_degree(const Word& w) {
  std::map<Var, unsigned> deg;
  for (Var v : w) ++deg[v];
  return deg;
}

MultiDegree multidegree(const Poly& p) {
  MultiDegree md;
  std::set<std::map<Var, unsigned>> seen;
  for (const auto& [w, c] : p.terms()) seen.insert(word_degree(w));
  md.components.assign(seen.begin(), seen.end());
  md.homogeneous = seen.size() <= 1;
  if (seen.size() == 1) md.degree = *seen.begin();
  return md;
}

std::vector<Poly> homogeneous_components(const Poly& p) {
  std::map<std::map<Var, unsigned>, Poly> parts;
  for (const auto& [w, c] : p.terms()) parts[word_degree(w)].add_term(w, c);
  std::vector<Poly> out;
  out.reserve(parts.size());
  for (auto& [deg, q] : parts) out.push_back(std::move(q));
  return out;
}

Poly component_of_degree(const Poly& p, Var v, unsigned k) {
  Poly out;
  for (const auto& [w, c] : p.terms())
    if (static_cast<unsigned>(std::count(w.begin(), w.end(), v)) == k) out.add_term(w, c);
  return out;
}

std::string Poly::str() const { return to_text(*this); }

std::string to_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Scalar a = c;
    bool neg = false;
    if (a.domain().is_rational() && a.rat() < 0) {
      neg = true;
      a = -a;
    }
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (w.empty()) {
      os << a.str();
    } else if (a.is_one()) {
      os << word_str(w);
    } else {
      os << a.str() << "*" << word_str(w);
    }
  }
  return os.str();
}

std::optional<Var> parse_var(const std::string& tok) {
  if (tok == "z") return Var::z();
  if (tok.size() < 2) return std::nullopt;
  VarKind k;
  switch (tok[0]) {
    case 'x': k = VarKind::X; break;
    case 'y': k = VarKind::Y; break;
    case 't': k = VarKind::T; break;
    default: return std::nullopt;
  }
  for (std::size_t i = 1; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return std::nullopt;
  return Var{k, static_cast<std::uint32_t>(std::stoul(tok.substr(1)))};
}

namespace {

struct PolyParser {
  const std::string& s;
  std::size_t pos = 0;
  Domain dom;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  std::string read_token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  }

  Scalar read_coefficient() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string num = s.substr(start, pos - start);
    std::string den = "1";
    if (peek_is('/')) {
      ++pos;
      skip_ws();
      start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      den = s.substr(start, pos - start);
      if (den.empty()) throw std::invalid_argument("poly parse: missing denominator");
    }
    if (dom.is_rational()) return Scalar(mpq_class(num + "/" + den));
    Scalar n = Scalar::mod_p(std::stol(num), dom.p);
    return den == "1" ? n : n / Scalar::mod_p(std::stol(den), dom.p);
  }

  // term := [coefficient '*'] var ('*' var)* | coefficient
  Poly read_term() {
    skip_ws();
    Scalar coeff = Scalar::one(dom);
    Word w;
    bool saw_number = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = read_coefficient();
      saw_number = true;
    }
    bool expect_var = !saw_number;
    while (true) {
      if (peek_is('*')) {
        ++pos;
        expect_var = true;
      } else if (!expect_var) {
        break;
      }
      std::string tok = read_token();
      if (tok.empty()) {
        if (expect_var && !saw_number) throw std::invalid_argument("poly parse: expected variable");
        break;
      }
      auto v = parse_var(tok);
      if (!v) throw std::invalid_argument("poly parse: bad variable '" + tok + "'");
      w.push_back(*v);
      expect_var = false;
    }
    return Poly::term(std::move(w), coeff);
  }

  Poly parse() {
    Poly out;
    skip_ws();
    if (pos >= s.size()) return out;
    bool neg = false;
    if (peek_is('-')) {
      neg = true;
      ++pos;
    } else if (peek_is('+')) {
      ++pos;
    }
    while (true) {
      Poly t = read_term();
      out += neg ? -t : t;
      skip_ws();
      if (pos >= s.size()) break;
      if (s[pos] == '+') {
        neg = false;
        ++pos;
      } else if (s[pos] == '-') {
        neg = true;
        ++pos;
      } else {
        throw std::invalid_argument("poly parse: unexpected character at " + std::to_string(pos));
      }
    }
    return out;
  }
};

}  // namespace

Poly parse_poly(const std::string& text, Domain d) {
  if (text == "0") return Poly::zero();
  PolyParser p{text, 0, d};
  return p.parse();
}

}  // namespace piwb
