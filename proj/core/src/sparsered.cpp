#include "piwb/sparsered.hpp"

#include <algorithm>
#include <sstream>

namespace piwb {

SparseIdentity::SparseIdentity(unsigned d, std::map<Perm, Scalar> coeffs)
    : d_(d), coeffs_(std::move(coeffs)) {
  if (d_ < 2) throw std::invalid_argument("sparse identity degree must be >= 2");
  auto id = coeffs_.find(Perm(d_));
  if (id == coeffs_.end() || !id->second.is_one())
    throw std::invalid_argument("sparse identity must be normalized with alpha_id = 1");
  bool other = false;
  for (const auto& [p, c] : coeffs_) {
    if (p.size() != d_) throw std::invalid_argument("sparse identity permutation size mismatch");
    if (!p.is_identity() && !c.is_zero()) other = true;
  }
  if (!other)
    throw std::invalid_argument("sparse identity needs a nonzero non-identity coefficient");
}

SparseIdentity SparseIdentity::commutator() {
  std::map<Perm, Scalar> c;
  c.emplace(Perm(2), Scalar(1));
  c.emplace(Perm::transposition(2, 1, 2), Scalar(-1));
  return SparseIdentity(2, std::move(c));
}

std::vector<std::size_t> SlottedMonomial::length_tuple() const {
  std::vector<std::size_t> t;
  t.reserve(slots.size());
  for (const auto& v : slots) t.push_back(v.size());
  return t;
}

std::string SlottedMonomial::str() const {
  std::ostringstream os;
  auto word = [&](const std::vector<unsigned>& w, char letter) {
    if (w.empty()) {
      os << "1";
      return;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << ".";
      os << letter << w[i];
    }
  };
  for (std::size_t i = 0; i < slots.size(); ++i) {
    os << "(";
    word(gaps[i], 'b');
    os << ")[";
    word(slots[i], 'a');
    os << "]";
  }
  os << "(";
  word(gaps.back(), 'b');
  os << ")";
  return os.str();
}

bool lex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void FormalCombination::add(const SlottedMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  if (m.gaps.size() != m.slots.size() + 1)
    throw std::invalid_argument("slotted monomial needs one more gap than slots");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ReduceStep reduce_step(const SlottedMonomial& m, const SparseIdentity& id) {
  ReduceStep out;
  out.input_tuple = m.length_tuple();
  const unsigned d = id.degree();

  std::vector<std::size_t> long_slots;
  for (std::size_t i = 0; i < m.slots.size(); ++i)
    if (m.slots[i].size() >= d) long_slots.push_back(i);
  if (long_slots.size() < d) return out;  // not reducible
  long_slots.resize(d);  // the d long slots with smallest indices

  // v_i = w_i u_i with |u_i| = d - i for the i-th chosen slot (1-based);
  // feasible since d - i <= d - 1 < |v_i|.
  std::vector<std::vector<unsigned>> prefix(d), suffix(d);
  for (unsigned i = 0; i < d; ++i) {
    const auto& v = m.slots[long_slots[i]];
    std::size_t ulen = d - (i + 1);
    prefix[i].assign(v.begin(), v.end() - ulen);
    suffix[i].assign(v.end() - ulen, v.end());
  }

  out.reducible = true;
  for (const auto& [sigma, alpha] : id.coeffs()) {
    if (sigma.is_identity() || alpha.is_zero()) continue;
    SlottedMonomial next = m;
    for (unsigned i = 0; i < d; ++i) {
      std::vector<unsigned> v = prefix[i];
      const auto& u = suffix[sigma(i + 1) - 1];
      v.insert(v.end(), u.begin(), u.end());
      next.slots[long_slots[i]] = std::move(v);
    }
    if (!lex_less(next.length_tuple(), out.input_tuple)) out.strict_descent = false;
    out.result.add(next, -alpha);
  }
  return out;
}

ReduceTrace reduce_full(const FormalCombination& c, const SparseIdentity& id, bool keep_trace,
                        std::uint64_t step_cap) {
  ReduceTrace out;
  const unsigned d = id.degree();
  FormalCombination work = c;
  while (true) {
    const SlottedMonomial* target = nullptr;
    for (const auto& [m, coeff] : work.terms()) {
      unsigned long_count = 0;
      for (const auto& v : m.slots)
        if (v.size() >= d) ++long_count;
      if (long_count >= d) {
        target = &m;
        break;
      }
    }
    if (!target) break;
    if (out.steps >= step_cap) {
      out.terminated = false;
      break;
    }
    ++out.steps;
    SlottedMonomial m = *target;
    Scalar coeff = work.terms().at(m);
    ReduceStep step = reduce_step(m, id);
    if (!step.reducible || !step.strict_descent)
      throw std::logic_error("reduce_full: chosen monomial failed to reduce strictly");
    if (keep_trace) {
      std::ostringstream os;
      os << "step " << out.steps << ": " << m.str() << " -> " << step.result.size() << " terms";
      out.trace.push_back(os.str());
    }
    work.add(m, -coeff);
    for (const auto& [nm, nc] : step.result.terms()) work.add(nm, coeff * nc);
  }
  out.result = std::move(work);
  return out;
}

CountingCheck capelli_vanishing_by_counting(const mpz_class& r, unsigned d) {
  CountingCheck out;
  out.r_flagged = r < 2;
  mpz_class pw;
  mpz_pow_ui(pw.get_mpz_t(), r.get_mpz_t(), d);
  out.r_pow_d = pw;
  out.short_words = 0;
  mpz_class acc = 1;
  for (unsigned q = 0; q < d; ++q) {
    out.short_words += acc;
    acc *= r;
  }
  out.n = pw + d;
  out.short_words_less = out.short_words < out.r_pow_d;
  out.pigeonhole_forced = out.n - (d - 1) > out.r_pow_d;
  return out;
}

Element evaluate_combination(const FormalCombination& c, const FiniteAlgebra& alg,
                             const std::vector<Element>& gen_assign,
                             const std::vector<Element>& side_assign) {
  Element total = alg.zero();
  for (const auto& [m, coeff] : c.terms()) {
    Element prod = alg.unit();
    auto mul_word = [&](const std::vector<unsigned>& w, const std::vector<Element>& table) {
      for (unsigned letter : w) {
        if (letter < 1 || letter > table.size())
          throw std::invalid_argument("letter index out of range of the assignment");
        prod = alg.mul(prod, table[letter - 1]);
      }
    };
    for (std::size_t i = 0; i < m.slots.size(); ++i) {
      mul_word(m.gaps[i], side_assign);
      mul_word(m.slots[i], gen_assign);
    }
    mul_word(m.gaps.back(), side_assign);
    total = alg.add(total, alg.scale(coeff, prod));
  }
  return total;
}

nlohmann::json combination_to_json(const FormalCombination& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, coeff] : c.terms())
    arr.push_back({{"template", {{"gaps", m.gaps}}}, {"slots", m.slots}, {"coeff", coeff.str()}});
  return arr;
}

FormalCombination combination_from_json(const nlohmann::json& j, Domain d) {
  FormalCombination out;
  for (const auto& item : j) {
    SlottedMonomial m;
    m.gaps = item.at("template").at("gaps").get<std::vector<std::vector<unsigned>>>();
    m.slots = item.at("slots").get<std::vector<std::vector<unsigned>>>();
    std::string c = item.value("coeff", "1");
    Scalar coeff = d.is_rational() ? Scalar(mpq_class(c)) : Scalar::mod_p(std::stol(c), d.p);
    out.add(m, coeff);
  }
  return out;
}

nlohmann::json identity_to_json(const SparseIdentity& id) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : id.coeffs()) terms.push_back({{"perm", p.str()}, {"coeff", c.str()}});
  return {{"d", id.degree()}, {"terms", terms}};
}

SparseIdentity identity_from_json(const nlohmann::json& j, Domain d) {
  unsigned deg = j.at("d").get<unsigned>();
  std::map<Perm, Scalar> coeffs;
  for (const auto& item : j.at("terms")) {
    Perm p = Perm::parse(item.at("perm").get<std::string>());
    std::string c = item.at("coeff").get<std::string>();
    Scalar coeff = d.is_rational() ? Scalar(mpq_class(c)) : Scalar::mod_p(std::stol(c), d.p);
    coeffs.emplace(p, coeff);
  }
  return SparseIdentity(deg, std::move(coeffs));
}

}  // namespace piwb
