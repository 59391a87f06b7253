#pragma once

#include <json.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "thompson/normal_form.hpp"
#include "thompson/numeric.hpp"
#include "thompson/tree_pair.hpp"

namespace thompson {

// Finitely supported K-linear combination of group elements in normal form.
// K is Rational or Fp; no zero coefficients are stored.
template <class F>
class RingElement {
 public:
  RingElement() = default;

  static RingElement zero() { return {}; }
  static RingElement one() { return monomial(NormalForm::identity()); }
  static RingElement monomial(const NormalForm& m, F coeff = F(1)) {
    RingElement e;
    if (!thompson::is_zero(coeff)) e.terms_.emplace(m, coeff);
    return e;
  }
  static RingElement generator(std::uint32_t i, F coeff = F(1)) {
    return monomial(NormalForm::generator(i), coeff);
  }

  const std::map<NormalForm, F>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool has_positive_support() const {
    for (const auto& [m, c] : terms_)
      if (!m.is_positive()) return false;
    return true;
  }

  // max word length over the (positive) support
  int degree() const {
    if (!has_positive_support())
      throw std::domain_error("degree is defined for positive elements only");
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.positive().size()));
    return d;
  }

  bool is_homogeneous() const {
    if (!has_positive_support() || terms_.empty()) return false;
    std::size_t d = terms_.begin()->first.positive().size();
    for (const auto& [m, c] : terms_)
      if (m.positive().size() != d) return false;
    return true;
  }

  std::uint32_t max_index() const {
    std::uint32_t r = 0;
    for (const auto& [m, c] : terms_) r = std::max(r, m.max_index());
    return r;
  }

  F coefficient(const NormalForm& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? F(0) : it->second;
  }

  void add_term(const NormalForm& m, const F& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!thompson::is_zero(c)) terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (thompson::is_zero(it->second)) terms_.erase(it);
  }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    RingElement r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend RingElement operator-(const RingElement& a, const RingElement& b) {
    RingElement r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  RingElement operator-() const { return zero() - *this; }

  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    RingElement r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(multiply(ma, mb), ca * cb);
    return r;
  }

  friend RingElement operator*(const F& s, const RingElement& a) {
    RingElement r;
    for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
    return r;
  }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      std::string cs = scalar_str(c);
      bool negative = !cs.empty() && cs[0] == '-';
      if (out.empty())
        out += negative ? "- " : "";
      else
        out += negative ? " - " : " + ";
      if (negative) cs = cs.substr(1);
      std::string ms = m.str();
      if (cs == "1")
        out += ms;
      else
        out += ms == "1" ? cs : cs + " " + ms;
    }
    return out;
  }

 private:
  std::map<NormalForm, F> terms_;
};

using RingQ = RingElement<Rational>;
using RingFp = RingElement<Fp>;

template <class F>
RingElement<F> ring_mul(const RingElement<F>& a, const RingElement<F>& b) {
  return a * b;
}

// The shift endomorphism x_i -> x_{i+power}, defined on K[M].
template <class F>
RingElement<F> phi_apply(const RingElement<F>& a, unsigned power = 1) {
  RingElement<F> out;
  for (const auto& [m, c] : a.terms()) {
    if (!m.is_positive())
      throw std::domain_error("the shift endomorphism acts on positive elements only");
    std::vector<std::uint32_t> shifted;
    shifted.reserve(m.positive().size());
    for (auto i : m.positive()) shifted.push_back(i + power);
    out.add_term(NormalForm::from_parts(std::move(shifted), {}), c);
  }
  return out;
}

template <class F>
bool verify_identity(const RingElement<F>& a, const RingElement<F>& u, const RingElement<F>& b,
                     const RingElement<F>& v) {
  return a * u == b * v;
}

namespace ringio {

// Text form: terms joined by +/-, each term an optional rational coefficient
// followed by monomial tokens, e.g. "1 + x0 - 2/3 x1 x3^-1".
template <class F>
RingElement<F> parse(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  RingElement<F> out;
  int sign = 1;
  bool haveTerm = false;
  std::string coeff;
  GroupWord mono;
  auto flush = [&]() {
    if (!haveTerm) return;
    Rational c = coeff.empty() ? Rational(1) : parse_rational(coeff);
    if (sign < 0) c = -c;
    out.add_term(nf_from_word(mono), F(c));
    coeff.clear();
    mono.clear();
    haveTerm = false;
  };
  while (in >> tok) {
    if (tok == "+" || tok == "-") {
      flush();
      sign = tok == "-" ? -1 : 1;
      continue;
    }
    if (tok[0] == 'x') {
      GroupWord letter = parse_word(tok);
      mono.insert(mono.end(), letter.begin(), letter.end());
      haveTerm = true;
    } else if (tok == "1" && !haveTerm) {
      haveTerm = true;  // identity monomial
    } else {
      if (haveTerm) flush(), sign = 1;
      coeff = tok;
      haveTerm = true;
    }
  }
  flush();
  return out;
}

template <class F>
nlohmann::json to_json(const RingElement<F>& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : e.terms())
    terms.push_back({{"monomial", m.str()}, {"coeff", scalar_str(c)}});
  return terms;
}

template <class F>
RingElement<F> from_json(const nlohmann::json& j) {
  RingElement<F> out;
  for (const auto& t : j)
    out.add_term(nf_from_word(parse_word(t.at("monomial").get<std::string>())),
                 F(parse_rational(t.at("coeff").get<std::string>())));
  return out;
}

}  // namespace ringio

}  // namespace thompson
