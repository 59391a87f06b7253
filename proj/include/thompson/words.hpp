#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

// One letter x_i or x_i^-1 of the infinite group alphabet.
struct GeneratorLetter {
  std::uint32_t index = 0;
  int sign = 1;  // +1 or -1

  friend bool operator==(const GeneratorLetter&, const GeneratorLetter&) = default;
  GeneratorLetter inverse() const { return {index, -sign}; }
};

using GroupWord = std::vector<GeneratorLetter>;

inline GeneratorLetter x(std::uint32_t i, int sign = 1) { return {i, sign}; }

inline GroupWord inverse(const GroupWord& w) {
  GroupWord r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(it->inverse());
  return r;
}

inline GroupWord concat(const GroupWord& a, const GroupWord& b) {
  GroupWord r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// b^-1 a b
inline GroupWord conjugate(const GroupWord& a, const GroupWord& b) {
  return concat(concat(inverse(b), a), b);
}

// [a,b] = a^-1 b^-1 a b
inline GroupWord commutator(const GroupWord& a, const GroupWord& b) {
  return concat(concat(inverse(a), inverse(b)), concat(a, b));
}

inline GroupWord word_power(const GroupWord& a, int n) {
  GroupWord base = n < 0 ? inverse(a) : a;
  GroupWord r;
  for (int i = 0; i < (n < 0 ? -n : n); ++i) r = concat(r, base);
  return r;
}

inline GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

// Signed letter count per generator index.  Indices that occur in the word
// are present even when their sum is zero; absent indices count as zero.
inline std::map<std::uint32_t, long long> exponent_sums(const GroupWord& w) {
  std::map<std::uint32_t, long long> sums;
  for (const auto& l : w) sums[l.index] += l.sign;
  return sums;
}

// Token language: whitespace-separated `x<i>` and `x<i>^-1`.
inline GroupWord parse_word(std::string_view text) {
  GroupWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;  // identity token
    if (tok.size() < 2 || tok[0] != 'x')
      throw std::invalid_argument("bad word token: " + tok);
    int sign = 1;
    std::string digits = tok.substr(1);
    auto caret = digits.find('^');
    if (caret != std::string::npos) {
      std::string exp = digits.substr(caret + 1);
      digits = digits.substr(0, caret);
      if (exp == "-1")
        sign = -1;
      else if (exp == "1")
        sign = 1;
      else
        throw std::invalid_argument("bad exponent in token: " + tok);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad index in token: " + tok);
    w.push_back({static_cast<std::uint32_t>(std::stoul(digits)), sign});
  }
  return w;
}

inline std::string to_string(const GroupWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += "x" + std::to_string(w[i].index);
    if (w[i].sign < 0) s += "^-1";
  }
  return s;
}

// Rewrites every letter with index n >= 2 through x_n = x_0^-(n-1) x_1 x_0^(n-1),
// giving a word over {x_0, x_1} only.
inline GroupWord expand_to_two_letters(const GroupWord& w) {
  GroupWord out;
  for (const auto& l : w) {
    if (l.index <= 1) {
      out.push_back(l);
      continue;
    }
    int shift = static_cast<int>(l.index) - 1;
    GroupWord conj = conjugate({x(1, l.sign)}, word_power({x(0)}, shift));
    out.insert(out.end(), conj.begin(), conj.end());
  }
  return out;
}

// The order-2 outer automorphism x_0 -> x_0^-1, x_1 -> x_1 x_0^-1.
// Letters with larger indices are expanded through the two-letter alphabet first.
inline GroupWord flip_automorphism(const GroupWord& w) {
  GroupWord out;
  for (const auto& l : expand_to_two_letters(w)) {
    if (l.index == 0) {
      out.push_back(x(0, -l.sign));
    } else if (l.sign > 0) {
      out.push_back(x(1));
      out.push_back(x(0, -1));
    } else {
      out.push_back(x(0));
      out.push_back(x(1, -1));
    }
  }
  return out;
}

}  // namespace thompson
