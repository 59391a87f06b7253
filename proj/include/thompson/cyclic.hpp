#pragma once

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "thompson/words.hpp"

namespace thompson {

// Word over {x0^±1, x1^±1} read cyclically.
struct CyclicWord {
  GroupWord letters;

  CyclicWord() = default;
  explicit CyclicWord(GroupWord w) : letters(std::move(w)) {
    for (const auto& l : letters)
      if (l.index > 1)
        throw std::invalid_argument("cyclic words live over the two-letter alphabet");
  }

  std::string str() const { return to_string(letters); }
};

struct BalanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vertex weights around the cycle: vertex p sits before letter p, the base
// vertex 0 has weight 0; x0 steps up, x0^-1 steps down, x1^±1 keeps the
// weight.  Consistency around the cycle needs x0-balance zero.
inline std::vector<long long> cyclic_weights(const CyclicWord& w) {
  long long balance = 0;
  for (const auto& l : w.letters)
    if (l.index == 0) balance += l.sign;
  if (balance != 0) throw BalanceError("weights are inconsistent: nonzero x0 exponent sum");
  std::vector<long long> weights(w.letters.size(), 0);
  long long cur = 0;
  for (std::size_t p = 0; p < w.letters.size(); ++p) {
    weights[p] = cur;
    if (w.letters[p].index == 0) cur += w.letters[p].sign;
  }
  return weights;
}

// Positions of the x1^±1 letters whose edge weight is maximal.  The two
// endpoints of an x1-edge share their weight, so the edge weight is the
// weight of its source vertex.
inline std::vector<std::size_t> max_weight_x1_positions(const CyclicWord& w) {
  auto weights = cyclic_weights(w);
  bool found = false;
  long long best = 0;
  for (std::size_t p = 0; p < w.letters.size(); ++p) {
    if (w.letters[p].index != 1) continue;
    if (!found || weights[p] > best) best = weights[p];
    found = true;
  }
  std::vector<std::size_t> out;
  if (!found) return out;
  for (std::size_t p = 0; p < w.letters.size(); ++p)
    if (w.letters[p].index == 1 && weights[p] == best) out.push_back(p);
  return out;
}

// The transformation T: every maximal-weight x1^±1 edge is renamed to
// x0^±1 (sign preserved).  Length is unchanged.
inline CyclicWord transform_T(const CyclicWord& w, std::vector<std::size_t>* renamedOut = nullptr) {
  auto renamed = max_weight_x1_positions(w);
  if (renamed.empty())
    throw std::invalid_argument("transform_T needs at least one x1 letter");
  CyclicWord out = w;
  for (auto p : renamed) out.letters[p].index = 0;
  if (renamedOut) *renamedOut = std::move(renamed);
  return out;
}

struct WpTraceStep {
  std::string word;                  // word before this application of T
  std::vector<std::size_t> renamed;  // positions renamed by T
  long long sumX0 = 0, sumX1 = 0;    // exponent sums after renaming
};

struct WpResult {
  bool trivial = false;
  std::vector<WpTraceStep> trace;
};

// Iterated decision procedure: a word whose exponent sums fail to balance
// at any stage is nontrivial; a word reduced to x0-letters with zero sum is
// trivial.  With freeReduceBetween the word is freely reduced after each
// renaming (allowed but not required).
inline WpResult decide_trivial(const CyclicWord& input, bool freeReduceBetween = false) {
  WpResult res;
  CyclicWord w = input;
  std::size_t iterationCap = input.letters.size() + 1;
  for (std::size_t iter = 0; iter <= iterationCap; ++iter) {
    auto sums = exponent_sums(w.letters);
    long long s0 = sums.count(0) ? sums.at(0) : 0;
    long long s1 = sums.count(1) ? sums.at(1) : 0;
    if (s0 != 0 || s1 != 0) {
      res.trivial = false;
      return res;
    }
    bool hasX1 = false;
    for (const auto& l : w.letters) hasX1 |= l.index == 1;
    if (!hasX1) {
      res.trivial = true;  // x0-word with zero exponent sum
      return res;
    }
    WpTraceStep step;
    step.word = w.str();
    w = transform_T(w, &step.renamed);
    auto after = exponent_sums(w.letters);
    step.sumX0 = after.count(0) ? after.at(0) : 0;
    step.sumX1 = after.count(1) ? after.at(1) : 0;
    res.trace.push_back(std::move(step));
    if (freeReduceBetween) w = CyclicWord(free_reduce(w.letters));
  }
  throw std::logic_error("cyclic word-problem iteration exceeded its bound");
}

inline nlohmann::json trace_to_json(const WpResult& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.trace) {
    steps.push_back({{"word", s.word},
                     {"renamedPositions", s.renamed},
                     {"sums", {{"x0", s.sumX0}, {"x1", s.sumX1}}}});
  }
  return {{"trivial", r.trivial}, {"iterations", r.trace.size()}, {"steps", std::move(steps)}};
}

}  // namespace thompson
