#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "thompson/words.hpp"

namespace thompson {

namespace detail {

// Sorts a positive word by the rewriting x_j x_i -> x_i x_{j+1} (i < j).
// Each step decreases the index sequence lexicographically, so the loop
// terminates; the result is the unique non-decreasing form of the element
// of the positive monoid M.
inline void normalize_positive(std::vector<std::uint32_t>& a) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < a.size(); ++p) {
      if (a[p] > a[p + 1]) {
        std::uint32_t j = a[p], i = a[p + 1];
        a[p] = i;
        a[p + 1] = j + 1;
        changed = true;
      }
    }
  }
}

}  // namespace detail

// The unique normal form x_{i_1}...x_{i_s} x_{j_t}^-1 ... x_{j_1}^-1 of an
// element of F: both index sequences non-decreasing, and whenever some i
// occurs on both sides, i+1 occurs on at least one side.  Values are
// immutable once constructed.
class NormalForm {
 public:
  NormalForm() = default;

  static NormalForm identity() { return {}; }

  static NormalForm generator(std::uint32_t n) {
    NormalForm f;
    f.pos_ = {n};
    return f;
  }

  // Accepts parts that already satisfy the normal-form conditions.
  static NormalForm from_parts(std::vector<std::uint32_t> pos, std::vector<std::uint32_t> neg) {
    NormalForm f;
    f.pos_ = std::move(pos);
    f.neg_ = std::move(neg);
    f.check_valid();
    return f;
  }

  // Sorts and cancels arbitrary positive words for the two parts.
  static NormalForm from_raw_parts(std::vector<std::uint32_t> pos, std::vector<std::uint32_t> neg) {
    detail::normalize_positive(pos);
    detail::normalize_positive(neg);
    NormalForm f;
    f.pos_ = std::move(pos);
    f.neg_ = std::move(neg);
    f.cancel();
    return f;
  }

  const std::vector<std::uint32_t>& positive() const { return pos_; }
  const std::vector<std::uint32_t>& negative() const { return neg_; }

  bool is_identity() const { return pos_.empty() && neg_.empty(); }
  bool is_positive() const { return neg_.empty(); }
  std::size_t length() const { return pos_.size() + neg_.size(); }
  std::uint32_t max_index() const {
    std::uint32_t m = 0;
    if (!pos_.empty()) m = pos_.back();
    if (!neg_.empty()) m = std::max(m, neg_.back());
    return m;
  }

  GroupWord word() const {
    GroupWord w;
    for (auto i : pos_) w.push_back(x(i));
    for (auto it = neg_.rbegin(); it != neg_.rend(); ++it) w.push_back(x(*it, -1));
    return w;
  }

  std::string str() const { return to_string(word()); }

  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;

 private:
  // If some index i occurs in both parts and neither part contains i+1,
  // one x_i cancels on each side and every larger index drops by one.
  void cancel() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t pi = 0; pi < pos_.size(); ++pi) {
        std::uint32_t i = pos_[pi];
        if (!std::binary_search(neg_.begin(), neg_.end(), i)) continue;
        if (std::binary_search(pos_.begin(), pos_.end(), i + 1)) continue;
        if (std::binary_search(neg_.begin(), neg_.end(), i + 1)) continue;
        drop_last(pos_, i);
        drop_last(neg_, i);
        for (auto& v : pos_)
          if (v > i) --v;
        for (auto& v : neg_)
          if (v > i) --v;
        changed = true;
        break;
      }
    }
  }

  static void drop_last(std::vector<std::uint32_t>& v, std::uint32_t i) {
    auto it = std::upper_bound(v.begin(), v.end(), i);
    v.erase(it - 1);
  }

  void check_valid() const {
    if (!std::is_sorted(pos_.begin(), pos_.end()) || !std::is_sorted(neg_.begin(), neg_.end()))
      throw std::invalid_argument("normal form parts must be non-decreasing");
    for (auto i : pos_) {
      if (std::binary_search(neg_.begin(), neg_.end(), i) &&
          !std::binary_search(pos_.begin(), pos_.end(), i + 1) &&
          !std::binary_search(neg_.begin(), neg_.end(), i + 1))
        throw std::invalid_argument("normal form violates the reducedness condition");
    }
  }

  std::vector<std::uint32_t> pos_, neg_;
};

// One left-to-right scan brings any group word to the shape P * Q^-1 with
// P, Q positive: a positive letter is pushed left through the pending
// negative letters using
//   x_q^-1 x_k = x_k x_{q+1}^-1   (k < q)
//   x_q^-1 x_k = x_{k+1} x_q^-1   (k > q)
// and cancellation at k = q.  Both parts are then sorted and the
// normal-form cancellation rule is applied.
inline NormalForm nf_from_word(const GroupWord& w) {
  std::vector<std::uint32_t> praw;
  std::vector<std::uint32_t> negs;  // negative letters in element reading order
  for (const auto& l : w) {
    if (l.sign < 0) {
      negs.push_back(l.index);
      continue;
    }
    std::uint32_t k = l.index;
    bool cancelled = false;
    for (std::size_t p = negs.size(); p-- > 0;) {  // rightmost negative letter first
      std::uint32_t q = negs[p];
      if (k == q) {
        negs.erase(negs.begin() + static_cast<std::ptrdiff_t>(p));
        cancelled = true;
        break;
      }
      if (k > q)
        ++k;  // passes, picking up a bump
      else
        negs[p] = q + 1;  // passes, bumping the negative letter
    }
    if (!cancelled) praw.push_back(k);
  }
  // stored negative part reads the element back to front
  std::vector<std::uint32_t> qword(negs.rbegin(), negs.rend());
  return NormalForm::from_raw_parts(std::move(praw), std::move(qword));
}

inline NormalForm invert(const NormalForm& a) {
  return NormalForm::from_parts(a.negative(), a.positive());
}

inline NormalForm generator_as_element(std::uint32_t n) { return NormalForm::generator(n); }

inline bool is_trivial_word(const GroupWord& w) { return nf_from_word(w).is_identity(); }

inline bool check_relation(const GroupWord& lhs, const GroupWord& rhs) {
  return nf_from_word(lhs) == nf_from_word(rhs);
}

}  // namespace thompson
