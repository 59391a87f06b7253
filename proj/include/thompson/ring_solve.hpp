#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "thompson/ring.hpp"

namespace thompson {

struct BasisSpec {
  int maxDegree = 0;
  int maxIndex = 0;
};

// All positive monomials with word length <= maxDegree and generator indices
// <= maxIndex (non-decreasing index sequences), identity included.
inline std::vector<NormalForm> monomial_basis(const BasisSpec& spec) {
  if (spec.maxDegree < 0 || spec.maxIndex < 0)
    throw std::invalid_argument("basis bounds must be non-negative");
  std::vector<NormalForm> out;
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t minIndex) -> void {
    out.push_back(NormalForm::from_parts(cur, {}));
    if (static_cast<int>(cur.size()) == spec.maxDegree) return;
    for (std::uint32_t i = minIndex; i <= static_cast<std::uint32_t>(spec.maxIndex); ++i) {
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace linalg {

// Sparse exact linear system A x = b over a field; rows are equations.
template <class F>
class LinearSystem {
 public:
  explicit LinearSystem(int cols) : cols_(cols) {}

  void add_term(int row, int col, const F& value) {
    ensure_row(row);
    rows_[static_cast<std::size_t>(row)][col] += value;
  }

  void set_rhs(int row, const F& value) {
    ensure_row(row);
    rhs_[static_cast<std::size_t>(row)] += value;
  }

  // Reduced row echelon form; returns pivot column -> reduced row.
  // Each reduced row has a leading 1 in its pivot column and zeros in all
  // other pivot columns.  The rhs travels in column index cols_.
  std::map<int, std::map<int, F>> rref() const {
    std::map<int, std::map<int, F>> pivots;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::map<int, F> row = rows_[r];
      if (!thompson::is_zero(rhs_[r])) row[cols_] = rhs_[r];
      reduce(row, pivots);
      prune_zeros(row);
      if (row.empty()) continue;
      int lead = row.begin()->first;
      F inv = F(1) / row.begin()->second;
      for (auto& [c, v] : row) v *= inv;
      // clear this column from existing pivot rows
      for (auto& [pc, prow] : pivots) {
        auto it = prow.find(lead);
        if (it == prow.end()) continue;
        F factor = it->second;
        for (const auto& [c, v] : row) prow[c] -= factor * v;
        prune_zeros(prow);
      }
      pivots.emplace(lead, std::move(row));
    }
    return pivots;
  }

  int cols() const { return cols_; }

  // Basis of the kernel of A (rhs ignored must be zero).
  std::vector<std::vector<F>> kernel() const {
    for (const auto& v : rhs_)
      if (!thompson::is_zero(v)) throw std::logic_error("kernel of an inhomogeneous system");
    auto pivots = rref();
    std::vector<bool> isPivot(static_cast<std::size_t>(cols_), false);
    for (const auto& [c, row] : pivots) isPivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<F>> basis;
    for (int f = 0; f < cols_; ++f) {
      if (isPivot[static_cast<std::size_t>(f)]) continue;
      std::vector<F> x(static_cast<std::size_t>(cols_), F(0));
      x[static_cast<std::size_t>(f)] = F(1);
      for (const auto& [p, row] : pivots) {
        auto it = row.find(f);
        if (it != row.end()) x[static_cast<std::size_t>(p)] = -it->second;
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

  // One solution of A x = b (free variables zero), or nullopt if inconsistent.
  std::optional<std::vector<F>> particular_solution() const {
    auto pivots = rref();
    if (pivots.count(cols_)) return std::nullopt;  // row 0 = 1
    std::vector<F> x(static_cast<std::size_t>(cols_), F(0));
    for (const auto& [p, row] : pivots) {
      auto it = row.find(cols_);
      if (it != row.end()) x[static_cast<std::size_t>(p)] = it->second;
    }
    return x;
  }

 private:
  void ensure_row(int row) {
    if (row < 0) throw std::invalid_argument("negative row");
    if (static_cast<std::size_t>(row) >= rows_.size()) {
      rows_.resize(static_cast<std::size_t>(row) + 1);
      rhs_.resize(static_cast<std::size_t>(row) + 1, F(0));
    }
  }

  static void prune_zeros(std::map<int, F>& row) {
    for (auto it = row.begin(); it != row.end();)
      it = thompson::is_zero(it->second) ? row.erase(it) : std::next(it);
  }

  void reduce(std::map<int, F>& row, const std::map<int, std::map<int, F>>& pivots) const {
    for (;;) {
      prune_zeros(row);
      bool changed = false;
      for (auto it = row.begin(); it != row.end(); ++it) {
        auto p = pivots.find(it->first);
        if (p == pivots.end()) continue;
        F factor = it->second;
        for (const auto& [c, v] : p->second) row[c] -= factor * v;
        changed = true;
        break;
      }
      if (!changed) return;
    }
  }

  int cols_;
  std::vector<std::map<int, F>> rows_;
  std::vector<F> rhs_;
};

}  // namespace linalg

struct SolveStats {
  std::size_t rows = 0;
  std::size_t columns = 0;
};

// Kernel basis of the chained system a_1 u_1 = a_2 u_2 = ... = a_t u_t, with
// every unknown ranging over the same monomial basis.  An empty result means
// there is no nonzero solution WITHIN this basis; nothing is claimed beyond
// it.
template <class F>
std::vector<std::vector<RingElement<F>>> solve_right(const std::vector<RingElement<F>>& aList,
                                                     const BasisSpec& spec,
                                                     SolveStats* stats = nullptr) {
  if (aList.size() < 2) throw std::invalid_argument("solve_right needs at least two elements");
  auto basis = monomial_basis(spec);
  int nb = static_cast<int>(basis.size());
  int unknowns = static_cast<int>(aList.size());
  linalg::LinearSystem<F> sys(nb * unknowns);

  std::map<NormalForm, int> rowOf;
  auto row_of = [&](const NormalForm& m) {
    auto it = rowOf.find(m);
    if (it != rowOf.end()) return it->second;
    int id = static_cast<int>(rowOf.size());
    rowOf.emplace(m, id);
    return id;
  };

  // a_i u_i - a_{i+1} u_{i+1} = 0, one block of rows per adjacent pair
  int rowBase = 0;
  for (int eq = 0; eq + 1 < unknowns; ++eq) {
    rowOf.clear();
    for (int side = 0; side < 2; ++side) {
      const auto& a = aList[static_cast<std::size_t>(eq + side)];
      F sgn = side == 0 ? F(1) : F(-1);
      for (int b = 0; b < nb; ++b) {
        RingElement<F> prod = a * RingElement<F>::monomial(basis[static_cast<std::size_t>(b)]);
        for (const auto& [m, c] : prod.terms())
          sys.add_term(rowBase + row_of(m), (eq + side) * nb + b, sgn * c);
      }
    }
    rowBase += static_cast<int>(rowOf.size());
  }
  if (stats) {
    stats->rows = static_cast<std::size_t>(rowBase);
    stats->columns = static_cast<std::size_t>(nb * unknowns);
  }

  std::vector<std::vector<RingElement<F>>> out;
  for (const auto& vec : sys.kernel()) {
    std::vector<RingElement<F>> sol(static_cast<std::size_t>(unknowns));
    for (int ui = 0; ui < unknowns; ++ui)
      for (int b = 0; b < nb; ++b) {
        const F& c = vec[static_cast<std::size_t>(ui * nb + b)];
        if (!thompson::is_zero(c))
          sol[static_cast<std::size_t>(ui)].add_term(basis[static_cast<std::size_t>(b)], c);
      }
    out.push_back(std::move(sol));
  }
  return out;
}

// Solves a * v = rhs for v over the monomial basis; in K[F] the solution is
// unique when it exists (no zero divisors).
template <class F>
std::optional<RingElement<F>> solve_inhom(const RingElement<F>& a, const RingElement<F>& rhs,
                                          const BasisSpec& spec) {
  auto basis = monomial_basis(spec);
  int nb = static_cast<int>(basis.size());
  linalg::LinearSystem<F> sys(nb);
  std::map<NormalForm, int> rowOf;
  auto row_of = [&](const NormalForm& m) {
    auto it = rowOf.find(m);
    if (it != rowOf.end()) return it->second;
    int id = static_cast<int>(rowOf.size());
    rowOf.emplace(m, id);
    return id;
  };
  for (int b = 0; b < nb; ++b) {
    RingElement<F> prod = a * RingElement<F>::monomial(basis[static_cast<std::size_t>(b)]);
    for (const auto& [m, c] : prod.terms()) sys.add_term(row_of(m), b, c);
  }
  for (const auto& [m, c] : rhs.terms()) sys.set_rhs(row_of(m), c);
  auto x = sys.particular_solution();
  if (!x) return std::nullopt;
  RingElement<F> v;
  for (int b = 0; b < nb; ++b)
    if (!thompson::is_zero((*x)[static_cast<std::size_t>(b)]))
      v.add_term(basis[static_cast<std::size_t>(b)], (*x)[static_cast<std::size_t>(b)]);
  if (!(a * v == rhs)) throw std::logic_error("inhomogeneous solve failed verification");
  return v;
}

// ---- closed-form solution families ------------------------------------

// Basic solution of (x0 + a x2) u = (x1 + b x2) v.
template <class F>
std::pair<RingElement<F>, RingElement<F>> basic_012_solution(const F& a, const F& b) {
  using R = RingElement<F>;
  auto mono = [](std::initializer_list<std::uint32_t> idx, F c) {
    std::vector<std::uint32_t> v(idx);
    return R::monomial(NormalForm::from_parts(std::move(v), {}), c);
  };
  R u = mono({0, 3}, b) + mono({0, 4}, b * b) + mono({1, 3}, -a) + mono({1, 4}, -(a * b)) +
        mono({3, 3}, -(a * b)) + mono({3, 4}, -(a * b * b));
  R v = mono({0, 0}, b) + mono({0, 1}, -a) + mono({3, 3}, -(a * a)) + mono({3, 4}, -(a * a * b));
  return {u, v};
}

// Basic solution of (x0 + b x2) u = (x1 + b x2) v in the normalized form of
// the inductive description (the a = b case scaled by 1/b).
template <class F>
std::pair<RingElement<F>, RingElement<F>> descr_basic(const F& b) {
  using R = RingElement<F>;
  auto mono = [](std::initializer_list<std::uint32_t> idx, F c) {
    std::vector<std::uint32_t> v(idx);
    return R::monomial(NormalForm::from_parts(std::move(v), {}), c);
  };
  R u = mono({0, 3}, F(1)) + mono({0, 4}, b) + mono({1, 3}, F(-1)) + mono({1, 4}, -b) +
        mono({3, 3}, -b) + mono({3, 4}, -(b * b));
  R v = mono({0, 0}, F(1)) + mono({0, 1}, F(-1)) + mono({3, 3}, -b) + mono({3, 4}, -(b * b));
  return {u, v};
}

// u_k of the solution module of (1 - x0) u = (1 - x1) v:
// u_0 = (1 + x0 - x1)(1 - x3), u_k = (1 - x1) phi(u_{k-1}).
template <class F>
RingElement<F> descr01_u(int k) {
  using R = RingElement<F>;
  R u = (R::one() + R::generator(0) - R::generator(1)) * (R::one() - R::generator(3));
  for (int i = 1; i <= k; ++i) u = (R::one() - R::generator(1)) * phi_apply(u);
  return u;
}

// k-th generator of the solution module of (x0 + b x2) u = (x1 + b x2) v:
// prod_{i=1..k} (x_i + b x_{i+2}) * phi^k(u_0).
template <class F>
RingElement<F> descr_u(const F& b, int k) {
  using R = RingElement<F>;
  if (thompson::is_zero(b)) throw std::invalid_argument("descr family needs nonzero beta");
  R u = phi_apply(descr_basic(b).first, static_cast<unsigned>(k));
  R prod = R::one();
  for (int i = 1; i <= k; ++i)
    prod = prod * (R::generator(static_cast<std::uint32_t>(i)) +
                   R::generator(static_cast<std::uint32_t>(i + 2), b));
  return prod * u;
}

// Lift of a solution (u', v') of the a = b case to parameters (a, b):
//   u = a^-1 (x1 + b x3) phi(u'),   v = a^-1 x0 phi(v') + x3 phi(u').
// (the homogeneous lift, w_1 = 0)
template <class F>
std::pair<RingElement<F>, RingElement<F>> lift_solution(const RingElement<F>& uPrime,
                                                        const RingElement<F>& vPrime, const F& a,
                                                        const F& b) {
  using R = RingElement<F>;
  if (thompson::is_zero(a)) throw std::invalid_argument("lift needs alpha != 0");
  R eqL = R::generator(0) + R::generator(2, b);
  R eqR = R::generator(1) + R::generator(2, b);
  if (!(eqL * uPrime == eqR * vPrime))
    throw std::invalid_argument("input pair does not solve the alpha = beta equation");
  F ainv = F(1) / a;
  R u = ainv * ((R::generator(1) + R::generator(3, b)) * phi_apply(uPrime));
  R v = ainv * (R::generator(0) * phi_apply(vPrime)) + R::generator(3) * phi_apply(uPrime);
  return {u, v};
}

// Telescoping of a relation w = 1 into (1 - x0) u = (1 - x1) v: the suffix
// elements g_i = xi_i ... xi_n contribute
//   x0:   -g_{i+1}    x0^-1:  g_i      (to u)
//   x1:   -g_{i+1}    x1^-1:  g_i      (to -v)
template <class F>
std::pair<RingElement<F>, RingElement<F>> relation_to_solution(const GroupWord& w) {
  using R = RingElement<F>;
  if (!is_trivial_word(w)) throw std::invalid_argument("relation_to_solution needs w = 1 in F");
  std::vector<NormalForm> suffix(w.size() + 1);
  suffix[w.size()] = NormalForm::identity();
  for (std::size_t i = w.size(); i-- > 0;)
    suffix[i] = multiply(nf_from_word({w[i]}), suffix[i + 1]);
  R u, vneg;
  for (std::size_t i = 0; i < w.size(); ++i) {
    R& acc = w[i].index == 0 ? u : vneg;
    if (w[i].index > 1) throw std::invalid_argument("telescoping expects a two-letter word");
    if (w[i].sign > 0)
      acc.add_term(suffix[i + 1], F(-1));
    else
      acc.add_term(suffix[i], F(1));
  }
  R v = -vneg;
  R onemx0 = R::one() - R::generator(0);
  R onemx1 = R::one() - R::generator(1);
  if (!(onemx0 * u == onemx1 * v)) throw std::logic_error("telescoped pair fails verification");
  return {u, v};
}

// The product (a_1 x0 + b_1 x1)(a_2 x0 + b_2 x2)...(a_k x0 + b_k x_k) is left
// divisible by a_i x0 + b_i x1 for every i; checked by solving for each
// quotient.
template <class F>
bool divisibility_product_check(const std::vector<std::pair<F, F>>& pairs) {
  using R = RingElement<F>;
  if (pairs.size() < 2) throw std::invalid_argument("need k >= 2 factors");
  for (const auto& [a, b] : pairs)
    if (thompson::is_zero(a) && thompson::is_zero(b))
      throw std::invalid_argument("degenerate zero factor");
  R prod = R::one();
  for (std::size_t i = 0; i < pairs.size(); ++i)
    prod = prod * (R::generator(0, pairs[i].first) +
                   R::generator(static_cast<std::uint32_t>(i + 1), pairs[i].second));
  BasisSpec spec{static_cast<int>(pairs.size()) - 1, static_cast<int>(prod.max_index())};
  for (const auto& [a, b] : pairs) {
    R divisor = R::generator(0, a) + R::generator(1, b);
    if (!solve_inhom(divisor, prod, spec)) return false;
  }
  return true;
}

}  // namespace thompson
