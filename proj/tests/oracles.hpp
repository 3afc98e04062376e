#pragma once

// Reference computations for the tests. Deliberately naive and independent of
// the library's own algorithms.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "tpbound/combinatorics.hpp"
#include "tpbound/rational.hpp"

namespace oracle {

using tpbound::Rational;
using Rows = std::vector<std::vector<Rational>>;

inline Rows rows_of(const tpbound::Matrix& m) {
  Rows out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

// Leibniz expansion over all permutations.
inline Rational det(const Rows& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= a[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// det A(rows | cols), 1-based indices.
inline Rational minor(const tpbound::Matrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  Rows sub;
  for (int r : rows) {
    std::vector<Rational> row;
    for (int c : cols) row.push_back(a(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)));
    sub.push_back(row);
  }
  return det(sub);
}

// Maximal minor of [A ; Λ] on the rows alpha (1-based), with
// Λ(n+r, n+1-r) = (-1)^(r-1).
inline Rational bracket(const tpbound::Matrix& a, const std::vector<int>& alpha) {
  const int n = static_cast<int>(a.rows());
  Rows rep(static_cast<std::size_t>(2 * n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) rep[r][c] = a(r, c);
  for (int r = 1; r <= n; ++r) rep[n + r - 1][n - r] = (r % 2 == 1) ? 1 : -1;
  Rows sub;
  for (int i : alpha) sub.push_back(rep[static_cast<std::size_t>(i - 1)]);
  return det(sub);
}

inline Rational ratio_value(const tpbound::Matrix& a, const tpbound::RatioExpr& r) {
  Rational num = 1;
  Rational den = 1;
  for (const auto& s : r.numerator()) num *= bracket(a, s.elements());
  for (const auto& s : r.denominator()) den *= bracket(a, s.elements());
  return num / den;
}

using Sets = std::vector<std::vector<int>>;

inline bool st0(const Sets& num, const Sets& den, int n) {
  std::vector<int> f(static_cast<std::size_t>(2 * n + 1), 0);
  for (const auto& s : num)
    for (int i : s) ++f[static_cast<std::size_t>(i)];
  for (const auto& s : den)
    for (int i : s) --f[static_cast<std::size_t>(i)];
  return std::all_of(f.begin(), f.end(), [](int v) { return v == 0; });
}

inline bool dominates(std::vector<int> x, std::vector<int> y) {
  std::sort(x.rbegin(), x.rend());
  std::sort(y.rbegin(), y.rend());
  int px = 0;
  int py = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    px += x[k];
    py += y[k];
    if (px < py) return false;
  }
  return px == py;
}

// Every cyclic interval of every length 1..2n-1.
inline bool condition_m(const Sets& num, const Sets& den, int n) {
  const int N = 2 * n;
  for (int start = 1; start <= N; ++start) {
    for (int len = 1; len < N; ++len) {
      std::vector<bool> in(static_cast<std::size_t>(N + 1), false);
      for (int k = 0; k < len; ++k) in[static_cast<std::size_t>((start - 1 + k) % N + 1)] = true;
      auto counts = [&](const Sets& side) {
        std::vector<int> out;
        for (const auto& s : side) out.push_back(static_cast<int>(std::count_if(s.begin(), s.end(), [&](int e) { return in[static_cast<std::size_t>(e)]; })));
        return out;
      };
      if (!dominates(counts(num), counts(den))) return false;
    }
  }
  return true;
}

inline std::map<std::vector<int>, int> exponents(const Sets& num, const Sets& den) {
  std::map<std::vector<int>, int> out;
  for (const auto& s : num) ++out[s];
  for (const auto& s : den) --out[s];
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline tpbound::RatioExpr make_ratio(int n, const Sets& num, const Sets& den) {
  std::vector<tpbound::IndexSet> a;
  std::vector<tpbound::IndexSet> b;
  for (const auto& s : num) a.emplace_back(n, s);
  for (const auto& s : den) b.emplace_back(n, s);
  return tpbound::RatioExpr(n, a, b);
}

inline Sets sets_of(const std::vector<tpbound::IndexSet>& xs) {
  Sets out;
  for (const auto& s : xs) out.push_back(s.elements());
  return out;
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = from; x <= n; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

// Coefficients of the interpolating polynomial through (x_i, y_i), lowest
// degree first, by Newton divided differences.
inline std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t m = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  std::vector<Rational> poly(m, Rational(0));
  std::vector<Rational> basis{Rational(1)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t d = 0; d < basis.size(); ++d) poly[d] += dd[i] * basis[d];
    std::vector<Rational> next(basis.size() + 1, Rational(0));
    for (std::size_t d = 0; d < basis.size(); ++d) {
      next[d + 1] += basis[d];
      next[d] -= xs[i] * basis[d];
    }
    basis = next;
  }
  return poly;
}

// -1 for the zero polynomial.
inline int degree(const std::vector<Rational>& poly) {
  for (int d = static_cast<int>(poly.size()) - 1; d >= 0; --d)
    if (poly[static_cast<std::size_t>(d)] != 0) return d;
  return -1;
}

// ST0 2-over-2 ratio: elements used twice go to both denominator sets, the
// rest are split at random.
inline tpbound::RatioExpr random_st0_ratio(int n, std::mt19937_64& gen) {
  const auto all = subsets(2 * n, n);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  const auto a1 = all[pick(gen)];
  const auto a2 = all[pick(gen)];
  std::vector<int> both;
  std::vector<int> single;
  for (int i = 1; i <= 2 * n; ++i) {
    const bool x = std::count(a1.begin(), a1.end(), i) > 0;
    const bool y = std::count(a2.begin(), a2.end(), i) > 0;
    if (x && y) both.push_back(i);
    else if (x || y) single.push_back(i);
  }
  std::shuffle(single.begin(), single.end(), gen);
  std::vector<int> b1 = both;
  std::vector<int> b2 = both;
  for (std::size_t i = 0; i < single.size(); ++i) (i < single.size() / 2 ? b1 : b2).push_back(single[i]);
  return tpbound::RatioExpr(n, {tpbound::IndexSet(n, a1), tpbound::IndexSet(n, a2)},
                            {tpbound::IndexSet(n, b1), tpbound::IndexSet(n, b2)});
}

}  // namespace oracle
