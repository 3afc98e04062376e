#include "tpbound/conelab.hpp"

#include <algorithm>

#include "tpbound/errors.hpp"

namespace tpbound {

namespace {

// Dense Phase-I tableau for  A lambda = b, lambda >= 0,  rows sign-flipped so
// b >= 0, with one artificial per row forming the starting basis.
class PhaseOne {
 public:
  PhaseOne(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b)
      : rows_(a.size()), structural_(a.empty() ? 0 : a.front().size()) {
    cols_ = structural_ + rows_;
    sign_.resize(rows_);
    table_.assign(rows_, std::vector<Rational>(cols_ + 1));
    basis_.resize(rows_);
    cost_.assign(cols_ + 1, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      sign_[i] = b[i] < 0 ? -1 : 1;
      for (std::size_t j = 0; j < structural_; ++j) table_[i][j] = sign_[i] * a[i][j];
      table_[i][structural_ + i] = 1;
      table_[i][cols_] = sign_[i] * b[i];
      basis_[i] = structural_ + i;
    }
    // Reduced costs: artificial cost 1, structural 0.
    for (std::size_t j = 0; j <= cols_; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < rows_; ++i) s += table_[i][j];
      const Rational c = (j >= structural_ && j < cols_) ? 1 : 0;
      cost_[j] = j == cols_ ? Rational(-s) : Rational(c - s);
    }
  }

  void solve() {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (cost_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return;
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (table_[i][enter] <= 0) continue;
        const Rational ratio = table_[i][cols_] / table_[i][enter];
        if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_) throw Error(ErrorCode::InternalInvariant, "phase-one objective unbounded");
      pivot(leave, enter);
    }
  }

  Rational objective() const { return -cost_[cols_]; }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(structural_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = table_[i][cols_];
    }
    return x;
  }

  // Farkas functional in the original row signs.
  std::vector<Rational> dual() const {
    std::vector<Rational> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) y[i] = sign_[i] * (1 - cost_[structural_ + i]);
    return y;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const Rational p = table_[r][c];
    for (auto& v : table_[r]) v /= p;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || table_[i][c] == 0) continue;
      const Rational f = table_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (table_[r][j] != 0) table_[i][j] -= f * table_[r][j];
      }
    }
    if (cost_[c] != 0) {
      const Rational f = cost_[c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (table_[r][j] != 0) cost_[j] -= f * table_[r][j];
      }
    }
    basis_[r] = c;
  }

  std::size_t rows_;
  std::size_t structural_;
  std::size_t cols_ = 0;
  std::vector<int> sign_;
  std::vector<std::vector<Rational>> table_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
};

void check_rank(const ExponentVector& x, int rank) {
  if (!x.is_zero() && x.rank() != rank) {
    throw Error(ErrorCode::RankMismatch, "exponent vector rank " + std::to_string(x.rank()) +
                                             " does not match " + std::to_string(rank));
  }
}

}  // namespace

ExponentVector ratio_to_vector(const RatioExpr& r) { return ExponentVector::of(r); }

ConeVerdict cone_membership(const ExponentVector& x, int rank, bool allow_large) {
  if (rank > 4 && !allow_large) {
    throw Error(ErrorCode::BudgetExceeded, "cone membership above n=4 needs an explicit override");
  }
  check_rank(x, rank);
  const std::vector<IndexSet> coords = all_index_sets(rank);
  const std::vector<BasicRatio> gens = basic_ratios_all(rank);
  std::map<IndexSet, std::size_t> row_of;
  for (std::size_t i = 0; i < coords.size(); ++i) row_of.emplace(coords[i], i);

  std::vector<std::vector<Rational>> a(coords.size(), std::vector<Rational>(gens.size(), Rational(0)));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const ExponentVector v = ExponentVector::of(gens[j].ratio());
    for (const auto& [set, e] : v.entries()) a[row_of.at(set)][j] = e;
  }
  std::vector<Rational> b(coords.size(), Rational(0));
  for (const auto& [set, e] : x.entries()) b[row_of.at(set)] = e;

  PhaseOne lp(a, b);
  lp.solve();
  if (lp.objective() == 0) {
    InCone verdict;
    const auto lambda = lp.primal();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (lambda[j] != 0) verdict.coefficients.emplace_back(gens[j], lambda[j]);
    }
    return verdict;
  }
  Outside verdict;
  const auto y = lp.dual();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (y[i] != 0) verdict.certificate.emplace(coords[i], y[i]);
  }
  return verdict;
}

InCone verdict_from_basics(const std::vector<BasicRatio>& basics) {
  std::map<BasicRatio, Rational> counts;
  for (const auto& b : basics) counts[b] += 1;
  InCone verdict;
  for (auto& [b, c] : counts) verdict.coefficients.emplace_back(b, c);
  return verdict;
}

bool verify_certificate(const ExponentVector& x, const ConeVerdict& verdict, int rank) {
  if (!x.is_zero() && x.rank() != rank) return false;
  if (const auto* in = std::get_if<InCone>(&verdict)) {
    std::map<IndexSet, Rational> sum;
    for (const auto& [b, lambda] : in->coefficients) {
      if (lambda < 0 || b.rank != rank) return false;
      const ExponentVector v = ExponentVector::of(b.ratio());
      for (const auto& [set, e] : v.entries()) sum[set] += lambda * e;
    }
    for (const auto& [set, e] : x.entries()) sum[set] -= e;
    return std::all_of(sum.begin(), sum.end(), [](const auto& kv) { return kv.second == 0; });
  }
  const auto& y = std::get<Outside>(verdict).certificate;
  auto pair = [&](const ExponentVector& v) {
    Rational s = 0;
    for (const auto& [set, e] : v.entries()) {
      if (auto it = y.find(set); it != y.end()) s += it->second * e;
    }
    return s;
  };
  if (pair(x) <= 0) return false;
  for (const auto& b : basic_ratios_all(rank)) {
    if (pair(ExponentVector::of(b.ratio())) > 0) return false;
  }
  return true;
}

}  // namespace tpbound
