#include "tpbound/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "tpbound/errors.hpp"

namespace tpbound {

namespace {

constexpr int kMaxRank = 31;

void check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw Error(ErrorCode::InvalidInput, "rank must lie in [1, 31], got " + std::to_string(rank));
  }
}

std::string join(const std::vector<int>& xs, char open, char close) {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << close;
  return os.str();
}

void sort_checked(std::vector<int>& xs, int lo, int hi, const char* what) {
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) {
    throw Error(ErrorCode::DuplicateIndex, std::string("repeated index in ") + what + " " +
                                               join(xs, '{', '}'));
  }
  if (!xs.empty() && (xs.front() < lo || xs.back() > hi)) {
    throw Error(ErrorCode::RankMismatch, std::string(what) + " " + join(xs, '{', '}') +
                                             " leaves [" + std::to_string(lo) + ", " +
                                             std::to_string(hi) + "]");
  }
}

}  // namespace

// --- IndexSet ---------------------------------------------------------------

IndexSet::IndexSet(int rank, std::vector<int> elements) : rank_(rank), elements_(std::move(elements)) {
  check_rank(rank);
  sort_checked(elements_, 1, 2 * rank, "index set");
  if (elements_.size() != static_cast<std::size_t>(rank)) {
    throw Error(ErrorCode::RankMismatch, "index set " + join(elements_, '[', ']') + " must have " +
                                             std::to_string(rank) + " elements");
  }
  for (int e : elements_) mask_ |= std::uint64_t{1} << e;
}

IndexSet IndexSet::unit(int rank) {
  std::vector<int> xs(static_cast<std::size_t>(rank));
  std::iota(xs.begin(), xs.end(), rank + 1);
  return IndexSet(rank, std::move(xs));
}

std::string IndexSet::to_string() const { return join(elements_, '[', ']'); }

// --- MinorSpec --------------------------------------------------------------

MinorSpec::MinorSpec(int rank_, std::vector<int> rows_, std::vector<int> cols_)
    : rank(rank_), rows(std::move(rows_)), cols(std::move(cols_)) {
  check_rank(rank);
  sort_checked(rows, 1, rank, "row set");
  sort_checked(cols, 1, rank, "column set");
  if (rows.size() != cols.size()) {
    throw Error(ErrorCode::SizeMismatch, "row set " + join(rows, '{', '}') + " and column set " +
                                             join(cols, '{', '}') + " differ in size");
  }
}

// --- RatioExpr --------------------------------------------------------------

RatioExpr::RatioExpr(int rank, std::vector<IndexSet> numerator, std::vector<IndexSet> denominator)
    : rank_(rank), numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  check_rank(rank);
  for (const auto* side : {&numerator_, &denominator_}) {
    for (const IndexSet& s : *side) {
      if (s.rank() != rank) {
        throw Error(ErrorCode::RankMismatch, "index set " + s.to_string() + " has rank " +
                                                 std::to_string(s.rank()) + ", expected " +
                                                 std::to_string(rank));
      }
    }
  }
  const IndexSet unit = IndexSet::unit(rank);
  while (numerator_.size() < denominator_.size()) numerator_.push_back(unit);
  while (denominator_.size() < numerator_.size()) denominator_.push_back(unit);
}

std::string RatioExpr::to_string() const {
  std::string out;
  for (const auto& s : numerator_) out += s.to_string();
  out += "/";
  for (const auto& s : denominator_) out += s.to_string();
  return out;
}

// --- ExponentVector ---------------------------------------------------------

ExponentVector ExponentVector::of(const RatioExpr& ratio) {
  ExponentVector v(ratio.rank());
  for (const auto& s : ratio.numerator()) v.add(s, +1);
  for (const auto& s : ratio.denominator()) v.add(s, -1);
  return v;
}

int ExponentVector::at(const IndexSet& s) const {
  auto it = entries_.find(s);
  return it == entries_.end() ? 0 : it->second;
}

void ExponentVector::add(const IndexSet& s, int amount) {
  if (amount == 0) return;
  if (rank_ == 0) rank_ = s.rank();
  if (s.rank() != rank_) throw Error(ErrorCode::RankMismatch, "exponent vector rank mismatch");
  auto [it, inserted] = entries_.try_emplace(s, amount);
  if (!inserted) {
    it->second += amount;
    if (it->second == 0) entries_.erase(it);
  }
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  for (const auto& [s, v] : other.entries_) add(s, v);
  return *this;
}

ExponentVector operator-(const ExponentVector& a) {
  ExponentVector out(a.rank_);
  for (const auto& [s, v] : a.entries_) out.entries_.emplace(s, -v);
  return out;
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [s, v] : entries_) {
    os << (first ? "" : ", ") << s.to_string() << ":" << (v > 0 ? "+" : "") << v;
    first = false;
  }
  os << "}";
  return os.str();
}

// --- Arc --------------------------------------------------------------------

std::vector<int> Arc::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) out.push_back(wrap_index(start + k, rank));
  std::sort(out.begin(), out.end());
  return out;
}

bool Arc::contains(int i) const {
  const int offset = ((i - start) % (2 * rank) + 2 * rank) % (2 * rank);
  return offset < length;
}

Arc Arc::complement() const {
  return Arc{rank, wrap_index(start + length, rank), 2 * rank - length};
}

std::string Arc::to_string() const { return join(members(), '{', '}'); }

// --- set helpers ------------------------------------------------------------

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int wrap_index(int i, int rank) {
  const int m = 2 * rank;
  return ((i - 1) % m + m) % m + 1;
}

std::vector<IndexSet> all_index_sets(int rank) {
  check_rank(rank);
  std::vector<IndexSet> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(current.size()) == rank) {
      out.emplace_back(rank, current);
      return;
    }
    for (int e = next; e <= 2 * rank - (rank - static_cast<int>(current.size())) + 1; ++e) {
      current.push_back(e);
      rec(e + 1);
      current.pop_back();
    }
  };
  rec(1);
  return out;
}

// --- conversions and operators ---------------------------------------------

IndexSet minor_to_plucker(const MinorSpec& spec) {
  const int n = spec.rank;
  std::vector<int> out = spec.rows;
  for (int i = 1; i <= n; ++i) {
    if (!std::binary_search(spec.cols.begin(), spec.cols.end(), i)) out.push_back(2 * n + 1 - i);
  }
  return IndexSet(n, std::move(out));
}

MinorSpec plucker_to_minor(const IndexSet& s) {
  const int n = s.rank();
  std::vector<int> rows;
  std::vector<int> excluded_cols;
  for (int e : s.elements()) {
    if (e <= n) {
      rows.push_back(e);
    } else {
      excluded_cols.push_back(2 * n + 1 - e);
    }
  }
  std::sort(excluded_cols.begin(), excluded_cols.end());
  std::vector<int> cols;
  for (int i = 1; i <= n; ++i) {
    if (!std::binary_search(excluded_cols.begin(), excluded_cols.end(), i)) cols.push_back(i);
  }
  return MinorSpec(n, std::move(rows), std::move(cols));
}

IndexSet cyclic_shift(const IndexSet& s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (int e : s.elements()) out.push_back(wrap_index(e + 1, s.rank()));
  return IndexSet(s.rank(), std::move(out));
}

IndexSet reversal(const IndexSet& s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (int e : s.elements()) out.push_back(2 * s.rank() + 1 - e);
  return IndexSet(s.rank(), std::move(out));
}

RatioExpr cyclic_shift(const RatioExpr& r, int times) {
  const int period = 2 * r.rank();
  times = ((times % period) + period) % period;
  auto shift_all = [&](const std::vector<IndexSet>& side) {
    std::vector<IndexSet> out;
    for (IndexSet s : side) {
      for (int t = 0; t < times; ++t) s = cyclic_shift(s);
      out.push_back(std::move(s));
    }
    return out;
  };
  return RatioExpr(r.rank(), shift_all(r.numerator()), shift_all(r.denominator()));
}

RatioExpr reversal(const RatioExpr& r) {
  auto reverse_all = [](const std::vector<IndexSet>& side) {
    std::vector<IndexSet> out;
    for (const IndexSet& s : side) out.push_back(reversal(s));
    return out;
  };
  return RatioExpr(r.rank(), reverse_all(r.numerator()), reverse_all(r.denominator()));
}

// --- ST0 and condition (M) -------------------------------------------------

St0Result check_st0(const RatioExpr& r) {
  for (int i = 1; i <= 2 * r.rank(); ++i) {
    auto count = [i](const std::vector<IndexSet>& side) {
      return static_cast<int>(
          std::count_if(side.begin(), side.end(), [i](const IndexSet& s) { return s.contains(i); }));
    };
    const int num = count(r.numerator());
    const int den = count(r.denominator());
    if (num != den) return St0Result{false, i, num, den};
  }
  return St0Result{};
}

MajorizationResult majorizes(std::vector<int> x, std::vector<int> y) {
  const std::size_t len = std::max(x.size(), y.size());
  x.resize(len, 0);
  y.resize(len, 0);
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  long long px = 0;
  long long py = 0;
  bool prefixes_ok = true;
  for (std::size_t k = 0; k < len; ++k) {
    px += x[k];
    py += y[k];
    if (px < py) prefixes_ok = false;
  }
  MajorizationResult result;
  result.totals_differ = px != py;
  result.holds = prefixes_ok && !result.totals_differ;
  return result;
}

std::vector<int> conjugate(const std::vector<int>& x) {
  const int top = x.empty() ? 0 : *std::max_element(x.begin(), x.end());
  std::vector<int> out;
  for (int j = 1; j <= top; ++j) {
    out.push_back(static_cast<int>(std::count_if(x.begin(), x.end(), [j](int v) { return v >= j; })));
  }
  return out;
}

std::vector<int> m_vector(const std::vector<IndexSet>& sets, const Arc& arc) {
  std::vector<int> out;
  out.reserve(sets.size());
  for (const IndexSet& s : sets) {
    out.push_back(static_cast<int>(
        std::count_if(s.elements().begin(), s.elements().end(), [&](int e) { return arc.contains(e); })));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Arc> arcs_up_to_half(int rank) {
  check_rank(rank);
  std::vector<Arc> out;
  for (int start = 1; start <= 2 * rank; ++start) {
    for (int length = 1; length <= rank; ++length) out.push_back(Arc{rank, start, length});
  }
  return out;
}

ConditionMResult check_condition_m(const RatioExpr& r) {
  for (const Arc& arc : arcs_up_to_half(r.rank())) {
    auto num = m_vector(r.numerator(), arc);
    auto den = m_vector(r.denominator(), arc);
    if (!majorizes(num, den)) return ConditionMResult{false, arc, std::move(num), std::move(den)};
  }
  return ConditionMResult{};
}

}  // namespace tpbound
