#pragma once

// Index-set arithmetic for Plücker coordinates of Gr(n, 2n): conversions
// between minors and brackets, the cyclic shift and reversal operators, and
// the two combinatorial screens (ST0 and condition (M)) for ratios of
// products of brackets.
//
// All indices are 1-based, matching the usual bracket notation [1,3].

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tpbound {

/// A cardinality-n subset of {1, ..., 2n}, stored sorted.
class IndexSet {
 public:
  IndexSet() = default;

  /// Sorts `elements`; throws DuplicateIndex on repeats and RankMismatch when
  /// the cardinality is not `rank` or an element falls outside [1, 2*rank].
  IndexSet(int rank, std::vector<int> elements);

  /// The unit coordinate {n+1, ..., 2n}; its bracket is identically 1.
  static IndexSet unit(int rank);

  int rank() const noexcept { return rank_; }
  const std::vector<int>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(int i) const noexcept { return (mask_ >> i) & 1U; }

  /// Bit i set iff i is an element.
  std::uint64_t mask() const noexcept { return mask_; }

  /// "[1,3]"
  std::string to_string() const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.rank_ == b.rank_ && a.elements_ == b.elements_;
  }
  friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.elements_ <=> b.elements_;
  }

 private:
  int rank_ = 0;
  std::vector<int> elements_;
  std::uint64_t mask_ = 0;
};

/// Row and column sets of a minor (I|I') of an n x n matrix.
struct MinorSpec {
  MinorSpec() = default;
  /// Sorts both sets; throws on size mismatch, repeats, or out-of-range entries.
  MinorSpec(int rank, std::vector<int> rows, std::vector<int> cols);

  int rank = 0;
  std::vector<int> rows;
  std::vector<int> cols;

  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

/// A ratio of products of brackets. The shorter side is padded with the unit
/// coordinate so numerator and denominator always have equal length.
class RatioExpr {
 public:
  RatioExpr() = default;
  RatioExpr(int rank, std::vector<IndexSet> numerator, std::vector<IndexSet> denominator);

  int rank() const noexcept { return rank_; }
  const std::vector<IndexSet>& numerator() const noexcept { return numerator_; }
  const std::vector<IndexSet>& denominator() const noexcept { return denominator_; }
  /// Number of factors on each side after padding.
  std::size_t arity() const noexcept { return numerator_.size(); }

  /// "[1,4][2,3]/[1,3][2,4]"
  std::string to_string() const;

  friend bool operator==(const RatioExpr&, const RatioExpr&) = default;

 private:
  int rank_ = 0;
  std::vector<IndexSet> numerator_;
  std::vector<IndexSet> denominator_;
};

/// Sparse integer vector over the C(2n, n) bracket coordinates.
class ExponentVector {
 public:
  explicit ExponentVector(int rank = 0) : rank_(rank) {}

  /// +1 per numerator factor, -1 per denominator factor, with cancellation.
  static ExponentVector of(const RatioExpr& ratio);

  int rank() const noexcept { return rank_; }
  const std::map<IndexSet, int>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  int at(const IndexSet& s) const;

  void add(const IndexSet& s, int amount);
  ExponentVector& operator+=(const ExponentVector& other);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(const ExponentVector& a);
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  std::string to_string() const;

 private:
  int rank_;
  std::map<IndexSet, int> entries_;
};

/// Contiguous run {start, start+1, ..., start+length-1} on the 2n-gon.
struct Arc {
  int rank = 0;
  int start = 1;
  int length = 1;

  std::vector<int> members() const;
  bool contains(int i) const;
  Arc complement() const;
  std::string to_string() const;  // "{2,3}"

  friend bool operator==(const Arc&, const Arc&) = default;
};

// --- sorted-set helpers on subsets of {1, ..., 2n} -------------------------

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b);

/// Wraps any integer into [1, 2n].
int wrap_index(int i, int rank);

/// Every cardinality-n subset of {1, ..., 2n}, in lexicographic order.
std::vector<IndexSet> all_index_sets(int rank);

// --- conversions and operators ---------------------------------------------

IndexSet minor_to_plucker(const MinorSpec& spec);
MinorSpec plucker_to_minor(const IndexSet& s);

IndexSet cyclic_shift(const IndexSet& s);
IndexSet reversal(const IndexSet& s);
/// Applies the operator to every factor of the ratio.
RatioExpr cyclic_shift(const RatioExpr& r, int times = 1);
RatioExpr reversal(const RatioExpr& r);

// --- ST0 and condition (M) -------------------------------------------------

struct St0Result {
  bool holds = true;
  int index = 0;  // first failing index when !holds
  int numerator_count = 0;
  int denominator_count = 0;
};

St0Result check_st0(const RatioExpr& r);

struct MajorizationResult {
  bool holds = false;
  bool totals_differ = false;
  explicit operator bool() const noexcept { return holds; }
};

/// x majorizes y; both are zero-padded to a common length. Inputs need not be
/// sorted: they are rearranged non-increasingly first.
MajorizationResult majorizes(std::vector<int> x, std::vector<int> y);

/// x*_j = |{i : x_i >= j}| for j = 1..max(x).
std::vector<int> conjugate(const std::vector<int>& x);

/// Non-increasing rearrangement of |s ∩ L| over the sequence.
std::vector<int> m_vector(const std::vector<IndexSet>& sets, const Arc& arc);

/// Arcs of length 1..n, ordered by start then length.
std::vector<Arc> arcs_up_to_half(int rank);

struct ConditionMResult {
  bool holds = true;
  std::optional<Arc> witness;
  std::vector<int> numerator_profile;
  std::vector<int> denominator_profile;
};

/// Reports the first failing arc in (start, length) order.
ConditionMResult check_condition_m(const RatioExpr& r);

}  // namespace tpbound

template <>
struct std::hash<tpbound::IndexSet> {
  std::size_t operator()(const tpbound::IndexSet& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.mask() ^ (static_cast<std::uint64_t>(s.rank()) << 58));
  }
};
