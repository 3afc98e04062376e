#pragma once

// Constructive factorization of bounded 2-over-2 bracket ratios
//
//     [a1][a2] / [b1][b2]
//
// into products of basic ratios [i,j+1,D][i+1,j,D] / [i,j,D][i+1,j+1,D].
//
// A ratio satisfying ST0 and condition (M) is recursively split into two
// factors of strictly smaller nu (the number of indices not shared by all
// four sets) until every leaf has nu <= 2. Those leaves are trivial or
// elementary, and elementary ratios are reduced to basics by induction on
// the pair (mu, delta) of anchor-arc measures. Every step is recorded so a
// certificate can be audited without rerunning the search.

#include <optional>
#include <string>
#include <vector>

#include "tpbound/combinatorics.hpp"
#include "tpbound/errors.hpp"

namespace tpbound {

/// The anatomy of a 2-over-2 ratio:
///   a1 = gamma1 ∪ gamma2 ∪ common,   a2 = delta1 ∪ delta2 ∪ common,
///   b1 = gamma1 ∪ delta2 ∪ common,   b2 = delta1 ∪ gamma2 ∪ common.
struct Decomposition {
  int rank = 0;
  std::vector<int> common;
  std::vector<int> gamma1;
  std::vector<int> gamma2;
  std::vector<int> delta1;
  std::vector<int> delta2;

  /// gamma1 ∪ gamma2 ∪ delta1 ∪ delta2, sorted.
  std::vector<int> omega() const;
  int nu() const { return rank - static_cast<int>(common.size()); }
};

/// [i,j',D][i',j,D] / [i,j,D][i',j',D] with i < i' < j < j' read cyclically
/// from i. The stored form is the one with the smallest i.
struct ElementaryRatio {
  int rank = 0;
  int i = 0;
  int i_prime = 0;
  int j = 0;
  int j_prime = 0;
  std::vector<int> common;

  RatioExpr ratio() const;
  friend bool operator==(const ElementaryRatio&, const ElementaryRatio&) = default;
};

/// Elementary ratio with i' = i+1 and j' = j+1 (mod 2n). Stored with i < j;
/// (i, j) and (j, i) name the same ratio.
struct BasicRatio {
  int rank = 0;
  int i = 0;
  int j = 0;
  std::vector<int> common;

  /// Canonicalizes orientation and validates distinctness of i, i+1, j, j+1
  /// and the common set.
  static BasicRatio make(int rank, int i, int j, std::vector<int> common);

  RatioExpr ratio() const;
  ElementaryRatio elementary() const;
  std::string to_string() const;  // "basic(1,3,{5})"

  friend bool operator==(const BasicRatio&, const BasicRatio&) = default;
  friend auto operator<=>(const BasicRatio&, const BasicRatio&) = default;
};

/// Complexity measures attached to a trace node; -1 marks "not applicable".
struct Measure {
  int nu = -1;
  int mu = -1;
  int delta = -1;
  friend bool operator==(const Measure&, const Measure&) = default;
};

struct TraceRecord {
  std::string rule;
  int depth = 0;
  RatioExpr input;
  Measure measure;
  std::vector<RatioExpr> children;
  std::vector<Measure> child_measures;
};

struct FactorizationResult {
  RatioExpr input;
  std::vector<BasicRatio> basics;  // a multiset, in left-factor-first order
  std::vector<TraceRecord> trace;
};

struct SplitResult {
  RatioExpr first;
  RatioExpr second;
  std::string rule;
};

class St0ViolationError : public Error {
 public:
  explicit St0ViolationError(St0Result witness);
  const St0Result& witness() const noexcept { return witness_; }

 private:
  St0Result witness_;
};

class ConditionMViolationError : public Error {
 public:
  explicit ConditionMViolationError(ConditionMResult witness);
  const ConditionMResult& witness() const noexcept { return witness_; }

 private:
  ConditionMResult witness_;
};

/// Throws ArityError unless 2-over-2, St0ViolationError when counts mismatch.
Decomposition decompose(const RatioExpr& r);

int nu(const Decomposition& d);

/// {a1, a2} = {b1, b2} as multisets. Throws ArityError unless 2-over-2.
bool is_trivial(const RatioExpr& r);

/// Equal-size sets whose merged order alternates. Throws SizeMismatch.
bool interlaces(const std::vector<int>& a, const std::vector<int>& b);

/// For a non-trivial ratio with nu = 2: the canonical elementary form, or
/// nullopt. The structural answer is cross-checked against condition (M).
std::optional<ElementaryRatio> classify_elementary(const RatioExpr& r);

/// |common ∩ (arc(i..i') ∪ arc(j..j'))|
int mu(const ElementaryRatio& e);
/// |arc(i..i') ∪ arc(j..j')|
int delta_size(const ElementaryRatio& e);

/// Basics whose product is `e`. When `trace` is given, one record per
/// reduction step is appended.
std::vector<BasicRatio> elementary_to_basics(const ElementaryRatio& e,
                                             std::vector<TraceRecord>* trace = nullptr,
                                             int depth = 0);

/// One splitting step R = R1 * R2 for R satisfying ST0 and (M) with nu >= 3.
SplitResult split_once(const RatioExpr& r);

/// Full pipeline. Throws St0ViolationError / ConditionMViolationError when
/// the ratio is unbounded, ArityError unless 2-over-2.
FactorizationResult factor_to_basics(const RatioExpr& r);

/// All canonical basics for rank n >= 2, ordered by (i, j, common).
std::vector<BasicRatio> basic_ratios_all(int rank);

/// n (2n-3) C(2n-4, n-2)
long long basic_ratio_count(int rank);

}  // namespace tpbound
