#include "tpbound/factorizer.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <utility>

namespace tpbound {

namespace {

std::vector<int> unite(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out = set_union(out, p);
  return out;
}

bool has(const std::vector<int>& xs, int x) { return std::binary_search(xs.begin(), xs.end(), x); }

std::string braces(const std::vector<int>& xs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << "}";
  return os.str();
}

RatioExpr two_over_two(int rank, std::vector<int> a1, std::vector<int> a2, std::vector<int> b1,
                       std::vector<int> b2) {
  return RatioExpr(rank, {IndexSet(rank, std::move(a1)), IndexSet(rank, std::move(a2))},
                   {IndexSet(rank, std::move(b1)), IndexSet(rank, std::move(b2))});
}

RatioExpr swap_numerator(const RatioExpr& r) {
  return RatioExpr(r.rank(), {r.numerator()[1], r.numerator()[0]}, r.denominator());
}

RatioExpr swap_denominator(const RatioExpr& r) {
  return RatioExpr(r.rank(), r.numerator(), {r.denominator()[1], r.denominator()[0]});
}

void require_two_over_two(const RatioExpr& r) {
  if (r.arity() != 2) {
    throw Error(ErrorCode::ArityError,
                "expected a 2-over-2 ratio, got " + std::to_string(r.arity()) + " factors per side");
  }
}

[[noreturn]] void invariant_failure(const std::string& what, const RatioExpr& r) {
  throw Error(ErrorCode::InternalInvariant, what + " for " + r.to_string());
}

/// Cyclic arc {from, from+1, ..., to} as a sorted set.
std::vector<int> cyclic_span(int from, int to, int rank) {
  std::vector<int> out;
  for (int x = from;; x = wrap_index(x + 1, rank)) {
    out.push_back(x);
    if (x == to) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElementaryRatio relabelled(const ElementaryRatio& e) {
  return ElementaryRatio{e.rank, e.j, e.j_prime, e.i, e.i_prime, e.common};
}

ElementaryRatio canonical(const ElementaryRatio& e) {
  return e.i <= e.j ? e : relabelled(e);
}

/// Factorization through a splitting gamma1 = gamma11 ∪ gamma12,
/// delta1 = delta11 ∪ delta12:
///   R1 = [g1,g2,D][g11,d12,d2,D] / [g1,d2,D][g11,d12,g2,D]
///   R2 = [g11,d12,g2,D][d1,d2,D] / [g11,d12,d2,D][d1,g2,D]
SplitResult technical_split(const Decomposition& d, const std::vector<int>& gamma11,
                            const std::vector<int>& delta12, std::string rule) {
  const auto& c = d.common;
  const auto x = set_union(gamma11, delta12);
  RatioExpr r1 = two_over_two(d.rank, unite({d.gamma1, d.gamma2, c}), unite({x, d.delta2, c}),
                              unite({d.gamma1, d.delta2, c}), unite({x, d.gamma2, c}));
  RatioExpr r2 = two_over_two(d.rank, unite({x, d.gamma2, c}), unite({d.delta1, d.delta2, c}),
                              unite({x, d.delta2, c}), unite({d.delta1, d.gamma2, c}));
  return SplitResult{std::move(r1), std::move(r2), std::move(rule)};
}

/// Ω-position helper: omega[t-1] for 1-based t, with every odd/even run
/// "i_from, i_{from+2}, ..., i_to" available as a set.
struct OmegaIndex {
  std::vector<int> omega;

  int operator()(int t) const { return omega[static_cast<std::size_t>(t - 1)]; }
  int size() const { return static_cast<int>(omega.size()); }

  std::vector<int> stride(int from, int to) const {
    std::vector<int> out;
    for (int t = from; t <= to; t += 2) out.push_back((*this)(t));
    std::sort(out.begin(), out.end());
    return out;
  }
};

SplitResult split_non_interlacing(const Decomposition& d, std::string rule) {
  const auto merged = set_union(d.gamma1, d.delta1);
  std::vector<int> odd;
  for (std::size_t t = 0; t < merged.size(); t += 2) odd.push_back(merged[t]);
  return technical_split(d, set_intersection(d.gamma1, odd), set_intersection(d.delta1, odd),
                         std::move(rule));
}

/// Agreeably labelled, i2 ∈ delta1.
SplitResult split_i2_in_delta1(const RatioExpr& r, const Decomposition& d, const OmegaIndex& w) {
  const int m = w.size() / 2;
  int k = 0;
  while (2 * k + 1 <= 2 * m && has(d.gamma1, w(2 * k + 1))) ++k;
  int l = 0;
  while (2 * l + 2 <= 2 * m && has(d.delta1, w(2 * l + 2))) ++l;
  if (k >= m || l >= m) invariant_failure("agreeable labelling left delta2 or gamma2 empty", r);

  if (l == k) {
    const std::vector<int> gamma11{w(1)};
    const std::vector<int> delta11{w(2)};
    const auto gamma12 = set_difference(d.gamma1, gamma11);
    const auto delta12 = set_difference(d.delta1, delta11);
    if (!gamma12.empty()) return technical_split(d, gamma11, delta12, "i2-in-delta1:l=k");

    // gamma1 = {i1}, delta1 = {i2}, gamma2 = {i4, i6, ...}, delta2 = {i3, i5, ...}
    if (d.gamma2 != w.stride(4, 2 * m) || d.delta2 != w.stride(3, 2 * m - 1)) {
      invariant_failure("unexpected shape in the |gamma12| = 0 case", r);
    }
    const auto& c = d.common;
    const auto tail_odd = w.stride(5, 2 * m - 1);
    const auto a1 = unite({{w(1)}, w.stride(4, 2 * m), c});
    const auto a2 = unite({{w(2)}, w.stride(3, 2 * m - 1), c});
    const auto b1 = unite({w.stride(1, 2 * m - 1), c});
    const auto b2 = unite({w.stride(2, 2 * m), c});
    const auto x = unite({{w(2), w(4)}, tail_odd, c});
    const auto y = unite({{w(1), w(4)}, tail_odd, c});
    return SplitResult{two_over_two(d.rank, a1, x, b2, y), two_over_two(d.rank, y, a2, x, b1),
                       "i2-in-delta1:l=k:gamma12-empty"};
  }
  if (l == k - 1) {
    const auto gamma11 = w.stride(3, 2 * k - 1);
    const auto delta11 = w.stride(2, 2 * l);
    return technical_split(d, gamma11, set_difference(d.delta1, delta11), "i2-in-delta1:l=k-1");
  }
  invariant_failure("i2 in delta1 with l not in {k, k-1}", r);
}

/// Agreeably labelled, i2 ∈ gamma2.
SplitResult split_i2_in_gamma2(const RatioExpr& r, const Decomposition& d, const OmegaIndex& w) {
  const int m = w.size() / 2;
  const auto& c = d.common;
  if (!has(d.delta2, w(3))) invariant_failure("i2 in gamma2 but i3 not in delta2", r);

  const auto a1 = unite({d.gamma1, d.gamma2, c});
  const auto a2 = unite({d.delta1, d.delta2, c});
  const auto b1 = unite({d.gamma1, d.delta2, c});
  const auto b2 = unite({d.delta1, d.gamma2, c});

  if (d.gamma1.size() == 1) {
    // gamma1 = {i1}, delta2 = {i3, i5, ..., i_{2m-1}}, gamma2 = {i2, i4, ..., i_{2m-2}},
    // delta1 = {i_{2m}}
    if (d.delta2 != w.stride(3, 2 * m - 1) || d.gamma2 != w.stride(2, 2 * m - 2) ||
        d.delta1 != std::vector<int>{w(2 * m)}) {
      invariant_failure("unexpected shape in the |gamma1| = 1 case", r);
    }
    const auto mid_even = w.stride(4, 2 * m - 2);
    const auto x = unite({{w(1), w(3)}, mid_even, c});
    const auto y = unite({{w(3), w(2 * m)}, mid_even, c});
    return SplitResult{two_over_two(d.rank, a2, x, b1, y), two_over_two(d.rank, y, a1, x, b2),
                       "i2-in-gamma2:gamma1-singleton"};
  }

  int k = 1;
  while (2 * k + 1 <= 2 * m && has(d.delta2, w(2 * k + 1))) ++k;
  if (2 * k + 1 > 2 * m || !has(d.gamma1, w(2 * k + 1))) {
    invariant_failure("no gamma1 element after i1 among odd positions", r);
  }
  int l = 0;
  while (2 * l + 2 <= 2 * m && has(d.gamma2, w(2 * l + 2))) ++l;
  if (l != k - 1) {
    invariant_failure("i2 in gamma2 with l != k-1 (k=" + std::to_string(k) +
                          ", l=" + std::to_string(l) + ")",
                      r);
  }

  const std::vector<int> delta21{w(3)};
  const auto gamma22 = set_difference(d.gamma2, {w(2)});
  if (!gamma22.empty()) {
    const auto z = unite({d.delta1, delta21, gamma22, c});
    const auto v = unite({d.gamma1, delta21, gamma22, c});
    return SplitResult{two_over_two(d.rank, a1, z, b2, v), two_over_two(d.rank, v, a2, z, b1),
                       "i2-in-gamma2"};
  }

  // gamma1 = {i1, i5, i7, ...}, delta1 = {i4, i6, ...}, gamma2 = {i2}, delta2 = {i3}
  auto expected_gamma1 = set_union({w(1)}, w.stride(5, 2 * m - 1));
  if (d.gamma1 != expected_gamma1 || d.delta1 != w.stride(4, 2 * m) || d.delta2 != delta21) {
    invariant_failure("unexpected shape in the |gamma22| = 0 case", r);
  }
  const auto tail_even = w.stride(6, 2 * m);
  const auto x = unite({{w(3), w(5)}, tail_even, c});
  const auto y = unite({{w(2), w(5)}, tail_even, c});
  return SplitResult{two_over_two(d.rank, a1, x, b1, y), two_over_two(d.rank, y, a2, x, b2),
                     "i2-in-gamma2:gamma22-empty"};
}

void check_split(const RatioExpr& r, int parent_nu, const SplitResult& s) {
  if (ExponentVector::of(s.first) + ExponentVector::of(s.second) != ExponentVector::of(r)) {
    invariant_failure("split factors do not multiply back (" + s.rule + ")", r);
  }
  for (const RatioExpr* f : {&s.first, &s.second}) {
    if (!check_condition_m(*f).holds) {
      invariant_failure("split factor " + f->to_string() + " fails (M) (" + s.rule + ")", r);
    }
    if (decompose(*f).nu() >= parent_nu) {
      invariant_failure("split factor " + f->to_string() + " did not reduce nu (" + s.rule + ")", r);
    }
  }
}

}  // namespace

// --- types ------------------------------------------------------------------

std::vector<int> Decomposition::omega() const { return unite({gamma1, gamma2, delta1, delta2}); }

RatioExpr ElementaryRatio::ratio() const {
  return two_over_two(rank, set_union({std::min(i, j_prime), std::max(i, j_prime)}, common),
                      set_union({std::min(i_prime, j), std::max(i_prime, j)}, common),
                      set_union({std::min(i, j), std::max(i, j)}, common),
                      set_union({std::min(i_prime, j_prime), std::max(i_prime, j_prime)}, common));
}

BasicRatio BasicRatio::make(int rank, int i, int j, std::vector<int> common) {
  if (rank < 2) throw Error(ErrorCode::InvalidInput, "basic ratios need rank >= 2");
  std::sort(common.begin(), common.end());
  const int top = 2 * rank;
  if (i < 1 || i > top || j < 1 || j > top) {
    throw Error(ErrorCode::RankMismatch, "basic ratio anchors out of range");
  }
  std::vector<int> anchors{i, wrap_index(i + 1, rank), j, wrap_index(j + 1, rank)};
  std::sort(anchors.begin(), anchors.end());
  if (std::adjacent_find(anchors.begin(), anchors.end()) != anchors.end() ||
      !set_intersection(anchors, common).empty() ||
      static_cast<int>(common.size()) != rank - 2 ||
      std::adjacent_find(common.begin(), common.end()) != common.end()) {
    throw Error(ErrorCode::InvalidInput, "invalid basic ratio parameters (" + std::to_string(i) +
                                             "," + std::to_string(j) + "," + braces(common) + ")");
  }
  if (i > j) std::swap(i, j);
  return BasicRatio{rank, i, j, std::move(common)};
}

ElementaryRatio BasicRatio::elementary() const {
  return ElementaryRatio{rank, i, wrap_index(i + 1, rank), j, wrap_index(j + 1, rank), common};
}

RatioExpr BasicRatio::ratio() const { return elementary().ratio(); }

std::string BasicRatio::to_string() const {
  return "basic(" + std::to_string(i) + "," + std::to_string(j) + "," + braces(common) + ")";
}

St0ViolationError::St0ViolationError(St0Result witness)
    : Error(ErrorCode::St0Violation,
            "ST0 fails at index " + std::to_string(witness.index) + " (" +
                std::to_string(witness.numerator_count) + " vs " +
                std::to_string(witness.denominator_count) + ")"),
      witness_(witness) {}

ConditionMViolationError::ConditionMViolationError(ConditionMResult witness)
    : Error(ErrorCode::ConditionMViolation,
            "(M) fails, witness L=" + (witness.witness ? witness.witness->to_string() : "?")),
      witness_(std::move(witness)) {}

// --- operations -------------------------------------------------------------

Decomposition decompose(const RatioExpr& r) {
  require_two_over_two(r);
  if (auto st0 = check_st0(r); !st0.holds) throw St0ViolationError(st0);
  const auto& a1 = r.numerator()[0].elements();
  const auto& a2 = r.numerator()[1].elements();
  const auto& b1 = r.denominator()[0].elements();
  const auto& b2 = r.denominator()[1].elements();

  Decomposition d;
  d.rank = r.rank();
  d.common = set_intersection(a1, a2);
  if (d.common != set_intersection(b1, b2)) invariant_failure("common parts differ", r);
  d.gamma1 = set_difference(set_intersection(a1, b1), d.common);
  d.gamma2 = set_difference(set_intersection(a1, b2), d.common);
  d.delta1 = set_difference(set_intersection(a2, b2), d.common);
  d.delta2 = set_difference(set_intersection(a2, b1), d.common);
  return d;
}

int nu(const Decomposition& d) { return d.nu(); }

bool is_trivial(const RatioExpr& r) {
  require_two_over_two(r);
  const auto& a = r.numerator();
  const auto& b = r.denominator();
  return (a[0] == b[0] && a[1] == b[1]) || (a[0] == b[1] && a[1] == b[0]);
}

bool interlaces(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::SizeMismatch, "interlacing needs equal sizes: " + braces(a) + " vs " + braces(b));
  }
  auto alternates = [](const std::vector<int>& first, const std::vector<int>& second) {
    // first_1 <= second_1 <= first_2 <= second_2 <= ...
    for (std::size_t t = 0; t < first.size(); ++t) {
      if (first[t] > second[t]) return false;
      if (t + 1 < first.size() && second[t] > first[t + 1]) return false;
    }
    return true;
  };
  return alternates(a, b) || alternates(b, a);
}

std::optional<ElementaryRatio> classify_elementary(const RatioExpr& r) {
  const Decomposition d = decompose(r);
  if (d.nu() != 2 || is_trivial(r)) {
    throw Error(ErrorCode::PreconditionViolation,
                "classify_elementary needs a non-trivial ratio with nu = 2: " + r.to_string());
  }
  // Non-trivial with nu = 2 forces |gamma1| = |gamma2| = 1.
  const int g1 = d.gamma1.at(0);
  const int g2 = d.gamma2.at(0);
  const int d1 = d.delta1.at(0);
  const int d2 = d.delta2.at(0);
  auto pair = [](int x, int y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
  const std::array numerator_pairs{pair(g1, g2), pair(d1, d2)};
  const std::array denominator_pairs{pair(g1, d2), pair(d1, g2)};
  auto same_matching = [](std::array<std::pair<int, int>, 2> a, std::array<std::pair<int, int>, 2> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  };

  std::array points{g1, g2, d1, d2};
  std::sort(points.begin(), points.end());

  std::optional<ElementaryRatio> found;
  for (int start = 0; start < 4; ++start) {
    const int i = points[static_cast<std::size_t>(start)];
    const int ip = points[static_cast<std::size_t>((start + 1) % 4)];
    const int j = points[static_cast<std::size_t>((start + 2) % 4)];
    const int jp = points[static_cast<std::size_t>((start + 3) % 4)];
    if (same_matching(numerator_pairs, {pair(i, jp), pair(ip, j)}) &&
        same_matching(denominator_pairs, {pair(i, j), pair(ip, jp)})) {
      found = ElementaryRatio{r.rank(), i, ip, j, jp, d.common};
      break;  // points are sorted, so the first hit has the smallest i
    }
  }

  if (found.has_value() != check_condition_m(r).holds) {
    invariant_failure("structural elementary test disagrees with condition (M)", r);
  }
  return found;
}

int mu(const ElementaryRatio& e) {
  const auto arcs = set_union(cyclic_span(e.i, e.i_prime, e.rank), cyclic_span(e.j, e.j_prime, e.rank));
  return static_cast<int>(set_intersection(arcs, e.common).size());
}

int delta_size(const ElementaryRatio& e) {
  return static_cast<int>(
      set_union(cyclic_span(e.i, e.i_prime, e.rank), cyclic_span(e.j, e.j_prime, e.rank)).size());
}

std::vector<BasicRatio> elementary_to_basics(const ElementaryRatio& e, std::vector<TraceRecord>* trace,
                                             int depth) {
  const int m = mu(e);
  const int d = delta_size(e);
  const Measure here{2, m, d};

  if (m == 0 && d == 4) {
    BasicRatio b = BasicRatio::make(e.rank, e.i, e.j, e.common);
    if (trace) trace->push_back(TraceRecord{"basic", depth, e.ratio(), here, {}, {}});
    return {b};
  }

  ElementaryRatio first;
  ElementaryRatio second;
  std::string rule;
  if (m > 0) {
    ElementaryRatio x = e;
    if (set_intersection(cyclic_span(x.i, x.i_prime, x.rank), x.common).empty()) x = relabelled(x);
    int p = wrap_index(x.i + 1, x.rank);
    while (!has(x.common, p)) p = wrap_index(p + 1, x.rank);
    const auto rest = set_difference(x.common, {p});
    first = ElementaryRatio{x.rank, p, x.i_prime, x.j, x.j_prime, set_union(rest, {x.i})};
    second = ElementaryRatio{x.rank, x.i, p, x.j, x.j_prime, set_union(rest, {x.i_prime})};
    rule = "jaw";
  } else {
    ElementaryRatio x = e;
    if (wrap_index(x.i + 1, x.rank) == x.i_prime) x = relabelled(x);
    const int next = wrap_index(x.i + 1, x.rank);
    first = ElementaryRatio{x.rank, x.i, next, x.j, x.j_prime, x.common};
    second = ElementaryRatio{x.rank, next, x.i_prime, x.j, x.j_prime, x.common};
    rule = "mu-zero";
  }
  first = canonical(first);
  second = canonical(second);

  if (trace) {
    trace->push_back(TraceRecord{rule, depth, e.ratio(), here, {first.ratio(), second.ratio()},
                                 {Measure{2, mu(first), delta_size(first)},
                                  Measure{2, mu(second), delta_size(second)}}});
  }
  auto out = elementary_to_basics(first, trace, depth + 1);
  auto more = elementary_to_basics(second, trace, depth + 1);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

SplitResult split_once(const RatioExpr& r) {
  Decomposition d = decompose(r);
  if (d.nu() < 3) {
    throw Error(ErrorCode::PreconditionViolation, "split_once needs nu >= 3: " + r.to_string());
  }
  if (is_trivial(r)) throw Error(ErrorCode::PreconditionViolation, "split_once on a trivial ratio");
  if (!check_condition_m(r).holds) {
    throw Error(ErrorCode::PreconditionViolation, "split_once needs condition (M): " + r.to_string());
  }

  SplitResult s;
  if (!interlaces(d.gamma1, d.delta1)) {
    s = split_non_interlacing(d, "non-interlacing:gamma1-delta1");
  } else if (!interlaces(d.gamma2, d.delta2)) {
    s = split_non_interlacing(decompose(swap_numerator(r)), "non-interlacing:gamma2-delta2");
  } else {
    RatioExpr labelled = r;
    const OmegaIndex w{d.omega()};
    const auto odd = w.stride(1, w.size() - 1);
    if (set_difference(labelled.denominator()[0].elements(), d.common) != odd) {
      labelled = swap_denominator(labelled);
    }
    Decomposition ld = decompose(labelled);
    if (!has(ld.gamma1, w(1))) {
      labelled = swap_numerator(labelled);
      ld = decompose(labelled);
    }
    if (set_union(ld.gamma1, ld.delta2) != odd || !has(ld.gamma1, w(1))) {
      invariant_failure("no agreeable labelling exists", r);
    }
    if (has(ld.delta1, w(2))) {
      s = split_i2_in_delta1(labelled, ld, w);
    } else if (has(ld.gamma2, w(2))) {
      s = split_i2_in_gamma2(labelled, ld, w);
    } else {
      invariant_failure("i2 lies in neither delta1 nor gamma2", r);
    }
  }
  check_split(r, d.nu(), s);
  return s;
}

FactorizationResult factor_to_basics(const RatioExpr& r) {
  require_two_over_two(r);
  if (auto st0 = check_st0(r); !st0.holds) throw St0ViolationError(st0);
  if (auto cm = check_condition_m(r); !cm.holds) throw ConditionMViolationError(std::move(cm));

  FactorizationResult result;
  result.input = r;

  std::function<void(const RatioExpr&, int)> reduce = [&](const RatioExpr& x, int depth) {
    const Decomposition d = decompose(x);
    if (is_trivial(x)) {
      result.trace.push_back(TraceRecord{"trivial", depth, x, Measure{d.nu(), -1, -1}, {}, {}});
      return;
    }
    if (d.nu() >= 3) {
      SplitResult s = split_once(x);
      result.trace.push_back(TraceRecord{s.rule, depth, x, Measure{d.nu(), -1, -1}, {s.first, s.second},
                                         {Measure{decompose(s.first).nu(), -1, -1},
                                          Measure{decompose(s.second).nu(), -1, -1}}});
      reduce(s.first, depth + 1);
      reduce(s.second, depth + 1);
      return;
    }
    const auto e = classify_elementary(x);
    if (!e) invariant_failure("nu = 2 leaf satisfying (M) is not elementary", x);
    result.trace.push_back(
        TraceRecord{"elementary", depth, x, Measure{2, mu(*e), delta_size(*e)}, {e->ratio()}, {}});
    auto basics = elementary_to_basics(*e, &result.trace, depth + 1);
    result.basics.insert(result.basics.end(), basics.begin(), basics.end());
  };
  reduce(r, 0);

  ExponentVector total(r.rank());
  for (const auto& b : result.basics) total += ExponentVector::of(b.ratio());
  if (total != ExponentVector::of(r)) invariant_failure("basics do not multiply back", r);
  return result;
}

std::vector<BasicRatio> basic_ratios_all(int rank) {
  if (rank < 2) throw Error(ErrorCode::InvalidInput, "basic ratios need rank >= 2");
  std::vector<BasicRatio> out;
  const int top = 2 * rank;
  for (int i = 1; i <= top; ++i) {
    for (int j = i + 1; j <= top; ++j) {
      std::vector<int> anchors{i, wrap_index(i + 1, rank), j, wrap_index(j + 1, rank)};
      std::sort(anchors.begin(), anchors.end());
      if (std::adjacent_find(anchors.begin(), anchors.end()) != anchors.end()) continue;
      std::vector<int> rest;
      for (int x = 1; x <= top; ++x) {
        if (!has(anchors, x)) rest.push_back(x);
      }
      // (n-2)-subsets of rest, lexicographic
      std::vector<int> pick;
      std::function<void(std::size_t)> choose = [&](std::size_t from) {
        if (static_cast<int>(pick.size()) == rank - 2) {
          out.push_back(BasicRatio::make(rank, i, j, pick));
          return;
        }
        for (std::size_t t = from; t < rest.size(); ++t) {
          pick.push_back(rest[t]);
          choose(t + 1);
          pick.pop_back();
        }
      };
      choose(0);
    }
  }
  return out;
}

long long basic_ratio_count(int rank) {
  if (rank < 2) return 0;
  auto binomial = [](long long n, long long k) {
    long long c = 1;
    for (long long t = 1; t <= k; ++t) c = c * (n - k + t) / t;
    return c;
  };
  return static_cast<long long>(rank) * (2LL * rank - 3) * binomial(2LL * rank - 4, rank - 2);
}

}  // namespace tpbound
