// Numerical search for growth of a bracket ratio over TP matrices.

#include <algorithm>
#include <functional>
#include <sstream>

#include "tpbound/errors.hpp"
#include "tpbound/tpcore.hpp"

namespace tpbound {

namespace {

using Family = std::function<TPMatrix(const Rational&)>;

int count_in_prefix(const IndexSet& s, int length) {
  return static_cast<int>(std::count_if(s.elements().begin(), s.elements().end(), [&](int e) { return e <= length; }));
}

// Degree in t of the ratio on witness_family(n, s, k, t).
int degree_gap(const RatioExpr& r, int s, int k) {
  int gap = 0;
  for (const auto& a : r.numerator()) gap += std::min(k, count_in_prefix(a, s));
  for (const auto& b : r.denominator()) gap -= std::min(k, count_in_prefix(b, s));
  return gap;
}

// Walks the ladder until the value passes the threshold. When the default
// ladder is exhausted and the values still grow by a factor of at least 2 per
// step, the ladder is extended by factors of 10 for up to `budget` steps.
std::optional<std::vector<EvidencePoint>> climb(const RatioExpr& r, const Family& family,
                                                const FalsifyOptions& options, bool reciprocal,
                                                bool* extended = nullptr) {
  std::vector<EvidencePoint> trace;
  auto step = [&](const Rational& t) {
    const Rational param = reciprocal ? Rational(1 / t) : t;
    trace.push_back({param, eval_ratio(family(param), r)});
    return trace.back().value > options.threshold;
  };
  try {
    for (const Rational& t : options.t_ladder) {
      if (step(t)) return trace;
    }
    if (options.t_ladder.empty()) return std::nullopt;
    Rational t = options.t_ladder.back();
    for (int i = 0; i < options.budget && trace.size() >= 2; ++i) {
      const Rational& prev = trace[trace.size() - 2].value;
      const Rational& last = trace.back().value;
      if (prev <= 0 || last < 2 * prev) break;
      t *= 10;
      if (step(t)) {
        if (extended) *extended = true;
        return trace;
      }
    }
  } catch (const Error&) {
  }
  return std::nullopt;
}

std::string shift_description(int shifts) {
  if (shifts == 0) return "";
  return ", then shift_matrix applied " + std::to_string(shifts) + " time(s)";
}

std::optional<Evidence> from_witness_family(const RatioExpr& r, const Arc& arc, const FalsifyOptions& options) {
  const int n = r.rank();
  const int period = 2 * n;
  const int c = ((1 - arc.start) % period + period) % period;
  const RatioExpr shifted = cyclic_shift(r, c);
  const int s = arc.length;

  // Largest positive gap, ties to the smallest k.
  int best_k = 0;
  int best_gap = 0;
  for (int k = 1; k <= s; ++k) {
    const int g = degree_gap(shifted, s, k);
    if (g > best_gap) {
      best_gap = g;
      best_k = k;
    }
  }
  bool reciprocal = false;
  if (best_k == 0) {
    if (degree_gap(shifted, s, s) >= 0) return std::nullopt;
    best_k = s;
    reciprocal = true;
  }
  const int k = best_k;
  const Family family = [&](const Rational& t) { return witness_family(n, s, k, t); };

  bool extended = false;
  auto trace = climb(shifted, family, options, reciprocal, &extended);
  if (!trace) return std::nullopt;

  // Carry the witness matrix back to the original labeling.
  const int back = (period - c) % period;
  TPMatrix m = family(trace->back().t);
  for (int i = 0; i < back; ++i) m = shift_matrix(m);

  std::ostringstream d;
  d << "(M) fails on L=" << arc.to_string() << "; witness_family(n=" << n << ", s=" << s << ", k=" << k
    << ", t" << (reciprocal ? "=1/x" : "") << ")" << shift_description(back) << "; degree gap " << best_gap;
  if (extended) d << "; ladder extended past its last value";
  return Evidence{"witness-family", d.str(), std::move(*trace), std::move(m)};
}

// Shift/reversal images of the 4 x 4 fixture.
std::optional<Evidence> from_fixture(const RatioExpr& r, const FalsifyOptions& options) {
  if (r.rank() != 4) return std::nullopt;
  for (int rev = 0; rev <= 1; ++rev) {
    for (int shifts = 0; shifts < 8; ++shifts) {
      const Family family = [&](const Rational& t) {
        TPMatrix m = counterexample_matrix(t);
        if (rev) m = reverse_matrix(m);
        for (int i = 0; i < shifts; ++i) m = shift_matrix(m);
        return m;
      };
      bool extended = false;
      auto trace = climb(r, family, options, false, &extended);
      if (!trace) continue;
      std::ostringstream d;
      d << "counterexample_matrix(t)";
      if (rev) d << ", then reverse_matrix";
      d << shift_description(shifts);
      if (extended) d << "; ladder extended past its last value";
      TPMatrix last = family(trace->back().t);
      return Evidence{"counterexample-fixture", d.str(), std::move(*trace), std::move(last)};
    }
  }
  return std::nullopt;
}

// One network weight set to t (or 1/t), the rest 1.
std::optional<Evidence> from_weight_scaling(const RatioExpr& r, const FalsifyOptions& options) {
  const int n = r.rank();
  const NetworkParams base = NetworkParams::ones(n);
  const char* names[] = {"lower", "diagonal", "upper"};
  for (int group = 0; group < 3; ++group) {
    const std::size_t size = group == 1 ? base.diagonal.size() : base.lower.size();
    for (std::size_t slot = 0; slot < size; ++slot) {
      for (bool reciprocal : {false, true}) {
        const Family family = [&](const Rational& t) {
          NetworkParams p = base;
          std::vector<Rational>* target = group == 0 ? &p.lower : group == 1 ? &p.diagonal : &p.upper;
          (*target)[slot] = t;
          return network_matrix(p);
        };
        auto trace = climb(r, family, options, reciprocal);
        if (!trace) continue;
        std::ostringstream d;
        d << "all-ones network with " << names[group] << "[" << slot << "] = " << (reciprocal ? "1/x" : "t");
        TPMatrix last = family(trace->back().t);
        return Evidence{"weight-scaling", d.str(), std::move(*trace), std::move(last)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Evidence> from_random_search(const RatioExpr& r, const FalsifyOptions& options) {
  for (int draw = 0; draw < options.budget; ++draw) {
    const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(draw);
    TPMatrix m = random_tp(r.rank(), seed, 3);
    Rational value;
    try {
      value = eval_ratio(m, r);
    } catch (const Error&) {
      continue;
    }
    if (value > options.threshold) {
      std::ostringstream d;
      d << "random_tp(n=" << r.rank() << ", seed=" << seed << ", magnitude=3); t records the seed";
      return Evidence{"random-search", d.str(), {{Rational(static_cast<long>(seed)), value}}, std::move(m)};
    }
  }
  return std::nullopt;
}

}  // namespace

FalsifyOutcome falsify(const RatioExpr& r, const FalsifyOptions& options) {
  const ConditionMResult m = check_condition_m(r);
  if (!m.holds && m.witness) {
    if (auto e = from_witness_family(r, *m.witness, options)) return *e;
  }
  if (auto e = from_fixture(r, options)) return *e;
  if (auto e = from_weight_scaling(r, options)) return *e;
  if (auto e = from_random_search(r, options)) return *e;
  std::ostringstream reason;
  if (m.holds) {
    reason << "(M) holds; no growth past " << to_string(options.threshold) << " on the fixture, weight-scaling or "
           << options.budget << " random draws";
  } else {
    reason << "(M) fails on L=" << m.witness->to_string() << " but no family passed "
           << to_string(options.threshold);
  }
  return Inconclusive{reason.str()};
}

}  // namespace tpbound
