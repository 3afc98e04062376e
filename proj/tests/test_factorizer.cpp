#include <doctest.h>

#include "oracles.hpp"
#include "tpbound/factorizer.hpp"
#include "tpbound/tpcore.hpp"

using namespace tpbound;
using oracle::make_ratio;

namespace {

ExponentVector sum_of(const std::vector<BasicRatio>& basics, int rank) {
  ExponentVector total(rank);
  for (const auto& b : basics) total += ExponentVector::of(b.ratio());
  return total;
}

ExponentVector sum_of(const RatioExpr& a, const RatioExpr& b) {
  return ExponentVector::of(a) + ExponentVector::of(b);
}

const RatioExpr kThree = make_ratio(3, {{1, 4, 6}, {2, 3, 5}}, {{1, 3, 5}, {2, 4, 6}});

}  // namespace

TEST_CASE("decompose") {
  const Decomposition d = decompose(make_ratio(2, {{1, 4}, {2, 3}}, {{1, 3}, {2, 4}}));
  CHECK(d.common.empty());
  CHECK(d.gamma1 == std::vector<int>{1});
  CHECK(d.gamma2 == std::vector<int>{4});
  CHECK(d.delta1 == std::vector<int>{2});
  CHECK(d.delta2 == std::vector<int>{3});
  CHECK(nu(d) == 2);

  const Decomposition e = decompose(kThree);
  CHECK(e.gamma1 == std::vector<int>{1});
  CHECK(e.gamma2 == std::vector<int>{4, 6});
  CHECK(e.delta1 == std::vector<int>{2});
  CHECK(e.delta2 == std::vector<int>{3, 5});
  CHECK(nu(e) == 3);
  CHECK(e.omega().size() == 6);
  // Reconstruction against the original sets.
  CHECK(set_union(set_union(e.gamma1, e.gamma2), e.common) == std::vector<int>{1, 4, 6});
  CHECK(set_union(set_union(e.delta1, e.delta2), e.common) == std::vector<int>{2, 3, 5});
  CHECK(set_union(set_union(e.gamma1, e.delta2), e.common) == std::vector<int>{1, 3, 5});
  CHECK(set_union(set_union(e.delta1, e.gamma2), e.common) == std::vector<int>{2, 4, 6});

  // Trivial but with empty common part, so nu = n.
  CHECK(nu(decompose(make_ratio(2, {{1, 2}, {3, 4}}, {{1, 2}, {3, 4}}))) == 2);
  CHECK(nu(decompose(make_ratio(3, {{1, 2, 3}, {1, 2, 4}}, {{1, 2, 3}, {1, 2, 4}}))) == 1);
  CHECK_THROWS_AS(decompose(make_ratio(2, {{1, 2}, {1, 2}}, {{1, 3}, {2, 4}})), St0ViolationError);
  try {
    decompose(make_ratio(2, {{1, 2}}, {{1, 2}}));
    FAIL("expected arity error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::ArityError);
  }
}

TEST_CASE("trivial ratios and interlacing") {
  CHECK(is_trivial(make_ratio(2, {{1, 2}, {3, 4}}, {{3, 4}, {1, 2}})));
  CHECK_FALSE(is_trivial(make_ratio(2, {{1, 4}, {2, 3}}, {{1, 3}, {2, 4}})));
  CHECK(interlaces({1, 5}, {2, 6}));
  CHECK_FALSE(interlaces({1, 2}, {3, 4}));
  CHECK(interlaces({3}, {4}));
  CHECK_THROWS_AS(interlaces({1, 2}, {3}), Error);

  // ST0 with nu <= 1 forces triviality.
  const auto sets = oracle::subsets(6, 3);
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a; b < sets.size(); ++b)
      for (std::size_t c = 0; c < sets.size(); ++c)
        for (std::size_t d = c; d < sets.size(); ++d) {
          if (!oracle::st0({sets[a], sets[b]}, {sets[c], sets[d]}, 3)) continue;
          const RatioExpr r = make_ratio(3, {sets[a], sets[b]}, {sets[c], sets[d]});
          if (nu(decompose(r)) <= 1) CHECK(is_trivial(r));
        }
}

TEST_CASE("classify elementary") {
  const auto e = classify_elementary(make_ratio(2, {{1, 4}, {2, 3}}, {{1, 3}, {2, 4}}));
  REQUIRE(e);
  CHECK(e->i == 1);
  CHECK(e->i_prime == 2);
  CHECK(e->j == 3);
  CHECK(e->j_prime == 4);
  CHECK(e->common.empty());

  CHECK_FALSE(classify_elementary(make_ratio(2, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}})));

  const auto wrap = classify_elementary(make_ratio(2, {{1, 2}, {3, 4}}, {{2, 4}, {1, 3}}));
  REQUIRE(wrap);
  CHECK(wrap->i == 2);
  CHECK(wrap->i_prime == 3);
  CHECK(wrap->j == 4);
  CHECK(wrap->j_prime == 1);
  CHECK(ExponentVector::of(wrap->ratio()) ==
        ExponentVector::of(make_ratio(2, {{1, 2}, {3, 4}}, {{2, 4}, {1, 3}})));

  try {
    classify_elementary(kThree);
    FAIL("expected precondition violation");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::PreconditionViolation);
  }
}

TEST_CASE("classification agrees with condition (M) at nu = 2") {
  for (int n = 2; n <= 4; ++n) {
    const auto sets = oracle::subsets(2 * n, n);
    int seen = 0;
    for (std::size_t a = 0; a < sets.size() && seen < 3000; ++a)
      for (std::size_t b = a + 1; b < sets.size() && seen < 3000; ++b)
        for (std::size_t c = 0; c < sets.size(); ++c) {
          const auto& a1 = sets[a];
          const auto& a2 = sets[b];
          const auto& b1 = sets[c];
          std::vector<int> b2;
          // b2 is forced by ST0 given a1, a2, b1.
          std::vector<int> count(static_cast<std::size_t>(2 * n + 1), 0);
          for (int x : a1) ++count[static_cast<std::size_t>(x)];
          for (int x : a2) ++count[static_cast<std::size_t>(x)];
          bool ok = true;
          for (int x : b1) ok = ok && count[static_cast<std::size_t>(x)]-- > 0;
          if (!ok) continue;
          for (int x = 1; x <= 2 * n; ++x)
            for (int k = 0; k < count[static_cast<std::size_t>(x)]; ++k) b2.push_back(x);
          if (std::adjacent_find(b2.begin(), b2.end()) != b2.end()) continue;
          const RatioExpr r = make_ratio(n, {a1, a2}, {b1, b2});
          if (is_trivial(r) || nu(decompose(r)) != 2) continue;
          CHECK(classify_elementary(r).has_value() == oracle::condition_m({a1, a2}, {b1, b2}, n));
          ++seen;
        }
    CHECK(seen > 0);
  }
}

TEST_CASE("mu and delta") {
  const ElementaryRatio basic{2, 1, 2, 3, 4, {}};
  CHECK(mu(basic) == 0);
  CHECK(delta_size(basic) == 4);
  const ElementaryRatio jaw{3, 1, 3, 5, 6, {2}};
  CHECK(mu(jaw) == 1);
  CHECK(delta_size(jaw) == 5);
  const ElementaryRatio wide{3, 1, 2, 4, 6, {3}};
  CHECK(mu(wide) == 0);
  CHECK(delta_size(wide) == 5);
}

TEST_CASE("elementary reduction") {
  const auto single = elementary_to_basics(ElementaryRatio{2, 1, 2, 3, 4, {}});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == BasicRatio::make(2, 1, 3, {}));

  const ElementaryRatio wide{3, 1, 2, 4, 6, {3}};
  const auto two = elementary_to_basics(wide);
  auto sorted = two;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<BasicRatio>{BasicRatio::make(3, 1, 4, {3}), BasicRatio::make(3, 1, 5, {3})});
  CHECK(sum_of(two, 3) == ExponentVector::of(wide.ratio()));

  const ElementaryRatio jaw{3, 1, 3, 5, 6, {2}};
  std::vector<TraceRecord> trace;
  const auto basics = elementary_to_basics(jaw, &trace);
  CHECK(sum_of(basics, 3) == ExponentVector::of(jaw.ratio()));
  CHECK_FALSE(trace.empty());

  // Exact evaluation on random TP matrices.
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const TPMatrix a = random_tp(3, seed);
    for (const ElementaryRatio& e : {wide, jaw}) {
      Rational product = 1;
      for (const auto& b : elementary_to_basics(e)) product *= oracle::ratio_value(a.entries, b.ratio());
      CHECK(product == oracle::ratio_value(a.entries, e.ratio()));
    }
  }
}

TEST_CASE("split once") {
  const SplitResult s = split_once(kThree);
  CHECK(s.first == make_ratio(3, {{1, 4, 6}, {2, 4, 5}}, {{2, 4, 6}, {1, 4, 5}}));
  CHECK(s.second == make_ratio(3, {{1, 4, 5}, {2, 3, 5}}, {{2, 4, 5}, {1, 3, 5}}));
  CHECK(sum_of(s.first, s.second) == ExponentVector::of(kThree));

  const RatioExpr four = make_ratio(4, {{1, 4, 5, 8}, {2, 3, 6, 7}}, {{1, 3, 5, 7}, {2, 4, 6, 8}});
  const SplitResult t = split_once(four);
  CHECK(t.first == make_ratio(4, {{1, 4, 5, 8}, {1, 3, 6, 7}}, {{1, 3, 5, 7}, {1, 4, 6, 8}}));
  CHECK(t.second == make_ratio(4, {{1, 4, 6, 8}, {2, 3, 6, 7}}, {{1, 3, 6, 7}, {2, 4, 6, 8}}));
  for (const SplitResult& split : {s, t}) {
    CHECK(check_condition_m(split.first).holds);
    CHECK(check_condition_m(split.second).holds);
  }
  CHECK(sum_of(t.first, t.second) == ExponentVector::of(four));

  try {
    split_once(make_ratio(2, {{1, 4}, {2, 3}}, {{1, 3}, {2, 4}}));
    FAIL("expected precondition violation");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::PreconditionViolation);
  }
}

TEST_CASE("factor to basics") {
  const FactorizationResult f = factor_to_basics(kThree);
  CHECK(f.basics == std::vector<BasicRatio>{BasicRatio::make(3, 1, 5, {4}), BasicRatio::make(3, 1, 3, {5})});
  CHECK(f.basics[0].to_string() == "basic(1,5,{4})");
  CHECK(sum_of(f.basics, 3) == ExponentVector::of(kThree));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const TPMatrix a = random_tp(3, seed);
    Rational product = 1;
    for (const auto& b : f.basics) product *= oracle::ratio_value(a.entries, b.ratio());
    CHECK(product == oracle::ratio_value(a.entries, kThree));
  }

  CHECK(factor_to_basics(make_ratio(2, {{1, 2}, {3, 4}}, {{3, 4}, {1, 2}})).basics.empty());

  try {
    factor_to_basics(make_ratio(2, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}));
    FAIL("expected (M) violation");
  } catch (const ConditionMViolationError& err) {
    REQUIRE(err.witness().witness);
    CHECK(err.witness().witness->members() == std::vector<int>{2, 3});
  }
  CHECK_THROWS_AS(factor_to_basics(make_ratio(2, {{1, 2}, {1, 2}}, {{1, 3}, {2, 4}})), St0ViolationError);
}

TEST_CASE("traces make progress and leaves are basic") {
  std::mt19937_64 gen(3);
  int factored = 0;
  for (int n = 3; n <= 5; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const RatioExpr r = oracle::random_st0_ratio(n, gen);
      if (!check_condition_m(r).holds) continue;
      const FactorizationResult f = factor_to_basics(r);
      ++factored;
      CHECK(sum_of(f.basics, n) == ExponentVector::of(r));
      for (const TraceRecord& t : f.trace) {
        for (const Measure& m : t.child_measures) {
          if (t.measure.nu > 2) {
            CHECK(m.nu < t.measure.nu);
          } else if (t.measure.mu >= 0 && m.mu >= 0) {
            CHECK(std::pair(m.mu, m.delta) < std::pair(t.measure.mu, t.measure.delta));
          }
        }
      }
      for (const auto& b : f.basics) {
        CHECK(classify_elementary(b.ratio()).has_value());
        CHECK(check_condition_m(b.ratio()).holds);
      }
      if (n == 3 && trial < 20) {
        const TPMatrix a = random_tp(n, static_cast<std::uint64_t>(trial) + 100);
        Rational product = 1;
        for (const auto& b : f.basics) product *= eval_ratio(a, b.ratio());
        CHECK(product == eval_ratio(a, r));
      }
    }
  }
  CHECK(factored > 20);
}

TEST_CASE("basic ratio enumeration") {
  const auto two = basic_ratios_all(2);
  CHECK(two == std::vector<BasicRatio>{BasicRatio::make(2, 1, 3, {}), BasicRatio::make(2, 2, 4, {})});
  CHECK(basic_ratios_all(3).size() == 18);
  CHECK(basic_ratios_all(4).size() == 120);
  for (int n = 2; n <= 6; ++n) {
    long long binom = 1;
    for (int k = 1; k <= n - 2; ++k) binom = binom * (n - 2 + k) / k;
    CHECK(basic_ratio_count(n) == n * (2 * n - 3) * binom);
  }
  CHECK(BasicRatio::make(3, 5, 1, {3}) == BasicRatio::make(3, 1, 5, {3}));
}
