#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tpbound/errors.hpp"
#include "tpbound/tpcore.hpp"

using namespace tpbound;
using oracle::make_ratio;

namespace {

Matrix mat(const std::vector<std::vector<long>>& rows) {
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

TPMatrix tp(const std::vector<std::vector<long>>& rows) { return TPMatrix{mat(rows), std::nullopt}; }

std::vector<Rational> q(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

bool all_minors_positive_oracle(const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  for (int k = 1; k <= n; ++k)
    for (const auto& rows : oracle::subsets(n, k))
      for (const auto& cols : oracle::subsets(n, k))
        if (oracle::minor(a, rows, cols) <= 0) return false;
  return true;
}

}  // namespace

TEST_CASE("network matrices") {
  CHECK(network_matrix(NetworkParams::ones(2)).entries == mat({{1, 1}, {1, 2}}));
  CHECK(network_matrix(NetworkParams{2, q({2}), q({1, 3}), q({4})}).entries == mat({{1, 4}, {2, 11}}));
  CHECK(network_matrix(NetworkParams{1, {}, q({5}), {}}).entries == mat({{5}}));
  try {
    network_matrix(NetworkParams{2, q({0}), q({1, 1}), q({1})});
    FAIL("expected non-positive weight");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveWeight);
  }
  CHECK_THROWS_AS(network_matrix(NetworkParams{2, q({1, 1}), q({1, 1}), q({1})}), Error);
  CHECK(network_layers(3).size() == 3 + 1 + 3);
}

TEST_CASE("TP verification") {
  CHECK(verify_tp(mat({{1, 1}, {1, 2}})));
  CHECK_FALSE(verify_tp(Matrix::identity(2)));
  CHECK_FALSE(verify_tp(mat({{1, 2}, {2, 1}})));
  CHECK_FALSE(verify_tp(mat({{1, 1, 1}, {1, 2, 3}, {1, 3, 5}})));
  CHECK(verify_tp(mat({{1, 1, 1}, {1, 2, 3}, {1, 3, 6}})));
  for (std::uint64_t seed = 1; seed <= 100; ++seed) CHECK(verify_tp(random_tp(4, seed).entries));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) CHECK(all_minors_positive_oracle(random_tp(3, seed).entries));

  // Perturb single entries and compare against the full enumeration.
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<int> delta(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix a = random_tp(3, static_cast<std::uint64_t>(trial) + 1, 1).entries;
    a(static_cast<std::size_t>(trial % 3), static_cast<std::size_t>((trial / 3) % 3)) += delta(gen);
    CHECK(verify_tp(a) == all_minors_positive_oracle(a));
  }
}

TEST_CASE("random TP is deterministic") {
  CHECK(random_tp(3, 42).entries == random_tp(3, 42).entries);
  CHECK_FALSE(random_tp(3, 42).entries == random_tp(3, 43).entries);
  REQUIRE(random_tp(3, 42).provenance);
  CHECK(network_matrix(*random_tp(3, 42).provenance).entries == random_tp(3, 42).entries);
}

TEST_CASE("Grassmann embedding and brackets") {
  const TPMatrix a = tp({{1, 1}, {1, 2}});
  const GrassmannRep rep = grassmann_embed(a);
  CHECK(rep.rows(2, 0) == 0);
  CHECK(rep.rows(2, 1) == 1);
  CHECK(rep.rows(3, 0) == -1);
  CHECK(rep.rows(3, 1) == 0);
  CHECK(plucker_eval(rep, IndexSet(2, {3, 4})) == 1);
  CHECK(plucker_eval(a, IndexSet(2, {1, 2})) == 1);
  CHECK(plucker_eval(a, IndexSet(2, {1, 3})) == 1);
  CHECK(plucker_eval(a, IndexSet(2, {1, 4})) == 1);
  CHECK(plucker_eval(a, IndexSet(2, {2, 3})) == 1);
  CHECK(plucker_eval(a, IndexSet(2, {2, 4})) == 2);
  for (int n = 1; n <= 4; ++n) {
    const TPMatrix b = random_tp(n, 9);
    for (const auto& s : all_index_sets(n)) {
      const Rational v = plucker_eval(b, s);
      CHECK(v > 0);
      CHECK(v == oracle::bracket(b.entries, s.elements()));
    }
  }
}

TEST_CASE("minors and ratios") {
  const TPMatrix a = tp({{1, 1}, {1, 2}});
  CHECK(minor(a, MinorSpec(2, {}, {})) == 1);
  CHECK(minor(a, MinorSpec(2, {1, 2}, {1, 2})) == 1);
  CHECK(minor(a, MinorSpec(2, {2}, {1})) == 1);
  CHECK(eval_ratio(a, make_ratio(2, {{1, 4}, {2, 3}}, {{1, 3}, {2, 4}})) == Rational(1, 2));
  CHECK(eval_ratio(a, make_ratio(2, {{1, 2}, {3, 4}}, {{3, 4}, {1, 2}})) == 1);
  try {
    eval_ratio(tp({{0, 1}, {1, 1}}), make_ratio(2, {{1, 2}}, {{1, 3}}));
    FAIL("expected zero denominator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDenominator);
  }
  for (int n = 2; n <= 3; ++n) {
    const TPMatrix b = random_tp(n, 17);
    for (int k = 0; k <= n; ++k)
      for (const auto& rows : oracle::subsets(n, k))
        for (const auto& cols : oracle::subsets(n, k)) {
          const MinorSpec spec(n, rows, cols);
          CHECK(minor(b, spec) == oracle::minor(b.entries, rows, cols));
          CHECK(plucker_eval(b, minor_to_plucker(spec)) == minor(b, spec));
        }
  }
}

TEST_CASE("shift and reversal matrices") {
  std::mt19937_64 gen(21);
  for (int n = 2; n <= 3; ++n) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const TPMatrix a = random_tp(n, seed);
      const TPMatrix b = shift_matrix(a);
      const TPMatrix c = reverse_matrix(a);
      CHECK(all_minors_positive_oracle(b.entries));
      CHECK(all_minors_positive_oracle(c.entries));
      const Rational cb = plucker_eval(b, cyclic_shift(IndexSet::unit(n))) / plucker_eval(a, IndexSet::unit(n));
      const Rational cc = plucker_eval(c, reversal(IndexSet::unit(n))) / plucker_eval(a, IndexSet::unit(n));
      CHECK(cb > 0);
      CHECK(cc > 0);
      for (const auto& s : all_index_sets(n)) {
        CHECK(oracle::bracket(b.entries, cyclic_shift(s).elements()) == cb * oracle::bracket(a.entries, s.elements()));
        CHECK(oracle::bracket(c.entries, reversal(s).elements()) == cc * oracle::bracket(a.entries, s.elements()));
      }
      for (int trial = 0; trial < 5; ++trial) {
        const RatioExpr r = oracle::random_st0_ratio(n, gen);
        CHECK(eval_ratio(b, cyclic_shift(r)) == eval_ratio(a, r));
        CHECK(eval_ratio(c, reversal(r)) == eval_ratio(a, r));
      }
    }
  }
  try {
    shift_matrix(tp({{1, 2}, {2, 1}}));
    FAIL("expected not totally positive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTotallyPositive);
  }
}

TEST_CASE("witness family degree law") {
  const std::vector<Rational> ts = q({1, 2, 4, 8, 16, 32, 64});
  for (int s = 1; s <= 3; ++s) {
    for (int k = 1; k <= s; ++k) {
      CHECK(verify_tp(witness_family(3, s, k, 1).entries));
      std::vector<Matrix> mats;
      for (const auto& t : ts) mats.push_back(witness_family(3, s, k, t).entries);
      for (const auto& alpha : all_index_sets(3)) {
        std::vector<Rational> ys;
        for (const auto& m : mats) ys.push_back(oracle::bracket(m, alpha.elements()));
        const int in_prefix = static_cast<int>(
            std::count_if(alpha.elements().begin(), alpha.elements().end(), [&](int e) { return e <= s; }));
        CHECK(oracle::degree(oracle::interpolate(ts, ys)) == std::min(k, in_prefix));
      }
    }
  }
  try {
    witness_family(3, 2, 3, 1);
    FAIL("expected parameter violation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidInput);
  }
}

TEST_CASE("witness family growth for a failing ratio") {
  // [1,3][2,4]/[1,4][2,3] shifted so its failing arc {2,3} becomes {1,2}.
  const RatioExpr r = cyclic_shift(make_ratio(2, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}), 3);
  Rational prev = 0;
  for (int e = 1; e <= 4; ++e) {
    const Rational v = eval_ratio(witness_family(2, 2, 1, power_of_ten(e)), r);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("counterexample fixture") {
  const TPMatrix a = counterexample_matrix(1);
  CHECK(a.entries(0, 0) == 1);
  CHECK(a.entries(0, 1) == 3);
  CHECK(a.entries(0, 2) == 3);
  CHECK(a.entries(0, 3) == 1);
  CHECK(verify_tp(a.entries));
  CHECK(verify_tp(counterexample_matrix(10).entries));
  const RatioExpr r = make_ratio(4, {{1, 2, 3, 8}, {2, 3, 4, 5}, {4, 6, 7, 8}}, {{1, 4, 6, 8}, {2, 3, 4, 8}, {2, 3, 5, 7}});
  const Rational v0 = oracle::ratio_value(counterexample_matrix(1).entries, r);
  const Rational v2 = oracle::ratio_value(counterexample_matrix(power_of_ten(2)).entries, r);
  const Rational v4 = oracle::ratio_value(counterexample_matrix(power_of_ten(4)).entries, r);
  CHECK(v0 < v2);
  CHECK(v2 < v4);
  CHECK(eval_ratio(counterexample_matrix(power_of_ten(4)), r) == v4);
}

TEST_CASE("path families") {
  const NetworkParams ones = NetworkParams::ones(2);
  CHECK(lgv_minor(ones, MinorSpec(2, {1, 2}, {1, 2})) == 1);
  CHECK(lgv_minor(ones, MinorSpec(2, {2}, {2})) == 2);
  CHECK(lgv_minor(ones, MinorSpec(2, {}, {})) == 1);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const NetworkParams p = random_network(3, seed, 2);
    const Matrix a = network_matrix(p).entries;
    for (int k = 1; k <= 3; ++k)
      for (const auto& rows : oracle::subsets(3, k))
        for (const auto& cols : oracle::subsets(3, k))
          CHECK(lgv_minor(p, MinorSpec(3, rows, cols)) == oracle::minor(a, rows, cols));
  }
  try {
    lgv_minor(NetworkParams::ones(4), MinorSpec(4, {1, 2, 3, 4}, {1, 2, 3, 4}), 0);
    FAIL("expected budget exhaustion");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("falsifier") {
  const auto failing = falsify(make_ratio(2, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}));
  REQUIRE(std::holds_alternative<Evidence>(failing));
  const Evidence& e = std::get<Evidence>(failing);
  CHECK(e.method == "witness-family");
  CHECK(e.trace.back().value > power_of_ten(3));
  REQUIRE(e.last_matrix);
  CHECK(verify_tp(e.last_matrix->entries));
  CHECK(eval_ratio(*e.last_matrix, make_ratio(2, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}})) == e.trace.back().value);

  FalsifyOptions small;
  small.budget = 20;
  CHECK(std::holds_alternative<Inconclusive>(falsify(make_ratio(2, {{1, 4}, {2, 3}}, {{1, 3}, {2, 4}}), small)));

  const RatioExpr cx = make_ratio(4, {{1, 2, 3, 8}, {2, 3, 4, 5}, {4, 6, 7, 8}}, {{1, 4, 6, 8}, {2, 3, 4, 8}, {2, 3, 5, 7}});
  const auto outcome = falsify(cx);
  REQUIRE(std::holds_alternative<Evidence>(outcome));
  const Evidence& ce = std::get<Evidence>(outcome);
  CHECK(ce.method == "counterexample-fixture");
  CHECK(ce.trace.back().value > power_of_ten(3));
  for (std::size_t i = 1; i < ce.trace.size(); ++i) CHECK(ce.trace[i].value > ce.trace[i - 1].value);
}
