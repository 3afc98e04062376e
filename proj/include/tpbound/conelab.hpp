#pragma once

// Membership of exponent vectors in the cone spanned by basic ratios.
//
// Coordinates are indexed by the C(2n, n) index sets in lexicographic order.
// A query x is either a nonnegative combination of basic-ratio vectors
// (InCone) or separated from all of them by a functional y with
// y.v <= 0 on every generator and y.x > 0 (Outside).

#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "tpbound/combinatorics.hpp"
#include "tpbound/factorizer.hpp"
#include "tpbound/rational.hpp"

namespace tpbound {

struct InCone {
  std::vector<std::pair<BasicRatio, Rational>> coefficients;
};

struct Outside {
  std::map<IndexSet, Rational> certificate;
};

using ConeVerdict = std::variant<InCone, Outside>;

ExponentVector ratio_to_vector(const RatioExpr& r);

/// Exact Phase-I simplex with Bland's rule over basic_ratios_all(n).
/// Throws BudgetExceeded for n > 4 unless allow_large is set.
ConeVerdict cone_membership(const ExponentVector& x, int rank, bool allow_large = false);

/// Unit coefficients from a factorization, repeated basics summed.
InCone verdict_from_basics(const std::vector<BasicRatio>& basics);

/// Exact re-check, independent of the solver.
bool verify_certificate(const ExponentVector& x, const ConeVerdict& verdict, int rank);

}  // namespace tpbound
