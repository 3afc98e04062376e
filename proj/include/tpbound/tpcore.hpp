#pragma once

// Exact-rational totally positive matrices.
//
// Matrices come from the planar network of elementary bidiagonal factors
//
//   A = [E_n(l) E_{n-1}(l) ... E_2(l)] [E_n(l) ... E_3(l)] ... [E_n(l)]
//       * diag(d)
//       * [F_n(u)] [F_{n-1}(u) F_n(u)] ... [F_2(u) ... F_n(u)]
//
// where E_r(x) = I + x e_{r,r-1} and F_r(x) = I + x e_{r-1,r}; parameters are
// consumed left to right. Every choice of positive weights gives a TP
// matrix, and every TP matrix arises this way.
//
// A TP matrix A is identified with the 2n x n standard representative
//   [ A ; Λ ],  Λ(n+r, n+1-r) = (-1)^(r-1),
// whose maximal minors are the brackets [α](A).

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tpbound/combinatorics.hpp"
#include "tpbound/rational.hpp"

namespace tpbound {

struct NetworkParams {
  int rank = 0;
  std::vector<Rational> lower;     // n(n-1)/2
  std::vector<Rational> diagonal;  // n
  std::vector<Rational> upper;     // n(n-1)/2

  static NetworkParams ones(int rank);
  /// Throws InvalidInput on bad lengths and NonPositiveWeight on weights <= 0.
  void validate() const;
};

struct TPMatrix {
  Matrix entries;
  std::optional<NetworkParams> provenance;

  int rank() const { return static_cast<int>(entries.rows()); }
};

struct GrassmannRep {
  int rank = 0;
  Matrix rows;  // 2n x n
};

/// One elementary factor of the network: its position in the product and
/// the parameter slot it consumes.
struct NetworkLayer {
  enum class Kind { Lower, Diagonal, Upper } kind;
  int level = 0;       // r for E_r / F_r; unused for the diagonal layer
  int parameter = 0;   // 0-based index into lower / upper
};

/// Layers in multiplication order (sources on the left).
std::vector<NetworkLayer> network_layers(int rank);

TPMatrix network_matrix(const NetworkParams& params);

/// All n^2 initial minors positive. For n <= 3 the answer is cross-checked
/// against the full minor enumeration.
bool verify_tp(const Matrix& a);

/// Brute force over every minor.
bool all_minors_positive(const Matrix& a);

GrassmannRep grassmann_embed(const TPMatrix& a);

Rational plucker_eval(const GrassmannRep& rep, const IndexSet& s);
Rational plucker_eval(const TPMatrix& a, const IndexSet& s);

/// det A(I|I'); the empty minor is 1.
Rational minor(const TPMatrix& a, const MinorSpec& spec);
Rational minor(const Matrix& a, const MinorSpec& spec);

/// Throws ZeroDenominator if a denominator bracket vanishes.
Rational eval_ratio(const TPMatrix& a, const RatioExpr& r);

/// Rescales a 2n x n representative so its lower block is Λ; returns the
/// upper block. Throws ZeroDenominator when the lower block is singular.
Matrix standard_upper_block(const Matrix& representative);

/// B with [σ(α)](B) = c [α](A) for a fixed c > 0. Throws NotTotallyPositive.
TPMatrix shift_matrix(const TPMatrix& a);
/// B with [ρ(α)](B) = c [α](A) for a fixed c > 0. Throws NotTotallyPositive.
TPMatrix reverse_matrix(const TPMatrix& a);

/// blockdiag(G diag(t,..,t,1,..,1) H, I_{n-s}) C with k copies of t, where
/// G, H (s x s) and C (n x n) are all-ones network matrices. Brackets are
/// polynomials in t of degree min(k, |α ∩ {1..s}|).
TPMatrix witness_family(int rank, int s, int k, const Rational& t);

/// The 4 x 4 one-parameter family on which
///   [1,2,3,8][2,3,4,5][4,6,7,8] / [1,4,6,8][2,3,4,8][2,3,5,7]
/// grows without bound although it satisfies (M).
TPMatrix counterexample_matrix(const Rational& t);

/// Sum of weights of vertex-disjoint path families I -> I' in the network.
/// Throws BudgetExceeded past `budget` enumerated families.
Rational lgv_minor(const NetworkParams& params, const MinorSpec& spec, long long budget = 1'000'000);

/// Network weights 2^e, e uniform in [-magnitude, magnitude], drawn from
/// std::mt19937_64(seed) as e = draw % (2*magnitude+1) - magnitude in the
/// order lower, diagonal, upper.
NetworkParams random_network(int rank, std::uint64_t seed, int magnitude = 3);
TPMatrix random_tp(int rank, std::uint64_t seed, int magnitude = 3);

// --- falsifier --------------------------------------------------------------

struct FalsifyOptions {
  std::vector<Rational> t_ladder{power_of_ten(1), power_of_ten(2), power_of_ten(3), power_of_ten(4)};
  Rational threshold = power_of_ten(3);
  /// Extra decades tried past the ladder for (M)-failing ratios, and the
  /// number of random draws for (M)-satisfying ones.
  int budget = 200;
  std::uint64_t seed = 1;
};

struct EvidencePoint {
  Rational t;
  Rational value;
};

/// A numerical witness of unboundedness; not a proof.
struct Evidence {
  std::string method;       // "witness-family", "counterexample-fixture", "weight-scaling", "random-search"
  std::string description;  // how to rebuild the matrices
  std::vector<EvidencePoint> trace;
  std::optional<TPMatrix> last_matrix;
};

struct Inconclusive {
  std::string reason;
};

using FalsifyOutcome = std::variant<Evidence, Inconclusive>;

FalsifyOutcome falsify(const RatioExpr& r, const FalsifyOptions& options = {});

}  // namespace tpbound
