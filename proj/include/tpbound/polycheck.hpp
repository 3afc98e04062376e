#pragma once

// Integer polynomials in the network weights L(k), D(k), U(k), and the
// subtraction-free test for q - p where a ratio is p / q.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpbound/combinatorics.hpp"
#include "tpbound/rational.hpp"
#include "tpbound/tpcore.hpp"

namespace tpbound {

/// Fixed slots for n <= 4: L(1..6), D(1..4), U(1..6).
struct Variable {
  enum class Kind { L, D, U } kind;
  int index = 1;  // 1-based

  int slot() const;
  std::string to_string() const;  // "L1"
};

inline constexpr std::size_t kVariableSlots = 16;

struct Monomial {
  std::array<std::uint8_t, kVariableSlots> exponents{};

  static Monomial of(Variable v, int power = 1);
  int degree() const;
  bool is_one() const { return degree() == 0; }
  std::string to_string() const;  // "L1*D1^2", "1"

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lexicographic: degree, then the first slot that differs; the
  /// larger exponent is the larger monomial.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Integer& constant);
  static Polynomial variable(Variable v);
  static Polynomial term(const Monomial& m, const Integer& c);

  /// Ascending monomial order, no zero coefficients.
  const std::vector<std::pair<Monomial, Integer>>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Monomial& m) const;

  Rational evaluate(const NetworkParams& params) const;
  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Term-count guard used by multiplication.
  static constexpr std::size_t kTermBudget = 10'000'000;

 private:
  std::vector<std::pair<Monomial, Integer>> terms_;
};

using SymbolicMatrix = std::vector<std::vector<Polynomial>>;

/// The network product with symbolic weights. Throws BudgetExceeded for n > 4.
SymbolicMatrix symbolic_network_matrix(int rank);

/// Minors of a symbolic matrix by cofactor expansion, memoized on
/// (row set, column set).
class SymbolicMinors {
 public:
  explicit SymbolicMinors(SymbolicMatrix m);
  /// 0-based row and column lists of equal length.
  const Polynomial& minor(const std::vector<int>& rows, const std::vector<int>& cols);
  /// [α] = det A(I | I') through the minor bridge.
  const Polynomial& bracket(const IndexSet& s);
  int rank() const { return static_cast<int>(matrix_.size()); }

 private:
  const Polynomial& minor_masks(std::uint32_t rows, std::uint32_t cols);

  SymbolicMatrix matrix_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> memo_;
};

/// Product of symbolic brackets.
Polynomial bracket_product(SymbolicMinors& minors, const std::vector<IndexSet>& sets);

/// q - p for R = p / q.
Polynomial ratio_difference_poly(const RatioExpr& r);

struct SubtractionFreeResult {
  bool free = true;
  std::optional<Monomial> witness;  // graded-lex least negative monomial
  Integer coefficient;
};

SubtractionFreeResult is_subtraction_free(const Polynomial& p);

}  // namespace tpbound
