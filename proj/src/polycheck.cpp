#include "tpbound/polycheck.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

#include "tpbound/errors.hpp"

namespace tpbound {

namespace {

constexpr int kLowerSlots = 6;
constexpr int kDiagonalSlots = 4;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t a;
    std::uint64_t b;
    std::memcpy(&a, m.exponents.data(), 8);
    std::memcpy(&b, m.exponents.data() + 8, 8);
    return std::hash<std::uint64_t>{}(a * 0x9E3779B97F4A7C15ULL ^ b);
  }
};

Variable variable_at(int slot) {
  if (slot < kLowerSlots) return {Variable::Kind::L, slot + 1};
  if (slot < kLowerSlots + kDiagonalSlots) return {Variable::Kind::D, slot - kLowerSlots + 1};
  return {Variable::Kind::U, slot - kLowerSlots - kDiagonalSlots + 1};
}

}  // namespace

int Variable::slot() const {
  const int limit = kind == Kind::D ? kDiagonalSlots : kLowerSlots;
  if (index < 1 || index > limit) throw Error(ErrorCode::BudgetExceeded, "variable " + to_string() + " needs n > 4");
  switch (kind) {
    case Kind::L:
      return index - 1;
    case Kind::D:
      return kLowerSlots + index - 1;
    case Kind::U:
      break;
  }
  return kLowerSlots + kDiagonalSlots + index - 1;
}

std::string Variable::to_string() const {
  const char* name = kind == Kind::L ? "L" : kind == Kind::D ? "D" : "U";
  return name + std::to_string(index);
}

Monomial Monomial::of(Variable v, int power) {
  Monomial m;
  m.exponents[static_cast<std::size_t>(v.slot())] = static_cast<std::uint8_t>(power);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exponents) d += e;
  return d;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int s = 0; s < static_cast<int>(kVariableSlots); ++s) {
    const int e = exponents[static_cast<std::size_t>(s)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_at(s).to_string();
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t s = 0; s < kVariableSlots; ++s) {
    const int e = a.exponents[s] + b.exponents[s];
    if (e > 255) throw Error(ErrorCode::BudgetExceeded, "monomial exponent overflow");
    m.exponents[s] = static_cast<std::uint8_t>(e);
  }
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t s = 0; s < kVariableSlots; ++s) {
    if (auto c = a.exponents[s] <=> b.exponents[s]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Polynomial::Polynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace_back(Monomial{}, constant);
}

Polynomial Polynomial::variable(Variable v) { return term(Monomial::of(v), 1); }

Polynomial Polynomial::term(const Monomial& m, const Integer& c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const auto& t, const Monomial& key) { return t.first < key; });
  return (it != terms_.end() && it->first == m) ? it->second : Integer(0);
}

Rational Polynomial::evaluate(const NetworkParams& params) const {
  std::array<Rational, kVariableSlots> values;
  for (int s = 0; s < static_cast<int>(kVariableSlots); ++s) {
    const Variable v = variable_at(s);
    const auto i = static_cast<std::size_t>(v.index - 1);
    const auto& source = v.kind == Variable::Kind::L ? params.lower
                         : v.kind == Variable::Kind::D ? params.diagonal
                                                       : params.upper;
    values[static_cast<std::size_t>(s)] = i < source.size() ? source[i] : Rational(0);
  }
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t s = 0; s < kVariableSlots; ++s) {
      for (int e = 0; e < m.exponents[s]; ++e) t *= values[s];
    }
    total += t;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest monomial first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += m.to_string();
    }
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  auto& t = out.terms_;
  t.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      t.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      t.push_back(*j++);
    } else {
      Integer c = i->second + j->second;
      if (c != 0) t.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial{};
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), Polynomial::kTermBudget));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ma * mb);
      if (inserted) {
        it->second = ca * cb;
        if (acc.size() > Polynomial::kTermBudget) {
          throw Error(ErrorCode::BudgetExceeded, "polynomial product exceeds the term budget");
        }
      } else {
        mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      }
    }
  }
  Polynomial out;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.emplace_back(m, std::move(c));
  }
  std::sort(out.terms_.begin(), out.terms_.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

SymbolicMatrix symbolic_network_matrix(int rank) {
  if (rank < 1) throw Error(ErrorCode::InvalidInput, "rank must be positive");
  if (rank > 4) throw Error(ErrorCode::BudgetExceeded, "symbolic network limited to n <= 4");
  const auto n = static_cast<std::size_t>(rank);
  SymbolicMatrix m(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Polynomial(Integer(1));
  for (const NetworkLayer& layer : network_layers(rank)) {
    const auto r = static_cast<std::size_t>(layer.level);
    const int k = layer.parameter + 1;
    switch (layer.kind) {
      case NetworkLayer::Kind::Lower: {
        const Polynomial x = Polynomial::variable({Variable::Kind::L, k});
        for (std::size_t row = 0; row < n; ++row) m[row][r - 2] = m[row][r - 2] + x * m[row][r - 1];
        break;
      }
      case NetworkLayer::Kind::Diagonal:
        for (std::size_t c = 0; c < n; ++c) {
          const Polynomial x = Polynomial::variable({Variable::Kind::D, static_cast<int>(c) + 1});
          for (std::size_t row = 0; row < n; ++row) m[row][c] = m[row][c] * x;
        }
        break;
      case NetworkLayer::Kind::Upper: {
        const Polynomial x = Polynomial::variable({Variable::Kind::U, k});
        for (std::size_t row = 0; row < n; ++row) m[row][r - 1] = m[row][r - 1] + x * m[row][r - 2];
        break;
      }
    }
  }
  return m;
}

SymbolicMinors::SymbolicMinors(SymbolicMatrix m) : matrix_(std::move(m)) {}

const Polynomial& SymbolicMinors::minor(const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw Error(ErrorCode::SizeMismatch, "minor needs equal row and column counts");
  std::uint32_t rm = 0;
  std::uint32_t cm = 0;
  for (int r : rows) rm |= 1U << r;
  for (int c : cols) cm |= 1U << c;
  return minor_masks(rm, cm);
}

const Polynomial& SymbolicMinors::minor_masks(std::uint32_t rows, std::uint32_t cols) {
  const auto key = std::make_pair(rows, cols);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Polynomial det;
  if (rows == 0) {
    det = Polynomial(Integer(1));
  } else {
    const int r0 = __builtin_ctz(rows);
    const std::uint32_t rest = rows & (rows - 1);
    int sign = 1;
    for (int c = 0; c < 32; ++c) {
      if (!((cols >> c) & 1U)) continue;
      const Polynomial& entry = matrix_[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c)];
      if (!entry.is_zero()) {
        const Polynomial term = entry * minor_masks(rest, cols & ~(1U << c));
        det = sign > 0 ? det + term : det - term;
      }
      sign = -sign;
    }
  }
  return memo_.emplace(key, std::move(det)).first->second;
}

const Polynomial& SymbolicMinors::bracket(const IndexSet& s) {
  if (s.rank() != rank()) throw Error(ErrorCode::RankMismatch, "bracket rank does not match matrix");
  const MinorSpec spec = plucker_to_minor(s);
  std::vector<int> rows;
  std::vector<int> cols;
  for (int r : spec.rows) rows.push_back(r - 1);
  for (int c : spec.cols) cols.push_back(c - 1);
  return minor(rows, cols);
}

Polynomial bracket_product(SymbolicMinors& minors, const std::vector<IndexSet>& sets) {
  Polynomial p(Integer(1));
  for (const auto& s : sets) p = p * minors.bracket(s);
  return p;
}

Polynomial ratio_difference_poly(const RatioExpr& r) {
  SymbolicMinors minors(symbolic_network_matrix(r.rank()));
  const Polynomial p = bracket_product(minors, r.numerator());
  const Polynomial q = bracket_product(minors, r.denominator());
  return q - p;
}

SubtractionFreeResult is_subtraction_free(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    if (c < 0) return SubtractionFreeResult{false, m, c};
  }
  return SubtractionFreeResult{};
}

}  // namespace tpbound
