#include "tpbound/tpcore.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "tpbound/errors.hpp"

namespace tpbound {

namespace {

std::vector<std::size_t> zero_based(const std::vector<int>& xs) {
  std::vector<std::size_t> out;
  out.reserve(xs.size());
  for (int x : xs) out.push_back(static_cast<std::size_t>(x - 1));
  return out;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == k) {
      f(pick);
      return;
    }
    for (std::size_t x = from; x < n; ++x) {
      pick.push_back(x);
      rec(x + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

Rational sign_of_row(int r) { return r % 2 == 1 ? Rational(1) : Rational(-1); }

}  // namespace

NetworkParams NetworkParams::ones(int rank) {
  const auto triangle = static_cast<std::size_t>(rank * (rank - 1) / 2);
  return NetworkParams{rank, std::vector<Rational>(triangle, Rational(1)),
                       std::vector<Rational>(static_cast<std::size_t>(rank), Rational(1)),
                       std::vector<Rational>(triangle, Rational(1))};
}

void NetworkParams::validate() const {
  if (rank < 1) throw Error(ErrorCode::InvalidInput, "network rank must be positive");
  const auto triangle = static_cast<std::size_t>(rank * (rank - 1) / 2);
  if (lower.size() != triangle || upper.size() != triangle ||
      diagonal.size() != static_cast<std::size_t>(rank)) {
    throw Error(ErrorCode::InvalidInput, "network parameter counts do not match rank " + std::to_string(rank));
  }
  for (const auto* group : {&lower, &diagonal, &upper}) {
    for (const Rational& w : *group) {
      if (w <= 0) throw Error(ErrorCode::NonPositiveWeight, "network weight " + to_string(w) + " is not positive");
    }
  }
}

std::vector<NetworkLayer> network_layers(int rank) {
  std::vector<NetworkLayer> layers;
  int p = 0;
  for (int stage = 1; stage <= rank - 1; ++stage) {
    for (int r = rank; r >= stage + 1; --r) layers.push_back({NetworkLayer::Kind::Lower, r, p++});
  }
  layers.push_back({NetworkLayer::Kind::Diagonal, 0, 0});
  p = 0;
  for (int group = 1; group <= rank - 1; ++group) {
    for (int r = rank - group + 1; r <= rank; ++r) layers.push_back({NetworkLayer::Kind::Upper, r, p++});
  }
  return layers;
}

TPMatrix network_matrix(const NetworkParams& params) {
  params.validate();
  const auto n = static_cast<std::size_t>(params.rank);
  Matrix m = Matrix::identity(n);
  for (const NetworkLayer& layer : network_layers(params.rank)) {
    const auto r = static_cast<std::size_t>(layer.level);
    switch (layer.kind) {
      case NetworkLayer::Kind::Lower:  // right-multiply by I + x e_{r,r-1}
        for (std::size_t row = 0; row < n; ++row) {
          m(row, r - 2) += params.lower[static_cast<std::size_t>(layer.parameter)] * m(row, r - 1);
        }
        break;
      case NetworkLayer::Kind::Diagonal:
        for (std::size_t row = 0; row < n; ++row) {
          for (std::size_t c = 0; c < n; ++c) m(row, c) *= params.diagonal[c];
        }
        break;
      case NetworkLayer::Kind::Upper:  // right-multiply by I + x e_{r-1,r}
        for (std::size_t row = 0; row < n; ++row) {
          m(row, r - 1) += params.upper[static_cast<std::size_t>(layer.parameter)] * m(row, r - 2);
        }
        break;
    }
  }
  return TPMatrix{std::move(m), params};
}

bool all_minors_positive(const Matrix& a) {
  const std::size_t n = a.rows();
  bool ok = true;
  for (std::size_t k = 1; k <= n && ok; ++k) {
    for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
      if (!ok) return;
      for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        if (ok && determinant(a.submatrix(rows, cols)) <= 0) ok = false;
      });
    });
  }
  return ok;
}

bool verify_tp(const Matrix& a) {
  if (a.rows() != a.cols()) return false;
  const std::size_t n = a.rows();
  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i) {
    for (std::size_t j = 0; j < n && ok; ++j) {
      const std::size_t k = std::min(i, j) + 1;
      std::vector<std::size_t> rows;
      std::vector<std::size_t> cols;
      for (std::size_t t = 0; t < k; ++t) {
        rows.push_back(i + 1 - k + t);
        cols.push_back(j + 1 - k + t);
      }
      if (determinant(a.submatrix(rows, cols)) <= 0) ok = false;
    }
  }
  if (n <= 3 && ok != all_minors_positive(a)) {
    throw Error(ErrorCode::InternalInvariant, "initial-minor test disagrees with full minor enumeration");
  }
  return ok;
}

GrassmannRep grassmann_embed(const TPMatrix& a) {
  const std::size_t n = a.entries.rows();
  if (a.entries.cols() != n) throw Error(ErrorCode::SizeMismatch, "grassmann_embed needs a square matrix");
  Matrix rows(2 * n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) rows(r, c) = a.entries(r, c);
  }
  for (std::size_t r = 1; r <= n; ++r) rows(n + r - 1, n - r) = sign_of_row(static_cast<int>(r));
  return GrassmannRep{static_cast<int>(n), std::move(rows)};
}

Rational plucker_eval(const GrassmannRep& rep, const IndexSet& s) {
  if (s.rank() != rep.rank) throw Error(ErrorCode::RankMismatch, "bracket rank does not match matrix");
  std::vector<std::size_t> cols(static_cast<std::size_t>(rep.rank));
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
  return determinant(rep.rows.submatrix(zero_based(s.elements()), cols));
}

Rational plucker_eval(const TPMatrix& a, const IndexSet& s) { return plucker_eval(grassmann_embed(a), s); }

Rational minor(const Matrix& a, const MinorSpec& spec) {
  if (static_cast<std::size_t>(spec.rank) != a.rows()) {
    throw Error(ErrorCode::RankMismatch, "minor rank does not match matrix");
  }
  if (spec.rows.empty()) return 1;
  return determinant(a.submatrix(zero_based(spec.rows), zero_based(spec.cols)));
}

Rational minor(const TPMatrix& a, const MinorSpec& spec) { return minor(a.entries, spec); }

Rational eval_ratio(const TPMatrix& a, const RatioExpr& r) {
  if (r.rank() != a.rank()) throw Error(ErrorCode::RankMismatch, "ratio rank does not match matrix");
  const GrassmannRep rep = grassmann_embed(a);
  Rational num = 1;
  Rational den = 1;
  for (const auto& s : r.numerator()) num *= plucker_eval(rep, s);
  for (const auto& s : r.denominator()) den *= plucker_eval(rep, s);
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "denominator of " + r.to_string() + " vanishes");
  return num / den;
}

Matrix standard_upper_block(const Matrix& representative) {
  const std::size_t n = representative.cols();
  if (representative.rows() != 2 * n) throw Error(ErrorCode::SizeMismatch, "representative must be 2n x n");
  std::vector<std::size_t> top(n);
  std::vector<std::size_t> bottom(n);
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) {
    top[i] = i;
    bottom[i] = n + i;
    cols[i] = i;
  }
  Matrix lambda(n, n);
  for (std::size_t r = 1; r <= n; ++r) lambda(r - 1, n - r) = sign_of_row(static_cast<int>(r));
  const Matrix x = inverse(representative.submatrix(bottom, cols)) * lambda;
  return representative.submatrix(top, cols) * x;
}

namespace {

TPMatrix from_permuted_rows(const TPMatrix& a, const std::function<Matrix(const Matrix&)>& permute,
                            const char* what) {
  if (!verify_tp(a.entries)) {
    throw Error(ErrorCode::NotTotallyPositive, std::string(what) + " needs a totally positive matrix");
  }
  Matrix b = standard_upper_block(permute(grassmann_embed(a).rows));
  if (!verify_tp(b)) {
    throw Error(ErrorCode::InternalInvariant, std::string(what) + " produced a matrix that is not TP");
  }
  return TPMatrix{std::move(b), std::nullopt};
}

}  // namespace

TPMatrix shift_matrix(const TPMatrix& a) {
  return from_permuted_rows(
      a,
      [](const Matrix& rep) {
        const std::size_t n = rep.cols();
        Matrix c(2 * n, n);
        const Rational sign = (n % 2 == 1) ? 1 : -1;  // (-1)^(n-1)
        for (std::size_t col = 0; col < n; ++col) c(0, col) = sign * rep(2 * n - 1, col);
        for (std::size_t r = 1; r < 2 * n; ++r) {
          for (std::size_t col = 0; col < n; ++col) c(r, col) = rep(r - 1, col);
        }
        return c;
      },
      "shift_matrix");
}

TPMatrix reverse_matrix(const TPMatrix& a) {
  return from_permuted_rows(
      a,
      [](const Matrix& rep) {
        const std::size_t n = rep.cols();
        Matrix c(2 * n, n);
        for (std::size_t r = 0; r < 2 * n; ++r) {
          for (std::size_t col = 0; col < n; ++col) c(r, col) = rep(2 * n - 1 - r, col);
        }
        return c;
      },
      "reverse_matrix");
}

TPMatrix witness_family(int rank, int s, int k, const Rational& t) {
  if (!(1 <= k && k <= s && s <= rank)) {
    throw Error(ErrorCode::InvalidInput, "witness_family needs 1 <= k <= s <= n");
  }
  if (t <= 0) throw Error(ErrorCode::NonPositiveWeight, "witness_family needs t > 0");
  const auto ss = static_cast<std::size_t>(s);
  const auto n = static_cast<std::size_t>(rank);
  const Matrix g = network_matrix(NetworkParams::ones(s)).entries;
  Matrix scale = Matrix::identity(ss);
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) scale(i, i) = t;
  const Matrix core = g * scale * g;
  Matrix block = Matrix::identity(n);
  for (std::size_t r = 0; r < ss; ++r) {
    for (std::size_t c = 0; c < ss; ++c) block(r, c) = core(r, c);
  }
  return TPMatrix{block * network_matrix(NetworkParams::ones(rank)).entries, std::nullopt};
}

TPMatrix counterexample_matrix(const Rational& t) {
  if (t <= 0) throw Error(ErrorCode::NonPositiveWeight, "counterexample_matrix needs t > 0");
  const Rational u = 1 / t;  // t^-1
  const Rational u2 = u * u;
  const Rational u3 = u2 * u;
  Matrix m(4, 4);
  const Rational rows[4][4] = {
      {1, 3 * u, 3 * u2, u},
      {2 + u, 1 + 6 * u + 3 * u2, 2 * u + 6 * u2 + 3 * u3, 1 + 2 * u + u2},
      {t + 2, t + 4 + 6 * u, 3 + 5 * u + 6 * u2, 2 * t + 2 + 2 * u},
      {t, t + 3, t + 2 + 3 * u, t * t + t + 2},
  };
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = rows[r][c];
  }
  return TPMatrix{std::move(m), std::nullopt};
}

NetworkParams random_network(int rank, std::uint64_t seed, int magnitude) {
  if (rank < 1 || magnitude < 1) throw Error(ErrorCode::InvalidInput, "random_tp needs n >= 1 and k >= 1");
  std::mt19937_64 gen(seed);
  const auto span = static_cast<std::uint64_t>(2 * magnitude + 1);
  auto draw = [&] {
    const int e = static_cast<int>(gen() % span) - magnitude;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(Integer(1), p) : Rational(p);
  };
  NetworkParams params = NetworkParams::ones(rank);
  for (auto* group : {&params.lower, &params.diagonal, &params.upper}) {
    for (Rational& w : *group) w = draw();
  }
  return params;
}

TPMatrix random_tp(int rank, std::uint64_t seed, int magnitude) {
  return network_matrix(random_network(rank, seed, magnitude));
}

}  // namespace tpbound
