// Path-family evaluation of minors on the bidiagonal network.
//
// Boundary b sits between layer b-1 and layer b; every boundary carries one
// vertex per level 1..n. A path visits exactly one vertex per boundary.

#include <set>

#include "tpbound/errors.hpp"
#include "tpbound/tpcore.hpp"

namespace tpbound {

namespace {

struct Step {
  int to;
  const Rational* weight;  // nullptr for 1
};

class FamilyEnumerator {
 public:
  FamilyEnumerator(const NetworkParams& params, const MinorSpec& spec, long long budget)
      : params_(params), spec_(spec), budget_(budget), layers_(network_layers(params.rank)) {
    occupied_.assign(layers_.size() + 1, std::vector<bool>(static_cast<std::size_t>(params.rank) + 1, false));
  }

  Rational run() {
    total_ = 0;
    next_path(0, Rational(1));
    return total_;
  }

 private:
  std::vector<Step> steps(std::size_t layer_index, int level) const {
    const NetworkLayer& layer = layers_[layer_index];
    std::vector<Step> out;
    switch (layer.kind) {
      case NetworkLayer::Kind::Lower:
        out.push_back({level, nullptr});
        if (level == layer.level) out.push_back({level - 1, &params_.lower[static_cast<std::size_t>(layer.parameter)]});
        break;
      case NetworkLayer::Kind::Diagonal:
        out.push_back({level, &params_.diagonal[static_cast<std::size_t>(level - 1)]});
        break;
      case NetworkLayer::Kind::Upper:
        out.push_back({level, nullptr});
        if (level == layer.level - 1) out.push_back({level + 1, &params_.upper[static_cast<std::size_t>(layer.parameter)]});
        break;
    }
    return out;
  }

  void next_path(std::size_t path, const Rational& weight) {
    if (path == spec_.rows.size()) {
      if (++families_ > budget_) {
        throw Error(ErrorCode::BudgetExceeded,
                    "path-family enumeration exceeded budget " + std::to_string(budget_));
      }
      total_ += weight;
      return;
    }
    const int source = spec_.rows[path];
    if (occupied_[0][static_cast<std::size_t>(source)]) return;
    walk(path, 0, source, weight);
  }

  void walk(std::size_t path, std::size_t boundary, int level, const Rational& weight) {
    auto slot = occupied_[boundary][static_cast<std::size_t>(level)];
    if (slot) return;
    slot = true;
    if (boundary == layers_.size()) {
      if (level == spec_.cols[path]) next_path(path + 1, weight);
    } else {
      for (const Step& s : steps(boundary, level)) {
        walk(path, boundary + 1, s.to, s.weight ? Rational(weight * *s.weight) : weight);
      }
    }
    slot = false;
  }

  const NetworkParams& params_;
  const MinorSpec& spec_;
  long long budget_;
  std::vector<NetworkLayer> layers_;
  std::vector<std::vector<bool>> occupied_;
  long long families_ = 0;
  Rational total_;
};

}  // namespace

Rational lgv_minor(const NetworkParams& params, const MinorSpec& spec, long long budget) {
  params.validate();
  if (spec.rank != params.rank) throw Error(ErrorCode::RankMismatch, "minor rank does not match network");
  if (spec.rows.empty()) return 1;
  return FamilyEnumerator(params, spec, budget).run();
}

}  // namespace tpbound
