#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "udist/errors.hpp"

namespace udist {

inline constexpr double kDefaultTol = 1e-9;

/// A factor set: the argument of utility queries. Factors are identified by
/// label; the set is kept sorted so iteration order is deterministic.
using FactorSet = std::set<std::string>;

inline FactorSet intersect(const FactorSet& a, const FactorSet& b) {
  FactorSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
  return out;
}

/// Records the positive affine transform dropped while normalizing a utility
/// function: original(x) = scale * normalized(x~) + offset, where x~ inverts
/// the polarity of every factor in `flipped`.
struct AffineRecord {
  double scale = 1.0;
  FactorSet flipped;
  double offset = 0.0;
};

/// A utility function over boolean factors of the form u(x) = sum_i k_i x_i,
/// with unconstrained real weights.
class TioliFunction {
public:
  explicit TioliFunction(std::map<std::string, double> weights)
      : weights_(std::move(weights)) {
    if (weights_.empty())
      throw validation_error("tioli function needs at least one factor");
    for (const auto& [label, _] : weights_)
      if (label.empty())
        throw validation_error("factor labels must be nonempty");
  }

  const std::map<std::string, double>& weights() const { return weights_; }

  /// Evaluates sum_i k_i x_i for a boolean assignment given as the set of
  /// factors taking value 1.
  double value(const FactorSet& ones) const {
    double total = 0.0;
    for (const auto& label : ones) {
      auto it = weights_.find(label);
      if (it == weights_.end())
        throw validation_error("unknown factor label: " + label);
      total += it->second;
    }
    return total;
  }

private:
  std::map<std::string, double> weights_;
};

/// Nonnegative weights over a finite factor universe summing to one; the
/// utility of a factor set is the sum of the member weights.
class UtilityDistribution {
public:
  explicit UtilityDistribution(std::map<std::string, double> weights,
                               double tol = kDefaultTol)
      : weights_(std::move(weights)) {
    if (weights_.empty())
      throw validation_error("utility distribution needs at least one factor");
    double total = 0.0;
    for (const auto& [label, w] : weights_) {
      if (label.empty())
        throw validation_error("factor labels must be nonempty");
      if (w < -tol || w > 1.0 + tol)
        throw validation_error("weight of factor '" + label +
                               "' outside [0, 1]: " + std::to_string(w));
      total += w;
    }
    if (std::abs(total - 1.0) > tol)
      throw validation_error("factor weights sum to " + std::to_string(total) +
                             ", expected 1");
  }

  const std::map<std::string, double>& weights() const { return weights_; }

  bool contains(const std::string& label) const {
    return weights_.count(label) != 0;
  }

  FactorSet universe() const {
    FactorSet all;
    for (const auto& [label, _] : weights_) all.insert(all.end(), label);
    return all;
  }

  /// u(s) = sum of the weights of the members of s.
  double utility(const FactorSet& s) const {
    double total = 0.0;
    for (const auto& label : s) {
      auto it = weights_.find(label);
      if (it == weights_.end())
        throw validation_error("unknown factor label: " + label);
      total += it->second;
    }
    return total;
  }

  /// u(x|y) = u(x \cap y) / u(y).
  double conditional(const FactorSet& x, const FactorSet& y) const {
    double uy = utility(y);
    if (uy <= 0.0)
      throw null_conditioning_error(
          "conditioning factor set has zero utility");
    return utility(intersect(x, y)) / uy;
  }

  /// x is subjectively utility independent of y iff u(x|y) = u(x).
  bool subjectively_independent(const FactorSet& x, const FactorSet& y,
                                double tol = kDefaultTol) const {
    if (tol < 0.0) throw validation_error("tolerance must be nonnegative");
    return std::abs(conditional(x, y) - utility(x)) <= tol;
  }

private:
  std::map<std::string, double> weights_;
};

/// Rescales an arbitrary TIOLI function into a utility distribution.
///
/// Factors with negative weight have their polarity inverted, using
/// k*x = k + |k|*(1 - x); the constant lands in the affine record's offset
/// and the factor joins its `flipped` set. The remaining magnitudes are
/// divided by their sum, which becomes the record's scale.
inline std::pair<UtilityDistribution, AffineRecord>
normalize(const TioliFunction& t) {
  double scale = 0.0;
  for (const auto& [_, k] : t.weights()) scale += std::abs(k);
  if (scale == 0.0)
    throw degenerate_error("all factor weights are zero; nothing to normalize");

  AffineRecord rec;
  rec.scale = scale;
  std::map<std::string, double> weights;
  for (const auto& [label, k] : t.weights()) {
    if (k < 0.0) {
      rec.flipped.insert(label);
      rec.offset += k;
    }
    weights[label] = std::abs(k) / scale;
  }
  return {UtilityDistribution(std::move(weights)), rec};
}

/// Evaluates the original function back out of a normalized distribution:
/// scale * u(x with flipped polarities) + offset.
inline double reconstruct(const UtilityDistribution& dist,
                          const AffineRecord& rec, const FactorSet& ones) {
  double mass = 0.0;
  for (const auto& [label, w] : dist.weights()) {
    bool bit = ones.count(label) != 0;
    if (rec.flipped.count(label) != 0) bit = !bit;
    if (bit) mass += w;
  }
  return rec.scale * mass + rec.offset;
}

} // namespace udist
