#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "udist/errors.hpp"
#include "udist/factor.hpp"

namespace udist {

/// A state is one value index per attribute, in attribute order.
using State = std::vector<int>;

/// Finite multiattribute domain: an ordered list of named attributes, each
/// with an ordered finite domain of value labels. States are ranked in
/// lexicographic order with the last attribute varying fastest.
class AttributeSpace {
public:
  struct Attribute {
    std::string name;
    std::vector<std::string> values;
  };

  explicit AttributeSpace(std::vector<Attribute> attrs)
      : attrs_(std::move(attrs)) {
    if (attrs_.empty())
      throw validation_error("attribute space needs at least one attribute");
    for (const auto& a : attrs_) {
      if (a.name.empty())
        throw validation_error("attribute names must be nonempty");
      if (a.values.size() < 2)
        throw validation_error("attribute '" + a.name +
                               "' needs at least two values");
      for (std::size_t i = 0; i < a.values.size(); ++i)
        for (std::size_t j = i + 1; j < a.values.size(); ++j)
          if (a.values[i] == a.values[j])
            throw validation_error("duplicate value '" + a.values[i] +
                                   "' in attribute '" + a.name + "'");
    }
    for (std::size_t i = 0; i < attrs_.size(); ++i)
      for (std::size_t j = i + 1; j < attrs_.size(); ++j)
        if (attrs_[i].name == attrs_[j].name)
          throw validation_error("duplicate attribute name '" +
                                 attrs_[i].name + "'");
    strides_.assign(attrs_.size(), 1);
    for (std::size_t i = attrs_.size(); i-- > 1;)
      strides_[i - 1] = strides_[i] * attrs_[i].values.size();
    count_ = strides_[0] * attrs_[0].values.size();
  }

  std::size_t attribute_count() const { return attrs_.size(); }
  std::size_t state_count() const { return count_; }
  const Attribute& attribute(std::size_t i) const { return attrs_[i]; }
  const std::vector<Attribute>& attributes() const { return attrs_; }

  int attribute_index(const std::string& name) const {
    for (std::size_t i = 0; i < attrs_.size(); ++i)
      if (attrs_[i].name == name) return static_cast<int>(i);
    return -1;
  }

  int value_index(std::size_t attr, const std::string& label) const {
    const auto& vals = attrs_[attr].values;
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (vals[i] == label) return static_cast<int>(i);
    return -1;
  }

  std::size_t rank(const State& s) const {
    if (s.size() != attrs_.size())
      throw validation_error("state has wrong number of attribute values");
    std::size_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || static_cast<std::size_t>(s[i]) >= attrs_[i].values.size())
        throw validation_error("value index out of range for attribute '" +
                               attrs_[i].name + "'");
      r += static_cast<std::size_t>(s[i]) * strides_[i];
    }
    return r;
  }

  State state(std::size_t rank) const {
    State s(attrs_.size());
    for (std::size_t i = 0; i < attrs_.size(); ++i) {
      s[i] = static_cast<int>(rank / strides_[i]);
      rank %= strides_[i];
    }
    return s;
  }

  State state_of(const std::vector<std::string>& labels) const {
    if (labels.size() != attrs_.size())
      throw validation_error("state has wrong number of attribute values");
    State s(attrs_.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      int v = value_index(i, labels[i]);
      if (v < 0)
        throw validation_error("unknown value '" + labels[i] +
                               "' for attribute '" + attrs_[i].name + "'");
      s[i] = v;
    }
    return s;
  }

  std::vector<std::string> labels_of(const State& s) const {
    std::vector<std::string> out(attrs_.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      out[i] = attrs_[i].values[static_cast<std::size_t>(s[i])];
    return out;
  }

  bool operator==(const AttributeSpace& other) const {
    if (attrs_.size() != other.attrs_.size()) return false;
    for (std::size_t i = 0; i < attrs_.size(); ++i)
      if (attrs_[i].name != other.attrs_[i].name ||
          attrs_[i].values != other.attrs_[i].values)
        return false;
    return true;
  }

private:
  std::vector<Attribute> attrs_;
  std::vector<std::size_t> strides_;
  std::size_t count_ = 0;
};

/// A total utility table over the Cartesian product of the attribute domains.
class TabulatedUtility {
public:
  TabulatedUtility(AttributeSpace space, std::vector<double> values)
      : space_(std::move(space)), values_(std::move(values)) {
    if (values_.size() != space_.state_count())
      throw validation_error("utility table must cover every state exactly "
                             "once (" +
                             std::to_string(space_.state_count()) +
                             " states, got " +
                             std::to_string(values_.size()) + " entries)");
  }

  const AttributeSpace& space() const { return space_; }
  const std::vector<double>& values() const { return values_; }
  double value_at(std::size_t rank) const { return values_[rank]; }
  double value(const State& s) const { return values_[space_.rank(s)]; }

  double max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
  }

  /// Fixes one attribute to a value and drops it from the space.
  TabulatedUtility restrict(const std::string& attr,
                            const std::string& value) const {
    int ai = space_.attribute_index(attr);
    if (ai < 0) throw validation_error("unknown attribute '" + attr + "'");
    int vi = space_.value_index(static_cast<std::size_t>(ai), value);
    if (vi < 0)
      throw validation_error("unknown value '" + value + "' for attribute '" +
                             attr + "'");
    if (space_.attribute_count() < 2)
      throw validation_error("cannot restrict away the only attribute");
    std::vector<AttributeSpace::Attribute> rest;
    for (std::size_t i = 0; i < space_.attribute_count(); ++i)
      if (static_cast<int>(i) != ai) rest.push_back(space_.attribute(i));
    AttributeSpace sub(std::move(rest));
    std::vector<double> vals(sub.state_count());
    for (std::size_t r = 0; r < sub.state_count(); ++r) {
      State partial = sub.state(r);
      State full;
      full.reserve(space_.attribute_count());
      std::size_t k = 0;
      for (std::size_t i = 0; i < space_.attribute_count(); ++i)
        full.push_back(static_cast<int>(i) == ai ? vi : partial[k++]);
      vals[r] = value(full);
    }
    return TabulatedUtility(std::move(sub), std::move(vals));
  }

  bool operator==(const TabulatedUtility& other) const {
    return space_ == other.space_ && values_ == other.values_;
  }

private:
  AttributeSpace space_;
  std::vector<double> values_;
};

/// Equality comparisons on a table are taken at tol scaled by the table's
/// magnitude once values exceed unit range.
inline double effective_tol(const TabulatedUtility& u,
                            double tol = kDefaultTol) {
  return tol * std::max(1.0, u.max_abs());
}

/// A probability distribution over states, stored sparsely by state rank.
class Lottery {
public:
  Lottery(const AttributeSpace& space, std::map<std::size_t, double> probs,
          double tol = kDefaultTol)
      : probs_(std::move(probs)) {
    double total = 0.0;
    for (const auto& [r, p] : probs_) {
      if (r >= space.state_count())
        throw validation_error("lottery names a state outside the space");
      if (p < 0.0)
        throw validation_error("lottery probabilities must be nonnegative");
      total += p;
    }
    if (std::abs(total - 1.0) > tol)
      throw validation_error("lottery probabilities sum to " +
                             std::to_string(total) + ", expected 1");
  }

  static Lottery point(const AttributeSpace& space, const State& s) {
    return Lottery(space, {{space.rank(s), 1.0}});
  }

  static Lottery uniform(const AttributeSpace& space) {
    std::map<std::size_t, double> probs;
    double p = 1.0 / static_cast<double>(space.state_count());
    for (std::size_t r = 0; r < space.state_count(); ++r) probs[r] = p;
    return Lottery(space, std::move(probs));
  }

  const std::map<std::size_t, double>& probs() const { return probs_; }

  double prob_at(std::size_t rank) const {
    auto it = probs_.find(rank);
    return it == probs_.end() ? 0.0 : it->second;
  }

  /// Restriction to the event attribute=value, renormalized.
  Lottery given(const AttributeSpace& space, std::size_t attr,
                int value) const {
    double mass = 0.0;
    std::map<std::size_t, double> kept;
    for (const auto& [r, p] : probs_) {
      if (space.state(r)[attr] == value) {
        kept[r] = p;
        mass += p;
      }
    }
    if (mass <= 0.0)
      throw null_conditioning_error(
          "evidence has zero probability under the lottery");
    for (auto& [_, p] : kept) p /= mass;
    return Lottery(space, std::move(kept));
  }

private:
  std::map<std::size_t, double> probs_;
};

inline double expected_utility(const TabulatedUtility& u, const Lottery& p) {
  double total = 0.0;
  for (const auto& [r, prob] : p.probs()) total += prob * u.value_at(r);
  return total;
}

enum class Ordering { first, second, indifferent };

inline Ordering prefers(const TabulatedUtility& u, const Lottery& p1,
                        const Lottery& p2, double tol = kDefaultTol) {
  double d = expected_utility(u, p1) - expected_utility(u, p2);
  if (std::abs(d) <= tol) return Ordering::indifferent;
  return d > 0.0 ? Ordering::first : Ordering::second;
}

/// Preference between two lotteries after both are conditioned on
/// attribute=value and renormalized.
inline Ordering conditional_prefers(const TabulatedUtility& u,
                                    const Lottery& p1, const Lottery& p2,
                                    const std::string& attr,
                                    const std::string& value,
                                    double tol = kDefaultTol) {
  int ai = u.space().attribute_index(attr);
  if (ai < 0) throw validation_error("unknown attribute '" + attr + "'");
  int vi = u.space().value_index(static_cast<std::size_t>(ai), value);
  if (vi < 0)
    throw validation_error("unknown value '" + value + "' for attribute '" +
                           attr + "'");
  Lottery q1 = p1.given(u.space(), static_cast<std::size_t>(ai), vi);
  Lottery q2 = p2.given(u.space(), static_cast<std::size_t>(ai), vi);
  return prefers(u, q1, q2, tol);
}

// --- independence deciders -------------------------------------------------

/// Conditioning values whose slices admit no positive affine fit.
struct UiWitness {
  std::vector<std::string> y_attrs;
  std::map<std::string, std::string> z_reference;
  std::map<std::string, std::string> z_conflicting;
};

struct UiResult {
  bool independent = false;
  std::optional<UiWitness> witness;
};

namespace detail {

/// Enumerates assignments to a subset of attributes (indices ascending),
/// last attribute fastest, mirroring state ranking.
class SubspaceWalker {
public:
  SubspaceWalker(const AttributeSpace& space, std::vector<std::size_t> attrs)
      : space_(space), attrs_(std::move(attrs)) {
    count_ = 1;
    for (std::size_t a : attrs_) count_ *= space.attribute(a).values.size();
  }

  std::size_t count() const { return count_; }
  const std::vector<std::size_t>& attrs() const { return attrs_; }

  /// Writes the r-th assignment into the given full state.
  void emplace(std::size_t r, State& into) const {
    for (std::size_t i = attrs_.size(); i-- > 0;) {
      std::size_t dom = space_.attribute(attrs_[i]).values.size();
      into[attrs_[i]] = static_cast<int>(r % dom);
      r /= dom;
    }
  }

  std::map<std::string, std::string> labels(std::size_t r) const {
    State full(space_.attribute_count(), 0);
    emplace(r, full);
    std::map<std::string, std::string> out;
    for (std::size_t a : attrs_) {
      const auto& attr = space_.attribute(a);
      out[attr.name] = attr.values[static_cast<std::size_t>(full[a])];
    }
    return out;
  }

private:
  const AttributeSpace& space_;
  std::vector<std::size_t> attrs_;
  std::size_t count_ = 0;
};

inline bool slice_constant(const std::vector<double>& s, double tol) {
  auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  return *hi - *lo <= tol;
}

/// True iff target = a + b*reference for some b > 0, within tol.
inline bool positive_affine_fit(const std::vector<double>& reference,
                                const std::vector<double>& target,
                                double tol) {
  std::size_t i0 = static_cast<std::size_t>(
      std::min_element(reference.begin(), reference.end()) -
      reference.begin());
  std::size_t i1 = static_cast<std::size_t>(
      std::max_element(reference.begin(), reference.end()) -
      reference.begin());
  double b = (target[i1] - target[i0]) / (reference[i1] - reference[i0]);
  if (b <= 0.0) return false;
  double a = target[i0] - b * reference[i0];
  for (std::size_t i = 0; i < reference.size(); ++i)
    if (std::abs(target[i] - (a + b * reference[i])) > tol) return false;
  return true;
}

/// Slice-wise utility-independence check for a Y/Z partition given by
/// attribute indices. Slices over Y-assignments, one per Z-assignment, must
/// all be constant or all be positive affine transforms of one another.
inline UiResult ui_partition(const TabulatedUtility& u,
                             const std::vector<std::size_t>& ys,
                             const std::vector<std::size_t>& zs, double tol) {
  const AttributeSpace& space = u.space();
  SubspaceWalker ywalk(space, ys), zwalk(space, zs);

  std::vector<std::vector<double>> slices(zwalk.count());
  State probe(space.attribute_count(), 0);
  for (std::size_t zr = 0; zr < zwalk.count(); ++zr) {
    zwalk.emplace(zr, probe);
    auto& slice = slices[zr];
    slice.resize(ywalk.count());
    for (std::size_t yr = 0; yr < ywalk.count(); ++yr) {
      ywalk.emplace(yr, probe);
      slice[yr] = u.value(probe);
    }
  }

  std::vector<std::string> ynames;
  for (std::size_t a : ys) ynames.push_back(space.attribute(a).name);
  auto fail = [&](std::size_t zref, std::size_t zbad) {
    UiResult r;
    r.independent = false;
    r.witness = UiWitness{ynames, zwalk.labels(zref), zwalk.labels(zbad)};
    return r;
  };

  std::optional<std::size_t> ref;
  for (std::size_t zr = 0; zr < zwalk.count(); ++zr)
    if (!slice_constant(slices[zr], tol)) {
      ref = zr;
      break;
    }
  if (!ref) return {true, std::nullopt};  // total indifference everywhere

  for (std::size_t zr = 0; zr < zwalk.count(); ++zr) {
    if (zr == *ref) continue;
    if (slice_constant(slices[zr], tol)) return fail(*ref, zr);
    if (!positive_affine_fit(slices[*ref], slices[zr], tol))
      return fail(*ref, zr);
  }
  return {true, std::nullopt};
}

inline std::vector<std::size_t>
resolve_attrs(const AttributeSpace& space,
              const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) {
    int i = space.attribute_index(n);
    if (i < 0) throw validation_error("unknown attribute '" + n + "'");
    out.push_back(static_cast<std::size_t>(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

/// Classical utility independence of Y from Z, decided by positive affine
/// relatedness of the table's Y-slices across Z values. Y and Z must
/// partition the attribute set; fix any other attributes with restrict()
/// first.
inline UiResult is_utility_independent(const TabulatedUtility& u,
                                       const std::vector<std::string>& y,
                                       const std::vector<std::string>& z,
                                       double tol = kDefaultTol) {
  if (y.empty() || z.empty())
    throw validation_error("Y and Z must be nonempty attribute subsets");
  auto ys = detail::resolve_attrs(u.space(), y);
  auto zs = detail::resolve_attrs(u.space(), z);
  std::vector<std::size_t> both;
  std::merge(ys.begin(), ys.end(), zs.begin(), zs.end(),
             std::back_inserter(both));
  for (std::size_t i = 1; i < both.size(); ++i)
    if (both[i] == both[i - 1])
      throw validation_error("Y and Z must be disjoint");
  if (both.size() != u.space().attribute_count())
    throw validation_error("Y and Z must cover every attribute; restrict the "
                           "table to fix attributes outside the pair");
  return detail::ui_partition(u, ys, zs, effective_tol(u, tol));
}

/// Every single attribute utility independent of its complement.
inline UiResult is_singularly_independent(const TabulatedUtility& u,
                                          double tol = kDefaultTol) {
  std::size_t n = u.space().attribute_count();
  if (n < 2)
    throw validation_error("singular independence needs at least two "
                           "attributes");
  double teff = effective_tol(u, tol);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> ys{i}, zs;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) zs.push_back(j);
    UiResult r = detail::ui_partition(u, ys, zs, teff);
    if (!r.independent) return r;
  }
  return {true, std::nullopt};
}

inline constexpr std::size_t kMutualAttributeGuard = 20;

/// Every nonempty proper attribute subset utility independent of its
/// complement.
inline UiResult is_mutually_independent(const TabulatedUtility& u,
                                        double tol = kDefaultTol) {
  std::size_t n = u.space().attribute_count();
  if (n < 2)
    throw validation_error("mutual independence needs at least two "
                           "attributes");
  if (n > kMutualAttributeGuard)
    throw resource_error("mutual independence iterates all subsets; refusing "
                         "more than " +
                         std::to_string(kMutualAttributeGuard) +
                         " attributes");
  double teff = effective_tol(u, tol);
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> ys, zs;
    for (std::size_t i = 0; i < n; ++i)
      ((mask >> i) & 1 ? ys : zs).push_back(i);
    UiResult r = detail::ui_partition(u, ys, zs, teff);
    if (!r.independent) return r;
  }
  return {true, std::nullopt};
}

/// Lotteries with identical marginals but different expected utilities.
struct AdditiveWitness {
  Lottery uniform_square;
  Lottery diagonal;
  double eu_uniform = 0.0;
  double eu_diagonal = 0.0;
};

struct AdditiveResult {
  bool additive = false;
  std::optional<AdditiveWitness> witness;
};

namespace detail {

/// The additive candidate built from the first-value reference state:
/// u(x0) + sum_i [u(x_i, x0_-i) - u(x0)] evaluated at the given state.
inline double additive_candidate(const TabulatedUtility& u, const State& s) {
  const AttributeSpace& space = u.space();
  State ref(space.attribute_count(), 0);
  double base = u.value(ref);
  double total = base;
  State probe = ref;
  for (std::size_t i = 0; i < space.attribute_count(); ++i) {
    probe[i] = s[i];
    total += u.value(probe) - base;
    probe[i] = 0;
  }
  return total;
}

inline bool additive_within(const TabulatedUtility& u, double teff) {
  for (std::size_t r = 0; r < u.space().state_count(); ++r)
    if (std::abs(u.value_at(r) - additive_candidate(u, u.space().state(r))) >
        teff)
      return false;
  return true;
}

/// Finds the first 2x2 sub-square whose second difference exceeds tol and
/// returns the equal-marginal witness lotteries on it.
inline std::optional<AdditiveWitness>
find_square_witness(const TabulatedUtility& u, double teff) {
  const AttributeSpace& space = u.space();
  std::size_t n = space.attribute_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::size_t> others;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j) others.push_back(k);
      SubspaceWalker walk(space, others);
      State s(n, 0);
      for (std::size_t wr = 0; wr < walk.count(); ++wr) {
        walk.emplace(wr, s);
        std::size_t di = space.attribute(i).values.size();
        std::size_t dj = space.attribute(j).values.size();
        for (std::size_t a = 0; a < di; ++a)
          for (std::size_t a2 = a + 1; a2 < di; ++a2)
            for (std::size_t b = 0; b < dj; ++b)
              for (std::size_t b2 = b + 1; b2 < dj; ++b2) {
                auto at = [&](std::size_t vi, std::size_t vj) {
                  s[i] = static_cast<int>(vi);
                  s[j] = static_cast<int>(vj);
                  return space.rank(s);
                };
                std::size_t r00 = at(a, b), r11 = at(a2, b2);
                std::size_t r01 = at(a, b2), r10 = at(a2, b);
                double second_diff = u.value_at(r00) + u.value_at(r11) -
                                     u.value_at(r01) - u.value_at(r10);
                if (std::abs(second_diff) > teff) {
                  std::map<std::size_t, double> uni{{r00, 0.25},
                                                    {r01, 0.25},
                                                    {r10, 0.25},
                                                    {r11, 0.25}};
                  std::map<std::size_t, double> diag{{r00, 0.5}, {r11, 0.5}};
                  AdditiveWitness w{Lottery(space, std::move(uni)),
                                    Lottery(space, std::move(diag)), 0.0, 0.0};
                  w.eu_uniform = expected_utility(u, w.uniform_square);
                  w.eu_diagonal = expected_utility(u, w.diagonal);
                  return w;
                }
              }
      }
    }
  }
  return std::nullopt;
}

} // namespace detail

/// Additive independence: preference over lotteries depends only on their
/// marginals. Decided by comparing the table against its additive candidate;
/// failures come with equal-marginal witness lotteries.
inline AdditiveResult is_additive_independent(const TabulatedUtility& u,
                                              double tol = kDefaultTol) {
  if (u.space().attribute_count() < 2)
    throw validation_error("additive independence needs at least two "
                           "attributes");
  double teff = effective_tol(u, tol);
  if (detail::additive_within(u, teff)) return {true, std::nullopt};
  return {false, detail::find_square_witness(u, teff)};
}

/// Per-attribute value functions summing, with a base constant, to the
/// original table. The constructor rejects a decomposition that does not
/// reproduce its source table.
class AdditiveDecomposition {
public:
  AdditiveDecomposition(const TabulatedUtility& source,
                        std::vector<std::vector<double>> parts,
                        double constant, double tol = kDefaultTol)
      : space_(source.space()), parts_(std::move(parts)), constant_(constant) {
    if (parts_.size() != space_.attribute_count())
      throw validation_error("decomposition needs one value function per "
                             "attribute");
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (parts_[i].size() != space_.attribute(i).values.size())
        throw validation_error("value function arity mismatch for attribute "
                               "'" +
                               space_.attribute(i).name + "'");
    double teff = effective_tol(source, tol);
    for (std::size_t r = 0; r < space_.state_count(); ++r)
      if (std::abs(value(space_.state(r)) - source.value_at(r)) > teff)
        throw decomposition_error(
            "decomposition does not reproduce the source table");
  }

  double value(const State& s) const {
    double total = constant_;
    for (std::size_t i = 0; i < parts_.size(); ++i)
      total += parts_[i][static_cast<std::size_t>(s[i])];
    return total;
  }

  const AttributeSpace& space() const { return space_; }
  const std::vector<std::vector<double>>& parts() const { return parts_; }
  double constant() const { return constant_; }

private:
  AttributeSpace space_;
  std::vector<std::vector<double>> parts_;
  double constant_;
};

/// Splits an additive table into per-attribute value functions anchored at
/// the first value of each domain. Throws decomposition_error (carrying the
/// witness expected utilities) when the table is not additive.
inline AdditiveDecomposition
additive_decomposition(const TabulatedUtility& u, double tol = kDefaultTol) {
  AdditiveResult res = is_additive_independent(u, tol);
  if (!res.additive) {
    std::string msg = "table is not additive independent";
    if (res.witness) {
      msg += "; witness lotteries with equal marginals have expected "
             "utilities " +
             std::to_string(res.witness->eu_uniform) + " and " +
             std::to_string(res.witness->eu_diagonal);
    }
    throw decomposition_error(msg);
  }
  const AttributeSpace& space = u.space();
  State ref(space.attribute_count(), 0);
  double base = u.value(ref);
  std::vector<std::vector<double>> parts(space.attribute_count());
  State probe = ref;
  for (std::size_t i = 0; i < space.attribute_count(); ++i) {
    parts[i].resize(space.attribute(i).values.size());
    for (std::size_t v = 0; v < parts[i].size(); ++v) {
      probe[i] = static_cast<int>(v);
      parts[i][v] = u.value(probe) - base;
    }
    probe[i] = 0;
  }
  return AdditiveDecomposition(u, std::move(parts), base, tol);
}

enum class TioliMode { strict, up_to_affine };

/// Reads a table over boolean attributes as u(x) = sum_i k_i x_i, with the
/// first domain value of each attribute playing 0. Strict mode demands the
/// all-zero state have utility zero; up_to_affine drops that constant.
/// Returns nothing when the table is not additive.
inline std::optional<TioliFunction> is_tioli(const TabulatedUtility& u,
                                             TioliMode mode,
                                             double tol = kDefaultTol) {
  const AttributeSpace& space = u.space();
  for (std::size_t i = 0; i < space.attribute_count(); ++i)
    if (space.attribute(i).values.size() != 2)
      throw validation_error("TIOLI detection needs boolean attributes; '" +
                             space.attribute(i).name + "' has " +
                             std::to_string(space.attribute(i).values.size()) +
                             " values");
  double teff = effective_tol(u, tol);
  if (!detail::additive_within(u, teff)) return std::nullopt;
  State zero(space.attribute_count(), 0);
  double base = u.value(zero);
  if (mode == TioliMode::strict && std::abs(base) > teff) return std::nullopt;
  std::map<std::string, double> k;
  State probe = zero;
  for (std::size_t i = 0; i < space.attribute_count(); ++i) {
    probe[i] = 1;
    k[space.attribute(i).name] = u.value(probe) - base;
    probe[i] = 0;
  }
  return TioliFunction(std::move(k));
}

/// Outcome of running every independence decider on one table.
struct IndependenceReport {
  std::vector<std::pair<std::string, bool>> singleton_ui;
  bool singular = false;
  bool mutual = false;
  bool additive = false;
  std::optional<TioliFunction> tioli_strict;
  std::optional<TioliFunction> tioli_affine;
  std::optional<UiWitness> ui_witness;
  std::optional<AdditiveWitness> additive_witness;
};

inline IndependenceReport classify(const TabulatedUtility& u,
                                   double tol = kDefaultTol) {
  const AttributeSpace& space = u.space();
  std::size_t n = space.attribute_count();
  if (n < 2)
    throw validation_error("classification needs at least two attributes");

  IndependenceReport report;
  double teff = effective_tol(u, tol);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> ys{i}, zs;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) zs.push_back(j);
    UiResult r = detail::ui_partition(u, ys, zs, teff);
    report.singleton_ui.emplace_back(space.attribute(i).name, r.independent);
    if (!r.independent && !report.ui_witness) report.ui_witness = r.witness;
  }
  report.singular = std::all_of(report.singleton_ui.begin(),
                                report.singleton_ui.end(),
                                [](const auto& p) { return p.second; });

  UiResult mut = is_mutually_independent(u, tol);
  report.mutual = mut.independent;
  if (!mut.independent && !report.ui_witness) report.ui_witness = mut.witness;

  AdditiveResult add = is_additive_independent(u, tol);
  report.additive = add.additive;
  report.additive_witness = add.witness;

  bool all_boolean = true;
  for (std::size_t i = 0; i < n; ++i)
    if (space.attribute(i).values.size() != 2) all_boolean = false;
  if (all_boolean) {
    report.tioli_strict = is_tioli(u, TioliMode::strict, tol);
    report.tioli_affine = is_tioli(u, TioliMode::up_to_affine, tol);
  }
  return report;
}

} // namespace udist
