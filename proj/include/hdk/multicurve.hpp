#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hdk/surface.hpp"

namespace hdk {

/// A multicurve in normal coordinates on a fixed surface. Weights are the
/// canonical normal form of the punctured-surface isotopy class; all
/// measurements (intersection numbers, complement censuses) are computed on
/// the closed surface via explicit realizations.
class Multicurve {
 public:
  Multicurve() = default;
  Multicurve(const Surface& s, std::vector<long long> w);

  const Surface* surface() const { return surf_; }
  const std::vector<long long>& weights() const { return weights_; }
  long long total_weight() const;
  bool empty() const { return total_weight() == 0; }

  int component_count() const { return static_cast<int>(components_.size()); }
  const std::vector<long long>& component(int i) const { return components_[i]; }
  bool component_essential(int i) const { return essential_[i]; }
  int essential_component_count() const;

  /// The sub-multicurve of all essential components.
  Multicurve essential_part() const;
  Multicurve component_curve(int i) const;

  bool operator==(const Multicurve& o) const {
    return surf_ == o.surf_ && weights_ == o.weights_;
  }

 private:
  const Surface* surf_ = nullptr;
  std::vector<long long> weights_;
  std::vector<std::vector<long long>> components_;
  std::vector<bool> essential_;
  void analyze();
};

/// A single essential simple closed curve.
class Curve : public Multicurve {
 public:
  Curve() = default;
  /// Throws unless the coordinates define exactly one component and it is
  /// essential.
  Curve(const Surface& s, std::vector<long long> w);
  static Curve from(const Multicurve& m);
};

/// Validates normal coordinates (parity + triangle inequalities, with the
/// offending triangle named on failure) and returns the multicurve with its
/// component decomposition and essentiality report.
Multicurve validate_multicurve(const Surface& s, const std::vector<long long>& w);

/// Geometric intersection number on the closed surface.
long long geometric_intersection(const Multicurve& a, const Multicurve& b);

/// True iff a and b are isotopic on the closed surface.
bool isotopic(const Multicurve& a, const Multicurve& b);

/// Normal coordinates of the k-th power Dehn twist about c applied to a.
Multicurve dehn_twist(const Multicurve& a, const Curve& c, long long k);

/// Union of two disjoint multicurves... weights add; callers must know the
/// pieces are realizable disjointly (e.g. both from one cut system).
Multicurve weight_sum(const Multicurve& a, const Multicurve& b);

/// True iff every complementary piece of a [minimal-position realization of]
/// a ∪ b is an open disk.
bool fills(const Curve& a, const Curve& b);

}  // namespace hdk
