#include "hdk/multicurve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hdk/arrangement.hpp"
#include "hdk/minimize.hpp"
#include "hdk/regions.hpp"

namespace hdk {

Multicurve::Multicurve(const Surface& s, std::vector<long long> w) : surf_(&s), weights_(std::move(w)) {
  if (static_cast<int>(weights_.size()) != s.edge_count)
    throw std::invalid_argument("multicurve: weight vector length mismatch");
  for (long long x : weights_)
    if (x < 0) throw std::invalid_argument("multicurve: negative weight");
  analyze();
}

void Multicurve::analyze() {
  components_.clear();
  essential_.clear();
  if (total_weight() == 0) return;
  Arrangement arr(*surf_);
  std::vector<int> ids = arr.insert_normal(weights_);  // validates
  for (int id : ids) components_.push_back(arr.curve_weights(id));
  // Essentiality: a component is inessential iff it bounds a disk, i.e. some
  // complementary region of the component alone is an open disk.
  for (const auto& cw : components_) {
    Arrangement one(*surf_);
    one.insert_normal(cw);
    Analysis an(one);
    bool disk = false;
    for (int r = 0; r < an.region_count; r++)
      if (an.region_euler[r] == 1) disk = true;
    essential_.push_back(!disk);
  }
}

long long Multicurve::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0LL);
}

int Multicurve::essential_component_count() const {
  int n = 0;
  for (bool e : essential_)
    if (e) n++;
  return n;
}

Multicurve Multicurve::essential_part() const {
  std::vector<long long> w(surf_->edge_count, 0);
  for (int i = 0; i < component_count(); i++)
    if (essential_[i])
      for (int e = 0; e < surf_->edge_count; e++) w[e] += components_[i][e];
  return Multicurve(*surf_, std::move(w));
}

Multicurve Multicurve::component_curve(int i) const { return Multicurve(*surf_, components_[i]); }

Curve::Curve(const Surface& s, std::vector<long long> w) : Multicurve(s, std::move(w)) {
  if (component_count() != 1)
    throw std::invalid_argument("curve: expected exactly one component, got " +
                                std::to_string(component_count()));
  if (!component_essential(0)) throw std::invalid_argument("curve: component is inessential");
}

Curve Curve::from(const Multicurve& m) { return Curve(*m.surface(), m.weights()); }

Multicurve validate_multicurve(const Surface& s, const std::vector<long long>& w) {
  return Multicurve(s, w);
}

long long geometric_intersection(const Multicurve& a, const Multicurve& b) {
  if (a.surface() != b.surface())
    throw std::invalid_argument("geometric_intersection: different surfaces");
  // Null-homotopic components can always be isotoped off everything else,
  // so only the essential parts meet.
  if (a.essential_component_count() < a.component_count())
    return geometric_intersection(a.essential_part(), b);
  if (b.essential_component_count() < b.component_count())
    return geometric_intersection(a, b.essential_part());
  if (a.empty() || b.empty()) return 0;
  Arrangement arr(*a.surface());
  std::vector<int> ia = arr.insert_normal(a.weights());
  std::vector<int> ib = arr.insert_normal(b.weights());
  std::set<int> movable(ib.begin(), ib.end());
  remove_curve_bigons(arr, movable);
  Analysis an(arr);
  std::set<int> aset(ia.begin(), ia.end());
  long long n = 0;
  for (const auto& x : an.crossings) {
    int u = an.chords[x.ca].curve, v = an.chords[x.cb].curve;
    if (aset.count(u) != aset.count(v)) n++;
  }
  return n;
}

bool isotopic(const Multicurve& a, const Multicurve& b) {
  if (a.surface() != b.surface()) return false;
  if (a.weights() == b.weights()) return true;
  // Same class with different normal coordinates can only differ by slides
  // across the vertex; detect via a parallelism census for single curves,
  // and componentwise matching otherwise.
  if (a.component_count() == 1 && b.component_count() == 1) {
    if (geometric_intersection(a, b) != 0) return false;
    Arrangement arr(*a.surface());
    std::vector<int> ia = arr.insert_normal(a.weights());
    std::vector<int> ib = arr.insert_normal(b.weights());
    std::set<int> movable(ib.begin(), ib.end());
    remove_curve_bigons(arr, movable);
    Analysis an(arr);
    // Parallel iff some complementary region is an annulus with one boundary
    // circuit on each curve.
    for (int r = 0; r < an.region_count; r++) {
      if (an.region_euler[r] != 0) continue;
      const auto& cs = an.region_circuits[r];
      if (cs.size() != 2) continue;
      int c0 = an.curve_of_dart(an.circuits[cs[0]].darts.front());
      int c1 = an.curve_of_dart(an.circuits[cs[1]].darts.front());
      bool pure0 = true, pure1 = true;
      for (int d : an.circuits[cs[0]].darts)
        if (an.curve_of_dart(d) != c0) pure0 = false;
      for (int d : an.circuits[cs[1]].darts)
        if (an.curve_of_dart(d) != c1) pure1 = false;
      if (pure0 && pure1 && c0 != c1 && (c0 == ia[0]) != (c1 == ia[0])) return true;
    }
    return false;
  }
  if (a.component_count() != b.component_count()) return false;
  // Match components greedily (adequate for the small systems used here).
  std::vector<int> unmatched;
  for (int j = 0; j < b.component_count(); j++) unmatched.push_back(j);
  for (int i = 0; i < a.component_count(); i++) {
    bool hit = false;
    for (size_t k = 0; k < unmatched.size(); k++) {
      if (isotopic(a.component_curve(i), b.component_curve(unmatched[k]))) {
        unmatched.erase(unmatched.begin() + k);
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

Multicurve weight_sum(const Multicurve& a, const Multicurve& b) {
  if (a.surface() != b.surface()) throw std::invalid_argument("weight_sum: different surfaces");
  std::vector<long long> w = a.weights();
  for (size_t i = 0; i < w.size(); i++) w[i] += b.weights()[i];
  return Multicurve(*a.surface(), std::move(w));
}

bool fills(const Curve& a, const Curve& b) {
  if (a.surface() != b.surface()) throw std::invalid_argument("fills: different surfaces");
  Arrangement arr(*a.surface());
  arr.insert_normal(a.weights());
  std::vector<int> ib = arr.insert_normal(b.weights());
  std::set<int> movable(ib.begin(), ib.end());
  remove_curve_bigons(arr, movable);
  Analysis an(arr);
  for (int r = 0; r < an.region_count; r++)
    if (an.region_euler[r] != 1) return false;
  return true;
}

}  // namespace hdk
