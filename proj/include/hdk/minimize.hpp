#pragma once

#include <set>
#include <vector>

#include "hdk/arrangement.hpp"
#include "hdk/regions.hpp"

namespace hdk {

/// Removes bigon regions whose boundary involves at least one curve from
/// `movable` by isotoping the movable side across the bigon. Each removal
/// drops exactly one pair of crossings and never creates new ones, so the
/// process terminates in minimal position (bigon criterion). Returns the
/// number of bigons removed.
///
/// With skip_vertex_regions set, bigons whose interior contains the vertex
/// are left alone: the result is minimal in the once-punctured surface and
/// the punctured isotopy classes (hence normal coordinates) are preserved.
long long remove_curve_bigons(Arrangement& arr, const std::set<int>& movable,
                              bool skip_vertex_regions = false);

/// remove_curve_bigons, then the exact crossing count between two curves.
long long minimal_crossings(Arrangement& arr, int fixed, int movable);

}  // namespace hdk
