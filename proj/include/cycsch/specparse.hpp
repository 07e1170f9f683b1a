#pragma once

#include <string>

#include "cycsch/affine.hpp"
#include "cycsch/ring.hpp"

namespace cycsch {

/// Ring spec grammar: `Z/<n>`, `GR(<p>^<d>,<r>)`, `GF(<q>)`,
/// `POLY(<q>,<n>)`, and products joined by `*`. Parse errors carry the
/// offending position.
RingPtr parse_ring_spec(const std::string& spec, const Caps& caps = default_caps());

/// Subgroup spec grammar: `all`, `1`, `gens:<e1>,<e2>,...`,
/// `elems:<e1>,...`; entries are element indices or printed forms.
UnitSubgroup parse_subgroup_spec(const RingPtr& ring, const std::string& spec);

}  // namespace cycsch
