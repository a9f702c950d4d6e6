#pragma once

#include <compare>
#include <cstdint>

#include "plurality/model.hpp"

namespace plurality {

/// Canonical 1-based index of a single-valued position within the m^n
/// universe: 1 + sum over questions i of m^(n-i) * (j_i - 1), where j_i is
/// the answer index at question i. Distinct positions get distinct indices.
/// Set-valued positions have no index and are rejected.
std::uint64_t canonical_index(const Space& space, const Position& position);

/// Inverse of canonical_index: the unique position with the given index,
/// for 1 <= index <= m^n.
Position position_from_index(const Space& space, std::uint64_t index);

/// Total order over positions of one space, consistent with canonical_index
/// on single-valued positions and extended lexicographically over answer
/// sets for set-valued ones.
std::strong_ordering compare_positions(const Space& space, const Position& a,
                                       const Position& b);

} // namespace plurality
