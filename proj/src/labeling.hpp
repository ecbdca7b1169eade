#pragma once

#include <cstdint>
#include <vector>

#include "diagram.hpp"
#include "kei.hpp"

namespace keikit {

// A labeling assigns a kei element to every arc; slot 0 is unused so that
// f[a] is the label of arc a.  Valid labelings satisfy
//     f(under_out) = f(under_in) > f(over)
// at every crossing.  Crossing signs play no role here: reversing a crossing
// replaces the relation by its >-inverse, which by involution is the same
// constraint.
using Labeling = std::vector<int>;

inline constexpr std::uint64_t default_labeling_limit = 1u << 20;

bool is_kei_labeling(const LinkDiagram& d, const FiniteKei& k, const Labeling& f);

// All valid labelings in lexicographic order on (f[1], ..., f[arcs]).
// Throws LimitError if more than `limit` would be produced.
std::vector<Labeling> kei_labelings(const LinkDiagram& d, const FiniteKei& k,
                                    std::uint64_t limit = default_labeling_limit);

// The counting invariant: number of valid labelings.
std::uint64_t count_kei_labelings(const LinkDiagram& d, const FiniteKei& k);

} // namespace keikit
