#pragma once

#include <cstdint>
#include <vector>

namespace qpd {

// Vertices are numbered 1..n; arrows are indexed by creation order.
// The arrow order induced by ArrowId fixes every canonical form and
// tie-break in the library.
using VertexId = std::uint32_t;
using ArrowId = std::uint32_t;

// A path word in written order: word[0] is the leftmost arrow, i.e. the
// one applied last ("concatenation is composition of functions").
using Word = std::vector<ArrowId>;

} // namespace qpd
