#pragma once

#include <string>

#include "qpd/quiver.hpp"

namespace qpd {

// Graphviz rendering: one node per vertex, one labeled edge per arrow,
// vertices ascending and arrows in creation order.
std::string export_dot(const Quiver& quiver);

} // namespace qpd
