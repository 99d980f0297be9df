#pragma once

#include <string>

#include "c5/graph.hpp"

namespace c5 {

// Standard graph6 text encoding (upper triangle in column order, 6-bit
// groups offset by 63). Only the short form is needed at our sizes; decode
// accepts any n <= 16 and rejects the rest.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& s);

}  // namespace c5
