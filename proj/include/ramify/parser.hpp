#pragma once

#include <string_view>

#include "ramify/poly.hpp"

namespace ramify {

// Grammar: integers, variables, + - * / ^, parentheses. '/' only by constants.
// Positions in ParseError are byte offsets into src.
Poly parse_poly(std::string_view src, const RingPtr& ring);

}  // namespace ramify
