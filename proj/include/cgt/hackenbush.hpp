#pragma once

#include <string_view>

#include "cgt/forms.hpp"

namespace cgt {

inline constexpr std::size_t kMaxStringEdges = 1u << 10;

// A blue-red-green hackenbush string, written bottom (ground) to top with
// letters B, R, G.  Cutting an edge removes it and everything above, so the
// position after a cut at height i is the prefix of i edges.  Left cuts
// blue or green, Right cuts red or green.  Returns the canonical form.
FormId string_value(Arena& a, std::string_view edges);

// Birthday of the string's value; equals the number of edges.
int string_birthday(Arena& a, std::string_view edges);

}  // namespace cgt
