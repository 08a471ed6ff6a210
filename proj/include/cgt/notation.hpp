#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cgt/forms.hpp"

namespace cgt {

// Reported for malformed input, with the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Text notation for games:
//
//   braces        {0,*|0}        option lists may nest and may be empty
//   dyadics       3, -7/4        denominators must be powers of two
//   nimbers       *, *2
//   ups/downs     ^, ^3, v2*     ^k is the k-fold sum of ^ = {0|*};
//                                a trailing * adds a star
//   sums          *2+^*, 1-{1|0}
//
// Unicode arrows (U+2191, U+2193) are accepted on input for ^ and v.
// parse returns the denoted form as written; it does not canonicalize.
FormId parse(Arena& a, std::string_view text);

// Canonical rendering of the value of g: numbers as integers or p/q,
// nimbers as *k, everything else braces over the printed canonical options
// (sorted by birthday, then text).  Stable across runs and arenas.
std::string print(Arena& a, FormId g);

}  // namespace cgt
