#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cgt/dyadic.hpp"
#include "cgt/forms.hpp"

namespace cgt {

// Nimber sizes are guarded well below any overflow territory.
inline constexpr std::uint32_t kMaxNimberSize = 1u << 16;

// The unique smallest form equal in value to g: every option canonical, no
// dominated options, no reversible options.  Idempotent.
FormId canonical(Arena& a, FormId g);

// Reduce explicit option lists (of already-canonical ids) to the canonical
// form of {lefts | rights} without interning the intermediate forms.  This
// is the workhorse of day-set enumeration.
FormId canonicalize_options(Arena& a, std::vector<FormId> lefts,
                            std::vector<FormId> rights);

// Birthday of the value of g, i.e. of its canonical form.
int value_birthday(Arena& a, FormId g);

// Canonical form of the number x: integers as chains from 0, non-integers
// as { x - 1/2^n | x + 1/2^n }.
FormId dyadic_form(Arena& a, const Dyadic& x);

// b(x): |x| for integers, integer_part + 1 + exponent otherwise.
std::int64_t number_birthday(const Dyadic& x);

// The dyadic value of g when g is a number, absent otherwise.
std::optional<Dyadic> number_value(Arena& a, FormId g);

// *k = {0, *, ..., *(k-1) | same}.  Throws when k exceeds the size guard.
FormId nimber(Arena& a, std::uint32_t k);

// k when g equals *k in value, absent otherwise.
std::optional<std::uint32_t> nimber_value(Arena& a, FormId g);

// Carry-free binary addition; the nim heap of a sum of nim heaps.
constexpr std::uint32_t nim_sum(std::uint32_t a, std::uint32_t b) { return a ^ b; }

}  // namespace cgt
