#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace cgt {

// Exact dyadic rational num / 2^exp, kept in lowest terms: num is odd
// whenever exp > 0, and exp == 0 when the value is an integer multiple
// of 1 (so 0 is stored as 0/2^0).  All arithmetic is exact; there is no
// floating point anywhere in the engine.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(std::int64_t integer) : num_(integer), exp_(0) {}

    // value = num / 2^exp, reduced on construction
    static Dyadic fraction(std::int64_t num, std::uint32_t exp);

    std::int64_t numerator() const { return num_; }
    std::uint32_t exponent() const { return exp_; }

    // Mixed-form pieces: |x| = integer_part + frac_numerator / 2^exponent,
    // with 0 <= frac_numerator < 2^exponent and frac_numerator odd when
    // nonzero.
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }
    std::int64_t integer_part() const;
    std::int64_t frac_numerator() const;

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }

    Dyadic operator-() const;
    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
    Dyadic abs() const { return num_ < 0 ? -*this : *this; }

    // half() is exact: shifts the denominator up.
    Dyadic half() const;

    bool operator==(const Dyadic& o) const = default;
    bool operator<(const Dyadic& o) const;
    bool operator<=(const Dyadic& o) const { return *this < o || *this == o; }
    bool operator>(const Dyadic& o) const { return o < *this; }
    bool operator>=(const Dyadic& o) const { return o <= *this; }

    // Height of the canonical game tree of this number: |x| for integers,
    // integer_part + 1 + exponent otherwise.
    std::int64_t birthday() const;

    // "p/q" in lowest terms, or the bare integer.
    std::string to_string() const;

    // The unique simplest dyadic strictly between the bounds; an absent
    // bound is an open end.  Requires lo < hi when both are present.
    static Dyadic simplest_between(const std::optional<Dyadic>& lo,
                                   const std::optional<Dyadic>& hi);

private:
    std::int64_t num_ = 0;
    std::uint32_t exp_ = 0;
};

}  // namespace cgt

template <>
struct std::hash<cgt::Dyadic> {
    std::size_t operator()(const cgt::Dyadic& d) const {
        std::uint64_t v = static_cast<std::uint64_t>(d.numerator());
        v ^= (static_cast<std::uint64_t>(d.exponent()) + 0x9e3779b97f4a7c15ULL) +
             (v << 6) + (v >> 2);
        return static_cast<std::size_t>(v);
    }
};
