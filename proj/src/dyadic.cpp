#include "cgt/dyadic.hpp"

#include <cassert>
#include <cstdlib>

namespace cgt {

namespace {

// Shifts that would overflow int64 indicate a bug upstream; the engine
// guard keeps every exponent far below this.
void check_shift(std::uint32_t exp) {
    if (exp > 60) throw std::overflow_error("dyadic exponent too large");
}

std::int64_t shifted(std::int64_t num, std::uint32_t by) {
    check_shift(by);
    if (std::llabs(num) > (INT64_MAX >> (by + 1)))
        throw std::overflow_error("dyadic numerator too large");
    return num << by;
}

}  // namespace

Dyadic Dyadic::fraction(std::int64_t num, std::uint32_t exp) {
    check_shift(exp);
    while (exp > 0 && num % 2 == 0) {
        num /= 2;
        --exp;
    }
    Dyadic d;
    d.num_ = num;
    d.exp_ = num == 0 ? 0 : exp;
    return d;
}

std::int64_t Dyadic::integer_part() const {
    return std::llabs(num_) >> exp_;
}

std::int64_t Dyadic::frac_numerator() const {
    return std::llabs(num_) - (integer_part() << exp_);
}

Dyadic Dyadic::operator-() const {
    Dyadic d;
    d.num_ = -num_;
    d.exp_ = exp_;
    return d;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    std::uint32_t e = exp_ > o.exp_ ? exp_ : o.exp_;
    std::int64_t a = shifted(num_, e - exp_);
    std::int64_t b = shifted(o.num_, e - o.exp_);
    return fraction(a + b, e);
}

Dyadic Dyadic::half() const {
    return fraction(num_, exp_ + 1);
}

bool Dyadic::operator<(const Dyadic& o) const {
    std::uint32_t e = exp_ > o.exp_ ? exp_ : o.exp_;
    return shifted(num_, e - exp_) < shifted(o.num_, e - o.exp_);
}

std::int64_t Dyadic::birthday() const {
    if (is_integer()) return std::llabs(num_);
    return integer_part() + 1 + exp_;
}

std::string Dyadic::to_string() const {
    if (is_integer()) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
}

Dyadic Dyadic::simplest_between(const std::optional<Dyadic>& lo,
                                const std::optional<Dyadic>& hi) {
    if (lo && hi && !(*lo < *hi))
        throw std::invalid_argument("simplest_between: empty interval");

    // Integer sweep: pick the integer of least absolute value in the gap.
    auto floor_of = [](const Dyadic& d) {
        std::int64_t q = d.numerator() >> d.exponent();  // arithmetic shift: floor
        return q;
    };
    std::optional<std::int64_t> ilo, ihi;  // integer candidates, inclusive
    if (lo) ilo = floor_of(*lo) + 1;
    if (hi) {
        std::int64_t f = floor_of(*hi);
        ihi = (*hi == Dyadic(f)) ? f - 1 : f;
    }
    if (!ilo && !ihi) return Dyadic(0);
    if (!ilo || !ihi || *ilo <= *ihi) {
        std::int64_t k;
        if (!ilo)
            k = *ihi >= 0 ? 0 : *ihi;
        else if (!ihi)
            k = *ilo <= 0 ? 0 : *ilo;
        else if (*ilo <= 0 && 0 <= *ihi)
            k = 0;
        else
            k = *ilo > 0 ? *ilo : *ihi;
        return Dyadic(k);
    }

    // No integer fits; halve until a grid point lands strictly inside.
    // At the first exponent that admits one, it is unique and odd.
    const Dyadic& a = *lo;
    for (std::uint32_t n = 1; n <= 60; ++n) {
        // k = floor(a * 2^n) + 1, the smallest integer strictly above a*2^n.
        std::int64_t k;
        if (n >= a.exponent())
            k = shifted(a.numerator(), n - a.exponent()) + 1;
        else
            k = (a.numerator() >> (a.exponent() - n)) + 1;
        Dyadic cand = Dyadic::fraction(k, n);
        if (cand < *hi) {
            assert(*lo < cand && k % 2 != 0);
            return cand;
        }
    }
    throw std::overflow_error("simplest_between: interval too fine");
}

}  // namespace cgt
