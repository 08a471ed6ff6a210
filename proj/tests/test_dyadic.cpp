#include <doctest.h>

#include <random>
#include <vector>

#include "cgt/dyadic.hpp"

using cgt::Dyadic;

TEST_CASE("construction normalizes to lowest terms") {
    Dyadic d = Dyadic::fraction(6, 3);  // 6/8
    CHECK(d.numerator() == 3);
    CHECK(d.exponent() == 2);
    CHECK(d == Dyadic::fraction(3, 2));

    Dyadic z = Dyadic::fraction(0, 7);
    CHECK(z.is_zero());
    CHECK(z.exponent() == 0);

    Dyadic i = Dyadic::fraction(8, 2);
    CHECK(i.is_integer());
    CHECK(i.numerator() == 2);
}

TEST_CASE("mixed-form pieces") {
    Dyadic d = Dyadic::fraction(-15, 3);  // -15/8 = -(1 + 7/8)
    CHECK(d.sign() == -1);
    CHECK(d.integer_part() == 1);
    CHECK(d.frac_numerator() == 7);
    CHECK(d.exponent() == 3);
    CHECK(d.frac_numerator() % 2 == 1);
}

TEST_CASE("arithmetic and order are exact") {
    Dyadic a = Dyadic::fraction(7, 2);   // 7/4
    Dyadic b = Dyadic::fraction(-3, 1);  // -3/2
    CHECK(a + b == Dyadic::fraction(1, 2));
    CHECK(a - a == Dyadic(0));
    CHECK(-(-a) == a);
    CHECK(b < a);
    CHECK(a.half() == Dyadic::fraction(7, 3));

    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-64, 64);
    std::uniform_int_distribution<std::uint32_t> exp(0, 5);
    for (int i = 0; i < 500; ++i) {
        Dyadic x = Dyadic::fraction(num(rng), exp(rng));
        Dyadic y = Dyadic::fraction(num(rng), exp(rng));
        CHECK(x + y == y + x);
        CHECK((x + y) - y == x);
        CHECK((x + y).exponent() <= std::max(x.exponent(), y.exponent()));
        if (x.frac_numerator() > 0) {
            CHECK(x.frac_numerator() % 2 == 1);
            CHECK(x.frac_numerator() < (std::int64_t{1} << x.exponent()));
        }
    }
}

TEST_CASE("number birthdays") {
    CHECK(Dyadic(0).birthday() == 0);
    CHECK(Dyadic(1).birthday() == 1);
    CHECK(Dyadic(-3).birthday() == 3);
    CHECK(Dyadic::fraction(7, 2).birthday() == 4);   // 7/4 = 1 + 3/4
    CHECK(Dyadic::fraction(3, 2).birthday() == 3);   // 3/4
    CHECK(Dyadic::fraction(-1, 1).birthday() == 2);  // -1/2
}

TEST_CASE("to_string") {
    CHECK(Dyadic(5).to_string() == "5");
    CHECK(Dyadic::fraction(-7, 2).to_string() == "-7/4");
    CHECK(Dyadic::fraction(2, 2).to_string() == "1/2");
}

namespace {

// Oracle: enumerate every dyadic with exponent <= 8 in a small window and
// return the one of least birthday inside (lo, hi).
Dyadic simplest_by_enumeration(const std::optional<Dyadic>& lo,
                               const std::optional<Dyadic>& hi) {
    std::optional<Dyadic> best;
    for (std::uint32_t e = 0; e <= 8; ++e) {
        for (std::int64_t n = -16 << e; n <= (16 << e); ++n) {
            Dyadic x = Dyadic::fraction(n, e);
            if (lo && !(*lo < x)) continue;
            if (hi && !(x < *hi)) continue;
            if (!best || x.birthday() < best->birthday()) best = x;
        }
    }
    REQUIRE(best.has_value());
    return *best;
}

}  // namespace

TEST_CASE("simplest_between matches the brute-force simplicity oracle") {
    std::vector<std::optional<Dyadic>> bounds{
        std::nullopt,           Dyadic(-3),
        Dyadic(0),              Dyadic(2),
        Dyadic::fraction(1, 1), Dyadic::fraction(-5, 2),
        Dyadic::fraction(5, 3), Dyadic::fraction(11, 3),
        Dyadic::fraction(3, 2), Dyadic::fraction(-15, 3)};
    int tried = 0;
    for (const auto& lo : bounds) {
        for (const auto& hi : bounds) {
            if (lo && hi && !(*lo < *hi)) continue;
            Dyadic got = Dyadic::simplest_between(lo, hi);
            CHECK(got == simplest_by_enumeration(lo, hi));
            ++tried;
        }
    }
    CHECK(tried > 50);
}

TEST_CASE("simplest_between pinned cases") {
    auto simplest = [](Dyadic lo, Dyadic hi) {
        return Dyadic::simplest_between(lo, hi);
    };
    CHECK(simplest(Dyadic(-1), Dyadic(1)) == Dyadic(0));
    CHECK(simplest(Dyadic(1), Dyadic(2)) == Dyadic::fraction(3, 1));
    CHECK(simplest(Dyadic(0), Dyadic::fraction(1, 1)) == Dyadic::fraction(1, 2));
    CHECK(simplest(Dyadic::fraction(5, 2), Dyadic::fraction(11, 3)) ==
          Dyadic::fraction(21, 4));
    CHECK(Dyadic::simplest_between(Dyadic(3), std::nullopt) == Dyadic(4));
    CHECK(Dyadic::simplest_between(std::nullopt, Dyadic(-1)) == Dyadic(-2));
    CHECK(Dyadic::simplest_between(std::nullopt, std::nullopt) == Dyadic(0));
    CHECK_THROWS_AS(Dyadic::simplest_between(Dyadic(1), Dyadic(1)),
                    std::invalid_argument);
}
