#include <doctest.h>

#include "cgt/canonical.hpp"
#include "cgt/notation.hpp"
#include "helpers.hpp"

using namespace cgt;
using namespace cgt_test;

TEST_CASE("parse: atoms") {
    Arena a;
    Day1 d = day1(a);
    CHECK(parse(a, "0") == d.zero);
    CHECK(parse(a, "*") == d.star);
    CHECK(parse(a, "*2") == nimber(a, 2));
    CHECK(parse(a, "7/4") == dyadic_form(a, Dyadic::fraction(7, 2)));
    CHECK(parse(a, "-1/2") == dyadic_form(a, Dyadic::fraction(-1, 1)));
    CHECK(parse(a, "2/4") == dyadic_form(a, Dyadic::fraction(1, 1)));
    CHECK(parse(a, "^") == a.make_form({d.zero}, {d.star}));
    CHECK(parse(a, "v") == a.negate(parse(a, "^")));
    CHECK(parse(a, "↑") == parse(a, "^"));
    CHECK(parse(a, "↓*") == parse(a, "v*"));
}

TEST_CASE("parse: braces denote the literal form") {
    Arena a;
    Day1 d = day1(a);
    FormId g = parse(a, "{0|*2}");
    CHECK(a.left_options(g).size() == 1);
    CHECK(a.left_options(g)[0] == d.zero);
    CHECK(a.right_options(g).size() == 1);
    CHECK(a.right_options(g)[0] == nimber(a, 2));

    CHECK(parse(a, "{|}") == d.zero);
    CHECK(parse(a, "{1,0|}") == a.make_form({d.zero, d.one}, {}));
    CHECK(parse(a, "{ 0 , * | 0 }") == a.make_form({d.zero, d.star}, {d.zero}));
}

TEST_CASE("parse: sums, differences, up multiples") {
    Arena a;
    CHECK(a.eq_value(parse(a, "^*"), a.sum(parse(a, "^"), parse(a, "*"))));
    CHECK(parse(a, "^*") == a.sum(parse(a, "^"), nimber(a, 1)));
    CHECK(parse(a, "^3") == a.sum(parse(a, "^"), a.sum(parse(a, "^"), parse(a, "^"))));
    CHECK(a.eq_value(parse(a, "1-1"), a.zero()));
    CHECK(parse(a, "*2+^*") == a.sum(nimber(a, 2), parse(a, "^*")));
    CHECK(a.eq_value(parse(a, "-{1|0}"), parse(a, "{0|-1}")));
}

TEST_CASE("parse: errors carry positions") {
    Arena a;
    CHECK_THROWS_AS(parse(a, ""), ParseError);
    CHECK_THROWS_AS(parse(a, "{0|"), ParseError);
    CHECK_THROWS_AS(parse(a, "{0,|0}"), ParseError);
    CHECK_THROWS_AS(parse(a, "1/3"), ParseError);
    CHECK_THROWS_AS(parse(a, "*99999"), ParseError);
    CHECK_THROWS_AS(parse(a, "1 2"), ParseError);

    try {
        parse(a, "1/6");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
        CHECK(std::string(e.what()).find("power of two") != std::string::npos);
    }
}

TEST_CASE("print: canonical text") {
    Arena a;
    CHECK(print(a, nimber(a, 2)) == "*2");
    CHECK(print(a, nimber(a, 1)) == "*");
    CHECK(print(a, dyadic_form(a, Dyadic::fraction(3, 2))) == "3/4");
    CHECK(print(a, dyadic_form(a, Dyadic(-2))) == "-2");
    CHECK(print(a, parse(a, "{*|*}")) == "0");
    CHECK(print(a, parse(a, "^")) == "{0|*}");
    CHECK(print(a, parse(a, "^*")) == "{0,*|0}");
    CHECK(print(a, parse(a, "1+*")) == "{1|1}");
}

TEST_CASE("round trip: day-2 values print and reparse to themselves") {
    Arena a;
    for (FormId v : day2_values(a)) {
        std::string text = print(a, v);
        CHECK(parse(a, text) == v);
        CHECK(print(a, parse(a, text)) == text);
    }
}

TEST_CASE("printing is stable across arenas") {
    Arena a1, a2;
    auto v1 = day2_values(a1);
    auto v2 = day2_values(a2);
    REQUIRE(v1.size() == v2.size());
    std::vector<std::string> s1, s2;
    for (FormId v : v1) s1.push_back(print(a1, v));
    for (FormId v : v2) s2.push_back(print(a2, v));
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    CHECK(s1 == s2);
}
