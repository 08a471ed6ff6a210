#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cgt/decomposition.hpp"
#include "cgt/notation.hpp"
#include "helpers.hpp"

using namespace cgt;
using namespace cgt_test;

namespace {

bool contains_pair(Arena& a, const std::vector<Decomposition>& decs, FormId x,
                   FormId y) {
    FormId cx = canonical(a, x), cy = canonical(a, y);
    for (const Decomposition& d : decs)
        if ((d.h == cx && d.j == cy) || (d.h == cy && d.j == cx)) return true;
    return false;
}

}  // namespace

TEST_CASE("enumerate_values: days 0 and 1 are the hand-computed sets") {
    Arena a;
    Day1 d = day1(a);
    DaySet d0 = enumerate_values(a, 0);
    CHECK(d0.values == std::vector<FormId>{d.zero});

    DaySet d1 = enumerate_values(a, 1);
    CHECK(dedupe(d1.values) == dedupe({d.zero, d.one, d.neg_one, d.star}));
}

TEST_CASE("enumerate_values: antichain and subset generators agree") {
    Arena a;
    for (int day = 0; day <= 2; ++day) {
        DaySet fast = enumerate_values(a, day);
        DaySet slow = enumerate_values_all_subsets(a, day);
        CHECK(fast.values == slow.values);
    }
    CHECK(enumerate_values(a, 2).values.size() == 22);
    CHECK_THROWS_AS(enumerate_values(a, 4), std::out_of_range);
    CHECK_THROWS_AS(enumerate_values_all_subsets(a, 3), std::out_of_range);
}

TEST_CASE("enumerate_values: day 3 count and ordering") {
    Arena a;
    DaySet d3 = enumerate_values(a, 3);
    CHECK(d3.values.size() == 1474);

    std::vector<std::string> lines;
    for (FormId v : d3.values) lines.push_back(print(a, v));
    std::vector<std::string> sorted = lines;
    std::sort(sorted.begin(), sorted.end());
    CHECK(lines == sorted);  // deterministic, notation-sorted

    DaySet d2 = enumerate_values(a, 2);
    std::unordered_set<FormId> members(d3.values.begin(), d3.values.end());
    for (FormId v : d2.values) CHECK(members.count(v) == 1);
}

TEST_CASE("day-set cache files round trip") {
    Arena a;
    DaySetStore store(a);
    const DaySet& d2 = store.get(2);

    std::stringstream buf;
    save_day_set(a, d2, buf);
    std::string first_line;
    std::getline(buf, first_line);
    CHECK(first_line == "dayset 2 22");
    buf.seekg(0);
    DaySet back = load_day_set(a, buf);
    CHECK(back.day == 2);
    CHECK(back.values == d2.values);

    const char* path = "dayset-roundtrip-test.txt";
    {
        std::ofstream out(path);
        save_day_set(a, d2, out);
    }
    DaySetStore other(a);
    other.load_file(path);
    CHECK(other.get(2).values == d2.values);
    std::remove(path);

    std::stringstream bad("dayset 2 3\n0\n");
    CHECK_THROWS_AS(load_day_set(a, bad), std::runtime_error);
}

TEST_CASE("decompose: nimbers") {
    Arena a;
    DaySetStore store(a);

    auto star3 = decompose(a, nimber(a, 3), store);
    CHECK(contains_pair(a, star3, nimber(a, 1), nimber(a, 2)));
    CHECK(is_decomposable(a, nimber(a, 3), store));

    CHECK(!is_decomposable(a, nimber(a, 1), store));
    CHECK(!is_decomposable(a, nimber(a, 2), store));
    CHECK(!is_decomposable(a, nimber(a, 4), store));

    auto strong = strong_decompositions(a, nimber(a, 3), store);
    REQUIRE(strong.size() == 1);
    CHECK(strong[0].h == nimber(a, 1));
    CHECK(strong[0].j == nimber(a, 2));

    CHECK_THROWS_AS(decompose(a, nimber(a, 5), store), std::out_of_range);
}

TEST_CASE("decompose: the {0|*2} example") {
    Arena a;
    DaySetStore store(a);
    FormId g = parse(a, "{0|*2}");
    auto decs = decompose(a, g, store);
    CHECK(contains_pair(a, decs, nimber(a, 2), parse(a, "^*")));
    CHECK(strong_decompositions(a, g, store).empty());
}

TEST_CASE("decompose: numbers") {
    Arena a;
    DaySetStore store(a);
    CHECK(decompose(a, parse(a, "1/2"), store).empty());
    CHECK(decompose(a, parse(a, "1"), store).empty());
    CHECK(decompose(a, parse(a, "-1"), store).empty());

    auto two = decompose(a, parse(a, "2"), store);
    CHECK(contains_pair(a, two, parse(a, "1"), parse(a, "1")));

    auto sevenq = strong_decompositions(a, parse(a, "7/4"), store);
    CHECK(contains_pair(a, sevenq, parse(a, "1"), parse(a, "3/4")));
    for (const Decomposition& d : sevenq)
        CHECK(a.formal_birthday(d.h) + a.formal_birthday(d.j) == 4);
}

TEST_CASE("decompose: every reported pair satisfies its contract") {
    Arena a;
    DaySetStore store(a);
    for (const char* text : {"7/4", "2", "*3", "{0|*2}", "3/2", "^+^*"}) {
        FormId g = parse(a, text);
        int b = value_birthday(a, g);
        for (const Decomposition& d : decompose(a, g, store)) {
            CHECK(a.eq_value(a.sum(d.h, d.j), g));
            CHECK(value_birthday(a, d.h) < b);
            CHECK(value_birthday(a, d.j) < b);
            CHECK(d.h <= d.j);
            CHECK(d.strong == (a.formal_birthday(d.h) + a.formal_birthday(d.j) == b &&
                               d.h != a.zero() && d.j != a.zero()));
        }
    }
}

TEST_CASE("decompose: form-level reading measures the given form") {
    Arena a;
    DaySetStore store(a);
    FormId g = parse(a, "{*|*}");  // value 0, formal birthday 2
    CHECK(decompose(a, g, store).empty());  // the value 0 has no summands
    auto form_level = decompose(a, g, store, true);
    CHECK(contains_pair(a, form_level, a.zero(), a.zero()));
}

TEST_CASE("best_number_move") {
    Arena a;
    std::vector<Dyadic> worked{Dyadic::fraction(15, 3), Dyadic::fraction(-3, 1),
                               Dyadic::fraction(-1, 2)};
    CHECK(best_number_move(worked, Player::Left) == std::size_t{0});

    CHECK(best_number_move({Dyadic(3), Dyadic(-2)}, Player::Left) == std::size_t{0});
    CHECK(best_number_move({Dyadic::fraction(1, 1), Dyadic::fraction(1, 2)},
                           Player::Right) == std::size_t{0});

    // Left cannot move in a sum of negative integers.
    CHECK(!best_number_move({Dyadic(-3), Dyadic(-2)}, Player::Left).has_value());
    CHECK_THROWS_AS(best_number_move({}, Player::Left), std::invalid_argument);

    CHECK(number_move_result(Dyadic(3), Player::Left) == Dyadic(2));
    CHECK(!number_move_result(Dyadic(3), Player::Right).has_value());
    CHECK(!number_move_result(Dyadic(0), Player::Left).has_value());
    CHECK(number_move_result(Dyadic::fraction(-3, 1), Player::Right) ==
          Dyadic(-1));
}

TEST_CASE("best_nim_move") {
    Arena a;
    auto mv = best_nim_move({7, 5, 9});
    REQUIRE(mv.has_value());
    CHECK(mv->first == 2);
    CHECK(mv->second == 2);
    CHECK(a.outcome(a.sum(nimber(a, 7), a.sum(nimber(a, 5), nimber(a, 2)))) ==
          Outcome::Previous);

    CHECK(best_nim_move({6}) == std::make_pair(std::size_t{0}, 0u));
    CHECK(!best_nim_move({3, 3}).has_value());
    CHECK(!best_nim_move({}).has_value());
}
