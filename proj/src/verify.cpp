#include "cgt/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "cgt/analysis.hpp"
#include "cgt/canonical.hpp"
#include "cgt/hackenbush.hpp"
#include "cgt/notation.hpp"

namespace cgt {

namespace {

// Fixed seeds keep the randomized batteries reproducible run to run.
constexpr std::uint32_t kDay3PairSeed = 823543;
constexpr std::uint32_t kFigureOneSeed = 52711;

struct Tally {
    int checked = 0;
    int failed = 0;
    std::string first_failure;

    void require(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            if (failed == 0) first_failure = what;
            ++failed;
        }
    }
    CheckResult done(const std::string& name) const {
        std::string detail = std::to_string(checked) + " checks";
        if (failed)
            detail = std::to_string(failed) + " of " + detail +
                     " failed; first: " + first_failure;
        return {name, failed == 0, detail};
    }
};

// Dyadics x = sign * (m + r/2^n) with m <= max_int, n <= max_exp, including
// the integers of that window.
std::vector<Dyadic> dyadic_window(int max_int, int max_exp) {
    std::vector<Dyadic> out;
    for (int m = 0; m <= max_int; ++m) {
        for (int n = 0; n <= max_exp; ++n) {
            for (std::int64_t r = (n == 0 ? 0 : 1); r < (std::int64_t{1} << n);
                 r += 2) {
                Dyadic x = Dyadic(m) + Dyadic::fraction(r, n);
                if (n == 0 && r != 0) continue;
                out.push_back(x);
                if (!x.is_zero()) out.push_back(-x);
                if (n == 0) break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FormId sum_of(Arena& a, const std::vector<FormId>& parts) {
    FormId s = a.zero();
    for (FormId p : parts) s = a.sum(s, p);
    return s;
}

bool mover_first_wins(Outcome o, Player p) {
    return o == Outcome::Next ||
           o == (p == Player::Left ? Outcome::LeftWins : Outcome::RightWins);
}

bool mover_second_wins(Outcome o, Player p) {
    return o == Outcome::Previous ||
           o == (p == Player::Left ? Outcome::LeftWins : Outcome::RightWins);
}

// ---------------------------------------------------------------- birthdays

CheckResult check_dyadic_birthday_theorem(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    for (const Dyadic& x : dyadic_window(3, 4)) {
        FormId f = dyadic_form(a, x);
        t.require(canonical(a, f) == f, "dyadic_form not canonical at " + x.to_string());
        t.require(value_birthday(a, f) == number_birthday(x),
                  "birthday mismatch at " + x.to_string());
        auto v = number_value(a, f);
        t.require(v && *v == x, "value mismatch at " + x.to_string());
    }
    return t.done("dyadic-birthday-theorem");
}

CheckResult check_birthday_instances(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    auto inst = [&](std::int64_t num, std::uint32_t exp, int expected) {
        Dyadic x = Dyadic::fraction(num, exp);
        t.require(number_birthday(x) == expected,
                  "number_birthday(" + x.to_string() + ")");
        t.require(value_birthday(a, dyadic_form(a, x)) == expected,
                  "value_birthday(" + x.to_string() + ")");
    };
    inst(7, 2, 4);
    inst(1, 0, 1);
    inst(3, 2, 3);
    return t.done("birthday-instances");
}

CheckResult check_translation_corollary(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    for (const Dyadic& x : dyadic_window(2, 2)) {
        if (Dyadic(2) < x.abs()) continue;
        for (std::uint32_t n = 0; n <= 4; ++n) {
            FormId g = a.sum(dyadic_form(a, x), nimber(a, n));
            t.require(value_birthday(a, g) ==
                          static_cast<int>(number_birthday(x)) + static_cast<int>(n),
                      "b(x + *n) != b(x) + n at x=" + x.to_string() +
                          " n=" + std::to_string(n));
        }
    }
    return t.done("translation-corollary");
}

// ------------------------------------------------------------------ daysets

CheckResult check_day_sizes(DaySetStore& store) {
    Tally t;
    const std::size_t expected[] = {1, 4, 22};
    for (int d = 0; d <= 2; ++d)
        t.require(store.get(d).values.size() == expected[d],
                  "day " + std::to_string(d) + " size " +
                      std::to_string(store.get(d).values.size()));
    return t.done("day-sizes");
}

CheckResult check_subset_oracle(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    for (int d = 0; d <= 2; ++d) {
        DaySet oracle = enumerate_values_all_subsets(a, d);
        const DaySet& fast = store.get(d);
        t.require(oracle.values == fast.values,
                  "antichain and subset generators disagree on day " +
                      std::to_string(d));
    }
    return t.done("subset-oracle-cross-check");
}

CheckResult check_day3_size(DaySetStore& store) {
    Tally t;
    std::size_t got = store.get(3).values.size();
    t.require(got == 1474, "day 3 size " + std::to_string(got));
    return t.done("day3-size-pin");
}

CheckResult check_dayset_nesting(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    for (int d = 1; d <= 3; ++d) {
        const DaySet& lo = store.get(d - 1);
        const DaySet& hi = store.get(d);
        std::unordered_set<FormId> members(hi.values.begin(), hi.values.end());
        for (FormId v : lo.values)
            t.require(members.count(v) > 0, "day " + std::to_string(d) +
                                                " missing " + print(a, v));
    }
    return t.done("dayset-nesting");
}

CheckResult check_dayset_members(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    for (int d = 0; d <= 3; ++d) {
        const DaySet& prev = store.get(d > 0 ? d - 1 : 0);
        std::unordered_set<FormId> older(prev.values.begin(), prev.values.end());
        for (FormId v : store.get(d).values) {
            t.require(canonical(a, v) == v, "non-canonical member " + print(a, v));
            t.require(value_birthday(a, v) <= d, "birthday exceeds day for " + print(a, v));
            // Values new on day d have canonical birthday exactly d: nothing
            // of smaller birthday is equal in value to them.
            if (d > 0 && !older.count(v))
                t.require(value_birthday(a, v) == d,
                          "new value with small birthday: " + print(a, v));
        }
    }
    return t.done("dayset-members");
}

CheckResult check_outcome_negate_duality(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    auto swap_lr = [](Outcome o) {
        if (o == Outcome::LeftWins) return Outcome::RightWins;
        if (o == Outcome::RightWins) return Outcome::LeftWins;
        return o;
    };
    for (FormId v : store.get(3).values)
        t.require(a.outcome(a.negate(v)) == swap_lr(a.outcome(v)),
                  "duality fails for " + print(a, v));
    return t.done("outcome-negate-duality");
}

CheckResult check_dayset_roundtrip(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    for (int d : {2, 3}) {
        std::stringstream buf;
        save_day_set(a, store.get(d), buf);
        DaySet back = load_day_set(a, buf);
        t.require(back.day == d && back.values == store.get(d).values,
                  "cache round-trip day " + std::to_string(d));
    }
    return t.done("dayset-roundtrip");
}

// ------------------------------------------------------------------ numbers

CheckResult check_numbers_theorem(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    for (const Dyadic& x : dyadic_window(4, 4)) {
        if (number_birthday(x) > 4) continue;
        bool dec = is_decomposable(a, dyadic_form(a, x), store);
        t.require(dec == (Dyadic(1) < x.abs()),
                  "numbers theorem fails at " + x.to_string());
    }
    return t.done("numbers-theorem");
}

CheckResult check_numbers_instances(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    auto probe = [&](std::int64_t num, std::uint32_t exp, bool expect) {
        Dyadic x = Dyadic::fraction(num, exp);
        t.require(is_decomposable(a, dyadic_form(a, x), store) == expect,
                  "instance " + x.to_string());
    };
    probe(1, 1, false);
    probe(1, 0, false);
    probe(-1, 0, false);
    probe(2, 0, true);
    probe(7, 2, true);
    probe(3, 1, true);
    return t.done("numbers-instances");
}

CheckResult check_strong_numbers(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    for (const Dyadic& x : dyadic_window(4, 4)) {
        if (number_birthday(x) > 4 || !(Dyadic(1) < x.abs())) continue;
        auto strong = strong_decompositions(a, dyadic_form(a, x), store);
        t.require(!strong.empty(), "no strong decomposition of " + x.to_string());
        for (const Decomposition& d : strong)
            t.require(number_value(a, d.h).has_value() &&
                          number_value(a, d.j).has_value(),
                      "non-number strong summand of " + x.to_string());
    }
    return t.done("strong-numbers");
}

CheckResult check_number_endgame_rule(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;

    auto form_of = [&](const std::vector<Dyadic>& cs) {
        std::vector<FormId> parts;
        for (const Dyadic& c : cs) parts.push_back(dyadic_form(a, c));
        return sum_of(a, parts);
    };

    // The worked endgame: 1 7/8 - 1 1/2 - 1/4.  Only the first component
    // keeps Left's win.
    std::vector<Dyadic> worked{Dyadic::fraction(15, 3), Dyadic::fraction(-3, 1),
                               Dyadic::fraction(-1, 2)};
    auto best = best_number_move(worked, Player::Left);
    t.require(best && *best == 0, "worked example index");
    for (std::size_t i = 0; i < worked.size(); ++i) {
        auto moved = number_move_result(worked[i], Player::Left);
        t.require(moved.has_value(), "worked example legality");
        std::vector<Dyadic> after = worked;
        after[i] = *moved;
        bool wins = mover_second_wins(a.outcome(form_of(after)), Player::Left);
        t.require(wins == (i == 0), "worked example move " + std::to_string(i));
    }

    auto all_int = best_number_move({Dyadic(3), Dyadic(-2)}, Player::Left);
    t.require(all_int && *all_int == 0, "integer-only case");
    auto losing = best_number_move(
        {Dyadic::fraction(1, 1), Dyadic::fraction(1, 2)}, Player::Right);
    t.require(losing && *losing == 0, "losing mover returns first movable");

    // Exhaustive agreement with game-tree search over <= 3 components.
    std::vector<Dyadic> menu;
    for (auto [num, exp] : std::initializer_list<std::pair<int, int>>{
             {15, 3}, {3, 1}, {3, 2}, {1, 1}, {1, 2}, {1, 0}, {2, 0}}) {
        menu.push_back(Dyadic::fraction(num, exp));
        menu.push_back(-menu.back());
    }
    std::vector<std::vector<Dyadic>> positions;
    for (std::size_t i = 0; i < menu.size(); ++i) {
        positions.push_back({menu[i]});
        for (std::size_t j = i; j < menu.size(); ++j) {
            positions.push_back({menu[i], menu[j]});
            for (std::size_t k = j; k < menu.size(); ++k)
                positions.push_back({menu[i], menu[j], menu[k]});
        }
    }
    for (const auto& pos : positions) {
        FormId f = form_of(pos);
        for (Player pl : {Player::Left, Player::Right}) {
            auto mv = best_number_move(pos, pl);
            if (!mover_first_wins(a.outcome(f), pl)) continue;
            if (!mv) {
                t.require(false, "winning mover got no move");
                continue;
            }
            std::vector<Dyadic> after = pos;
            after[*mv] = *number_move_result(pos[*mv], pl);
            t.require(mover_second_wins(a.outcome(form_of(after)), pl),
                      "rule move loses a won position");
        }
    }
    (void)store;
    return t.done("number-endgame-rule");
}

// ------------------------------------------------------------------ nimbers

CheckResult check_nimbers_theorem(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    for (std::uint32_t k = 1; k <= 4; ++k) {
        bool dec = is_decomposable(a, nimber(a, k), store);
        t.require(dec == (k == 3), "nimbers theorem at k=" + std::to_string(k));
    }
    return t.done("nimbers-theorem");
}

CheckResult check_nim_closure(DaySetStore&) {
    Tally t;
    for (std::uint32_t e = 0; e <= 4; ++e) {
        std::uint32_t p = 1u << e;
        for (std::uint32_t j = 0; j < p; ++j)
            for (std::uint32_t k = j; k < p; ++k)
                t.require(nim_sum(j, k) != p,
                          "closure broken at " + std::to_string(j) + "^" +
                              std::to_string(k));
    }
    return t.done("nim-closure");
}

CheckResult check_strong_star3(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    auto strong = strong_decompositions(a, nimber(a, 3), store);
    t.require(!strong.empty(), "*3 has no strong decomposition");
    bool found = false;
    for (const Decomposition& d : strong) {
        t.require(nimber_value(a, d.h).has_value() && nimber_value(a, d.j).has_value(),
                  "non-nimber strong summand of *3");
        if ((d.h == nimber(a, 1) && d.j == nimber(a, 2)) ||
            (d.h == nimber(a, 2) && d.j == nimber(a, 1)))
            found = true;
    }
    t.require(found, "* + *2 missing from strong decompositions of *3");
    return t.done("strong-star3");
}

CheckResult check_flagship_example(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    FormId g = parse(a, "{0|*2}");
    FormId upstar = parse(a, "^*");
    t.require(a.eq_value(g, a.sum(nimber(a, 2), upstar)), "{0|*2} != *2 + ^*");
    t.require(a.formal_birthday(g) == 3 && value_birthday(a, g) == 3, "b({0|*2}) != 3");

    auto decs = decompose(a, g, store);
    t.require(!decs.empty(), "{0|*2} reported indecomposable");
    FormId h = canonical(a, nimber(a, 2));
    FormId j = canonical(a, upstar);
    bool found = false;
    for (const Decomposition& d : decs)
        if ((d.h == h && d.j == j) || (d.h == j && d.j == h)) found = true;
    t.require(found, "(*2, ^*) missing from decompositions");
    t.require(strong_decompositions(a, g, store).empty(),
              "{0|*2} wrongly strongly decomposable");
    return t.done("flagship-example");
}

CheckResult check_nim_endgame_rule(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    auto mv = best_nim_move({7, 5, 9});
    t.require(mv && mv->first == 2 && mv->second == 2, "(7,5,9) move");
    FormId rest = sum_of(a, {nimber(a, 7), nimber(a, 5), nimber(a, 2)});
    t.require(a.outcome(rest) == Outcome::Previous, "(7,5,2) not a P-position");

    t.require(best_nim_move({5}) == std::make_pair(std::size_t{0}, 0u),
              "single heap");
    t.require(!best_nim_move({3, 3}), "(3,3) should have no winning move");

    for (std::uint32_t x = 0; x <= 8; ++x)
        for (std::uint32_t y = 0; y <= 8; ++y)
            for (std::uint32_t z = 0; z <= 8; ++z) {
                auto m = best_nim_move({x, y, z});
                if ((x ^ y ^ z) == 0) {
                    t.require(!m, "move offered in a P-position");
                } else if (!m) {
                    t.require(false, "no move in an N-position");
                } else {
                    std::uint32_t h[] = {x, y, z};
                    t.require(m->second < h[m->first], "move does not reduce");
                    h[m->first] = m->second;
                    t.require((h[0] ^ h[1] ^ h[2]) == 0, "move not winning");
                }
            }
    (void)store;
    return t.done("nim-endgame-rule");
}

// ----------------------------------------------------------------- distance

CheckResult check_distance_examples(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    auto probe = [&](const char* text, int expected) {
        auto d = right_distance(a, parse(a, text));
        t.require(d && *d == expected, std::string("RD(") + text + ")");
    };
    probe("^*", 1);
    probe("^2", 2);
    probe("{0|{0|-1}}", 1);
    probe("{{1|^2}|0}", 1);
    probe("{^5|{^3|0}}", 3);
    (void)store;
    return t.done("distance-examples");
}

CheckResult check_distance_well_defined(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    for (FormId v : store.get(3).values) {
        bool rd_applies = !(Dyadic(0) < right_stop(a, v));
        auto d = right_distance(a, v);
        t.require(d.has_value() == rd_applies, "RD definedness for " + print(a, v));
        bool ld_applies = !(left_stop(a, v) < Dyadic(0));
        auto e = left_distance(a, v);
        t.require(e.has_value() == ld_applies, "LD definedness for " + print(a, v));
    }
    return t.done("distance-well-defined");
}

CheckResult check_distance_observation(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    for (FormId v : store.get(2).values) {
        auto d = right_distance(a, v);
        if (!d) continue;
        StarComparison sc = star_comparison(a, v);
        if (*d >= 1)
            t.require(sc.kind != StarComparison::LeqSome,
                      "RD>=1 but <= some *k for " + print(a, v));
        if (*d >= 2)
            t.require(sc.kind == StarComparison::GreaterAll,
                      "RD>=2 but not above all nimbers for " + print(a, v));
    }
    return t.done("distance-observation");
}

CheckResult check_distance_steps(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    std::vector<FormId> games = store.get(2).values;
    games.push_back(canonical(a, parse(a, "{^5|{^3|0}}")));
    for (FormId v : games) {
        auto d = right_distance(a, v);
        if (!d || *d < 1) continue;
        // Recompute the per-option scores from the definition and find the
        // optimal Right option (lowest handle wins ties).
        int best_score = -1;
        FormId best_r = kNoForm;
        for (FormId r : a.right_options(v)) {
            if (Dyadic(0) < left_stop(a, r)) continue;
            int score = *right_distance(a, r);
            auto rl = a.left_options(r);
            if (!rl.empty()) {
                int reply = -1;
                for (FormId x : rl) reply = std::max(reply, *right_distance(a, x));
                score = std::max(score, reply - 1);
            }
            if (best_score < 0 || score < best_score) {
                best_score = score;
                best_r = r;
            }
        }
        t.require(best_r != kNoForm && *d == 1 + best_score,
                  "definition recomputation differs at " + print(a, v));
        int rd_opt = *right_distance(a, best_r);
        t.require(*d > rd_opt, "RD did not drop after the optimal move at " + print(a, v));
        if (*d - 1 > rd_opt) {
            bool attained = false;
            bool bounded = true;
            for (FormId x : a.left_options(best_r)) {
                int rdx = *right_distance(a, x);
                if (rdx == *d) attained = true;
                if (rdx > *d) bounded = false;
            }
            t.require(attained && bounded,
                      "delaying reply missing or unbounded at " + print(a, v));
        }
    }
    return t.done("distance-steps");
}

// The definition applied literally to a form, without canonicalizing.
// Reference path for the value-invariance check.
std::optional<int> rd_reference(Arena& a, FormId g) {
    if (Dyadic(0) < right_stop(a, g)) return std::nullopt;
    const std::uint32_t bound =
        static_cast<std::uint32_t>(value_birthday(a, g)) + 1;
    for (std::uint32_t k = 0; k <= bound; ++k)
        if (a.leq(g, nimber(a, k))) return 0;
    int best = -1;
    for (FormId r : a.right_options(g)) {
        if (Dyadic(0) < left_stop(a, r)) continue;
        int v = *rd_reference(a, r);
        auto rl = a.left_options(r);
        if (!rl.empty()) {
            int reply = -1;
            for (FormId x : rl) reply = std::max(reply, *rd_reference(a, x));
            v = std::max(v, reply - 1);
        }
        if (best < 0 || v < best) best = v;
    }
    return 1 + best;
}

CheckResult check_distance_value_invariance(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    // Every form with options among the day-1 values, canonical or not.
    const std::vector<FormId>& p = store.get(1).values;
    for (std::uint32_t lmask = 0; lmask < 16; ++lmask) {
        for (std::uint32_t rmask = 0; rmask < 16; ++rmask) {
            std::vector<FormId> l, r;
            for (std::size_t i = 0; i < 4; ++i) {
                if (lmask & (1u << i)) l.push_back(p[i]);
                if (rmask & (1u << i)) r.push_back(p[i]);
            }
            FormId g = a.make_form(std::move(l), std::move(r));
            auto ref = rd_reference(a, g);
            auto eng = right_distance(a, g);
            t.require(ref == eng, "form-level RD differs at " + print(a, g));
        }
    }
    return t.done("distance-value-invariance");
}

// -------------------------------------------------------------------- stops

void stops_theorem_items(Arena& a, FormId g, FormId h, Tally& t,
                         const std::string& label) {
    Dyadic lsg = left_stop(a, g), rsg = right_stop(a, g);
    t.require(left_stop(a, a.negate(g)) == -rsg, "item 1 LS at " + label);
    t.require(right_stop(a, a.negate(g)) == -lsg, "item 1 RS at " + label);
    t.require(rsg <= lsg, "item 2 at " + label);

    static const Dyadic xs[] = {Dyadic(-1), Dyadic::fraction(-1, 1), Dyadic(0),
                                Dyadic::fraction(1, 1), Dyadic(1)};
    for (const Dyadic& x : xs) {
        FormId xf = dyadic_form(a, x);
        if (lsg < x)
            t.require(a.leq(g, xf) && !a.leq(xf, g), "item 3 (<) at " + label);
        if (x < rsg)
            t.require(a.leq(xf, g) && !a.leq(g, xf), "item 3 (>) at " + label);
        FormId gx = a.sum(g, xf);
        t.require(left_stop(a, gx) == lsg + x, "item 4 LS at " + label);
        t.require(right_stop(a, gx) == rsg + x, "item 4 RS at " + label);
    }

    Dyadic lsh = left_stop(a, h), rsh = right_stop(a, h);
    FormId gh = a.sum(g, h);
    Dyadic lsgh = left_stop(a, gh), rsgh = right_stop(a, gh);
    t.require(lsg + rsh <= lsgh && lsgh <= lsg + lsh, "item 5 at " + label);
    t.require(rsg + rsh <= rsgh && rsgh <= lsg + rsh, "item 6 at " + label);
}

CheckResult check_stops_theorem_day2(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    const auto& vals = store.get(2).values;
    for (FormId g : vals)
        for (FormId h : vals)
            stops_theorem_items(a, g, h, t, print(a, g) + " / " + print(a, h));
    return t.done("stops-theorem-day2");
}

CheckResult check_stops_theorem_day3(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    const auto& vals = store.get(3).values;
    std::mt19937 rng(kDay3PairSeed);
    std::uniform_int_distribution<std::size_t> pick(0, vals.size() - 1);
    for (int i = 0; i < 500; ++i) {
        FormId g = vals[pick(rng)], h = vals[pick(rng)];
        stops_theorem_items(a, g, h, t, print(a, g) + " / " + print(a, h));
    }
    return t.done("stops-theorem-day3");
}

void avoidance_item(Arena& a, FormId g, Tally& t) {
    if (number_value(a, g)) return;
    static const Dyadic xs[] = {Dyadic::fraction(-1, 1), Dyadic::fraction(1, 1),
                                Dyadic(-1), Dyadic(1)};
    for (const Dyadic& x : xs) {
        FormId xf = dyadic_form(a, x);
        Outcome o = a.outcome(a.sum(g, xf));
        if (o != Outcome::LeftWins && o != Outcome::Next) continue;
        bool has = false;
        for (FormId gl : a.left_options(g))
            if (a.leq(a.zero(), a.sum(gl, xf))) {
                has = true;
                break;
            }
        t.require(has, "no number-avoiding winning move at " + print(a, g) +
                           " + " + x.to_string());
    }
}

CheckResult check_number_avoidance(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    for (FormId g : store.get(2).values) avoidance_item(a, g, t);
    const auto& vals = store.get(3).values;
    std::mt19937 rng(kDay3PairSeed);
    std::uniform_int_distribution<std::size_t> pick(0, vals.size() - 1);
    for (int i = 0; i < 500; ++i) avoidance_item(a, vals[pick(rng)], t);
    return t.done("number-avoidance");
}

// -------------------------------------------------------------- starsystems

bool prediction_consistent(Arena& a, FormId g, FormId h, std::uint32_t k,
                           Tally& t, const std::string& label) {
    auto p = star_system_prediction(a, {g, h, k});
    Outcome o = a.outcome(sum_of(a, {g, h, nimber(a, k)}));
    if (p == Player::Right)
        t.require(mover_first_wins(o, Player::Right), "right prediction at " + label);
    else if (p == Player::Left)
        t.require(mover_first_wins(o, Player::Left), "left prediction at " + label);
    else
        t.require(true, label);
    return o == Outcome::Previous;
}

CheckResult check_two_ahead_soundness(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    const auto& vals = store.get(2).values;
    for (FormId g : vals) {
        if (Dyadic(0) < right_stop(a, g)) continue;
        for (FormId h : vals) {
            if (left_stop(a, h) < Dyadic(0)) continue;
            for (std::uint32_t k = 0; k <= 3; ++k)
                prediction_consistent(a, g, h, k, t,
                                      print(a, g) + "," + print(a, h) + ",*" +
                                          std::to_string(k));
        }
    }
    return t.done("two-ahead-soundness");
}

std::vector<FormId> infinitesimal_day2(DaySetStore& store) {
    Arena& a = store.arena();
    std::vector<FormId> out;
    for (FormId v : store.get(2).values)
        if (left_stop(a, v).is_zero() && right_stop(a, v).is_zero())
            out.push_back(v);
    return out;
}

CheckResult check_two_ahead_infinitesimal(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    for (FormId g : infinitesimal_day2(store))
        for (FormId h : infinitesimal_day2(store))
            for (std::uint32_t k = 0; k <= 3; ++k)
                prediction_consistent(a, g, h, k, t,
                                      print(a, g) + "," + print(a, h) + ",*" +
                                          std::to_string(k));
    return t.done("two-ahead-infinitesimal");
}

CheckResult check_zero_sum_corollary(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    for (FormId g : infinitesimal_day2(store)) {
        for (FormId h : infinitesimal_day2(store)) {
            for (std::uint32_t k = 0; k <= 3; ++k) {
                if (a.outcome(sum_of(a, {g, h, nimber(a, k)})) != Outcome::Previous)
                    continue;
                t.require(left_distance(a, h) == right_distance(a, g) &&
                              left_distance(a, g) == right_distance(a, h),
                          "distances differ in zero sum " + print(a, g) + "+" +
                              print(a, h) + "+*" + std::to_string(k));
            }
        }
    }
    return t.done("zero-sum-corollary");
}

CheckResult check_star_system_examples(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    FormId dup = parse(a, "^2"), ddown = parse(a, "v2");
    auto p1 = star_system_prediction(a, {a.zero(), dup, 0});
    t.require(p1 == Player::Left && a.outcome(dup) == Outcome::LeftWins,
              "0 + ^2 + *0");
    auto p2 = star_system_prediction(a, {a.zero(), ddown, 1});
    t.require(p2 == Player::Right &&
                  a.outcome(a.sum(ddown, nimber(a, 1))) == Outcome::RightWins,
              "0 + v2 + *1");
    auto p3 = star_system_prediction(a, {parse(a, "^*"), parse(a, "v*"), 0});
    t.require(!p3.has_value(), "^* + v* + *0 should be unpredicted");
    (void)store;
    return t.done("star-system-examples");
}

// --------------------------------------------------------------- hackenbush

CheckResult check_hackenbush_birthdays(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    std::string s;
    std::function<void(std::size_t)> rec = [&](std::size_t len) {
        t.require(string_birthday(a, s) == static_cast<int>(s.size()),
                  "b != edge count for \"" + s + "\"");
        if (s.size() == len) return;
        for (char c : {'B', 'R', 'G'}) {
            s.push_back(c);
            rec(len);
            s.pop_back();
        }
    };
    rec(7);
    return t.done("hackenbush-birthdays");
}

CheckResult check_star8_string_sums(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    std::mt19937 rng(kFigureOneSeed);
    auto random_string = [&rng](std::size_t max_len) {
        std::uniform_int_distribution<std::size_t> len(0, max_len);
        std::uniform_int_distribution<int> color(0, 2);
        std::string s(len(rng), ' ');
        for (char& c : s) c = "BRG"[color(rng)];
        return s;
    };
    FormId star8 = nimber(a, 8);
    for (int i = 0; i < 200; ++i) {
        std::string hs = random_string(6), js = random_string(7);
        Outcome o = a.outcome(
            sum_of(a, {star8, string_value(a, hs), string_value(a, js)}));
        t.require(o != Outcome::Previous,
                  "*8 + \"" + hs + "\" + \"" + js + "\" is a P-position");
    }
    return t.done("star8-string-sums");
}

CheckResult check_ordinal_translation(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    for (int m = 0; m <= 3; ++m) {
        for (std::uint32_t n = 0; n <= 4; ++n) {
            std::string s = std::string(m, 'B') + std::string(n, 'G');
            FormId v = string_value(a, s);
            FormId expect = canonical(a, a.sum(dyadic_form(a, Dyadic(m)), nimber(a, n)));
            t.require(v == expect, "value mismatch for \"" + s + "\"");
            t.require(string_birthday(a, s) == m + static_cast<int>(n),
                      "birthday mismatch for \"" + s + "\"");
        }
    }
    return t.done("ordinal-translation");
}

CheckResult check_br_bottom_colors(DaySetStore& store) {
    Arena& a = store.arena();
    Tally t;
    std::string s;
    std::function<void()> rec = [&]() {
        if (!s.empty()) {
            auto x = number_value(a, string_value(a, s));
            t.require(x.has_value(), "BR string is not a number: \"" + s + "\"");
            if (x) {
                bool small = !(Dyadic(1) < x->abs());
                bool mixed = s.size() <= 1 || s[0] != s[1];
                t.require(small == mixed, "indecomposability shape at \"" + s + "\"");
            }
        }
        if (s.size() == 5) return;
        for (char c : {'B', 'R'}) {
            s.push_back(c);
            rec();
            s.pop_back();
        }
    };
    rec();
    return t.done("br-bottom-colors");
}

// ----------------------------------------------------------------- registry

using CheckFn = CheckResult (*)(DaySetStore&);

struct Entry {
    const char* name;
    const char* suite;
    CheckFn fn;
};

constexpr Entry kRegistry[] = {
    {"dyadic-birthday-theorem", "birthdays", check_dyadic_birthday_theorem},
    {"birthday-instances", "birthdays", check_birthday_instances},
    {"translation-corollary", "birthdays", check_translation_corollary},
    {"day-sizes", "daysets", check_day_sizes},
    {"subset-oracle-cross-check", "daysets", check_subset_oracle},
    {"day3-size-pin", "daysets", check_day3_size},
    {"dayset-nesting", "daysets", check_dayset_nesting},
    {"dayset-members", "daysets", check_dayset_members},
    {"outcome-negate-duality", "daysets", check_outcome_negate_duality},
    {"dayset-roundtrip", "daysets", check_dayset_roundtrip},
    {"numbers-theorem", "numbers", check_numbers_theorem},
    {"numbers-instances", "numbers", check_numbers_instances},
    {"strong-numbers", "numbers", check_strong_numbers},
    {"number-endgame-rule", "numbers", check_number_endgame_rule},
    {"nimbers-theorem", "nimbers", check_nimbers_theorem},
    {"nim-closure", "nimbers", check_nim_closure},
    {"strong-star3", "nimbers", check_strong_star3},
    {"flagship-example", "nimbers", check_flagship_example},
    {"nim-endgame-rule", "nimbers", check_nim_endgame_rule},
    {"distance-examples", "distance", check_distance_examples},
    {"distance-well-defined", "distance", check_distance_well_defined},
    {"distance-observation", "distance", check_distance_observation},
    {"distance-steps", "distance", check_distance_steps},
    {"distance-value-invariance", "distance", check_distance_value_invariance},
    {"stops-theorem-day2", "stops", check_stops_theorem_day2},
    {"stops-theorem-day3", "stops", check_stops_theorem_day3},
    {"number-avoidance", "stops", check_number_avoidance},
    {"two-ahead-soundness", "starsystems", check_two_ahead_soundness},
    {"two-ahead-infinitesimal", "starsystems", check_two_ahead_infinitesimal},
    {"zero-sum-corollary", "starsystems", check_zero_sum_corollary},
    {"star-system-examples", "starsystems", check_star_system_examples},
    {"hackenbush-birthdays", "hackenbush", check_hackenbush_birthdays},
    {"star8-string-sums", "hackenbush", check_star8_string_sums},
    {"ordinal-translation", "hackenbush", check_ordinal_translation},
    {"br-bottom-colors", "hackenbush", check_br_bottom_colors},
};

}  // namespace

std::vector<std::string> suite_names() {
    return {"birthdays", "daysets",     "numbers",    "nimbers", "distance",
            "stops",     "starsystems", "hackenbush", "all"};
}

bool is_suite(const std::string& name) {
    auto names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckResult> run_suite(DaySetStore& store, const std::string& suite) {
    if (!is_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
    std::vector<CheckResult> out;
    for (const Entry& e : kRegistry)
        if (suite == "all" || suite == e.suite) out.push_back(e.fn(store));
    return out;
}

CheckResult run_check(DaySetStore& store, const std::string& check) {
    for (const Entry& e : kRegistry)
        if (check == e.name) return e.fn(store);
    throw std::invalid_argument("unknown check: " + check);
}

}  // namespace cgt
