#include "cgt/decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "cgt/canonical.hpp"
#include "cgt/notation.hpp"

namespace cgt {

namespace {

void check_day(int day) {
    if (day < 0 || day > kMaxDaySetDay)
        throw std::out_of_range("day-set enumeration is guarded to days 0..3");
}

DaySet finish_day_set(Arena& a, int day, const std::unordered_set<FormId>& values) {
    std::vector<std::pair<std::string, FormId>> keyed;
    keyed.reserve(values.size());
    for (FormId v : values) keyed.push_back({print(a, v), v});
    std::sort(keyed.begin(), keyed.end());
    DaySet ds{day, {}};
    ds.values.reserve(keyed.size());
    for (auto& [text, v] : keyed) ds.values.push_back(v);
    return ds;
}

// All antichains (as index lists) of the poset given by its comparability
// relation, the empty one included.
void collect_antichains(const std::vector<std::vector<bool>>& comparable,
                        std::size_t start, std::vector<std::size_t>& current,
                        std::vector<std::vector<std::size_t>>& out) {
    out.push_back(current);
    for (std::size_t i = start; i < comparable.size(); ++i) {
        bool ok = true;
        for (std::size_t j : current) {
            if (comparable[i][j]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            current.push_back(i);
            collect_antichains(comparable, i + 1, current, out);
            current.pop_back();
        }
    }
}

}  // namespace

DaySet enumerate_values(Arena& a, int day) {
    check_day(day);
    if (day == 0) return DaySet{0, {a.zero()}};

    DaySet prev = enumerate_values(a, day - 1);
    const std::vector<FormId>& p = prev.values;
    const std::size_t n = p.size();

    std::vector<std::vector<bool>> comparable(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && a.leq(p[i], p[j])) comparable[i][j] = comparable[j][i] = true;

    // Dominated options never survive canonicalization, so option sets that
    // are antichains already reach every value born by `day`.
    std::vector<std::vector<std::size_t>> chains;
    std::vector<std::size_t> scratch;
    collect_antichains(comparable, 0, scratch, chains);

    std::unordered_set<FormId> values;
    std::vector<FormId> lefts, rights;
    for (const auto& lc : chains) {
        lefts.clear();
        for (std::size_t i : lc) lefts.push_back(p[i]);
        for (const auto& rc : chains) {
            rights.clear();
            for (std::size_t i : rc) rights.push_back(p[i]);
            values.insert(canonicalize_options(a, lefts, rights));
        }
    }
    return finish_day_set(a, day, values);
}

DaySet enumerate_values_all_subsets(Arena& a, int day) {
    check_day(day);
    if (day > 2)
        throw std::out_of_range("subset generator is feasible only for day <= 2");
    if (day == 0) return DaySet{0, {a.zero()}};

    DaySet prev = enumerate_values_all_subsets(a, day - 1);
    const std::vector<FormId>& p = prev.values;
    const std::size_t n = p.size();

    auto pick = [&p, n](std::uint64_t mask) {
        std::vector<FormId> out;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) out.push_back(p[i]);
        return out;
    };
    std::unordered_set<FormId> values;
    for (std::uint64_t lmask = 0; lmask < (std::uint64_t{1} << n); ++lmask)
        for (std::uint64_t rmask = 0; rmask < (std::uint64_t{1} << n); ++rmask)
            values.insert(canonical(a, a.make_form(pick(lmask), pick(rmask))));
    return finish_day_set(a, day, values);
}

void save_day_set(Arena& a, const DaySet& ds, std::ostream& out) {
    out << "dayset " << ds.day << " " << ds.values.size() << "\n";
    for (FormId v : ds.values) out << print(a, v) << "\n";
}

DaySet load_day_set(Arena& a, std::istream& in) {
    std::string tag;
    int day = -1;
    std::size_t count = 0;
    if (!(in >> tag >> day >> count) || tag != "dayset")
        throw std::runtime_error("bad day-set header");
    check_day(day);
    std::string line;
    std::getline(in, line);
    DaySet ds{day, {}};
    ds.values.reserve(count);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ds.values.push_back(canonical(a, parse(a, line)));
    }
    if (ds.values.size() != count)
        throw std::runtime_error("day-set count mismatch");
    return ds;
}

const DaySet& DaySetStore::get(int day) {
    check_day(day);
    if (sets_[day]) return *sets_[day];

    const char* dir = std::getenv("CGT_CACHE_DIR");
    std::string path;
    if (dir && day == kMaxDaySetDay) {
        path = std::string(dir) + "/dayset-" + std::to_string(day) + ".txt";
        std::ifstream in(path);
        if (in) {
            sets_[day] = load_day_set(arena_, in);
            return *sets_[day];
        }
    }
    sets_[day] = enumerate_values(arena_, day);
    if (!path.empty()) {
        std::ofstream out(path);
        if (out) save_day_set(arena_, *sets_[day], out);
    }
    return *sets_[day];
}

void DaySetStore::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open day-set file: " + path);
    DaySet ds = load_day_set(arena_, in);
    sets_[ds.day] = std::move(ds);
}

std::vector<Decomposition> decompose(Arena& a, FormId g, DaySetStore& store,
                                     bool form_level) {
    FormId c = canonical(a, g);
    int b = form_level ? a.formal_birthday(g) : a.formal_birthday(c);
    if (b == 0) return {};
    if (b - 1 > kMaxDaySetDay)
        throw std::out_of_range("decompose: birthday exceeds the search guard");

    const DaySet& ds = store.get(b - 1);
    std::unordered_set<FormId> members(ds.values.begin(), ds.values.end());
    std::unordered_set<std::uint64_t> seen;
    std::vector<Decomposition> out;
    for (FormId h : ds.values) {
        FormId j = canonical(a, a.sum(c, a.negate(h)));
        if (!members.count(j)) continue;
        FormId lo = std::min(h, j), hi = std::max(h, j);
        if (!seen.insert((std::uint64_t{lo} << 32) | hi).second) continue;
        bool strong = a.formal_birthday(lo) + a.formal_birthday(hi) == b &&
                      lo != a.zero() && hi != a.zero();
        out.push_back({lo, hi, strong});
    }
    return out;
}

std::vector<Decomposition> strong_decompositions(Arena& a, FormId g,
                                                 DaySetStore& store) {
    std::vector<Decomposition> all = decompose(a, g, store);
    std::erase_if(all, [](const Decomposition& d) { return !d.strong; });
    return all;
}

bool is_decomposable(Arena& a, FormId g, DaySetStore& store) {
    return !decompose(a, g, store).empty();
}

std::optional<Dyadic> number_move_result(const Dyadic& component, Player player) {
    if (!component.is_integer()) {
        Dyadic ulp = Dyadic::fraction(1, component.exponent());
        return player == Player::Left ? component - ulp : component + ulp;
    }
    if (player == Player::Left && component.sign() > 0) return component - Dyadic(1);
    if (player == Player::Right && component.sign() < 0) return component + Dyadic(1);
    return std::nullopt;
}

std::optional<std::size_t> best_number_move(const std::vector<Dyadic>& components,
                                            Player player) {
    if (components.empty())
        throw std::invalid_argument("best_number_move: no components");

    Dyadic total(0);
    for (const Dyadic& x : components) total = total + x;
    const bool mover_wins =
        player == Player::Left ? Dyadic(0) < total : total < Dyadic(0);

    std::optional<std::size_t> first_movable;
    std::optional<std::size_t> finest;  // greatest denominator among fractions
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (!number_move_result(components[i], player)) continue;
        if (!first_movable) first_movable = i;
        if (!components[i].is_integer() &&
            (!finest || components[*finest].exponent() < components[i].exponent()))
            finest = i;
    }
    if (!first_movable) return std::nullopt;
    if (!mover_wins) return first_movable;
    // The smallest available change cannot overshoot: the sum is a multiple
    // of it, so the greatest-denominator move always keeps the win.
    return finest ? finest : first_movable;
}

std::optional<std::pair<std::size_t, std::uint32_t>> best_nim_move(
    const std::vector<std::uint32_t>& heaps) {
    std::uint32_t s = 0;
    for (std::uint32_t h : heaps) s = nim_sum(s, h);
    if (s == 0) return std::nullopt;
    for (std::size_t i = 0; i < heaps.size(); ++i) {
        std::uint32_t target = nim_sum(heaps[i], s);
        if (target < heaps[i]) return std::make_pair(i, target);
    }
    assert(false && "a heap containing the top bit of the nim-sum must exist");
    return std::nullopt;
}

}  // namespace cgt
