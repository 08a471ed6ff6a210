#include "cgt/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "cgt/canonical.hpp"

namespace cgt {

namespace {

// (LS, RS) of a canonical form.  Non-number canonical forms always carry
// options on both sides, so the max/min below are over nonempty sets.
std::pair<Dyadic, Dyadic> stops_canonical(Arena& a, FormId c) {
    if (auto it = a.memo.stops.find(c); it != a.memo.stops.end())
        return it->second;
    std::pair<Dyadic, Dyadic> result;
    if (auto x = number_value(a, c)) {
        result = {*x, *x};
    } else {
        auto l = a.left_options(c);
        auto r = a.right_options(c);
        assert(!l.empty() && !r.empty());
        Dyadic ls = stops_canonical(a, l.front()).second;
        for (FormId x : l.subspan(1))
            ls = std::max(ls, stops_canonical(a, x).second);
        Dyadic rs = stops_canonical(a, r.front()).first;
        for (FormId x : r.subspan(1))
            rs = std::min(rs, stops_canonical(a, x).first);
        result = {ls, rs};
    }
    a.memo.stops.emplace(c, result);
    return result;
}

}  // namespace

Dyadic left_stop(Arena& a, FormId g) {
    return stops_canonical(a, canonical(a, g)).first;
}

Dyadic right_stop(Arena& a, FormId g) {
    return stops_canonical(a, canonical(a, g)).second;
}

TemperatureClass classify(Arena& a, FormId g) {
    FormId c = canonical(a, g);
    if (number_value(a, c)) return {TemperatureClass::Cold, false};
    auto [ls, rs] = stops_canonical(a, c);
    if (ls == rs) return {TemperatureClass::Tepid, ls.is_zero()};
    assert(rs < ls);
    return {TemperatureClass::Hot, false};
}

std::pair<Dyadic, FormId> tepid_split(Arena& a, FormId g) {
    if (classify(a, g).kind != TemperatureClass::Tepid)
        throw std::invalid_argument("tepid_split: game is not tepid");
    Dyadic x = left_stop(a, g);
    FormId eps = canonical(a, a.sum(g, a.negate(dyadic_form(a, x))));
    return {x, eps};
}

std::vector<FormId> followers(Arena& a, FormId g) {
    std::vector<FormId> out;
    std::vector<FormId> stack{g};
    std::unordered_set<FormId> seen{g};
    while (!stack.empty()) {
        FormId cur = stack.back();
        stack.pop_back();
        out.push_back(cur);
        for (auto opts : {a.left_options(cur), a.right_options(cur)})
            for (FormId x : opts)
                if (seen.insert(x).second) stack.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_remote(Arena& a, std::uint32_t n, FormId g) {
    FormId target = nimber(a, n);
    for (FormId f : followers(a, g))
        if (canonical(a, f) == target) return false;
    return true;
}

StarComparison star_comparison(Arena& a, FormId g) {
    FormId c = canonical(a, g);
    if (Dyadic(0) < stops_canonical(a, c).second)
        throw std::invalid_argument("star_comparison requires RS(g) <= 0");
    const std::uint32_t bound = static_cast<std::uint32_t>(a.formal_birthday(c)) + 1;
    int least = -1;
    if (auto it = a.memo.star_leq.find(c); it != a.memo.star_leq.end()) {
        least = it->second;
    } else {
        for (std::uint32_t k = 0; k <= bound; ++k) {
            if (a.leq(c, nimber(a, k))) {
                least = static_cast<int>(k);
                break;
            }
        }
        a.memo.star_leq.emplace(c, least);
    }
    if (least >= 0)
        return {StarComparison::LeqSome, static_cast<std::uint32_t>(least)};
    for (std::uint32_t k = 0; k <= bound; ++k)
        if (!a.leq(nimber(a, k), c))
            return {StarComparison::ConfusedOrGreaterAll, 0};
    return {StarComparison::GreaterAll, 0};
}

namespace {

// RD of a canonical form with RS <= 0.
int right_distance_canonical(Arena& a, FormId c) {
    if (auto it = a.memo.right_distance.find(c); it != a.memo.right_distance.end())
        return it->second;
    int d;
    if (star_comparison(a, c).kind == StarComparison::LeqSome) {
        d = 0;
    } else {
        int best = -1;
        for (FormId r : a.right_options(c)) {
            if (Dyadic(0) < stops_canonical(a, r).first) continue;  // LS(r) > 0
            int v = right_distance_canonical(a, r);
            auto rl = a.left_options(r);
            if (!rl.empty()) {
                int reply = -1;
                for (FormId x : rl)
                    reply = std::max(reply, right_distance_canonical(a, x));
                v = std::max(v, reply - 1);
            }
            if (best < 0 || v < best) best = v;
        }
        assert(best >= 0);  // guaranteed: RS(c) <= 0 and c is not <= any *k
        d = 1 + best;
    }
    a.memo.right_distance.emplace(c, d);
    return d;
}

}  // namespace

std::optional<int> right_distance(Arena& a, FormId g) {
    FormId c = canonical(a, g);
    if (Dyadic(0) < stops_canonical(a, c).second) return std::nullopt;
    return right_distance_canonical(a, c);
}

std::optional<int> left_distance(Arena& a, FormId g) {
    return right_distance(a, a.negate(g));
}

std::optional<Player> star_system_prediction(Arena& a, const StarSystem& s) {
    if (Dyadic(0) < right_stop(a, s.g) || left_stop(a, s.h) < Dyadic(0))
        throw std::invalid_argument("not a star system: stops out of range");
    auto rd_g = right_distance(a, s.g);
    auto ld_h = left_distance(a, s.h);
    if (rd_g && ld_h && *ld_h - *rd_g >= 1) return Player::Right;
    auto ld_g = left_distance(a, s.g);
    auto rd_h = right_distance(a, s.h);
    if (ld_g && rd_h && *rd_h - *ld_g >= 1) return Player::Left;
    return std::nullopt;
}

}  // namespace cgt
