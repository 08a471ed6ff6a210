#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cgt/dyadic.hpp"
#include "cgt/forms.hpp"

namespace cgt {

// Cold games are numbers, tepid games have equal stops without being
// numbers, hot games have LS > RS.  Tepid games with both stops zero are
// infinitesimals.
struct TemperatureClass {
    enum Kind : std::uint8_t { Cold, Tepid, Hot } kind;
    bool infinitesimal;  // meaningful only when kind == Tepid
};

// Number reached under optimal alternating play when the given player
// starts.  Stops of a number are the number itself.
Dyadic left_stop(Arena& a, FormId g);
Dyadic right_stop(Arena& a, FormId g);

TemperatureClass classify(Arena& a, FormId g);

// Splits a tepid game as x + epsilon with x = LS(g) and epsilon an
// infinitesimal (returned canonical).  Throws std::invalid_argument when g
// is not tepid.
std::pair<Dyadic, FormId> tepid_split(Arena& a, FormId g);

// g together with everything reachable from it by moves of either player,
// deduplicated and sorted by handle.
std::vector<FormId> followers(Arena& a, FormId g);

// *n is remote for g when no follower of g equals *n in value.
bool is_remote(Arena& a, std::uint32_t n, FormId g);

// Where g sits relative to the nimbers, for games with RS(g) <= 0.  Either
// g <= *k for some k (the least such k is reported), or g is greater than
// or confused with every nimber; GreaterAll means strictly greater than all
// of them.  The unbounded quantifier is decided by checking k up to
// value_birthday(g) + 1: any larger nimber outbirths every follower, hence
// is remote, and outcomes of g + *k are stable beyond a remote star.
struct StarComparison {
    enum Kind : std::uint8_t { LeqSome, ConfusedOrGreaterAll, GreaterAll } kind;
    std::uint32_t least_k;  // meaningful only when kind == LeqSome
};
StarComparison star_comparison(Arena& a, FormId g);

// Right/Left distance to a nimber or better.  Defined when RS(g) <= 0
// (resp. LS(g) >= 0); absent otherwise.  Computed on the canonical form.
std::optional<int> right_distance(Arena& a, FormId g);
std::optional<int> left_distance(Arena& a, FormId g);

// A sum g + h + *k with RS(g) <= 0 and LS(h) >= 0.
struct StarSystem {
    FormId g;
    FormId h;
    std::uint32_t k;
};

// Distance-based winner prediction for a star system: a lead of one or more
// unanswered moves hands the opponent of the slower side a winning move.
// Absent when neither side is provably ahead.
std::optional<Player> star_system_prediction(Arena& a, const StarSystem& s);

}  // namespace cgt
