#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cgt/dyadic.hpp"

namespace cgt {

// Opaque handle into the form arena.  Structurally identical forms always
// receive the same handle, so handle equality is structural equality.
using FormId = std::uint32_t;
inline constexpr FormId kNoForm = 0xffffffffu;

enum class Outcome : std::uint8_t { LeftWins, RightWins, Previous, Next };
enum class Player : std::uint8_t { Left, Right };

const char* to_string(Outcome o);

// Two finite, duplicate-free, sorted sets of earlier-created handles.
struct GameForm {
    std::vector<FormId> left;
    std::vector<FormId> right;
};

// Append-only interning arena for game forms, plus the memo tables of every
// operation defined over them.  Options always refer to strictly earlier
// handles, so the options-of relation is acyclic by construction.
//
// An Arena (and all ids drawn from it) is confined to one logical thread;
// create one arena per thread.  All results are deterministic and the
// caches only ever grow.
class Arena {
public:
    Arena();

    // Interned construction; duplicate options are collapsed and the sets
    // are stored sorted.  Throws std::out_of_range on an invalid handle.
    FormId make_form(std::vector<FormId> lefts, std::vector<FormId> rights);

    FormId zero() const { return 0; }
    std::size_t size() const { return forms_.size(); }

    const GameForm& form(FormId g) const { return forms_[check(g)]; }
    std::span<const FormId> left_options(FormId g) const { return forms_[check(g)].left; }
    std::span<const FormId> right_options(FormId g) const { return forms_[check(g)].right; }

    FormId negate(FormId g);
    FormId sum(FormId g, FormId h);
    Outcome outcome(FormId g);
    int formal_birthday(FormId g);

    // Value order: g <= h as games.  Decided by the standard recursion
    // (g <= h unless some h^R <= g or some g^L >= h), which outcome-based
    // tests cross-check.
    bool leq(FormId g, FormId h);
    bool eq_value(FormId g, FormId h) { return leq(g, h) && leq(h, g); }

    // Memo annex shared by the value-level modules (canonical form, stops,
    // distances, ...).  Internal to the library.
    struct Memo {
        std::vector<FormId> canonical;                     // kNoForm = unset
        std::unordered_map<FormId, std::optional<Dyadic>> number_value;
        std::unordered_map<FormId, std::optional<std::uint32_t>> nimber_of;
        std::vector<FormId> nimbers;                       // nimbers[k]
        std::unordered_map<FormId, std::pair<Dyadic, Dyadic>> stops;  // (LS, RS)
        std::unordered_map<FormId, int> star_leq;          // least k with g <= *k, -1 if none
        std::unordered_map<FormId, int> right_distance;
        std::unordered_map<FormId, std::string> printed;
        std::unordered_map<Dyadic, FormId> dyadic_forms;
    };
    Memo memo;

private:
    FormId check(FormId g) const;
    std::uint64_t form_hash(FormId g) const;

    struct InternHash {
        const Arena* a;
        std::size_t operator()(FormId g) const { return a->form_hash(g); }
    };
    struct InternEq {
        const Arena* a;
        bool operator()(FormId x, FormId y) const {
            return a->forms_[x].left == a->forms_[y].left &&
                   a->forms_[x].right == a->forms_[y].right;
        }
    };

    std::vector<GameForm> forms_;
    std::unordered_set<FormId, InternHash, InternEq> intern_;

    std::vector<FormId> negate_;
    std::vector<std::int32_t> birthday_;
    std::vector<std::int8_t> outcome_;
    std::unordered_map<std::uint64_t, FormId> sum_;
    std::unordered_map<std::uint64_t, bool> leq_;
};

}  // namespace cgt
