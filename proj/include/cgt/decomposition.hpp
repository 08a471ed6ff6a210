#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cgt/dyadic.hpp"
#include "cgt/forms.hpp"

namespace cgt {

inline constexpr int kMaxDaySetDay = 3;

// All distinct values born by the given day, as canonical forms ordered by
// their printed notation.
struct DaySet {
    int day = 0;
    std::vector<FormId> values;
};

// Lazily computed day sets 0..3 over one arena.  Day 3 is read from (and
// written back to) $CGT_CACHE_DIR/dayset-3.txt when that variable is set.
class DaySetStore {
public:
    explicit DaySetStore(Arena& a) : arena_(a) {}

    const DaySet& get(int day);

    // Install a previously saved day set (see save_day_set).
    void load_file(const std::string& path);

    Arena& arena() { return arena_; }

private:
    Arena& arena_;
    std::optional<DaySet> sets_[kMaxDaySetDay + 1];
};

// Values born by `day`, generated from antichain option sets over the
// previous day's values.  Guarded to day <= 3; day 4 is out of reach.
DaySet enumerate_values(Arena& a, int day);

// Independent generator that tries every subset pair instead of antichains.
// Feasible only for day <= 2; exists to cross-check enumerate_values.
DaySet enumerate_values_all_subsets(Arena& a, int day);

void save_day_set(Arena& a, const DaySet& ds, std::ostream& out);
DaySet load_day_set(Arena& a, std::istream& in);

// A way of writing a game as h + j with both birthdays below the game's
// own.  Strong additionally means the birthdays add up exactly and neither
// part is zero.
struct Decomposition {
    FormId h;
    FormId j;
    bool strong;
};

// Every value-level pair (h, j) with h + j equal to g and both birthdays
// strictly below g's.  Pairs are reported once, members ordered by handle.
// By default birthdays are measured on the value (canonical form); the
// form-level flag measures g by the form as given instead.  Requires the
// value birthday of g to be at most 4.
std::vector<Decomposition> decompose(Arena& a, FormId g, DaySetStore& store,
                                     bool form_level = false);

std::vector<Decomposition> strong_decompositions(Arena& a, FormId g,
                                                 DaySetStore& store);

bool is_decomposable(Arena& a, FormId g, DaySetStore& store);

// Optimal move in a sum of numbers: when the mover can win, move in the
// component with the greatest denominator (any movable integer when all
// components are integers); this preserves the win.  When the mover cannot
// win, the first movable component is returned.  Absent when the mover has
// no move at all.
std::optional<std::size_t> best_number_move(const std::vector<Dyadic>& components,
                                            Player player);

// The mover's change on component i: -1/2^n for Left, +1/2^n for Right on
// non-integers; -1/+1 on integers of the right sign.  Absent if immovable.
std::optional<Dyadic> number_move_result(const Dyadic& component, Player player);

// Winning nim move (heap index, reduced size), absent when the nim-sum is
// already zero.
std::optional<std::pair<std::size_t, std::uint32_t>> best_nim_move(
    const std::vector<std::uint32_t>& heaps);

}  // namespace cgt
