#pragma once

#include <algorithm>
#include <vector>

#include "cgt/canonical.hpp"
#include "cgt/forms.hpp"

namespace cgt_test {

using namespace cgt;

struct Day1 {
    FormId zero, one, neg_one, star;
    std::vector<FormId> all;
};

inline Day1 day1(Arena& a) {
    FormId z = a.zero();
    FormId one = a.make_form({z}, {});
    FormId neg = a.make_form({}, {z});
    FormId star = a.make_form({z}, {z});
    return {z, one, neg, star, {z, one, neg, star}};
}

// Every form whose option sets are drawn from the pool (4^|pool| of them
// before interning collapses nothing -- distinct subsets stay distinct).
inline std::vector<FormId> all_forms_over(Arena& a,
                                          const std::vector<FormId>& pool) {
    std::vector<FormId> out;
    const std::size_t n = pool.size();
    for (std::uint64_t lm = 0; lm < (std::uint64_t{1} << n); ++lm) {
        for (std::uint64_t rm = 0; rm < (std::uint64_t{1} << n); ++rm) {
            std::vector<FormId> l, r;
            for (std::size_t i = 0; i < n; ++i) {
                if (lm >> i & 1) l.push_back(pool[i]);
                if (rm >> i & 1) r.push_back(pool[i]);
            }
            out.push_back(a.make_form(std::move(l), std::move(r)));
        }
    }
    return out;
}

inline std::vector<FormId> dedupe(std::vector<FormId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// The 22 values born by day 2, via the brute-force subset route.
inline std::vector<FormId> day2_values(Arena& a) {
    std::vector<FormId> vals;
    for (FormId f : all_forms_over(a, day1(a).all))
        vals.push_back(canonical(a, f));
    return dedupe(std::move(vals));
}

}  // namespace cgt_test
