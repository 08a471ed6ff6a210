#include "cgt/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cgt {

namespace {

void pack(std::vector<FormId>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Order tests against a not-yet-interned form {VL|VR}.  The virtual side is
// fixed through the recursion; only the concrete side descends, so these
// terminate and every inner comparison hits the arena's leq memo.
bool leq_form_virtual(Arena& a, FormId g, const std::vector<FormId>& vl,
                      const std::vector<FormId>& vr);

// {VL|VR} <= h ?
bool leq_virtual_form(Arena& a, const std::vector<FormId>& vl,
                      const std::vector<FormId>& vr, FormId h) {
    for (FormId hr : a.right_options(h))
        if (leq_form_virtual(a, hr, vl, vr)) return false;
    for (FormId x : vl)
        if (a.leq(h, x)) return false;
    return true;
}

// g <= {VL|VR} ?
bool leq_form_virtual(Arena& a, FormId g, const std::vector<FormId>& vl,
                      const std::vector<FormId>& vr) {
    for (FormId x : vr)
        if (a.leq(x, g)) return false;
    for (FormId gl : a.left_options(g))
        if (leq_virtual_form(a, vl, vr, gl)) return false;
    return true;
}

// Keep the <=-maximal (for Left) or <=-minimal (for Right) options.
// Distinct canonical ids are never equal in value, so strictness is free.
void remove_dominated(Arena& a, std::vector<FormId>& opts, bool left_side) {
    std::vector<FormId> kept;
    kept.reserve(opts.size());
    for (FormId x : opts) {
        bool dom = false;
        for (FormId y : opts) {
            if (x == y) continue;
            if (left_side ? a.leq(x, y) : a.leq(y, x)) {
                dom = true;
                break;
            }
        }
        if (!dom) kept.push_back(x);
    }
    opts = std::move(kept);
}

}  // namespace

FormId canonicalize_options(Arena& a, std::vector<FormId> lefts,
                            std::vector<FormId> rights) {
    for (FormId& x : lefts) x = canonical(a, x);
    for (FormId& x : rights) x = canonical(a, x);
    pack(lefts);
    pack(rights);

    for (;;) {
        remove_dominated(a, lefts, true);
        remove_dominated(a, rights, false);

        // Bypass one reversible option, then re-check domination.  The value
        // of {lefts|rights} is invariant across the whole loop, so testing
        // against the current lists is sound.
        bool changed = false;
        for (std::size_t i = 0; i < lefts.size() && !changed; ++i) {
            for (FormId lr : a.right_options(lefts[i])) {
                if (leq_form_virtual(a, lr, lefts, rights)) {
                    lefts.erase(lefts.begin() + i);
                    for (FormId x : a.left_options(lr)) lefts.push_back(x);
                    pack(lefts);
                    changed = true;
                    break;
                }
            }
        }
        if (changed) continue;
        for (std::size_t i = 0; i < rights.size() && !changed; ++i) {
            for (FormId rl : a.left_options(rights[i])) {
                if (leq_virtual_form(a, lefts, rights, rl)) {
                    rights.erase(rights.begin() + i);
                    for (FormId x : a.right_options(rl)) rights.push_back(x);
                    pack(rights);
                    changed = true;
                    break;
                }
            }
        }
        if (!changed) break;
    }
    return a.make_form(std::move(lefts), std::move(rights));
}

FormId canonical(Arena& a, FormId g) {
    if (g < a.memo.canonical.size() && a.memo.canonical[g] != kNoForm)
        return a.memo.canonical[g];
    std::vector<FormId> l, r;
    for (FormId x : a.left_options(g)) l.push_back(canonical(a, x));
    for (FormId x : a.right_options(g)) r.push_back(canonical(a, x));
    FormId c = canonicalize_options(a, std::move(l), std::move(r));
    if (a.memo.canonical.size() <= std::max(g, c))
        a.memo.canonical.resize(a.size(), kNoForm);
    a.memo.canonical[g] = c;
    a.memo.canonical[c] = c;
    return c;
}

int value_birthday(Arena& a, FormId g) {
    return a.formal_birthday(canonical(a, g));
}

std::int64_t number_birthday(const Dyadic& x) {
    return x.birthday();
}

FormId dyadic_form(Arena& a, const Dyadic& x) {
    if (auto it = a.memo.dyadic_forms.find(x); it != a.memo.dyadic_forms.end())
        return it->second;
    FormId f;
    if (x.is_zero()) {
        f = a.zero();
    } else if (x.is_integer()) {
        if (x.sign() > 0)
            f = a.make_form({dyadic_form(a, x - Dyadic(1))}, {});
        else
            f = a.make_form({}, {dyadic_form(a, x + Dyadic(1))});
    } else {
        Dyadic ulp = Dyadic::fraction(1, x.exponent());
        f = a.make_form({dyadic_form(a, x - ulp)}, {dyadic_form(a, x + ulp)});
    }
    a.memo.dyadic_forms.emplace(x, f);
    return f;
}

namespace {

// c must be canonical.  A canonical form is a number exactly when all its
// options are numbers and every Left value is below every Right value; its
// value is then the simplest dyadic in the gap.
std::optional<Dyadic> number_value_canonical(Arena& a, FormId c) {
    if (auto it = a.memo.number_value.find(c); it != a.memo.number_value.end())
        return it->second;
    std::optional<Dyadic> max_left, min_right, result;
    bool is_num = true;
    for (FormId x : a.left_options(c)) {
        auto v = number_value_canonical(a, x);
        if (!v) {
            is_num = false;
            break;
        }
        if (!max_left || *max_left < *v) max_left = *v;
    }
    if (is_num) {
        for (FormId x : a.right_options(c)) {
            auto v = number_value_canonical(a, x);
            if (!v) {
                is_num = false;
                break;
            }
            if (!min_right || *v < *min_right) min_right = *v;
        }
    }
    if (is_num && max_left && min_right && !(*max_left < *min_right))
        is_num = false;
    if (is_num) result = Dyadic::simplest_between(max_left, min_right);
    a.memo.number_value.emplace(c, result);
    return result;
}

}  // namespace

std::optional<Dyadic> number_value(Arena& a, FormId g) {
    return number_value_canonical(a, canonical(a, g));
}

FormId nimber(Arena& a, std::uint32_t k) {
    if (k >= kMaxNimberSize) throw std::out_of_range("nimber size guard exceeded");
    auto& cache = a.memo.nimbers;
    if (cache.empty()) cache.push_back(a.zero());
    while (cache.size() <= k) {
        std::vector<FormId> opts(cache.begin(), cache.end());
        cache.push_back(a.make_form(opts, opts));
    }
    return cache[k];
}

namespace {

std::optional<std::uint32_t> nimber_of_canonical(Arena& a, FormId c) {
    if (c == a.zero()) return 0;
    if (auto it = a.memo.nimber_of.find(c); it != a.memo.nimber_of.end())
        return it->second;
    std::optional<std::uint32_t> result;
    auto l = a.left_options(c);
    auto r = a.right_options(c);
    if (l.size() == r.size() &&
        std::equal(l.begin(), l.end(), r.begin(), r.end())) {
        std::uint32_t k = static_cast<std::uint32_t>(l.size());
        std::vector<bool> seen(k, false);
        bool ok = true;
        for (FormId x : l) {
            auto kx = nimber_of_canonical(a, x);
            if (!kx || *kx >= k || seen[*kx]) {
                ok = false;
                break;
            }
            seen[*kx] = true;
        }
        if (ok) result = k;
    }
    a.memo.nimber_of.emplace(c, result);
    return result;
}

}  // namespace

std::optional<std::uint32_t> nimber_value(Arena& a, FormId g) {
    return nimber_of_canonical(a, canonical(a, g));
}

}  // namespace cgt
