#include "cgt/forms.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cgt {

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::LeftWins: return "L";
        case Outcome::RightWins: return "R";
        case Outcome::Previous: return "P";
        case Outcome::Next: return "N";
    }
    return "?";
}

Arena::Arena() : intern_(16, InternHash{this}, InternEq{this}) {
    forms_.push_back(GameForm{});  // handle 0 is the empty form 0 = {|}
    intern_.insert(0);
}

FormId Arena::check(FormId g) const {
    if (g >= forms_.size()) throw std::out_of_range("invalid form handle");
    return g;
}

std::uint64_t Arena::form_hash(FormId g) const {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    const GameForm& f = forms_[g];
    mix(f.left.size());
    for (FormId x : f.left) mix(x);
    mix(0x5851f42d4c957f2dULL);
    for (FormId x : f.right) mix(x);
    return h;
}

FormId Arena::make_form(std::vector<FormId> lefts, std::vector<FormId> rights) {
    for (FormId x : lefts) check(x);
    for (FormId x : rights) check(x);
    auto pack = [](std::vector<FormId>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    pack(lefts);
    pack(rights);
    forms_.push_back(GameForm{std::move(lefts), std::move(rights)});
    FormId id = static_cast<FormId>(forms_.size() - 1);
    auto [it, inserted] = intern_.insert(id);
    if (!inserted) {
        forms_.pop_back();
        return *it;
    }
    return id;
}

FormId Arena::negate(FormId g) {
    check(g);
    if (g < negate_.size() && negate_[g] != kNoForm) return negate_[g];
    std::vector<FormId> l, r;
    l.reserve(right_options(g).size());
    r.reserve(left_options(g).size());
    for (FormId x : right_options(g)) l.push_back(negate(x));
    for (FormId x : left_options(g)) r.push_back(negate(x));
    FormId n = make_form(std::move(l), std::move(r));
    if (negate_.size() <= std::max(g, n)) negate_.resize(forms_.size(), kNoForm);
    negate_[g] = n;
    negate_[n] = g;
    return n;
}

FormId Arena::sum(FormId g, FormId h) {
    check(g);
    check(h);
    if (h < g) std::swap(g, h);  // the construction is symmetric
    std::uint64_t key = (std::uint64_t{g} << 32) | h;
    if (auto it = sum_.find(key); it != sum_.end()) return it->second;
    std::vector<FormId> l, r;
    for (FormId x : left_options(g)) l.push_back(sum(x, h));
    for (FormId x : left_options(h)) l.push_back(sum(g, x));
    for (FormId x : right_options(g)) r.push_back(sum(x, h));
    for (FormId x : right_options(h)) r.push_back(sum(g, x));
    FormId s = make_form(std::move(l), std::move(r));
    sum_.emplace(key, s);
    return s;
}

Outcome Arena::outcome(FormId g) {
    check(g);
    if (g < outcome_.size() && outcome_[g] >= 0)
        return static_cast<Outcome>(outcome_[g]);
    bool left_first = false, right_first = false;
    for (FormId x : left_options(g)) {
        Outcome o = outcome(x);
        if (o == Outcome::LeftWins || o == Outcome::Previous) {
            left_first = true;
            break;
        }
    }
    for (FormId x : right_options(g)) {
        Outcome o = outcome(x);
        if (o == Outcome::RightWins || o == Outcome::Previous) {
            right_first = true;
            break;
        }
    }
    Outcome o = left_first ? (right_first ? Outcome::Next : Outcome::LeftWins)
                           : (right_first ? Outcome::RightWins : Outcome::Previous);
    if (outcome_.size() <= g) outcome_.resize(forms_.size(), -1);
    outcome_[g] = static_cast<std::int8_t>(o);
    return o;
}

int Arena::formal_birthday(FormId g) {
    check(g);
    if (g < birthday_.size() && birthday_[g] >= 0) return birthday_[g];
    int b = 0;
    for (FormId x : left_options(g)) b = std::max(b, 1 + formal_birthday(x));
    for (FormId x : right_options(g)) b = std::max(b, 1 + formal_birthday(x));
    if (birthday_.size() <= g) birthday_.resize(forms_.size(), -1);
    birthday_[g] = b;
    return b;
}

bool Arena::leq(FormId g, FormId h) {
    check(g);
    check(h);
    std::uint64_t key = (std::uint64_t{g} << 32) | h;
    if (auto it = leq_.find(key); it != leq_.end()) return it->second;
    bool le = true;
    for (FormId hr : right_options(h)) {
        if (leq(hr, g)) {
            le = false;
            break;
        }
    }
    if (le) {
        for (FormId gl : left_options(g)) {
            if (leq(h, gl)) {
                le = false;
                break;
            }
        }
    }
    leq_.emplace(key, le);
    return le;
}

}  // namespace cgt
