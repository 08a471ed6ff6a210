#include "cgt/notation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "cgt/canonical.hpp"

namespace cgt {

namespace {

constexpr std::uint32_t kMaxUpMultiple = 1u << 10;

class Parser {
public:
    Parser(Arena& a, std::string_view text) : a_(a), text_(text) {}

    FormId run() {
        FormId g = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return g;
    }

private:
    Arena& a_;
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    // Unicode arrows arrive as 3-byte UTF-8 sequences.
    bool eat_arrow(char ascii) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ascii) {
            ++pos_;
            return true;
        }
        const std::string_view utf8 = ascii == '^' ? "↑" : "↓";
        if (text_.substr(pos_).starts_with(utf8)) {
            pos_ += utf8.size();
            return true;
        }
        return false;
    }

    std::int64_t parse_digits() {
        skip_ws();
        std::size_t start = pos_;
        std::int64_t v = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            v = v * 10 + (text_[pos_] - '0');
            if (v > (std::int64_t{1} << 40)) fail("number literal too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected digits");
        return v;
    }

    FormId parse_sum() {
        FormId g = parse_term();
        for (;;) {
            if (eat('+')) {
                g = a_.sum(g, parse_term());
            } else if (peek() == '-') {
                // binary minus: a - b = a + (-b)
                g = a_.sum(g, parse_term());
            } else {
                return g;
            }
        }
    }

    FormId parse_term() {
        if (eat('-')) return a_.negate(parse_term());
        return parse_atom();
    }

    FormId parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '{') return parse_braces();
        if (c == '*') return parse_star();
        if (eat_arrow('^')) return parse_updown(false);
        if (eat_arrow('v')) return parse_updown(true);
        if (c >= '0' && c <= '9') return parse_dyadic();
        fail("expected a game");
    }

    FormId parse_braces() {
        eat('{');
        std::vector<FormId> lefts = parse_list();
        if (!eat('|')) fail("expected '|'");
        std::vector<FormId> rights = parse_list();
        if (!eat('}')) fail("expected '}'");
        return a_.make_form(std::move(lefts), std::move(rights));
    }

    std::vector<FormId> parse_list() {
        std::vector<FormId> out;
        if (peek() == '|' || peek() == '}') return out;
        out.push_back(parse_sum());
        while (eat(',')) out.push_back(parse_sum());
        return out;
    }

    FormId parse_star() {
        eat('*');
        std::int64_t k = 1;
        if (peek() >= '0' && peek() <= '9') k = parse_digits();
        if (k >= kMaxNimberSize) fail("nimber size guard exceeded");
        return nimber(a_, static_cast<std::uint32_t>(k));
    }

    FormId parse_updown(bool down) {
        std::int64_t k = 1;
        if (peek() >= '0' && peek() <= '9') k = parse_digits();
        if (k > kMaxUpMultiple) fail("up multiple too large");
        bool starred = eat('*');
        FormId up = a_.make_form({a_.zero()}, {nimber(a_, 1)});
        FormId g = a_.zero();
        for (std::int64_t i = 0; i < k; ++i) g = a_.sum(g, up);
        if (starred) g = a_.sum(g, nimber(a_, 1));
        if (down) g = a_.negate(g);
        return g;
    }

    FormId parse_dyadic() {
        std::int64_t p = parse_digits();
        if (!eat('/')) {
            return dyadic_form(a_, Dyadic(p));
        }
        std::size_t qpos = pos_;
        std::int64_t q = parse_digits();
        if (q <= 0 || !std::has_single_bit(static_cast<std::uint64_t>(q))) {
            pos_ = qpos;
            fail("denominator must be a power of two");
        }
        std::uint32_t n = static_cast<std::uint32_t>(
            std::countr_zero(static_cast<std::uint64_t>(q)));
        return dyadic_form(a_, Dyadic::fraction(p, n));
    }
};

std::string render(Arena& a, FormId c);

std::string render_options(Arena& a, std::span<const FormId> opts) {
    std::vector<std::pair<std::pair<int, std::string>, FormId>> keyed;
    keyed.reserve(opts.size());
    for (FormId x : opts)
        keyed.push_back({{a.formal_birthday(x), render(a, x)}, x});
    std::sort(keyed.begin(), keyed.end());
    std::string out;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i) out += ',';
        out += keyed[i].first.second;
    }
    return out;
}

// c must be canonical.
std::string render(Arena& a, FormId c) {
    if (auto it = a.memo.printed.find(c); it != a.memo.printed.end())
        return it->second;
    std::string out;
    if (auto x = number_value(a, c)) {
        out = x->to_string();
    } else if (auto k = nimber_value(a, c)) {
        out = *k == 1 ? "*" : "*" + std::to_string(*k);
    } else {
        out = "{" + render_options(a, a.left_options(c)) + "|" +
              render_options(a, a.right_options(c)) + "}";
    }
    a.memo.printed.emplace(c, out);
    return out;
}

}  // namespace

FormId parse(Arena& a, std::string_view text) {
    return Parser(a, text).run();
}

std::string print(Arena& a, FormId g) {
    return render(a, canonical(a, g));
}

}  // namespace cgt
