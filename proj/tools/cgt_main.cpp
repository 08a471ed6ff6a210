#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cgt/analysis.hpp"
#include "cgt/canonical.hpp"
#include "cgt/decomposition.hpp"
#include "cgt/forms.hpp"
#include "cgt/hackenbush.hpp"
#include "cgt/notation.hpp"
#include "cgt/verify.hpp"

namespace {

using namespace cgt;

int usage(std::ostream& out, int code) {
    out << "usage: cgt <command> [args]\n"
           "\n"
           "  eval <expr>                       value, outcome, birthday, class\n"
           "  canon <expr>                      canonical form\n"
           "  birthday <expr>                   birthday of the value\n"
           "  outcome <expr>                    L, R, P or N\n"
           "  stops <expr>                      left and right stops\n"
           "  cmp <expr> <expr>                 <, >, = or \xE2\x88\xA5\n"
           "  rd <expr> | ld <expr>             distance to a nimber or better\n"
           "  decompose <expr> [--strong] [--dayset-cache FILE]\n"
           "  enumerate <day> [--out FILE]      values born by day (0..3)\n"
           "  nimsum <a> <b>\n"
           "  nimmove <h1> <h2> ...             winning nim move, if any\n"
           "  nummove <d1> <d2> ... --player L|R\n"
           "  hackenbush <string>               B/R/G edges, bottom to top\n"
           "  verify <suite>                    birthdays daysets numbers nimbers\n"
           "                                    distance stops starsystems hackenbush all\n"
           "\n"
           "Set CGT_CACHE_DIR to cache the day-3 value set between runs.\n";
    return code;
}

std::string class_string(const TemperatureClass& tc) {
    switch (tc.kind) {
        case TemperatureClass::Cold: return "cold";
        case TemperatureClass::Tepid:
            return tc.infinitesimal ? "tepid (infinitesimal)" : "tepid";
        case TemperatureClass::Hot: return "hot";
    }
    return "?";
}

Dyadic parse_dyadic_arg(Arena& a, const std::string& text) {
    auto v = number_value(a, parse(a, text));
    if (!v) throw std::invalid_argument("not a number: " + text);
    return *v;
}

std::uint32_t parse_uint_arg(const std::string& text, std::uint32_t max) {
    std::size_t used = 0;
    unsigned long v = std::stoul(text, &used);
    if (used != text.size() || v > max)
        throw std::invalid_argument("bad count: " + text);
    return static_cast<std::uint32_t>(v);
}

int cmd_eval(Arena& a, const std::string& expr) {
    FormId g = parse(a, expr);
    std::cout << "value: " << print(a, g) << "\n"
              << "outcome: " << to_string(a.outcome(g)) << "\n"
              << "birthday: " << value_birthday(a, g) << "\n"
              << "class: " << class_string(classify(a, g)) << "\n";
    return 0;
}

int cmd_cmp(Arena& a, const std::string& lhs, const std::string& rhs) {
    FormId g = parse(a, lhs), h = parse(a, rhs);
    bool le = a.leq(g, h), ge = a.leq(h, g);
    std::cout << (le && ge ? "=" : le ? "<" : ge ? ">" : "\xE2\x88\xA5") << "\n";
    return 0;
}

int cmd_distance(Arena& a, const std::string& expr, bool right) {
    FormId g = parse(a, expr);
    auto d = right ? right_distance(a, g) : left_distance(a, g);
    if (d)
        std::cout << *d << "\n";
    else
        std::cout << "undefined\n";
    return 0;
}

int cmd_decompose(Arena& a, std::vector<std::string> args) {
    bool strong = false;
    std::string cache_file, expr;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--strong") {
            strong = true;
        } else if (args[i] == "--dayset-cache") {
            if (++i == args.size()) return usage(std::cerr, 2);
            cache_file = args[i];
        } else if (expr.empty()) {
            expr = args[i];
        } else {
            return usage(std::cerr, 2);
        }
    }
    if (expr.empty()) return usage(std::cerr, 2);

    FormId g = parse(a, expr);
    DaySetStore store(a);
    if (!cache_file.empty()) store.load_file(cache_file);
    auto decs = strong ? strong_decompositions(a, g, store) : decompose(a, g, store);
    for (const Decomposition& d : decs) {
        std::cout << print(a, d.h) << " + " << print(a, d.j);
        if (d.strong && !strong) std::cout << "  [strong]";
        std::cout << "\n";
    }
    return 0;
}

int cmd_enumerate(Arena& a, std::vector<std::string> args) {
    std::string out_file;
    int day = -1;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--out") {
            if (++i == args.size()) return usage(std::cerr, 2);
            out_file = args[i];
        } else if (day < 0) {
            day = static_cast<int>(parse_uint_arg(args[i], 3));
        } else {
            return usage(std::cerr, 2);
        }
    }
    if (day < 0) return usage(std::cerr, 2);
    DaySetStore store(a);
    const DaySet& ds = store.get(day);
    if (out_file.empty()) {
        save_day_set(a, ds, std::cout);
    } else {
        std::ofstream out(out_file);
        if (!out) throw std::runtime_error("cannot write " + out_file);
        save_day_set(a, ds, out);
    }
    return 0;
}

int cmd_nummove(Arena& a, std::vector<std::string> args) {
    std::vector<Dyadic> components;
    std::optional<Player> player;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--player") {
            if (++i == args.size()) return usage(std::cerr, 2);
            if (args[i] == "L")
                player = Player::Left;
            else if (args[i] == "R")
                player = Player::Right;
            else
                return usage(std::cerr, 2);
        } else {
            components.push_back(parse_dyadic_arg(a, args[i]));
        }
    }
    if (!player || components.empty()) return usage(std::cerr, 2);
    auto mv = best_number_move(components, *player);
    if (!mv) {
        std::cout << "none\n";
        return 0;
    }
    std::cout << "component " << *mv << " -> "
              << number_move_result(components[*mv], *player)->to_string() << "\n";
    return 0;
}

int cmd_verify(Arena& a, const std::string& suite) {
    if (!is_suite(suite)) {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }
    DaySetStore store(a);
    int failed = 0;
    for (const CheckResult& r : run_suite(store, suite)) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << " (" << r.detail
                  << ")\n";
        if (!r.pass) ++failed;
    }
    std::cout << (failed ? "FAILED" : "OK") << "\n";
    return failed ? 1 : 0;
}

int run(std::vector<std::string> args) {
    if (args.empty()) return usage(std::cerr, 2);
    const std::string cmd = args.front();
    args.erase(args.begin());
    Arena a;

    if (cmd == "help" || cmd == "--help" || cmd == "-h") return usage(std::cout, 0);
    if (cmd == "eval" && args.size() == 1) return cmd_eval(a, args[0]);
    if (cmd == "canon" && args.size() == 1) {
        std::cout << print(a, parse(a, args[0])) << "\n";
        return 0;
    }
    if (cmd == "birthday" && args.size() == 1) {
        std::cout << value_birthday(a, parse(a, args[0])) << "\n";
        return 0;
    }
    if (cmd == "outcome" && args.size() == 1) {
        std::cout << to_string(a.outcome(parse(a, args[0]))) << "\n";
        return 0;
    }
    if (cmd == "stops" && args.size() == 1) {
        FormId g = parse(a, args[0]);
        std::cout << "LS=" << left_stop(a, g).to_string()
                  << " RS=" << right_stop(a, g).to_string() << "\n";
        return 0;
    }
    if (cmd == "cmp" && args.size() == 2) return cmd_cmp(a, args[0], args[1]);
    if (cmd == "rd" && args.size() == 1) return cmd_distance(a, args[0], true);
    if (cmd == "ld" && args.size() == 1) return cmd_distance(a, args[0], false);
    if (cmd == "decompose") return cmd_decompose(a, std::move(args));
    if (cmd == "enumerate") return cmd_enumerate(a, std::move(args));
    if (cmd == "nimsum" && args.size() == 2) {
        std::cout << nim_sum(parse_uint_arg(args[0], kMaxNimberSize - 1),
                             parse_uint_arg(args[1], kMaxNimberSize - 1))
                  << "\n";
        return 0;
    }
    if (cmd == "nimmove" && !args.empty()) {
        std::vector<std::uint32_t> heaps;
        for (const std::string& s : args)
            heaps.push_back(parse_uint_arg(s, kMaxNimberSize - 1));
        auto mv = best_nim_move(heaps);
        if (mv)
            std::cout << "heap " << mv->first << " -> " << mv->second << "\n";
        else
            std::cout << "none\n";
        return 0;
    }
    if (cmd == "nummove") return cmd_nummove(a, std::move(args));
    if (cmd == "hackenbush" && args.size() == 1) {
        std::cout << "value: " << print(a, string_value(a, args[0])) << "\n"
                  << "birthday: " << string_birthday(a, args[0]) << "\n";
        return 0;
    }
    if (cmd == "verify" && args.size() == 1) return cmd_verify(a, args[0]);
    return usage(std::cerr, 2);
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return run(std::move(args));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
