#include "cgt/hackenbush.hpp"

#include <stdexcept>
#include <vector>

#include "cgt/canonical.hpp"

namespace cgt {

FormId string_value(Arena& a, std::string_view edges) {
    if (edges.size() >= kMaxStringEdges)
        throw std::out_of_range("hackenbush string length guard exceeded");
    // prefix[i] is the position left standing after a cut at height i.
    std::vector<FormId> prefix{a.zero()};
    for (std::size_t k = 0; k < edges.size(); ++k) {
        std::vector<FormId> lefts, rights;
        for (std::size_t i = 0; i <= k; ++i) {
            switch (edges[i]) {
                case 'B': lefts.push_back(prefix[i]); break;
                case 'R': rights.push_back(prefix[i]); break;
                case 'G':
                    lefts.push_back(prefix[i]);
                    rights.push_back(prefix[i]);
                    break;
                default:
                    throw std::invalid_argument("hackenbush edges must be B, R or G");
            }
        }
        prefix.push_back(a.make_form(std::move(lefts), std::move(rights)));
    }
    return canonical(a, prefix.back());
}

int string_birthday(Arena& a, std::string_view edges) {
    return a.formal_birthday(string_value(a, edges));
}

}  // namespace cgt
