#pragma once

#include "opgraph/free_graphs.hpp"
#include "opgraph/tree_poset.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing {

using namespace opgraph;

inline AlphabetPtr alpha(const char* spec) { return Alphabet::parse(spec); }
inline Tree T(const AlphabetPtr& a, const char* text) { return parse_term(text, a); }

inline std::vector<Tree> trees_up_to(const AlphabetPtr& a, int d) {
    std::vector<Tree> out;
    for (int k = 0; k <= d; ++k)
        for (auto& t : enumerate_trees(a, k)) out.push_back(t);
    return out;
}

inline std::string csv(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].get_str();
    }
    return out;
}

// Does some forest r satisfy t = s o [r]? Searched over all forests of bounded degree.
inline bool decomposes(const Tree& s, const Tree& t) {
    int budget = t.degree() - s.degree();
    if (budget < 0) return false;
    std::vector<Tree> pool = trees_up_to(t.alphabet(), budget);
    std::vector<Tree> pick(static_cast<std::size_t>(s.arity()));
    auto rec = [&](auto&& self, std::size_t slot, int left) -> bool {
        if (slot == pick.size()) return left == 0 && compose_full(s, pick) == t;
        for (const auto& r : pool) {
            if (r.degree() > left) continue;
            pick[slot] = r;
            if (self(self, slot + 1, left - r.degree())) return true;
        }
        return false;
    };
    return rec(rec, 0, budget);
}

// Reachability from s to t in the prefix graph.
inline bool reachable(const Tree& s, const Tree& t) {
    TreeComb level(s);
    for (int k = s.degree(); k < t.degree(); ++k) {
        TreeComb next;
        for (const auto& [x, c] : level.map())
            for (const auto& [y, w] : up_free(x).map())
                if (!next.contains(y)) next.add(y, 1);
        level = next;
    }
    return level.contains(t);
}

inline std::mt19937& rng() {
    static std::mt19937 g(20240611u);
    return g;
}

template <class V>
const typename V::value_type& pick(const V& v) {
    std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
    return v[d(rng())];
}

}  // namespace testing
