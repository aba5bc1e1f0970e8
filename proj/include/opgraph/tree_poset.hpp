#pragma once

#include "opgraph/series.hpp"
#include "opgraph/tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace opgraph {

using Forest = std::vector<Tree>;

std::string render_forest(const Forest& f);
Forest parse_forest(std::string_view text, const AlphabetPtr& alphabet);

class NotComparable : public std::invalid_argument {
public:
    NotComparable() : std::invalid_argument("trees are not comparable in the prefix order") {}
};

bool poset_leq(const Tree& s, const Tree& t);
Tree meet(const Tree& a, const Tree& b);
// Unification; nullopt when the roots clash somewhere.
std::optional<Tree> join(const Tree& a, const Tree& b);

// The forest r with t = s o [r1, ..., r_|s|].
Forest difference_forest(const Tree& s, const Tree& t);
// All prefixes of t, canonical order.
std::vector<Tree> prefixes(const Tree& t);

// Nonplanar undecorated multiset tree, kept in canonical form.
class Shadow {
public:
    Shadow() = default;
    explicit Shadow(std::vector<Shadow> children);

    const std::vector<Shadow>& children() const { return children_; }
    // Nested braces with children sorted, e.g. {{},{}}.
    const std::string& canonical() const { return text_; }

    bool operator==(const Shadow& o) const { return text_ == o.text_; }

private:
    std::vector<Shadow> children_;
    std::string text_ = "{}";
};

Shadow shadow(const Tree& t);
Int load(const Shadow& s);

// The tree #k[r1, ..., rk] over the alphabet extended by the reserved letter #k.
Tree diamond_graft(const Forest& f);

Int interval_count(const Tree& s, const Tree& t);
std::vector<Tree> interval_elements(const Tree& s, const Tree& t);
bool interval_isomorphic(const Tree& s, const Tree& t, const Tree& s2, const Tree& t2);

struct StringyCount {
    Int value;
    bool by_convention = false;
};

StringyCount stringy_count(const Alphabet& alphabet, int d);
bool is_stringy(const Tree& t);
// Elements covering at most one element.
bool is_co_irreducible(const Tree& t);

// Bivariate series counting intervals by degree of the bottom (q) and top (t).
Series2 interval_series(const Alphabet& alphabet, int t_trunc);

}  // namespace opgraph
