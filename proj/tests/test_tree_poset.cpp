#include "support.hpp"

using namespace testing;

namespace {

// All r with s <= r <= t, by filtering the degree slices.
std::vector<Tree> interval_brute(const Tree& s, const Tree& t) {
    std::vector<Tree> out;
    for (int d = s.degree(); d <= t.degree(); ++d)
        for (const auto& r : enumerate_trees(t.alphabet(), d))
            if (poset_leq(s, r) && poset_leq(r, t)) out.push_back(r);
    sort_canonical(out);
    return out;
}

// Sibling-reversed copy; reversal keeps letters and arities.
Tree mirror(const Tree& t) {
    if (t.is_leaf()) return t;
    auto kids = t.children();
    std::reverse(kids.begin(), kids.end());
    for (auto& k : kids) k = mirror(k);
    return Tree::node(t.alphabet(), t.root_letter(), kids);
}

void collect(const Shadow& s, int parent, std::vector<int>& parents) {
    for (const auto& c : s.children()) {
        int id = static_cast<int>(parents.size());
        parents.push_back(parent);
        collect(c, id, parents);
    }
}

}  // namespace

TEST_CASE("prefix order agrees with reachability") {
    auto a = alpha("a:2");
    CHECK(poset_leq(Tree::leaf(a), T(a, "a[a[*,*],*]")));
    CHECK_FALSE(poset_leq(T(a, "a[*,a[*,*]]"), T(a, "a[a[*,*],*]")));
    auto ts = trees_up_to(a, 4);
    for (const auto& s : ts)
        for (const auto& t : ts) CHECK(poset_leq(s, t) == reachable(s, t));
}

TEST_CASE("displayed meet and join") {
    auto eac = alpha("e:1,a:2,c:3");
    CHECK(render_term(meet(T(eac, "c[a[*,*],*,a[e[*],*]]"), T(eac, "c[e[*],a[*,*],a[*,*]]"))) == "c[*,*,a[*,*]]");
    auto j = join(T(eac, "a[*,a[*,*]]"), T(eac, "a[c[*,*,a[*,*]],*]"));
    REQUIRE(j);
    CHECK(render_term(*j) == "a[c[*,*,a[*,*]],a[*,*]]");
    auto ab = alpha("a:2,b:2");
    CHECK_FALSE(join(T(ab, "a[*,*]"), T(ab, "b[*,*]")).has_value());
    CHECK(meet(T(ab, "a[*,*]"), Tree::leaf(ab)).is_leaf());
    CHECK(*join(Tree::leaf(ab), T(ab, "b[a[*,*],*]")) == T(ab, "b[a[*,*],*]"));
}

TEST_CASE("meet is the greatest lower bound and join the least upper bound") {
    for (const char* spec : {"a:2", "a:2,c:3"}) {
        auto a = alpha(spec);
        auto ts = trees_up_to(a, 3);
        auto big = trees_up_to(a, 6);
        for (const auto& x : ts)
            for (const auto& y : ts) {
                auto m = meet(x, y);
                CHECK(poset_leq(m, x));
                CHECK(poset_leq(m, y));
                for (const auto& z : ts)
                    if (poset_leq(z, x) && poset_leq(z, y)) CHECK(poset_leq(z, m));
                auto j = join(x, y);
                bool bounded = false;
                for (const auto& z : big) {
                    if (z.degree() > x.degree() + y.degree()) break;
                    if (!(poset_leq(x, z) && poset_leq(y, z))) continue;
                    bounded = true;
                    REQUIRE(j);
                    CHECK(poset_leq(*j, z));
                }
                CHECK(bounded == j.has_value());
                if (j) CHECK((poset_leq(x, *j) && poset_leq(y, *j)));
            }
    }
}

TEST_CASE("meet-semilattice axioms") {
    auto a = alpha("a:2,c:3");
    auto ts = trees_up_to(a, 2);
    for (const auto& x : ts) {
        CHECK(meet(x, x) == x);
        for (const auto& y : ts) {
            CHECK(meet(x, y) == meet(y, x));
            for (const auto& z : ts) CHECK(meet(meet(x, y), z) == meet(x, meet(y, z)));
        }
    }
}

TEST_CASE("intervals are distributive lattices") {
    auto a = alpha("a:2,c:3");
    auto tops = enumerate_trees(a, 5);
    for (int k = 0; k < 100; ++k) {
        const auto& t = pick(tops);
        auto elems = interval_elements(Tree::leaf(a), t);
        const auto& x = pick(elems);
        const auto& y = pick(elems);
        const auto& z = pick(elems);
        auto yz = join(y, z), xy = join(meet(x, y), meet(x, z));
        REQUIRE(yz);
        REQUIRE(xy);
        CHECK(meet(x, *yz) == *xy);
        auto lhs = join(x, meet(y, z));
        auto rhs = meet(*join(x, y), *join(x, z));
        REQUIRE(lhs);
        CHECK(*lhs == rhs);
    }
}

TEST_CASE("difference forests") {
    auto a = alpha("a:2,c:3");
    auto t = T(a, "c[a[*,*],*,a[*,c[*,*,*]]]");
    auto f = difference_forest(Tree::leaf(a), t);
    CHECK(f == Forest{t});
    auto g = difference_forest(t, t);
    CHECK(static_cast<int>(g.size()) == t.arity());
    for (const auto& r : g) CHECK(r.is_leaf());
    CHECK_THROWS_AS(difference_forest(T(a, "a[*,*]"), t), NotComparable);
    auto tops = enumerate_trees(a, 5);
    for (int k = 0; k < 50; ++k) {
        const auto& top = pick(tops);
        auto ps = prefixes(top);
        const auto& s = pick(ps);
        CHECK(compose_full(s, difference_forest(s, top)) == top);
    }
    CHECK(render_forest(parse_forest("a[*,*];*", a)) == "a[*,*];*");
}

TEST_CASE("shadows and load") {
    auto eac = alpha("e:1,a:2,c:3");
    auto t = T(eac, "c[a[*,*],c[e[*],*,a[*,*]],a[*,*]]");
    auto s = shadow(t);
    CHECK(s.canonical() == "{{{},{}},{},{}}");
    CHECK(load(s) == 20);
    CHECK(shadow(T(eac, "c[*,*,*]")).canonical() == "{}");
    CHECK(load(Shadow()) == 1);
    CHECK_THROWS(shadow(Tree::leaf(eac)));
    CHECK(shadow(mirror(t)) == s);
}

TEST_CASE("load counts prefixes") {
    auto a = alpha("e:1,a:2,c:3");
    for (const auto& t : trees_up_to(a, 4)) {
        auto p = prefixes(t);
        CHECK(load(shadow(diamond_graft({t}))) == Int(static_cast<unsigned long>(p.size())));
        CHECK(std::is_sorted(p.begin(), p.end(), canonical_less));
    }
}

TEST_CASE("interval cardinality and elements") {
    auto a = alpha("a:2");
    CHECK(interval_count(T(a, "a[*,*]"), T(a, "a[*,*]")) == 1);
    auto e = interval_elements(Tree::leaf(a), T(a, "a[a[*,*],*]"));
    REQUIRE(e.size() == 3);
    CHECK(render_term(e[0]) == "*");
    CHECK(render_term(e[1]) == "a[*,*]");
    CHECK(render_term(e[2]) == "a[a[*,*],*]");
    CHECK_THROWS_AS(interval_count(T(a, "a[*,a[*,*]]"), T(a, "a[a[*,*],*]")), NotComparable);
    for (const char* spec : {"a:2", "e:1,c:3"}) {
        auto b = alpha(spec);
        auto ts = trees_up_to(b, 4);
        for (const auto& s : ts)
            for (const auto& t : ts) {
                if (!poset_leq(s, t)) continue;
                auto brute = interval_brute(s, t);
                CHECK(interval_count(s, t) == Int(static_cast<unsigned long>(brute.size())));
                CHECK(interval_elements(s, t) == brute);
                Int product = 1;
                for (const auto& r : difference_forest(s, t)) product *= static_cast<unsigned long>(prefixes(r).size());
                CHECK(product == interval_count(s, t));
            }
    }
}

TEST_CASE("interval isomorphism") {
    auto eac = alpha("e:1,a:2,c:3");
    CHECK(interval_isomorphic(T(eac, "c[*,*,e[*]]"), T(eac, "c[a[e[*],a[*,*]],*,e[*]]"), T(eac, "a[*,*]"),
                              T(eac, "a[*,a[e[*],c[*,*,*]]]")));
    CHECK(interval_isomorphic(T(eac, "a[*,*]"), T(eac, "a[*,*]"), T(eac, "c[*,e[*],*]"), T(eac, "c[*,e[*],*]")));
    auto tops = enumerate_trees(eac, 4);
    auto leaf = Tree::leaf(eac);
    for (int k = 0; k < 50; ++k) {
        const auto& t = pick(tops);
        CHECK(interval_isomorphic(leaf, t, leaf, mirror(t)));
        const auto& u = pick(tops);
        if (interval_count(leaf, t) != interval_count(leaf, u)) CHECK_FALSE(interval_isomorphic(leaf, t, leaf, u));
    }
    CHECK_THROWS_AS(interval_isomorphic(T(eac, "a[*,*]"), T(eac, "c[*,*,*]"), leaf, leaf), NotComparable);
}

TEST_CASE("join-irreducibles of diamond intervals are stringy chains") {
    auto a = alpha("a:2,c:3");
    auto ts = trees_up_to(a, 3);
    for (int k = 0; k < 40; ++k) {
        Forest f{pick(ts), pick(ts)};
        auto top = diamond_graft(f);
        auto ext = top.alphabet();
        auto bottom = Tree::corolla(ext, static_cast<int>(ext->size()));
        auto elems = interval_elements(bottom, top);
        std::set<std::string> irreducible;
        for (const auto& x : elems) {
            int below = 0;
            for (const auto& y : up_star_free(x).support())
                if (poset_leq(bottom, y)) ++below;
            if (below == 1) irreducible.insert(render_term(x));
        }
        std::set<std::string> expected;
        for (std::size_t i = 0; i < f.size(); ++i)
            for (const auto& p : prefixes(f[i])) {
                if (p.is_leaf() || !is_stringy(p)) continue;
                auto lifted = Tree(ext, p.code());
                expected.insert(render_term(compose_index(bottom, static_cast<int>(i) + 1, lifted)));
            }
        CHECK(irreducible == expected);
    }
}

TEST_CASE("load counts order ideals of the shadow poset") {
    auto a = alpha("e:1,a:2,c:3");
    for (const auto& t : trees_up_to(a, 4)) {
        if (t.is_leaf()) continue;
        auto s = shadow(t);
        std::vector<int> parents;
        collect(s, -1, parents);
        const std::size_t n = parents.size();
        long ideals = 0, irreducible = 0;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            bool closed = true;
            for (std::size_t v = 0; v < n && closed; ++v)
                if ((mask >> v & 1u) && parents[v] >= 0 && !(mask >> parents[v] & 1u)) closed = false;
            if (!closed) continue;
            ++ideals;
            int tops = 0;
            for (std::size_t v = 0; v < n; ++v) {
                if (!(mask >> v & 1u)) continue;
                bool has_child = false;
                for (std::size_t w = 0; w < n; ++w)
                    if ((mask >> w & 1u) && parents[w] == static_cast<int>(v)) has_child = true;
                if (!has_child) ++tops;
            }
            if (tops == 1) ++irreducible;
        }
        CHECK(load(s) == ideals);
        CHECK(irreducible == static_cast<long>(n));
    }
}

TEST_CASE("stringy trees") {
    CHECK(stringy_count(*alpha("a:2"), 0).by_convention);
    CHECK(stringy_count(*alpha("a:2"), 0).value == 1);
    std::vector<Int> v;
    for (int d = 0; d <= 7; ++d) v.push_back(stringy_count(*alpha("a:2"), d).value);
    CHECK(csv(v) == "1,1,2,4,8,16,32,64");
    CHECK(stringy_count(*alpha("a:2,c:3"), 4).value == 250);
    for (const char* spec : {"a:2", "a:2,c:3", "e:1,c:3", "a:2,b:2"}) {
        auto a = alpha(spec);
        for (int d = 1; d <= 4; ++d) {
            long stringy = 0, co_irreducible = 0;
            for (const auto& t : enumerate_trees(a, d)) {
                stringy += is_stringy(t);
                co_irreducible += is_co_irreducible(t);
                CHECK(is_stringy(t) == is_co_irreducible(t));
            }
            CHECK(stringy_count(*a, d).value == stringy);
            CHECK(stringy == co_irreducible);
        }
    }
}

TEST_CASE("interval series") {
    auto a = alpha("a:2");
    auto s = interval_series(*a, 7);
    CHECK(s.coeff(0, 0) == 1);
    std::vector<Int> q1;
    for (const auto& c : s.at_q(1)) q1.push_back(c.get_num());
    CHECK(csv(q1) == "1,2,6,21,80,322,1348,5814");
    for (const char* spec : {"a:2", "e:1,c:3", "a:2,c:3"}) {
        auto b = alpha(spec);
        auto series = interval_series(*b, 4);
        std::map<std::pair<int, int>, long> brute;
        auto ts = trees_up_to(b, 4);
        for (const auto& x : ts)
            for (const auto& y : ts)
                if (poset_leq(x, y)) ++brute[{x.degree(), y.degree()}];
        for (int top = 0; top <= 4; ++top)
            for (int bottom = 0; bottom <= top; ++bottom)
                CHECK(series.coeff(bottom, top) == brute[{bottom, top}]);
    }
}
