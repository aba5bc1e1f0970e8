#include "opgraph/fixtures.hpp"
#include "opgraph/free_graphs.hpp"
#include "opgraph/operads.hpp"
#include "opgraph/tree_poset.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

using namespace opgraph;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::vector<Tree> trees_up_to(const AlphabetPtr& a, int d) {
    std::vector<Tree> out;
    for (int k = 0; k <= d; ++k)
        for (auto& t : enumerate_trees(a, k)) out.push_back(t);
    return out;
}

// Every selected fixture passes.
void fixtures(Outcome& o, const std::string& filter) {
    auto rs = verify_fixtures(filter);
    if (rs.empty()) o.fail("no fixtures match " + filter);
    for (const auto& r : rs)
        if (!r.pass) o.fail(r.id + ": expected " + r.expected + ", got " + r.actual);
}

std::string seq(const std::vector<Int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s;
}

void c1(Outcome& o) { fixtures(o, "prefix-*"); }

void c2(Outcome& o) { fixtures(o, "twisted-*"); }

void c3(Outcome& o) {
    PhiFn<Tree> phi = [](const Tree& t) { return phi_free(t); };
    for (auto [spec, d] : {std::pair{"a:2", 5}, {"a:2,c:3", 4}, {"e:1,c:3", 4}}) {
        auto g = make_free_graphs(Alphabet::parse(spec));
        auto rep = check_phi_diagonal(g.uv_pair(), phi, d);
        if (!rep.ok) o.fail(std::string(spec) + " fails at " + render_term(*rep.witness));
    }
}

void c4(Outcome& o) {
    auto g = make_free_graphs(Alphabet::parse("a:2"));
    auto rep = check_phi_diagonal<Tree>(g.uu_pair(), [](const Tree& t) { return phi_self_singleton(t); }, 5);
    if (!rep.ok) o.fail("{a:2} fails at " + render_term(*rep.witness));
    auto ab = Alphabet::parse("a:2,b:2");
    auto disc = discover_phi(make_free_graphs(ab).uu_pair(), 2);
    TreeComb want = TreeComb(parse_term("a[*,*]", ab), 3) - TreeComb(parse_term("b[*,*]", ab), 1);
    if (disc.diagonal)
        o.fail("{a:2,b:2} unexpectedly diagonal");
    else if (render_term(*disc.witness) != "a[*,*]" || !(disc.commutator == want))
        o.fail("{a:2,b:2} witness " + render_term(*disc.witness) + ": " + disc.commutator.render());
    fixtures(o, "self-duality-ab");
}

void c5(Outcome& o) {
    for (auto [spec, d] : {std::pair{"a:2", 5}, {"a:2,c:3", 4}}) {
        auto g = make_free_graphs(Alphabet::parse(spec));
        auto hu = hook_series_up_to(g.u, d), hv = hook_series_up_to(g.v, d);
        for (const auto& t : trees_up_to(g.alphabet, d)) {
            Int h = hook_closed_form(t), th = twisted_hook(t);
            if (h != hu.coeff(t) || h != linear_extensions(t, false))
                o.fail("hook mismatch at " + render_term(t));
            if (th != hv.coeff(t) || th != linear_extensions(t, true))
                o.fail("twisted hook mismatch at " + render_term(t));
        }
    }
}

void c6(Outcome& o) {
    fixtures(o, "theta-*");
    // Row sums against the path counts of the prefix graph.
    for (const char* spec : {"a:2", "c:3", "a:2,b:2", "a:2,c:3"}) {
        auto a = Alphabet::parse(spec);
        auto rows = theta_row_sums(*a, 7);
        auto paths = initial_paths_series(make_free_graphs(a).u, 7).coeffs;
        if (rows != paths) o.fail(std::string(spec) + ": " + seq(rows) + " vs " + seq(paths));
    }
}

void c7(Outcome& o) {
    auto eac = Alphabet::parse("e:1,a:2,c:3");
    auto m = meet(parse_term("c[a[*,*],*,a[e[*],*]]", eac), parse_term("c[e[*],a[*,*],a[*,*]]", eac));
    if (render_term(m) != "c[*,*,a[*,*]]") o.fail("displayed meet gives " + render_term(m));
    auto j = join(parse_term("a[*,a[*,*]]", eac), parse_term("a[c[*,*,a[*,*]],*]", eac));
    if (!j || render_term(*j) != "a[c[*,*,a[*,*]],a[*,*]]") o.fail("displayed join differs");
    fixtures(o, "meet-eac");
    fixtures(o, "join-eac");
    for (const char* spec : {"a:2", "a:2,c:3"}) {
        auto a = Alphabet::parse(spec);
        auto ts = trees_up_to(a, 3);
        auto big = trees_up_to(a, 6);
        for (const auto& x : ts)
            for (const auto& y : ts) {
                auto mm = meet(x, y);
                if (!poset_leq(mm, x) || !poset_leq(mm, y)) o.fail("meet is not a lower bound");
                for (const auto& z : ts)
                    if (poset_leq(z, x) && poset_leq(z, y) && !poset_leq(z, mm)) o.fail("meet is not greatest");
                auto jj = join(x, y);
                bool bounded = false;
                for (const auto& z : big) {
                    if (z.degree() > x.degree() + y.degree()) break;
                    if (!poset_leq(x, z) || !poset_leq(y, z)) continue;
                    bounded = true;
                    if (!jj || !poset_leq(*jj, z)) o.fail("join is not least at " + render_term(x) + ", " + render_term(y));
                }
                if (bounded != jj.has_value()) o.fail("join existence differs");
            }
    }
    std::mt19937 rng(7);
    auto a = Alphabet::parse("a:2,c:3");
    auto tops = enumerate_trees(a, 5);
    auto pick = [&](const std::vector<Tree>& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
    for (int k = 0; k < 100; ++k) {
        auto elems = interval_elements(Tree::leaf(a), pick(tops));
        auto x = pick(elems), y = pick(elems), z = pick(elems);
        if (meet(x, *join(y, z)) != *join(meet(x, y), meet(x, z))) o.fail("distributivity fails");
    }
}

void c8(Outcome& o) {
    for (const char* spec : {"a:2", "a:2,c:3"}) {
        auto ts = trees_up_to(Alphabet::parse(spec), 4);
        for (const auto& s : ts)
            for (const auto& t : ts) {
                if (!poset_leq(s, t)) continue;
                long brute = 0;
                for (const auto& r : ts) brute += poset_leq(s, r) && poset_leq(r, t);
                if (load(shadow(diamond_graft(difference_forest(s, t)))) != brute)
                    o.fail("cardinality differs at " + render_term(s) + ", " + render_term(t));
            }
    }
    fixtures(o, "load-eac");
    fixtures(o, "shadow-eac");
    fixtures(o, "interval-series-a-q1");
    fixtures(o, "interval-series-a");
}

void c9(Outcome& o) {
    fixtures(o, "stringy-*");
    for (const char* spec : {"a:2", "c:3", "a:2,b:2", "a:2,c:3"}) {
        auto a = Alphabet::parse(spec);
        for (int d = 1; d <= 4; ++d) {
            long brute = 0;
            for (const auto& t : enumerate_trees(a, d)) brute += is_co_irreducible(t);
            if (stringy_count(*a, d).value != brute) o.fail(std::string(spec) + " differs at degree " + std::to_string(d));
        }
    }
}

void c10(Outcome& o) {
    for (const auto& op : {make_comp(), make_motz(), make_fcat(1), make_fcat(2), make_fcat(3), make_dias()}) {
        auto g = make_operad_graphs(op);
        auto rep = check_phi_diagonal<Word>(g.stated_pair(), [&](const Word& x) { return op->phi(x); }, 5);
        if (!rep.ok) o.fail(op->name() + " fails at " + op->render(*rep.witness));
    }
    fixtures(o, "dias-uv-witness");
}

void c11(Outcome& o) {
    for (const char* id : {"dias-hook", "comp-hook", "motz-hook", "fcat1-hook", "fcat2-hook"}) fixtures(o, id);
}

void c12(Outcome& o) {
    for (const auto& op : {make_comp(), make_motz(), make_fcat(1)}) {
        Treelike tl(op);
        for (int d = 0; d <= 3; ++d)
            for (const auto& x : op->elements_of_degree(d))
                if (!(tl.v_oracle(x) == op->v_closed(x))) o.fail(op->name() + " differs at " + op->render(x));
    }
    for (const auto& op : {make_as(), make_dias(), make_comp(), make_motz(), make_fcat(1), make_fcat(2)}) {
        auto h = Treelike(op).certify(3);
        if (!h.ok) o.fail(op->name() + ": " + h.witness);
    }
}

void c13(Outcome& o) {
    auto as = make_as();
    auto g = make_operad_graphs(as);
    Int f = 1;
    for (int n = 1; n <= 8; ++n) {
        if (n > 1) f *= n - 1;
        if (path_weight_sum(g.u, as->unit(), Word{n}) != f) o.fail("path weight at " + std::to_string(n));
    }
    fixtures(o, "as-hook");
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Outcome&)> run;
        double limit;
    };
    const std::vector<Criterion> criteria = {
        {1, "free U-graph initial paths", c1, 10},
        {2, "free V-graph initial paths", c2, 30},
        {3, "phi-diagonal duality of free graphs", c3, 60},
        {4, "singleton self-duality", c4, 0},
        {5, "hook oracle equivalence", c5, 0},
        {6, "theta row sums", c6, 0},
        {7, "lattice properties", c7, 0},
        {8, "interval machinery", c8, 0},
        {9, "stringy counts", c9, 0},
        {10, "operad dualities", c10, 0},
        {11, "operad hook fixtures", c11, 0},
        {12, "generic and explicit V agree", c12, 0},
        {13, "As chain hook", c13, 0},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto start = clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(clock::now() - start).count();
        if (c.limit > 0 && secs > c.limit) o.fail("took longer than " + std::to_string(static_cast<int>(c.limit)) + " s");
        std::printf("%s %2d %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.pass ? "" : ": ",
                    o.detail.c_str());
        failed += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
