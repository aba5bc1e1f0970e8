#include "opgraph/fixtures.hpp"

#include "opgraph/free_graphs.hpp"
#include "opgraph/operads.hpp"
#include "opgraph/tree_poset.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace opgraph {

namespace {

using nlohmann::json;

std::string join_ints(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].get_str();
    }
    return out;
}

std::vector<Int> ints_of(const json& j) {
    std::vector<Int> v;
    for (const auto& x : j) v.emplace_back(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long>()));
    return v;
}

std::string strings_of(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += v[i];
    }
    return out;
}

std::vector<std::string> addresses(const std::vector<Address>& us) {
    std::vector<std::string> out;
    for (const auto& u : us) out.push_back(render_address(u));
    return out;
}

template <class E>
std::string comb_terms(const Combination<E>& f) {
    std::string out;
    for (const auto& [e, c] : f.terms()) out += c.get_str() + "*" + ElementTraits<E>::render(e) + " ";
    return out;
}

void check_hooks(const OperadPtr& op, const json& expected, FixtureResult& r) {
    std::vector<std::pair<Word, Int>> want;
    int d = 0;
    for (const auto& [key, val] : expected.items()) {
        Word w = op->parse(key);
        d = std::max(d, op->degree(w));
        want.emplace_back(w, Int(val.get<long>()));
    }
    std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) { return word_less(a.first, b.first); });
    auto g = make_operad_graphs(op);
    auto h = hook_series_up_to(g.u, d);
    std::vector<Int> exp, act;
    for (const auto& [w, v] : want) {
        exp.push_back(v);
        act.push_back(h.coeff(w));
    }
    r.expected = join_ints(exp);
    r.actual = join_ints(act);
    r.pass = exp == act;
}

void run_one(const json& f, FixtureResult& r) {
    const std::string kind = f.at("kind");
    AlphabetPtr alpha = f.contains("alphabet") ? Alphabet::parse(f["alphabet"].get<std::string>()) : nullptr;
    auto tree = [&](std::size_t i) { return parse_term(f.at("args").at(i).get<std::string>(), alpha); };

    if (kind == "paths-series") {
        auto exp = ints_of(f["expected"]);
        auto fg = make_free_graphs(alpha);
        const auto& g = f["graph"] == "u" ? fg.u : fg.v;
        auto p = initial_paths_series(g, static_cast<int>(exp.size()) - 1);
        r.expected = join_ints(exp);
        r.actual = join_ints(p.coeffs);
    } else if (kind == "theta-row-sums") {
        auto exp = ints_of(f["expected"]);
        r.expected = join_ints(exp);
        r.actual = join_ints(theta_row_sums(*alpha, static_cast<int>(exp.size()) - 1));
    } else if (kind == "stringy") {
        auto exp = ints_of(f["expected"]);
        std::vector<Int> act;
        for (int d = 0; d < static_cast<int>(exp.size()); ++d) act.push_back(stringy_count(*alpha, d).value);
        r.expected = join_ints(exp);
        r.actual = join_ints(act);
    } else if (kind == "gen-poly") {
        auto exp = ints_of(f["expected"]);
        auto p = gen_poly(*alpha);
        r.expected = join_ints(exp);
        r.actual = join_ints(p.coeffs);
    } else if (kind == "interval-series") {
        const auto& rows = f["expected"];
        auto s = interval_series(*alpha, static_cast<int>(rows.size()) - 1);
        std::string exp, act;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            exp += "[" + join_ints(ints_of(rows[j])) + "]";
            act += "[" + join_ints(s.t_coeff(static_cast<int>(j)).coeffs) + "]";
        }
        r.expected = exp;
        r.actual = act;
    } else if (kind == "interval-series-q1") {
        auto exp = ints_of(f["expected"]);
        auto s = interval_series(*alpha, static_cast<int>(exp.size()) - 1);
        std::vector<Int> act;
        for (const auto& c : s.at_q(1)) act.push_back(c.get_num());
        r.expected = join_ints(exp);
        r.actual = join_ints(act);
    } else if (kind == "meet") {
        r.expected = f["expected"];
        r.actual = render_term(meet(tree(0), tree(1)));
    } else if (kind == "join") {
        r.expected = f["expected"];
        auto j = join(tree(0), tree(1));
        r.actual = j ? render_term(*j) : "no upper bound";
    } else if (kind == "shadow") {
        r.expected = f["expected"];
        r.actual = shadow(tree(0)).canonical();
    } else if (kind == "load") {
        r.expected = std::to_string(f["expected"].get<long long>());
        r.actual = load(shadow(tree(0))).get_str();
    } else if (kind == "interval-isomorphic") {
        r.expected = f["expected"].get<bool>() ? "true" : "false";
        r.actual = interval_isomorphic(tree(0), tree(1), tree(2), tree(3)) ? "true" : "false";
    } else if (kind == "twisted-hook") {
        r.expected = std::to_string(f["expected"].get<long long>());
        r.actual = twisted_hook(tree(0)).get_str();
    } else if (kind == "non-first-leaves") {
        r.expected = strings_of(f["expected"].get<std::vector<std::string>>());
        r.actual = strings_of(addresses(node_stats(tree(0)).non_first_leaves));
    } else if (kind == "quasi-maximal") {
        r.expected = strings_of(f["expected"].get<std::vector<std::string>>());
        r.actual = strings_of(addresses(node_stats(tree(0)).quasi_maximal_nodes));
    } else if (kind == "internal-nodes") {
        r.expected = strings_of(f["expected"].get<std::vector<std::string>>());
        r.actual = strings_of(addresses(node_stats(tree(0)).internal_nodes));
    } else if (kind == "v-star") {
        r.expected = strings_of(f["expected"].get<std::vector<std::string>>());
        std::vector<std::string> act;
        for (const auto& t : v_star_free(tree(0)).support()) act.push_back(render_term(t));
        r.actual = strings_of(act);
    } else if (kind == "contract") {
        r.expected = f["expected"];
        r.actual = render_term(contract_node(tree(0), parse_address(f["args"][1].get<std::string>())));
    } else if (kind == "compose") {
        r.expected = f["expected"];
        r.actual = render_term(compose_index(tree(0), std::stoi(f["args"][1].get<std::string>()), tree(2)));
    } else if (kind == "self-duality-witness") {
        auto fg = make_free_graphs(alpha);
        TreeComb want;
        for (const auto& t : f["expected"]) want.add(parse_term(t[1].get<std::string>(), alpha), Int(t[0].get<long>()));
        r.expected = comb_terms(want);
        r.actual = comb_terms(duality_commutator(fg.uu_pair(), tree(0)));
    } else if (kind == "operad-hook") {
        check_hooks(parse_operad(f["operad"].get<std::string>()), f["expected"], r);
        return;
    } else if (kind == "operad-hook-factorial") {
        auto op = parse_operad(f["operad"].get<std::string>());
        int d = f["max"];
        auto h = hook_series_up_to(make_operad_graphs(op).u, d);
        bool ok = true;
        std::string bad;
        for (int k = 0; k <= d && ok; ++k)
            for (const auto& w : op->elements_of_degree(k))
                if (h.coeff(w) != factorial(static_cast<unsigned long>(op->arity(w) - 1))) {
                    ok = false;
                    bad = op->render(w) + " -> " + h.coeff(w).get_str();
                    break;
                }
        r.expected = "(|u|-1)! up to degree " + std::to_string(d);
        r.actual = ok ? r.expected : bad;
    } else if (kind == "duality-witness") {
        auto op = parse_operad(f["operad"].get<std::string>());
        auto g = make_operad_graphs(op);
        auto pair = f["pair"] == "uu" ? g.uu_pair() : g.uv_pair();
        auto disc = discover_phi(pair, f["max"].get<int>());
        WordComb want;
        for (const auto& t : f["expected"]) want.add(op->parse(t[1].get<std::string>()), Int(t[0].get<long>()));
        r.expected = "witness " + op->render(op->parse(f["witness"].get<std::string>())) + ": " + comb_terms(want);
        r.actual = disc.diagonal ? "diagonal" : "witness " + op->render(*disc.witness) + ": " + comb_terms(disc.commutator);
    } else {
        throw std::invalid_argument("unknown fixture kind '" + kind + "'");
    }
    r.pass = r.expected == r.actual;
}

bool selected(const std::string& id, const std::string& filter) {
    if (filter.empty()) return true;
    if (filter.back() == '*') return id.rfind(filter.substr(0, filter.size() - 1), 0) == 0;
    return id == filter;
}

}  // namespace

std::string default_fixture_path() { return std::string(OPGRAPH_DATA_DIR) + "/fixtures.json"; }

std::vector<FixtureResult> verify_fixtures(const std::string& filter, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file " + path);
    json doc = json::parse(in);
    std::vector<FixtureResult> out;
    for (const auto& f : doc.at("fixtures")) {
        FixtureResult r;
        r.id = f.at("id");
        if (!selected(r.id, filter)) continue;
        r.description = f.value("description", "");
        r.provenance = f.value("provenance", "");
        try {
            run_one(f, r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.actual = std::string("error: ") + e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace opgraph
