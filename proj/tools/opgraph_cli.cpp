#include "opgraph/fixtures.hpp"
#include "opgraph/free_graphs.hpp"
#include "opgraph/operads.hpp"
#include "opgraph/tree_poset.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace opgraph;
using nlohmann::json;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool g_json = false;

json int_json(const Int& v) { return v.fits_slong_p() ? json(v.get_si()) : json(v.get_str()); }

std::string csv(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].get_str();
    }
    return out;
}

json csv_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(int_json(x));
    return a;
}

template <class E>
json comb_json(const Combination<E>& f) {
    json a = json::array();
    for (const auto& [e, c] : f.terms()) a.push_back({int_json(c), ElementTraits<E>::render(e)});
    return a;
}

void print(const json& j, const std::string& text) {
    if (g_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

template <class E>
int report_duality(const DualityReport<E>& rep, int d, const std::function<std::string(const E&)>& render) {
    json j{{"ok", rep.ok}, {"checked", rep.checked}, {"max", d}};
    std::string text;
    if (rep.ok) {
        text = "ok: phi-diagonal on " + std::to_string(rep.checked) + " elements up to degree " + std::to_string(d);
    } else {
        j["witness"] = render(*rep.witness);
        j["commutator"] = comb_json(rep.commutator);
        j["expected"] = int_json(rep.expected);
        text = "fail: witness " + render(*rep.witness) + "\n  commutator: " + rep.commutator.render() +
               "\n  expected: " + rep.expected.get_str() + "*" + render(*rep.witness);
    }
    print(j, text);
    return rep.ok ? 0 : 1;
}

template <class E>
int report_discovery(const PhiDiscovery<E>& disc, const std::function<std::string(const E&)>& render) {
    json j{{"diagonal", disc.diagonal}};
    std::string text;
    if (disc.diagonal) {
        json table = json::array();
        text = "diagonal";
        for (const auto& [x, k] : disc.table) {
            table.push_back({render(x), int_json(k)});
            text += "\n" + render(x) + " " + k.get_str();
        }
        j["phi"] = table;
    } else {
        j["witness"] = render(*disc.witness);
        j["commutator"] = comb_json(disc.commutator);
        text = "not diagonal: witness " + render(*disc.witness) + "\n  commutator: " + disc.commutator.render();
    }
    print(j, text);
    return disc.diagonal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded graphs of free and concrete nonsymmetric operads"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "Machine-readable output");

    std::string alphabet_spec, operad_spec, graph = "u", pair = "uv", filter;
    int degree = 0, max = 5;
    bool list = false, discover = false, elements = false;
    std::string q_value;
    std::vector<std::string> positional;

    auto* trees = app.add_subcommand("trees", "Count or list the trees of a degree");
    trees->add_option("--alphabet", alphabet_spec)->required();
    trees->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);
    trees->add_flag("--list", list);

    auto* hook = app.add_subcommand("hook", "Hook coefficients of the prefix graph");
    auto* thook = app.add_subcommand("twisted-hook", "Hook coefficients of the twisted prefix graph");
    for (auto* s : {hook, thook}) {
        s->add_option("--alphabet", alphabet_spec)->required();
        s->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);
    }

    auto* paths = app.add_subcommand("paths-series", "Initial paths series");
    paths->add_option("--alphabet", alphabet_spec)->required();
    paths->add_option("--graph", graph)->check(CLI::IsMember({"u", "v"}));
    paths->add_option("--max", max)->required()->check(CLI::NonNegativeNumber);

    auto* duality = app.add_subcommand("check-duality", "Check phi-diagonal duality");
    auto* dual_alpha = duality->add_option("--alphabet", alphabet_spec);
    auto* dual_op = duality->add_option("--operad", operad_spec);
    dual_alpha->excludes(dual_op);
    duality->add_option("--pair", pair)->check(CLI::IsMember({"uv", "uu"}));
    duality->add_option("--max", max)->required()->check(CLI::NonNegativeNumber);
    duality->add_flag("--discover-phi", discover);

    auto* poset = app.add_subcommand("poset", "Prefix poset operations");
    poset->add_option("action", graph, "meet | join | interval | interval-series | stringy")
        ->required()
        ->check(CLI::IsMember({"meet", "join", "interval", "interval-series", "stringy"}));
    poset->add_option("terms", positional, "Trees");
    poset->add_option("--alphabet", alphabet_spec)->required();
    poset->add_option("--max", max)->check(CLI::NonNegativeNumber);
    poset->add_option("--q", q_value, "Specialize q to an integer");
    poset->add_flag("--elements", elements, "List interval elements");

    auto* operad = app.add_subcommand("operad", "Operad graphs: up | v | v-oracle | hook | generators");
    std::string action;
    operad->add_option("operad", operad_spec)->required();
    operad->add_option("action", action)->required()->check(
        CLI::IsMember({"up", "v", "v-oracle", "hook", "generators"}));
    operad->add_option("element", positional);
    operad->add_option("--max", max)->check(CLI::NonNegativeNumber);

    auto* dot = app.add_subcommand("export-dot", "Graphviz export of a rank range");
    auto* dot_alpha = dot->add_option("--alphabet", alphabet_spec);
    auto* dot_op = dot->add_option("--operad", operad_spec);
    dot_alpha->excludes(dot_op);
    dot->add_option("--graph", graph)->check(CLI::IsMember({"u", "v"}));
    dot->add_option("--max", max)->required()->check(CLI::NonNegativeNumber);

    auto* fixtures = app.add_subcommand("verify-fixtures", "Run the bundled fixtures");
    fixtures->add_option("--filter", filter, "Fixture id, or a prefix ending in *");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        auto alpha = [&] {
            if (alphabet_spec.empty()) throw UsageError("--alphabet is required");
            return Alphabet::parse(alphabet_spec);
        };
        auto tree_arg = [&](const AlphabetPtr& a, std::size_t i) {
            if (positional.size() <= i) throw UsageError("missing tree argument");
            return parse_term(positional[i], a);
        };

        if (*trees) {
            auto a = alpha();
            auto ts = enumerate_trees(a, degree);
            json j{{"degree", degree}, {"count", ts.size()}};
            std::string text = std::to_string(ts.size());
            if (list) {
                json arr = json::array();
                for (const auto& t : ts) {
                    arr.push_back(render_term(t));
                    text += "\n" + render_term(t);
                }
                j["trees"] = arr;
            }
            print(j, text);
            return 0;
        }

        if (*hook || *thook) {
            auto a = alpha();
            json arr = json::array();
            std::string text;
            for (const auto& t : enumerate_trees(a, degree)) {
                Int h = *hook ? hook_closed_form(t) : twisted_hook(t);
                arr.push_back({render_term(t), int_json(h)});
                if (!text.empty()) text += "\n";
                text += render_term(t) + " " + h.get_str();
            }
            print(arr, text);
            return 0;
        }

        if (*paths) {
            auto fg = make_free_graphs(alpha());
            auto p = initial_paths_series(graph == "u" ? fg.u : fg.v, max);
            print(csv_json(p.coeffs), csv(p.coeffs));
            return 0;
        }

        if (*duality) {
            if (!alphabet_spec.empty()) {
                auto fg = make_free_graphs(alpha());
                auto p = pair == "uv" ? fg.uv_pair() : fg.uu_pair();
                std::function<std::string(const Tree&)> render = [](const Tree& t) { return render_term(t); };
                if (discover || (pair == "uu" && fg.alphabet->size() != 1)) return report_discovery(discover_phi(p, max), render);
                PhiFn<Tree> phi = pair == "uv" ? PhiFn<Tree>(phi_free) : PhiFn<Tree>(phi_self_singleton);
                return report_duality(check_phi_diagonal(p, phi, max), max, render);
            }
            if (operad_spec.empty()) throw UsageError("check-duality needs --alphabet or --operad");
            auto op = parse_operad(operad_spec);
            auto g = make_operad_graphs(op);
            auto p = pair == "uv" ? g.uv_pair() : g.uu_pair();
            std::function<std::string(const Word&)> render = [op](const Word& w) { return op->render(w); };
            bool stated = (pair == "uu") == op->uu_pair();
            if (discover || !stated) return report_discovery(discover_phi(p, max), render);
            PhiFn<Word> phi = [op](const Word& w) { return op->phi(w); };
            return report_duality(check_phi_diagonal(p, phi, max), max, render);
        }

        if (*poset) {
            auto a = alpha();
            if (graph == "meet") {
                auto m = render_term(meet(tree_arg(a, 0), tree_arg(a, 1)));
                print(json(m), m);
                return 0;
            }
            if (graph == "join") {
                auto j = join(tree_arg(a, 0), tree_arg(a, 1));
                std::string text = j ? render_term(*j) : "no upper bound";
                print(j ? json(text) : json(nullptr), text);
                return 0;
            }
            if (graph == "interval") {
                auto s = tree_arg(a, 0), t = tree_arg(a, 1);
                Int n = interval_count(s, t);
                json j{{"count", int_json(n)}, {"shadow", shadow(diamond_graft(difference_forest(s, t))).canonical()}};
                std::string text = n.get_str();
                if (elements) {
                    json arr = json::array();
                    for (const auto& r : interval_elements(s, t)) {
                        arr.push_back(render_term(r));
                        text += "\n" + render_term(r);
                    }
                    j["elements"] = arr;
                }
                print(j, text);
                return 0;
            }
            if (graph == "interval-series") {
                auto s = interval_series(*a, max);
                if (!q_value.empty()) {
                    Int q(q_value);
                    std::vector<Int> v;
                    for (const auto& c : s.at_q(Rat(q))) v.push_back(c.get_num());
                    print(csv_json(v), csv(v));
                } else {
                    json rows = json::array();
                    for (int k = 0; k <= max; ++k) rows.push_back(csv_json(s.t_coeff(k).coeffs));
                    print(rows, s.render());
                }
                return 0;
            }
            std::vector<Int> v;
            for (int d = 0; d <= max; ++d) v.push_back(stringy_count(*a, d).value);
            print(csv_json(v), csv(v));
            return 0;
        }

        if (*operad) {
            auto op = parse_operad(operad_spec);
            auto elem = [&] {
                if (positional.empty()) throw UsageError("missing operad element");
                return op->parse(positional[0]);
            };
            auto show = [&](const WordComb& f) {
                std::string text;
                for (const auto& [w, c] : f.terms()) {
                    if (!text.empty()) text += " + ";
                    text += c.get_str() + "*" + op->render(w);
                }
                print(comb_json(f), text.empty() ? "0" : text);
            };
            if (action == "up") {
                show(up_operad(*op, elem()));
            } else if (action == "v") {
                show(op->v_closed(elem()));
            } else if (action == "v-oracle") {
                Treelike tl(op);
                show(tl.v_oracle(elem()));
            } else if (action == "hook") {
                auto g = make_operad_graphs(op);
                auto h = hook_series_up_to(g.u, max);
                json arr = json::array();
                std::string text;
                for (int d = 0; d <= max; ++d)
                    for (const auto& w : g.universe->slice(d)) {
                        arr.push_back({op->render(w), int_json(h.coeff(w))});
                        if (!text.empty()) text += "\n";
                        text += op->render(w) + " " + h.coeff(w).get_str();
                    }
                print(arr, text);
            } else {
                auto gens = minimal_generators(*op, max);
                json arr = json::array();
                std::string text;
                for (const auto& w : gens) {
                    arr.push_back(op->render(w));
                    if (!text.empty()) text += " ";
                    text += op->render(w);
                }
                print(arr, text);
            }
            return 0;
        }

        if (*dot) {
            if (!alphabet_spec.empty()) {
                auto fg = make_free_graphs(alpha());
                const auto& g = graph == "u" ? fg.u : fg.v;
                if (g_json)
                    std::cout << export_json(g, 0, max).dump() << "\n";
                else
                    std::cout << export_dot(g, 0, max);
                return 0;
            }
            if (operad_spec.empty()) throw UsageError("export-dot needs --alphabet or --operad");
            auto og = make_operad_graphs(parse_operad(operad_spec));
            const auto& g = graph == "u" ? og.u : og.v;
            if (g_json)
                std::cout << export_json(g, 0, max).dump() << "\n";
            else
                std::cout << export_dot(g, 0, max);
            return 0;
        }

        auto results = verify_fixtures(filter);
        if (results.empty()) throw UsageError("no fixture matches '" + filter + "'");
        bool ok = true;
        json arr = json::array();
        std::string text;
        for (const auto& r : results) {
            ok = ok && r.pass;
            arr.push_back({{"id", r.id}, {"pass", r.pass}, {"provenance", r.provenance}, {"expected", r.expected},
                           {"actual", r.actual}});
            if (!text.empty()) text += "\n";
            text += (r.pass ? "PASS " : "FAIL ") + r.id;
            if (!r.pass) text += "\n  expected: " + r.expected + "\n  actual:   " + r.actual;
        }
        print(arr, text);
        return ok ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const AlphabetError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const OperadError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
