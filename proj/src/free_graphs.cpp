#include "opgraph/free_graphs.hpp"

#include <algorithm>
#include <functional>

namespace opgraph {

namespace {

unsigned char at(const std::string& code, std::size_t pos) { return static_cast<unsigned char>(code[pos]); }

std::string corolla_code(const Alphabet& alpha, int id) {
    std::string c(1, static_cast<char>(id));
    c.append(static_cast<std::size_t>(alpha.arity(id)), '\0');
    return c;
}

std::string splice(const std::string& code, std::size_t begin, std::size_t end, const std::string& piece) {
    std::string out;
    out.reserve(code.size() - (end - begin) + piece.size());
    out.append(code, 0, begin);
    out += piece;
    out.append(code, end, std::string::npos);
    return out;
}

// Degree of the subtree at pos; pushes the degree of every internal node.
std::size_t subtree_degrees(const Alphabet& alpha, const std::string& code, std::size_t pos, int& degree,
                            std::vector<int>& out) {
    int id = at(code, pos++);
    if (id == 0) {
        degree = 0;
        return pos;
    }
    int total = 1;
    for (int j = 0; j < alpha.arity(id); ++j) {
        int d = 0;
        pos = subtree_degrees(alpha, code, pos, d, out);
        total += d;
    }
    out.push_back(total);
    degree = total;
    return pos;
}

// Hook recurrences over root decompositions; skip_first drops s1 from the multinomial.
std::size_t hook_rec(const Alphabet& alpha, const std::string& code, std::size_t pos, bool skip_first, int& degree,
                     Int& value) {
    int id = at(code, pos++);
    if (id == 0) {
        degree = 0;
        value = 1;
        return pos;
    }
    std::vector<unsigned long> parts;
    Int prod = 1;
    int total = 1;
    for (int j = 0; j < alpha.arity(id); ++j) {
        int d = 0;
        Int h;
        pos = hook_rec(alpha, code, pos, skip_first, d, h);
        prod *= h;
        total += d;
        if (!(skip_first && j == 0)) parts.push_back(static_cast<unsigned long>(d));
    }
    value = prod * multinomial(parts);
    degree = total;
    return pos;
}

bool is_proper_prefix(const Address& u, const Address& v) {
    return u.size() < v.size() && std::equal(u.begin(), u.end(), v.begin());
}

// u <=' v: v = u i v' with i >= 2, or u = v 1 u'.
bool twisted_below(const Address& u, const Address& v) {
    if (is_proper_prefix(u, v)) return v[u.size()] >= 2;
    if (is_proper_prefix(v, u)) return u[v.size()] == 1;
    return false;
}

std::vector<unsigned> predecessor_masks(const std::vector<Address>& nodes, bool twisted) {
    std::vector<unsigned> pred(nodes.size(), 0);
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = 0; b < nodes.size(); ++b) {
            if (a == b) continue;
            bool below = twisted ? twisted_below(nodes[a], nodes[b]) : is_proper_prefix(nodes[a], nodes[b]);
            if (below) pred[b] |= 1u << a;
        }
    return pred;
}

std::vector<Address> oracle_nodes(const Tree& t, int bound) {
    auto nodes = node_stats(t).internal_nodes;
    if (static_cast<int>(nodes.size()) > bound)
        throw OracleBoundError("degree " + std::to_string(nodes.size()) + " exceeds the oracle bound " +
                               std::to_string(bound));
    if (nodes.size() > 24) throw OracleBoundError("degree too large for the subset oracle");
    return nodes;
}

}  // namespace

TreeComb up_free(const Tree& t) {
    TreeComb out;
    const auto& alpha = *t.alphabet();
    const auto& code = t.code();
    for (int id = 1; id <= static_cast<int>(alpha.size()); ++id) {
        auto cor = corolla_code(alpha, id);
        for (std::size_t p = 0; p < code.size(); ++p)
            if (code[p] == 0) out.add(Tree(t.alphabet(), splice(code, p, p + 1, cor)), 1);
    }
    return out;
}

TreeComb up_star_free(const Tree& t) {
    TreeComb out;
    const auto& alpha = *t.alphabet();
    const auto& code = t.code();
    for (std::size_t p = 0; p < code.size(); ++p) {
        int id = at(code, p);
        if (id == 0) continue;
        auto k = static_cast<std::size_t>(alpha.arity(id));
        bool maximal = true;
        for (std::size_t j = 1; j <= k && maximal; ++j) maximal = code[p + j] == 0;
        if (maximal) out.add(Tree(t.alphabet(), splice(code, p, p + 1 + k, std::string(1, '\0'))), 1);
    }
    return out;
}

TreeComb v_star_free(const Tree& t) {
    TreeComb out;
    if (t.is_leaf()) return out;
    auto kids = t.children();
    bool tail_leaves = std::all_of(kids.begin() + 1, kids.end(), [](const Tree& s) { return s.is_leaf(); });
    if (tail_leaves) {
        out.add(kids.front(), 1);
        return out;
    }
    for (std::size_t j = 1; j < kids.size(); ++j) {
        for (const auto& [s, c] : v_star_free(kids[j]).map()) {
            auto row = kids;
            row[j] = s;
            out.add(Tree::node(t.alphabet(), t.root_letter(), row), c);
        }
    }
    return out;
}

TreeComb v_star_direct(const Tree& t) {
    TreeComb out;
    for (const auto& u : node_stats(t).quasi_maximal_nodes) out.add(contract_node(t, u), 1);
    return out;
}

TreeComb v_free(const Tree& t) {
    TreeComb out;
    const auto& alpha = *t.alphabet();
    for (int id = 1; id <= static_cast<int>(alpha.size()); ++id) {
        std::string code(1, static_cast<char>(id));
        code += t.code();
        code.append(static_cast<std::size_t>(alpha.arity(id) - 1), '\0');
        out.add(Tree(t.alphabet(), std::move(code)), 1);
    }
    if (t.is_leaf()) return out;
    auto kids = t.children();
    for (std::size_t j = 1; j < kids.size(); ++j) {
        for (const auto& [s, c] : v_free(kids[j]).map()) {
            auto row = kids;
            row[j] = s;
            out.add(Tree::node(t.alphabet(), t.root_letter(), row), c);
        }
    }
    return out;
}

Int hook_closed_form(const Tree& t) {
    std::vector<int> degrees;
    int d = 0;
    subtree_degrees(*t.alphabet(), t.code(), 0, d, degrees);
    Int den = 1;
    for (int x : degrees) den *= x;
    Int num = factorial(static_cast<unsigned long>(d));
    return num / den;
}

Int hook_recursive(const Tree& t) {
    int d = 0;
    Int h;
    hook_rec(*t.alphabet(), t.code(), 0, false, d, h);
    return h;
}

Int twisted_hook(const Tree& t) {
    int d = 0;
    Int h;
    hook_rec(*t.alphabet(), t.code(), 0, true, d, h);
    return h;
}

Int linear_extensions(const Tree& t, bool twisted, int bound) {
    auto nodes = oracle_nodes(t, bound);
    auto pred = predecessor_masks(nodes, twisted);
    const std::size_t n = nodes.size();
    std::vector<Int> ways(std::size_t{1} << n, Int(0));
    ways[0] = 1;
    for (std::size_t mask = 0; mask < ways.size(); ++mask) {
        if (ways[mask] == 0) continue;
        for (std::size_t v = 0; v < n; ++v) {
            if (mask >> v & 1u) continue;
            if ((pred[v] & mask) == pred[v]) ways[mask | (std::size_t{1} << v)] += ways[mask];
        }
    }
    return ways.back();
}

std::vector<std::vector<Address>> list_linear_extensions(const Tree& t, bool twisted, int bound) {
    auto nodes = oracle_nodes(t, bound);
    auto pred = predecessor_masks(nodes, twisted);
    std::vector<std::vector<Address>> out;
    std::vector<Address> current;
    std::function<void(unsigned)> rec = [&](unsigned mask) {
        if (current.size() == nodes.size()) {
            out.push_back(current);
            return;
        }
        for (std::size_t v = 0; v < nodes.size(); ++v) {
            if (mask >> v & 1u) continue;
            if ((pred[v] & mask) != pred[v]) continue;
            current.push_back(nodes[v]);
            rec(mask | (1u << v));
            current.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Int>> theta_table(const Alphabet& alphabet, int d_max) {
    int m = std::max(1, max_arity(alphabet));
    int n_max = 1 + (m - 1) * d_max;
    std::vector<std::vector<Int>> theta(static_cast<std::size_t>(d_max) + 1,
                                        std::vector<Int>(static_cast<std::size_t>(n_max) + 1, Int(0)));
    theta[0][1] = 1;
    for (int d = 1; d <= d_max; ++d)
        for (int n = 1; n <= n_max; ++n) {
            Int s = 0;
            for (const auto& l : alphabet.letters()) {
                int prev = n + 1 - l.arity;
                if (l.arity > n || prev <= 0) continue;
                s += Int(prev) * theta[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(prev)];
            }
            theta[static_cast<std::size_t>(d)][static_cast<std::size_t>(n)] = s;
        }
    return theta;
}

std::vector<Int> theta_row_sums(const Alphabet& alphabet, int d_max) {
    auto theta = theta_table(alphabet, d_max);
    int m = std::max(1, max_arity(alphabet));
    std::vector<Int> sums;
    for (int d = 0; d <= d_max; ++d) {
        Int s = 0;
        for (int n = 1; n <= 1 + (m - 1) * d; ++n) s += theta[static_cast<std::size_t>(d)][static_cast<std::size_t>(n)];
        sums.push_back(s);
    }
    return sums;
}

Int phi_free(const Tree& t) {
    return Int(static_cast<unsigned long>(t.alphabet()->size())) * count_non_first_leaves(t);
}

Int phi_self_singleton(const Tree& t) {
    if (t.alphabet()->size() != 1) throw std::invalid_argument("self-duality map needs a singleton alphabet");
    return t.arity() - count_maximal_nodes(t);
}

FreeGraphs make_free_graphs(const AlphabetPtr& alphabet) {
    FreeGraphs fg;
    fg.alphabet = alphabet;
    fg.universe = std::make_shared<TreeUniverse>(alphabet);
    auto uni = fg.universe;
    auto rank = [](const Tree& t) { return t.degree(); };
    auto slices = [uni](int d) -> const std::vector<Tree>& { return uni->slice(d); };

    fg.u.name = "U";
    fg.u.root = Tree::leaf(alphabet);
    fg.u.rank = rank;
    fg.u.universe = slices;
    fg.u.up = up_free;
    fg.u.down = up_star_free;

    fg.v.name = "V";
    fg.v.root = Tree::leaf(alphabet);
    fg.v.rank = rank;
    fg.v.universe = slices;
    fg.v.up = v_free;
    fg.v.down = v_star_free;
    return fg;
}

GradedGraph<Tree> without_closed_adjoint(const GradedGraph<Tree>& g) {
    GradedGraph<Tree> out = g;
    out.down = nullptr;
    out.cache = std::make_shared<AdjointCache<Tree>>();
    return out;
}

}  // namespace opgraph
