#include "opgraph/tree.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace opgraph {

namespace {

unsigned char at(const std::string& code, std::size_t pos) { return static_cast<unsigned char>(code[pos]); }

std::size_t render_at(const Alphabet& alpha, const std::string& code, std::size_t pos, std::string& out) {
    int id = at(code, pos++);
    if (id == 0) {
        out += '*';
        return pos;
    }
    out += alpha.letter(id).name;
    out += '[';
    for (int j = 0; j < alpha.arity(id); ++j) {
        if (j) out += ',';
        pos = render_at(alpha, code, pos, out);
    }
    out += ']';
    return pos;
}

nlohmann::json json_at(const Alphabet& alpha, const std::string& code, std::size_t& pos) {
    int id = at(code, pos++);
    if (id == 0) return nullptr;
    nlohmann::json children = nlohmann::json::array();
    for (int j = 0; j < alpha.arity(id); ++j) children.push_back(json_at(alpha, code, pos));
    return {{"letter", alpha.letter(id).name}, {"children", children}};
}

class TermParser {
public:
    TermParser(std::string_view text, const Alphabet& alpha) : text_(text), alpha_(alpha) {}

    std::string run() {
        std::string code;
        term(code);
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return code;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    static bool name_char(char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '#';
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    void term(std::string& code) {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        if (text_[pos_] == '*') {
            ++pos_;
            code.push_back('\0');
            return;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
        if (start == pos_) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        auto name = text_.substr(start, pos_ - start);
        auto id = alpha_.find(name);
        if (!id) throw ParseError("unknown letter '" + std::string(name) + "'", start);
        code.push_back(static_cast<char>(*id));
        expect('[');
        int count = 0;
        for (;;) {
            term(code);
            ++count;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                continue;
            }
            break;
        }
        expect(']');
        if (count != alpha_.arity(*id))
            throw ParseError("letter '" + std::string(name) + "' has arity " + std::to_string(alpha_.arity(*id)) +
                                 " but got " + std::to_string(count) + " children",
                             start);
    }

    std::string_view text_;
    const Alphabet& alpha_;
    std::size_t pos_ = 0;
};

struct StatsWalker {
    const Alphabet& alpha;
    const std::string& code;
    NodeStats& out;
    Address addr;

    std::size_t walk(std::size_t pos, bool no_one) {
        out.nodes.push_back(addr);
        int id = at(code, pos);
        if (id == 0) {
            out.leaves.push_back(addr);
            if (no_one) out.non_first_leaves.push_back(addr);
            return pos + 1;
        }
        out.internal_nodes.push_back(addr);
        int k = alpha.arity(id);
        bool all_leaves = true, tail_leaves = true;
        std::size_t p = pos + 1;
        for (int j = 1; j <= k; ++j) {
            bool leaf = at(code, p) == 0;
            all_leaves = all_leaves && leaf;
            if (j >= 2) tail_leaves = tail_leaves && leaf;
            addr.push_back(j);
            p = walk(p, no_one && j != 1);
            addr.pop_back();
        }
        if (all_leaves) out.maximal_nodes.push_back(addr);
        if (no_one && tail_leaves) out.quasi_maximal_nodes.push_back(addr);
        return p;
    }
};

bool prefix_at(const Alphabet& alpha, const std::string& s, std::size_t& ps, const std::string& t, std::size_t& pt) {
    int id = at(s, ps);
    if (id == 0) {
        ++ps;
        pt = subtree_end(alpha, t, pt);
        return true;
    }
    if (at(t, pt) != id) return false;
    ++ps;
    ++pt;
    for (int j = 0; j < alpha.arity(id); ++j)
        if (!prefix_at(alpha, s, ps, t, pt)) return false;
    return true;
}

void sort_addresses(std::vector<Address>& v) { std::sort(v.begin(), v.end()); }

}  // namespace

std::string render_address(const Address& u) {
    if (u.empty()) return "";
    bool compact = std::all_of(u.begin(), u.end(), [](int x) { return x <= 9; });
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!compact && i) out += '.';
        out += std::to_string(u[i]);
    }
    return out;
}

Address parse_address(std::string_view text) {
    Address u;
    if (text.empty() || text == "e" || text == "eps") return u;
    if (text.find('.') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            auto dot = text.find('.', start);
            auto part = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
            if (part.empty()) throw TreeError("bad address '" + std::string(text) + "'");
            int v = 0;
            for (char c : part) {
                if (c < '0' || c > '9') throw TreeError("bad address '" + std::string(text) + "'");
                v = v * 10 + (c - '0');
            }
            if (v < 1) throw TreeError("address entries must be positive");
            u.push_back(v);
            if (dot == std::string_view::npos) break;
            start = dot + 1;
        }
        return u;
    }
    for (char c : text) {
        if (c < '1' || c > '9') throw TreeError("bad address '" + std::string(text) + "'");
        u.push_back(c - '0');
    }
    return u;
}

Tree Tree::leaf(AlphabetPtr alphabet) { return Tree(std::move(alphabet), std::string(1, '\0')); }

Tree Tree::corolla(AlphabetPtr alphabet, int letter) {
    int k = alphabet->arity(letter);
    std::string code(1, static_cast<char>(letter));
    code.append(static_cast<std::size_t>(k), '\0');
    return Tree(std::move(alphabet), std::move(code));
}

Tree Tree::node(AlphabetPtr alphabet, int letter, const std::vector<Tree>& children) {
    if (static_cast<int>(children.size()) != alphabet->arity(letter))
        throw TreeError("child count does not match arity of '" + alphabet->letter(letter).name + "'");
    std::string code(1, static_cast<char>(letter));
    for (const auto& c : children) code += c.code();
    return Tree(std::move(alphabet), std::move(code));
}

std::vector<Tree> Tree::children() const {
    std::vector<Tree> out;
    int id = root_letter();
    if (id == 0) return out;
    std::size_t p = 1;
    for (int j = 0; j < alpha_->arity(id); ++j) {
        std::size_t e = subtree_end(*alpha_, code_, p);
        out.emplace_back(alpha_, code_.substr(p, e - p));
        p = e;
    }
    return out;
}

Tree Tree::child(int j) const { return subtree_at(*this, Address{j}); }

int Tree::degree() const {
    return static_cast<int>(std::count_if(code_.begin(), code_.end(), [](char c) { return c != 0; }));
}

int Tree::arity() const { return static_cast<int>(std::count(code_.begin(), code_.end(), '\0')); }

Tree parse_term(std::string_view text, const AlphabetPtr& alphabet) {
    return Tree(alphabet, TermParser(text, *alphabet).run());
}

std::string render_term(const Tree& t) {
    std::string out;
    render_at(*t.alphabet(), t.code(), 0, out);
    return out;
}

nlohmann::json tree_to_json(const Tree& t) {
    std::size_t pos = 0;
    return json_at(*t.alphabet(), t.code(), pos);
}

bool canonical_less(const Tree& a, const Tree& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.code() == b.code()) return false;
    return render_term(a) < render_term(b);
}

void sort_canonical(std::vector<Tree>& trees) {
    std::vector<std::pair<std::pair<int, std::string>, std::size_t>> keys;
    keys.reserve(trees.size());
    for (std::size_t i = 0; i < trees.size(); ++i) keys.push_back({{trees[i].degree(), render_term(trees[i])}, i});
    std::sort(keys.begin(), keys.end());
    std::vector<Tree> out;
    out.reserve(trees.size());
    for (auto& k : keys) out.push_back(std::move(trees[k.second]));
    trees = std::move(out);
}

std::size_t subtree_end(const Alphabet& alphabet, const std::string& code, std::size_t pos) {
    long need = 1;
    while (need > 0) {
        need += alphabet.arity(at(code, pos++)) - 1;
    }
    return pos;
}

std::size_t node_offset(const Tree& t, const Address& u) {
    const auto& alpha = *t.alphabet();
    const auto& code = t.code();
    std::size_t p = 0;
    for (int j : u) {
        int id = at(code, p);
        if (id == 0 || j < 1 || j > alpha.arity(id))
            throw TreeError("address '" + render_address(u) + "' is not a node of " + render_term(t));
        ++p;
        for (int k = 1; k < j; ++k) p = subtree_end(alpha, code, p);
    }
    return p;
}

Tree subtree_at(const Tree& t, const Address& u) {
    std::size_t p = node_offset(t, u);
    std::size_t e = subtree_end(*t.alphabet(), t.code(), p);
    return Tree(t.alphabet(), t.code().substr(p, e - p));
}

NodeStats node_stats(const Tree& t) {
    NodeStats s;
    StatsWalker w{*t.alphabet(), t.code(), s, {}};
    w.walk(0, true);
    sort_addresses(s.maximal_nodes);
    sort_addresses(s.quasi_maximal_nodes);
    return s;
}

std::vector<Address> leaf_addresses(const Tree& t) { return node_stats(t).leaves; }

int count_non_first_leaves(const Tree& t) { return static_cast<int>(node_stats(t).non_first_leaves.size()); }

int count_maximal_nodes(const Tree& t) {
    const auto& alpha = *t.alphabet();
    const auto& code = t.code();
    int count = 0;
    for (std::size_t p = 0; p < code.size(); ++p) {
        int id = at(code, p);
        if (id == 0) continue;
        int k = alpha.arity(id);
        bool maximal = true;
        for (int j = 1; j <= k && maximal; ++j) maximal = at(code, p + static_cast<std::size_t>(j)) == 0;
        count += maximal;
    }
    return count;
}

Tree compose_index(const Tree& t, int i, const Tree& s) {
    if (i < 1) throw TreeError("leaf index must be positive");
    const auto& code = t.code();
    int seen = 0;
    for (std::size_t p = 0; p < code.size(); ++p) {
        if (code[p] != 0) continue;
        if (++seen == i) {
            std::string out;
            out.reserve(code.size() + s.code().size() - 1);
            out.append(code, 0, p);
            out += s.code();
            out.append(code, p + 1, std::string::npos);
            return Tree(t.alphabet(), std::move(out));
        }
    }
    throw TreeError("leaf index " + std::to_string(i) + " out of range for arity " + std::to_string(seen));
}

int leaf_index(const Tree& t, const Address& u) {
    std::size_t p = node_offset(t, u);
    if (t.code()[p] != 0) throw TreeError("address '" + render_address(u) + "' is not a leaf");
    return 1 + static_cast<int>(std::count(t.code().begin(), t.code().begin() + static_cast<long>(p), '\0'));
}

Tree compose_address(const Tree& t, const Address& u, const Tree& s) { return compose_index(t, leaf_index(t, u), s); }

Tree compose_full(const Tree& t, const std::vector<Tree>& forest) {
    if (static_cast<int>(forest.size()) != t.arity())
        throw TreeError("forest length " + std::to_string(forest.size()) + " does not match arity " +
                        std::to_string(t.arity()));
    std::string out;
    std::size_t k = 0;
    for (char c : t.code()) {
        if (c == 0) out += forest[k++].code();
        else out += c;
    }
    return Tree(t.alphabet(), std::move(out));
}

Tree delete_node(const Tree& t, const Address& u) {
    std::size_t p = node_offset(t, u);
    const auto& code = t.code();
    int id = at(code, p);
    if (id == 0) throw TreeError("node '" + render_address(u) + "' is a leaf");
    auto k = static_cast<std::size_t>(t.alphabet()->arity(id));
    for (std::size_t j = 1; j <= k; ++j)
        if (code[p + j] != 0) throw TreeError("node '" + render_address(u) + "' is not maximal");
    std::string out = code.substr(0, p);
    out += '\0';
    out.append(code, p + 1 + k, std::string::npos);
    return Tree(t.alphabet(), std::move(out));
}

Tree contract_node(const Tree& t, const Address& u) {
    std::size_t p = node_offset(t, u);
    const auto& alpha = *t.alphabet();
    const auto& code = t.code();
    int id = at(code, p);
    if (id == 0) throw TreeError("node '" + render_address(u) + "' is a leaf");
    std::size_t q = p + 1, kept_begin = 0, kept_end = 0;
    int internal = 0;
    for (int j = 0; j < alpha.arity(id); ++j) {
        std::size_t e = subtree_end(alpha, code, q);
        if (code[q] != 0) {
            ++internal;
            kept_begin = q;
            kept_end = e;
        }
        q = e;
    }
    if (internal > 1) throw TreeError("node '" + render_address(u) + "' has several internal children");
    std::string out = code.substr(0, p);
    if (internal == 0) out += '\0';
    else out.append(code, kept_begin, kept_end - kept_begin);
    out.append(code, q, std::string::npos);
    return Tree(t.alphabet(), std::move(out));
}

bool is_prefix(const Tree& s, const Tree& t) {
    std::size_t ps = 0, pt = 0;
    return prefix_at(*t.alphabet(), s.code(), ps, t.code(), pt);
}

void TreeUniverse::ensure_codes(int d) const {
    const auto& alpha = *alpha_;
    while (static_cast<int>(codes_.size()) <= d) {
        int k = static_cast<int>(codes_.size());
        std::vector<std::string> level;
        if (k == 0) {
            level.emplace_back(1, '\0');
        } else {
            for (int id = 1; id <= static_cast<int>(alpha.size()); ++id) {
                int r = alpha.arity(id);
                std::vector<int> parts(static_cast<std::size_t>(r), 0);
                // All compositions of k - 1 into r nonnegative parts, each expanded into products.
                auto expand = [&](auto&& self, int slot, int left, std::string prefix) -> void {
                    if (slot == r) {
                        if (left == 0) level.push_back(std::move(prefix));
                        return;
                    }
                    int lo = slot == r - 1 ? left : 0;
                    for (int part = lo; part <= left; ++part) {
                        for (const auto& c : codes_[static_cast<std::size_t>(part)]) self(self, slot + 1, left - part, prefix + c);
                    }
                };
                expand(expand, 0, k - 1, std::string(1, static_cast<char>(id)));
            }
        }
        codes_.push_back(std::move(level));
        sorted_.emplace_back();
    }
}

const std::vector<Tree>& TreeUniverse::slice(int d) const {
    std::lock_guard lock(mu_);
    ensure_codes(d);
    auto& slot = sorted_[static_cast<std::size_t>(d)];
    if (!slot) {
        auto trees = std::make_unique<std::vector<Tree>>();
        trees->reserve(codes_[static_cast<std::size_t>(d)].size());
        for (const auto& c : codes_[static_cast<std::size_t>(d)]) trees->emplace_back(alpha_, c);
        sort_canonical(*trees);
        slot = std::move(trees);
    }
    return *slot;
}

std::size_t TreeUniverse::count(int d) const {
    std::lock_guard lock(mu_);
    ensure_codes(d);
    return codes_[static_cast<std::size_t>(d)].size();
}

std::vector<Tree> enumerate_trees(const AlphabetPtr& alphabet, int d) {
    if (d < 0) return {};
    TreeUniverse u(alphabet);
    return u.slice(d);
}

}  // namespace opgraph
