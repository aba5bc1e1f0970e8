#include "opgraph/tree_poset.hpp"

#include "opgraph/free_graphs.hpp"

#include <algorithm>

namespace opgraph {

namespace {

unsigned char at(const std::string& code, std::size_t pos) { return static_cast<unsigned char>(code[pos]); }

void collect_difference(const Alphabet& alpha, const std::string& s, std::size_t& ps, const std::string& t,
                        std::size_t& pt, std::vector<std::string>& out) {
    int id = at(s, ps);
    if (id == 0) {
        ++ps;
        std::size_t e = subtree_end(alpha, t, pt);
        out.push_back(t.substr(pt, e - pt));
        pt = e;
        return;
    }
    ++ps;
    ++pt;
    for (int j = 0; j < alpha.arity(id); ++j) collect_difference(alpha, s, ps, t, pt, out);
}

std::vector<std::string> prefix_codes(const Alphabet& alpha, const std::string& code, std::size_t& pos) {
    int id = at(code, pos++);
    std::vector<std::string> out{std::string(1, '\0')};
    if (id == 0) return out;
    std::vector<std::string> partial{std::string(1, static_cast<char>(id))};
    for (int j = 0; j < alpha.arity(id); ++j) {
        auto child = prefix_codes(alpha, code, pos);
        std::vector<std::string> next;
        next.reserve(partial.size() * child.size());
        for (const auto& p : partial)
            for (const auto& c : child) next.push_back(p + c);
        partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
    return out;
}

}  // namespace

std::string render_forest(const Forest& f) {
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ';';
        out += render_term(f[i]);
    }
    return out;
}

Forest parse_forest(std::string_view text, const AlphabetPtr& alphabet) {
    Forest f;
    std::size_t start = 0;
    for (;;) {
        auto semi = text.find(';', start);
        auto part = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
        f.push_back(parse_term(part, alphabet));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return f;
}

bool poset_leq(const Tree& s, const Tree& t) { return is_prefix(s, t); }

Tree meet(const Tree& a, const Tree& b) {
    if (a.is_leaf() || b.is_leaf() || a.root_letter() != b.root_letter()) return Tree::leaf(a.alphabet());
    auto ka = a.children(), kb = b.children();
    std::vector<Tree> kids;
    for (std::size_t j = 0; j < ka.size(); ++j) kids.push_back(meet(ka[j], kb[j]));
    return Tree::node(a.alphabet(), a.root_letter(), kids);
}

std::optional<Tree> join(const Tree& a, const Tree& b) {
    if (a.is_leaf()) return b;
    if (b.is_leaf()) return a;
    if (a.root_letter() != b.root_letter()) return std::nullopt;
    auto ka = a.children(), kb = b.children();
    std::vector<Tree> kids;
    for (std::size_t j = 0; j < ka.size(); ++j) {
        auto c = join(ka[j], kb[j]);
        if (!c) return std::nullopt;
        kids.push_back(std::move(*c));
    }
    return Tree::node(a.alphabet(), a.root_letter(), kids);
}

Forest difference_forest(const Tree& s, const Tree& t) {
    if (!is_prefix(s, t)) throw NotComparable();
    std::vector<std::string> codes;
    std::size_t ps = 0, pt = 0;
    collect_difference(*t.alphabet(), s.code(), ps, t.code(), pt, codes);
    Forest f;
    for (auto& c : codes) f.emplace_back(t.alphabet(), std::move(c));
    return f;
}

std::vector<Tree> prefixes(const Tree& t) {
    std::size_t pos = 0;
    std::vector<Tree> out;
    for (auto& c : prefix_codes(*t.alphabet(), t.code(), pos)) out.emplace_back(t.alphabet(), std::move(c));
    sort_canonical(out);
    return out;
}

Shadow::Shadow(std::vector<Shadow> children) : children_(std::move(children)) {
    std::sort(children_.begin(), children_.end(),
              [](const Shadow& a, const Shadow& b) { return a.canonical() < b.canonical(); });
    text_ = "{";
    for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) text_ += ',';
        text_ += children_[i].canonical();
    }
    text_ += "}";
}

Shadow shadow(const Tree& t) {
    if (t.is_leaf()) throw std::invalid_argument("the shadow of a leaf is undefined");
    std::vector<Shadow> kids;
    for (const auto& c : t.children())
        if (!c.is_leaf()) kids.push_back(shadow(c));
    return Shadow(std::move(kids));
}

Int load(const Shadow& s) {
    Int r = 1;
    for (const auto& c : s.children()) r *= load(c) + 1;
    return r;
}

Tree diamond_graft(const Forest& f) {
    if (f.empty()) throw std::invalid_argument("empty forest");
    const auto& base = f.front().alphabet();
    auto k = static_cast<int>(f.size());
    auto ext = base->with_diamond(k);
    std::string code(1, static_cast<char>(ext->size()));
    for (const auto& r : f) code += r.code();
    return Tree(ext, std::move(code));
}

Int interval_count(const Tree& s, const Tree& t) { return load(shadow(diamond_graft(difference_forest(s, t)))); }

std::vector<Tree> interval_elements(const Tree& s, const Tree& t) {
    auto forest = difference_forest(s, t);
    std::vector<std::vector<Tree>> choices;
    for (const auto& r : forest) choices.push_back(prefixes(r));
    std::vector<Tree> out;
    std::vector<Tree> pick(forest.size());
    auto rec = [&](auto&& self, std::size_t slot) -> void {
        if (slot == forest.size()) {
            out.push_back(compose_full(s, pick));
            return;
        }
        for (const auto& p : choices[slot]) {
            pick[slot] = p;
            self(self, slot + 1);
        }
    };
    rec(rec, 0);
    sort_canonical(out);
    return out;
}

bool interval_isomorphic(const Tree& s, const Tree& t, const Tree& s2, const Tree& t2) {
    auto a = shadow(diamond_graft(difference_forest(s, t)));
    auto b = shadow(diamond_graft(difference_forest(s2, t2)));
    return a == b;
}

StringyCount stringy_count(const Alphabet& alphabet, int d) {
    if (d <= 0) return {1, true};
    auto r = gen_poly(alphabet);
    Int base = r.derivative().eval(1);
    Int p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(d - 1));
    return {r.eval(1) * p, false};
}

bool is_stringy(const Tree& t) {
    const auto& alpha = *t.alphabet();
    const auto& code = t.code();
    for (std::size_t p = 0; p < code.size(); ++p) {
        int id = at(code, p);
        if (id == 0) continue;
        int internal = 0;
        std::size_t q = p + 1;
        for (int j = 0; j < alpha.arity(id); ++j) {
            internal += code[q] != 0;
            q = subtree_end(alpha, code, q);
        }
        if (internal > 1) return false;
    }
    return true;
}

bool is_co_irreducible(const Tree& t) { return up_star_free(t).size() <= 1; }

Series2 interval_series(const Alphabet& alphabet, int t_trunc) {
    auto r = gen_poly(alphabet);
    auto t = Series2::monomial(1, 0, 1, t_trunc);
    auto qt = Series2::monomial(1, 1, 1, t_trunc);
    auto one = Series2::constant(1, t_trunc);
    SeriesMap f = [&](const Series2& x) {
        auto rx = qt * substitute(r, x);
        return one + t * substitute(r, x - rx) + rx;
    };
    return fixed_point(f, t_trunc);
}

}  // namespace opgraph
