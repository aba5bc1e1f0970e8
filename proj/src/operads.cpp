#include "opgraph/operads.hpp"

#include "opgraph/free_graphs.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <unordered_set>

namespace opgraph {

namespace {

Word insert_after(const Word& u, std::size_t i, std::initializer_list<int> letters) {
    Word w(u.begin(), u.begin() + static_cast<long>(i) + 1);
    w.insert(w.end(), letters);
    w.insert(w.end(), u.begin() + static_cast<long>(i) + 1, u.end());
    return w;
}

Word splice_word(const Word& x, int i, const Word& y, int shift) {
    Word w(x.begin(), x.begin() + i - 1);
    for (int c : y) w.push_back(c + shift);
    w.insert(w.end(), x.begin() + i, x.end());
    return w;
}

std::vector<Word> sorted(std::vector<Word> v) {
    std::sort(v.begin(), v.end(), word_less);
    return v;
}

class AsOperad final : public Operad {
public:
    std::string name() const override { return "as"; }
    bool contains(const Word& x) const override { return x.size() == 1 && x[0] >= 1; }
    int arity(const Word& x) const override { return x[0]; }
    int degree(const Word& x) const override { return x[0] - 1; }
    Word unit() const override { return {1}; }
    std::vector<Word> generators() const override { return {{2}}; }
    std::vector<Word> elements_of_arity(int n) const override {
        if (n < 1) return {};
        return {{n}};
    }
    std::vector<Word> elements_of_degree(int d) const override {
        if (d < 0) return {};
        return {{d + 1}};
    }
    Word parse(std::string_view text) const override {
        if (!text.empty() && text.front() == '*') text.remove_prefix(1);
        int n = 0;
        auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
        if (ec != std::errc() || p != text.data() + text.size() || n < 1)
            throw OperadError("bad element '" + std::string(text) + "' for as");
        return {n};
    }
    WordComb up_closed(const Word& x) const override { return WordComb({x[0] + 1}, x[0]); }
    WordComb v_closed(const Word& x) const override { return WordComb({x[0] + 1}, 1); }
    Int phi(const Word&) const override { return 1; }

protected:
    Word compose_raw(const Word& x, int, const Word& y) const override { return {x[0] + y[0] - 1}; }
};

// Words 1^k 0 1^l.
class DiasOperad final : public Operad {
public:
    std::string name() const override { return "dias"; }
    bool contains(const Word& x) const override {
        if (x.empty()) return false;
        int zeros = 0;
        for (int c : x) {
            if (c != 0 && c != 1) return false;
            zeros += c == 0;
        }
        return zeros == 1;
    }
    std::vector<Word> generators() const override { return {{0, 1}, {1, 0}}; }
    std::vector<Word> elements_of_arity(int n) const override {
        std::vector<Word> out;
        for (int k = 0; k < n; ++k) {
            Word w(static_cast<std::size_t>(n), 1);
            w[static_cast<std::size_t>(k)] = 0;
            out.push_back(w);
        }
        return sorted(out);
    }
    std::vector<Word> elements_of_degree(int d) const override { return elements_of_arity(d + 1); }
    WordComb up_closed(const Word& x) const override {
        auto [k, l] = split(x);
        WordComb out;
        out.add(make(k + 1, l), 2 * k + 1);
        out.add(make(k, l + 1), 2 * l + 1);
        return out;
    }
    WordComb v_closed(const Word& x) const override {
        auto [k, l] = split(x);
        WordComb out;
        out.add(make(k, l + 1), 1);
        out.add(make(k + 1 + l, 0), 1);
        return out;
    }
    Int phi(const Word& x) const override {
        auto [k, l] = split(x);
        return (k == 0) + (l == 0) + 8 * k + 8 * l;
    }
    bool uu_pair() const override { return true; }

    static std::pair<int, int> split(const Word& x) {
        int k = static_cast<int>(std::find(x.begin(), x.end(), 0) - x.begin());
        return {k, static_cast<int>(x.size()) - k - 1};
    }
    static Word make(int k, int l) {
        Word w(static_cast<std::size_t>(k), 1);
        w.push_back(0);
        w.insert(w.end(), static_cast<std::size_t>(l), 1);
        return w;
    }

protected:
    Word compose_raw(const Word& x, int i, const Word& y) const override {
        Word w(x.begin(), x.begin() + i - 1);
        int lift = x[static_cast<std::size_t>(i - 1)];
        for (int c : y) w.push_back(std::max(lift, c));
        w.insert(w.end(), x.begin() + i, x.end());
        return w;
    }
};

class CompOperad final : public Operad {
public:
    std::string name() const override { return "comp"; }
    bool contains(const Word& x) const override {
        if (x.empty() || x[0] != 0) return false;
        return std::all_of(x.begin(), x.end(), [](int c) { return c == 0 || c == 1; });
    }
    std::vector<Word> generators() const override { return {{0, 0}, {0, 1}}; }
    std::vector<Word> elements_of_arity(int n) const override {
        std::vector<Word> out;
        if (n < 1) return out;
        for (unsigned long bits = 0; bits < (1ul << (n - 1)); ++bits) {
            Word w{0};
            for (int j = n - 2; j >= 0; --j) w.push_back(static_cast<int>(bits >> j & 1ul));
            out.push_back(w);
        }
        return sorted(out);
    }
    std::vector<Word> elements_of_degree(int d) const override { return elements_of_arity(d + 1); }
    WordComb up_closed(const Word& x) const override {
        WordComb out;
        for (std::size_t i = 0; i < x.size(); ++i) {
            out.add(insert_after(x, i, {0}), 1);
            out.add(insert_after(x, i, {1}), 1);
        }
        return out;
    }
    WordComb v_closed(const Word& x) const override {
        WordComb out;
        Word a = x, b = x;
        a.push_back(0);
        b.push_back(1);
        out.add(a, 1);
        out.add(b, 1);
        return out;
    }
    Int phi(const Word&) const override { return 2; }

protected:
    Word compose_raw(const Word& x, int i, const Word& y) const override {
        Word w(x.begin(), x.begin() + i - 1);
        bool flip = x[static_cast<std::size_t>(i - 1)] == 1;
        for (int c : y) w.push_back(flip ? 1 - c : c);
        w.insert(w.end(), x.begin() + i, x.end());
        return w;
    }
};

class MotzOperad final : public Operad {
public:
    std::string name() const override { return "motz"; }
    bool contains(const Word& x) const override {
        if (x.empty() || x.front() != 0 || x.back() != 0) return false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] < 0) return false;
            if (i && std::abs(x[i] - x[i - 1]) > 1) return false;
        }
        return true;
    }
    int degree(const Word& x) const override {
        int ascents = 0;
        for (std::size_t i = 1; i < x.size(); ++i) ascents += x[i] == x[i - 1] + 1;
        return static_cast<int>(x.size()) - 1 - ascents;
    }
    std::vector<Word> generators() const override { return {{0, 0}, {0, 1, 0}}; }
    std::vector<Word> elements_of_arity(int n) const override {
        std::vector<Word> out;
        if (n < 1) return out;
        Word w{0};
        auto rec = [&](auto&& self) -> void {
            int len = static_cast<int>(w.size());
            int h = w.back();
            if (len == n) {
                if (h == 0) out.push_back(w);
                return;
            }
            for (int step = -1; step <= 1; ++step) {
                int next = h + step;
                if (next < 0 || next > n - len - 1) continue;
                w.push_back(next);
                self(self);
                w.pop_back();
            }
        };
        rec(rec);
        return sorted(out);
    }
    std::vector<Word> elements_of_degree(int d) const override {
        std::vector<Word> out;
        if (d < 0) return out;
        for (int n = d + 1; n <= 2 * d + 1; ++n)
            for (auto& w : elements_of_arity(n))
                if (degree(w) == d) out.push_back(std::move(w));
        return sorted(out);
    }
    WordComb up_closed(const Word& x) const override {
        WordComb out;
        for (std::size_t i = 0; i < x.size(); ++i) add_insertions(out, x, i);
        return out;
    }
    WordComb v_closed(const Word& x) const override {
        WordComb out;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (i + 1 == x.size() || x[i] > x[i + 1]) add_insertions(out, x, i);
        return out;
    }
    Int phi(const Word& x) const override {
        int changes = 0;
        for (std::size_t i = 1; i < x.size(); ++i) changes += x[i] != x[i - 1];
        return 2 + changes;
    }

protected:
    Word compose_raw(const Word& x, int i, const Word& y) const override {
        return splice_word(x, i, y, x[static_cast<std::size_t>(i - 1)]);
    }

private:
    static void add_insertions(WordComb& out, const Word& x, std::size_t i) {
        int c = x[i];
        out.add(insert_after(x, i, {c}), 1);
        out.add(insert_after(x, i, {c + 1, c}), 1);
    }
};

class FCatOperad final : public Operad {
public:
    explicit FCatOperad(int m) : m_(m) {}

    std::string name() const override { return "fcat:" + std::to_string(m_); }
    bool contains(const Word& x) const override {
        if (x.empty() || x[0] != 0) return false;
        for (std::size_t i = 1; i < x.size(); ++i)
            if (x[i] < 0 || x[i] > x[i - 1] + m_) return false;
        return true;
    }
    std::vector<Word> generators() const override {
        std::vector<Word> out;
        for (int a = 0; a <= m_; ++a) out.push_back({0, a});
        return out;
    }
    std::vector<Word> elements_of_arity(int n) const override {
        std::vector<Word> out;
        if (n < 1) return out;
        Word w{0};
        auto rec = [&](auto&& self) -> void {
            if (static_cast<int>(w.size()) == n) {
                out.push_back(w);
                return;
            }
            int top = w.back() + m_;
            for (int a = 0; a <= top; ++a) {
                w.push_back(a);
                self(self);
                w.pop_back();
            }
        };
        rec(rec);
        return sorted(out);
    }
    std::vector<Word> elements_of_degree(int d) const override { return elements_of_arity(d + 1); }
    WordComb up_closed(const Word& x) const override {
        WordComb out;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (int a = 0; a <= m_; ++a) out.add(insert_after(x, i, {x[i] + a}), 1);
        return out;
    }
    WordComb v_closed(const Word& x) const override {
        WordComb out;
        for (int a = 0; a <= x.back() + m_; ++a) {
            Word w = x;
            w.push_back(a);
            out.add(w, 1);
        }
        return out;
    }
    Int phi(const Word&) const override { return m_ + 1; }

protected:
    Word compose_raw(const Word& x, int i, const Word& y) const override {
        return splice_word(x, i, y, x[static_cast<std::size_t>(i - 1)]);
    }

private:
    int m_;
};

std::string generator_name(const Word& g) {
    bool compact = std::all_of(g.begin(), g.end(), [](int c) { return c >= 0 && c <= 9; });
    std::string name = "g";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!compact && i) name += '_';
        name += std::to_string(g[i]);
    }
    return name;
}

}  // namespace

std::string render_word(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

Word parse_word(std::string_view text) {
    Word w;
    if (text.empty()) throw OperadError("empty word");
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '0' || c > '9') throw OperadError("bad word '" + std::string(text) + "'");
            w.push_back(c - '0');
        }
        return w;
    }
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        auto part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        int v = 0;
        auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || p != part.data() + part.size())
            throw OperadError("bad word '" + std::string(text) + "'");
        w.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return w;
}

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

Word Operad::parse(std::string_view text) const {
    Word w = parse_word(text);
    if (!contains(w)) throw OperadError("'" + std::string(text) + "' is not an element of " + name());
    return w;
}

Word Operad::compose(const Word& x, int i, const Word& y) const {
    if (!contains(x)) throw OperadError(render(x) + " is not an element of " + name());
    if (!contains(y)) throw OperadError(render(y) + " is not an element of " + name());
    if (i < 1 || i > arity(x)) throw OperadError("index " + std::to_string(i) + " out of range");
    return compose_raw(x, i, y);
}

Word Operad::compose_full(const Word& x, const std::vector<Word>& ys) const {
    if (static_cast<int>(ys.size()) != arity(x)) throw OperadError("wrong number of arguments");
    Word w = x;
    for (int i = static_cast<int>(ys.size()); i >= 1; --i) w = compose(w, i, ys[static_cast<std::size_t>(i - 1)]);
    return w;
}

OperadPtr make_as() { return std::make_shared<AsOperad>(); }
OperadPtr make_dias() { return std::make_shared<DiasOperad>(); }
OperadPtr make_comp() { return std::make_shared<CompOperad>(); }
OperadPtr make_motz() { return std::make_shared<MotzOperad>(); }
OperadPtr make_fcat(int m) {
    if (m < 0) throw OperadError("fcat needs m >= 0");
    return std::make_shared<FCatOperad>(m);
}

OperadPtr parse_operad(std::string_view selector) {
    if (selector == "as") return make_as();
    if (selector == "dias") return make_dias();
    if (selector == "comp") return make_comp();
    if (selector == "motz") return make_motz();
    if (selector.substr(0, 5) == "fcat:") {
        auto rest = selector.substr(5);
        int m = -1;
        auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), m);
        if (ec == std::errc() && p == rest.data() + rest.size() && m >= 0) return make_fcat(m);
    }
    throw OperadError("unknown operad '" + std::string(selector) + "'");
}

WordComb up_operad(const Operad& op, const Word& x) {
    WordComb out;
    for (const auto& g : op.generators())
        for (int i = 1; i <= op.arity(x); ++i) out.add(op.compose(x, i, g), 1);
    return out;
}

int degree_operad(const Operad& op, const Word& x) {
    if (!op.contains(x)) throw OperadError(op.render(x) + " is not an element of " + op.name());
    return op.degree(x);
}

AlphabetPtr generator_alphabet(const Operad& op) {
    std::vector<Letter> letters;
    for (const auto& g : op.generators()) letters.push_back({generator_name(g), op.arity(g)});
    return Alphabet::make(std::move(letters));
}

Word evaluate(const Operad& op, const Tree& t) {
    if (t.is_leaf()) return op.unit();
    auto gens = op.generators();
    std::vector<Word> args;
    for (const auto& c : t.children()) args.push_back(evaluate(op, c));
    return op.compose_full(gens[static_cast<std::size_t>(t.root_letter() - 1)], args);
}

Treelike::Treelike(OperadPtr op, int bound)
    : op_(std::move(op)), alpha_(generator_alphabet(*op_)), bound_(bound), trees_(std::make_shared<TreeUniverse>(alpha_)) {}

const Treelike::Fiber& Treelike::fibers(int d) const {
    if (d > bound_)
        throw OracleBoundError("degree " + std::to_string(d) + " exceeds the treelike bound " + std::to_string(bound_));
    std::lock_guard lock(mu_);
    auto& slot = fibers_[d];
    if (!slot) {
        auto f = std::make_unique<Fiber>();
        for (const auto& t : trees_->slice(d)) (*f)[evaluate(*op_, t)].push_back(t);
        slot = std::move(f);
    }
    return *slot;
}

const std::vector<Tree>& Treelike::expressions(const Word& x) const {
    static const std::vector<Tree> none;
    const auto& f = fibers(op_->degree(x));
    auto it = f.find(x);
    return it == f.end() ? none : it->second;
}

WordComb Treelike::v_oracle(const Word& x) const {
    fibers(op_->degree(x) + 1);
    WordComb out;
    for (const auto& t : expressions(x))
        for (const auto& [s, c] : v_free(t).map()) {
            Word y = evaluate(*op_, s);
            if (!out.contains(y)) out.add(y, 1);
        }
    return out;
}

Treelike::Homogeneity Treelike::certify(int d_max) const {
    Homogeneity h;
    for (int d = 0; d <= d_max; ++d) {
        const auto& f = fibers(d);
        for (const auto& [w, ts] : f)
            if (op_->degree(w) != d) {
                h.ok = false;
                h.witness = op_->render(w) + " reached at degree " + std::to_string(d);
                return h;
            }
        for (const auto& w : op_->elements_of_degree(d))
            if (!f.count(w)) {
                h.ok = false;
                h.witness = op_->render(w) + " has no treelike expression";
                return h;
            }
    }
    return h;
}

std::vector<Word> minimal_generators(const Operad& op, int arity_max) {
    std::vector<Word> gens;
    for (int n = 2; n <= arity_max; ++n) {
        std::set<Word> composed;
        for (int a = 2; a < n; ++a) {
            int b = n - a + 1;
            for (const auto& x : op.elements_of_arity(a))
                for (const auto& y : op.elements_of_arity(b))
                    for (int i = 1; i <= a; ++i) composed.insert(op.compose(x, i, y));
        }
        for (const auto& w : op.elements_of_arity(n))
            if (!composed.count(w)) gens.push_back(w);
    }
    return sorted(gens);
}

bool operad_poset_leq(const Operad& op, const Word& x, const Word& y) {
    int steps = op.degree(y) - op.degree(x);
    if (steps < 0) return false;
    std::unordered_set<Word, WordHash> level{x};
    for (int k = 0; k < steps; ++k) {
        std::unordered_set<Word, WordHash> next;
        for (const auto& w : level)
            for (const auto& [z, c] : up_operad(op, w).map()) next.insert(z);
        level = std::move(next);
    }
    return level.count(y) != 0;
}

bool operad_prefix_by_composition(const Operad& op, const Word& x, const Word& y) {
    int budget = op.degree(y) - op.degree(x);
    if (budget < 0) return false;
    std::vector<Word> pool;
    for (int d = 0; d <= budget; ++d)
        for (auto& w : op.elements_of_degree(d)) pool.push_back(std::move(w));
    int n = op.arity(x);
    std::vector<Word> pick(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int slot, int left) -> bool {
        if (slot == n) return left == 0 && op.compose_full(x, pick) == y;
        for (const auto& z : pool) {
            int dz = op.degree(z);
            if (dz > left) continue;
            pick[static_cast<std::size_t>(slot)] = z;
            if (self(self, slot + 1, left - dz)) return true;
        }
        return false;
    };
    return rec(rec, 0, budget);
}

const std::vector<Word>& OperadUniverse::slice(int d) const {
    std::lock_guard lock(mu_);
    auto& slot = slices_[d];
    if (!slot) slot = std::make_unique<std::vector<Word>>(sorted(op_->elements_of_degree(d)));
    return *slot;
}

OperadGraphs make_operad_graphs(const OperadPtr& op) {
    OperadGraphs g;
    g.op = op;
    g.universe = std::make_shared<OperadUniverse>(op);
    auto uni = g.universe;
    auto rank = [op](const Word& x) { return op->degree(x); };
    auto slices = [uni](int d) -> const std::vector<Word>& { return uni->slice(d); };

    g.u.name = op->name() + " U";
    g.u.root = op->unit();
    g.u.rank = rank;
    g.u.universe = slices;
    g.u.up = [op](const Word& x) { return up_operad(*op, x); };

    g.v.name = op->name() + " V";
    g.v.root = op->unit();
    g.v.rank = rank;
    g.v.universe = slices;
    g.v.up = [op](const Word& x) { return op->v_closed(x); };
    return g;
}

}  // namespace opgraph
