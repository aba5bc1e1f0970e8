#pragma once

#include "opgraph/graded_graph.hpp"
#include "opgraph/tree.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace opgraph {

using Word = std::vector<int>;

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : w) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

// Comma-separated letters.
std::string render_word(const Word& w);
// Comma-separated, or compact digits when every letter is at most 9.
Word parse_word(std::string_view text);
// Shorter words first, then lexicographic.
bool word_less(const Word& a, const Word& b);

template <>
struct ElementTraits<Word> {
    using Hash = WordHash;
    static bool less(const Word& a, const Word& b) { return word_less(a, b); }
    static std::string render(const Word& w) { return render_word(w); }
    static bool compatible(const Word&, const Word&) { return true; }
};

using WordComb = Combination<Word>;

class OperadError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Homogeneous finitely generated operad on words.
class Operad {
public:
    virtual ~Operad() = default;

    virtual std::string name() const = 0;
    virtual bool contains(const Word& x) const = 0;
    virtual int arity(const Word& x) const { return static_cast<int>(x.size()); }
    virtual int degree(const Word& x) const { return static_cast<int>(x.size()) - 1; }
    virtual Word unit() const { return {0}; }
    virtual std::vector<Word> generators() const = 0;
    virtual std::vector<Word> elements_of_arity(int n) const = 0;
    virtual std::vector<Word> elements_of_degree(int d) const = 0;

    virtual Word parse(std::string_view text) const;
    virtual std::string render(const Word& x) const { return render_word(x); }

    // Checked partial composition.
    Word compose(const Word& x, int i, const Word& y) const;
    // x o [y1, ..., yn]
    Word compose_full(const Word& x, const std::vector<Word>& ys) const;

    // Closed forms of the prefix and twisted prefix graphs.
    virtual WordComb up_closed(const Word& x) const = 0;
    virtual WordComb v_closed(const Word& x) const = 0;

    // Diagonal duality map for the stated pair; uu_pair() tells which pair.
    virtual Int phi(const Word& x) const = 0;
    virtual bool uu_pair() const { return false; }

protected:
    virtual Word compose_raw(const Word& x, int i, const Word& y) const = 0;
};

using OperadPtr = std::shared_ptr<const Operad>;

OperadPtr make_as();
OperadPtr make_dias();
OperadPtr make_comp();
OperadPtr make_motz();
OperadPtr make_fcat(int m);
// as | dias | comp | motz | fcat:<m>
OperadPtr parse_operad(std::string_view selector);

WordComb up_operad(const Operad& op, const Word& x);
int degree_operad(const Operad& op, const Word& x);

// Generating alphabet: one letter per generator, named after its word.
AlphabetPtr generator_alphabet(const Operad& op);
Word evaluate(const Operad& op, const Tree& t);

class Treelike {
public:
    explicit Treelike(OperadPtr op, int bound = 6);

    const Operad& operad() const { return *op_; }
    const AlphabetPtr& alphabet() const { return alpha_; }
    int bound() const { return bound_; }

    // Trees over the generators evaluating to x.
    const std::vector<Tree>& expressions(const Word& x) const;
    // Support of ev(v_free(t)) over treelike expressions t of x; coefficients 1.
    WordComb v_oracle(const Word& x) const;

    struct Homogeneity {
        bool ok = true;
        std::string witness;
    };
    // Every tree of degree d evaluates to an element of degree d, and every element is reached.
    Homogeneity certify(int d_max) const;

private:
    using Fiber = std::unordered_map<Word, std::vector<Tree>, WordHash>;
    const Fiber& fibers(int d) const;

    OperadPtr op_;
    AlphabetPtr alpha_;
    int bound_;
    std::shared_ptr<TreeUniverse> trees_;
    mutable std::mutex mu_;
    mutable std::map<int, std::unique_ptr<Fiber>> fibers_;
};

std::vector<Word> minimal_generators(const Operad& op, int arity_max);

// Reachability in the prefix graph.
bool operad_poset_leq(const Operad& op, const Word& x, const Word& y);
// Search for y = x o [z1, ..., z_|x|] over elements of bounded degree.
bool operad_prefix_by_composition(const Operad& op, const Word& x, const Word& y);

class OperadUniverse {
public:
    explicit OperadUniverse(OperadPtr op) : op_(std::move(op)) {}
    const std::vector<Word>& slice(int d) const;

private:
    OperadPtr op_;
    mutable std::mutex mu_;
    mutable std::map<int, std::unique_ptr<std::vector<Word>>> slices_;
};

struct OperadGraphs {
    OperadPtr op;
    std::shared_ptr<OperadUniverse> universe;
    GradedGraph<Word> u;
    GradedGraph<Word> v;

    GradedGraphPair<Word> uv_pair() const { return {u, v}; }
    GradedGraphPair<Word> uu_pair() const { return {u, u}; }
    GradedGraphPair<Word> stated_pair() const { return op->uu_pair() ? uu_pair() : uv_pair(); }
};

// U is the generic sum over generators; V is the closed form.
OperadGraphs make_operad_graphs(const OperadPtr& op);

}  // namespace opgraph
