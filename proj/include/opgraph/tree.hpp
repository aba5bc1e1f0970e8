#pragma once

#include "opgraph/alphabet.hpp"
#include "opgraph/poly.hpp"

#include <json.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opgraph {

// Node address: word of positive integers, empty for the root.
using Address = std::vector<int>;

std::string render_address(const Address& u);
Address parse_address(std::string_view text);

class TreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Planar rooted tree decorated by an alphabet, stored as a preorder code:
// one byte per node, 0 for a leaf and the letter id otherwise.
class Tree {
public:
    Tree() = default;
    Tree(AlphabetPtr alphabet, std::string code) : alpha_(std::move(alphabet)), code_(std::move(code)) {}

    static Tree leaf(AlphabetPtr alphabet);
    static Tree corolla(AlphabetPtr alphabet, int letter);
    static Tree node(AlphabetPtr alphabet, int letter, const std::vector<Tree>& children);

    bool is_leaf() const { return code_.size() == 1 && code_[0] == 0; }
    int root_letter() const { return static_cast<unsigned char>(code_[0]); }
    std::vector<Tree> children() const;
    // 1-based child.
    Tree child(int j) const;

    int degree() const;
    int arity() const;

    const std::string& code() const { return code_; }
    const AlphabetPtr& alphabet() const { return alpha_; }

    bool operator==(const Tree& o) const { return code_ == o.code_; }
    std::strong_ordering operator<=>(const Tree& o) const { return code_ <=> o.code_; }

private:
    AlphabetPtr alpha_;
    std::string code_;
};

struct TreeHash {
    std::size_t operator()(const Tree& t) const { return std::hash<std::string>{}(t.code()); }
};

Tree parse_term(std::string_view text, const AlphabetPtr& alphabet);
std::string render_term(const Tree& t);
nlohmann::json tree_to_json(const Tree& t);

// Degree first, then rendered text.
bool canonical_less(const Tree& a, const Tree& b);
void sort_canonical(std::vector<Tree>& trees);

template <>
struct ElementTraits<Tree> {
    using Hash = TreeHash;
    static bool less(const Tree& a, const Tree& b) { return canonical_less(a, b); }
    static std::string render(const Tree& t) { return render_term(t); }
    static bool compatible(const Tree& a, const Tree& b) { return same_alphabet(a.alphabet(), b.alphabet()); }
};

using TreeComb = Combination<Tree>;

// Offset in the code one past the subtree starting at pos.
std::size_t subtree_end(const Alphabet& alphabet, const std::string& code, std::size_t pos);
// Offset of the node at address u; throws TreeError if u is not a node.
std::size_t node_offset(const Tree& t, const Address& u);

Tree subtree_at(const Tree& t, const Address& u);

struct NodeStats {
    std::vector<Address> nodes;
    std::vector<Address> internal_nodes;
    std::vector<Address> leaves;
    std::vector<Address> maximal_nodes;
    std::vector<Address> quasi_maximal_nodes;
    std::vector<Address> non_first_leaves;
};

NodeStats node_stats(const Tree& t);
std::vector<Address> leaf_addresses(const Tree& t);
int count_non_first_leaves(const Tree& t);
int count_maximal_nodes(const Tree& t);

Tree compose_index(const Tree& t, int i, const Tree& s);
Tree compose_address(const Tree& t, const Address& u, const Tree& s);
// t o [s1, ..., s_|t|]
Tree compose_full(const Tree& t, const std::vector<Tree>& forest);
// 1-based leaf index of a leaf address.
int leaf_index(const Tree& t, const Address& u);

Tree delete_node(const Tree& t, const Address& u);
// Removes node u, splicing its only internal child (or a leaf) in its place.
Tree contract_node(const Tree& t, const Address& u);

bool is_prefix(const Tree& s, const Tree& t);

// Memoized slices of all trees of a given degree; thread-safe.
class TreeUniverse {
public:
    explicit TreeUniverse(AlphabetPtr alphabet) : alpha_(std::move(alphabet)) {}

    const AlphabetPtr& alphabet() const { return alpha_; }
    // Canonical order.
    const std::vector<Tree>& slice(int d) const;
    std::size_t count(int d) const;

private:
    void ensure_codes(int d) const;

    AlphabetPtr alpha_;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<std::string>> codes_;
    mutable std::vector<std::unique_ptr<std::vector<Tree>>> sorted_;
};

std::vector<Tree> enumerate_trees(const AlphabetPtr& alphabet, int d);

}  // namespace opgraph
