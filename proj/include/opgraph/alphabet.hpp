#pragma once

#include "opgraph/poly.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opgraph {

struct Letter {
    std::string name;
    int arity = 0;
};

class AlphabetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

class Alphabet {
public:
    // Letter ids are 1-based so that 0 can stand for a leaf in tree codes.
    static constexpr int max_letters = 255;

    Alphabet() = default;
    explicit Alphabet(std::vector<Letter> letters);

    static AlphabetPtr make(std::vector<Letter> letters);
    // "a:2,c:3" or a path to a file holding "name arity" lines.
    static AlphabetPtr parse(std::string_view spec);
    static AlphabetPtr parse_file(const std::string& path);

    // Same letters plus the reserved letter "#k" of arity k.
    AlphabetPtr with_diamond(int k) const;

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    const Letter& letter(int id) const { return letters_[static_cast<std::size_t>(id - 1)]; }
    int arity(int id) const { return arities_[static_cast<std::size_t>(id)]; }
    std::optional<int> find(std::string_view name) const;

    std::string to_string() const;

private:
    std::vector<Letter> letters_;
    std::vector<int> arities_{0};
};

bool valid_letter_name(std::string_view name);
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

UPoly gen_poly(const Alphabet& alphabet);
int max_arity(const Alphabet& alphabet);

}  // namespace opgraph
