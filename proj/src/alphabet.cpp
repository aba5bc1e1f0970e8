#include "opgraph/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace opgraph {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int parse_arity(std::string_view text, std::string_view name) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw AlphabetError("bad arity '" + std::string(text) + "' for letter '" + std::string(name) + "'");
    return value;
}

}  // namespace

bool valid_letter_name(std::string_view name) {
    if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.size() > static_cast<std::size_t>(max_letters)) throw AlphabetError("too many letters");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const auto& l = letters_[i];
        bool reserved = !l.name.empty() && l.name.front() == '#';
        if (!reserved && !valid_letter_name(l.name)) throw AlphabetError("invalid letter name '" + l.name + "'");
        if (l.arity < 1) throw AlphabetError("letter '" + l.name + "' must have arity >= 1");
        for (std::size_t j = 0; j < i; ++j)
            if (letters_[j].name == l.name) throw AlphabetError("duplicate letter '" + l.name + "'");
        arities_.push_back(l.arity);
    }
}

AlphabetPtr Alphabet::make(std::vector<Letter> letters) {
    return std::make_shared<const Alphabet>(std::move(letters));
}

AlphabetPtr Alphabet::parse(std::string_view spec) {
    spec = trim(spec);
    if (spec.find(':') == std::string_view::npos && !spec.empty()) {
        std::ifstream probe{std::string(spec)};
        if (probe) return parse_file(std::string(spec));
    }
    std::vector<Letter> letters;
    while (!spec.empty()) {
        auto comma = spec.find(',');
        auto item = trim(spec.substr(0, comma));
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        if (item.empty()) throw AlphabetError("empty letter entry");
        auto colon = item.find(':');
        if (colon == std::string_view::npos) throw AlphabetError("expected name:arity, got '" + std::string(item) + "'");
        auto name = trim(item.substr(0, colon));
        letters.push_back({std::string(name), parse_arity(trim(item.substr(colon + 1)), name)});
    }
    return make(std::move(letters));
}

AlphabetPtr Alphabet::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw AlphabetError("cannot open alphabet file '" + path + "'");
    std::vector<Letter> letters;
    std::string line;
    while (std::getline(in, line)) {
        auto view = trim(line);
        if (view.empty() || view.front() == '#') continue;
        std::istringstream fields{std::string(view)};
        std::string name, arity, extra;
        fields >> name >> arity;
        if (arity.empty() || (fields >> extra)) throw AlphabetError("expected 'name arity', got '" + line + "'");
        letters.push_back({name, parse_arity(arity, name)});
    }
    return make(std::move(letters));
}

AlphabetPtr Alphabet::with_diamond(int k) const {
    auto letters = letters_;
    letters.push_back({"#" + std::to_string(k), k});
    return make(std::move(letters));
}

std::optional<int> Alphabet::find(std::string_view name) const {
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i].name == name) return static_cast<int>(i + 1);
    return std::nullopt;
}

std::string Alphabet::to_string() const {
    std::string out;
    for (const auto& l : letters_) {
        if (!out.empty()) out += ',';
        out += l.name + ":" + std::to_string(l.arity);
    }
    return out;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->size() != b->size()) return false;
    for (std::size_t i = 0; i < a->size(); ++i) {
        const auto& x = a->letters()[i];
        const auto& y = b->letters()[i];
        if (x.name != y.name || x.arity != y.arity) return false;
    }
    return true;
}

UPoly gen_poly(const Alphabet& alphabet) {
    UPoly p;
    for (const auto& l : alphabet.letters()) p.add_to(l.arity, 1);
    p.trim();
    return p;
}

int max_arity(const Alphabet& alphabet) {
    int m = 0;
    for (const auto& l : alphabet.letters()) m = std::max(m, l.arity);
    return m;
}

}  // namespace opgraph
