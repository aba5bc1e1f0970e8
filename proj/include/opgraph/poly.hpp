#pragma once

#include "opgraph/arith.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace opgraph {

// Dense univariate integer polynomial; coeffs[k] is the coefficient of t^k.
struct UPoly {
    std::vector<Int> coeffs;

    UPoly() = default;
    explicit UPoly(std::vector<Int> c) : coeffs(std::move(c)) { trim(); }

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Int coeff(int k) const;
    void add_to(int k, const Int& c);
    void trim();

    Int eval(const Int& x) const;
    UPoly derivative() const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    bool operator==(const UPoly& o) const { return coeffs == o.coeffs; }

    // Coefficients 0..n as a comma list, padding with zeros.
    std::string csv(int n) const;
    std::string to_string() const;
};

// Per element type: Hash, less (canonical order), render, compatible.
template <class E>
struct ElementTraits;

class UniverseMismatch : public std::invalid_argument {
public:
    UniverseMismatch() : std::invalid_argument("elements from different universes") {}
};

// Finite formal sum of elements with exact integer coefficients.
template <class E>
class Combination {
public:
    using Traits = ElementTraits<E>;
    using Map = std::unordered_map<E, Int, typename Traits::Hash>;
    using Term = std::pair<E, Int>;

    Combination() = default;
    explicit Combination(const E& e, const Int& c = 1) { add(e, c); }

    void add(const E& e, const Int& c) {
        if (c == 0) return;
        if (!terms_.empty() && !Traits::compatible(terms_.begin()->first, e)) throw UniverseMismatch();
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Int coeff(const E& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    bool contains(const E& e) const { return terms_.count(e) != 0; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const Map& map() const& { return terms_; }
    Map map() && { return std::move(terms_); }
    void reserve(std::size_t n) { terms_.reserve(n); }

    Combination& operator+=(const Combination& o) {
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    Combination& operator-=(const Combination& o) {
        for (const auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    Combination& scale(const Int& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= k;
        return *this;
    }
    void add_scaled(const Combination& o, const Int& k) {
        if (k == 0) return;
        for (const auto& [e, c] : o.terms_) add(e, c * k);
    }

    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
    friend Combination operator*(const Int& k, Combination a) { return a.scale(k); }
    Combination operator-() const {
        Combination r = *this;
        return r.scale(-1);
    }

    bool operator==(const Combination& o) const { return terms_ == o.terms_; }

    // Terms in canonical element order.
    std::vector<Term> terms() const {
        std::vector<Term> out(terms_.begin(), terms_.end());
        sort_canonical(out);
        return out;
    }

    std::vector<E> support() const {
        std::vector<E> out;
        out.reserve(terms_.size());
        for (const auto& kv : terms_) out.push_back(kv.first);
        std::sort(out.begin(), out.end(), [](const E& a, const E& b) { return Traits::less(a, b); });
        return out;
    }

    std::string render() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms()) {
            if (first) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            Int a = abs(c);
            out += a.get_str() + "*" + Traits::render(e);
            first = false;
        }
        return out;
    }

private:
    static void sort_canonical(std::vector<Term>& v) {
        std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return Traits::less(a.first, b.first); });
    }

    Map terms_;
};

template <class E>
Combination<E> hadamard(const Combination<E>& f, const Combination<E>& g) {
    Combination<E> out;
    const auto& small = f.size() <= g.size() ? f : g;
    const auto& big = f.size() <= g.size() ? g : f;
    for (const auto& [e, c] : small.map()) {
        auto d = big.coeff(e);
        if (d != 0) out.add(e, c * d);
    }
    return out;
}

template <class E>
Int scalar_product(const Combination<E>& f, const Combination<E>& g) {
    Int s = 0;
    const auto& small = f.size() <= g.size() ? f : g;
    const auto& big = f.size() <= g.size() ? g : f;
    for (const auto& [e, c] : small.map()) s += c * big.coeff(e);
    return s;
}

template <class E>
Combination<E> characteristic(const std::vector<E>& elems) {
    Combination<E> out;
    for (const auto& e : elems)
        if (!out.contains(e)) out.add(e, 1);
    return out;
}

template <class E, class RankFn>
UPoly trace(const Combination<E>& f, RankFn&& rank) {
    UPoly p;
    for (const auto& [e, c] : f.map()) p.add_to(rank(e), c);
    p.trim();
    return p;
}

// Linear extension of op : E -> Combination<E>.
template <class E, class Op>
Combination<E> apply_linear(Op&& op, const Combination<E>& f) {
    Combination<E> out;
    for (const auto& [e, c] : f.map()) out.add_scaled(op(e), c);
    return out;
}

}  // namespace opgraph
