#include "opgraph/series.hpp"

#include <algorithm>

namespace opgraph {

namespace {

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string q_poly_str(const std::vector<std::pair<int, Rat>>& terms) {
    std::string out;
    for (const auto& [i, c] : terms) {
        bool neg = c < 0;
        Rat a = abs(c);
        if (!out.empty()) out += neg ? "-" : "+";
        else if (neg) out += "-";
        bool show = a != 1 || i == 0;
        if (show) out += rat_str(a);
        if (i >= 1) out += "q";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace

Series2 Series2::constant(const Rat& c, int t_trunc) { return monomial(c, 0, 0, t_trunc); }

Series2 Series2::monomial(const Rat& c, int q_deg, int t_deg, int t_trunc) {
    Series2 s(t_trunc);
    s.add_to(q_deg, t_deg, c);
    return s;
}

Series2 Series2::from_upoly(const UPoly& p, int t_trunc) {
    Series2 s(t_trunc);
    for (int k = 0; k <= p.degree(); ++k) s.add_to(0, k, Rat(p.coeff(k)));
    return s;
}

Rat Series2::coeff(int q_deg, int t_deg) const {
    auto it = coeffs_.find({q_deg, t_deg});
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void Series2::add_to(int q_deg, int t_deg, const Rat& c) {
    if (t_deg > t_trunc_ || c == 0) return;
    auto [it, fresh] = coeffs_.try_emplace({q_deg, t_deg}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

UPoly Series2::t_coeff(int t_deg) const {
    UPoly p;
    for (const auto& [k, c] : coeffs_) {
        if (k.second != t_deg) continue;
        if (c.get_den() != 1) throw SeriesError("non-integral coefficient");
        p.add_to(k.first, c.get_num());
    }
    p.trim();
    return p;
}

std::vector<Rat> Series2::at_q(const Rat& q) const {
    std::vector<Rat> out(static_cast<std::size_t>(t_trunc_ + 1), Rat(0));
    for (const auto& [k, c] : coeffs_) {
        Rat p = 1;
        for (int i = 0; i < k.first; ++i) p *= q;
        out[static_cast<std::size_t>(k.second)] += c * p;
    }
    return out;
}

bool Series2::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second.get_den() == 1; });
}

bool Series2::has_q() const {
    return std::any_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.first.first != 0; });
}

Series2 Series2::truncated(int t_trunc) const {
    Series2 s(t_trunc);
    for (const auto& [k, c] : coeffs_) s.add_to(k.first, k.second, c);
    return s;
}

Series2 Series2::operator+(const Series2& o) const {
    Series2 s(std::min(t_trunc_, o.t_trunc_));
    for (const auto& [k, c] : coeffs_) s.add_to(k.first, k.second, c);
    for (const auto& [k, c] : o.coeffs_) s.add_to(k.first, k.second, c);
    return s;
}

Series2 Series2::operator-(const Series2& o) const { return *this + o.scaled(-1); }

Series2 Series2::operator*(const Series2& o) const {
    Series2 s(std::min(t_trunc_, o.t_trunc_));
    for (const auto& [a, x] : coeffs_)
        for (const auto& [b, y] : o.coeffs_)
            if (a.second + b.second <= s.t_trunc_) s.add_to(a.first + b.first, a.second + b.second, x * y);
    return s;
}

Series2 Series2::scaled(const Rat& c) const {
    Series2 s(t_trunc_);
    for (const auto& [k, v] : coeffs_) s.add_to(k.first, k.second, v * c);
    return s;
}

std::string Series2::render() const {
    if (coeffs_.empty()) return "0";
    std::map<int, std::vector<std::pair<int, Rat>>> by_t;
    for (const auto& [k, c] : coeffs_) by_t[k.second].push_back({k.first, c});
    std::string out;
    for (auto& [j, terms] : by_t) {
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        // Content: gcd of numerators over lcm of denominators, sign of the lowest term.
        Int num = 0, den = 1;
        for (const auto& [i, c] : terms) {
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        }
        Rat g(num, den);
        g.canonicalize();
        if (terms.front().second < 0) g = -g;
        bool neg = g < 0;
        Rat ag = abs(g);
        std::string piece;
        std::string tpart = j == 0 ? "" : (j == 1 ? "t" : "t^" + std::to_string(j));
        if (terms.size() == 1) {
            int i = terms.front().first;
            std::string qpart = i == 0 ? "" : (i == 1 ? "q" : "q^" + std::to_string(i));
            bool show = ag != 1 || (qpart.empty() && tpart.empty());
            piece = (show ? rat_str(ag) : "") + qpart + tpart;
        } else {
            std::vector<std::pair<int, Rat>> reduced;
            for (const auto& [i, c] : terms) reduced.push_back({i, c / g});
            piece = (ag != 1 ? rat_str(ag) : "") + "(" + q_poly_str(reduced) + ")" + tpart;
        }
        if (out.empty()) out = (neg ? "-" : "") + piece;
        else out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

Series2 substitute(const UPoly& outer, const Series2& inner) {
    int n = inner.t_trunc();
    Series2 acc(n);
    for (int k = outer.degree(); k >= 0; --k) acc = acc * inner + Series2::constant(Rat(outer.coeff(k)), n);
    return acc;
}

Series2 substitute(const Series2& outer, const Series2& inner) {
    if (outer.has_q()) throw SeriesError("outer series must not involve q");
    int n = std::min(outer.t_trunc(), inner.t_trunc());
    bool constant_term = false;
    for (const auto& [k, c] : inner.coeffs())
        if (k.second == 0) constant_term = true;
    int top = 0;
    for (const auto& [k, c] : outer.coeffs()) top = std::max(top, k.second);
    // An outer series reaching its truncation order is not known to be a polynomial.
    if (constant_term && top >= outer.t_trunc())
        throw SeriesError("substitution needs an inner series without constant term");
    Series2 acc(n);
    for (int k = top; k >= 0; --k) acc = acc * inner.truncated(n) + Series2::constant(outer.coeff(0, k), n);
    return acc;
}

Series2 fixed_point(const SeriesMap& f, int t_trunc) {
    Series2 s = f(Series2(t_trunc)).truncated(t_trunc);
    for (int it = 0; it <= t_trunc; ++it) s = f(s).truncated(t_trunc);
    if (!(f(s).truncated(t_trunc) == s)) throw SeriesError("fixed-point iteration did not stabilize");
    return s;
}

}  // namespace opgraph
