#include "opgraph/poly.hpp"

namespace opgraph {

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int multinomial(const std::vector<unsigned long>& parts) {
    Int r = 1, b;
    unsigned long total = 0;
    for (auto p : parts) {
        total += p;
        mpz_bin_uiui(b.get_mpz_t(), total, p);
        r *= b;
    }
    return r;
}

Int UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs.size())) return 0;
    return coeffs[static_cast<std::size_t>(k)];
}

void UPoly::add_to(int k, const Int& c) {
    if (k < 0) return;
    if (static_cast<std::size_t>(k) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(k) + 1, Int(0));
    coeffs[static_cast<std::size_t>(k)] += c;
}

void UPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Int UPoly::eval(const Int& x) const {
    Int r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
    return r;
}

UPoly UPoly::derivative() const {
    UPoly d;
    for (std::size_t k = 1; k < coeffs.size(); ++k) d.add_to(static_cast<int>(k - 1), coeffs[k] * static_cast<unsigned long>(k));
    d.trim();
    return d;
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r = *this;
    for (std::size_t k = 0; k < o.coeffs.size(); ++k) r.add_to(static_cast<int>(k), o.coeffs[k]);
    r.trim();
    return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
    UPoly r;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs.size(); ++j) r.add_to(static_cast<int>(i + j), coeffs[i] * o.coeffs[j]);
    r.trim();
    return r;
}

std::string UPoly::csv(int n) const {
    std::string out;
    for (int k = 0; k <= n; ++k) {
        if (k) out += ',';
        out += coeff(k).get_str();
    }
    return out;
}

std::string UPoly::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Int& c = coeffs[k];
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        Int a = abs(c);
        bool unit = a == 1 && k > 0;
        if (!unit) out += a.get_str();
        if (k > 0) out += "t";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

}  // namespace opgraph
