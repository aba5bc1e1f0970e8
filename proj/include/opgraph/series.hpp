#pragma once

#include "opgraph/poly.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opgraph {

class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Bivariate series in q and t with exact rational coefficients, truncated
// at t-degree t_trunc. Keys are (q-degree, t-degree).
class Series2 {
public:
    using Key = std::pair<int, int>;

    explicit Series2(int t_trunc = 0) : t_trunc_(t_trunc) {}

    static Series2 constant(const Rat& c, int t_trunc);
    static Series2 monomial(const Rat& c, int q_deg, int t_deg, int t_trunc);
    // Univariate polynomial in t.
    static Series2 from_upoly(const UPoly& p, int t_trunc);

    int t_trunc() const { return t_trunc_; }
    const std::map<Key, Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int q_deg, int t_deg) const;
    void add_to(int q_deg, int t_deg, const Rat& c);

    // Coefficient of t^j as a polynomial in q; requires integral coefficients.
    UPoly t_coeff(int t_deg) const;
    // Specialize q to an integer value.
    std::vector<Rat> at_q(const Rat& q) const;
    bool is_integral() const;
    bool has_q() const;
    Series2 truncated(int t_trunc) const;

    Series2 operator+(const Series2& o) const;
    Series2 operator-(const Series2& o) const;
    Series2 operator*(const Series2& o) const;
    Series2 scaled(const Rat& c) const;
    bool operator==(const Series2& o) const { return t_trunc_ == o.t_trunc_ && coeffs_ == o.coeffs_; }

    // Ascending t-degree with q-polynomials in parentheses and their content factored out.
    std::string render() const;

private:
    int t_trunc_;
    std::map<Key, Rat> coeffs_;
};

// outer(inner) for a polynomial outer; always defined.
Series2 substitute(const UPoly& outer, const Series2& inner);
// outer(inner) for a truncated q-free outer series; inner must have no constant term.
Series2 substitute(const Series2& outer, const Series2& inner);

using SeriesMap = std::function<Series2(const Series2&)>;

// Iterates S <- F(S) from S = F(0) exactly t_trunc + 1 times, then checks S = F(S).
Series2 fixed_point(const SeriesMap& f, int t_trunc);

}  // namespace opgraph
