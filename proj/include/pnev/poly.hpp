#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "pnev/rational.hpp"

namespace pnev {

/// Exponent vector over the variables x0..x{nvars-1}.
using Monomial = std::vector<int>;

/// Polynomial in x0..x{nvars-1} with exact rational coefficients, stored
/// sparsely with zero coefficients never kept.
class MultiPoly {
public:
    explicit MultiPoly(int nvars) : nvars_(nvars) {}
    static MultiPoly variable(int nvars, int index);
    static MultiPoly constant(int nvars, Rational c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const; // -1 for the zero polynomial
    bool is_homogeneous() const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
    MultiPoly pow(int e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    MultiPoly derivative(int var) const;
    Rational eval(std::span<const Rational> point) const;

    /// Substitute x_i := args[i]; all args share a variable set.
    MultiPoly substitute(std::span<const MultiPoly> args) const;

    /// Divide out the content: coefficients become coprime integers with the
    /// leading (lex-first) one positive. Zero stays zero.
    MultiPoly primitive_part() const;

    std::string str() const; // canonical literal, parseable by parse_poly

private:
    int nvars_;
    std::map<Monomial, Rational> terms_;
};

/// Parse the shared homogeneous-polynomial literal grammar: terms
/// `c*x0^a*x1^b*...` with rational c, e.g. "x1^2 - x0*x2".
/// Accepts any polynomial; homogeneity is checked by callers that need it.
MultiPoly parse_poly(const std::string& text, int nvars);

} // namespace pnev
