#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pnev/plfun.hpp"
#include "pnev/poly.hpp"
#include "pnev/rational.hpp"

namespace pnev {

/// Power series in z with exact rational coefficients: either an exact
/// polynomial, or a truncation of an entire function to degree N together
/// with a caller-certified radius. The certificate asserts that for
/// rho <= reliability_rho the omitted tail never contributes to the
/// coefficient-wise sup defining |phi|_r; every norm query is additionally
/// capped structurally (see gauss_norm) and errors beyond the bound.
class TruncatedSeries {
public:
    /// Exact polynomial; trailing zeros trimmed.
    explicit TruncatedSeries(std::vector<Rational> coefficients);
    /// Truncation to degree N with its certificate.
    TruncatedSeries(std::vector<Rational> coefficients, int truncation_degree,
                    Rational reliability_rho);

    bool is_exact() const { return !trunc_deg_.has_value(); }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree for exact polynomials (-1 for zero), truncation degree otherwise.
    int degree() const;
    std::optional<int> truncation_degree() const { return trunc_deg_; }
    const std::optional<Rational>& reliability_rho() const { return reliability_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int i) const;

    /// Index of the first nonzero coefficient (the order of vanishing at 0).
    int order_at_origin() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    std::string str() const; // canonical literal, parseable by parse_series

private:
    std::vector<Rational> coeffs_;
    std::optional<int> trunc_deg_;
    std::optional<Rational> reliability_;
};

/// Parse the shared series literal grammar: sum of terms `c*z^k` with
/// rational c, e.g. "1 - 3/2*z^2 + z^5". Always an exact polynomial.
TruncatedSeries parse_series(const std::string& text);

/// Newton polygon: lower convex hull of {(i, v_p(a_i)) : a_i != 0}. Vertex
/// indices strictly increase and so do the slopes between consecutive
/// vertices; the first vertex sits at the order of vanishing at the origin.
struct NewtonPolygon {
    struct Vertex {
        int index;
        Integer valuation;
    };
    std::vector<Vertex> vertices;
};

/// A piecewise-linear function valid for rho <= certified_to
/// (nullopt = certified everywhere).
struct BoundedPL {
    PLFunction fn;
    std::optional<Rational> certified_to;
};

/// log_p |phi|_r as a function of rho: the upper envelope of the lines
/// i*rho - v_p(a_i). Convex. For truncated input the certificate is the
/// caller's radius capped at the point where the truncation-degree line
/// takes over the envelope.
BoundedPL gauss_norm(const TruncatedSeries& phi, const PrimeContext& ctx);

NewtonPolygon newton_polygon(const TruncatedSeries& phi, const PrimeContext& ctx);

/// Number of zeros (with multiplicity) of phi in the closed disc
/// |z| <= p^rho: the largest index attaining max_i (i*rho - v_p(a_i)).
/// Boundary zeros are counted. Throws ReliabilityError past the certified
/// radius of a truncated series.
long zero_count(const TruncatedSeries& phi, const PrimeContext& ctx, const Rational& rho);

/// N(rho): ord_0(phi)*rho plus, for each finite-radius zero read off the
/// Newton polygon, a max(0, rho - s) ramp. Convex with integer slopes.
BoundedPL counting_pl(const TruncatedSeries& phi, const PrimeContext& ctx);

/// Exact substitution of the components into a homogeneous polynomial.
/// With truncated inputs the result is truncated at the minimum input
/// truncation degree and carries the minimum certificate.
TruncatedSeries compose_homogeneous(const MultiPoly& q,
                                    std::span<const TruncatedSeries> components);

/// Monic gcd of two exact polynomials (Euclid over Q). gcd(0,0) = 0.
TruncatedSeries series_gcd(const TruncatedSeries& a, const TruncatedSeries& b);

} // namespace pnev
