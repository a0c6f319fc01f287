#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pnev/poly.hpp"
#include "pnev/rational.hpp"

namespace pnev {

/// Point of P^n with exact rational coordinates, stored canonically with the
/// first nonzero coordinate scaled to 1.
class ProjPoint {
public:
    explicit ProjPoint(std::vector<Rational> coords);

    const std::vector<Rational>& coords() const { return coords_; }
    int ambient_dim() const { return static_cast<int>(coords_.size()) - 1; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        return a.coords_ < b.coords_;
    }

    std::string str() const; // "[a:b:c]"

private:
    std::vector<Rational> coords_;
};

/// Parse "[a:b:c]" with rational entries.
ProjPoint parse_point(const std::string& text, int ncoords);

/// Hypersurface in P^n: a nonzero homogeneous polynomial of degree >= 1,
/// plus a label used in reports and error messages.
class Hypersurface {
public:
    Hypersurface(std::string name, MultiPoly poly);

    const std::string& name() const { return name_; }
    const MultiPoly& poly() const { return poly_; }
    int degree() const { return degree_; }
    int ambient_dim() const { return poly_.nvars() - 1; }

    bool contains(const ProjPoint& p) const;
    std::vector<Rational> gradient_at(const ProjPoint& p) const;

private:
    std::string name_;
    MultiPoly poly_;
    int degree_;
};

struct GeneralPositionResult {
    bool ok = true;
    std::vector<int> violating_indices; // 1-based, empty when ok
    std::optional<ProjPoint> witness;
    std::string detail;
};

/// Exact general-position decision for the supported fixture classes:
/// hyperplane arrangements in any P^n, plane fixtures built from lines and
/// curves where at most pairs of non-linear curves appear and some curve in
/// each problematic subset is parametrizable (a line, or a smooth conic with
/// a small rational point), and P^n fixtures reducible to those by cutting
/// with their hyperplanes. Anything else throws UnsupportedFixtureError.
GeneralPositionResult general_position_check(std::span<const Hypersurface> divisors);

/// Complete list of rational intersection points with multiplicities, for
/// configurations expected to be zero-dimensional. Throws
/// UnsupportedFixtureError when degree accounting shows irrational points.
std::vector<std::pair<ProjPoint, int>> intersection_points(
    std::span<const Hypersurface> divisors);

/// Gradients linearly independent at a common point.
bool transversality_check(std::span<const Hypersurface> divisors, const ProjPoint& point);

/// Tangent hyperplane sum_i dD/dx_i(point) * x_i = 0, with coefficients
/// cleared to coprime integers and positive leading entry.
Hypersurface tangent_hyperplane(const Hypersurface& d, const ProjPoint& point);

/// Exact certificate for prod(lhs) = sum_i cofactor_i * basis_i^power_i.
struct NoetherDecomposition {
    std::vector<MultiPoly> cofactors; // aligned with the basis
    bool certified = false;

    /// Convenience for scalar (degree-0) cofactors.
    Rational scalar(std::size_t i) const;
};

class NoDecompositionError : public HypothesisError {
public:
    explicit NoDecompositionError(const std::string& msg) : HypothesisError(msg) {}
};

/// Solve for the cofactors of forced degree by exact fraction-free
/// elimination over the degree-t monomial basis; free variables are pinned
/// to zero. The returned identity is re-verified term by term before the
/// certified flag is set.
NoetherDecomposition noether_decompose(
    std::span<const Hypersurface> lhs_factors,
    std::span<const std::pair<Hypersurface, int>> basis);

/// The rational points of (H ∩ C) \ {A} for H the tangent line of the plane
/// curve C at A. Throws UnsupportedFixtureError when degree accounting
/// detects irrational residual intersections.
std::vector<ProjPoint> tangent_line_secondary_intersections(const Hypersurface& c,
                                                            const Hypersurface& h,
                                                            const ProjPoint& a);

/// Intersection multiplicity of a plane curve and a line at a common point:
/// the multiplicity of the point among the zeros of the curve restricted to
/// the line. Exact, no factoring.
int intersection_multiplicity_on_line(const Hypersurface& curve,
                                      const Hypersurface& line, const ProjPoint& point);

/// Smoothness within the exact/bounded search scope: exact for degrees 1-2
/// (quadric matrix rank), a rational point scan over coordinates of height
/// <= search_height for higher degree.
bool smoothness_check(const Hypersurface& d, int search_height = 10);

/// Linear parametrization P^m -> P^n of the common zero locus of independent
/// linear forms (one MultiPoly in m+1 variables per coordinate).
std::vector<MultiPoly> linear_subspace_param(std::span<const Hypersurface> hyperplanes);

/// A rational point on a conic by bounded search; nullopt when none found
/// within the height bound.
std::optional<ProjPoint> conic_rational_point(const MultiPoly& conic, int height = 20);

/// Rational parametrization P^1 -> C of a smooth plane conic through a
/// rational point of it: three degree-2 binary forms.
std::vector<MultiPoly> conic_param(const MultiPoly& conic, const ProjPoint& base);

} // namespace pnev
