#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pnev/geometry.hpp"
#include "pnev/nevanlinna.hpp"

namespace pnev {

struct AuditEntry {
    std::string name;
    bool pass;
    std::string note; // failure detail, or a short witness description
};

struct SmtVerdict {
    Rational lhs_slope;
    Rational rhs_slope;
    bool satisfied; // always lhs_slope <= rhs_slope
    Rational empirical_constant;
    Rational interval_hi; // the constant is the sup of LHS-RHS over [0, interval_hi]
};

/// Outcome of one inequality check. A failed hypothesis refuses the check:
/// the audit trail shows which hypothesis failed and no verdict is emitted.
struct SmtReport {
    std::string theorem_id; // lemma1 | ru | levin | line_conic | line_curve_d |
                            // n_hypersurfaces | p1_points
    std::vector<AuditEntry> audits;
    std::optional<SmtVerdict> verdict;
    std::optional<std::string> degenerate_branch;
    std::vector<std::string> certificates; // rendered decomposition identities
    std::vector<std::string> notes;

    bool refused() const { return !verdict.has_value(); }
    bool passed() const { return verdict && verdict->satisfied; }
    std::string refusal_reason() const;
};

struct CheckOptions {
    Rational interval_hi = 32; // empirical constants over [0, interval_hi]
};

/// At least q - n of the proximity functions are O(1) (slope 0). The verdict
/// encodes required <= achieved as lhs <= rhs.
SmtReport lemma1_check(const ProjectiveCurve& f, std::span<const Hypersurface> divisors,
                       const CheckOptions& opts = {});

/// sum m_f(r,D_i)/deg D_i <= n T_f(r) + O(1) for hypersurfaces in general
/// position.
SmtReport ru_smt_check(const ProjectiveCurve& f, std::span<const Hypersurface> divisors,
                       const CheckOptions& opts = {});

/// sum m_f(r,D_i)/deg D_i <= (n - 1 + max_i 1/deg D_i) T_f(r) + O(1) for
/// smooth hypersurfaces of degree >= 2 in general position whose
/// zero-dimensional intersections are transversal.
SmtReport levin_smt_check(const ProjectiveCurve& f, std::span<const Hypersurface> divisors,
                          const CheckOptions& opts = {});

/// m_f(r,L) + m_f(r,C)/2 <= (3/2) T_f(r) + O(1) for a line and a smooth
/// conic meeting transversally, with the curve avoiding L, C and the tangent
/// lines of C at L ∩ C. Emits the H1 H2 = a C + b L^2 certificate.
SmtReport line_conic_check(const ProjectiveCurve& f, const Hypersurface& line,
                           const Hypersurface& conic, const CheckOptions& opts = {});

/// m_f(r,L) + m_f(r,C)/d <= (2 - 1/d) T_f(r) + O(1) for a smooth plane curve
/// of degree d >= 3. A curve mapping into one of the tangent lines routes
/// through the P^1 second main theorem instead of refusing.
SmtReport line_curve_check(const ProjectiveCurve& f, const Hypersurface& line,
                           const Hypersurface& curve, const CheckOptions& opts = {});

/// T_f(r) <= sum_i N_f(r,P_i) + O(1) for a curve into P^1 and at least two
/// distinct points.
SmtReport p1_points_check(const ProjectiveCurve& f, std::span<const ProjPoint> points,
                          const CheckOptions& opts = {});

/// sum m_f(r,D_i)/deg D_i <= (n - 1/n) T_f(r) + O(1) for exactly n
/// hypersurfaces of total degree >= n+1 meeting transversally. Defers to the
/// Levin route when every degree is >= 2; otherwise emits the tangent
/// hyperplane decomposition certificates.
SmtReport n_hypersurfaces_check(const ProjectiveCurve& f,
                                std::span<const Hypersurface> divisors,
                                const CheckOptions& opts = {});

/// Coordinates on a line of P^2: two spanning points, used to restrict
/// curves and points living on the line down to P^1.
class LineChart {
public:
    explicit LineChart(const Hypersurface& line);

    ProjectiveCurve restrict(const ProjectiveCurve& f) const;
    ProjPoint to_p1(const ProjPoint& p) const;

private:
    std::vector<std::vector<Rational>> basis_; // two spanning points of the line
    std::string line_name_;
};

} // namespace pnev
