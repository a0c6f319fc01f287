#include "pnev/nevanlinna.hpp"

#include <algorithm>

#include "pnev/linalg.hpp"

namespace pnev {

ProjectiveCurve::ProjectiveCurve(PrimeContext ctx, std::vector<TruncatedSeries> components)
    : ctx_(std::move(ctx)), comps_(std::move(components)) {
    if (comps_.size() < 2)
        throw FixtureError("a projective curve needs at least two components");

    bool all_zero = std::all_of(comps_.begin(), comps_.end(),
                                [](const TruncatedSeries& s) { return s.is_zero(); });
    if (all_zero) throw FixtureError("curve components are all zero");

    // no common zero: the gcd of the tuple must be constant (checked on the
    // truncations when series components appear)
    TruncatedSeries g(comps_[0].coefficients());
    for (std::size_t i = 1; i < comps_.size(); ++i)
        g = series_gcd(g, TruncatedSeries(comps_[i].coefficients()));
    if (g.is_zero() || g.degree() > 0)
        throw FixtureError(
            "components share a zero: the representation is not reduced");

    // nonconstant: the coefficient matrix of the components has rank >= 2
    std::size_t width = 0;
    for (const TruncatedSeries& s : comps_) width = std::max(width, s.coefficients().size());
    Matrix m;
    for (const TruncatedSeries& s : comps_) {
        std::vector<Rational> row(width, Rational(0));
        for (std::size_t j = 0; j < s.coefficients().size(); ++j)
            row[j] = s.coefficients()[j];
        m.push_back(std::move(row));
    }
    if (matrix_rank(m) < 2)
        throw FixtureError("curve is constant: all components are proportional");
}

bool ProjectiveCurve::is_exact() const {
    return std::all_of(comps_.begin(), comps_.end(),
                       [](const TruncatedSeries& s) { return s.is_exact(); });
}

PLFunction order_function(const ProjectiveCurve& f) {
    std::vector<PLFunction> norms;
    for (const TruncatedSeries& s : f.components()) {
        if (s.is_zero()) continue;
        norms.push_back(gauss_norm(s, f.context()).fn);
    }
    return pl_max(norms);
}

TruncatedSeries divisor_pullback(const ProjectiveCurve& f, const Hypersurface& d) {
    if (d.ambient_dim() != f.ambient_dim())
        throw FixtureError("divisor '" + d.name() + "' lives in P^" +
                           std::to_string(d.ambient_dim()) + " but the curve maps to P^" +
                           std::to_string(f.ambient_dim()));
    TruncatedSeries q = compose_homogeneous(d.poly(), f.components());
    if (q.is_zero() || (!q.is_exact() && q.order_at_origin() < 0)) {
        std::string upto =
            q.is_exact() ? "" : " (up to the truncation degree " +
                                    std::to_string(*q.truncation_degree()) + ")";
        throw ContainmentError(d.name(), "image of the curve is contained in divisor '" +
                                             d.name() + "'" + upto);
    }
    return q;
}

PLFunction proximity(const ProjectiveCurve& f, const Hypersurface& d) {
    TruncatedSeries q = divisor_pullback(f, d);
    PLFunction t = order_function(f);
    return pl_combine(t, gauss_norm(q, f.context()).fn, Rational(d.degree()), -1);
}

PLFunction counting(const ProjectiveCurve& f, const Hypersurface& d) {
    return counting_pl(divisor_pullback(f, d), f.context()).fn;
}

Rational fmt_verify(const ProjectiveCurve& f, const Hypersurface& d) {
    TruncatedSeries q = divisor_pullback(f, d);
    PLFunction m = proximity(f, d);
    PLFunction n = counting(f, d);
    PLFunction t = order_function(f);
    PLFunction diff = pl_combine(m + n, t, 1, Rational(-d.degree()));
    if (!diff.is_constant())
        throw InternalError("m + N - d T is not constant for divisor '" + d.name() +
                            "': " + diff.str());
    Rational constant = diff.value_at_zero();
    Rational expect(f.context().valuation(q.coefficient(q.order_at_origin())).value());
    if (constant != expect)
        throw InternalError("first main theorem constant mismatch: got " +
                            rational_str(constant) + ", Jensen gives " +
                            rational_str(expect));
    return constant;
}

bool is_bounded_proximity(const ProjectiveCurve& f, const Hypersurface& d) {
    return proximity(f, d).final_slope() == 0;
}

CountingBoundRecord fmt_counting_bound(const ProjectiveCurve& f, const Hypersurface& d,
                                       const Rational& r_max) {
    PLFunction n = counting(f, d);
    PLFunction t = order_function(f);
    PLFunction dt = Rational(d.degree()) * t;
    CountingBoundRecord rec{n.final_slope(), dt.final_slope(), false, Rational(0)};
    rec.slope_ok = rec.counting_slope <= rec.order_slope_scaled;
    rec.gap = sup_gap(n, dt, 0, r_max);
    return rec;
}

NevanlinnaProfile nevanlinna_profile(const ProjectiveCurve& f,
                                     std::span<const Hypersurface> divisors) {
    NevanlinnaProfile profile{order_function(f), {}};
    for (const Hypersurface& d : divisors) {
        DivisorProfile dp{d.name(), proximity(f, d), counting(f, d), fmt_verify(f, d)};
        profile.divisors.push_back(std::move(dp));
    }
    return profile;
}

} // namespace pnev
