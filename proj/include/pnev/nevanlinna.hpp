#pragma once

#include <span>
#include <string>
#include <vector>

#include "pnev/geometry.hpp"
#include "pnev/plfun.hpp"
#include "pnev/series.hpp"

namespace pnev {

/// Analytic curve K -> P^n given by a reduced representation (f_0,...,f_n):
/// components share no common zero and the map is nonconstant. Checked
/// exactly for polynomial components, up to the truncation degree otherwise.
class ProjectiveCurve {
public:
    ProjectiveCurve(PrimeContext ctx, std::vector<TruncatedSeries> components);

    const PrimeContext& context() const { return ctx_; }
    const std::vector<TruncatedSeries>& components() const { return comps_; }
    int ambient_dim() const { return static_cast<int>(comps_.size()) - 1; }
    bool is_exact() const;

private:
    PrimeContext ctx_;
    std::vector<TruncatedSeries> comps_;
};

/// T_f(rho) = log_p max_i |f_i|_r: the pointwise max of the component Gauss
/// norms. Convex.
PLFunction order_function(const ProjectiveCurve& f);

/// Q∘f for a divisor; throws ContainmentError when identically zero.
TruncatedSeries divisor_pullback(const ProjectiveCurve& f, const Hypersurface& d);

/// m_f(rho, D) = deg(D)*T_f(rho) - log_p|Q∘f|_r. Final slope >= 0.
PLFunction proximity(const ProjectiveCurve& f, const Hypersurface& d);

/// N_f(rho, D): counting function of the zeros of Q∘f.
PLFunction counting(const ProjectiveCurve& f, const Hypersurface& d);

/// Verifies m + N - d*T is a constant function equal to v_p of the first
/// nonzero coefficient of Q∘f, and returns that constant. Both failures are
/// internal inconsistencies, not data errors.
Rational fmt_verify(const ProjectiveCurve& f, const Hypersurface& d);

/// final_slope(m_f(.,D)) == 0, i.e. m_f(r,D) = O(1).
bool is_bounded_proximity(const ProjectiveCurve& f, const Hypersurface& d);

struct CountingBoundRecord {
    Rational counting_slope;
    Rational order_slope_scaled; // deg(D) * final_slope(T)
    bool slope_ok;
    Rational gap; // sup of N - d*T over [0, R]
};

/// N_f(r,D) <= d T_f(r) + O(1), checked at slope level with the empirical
/// constant measured on [0, R].
CountingBoundRecord fmt_counting_bound(const ProjectiveCurve& f, const Hypersurface& d,
                                       const Rational& r_max = 32);

struct DivisorProfile {
    std::string name;
    PLFunction proximity;
    PLFunction counting;
    Rational fmt_constant;
};

/// Order function plus per-divisor proximity/counting/constant records.
struct NevanlinnaProfile {
    PLFunction order;
    std::vector<DivisorProfile> divisors;
};

NevanlinnaProfile nevanlinna_profile(const ProjectiveCurve& f,
                                     std::span<const Hypersurface> divisors);

} // namespace pnev
