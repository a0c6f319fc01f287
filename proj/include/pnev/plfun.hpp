#pragma once

#include <span>
#include <string>
#include <vector>

#include "pnev/rational.hpp"

namespace pnev {

/// Exact piecewise-linear function of rho = log_p r, total on (-inf, inf).
///
/// Canonical form: breakpoints strictly increasing, adjacent segment slopes
/// distinct, and the additive level pinned by the value at rho = 0. Two
/// PLFunctions represent the same function iff they compare equal.
/// Convexity is a queryable property, not an invariant (differences of
/// convex functions arise routinely).
class PLFunction {
public:
    /// The constant zero function.
    PLFunction() : value0_(0) { slopes_.push_back(0); }

    static PLFunction constant(Rational c);
    /// slope*rho + value_at_zero
    static PLFunction affine(Rational slope, Rational value_at_zero);
    /// From raw pieces; canonicalizes. slopes.size() must be
    /// breakpoints.size() + 1 and breakpoints strictly increasing.
    static PLFunction from_pieces(std::vector<Rational> breakpoints,
                                  std::vector<Rational> slopes,
                                  Rational value_at_zero);

    Rational eval(const Rational& rho) const;

    const std::vector<Rational>& breakpoints() const { return bps_; }
    const std::vector<Rational>& slopes() const { return slopes_; }
    const Rational& value_at_zero() const { return value0_; }

    /// Slope of the last segment: the asymptotic growth rate as rho -> +inf.
    /// Zero means f = O(1).
    const Rational& final_slope() const { return slopes_.back(); }
    const Rational& initial_slope() const { return slopes_.front(); }

    bool is_convex() const;
    bool is_constant() const { return bps_.empty() && slopes_[0] == 0; }

    friend bool operator==(const PLFunction& a, const PLFunction& b) {
        return a.bps_ == b.bps_ && a.slopes_ == b.slopes_ && a.value0_ == b.value0_;
    }

    std::string str() const;

private:
    std::vector<Rational> bps_;
    std::vector<Rational> slopes_; // one more entry than bps_
    Rational value0_;              // value at rho = 0

    void canonicalize();
};

/// Pointwise maximum; convex when every input is convex.
PLFunction pl_max(std::span<const PLFunction> fs);
PLFunction pl_max(std::initializer_list<PLFunction> fs);

/// cf*f + cg*g, canonical form.
PLFunction pl_combine(const PLFunction& f, const PLFunction& g,
                      const Rational& cf, const Rational& cg);

inline PLFunction operator+(const PLFunction& f, const PLFunction& g) {
    return pl_combine(f, g, 1, 1);
}
inline PLFunction operator-(const PLFunction& f, const PLFunction& g) {
    return pl_combine(f, g, 1, -1);
}
PLFunction operator*(const Rational& c, const PLFunction& f);

/// Exact sup of f - g over [rho_lo, rho_hi]; attained at an endpoint or a
/// breakpoint of the difference.
Rational sup_gap(const PLFunction& f, const PLFunction& g,
                 const Rational& rho_lo, const Rational& rho_hi);

} // namespace pnev
