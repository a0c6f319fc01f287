#include "pnev/plfun.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pnev {

void PLFunction::canonicalize() {
    std::vector<Rational> bps, slopes;
    slopes.push_back(slopes_[0]);
    for (std::size_t j = 0; j < bps_.size(); ++j) {
        if (slopes_[j + 1] != slopes.back()) {
            bps.push_back(bps_[j]);
            slopes.push_back(slopes_[j + 1]);
        }
    }
    bps_ = std::move(bps);
    slopes_ = std::move(slopes);
}

PLFunction PLFunction::constant(Rational c) {
    PLFunction f;
    f.value0_ = std::move(c);
    return f;
}

PLFunction PLFunction::affine(Rational slope, Rational value_at_zero) {
    PLFunction f;
    f.slopes_[0] = std::move(slope);
    f.value0_ = std::move(value_at_zero);
    return f;
}

PLFunction PLFunction::from_pieces(std::vector<Rational> breakpoints,
                                   std::vector<Rational> slopes,
                                   Rational value_at_zero) {
    if (slopes.size() != breakpoints.size() + 1)
        throw Error("PLFunction: need one more slope than breakpoints");
    for (std::size_t j = 1; j < breakpoints.size(); ++j)
        if (!(breakpoints[j - 1] < breakpoints[j]))
            throw Error("PLFunction: breakpoints must be strictly increasing");
    PLFunction f;
    f.bps_ = std::move(breakpoints);
    f.slopes_ = std::move(slopes);
    f.value0_ = std::move(value_at_zero);
    f.canonicalize();
    return f;
}

Rational PLFunction::eval(const Rational& rho) const {
    Rational v = value0_;
    if (rho > 0) {
        // Index of the segment containing 0+ : slopes_[i] covers (bps_[i-1], bps_[i]).
        std::size_t i = std::upper_bound(bps_.begin(), bps_.end(), Rational(0)) - bps_.begin();
        Rational prev = 0;
        while (i < bps_.size() && bps_[i] < rho) {
            v += slopes_[i] * (bps_[i] - prev);
            prev = bps_[i];
            ++i;
        }
        v += slopes_[i] * (rho - prev);
    } else if (rho < 0) {
        std::size_t i = std::lower_bound(bps_.begin(), bps_.end(), Rational(0)) - bps_.begin();
        Rational prev = 0;
        while (i > 0 && bps_[i - 1] > rho) {
            v -= slopes_[i] * (prev - bps_[i - 1]);
            prev = bps_[i - 1];
            --i;
        }
        v -= slopes_[i] * (prev - rho);
    }
    return v;
}

bool PLFunction::is_convex() const {
    for (std::size_t j = 1; j < slopes_.size(); ++j)
        if (slopes_[j] < slopes_[j - 1]) return false;
    return true;
}

std::string PLFunction::str() const {
    std::ostringstream os;
    os << "PL{slopes=[";
    for (std::size_t j = 0; j < slopes_.size(); ++j)
        os << (j ? "," : "") << rational_str(slopes_[j]);
    os << "], bps=[";
    for (std::size_t j = 0; j < bps_.size(); ++j)
        os << (j ? "," : "") << rational_str(bps_[j]);
    os << "], f(0)=" << rational_str(value0_) << "}";
    return os.str();
}

namespace {

struct Line {
    Rational slope;
    Rational intercept; // value at rho = 0 extrapolated along the segment
};

Rational crossing(const Line& a, const Line& b) {
    return (b.intercept - a.intercept) / (a.slope - b.slope);
}

// Upper envelope of a set of lines over the whole real line. Returns the
// active lines in increasing slope order and the crossover abscissae.
void upper_envelope(std::vector<Line> lines, std::vector<Line>& hull,
                    std::vector<Rational>& xs) {
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        if (a.slope != b.slope) return a.slope < b.slope;
        return a.intercept < b.intercept;
    });
    hull.clear();
    xs.clear();
    for (const Line& l : lines) {
        if (!hull.empty() && hull.back().slope == l.slope) {
            hull.pop_back(); // same slope, l has the larger intercept
            if (!xs.empty()) xs.pop_back();
        }
        while (hull.size() >= 2 && crossing(hull[hull.size() - 2], l) <= xs.back()) {
            hull.pop_back();
            xs.pop_back();
        }
        // The remaining top always survives: it has strictly smaller slope,
        // so it wins as rho -> -inf.
        if (!hull.empty()) xs.push_back(crossing(hull.back(), l));
        hull.push_back(l);
    }
}

} // namespace

PLFunction pl_max(std::span<const PLFunction> fs) {
    if (fs.empty()) throw Error("pl_max of an empty list");
    if (fs.size() == 1) return fs[0];

    std::set<Rational> bset;
    for (const PLFunction& f : fs)
        bset.insert(f.breakpoints().begin(), f.breakpoints().end());
    std::vector<Rational> grid(bset.begin(), bset.end());

    // On each elementary interval every input is affine; take the upper
    // envelope of those lines and keep the part inside the interval.
    std::vector<Rational> out_bps, out_slopes;
    const std::size_t nseg = grid.size() + 1;
    for (std::size_t k = 0; k < nseg; ++k) {
        bool has_lo = k > 0, has_hi = k < grid.size();
        Rational lo = has_lo ? grid[k - 1] : Rational(0);
        Rational hi = has_hi ? grid[k] : Rational(0);
        // A reference point inside the interval to read off each affine piece.
        Rational ref = has_lo ? lo : (has_hi ? hi : Rational(0));

        std::vector<Line> lines;
        lines.reserve(fs.size());
        for (const PLFunction& f : fs) {
            // Slope of f just right of ref when the interval extends right of
            // ref, else just left. Both agree strictly inside the interval.
            const auto& b = f.breakpoints();
            Rational s;
            if (has_lo || !has_hi) {
                std::size_t i = std::upper_bound(b.begin(), b.end(), ref) - b.begin();
                s = f.slopes()[i];
            } else {
                std::size_t i = std::lower_bound(b.begin(), b.end(), ref) - b.begin();
                s = f.slopes()[i];
            }
            Rational value_at_ref = f.eval(ref);
            lines.push_back(Line{s, value_at_ref - s * ref});
        }

        std::vector<Line> hull;
        std::vector<Rational> xs;
        upper_envelope(std::move(lines), hull, xs);

        // Locate the hull segment active at the interval's left end.
        std::size_t i = 0;
        if (has_lo)
            while (i < xs.size() && xs[i] <= lo) ++i;
        if (has_lo) out_bps.push_back(lo);
        out_slopes.push_back(hull[i].slope);
        while (i < xs.size() && (!has_hi || xs[i] < hi)) {
            out_bps.push_back(xs[i]);
            ++i;
            out_slopes.push_back(hull[i].slope);
        }
    }

    Rational v0 = fs[0].eval(0);
    for (const PLFunction& f : fs.subspan(1)) v0 = std::max(v0, f.eval(0));
    return PLFunction::from_pieces(std::move(out_bps), std::move(out_slopes), std::move(v0));
}

PLFunction pl_max(std::initializer_list<PLFunction> fs) {
    return pl_max(std::span<const PLFunction>(fs.begin(), fs.size()));
}

PLFunction pl_combine(const PLFunction& f, const PLFunction& g,
                      const Rational& cf, const Rational& cg) {
    std::set<Rational> bset;
    bset.insert(f.breakpoints().begin(), f.breakpoints().end());
    bset.insert(g.breakpoints().begin(), g.breakpoints().end());
    std::vector<Rational> bps(bset.begin(), bset.end());

    auto slope_at_segment = [](const PLFunction& h, const std::vector<Rational>& grid,
                               std::size_t seg) {
        // Segment seg covers (grid[seg-1], grid[seg]); probe with its bounds.
        const auto& b = h.breakpoints();
        if (seg < grid.size()) {
            std::size_t i = std::lower_bound(b.begin(), b.end(), grid[seg]) - b.begin();
            return h.slopes()[i];
        }
        return h.slopes().back();
    };

    std::vector<Rational> slopes;
    for (std::size_t seg = 0; seg <= bps.size(); ++seg)
        slopes.push_back(cf * slope_at_segment(f, bps, seg) +
                         cg * slope_at_segment(g, bps, seg));
    return PLFunction::from_pieces(std::move(bps), std::move(slopes),
                                   cf * f.value_at_zero() + cg * g.value_at_zero());
}

PLFunction operator*(const Rational& c, const PLFunction& f) {
    return pl_combine(f, PLFunction(), c, 0);
}

Rational sup_gap(const PLFunction& f, const PLFunction& g,
                 const Rational& rho_lo, const Rational& rho_hi) {
    if (rho_lo > rho_hi) throw FixtureError("sup_gap: inverted interval");
    PLFunction d = f - g;
    Rational best = d.eval(rho_lo);
    best = std::max(best, d.eval(rho_hi));
    for (const Rational& b : d.breakpoints())
        if (rho_lo < b && b < rho_hi) best = std::max(best, d.eval(b));
    return best;
}

} // namespace pnev
