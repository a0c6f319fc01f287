#include "pnev/series.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pnev {

namespace {

void trim_trailing_zeros(std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
    trim_trailing_zeros(coeffs_);
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, int truncation_degree,
                                 Rational reliability_rho)
    : coeffs_(std::move(coefficients)),
      trunc_deg_(truncation_degree),
      reliability_(std::move(reliability_rho)) {
    if (static_cast<int>(coeffs_.size()) > truncation_degree + 1)
        throw FixtureError("series has coefficients beyond its truncation degree");
    coeffs_.resize(truncation_degree + 1, Rational(0));
}

int TruncatedSeries::degree() const {
    if (trunc_deg_) return *trunc_deg_;
    return static_cast<int>(coeffs_.size()) - 1;
}

Rational TruncatedSeries::coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

int TruncatedSeries::order_at_origin() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

namespace {

// Truncation metadata of a binary operation: exact only when both inputs
// are exact; otherwise the minimum degree and the minimum certificate.
struct Meta {
    std::optional<int> deg;
    std::optional<Rational> rel;
};

Meta combine_meta(const TruncatedSeries& a, const TruncatedSeries& b) {
    Meta m;
    if (a.is_exact() && b.is_exact()) return m;
    if (a.is_exact()) {
        m.deg = b.truncation_degree();
        m.rel = b.reliability_rho();
        return m;
    }
    if (b.is_exact()) {
        m.deg = a.truncation_degree();
        m.rel = a.reliability_rho();
        return m;
    }
    m.deg = std::min(*a.truncation_degree(), *b.truncation_degree());
    m.rel = std::min(*a.reliability_rho(), *b.reliability_rho());
    return m;
}

TruncatedSeries with_meta(std::vector<Rational> coeffs, const Meta& m) {
    if (!m.deg) return TruncatedSeries(std::move(coeffs));
    coeffs.resize(*m.deg + 1, Rational(0));
    return TruncatedSeries(std::move(coeffs), *m.deg, *m.rel);
}

} // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    Meta m = combine_meta(a, b);
    std::vector<Rational> out(std::max(a.coefficients().size(), b.coefficients().size()),
                              Rational(0));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i));
    if (m.deg) out.resize(*m.deg + 1, Rational(0));
    return with_meta(std::move(out), m);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a + Rational(-1) * b;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    Meta m = combine_meta(a, b);
    if (a.is_zero() || b.is_zero()) return with_meta({}, m);
    std::vector<Rational> out(a.coefficients().size() + b.coefficients().size() - 1,
                              Rational(0));
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
        if (a.coefficients()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coefficients().size(); ++j)
            out[i + j] += a.coefficients()[i] * b.coefficients()[j];
    }
    if (m.deg) out.resize(*m.deg + 1, Rational(0));
    return with_meta(std::move(out), m);
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
    std::vector<Rational> out;
    if (c != 0) {
        out.reserve(a.coefficients().size());
        for (const Rational& x : a.coefficients()) out.push_back(c * x);
    }
    Meta m;
    m.deg = a.truncation_degree();
    m.rel = a.reliability_rho();
    return with_meta(std::move(out), m);
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_ && a.trunc_deg_ == b.trunc_deg_ &&
           a.reliability_ == b.reliability_;
}

std::string TruncatedSeries::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        Rational a = coeffs_[i];
        if (a == 0) continue;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || i == 0) {
            os << rational_str(a);
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

TruncatedSeries parse_series(const std::string& text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw ParseError("bad series '" + text + "': " + what, pos);
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto peek = [&]() -> char {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    };
    auto scan_integer = [&]() -> Integer {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a number");
        Integer n = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            n = n * 10 + (text[pos] - '0');
            ++pos;
        }
        return n;
    };

    std::vector<Rational> coeffs;
    auto add = [&](int k, const Rational& c) {
        if (static_cast<int>(coeffs.size()) <= k) coeffs.resize(k + 1, Rational(0));
        coeffs[k] += c;
    };

    bool any = false;
    while (peek() != '\0') {
        int sign = 1;
        char c = peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++pos;
        } else if (any) {
            fail("expected '+' or '-' between terms");
        }
        Rational coeff = sign;
        int power = 0;
        bool saw_factor = false;
        for (;;) {
            char f = peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                Integer num = scan_integer();
                Integer den = 1;
                if (peek() == '/') {
                    ++pos;
                    den = scan_integer();
                    if (den == 0) fail("zero denominator");
                }
                coeff *= Rational(num, den);
            } else if (f == 'z') {
                ++pos;
                int exp = 1;
                if (peek() == '^') {
                    ++pos;
                    Integer e = scan_integer();
                    if (e > 4096) fail("exponent too large");
                    exp = static_cast<int>(e);
                }
                power += exp;
            } else {
                fail("expected a coefficient or z");
            }
            saw_factor = true;
            if (peek() == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!saw_factor) fail("empty term");
        add(power, coeff);
        any = true;
    }
    if (!any) fail("empty series");
    return TruncatedSeries(std::move(coeffs));
}

namespace {

// Valuations of the nonzero coefficients, as hull points (index, v_p(a_i)).
std::vector<std::pair<int, Integer>> coefficient_points(const TruncatedSeries& phi,
                                                        const PrimeContext& ctx) {
    std::vector<std::pair<int, Integer>> pts;
    for (std::size_t i = 0; i < phi.coefficients().size(); ++i) {
        const Rational& a = phi.coefficients()[i];
        if (a == 0) continue;
        pts.emplace_back(static_cast<int>(i), ctx.valuation(a).value());
    }
    if (pts.empty()) throw FixtureError("zero series has no Gauss norm");
    return pts;
}

} // namespace

BoundedPL gauss_norm(const TruncatedSeries& phi, const PrimeContext& ctx) {
    auto pts = coefficient_points(phi, ctx);
    std::vector<PLFunction> lines;
    lines.reserve(pts.size());
    for (const auto& [i, v] : pts)
        lines.push_back(PLFunction::affine(Rational(i), Rational(-v)));
    BoundedPL out{pl_max(lines), std::nullopt};

    if (!phi.is_exact()) {
        // Certified while the envelope maximum is attained at an index below
        // the truncation degree: capped at the start of the final segment when
        // the truncation-degree coefficient itself carries that segment.
        std::optional<Rational> structural;
        if (pts.back().first == *phi.truncation_degree()) {
            if (out.fn.breakpoints().empty())
                throw ReliabilityError(
                    "truncated series is dominated by its last known coefficient "
                    "everywhere; the truncation certifies nothing");
            structural = out.fn.breakpoints().back();
        }
        out.certified_to = *phi.reliability_rho();
        if (structural && *structural < *out.certified_to) out.certified_to = structural;
    }
    return out;
}

NewtonPolygon newton_polygon(const TruncatedSeries& phi, const PrimeContext& ctx) {
    auto pts = coefficient_points(phi, ctx);
    // Monotone-chain lower hull; indices already sorted increasing.
    std::vector<std::pair<int, Integer>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // b above or on segment a->p  <=>  cross(a->b, a->p) >= 0 turns left
            Integer cross = (Integer(b.first) - a.first) * (p.second - a.second) -
                            (p.first - a.first) * (b.second - a.second);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    NewtonPolygon np;
    np.vertices.reserve(hull.size());
    for (const auto& [i, v] : hull) np.vertices.push_back({i, v});
    return np;
}

long zero_count(const TruncatedSeries& phi, const PrimeContext& ctx, const Rational& rho) {
    auto pts = coefficient_points(phi, ctx);
    if (!phi.is_exact() && rho > *phi.reliability_rho())
        throw ReliabilityError("zero count queried beyond the certified radius");
    int argmax = pts[0].first;
    Rational best = Rational(pts[0].first) * rho - pts[0].second;
    for (std::size_t k = 1; k < pts.size(); ++k) {
        Rational val = Rational(pts[k].first) * rho - pts[k].second;
        if (val >= best) { // largest attaining index: closed-disc convention
            best = val;
            argmax = pts[k].first;
        }
    }
    if (!phi.is_exact() && argmax == *phi.truncation_degree())
        throw ReliabilityError(
            "zero count at rho = " + rational_str(rho) +
            " is carried by the truncation-degree coefficient and is not certified");
    return argmax;
}

BoundedPL counting_pl(const TruncatedSeries& phi, const PrimeContext& ctx) {
    NewtonPolygon np = newton_polygon(phi, ctx);
    int ord = np.vertices.front().index;
    PLFunction n = PLFunction::affine(Rational(ord), Rational(0));
    // Each polygon edge of slope s and horizontal length l contributes l
    // zeros of log-radius s, i.e. an l*max(0, rho - s) ramp.
    for (std::size_t k = 1; k < np.vertices.size(); ++k) {
        const auto& a = np.vertices[k - 1];
        const auto& b = np.vertices[k];
        Rational s(b.valuation - a.valuation, b.index - a.index);
        Rational len(b.index - a.index);
        PLFunction ramp = pl_max({PLFunction::constant(0),
                                  PLFunction::affine(1, -s)});
        n = pl_combine(n, ramp, 1, len);
    }
    BoundedPL out{std::move(n), std::nullopt};
    if (!phi.is_exact()) {
        // Same certificate as the Gauss norm (Legendre-dual data).
        out.certified_to = gauss_norm(phi, ctx).certified_to;
    }
    return out;
}

TruncatedSeries compose_homogeneous(const MultiPoly& q,
                                    std::span<const TruncatedSeries> components) {
    if (q.nvars() != static_cast<int>(components.size()))
        throw FixtureError("compose: polynomial arity " + std::to_string(q.nvars()) +
                           " != number of components " +
                           std::to_string(components.size()));
    TruncatedSeries acc{std::vector<Rational>{}};
    // start as exact zero, adopt truncation lazily via arithmetic
    bool first = true;
    for (const auto& [mono, coeff] : q.terms()) {
        TruncatedSeries term{std::vector<Rational>{coeff}};
        for (std::size_t i = 0; i < components.size(); ++i)
            for (int e = 0; e < mono[i]; ++e) term = term * components[i];
        acc = first ? term : acc + term;
        first = false;
    }
    return acc;
}

TruncatedSeries series_gcd(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!a.is_exact() || !b.is_exact())
        throw FixtureError("gcd requires exact polynomials");
    std::vector<Rational> u = a.coefficients(), v = b.coefficients();
    auto degree = [](const std::vector<Rational>& p) { return static_cast<int>(p.size()) - 1; };
    while (!v.empty()) {
        // u mod v
        std::vector<Rational> r = u;
        while (degree(r) >= degree(v)) {
            Rational q = r.back() / v.back();
            int shift = degree(r) - degree(v);
            for (std::size_t i = 0; i < v.size(); ++i) r[i + shift] -= q * v[i];
            trim_trailing_zeros(r);
            if (r.empty()) break;
        }
        u = std::move(v);
        v = std::move(r);
    }
    if (!u.empty()) {
        Rational lead = u.back();
        for (Rational& c : u) c /= lead;
    }
    return TruncatedSeries(std::move(u));
}

} // namespace pnev
