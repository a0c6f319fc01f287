#include "pnev/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "pnev/linalg.hpp"

namespace pnev {

// ---------------------------------------------------------------- ProjPoint

ProjPoint::ProjPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    std::size_t k = 0;
    while (k < coords_.size() && coords_[k] == 0) ++k;
    if (k == coords_.size())
        throw FixtureError("projective point needs a nonzero coordinate");
    Rational lead = coords_[k];
    for (Rational& c : coords_) c /= lead;
}

std::string ProjPoint::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i)
        os << (i ? ":" : "") << rational_str(coords_[i]);
    os << "]";
    return os.str();
}

ProjPoint parse_point(const std::string& text, int ncoords) {
    std::size_t lo = text.find('[');
    std::size_t hi = text.rfind(']');
    if (lo == std::string::npos || hi == std::string::npos || hi <= lo)
        throw ParseError("bad point '" + text + "': expected [a:b:...]", 0);
    std::string body = text.substr(lo + 1, hi - lo - 1);
    std::vector<Rational> coords;
    std::size_t start = 0;
    for (;;) {
        std::size_t colon = body.find(':', start);
        std::string piece = body.substr(
            start, colon == std::string::npos ? std::string::npos : colon - start);
        std::size_t a = piece.find_first_not_of(" \t");
        std::size_t b = piece.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw ParseError("bad point '" + text + "': empty coordinate", start);
        coords.push_back(parse_rational(piece.substr(a, b - a + 1)));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (static_cast<int>(coords.size()) != ncoords)
        throw ParseError("bad point '" + text + "': expected " + std::to_string(ncoords) +
                             " coordinates",
                         0);
    return ProjPoint(std::move(coords));
}

// ------------------------------------------------------------- Hypersurface

Hypersurface::Hypersurface(std::string name, MultiPoly poly)
    : name_(std::move(name)), poly_(std::move(poly)) {
    if (poly_.is_zero())
        throw FixtureError("divisor '" + name_ + "' is the zero polynomial");
    if (!poly_.is_homogeneous()) {
        int d0 = std::accumulate(poly_.terms().begin()->first.begin(),
                                 poly_.terms().begin()->first.end(), 0);
        for (const auto& [m, c] : poly_.terms()) {
            int dm = std::accumulate(m.begin(), m.end(), 0);
            if (dm != d0) {
                MultiPoly term(poly_.nvars());
                term.add_term(m, c);
                throw FixtureError("divisor '" + name_ + "' is not homogeneous: term '" +
                                   term.str() + "' has degree " + std::to_string(dm) +
                                   " against " + std::to_string(d0));
            }
        }
    }
    degree_ = poly_.total_degree();
    if (degree_ < 1)
        throw FixtureError("divisor '" + name_ + "' must have degree >= 1");
}

bool Hypersurface::contains(const ProjPoint& p) const {
    return poly_.eval(p.coords()) == 0;
}

std::vector<Rational> Hypersurface::gradient_at(const ProjPoint& p) const {
    std::vector<Rational> g;
    g.reserve(poly_.nvars());
    for (int i = 0; i < poly_.nvars(); ++i)
        g.push_back(poly_.derivative(i).eval(p.coords()));
    return g;
}

// ------------------------------------------------ univariate root machinery

namespace {

[[noreturn]] void unsupported(const std::string& msg) {
    throw UnsupportedFixtureError(msg);
}

std::vector<Integer> divisors_of(const Integer& n_in) {
    Integer n = abs(n_in);
    if (n == 0) throw InternalError("divisors of zero requested");
    std::vector<std::pair<Integer, int>> factors;
    Integer m = n;
    for (Integer d = 2; d * d <= m && d < 1000000; ++d) {
        if (m % d == 0) {
            int e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
    }
    if (m > 1) {
        if (!is_prime(m))
            unsupported("coefficient " + n.str() +
                        " is too large to factor for rational root search");
        factors.emplace_back(m, 1);
    }
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factors) {
        std::size_t base = divs.size();
        Integer pe = 1;
        for (int k = 1; k <= e; ++k) {
            pe *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
        }
        if (divs.size() > 200000) unsupported("too many divisors in rational root search");
    }
    return divs;
}

// Divide p (ascending coefficients) by (x - r); false when r is not a root.
bool deflate_at_root(std::vector<Rational>& p, const Rational& r) {
    std::vector<Rational> q(p.size() - 1, Rational(0));
    Rational carry = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 1; --i) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
    }
    if (p[0] + carry * r != 0) return false;
    p = std::move(q);
    return true;
}

Rational eval_poly(const std::vector<Rational>& p, const Rational& x) {
    Rational acc = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

struct RootList {
    std::vector<std::pair<Rational, int>> roots; // (root, multiplicity)
    int remaining_degree = 0;                    // unfactored part
};

RootList rational_roots(std::vector<Rational> p) {
    RootList out;
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) throw InternalError("rational_roots of the zero polynomial");

    int k0 = 0;
    while (p[k0] == 0) ++k0;
    if (k0 > 0) {
        out.roots.emplace_back(Rational(0), k0);
        p.erase(p.begin(), p.begin() + k0);
    }
    if (p.size() == 1) return out;

    Integer den = 1;
    for (const Rational& c : p) den = lcm(den, denominator(c));
    std::vector<Integer> ip;
    ip.reserve(p.size());
    for (const Rational& c : p) ip.push_back(Integer(numerator(c) * (den / denominator(c))));
    Integer content = 0;
    for (const Integer& c : ip) content = gcd(content, c);
    for (Integer& c : ip) c /= content;

    std::vector<Integer> nums = divisors_of(ip.front());
    std::vector<Integer> dens = divisors_of(ip.back());
    std::vector<Rational> candidates;
    candidates.reserve(nums.size() * dens.size() * 2);
    for (const Integer& a : nums)
        for (const Integer& b : dens) {
            candidates.push_back(Rational(a, b));
            candidates.push_back(Rational(-a, b));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const Rational& r : candidates) {
        if (p.size() <= 1) break;
        if (eval_poly(p, r) != 0) continue;
        int mult = 0;
        while (p.size() > 1 && deflate_at_root(p, r)) ++mult;
        if (mult > 0) out.roots.emplace_back(r, mult);
    }
    out.remaining_degree = static_cast<int>(p.size()) - 1;
    return out;
}

// ---- binary forms: homogeneous polynomials in the two parameters (s, t)

struct BinaryForm {
    std::vector<Rational> poly; // F(s,1), ascending in s
    int degree;                 // homogeneous degree
    int inf_mult() const { return degree - (static_cast<int>(poly.size()) - 1); }
};

BinaryForm to_binary_form(const MultiPoly& f) {
    if (f.nvars() != 2) throw InternalError("binary form needs two variables");
    if (f.is_zero() || !f.is_homogeneous())
        throw InternalError("binary form must be nonzero homogeneous");
    BinaryForm bf;
    bf.degree = f.total_degree();
    for (const auto& [m, c] : f.terms()) {
        int k = m[0];
        if (static_cast<int>(bf.poly.size()) <= k) bf.poly.resize(k + 1, Rational(0));
        bf.poly[k] = c;
    }
    while (!bf.poly.empty() && bf.poly.back() == 0) bf.poly.pop_back();
    return bf;
}

struct BinaryRoots {
    std::vector<std::pair<ProjPoint, int>> roots; // points (s:t) of P^1
    int remaining_degree = 0;
};

BinaryRoots binary_rational_roots(const MultiPoly& f) {
    BinaryForm bf = to_binary_form(f);
    BinaryRoots out;
    if (bf.inf_mult() > 0)
        out.roots.emplace_back(ProjPoint({Rational(1), Rational(0)}), bf.inf_mult());
    if (bf.poly.size() > 1) {
        RootList rl = rational_roots(bf.poly);
        for (const auto& [r, m] : rl.roots)
            out.roots.emplace_back(ProjPoint({r, Rational(1)}), m);
        out.remaining_degree = rl.remaining_degree;
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<Rational> poly_gcd(std::vector<Rational> u, std::vector<Rational> v) {
    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(u);
    trim(v);
    while (!v.empty()) {
        std::vector<Rational> r = u;
        while (static_cast<int>(r.size()) >= static_cast<int>(v.size())) {
            Rational q = r.back() / v.back();
            int shift = static_cast<int>(r.size()) - static_cast<int>(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) r[i + shift] -= q * v[i];
            trim(r);
            if (r.empty()) break;
        }
        u = std::move(v);
        v = std::move(r);
    }
    if (!u.empty()) {
        Rational lead = u.back();
        for (Rational& c : u) c /= lead;
    }
    return u;
}

// common zeros of a family of binary forms: gcd degree plus a rational
// witness root when one exists
struct BinaryCommon {
    int gcd_degree = 0;
    std::optional<ProjPoint> rational_root;
};

BinaryCommon binary_common_zeros(const std::vector<MultiPoly>& fs) {
    BinaryForm first = to_binary_form(fs.at(0));
    std::vector<Rational> g = first.poly;
    int inf = first.inf_mult();
    for (std::size_t i = 1; i < fs.size(); ++i) {
        BinaryForm b = to_binary_form(fs[i]);
        g = poly_gcd(g, b.poly);
        inf = std::min(inf, b.inf_mult());
    }
    BinaryCommon out;
    out.gcd_degree = inf + std::max(0, static_cast<int>(g.size()) - 1);
    if (inf > 0)
        out.rational_root = ProjPoint({Rational(1), Rational(0)});
    else if (g.size() > 1) {
        RootList rl = rational_roots(g);
        if (!rl.roots.empty())
            out.rational_root = ProjPoint({rl.roots[0].first, Rational(1)});
    }
    return out;
}

// ------------------------------------------------- parametrization plumbing

std::vector<MultiPoly> identity_param(int nvars) {
    std::vector<MultiPoly> id;
    id.reserve(nvars);
    for (int i = 0; i < nvars; ++i) id.push_back(MultiPoly::variable(nvars, i));
    return id;
}

ProjPoint apply_param(const std::vector<MultiPoly>& param, const ProjPoint& p) {
    std::vector<Rational> coords;
    coords.reserve(param.size());
    for (const MultiPoly& f : param) coords.push_back(f.eval(p.coords()));
    return ProjPoint(std::move(coords));
}

Matrix linear_forms_matrix(std::span<const Hypersurface> hs) {
    Matrix m;
    for (const Hypersurface& h : hs) {
        std::vector<Rational> row(h.poly().nvars(), Rational(0));
        for (const auto& [mono, c] : h.poly().terms())
            for (int i = 0; i < h.poly().nvars(); ++i)
                if (mono[i] == 1) row[i] = c;
        m.push_back(std::move(row));
    }
    return m;
}

// symmetric matrix of a quadratic form
Matrix quadric_matrix(const MultiPoly& q) {
    int n = q.nvars();
    Matrix m(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& [mono, c] : q.terms()) {
        int i = -1, j = -1;
        for (int v = 0; v < n; ++v) {
            if (mono[v] == 2) i = j = v;
            if (mono[v] == 1) (i == -1 ? i : j) = v;
        }
        if (i == j)
            m[i][i] = c;
        else {
            m[i][j] = c / 2;
            m[j][i] = c / 2;
        }
    }
    return m;
}

} // namespace

std::vector<MultiPoly> linear_subspace_param(std::span<const Hypersurface> hyperplanes) {
    for (const Hypersurface& h : hyperplanes)
        if (h.degree() != 1) throw InternalError("subspace param needs hyperplanes");
    int nvars = hyperplanes[0].poly().nvars();
    auto basis = nullspace(linear_forms_matrix(hyperplanes));
    if (basis.empty()) return {};
    int m = static_cast<int>(basis.size());
    std::vector<MultiPoly> param;
    param.reserve(nvars);
    for (int i = 0; i < nvars; ++i) {
        MultiPoly f(m);
        for (int j = 0; j < m; ++j) {
            Monomial mono(m, 0);
            mono[j] = 1;
            f.add_term(mono, basis[j][i]);
        }
        param.push_back(std::move(f));
    }
    return param;
}

std::optional<ProjPoint> conic_rational_point(const MultiPoly& conic, int height) {
    if (conic.nvars() != 3) throw InternalError("conic point search expects P^2");
    std::vector<Rational> pt(3);
    for (int h = 1; h <= height; ++h) {
        for (int a = -h; a <= h; ++a)
            for (int b = -h; b <= h; ++b)
                for (int c = -h; c <= h; ++c) {
                    if (std::max({std::abs(a), std::abs(b), std::abs(c)}) != h) continue;
                    int first = a != 0 ? a : (b != 0 ? b : c);
                    if (first < 0) continue;
                    if (std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)) != 1)
                        continue;
                    pt[0] = a;
                    pt[1] = b;
                    pt[2] = c;
                    if (conic.eval(pt) == 0)
                        return ProjPoint({Rational(a), Rational(b), Rational(c)});
                }
    }
    return std::nullopt;
}

std::vector<MultiPoly> conic_param(const MultiPoly& conic, const ProjPoint& base) {
    if (conic.nvars() != 3 || conic.total_degree() != 2)
        throw InternalError("conic_param expects a plane conic");
    Matrix m = quadric_matrix(conic);
    if (matrix_rank(m) != 3)
        throw UnsupportedFixtureError(
            "conic is degenerate; parametrization through a point unsupported");

    const auto& a = base.coords();
    // basis points e_bi, e_bj with {base, e_bi, e_bj} independent
    int bi = -1, bj = -1;
    for (int i = 0; i < 3 && bi == -1; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Matrix test{a,
                        {Rational(i == 0), Rational(i == 1), Rational(i == 2)},
                        {Rational(j == 0), Rational(j == 1), Rational(j == 2)}};
            if (matrix_rank(test) == 3) {
                bi = i;
                bj = j;
                break;
            }
        }

    // Q(s,t) = s e_bi + t e_bj; the other intersection of the line through
    // base and Q with the conic is X = C(Q) base - 2 B(base, Q) Q.
    MultiPoly cq(2);
    cq.add_term({2, 0}, m[bi][bi]);
    cq.add_term({1, 1}, 2 * m[bi][bj]);
    cq.add_term({0, 2}, m[bj][bj]);
    Rational abi = 0, abj = 0;
    for (int v = 0; v < 3; ++v) {
        abi += a[v] * m[v][bi];
        abj += a[v] * m[v][bj];
    }
    MultiPoly baq(2);
    baq.add_term({1, 0}, abi);
    baq.add_term({0, 1}, abj);

    std::vector<MultiPoly> x;
    for (int coord = 0; coord < 3; ++coord) {
        MultiPoly e(2);
        if (coord == bi) e.add_term({1, 0}, Rational(1));
        if (coord == bj) e.add_term({0, 1}, Rational(1));
        x.push_back(a[coord] * cq - Rational(2) * (baq * e));
    }

    if (!conic.substitute(x).is_zero())
        throw InternalError("conic parametrization left the conic");
    return x;
}

// ------------------------------------------------------------ intersections

namespace {

struct SplitDivisors {
    std::vector<Hypersurface> linear;
    std::vector<Hypersurface> curved;
};

SplitDivisors split_by_degree(std::span<const Hypersurface> divisors) {
    SplitDivisors s;
    for (const Hypersurface& d : divisors)
        (d.degree() == 1 ? s.linear : s.curved).push_back(d);
    return s;
}

void require_same_ambient(std::span<const Hypersurface> divisors) {
    for (const Hypersurface& d : divisors)
        if (d.ambient_dim() != divisors[0].ambient_dim())
            throw FixtureError("divisors live in different ambient spaces");
}

// Zero-dimensional rational intersection of the restricted polynomials in
// nvars parameters (nvars = m+1 <= 3). Results live in parameter space.
std::vector<std::pair<ProjPoint, int>> reduced_intersection(
    const std::vector<MultiPoly>& polys, int nvars) {
    if (nvars == 1) {
        std::vector<Rational> one{Rational(1)};
        for (const MultiPoly& f : polys)
            if (f.eval(one) != 0) return {};
        return {{ProjPoint(one), 1}};
    }
    if (nvars == 2) {
        if (polys.size() == 1) {
            BinaryRoots roots = binary_rational_roots(polys[0]);
            if (roots.remaining_degree > 0)
                unsupported("irrational intersection points on a line (degree "
                            "accounting leaves " +
                            std::to_string(roots.remaining_degree) + " unaccounted)");
            return roots.roots;
        }
        // several forms meet where all of them vanish: roots of the gcd, with
        // the minimum of the individual multiplicities
        std::vector<std::pair<ProjPoint, int>> out;
        BinaryRoots first = binary_rational_roots(polys[0]);
        BinaryCommon common = binary_common_zeros(polys);
        if (common.gcd_degree == 0) return {};
        for (const auto& [pt, mult] : first.roots) {
            int mn = mult;
            std::vector<Rational> c = pt.coords();
            bool everywhere = true;
            for (std::size_t i = 1; i < polys.size(); ++i)
                if (polys[i].eval(c) != 0) everywhere = false;
            if (!everywhere) continue;
            for (std::size_t i = 1; i < polys.size(); ++i) {
                BinaryRoots ri = binary_rational_roots(polys[i]);
                for (const auto& [pt2, m2] : ri.roots)
                    if (pt2 == pt) mn = std::min(mn, m2);
            }
            out.emplace_back(pt, mn);
        }
        // completeness: every common zero must be rational
        int found = 0;
        for (const auto& [pt, mult] : out) found += mult;
        if (found < common.gcd_degree)
            unsupported("irrational common zeros on a line");
        return out;
    }
    if (nvars == 3) {
        // plane: parametrize some smooth conic with a rational point and push
        // the remaining curves through it
        for (std::size_t i = 0; i < polys.size(); ++i) {
            const MultiPoly& c = polys[i];
            if (c.total_degree() != 2) continue;
            if (matrix_rank(quadric_matrix(c)) != 3) continue;
            std::optional<ProjPoint> pt = conic_rational_point(c);
            if (!pt) continue;
            std::vector<MultiPoly> par = conic_param(c, *pt);
            std::vector<MultiPoly> pushed;
            for (std::size_t j = 0; j < polys.size(); ++j) {
                if (j == i) continue;
                MultiPoly r = polys[j].substitute(par);
                if (r.is_zero()) unsupported("two plane curves share a component");
                pushed.push_back(std::move(r));
            }
            if (pushed.empty())
                unsupported("a single curve in the plane is not zero-dimensional");
            auto param_roots = reduced_intersection(pushed, 2);
            std::vector<std::pair<ProjPoint, int>> out;
            for (const auto& [q, mlt] : param_roots)
                out.emplace_back(apply_param(par, q), mlt);
            std::sort(out.begin(), out.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            return out;
        }
        unsupported("plane intersection needs a smooth conic with a small rational point");
    }
    unsupported("intersection in P^" + std::to_string(nvars - 1) +
                " is beyond the supported reduction classes");
}

} // namespace

std::vector<std::pair<ProjPoint, int>> intersection_points(
    std::span<const Hypersurface> divisors) {
    if (divisors.empty()) throw FixtureError("intersection of an empty family");
    require_same_ambient(divisors);
    int n = divisors[0].ambient_dim();
    SplitDivisors s = split_by_degree(divisors);

    std::vector<MultiPoly> param;
    int m = n;
    if (!s.linear.empty()) {
        std::span<const Hypersurface> lin(s.linear);
        int r = matrix_rank(linear_forms_matrix(lin));
        if (r < static_cast<int>(s.linear.size()))
            unsupported("hyperplanes are linearly dependent; the intersection is "
                        "not a reduced zero-dimensional scheme");
        param = linear_subspace_param(lin);
        if (param.empty()) return {};
        m = n - r;
    } else {
        param = identity_param(n + 1);
    }

    std::vector<std::pair<ProjPoint, int>> reduced;
    if (s.curved.empty()) {
        if (m != 0)
            unsupported("hyperplane intersection has dimension " + std::to_string(m));
        reduced = {{ProjPoint({Rational(1)}), 1}};
    } else {
        std::vector<MultiPoly> restricted;
        restricted.reserve(s.curved.size());
        for (const Hypersurface& c : s.curved) {
            MultiPoly r = c.poly().substitute(param);
            if (r.is_zero())
                unsupported("divisor '" + c.name() +
                            "' contains the intersection of the hyperplanes");
            restricted.push_back(std::move(r));
        }
        reduced = reduced_intersection(restricted, m + 1);
    }

    std::vector<std::pair<ProjPoint, int>> out;
    out.reserve(reduced.size());
    for (const auto& [q, mlt] : reduced) out.emplace_back(apply_param(param, q), mlt);
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    // Degree accounting where the Bezout count is exact: n divisors cutting a
    // zero-dimensional complete intersection.
    if (static_cast<int>(divisors.size()) == n) {
        long bezout = 1;
        for (const Hypersurface& d : divisors) bezout *= d.degree();
        long total = 0;
        for (const auto& [q, mlt] : out) total += mlt;
        if (total != bezout)
            unsupported("found " + std::to_string(total) +
                        " intersection points (with multiplicity) against a Bezout "
                        "count of " +
                        std::to_string(bezout) + "; non-rational points present");
    }
    return out;
}

bool transversality_check(std::span<const Hypersurface> divisors, const ProjPoint& point) {
    require_same_ambient(divisors);
    Matrix jac;
    for (const Hypersurface& d : divisors) {
        if (!d.contains(point))
            throw FixtureError("point " + point.str() + " does not lie on divisor '" +
                               d.name() + "'");
        jac.push_back(d.gradient_at(point));
    }
    return matrix_rank(jac) == static_cast<int>(divisors.size());
}

Hypersurface tangent_hyperplane(const Hypersurface& d, const ProjPoint& point) {
    if (!d.contains(point))
        throw FixtureError("tangent requested at a point not on '" + d.name() + "'");
    std::vector<Rational> g = d.gradient_at(point);
    if (std::all_of(g.begin(), g.end(), [](const Rational& x) { return x == 0; }))
        throw FixtureError("divisor '" + d.name() + "' is singular at " + point.str());
    MultiPoly h(d.poly().nvars());
    for (int i = 0; i < d.poly().nvars(); ++i) {
        Monomial m(d.poly().nvars(), 0);
        m[i] = 1;
        h.add_term(m, g[i]);
    }
    return Hypersurface("tangent(" + d.name() + "@" + point.str() + ")",
                        h.primitive_part());
}

// ------------------------------------------------------------ Noether solver

namespace {

void enumerate_monomials(int nvars, int degree, Monomial& cur, int pos,
                         std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        cur[pos] = degree;
        out.push_back(cur);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        cur[pos] = e;
        enumerate_monomials(nvars, degree - e, cur, pos + 1, out);
    }
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    enumerate_monomials(nvars, degree, cur, 0, out);
    return out;
}

} // namespace

Rational NoetherDecomposition::scalar(std::size_t i) const {
    const MultiPoly& c = cofactors.at(i);
    if (c.is_zero()) return 0;
    if (c.total_degree() != 0) throw Error("cofactor is not a scalar");
    return c.terms().begin()->second;
}

NoetherDecomposition noether_decompose(
    std::span<const Hypersurface> lhs_factors,
    std::span<const std::pair<Hypersurface, int>> basis) {
    if (lhs_factors.empty() || basis.empty())
        throw FixtureError("noether_decompose needs factors and a basis");
    int nvars = lhs_factors[0].poly().nvars();

    MultiPoly lhs = MultiPoly::constant(nvars, 1);
    for (const Hypersurface& h : lhs_factors) lhs = lhs * h.poly();
    int t = lhs.total_degree();

    std::vector<int> cof_deg;
    std::vector<MultiPoly> powered;
    for (const auto& [d, e] : basis) {
        int deg = t - e * d.degree();
        if (deg < 0)
            throw FixtureError("degree bookkeeping fails: cofactor of '" + d.name() +
                               "^" + std::to_string(e) + "' would have degree " +
                               std::to_string(deg));
        cof_deg.push_back(deg);
        powered.push_back(d.poly().pow(e));
    }

    std::vector<std::vector<Monomial>> cof_monos;
    int nunknown = 0;
    for (int deg : cof_deg) {
        cof_monos.push_back(monomials_of_degree(nvars, deg));
        nunknown += static_cast<int>(cof_monos.back().size());
    }

    std::vector<Monomial> rows = monomials_of_degree(nvars, t);
    std::map<Monomial, int> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);

    Matrix a(rows.size(), std::vector<Rational>(nunknown, Rational(0)));
    int col = 0;
    for (std::size_t bi = 0; bi < basis.size(); ++bi) {
        for (const Monomial& mono : cof_monos[bi]) {
            for (const auto& [pm, pc] : powered[bi].terms()) {
                Monomial prod(nvars);
                for (int v = 0; v < nvars; ++v) prod[v] = mono[v] + pm[v];
                a[row_index.at(prod)][col] += pc;
            }
            ++col;
        }
    }
    std::vector<Rational> b(rows.size(), Rational(0));
    for (const auto& [m, c] : lhs.terms()) b[row_index.at(m)] = c;

    auto sol = solve_linear(std::move(a), std::move(b));
    if (!sol)
        throw NoDecompositionError(
            "no exact decomposition exists for the requested basis "
            "(a Max Noether hypothesis fails for this configuration)");

    NoetherDecomposition out;
    col = 0;
    for (std::size_t bi = 0; bi < basis.size(); ++bi) {
        MultiPoly c(nvars);
        for (const Monomial& mono : cof_monos[bi]) c.add_term(mono, (*sol)[col++]);
        out.cofactors.push_back(std::move(c));
    }

    MultiPoly residual = lhs;
    for (std::size_t bi = 0; bi < basis.size(); ++bi)
        residual -= out.cofactors[bi] * powered[bi];
    if (!residual.is_zero())
        throw InternalError("Noether residual is nonzero after a successful solve");
    out.certified = true;
    return out;
}

std::vector<ProjPoint> tangent_line_secondary_intersections(const Hypersurface& c,
                                                            const Hypersurface& h,
                                                            const ProjPoint& a) {
    if (h.degree() != 1 || c.ambient_dim() != 2 || h.ambient_dim() != 2)
        throw FixtureError("secondary intersections need a line and a plane curve");
    if (!h.contains(a) || !c.contains(a))
        throw FixtureError("tangency point " + a.str() + " must lie on both curves");

    std::vector<Hypersurface> line{h};
    std::vector<MultiPoly> par = linear_subspace_param(line);
    MultiPoly f = c.poly().substitute(par);
    if (f.is_zero())
        throw FixtureError("the tangent line lies inside '" + c.name() + "'");

    BinaryRoots roots = binary_rational_roots(f);
    if (roots.remaining_degree > 0)
        unsupported("tangent line meets '" + c.name() +
                    "' in irrational points; fixture outside the exact scope");
    std::vector<ProjPoint> out;
    for (const auto& [q, mult] : roots.roots) {
        ProjPoint p = apply_param(par, q);
        if (!(p == a)) out.push_back(p);
    }
    return out;
}

int intersection_multiplicity_on_line(const Hypersurface& curve,
                                      const Hypersurface& line, const ProjPoint& point) {
    if (line.degree() != 1 || curve.ambient_dim() != 2 || line.ambient_dim() != 2)
        throw FixtureError("line multiplicity needs a line and a plane curve");
    if (!line.contains(point) || !curve.contains(point))
        throw FixtureError("point " + point.str() + " must lie on both divisors");

    std::vector<Hypersurface> hs{line};
    std::vector<MultiPoly> par = linear_subspace_param(hs);
    MultiPoly f = curve.poly().substitute(par);
    if (f.is_zero())
        throw FixtureError("the line lies inside '" + curve.name() + "'");

    // parameter of the point: solve s*U + t*V = point
    Matrix m(3, std::vector<Rational>(2));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 2; ++c) {
            std::vector<Rational> e(2, Rational(0));
            e[c] = 1;
            m[r][c] = par[r].eval(e);
        }
    auto sol = solve_linear(m, point.coords());
    if (!sol) throw InternalError("a point of the line escaped its parametrization");
    ProjPoint pa(*sol);

    BinaryForm bf = to_binary_form(f);
    if (pa.coords()[1] == 0) return bf.inf_mult(); // the (1:0) end of the chart
    Rational r = pa.coords()[0] / pa.coords()[1];
    std::vector<Rational> p = bf.poly;
    int mult = 0;
    while (p.size() > 1 && deflate_at_root(p, r)) ++mult;
    return mult;
}

bool smoothness_check(const Hypersurface& d, int search_height) {
    if (d.degree() == 1) return true;
    int nvars = d.poly().nvars();
    if (d.degree() == 2) return matrix_rank(quadric_matrix(d.poly())) == nvars;

    // bounded rational scan for a common zero of the partials (a common zero
    // automatically lies on the hypersurface by the Euler identity)
    std::vector<MultiPoly> partials;
    for (int i = 0; i < nvars; ++i) partials.push_back(d.poly().derivative(i));
    std::vector<int> idx(nvars, -search_height);
    std::vector<Rational> pt(nvars);
    for (;;) {
        int first = 0;
        while (first < nvars && idx[first] == 0) ++first;
        if (first < nvars && idx[first] > 0) {
            int g = 0;
            for (int v : idx) g = std::gcd(g, std::abs(v));
            if (g == 1) {
                for (int v = 0; v < nvars; ++v) pt[v] = idx[v];
                bool singular = true;
                for (const MultiPoly& dp : partials)
                    if (dp.eval(pt) != 0) {
                        singular = false;
                        break;
                    }
                if (singular) return false;
            }
        }
        int v = nvars - 1;
        while (v >= 0 && idx[v] == search_height) idx[v--] = -search_height;
        if (v < 0) break;
        ++idx[v];
    }
    return true;
}

// --------------------------------------------------- general position check

namespace {

struct SubsetVerdict {
    bool ok = true;
    std::optional<ProjPoint> witness;
    std::string detail;
};

SubsetVerdict check_subset(std::span<const Hypersurface> all, const std::vector<int>& subset) {
    int n = all[0].ambient_dim();
    int expected = n - static_cast<int>(subset.size());
    SubsetVerdict verdict;

    std::vector<Hypersurface> ls, cs;
    for (int i : subset) (all[i].degree() == 1 ? ls : cs).push_back(all[i]);

    // Dependent hyperplanes put the subset's intersection at dimension
    // >= n - rank - #curves > expected, since each further hypersurface cuts
    // at most one dimension.
    if (!ls.empty()) {
        Matrix lm = linear_forms_matrix(ls);
        int r = matrix_rank(lm);
        if (r < static_cast<int>(ls.size())) {
            verdict.ok = false;
            verdict.detail = "hyperplanes in the subset are linearly dependent";
            if (cs.empty()) {
                auto ns = nullspace(lm);
                if (!ns.empty()) verdict.witness = ProjPoint(ns.front());
            }
            return verdict;
        }
    }

    int m = n - static_cast<int>(ls.size());
    if (cs.empty()) return verdict; // dim == expected exactly

    std::vector<MultiPoly> param =
        ls.empty() ? identity_param(n + 1) : linear_subspace_param(std::span(ls));
    std::vector<MultiPoly> rs;
    for (const Hypersurface& c : cs) {
        MultiPoly r = c.poly().substitute(param);
        if (r.is_zero()) {
            verdict.ok = false;
            verdict.detail =
                "divisor '" + c.name() + "' contains the subset's linear span";
            std::vector<Rational> e(m + 1, Rational(0));
            e[0] = 1;
            verdict.witness = apply_param(param, ProjPoint(e));
            return verdict;
        }
        rs.push_back(std::move(r));
    }

    auto fail = [&](const std::optional<ProjPoint>& p, const std::string& why) {
        verdict.ok = false;
        verdict.detail = why;
        if (p) verdict.witness = apply_param(param, *p);
    };

    if (m == 0) {
        std::vector<Rational> one{Rational(1)};
        bool all_contain = true;
        for (const MultiPoly& r : rs)
            if (r.eval(one) != 0) all_contain = false;
        if (all_contain)
            fail(ProjPoint(one), "every divisor passes through the linear point");
        return verdict;
    }

    if (m == 1) {
        if (rs.size() == 1) return verdict; // dim 0 == expected
        BinaryCommon common = binary_common_zeros(rs);
        if (common.gcd_degree > 0)
            fail(common.rational_root, "divisors share a zero on the subset's line");
        return verdict;
    }

    if (m == 2) {
        if (rs.size() == 1) return verdict; // a plane curve has dim 1 == expected
        for (std::size_t i = 0; i < rs.size(); ++i) {
            if (rs[i].total_degree() != 2) continue;
            if (matrix_rank(quadric_matrix(rs[i])) != 3) continue;
            std::optional<ProjPoint> pt = conic_rational_point(rs[i]);
            if (!pt) continue;
            std::vector<MultiPoly> par = conic_param(rs[i], *pt);
            std::vector<MultiPoly> pushed;
            for (std::size_t j = 0; j < rs.size(); ++j) {
                if (j == i) continue;
                MultiPoly r = rs[j].substitute(par);
                if (r.is_zero()) {
                    fail(std::nullopt, "two curved divisors share a component");
                    return verdict;
                }
                pushed.push_back(std::move(r));
            }
            if (rs.size() == 2) {
                // a pair of component-free plane curves meets in dim 0; that
                // satisfies expected = 0 and fails expected = -1 (never asked:
                // |cs| = 2 and m = 2 give expected >= 0 unless hyperplanes
                // pushed expected below, which m == 2 rules out)
                return verdict;
            }
            BinaryCommon common = binary_common_zeros(pushed);
            if (common.gcd_degree > 0) {
                std::optional<ProjPoint> w;
                if (common.rational_root) w = apply_param(par, *common.rational_root);
                fail(w, "three or more divisors share a point");
            }
            return verdict;
        }
        unsupported("general position in the plane needs a smooth conic with a "
                    "small rational point among the curved divisors");
    }

    // m >= 3: pairs of closure-irreducible quadrics are the supported case
    if (rs.size() == 2 && rs[0].total_degree() == 2 && rs[1].total_degree() == 2) {
        if (matrix_rank(quadric_matrix(rs[0])) >= 3 &&
            matrix_rank(quadric_matrix(rs[1])) >= 3 &&
            !(rs[0].primitive_part() == rs[1].primitive_part()))
            return verdict; // no common component; the pair cuts two dimensions
    }
    unsupported("general position subset in P^" + std::to_string(m) +
                " is outside the supported exact scope");
}

} // namespace

GeneralPositionResult general_position_check(std::span<const Hypersurface> divisors) {
    if (divisors.empty()) throw FixtureError("general position of an empty family");
    require_same_ambient(divisors);
    int n = divisors[0].ambient_dim();
    int q = static_cast<int>(divisors.size());
    int maxk = std::min(q, n + 1);

    std::vector<int> subset;
    GeneralPositionResult result;
    auto recurse = [&](auto&& self, int start, int k) -> bool {
        if (static_cast<int>(subset.size()) == k) {
            SubsetVerdict v = check_subset(divisors, subset);
            if (!v.ok) {
                result.ok = false;
                for (int i : subset) result.violating_indices.push_back(i + 1);
                result.witness = v.witness;
                result.detail = v.detail;
                return false;
            }
            return true;
        }
        for (int i = start; i < q; ++i) {
            subset.push_back(i);
            if (!self(self, i + 1, k)) return false;
            subset.pop_back();
        }
        return true;
    };
    for (int k = 2; k <= maxk && result.ok; ++k) {
        subset.clear();
        recurse(recurse, 0, k);
    }
    return result;
}

} // namespace pnev
