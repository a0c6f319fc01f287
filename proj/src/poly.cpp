#include "pnev/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace pnev {

MultiPoly MultiPoly::variable(int nvars, int index) {
    MultiPoly p(nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.terms_[m] = 1;
    return p;
}

MultiPoly MultiPoly::constant(int nvars, Rational c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_[Monomial(nvars, 0)] = std::move(c);
    return p;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int dm = std::accumulate(m.begin(), m.end(), 0);
        if (d == -1) d = dm;
        if (dm != d) return false;
    }
    return true;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(a.nvars_);
    Monomial m(a.nvars_, 0);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    MultiPoly out(p.nvars_);
    if (c == 0) return out;
    for (const auto& [m, pc] : p.terms_) out.terms_[m] = c * pc;
    return out;
}

MultiPoly MultiPoly::pow(int e) const {
    MultiPoly out = MultiPoly::constant(nvars_, 1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        out.add_term(d, c * m[var]);
    }
    return out;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < m[i]; ++e) term *= point[i];
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> args) const {
    if (static_cast<int>(args.size()) != nvars_)
        throw Error("substitute: arity mismatch");
    int out_vars = args.empty() ? 0 : args[0].nvars();
    MultiPoly out(out_vars);
    for (const auto& [m, c] : terms_) {
        MultiPoly term = MultiPoly::constant(out_vars, c);
        for (int i = 0; i < nvars_; ++i)
            if (m[i] > 0) term = term * args[i].pow(m[i]);
        out += term;
    }
    return out;
}

MultiPoly MultiPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& [m, c] : terms_) {
        den_lcm = lcm(den_lcm, denominator(c));
        num_gcd = gcd(num_gcd, numerator(c));
    }
    Rational scale(den_lcm, num_gcd);
    // Sign convention: the lex-largest monomial (x0 before x1 before ...)
    // carries a positive coefficient.
    if (terms_.rbegin()->second * scale < 0) scale = -scale;
    return scale * *this;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
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
        bool has_vars = std::any_of(m.begin(), m.end(), [](int e) { return e > 0; });
        if (a != 1 || !has_vars) {
            os << rational_str(a);
            if (has_vars) os << "*";
        }
        bool started = false;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (started) os << "*";
            started = true;
            os << "x" << i;
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

namespace {

struct PolyScanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("bad polynomial '" + text + "': " + what, pos);
    }
    Integer scan_integer() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a number");
        Integer n = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            n = n * 10 + (text[pos] - '0');
            ++pos;
        }
        return n;
    }
};

} // namespace

MultiPoly parse_poly(const std::string& text, int nvars) {
    PolyScanner sc{text};
    MultiPoly out(nvars);
    bool any = false;
    while (!sc.at_end()) {
        int sign = 1;
        char c = sc.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++sc.pos;
        } else if (any) {
            sc.fail("expected '+' or '-' between terms");
        }
        // one term: factors joined by '*'
        Rational coeff = sign;
        Monomial mono(nvars, 0);
        bool saw_factor = false;
        for (;;) {
            char f = sc.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                Integer num = sc.scan_integer();
                Integer den = 1;
                if (sc.peek() == '/') {
                    ++sc.pos;
                    den = sc.scan_integer();
                    if (den == 0) sc.fail("zero denominator");
                }
                coeff *= Rational(num, den);
            } else if (f == 'x') {
                ++sc.pos;
                Integer idx = sc.scan_integer();
                if (idx >= nvars)
                    sc.fail("variable x" + idx.str() + " out of range (ambient has " +
                            std::to_string(nvars) + " coordinates)");
                int exp = 1;
                if (sc.peek() == '^') {
                    ++sc.pos;
                    Integer e = sc.scan_integer();
                    if (e > 64) sc.fail("exponent too large");
                    exp = static_cast<int>(e);
                }
                mono[static_cast<int>(idx)] += exp;
            } else {
                sc.fail("expected a coefficient or variable");
            }
            saw_factor = true;
            if (sc.peek() == '*') {
                ++sc.pos;
                continue;
            }
            break;
        }
        if (!saw_factor) sc.fail("empty term");
        out.add_term(mono, coeff);
        any = true;
    }
    if (!any) sc.fail("empty polynomial");
    return out;
}

} // namespace pnev
