#include "pnev/rational.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace pnev {

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (int q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    if (n < 41 * 41) return true;
    // Deterministic for anything a fixture will ever use; the witness count
    // makes false positives astronomically unlikely beyond 64 bits.
    return boost::multiprecision::miller_rabin_test(n, 32);
}

PrimeContext::PrimeContext(Integer p) : p_(std::move(p)) {
    if (!is_prime(p_)) {
        throw FixtureError("p = " + p_.str() + " is not prime");
    }
}

namespace {

// Number of factors of p in a nonzero integer.
Integer int_valuation(Integer n, const Integer& p) {
    Integer v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

} // namespace

Valuation PrimeContext::valuation(const Rational& x) const {
    if (x == 0) return Valuation::infinity();
    return Valuation(int_valuation(numerator(x), p_) - int_valuation(denominator(x), p_));
}

std::optional<Rational> PrimeContext::log_abs(const Rational& x) const {
    Valuation v = valuation(x);
    if (v.is_infinite()) return std::nullopt;
    return Rational(-v.value());
}

Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&](const std::string& what) -> Rational {
        throw ParseError("bad rational '" + text + "': " + what, i);
    };
    if (text.empty()) return fail("empty");
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    auto scan_int = [&]() -> Integer {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            fail("expected digits");
        Integer n = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            n = n * 10 + (text[i] - '0');
            ++i;
        }
        return n;
    };
    Integer num = scan_int();
    Integer den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = scan_int();
        if (den == 0) fail("zero denominator");
    }
    if (i != text.size()) fail("trailing characters");
    Rational r(num, den);
    return negative ? -r : r;
}

std::string rational_str(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

} // namespace pnev
