#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>

#include "pnev/errors.hpp"

namespace pnev {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// p-adic valuation: an integer or +infinity (the valuation of 0).
class Valuation {
public:
    Valuation() : finite_(0) {}
    Valuation(Integer v) : finite_(std::move(v)) {}
    Valuation(long v) : finite_(v) {}
    static Valuation infinity() {
        Valuation v;
        v.finite_.reset();
        return v;
    }

    bool is_infinite() const { return !finite_.has_value(); }
    const Integer& value() const {
        if (!finite_) throw Error("valuation of zero has no finite value");
        return *finite_;
    }

    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return Valuation(*a.finite_ + *b.finite_);
    }
    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (a.is_infinite() != b.is_infinite()) return false;
        return a.is_infinite() || *a.finite_ == *b.finite_;
    }
    // +infinity compares greater than every finite valuation.
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return *a.finite_ < *b.finite_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a == b || a < b; }

    std::string str() const { return finite_ ? finite_->str() : "+inf"; }

private:
    std::optional<Integer> finite_;
};

bool is_prime(const Integer& n);

/// Shared prime context: fixes p and hence the absolute value |x| = p^(-v_p(x)).
/// All logarithms are base p, so every computed quantity stays rational.
class PrimeContext {
public:
    explicit PrimeContext(Integer p);

    const Integer& prime() const { return p_; }

    /// v_p(x); +infinity for x = 0.
    Valuation valuation(const Rational& x) const;

    /// log_p|x| = -v_p(x); nullopt encodes -infinity (x = 0).
    std::optional<Rational> log_abs(const Rational& x) const;

    friend bool operator==(const PrimeContext& a, const PrimeContext& b) {
        return a.p_ == b.p_;
    }

private:
    Integer p_;
};

/// Parse "num" or "num/den" into an exact rational.
Rational parse_rational(const std::string& text);

/// Render exactly as "num" or "num/den" (den omitted when 1).
std::string rational_str(const Rational& x);

} // namespace pnev
