#pragma once

// Shared helpers for the test suites: deterministic random generators for
// rationals, polynomials and curves, plus the independent oracles the
// suites check the library against.

#include <random>
#include <vector>

#include "pnev/plfun.hpp"
#include "pnev/rational.hpp"
#include "pnev/series.hpp"

namespace pnev::test {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int max_num = 60, int max_den = 12) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng, int max_num = 60, int max_den = 12) {
    for (;;) {
        Rational r = random_rational(rng, max_num, max_den);
        if (r != 0) return r;
    }
}

inline TruncatedSeries random_polynomial(Rng& rng, int max_deg, bool nonzero = true) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    for (;;) {
        int d = deg(rng);
        std::vector<Rational> coeffs;
        coeffs.reserve(d + 1);
        for (int i = 0; i <= d; ++i) coeffs.push_back(random_rational(rng, 20, 6));
        TruncatedSeries s(std::move(coeffs));
        if (!nonzero || !s.is_zero()) return s;
    }
}

/// Product of linear factors (z - root), optionally scaled. The roots are
/// returned so factor-counting oracles can work from them directly.
inline TruncatedSeries product_of_linear_factors(Rng& rng, int nfactors,
                                                 std::vector<Rational>& roots) {
    roots.clear();
    TruncatedSeries acc({Rational(random_nonzero_rational(rng, 9, 4))});
    for (int j = 0; j < nfactors; ++j) {
        Rational c = random_rational(rng, 9, 4);
        roots.push_back(c);
        acc = acc * TruncatedSeries({-c, Rational(1)});
    }
    return acc;
}

/// Factor-counting oracle for the closed disc |z| <= p^rho.
inline long count_roots_in_disc(const std::vector<Rational>& roots,
                                const PrimeContext& ctx, const Rational& rho) {
    long n = 0;
    for (const Rational& c : roots) {
        if (c == 0) {
            ++n; // |0| = 0 <= anything
            continue;
        }
        // |c| <= p^rho  <=>  -v_p(c) <= rho
        if (Rational(-ctx.valuation(c).value()) <= rho) ++n;
    }
    return n;
}

/// Brute-force oracle: evaluate a list of affine pieces and take the max.
inline Rational affine_max_at(const std::vector<std::pair<Rational, Rational>>& lines,
                              const Rational& rho) {
    Rational best = lines[0].first * rho + lines[0].second;
    for (const auto& [s, v] : lines) best = std::max(best, Rational(s * rho + v));
    return best;
}

} // namespace pnev::test
