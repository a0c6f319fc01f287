#include "pnev/linalg.hpp"

namespace pnev {

namespace {

struct Echelon {
    std::vector<std::vector<Integer>> rows;
    std::vector<int> pivot_cols; // one per leading row, increasing
};

// Fraction-free Bareiss elimination with column pivoting. Rational input is
// scaled row-wise to integers first; the echelon entries stay exact integers.
Echelon eliminate(const Matrix& m) {
    Echelon e;
    if (m.empty()) return e;
    const std::size_t ncols = m[0].size();
    for (const auto& row : m) {
        Integer l = 1;
        for (const Rational& x : row) l = lcm(l, denominator(x));
        std::vector<Integer> r;
        r.reserve(ncols);
        for (const Rational& x : row) r.push_back(Integer(numerator(x) * (l / denominator(x))));
        e.rows.push_back(std::move(r));
    }

    Integer prev = 1;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < ncols && lead < e.rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < e.rows.size() && e.rows[pivot][col] == 0) ++pivot;
        if (pivot == e.rows.size()) continue;
        std::swap(e.rows[lead], e.rows[pivot]);
        for (std::size_t i = lead + 1; i < e.rows.size(); ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j) {
                Integer t = e.rows[i][j] * e.rows[lead][col] - e.rows[i][col] * e.rows[lead][j];
                e.rows[i][j] = t / prev; // exact by the Bareiss identity
            }
            e.rows[i][col] = 0;
        }
        prev = e.rows[lead][col];
        e.pivot_cols.push_back(static_cast<int>(col));
        ++lead;
    }
    return e;
}

} // namespace

int matrix_rank(Matrix m) {
    return static_cast<int>(eliminate(m).pivot_cols.size());
}

std::optional<std::vector<Rational>> solve_linear(Matrix a, std::vector<Rational> b) {
    const std::size_t nrows = a.size();
    std::size_t ncols = nrows ? a[0].size() : 0;
    for (std::size_t i = 0; i < nrows; ++i) a[i].push_back(b[i]);
    Echelon e = eliminate(a);

    // Inconsistent iff some pivot lands in the appended column.
    for (int pc : e.pivot_cols)
        if (pc == static_cast<int>(ncols)) return std::nullopt;

    std::vector<Rational> x(ncols, Rational(0));
    for (int r = static_cast<int>(e.pivot_cols.size()) - 1; r >= 0; --r) {
        int pc = e.pivot_cols[r];
        Rational acc(e.rows[r][ncols]);
        for (std::size_t j = pc + 1; j < ncols; ++j)
            if (e.rows[r][j] != 0) acc -= Rational(e.rows[r][j]) * x[j];
        x[pc] = acc / Rational(e.rows[r][pc]);
    }
    return x;
}

std::vector<std::vector<Rational>> nullspace(Matrix a) {
    if (a.empty()) return {};
    const std::size_t ncols = a[0].size();
    Echelon e = eliminate(a);
    std::vector<bool> is_pivot(ncols, false);
    for (int pc : e.pivot_cols) is_pivot[pc] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free] = 1;
        for (int r = static_cast<int>(e.pivot_cols.size()) - 1; r >= 0; --r) {
            int pc = e.pivot_cols[r];
            Rational acc(0);
            for (std::size_t j = pc + 1; j < ncols; ++j)
                if (e.rows[r][j] != 0) acc -= Rational(e.rows[r][j]) * v[j];
            v[pc] = acc / Rational(e.rows[r][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace pnev
