#ifndef GERM_TESTS_RESULTANT_HPP
#define GERM_TESTS_RESULTANT_HPP

#include <optional>

#include "germ/bivariate.hpp"

namespace germ::testing {

// x-order of Res_y(f, g), computed by fraction-free (Bareiss) elimination of
// the Sylvester matrix over the polynomial ring in x. This is the independent
// intersection-number oracle: for germs with no common branch and no common
// zero on the y-axis off the origin, the order equals the total intersection
// multiplicity at the origin.
inline std::optional<CPoly> resultant_y(const BivariatePoly& f, const BivariatePoly& g) {
    std::vector<CPoly> a = f.y_coefficients();
    std::vector<CPoly> b = g.y_coefficients();
    while (!a.empty() && cp_is_zero(a.back())) a.pop_back();
    while (!b.empty() && cp_is_zero(b.back())) b.pop_back();
    if (a.empty() || b.empty()) return std::nullopt;
    const size_t n = a.size() - 1, m = b.size() - 1;
    if (n == 0 && m == 0) return CPoly{CycloNumber(Rational(1))};
    const size_t dim = n + m;
    std::vector<std::vector<CPoly>> s(dim, std::vector<CPoly>(dim));
    for (size_t r = 0; r < m; ++r)
        for (size_t i = 0; i <= n; ++i) s[r][r + n - i] = a[i];
    for (size_t r = 0; r < n; ++r)
        for (size_t j = 0; j <= m; ++j) s[m + r][r + m - j] = b[j];

    CPoly prev{CycloNumber(Rational(1))};
    for (size_t k = 0; k + 1 < dim; ++k) {
        if (cp_is_zero(s[k][k])) {
            size_t swap_row = k + 1;
            while (swap_row < dim && cp_is_zero(s[swap_row][k])) ++swap_row;
            if (swap_row == dim) return CPoly{};  // zero resultant: common factor
            std::swap(s[k], s[swap_row]);  // sign change only; the order is unaffected
        }
        for (size_t i = k + 1; i < dim; ++i)
            for (size_t j = k + 1; j < dim; ++j) {
                CPoly num = cp_sub(cp_mul(s[i][j], s[k][k]), cp_mul(s[i][k], s[k][j]));
                s[i][j] = cp_divexact(num, prev);
            }
        prev = s[k][k];
    }
    return s[dim - 1][dim - 1];
}

inline long x_order(const CPoly& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero()) return static_cast<long>(i);
    return -1;  // zero polynomial
}

// Intersection oracle with the germ-validity guard: the curves must share no
// zero on the y-axis away from the origin (otherwise the resultant order
// overcounts). Returns nullopt for inputs the oracle cannot certify.
inline std::optional<long> resultant_intersection_order(const BivariatePoly& f,
                                                        const BivariatePoly& g) {
    auto slice = [](const BivariatePoly& h) {
        CPoly c;
        for (const auto& [k, v] : h.terms()) {
            if (k.first != 0) continue;
            if (c.size() <= k.second) c.resize(k.second + 1);
            c[k.second] = v;
        }
        cp_trim(c);
        size_t low = 0;
        while (low < c.size() && c[low].is_zero()) ++low;
        return CPoly(c.begin() + static_cast<long>(low), c.end());
    };
    CPoly fs = slice(f), gs = slice(g);
    if (fs.empty() || gs.empty()) return std::nullopt;  // x divides one input
    if (cp_deg(cp_gcd(fs, gs)) > 0) return std::nullopt;
    auto res = resultant_y(f, g);
    if (!res) return std::nullopt;
    long ord = x_order(*res);
    if (ord < 0) return std::nullopt;  // common component
    return ord;
}

}  // namespace germ::testing

#endif
