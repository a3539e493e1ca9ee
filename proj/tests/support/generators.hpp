#ifndef GERM_TESTS_GENERATORS_HPP
#define GERM_TESTS_GENERATORS_HPP

#include <random>
#include <vector>

#include "germ/invariants.hpp"

namespace germ::testing {

// Pool of small conductors whose pairwise lcms stay cheap.
inline const std::vector<unsigned>& small_conductors() {
    static const std::vector<unsigned> c{1, 1, 1, 2, 3, 4, 6, 8, 12, 24};
    return c;
}

inline Rational random_rational(std::mt19937_64& rng, long lo = -10, long hi = 10) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, 6);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long lo = -10, long hi = 10) {
    for (;;) {
        Rational q = random_rational(rng, lo, hi);
        if (!q.is_zero()) return q;
    }
}

inline CycloNumber random_cyclo(std::mt19937_64& rng, bool nonzero = false) {
    const auto& cs = small_conductors();
    std::uniform_int_distribution<size_t> pick(0, cs.size() - 1);
    unsigned n = cs[pick(rng)];
    std::uniform_int_distribution<unsigned> kd(0, n - 1);
    CycloNumber z = CycloNumber::root_of_unity(n, static_cast<long>(kd(rng)));
    Rational r = nonzero ? random_nonzero_rational(rng) : random_rational(rng);
    return z * CycloNumber(r);
}

// Exponent policy for generated branches: Any allows every positive exponent;
// MultiplicityCorrect keeps val(psi) >= m (m is the curve multiplicity);
// TangentToXAxis keeps val(psi) > m (the contact lemma's frame).
enum class BranchShape { Any, MultiplicityCorrect, TangentToXAxis };

// Random exact irreducible branch: m <= max_m, integer exponents <= max_exp,
// gcd(m, exponents) = 1, cyclotomic coefficients.
inline BranchGerm random_branch(std::mt19937_64& rng, unsigned max_m = 6, long long max_exp = 14,
                                BranchShape shape = BranchShape::Any) {
    std::uniform_int_distribution<unsigned> md(1, max_m);
    for (;;) {
        unsigned m = md(rng);
        long long lo = 0;
        if (shape == BranchShape::MultiplicityCorrect) lo = static_cast<long long>(m) - 1;
        if (shape == BranchShape::TangentToXAxis) lo = static_cast<long long>(m);
        if (lo >= max_exp) continue;
        std::uniform_int_distribution<long long> ed(lo + 1, max_exp);
        std::uniform_int_distribution<int> nterm(m == 1 ? 0 : 1, 4);
        int terms = nterm(rng);
        std::vector<PuiseuxSeries::Term> tv;
        Integer g(static_cast<long>(m));
        for (int i = 0; i < terms; ++i) {
            long e = static_cast<long>(ed(rng));
            tv.push_back({Rational(e), random_cyclo(rng, true)});
            g = gcd(g, Integer(e));
        }
        if (g != 1) continue;
        try {
            return BranchGerm(m, PuiseuxSeries::make(std::move(tv), ExtRational::infinity()));
        } catch (const Error&) {
            continue;  // merged duplicate exponents may have broken the gcd condition
        }
    }
}

// Random exact arc with first coordinate t^p.
inline Arc random_arc(std::mt19937_64& rng, unsigned p, long long max_exp = 14) {
    std::uniform_int_distribution<int> nterm(0, 4);
    std::uniform_int_distribution<long long> num(1, max_exp);
    std::uniform_int_distribution<long long> den(1, 3);
    int terms = nterm(rng);
    std::vector<PuiseuxSeries::Term> tv;
    for (int i = 0; i < terms; ++i) {
        Rational e(static_cast<long>(num(rng)), static_cast<long>(den(rng)));
        tv.push_back({e, random_cyclo(rng, true)});
    }
    return Arc::x_normalized(p, PuiseuxSeries::make(std::move(tv), ExtRational::infinity()));
}

}  // namespace germ::testing

#endif
