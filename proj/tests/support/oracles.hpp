#ifndef GERM_TESTS_ORACLES_HPP
#define GERM_TESTS_ORACLES_HPP

#include "germ/invariants.hpp"

namespace germ::testing {

// Order oracle for a parameterized arc (t^m, y(t)): the valuation of the
// directly expanded conjugate product prod_{l=1}^{m} (y - psi(zeta_m^l t)),
// multiplied out term by term. A finite working bound keeps the expansion
// small; the bound only has to exceed the candidate value for the comparison
// to be decisive, and a product that vanishes through the bound comes back as
// AboveTrunc, which the caller treats as disagreement.
inline Valuation conjugate_product_order(const BranchGerm& b, const PuiseuxSeries& y,
                                         const ExtRational& candidate) {
    PuiseuxSeries acc = PuiseuxSeries::monomial(Rational(0), CycloNumber(Rational(1)));
    ExtRational bound = candidate.is_finite()
                            ? ExtRational(candidate.value() + Rational(1))
                            : ExtRational::infinity();
    for (unsigned l = 1; l <= b.m(); ++l) {
        acc = mul(acc, sub(y, b.conjugate_psi(static_cast<long>(l))));
        if (bound.is_finite()) acc = acc.truncated(bound);
    }
    return valuation(acc);
}

inline bool order_matches_oracle(const BranchGerm& b, const PuiseuxSeries& y,
                                 const ExtRational& candidate) {
    Valuation v = conjugate_product_order(b, y, candidate);
    if (v.is_finite()) return candidate.is_finite() && ExtRational(v.value) == candidate;
    if (v.is_infinite()) return candidate.is_infinite();
    return false;  // vanished through the working bound: not the candidate value
}

}  // namespace germ::testing

#endif
