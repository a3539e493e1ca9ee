#ifndef GERM_INVARIANTS_HPP
#define GERM_INVARIANTS_HPP

#include <utility>
#include <vector>

#include "germ/puiseux.hpp"

namespace germ {

// Characteristic (Puiseux) data of a branch: the exponents beta_1 < ... < beta_s
// of psi not divisible by the running gcd, with e_i the running gcds and
// e_{i-1} = m_i * e_i. Conventions: e_0 = m, beta_0 = 0, beta_{s+1} = +inf.
struct CharData {
    unsigned m = 1;
    std::vector<long long> beta;  // beta_1..beta_s
    std::vector<long long> e;     // e_1..e_s, strictly decreasing, e_s = 1 unless s = 0
    std::vector<long long> msub;  // m_1..m_s with m_k = e_{k-1}/e_k

    unsigned s() const { return static_cast<unsigned>(beta.size()); }
    long long e_at(unsigned k) const { return k == 0 ? m : e[k - 1]; }       // e_k
    ExtRational beta_at(unsigned k) const {                                   // beta_k
        if (k == 0) return ExtRational(Rational(0));
        if (k > s()) return ExtRational::infinity();
        return ExtRational(Rational(beta[k - 1]));
    }

    friend bool operator==(const CharData& a, const CharData& b) {
        return a.m == b.m && a.beta == b.beta && a.e == b.e;
    }
    friend bool operator<(const CharData& a, const CharData& b) {
        if (a.m != b.m) return a.m < b.m;
        if (a.beta != b.beta) return a.beta < b.beta;
        return a.e < b.e;
    }
};

// Order of a germ along an arc together with the quantities that determine it.
struct OrderResult {
    ExtRational nu;       // the order
    unsigned k = 0;       // regime index: beta_k <= lambda < beta_{k+1}
    ExtRational lambda;   // coincidence exponent (in the t^m parameterization)
    ExtRational contact;  // lambda / mu
};

// Applies the gcd recurrence to the support of psi with e_0 = m. Throws
// NotIrreducible when the chain stabilizes above 1 on exact input, and
// InsufficientTruncation when a truncated psi ends before the chain reaches 1.
CharData characteristic_data(const BranchGerm& b);

// max over l in {1..m} of val(y - psi(zeta_m^l t)), where y is the second
// coordinate of an arc with first coordinate t^p, compared after
// reparameterizing y to the t^m frame. Returns the max and one maximizing l.
std::pair<ExtRational, unsigned> coincidence_exponent(const PuiseuxSeries& y, const BranchGerm& b,
                                                      unsigned p);

// Order of the branch's defining function along a parameterized arc. For
// x-normalized arcs the first coordinate must already be t^m.
OrderResult order_along_parameterized(const BranchGerm& b, const Arc& a);

// Contact between an arc and the branch's zero locus. Requires the branch
// normalized with tangent cone the x-axis (psi = 0 or val psi > m).
ExtRational contact(const Arc& a, const BranchGerm& b);

// Unit-speed order: order_along_parameterized / mu. When the branch satisfies
// the contact normalization, the affine-in-contact formula is evaluated as a
// second route and both must agree.
OrderResult order_along_halfbranch(const BranchGerm& b, const Arc& a);

// Irreducible factor of a germ with its multiplicity in the decomposition.
struct GermFactor {
    BranchGerm branch;
    unsigned multiplicity;
};

// Weighted sum of per-factor unit-speed orders.
ExtRational order_of_germ(const std::vector<GermFactor>& factors, const Arc& a);

// Intersection number of two distinct branches: the valuation of the second
// branch's equation along the parameterization of the first, computed through
// the conjugate coincidences on the common ramification.
Integer intersection_number(const BranchGerm& b1, const BranchGerm& b2);

// True when psi = 0 or val(psi) > m, i.e. the tangent cone is the x-axis.
bool tangent_cone_is_x_axis(const BranchGerm& b);

}  // namespace germ

#endif
