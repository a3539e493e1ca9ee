#ifndef GERM_PUISEUX_HPP
#define GERM_PUISEUX_HPP

#include <optional>
#include <string>
#include <vector>

#include "germ/cyclo.hpp"

namespace germ {

// Result of a valuation query. A truncated series whose known terms are all
// zero only tells us the valuation exceeds the truncation bound; that outcome
// is reported explicitly instead of guessed.
struct Valuation {
    enum class Kind { Finite, Infinite, AboveTrunc };
    Kind kind;
    Rational value;  // the valuation (Finite) or the truncation bound (AboveTrunc)

    static Valuation finite(Rational q) { return {Kind::Finite, std::move(q)}; }
    static Valuation infinite() { return {Kind::Infinite, Rational(0)}; }
    static Valuation above(Rational bound) { return {Kind::AboveTrunc, std::move(bound)}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinite() const { return kind == Kind::Infinite; }
    bool is_above_trunc() const { return kind == Kind::AboveTrunc; }

    // Finite or infinite value; throws InsufficientTruncation on AboveTrunc.
    ExtRational require_known(const char* what) const;
};

// Finitely supported series in one variable with nonnegative rational
// exponents and cyclotomic coefficients. The truncation bound is +infinity
// for exact series; otherwise every exponent <= trunc() is complete and
// nothing is known beyond it.
class PuiseuxSeries {
  public:
    struct Term {
        Rational exp;
        CycloNumber coeff;
    };

    PuiseuxSeries() : trunc_(ExtRational::infinity()) {}

    static PuiseuxSeries zero() { return PuiseuxSeries(); }
    static PuiseuxSeries monomial(const Rational& exp, const CycloNumber& coeff);
    // General constructor; sorts, merges duplicate exponents, prunes zeros
    // and terms beyond the truncation bound.
    static PuiseuxSeries make(std::vector<Term> terms, ExtRational trunc);

    const std::vector<Term>& terms() const { return terms_; }
    bool exact() const { return trunc_.is_infinite(); }
    const ExtRational& trunc() const { return trunc_; }
    bool is_known_zero() const { return terms_.empty() && exact(); }

    // Coefficient at an exponent (zero when absent and below trunc; throws
    // InsufficientTruncation when the exponent lies beyond the known region).
    CycloNumber coeff_at(const Rational& exp) const;

    PuiseuxSeries truncated(const ExtRational& bound) const;

    friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend bool operator!=(const PuiseuxSeries& a, const PuiseuxSeries& b) { return !(a == b); }

    std::string to_string(const std::string& var = "t") const;

  private:
    std::vector<Term> terms_;
    ExtRational trunc_;
};

Valuation valuation(const PuiseuxSeries& s);

PuiseuxSeries add(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries negate(const PuiseuxSeries& a);
PuiseuxSeries sub(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries mul(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries scale(const PuiseuxSeries& a, const CycloNumber& c);
PuiseuxSeries pow_series(const PuiseuxSeries& a, unsigned e);

// Substitution t -> zeta_N^k t. Requires all exponents to be integers; series
// with fractional exponents must be reparameterized first.
PuiseuxSeries scale_variable(const PuiseuxSeries& s, unsigned n, long k);

// Substitution t -> t^{p/q}: exponents and truncation scale by p/q.
PuiseuxSeries reparameterize(const PuiseuxSeries& s, unsigned p, unsigned q);

// Real-analytic arc through the origin, stored pre-normalization.
// x-normalized arcs are t -> (t^p, y(t)); the coordinate-killing of the unit
// in the first component is assumed already applied by the producer.
// y-axis arcs are t -> (0, t^e * v(t)) with v a unit.
struct Arc {
    enum class Kind { XNormalized, YAxis };

    Kind kind;
    unsigned p = 1;        // XNormalized: first coordinate t^p
    PuiseuxSeries y;       // XNormalized: second coordinate, exponents > 0
    unsigned e = 1;        // YAxis: leading exponent of the second coordinate
    PuiseuxSeries v;       // YAxis: unit series, v(0) != 0

    static Arc x_normalized(unsigned p, PuiseuxSeries y);
    static Arc y_axis(unsigned e, PuiseuxSeries v);
};

// Order of |arc(t)| at t = 0: min(p, val y) for x-normalized arcs, e for
// y-axis arcs. Throws InsufficientTruncation when the minimum is undetermined.
Rational arc_size_order(const Arc& a);

// Reparameterizes an x-normalized arc so its first coordinate becomes t^p.
Arc reparameterize_arc(const Arc& a, unsigned new_p);

// Irreducible branch as a normalized Puiseux parameterization t -> (t^m, psi(t)).
// psi has positive integer exponents, and gcd(m, exponents) = 1 when exact.
class BranchGerm {
  public:
    BranchGerm(unsigned m, PuiseuxSeries psi);

    unsigned m() const { return m_; }
    const PuiseuxSeries& psi() const { return psi_; }

    // The conjugate parameterization t -> (t^m, psi(zeta_m^l t)).
    PuiseuxSeries conjugate_psi(long l) const { return scale_variable(psi_, m_, l); }

  private:
    unsigned m_;
    PuiseuxSeries psi_;
};

// Branch comparison as parameterized curves: equal iff same m and psi2 is a
// zeta_m-rotation of psi1. nullopt when truncation leaves it undecided.
std::optional<bool> same_branch(const BranchGerm& a, const BranchGerm& b);

}  // namespace germ

#endif
