#ifndef GERM_CYCLO_HPP
#define GERM_CYCLO_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "germ/rational.hpp"

namespace germ {

// Cyclotomic polynomial Phi_N, monic with integer coefficients, ascending order.
// Computed by dividing x^N - 1 by Phi_d over the proper divisors d of N.
std::vector<Integer> cyclotomic_polynomial(unsigned n);

unsigned phi_degree(unsigned n);  // deg Phi_n = Euler phi(n)

// Element of the cyclotomic field Q(zeta_N) in the power basis
// 1, zeta, ..., zeta^{phi(N)-1} of Q[x]/Phi_N(x). The representation is
// canonical within a conductor, so equality is decidable coefficient-wise;
// mixed-conductor operands are lifted to the lcm first.
class CycloNumber {
  public:
    CycloNumber() : n_(1), c_(1, Rational(0)) {}
    CycloNumber(long v) : n_(1), c_(1, Rational(v)) {}  // NOLINT
    CycloNumber(Rational v) : n_(1), c_(1, std::move(v)) {}  // NOLINT
    CycloNumber(unsigned conductor, std::vector<Rational> coeffs);

    static CycloNumber root_of_unity(unsigned n, long k);

    unsigned conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    CycloNumber lifted(unsigned m) const;  // requires n_ | m

    CycloNumber operator-() const;
    friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
    CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
    CycloNumber& operator-=(const CycloNumber& o) { return *this = *this - o; }
    CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }

    CycloNumber inverse() const;  // throws DivisionByZero on zero
    CycloNumber pow(long e) const;

    friend bool operator==(const CycloNumber& a, const CycloNumber& b);
    friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

    // Total order for use as a container key; no algebraic meaning.
    friend bool operator<(const CycloNumber& a, const CycloNumber& b);

    std::complex<double> to_complex() const;
    std::string to_string() const;

    // Decomposition c = r * zeta with r a positive rational and zeta a root of
    // unity of the ambient field, when one exists.
    struct RootUnityScaled {
        Rational magnitude;  // > 0
        unsigned order;      // zeta = zeta_order^power
        unsigned power;
    };
    std::optional<RootUnityScaled> as_root_of_unity_times_rational() const;

  private:
    unsigned n_;
    std::vector<Rational> c_;
};

inline CycloNumber embed(const Rational& q, unsigned n) { return CycloNumber(q).lifted(n); }

// Square root of a rational inside the cyclotomic tower (Gauss sums), when the
// required conductor stays within cap.
std::optional<CycloNumber> cyclo_sqrt(const Rational& r, unsigned conductor_cap);

// One k-th root of c inside the tower, when c factors as rational times root
// of unity and the needed radicals stay cyclotomic within cap. The remaining
// roots are obtained by multiplying with the k-th roots of unity.
std::optional<CycloNumber> kth_root_in_tower(const CycloNumber& c, unsigned k,
                                             unsigned conductor_cap);

}  // namespace germ

#endif
