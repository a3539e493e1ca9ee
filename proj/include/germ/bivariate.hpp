#ifndef GERM_BIVARIATE_HPP
#define GERM_BIVARIATE_HPP

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "germ/cpoly.hpp"
#include "germ/puiseux.hpp"

namespace germ {

// Bivariate polynomial over the cyclotomic tower in the variables (x, y),
// stored as a sparse exponent map. No zero coefficients are kept.
class BivariatePoly {
  public:
    using Key = std::pair<unsigned, unsigned>;  // (x exponent, y exponent)

    BivariatePoly() = default;

    static BivariatePoly constant(const CycloNumber& c);
    static BivariatePoly monomial(unsigned i, unsigned j, const CycloNumber& c);

    const std::map<Key, CycloNumber>& terms() const { return t_; }
    CycloNumber coeff(unsigned i, unsigned j) const;
    void add_term(unsigned i, unsigned j, const CycloNumber& c);

    bool is_zero() const { return t_.empty(); }
    unsigned x_degree() const;
    unsigned y_degree() const;
    // Minimal total degree of a term; requires a nonzero polynomial.
    unsigned multiplicity_at_origin() const;

    BivariatePoly operator-() const;
    friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
    BivariatePoly& operator+=(const BivariatePoly& o) { return *this = *this + o; }
    BivariatePoly& operator-=(const BivariatePoly& o) { return *this = *this - o; }
    BivariatePoly& operator*=(const BivariatePoly& o) { return *this = *this * o; }
    BivariatePoly pow(unsigned e) const;

    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
        return a.t_ == b.t_;
    }

    BivariatePoly derivative_y() const;

    // f(a11 x + a12 y, a21 x + a22 y)
    BivariatePoly compose_linear(const CycloNumber& a11, const CycloNumber& a12,
                                 const CycloNumber& a21, const CycloNumber& a22) const;

    // f(x^q, x^p (c + y)) with the x-content stripped afterwards.
    BivariatePoly newton_transform(unsigned q, unsigned p, const CycloNumber& c) const;

    bool divisible_by_x() const;
    bool divisible_by_y() const;
    BivariatePoly div_y() const;  // exact division by y

    // f(t^m, psi(t)) through truncation-aware series arithmetic.
    PuiseuxSeries eval_series(unsigned m, const PuiseuxSeries& psi) const;
    std::complex<double> eval_complex(const std::complex<double>& x,
                                      const std::complex<double>& y) const;

    // View as a polynomial in y with coefficients in the x-polynomial ring.
    std::vector<CPoly> y_coefficients() const;
    static BivariatePoly from_y_coefficients(const std::vector<CPoly>& coeffs);

    std::string to_string() const;

  private:
    std::map<Key, CycloNumber> t_;
};

// Grammar: integers, rationals "p/q", variables x and y, zeta(N) atoms,
// operators + - * ^ and parentheses. Reports syntax errors and unknown
// identifiers with their byte offset.
BivariatePoly parse_polynomial(std::string_view src);

// Edge of the lower Newton polygon. slope = p/q is the x-exponent gained per
// unit of y-degree along the edge; the face collects the on-edge coefficients
// as a polynomial in the standard variable. A vertical marker edge signals a
// y-axis component (x divides f).
struct PolygonEdge {
    bool vertical = false;
    Rational slope;                // p/q in lowest terms
    long long p = 0;
    long long q = 1;
    CPoly face;                    // sum over edge points of c_{ij} z^j
    unsigned j_lo = 0, j_hi = 0;   // y-degrees of the edge endpoints
};

std::vector<PolygonEdge> newton_polygon(const BivariatePoly& f);

// Squarefree decomposition with respect to y over the fraction field:
// f = unit * prod G_k^k with each G_k squarefree and pairwise coprime.
// The x-content of f is dropped (it is a unit for germs that are y-general).
std::vector<std::pair<unsigned, BivariatePoly>> squarefree_decomposition_y(const BivariatePoly& f);

}  // namespace germ

#endif
