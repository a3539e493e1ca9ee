#ifndef GERM_RATIONAL_HPP
#define GERM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "germ/error.hpp"

namespace germ {

using Integer = mpz_class;

// Exact rational scalar. Always canonical: positive denominator, reduced.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(const Integer& n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) { canonicalize(d == 0); }
    Rational(const Integer& n, const Integer& d) : v_(n, d) { canonicalize(d == 0); }
    explicit Rational(mpq_class q) : v_(std::move(q)) { canonicalize(v_.get_den() == 0); }

    // Accepts "p", "-p", "p/q" with arbitrary-precision integers.
    static Rational parse(std::string_view text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    // Integer value; requires is_integer().
    Integer as_integer() const;
    Integer floor() const;

    double to_double() const { return v_.get_d(); }
    std::string to_string() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  private:
    void canonicalize(bool zero_den) {
        if (zero_den) throw Error(ErrorCode::DivisionByZero, "zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

inline Integer Rational::as_integer() const {
    if (!is_integer())
        throw Error(ErrorCode::InternalError, "expected integer, got " + to_string());
    return numerator();
}

inline Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
    return q;
}

inline Rational Rational::parse(std::string_view text) {
    mpq_class q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0)
        throw Error(ErrorCode::ParseError, "invalid rational '" + std::string(text) + "'");
    if (q.get_den() == 0)
        throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return Rational(q);
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Rational extended with +infinity. Orders, valuations of exact series,
// coincidence exponents and contacts live here.
class ExtRational {
  public:
    ExtRational() : inf_(false), q_(0) {}
    ExtRational(Rational q) : inf_(false), q_(std::move(q)) {}  // NOLINT
    ExtRational(long n) : inf_(false), q_(n) {}                 // NOLINT
    static ExtRational infinity() {
        ExtRational e;
        e.inf_ = true;
        return e;
    }

    bool is_infinite() const { return inf_; }
    bool is_finite() const { return !inf_; }
    const Rational& value() const {
        if (inf_) throw Error(ErrorCode::InternalError, "value() on infinity");
        return q_;
    }

    std::string to_string() const { return inf_ ? "inf" : q_.to_string(); }
    double to_double() const;

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtRational(a.q_ + b.q_);
    }
    friend ExtRational operator*(const Rational& c, const ExtRational& a) {
        if (a.inf_) {
            if (c.sign() <= 0)
                throw Error(ErrorCode::InternalError, "nonpositive scaling of infinity");
            return infinity();
        }
        return ExtRational(c * a.q_);
    }
    ExtRational scaled(const Rational& c) const { return c * (*this); }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.inf_ != b.inf_) return false;
        return a.inf_ || a.q_ == b.q_;
    }
    friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.q_ < b.q_;
    }
    friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
    friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
    friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

  private:
    bool inf_;
    Rational q_;
};

inline double ExtRational::to_double() const {
    return inf_ ? std::numeric_limits<double>::infinity() : q_.to_double();
}

inline ExtRational min(const ExtRational& a, const ExtRational& b) { return a < b ? a : b; }
inline ExtRational max(const ExtRational& a, const ExtRational& b) { return a < b ? b : a; }

}  // namespace germ

#endif
