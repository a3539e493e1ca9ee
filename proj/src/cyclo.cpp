#include "germ/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace germ {

namespace {

// --- dense integer polynomials, ascending coefficients ---------------------

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

// Exact division by a monic divisor.
ZPoly zdiv_monic(ZPoly a, const ZPoly& b) {
    ztrim(a);
    if (a.size() < b.size()) {
        if (!a.empty()) throw Error(ErrorCode::InternalError, "inexact polynomial division");
        return {};
    }
    ZPoly q(a.size() - b.size() + 1, Integer(0));
    for (size_t k = q.size(); k-- > 0;) {
        Integer c = a[k + b.size() - 1];
        q[k] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
    for (const auto& c : a)
        if (c != 0) throw Error(ErrorCode::InternalError, "inexact polynomial division");
    return q;
}

std::map<unsigned, ZPoly>& cyclo_cache() {
    static std::map<unsigned, ZPoly> cache;
    return cache;
}
std::mutex cyclo_mutex;

const ZPoly& cyclotomic_impl(unsigned n) {
    auto& cache = cyclo_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n == 1) return cache.emplace(1, ZPoly{Integer(-1), Integer(1)}).first->second;
    ZPoly num(n + 1, Integer(0));  // x^n - 1
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = zdiv_monic(std::move(num), cyclotomic_impl(d));
    }
    return cache.emplace(n, std::move(num)).first->second;
}

const ZPoly& cyclotomic_locked(unsigned n) {
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    return cyclotomic_impl(n);
}

// --- dense rational polynomials --------------------------------------------

using RPoly = std::vector<Rational>;

void rtrim(RPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RPoly rmul(const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    rtrim(r);
    return r;
}

RPoly rsub(RPoly a, const RPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    rtrim(a);
    return a;
}

// Remainder of a modulo b; b need not be monic.
RPoly rrem(RPoly a, const RPoly& b) {
    rtrim(a);
    const Rational lead = b.back();
    while (a.size() >= b.size()) {
        Rational c = a.back() / lead;
        size_t off = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= c * b[j];
        a.pop_back();
        rtrim(a);
        if (a.empty()) break;
    }
    return a;
}

RPoly rdivq(RPoly a, const RPoly& b, RPoly& rem) {
    rtrim(a);
    RPoly q;
    const Rational lead = b.back();
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size()) {
        Rational c = a.back() / lead;
        size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= c * b[j];
        while (!a.empty() && a.size() > off + b.size() - 1) a.pop_back();
        rtrim(a);
        if (a.empty()) break;
    }
    rem = a;
    rtrim(q);
    return q;
}

RPoly phi_as_rpoly(unsigned n) {
    const ZPoly& z = cyclotomic_locked(n);
    RPoly r(z.size());
    for (size_t i = 0; i < z.size(); ++i) r[i] = Rational(z[i]);
    return r;
}

// Reduce a polynomial in zeta_n modulo Phi_n, returning exactly phi(n) coeffs.
std::vector<Rational> reduce_mod_phi(RPoly p, unsigned n) {
    RPoly phi = phi_as_rpoly(n);
    rtrim(p);
    if (p.size() >= phi.size()) p = rrem(std::move(p), phi);
    p.resize(phi.size() - 1, Rational(0));
    return p;
}

unsigned long umod(long k, unsigned n) {
    long r = k % static_cast<long>(n);
    if (r < 0) r += n;
    return static_cast<unsigned long>(r);
}

bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

int legendre_symbol(unsigned long a, unsigned long p) {
    Integer az(static_cast<long>(a % p)), pz(static_cast<long>(p));
    int r = mpz_legendre(az.get_mpz_t(), pz.get_mpz_t());
    return r;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw Error(ErrorCode::InvalidInput, "conductor must be positive");
    return cyclotomic_locked(n);
}

unsigned phi_degree(unsigned n) {
    return static_cast<unsigned>(cyclotomic_locked(n).size()) - 1;
}

CycloNumber::CycloNumber(unsigned conductor, std::vector<Rational> coeffs) : n_(conductor) {
    if (conductor == 0) throw Error(ErrorCode::InvalidInput, "conductor must be positive");
    unsigned deg = phi_degree(conductor);
    if (coeffs.size() != deg)
        throw Error(ErrorCode::InvalidInput, "coefficient vector has wrong length for conductor " +
                                                 std::to_string(conductor));
    c_ = std::move(coeffs);
}

CycloNumber CycloNumber::root_of_unity(unsigned n, long k) {
    if (n == 0) throw Error(ErrorCode::InvalidInput, "conductor must be positive");
    unsigned long e = umod(k, n);
    RPoly p(e + 1, Rational(0));
    p[e] = Rational(1);
    return CycloNumber(n, reduce_mod_phi(std::move(p), n));
}

bool CycloNumber::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.is_zero(); });
}

bool CycloNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational CycloNumber::rational_value() const {
    if (!is_rational())
        throw Error(ErrorCode::InternalError, "rational_value on non-rational " + to_string());
    return c_[0];
}

CycloNumber CycloNumber::lifted(unsigned m) const {
    if (m == n_) return *this;
    if (m % n_ != 0)
        throw Error(ErrorCode::InternalError, "cannot lift conductor " + std::to_string(n_) +
                                                  " into " + std::to_string(m));
    unsigned step = m / n_;
    RPoly p;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        size_t e = i * step;
        if (p.size() <= e) p.resize(e + 1, Rational(0));
        p[e] = c_[i];
    }
    return CycloNumber(m, reduce_mod_phi(std::move(p), m));
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
    unsigned l = static_cast<unsigned>(lcm(Integer(a.n_), Integer(b.n_)).get_ui());
    CycloNumber x = a.lifted(l), y = b.lifted(l);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) { return a + (-b); }

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    unsigned l = static_cast<unsigned>(lcm(Integer(a.n_), Integer(b.n_)).get_ui());
    CycloNumber x = a.lifted(l), y = b.lifted(l);
    if (l == 1) return CycloNumber(x.c_[0] * y.c_[0]);
    RPoly p = rmul(x.c_, y.c_);
    return CycloNumber(l, reduce_mod_phi(std::move(p), l));
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (is_rational()) {
        CycloNumber r = *this;
        r.c_[0] = Rational(1) / r.c_[0];
        for (size_t i = 1; i < r.c_.size(); ++i) r.c_[i] = Rational(0);
        return r;
    }
    // Extended Euclid against Phi_n; Phi_n is irreducible over Q, so the gcd
    // with any nonzero residue is a nonzero constant.
    RPoly r0 = phi_as_rpoly(n_), r1 = c_;
    rtrim(r1);
    RPoly u0, u1{Rational(1)};
    while (!r1.empty()) {
        RPoly rem;
        RPoly q = rdivq(r0, r1, rem);
        r0 = std::move(r1);
        r1 = std::move(rem);
        RPoly u2 = rsub(u0, rmul(q, u1));
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.size() != 1)
        throw Error(ErrorCode::InternalError, "nontrivial gcd with cyclotomic polynomial");
    Rational g = r0[0];
    for (auto& q : u0) q /= g;
    return CycloNumber(n_, reduce_mod_phi(std::move(u0), n_));
}

CycloNumber CycloNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNumber acc(Rational(1));
    CycloNumber base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    unsigned l = static_cast<unsigned>(lcm(Integer(a.n_), Integer(b.n_)).get_ui());
    return a.lifted(l).c_ == b.lifted(l).c_;
}

bool operator<(const CycloNumber& a, const CycloNumber& b) {
    if (a.n_ != b.n_) {
        unsigned l = static_cast<unsigned>(lcm(Integer(a.n_), Integer(b.n_)).get_ui());
        return a.lifted(l) < b.lifted(l);
    }
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
}

std::complex<double> CycloNumber::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_);
        acc += c_[i].to_double() * std::polar(1.0, angle);
    }
    return acc;
}

std::string CycloNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[i].to_string() << ")";
        if (i > 0) os << "*z" << n_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::optional<CycloNumber::RootUnityScaled> CycloNumber::as_root_of_unity_times_rational() const {
    if (is_zero()) return std::nullopt;
    if (is_rational()) {
        Rational r = rational_value();
        if (r.sign() > 0) return RootUnityScaled{r, 1, 0};
        return RootUnityScaled{-r, 2, 1};
    }
    // Roots of unity of Q(zeta_n) form mu_{n'} with n' = n for even n, 2n otherwise.
    unsigned np = (n_ % 2 == 0) ? n_ : 2 * n_;
    for (unsigned j = 1; j < np; ++j) {
        CycloNumber t = *this * CycloNumber::root_of_unity(np, -static_cast<long>(j));
        if (!t.is_rational()) continue;
        Rational r = t.rational_value();
        if (r.is_zero()) return std::nullopt;
        if (r.sign() > 0) return RootUnityScaled{r, np, j};
        return RootUnityScaled{-r, np, (j + np / 2) % np};
    }
    return std::nullopt;
}

namespace {

// sqrt of a squarefree positive integer composed of the given prime factors,
// assembled multiplicatively from Gauss sums.
std::optional<CycloNumber> sqrt_squarefree(const std::vector<unsigned long>& primes,
                                           unsigned conductor_cap) {
    CycloNumber acc(Rational(1));
    Integer cond(1);
    for (unsigned long p : primes) {
        CycloNumber piece(Rational(1));
        if (p == 2) {
            // sqrt(2) = zeta_8 + zeta_8^{-1}
            piece = CycloNumber::root_of_unity(8, 1) + CycloNumber::root_of_unity(8, 7);
            cond = lcm(cond, Integer(8));
        } else {
            // Gauss sum: sum_a (a|p) zeta_p^a equals sqrt(p) for p = 1 mod 4
            // and i*sqrt(p) for p = 3 mod 4.
            Integer target = lcm(cond, Integer(static_cast<long>(p)));
            if (p % 4 == 3) target = lcm(target, Integer(4));
            if (target > conductor_cap) return std::nullopt;
            CycloNumber g(Rational(0));
            for (unsigned long a = 1; a < p; ++a) {
                int chi = legendre_symbol(a, p);
                CycloNumber term = CycloNumber::root_of_unity(static_cast<unsigned>(p),
                                                              static_cast<long>(a));
                g += (chi == 1) ? term : -term;
            }
            piece = (p % 4 == 1) ? g : g * CycloNumber::root_of_unity(4, 3);
            cond = target;
        }
        if (cond > conductor_cap) return std::nullopt;
        acc *= piece;
    }
    if (Integer(acc.conductor()) > conductor_cap) return std::nullopt;
    return acc;
}

// Factor n as s^2 * d with d squarefree; fills the prime factors of d.
// Returns false when n cannot be factored at desk scale.
bool split_square_part(Integer n, Integer& s, std::vector<unsigned long>& d_primes) {
    s = 1;
    for (unsigned long p = 2; p <= 1000000 && Integer(p) * Integer(p) <= n; p == 2 ? p = 3 : p += 2) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2 == 1) d_primes.push_back(p);
    }
    if (n == 1) return true;
    if (is_probable_prime(n)) {
        if (n > 1000000000L) return false;  // conductor would be far past any cap anyway
        d_primes.push_back(n.get_ui());
        return true;
    }
    Integer root;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        s *= root;
        return true;
    }
    return false;
}

}  // namespace

std::optional<CycloNumber> cyclo_sqrt(const Rational& r, unsigned conductor_cap) {
    if (r.is_zero()) return CycloNumber(Rational(0));
    Rational pos = r;
    CycloNumber unit(Rational(1));
    if (r.sign() < 0) {
        pos = -r;
        if (conductor_cap < 4) return std::nullopt;
        unit = CycloNumber::root_of_unity(4, 1);
    }
    // sqrt(a/b) = sqrt(a*b)/b
    Integer ab = pos.numerator() * pos.denominator();
    Integer s;
    std::vector<unsigned long> primes;
    if (!split_square_part(ab, s, primes)) return std::nullopt;
    auto root = sqrt_squarefree(primes, conductor_cap);
    if (!root) return std::nullopt;
    return unit * CycloNumber(Rational(s, pos.denominator())) * *root;
}

std::optional<CycloNumber> kth_root_in_tower(const CycloNumber& c, unsigned k,
                                             unsigned conductor_cap) {
    if (k == 0) throw Error(ErrorCode::InvalidInput, "zeroth root");
    if (c.is_zero()) return CycloNumber(Rational(0));
    if (k == 1) return c;
    auto dec = c.as_root_of_unity_times_rational();
    if (!dec) return std::nullopt;

    // Root-of-unity part: a k-th root of zeta_order^power is zeta_{order*k}^power.
    unsigned long root_order = dec->order * static_cast<unsigned long>(k);
    unsigned long g = gcd(Integer(dec->power), Integer(root_order)).get_ui();
    if (dec->power == 0) {
        root_order = 1;
        g = 1;
    }
    unsigned ord = static_cast<unsigned>(root_order / g);
    if (ord > conductor_cap) return std::nullopt;
    CycloNumber zeta_part = CycloNumber::root_of_unity(ord, dec->power == 0 ? 0 : static_cast<long>(dec->power / g));

    // Rational part r > 0: peel odd part exactly, allow one final square root.
    Rational r = dec->magnitude;
    unsigned rem = k;
    while (rem % 2 == 0) rem /= 2;
    if (rem > 1) {
        Integer num_root, den_root;
        int ok_num = mpz_root(num_root.get_mpz_t(), r.numerator().get_mpz_t(), rem);
        int ok_den = mpz_root(den_root.get_mpz_t(), r.denominator().get_mpz_t(), rem);
        if (!ok_num || !ok_den) return std::nullopt;
        r = Rational(num_root, den_root);
    }
    CycloNumber rad(r);
    unsigned twos = 0;
    for (unsigned t = k; t % 2 == 0; t /= 2) ++twos;
    for (unsigned i = 0; i < twos; ++i) {
        if (!rad.is_rational()) return std::nullopt;  // nested irrational radical
        Rational cur = rad.rational_value();
        Integer num_root, den_root;
        int ok_num = mpz_perfect_square_p(cur.numerator().get_mpz_t());
        int ok_den = mpz_perfect_square_p(cur.denominator().get_mpz_t());
        if (ok_num && ok_den) {
            mpz_sqrt(num_root.get_mpz_t(), cur.numerator().get_mpz_t());
            mpz_sqrt(den_root.get_mpz_t(), cur.denominator().get_mpz_t());
            rad = CycloNumber(Rational(num_root, den_root));
        } else {
            auto s = cyclo_sqrt(cur, conductor_cap);
            if (!s) return std::nullopt;
            rad = *s;
        }
    }
    CycloNumber result = rad * zeta_part;
    if (result.conductor() > conductor_cap) return std::nullopt;
    return result;
}

}  // namespace germ
