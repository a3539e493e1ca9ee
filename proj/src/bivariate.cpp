#include "germ/bivariate.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace germ {

BivariatePoly BivariatePoly::constant(const CycloNumber& c) {
    BivariatePoly p;
    p.add_term(0, 0, c);
    return p;
}

BivariatePoly BivariatePoly::monomial(unsigned i, unsigned j, const CycloNumber& c) {
    BivariatePoly p;
    p.add_term(i, j, c);
    return p;
}

CycloNumber BivariatePoly::coeff(unsigned i, unsigned j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? CycloNumber(Rational(0)) : it->second;
}

void BivariatePoly::add_term(unsigned i, unsigned j, const CycloNumber& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

unsigned BivariatePoly::x_degree() const {
    unsigned d = 0;
    for (const auto& [k, c] : t_) d = std::max(d, k.first);
    return d;
}

unsigned BivariatePoly::y_degree() const {
    unsigned d = 0;
    for (const auto& [k, c] : t_) d = std::max(d, k.second);
    return d;
}

unsigned BivariatePoly::multiplicity_at_origin() const {
    if (t_.empty()) throw Error(ErrorCode::InvalidInput, "multiplicity of the zero polynomial");
    unsigned d = ~0u;
    for (const auto& [k, c] : t_) d = std::min(d, k.first + k.second);
    return d;
}

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r = a;
    for (const auto& [k, c] : b.t_) r.add_term(k.first, k.second, c);
    return r;
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) { return a + (-b); }

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r;
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BivariatePoly BivariatePoly::pow(unsigned e) const {
    BivariatePoly acc = constant(CycloNumber(Rational(1)));
    for (unsigned i = 0; i < e; ++i) acc *= *this;
    return acc;
}

BivariatePoly BivariatePoly::derivative_y() const {
    BivariatePoly r;
    for (const auto& [k, c] : t_) {
        if (k.second == 0) continue;
        r.add_term(k.first, k.second - 1, c * CycloNumber(Rational(static_cast<long>(k.second))));
    }
    return r;
}

BivariatePoly BivariatePoly::compose_linear(const CycloNumber& a11, const CycloNumber& a12,
                                            const CycloNumber& a21, const CycloNumber& a22) const {
    BivariatePoly nx;  // a11 x + a12 y
    nx.add_term(1, 0, a11);
    nx.add_term(0, 1, a12);
    BivariatePoly ny;  // a21 x + a22 y
    ny.add_term(1, 0, a21);
    ny.add_term(0, 1, a22);

    std::vector<BivariatePoly> px{constant(CycloNumber(Rational(1)))};
    for (unsigned i = 1; i <= x_degree(); ++i) px.push_back(px.back() * nx);
    std::vector<BivariatePoly> py{constant(CycloNumber(Rational(1)))};
    for (unsigned j = 1; j <= y_degree(); ++j) py.push_back(py.back() * ny);

    BivariatePoly r;
    for (const auto& [k, c] : t_) r += BivariatePoly::constant(c) * px[k.first] * py[k.second];
    return r;
}

BivariatePoly BivariatePoly::newton_transform(unsigned q, unsigned p, const CycloNumber& c) const {
    // binomial expansion of (c + y)^j per term, collected before stripping the
    // x-content so that cancellations are accounted for
    BivariatePoly full;
    unsigned dy = y_degree();
    std::vector<std::vector<Integer>> binom(dy + 1, std::vector<Integer>(dy + 1, Integer(0)));
    for (unsigned n = 0; n <= dy; ++n) {
        binom[n][0] = 1;
        for (unsigned r = 1; r <= n; ++r)
            binom[n][r] = binom[n - 1][r - 1] + (r <= n - 1 ? binom[n - 1][r] : Integer(0));
    }
    std::vector<CycloNumber> cpow{CycloNumber(Rational(1))};
    for (unsigned j = 1; j <= dy; ++j) cpow.push_back(cpow.back() * c);
    for (const auto& [k, coefficient] : t_) {
        unsigned i = k.first, j = k.second;
        for (unsigned nu = 0; nu <= j; ++nu) {
            CycloNumber term = coefficient * CycloNumber(Rational(binom[j][nu])) * cpow[j - nu];
            full.add_term(q * i + p * j, nu, term);
        }
    }
    if (full.is_zero()) return full;
    unsigned w = ~0u;
    for (const auto& [k, coefficient] : full.t_) w = std::min(w, k.first);
    if (w == 0) return full;
    BivariatePoly shifted;
    for (const auto& [k, coefficient] : full.t_) shifted.add_term(k.first - w, k.second, coefficient);
    return shifted;
}

bool BivariatePoly::divisible_by_x() const {
    for (const auto& [k, c] : t_)
        if (k.first == 0) return false;
    return !t_.empty();
}

bool BivariatePoly::divisible_by_y() const {
    for (const auto& [k, c] : t_)
        if (k.second == 0) return false;
    return !t_.empty();
}

BivariatePoly BivariatePoly::div_y() const {
    if (!divisible_by_y()) throw Error(ErrorCode::InternalError, "polynomial not divisible by y");
    BivariatePoly r;
    for (const auto& [k, c] : t_) r.add_term(k.first, k.second - 1, c);
    return r;
}

PuiseuxSeries BivariatePoly::eval_series(unsigned m, const PuiseuxSeries& psi) const {
    // group by y-degree, reuse powers of psi
    PuiseuxSeries acc = PuiseuxSeries::zero();
    std::vector<CPoly> ycoeffs = y_coefficients();
    PuiseuxSeries psi_pow = PuiseuxSeries::monomial(Rational(0), CycloNumber(Rational(1)));
    for (unsigned j = 0; j < ycoeffs.size(); ++j) {
        if (j > 0) psi_pow = mul(psi_pow, psi);
        if (cp_is_zero(ycoeffs[j])) continue;
        std::vector<PuiseuxSeries::Term> xpart;
        for (size_t i = 0; i < ycoeffs[j].size(); ++i) {
            if (ycoeffs[j][i].is_zero()) continue;
            xpart.push_back({Rational(static_cast<long>(m) * static_cast<long>(i)), ycoeffs[j][i]});
        }
        PuiseuxSeries xs = PuiseuxSeries::make(std::move(xpart), ExtRational::infinity());
        acc = add(acc, mul(xs, psi_pow));
    }
    return acc;
}

std::complex<double> BivariatePoly::eval_complex(const std::complex<double>& x,
                                                 const std::complex<double>& y) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [k, c] : t_)
        acc += c.to_complex() * std::pow(x, static_cast<double>(k.first)) *
               std::pow(y, static_cast<double>(k.second));
    return acc;
}

std::vector<CPoly> BivariatePoly::y_coefficients() const {
    std::vector<CPoly> r(y_degree() + 1);
    if (t_.empty()) return {};
    for (const auto& [k, c] : t_) {
        auto& cp = r[k.second];
        if (cp.size() <= k.first) cp.resize(k.first + 1);
        cp[k.first] = c;
    }
    return r;
}

BivariatePoly BivariatePoly::from_y_coefficients(const std::vector<CPoly>& coeffs) {
    BivariatePoly r;
    for (unsigned j = 0; j < coeffs.size(); ++j)
        for (unsigned i = 0; i < coeffs[j].size(); ++i) r.add_term(i, j, coeffs[j][i]);
    return r;
}

std::string BivariatePoly::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")";
        if (k.first) os << "*x^" << k.first;
        if (k.second) os << "*y^" << k.second;
        first = false;
    }
    return os.str();
}

// --- expression parser ------------------------------------------------------

namespace {

struct Parser {
    std::string_view src;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < src.size() && src[pos] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    void expect(char c) {
        if (!accept(c))
            throw ParseFailure(ErrorCode::ParseError, std::string("expected '") + c + "'", pos);
    }

    unsigned long parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos)
            throw ParseFailure(ErrorCode::ParseError, "expected an integer", pos);
        unsigned long v = 0;
        for (size_t i = start; i < pos; ++i) {
            v = v * 10 + static_cast<unsigned long>(src[i] - '0');
            if (v > 1000000)
                throw ParseFailure(ErrorCode::ParseError, "integer literal too large", start);
        }
        return v;
    }

    BivariatePoly parse_expr() {
        BivariatePoly acc = parse_term();
        for (;;) {
            if (accept('+'))
                acc += parse_term();
            else if (accept('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    BivariatePoly parse_term() {
        BivariatePoly acc = parse_factor();
        while (accept('*')) acc *= parse_factor();
        return acc;
    }

    BivariatePoly parse_factor() {
        bool neg = false;
        for (;;) {
            if (accept('-'))
                neg = !neg;
            else if (accept('+'))
                ;
            else
                break;
        }
        BivariatePoly base = parse_atom();
        if (accept('^')) {
            unsigned long e = parse_uint();
            base = base.pow(static_cast<unsigned>(e));
        }
        return neg ? -base : base;
    }

    BivariatePoly parse_atom() {
        skip_ws();
        if (pos >= src.size())
            throw ParseFailure(ErrorCode::ParseError, "unexpected end of input", pos);
        char c = src[pos];
        if (c == '(') {
            ++pos;
            BivariatePoly inner = parse_expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        throw ParseFailure(ErrorCode::ParseError, std::string("unexpected character '") + c + "'",
                           pos);
    }

    BivariatePoly parse_number() {
        size_t start = pos;
        std::string digits = read_digits();
        if (accept_tight('/')) {
            std::string den = read_digits();
            if (den.empty())
                throw ParseFailure(ErrorCode::ParseError, "expected a denominator", pos);
            Rational q = Rational::parse(digits + "/" + den);
            return BivariatePoly::constant(CycloNumber(q));
        }
        (void)start;
        return BivariatePoly::constant(CycloNumber(Rational::parse(digits)));
    }

    // '/' binds only inside rational literals, with no surrounding whitespace
    bool accept_tight(char c) {
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string read_digits() {
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        return std::string(src.substr(start, pos - start));
    }

    BivariatePoly parse_identifier() {
        size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        std::string name(src.substr(start, pos - start));
        if (name == "x") return BivariatePoly::monomial(1, 0, CycloNumber(Rational(1)));
        if (name == "y") return BivariatePoly::monomial(0, 1, CycloNumber(Rational(1)));
        if (name == "zeta") {
            expect('(');
            unsigned long n = parse_uint();
            expect(')');
            if (n == 0) throw ParseFailure(ErrorCode::ParseError, "zeta(0) is undefined", start);
            return BivariatePoly::constant(
                CycloNumber::root_of_unity(static_cast<unsigned>(n), 1));
        }
        throw ParseFailure(ErrorCode::UnknownIdentifier, "unknown identifier '" + name + "'",
                           start);
    }
};

}  // namespace

BivariatePoly parse_polynomial(std::string_view src) {
    Parser p{src};
    BivariatePoly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != src.size())
        throw ParseFailure(ErrorCode::ParseError, "trailing input", p.pos);
    return r;
}

// --- Newton polygon ---------------------------------------------------------

std::vector<PolygonEdge> newton_polygon(const BivariatePoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidInput, "Newton polygon of zero");
    std::vector<PolygonEdge> edges;
    if (f.divisible_by_x()) {
        PolygonEdge v;
        v.vertical = true;
        edges.push_back(v);
    }

    // lower hull in the (j, i) plane, j = y-degree
    std::map<unsigned, unsigned> min_i;  // j -> min x-degree
    for (const auto& [k, c] : f.terms()) {
        auto it = min_i.find(k.second);
        if (it == min_i.end() || k.first < it->second) min_i[k.second] = k.first;
    }
    std::vector<std::pair<long long, long long>> pts;  // (j, i)
    for (const auto& [j, i] : min_i) pts.push_back({static_cast<long long>(j), static_cast<long long>(i)});

    auto cross = [](const std::pair<long long, long long>& o,
                    const std::pair<long long, long long>& a,
                    const std::pair<long long, long long>& b) {
        return (a.first - o.first) * (b.second - o.second) -
               (a.second - o.second) * (b.first - o.first);
    };
    std::vector<std::pair<long long, long long>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }

    for (size_t e = 0; e + 1 < hull.size(); ++e) {
        long long j1 = hull[e].first, i1 = hull[e].second;
        long long j2 = hull[e + 1].first, i2 = hull[e + 1].second;
        if (i2 >= i1) continue;  // slope >= 0: not a germ edge
        long dp = static_cast<long>(i1 - i2), dq = static_cast<long>(j2 - j1);
        Integer g = gcd(Integer(dp), Integer(dq));
        PolygonEdge edge;
        edge.p = dp / g.get_si();
        edge.q = dq / g.get_si();
        edge.slope = Rational(dp, dq);
        edge.j_lo = static_cast<unsigned>(j1);
        edge.j_hi = static_cast<unsigned>(j2);
        CPoly face(static_cast<size_t>(j2) + 1);
        for (const auto& [k, c] : f.terms()) {
            long long i = k.first, j = k.second;
            if (j < j1 || j > j2) continue;
            if ((i - i1) * (j2 - j1) != (j - j1) * (i2 - i1)) continue;
            face[static_cast<size_t>(j)] = c;
        }
        cp_trim(face);
        edge.face = std::move(face);
        edges.push_back(std::move(edge));
    }
    return edges;
}

// --- squarefree decomposition in y ------------------------------------------

namespace {

using YPoly = std::vector<CPoly>;  // index = y-degree

void ytrim(YPoly& a) {
    while (!a.empty() && cp_is_zero(a.back())) a.pop_back();
}

int ydeg(const YPoly& a) { return static_cast<int>(a.size()) - 1; }

YPoly ysub(const YPoly& a, const YPoly& b) {
    YPoly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = cp_sub(r[i], b[i]);
    ytrim(r);
    return r;
}

YPoly ymul_cp(const YPoly& a, const CPoly& c) {
    YPoly r = a;
    for (auto& x : r) x = cp_mul(x, c);
    ytrim(r);
    return r;
}

YPoly yshift(const YPoly& a, unsigned k) {
    YPoly r(a.size() + k);
    for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

CPoly ycontent(const YPoly& a) {
    CPoly g;
    for (const auto& c : a) g = cp_gcd(g, c);
    return g;
}

YPoly yprimitive(const YPoly& a) {
    if (a.empty()) return a;
    CPoly g = ycontent(a);
    YPoly r = a;
    for (auto& c : r) c = cp_divexact(c, g);
    // normalize the leading coefficient to be monic in x
    CycloNumber inv = r.back().back().inverse();
    for (auto& c : r) c = cp_scale(c, inv);
    return r;
}

// pseudo-remainder of a by b in y
YPoly yprem(YPoly a, const YPoly& b) {
    ytrim(a);
    int db = ydeg(b);
    const CPoly& lb = b.back();
    while (ydeg(a) >= db && !a.empty()) {
        int da = ydeg(a);
        CPoly la = a.back();
        YPoly scaled = ymul_cp(a, lb);
        YPoly sub = ymul_cp(yshift(b, static_cast<unsigned>(da - db)), la);
        a = ysub(scaled, sub);
        if (ydeg(a) >= da) throw Error(ErrorCode::InternalError, "pseudo-division did not reduce");
    }
    return a;
}

YPoly ygcd(YPoly a, YPoly b) {
    ytrim(a);
    ytrim(b);
    if (a.empty()) return b.empty() ? b : yprimitive(b);
    if (b.empty()) return yprimitive(a);
    a = yprimitive(a);
    b = yprimitive(b);
    if (ydeg(a) < ydeg(b)) std::swap(a, b);
    while (!b.empty()) {
        YPoly r = yprem(a, b);
        a = std::move(b);
        if (r.empty()) {
            b.clear();
        } else if (ydeg(r) == 0) {
            // a nonzero constant-in-y remainder: coprime in y
            return YPoly{CPoly{CycloNumber(Rational(1))}};
        } else {
            b = yprimitive(r);
        }
    }
    return a;
}

// exact division in y; leading-coefficient divisions are exact when b | a
YPoly ydivexact(const YPoly& a, const YPoly& b) {
    YPoly rem = a;
    ytrim(rem);
    if (b.empty()) throw Error(ErrorCode::DivisionByZero, "division by zero polynomial");
    YPoly q(rem.size());
    while (!rem.empty() && ydeg(rem) >= ydeg(b)) {
        int shift = ydeg(rem) - ydeg(b);
        CPoly qc = cp_divexact(rem.back(), b.back());
        q[static_cast<size_t>(shift)] = qc;
        rem = ysub(rem, ymul_cp(yshift(b, static_cast<unsigned>(shift)), qc));
    }
    if (!rem.empty()) throw Error(ErrorCode::InternalError, "inexact division in y");
    ytrim(q);
    return q;
}

YPoly yderiv(const YPoly& a) {
    if (a.size() <= 1) return {};
    YPoly r(a.size() - 1);
    for (size_t j = 1; j < a.size(); ++j)
        r[j - 1] = cp_scale(a[j], CycloNumber(Rational(static_cast<long>(j))));
    ytrim(r);
    return r;
}

}  // namespace

std::vector<std::pair<unsigned, BivariatePoly>> squarefree_decomposition_y(
    const BivariatePoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidInput, "squarefree decomposition of zero");
    YPoly a = f.y_coefficients();
    ytrim(a);
    if (ydeg(a) <= 0) return {};
    a = yprimitive(a);

    std::vector<std::pair<unsigned, BivariatePoly>> out;
    YPoly g = ygcd(a, yderiv(a));
    YPoly w = ydivexact(a, g);
    unsigned k = 1;
    while (ydeg(w) > 0) {
        if (ydeg(g) <= 0) {
            out.push_back({k, BivariatePoly::from_y_coefficients(w)});
            break;
        }
        YPoly h = ygcd(w, g);
        YPoly z = ydivexact(w, h);
        if (ydeg(z) > 0) out.push_back({k, BivariatePoly::from_y_coefficients(z)});
        w = std::move(h);
        g = ydivexact(g, w);
        ++k;
    }
    return out;
}

}  // namespace germ
