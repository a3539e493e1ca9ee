#include "germ/cpoly.hpp"

#include <sstream>

namespace germ {

void cp_trim(CPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int cp_deg(const CPoly& p) { return static_cast<int>(p.size()) - 1; }

bool cp_is_zero(const CPoly& p) { return p.empty(); }

CPoly cp_add(const CPoly& a, const CPoly& b) {
    CPoly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    cp_trim(r);
    return r;
}

CPoly cp_sub(const CPoly& a, const CPoly& b) {
    CPoly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    cp_trim(r);
    return r;
}

CPoly cp_mul(const CPoly& a, const CPoly& b) {
    if (a.empty() || b.empty()) return {};
    CPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    cp_trim(r);
    return r;
}

CPoly cp_scale(const CPoly& a, const CycloNumber& c) {
    if (c.is_zero()) return {};
    CPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

CPoly cp_shift(const CPoly& a, unsigned k) {
    if (a.empty()) return {};
    CPoly r(a.size() + k);
    for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

void cp_divrem(const CPoly& a, const CPoly& b, CPoly& q, CPoly& r) {
    if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    r = a;
    cp_trim(r);
    q.clear();
    if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, CycloNumber(Rational(0)));
    CycloNumber lead_inv = b.back().inverse();
    while (r.size() >= b.size()) {
        CycloNumber c = r.back() * lead_inv;
        size_t off = r.size() - b.size();
        q[off] = c;
        for (size_t j = 0; j < b.size(); ++j) r[off + j] -= c * b[j];
        r.pop_back();
        cp_trim(r);
        if (r.empty()) break;
    }
    cp_trim(q);
}

CPoly cp_divexact(const CPoly& a, const CPoly& b) {
    CPoly q, r;
    cp_divrem(a, b, q, r);
    if (!cp_is_zero(r))
        throw Error(ErrorCode::InternalError, "inexact division: remainder " + cp_to_string(r));
    return q;
}

CPoly cp_gcd(CPoly a, CPoly b) {
    cp_trim(a);
    cp_trim(b);
    while (!b.empty()) {
        CPoly q, r;
        cp_divrem(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        CycloNumber inv = a.back().inverse();
        for (auto& c : a) c *= inv;
    }
    return a;
}

CPoly cp_derivative(const CPoly& a) {
    if (a.size() <= 1) return {};
    CPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * CycloNumber(Rational(static_cast<long>(i)));
    cp_trim(r);
    return r;
}

CycloNumber cp_eval(const CPoly& a, const CycloNumber& x) {
    CycloNumber acc(Rational(0));
    for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

std::string cp_to_string(const CPoly& a, const std::string& var) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << a[i].to_string() << ")";
        if (i > 0) os << "*" << var << "^" << i;
        first = false;
    }
    return os.str();
}

}  // namespace germ
