#include "germ/puiseux.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace germ {

ExtRational Valuation::require_known(const char* what) const {
    switch (kind) {
        case Kind::Finite: return ExtRational(value);
        case Kind::Infinite: return ExtRational::infinity();
        case Kind::AboveTrunc:
            throw Error(ErrorCode::InsufficientTruncation,
                        std::string(what) + " undetermined beyond truncation " + value.to_string());
    }
    throw Error(ErrorCode::InternalError, "bad valuation kind");
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& exp, const CycloNumber& coeff) {
    return make({Term{exp, coeff}}, ExtRational::infinity());
}

PuiseuxSeries PuiseuxSeries::make(std::vector<Term> terms, ExtRational trunc) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exp < b.exp; });
    PuiseuxSeries s;
    s.trunc_ = std::move(trunc);
    for (auto& t : terms) {
        if (t.exp.sign() < 0)
            throw Error(ErrorCode::InvalidInput, "negative exponent " + t.exp.to_string());
        if (!s.trunc_.is_infinite() && ExtRational(t.exp) > s.trunc_) continue;
        if (!s.terms_.empty() && s.terms_.back().exp == t.exp) {
            s.terms_.back().coeff += t.coeff;
            if (s.terms_.back().coeff.is_zero()) s.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            s.terms_.push_back(std::move(t));
        }
    }
    return s;
}

CycloNumber PuiseuxSeries::coeff_at(const Rational& exp) const {
    for (const auto& t : terms_) {
        if (t.exp == exp) return t.coeff;
        if (t.exp > exp) break;
    }
    if (!trunc_.is_infinite() && ExtRational(exp) > trunc_)
        throw Error(ErrorCode::InsufficientTruncation,
                    "coefficient at " + exp.to_string() + " beyond truncation");
    return CycloNumber(Rational(0));
}

PuiseuxSeries PuiseuxSeries::truncated(const ExtRational& bound) const {
    return make(terms_, min(trunc_, bound));
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (a.trunc_ != b.trunc_ || a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

std::string PuiseuxSeries::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        os << "(" << t.coeff.to_string() << ")*" << var << "^(" << t.exp.to_string() << ")";
        first = false;
    }
    if (first) os << "0";
    if (!trunc_.is_infinite()) os << " + O(" << var << "^>" << trunc_.to_string() << ")";
    return os.str();
}

Valuation valuation(const PuiseuxSeries& s) {
    if (!s.terms().empty()) return Valuation::finite(s.terms().front().exp);
    if (s.exact()) return Valuation::infinite();
    return Valuation::above(s.trunc().value());
}

namespace {

// Lower bound on the valuation, usable in truncation bookkeeping: the true
// valuation of the full series is >= this.
ExtRational valuation_low(const PuiseuxSeries& s) {
    if (!s.terms().empty()) return ExtRational(s.terms().front().exp);
    return s.trunc();
}

}  // namespace

PuiseuxSeries add(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    std::vector<PuiseuxSeries::Term> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return PuiseuxSeries::make(std::move(terms), min(a.trunc(), b.trunc()));
}

PuiseuxSeries negate(const PuiseuxSeries& a) {
    std::vector<PuiseuxSeries::Term> terms = a.terms();
    for (auto& t : terms) t.coeff = -t.coeff;
    return PuiseuxSeries::make(std::move(terms), a.trunc());
}

PuiseuxSeries sub(const PuiseuxSeries& a, const PuiseuxSeries& b) { return add(a, negate(b)); }

PuiseuxSeries mul(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    // trunc = min(val(a) + trunc(b), val(b) + trunc(a)), exact sides as +inf.
    ExtRational trunc = min(valuation_low(a) + b.trunc(), valuation_low(b) + a.trunc());
    std::map<Rational, CycloNumber> acc;
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            Rational e = ta.exp + tb.exp;
            if (!trunc.is_infinite() && ExtRational(e) > trunc) continue;
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, ta.coeff * tb.coeff);
            else
                it->second += ta.coeff * tb.coeff;
        }
    }
    std::vector<PuiseuxSeries::Term> terms;
    terms.reserve(acc.size());
    for (auto& [e, c] : acc) terms.push_back({e, std::move(c)});
    return PuiseuxSeries::make(std::move(terms), trunc);
}

PuiseuxSeries scale(const PuiseuxSeries& a, const CycloNumber& c) {
    if (c.is_zero()) return PuiseuxSeries::zero();
    std::vector<PuiseuxSeries::Term> terms = a.terms();
    for (auto& t : terms) t.coeff *= c;
    return PuiseuxSeries::make(std::move(terms), a.trunc());
}

PuiseuxSeries pow_series(const PuiseuxSeries& a, unsigned e) {
    PuiseuxSeries acc = PuiseuxSeries::monomial(Rational(0), CycloNumber(Rational(1)));
    for (unsigned i = 0; i < e; ++i) acc = mul(acc, a);
    return acc;
}

PuiseuxSeries scale_variable(const PuiseuxSeries& s, unsigned n, long k) {
    std::vector<PuiseuxSeries::Term> terms;
    terms.reserve(s.terms().size());
    for (const auto& t : s.terms()) {
        if (!t.exp.is_integer())
            throw Error(ErrorCode::IncompatibleRamification,
                        "scale_variable requires integer exponents, got " + t.exp.to_string());
        long e = static_cast<long>(mpz_fdiv_ui(t.exp.numerator().get_mpz_t(), n));
        terms.push_back({t.exp, t.coeff * CycloNumber::root_of_unity(n, k * e)});
    }
    return PuiseuxSeries::make(std::move(terms), s.trunc());
}

PuiseuxSeries reparameterize(const PuiseuxSeries& s, unsigned p, unsigned q) {
    if (p == 0 || q == 0) throw Error(ErrorCode::InvalidInput, "reparameterize needs p, q >= 1");
    Rational factor(static_cast<long>(p), static_cast<long>(q));
    std::vector<PuiseuxSeries::Term> terms = s.terms();
    for (auto& t : terms) t.exp *= factor;
    ExtRational trunc = s.exact() ? ExtRational::infinity() : ExtRational(s.trunc().value() * factor);
    return PuiseuxSeries::make(std::move(terms), trunc);
}

Arc Arc::x_normalized(unsigned p, PuiseuxSeries y) {
    if (p == 0) throw Error(ErrorCode::InvalidInput, "arc needs p >= 1");
    if (!y.terms().empty() && y.terms().front().exp.sign() <= 0)
        throw Error(ErrorCode::InvalidInput, "arc second coordinate must vanish at 0");
    Arc a;
    a.kind = Kind::XNormalized;
    a.p = p;
    a.y = std::move(y);
    return a;
}

Arc Arc::y_axis(unsigned e, PuiseuxSeries v) {
    if (e == 0) throw Error(ErrorCode::InvalidInput, "arc needs e >= 1");
    Valuation val = valuation(v);
    if (!val.is_finite() || !val.value.is_zero())
        throw Error(ErrorCode::InvalidInput, "y-axis arc needs a unit series v with v(0) != 0");
    Arc a;
    a.kind = Kind::YAxis;
    a.e = e;
    a.v = std::move(v);
    return a;
}

Rational arc_size_order(const Arc& a) {
    if (a.kind == Arc::Kind::YAxis) return Rational(static_cast<long>(a.e));
    Rational p(static_cast<long>(a.p));
    Valuation vy = valuation(a.y);
    switch (vy.kind) {
        case Valuation::Kind::Finite: return std::min(p, vy.value);
        case Valuation::Kind::Infinite: return p;
        case Valuation::Kind::AboveTrunc:
            if (vy.value >= p) return p;  // min is p regardless of the unknown tail
            throw Error(ErrorCode::InsufficientTruncation,
                        "arc size order undetermined: y known only beyond " + vy.value.to_string());
    }
    throw Error(ErrorCode::InternalError, "bad valuation kind");
}

Arc reparameterize_arc(const Arc& a, unsigned new_p) {
    if (a.kind != Arc::Kind::XNormalized)
        throw Error(ErrorCode::InvalidInput, "cannot reparameterize a y-axis arc to t^p form");
    if (new_p == a.p) return a;
    return Arc::x_normalized(new_p, reparameterize(a.y, new_p, a.p));
}

BranchGerm::BranchGerm(unsigned m, PuiseuxSeries psi) : m_(m), psi_(std::move(psi)) {
    if (m == 0) throw Error(ErrorCode::InvalidInput, "branch multiplicity must be positive");
    Integer g(static_cast<long>(m));
    for (const auto& t : psi_.terms()) {
        if (!t.exp.is_integer() || t.exp.sign() <= 0)
            throw Error(ErrorCode::InvalidInput,
                        "branch psi needs positive integer exponents, got " + t.exp.to_string());
        g = gcd(g, t.exp.numerator());
    }
    if (psi_.exact() && g != 1)
        throw Error(ErrorCode::NotIrreducible,
                    "gcd(m, exponents of psi) = " + g.get_str() + " != 1");
}

std::optional<bool> same_branch(const BranchGerm& a, const BranchGerm& b) {
    if (a.m() != b.m()) return false;
    for (unsigned l = 0; l < a.m(); ++l) {
        PuiseuxSeries rotated = scale_variable(b.psi(), b.m(), static_cast<long>(l));
        Valuation v = valuation(sub(a.psi(), rotated));
        if (v.is_infinite()) return true;
        // agreement on the whole known region of a truncated input is undecidable
        if (v.is_above_trunc()) return std::nullopt;
    }
    return false;
}

}  // namespace germ
