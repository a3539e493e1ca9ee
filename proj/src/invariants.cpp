#include "germ/invariants.hpp"

#include <algorithm>

namespace germ {

CharData characteristic_data(const BranchGerm& b) {
    CharData cd;
    cd.m = b.m();
    Integer e(static_cast<long>(b.m()));
    for (const auto& t : b.psi().terms()) {
        if (e == 1) break;
        Integer exp = t.exp.as_integer();
        if (exp % e == 0) continue;
        cd.beta.push_back(exp.get_si());
        e = gcd(e, exp);
        cd.e.push_back(e.get_si());
    }
    if (e != 1) {
        if (cd.beta.empty() && b.m() == 1) {
            // smooth branch: e_0 = 1 already divides everything
        } else if (!b.psi().exact()) {
            throw Error(ErrorCode::InsufficientTruncation,
                        "gcd chain still at " + e.get_str() + " within truncation " +
                            b.psi().trunc().to_string());
        } else {
            throw Error(ErrorCode::NotIrreducible,
                        "gcd chain stabilizes at " + e.get_str() + " on exact input");
        }
    }
    long long prev = cd.m;
    for (long long ei : cd.e) {
        cd.msub.push_back(prev / ei);
        prev = ei;
    }
    return cd;
}

std::pair<ExtRational, unsigned> coincidence_exponent(const PuiseuxSeries& y, const BranchGerm& b,
                                                      unsigned p) {
    PuiseuxSeries yc = (p == b.m()) ? y : reparameterize(y, b.m(), p);
    ExtRational best;
    unsigned best_l = 1;
    bool have_best = false;
    bool have_unknown = false;
    Rational unknown_bound(0);
    for (unsigned l = 1; l <= b.m(); ++l) {
        Valuation v = valuation(sub(yc, b.conjugate_psi(static_cast<long>(l))));
        if (v.is_infinite()) return {ExtRational::infinity(), l};
        if (v.is_above_trunc()) {
            have_unknown = true;
            unknown_bound = std::max(unknown_bound, v.value);
            continue;
        }
        if (!have_best || ExtRational(v.value) > best) {
            best = ExtRational(v.value);
            best_l = l;
            have_best = true;
        }
    }
    if (have_unknown)
        throw Error(ErrorCode::InsufficientTruncation,
                    "coincidence exponent exceeds truncation " + unknown_bound.to_string());
    return {best, best_l};
}

namespace {

// nu = e_k lambda + (e_0 - e_1) beta_1 + ... + (e_{k-1} - e_k) beta_k,
// with k located by beta_k <= lambda < beta_{k+1}.
OrderResult order_from_lambda(const CharData& cd, const ExtRational& lambda,
                              const Rational& mu) {
    OrderResult r;
    r.lambda = lambda;
    if (lambda.is_infinite()) {
        r.nu = ExtRational::infinity();
        r.contact = ExtRational::infinity();
        r.k = cd.s();
        return r;
    }
    unsigned k = 0;
    while (k < cd.s() && ExtRational(Rational(cd.beta[k])) <= lambda) ++k;
    r.k = k;
    Rational nu = Rational(cd.e_at(k)) * lambda.value();
    for (unsigned i = 1; i <= k; ++i)
        nu += Rational(cd.e_at(i - 1) - cd.e_at(i)) * Rational(cd.beta[i - 1]);
    r.nu = ExtRational(nu);
    r.contact = ExtRational(lambda.value() / mu);
    return r;
}

}  // namespace

OrderResult order_along_parameterized(const BranchGerm& b, const Arc& a) {
    CharData cd = characteristic_data(b);
    if (a.kind == Arc::Kind::YAxis) {
        OrderResult r;
        r.nu = ExtRational(Rational(static_cast<long>(b.m()) * static_cast<long>(a.e)));
        r.k = 0;
        r.lambda = ExtRational(Rational(static_cast<long>(a.e)));
        r.contact = ExtRational(Rational(1));
        return r;
    }
    if (a.p != b.m())
        throw Error(ErrorCode::IncompatibleRamification,
                    "arc first coordinate is t^" + std::to_string(a.p) +
                        ", expected t^" + std::to_string(b.m()) + "; reparameterize first");
    auto [lambda, l] = coincidence_exponent(a.y, b, a.p);
    (void)l;
    return order_from_lambda(cd, lambda, arc_size_order(a));
}

bool tangent_cone_is_x_axis(const BranchGerm& b) {
    Valuation v = valuation(b.psi());
    if (v.is_infinite()) return true;  // psi = 0: the x-axis itself
    Rational m(static_cast<long>(b.m()));
    if (v.is_finite()) return v.value > m;
    // all known terms vanish: tangent to the x-axis iff the bound passes m
    if (v.value >= m) return true;
    throw Error(ErrorCode::InsufficientTruncation,
                "tangent direction of psi undetermined within truncation " + v.value.to_string());
}

ExtRational contact(const Arc& a, const BranchGerm& b) {
    if (!tangent_cone_is_x_axis(b))
        throw Error(ErrorCode::TangentConeNotNormalized,
                    "contact requires a branch with tangent cone the x-axis (val psi > m)");
    if (a.kind == Arc::Kind::YAxis) return ExtRational(Rational(1));

    Arc an = reparameterize_arc(a, b.m());
    Rational m(static_cast<long>(b.m()));
    // transverse to the x-axis: val(y) <= m forces coincidence = size order
    Valuation vy = valuation(an.y);
    if (vy.is_finite() && vy.value <= m) return ExtRational(Rational(1));
    Rational mu = arc_size_order(an);  // = m here unless truncation interferes
    auto [lambda, l] = coincidence_exponent(an.y, b, an.p);
    (void)l;
    if (lambda.is_infinite()) return ExtRational::infinity();
    return ExtRational(lambda.value() / mu);
}

OrderResult order_along_halfbranch(const BranchGerm& b, const Arc& a) {
    Arc an = (a.kind == Arc::Kind::XNormalized) ? reparameterize_arc(a, b.m()) : a;
    OrderResult param = order_along_parameterized(b, an);
    Rational mu = arc_size_order(an);
    OrderResult r = param;
    if (param.nu.is_finite()) r.nu = ExtRational(param.nu.value() / mu);

    if (tangent_cone_is_x_axis(b)) {
        // second route: nu = e_k c + (e_0-e_1) beta_1/m + ... + (e_{k-1}-e_k) beta_k/m
        // with beta_k <= m c < beta_{k+1}
        ExtRational c = contact(a, b);
        r.contact = c;
        if (c.is_infinite()) {
            if (!r.nu.is_infinite())
                throw Error(ErrorCode::InternalError, "infinite contact with finite order");
            return r;
        }
        CharData cd = characteristic_data(b);
        Rational m(static_cast<long>(b.m()));
        ExtRational mc = ExtRational(m * c.value());
        unsigned k = 0;
        while (k < cd.s() && ExtRational(Rational(cd.beta[k])) <= mc) ++k;
        Rational nu2 = Rational(cd.e_at(k)) * c.value();
        for (unsigned i = 1; i <= k; ++i)
            nu2 += Rational(cd.e_at(i - 1) - cd.e_at(i)) * Rational(cd.beta[i - 1]) / m;
        if (!(r.nu == ExtRational(nu2)) || k != r.k)
            throw Error(ErrorCode::InternalError,
                        "order routes disagree: " + r.nu.to_string() + " vs " + nu2.to_string());
    }
    return r;
}

ExtRational order_of_germ(const std::vector<GermFactor>& factors, const Arc& a) {
    ExtRational total(Rational(0));
    for (const auto& f : factors) {
        OrderResult r = order_along_halfbranch(f.branch, a);
        if (r.nu.is_infinite()) return ExtRational::infinity();
        total = total + Rational(static_cast<long>(f.multiplicity)) * r.nu;
    }
    return total;
}

Integer intersection_number(const BranchGerm& b1, const BranchGerm& b2) {
    auto same = same_branch(b1, b2);
    if (!same.has_value())
        throw Error(ErrorCode::InsufficientTruncation,
                    "branches agree within truncation; cannot certify distinctness");
    if (*same) throw Error(ErrorCode::NotDistinct, "intersection number needs distinct branches");

    // val_t of f_2 along t -> (t^{m1}, psi_1(t)): the sum over the m2 conjugates
    // of val(psi_1(t) - psi_2(zeta^i t^{m1/m2})).
    Rational total(0);
    for (unsigned i = 1; i <= b2.m(); ++i) {
        PuiseuxSeries conj = reparameterize(b2.conjugate_psi(static_cast<long>(i)), b1.m(), b2.m());
        Valuation v = valuation(sub(b1.psi(), conj));
        ExtRational val = v.require_known("conjugate coincidence");
        if (val.is_infinite())
            throw Error(ErrorCode::InternalError, "infinite coincidence between distinct branches");
        total += val.value();
    }
    if (!total.is_integer() || total.sign() <= 0)
        throw Error(ErrorCode::InternalError,
                    "intersection number came out as " + total.to_string());
    return total.as_integer();
}

}  // namespace germ
