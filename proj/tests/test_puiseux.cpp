#include <random>

#include "doctest.h"
#include "germ/puiseux.hpp"
#include "support/generators.hpp"

using namespace germ;

namespace {

PuiseuxSeries mono(long num, long den, long coeff = 1) {
    return PuiseuxSeries::monomial(Rational(num, den), CycloNumber(Rational(coeff)));
}

PuiseuxSeries random_series(std::mt19937_64& rng, bool allow_trunc) {
    std::uniform_int_distribution<int> nterm(0, 5);
    std::uniform_int_distribution<long> num(0, 12);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<PuiseuxSeries::Term> tv;
    int terms = nterm(rng);
    for (int i = 0; i < terms; ++i)
        tv.push_back({Rational(num(rng), den(rng)), germ::testing::random_cyclo(rng)});
    ExtRational trunc = ExtRational::infinity();
    if (allow_trunc && std::uniform_int_distribution<int>(0, 1)(rng))
        trunc = ExtRational(Rational(num(rng), den(rng)));
    return PuiseuxSeries::make(std::move(tv), trunc);
}

}  // namespace

TEST_CASE("valuation basics") {
    PuiseuxSeries s = add(mono(3, 1), mono(5, 1, -1));
    Valuation v = valuation(s);
    REQUIRE(v.is_finite());
    CHECK(v.value == Rational(3));

    CHECK(valuation(PuiseuxSeries::zero()).is_infinite());

    // coefficients at the same exponent combine: 2 t^{3/2} - t^{3/2}
    PuiseuxSeries t32 = add(mono(3, 2, 2), mono(3, 2, -1));
    Valuation w = valuation(t32);
    REQUIRE(w.is_finite());
    CHECK(w.value == Rational(3, 2));

    // truncated empty series: valuation only known beyond the bound
    PuiseuxSeries empty = PuiseuxSeries::make({}, ExtRational(Rational(5)));
    CHECK(valuation(empty).is_above_trunc());
    CHECK(valuation(empty).value == Rational(5));
}

TEST_CASE("add and mul") {
    CHECK(mul(mono(3, 2), mono(3, 2)) == mono(3, 1));
    CHECK(sub(mono(1, 1), mono(1, 1)).is_known_zero());

    // (1 + t, exact) * (1 - t, trunc=5) = 1 - t^2 with trunc 5
    PuiseuxSeries a = add(mono(0, 1), mono(1, 1));
    PuiseuxSeries b = PuiseuxSeries::make(
        {{Rational(0), CycloNumber(Rational(1))}, {Rational(1), CycloNumber(Rational(-1))}},
        ExtRational(Rational(5)));
    PuiseuxSeries p = mul(a, b);
    CHECK(!p.exact());
    CHECK(p.trunc() == ExtRational(Rational(5)));
    CHECK(p.coeff_at(Rational(0)) == CycloNumber(Rational(1)));
    CHECK(p.coeff_at(Rational(1)).is_zero());
    CHECK(p.coeff_at(Rational(2)) == CycloNumber(Rational(-1)));
}

TEST_CASE("truncation propagation in mul uses valuations") {
    // a = t^2 exact, b = t + O(t^{>3}): product complete to 2 + 3 = 5
    PuiseuxSeries a = mono(2, 1);
    PuiseuxSeries b = PuiseuxSeries::make({{Rational(1), CycloNumber(Rational(1))}},
                                          ExtRational(Rational(3)));
    PuiseuxSeries p = mul(a, b);
    CHECK(p.trunc() == ExtRational(Rational(5)));
    // exact zero times anything is exactly zero
    CHECK(mul(PuiseuxSeries::zero(), b).is_known_zero());
}

TEST_CASE("scale_variable") {
    PuiseuxSeries t3 = mono(3, 1);
    CHECK(scale_variable(t3, 2, 1) == mono(3, 1, -1));  // (-t)^3 = -t^3
    CHECK(scale_variable(mono(2, 1), 2, 1) == mono(2, 1));
    CHECK_THROWS_WITH_AS(scale_variable(mono(3, 2), 4, 1), doctest::Contains("integer"), Error);
    try {
        scale_variable(mono(3, 2), 4, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IncompatibleRamification);
    }
}

TEST_CASE("scale_variable identity and periodicity") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<PuiseuxSeries::Term> tv;
        std::uniform_int_distribution<long> ed(1, 9);
        for (int i = 0; i < 4; ++i) tv.push_back({Rational(ed(rng)), germ::testing::random_cyclo(rng)});
        PuiseuxSeries s = PuiseuxSeries::make(std::move(tv), ExtRational::infinity());
        std::uniform_int_distribution<unsigned> nd(1, 6);
        unsigned n = nd(rng);
        CHECK(scale_variable(s, n, 0) == s);
        PuiseuxSeries cur = s;
        for (unsigned i = 0; i < n; ++i) cur = scale_variable(cur, n, 1);
        CHECK(cur == s);
    }
}

TEST_CASE("reparameterize") {
    PuiseuxSeries s = add(mono(2, 1), mono(3, 1));
    PuiseuxSeries r = reparameterize(s, 1, 2);
    CHECK(r == add(mono(1, 1), mono(3, 2)));
    CHECK(reparameterize(s, 1, 1) == s);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        PuiseuxSeries t = random_series(rng, false);
        std::uniform_int_distribution<unsigned> pd(1, 5);
        unsigned p = pd(rng), q = pd(rng);
        CHECK(reparameterize(reparameterize(t, p, q), q, p) == t);
        Valuation v = valuation(t);
        Valuation w = valuation(reparameterize(t, p, q));
        if (v.is_finite()) {
            REQUIRE(w.is_finite());
            CHECK(w.value == v.value * Rational(static_cast<long>(p), static_cast<long>(q)));
        }
    }
}

TEST_CASE("valuation is additive under mul for exact series") {
    std::mt19937_64 rng(99);
    int done = 0;
    while (done < 60) {
        PuiseuxSeries a = random_series(rng, false);
        PuiseuxSeries b = random_series(rng, false);
        Valuation va = valuation(a), vb = valuation(b);
        if (!va.is_finite() || !vb.is_finite()) continue;
        Valuation vp = valuation(mul(a, b));
        REQUIRE(vp.is_finite());
        CHECK(vp.value == va.value + vb.value);
        ++done;
    }
}

TEST_CASE("truncation soundness: truncated pipelines agree with exact ones") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        PuiseuxSeries a = random_series(rng, false);
        PuiseuxSeries b = random_series(rng, false);
        PuiseuxSeries c = random_series(rng, false);
        Rational bound(std::uniform_int_distribution<long>(1, 8)(rng));
        PuiseuxSeries at = a.truncated(ExtRational(bound));
        PuiseuxSeries bt = b.truncated(ExtRational(bound));
        PuiseuxSeries ct = c.truncated(ExtRational(bound));

        PuiseuxSeries exact = add(mul(a, b), mul(c, c));
        PuiseuxSeries rough = add(mul(at, bt), mul(ct, ct));
        REQUIRE(!rough.exact());
        for (const auto& term : rough.terms()) {
            CHECK(exact.coeff_at(term.exp) == term.coeff);
        }
        // every exact term within the rough truncation must be present
        for (const auto& term : exact.terms()) {
            if (ExtRational(term.exp) <= rough.trunc()) CHECK(rough.coeff_at(term.exp) == term.coeff);
        }
    }
}

TEST_CASE("arc size order") {
    Arc a = Arc::x_normalized(2, mono(3, 1));
    CHECK(arc_size_order(a) == Rational(2));
    Arc b = Arc::x_normalized(2, mono(2, 1));
    CHECK(arc_size_order(b) == Rational(2));
    Arc c = Arc::y_axis(1, mono(0, 1));
    CHECK(arc_size_order(c) == Rational(1));
    // y known only beyond t^1 with p = 3: min undetermined
    Arc d = Arc::x_normalized(3, PuiseuxSeries::make({}, ExtRational(Rational(1))));
    CHECK_THROWS_AS(arc_size_order(d), Error);
    // y known beyond t^5 with p = 3: min is 3 regardless of the tail
    Arc e = Arc::x_normalized(3, PuiseuxSeries::make({}, ExtRational(Rational(5))));
    CHECK(arc_size_order(e) == Rational(3));
}

TEST_CASE("branch germ invariants") {
    CHECK_NOTHROW(BranchGerm(2, mono(3, 1)));
    CHECK_THROWS_AS(BranchGerm(4, mono(6, 1)), Error);  // gcd(4, 6) = 2
    CHECK_THROWS_AS(BranchGerm(2, PuiseuxSeries::zero()), Error);
    CHECK_NOTHROW(BranchGerm(1, PuiseuxSeries::zero()));
    CHECK_THROWS_AS(BranchGerm(2, mono(3, 2)), Error);  // fractional exponent
}

TEST_CASE("same_branch recognizes conjugates") {
    BranchGerm cusp(2, mono(3, 1));
    BranchGerm cusp_conj(2, mono(3, 1, -1));
    auto s = same_branch(cusp, cusp_conj);
    REQUIRE(s.has_value());
    CHECK(*s);
    BranchGerm other(2, mono(5, 1));
    auto d = same_branch(cusp, other);
    REQUIRE(d.has_value());
    CHECK_FALSE(*d);
    // truncated copies that agree within bounds are undecided
    BranchGerm trunc1(2, PuiseuxSeries::make({{Rational(3), CycloNumber(Rational(1))}},
                                             ExtRational(Rational(4))));
    CHECK(!same_branch(trunc1, cusp).has_value());
}
