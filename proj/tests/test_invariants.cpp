#include <random>

#include "doctest.h"
#include "germ/invariants.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace germ;

namespace {

PuiseuxSeries mono(long num, long den, long coeff = 1) {
    return PuiseuxSeries::monomial(Rational(num, den), CycloNumber(Rational(coeff)));
}

const BranchGerm& cusp() {
    static BranchGerm b(2, mono(3, 1));
    return b;
}

// Projective tangent direction of a branch with val(psi) >= m: (1 : c) with c
// the coefficient of psi at exponent m.
CycloNumber tangent_coefficient(const BranchGerm& b) {
    return b.psi().coeff_at(Rational(static_cast<long>(b.m())));
}

}  // namespace

TEST_CASE("characteristic data: worked recurrences") {
    CharData cd = characteristic_data(cusp());
    CHECK(cd.m == 2);
    CHECK(cd.beta == std::vector<long long>{3});
    CHECK(cd.e == std::vector<long long>{1});
    CHECK(cd.msub == std::vector<long long>{2});

    CharData smooth = characteristic_data(BranchGerm(1, mono(1, 1)));
    CHECK(smooth.m == 1);
    CHECK(smooth.s() == 0);

    CharData two_pair = characteristic_data(BranchGerm(4, add(mono(6, 1), mono(7, 1))));
    CHECK(two_pair.m == 4);
    CHECK(two_pair.beta == std::vector<long long>{6, 7});
    CHECK(two_pair.e == std::vector<long long>{2, 1});
    CHECK(two_pair.msub == std::vector<long long>{2, 2});
}

TEST_CASE("characteristic data: error paths") {
    // truncated psi whose gcd chain has not reached 1
    BranchGerm truncated(4, PuiseuxSeries::make({{Rational(6), CycloNumber(Rational(1))}},
                                                ExtRational(Rational(6))));
    CHECK_THROWS_AS(characteristic_data(truncated), Error);
    try {
        characteristic_data(truncated);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InsufficientTruncation);
    }
    // once the chain reaches 1 the truncation no longer matters
    BranchGerm resolved(2, PuiseuxSeries::make({{Rational(3), CycloNumber(Rational(1))}},
                                               ExtRational(Rational(3))));
    CHECK(characteristic_data(resolved).beta == std::vector<long long>{3});
}

TEST_CASE("characteristic data is conjugate independent") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        BranchGerm b = testing::random_branch(rng);
        CharData base = characteristic_data(b);
        for (unsigned l = 1; l < b.m(); ++l) {
            BranchGerm rotated(b.m(), b.conjugate_psi(static_cast<long>(l)));
            CHECK(characteristic_data(rotated) == base);
        }
    }
}

TEST_CASE("coincidence exponent: cusp cases") {
    auto [l0, i0] = coincidence_exponent(PuiseuxSeries::zero(), cusp(), 2);
    CHECK(l0 == ExtRational(Rational(3)));

    auto [l1, i1] = coincidence_exponent(mono(3, 1), cusp(), 2);
    CHECK(l1.is_infinite());

    auto [l2, i2] = coincidence_exponent(mono(3, 1, 2), cusp(), 2);
    CHECK(l2 == ExtRational(Rational(3)));
}

TEST_CASE("order along parameterized arcs: cusp examples") {
    OrderResult r1 = order_along_parameterized(cusp(), Arc::x_normalized(2, PuiseuxSeries::zero()));
    CHECK(r1.nu == ExtRational(Rational(6)));
    CHECK(r1.k == 1);

    OrderResult r2 = order_along_parameterized(cusp(), Arc::x_normalized(2, mono(2, 1)));
    CHECK(r2.nu == ExtRational(Rational(4)));
    CHECK(r2.k == 0);
    CHECK(r2.lambda == ExtRational(Rational(2)));

    OrderResult r3 = order_along_parameterized(cusp(), Arc::y_axis(1, mono(0, 1)));
    CHECK(r3.nu == ExtRational(Rational(2)));

    // arc inside the branch
    OrderResult r4 = order_along_parameterized(cusp(), Arc::x_normalized(2, mono(3, 1)));
    CHECK(r4.nu.is_infinite());

    // mismatched parameterization is rejected
    CHECK_THROWS_AS(order_along_parameterized(cusp(), Arc::x_normalized(3, mono(1, 1))), Error);
}

TEST_CASE("contact: cusp examples") {
    CHECK(contact(Arc::x_normalized(1, PuiseuxSeries::zero()), cusp()) ==
          ExtRational(Rational(3, 2)));
    CHECK(contact(Arc::x_normalized(1, mono(1, 1)), cusp()) == ExtRational(Rational(1)));
    CHECK(contact(Arc::x_normalized(2, mono(3, 1)), cusp()).is_infinite());
    CHECK(contact(Arc::y_axis(1, mono(0, 1)), cusp()) == ExtRational(Rational(1)));

    // the lemma's frame requires the branch tangent to the x-axis
    BranchGerm diagonal(1, mono(1, 1));  // y = x
    CHECK_THROWS_AS(contact(Arc::x_normalized(1, PuiseuxSeries::zero()), diagonal), Error);
    try {
        contact(Arc::x_normalized(1, PuiseuxSeries::zero()), diagonal);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TangentConeNotNormalized);
    }
}

TEST_CASE("order along half-branches: cusp examples") {
    OrderResult r1 = order_along_halfbranch(cusp(), Arc::x_normalized(1, PuiseuxSeries::zero()));
    CHECK(r1.nu == ExtRational(Rational(3)));
    CHECK(r1.contact == ExtRational(Rational(3, 2)));
    CHECK(r1.k == 1);

    OrderResult r2 = order_along_halfbranch(cusp(), Arc::x_normalized(1, mono(1, 1)));
    CHECK(r2.nu == ExtRational(Rational(2)));
    CHECK(r2.contact == ExtRational(Rational(1)));
    CHECK(r2.k == 0);

    OrderResult r3 = order_along_halfbranch(cusp(), Arc::x_normalized(2, mono(3, 1)));
    CHECK(r3.nu.is_infinite());
}

TEST_CASE("order of a germ is the multiplicity-weighted sum") {
    Arc s0 = Arc::x_normalized(1, PuiseuxSeries::zero());
    std::vector<GermFactor> double_cusp{{cusp(), 2}};
    CHECK(order_of_germ(double_cusp, s0) == ExtRational(Rational(6)));

    Arc ss = Arc::x_normalized(1, mono(1, 1));
    std::vector<GermFactor> axis_and_cusp{{BranchGerm(1, PuiseuxSeries::zero()), 1}, {cusp(), 1}};
    CHECK(order_of_germ(axis_and_cusp, ss) == ExtRational(Rational(3)));

    std::vector<GermFactor> single{{cusp(), 1}};
    CHECK(order_of_germ(single, ss) == order_along_halfbranch(cusp(), ss).nu);
}

TEST_CASE("intersection numbers: worked values") {
    BranchGerm axis(1, PuiseuxSeries::zero());
    CHECK(intersection_number(axis, cusp()) == 3);
    CHECK(intersection_number(cusp(), axis) == 3);

    BranchGerm quintic(2, mono(5, 1));
    CHECK(intersection_number(cusp(), quintic) == 6);

    BranchGerm diag(1, mono(1, 1));
    CHECK(intersection_number(axis, diag) == 1);

    // mixed ramification: (2, t^3) vs (3, t^4) and the axis vs (4, t^7)
    BranchGerm e8(3, mono(4, 1));
    CHECK(intersection_number(cusp(), e8) == 8);
    CHECK(intersection_number(e8, cusp()) == 8);
    BranchGerm steep(4, mono(7, 1));
    CHECK(intersection_number(axis, steep) == 7);
    CHECK(intersection_number(steep, axis) == 7);

    CHECK_THROWS_AS(intersection_number(cusp(), cusp()), Error);
    BranchGerm conj(2, mono(3, 1, -1));
    try {
        intersection_number(cusp(), conj);
        FAIL("conjugate parameterizations are the same branch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotDistinct);
    }
}

TEST_CASE("random order formula agrees with the expanded conjugate product") {
    std::mt19937_64 rng(314159);
    for (int trial = 0; trial < 60; ++trial) {
        BranchGerm b = testing::random_branch(rng);
        Arc a = testing::random_arc(rng, b.m());
        OrderResult r = order_along_parameterized(b, a);
        CHECK(testing::order_matches_oracle(b, a.y, r.nu));

        // normalized order times the size order gives the parameterized order
        OrderResult h = order_along_halfbranch(b, a);
        Rational mu = arc_size_order(a);
        if (r.nu.is_finite()) {
            REQUIRE(h.nu.is_finite());
            CHECK(h.nu.value() * mu == r.nu.value());
        } else {
            CHECK(h.nu.is_infinite());
        }

        // regime index: beta_k <= lambda < beta_{k+1}
        if (r.lambda.is_finite()) {
            CharData cd = characteristic_data(b);
            CHECK(cd.beta_at(r.k) <= r.lambda);
            CHECK(r.lambda < cd.beta_at(r.k + 1));
        }
    }
}

TEST_CASE("intersection number is symmetric on random pairs") {
    std::mt19937_64 rng(2718);
    int done = 0;
    while (done < 40) {
        BranchGerm a = testing::random_branch(rng, 5, 12);
        BranchGerm b = testing::random_branch(rng, 5, 12);
        auto same = same_branch(a, b);
        if (!same.has_value() || *same) continue;
        CHECK(intersection_number(a, b) == intersection_number(b, a));
        ++done;
    }
}

TEST_CASE("intersection bound m1*m2 with equality iff distinct tangents") {
    std::mt19937_64 rng(1618);
    int done = 0;
    while (done < 40) {
        // branches with val(psi) >= m so that m is the curve multiplicity
        BranchGerm a = testing::random_branch(rng, 4, 12, testing::BranchShape::MultiplicityCorrect);
        BranchGerm b = testing::random_branch(rng, 4, 12, testing::BranchShape::MultiplicityCorrect);
        auto same = same_branch(a, b);
        if (!same.has_value() || *same) continue;
        Integer i = intersection_number(a, b);
        Integer lower = Integer(a.m()) * Integer(b.m());
        CHECK(i >= lower);
        bool same_tangent = tangent_coefficient(a) == tangent_coefficient(b);
        CHECK((i == lower) == !same_tangent);
        ++done;
    }
}
