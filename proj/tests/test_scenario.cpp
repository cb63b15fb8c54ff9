#include "bellkit/scenario.hpp"

#include "doctest.h"

#include <random>

using namespace bellkit;

namespace {

/// Deterministic (2,2) behavior from per-setting output values in {-1,+1}.
Behavior deterministic(int a0, int a1, int b0, int b1) {
    const Scenario s = two_two_scenario();
    Behavior beh;
    beh.scenario = s;
    beh.probs.assign(16, 0);
    const int avals[2] = {a0, a1};
    const int bvals[2] = {b0, b1};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    if (outcome_value(a) == avals[x] && outcome_value(b) == bvals[y])
                        beh.probs[s.index(x, y, a, b)] = 1;
    return beh;
}

}  // namespace

TEST_CASE("ns_dimension matches the closed formula") {
    CHECK(ns_dimension(Scenario{2, 2, 2, 2}) == 8);
    CHECK(ns_dimension(Scenario{1, 1, 2, 2}) == 3);
    CHECK(ns_dimension(Scenario{3, 3, 2, 2}) == 15);
    CHECK(ns_dimension(Scenario{2, 3, 3, 4}) == 49);
}

TEST_CASE("scenario validation") {
    const Scenario degenerate{0, 2, 2, 2};
    CHECK_THROWS_AS(degenerate.validate(), std::invalid_argument);
    CHECK(two_two_scenario().is_two_two());
    CHECK_FALSE(Scenario{2, 2, 3, 2}.is_two_two());
    CHECK(two_two_scenario().cell_count() == 16);
}

TEST_CASE("behavior validation") {
    Behavior u = uniform_behavior(two_two_scenario());
    CHECK_NOTHROW(u.validate());

    Behavior wrong = u;
    wrong.probs.pop_back();
    CHECK_THROWS_AS(wrong.validate(), std::invalid_argument);

    Behavior negative = u;
    negative.probs[0] = Rational(-1) / 4;
    negative.probs[1] = Rational(3) / 4;
    CHECK_THROWS_AS(negative.validate(), std::domain_error);

    Behavior unnormalized = u;
    unnormalized.probs[0] = Rational(1) / 2;
    CHECK_THROWS_AS(unnormalized.validate(), std::domain_error);
}

TEST_CASE("uniform behavior is no-signaling with zero correlators") {
    const Behavior u = uniform_behavior(two_two_scenario());
    CHECK(is_no_signaling(u, Rational(0)));
    const CorrelatorPoint p = to_correlators(u);
    for (int i = 0; i < 4; ++i) {
        CHECK(p.m[i] == 0);
        CHECK(p.c[i] == 0);
    }
}

TEST_CASE("deterministic all-plus behavior") {
    const Behavior d = deterministic(+1, +1, +1, +1);
    d.validate();
    CHECK(is_no_signaling(d, Rational(0)));
    const CorrelatorPoint p = to_correlators(d);
    for (int i = 0; i < 4; ++i) {
        CHECK(p.m[i] == 1);
        CHECK(p.c[i] == 1);
    }
}

TEST_CASE("signaling behavior is rejected") {
    // Alice's x=0 marginal depends on Bob's setting: a=+1 surely when y=0,
    // a=-1 surely when y=1. Bob's outcome is an unbiased coin throughout.
    const Scenario s = two_two_scenario();
    Behavior beh = uniform_behavior(s);
    for (int b = 0; b < 2; ++b) {
        beh.probs[s.index(0, 0, 0, b)] = Rational(1) / 2;
        beh.probs[s.index(0, 0, 1, b)] = 0;
        beh.probs[s.index(0, 1, 0, b)] = 0;
        beh.probs[s.index(0, 1, 1, b)] = Rational(1) / 2;
    }
    beh.validate();
    CHECK_FALSE(is_no_signaling(beh, Rational(0)));
    CHECK_THROWS_AS(to_correlators(beh), std::domain_error);
}

TEST_CASE("from_correlators inverts the correlator map") {
    CorrelatorPoint zero;
    zero.m = {0, 0, 0, 0};
    zero.c = {0, 0, 0, 0};
    CHECK(from_correlators(zero).probs == uniform_behavior(two_two_scenario()).probs);

    CorrelatorPoint plus;
    plus.m = {1, 1, 1, 1};
    plus.c = {1, 1, 1, 1};
    CHECK(from_correlators(plus).probs == deterministic(+1, +1, +1, +1).probs);
}

TEST_CASE("from_correlators rejects points outside the no-signaling body") {
    CorrelatorPoint bad;
    bad.m = {0, 0, 0, 0};
    bad.c = {2, 0, 0, 0};
    try {
        from_correlators(bad);
        FAIL("expected NotABehaviorError");
    } catch (const NotABehaviorError& e) {
        CHECK(e.cell().x == 0);
        CHECK(e.cell().y == 0);
        // the offending entry has outcome values of opposite sign
        CHECK(outcome_value(e.cell().a) * outcome_value(e.cell().b) == -1);
    }
}

TEST_CASE("round trip and convexity on random local mixtures") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<int> weight(0, 6);

    for (int trial = 0; trial < 50; ++trial) {
        // random rational convex combination of deterministic behaviors
        std::vector<Behavior> parts;
        std::vector<Rational> w;
        Rational total = 0;
        for (int j = 0; j < 4; ++j) {
            parts.push_back(deterministic(
                outcome_value(sign(rng)), outcome_value(sign(rng)),
                outcome_value(sign(rng)), outcome_value(sign(rng))));
            Rational wi = weight(rng) + 1;
            w.push_back(wi);
            total += wi;
        }
        Behavior mix = uniform_behavior(two_two_scenario());
        for (int i = 0; i < 16; ++i) {
            Rational acc = 0;
            for (std::size_t j = 0; j < parts.size(); ++j) acc += w[j] * parts[j].probs[i];
            mix.probs[i] = acc / total;
        }

        mix.validate();
        CHECK(is_no_signaling(mix, Rational(0)));

        const CorrelatorPoint p = to_correlators(mix);
        for (int i = 0; i < 4; ++i) {
            CHECK(p.m[i] >= -1);
            CHECK(p.m[i] <= 1);
            CHECK(p.c[i] >= -1);
            CHECK(p.c[i] <= 1);
        }
        CHECK(from_correlators(p).probs == mix.probs);
    }
}

TEST_CASE("float mode conversion and tolerance") {
    const Behavior u = uniform_behavior(two_two_scenario());
    const BehaviorF uf = to_float(u);
    CHECK_NOTHROW(uf.validate(kFloatTol));
    CHECK(is_no_signaling(uf, kFloatTol));
    const CorrelatorPointF pf = to_correlators(uf);
    for (int i = 0; i < 4; ++i) CHECK(pf.c[i] == doctest::Approx(0.0));

    BehaviorF jitter = uf;
    jitter.probs[0] += 5e-10;  // inside tolerance
    CHECK_NOTHROW(jitter.validate(kFloatTol));
    jitter.probs[0] += 1e-6;  // outside tolerance
    CHECK_THROWS_AS(jitter.validate(kFloatTol), std::domain_error);
}
