#include "doctest.h"

#include "tiltwall/bounds.hpp"

using namespace tiltwall;

TEST_CASE("bogomolov check") {
    const auto d4 = FanoContext::of_degree(4);
    const auto pass = bogomolov_check(ChernCharacter{2, 0, -2, std::nullopt}, d4);
    CHECK(pass.status == BoundStatus::Pass);
    CHECK(*pass.bound_value == 32);
    const auto eq = bogomolov_check(line_bundle_character(Rat(2), d4), d4);
    CHECK(eq.status == BoundStatus::Equality);
    const auto bad = bogomolov_check(ChernCharacter{1, 0, 1, std::nullopt}, d4);
    CHECK(bad.status == BoundStatus::Violate);
    CHECK(*bad.bound_value == -8);
    // verdict is twist-invariant
    for (const Rat b : {Rat(-1, 2), Rat(3, 7)})
        CHECK(bogomolov_check(twist(ChernCharacter{1, 0, 1, std::nullopt}, b, d4), d4).status ==
              BoundStatus::Violate);
}

TEST_CASE("li ch2 windows") {
    CHECK(*li_ch2_bound(FanoContext::of_degree(5), Rat(0)).bound_value == 0);
    CHECK(*li_ch2_bound(FanoContext::of_degree(3), Rat(2, 3)).bound_value == Rat(1, 6));
    CHECK(*li_ch2_bound(FanoContext::of_degree(4), Rat(1, 2)).bound_value == Rat(1, 32));
    CHECK(li_ch2_bound(FanoContext::of_degree(1), Rat(0)).status == BoundStatus::NotApplicable);
    CHECK(li_ch2_bound(FanoContext::of_degree(2), Rat(2, 3)).status == BoundStatus::NotApplicable);
    CHECK(li_ch2_bound(FanoContext::of_degree(5), Rat(2, 5)).status == BoundStatus::NotApplicable);
    CHECK(li_ch2_bound(FanoContext::of_degree(3), Rat(-3, 4)).bound_value == Rat(1, 4));
}

TEST_CASE("li window endpoints on mu^2 match the interval oracle") {
    // 256-denominator sweep of |mu| in [0, 5/4]; oracle uses integer-squared tests.
    for (int num = 0; num <= 320; ++num) {
        const Rat mu(num, 256);
        const Rat mu_sq = mu * mu;
        {
            const bool in5 = 400 * numerator(mu_sq) <= 60 * denominator(mu_sq); // mu^2<=3/20
            CHECK((li_ch2_bound(FanoContext::of_degree(5), mu).status == BoundStatus::Pass) == in5);
        }
        {
            // sqrt(3)/4 <= mu <= 1 - sqrt(3)/4 <=> 3 <= (4 mu)^2 and (4 - 4 mu)^2 >= 3... careful:
            // upper endpoint: mu <= 1 - sqrt(3)/4 <=> 4 mu - 4 <= -sqrt(3) <=> (4 - 4 mu)^2 >= 3
            // with 4 - 4 mu >= 0 required.
            const Rat t = 4 - 4 * mu;
            const bool in4 = (16 * mu_sq >= 3) && t >= 0 && t * t >= 3;
            CHECK((li_ch2_bound(FanoContext::of_degree(4), mu).status == BoundStatus::Pass) == in4);
        }
    }
}

TEST_CASE("li check") {
    const auto d4 = FanoContext::of_degree(4);
    const auto v2 = li_check(ChernCharacter{2, -1, 1, std::nullopt}, d4);
    CHECK(v2.status == BoundStatus::Violate);
    CHECK(*v2.bound_value == Rat(1, 32)); // ratio 1/8 > 1/32
    const auto d3 = FanoContext::of_degree(3);
    const auto v6 = li_check(ChernCharacter{3, -2, 2, std::nullopt}, d3);
    CHECK(v6.status == BoundStatus::Violate);
    CHECK(*v6.bound_value == Rat(1, 6)); // ratio 2/9 > 1/6
    const auto d2 = FanoContext::of_degree(2);
    const auto rider = li_check(ChernCharacter{3, -1, 0, std::nullopt}, d2);
    CHECK(rider.status == BoundStatus::Violate);
    CHECK(rider.reason == "equality-rider-rank");
    // rank 1 and 2 survive equality
    CHECK(li_check(ChernCharacter{2, 0, 0, std::nullopt}, d2).status == BoundStatus::Equality);
    CHECK(li_check(ChernCharacter{0, 1, 0, std::nullopt}, d2).status == BoundStatus::NotApplicable);
}

TEST_CASE("bms ch3 bound") {
    const auto d5 = FanoContext::of_degree(5);
    const ChernCharacter E{2, 0, -2, std::nullopt};
    CHECK(bms_ch3_bound(E, Rat(1, 20), Rat(-1, 2), d5) == Rat(14, 15));
    for (int d = 1; d <= 5; ++d) {
        const auto ctx = FanoContext::of_degree(d);
        CHECK(bms_ch3_bound(E, Rat(0), Rat(-1, 2), ctx) == Rat(1, 3) + Rat(8, 3 * d));
        // identity in alpha^2 at 10 rational sample points
        for (int i = 1; i <= 10; ++i) {
            const Rat s(i * i + 1, 7 * i);
            CHECK(bms_ch3_bound(E, s, Rat(-1, 2), ctx) ==
                  Rat(4, 3) * s + Rat(1, 3) + Rat(8, 3 * d));
        }
    }
    CHECK_THROWS_AS(bms_ch3_bound(ChernCharacter{0, 0, 1, std::nullopt}, Rat(1, 4), Rat(-1, 2),
                                  FanoContext::of_degree(3)),
                    DomainError);
}
