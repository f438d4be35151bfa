#include "tiltwall/bounds.hpp"

namespace tiltwall {

BoundVerdict bogomolov_check(const ChernCharacter& v, const FanoContext& ctx) {
    const Rat delta = discriminant(v, ctx);
    if (delta > 0) return {BoundStatus::Pass, delta, "delta-positive"};
    if (delta == 0) return {BoundStatus::Equality, delta, "delta-zero"};
    return {BoundStatus::Violate, delta, "delta-negative"};
}

BoundVerdict li_ch2_bound(const FanoContext& ctx, const Rat& mu) {
    const Rat mu_sq = mu * mu;
    switch (ctx.degree) {
    case 5:
        if (mu_sq <= Rat(3, 20)) return {BoundStatus::Pass, Rat(0), "d5-window"};
        break;
    case 4: {
        // sqrt(3)/4 <= |mu| <= 1 - sqrt(3)/4, decided on mu^2:
        // lower: mu^2 >= 3/16; upper: sqrt(3)/2 <= 19/16 - mu^2, both sides squared.
        if (mu_sq >= Rat(3, 16)) {
            const Rat t = Rat(19, 16) - mu_sq;
            if (t >= 0 && t * t >= Rat(3, 4))
                return {BoundStatus::Pass, mu_sq / 2 - Rat(3, 32), "d4-window"};
        }
        break;
    }
    case 3:
        if (mu_sq <= Rat(1, 4)) return {BoundStatus::Pass, Rat(0), "d3-low-window"};
        if (mu_sq <= 1) return {BoundStatus::Pass, abs_rat(mu) - Rat(1, 2), "d3-high-window"};
        break;
    case 2:
        if (mu_sq <= Rat(1, 4)) return {BoundStatus::Pass, Rat(0), "d2-window"};
        break;
    default:
        break;
    }
    return {BoundStatus::NotApplicable, std::nullopt, "outside-windows"};
}

BoundVerdict li_check(const ChernCharacter& v, const FanoContext& ctx) {
    if (v.ch0 == 0) return {BoundStatus::NotApplicable, std::nullopt, "rank-zero"};
    const Rat mu = v.ch1 / v.ch0;
    const BoundVerdict window = li_ch2_bound(ctx, mu);
    if (window.status == BoundStatus::NotApplicable) return window;
    const Rat ratio = v.ch2 / (Rat(ctx.degree) * v.ch0); // H ch2 / H^3 ch0
    const Rat bound = *window.bound_value;
    if (ratio > bound) return {BoundStatus::Violate, bound, "ch2-over-bound"};
    if (ratio == bound) {
        if (abs_rat(v.ch0) >= 3)
            return {BoundStatus::Violate, bound, "equality-rider-rank"};
        return {BoundStatus::Equality, bound, "equality"};
    }
    return {BoundStatus::Pass, bound, "ch2-under-bound"};
}

Rat bms_ch3_bound(const ChernCharacter& v, const Rat& alpha_sq, const Rat& beta,
                  const FanoContext& ctx) {
    if (alpha_sq < 0) throw DomainError("alpha_sq must be nonnegative");
    const Rat d(ctx.degree);
    const ChernCharacter t = twist(ChernCharacter{v.ch0, v.ch1, v.ch2, Rat(0)}, beta, ctx);
    const Rat im = d * t.ch1;
    if (im <= 0) throw DomainError("bms_ch3_bound needs H^2 ch1^b > 0");
    const Rat delta = discriminant(v, ctx);
    // ch3^b = ch3 + offset where offset is the twist of the ch3 = 0 lift.
    const Rat offset = *t.ch3;
    const Rat bound_twisted = (alpha_sq * delta + 4 * t.ch2 * t.ch2) / (6 * im);
    return bound_twisted - offset;
}

} // namespace tiltwall
