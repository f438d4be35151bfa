#include "tiltwall/tilt.hpp"

namespace tiltwall {

ChargeValue central_charge(const ChernCharacter& v, const TiltPoint& pt, const FanoContext& ctx) {
    const Rat d(ctx.degree);
    const ChernCharacter t = twist(v, pt.beta, ctx);
    // H^3 ch0 = d ch0, H ch2 = ch2 (L-units), H^2 ch1 = d ch1.
    return {pt.alpha_sq * d * t.ch0 / 2 - t.ch2, d * t.ch1};
}

SlopeValue tilt_slope(const ChernCharacter& v, const TiltPoint& pt, const FanoContext& ctx) {
    const ChargeValue z = central_charge(v, pt, ctx);
    if (z.im == 0) return SlopeValue::infinite(z.re > 0);
    if (z.im < 0) return SlopeValue::infinite(true);
    return SlopeValue::finite(-z.re / z.im);
}

ChargeValue rotated_charge(const ChernCharacter& v, const TiltPoint& pt, const FanoContext& ctx) {
    const ChargeValue z = central_charge(v, pt, ctx);
    return {z.im, -z.re};
}

SlopeValue rotated_slope(const ChernCharacter& v, const TiltPoint& pt, const FanoContext& ctx) {
    const ChargeValue z = rotated_charge(v, pt, ctx);
    if (z.im == 0) return SlopeValue::infinite(z.re > 0);
    if (z.im < 0) return SlopeValue::infinite(true);
    return SlopeValue::finite(-z.re / z.im);
}

bool region_V_contains(const TiltPoint& pt) {
    if (pt.beta >= Rat(-1, 2) && pt.beta < 0)
        return pt.alpha_sq < pt.beta * pt.beta; // alpha < -beta, both positive
    if (pt.beta > -1 && pt.beta < Rat(-1, 2)) {
        const Rat edge = 1 + pt.beta;
        return pt.alpha_sq <= edge * edge; // alpha <= 1 + beta, edge > 0
    }
    return false;
}

WallLocus wall_between(const ChernCharacter& v, const ChernCharacter& w, const FanoContext& ctx) {
    const Rat d(ctx.degree);
    // Slope-equality polynomial in (s, beta), s = alpha^2:
    //   (d/2) K (s + beta^2) - B beta - A = 0
    // with K = r_v c1_w - r_w c1_v, A = c2_v c1_w - c2_w c1_v, B = r_v c2_w - r_w c2_v.
    const Rat K = v.ch0 * w.ch1 - w.ch0 * v.ch1;
    const Rat A = v.ch2 * w.ch1 - w.ch2 * v.ch1;
    const Rat B = v.ch0 * w.ch2 - w.ch0 * v.ch2;
    WallLocus locus{WallLocus::Kind::Nowhere, Rat(0), Rat(0), Rat(0)};
    if (K != 0) {
        const Rat center = B / (d * K);
        const Rat radius_sq = center * center + 2 * A / (d * K);
        if (radius_sq > 0) {
            locus.kind = WallLocus::Kind::Circle;
            locus.center_beta = center;
            locus.radius_sq = radius_sq;
        }
        return locus;
    }
    if (B != 0) {
        locus.kind = WallLocus::Kind::VerticalLine;
        locus.beta0 = -A / B;
        return locus;
    }
    if (A == 0) locus.kind = WallLocus::Kind::Everywhere;
    return locus;
}

} // namespace tiltwall
