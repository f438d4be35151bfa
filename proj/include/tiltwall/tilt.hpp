#ifndef TILTWALL_TILT_HPP
#define TILTWALL_TILT_HPP

#include "tiltwall/chern.hpp"

namespace tiltwall {

/// Point of the (alpha, beta) half-plane, stored as (alpha^2, beta).
struct TiltPoint {
    Rat alpha_sq;
    Rat beta;

    static TiltPoint make(const Rat& alpha_sq, const Rat& beta) {
        if (alpha_sq <= 0) throw DomainError("alpha_sq must be positive");
        return {alpha_sq, beta};
    }

    friend bool operator==(const TiltPoint&, const TiltPoint&) = default;
};

struct ChargeValue {
    Rat re;
    Rat im;

    friend bool operator==(const ChargeValue&, const ChargeValue&) = default;
};

/// Z = (1/2) alpha^2 H^3 ch0^b - H ch2^b + i H^2 ch1^b.
ChargeValue central_charge(const ChernCharacter& v, const TiltPoint& pt, const FanoContext& ctx);

/// -re/im with the +infinity convention for im <= 0 (negative_sign set when im < 0).
SlopeValue tilt_slope(const ChernCharacter& v, const TiltPoint& pt, const FanoContext& ctx);

/// Z0 = Z/i: (re', im') = (im Z, -re Z).
ChargeValue rotated_charge(const ChernCharacter& v, const TiltPoint& pt, const FanoContext& ctx);

SlopeValue rotated_slope(const ChernCharacter& v, const TiltPoint& pt, const FanoContext& ctx);

/// Triangular region: -1/2 <= beta < 0 with alpha < -beta, or -1 < beta < -1/2
/// with alpha <= 1 + beta; decided exactly on alpha^2.
bool region_V_contains(const TiltPoint& pt);

struct WallLocus {
    enum class Kind { Circle, VerticalLine, Everywhere, Nowhere };
    Kind kind;
    Rat center_beta; // circle
    Rat radius_sq;   // circle
    Rat beta0;       // vertical line

    friend bool operator==(const WallLocus&, const WallLocus&) = default;
};

/// Solution set of Re Z(v) Im Z(w) = Re Z(w) Im Z(v) in the (alpha^2, beta) plane.
WallLocus wall_between(const ChernCharacter& v, const ChernCharacter& w, const FanoContext& ctx);

} // namespace tiltwall

#endif
