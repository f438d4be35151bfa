#ifndef TILTWALL_BOUNDS_HPP
#define TILTWALL_BOUNDS_HPP

#include "tiltwall/tilt.hpp"

#include <string>

namespace tiltwall {

enum class BoundStatus { Pass, Violate, Equality, NotApplicable };

struct BoundVerdict {
    BoundStatus status;
    std::optional<Rat> bound_value;
    std::string reason; // enumerated tag, e.g. "delta-negative", "ch2-over-bound", "equality-rider-rank"

    friend bool operator==(const BoundVerdict&, const BoundVerdict&) = default;
};

/// Delta >= 0 test; equality flagged.
BoundVerdict bogomolov_check(const ChernCharacter& v, const FanoContext& ctx);

/// Per-degree upper bound for H ch2 / H^3 ch0 at Mumford slope mu; the irrational
/// window endpoints are decided exactly on mu^2.
BoundVerdict li_ch2_bound(const FanoContext& ctx, const Rat& mu);

/// Compares ch2/(d ch0) against li_ch2_bound(mu); exact equality triggers the
/// rank rider (only ranks 1 and 2 survive equality).  Verdicts are
/// "eliminates-if-stable": stability of the object is the caller's burden.
BoundVerdict li_check(const ChernCharacter& v, const FanoContext& ctx);

/// Maximal untwisted ch3 permitted by
///   alpha^2 Delta + 4 (H ch2^b)^2 - 6 (H^2 ch1^b) ch3^b >= 0.
/// alpha_sq may be 0 (limit instance).  Throws DomainError when H^2 ch1^b = 0.
Rat bms_ch3_bound(const ChernCharacter& v, const Rat& alpha_sq, const Rat& beta,
                  const FanoContext& ctx);

inline Rat bms_ch3_bound(const ChernCharacter& v, const TiltPoint& pt, const FanoContext& ctx) {
    return bms_ch3_bound(v, pt.alpha_sq, pt.beta, ctx);
}

} // namespace tiltwall

#endif
