#ifndef TILTWALL_WALLS_HPP
#define TILTWALL_WALLS_HPP

#include "tiltwall/bounds.hpp"

#include <array>
#include <set>
#include <utility>
#include <vector>

namespace tiltwall {

struct UnboundedSearchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Tag {
    Proportional,
    ZeroPart,
    SignClash,
    DeltaViolation,
    LatticeViolation,
    LiEliminated,
    RiderEliminated,
    RequiresCategorical,
    Survives,
};

const char* tag_name(Tag t);
using TagSet = std::set<Tag>;

/// Closed/open rational interval; empty() when degenerate.
struct RatInterval {
    Rat lo, hi;
    bool lo_open = false, hi_open = false;

    bool empty() const {
        return lo > hi || (lo == hi && (lo_open || hi_open));
    }
    bool contains(const Rat& x) const {
        if (x < lo || (x == lo && lo_open)) return false;
        if (x > hi || (x == hi && hi_open)) return false;
        return true;
    }
    /// Intersects with {x : a x + b >= 0} (or <= 0 when upper).
    void clamp_affine_ge(const Rat& a, const Rat& b);
    void intersect(const RatInterval& other);

    friend bool operator==(const RatInterval&, const RatInterval&) = default;
};

struct WallCandidate {
    ChernCharacter sub;  // level-2, untwisted
    ChernCharacter quot; // target - sub
    std::optional<Rat> alpha_sq;         // exact slope-equality solution
    std::optional<RatInterval> alpha_window; // for interval (proportional / lattice-violation) candidates
    TagSet tags;
    // Provenance: sub rank a, twisted ch1 numerator b = q*ch1^beta,
    // twisted ch2 numerator c = 2 q^2 ch2^beta (null when not on the lattice).
    Int a;
    Int b;
    std::optional<Int> c;
};

struct DestabilizerCase {
    ChernCharacter chP; // level-2, untwisted
    ChernCharacter chQ; // target - P
    int degree;
    TagSet tags;
};

struct CompletenessCertificate {
    enum class Derivation { DeltaInterval, SlopeMonotone, UserCap };
    bool complete;
    Int rank_bound_used;
    Derivation derivation;
};

struct WallEnumeration {
    std::vector<WallCandidate> candidates;
    CompletenessCertificate certificate;

    std::vector<WallCandidate> survivors() const;
};

/// Enumerates numerical-wall candidates 0 -> sub -> target -> quot -> 0 along the
/// vertical line at beta, alpha^2 in (lo, hi].  Certified finite via the
/// delta-interval rank bound unless rank_cap truncates it.
WallEnumeration enumerate_walls_on_line(const ChernCharacter& target, const FanoContext& ctx,
                                        const Rat& beta, const Rat& lo, const Rat& hi,
                                        std::optional<long> rank_cap = std::nullopt);

/// Enumerates integral level-2 pairs P + Q = target on the real axis of the
/// rotated charge at pt (Re Z = 0, ch1^beta <= 0 both sides, Delta >= 0 both sides).
/// Mirror pairs are deduplicated (larger ch0 first).
std::vector<DestabilizerCase> enumerate_axis_destabilizers(const ChernCharacter& target,
                                                           const TiltPoint& pt,
                                                           const FanoContext& ctx);

/// Elimination tags for a sub/quot split: Li / equality-rider certificates on the
/// sheaf-side characters, else requires-categorical (destabilizers) or survives (walls).
TagSet classify_candidate(const WallCandidate& cand, const FanoContext& ctx);
TagSet classify_candidate(const DestabilizerCase& cand, const FanoContext& ctx);

struct IntRange {
    Int lo, hi;
};

/// All integer (a,b,c) with 2a+7b+c = 0, 5b^2 - ac in {0,1},
/// 5(1+b)^2 - (3-a)(1-c) in {0,1}.  Default ranges: a in [0,3] with b in the
/// heart window b + 7a/10 in [0, 11/10].
std::vector<std::array<Int, 3>> check_case1_diophantine(std::optional<IntRange> a_range = std::nullopt,
                                                        std::optional<IntRange> b_range = std::nullopt);

/// ch(P) = n ch(O(-1)), ch(G) = -(2,0,-2,0), ch(Q) = ch(G) - ch(P);
/// returns (chi(O(-1), Q), chi(P, Q)) = (-2d-n, -2nd-n^2).
std::pair<Rat, Rat> lemma_5_5_pairings(int n, const FanoContext& ctx);

} // namespace tiltwall

#endif
