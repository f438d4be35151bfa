#include "tiltwall/walls.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <algorithm>

namespace tiltwall {

const char* tag_name(Tag t) {
    switch (t) {
    case Tag::Proportional: return "proportional";
    case Tag::ZeroPart: return "zero-part";
    case Tag::SignClash: return "sign-clash";
    case Tag::DeltaViolation: return "delta-violation";
    case Tag::LatticeViolation: return "lattice-violation";
    case Tag::LiEliminated: return "li-eliminated";
    case Tag::RiderEliminated: return "rider-eliminated";
    case Tag::RequiresCategorical: return "requires-categorical";
    case Tag::Survives: return "survives";
    }
    return "?";
}

void RatInterval::clamp_affine_ge(const Rat& a, const Rat& b) {
    // Keep {x : a x + b >= 0}.
    if (a == 0) {
        if (b < 0) { lo = 1; hi = 0; }
        return;
    }
    const Rat root = -b / a;
    if (a > 0)
        intersect({root, hi, false, hi_open});
    else
        intersect({lo, root, lo_open, false});
}

void RatInterval::intersect(const RatInterval& other) {
    if (other.lo > lo || (other.lo == lo && other.lo_open)) {
        lo = other.lo;
        lo_open = other.lo_open;
    }
    if (other.hi < hi || (other.hi == hi && other.hi_open)) {
        hi = other.hi;
        hi_open = other.hi_open;
    }
}

namespace {

bool is_zero2(const ChernCharacter& v) {
    return v.ch0 == 0 && v.ch1 == 0 && v.ch2 == 0;
}

bool proportional2(const ChernCharacter& v, const ChernCharacter& w) {
    return v.ch0 * w.ch1 == w.ch0 * v.ch1 && v.ch0 * w.ch2 == w.ch0 * v.ch2 &&
           v.ch1 * w.ch2 == w.ch1 * v.ch2;
}

Int gcd_rank_c1(const ChernCharacter& v) {
    const Int a = abs(numerator(v.ch0));
    const Int b = abs(numerator(v.ch1));
    return boost::integer::gcd(a, b);
}

/// Li / equality-rider elimination certificates on one sheaf-side character.
/// The bound only eliminates stable objects, so a certificate is claimed only
/// for rigid (Delta = 0) primitive classes (strict case) or primitive classes
/// (rider case).
void add_li_tags(const ChernCharacter& part, const FanoContext& ctx, TagSet& tags) {
    if (part.ch0 == 0) return;
    const ChernCharacter sheaf = part.ch0 > 0 ? part : -part;
    const BoundVerdict v = li_check(sheaf, ctx);
    if (v.status != BoundStatus::Violate) return;
    if (gcd_rank_c1(sheaf) != 1) return;
    if (v.reason == "equality-rider-rank")
        tags.insert(Tag::RiderEliminated);
    else if (discriminant(sheaf, ctx) == 0)
        tags.insert(Tag::LiEliminated);
}

TagSet classify_split(const ChernCharacter& sub, const ChernCharacter& quot,
                      const FanoContext& ctx, TagSet tags, bool wall_context) {
    const bool structural =
        tags.count(Tag::Proportional) || tags.count(Tag::ZeroPart) ||
        tags.count(Tag::SignClash) || tags.count(Tag::DeltaViolation) ||
        tags.count(Tag::LatticeViolation);
    if (structural) {
        if (wall_context && tags.count(Tag::ZeroPart)) tags.insert(Tag::RequiresCategorical);
        return tags;
    }
    add_li_tags(sub, ctx, tags);
    add_li_tags(quot, ctx, tags);
    if (tags.empty()) tags.insert(wall_context ? Tag::Survives : Tag::RequiresCategorical);
    return tags;
}

struct LineFrame {
    FanoContext ctx;
    ChernCharacter target;
    Rat beta;
    Rat T1, T2, Dt;
    Int q, p;   // beta = p/q, q > 0, reduced
    Int B1;     // q * T1

    Rat untwist_ch2(const Rat& x2, const Rat& c1, const Rat& r) const {
        const Rat d(ctx.degree);
        return x2 + beta * d * c1 - beta * beta * d / 2 * r;
    }
    /// Base point of the x2 lattice for a sub with integer (r, c1): c2 runs over
    /// c2_base + Z with 2 c2_base = (d c1^2 mod 2).
    Rat x2_base(const Int& r, const Int& c1) const {
        const Int par = ((ctx.degree * c1 * c1) % 2 + 2) % 2;
        const Rat c2_base(par, 2);
        const Rat d(ctx.degree);
        return c2_base - beta * d * Rat(c1) + beta * beta * d / 2 * Rat(r);
    }
};

/// Integers k with base + k inside the interval.
std::vector<Rat> lattice_points(const RatInterval& iv, const Rat& base) {
    std::vector<Rat> out;
    if (iv.empty()) return out;
    Int k = ceil_int(iv.lo - base);
    if (iv.lo_open && base + Rat(k) == iv.lo) ++k;
    Int k_hi = floor_int(iv.hi - base);
    if (iv.hi_open && base + Rat(k_hi) == iv.hi) --k_hi;
    for (; k <= k_hi; ++k) out.push_back(base + Rat(k));
    return out;
}

} // namespace

std::vector<WallCandidate> WallEnumeration::survivors() const {
    std::vector<WallCandidate> out;
    for (const auto& c : candidates)
        if (c.tags.count(Tag::Survives)) out.push_back(c);
    return out;
}

namespace {

TagSet structural_tags(const ChernCharacter& sub, const ChernCharacter& quot,
                       const FanoContext& ctx, TagSet tags, bool wall_context) {
    if (!satisfies_lattice(sub, ctx) || !satisfies_lattice(quot, ctx))
        tags.insert(Tag::LatticeViolation);
    if (is_zero2(sub) || is_zero2(quot)) tags.insert(Tag::ZeroPart);
    else if (proportional2(sub, quot)) tags.insert(Tag::Proportional);
    const Rat dt = discriminant(sub + quot, ctx);
    for (const auto* part : {&sub, &quot}) {
        const Rat delta = discriminant(*part, ctx);
        // The upper Delta window is a wall condition only.
        if (delta < 0 || (wall_context && delta > dt)) tags.insert(Tag::DeltaViolation);
    }
    return tags;
}

} // namespace

TagSet classify_candidate(const WallCandidate& cand, const FanoContext& ctx) {
    return classify_split(cand.sub, cand.quot, ctx,
                          structural_tags(cand.sub, cand.quot, ctx, cand.tags, true), true);
}

TagSet classify_candidate(const DestabilizerCase& cand, const FanoContext& ctx) {
    return classify_split(cand.chP, cand.chQ, ctx,
                          structural_tags(cand.chP, cand.chQ, ctx, cand.tags, false), false);
}

WallEnumeration enumerate_walls_on_line(const ChernCharacter& target, const FanoContext& ctx,
                                        const Rat& beta, const Rat& lo, const Rat& hi,
                                        std::optional<long> rank_cap) {
    if (lo < 0 || hi <= lo) throw DomainError("need 0 <= lo < hi");
    if (!satisfies_lattice(target, ctx))
        throw DomainError("target must be an integral lattice character");
    const Rat d(ctx.degree);
    LineFrame f{ctx, target, beta, {}, {}, {}, {}, {}, {}};
    f.T1 = target.ch1 - beta * target.ch0;
    if (f.T1 <= 0) throw DomainError("target must have positive twisted ch1 at beta");
    f.T2 = target.ch2 - beta * d * target.ch1 + beta * beta * d / 2 * target.ch0;
    f.Dt = discriminant(target, ctx);
    f.q = denominator(beta);
    f.p = numerator(beta);
    {
        const Rat b1 = Rat(f.q) * f.T1;
        if (!is_integer(b1)) throw DomainError("target twisted ch1 not on the beta lattice");
        f.B1 = numerator(b1);
    }
    const Rat R = target.ch0;
    const Rat min_x2 = Rat(1, 2 * f.q * f.q); // smallest nonzero |x2| on the lattice

    // Derived rank bound (delta-interval certificate): for interior x1 = k/q the
    // window 0 <= Delta(sub) <= Delta(target) forces rank * x2 into [A1, A2].
    Int derived = 1;
    for (Int k = 1; k < f.B1; ++k) {
        const Rat x1 = Rat(k, f.q);
        const Rat A2 = d * x1 * x1 / 2;
        const Rat A1 = (d * d * x1 * x1 - f.Dt) / (2 * d);
        const Rat M = std::max(abs_rat(A1), abs_rat(A2));
        derived = std::max(derived, floor_int(M / min_x2));
        // x2 = 0 branch: Delta(quot) is affine in the rank.
        if (d * d * x1 * x1 >= 0 && d * d * x1 * x1 <= f.Dt && f.T2 != 0) {
            // 0 <= d^2 (T1-x1)^2 - 2d (R - r) T2 <= Dt
            const Rat base = d * d * (f.T1 - x1) * (f.T1 - x1);
            const Rat r_a = (base - f.Dt) / (2 * d * f.T2);
            const Rat r_b = base / (2 * d * f.T2);
            const Rat r_lo = R - std::max(r_a, r_b);
            const Rat r_hi = R - std::min(r_a, r_b);
            derived = std::max(derived, floor_int(std::max(abs_rat(r_lo), abs_rat(r_hi))) + 1);
        }
    }
    CompletenessCertificate cert{true, derived, CompletenessCertificate::Derivation::DeltaInterval};
    if (rank_cap) {
        cert.rank_bound_used = Int(*rank_cap);
        if (Int(*rank_cap) < derived) {
            cert.complete = false;
            cert.derivation = CompletenessCertificate::Derivation::UserCap;
        }
    } else if (derived > 1000000) {
        throw UnboundedSearchError("derived rank bound " + derived.str() +
                                   " exceeds the tractable limit; pass a rank cap");
    }
    const Int B = cert.rank_bound_used;

    std::vector<WallCandidate> out;
    const RatInterval s_range{lo, hi, true, false};

    auto push = [&](WallCandidate cand) {
        cand.tags = classify_split(cand.sub, cand.quot, ctx, cand.tags, true);
        out.push_back(std::move(cand));
    };

    // Torsion sub-family (a = b = 0): sits where Re Z(target) = 0.
    if (R != 0) {
        const Rat s_star = 2 * f.T2 / (d * R);
        if (s_range.contains(s_star)) {
            WallCandidate cand;
            cand.sub = {Rat(0), Rat(0), Rat(0), std::nullopt};
            cand.quot = target;
            cand.alpha_sq = s_star;
            cand.tags = {Tag::ZeroPart};
            cand.a = 0;
            cand.b = 0;
            push(std::move(cand));
        }
    }

    for (Int r = -B; r <= B; ++r) {
        const Rat rr(r);
        const Int c1_lo = ceil_int(beta * rr);
        const Int c1_hi = floor_int(beta * rr + f.T1);
        for (Int c1 = c1_lo; c1 <= c1_hi; ++c1) {
            const Rat x1 = Rat(c1) - beta * rr;
            const Int k = numerator(Rat(f.q) * x1);
            if (x1 == 0 || x1 == f.T1) {
                // Endpoint branches: the sub or quot has twisted ch1 = 0; with
                // nonzero rank such a piece has Delta = -2 d r x2 < 0 whenever the
                // slope-equality alpha^2 = 2 x2/(d r) is positive, so these are
                // pure sign-clash candidates, surfaced within the Delta window.
                const bool sub_side = (x1 == 0);
                const Rat rho = sub_side ? rr : R - rr; // rank of the endpoint piece
                if (rho == 0) continue; // torsion family handled above / trivial split
                RatInterval x2_iv{Rat(-1), Rat(1), false, false};
                // alpha^2 = 2 x2 / (d rho) in (lo, hi]
                if (rho > 0)
                    x2_iv = {lo * d * rho / 2, hi * d * rho / 2, true, false};
                else
                    x2_iv = {hi * d * rho / 2, lo * d * rho / 2, false, true};
                // Delta window for the complementary piece (twisted ch1 = T1,
                // rank oc, x2 = T2 - x2), affine in x2.
                const Rat oc = sub_side ? R - rr : rr;
                // Delta(other) = d^2 y1'^2 - 2 d oc (T2 - x2) with y1' = T1 (its twisted ch1).
                // 0 <= Delta(other) <= Dt.  The endpoint piece itself always has
                // Delta < 0 at positive alpha^2 (the sign clash), so its own
                // window is deliberately not imposed: these candidates are
                // surfaced for the record, never as survivors.
                {
                    // a x2 + b >= 0 with Delta(other) = d^2 T1^2 - 2 d oc T2 + 2 d oc x2
                    const Rat a_up = 2 * d * oc;
                    const Rat b_up = d * d * f.T1 * f.T1 - 2 * d * oc * f.T2;
                    x2_iv.clamp_affine_ge(a_up, b_up);
                    x2_iv.clamp_affine_ge(-a_up, f.Dt - b_up);
                }
                if (x2_iv.empty()) continue;
                const Int piece_r_num = numerator(rho); // rho integral here
                const Rat base = f.x2_base(piece_r_num, sub_side ? c1 : numerator(target.ch1) - c1);
                for (const Rat& x2 : lattice_points(x2_iv, base)) {
                    if (x2 == 0) continue; // alpha^2 = 0 excluded
                    WallCandidate cand;
                    const Rat piece_c1 = sub_side ? Rat(c1) : target.ch1 - Rat(c1);
                    ChernCharacter piece{rho, piece_c1, f.untwist_ch2(x2, piece_c1, rho),
                                         std::nullopt};
                    if (sub_side) {
                        cand.sub = piece;
                        cand.quot = target - piece;
                    } else {
                        cand.quot = piece;
                        cand.sub = target - piece;
                    }
                    cand.alpha_sq = 2 * x2 / (d * rho);
                    cand.tags = {Tag::SignClash};
                    cand.a = numerator(cand.sub.ch0);
                    cand.b = sub_side ? Int(0) : f.B1;
                    {
                        const Rat sub_x2 = sub_side ? x2 : f.T2 - x2;
                        cand.c = numerator(2 * Rat(f.q * f.q) * sub_x2);
                    }
                    push(std::move(cand));
                }
                continue;
            }

            // Interior branch.
            const Rat K = f.T1 * rr - R * x1;
            if (K == 0) {
                // Proportional ray: wall everywhere iff x2 = T2 x1 / T1 is on the lattice.
                const Rat x2_star = f.T2 * x1 / f.T1;
                const Rat base = f.x2_base(r, c1);
                if (is_integer(x2_star - base)) {
                    WallCandidate cand;
                    cand.sub = {rr, Rat(c1), f.untwist_ch2(x2_star, Rat(c1), rr), std::nullopt};
                    cand.quot = target - cand.sub;
                    cand.alpha_window = s_range;
                    cand.tags = {Tag::Proportional};
                    cand.a = r;
                    cand.b = k;
                    cand.c = numerator(2 * Rat(f.q * f.q) * x2_star);
                    push(std::move(cand));
                }
                continue;
            }
            // Slope equality: s = 2 (x2 T1 - T2 x1) / (d K), affine and monotone in x2.
            auto s_of = [&](const Rat& x2) { return 2 * (x2 * f.T1 - f.T2 * x1) / (d * K); };
            auto x2_of = [&](const Rat& s) { return (s * d * K / 2 + f.T2 * x1) / f.T1; };
            RatInterval x2_iv;
            {
                const Rat xa = x2_of(lo), xb = x2_of(hi);
                if (K > 0)
                    x2_iv = {xa, xb, true, false};
                else
                    x2_iv = {xb, xa, false, true};
            }
            // 0 <= Delta(sub) = d^2 x1^2 - 2 d r x2 <= Dt
            x2_iv.clamp_affine_ge(-2 * d * rr, d * d * x1 * x1);
            x2_iv.clamp_affine_ge(2 * d * rr, f.Dt - d * d * x1 * x1);
            // 0 <= Delta(quot) = d^2 (T1-x1)^2 - 2 d (R-r)(T2-x2) <= Dt
            {
                const Rat qr = R - rr;
                const Rat base_q = d * d * (f.T1 - x1) * (f.T1 - x1) - 2 * d * qr * f.T2;
                x2_iv.clamp_affine_ge(2 * d * qr, base_q);
                x2_iv.clamp_affine_ge(-2 * d * qr, f.Dt - base_q);
            }
            if (x2_iv.empty()) continue;
            const Rat base = f.x2_base(r, c1);
            const auto pts = lattice_points(x2_iv, base);
            if (pts.empty()) {
                // Nonempty alpha window with no lattice point: surfaced, not dropped.
                WallCandidate cand;
                const Rat x2_ref = K > 0 ? x2_iv.hi : x2_iv.lo; // closed edge
                cand.sub = {rr, Rat(c1), f.untwist_ch2(x2_ref, Rat(c1), rr), std::nullopt};
                cand.quot = target - cand.sub;
                const Rat sa = s_of(x2_iv.lo), sb = s_of(x2_iv.hi);
                if (K > 0)
                    cand.alpha_window = RatInterval{sa, sb, x2_iv.lo_open, x2_iv.hi_open};
                else
                    cand.alpha_window = RatInterval{sb, sa, x2_iv.hi_open, x2_iv.lo_open};
                cand.tags = {Tag::LatticeViolation};
                cand.a = r;
                cand.b = k;
                push(std::move(cand));
                continue;
            }
            for (const Rat& x2 : pts) {
                WallCandidate cand;
                cand.sub = {rr, Rat(c1), f.untwist_ch2(x2, Rat(c1), rr), std::nullopt};
                cand.quot = target - cand.sub;
                cand.alpha_sq = s_of(x2);
                cand.a = r;
                cand.b = k;
                cand.c = numerator(2 * Rat(f.q * f.q) * x2);
                push(std::move(cand));
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const WallCandidate& l, const WallCandidate& rch) {
        if (l.a != rch.a) return l.a < rch.a;
        if (l.b != rch.b) return l.b < rch.b;
        const Int lc = l.c.value_or(Int(0)), rc = rch.c.value_or(Int(0));
        if (lc != rc) return lc < rc;
        return l.c.has_value() < rch.c.has_value();
    });
    return {std::move(out), cert};
}

std::vector<DestabilizerCase> enumerate_axis_destabilizers(const ChernCharacter& target,
                                                           const TiltPoint& pt,
                                                           const FanoContext& ctx) {
    const Rat d(ctx.degree);
    const Rat s = pt.alpha_sq, b = pt.beta;
    // Precondition: target itself lies on the real axis (Re Z = 0).
    {
        const ChargeValue z = central_charge(target, pt, ctx);
        if (z.re != 0) throw DomainError("target is not on the rotated real axis at pt");
    }
    const Rat T1t = target.ch1 - b * target.ch0; // twisted ch1 of the target, expected <= 0
    if (T1t > 0) throw DomainError("axis enumeration expects twisted ch1(target) <= 0");

    // Re Z(P) = 0 pins x2(P) = (s d / 2) p0, hence
    //   p2 = (d/2)(s - b^2) p0 + b d p1.
    // Delta(P) >= 0 becomes x1(P)^2 >= s p0^2 with x1(P) in [T1t, 0], so
    // p0^2 <= T1t^2 / s.
    std::vector<DestabilizerCase> out;
    std::vector<std::pair<ChernCharacter, ChernCharacter>> seen;
    Int P0 = 0;
    while (Rat((P0 + 1) * (P0 + 1)) * s <= T1t * T1t) ++P0;
    for (Int p0 = -P0; p0 <= P0; ++p0) {
        const Rat rp0(p0);
        const Int p1_lo = ceil_int(b * rp0 + T1t);
        const Int p1_hi = floor_int(b * rp0);
        for (Int p1 = p1_lo; p1 <= p1_hi; ++p1) {
            const Rat rp1(p1);
            const Rat x1 = rp1 - b * rp0;
            if (x1 * x1 < s * rp0 * rp0) continue; // Delta(P) < 0
            const Rat x1q = T1t - x1;
            const Rat q0 = target.ch0 - rp0;
            if (x1q * x1q < s * q0 * q0) continue; // Delta(Q) < 0
            const Rat p2 = d / 2 * (s - b * b) * rp0 + b * d * rp1;
            ChernCharacter P{rp0, rp1, p2, std::nullopt};
            if (!satisfies_lattice(ChernCharacter{rp0, rp1, p2, std::nullopt}, ctx)) continue;
            ChernCharacter Q = target - P;
            // Canonical orientation: lexicographically larger character first.
            auto lex_less = [](const ChernCharacter& u, const ChernCharacter& v) {
                if (u.ch0 != v.ch0) return u.ch0 < v.ch0;
                if (u.ch1 != v.ch1) return u.ch1 < v.ch1;
                return u.ch2 < v.ch2;
            };
            if (lex_less(P, Q)) std::swap(P, Q);
            bool dup = false;
            for (const auto& pr : seen)
                if (pr.first == P && pr.second == Q) { dup = true; break; }
            if (dup) continue;
            seen.emplace_back(P, Q);
            DestabilizerCase cs;
            cs.chP = P;
            cs.chQ = Q;
            cs.degree = ctx.degree;
            if (is_zero2(P) || is_zero2(Q))
                cs.tags = {Tag::ZeroPart};
            else if (proportional2(P, Q))
                cs.tags = {Tag::Proportional};
            cs.tags = classify_split(cs.chP, cs.chQ, ctx, cs.tags, false);
            out.push_back(std::move(cs));
        }
    }
    std::sort(out.begin(), out.end(), [](const DestabilizerCase& l, const DestabilizerCase& r) {
        auto key = [](const DestabilizerCase& c) {
            return std::array<Rat, 3>{c.chP.ch0, c.chP.ch1, c.chP.ch2};
        };
        return key(l) < key(r);
    });
    return out;
}

std::vector<std::array<Int, 3>> check_case1_diophantine(std::optional<IntRange> a_range,
                                                        std::optional<IntRange> b_range) {
    const IntRange ar = a_range.value_or(IntRange{0, 3});
    std::vector<std::array<Int, 3>> out;
    for (Int a = ar.lo; a <= ar.hi; ++a) {
        Int b_lo, b_hi;
        if (b_range) {
            b_lo = b_range->lo;
            b_hi = b_range->hi;
        } else {
            // Heart window at beta = -7/10 for the ambient rank-3 object:
            // 0 <= b + 7a/10 <= 11/10.
            b_lo = ceil_int(Rat(-7 * a, 10));
            b_hi = floor_int(Rat(11, 10) - Rat(7 * a, 10));
        }
        for (Int b = b_lo; b <= b_hi; ++b) {
            const Int c = -2 * a - 7 * b;
            const Int u = 5 * b * b - a * c;
            if (u != 0 && u != 1) continue;
            const Int v = 5 * (1 + b) * (1 + b) - (3 - a) * (1 - c);
            if (v != 0 && v != 1) continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

std::pair<Rat, Rat> lemma_5_5_pairings(int n, const FanoContext& ctx) {
    if (n < 1) throw DomainError("n must be positive");
    const ChernCharacter o_minus = line_bundle_character(Rat(-1), ctx);
    const ChernCharacter P = Rat(n) * o_minus;
    const ChernCharacter G = -ChernCharacter{Rat(2), Rat(0), Rat(-2), Rat(0)};
    const ChernCharacter Q = G - P;
    return {euler_pairing(o_minus, Q, ctx), euler_pairing(P, Q, ctx)};
}

} // namespace tiltwall
