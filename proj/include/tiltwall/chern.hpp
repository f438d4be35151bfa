#ifndef TILTWALL_CHERN_HPP
#define TILTWALL_CHERN_HPP

#include "tiltwall/rational.hpp"

#include <array>
#include <optional>
#include <vector>

namespace tiltwall {

struct LatticeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingCh3Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InconsistentSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Character in the (1, H, L, P) basis; ring rules H*H = d*L, H*L = P,
/// all higher products zero.  ch3 absent means a level-2 truncation.
struct ChernCharacter {
    Rat ch0;
    Rat ch1;
    Rat ch2;
    std::optional<Rat> ch3;

    bool has_ch3() const { return ch3.has_value(); }

    friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;
};

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b);
ChernCharacter operator-(const ChernCharacter& a);
ChernCharacter operator*(const Rat& s, const ChernCharacter& a);

struct FanoContext {
    int degree; // H^3 = d, in {1..5}

    static FanoContext of_degree(int d);

    /// td(T_X) = (1, 1, 1 + d/3, 1).
    ChernCharacter todd() const;
};

/// Truncated-ring product; result ch3 present only when both factors carry ch3.
ChernCharacter mul(const ChernCharacter& a, const ChernCharacter& b, const FanoContext& ctx);

/// ch0, ch1 in Z; 2*ch2 in Z with 2*ch2 = d*ch1^2 (mod 2); 6*ch3 in Z when present.
bool satisfies_lattice(const ChernCharacter& v, const FanoContext& ctx);

ChernCharacter make_character(const Rat& ch0, const Rat& ch1, const Rat& ch2,
                              const std::optional<Rat>& ch3, bool assert_lattice,
                              const FanoContext& ctx);

/// ch(O(n)) = e^{nH} = (1, n, n^2 d/2, n^3 d/6).
ChernCharacter line_bundle_character(const Rat& n, const FanoContext& ctx);

/// ch^beta = e^{-beta H} * ch.
ChernCharacter twist(const ChernCharacter& v, const Rat& beta, const FanoContext& ctx);

/// Negates the odd-degree parts.
ChernCharacter dual(const ChernCharacter& v);

/// (d*ch1)^2 - 2*d*ch0*ch2; twist-invariant.
Rat discriminant(const ChernCharacter& v, const FanoContext& ctx);

/// Slope value with the +infinity convention for rank 0.
struct SlopeValue {
    bool is_infinite;
    Rat value;          // meaningful when finite
    bool negative_sign; // annotation: the infinite case arose with negative real part / rank

    static SlopeValue finite(const Rat& v) { return {false, v, false}; }
    static SlopeValue infinite(bool negative = false) { return {true, Rat(0), negative}; }

    friend bool operator==(const SlopeValue&, const SlopeValue&) = default;
};

SlopeValue slope_mumford(const ChernCharacter& v, const FanoContext& ctx);

/// chi(v, w) = deg-3 coefficient of dual(v) * w * todd.
Rat euler_pairing(const ChernCharacter& v, const ChernCharacter& w, const FanoContext& ctx);

struct HilbertPolynomial {
    std::array<Rat, 4> coeff; // a0 + a1 m + a2 m^2 + a3 m^3

    Rat operator()(const Rat& m) const;

    friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;
};

/// Coefficients of m -> chi(v * e^{mH}).
HilbertPolynomial hilbert_polynomial(const ChernCharacter& v, const FanoContext& ctx);

struct EulerConstraint {
    enum class Side { Left, Right }; // Left: chi(probe, F); Right: chi(F, probe)
    ChernCharacter probe;
    Side side;
    Rat value;
};

/// Unique character F with all constraints satisfied; throws SingularSystemError /
/// InconsistentSystemError otherwise.
ChernCharacter solve_character_from_euler_constraints(const std::vector<EulerConstraint>& constraints,
                                                      const FanoContext& ctx);

} // namespace tiltwall

#endif
