#include "tiltwall/chern.hpp"

namespace tiltwall {

namespace {

std::optional<Rat> add_opt(const std::optional<Rat>& a, const std::optional<Rat>& b) {
    if (a && b) return *a + *b;
    return std::nullopt;
}

} // namespace

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b) {
    return {a.ch0 + b.ch0, a.ch1 + b.ch1, a.ch2 + b.ch2, add_opt(a.ch3, b.ch3)};
}

ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b) {
    return a + (-b);
}

ChernCharacter operator-(const ChernCharacter& a) {
    return {-a.ch0, -a.ch1, -a.ch2, a.ch3 ? std::optional<Rat>(-*a.ch3) : std::nullopt};
}

ChernCharacter operator*(const Rat& s, const ChernCharacter& a) {
    return {s * a.ch0, s * a.ch1, s * a.ch2, a.ch3 ? std::optional<Rat>(s * *a.ch3) : std::nullopt};
}

FanoContext FanoContext::of_degree(int d) {
    if (d < 1 || d > 5) throw DomainError("degree must lie in {1..5}");
    return FanoContext{d};
}

ChernCharacter FanoContext::todd() const {
    return {Rat(1), Rat(1), Rat(1) + Rat(degree, 3), Rat(1)};
}

ChernCharacter mul(const ChernCharacter& a, const ChernCharacter& b, const FanoContext& ctx) {
    const Rat d(ctx.degree);
    ChernCharacter c;
    c.ch0 = a.ch0 * b.ch0;
    c.ch1 = a.ch0 * b.ch1 + a.ch1 * b.ch0;
    c.ch2 = a.ch0 * b.ch2 + a.ch2 * b.ch0 + d * a.ch1 * b.ch1; // H*H = dL
    if (a.has_ch3() && b.has_ch3())
        c.ch3 = a.ch0 * *b.ch3 + *a.ch3 * b.ch0 + a.ch1 * b.ch2 + a.ch2 * b.ch1; // H*L = P
    return c;
}

bool satisfies_lattice(const ChernCharacter& v, const FanoContext& ctx) {
    if (!is_integer(v.ch0) || !is_integer(v.ch1)) return false;
    const Rat twice = 2 * v.ch2;
    if (!is_integer(twice)) return false;
    const Int parity = (numerator(twice) - ctx.degree * numerator(v.ch1) * numerator(v.ch1)) % 2;
    if (parity != 0) return false;
    if (v.ch3 && !is_integer(6 * *v.ch3)) return false;
    return true;
}

ChernCharacter make_character(const Rat& ch0, const Rat& ch1, const Rat& ch2,
                              const std::optional<Rat>& ch3, bool assert_lattice,
                              const FanoContext& ctx) {
    ChernCharacter v{ch0, ch1, ch2, ch3};
    if (assert_lattice && !satisfies_lattice(v, ctx))
        throw LatticeError("character violates the integral lattice (2ch2 = d ch1^2 mod 2)");
    return v;
}

ChernCharacter line_bundle_character(const Rat& n, const FanoContext& ctx) {
    const Rat d(ctx.degree);
    return {Rat(1), n, n * n * d / 2, n * n * n * d / 6};
}

ChernCharacter twist(const ChernCharacter& v, const Rat& beta, const FanoContext& ctx) {
    ChernCharacter w = mul(line_bundle_character(-beta, ctx), v, ctx);
    if (!v.has_ch3()) w.ch3.reset();
    return w;
}

ChernCharacter dual(const ChernCharacter& v) {
    return {v.ch0, -v.ch1, v.ch2, v.ch3 ? std::optional<Rat>(-*v.ch3) : std::nullopt};
}

Rat discriminant(const ChernCharacter& v, const FanoContext& ctx) {
    const Rat d(ctx.degree);
    return d * d * v.ch1 * v.ch1 - 2 * d * v.ch0 * v.ch2;
}

SlopeValue slope_mumford(const ChernCharacter& v, const FanoContext&) {
    if (v.ch0 == 0) return SlopeValue::infinite();
    return SlopeValue::finite(v.ch1 / v.ch0);
}

Rat euler_pairing(const ChernCharacter& v, const ChernCharacter& w, const FanoContext& ctx) {
    if (!v.has_ch3() || !w.has_ch3())
        throw MissingCh3Error("euler_pairing needs ch3 on both characters");
    const ChernCharacter g = mul(mul(dual(v), w, ctx), ctx.todd(), ctx);
    return *g.ch3;
}

Rat HilbertPolynomial::operator()(const Rat& m) const {
    return coeff[0] + m * (coeff[1] + m * (coeff[2] + m * coeff[3]));
}

HilbertPolynomial hilbert_polynomial(const ChernCharacter& v, const FanoContext& ctx) {
    if (!v.has_ch3()) throw MissingCh3Error("hilbert_polynomial needs ch3");
    const ChernCharacter triv = line_bundle_character(Rat(0), ctx);
    std::array<Rat, 4> val;
    for (int m = 0; m < 4; ++m)
        val[m] = euler_pairing(triv, mul(v, line_bundle_character(Rat(m), ctx), ctx), ctx);
    // Exact interpolation on m = 0..3.
    HilbertPolynomial p;
    p.coeff[0] = val[0];
    // Forward differences: f(m) = sum_k D_k * C(m, k).
    const Rat d1 = val[1] - val[0];
    const Rat d2 = val[2] - 2 * val[1] + val[0];
    const Rat d3 = val[3] - 3 * val[2] + 3 * val[1] - val[0];
    // C(m,1)=m, C(m,2)=(m^2-m)/2, C(m,3)=(m^3-3m^2+2m)/6.
    p.coeff[1] = d1 - d2 / 2 + d3 / 3;
    p.coeff[2] = d2 / 2 - d3 / 2;
    p.coeff[3] = d3 / 6;
    return p;
}

ChernCharacter solve_character_from_euler_constraints(const std::vector<EulerConstraint>& constraints,
                                                      const FanoContext& ctx) {
    if (constraints.size() < 4)
        throw DomainError("need at least 4 Euler constraints");
    const std::array<ChernCharacter, 4> basis = {
        ChernCharacter{Rat(1), Rat(0), Rat(0), Rat(0)},
        ChernCharacter{Rat(0), Rat(1), Rat(0), Rat(0)},
        ChernCharacter{Rat(0), Rat(0), Rat(1), Rat(0)},
        ChernCharacter{Rat(0), Rat(0), Rat(0), Rat(1)},
    };
    const std::size_t m = constraints.size();
    std::vector<std::array<Rat, 5>> rows(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& con = constraints[i];
        for (int j = 0; j < 4; ++j)
            rows[i][j] = con.side == EulerConstraint::Side::Left
                             ? euler_pairing(con.probe, basis[j], ctx)
                             : euler_pairing(basis[j], con.probe, ctx);
        rows[i][4] = con.value;
    }
    // Gaussian elimination with exact pivoting.
    std::size_t rank = 0;
    for (int col = 0; col < 4 && rank < m; ++col) {
        std::size_t p = rank;
        while (p < m && rows[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(rows[rank], rows[p]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rat f = rows[r][col] / rows[rank][col];
            for (int c = col; c < 5; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    for (std::size_t r = rank; r < m; ++r)
        if (rows[r][4] != 0) throw InconsistentSystemError("Euler constraints are inconsistent");
    if (rank < 4)
        throw SingularSystemError("Euler constraint system has rank " + std::to_string(rank));
    // After full (Jordan) elimination each pivot row holds one variable.
    std::array<Rat, 4> sol;
    for (std::size_t r = 0; r < 4; ++r) {
        int col = 0;
        while (rows[r][col] == 0) ++col;
        sol[col] = rows[r][4] / rows[r][col];
    }
    return {sol[0], sol[1], sol[2], sol[3]};
}

} // namespace tiltwall
