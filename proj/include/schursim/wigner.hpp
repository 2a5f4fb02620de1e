#pragma once

#include <algorithm>
#include <string>

#include "schursim/errors.hpp"
#include "schursim/numbers.hpp"
#include "schursim/spin.hpp"
#include "schursim/sqrt_rational.hpp"

namespace schursim {

namespace detail {

inline void require_jm_pair(HalfInt j, HalfInt m, const char* who) {
    if (!is_valid_spin(j) || !is_valid_mag(j, m))
        throw InvalidQuantumNumbers(std::string(who) + ": invalid (j, m) pair (" + j.str() + ", " + m.str() + ")");
}

struct RacahBounds {
    int t_min;
    int t_max;
    int nu;
    int term_count() const { return t_max - t_min + 1; }
};

/// Summation range of the Racah single-sum formula, plus the nu of the
/// "nu + 1 terms" identity the evaluator asserts at runtime.
inline RacahBounds racah_bounds(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
    const int apd = (j1 + m1).twice() / 2, amd = (j1 - m1).twice() / 2;
    const int bpe = (j2 + m2).twice() / 2, bme = (j2 - m2).twice() / 2;
    const int cpf = (j3 + m3).twice() / 2, cmf = (j3 - m3).twice() / 2;
    const int abc = (j1 + j2 - j3).twice() / 2;
    const int bca = (j2 + j3 - j1).twice() / 2;
    const int cab = (j3 + j1 - j2).twice() / 2;
    RacahBounds b{};
    b.t_min = std::max({0, (j2 - j3 - m1).twice() / 2, (j1 - j3 + m2).twice() / 2});
    b.t_max = std::min({abc, amd, bme});
    b.nu = std::min({apd, amd, bpe, bme, cpf, cmf, abc, bca, cab});
    return b;
}

} // namespace detail

/// Triangle coefficient Delta(abc) = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!,
/// exact. All factorial arguments are nonnegative integers whenever the
/// triangle condition holds.
inline Rational triangle_coeff(HalfInt a, HalfInt b, HalfInt c) {
    if (!is_valid_spin(a) || !is_valid_spin(b) || !is_valid_spin(c))
        throw InvalidQuantumNumbers("triangle_coeff: spins must be nonnegative");
    if (!is_triangle(a, b, c))
        throw TriangleViolation("triangle_coeff(" + a.str() + ", " + b.str() + ", " + c.str() +
                                "): triangle condition violated");
    const int p1 = (a + b - c).twice() / 2;
    const int p2 = (a - b + c).twice() / 2;
    const int p3 = (b + c - a).twice() / 2;
    const int p4 = (a + b + c).twice() / 2 + 1;
    return Rational(factorial(p1) * factorial(p2) * factorial(p3), factorial(p4));
}

/// Wigner 3j symbol (j1 j2 j3; m1 m2 m3) by the Racah single-sum formula.
/// Selection-rule zeros (m1+m2+m3 != 0, triangle failure) return the
/// canonical zero; out-of-domain (j, m) pairs throw, to surface caller bugs.
/// The signed rational sum lands in the scale, the common square-root factor
/// in the radicand.
inline SqrtRational wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
    detail::require_jm_pair(j1, m1, "wigner3j");
    detail::require_jm_pair(j2, m2, "wigner3j");
    detail::require_jm_pair(j3, m3, "wigner3j");
    if ((m1 + m2 + m3).twice() != 0) return SqrtRational::zero();
    if (!is_triangle(j1, j2, j3)) return SqrtRational::zero();

    const auto bounds = detail::racah_bounds(j1, j2, j3, m1, m2, m3);
    if (bounds.term_count() != bounds.nu + 1)
        throw Error("wigner3j: Racah term count " + std::to_string(bounds.term_count()) +
                    " differs from nu+1 = " + std::to_string(bounds.nu + 1));

    const int apd = (j1 + m1).twice() / 2, amd = (j1 - m1).twice() / 2;
    const int bpe = (j2 + m2).twice() / 2, bme = (j2 - m2).twice() / 2;
    const int cpf = (j3 + m3).twice() / 2, cmf = (j3 - m3).twice() / 2;
    const int abc = (j1 + j2 - j3).twice() / 2;
    const int cbd = (j3 - j2 + m1).twice() / 2; // c - b + d
    const int cae = (j3 - j1 - m2).twice() / 2; // c - a - e

    const int abf = (j1 - j2 - m3).twice() / 2; // a - b - f, integral for valid symbols
    Rational sum = 0;
    for (int t = bounds.t_min; t <= bounds.t_max; ++t) {
        Integer denom = factorial(t) * factorial(cbd + t) * factorial(cae + t) * factorial(abc - t) *
                        factorial(amd - t) * factorial(bme - t);
        const bool negative = ((t + abf) % 2 + 2) % 2 == 1;
        Rational term(Integer(1), denom);
        if (negative)
            sum -= term;
        else
            sum += term;
    }

    Rational radicand = triangle_coeff(j1, j2, j3);
    radicand *= Rational(factorial(apd) * factorial(bpe) * factorial(cpf) * factorial(amd) * factorial(bme) *
                         factorial(cmf));
    return SqrtRational(sum, radicand);
}

/// Clebsch-Gordan coefficient C^{J,M}_{j1,m1; j2,m2} in the Condon-Shortley
/// convention:
///   C = (-1)^{M + j1 - j2} sqrt(2J+1) * (j1 j2 J; m1 m2 -M).
/// Returns canonical zero when M != m1 + m2.
inline SqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
    detail::require_jm_pair(j1, m1, "clebsch_gordan");
    detail::require_jm_pair(j2, m2, "clebsch_gordan");
    detail::require_jm_pair(J, M, "clebsch_gordan");
    if ((m1 + m2).twice() != M.twice()) return SqrtRational::zero();
    SqrtRational three_j = wigner3j(j1, j2, J, m1, m2, -M);
    if (three_j.is_zero()) return three_j;
    // M + j1 - j2 is an even twice-value here, so the sign is well-defined.
    const int twice_exp = M.twice() + j1.twice() - j2.twice();
    const bool negative = ((twice_exp / 2) % 2 + 2) % 2 == 1;
    SqrtRational value = three_j * SqrtRational::sqrt_of(Rational(J.twice() + 1));
    return negative ? -value : value;
}

} // namespace schursim
