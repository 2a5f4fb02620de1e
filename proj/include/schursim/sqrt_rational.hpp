#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schursim/errors.hpp"
#include "schursim/numbers.hpp"

namespace schursim {

/// Arbitrary-precision binary float: value = mantissa * 2^exponent2.
/// Produced by SqrtRational::round_to_bits, which guarantees a stated
/// relative error; kept exact here so callers can verify that guarantee.
struct DyadicFloat {
    Integer mantissa;
    long exponent2 = 0;

    Rational to_rational() const {
        if (exponent2 >= 0) return Rational(mantissa << exponent2);
        return Rational(mantissa, Integer(1) << -exponent2);
    }

    double to_double() const {
        return std::ldexp(mantissa.convert_to<double>(), static_cast<int>(exponent2));
    }
};

namespace detail {

/// Splits |n| into root^2 * sqfree with sqfree square-free, by trial
/// division. Inputs here are built from factorial ratios, so every prime
/// factor is small and the loop terminates quickly; a cap plus a perfect
/// square probe keeps pathological user inputs from spinning.
inline void square_free_split(Integer n, Integer& root, Integer& sqfree) {
    root = 1;
    sqfree = 1;
    if (n < 0) n = -n;
    static constexpr std::int64_t kTrialCap = 1 << 20;
    for (Integer d = 2; d * d <= n; d = (d == 2 ? 3 : d + 2)) {
        if (d > kTrialCap) break;
        if (n % d == 0) {
            unsigned e = 0;
            do {
                n /= d;
                ++e;
            } while (n % d == 0);
            if (e >= 2) root *= pow(d, e / 2);
            if (e & 1) sqfree *= d;
        }
    }
    if (n > 1) {
        const Integer r = sqrt(n);
        if (r * r == n) {
            root *= r;
        } else {
            sqfree *= n;
        }
    }
}

} // namespace detail

/// Exact value s * sqrt(q), with s a signed rational and q a nonnegative
/// square-free rational. Zero is canonically (s=0, q=1), so equality is a
/// plain field comparison. Closed under multiplication and inversion; these
/// values carry 3j/Clebsch-Gordan coefficients and their products without
/// rounding.
class SqrtRational {
public:
    SqrtRational() : s_(0), q_(1) {}

    /// Exact rational value (q = 1).
    explicit SqrtRational(Rational scale) : s_(std::move(scale)), q_(1) {
        if (s_ == 0) q_ = 1;
    }

    SqrtRational(Rational scale, Rational radicand) : s_(std::move(scale)), q_(std::move(radicand)) {
        canonicalize();
    }

    static SqrtRational zero() { return SqrtRational(); }
    static SqrtRational one() { return SqrtRational(Rational(1)); }

    /// sqrt(q) for q >= 0.
    static SqrtRational sqrt_of(Rational q) { return SqrtRational(Rational(1), std::move(q)); }

    const Rational& scale() const { return s_; }
    const Rational& radicand() const { return q_; }

    bool is_zero() const { return s_ == 0; }
    bool is_rational() const { return q_ == 1; }
    int sign() const { return s_ == 0 ? 0 : (s_ < 0 ? -1 : 1); }

    /// The exact square s^2 * q. For an amplitude this is its probability.
    Rational squared() const { return s_ * s_ * q_; }

    SqrtRational operator-() const {
        SqrtRational r = *this;
        r.s_ = -r.s_;
        return r;
    }

    SqrtRational& operator*=(const SqrtRational& o) {
        if (is_zero() || o.is_zero()) {
            s_ = 0;
            q_ = 1;
            return *this;
        }
        // Both radicands are square-free, so the square part of their product
        // is exactly the shared gcd of numerators (resp. denominators).
        const Integer n1 = numerator(q_), d1 = denominator(q_);
        const Integer n2 = numerator(o.q_), d2 = denominator(o.q_);
        const Integer gn = gcd(n1, n2), gd = gcd(d1, d2);
        s_ *= o.s_;
        s_ *= Rational(gn, gd);
        q_ = Rational((n1 / gn) * (n2 / gn), (d1 / gd) * (d2 / gd));
        return *this;
    }

    SqrtRational operator*(const SqrtRational& o) const {
        SqrtRational r = *this;
        r *= o;
        return r;
    }

    SqrtRational& operator*=(const Rational& r) {
        s_ *= r;
        if (s_ == 0) q_ = 1;
        return *this;
    }

    SqrtRational operator*(const Rational& r) const {
        SqrtRational v = *this;
        v *= r;
        return v;
    }

    /// Multiplicative inverse: 1/(s*sqrt(q)) = (1/(s*q)) * sqrt(q).
    SqrtRational inverse() const {
        if (is_zero()) throw InvalidParameters("inverse of zero SqrtRational");
        SqrtRational r;
        r.s_ = Rational(1) / (s_ * q_);
        r.q_ = q_;
        return r;
    }

    SqrtRational operator/(const SqrtRational& o) const { return *this * o.inverse(); }

    SqrtRational& operator/=(const Rational& r) {
        if (r == 0) throw InvalidParameters("division of SqrtRational by zero");
        s_ /= r;
        return *this;
    }

    bool operator==(const SqrtRational& o) const { return s_ == o.s_ && q_ == o.q_; }
    bool operator!=(const SqrtRational& o) const { return !(*this == o); }

    /// Rounds to `bits` significant bits: the result is within 2^-bits * |v|
    /// of the exact value, sign exact. Works on the exact square, so only an
    /// integer square root with guard bits is involved.
    DyadicFloat round_to_bits(unsigned bits) const {
        if (bits == 0) throw InvalidParameters("round_to_bits needs bits >= 1");
        if (is_zero()) return DyadicFloat{Integer(0), 0};
        const Rational p = squared();
        const Integer a = numerator(p), b = denominator(p);
        const long t = static_cast<long>(bits) + 32;
        const long la = static_cast<long>(msb(a)) + 1;
        const long lb = static_cast<long>(msb(b)) + 1;
        long sigma = 2 * t + 3 - (la - lb);
        if (sigma < 0) sigma = 0;
        sigma += sigma & 1;
        Integer scaled = (a << static_cast<unsigned long>(sigma)) / b;
        Integer mant = sqrt(scaled);
        long e = -sigma / 2;
        while (mant != 0 && (mant & 1) == 0) {
            mant >>= 1;
            ++e;
        }
        if (sign() < 0) mant = -mant;
        return DyadicFloat{std::move(mant), e};
    }

    /// Double view, correct to within a couple of ulp.
    double to_double() const { return is_zero() ? 0.0 : round_to_bits(64).to_double(); }

private:
    void canonicalize() {
        if (q_ < 0) throw InvalidParameters("negative radicand in SqrtRational");
        if (s_ == 0 || q_ == 0) {
            s_ = 0;
            q_ = 1;
            return;
        }
        Integer rn, fn, rd, fd;
        detail::square_free_split(numerator(q_), rn, fn);
        detail::square_free_split(denominator(q_), rd, fd);
        s_ *= Rational(rn, rd);
        q_ = Rational(fn, fd);
    }

    Rational s_;
    Rational q_;
};

inline SqrtRational operator*(const Rational& r, const SqrtRational& v) { return v * r; }

/// Exact finite sum of SqrtRational terms, kept as a map from square-free
/// radicand to rational coefficient. Square roots of distinct square-free
/// rationals are linearly independent over Q, so equality and zero tests
/// are decidable componentwise. This is the value type of exhaustive
/// transition amplitudes, where single sqrt terms do not suffice.
class SqrtSum {
public:
    SqrtSum() = default;
    SqrtSum(const SqrtRational& v) { *this += v; }

    SqrtSum& operator+=(const SqrtRational& v) {
        if (v.is_zero()) return *this;
        auto [it, inserted] = terms_.try_emplace(v.radicand(), v.scale());
        if (!inserted) {
            it->second += v.scale();
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    SqrtSum& operator-=(const SqrtRational& v) { return *this += (-v); }

    SqrtSum& operator+=(const SqrtSum& o) {
        for (const auto& [q, s] : o.terms_) *this += SqrtRational(s, q);
        return *this;
    }

    SqrtSum& operator-=(const SqrtSum& o) {
        for (const auto& [q, s] : o.terms_) *this += SqrtRational(-s, q);
        return *this;
    }

    SqrtSum operator+(const SqrtSum& o) const {
        SqrtSum r = *this;
        r += o;
        return r;
    }

    SqrtSum operator-(const SqrtSum& o) const {
        SqrtSum r = *this;
        r -= o;
        return r;
    }

    SqrtSum operator*(const SqrtRational& v) const {
        SqrtSum r;
        for (const auto& [q, s] : terms_) r += SqrtRational(s, q) * v;
        return r;
    }

    SqrtSum operator*(const SqrtSum& o) const {
        SqrtSum r;
        for (const auto& [q, s] : terms_)
            for (const auto& [oq, os] : o.terms_) r += SqrtRational(s, q) * SqrtRational(os, oq);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool operator==(const SqrtSum& o) const { return terms_ == o.terms_; }
    bool operator!=(const SqrtSum& o) const { return !(*this == o); }

    std::vector<SqrtRational> terms() const {
        std::vector<SqrtRational> out;
        out.reserve(terms_.size());
        for (const auto& [q, s] : terms_) out.emplace_back(s, q);
        return out;
    }

    /// The value as a single SqrtRational if it is one (zero or one term).
    std::optional<SqrtRational> as_single() const {
        if (terms_.empty()) return SqrtRational::zero();
        if (terms_.size() == 1) return SqrtRational(terms_.begin()->second, terms_.begin()->first);
        return std::nullopt;
    }

    double to_double() const {
        double acc = 0.0;
        for (const auto& [q, s] : terms_) acc += SqrtRational(s, q).to_double();
        return acc;
    }

private:
    std::map<Rational, Rational> terms_;
};

} // namespace schursim
