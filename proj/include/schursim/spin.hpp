#pragma once

#include <charconv>
#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "schursim/errors.hpp"

namespace schursim {

/// Half-integer quantum number stored as its doubled value, so that spin 3/2
/// is HalfInt::from_twice(3) and no floating representation of a j or m label
/// ever exists. All spins here are bounded by n/2, so a machine int cannot
/// overflow for any feasible qubit count.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
    static constexpr HalfInt whole(int value) { return HalfInt(2 * value); }
    static constexpr HalfInt half() { return HalfInt(1); }
    static constexpr HalfInt zero() { return HalfInt(0); }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return (twice_ & 1) == 0; }
    constexpr bool is_negative() const { return twice_ < 0; }

    constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
    constexpr HalfInt operator-() const { return HalfInt(-twice_); }

    constexpr auto operator<=>(const HalfInt&) const = default;

    friend constexpr HalfInt abs(HalfInt v) { return HalfInt(v.twice_ < 0 ? -v.twice_ : v.twice_); }

    /// Textual form used by the CLI and JSON: an integer ("2") or a fraction
    /// with denominator 2 ("-3/2"). Any other denominator is rejected.
    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    static HalfInt parse(std::string_view text) {
        const auto bad = [&] { throw ParseError("invalid spin value '" + std::string(text) + "'"); };
        if (text.empty()) bad();
        auto slash = text.find('/');
        int num = 0;
        std::string_view head = text.substr(0, slash);
        auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), num);
        if (ec != std::errc{} || p != head.data() + head.size()) bad();
        if (slash == std::string_view::npos) return whole(num);
        std::string_view tail = text.substr(slash + 1);
        int den = 0;
        auto [p2, ec2] = std::from_chars(tail.data(), tail.data() + tail.size(), den);
        if (ec2 != std::errc{} || p2 != tail.data() + tail.size()) bad();
        if (den != 2) throw ParseError("spin denominators other than 2 are not allowed: '" + std::string(text) + "'");
        return from_twice(num);
    }

private:
    constexpr explicit HalfInt(int twice) : twice_(twice) {}
    int twice_ = 0;
};

/// True iff j is usable as a total spin.
constexpr bool is_valid_spin(HalfInt j) { return j.twice() >= 0; }

/// True iff m is a magnetic number belonging to spin j: |m| <= j with the
/// same integer/half-integer parity.
constexpr bool is_valid_mag(HalfInt j, HalfInt m) {
    return is_valid_spin(j) && abs(m) <= j && ((j.twice() ^ m.twice()) & 1) == 0;
}

/// Angular momentum addition: |a-b| <= c <= a+b and a+b+c integral.
constexpr bool is_triangle(HalfInt a, HalfInt b, HalfInt c) {
    return abs(a - b) <= c && c <= a + b && ((a.twice() + b.twice() + c.twice()) & 1) == 0;
}

/// All total spins two spins can couple to, increasing:
/// {|j1-j2|, |j1-j2|+1, ..., j1+j2}.
inline std::vector<HalfInt> couple_range(HalfInt j1, HalfInt j2) {
    if (!is_valid_spin(j1) || !is_valid_spin(j2))
        throw InvalidQuantumNumbers("couple_range requires nonnegative spins");
    std::vector<HalfInt> out;
    const HalfInt lo = abs(j1 - j2);
    const HalfInt hi = j1 + j2;
    out.reserve(static_cast<size_t>((hi - lo).twice() / 2 + 1));
    for (int t = lo.twice(); t <= hi.twice(); t += 2) out.push_back(HalfInt::from_twice(t));
    return out;
}

} // namespace schursim
