#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace clockprobe {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Angular momentum quantum number stored as 2j, so half-integer values
/// (1/2, 3/2, ...) stay exact. Magnitudes must be non-negative; projections
/// may be negative.
class HalfInt {
public:
    constexpr HalfInt() = default;

    /// Value n (an integer quantum number).
    static constexpr HalfInt of(int n) { return HalfInt(2 * n); }
    /// Value t/2 (t = twice the quantum number).
    static constexpr HalfInt halves(int t) { return HalfInt(t); }
    /// Accepts "2", "-1", "3/2", "-7/2".
    static HalfInt parse(std::string_view text);

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double value() const { return 0.5 * twice_; }
    /// True when this can be a magnitude and |m| <= j with matching parity.
    constexpr bool is_projection_of(HalfInt j) const {
        return twice_ >= -j.twice_ && twice_ <= j.twice_ &&
               ((twice_ - j.twice_) % 2 == 0);
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    constexpr auto operator<=>(const HalfInt&) const = default;

    std::string str() const;  // "3/2" or "2"

private:
    explicit constexpr HalfInt(int t) : twice_(t) {}
    int twice_ = 0;
};

/// Exact value of the form sign * sqrt(p/q) with p/q >= 0 in lowest terms.
/// Zero is canonically (sign = 0, radicand = 0). Closed under products and
/// under scaling by rationals, which covers everything the coupling algebra
/// needs; sums are not representable and are done on squared values instead.
class ExactRadical {
public:
    ExactRadical() = default;  // zero

    /// coeff * sqrt(arg); arg must be >= 0.
    static ExactRadical from_signed_sqrt(const BigRational& coeff, const BigRational& arg);
    /// sqrt(arg) for arg >= 0.
    static ExactRadical sqrt_of(const BigRational& arg);

    int sign() const { return sign_; }
    const BigRational& radicand() const { return radicand_; }
    bool is_zero() const { return sign_ == 0; }
    /// sign * radicand -- the exact value of value*|value|; for selection-rule
    /// sums of squared symbols radicand() alone is the square.
    BigRational signed_square() const;

    double to_double() const;
    /// "-sqrt(5/99)", or the plain rational ("1/6", "-2") when the radicand
    /// is a perfect square.
    std::string str() const;

    friend ExactRadical operator*(const ExactRadical& a, const ExactRadical& b);
    ExactRadical scaled_by(const BigRational& factor) const;

    bool operator==(const ExactRadical&) const = default;

private:
    int sign_ = 0;
    BigRational radicand_ = 0;
};

/// Triangle rule |a-b| <= c <= a+b with integer perimeter.
bool triangle_ok(HalfInt a, HalfInt b, HalfInt c);

/// Wigner 3j symbol (j1 j2 j3; m1 m2 m3), Racah convention, evaluated
/// exactly via the Racah single-sum formula. Returns zero when the m-sum
/// rule or the triangle rule fails. Throws std::domain_error for invalid
/// quantum numbers (negative j, |m| > j, parity mismatch, 2j > 200).
ExactRadical wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3,
                       HalfInt m1, HalfInt m2, HalfInt m3);

/// Wigner 6j symbol {j1 j2 j3; j4 j5 j6}, Racah convention. Returns zero
/// when any of the four triads violates the triangle rule.
ExactRadical wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3,
                       HalfInt j4, HalfInt j5, HalfInt j6);

/// Clebsch-Gordan coefficient <j1 m1, j2 m2 | j m>, evaluated through its
/// own closed-form series (not by converting the 3j), so the two routes can
/// cross-check each other.
ExactRadical clebsch_gordan(HalfInt j1, HalfInt j2, HalfInt j,
                            HalfInt m1, HalfInt m2, HalfInt m);

}  // namespace clockprobe
