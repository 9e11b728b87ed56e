#include "clockprobe/angular_momentum.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace clockprobe {

namespace {

// Largest twice-value accepted anywhere; factorial arguments are bounded by
// 4*kMaxTwiceJ + 2 (the 6j series reaches (j1+j2+j4+j5+1)!).
constexpr int kMaxTwiceJ = 200;
constexpr int kMaxFactorial = 4 * kMaxTwiceJ + 2;

const BigInt& fact(int n) {
    static const std::vector<BigInt> table = [] {
        std::vector<BigInt> t(kMaxFactorial + 1);
        t[0] = 1;
        for (int i = 1; i <= kMaxFactorial; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    if (n < 0 || n > kMaxFactorial) throw std::domain_error("factorial argument out of range");
    return table[static_cast<std::size_t>(n)];
}

int parity_sign(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

void require_magnitude(HalfInt j) {
    if (j.twice() < 0) throw std::domain_error("angular momentum magnitude must be >= 0");
    if (j.twice() > kMaxTwiceJ) throw std::domain_error("quantum number exceeds supported range (2j > 200)");
}

void require_projection(HalfInt j, HalfInt m) {
    if (!m.is_projection_of(j))
        throw std::domain_error("projection " + m.str() + " invalid for j = " + j.str() +
                                " (range or parity)");
}

// (a+b-c)! (a-b+c)! (-a+b+c)! / (a+b+c+1)! -- all arguments integers once the
// triad passes the triangle rule.
BigRational triangle_delta(HalfInt a, HalfInt b, HalfInt c) {
    const int p = (a.twice() + b.twice() - c.twice()) / 2;
    const int q = (a.twice() - b.twice() + c.twice()) / 2;
    const int r = (-a.twice() + b.twice() + c.twice()) / 2;
    const int s = (a.twice() + b.twice() + c.twice()) / 2;
    return BigRational(fact(p) * fact(q) * fact(r), fact(s + 1));
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw std::invalid_argument("bad half-integer: '" + std::string(s) + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return HalfInt::of(parse_int(text));
    const int num = parse_int(text.substr(0, slash));
    const int den = parse_int(text.substr(slash + 1));
    if (den != 2)
        throw std::invalid_argument("half-integers must have denominator 2: '" + std::string(text) + "'");
    return HalfInt::halves(num);
}

std::string HalfInt::str() const {
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

ExactRadical ExactRadical::from_signed_sqrt(const BigRational& coeff, const BigRational& arg) {
    if (arg < 0) throw std::domain_error("radicand must be non-negative");
    ExactRadical r;
    if (coeff == 0 || arg == 0) return r;
    r.sign_ = coeff > 0 ? 1 : -1;
    r.radicand_ = coeff * coeff * arg;
    return r;
}

ExactRadical ExactRadical::sqrt_of(const BigRational& arg) {
    return from_signed_sqrt(1, arg);
}

BigRational ExactRadical::signed_square() const {
    return sign_ >= 0 ? radicand_ : BigRational(-radicand_);
}

double ExactRadical::to_double() const {
    if (sign_ == 0) return 0.0;
    const double num = numerator(radicand_).convert_to<double>();
    const double den = denominator(radicand_).convert_to<double>();
    return sign_ * std::sqrt(num / den);
}

std::string ExactRadical::str() const {
    if (sign_ == 0) return "0";
    const BigInt num = numerator(radicand_);
    const BigInt den = denominator(radicand_);
    const BigInt sn = boost::multiprecision::sqrt(num);
    const BigInt sd = boost::multiprecision::sqrt(den);
    std::string prefix = sign_ < 0 ? "-" : "";
    if (sn * sn == num && sd * sd == den) {
        std::string s = sn.str();
        if (sd != 1) s += "/" + sd.str();
        return prefix + s;
    }
    std::string inner = num.str();
    if (den != 1) inner += "/" + den.str();
    return prefix + "sqrt(" + inner + ")";
}

ExactRadical operator*(const ExactRadical& a, const ExactRadical& b) {
    ExactRadical r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.radicand_ = a.radicand_ * b.radicand_;
    return r;
}

ExactRadical ExactRadical::scaled_by(const BigRational& factor) const {
    ExactRadical r;
    if (sign_ == 0 || factor == 0) return r;
    r.sign_ = factor > 0 ? sign_ : -sign_;
    r.radicand_ = radicand_ * factor * factor;
    return r;
}

bool triangle_ok(HalfInt a, HalfInt b, HalfInt c) {
    require_magnitude(a);
    require_magnitude(b);
    require_magnitude(c);
    if ((a.twice() + b.twice() + c.twice()) % 2 != 0) return false;
    return std::abs(a.twice() - b.twice()) <= c.twice() &&
           c.twice() <= a.twice() + b.twice();
}

ExactRadical wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3,
                       HalfInt m1, HalfInt m2, HalfInt m3) {
    require_magnitude(j1);
    require_magnitude(j2);
    require_magnitude(j3);
    require_projection(j1, m1);
    require_projection(j2, m2);
    require_projection(j3, m3);

    if (m1.twice() + m2.twice() + m3.twice() != 0) return {};
    if (!triangle_ok(j1, j2, j3)) return {};

    // Integer-valued combinations entering the Racah series.
    const int j12m3 = (j1.twice() + j2.twice() - j3.twice()) / 2;  // j1+j2-j3
    const int a1 = (j1.twice() - m1.twice()) / 2;                  // j1-m1
    const int a2 = (j1.twice() + m1.twice()) / 2;
    const int b1 = (j2.twice() - m2.twice()) / 2;
    const int b2 = (j2.twice() + m2.twice()) / 2;
    const int c1 = (j3.twice() - m3.twice()) / 2;
    const int c2 = (j3.twice() + m3.twice()) / 2;
    const int e1 = (j3.twice() - j2.twice() + m1.twice()) / 2;     // j3-j2+m1
    const int e2 = (j3.twice() - j1.twice() - m2.twice()) / 2;     // j3-j1-m2

    const int kmin = std::max({0, -e1, -e2});
    const int kmax = std::min({j12m3, a1, b2});

    BigRational series = 0;
    for (int k = kmin; k <= kmax; ++k) {
        BigInt denom = fact(k) * fact(j12m3 - k) * fact(a1 - k) * fact(b2 - k) *
                       fact(e1 + k) * fact(e2 + k);
        series += BigRational(parity_sign(k), denom);
    }
    if (series == 0) return {};

    const int phase = (j1.twice() - j2.twice() - m3.twice()) / 2;
    const BigRational coeff = series * parity_sign(phase);
    const BigRational arg = triangle_delta(j1, j2, j3) *
                            BigRational(fact(a1) * fact(a2) * fact(b1) *
                                        fact(b2) * fact(c1) * fact(c2));
    return ExactRadical::from_signed_sqrt(coeff, arg);
}

ExactRadical wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3,
                       HalfInt j4, HalfInt j5, HalfInt j6) {
    for (HalfInt j : {j1, j2, j3, j4, j5, j6}) require_magnitude(j);

    if (!triangle_ok(j1, j2, j3) || !triangle_ok(j1, j5, j6) ||
        !triangle_ok(j4, j2, j6) || !triangle_ok(j4, j5, j3))
        return {};

    const int s1 = (j1.twice() + j2.twice() + j3.twice()) / 2;
    const int s2 = (j1.twice() + j5.twice() + j6.twice()) / 2;
    const int s3 = (j4.twice() + j2.twice() + j6.twice()) / 2;
    const int s4 = (j4.twice() + j5.twice() + j3.twice()) / 2;
    const int q1 = (j1.twice() + j2.twice() + j4.twice() + j5.twice()) / 2;
    const int q2 = (j2.twice() + j3.twice() + j5.twice() + j6.twice()) / 2;
    const int q3 = (j3.twice() + j1.twice() + j6.twice() + j4.twice()) / 2;

    const int kmin = std::max({s1, s2, s3, s4});
    const int kmax = std::min({q1, q2, q3});

    BigRational series = 0;
    for (int k = kmin; k <= kmax; ++k) {
        BigInt denom = fact(k - s1) * fact(k - s2) * fact(k - s3) * fact(k - s4) *
                       fact(q1 - k) * fact(q2 - k) * fact(q3 - k);
        BigRational term(fact(k + 1), denom);
        series += parity_sign(k) * term;
    }
    if (series == 0) return {};

    const BigRational arg = triangle_delta(j1, j2, j3) * triangle_delta(j1, j5, j6) *
                            triangle_delta(j4, j2, j6) * triangle_delta(j4, j5, j3);
    return ExactRadical::from_signed_sqrt(series, arg);
}

ExactRadical clebsch_gordan(HalfInt j1, HalfInt j2, HalfInt j,
                            HalfInt m1, HalfInt m2, HalfInt m) {
    require_magnitude(j1);
    require_magnitude(j2);
    require_magnitude(j);
    require_projection(j1, m1);
    require_projection(j2, m2);
    require_projection(j, m);

    if (m1.twice() + m2.twice() != m.twice()) return {};
    if (!triangle_ok(j1, j2, j)) return {};

    const int j12mj = (j1.twice() + j2.twice() - j.twice()) / 2;   // j1+j2-j
    const int a1 = (j1.twice() - m1.twice()) / 2;
    const int a2 = (j1.twice() + m1.twice()) / 2;
    const int b1 = (j2.twice() - m2.twice()) / 2;
    const int b2 = (j2.twice() + m2.twice()) / 2;
    const int c1 = (j.twice() - m.twice()) / 2;
    const int c2 = (j.twice() + m.twice()) / 2;
    const int e1 = (j.twice() - j2.twice() + m1.twice()) / 2;      // j-j2+m1
    const int e2 = (j.twice() - j1.twice() - m2.twice()) / 2;      // j-j1-m2

    const int kmin = std::max({0, -e1, -e2});
    const int kmax = std::min({j12mj, a1, b2});

    BigRational series = 0;
    for (int k = kmin; k <= kmax; ++k) {
        BigInt denom = fact(k) * fact(j12mj - k) * fact(a1 - k) * fact(b2 - k) *
                       fact(e1 + k) * fact(e2 + k);
        series += BigRational(parity_sign(k), denom);
    }
    if (series == 0) return {};

    const BigRational arg = BigRational(j.twice() + 1) * triangle_delta(j1, j2, j) *
                            BigRational(fact(c2) * fact(c1) * fact(a1) * fact(a2) *
                                        fact(b1) * fact(b2));
    return ExactRadical::from_signed_sqrt(series, arg);
}

}  // namespace clockprobe
