#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sgds {

/// Angle as a reduced rational fraction of a full revolution, in [0,1).
/// Turn(n,d) represents the circle point e^{2*pi*i*n/d}.
struct Turn {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Turn() = default;
    Turn(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Turn: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        num %= den;
        if (num < 0) num += den;
        std::int64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
    }

    friend Turn operator+(Turn a, Turn b) {
        std::int64_t g = std::gcd(a.den, b.den);
        return Turn(a.num * (b.den / g) + b.num * (a.den / g), a.den / g * b.den);
    }
    friend Turn operator-(Turn a, Turn b) {
        std::int64_t g = std::gcd(a.den, b.den);
        return Turn(a.num * (b.den / g) - b.num * (a.den / g), a.den / g * b.den);
    }
    Turn operator-() const { return Turn(-num, den); }

    friend bool operator==(const Turn& a, const Turn& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Turn& a, const Turn& b) { return !(a == b); }
    friend bool operator<(const Turn& a, const Turn& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Turn& a, const Turn& b) { return !(b < a); }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    /// e^{2*pi*i*num/den}
    std::complex<double> unit() const {
        double t = 2.0 * 3.14159265358979323846 * value();
        return {std::cos(t), std::sin(t)};
    }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    /// Parses "p/q" or a bare integer "p". Throws on malformed input.
    static Turn parse(const std::string& s);
};

}  // namespace sgds
