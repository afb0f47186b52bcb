#pragma once
#include <array>
#include <string>

#include "burniat/rational.hpp"

namespace burniat {

// Element of Q(zeta_8): c0 + c1 z + c2 z^2 + c3 z^3 with z^4 = -1.
struct Zeta8 {
    std::array<BigRat, 4> c{};

    Zeta8() = default;
    Zeta8(long long v) { c[0] = v; }
    explicit Zeta8(const BigRat &v) { c[0] = v; }

    static Zeta8 zeta(int power = 1); // zeta^power, any integer power

    Zeta8 operator+(const Zeta8 &o) const;
    Zeta8 operator-(const Zeta8 &o) const;
    Zeta8 operator-() const;
    Zeta8 operator*(const Zeta8 &o) const;
    Zeta8 inverse() const; // throws on zero
    Zeta8 operator/(const Zeta8 &o) const { return *this * o.inverse(); }
    Zeta8 pow(int e) const;

    bool operator==(const Zeta8 &o) const { return c == o.c; }
    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

    std::string to_string() const;
};

} // namespace burniat
