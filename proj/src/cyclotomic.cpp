#include "burniat/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace burniat {

Zeta8 Zeta8::zeta(int power)
{
    int p = ((power % 8) + 8) % 8;
    Zeta8 z;
    if (p < 4)
        z.c[p] = 1;
    else
        z.c[p - 4] = -1; // z^4 = -1
    return z;
}

Zeta8 Zeta8::operator+(const Zeta8 &o) const
{
    Zeta8 r;
    for (int i = 0; i < 4; ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

Zeta8 Zeta8::operator-() const
{
    Zeta8 r;
    for (int i = 0; i < 4; ++i) r.c[i] = -c[i];
    return r;
}

Zeta8 Zeta8::operator-(const Zeta8 &o) const
{
    return *this + (-o);
}

Zeta8 Zeta8::operator*(const Zeta8 &o) const
{
    Zeta8 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int k = i + j;
            BigRat v = c[i] * o.c[j];
            if (k >= 4) {
                k -= 4;
                v = -v; // z^4 = -1 reduction
            }
            r.c[k] += v;
        }
    return r;
}

Zeta8 Zeta8::pow(int e) const
{
    Zeta8 r(1);
    Zeta8 b = *this;
    if (e < 0) {
        b = inverse();
        e = -e;
    }
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Zeta8 Zeta8::inverse() const
{
    if (is_zero()) throw std::invalid_argument("Zeta8: inverse of zero");
    // solve (this) * x = 1 as a 4x4 rational linear system by elimination
    BigRat m[4][5] = {};
    // column action of multiplication by *this on basis z^j
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            int k = i + j;
            BigRat v = c[i];
            if (k >= 4) {
                k -= 4;
                v = -v;
            }
            m[k][j] += v;
        }
    m[0][4] = 1;
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("Zeta8: singular multiplication map");
        for (int k = 0; k < 5; ++k) std::swap(m[col][k], m[piv][k]);
        BigRat d = m[col][col];
        for (int k = 0; k < 5; ++k) m[col][k] /= d;
        for (int r = 0; r < 4; ++r) {
            if (r == col || m[r][col] == 0) continue;
            BigRat f = m[r][col];
            for (int k = 0; k < 5; ++k) m[r][k] -= f * m[col][k];
        }
    }
    Zeta8 x;
    for (int i = 0; i < 4; ++i) x.c[i] = m[i][4];
    return x;
}

std::string Zeta8::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (c[i] == 0) continue;
        BigRat a = c[i];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0)
            os << a;
        else {
            if (a != 1) os << a << "*";
            os << "a";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace burniat
