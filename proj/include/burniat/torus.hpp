#pragma once
#include <array>
#include <cstdint>
#include <vector>

#include "burniat/affine.hpp"

namespace burniat {

// A point of (1/4)Lambda / Lambda: quarter-numerators mod 4 over the basis
// (e1,e2,e3,e1',e2',e3').  All fixed-point bookkeeping lives here.
struct TorusPoint {
    std::array<std::uint8_t, 6> q{};

    bool operator==(const TorusPoint &o) const { return q == o.q; }
    bool operator<(const TorusPoint &o) const { return q < o.q; }
};

// An element of Lambda/2Lambda, split as (e-part | e'-part).
struct LambdaHat {
    std::array<std::uint8_t, 6> bits{};

    bool operator==(const LambdaHat &o) const { return bits == o.bits; }
    bool operator<(const LambdaHat &o) const { return bits < o.bits; }

    LambdaHat operator+(const LambdaHat &o) const
    {
        LambdaHat r;
        for (int i = 0; i < 6; ++i) r.bits[i] = (bits[i] + o.bits[i]) % 2;
        return r;
    }

    bool is_zero() const
    {
        for (auto b : bits)
            if (b) return false;
        return true;
    }

    std::array<int, 3> e_part() const { return {bits[0], bits[1], bits[2]}; }
    std::array<int, 3> e_prime_part() const { return {bits[3], bits[4], bits[5]}; }
};

// epsilon = (e1, -e2, -e3), fixed once; quarter-numerators of epsilon/4.
TorusPoint quarter_epsilon();

// Action of gamma_i (1-based) on the torus.
TorusPoint apply_gamma(const TorusPoint &z, int i);

// Action of gamma1 gamma2 gamma3: z -> -z + epsilon/2.
TorusPoint apply_gamma123(const TorusPoint &z);

bool is_fixed_point(const TorusPoint &z);

// The 64 fixed points of gamma1 gamma2 gamma3 on the torus, sorted.
std::vector<TorusPoint> fixed_points();

// The unique lambda-hat with z = epsilon/4 + lambda-hat/2; throws if z is
// not a fixed point.
LambdaHat lambda_hat(const TorusPoint &z);

// Adds (e1,e2,0), (0,e2,e3), (e1,0,e3) for i = 1,2,3.
LambdaHat gamma_action_on_lambda_hat(const LambdaHat &lh, int i);

// True iff gamma1 gamma2 gamma3 t_lambda has an exact fixed point in C^3
// lying over the torus point z; for fixed points this is the congruence
// lambda = -lambda-hat(z) mod 2 Lambda.
bool fixed_point_check(const LatticeVector &lambda, const TorusPoint &z);

} // namespace burniat
