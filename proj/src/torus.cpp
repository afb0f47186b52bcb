#include "burniat/torus.hpp"

#include <stdexcept>

namespace burniat {

namespace {

std::uint8_t m4(int x)
{
    return static_cast<std::uint8_t>(((x % 4) + 4) % 4);
}

} // namespace

TorusPoint quarter_epsilon()
{
    TorusPoint z;
    z.q = {1, 3, 3, 0, 0, 0}; // (e1 - e2 - e3)/4
    return z;
}

TorusPoint apply_gamma(const TorusPoint &z, int i)
{
    if (i < 1 || i > 3)
        throw std::invalid_argument("apply_gamma: index must be 1, 2 or 3");
    const int k = i - 1;
    const int flip = (k + 1) % 3;
    TorusPoint r = z;
    r.q[flip] = m4(-z.q[flip]);
    r.q[flip + 3] = m4(-z.q[flip + 3]);
    r.q[k] = m4(z.q[k] + 2); // glide by e_i/2 = two quarters
    return r;
}

TorusPoint apply_gamma123(const TorusPoint &z)
{
    TorusPoint r;
    const TorusPoint eps = quarter_epsilon();
    for (int j = 0; j < 6; ++j) r.q[j] = m4(-z.q[j] + 2 * eps.q[j]);
    return r;
}

bool is_fixed_point(const TorusPoint &z)
{
    return apply_gamma123(z) == z;
}

std::vector<TorusPoint> fixed_points()
{
    // Solutions of z = -z + epsilon/2: e-numerators odd, e'-numerators even.
    std::vector<TorusPoint> out;
    out.reserve(64);
    for (int a0 : {1, 3})
        for (int a1 : {1, 3})
            for (int a2 : {1, 3})
                for (int b0 : {0, 2})
                    for (int b1 : {0, 2})
                        for (int b2 : {0, 2}) {
                            TorusPoint z;
                            z.q = {static_cast<std::uint8_t>(a0), static_cast<std::uint8_t>(a1),
                                   static_cast<std::uint8_t>(a2), static_cast<std::uint8_t>(b0),
                                   static_cast<std::uint8_t>(b1), static_cast<std::uint8_t>(b2)};
                            out.push_back(z);
                        }
    std::sort(out.begin(), out.end());
    return out;
}

LambdaHat lambda_hat(const TorusPoint &z)
{
    if (!is_fixed_point(z))
        throw std::invalid_argument("lambda_hat: not a fixed point of gamma1 gamma2 gamma3");
    const TorusPoint eps = quarter_epsilon();
    LambdaHat lh;
    for (int j = 0; j < 6; ++j) {
        int d = ((z.q[j] - eps.q[j]) % 4 + 4) % 4; // quarter-numerators of lambda-hat/2
        // fixed points differ from epsilon/4 by half-lattice vectors
        if (d % 2 != 0)
            throw std::logic_error("lambda_hat: difference not in (1/2)Lambda");
        lh.bits[j] = static_cast<std::uint8_t>(d / 2); // 0 or 1 mod 2
    }
    return lh;
}

LambdaHat gamma_action_on_lambda_hat(const LambdaHat &lh, int i)
{
    if (i < 1 || i > 3)
        throw std::invalid_argument("gamma_action_on_lambda_hat: index must be 1, 2 or 3");
    static const std::uint8_t incr[3][6] = {
        {1, 1, 0, 0, 0, 0}, // gamma1: + (e1, e2, 0)
        {0, 1, 1, 0, 0, 0}, // gamma2: + (0, e2, e3)
        {1, 0, 1, 0, 0, 0}, // gamma3: + (e1, 0, e3)
    };
    LambdaHat inc;
    for (int j = 0; j < 6; ++j) inc.bits[j] = incr[i - 1][j];
    return lh + inc;
}

bool fixed_point_check(const LatticeVector &lambda, const TorusPoint &z)
{
    if (!is_fixed_point(z)) return false;
    LambdaHat lh = lambda_hat(z);
    // lambda = -lambda-hat mod 2 Lambda
    for (int j = 0; j < 6; ++j) {
        BigInt r = (-lambda.c[j] - lh.bits[j]) % 2;
        if (r != 0) return false;
    }
    return true;
}

} // namespace burniat
