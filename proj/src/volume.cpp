#include "polyspace/volume.hpp"

#include "polyspace/errors.hpp"

#include <string>

namespace polyspace {

namespace {

void require_positive(int value, const char* name)
{
    if (value < 1) throw DomainError(std::string(name) + " must be >= 1, got " + std::to_string(value));
}

Rational clamp_nonnegative(Rational r)
{
    return r < 0 ? Rational(0) : r;
}

} // namespace

Rational frustum_ratio(const Rational& x, int p, int q)
{
    require_positive(p, "p");
    require_positive(q, "q");
    if (x < -1 || x > 1) throw DomainError("frustum_ratio needs -1 <= x <= 1, got " + to_string(x));

    const Rational up = (x + 1) / 2;
    const Rational down = (1 - x) / 2;
    Rational sum = 0;
    Rational down_pow = 1;
    for (int k = 0; k < p; ++k) {
        sum += Rational(binomial(q - 1 + k, q - 1)) * down_pow;
        down_pow *= down;
    }
    return pow(up, static_cast<std::uint32_t>(q)) * sum;
}

Rational r0(int p, int q)
{
    require_positive(p, "p");
    require_positive(q, "q");
    Rational sum = 0;
    for (int k = 0; k < p; ++k) sum += Rational(binomial(q - 1 + k, k)) * pow2(-k);
    return pow2(-q) * sum;
}

Rational beta_tail_half(int p, int q)
{
    require_positive(p, "p");
    require_positive(q, "q");
    const int trials = p + q - 1;
    BigInt count = 0;
    for (int k = 0; k < p; ++k) count += binomial(trials, k);
    return Rational(count) * pow2(-trials);
}

Rational vj_ratio(int n, int p)
{
    if (p < 1 || p >= n) throw DomainError("vj_ratio needs 1 <= p < n, got n = " + std::to_string(n) + ", p = " + std::to_string(p));
    return r0(p, n - p);
}

GammaBounds gamma_lower_bound(int n, int p)
{
    require_positive(n, "n");
    require_positive(p, "p");
    GammaBounds bounds;
    const Rational n_pow = pow(Rational(n), static_cast<std::uint32_t>(2 * p));
    bounds.headline = clamp_nonnegative(1 - n_pow * pow2(-n));
    if (p < n)
        bounds.union_bound = clamp_nonnegative(1 - Rational(binomial(n, p)) * vj_ratio(n, p));
    else
        bounds.union_bound = 0;
    return bounds;
}

Rational lambda_bound(int n, int p)
{
    require_positive(n, "n");
    require_positive(p, "p");
    const Rational ratio(BigInt(2 * p - 1), BigInt(2 * p));
    return Rational(n) * pow(ratio, static_cast<std::uint32_t>(n - 1));
}

} // namespace polyspace
