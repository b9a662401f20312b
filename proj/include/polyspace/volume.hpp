#pragma once

#include "polyspace/rational.hpp"

namespace polyspace {

/// Relative volume of {phi <= x} inside a simplex whose vertices take the
/// value -1 (p of them) or +1 (q of them) under the affine functional phi:
///
///   r(x) = ((x+1)/2)^q * sum_{k<p} C(q-1+k, q-1) ((1-x)/2)^k.
///
/// Throws DomainError unless p, q >= 1 and -1 <= x <= 1.
Rational frustum_ratio(const Rational& x, int p, int q);

/// r_{p,q} = r(0) = 2^-q sum_{k<p} C(q-1+k, k) 2^-k.
Rational r0(int p, int q);

/// P(Bin(p+q-1, 1/2) <= p-1), the upper tail of Beta(p, q) at 1/2.
/// Independent closed form for r0.
Rational beta_tail_half(int p, int q);

/// Relative volume of {l in the open simplex : sum_{i in J} l_i >= 1/2} for
/// any fixed |J| = p, i.e. r_{p,n-p}. Requires 1 <= p < n.
Rational vj_ratio(int n, int p);

struct GammaBounds
{
    /// max(0, 1 - n^{2p} 2^-n)
    Rational headline;
    /// max(0, 1 - C(n,p) r_{p,n-p}); 0 when p >= n.
    Rational union_bound;
};

/// Lower bounds for the relative volume of the region where every p-subset is short.
GammaBounds gamma_lower_bound(int n, int p);

/// n ((2p-1)/(2p))^{n-1}, the union bound for the Lebesgue mass of Lambda_p.
Rational lambda_bound(int n, int p);

} // namespace polyspace
