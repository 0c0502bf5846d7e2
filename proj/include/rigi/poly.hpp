#pragma once

#include <vector>

#include "rigi/numbers.hpp"

namespace rigi {

/// Dense univariate polynomial over Q; coeffs[i] is the coefficient of x^i.
/// The zero polynomial is the empty vector; otherwise the leading coefficient
/// is nonzero.
using Poly = std::vector<Rat>;

Poly poly_trim(Poly p);
bool poly_is_zero(const Poly& p);
int poly_degree(const Poly& p);  // -1 for zero
Poly poly_neg(const Poly& p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& c);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
/// True iff b divides a exactly.
bool poly_divides(const Poly& b, const Poly& a);
Poly poly_derivative(const Poly& p);
/// Monic gcd.
Poly poly_gcd(Poly a, Poly b);
Rat poly_eval(const Poly& p, const Rat& x);
Quad poly_eval(const Poly& p, const Quad& x);

/// Yun's square-free decomposition: p = prod_i out[i]^(i+1) up to a constant,
/// each out[i] square-free and pairwise coprime.
std::vector<Poly> squarefree_decomposition(const Poly& p);

/// Number of distinct real roots of p in the half-open interval (lo, hi].
/// Sturm convention throughout: count(a,b] = V(a) - V(b); an endpoint root is
/// excluded at lo and included at hi. Unbounded ends via limit signs.
struct SturmChain {
    std::vector<Poly> chain;
    explicit SturmChain(const Poly& p);
    int variations_at(const Quad& x) const;
    int variations_at_plus_infinity() const;
    int variations_at_minus_infinity() const;
};

/// Real roots of p strictly greater than tau, counted WITH multiplicity.
int count_roots_above(const Poly& p, const Quad& tau);
/// Real roots of p strictly less than tau, counted WITH multiplicity.
int count_roots_below(const Poly& p, const Quad& tau);
/// Multiplicity of tau as a root of p (0 if not a root).
int root_multiplicity(const Poly& p, const Quad& tau);

}  // namespace rigi
