#pragma once

#include <optional>
#include <vector>

#include "csalg/rational.hpp"

namespace csalg {

/// Polynomial over Q, coefficients low degree first, no trailing zeros
/// (the zero polynomial is the empty vector).
using QPoly = std::vector<Rational>;

int poly_degree(const QPoly& p);  // -1 for the zero polynomial
QPoly poly_normalize(QPoly p);
QPoly poly_mul(const QPoly& a, const QPoly& b);
QPoly poly_derivative(const QPoly& p);
/// Remainder of a by b (b nonzero).
QPoly poly_rem(QPoly a, const QPoly& b);
/// Monic gcd.
QPoly poly_gcd(QPoly a, QPoly b);
Rational poly_eval(const QPoly& p, const Rational& x);

/// How a monic polynomial of degree >= 1 over Q decomposes, as far as the
/// desk-scale factoring below can tell:
///   irreducible      proved irreducible over Q
///   splits           proved to have two coprime nontrivial factors
///   repeated         has a repeated irreducible factor (gcd with derivative)
///   unknown          none of the above could be established
/// Rational roots, quadratic discriminants, cubic root tests and quartic
/// quadratic-pair factoring are decided exactly; degrees >= 5 fall back to
/// the rational-root test only.
enum class FactorClass { irreducible, splits, repeated, unknown };

FactorClass classify_factorization(const QPoly& monic);

/// Any rational root, or nullopt when none was found (exhaustive for
/// constant terms whose divisors are enumerable at desk scale).
std::optional<Rational> find_rational_root(const QPoly& p);

} // namespace csalg
