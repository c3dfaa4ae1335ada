#pragma once

/*
 * Independent verification of the expansion coefficients against the
 * definitional symmetrized-product formula
 *
 *     P_lambda(x, q) = 1/W_lambda(q^{-1}) * sum over w in W of
 *                      w( x^lambda * prod over positive alpha of
 *                         (1 - q^{-1} x^{-alpha}) / (1 - x^{-alpha}) ),
 *
 *     P_lambda(x, q) = sum over dominant mu of
 *                      q^{-<lambda+mu, rho>} L_{lambda,mu}(q) m_mu(x),
 *
 * by exact rational evaluation at random points.  Substituting x_i = y_i^2
 * and q = v0^2 keeps every exponent integral even for half-integer coweight
 * coordinates (type B).  Sampling the y_i as distinct integers in [2, 17]
 * and v0 in [2, 17] makes the denominators 1 - x^{-alpha} automatically
 * nonzero (for B/C every positive alpha has x^alpha a product of squares of
 * integers >= 2 with positive exponents; for A it is a ratio of squares of
 * distinct integers); a rejection loop guards the claim anyway.
 *
 * Each point is an exact identity test on a rational function of bounded
 * degree, so agreement at a handful of independent points pins the
 * polynomial identity with overwhelming probability; disagreement at any
 * point is a definite failure.
 */

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hl/poly.hpp"
#include "hl/root_system.hpp"

namespace hl {

struct SamplePoint {
  std::vector<Rat> y;  // x_i = y_i^2
  Rat v0;              // q = v0^2
};

SamplePoint sample_point(const RootDatum& d, std::mt19937_64& rng);

// No positive alpha has x^alpha = 1 at the point.
bool pole_free(const RootDatum& d, const SamplePoint& pt);

// x^e = prod y_i^{2 e_i}; requires 2 e_i integral.
Rat x_pow(const SamplePoint& pt, const Vec& e);

// m_mu(x) = sum over the orbit of mu of x^{w(mu)}; mu dominant.
Rat monomial_eval(const RootDatum& d, const Vec& mu, const SamplePoint& pt);

// The symmetrized product above, divided by W_lambda(q^{-1}); lambda dominant.
Rat definitional_P_eval(const RootDatum& d, const Vec& lambda, const SamplePoint& pt);

// sum over the table of q^{-<lambda+mu, rho>} L_mu(q) m_mu(x); the table maps
// dominant contents to coefficient polynomials (see gl_formula::L_table).
Rat expansion_eval(const RootDatum& d, const Vec& lambda,
                   const std::map<Vec, HalfLaurent>& table, const SamplePoint& pt);

struct PointCheck {
  SamplePoint point;
  Rat expansion;
  Rat definitional;
  bool ok = false;
};

struct VerifyReport {
  bool pass = false;
  std::vector<PointCheck> points;
};

// Compare the two sides at k freshly sampled pole-free points.
VerifyReport verify(const RootDatum& d, const Vec& lambda,
                    const std::map<Vec, HalfLaurent>& table, int k,
                    std::uint64_t seed = 0x48616c6c);

}  // namespace hl
