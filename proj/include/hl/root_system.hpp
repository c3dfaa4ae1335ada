#pragma once

/*
 * Finite root data of types A_n, B_n, C_n in epsilon-coordinates, on the
 * coweight side.
 *
 * Everything in this library (weights of tableaux, lambda, mu, the vectors
 * appearing in the symmetrization product) lives in the COWEIGHT lattice,
 * written in the standard basis epsilon_1..epsilon_d:
 *
 *   A_n: coweights in Z^{n+1} modulo Z·(1,...,1); canonical representatives
 *        have last coordinate 0.  Positive coroots: e_i - e_j, i < j.
 *   B_n: coweights in (1/2)Z^n (all-integer or all-half-integer vectors;
 *        the spin coweight (1/2,...,1/2) is the fundamental omega_n).
 *        Positive coroots: e_i +- e_j (i < j) and e_i.  The ROOTS of B_n in
 *        these coordinates are the longer family e_i +- e_j, 2e_i — this is
 *        exactly what makes (1/2,...,1/2) integral on all roots.
 *   C_n: coweights in Z^n.  Positive coroots: e_i +- e_j (i < j) and 2e_i;
 *        roots are the shorter family e_i +- e_j, e_i.
 *
 * positive_roots() returns the coweight-side family (the coroots above):
 * these are the vectors alpha for which x^{-alpha} makes sense on the
 * coweight torus and which drive the symmetrized-product formula and all
 * dominance/length computations.  rho() is half the sum of the positive
 * ROOTS — the dual-shaped family — because <.,rho> measures coweights
 * against roots:
 *
 *   rho(A_n) = (n, n-2, ..., -n)/2
 *   rho(B_n) = (n, n-1, ..., 1)        (= half-sum of {e_i+-e_j, 2e_i})
 *   rho(C_n) = (n-1/2, n-3/2, ..., 1/2) (= half-sum of {e_i+-e_j, e_i})
 *
 * In particular rho() is NOT the half-sum of positive_roots() for B and C.
 * With these conventions <alpha_i^vee, rho> = 1 for every simple coroot in
 * every type, and the leading-term law L_{lambda,lambda} = q^{<2 lambda,rho>}
 * comes out right on all worked cases.
 *
 * The Weyl group acts by (signed) coordinate permutations: S_{n+1} for A_n,
 * the hyperoctahedral group S_n x {+-1}^n for B_n and C_n.
 */

#include <vector>

#include "hl/poly.hpp"

namespace hl {

enum class Family { A, B, C };

struct RootDatum {
  Family family;
  int rank;  // n >= 1

  // Number of epsilon-coordinates: n+1 for A_n, n for B_n/C_n.
  int dimension() const { return family == Family::A ? rank + 1 : rank; }

  bool operator==(const RootDatum& o) const { return family == o.family && rank == o.rank; }
};

char family_letter(Family f);
Family family_from_letter(char c);

using Vec = std::vector<Rat>;

Vec zero_vec(const RootDatum& d);

// Positive coroots in epsilon-coordinates (see the file comment); the family
// the symmetrized product, dominance tests, and inversion counts run over.
// |phi^+| = n(n+1)/2 for A_n, n^2 for B_n and C_n.
std::vector<Vec> positive_roots(const RootDatum& d);

// The simple members of positive_roots(): e_i - e_{i+1} for i < n, and then
// e_n - e_{n+1} (A), e_n (B), 2e_n (C).
std::vector<Vec> simple_coroots(const RootDatum& d);

// Half-sum of the positive roots (dual family); see the file comment.
Vec rho(const RootDatum& d);

// Fundamental coweight omega_i (1-based): dual basis to the simple roots.
//   A/C: omega_i = e_1 + ... + e_i;  B: same for i < n, omega_n = (1,..,1)/2.
Vec fundamental_coweight(const RootDatum& d, int i);

// Standard inner product; exact.  Throws on dimension mismatch.  For type A
// it is invariant under adding multiples of (1,...,1) to the first argument
// whenever the second lies in the root lattice (as rho and all roots do).
Rat pair(const Vec& x, const Vec& y);

// Type A: subtract the last coordinate (quotient by (1,...,1)); B/C: identity.
Vec canonicalize(const RootDatum& d, Vec x);
bool coweights_equal(const RootDatum& d, const Vec& a, const Vec& b);

// <x, alpha_i> >= 0 for all simple alpha_i (tested against simple_coroots();
// the sign agrees with the root-side test since roots and coroots are
// positive multiples of each other coordinate-wise).
bool is_dominant(const RootDatum& d, const Vec& x);

// w(e_i) = sign[i] * e_{perm[i]}, 0-based internally; signs all +1 in type A.
struct WeylElement {
  std::vector<int> perm;
  std::vector<int> sign;

  bool operator==(const WeylElement& o) const { return perm == o.perm && sign == o.sign; }
};

WeylElement identity_element(const RootDatum& d);
// Simple reflection s_i, 1-based: i < n (A: i <= n) swaps coordinates i,i+1;
// i = n for B/C flips the sign of coordinate n.
WeylElement simple_reflection(const RootDatum& d, int i);
WeylElement compose(const WeylElement& w1, const WeylElement& w2);  // w1 after w2
Vec apply(const WeylElement& w, const Vec& x);

// l(w) = #{alpha in phi^+ : w(alpha) in -phi^+}.
int weyl_length(const RootDatum& d, const WeylElement& w);

// Full group, by enumeration ((n+1)! resp. 2^n n! elements; ranks here are
// small enough that this is the simplest correct tool).
std::vector<WeylElement> weyl_group(const RootDatum& d);

// Orbit of a dominant coweight, without duplicates.  The vectors are the
// actual images w(lambda) of the representative given — no type-A
// renormalization, since the orbit feeds monomial evaluation where
// x^{(1,...,1)} is not 1.  Throws usage_error if lambda is not dominant.
std::vector<Vec> weyl_orbit(const RootDatum& d, const Vec& lambda);

// W_lambda(t) = sum over the stabilizer of lambda of t^{l(w)}.  At t = q^{-1}
// this is the normalization factor W_lambda(q^{-1}) of the symmetrized
// product formula.  Throws usage_error if lambda is not dominant.
HalfLaurent stabilizer_poly(const RootDatum& d, const Vec& lambda);

}  // namespace hl
