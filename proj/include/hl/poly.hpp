#pragma once

/*
 * Exact sparse Laurent polynomials in one variable v, where
 *
 *     v^2 = q       and       t = q^{-1} = v^{-2}.
 *
 * Everything the Hall-Littlewood machinery produces lives in Z[v, v^{-1}]:
 * coefficients such as L_{lambda,mu}(q) are honest polynomials in q (all
 * v-exponents even and nonnegative), but intermediate prefactors of the form
 * q^{-<lambda+mu, rho>} can carry half-integer q-exponents in type B, where
 * coweights have half-integer coordinates.  Working with v = q^{1/2} keeps
 * every exponent integral without introducing a fractional-exponent type.
 *
 * Coefficients are GMP big integers: the exact rational oracle evaluates
 * these polynomials at points like q = 289, where even small examples
 * overflow 64-bit arithmetic.
 */

#include <gmpxx.h>

#include <map>
#include <string>

namespace hl {

using Int = mpz_class;
using Rat = mpq_class;

class HalfLaurent {
 public:
  // The zero polynomial.
  HalfLaurent() = default;

  static HalfLaurent zero() { return HalfLaurent{}; }
  static HalfLaurent one() { return v_pow(0); }

  // coeff * v^e
  static HalfLaurent v_pow(int e, Int coeff = 1);
  // coeff * q^e = coeff * v^{2e}
  static HalfLaurent q_pow(int e, Int coeff = 1);
  // t^k = v^{-2k}
  static HalfLaurent t_pow(int k) { return v_pow(-2 * k); }
  // 1 - t^k
  static HalfLaurent one_minus_t_pow(int k);

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const HalfLaurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const HalfLaurent& o) const { return terms_ != o.terms_; }
  bool operator<(const HalfLaurent& o) const { return terms_ < o.terms_; }

  // Sparse canonical form: v-exponent -> nonzero coefficient.
  const std::map<int, Int>& terms() const { return terms_; }

  HalfLaurent operator+(const HalfLaurent& o) const;
  HalfLaurent operator-(const HalfLaurent& o) const;
  HalfLaurent operator-() const;
  HalfLaurent operator*(const HalfLaurent& o) const;
  HalfLaurent& operator+=(const HalfLaurent& o) { return *this = *this + o; }
  HalfLaurent& operator-=(const HalfLaurent& o) { return *this = *this - o; }
  HalfLaurent& operator*=(const HalfLaurent& o) { return *this = *this * o; }

  // Multiply by v^dv (exponent shift).
  HalfLaurent shifted(int dv) const;

  // All exponents even (a polynomial in q and q^{-1}).
  bool all_exponents_even() const;
  // All exponents even AND nonnegative: an element of Z[q].
  bool is_q_polynomial() const;

  int min_exponent() const;  // requires nonzero
  int max_exponent() const;  // requires nonzero

  // Exact value at v = v0 (v0 != 0).
  Rat eval(const Rat& v0) const;
  // Exact value at q = q0 (q0 != 0); requires all exponents even.
  Rat substitute_q(const Rat& q0) const;

  // Human-readable form: printed in q when all exponents are even
  // ("q^2 - 1", "2*q^2 - q - 1"), otherwise in v ("v^3 + v").
  std::string str() const;

 private:
  std::map<int, Int> terms_;

  void set(int e, Int c);  // drops zeros, keeping canonical form
};

// Quotient a/b with a = quotient * b exactly; throws invariant_error if b = 0
// or the division leaves a remainder.  (Used for phi_T / b_lambda and the
// theorem-level column factorizations, where divisibility is a proven fact;
// a failure indicates a bug or a broken hypothesis and must surface loudly.)
HalfLaurent exact_divide(const HalfLaurent& a, const HalfLaurent& b);

// phi_k(t) = (1-t)(1-t^2)...(1-t^k); phi_0 = 1.
HalfLaurent phi_k(int k);

}  // namespace hl
