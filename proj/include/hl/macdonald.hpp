#pragma once

/*
 * Macdonald's closed formula for the type A expansion coefficients, in two
 * equivalent forms, plus its column-by-column refinement.  Everything here
 * is type A only (no closed formula exists for B/C; the folding tree is the
 * general tool and this module is its independent cross-check).
 *
 * Heads form.  Augment T to T-hat by appending one box with entry "infinity"
 * to every nonzero row of the shape.  For a box u of T in column i and row
 * k, the head h(u) is the set of boxes of T-hat in column i+1 and rows <= k
 * whose entry is >= c(u).  Then
 *
 *     phi_T(t) = prod over boxes u of T with no v in h(u) having
 *                c(v) = c(u)   of   (1 - t^{|h(u)|}).
 *
 * Since the T-hat column right of column i consists of C_{i+1}'s entries
 * topped up with infinity boxes to height h_i, each factor only involves the
 * adjacent column pair — phi_T(t) = prod_i phi_{C_i}(t) splits by columns.
 *
 * Chain form.  Let lambda^{(i)} be the partition of boxes with entries <= i
 * (lambda^{(0)} empty, lambda^{(n+1)} = lambda).  Each consecutive quotient
 * is a horizontal strip and
 *
 *     phi_T(t) = prod_i phi_{lambda^{(i)}/lambda^{(i-1)}}(t),
 *     phi_{lam/mu}(t) = prod over j with (lam-mu)'_j > (lam-mu)'_{j+1} of
 *                       (1 - t^{m_j(lam)}),
 *
 * where m_j is the part multiplicity in the UPPER partition lam of the skew
 * pair.  (One display of the source formula reads m_j(mu); its own proof
 * manipulates m_j(lambda^{(i)}), and only the upper reading reproduces the
 * heads form — the equality of the two forms is a test.)
 *
 * With b_lambda(t) = prod_i phi_{m_i(lambda)}(t), the tableau summand is
 *
 *     c(T) = t^{-<lambda+mu, rho>} phi_T(t) / b_lambda(t),
 *
 * and the column split sharpens this to
 *
 *     c(C_i, C_{i+1}) = t^{-<lambda_(i)+mu_(i), rho>}
 *                       phi_{C_i}(t) / phi_{h_i - h_{i+1}}(t),
 *
 * where lambda_(i) = omega_{h_i}, mu_(i) = the column's content, and the
 * denominator index h_i - h_{i+1} equals m_{i+1}(lambda), the multiplicity
 * of the part i+1 in lambda.  M_last is the same with an all-infinity
 * phantom right column (the ratio collapses to 1 and the value is the pure
 * power q^{<lambda_(r)+mu_(r), rho>}).
 */

#include <optional>
#include <vector>

#include "hl/poly.hpp"
#include "hl/tableaux.hpp"

namespace hl {

// A head member: position in T-hat (0-based), entry code or infinity.
struct HeadBox {
  int row;
  int col;
  std::optional<int> entry;  // nullopt = infinity (frame box)
};

// Head of the box of T at (row, col), 0-based; the box must lie in T.
std::vector<HeadBox> head(const Tableau& t, int col, int row);

// The phi_{C_i} factor local to column `col` (right neighbor taken from the
// tableau; the last column sees only infinity boxes).
HalfLaurent phi_column(const Tableau& t, int col);

HalfLaurent phi_T_heads(const Tableau& t);
HalfLaurent phi_T_chain(const Tableau& t);

// b_lambda for a partition given as weakly decreasing nonnegative rows.
HalfLaurent b_lambda(const std::vector<int>& partition);

// Column factors of the tableau summand (see file comment); `col` as above.
HalfLaurent M_pair(const Tableau& t, int col);   // col < r
HalfLaurent M_last(const Tableau& t);            // the last column

// Sum of t^{-<lambda+mu,rho>} phi_T/b_lambda over SSYT(lambda, mu); equals
// the folding-tree L_poly.  Type A only; lambda, mu dominant.
HalfLaurent macdonald_L(const RootDatum& d, const Vec& lambda, const Vec& mu);

}  // namespace hl
