#pragma once

/*
 * Young tableaux of types A_n, B_n, C_n.
 *
 * Letters are totally ordered as
 *
 *     1 < 2 < ... < n < nbar < ... < 2bar < 1bar      (types B, C)
 *     1 < 2 < ... < n+1                               (type A, no bars)
 *
 * and are stored as integer codes equal to their position in this order
 * (so for B/C, code <= n means the unbarred letter "code", and code > n
 * means the barred letter with base 2n+1-code).  Comparing codes compares
 * letters.
 *
 * A column is a strictly increasing sequence of letters, never containing
 * both i and ibar (B/C).  A shape is determined by the coefficients
 * lambda = a_1 omega_1 + ... + a_n omega_n; its row lengths p are
 *
 *     A: p_i = lambda_i (epsilon-form);
 *     B: p_i = 2a_i + ... + 2a_{n-1} + a_n;
 *     C: p_1 = a_1 + 2a_2 + ... + 2a_n,  p_i = 2a_i + ... + 2a_n (i >= 2),
 *
 * reflecting that the non-minuscule fundamental columns are "doubled": each
 * omega_i with 2a_i in the formulas contributes column pairs.  A tableau is
 * a filling by columns C_0..C_r (left to right, aligned at the top) whose
 * heights are the conjugate of p.
 *
 * Designated column pairs.  For B, the 2a_i columns of height i < n form
 * consecutive pairs within their height group, and the a_n columns of
 * height n are unpaired; for C, the a_1 columns of height 1 (the rightmost
 * group) are unpaired and the 2a_i columns of height i > 1 form consecutive
 * pairs.  The two members of a designated pair must have the same set of
 * base values, differing by barring some entries — an arbitrary number of
 * them in type B, an even number in type C.  Members of designated pairs
 * carry coweight (1/2) * sum of epsilon-entries (with epsilon_ibar =
 * -epsilon_i); so do height-n columns in type B (the spin node); all other
 * columns carry the full sum.
 *
 * The vertex between the two columns of a designated pair is "nonspecial":
 * the reflections available there are conjugated by the embedding sigma
 * that lists the left column's base values in ascending order (see
 * residue_action).  All other vertices, and all vertices in type A, are
 * special.
 */

#include <optional>
#include <string>
#include <vector>

#include "hl/root_system.hpp"

namespace hl {

struct Letter {
  int base;
  bool barred;
};

// Size of the alphabet: n+1 for A_n, 2n for B_n/C_n.
int alphabet_size(const RootDatum& d);

int letter_code(const RootDatum& d, const Letter& l);
Letter letter_at(const RootDatum& d, int code);
// "3" for unbarred 3, "3'" for 3bar.
std::string letter_str(const RootDatum& d, int code);

struct Column {
  std::vector<int> codes;  // strictly increasing

  int height() const { return (int)codes.size(); }
  bool operator==(const Column& o) const { return codes == o.codes; }
  bool operator!=(const Column& o) const { return codes != o.codes; }
  bool operator<(const Column& o) const { return codes < o.codes; }
};

// Strictly increasing codes, in range, and (B/C) no base together with its bar.
bool column_valid(const RootDatum& d, const Column& c);

// All valid columns of the given height, in lexicographic order.
std::vector<Column> valid_columns(const RootDatum& d, int height);

// Sorted base values of a column's entries (each base occurs at most once).
std::vector<int> base_set(const RootDatum& d, const Column& c);

// Sum of epsilon_entry over the column (epsilon_ibar = -epsilon_i), halved
// when `halved` is set.
Vec column_coweight_raw(const RootDatum& d, const Column& c, bool halved = false);

struct Shape {
  RootDatum datum;
  std::vector<int> omega;  // a_1..a_n, nonnegative

  static Shape from_omega(const RootDatum& d, std::vector<int> a);
  // From a dominant integral coweight in epsilon-coordinates.
  static Shape from_lambda(const RootDatum& d, const Vec& lambda_eps);

  // lambda = sum a_i omega_i in epsilon-coordinates (canonical form for A).
  Vec lambda() const;

  std::vector<int> rows() const;            // p_1 >= p_2 >= ...
  std::vector<int> column_heights() const;  // conjugate of rows(), left to right
  int num_columns() const;
  int box_count() const;

  // Designated-pair layout (see file comment); indices are column positions.
  std::optional<int> pair_partner(int col) const;
  bool column_halved(int col) const;

  bool operator==(const Shape& o) const { return datum == o.datum && omega == o.omega; }
};

struct Tableau {
  Shape shape;
  std::vector<Column> cols;  // C_0..C_r

  bool operator==(const Tableau& o) const { return shape == o.shape && cols == o.cols; }
  bool operator<(const Tableau& o) const;  // by reading words, rightmost most significant
};

// Heights match the shape, all columns valid, designated pairs satisfy the
// base-set/bar-exchange constraints.
bool structurally_valid(const Tableau& t);

// Rows weakly increase left to right.
bool is_semistandard(const Tableau& t);

// Every entry of C_i also occurs in C_{i-1}.
bool is_minimal(const Tableau& t);

// Content coweight, via the per-type counting formulas:
//   A: mu_i = #(entry i);
//   B: mu_i = (#i - #ibar) / 2;
//   C: mu_i = ((#i - #ibar) + (#i - #ibar restricted to 1-box columns)) / 2.
// Always equals the sum of the columns' (halved) coweights.
Vec content(const Tableau& t);
// The same, as the sum over column_coweight(t, i) — used as a cross-check.
Vec content_by_columns(const Tableau& t);
// Coweight of column i of t, halved per the shape's rule.
Vec column_coweight(const Tableau& t, int i);

// All semistandard tableaux of the shape (deterministic order: lexicographic
// by column reading words, rightmost column most significant).
std::vector<Tableau> enumerate_all_ssyt(const Shape& s);
// Those with the given content (type A compares canonical forms).
std::vector<Tableau> enumerate_ssyt(const Shape& s, const Vec& mu);

struct VertexContext {
  RootDatum datum;
  bool special = true;
  int j = 0;                    // box count of the pair, nonspecial only
  std::vector<int> sigma;       // 1-based: sigma[1..n]; base values, nonspecial only

  bool operator==(const VertexContext& o) const {
    return datum == o.datum && special == o.special && j == o.j && sigma == o.sigma;
  }
};

VertexContext special_context(const RootDatum& d);
// Nonspecial context at a pair of j-box columns whose left member is `left`:
// sigma(1..j) = sorted base values of `left`, sigma(j+1..n) = the complement
// in {1..n}, ascending.
VertexContext nonspecial_context(const RootDatum& d, const Column& left);

// Context of the vertex between C_i and C_{i+1}: nonspecial exactly when
// (C_i, C_{i+1}) is a designated pair of the shape.
VertexContext vertex_context(const Tableau& t, int i);

// Parity reformulation of the same fact, used as a consistency check:
// B: equal heights j < n and r-i odd; C: equal heights j > 1 and i even.
// (A: never.)
bool nonspecial_by_parity(const Shape& s, int i);

// Partition utilities (type A).  conjugate(p)_i = #{k : p_k >= i};
// m_index(p, i) = p'_i - p'_{i+1} = multiplicity of i among the parts.
std::vector<int> conjugate(const std::vector<int>& partition);
int m_index(const std::vector<int>& partition, int i);

}  // namespace hl
