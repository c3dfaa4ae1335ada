#pragma once

/*
 * Simple reflections of the residue Weyl group attached to a vertex context,
 * acting on tableau columns through involutions of the letter alphabet.
 *
 * Special vertices (every type A vertex, and every B/C vertex that is not
 * interior to a designated column pair) carry the full set s_1..s_n:
 *
 *     s_k (k < n):  k <-> k+1   and   kbar <-> (k+1)bar
 *     s_n:          A: n <-> n+1;   B/C: n <-> nbar
 *
 * A nonspecial vertex sits between the two j-box columns of a designated
 * pair.  Its reflections are conjugated by the embedding sigma, which lists
 * the left column's base values ascending as sigma(1..j) and the complement
 * ascending as sigma(j+1..n).  Writing b = sigma(m):
 *
 *     s_m (m < j or j < m < n):  sigma(m) <-> sigma(m+1), bars following
 *     s_n:                       sigma(n) <-> sigma(n)bar
 *     s_{j_0}:   B: sigma(j) <-> sigma(j)bar
 *                C: sigma(j) <-> sigma(j-1)bar  and  sigma(j-1) <-> sigma(j)bar
 *
 * The index j is replaced by j_0 in the list (m runs over {1,..,j-1, j_0,
 * j+1,..,n}).  Reflections with m > j move only letters outside the pair's
 * base set, so they fix every compatible column; they are generated anyway
 * for completeness but can never be chosen by the folding-tree algorithm,
 * which requires a strict increase.
 *
 * Conjugation by sigma pairs unbarred letters with unbarred letters (sigma
 * is a plain permutation of base values; it commutes with the bar
 * involution), which is why the m < j rule above reads sigma(m) <->
 * sigma(m+1) rather than crossing bars.
 */

#include <string>
#include <vector>

#include "hl/tableaux.hpp"

namespace hl {

struct ReflectionSpec {
  VertexContext ctx;
  int index = 0;      // k (special) or m (nonspecial); the j_0 entry has index j
  bool is_j0 = false;
  std::vector<int> letter_map;  // involution on codes; letter_map[0] unused

  // "s1", "s3", and "s2_0" for the j_0 reflection with j = 2.
  std::string name() const;
};

// The complete list for the context, ordered s_1 < s_2 < ... < s_n < s_{j_0}
// (the j_0 reflection, when present, sorts last; this is the order the
// folding tree's canonical chooser scans).
std::vector<ReflectionSpec> reflections_for(const VertexContext& ctx);

// Image column under the letter involution, re-sorted.  Throws
// invariant_error if the image violates column invariants or if a
// nonspecial-context column does not have base set sigma({1..j}).
Column apply_to_column(const ReflectionSpec& s, const Column& c);

enum class Effect { increases, decreases, fixes };

// Compares the sorted image with the sorted original entrywise: equal ->
// fixes; entrywise >= with at least one strict -> increases; entrywise <=
// with at least one strict -> decreases.  A simultaneous strict increase and
// decrease ("mixed") cannot occur for these involutions; if it ever did, an
// invariant_error surfaces rather than mislabeling a tree edge.
Effect classify(const ReflectionSpec& s, const Column& c);

}  // namespace hl
