#pragma once

/*
 * The combinatorial formula for the Hall-Littlewood expansion coefficients:
 *
 *     L_{lambda,mu}(q) = sum over T in SSYT(lambda,mu) of c(T),
 *     c(T) = c(C_r) * prod_{i=0}^{r-1} c(C_i, C_{i+1}),
 *
 * where c(C_r) = q^k counts the greedy chain of increasing reflections that
 * lifts the last column at the special origin vertex, and each pair value
 * c(C_i, C_{i+1}) is a sum over root-to-leaf paths of a folding tree:
 *
 *     c(C_left, C_right) = sum over paths of q^{pr} (q-1)^{pf},
 *
 * pr = number of edges labeled s+, pf = number labeled id+ (s- edges count
 * toward neither).
 *
 * Tree construction, at the vertex context of the pair: a node is a
 * semistandard 2-column tableau T = (C1, C2).  If no reflection of the
 * context increases C1, the node is final.  Otherwise one increasing
 * reflection s is chosen — canonically the first in the order s_1 < ... <
 * s_n < s_{j_0}, and the same choice is reused for every node of the tree
 * with the same left column.  Then:
 *
 *   - if s(T) = (s C1, s C2) is semistandard, it becomes a child, with edge
 *     label s+ when s increases or fixes C2 and s- when s decreases C2; in
 *     the s- case the tree branches and (s C1, C2) is added as a second
 *     child with label id+;
 *   - if s(T) is not semistandard, (s C1, C2) is the only child, labeled
 *     id+.
 *
 * Children of id type are asserted semistandard (they always are; a failure
 * would mean the action is buggy and must surface, not mislabel an edge).
 * Since s strictly increases C1 at every edge, the tree is finite; a
 * configurable path guard aborts pathological blowups anyway.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hl/residue_action.hpp"
#include "hl/tableaux.hpp"

namespace hl {

enum class EdgeLabel { s_plus, s_minus, id_plus };

struct TreeNode {
  Column left, right;
  int parent = -1;       // -1 at the root
  EdgeLabel label{};     // label of the edge from the parent (root: unused)
  std::string refl;      // reflection name on that edge (root: empty)
  std::vector<int> children;
  bool final_node = false;
};

struct FoldingTree {
  VertexContext ctx;
  std::vector<TreeNode> nodes;  // nodes[0] is the root; construction order
};

struct PathStats {
  int pr = 0;  // s+ edges
  int pf = 0;  // id+ edges
};

// Maximum number of leaves a single tree may grow (default 10^6, overridable
// through the HL_PATH_GUARD environment variable); exceeding it throws
// invariant_error.
std::uint64_t default_path_guard();

FoldingTree build_tree(const Column& left, const Column& right, const VertexContext& ctx,
                       std::uint64_t path_guard = default_path_guard());

// Path statistics of every root-to-leaf path, in construction order.
std::vector<PathStats> leaf_paths(const FoldingTree& tree);

// Sum of q^{pr} (q-1)^{pf} over the tree's leaf paths.
HalfLaurent c_pair(const Column& left, const Column& right, const VertexContext& ctx);

// q^k for the greedy increase count of C at the special origin vertex.
HalfLaurent c_last(const RootDatum& d, const Column& c);
int c_last_steps(const RootDatum& d, const Column& c);

// c(C_r) * prod c(C_i, C_{i+1}) with each pair taken at vertex_context(t, i).
HalfLaurent c_tableau(const Tableau& t);

// Sum of c(T) over SSYT(lambda, mu); requires both coweights dominant.
// The result is checked to lie in Z[q] (hard error otherwise).
HalfLaurent L_poly(const RootDatum& d, const Vec& lambda, const Vec& mu);

// All L_{lambda,mu} for the shape at once: enumerate every semistandard
// tableau, group by content, keep the dominant contents.  Keys are raw
// content vectors (type A: letter counts, summing to the box count).
std::map<Vec, HalfLaurent> L_table(const RootDatum& d, const Shape& shape);

// Graphviz rendering: nodes carry the two-column tableau text, edges the
// labels "s1+", "s2-", "id1_0+", ...
std::string tree_to_dot(const FoldingTree& tree);

}  // namespace hl
