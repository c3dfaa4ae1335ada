#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <vector>

#include "checkers.hpp"
#include "hl/errors.hpp"
#include "hl/gl_formula.hpp"

using namespace hl;

namespace {

const RootDatum A1{Family::A, 1}, A2{Family::A, 2}, A3{Family::A, 3};
const RootDatum B2{Family::B, 2}, B3{Family::B, 3};
const RootDatum C2{Family::C, 2}, C3{Family::C, 3};

Vec vec(std::initializer_list<Rat> xs) { return Vec(xs); }
Column col(std::initializer_list<int> codes) { return Column{std::vector<int>(codes)}; }

Tableau a2_fixture() {  // rows (1,3)/(2)
  return Tableau{Shape::from_lambda(A2, vec({2, 1, 0})), {col({1, 2}), col({3})}};
}
Tableau b2_fixture() {  // rows (1,1,1')/(2')
  return Tableau{Shape::from_omega(B2, {1, 1}), {col({1, 3}), col({1}), col({4})}};
}
Tableau c2_fixture() {  // rows (1,2,2')/(2',1')
  return Tableau{Shape::from_omega(C2, {1, 1}), {col({1, 3}), col({2, 4}), col({3})}};
}

int two_rho_pair(const RootDatum& d, const Vec& x) {
  Rat e = pair(x, rho(d)) * 2;
  REQUIRE(e.get_den() == 1);
  return (int)e.get_num().get_si();
}

// Independent count for the greedy lift: positive roots pairing positively
// with the column's coweight.
int root_count(const RootDatum& d, const Column& c) {
  const Vec w = column_coweight_raw(d, c);
  int k = 0;
  for (const Vec& a : positive_roots(d)) {
    if (pair(w, a) > 0) ++k;
  }
  return k;
}

std::vector<std::pair<int, int>> sorted_paths(const FoldingTree& tree) {
  std::vector<std::pair<int, int>> out;
  for (const PathStats& p : leaf_paths(tree)) out.emplace_back(p.pr, p.pf);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("c_last") {
  // Worked examples: last columns of the three golden tableaux.
  CHECK(c_last(A2, col({3})) == HalfLaurent::one());
  CHECK(c_last(B2, col({4})) == HalfLaurent::one());   // {1'}: nothing increases
  CHECK(c_last(C2, col({3})) == HalfLaurent::q_pow(1));  // {2'} -> {1'}, then stuck
  CHECK(c_last_steps(C2, col({3})) == 1);

  // Greedy from the bottom letter walks the full chain.
  CHECK(c_last(A2, col({1})) == HalfLaurent::q_pow(2));
  CHECK(c_last(A2, col({})) == HalfLaurent::one());

  // The step count equals the number of positive roots seeing the coweight,
  // and is independent of which increasing reflection is taken when.
  for (const RootDatum& d : {A1, A2, A3, B2, B3, C2, C3}) {
    const int max_h = d.family == Family::A ? d.rank + 1 : d.rank;
    for (int h = 0; h <= max_h; ++h) {
      for (const Column& c : valid_columns(d, h)) {
        const int k = c_last_steps(d, c);
        CHECK(k == root_count(d, c));
        CHECK(c_last(d, c) == HalfLaurent::q_pow(k));
        CHECK(hl_test::c_last_all_steps(d, c) == std::set<int>{k});
      }
    }
  }
}

TEST_CASE("build_tree: branching worked example") {
  // Pair (C_0, C_1) = ({1,2},{3}) of the A_2 fixture: s2 decreases the right
  // column, so the root branches; the other branch folds later.
  const FoldingTree tree = build_tree(col({1, 2}), col({3}), special_context(A2));
  REQUIRE(tree.nodes.size() == 5);
  CHECK(tree.nodes[0].left == col({1, 2}));
  CHECK(tree.nodes[0].right == col({3}));
  REQUIRE(tree.nodes[0].children.size() == 2);

  const TreeNode& br_s = tree.nodes[tree.nodes[0].children[0]];
  CHECK(br_s.label == EdgeLabel::s_minus);
  CHECK(br_s.refl == "s2");
  CHECK(br_s.left == col({1, 3}));
  CHECK(br_s.right == col({2}));

  const TreeNode& br_id = tree.nodes[tree.nodes[0].children[1]];
  CHECK(br_id.label == EdgeLabel::id_plus);
  CHECK(br_id.refl == "s2");
  CHECK(br_id.left == col({1, 3}));
  CHECK(br_id.right == col({3}));

  CHECK(sorted_paths(tree) ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 1}});  // (q-1) + q(q-1)
  CHECK(c_pair(col({1, 2}), col({3}), special_context(A2)) ==
        HalfLaurent::q_pow(2) - HalfLaurent::one());
}

TEST_CASE("build_tree: nonspecial chain and final root") {
  // B_2 pair ({1},{1'}): the only increasing reflection is s1_0, whose image
  // pair is not semistandard, so the single edge is an id fold.
  const VertexContext ctx = nonspecial_context(B2, col({1}));
  const FoldingTree tree = build_tree(col({1}), col({4}), ctx);
  REQUIRE(tree.nodes.size() == 2);
  CHECK(tree.nodes[1].label == EdgeLabel::id_plus);
  CHECK(tree.nodes[1].refl == "s1_0");
  CHECK(tree.nodes[1].left == col({4}));
  CHECK(tree.nodes[1].right == col({4}));
  CHECK(tree.nodes[1].final_node);
  CHECK(sorted_paths(tree) == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(c_pair(col({1}), col({4}), ctx) ==
        HalfLaurent::q_pow(1) - HalfLaurent::one());

  // A pair whose left column admits no increase: single-node tree, one empty
  // path, value 1.
  const FoldingTree stuck = build_tree(col({4}), col({4}), nonspecial_context(B2, col({4})));
  REQUIRE(stuck.nodes.size() == 1);
  CHECK(stuck.nodes[0].final_node);
  CHECK(sorted_paths(stuck) == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(c_pair(col({4}), col({4}), nonspecial_context(B2, col({4}))) == HalfLaurent::one());

  CHECK_THROWS_AS(build_tree(col({2}), col({1}), special_context(A2)), invariant_error);

  // C_2 pair ({1,2},{1,2'}) at the nonspecial context of {1,2}: semistandard,
  // but with an ODD number of bar exchanges it is not a designated pair, so
  // no structurally valid tableau ever presents it here.  The only increasing
  // reflection (s2_0) fixes the right column and yields a non-semistandard
  // image, leaving the builder no legal move: it must refuse loudly rather
  // than mislabel an edge.
  const VertexContext odd = nonspecial_context(C2, col({1, 2}));
  CHECK_THROWS_AS(build_tree(col({1, 2}), col({1, 3}), odd), invariant_error);
  CHECK_THROWS_AS(build_tree(col({1, 2}), col({2, 4}), odd), invariant_error);
}

TEST_CASE("c_pair golden values") {
  CHECK(c_pair(col({1, 3}), col({1}), special_context(B2)) == HalfLaurent::q_pow(2));
  CHECK(c_pair(col({1, 3}), col({2, 4}), nonspecial_context(C2, col({1, 3}))) ==
        HalfLaurent::q_pow(1) - HalfLaurent::one());
  CHECK(c_pair(col({2, 4}), col({3}), special_context(C2)) ==
        HalfLaurent::q_pow(1) - HalfLaurent::one());
  CHECK(c_pair(col({1, 2}), col({1}), special_context(A2)) == HalfLaurent::q_pow(2));
  CHECK(c_pair(col({1, 3}), col({2}), special_context(A2)) ==
        HalfLaurent::q_pow(1) - HalfLaurent::one());
}

TEST_CASE("c_tableau") {
  const HalfLaurent q = HalfLaurent::q_pow(1);
  const HalfLaurent one = HalfLaurent::one();
  CHECK(c_tableau(a2_fixture()) == HalfLaurent::q_pow(2) - one);
  CHECK(c_tableau(b2_fixture()) == (q - one) * HalfLaurent::q_pow(2));
  CHECK(c_tableau(c2_fixture()) == q * (q - one) * (q - one));

  // The second tableau of the A_2 family: rows (1,2)/(3).
  const Tableau other{Shape::from_lambda(A2, vec({2, 1, 0})), {col({1, 3}), col({2})}};
  CHECK(c_tableau(other) == HalfLaurent::q_pow(2) - q);

  const Tableau empty{Shape::from_lambda(A2, vec({0, 0, 0})), {}};
  CHECK(c_tableau(empty) == one);
}

TEST_CASE("choice independence on the worked pairs") {
  using hl_test::c_pair_all_choosers;
  auto singleton = [](const Column& l, const Column& r, const VertexContext& ctx) {
    const std::set<HalfLaurent> all = c_pair_all_choosers(l, r, ctx);
    REQUIRE(all.size() == 1);
    return *all.begin();
  };
  CHECK(singleton(col({1, 2}), col({3}), special_context(A2)) ==
        c_pair(col({1, 2}), col({3}), special_context(A2)));
  CHECK(singleton(col({1, 3}), col({1}), special_context(B2)) ==
        c_pair(col({1, 3}), col({1}), special_context(B2)));
  CHECK(singleton(col({1}), col({4}), nonspecial_context(B2, col({1}))) ==
        c_pair(col({1}), col({4}), nonspecial_context(B2, col({1}))));
  CHECK(singleton(col({1, 3}), col({2, 4}), nonspecial_context(C2, col({1, 3}))) ==
        c_pair(col({1, 3}), col({2, 4}), nonspecial_context(C2, col({1, 3}))));

  // Exhaustive over all semistandard A_2 column pairs.
  std::vector<Column> cols;
  for (int h = 1; h <= 3; ++h) {
    for (const Column& c : valid_columns(A2, h)) cols.push_back(c);
  }
  for (const Column& l : cols) {
    for (const Column& r : cols) {
      if (!hl_test::pair_ssyt(l, r)) continue;
      const auto all = c_pair_all_choosers(l, r, special_context(A2));
      REQUIRE(all.size() == 1);
      CHECK(*all.begin() == c_pair(l, r, special_context(A2)));
    }
  }
}

TEST_CASE("path guard") {
  CHECK_THROWS_AS(build_tree(col({1, 2}), col({3}), special_context(A2), 1),
                  invariant_error);

  unsetenv("HL_PATH_GUARD");
  CHECK(default_path_guard() == 1000000);
  setenv("HL_PATH_GUARD", "123", 1);
  CHECK(default_path_guard() == 123);
  unsetenv("HL_PATH_GUARD");
  CHECK(default_path_guard() == 1000000);
}

TEST_CASE("L_poly") {
  const Vec zero3 = vec({0, 0, 0});
  CHECK(L_poly(A2, zero3, zero3) == HalfLaurent::one());
  CHECK(L_poly(A2, vec({2, 1, 0}), vec({3, 0, 0})) == HalfLaurent::zero());
  CHECK(L_poly(A2, vec({2, 1, 0}), vec({1, 1, 1})) ==
        HalfLaurent::q_pow(2, 2) - HalfLaurent::q_pow(1) - HalfLaurent::one());

  CHECK_THROWS_AS(L_poly(A2, vec({1, 2, 0}), zero3), usage_error);
  CHECK_THROWS_AS(L_poly(A2, vec({2, 1, 0}), vec({0, 1, 2})), usage_error);

  // L_{lambda,lambda} = q^{<2 lambda, rho>}.
  for (const RootDatum& d : {A1, A2, A3}) {
    for (const auto& parts : hl_test::partitions_up_to(4, d.rank)) {
      const Vec lam = hl_test::lambda_of_partition(d, parts);
      CHECK(L_poly(d, lam, lam) == HalfLaurent::q_pow(two_rho_pair(d, lam)));
    }
  }
  for (const RootDatum& d : {B2, B3, C2, C3}) {
    for (const auto& a : hl_test::omega_vectors(d.rank, 2)) {
      const Vec lam = Shape::from_omega(d, a).lambda();
      CHECK(L_poly(d, lam, lam) == HalfLaurent::q_pow(two_rho_pair(d, lam)));
    }
  }
}

TEST_CASE("type A degree and leading coefficient") {
  // Every c(T) is monic of q-degree <lambda+mu, rho>, so the leading
  // coefficient of L counts the tableaux.
  for (const RootDatum& d : {A1, A2}) {
    for (const auto& lp : hl_test::partitions_up_to(4, d.rank)) {
      const Vec lam = hl_test::lambda_of_partition(d, lp);
      const Shape shape = Shape::from_lambda(d, lam);
      const int boxes = shape.box_count();
      for (const auto& mp : hl_test::partitions_up_to(boxes, d.rank + 1)) {
        int sum = 0;
        for (int x : mp) sum += x;
        if (sum != boxes) continue;
        const Vec mu = hl_test::lambda_of_partition(d, mp);
        const auto tabs = enumerate_ssyt(shape, mu);
        const HalfLaurent L = L_poly(d, lam, mu);
        if (tabs.empty()) {
          CHECK(L.is_zero());
          continue;
        }
        // v-degree 2<lambda+mu, rho>, by bilinearity of the pairing.
        const int expect = two_rho_pair(d, lam) + two_rho_pair(d, mu);
        CHECK(L.max_exponent() == expect);
        CHECK(L.terms().rbegin()->second == (long)tabs.size());
        for (const Tableau& t : tabs) {
          const HalfLaurent c = c_tableau(t);
          CHECK(c.max_exponent() == expect);
          CHECK(c.terms().rbegin()->second == 1);
        }
      }
    }
  }
}

TEST_CASE("L_table") {
  const auto a = L_table(A2, Shape::from_lambda(A2, vec({2, 1, 0})));
  REQUIRE(a.size() == 2);
  CHECK(a.at(vec({2, 1, 0})) == HalfLaurent::q_pow(4));
  CHECK(a.at(vec({1, 1, 1})) ==
        HalfLaurent::q_pow(2, 2) - HalfLaurent::q_pow(1) - HalfLaurent::one());

  // B_2 spin column: only (1/2, 1/2) is dominant among the four contents.
  Rat h(1, 2);
  const auto b = L_table(B2, Shape::from_omega(B2, {0, 1}));
  REQUIRE(b.size() == 1);
  CHECK(b.at(Vec{h, h}) == HalfLaurent::q_pow(3));

  // General sanity on a C_2 table: dominant keys, Z[q] values, diagonal top.
  const Shape cs = Shape::from_omega(C2, {1, 1});
  const auto c = L_table(C2, cs);
  REQUIRE(c.count(cs.lambda()) == 1);
  CHECK(c.at(cs.lambda()) == HalfLaurent::q_pow(7));  // <2 lambda, rho> = 7
  for (const auto& [mu, L] : c) {
    CHECK(is_dominant(C2, mu));
    CHECK(L.is_q_polynomial());
    // L(1) = delta_{lambda,mu} across the table.
    CHECK(L.substitute_q(1) == (mu == cs.lambda() ? 1 : 0));
  }
}

TEST_CASE("tree_to_dot") {
  const std::string dot71 =
      tree_to_dot(build_tree(col({1, 2}), col({3}), special_context(A2)));
  CHECK(dot71.find("digraph") != std::string::npos);
  CHECK(dot71.find("s2-") != std::string::npos);
  CHECK(dot71.find("id2+") != std::string::npos);
  CHECK(dot71.find("s1+") != std::string::npos);
  CHECK(dot71.find("id1+") != std::string::npos);

  const std::string dot72 =
      tree_to_dot(build_tree(col({1}), col({4}), nonspecial_context(B2, col({1}))));
  CHECK(dot72.find("id1_0+") != std::string::npos);
}
