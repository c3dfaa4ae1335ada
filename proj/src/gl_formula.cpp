#include "hl/gl_formula.hpp"

#include <cstdlib>
#include <deque>
#include <sstream>

#include "hl/errors.hpp"

namespace hl {

std::uint64_t default_path_guard() {
  if (const char* env = std::getenv("HL_PATH_GUARD")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1'000'000;
}

namespace {

// Rows of the 2-column tableau (left taller or equal) weakly increase.
bool pair_semistandard(const Column& left, const Column& right) {
  if (left.height() < right.height()) return false;
  for (int k = 0; k < right.height(); ++k) {
    if (left.codes[k] > right.codes[k]) return false;
  }
  return true;
}

}  // namespace

FoldingTree build_tree(const Column& left, const Column& right, const VertexContext& ctx,
                       std::uint64_t path_guard) {
  if (!pair_semistandard(left, right)) {
    throw invariant_error("build_tree: root pair is not semistandard");
  }
  const std::vector<ReflectionSpec> refls = reflections_for(ctx);

  FoldingTree tree;
  tree.ctx = ctx;
  tree.nodes.push_back(TreeNode{left, right, -1, EdgeLabel::s_plus, "", {}, false});

  // The canonical chooser: first increasing reflection in list order, reused
  // for every node of this tree that shares the left column.
  std::map<Column, int> chosen;
  auto choose = [&](const Column& c1) -> int {
    auto it = chosen.find(c1);
    if (it != chosen.end()) return it->second;
    int pick = -1;
    for (size_t k = 0; k < refls.size(); ++k) {
      if (classify(refls[k], c1) == Effect::increases) {
        pick = (int)k;
        break;
      }
    }
    chosen.emplace(c1, pick);
    return pick;
  };

  std::uint64_t leaves = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int idx = queue.front();
    queue.pop_front();
    const Column c1 = tree.nodes[idx].left;   // copies: nodes vector reallocates
    const Column c2 = tree.nodes[idx].right;

    const int pick = choose(c1);
    if (pick < 0) {
      tree.nodes[idx].final_node = true;
      if (++leaves > path_guard) {
        throw invariant_error("folding tree exceeded the path guard (" + std::to_string(path_guard) + " leaves)");
      }
      continue;
    }
    const ReflectionSpec& s = refls[pick];
    const Column sc1 = apply_to_column(s, c1);
    const Column sc2 = apply_to_column(s, c2);

    auto add_child = [&](Column l, Column r, EdgeLabel label) {
      tree.nodes.push_back(TreeNode{std::move(l), std::move(r), idx, label, s.name(), {}, false});
      const int child = (int)tree.nodes.size() - 1;
      tree.nodes[idx].children.push_back(child);
      queue.push_back(child);
      if (tree.nodes.size() > 2 * path_guard + 1) {
        throw invariant_error("folding tree exceeded the path guard (node count)");
      }
    };

    if (pair_semistandard(sc1, sc2)) {
      const Effect on_right = classify(s, c2);
      if (on_right == Effect::decreases) {
        add_child(sc1, sc2, EdgeLabel::s_minus);
        if (!pair_semistandard(sc1, c2)) {
          throw invariant_error("id-child of a branching node is not semistandard (action bug)");
        }
        add_child(sc1, c2, EdgeLabel::id_plus);
      } else {
        add_child(sc1, sc2, EdgeLabel::s_plus);
      }
    } else {
      if (!pair_semistandard(sc1, c2)) {
        throw invariant_error("id-child is not semistandard although s(T) is not either (action bug)");
      }
      add_child(sc1, c2, EdgeLabel::id_plus);
    }
  }
  return tree;
}

std::vector<PathStats> leaf_paths(const FoldingTree& tree) {
  // Path stats accumulate along parent chains; nodes precede their children
  // in construction order, so one forward pass suffices.
  std::vector<PathStats> at(tree.nodes.size());
  std::vector<PathStats> out;
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    const TreeNode& node = tree.nodes[i];
    if (node.parent >= 0) {
      at[i] = at[node.parent];
      if (node.label == EdgeLabel::s_plus) ++at[i].pr;
      if (node.label == EdgeLabel::id_plus) ++at[i].pf;
    }
    if (node.final_node) out.push_back(at[i]);
  }
  return out;
}

namespace {

HalfLaurent pow_poly(const HalfLaurent& base, int e) {
  HalfLaurent acc = HalfLaurent::one();
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

HalfLaurent c_pair(const Column& left, const Column& right, const VertexContext& ctx) {
  const FoldingTree tree = build_tree(left, right, ctx);
  const HalfLaurent q = HalfLaurent::q_pow(1);
  const HalfLaurent q_minus_1 = q - HalfLaurent::one();
  HalfLaurent acc;
  for (const PathStats& p : leaf_paths(tree)) {
    acc += HalfLaurent::q_pow(p.pr) * pow_poly(q_minus_1, p.pf);
  }
  return acc;
}

int c_last_steps(const RootDatum& d, const Column& c) {
  const VertexContext ctx = special_context(d);
  const std::vector<ReflectionSpec> refls = reflections_for(ctx);
  Column cur = c;
  int k = 0;
  for (;;) {
    const ReflectionSpec* pick = nullptr;
    for (const ReflectionSpec& s : refls) {
      if (classify(s, cur) == Effect::increases) {
        pick = &s;
        break;
      }
    }
    if (!pick) return k;
    cur = apply_to_column(*pick, cur);
    ++k;
  }
}

HalfLaurent c_last(const RootDatum& d, const Column& c) {
  return HalfLaurent::q_pow(c_last_steps(d, c));
}

HalfLaurent c_tableau(const Tableau& t) {
  const RootDatum& d = t.shape.datum;
  if (t.cols.empty()) return HalfLaurent::one();
  const int r = (int)t.cols.size() - 1;
  HalfLaurent acc = c_last(d, t.cols[r]);
  for (int i = 0; i < r; ++i) {
    acc *= c_pair(t.cols[i], t.cols[i + 1], vertex_context(t, i));
  }
  return acc;
}

HalfLaurent L_poly(const RootDatum& d, const Vec& lambda, const Vec& mu) {
  if (!is_dominant(d, lambda)) throw usage_error("L_poly: lambda is not dominant");
  if (!is_dominant(d, mu)) throw usage_error("L_poly: mu is not dominant");
  const Shape shape = Shape::from_lambda(d, lambda);
  HalfLaurent acc;
  for (const Tableau& t : enumerate_ssyt(shape, mu)) acc += c_tableau(t);
  if (!acc.is_q_polynomial()) {
    throw invariant_error("L_{lambda,mu} is not a polynomial in q: " + acc.str());
  }
  return acc;
}

std::map<Vec, HalfLaurent> L_table(const RootDatum& d, const Shape& shape) {
  std::map<Vec, HalfLaurent> table;
  for (const Tableau& t : enumerate_all_ssyt(shape)) {
    const Vec mu = content(t);
    if (!is_dominant(d, mu)) continue;
    table[mu] += c_tableau(t);
  }
  for (const auto& [mu, value] : table) {
    if (!value.is_q_polynomial()) {
      throw invariant_error("L table entry is not a polynomial in q: " + value.str());
    }
  }
  return table;
}

std::string tree_to_dot(const FoldingTree& tree) {
  const RootDatum& d = tree.ctx.datum;
  auto node_label = [&](const TreeNode& n) {
    std::ostringstream os;
    for (int k = 0; k < n.left.height(); ++k) {
      if (k > 0) os << "\\n";
      os << letter_str(d, n.left.codes[k]);
      if (k < n.right.height()) os << "," << letter_str(d, n.right.codes[k]);
    }
    if (n.left.height() == 0) os << "(empty)";
    return os.str();
  };
  auto edge_label = [&](const TreeNode& n) {
    const std::string index = n.refl.substr(1);  // drop the leading 's'
    switch (n.label) {
      case EdgeLabel::s_plus: return "s" + index + "+";
      case EdgeLabel::s_minus: return "s" + index + "-";
      case EdgeLabel::id_plus: return "id" + index + "+";
    }
    return std::string();
  };

  std::ostringstream os;
  os << "digraph folding_tree {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << node_label(tree.nodes[i]) << "\"];\n";
  }
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    const TreeNode& n = tree.nodes[i];
    if (n.parent >= 0) {
      os << "  n" << n.parent << " -> n" << i << " [label=\"" << edge_label(n) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace hl
