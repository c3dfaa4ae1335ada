#include "hl/residue_action.hpp"

#include <algorithm>
#include <numeric>

#include "hl/errors.hpp"

namespace hl {

std::string ReflectionSpec::name() const {
  return "s" + std::to_string(index) + (is_j0 ? "_0" : "");
}

namespace {

std::vector<int> identity_map(int alphabet) {
  std::vector<int> m(alphabet + 1);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

// Swap the letters with the given codes (an involution transposition).
void swap_codes(std::vector<int>& m, int c1, int c2) {
  std::swap(m[c1], m[c2]);
}

int unbarred_code(int base) { return base; }
int barred_code(const RootDatum& d, int base) { return 2 * d.rank + 1 - base; }

void check_involution(const ReflectionSpec& s) {
  for (size_t c = 1; c < s.letter_map.size(); ++c) {
    if (s.letter_map[s.letter_map[c]] != (int)c) {
      throw invariant_error("reflection letter map is not an involution: " + s.name());
    }
  }
}

}  // namespace

std::vector<ReflectionSpec> reflections_for(const VertexContext& ctx) {
  const RootDatum& d = ctx.datum;
  const int n = d.rank;
  const int alphabet = alphabet_size(d);
  std::vector<ReflectionSpec> out;

  if (ctx.special) {
    for (int k = 1; k <= n; ++k) {
      ReflectionSpec s{ctx, k, false, identity_map(alphabet)};
      if (d.family == Family::A) {
        swap_codes(s.letter_map, k, k + 1);
      } else if (k < n) {
        swap_codes(s.letter_map, unbarred_code(k), unbarred_code(k + 1));
        swap_codes(s.letter_map, barred_code(d, k), barred_code(d, k + 1));
      } else {
        swap_codes(s.letter_map, unbarred_code(n), barred_code(d, n));
      }
      check_involution(s);
      out.push_back(std::move(s));
    }
    return out;
  }

  const int j = ctx.j;
  auto sigma = [&](int m) { return ctx.sigma[m]; };
  for (int m = 1; m <= n; ++m) {
    if (m == j) continue;  // replaced by j_0 below
    ReflectionSpec s{ctx, m, false, identity_map(alphabet)};
    if (m < n) {
      swap_codes(s.letter_map, unbarred_code(sigma(m)), unbarred_code(sigma(m + 1)));
      swap_codes(s.letter_map, barred_code(d, sigma(m)), barred_code(d, sigma(m + 1)));
    } else {
      swap_codes(s.letter_map, unbarred_code(sigma(n)), barred_code(d, sigma(n)));
    }
    check_involution(s);
    out.push_back(std::move(s));
  }

  ReflectionSpec s0{ctx, j, true, identity_map(alphabet)};
  if (d.family == Family::B) {
    swap_codes(s0.letter_map, unbarred_code(sigma(j)), barred_code(d, sigma(j)));
  } else {
    swap_codes(s0.letter_map, unbarred_code(sigma(j)), barred_code(d, sigma(j - 1)));
    swap_codes(s0.letter_map, unbarred_code(sigma(j - 1)), barred_code(d, sigma(j)));
  }
  check_involution(s0);
  out.push_back(std::move(s0));
  return out;
}

Column apply_to_column(const ReflectionSpec& s, const Column& c) {
  const RootDatum& d = s.ctx.datum;
  if (!s.ctx.special) {
    std::vector<int> expected(s.ctx.sigma.begin() + 1, s.ctx.sigma.begin() + 1 + s.ctx.j);
    std::sort(expected.begin(), expected.end());
    if (base_set(d, c) != expected) {
      throw invariant_error("column incompatible with nonspecial context (base set mismatch)");
    }
  }
  Column img;
  img.codes.reserve(c.codes.size());
  for (int code : c.codes) img.codes.push_back(s.letter_map[code]);
  std::sort(img.codes.begin(), img.codes.end());
  if (!column_valid(d, img)) {
    throw invariant_error("reflection " + s.name() + " produced an invalid column");
  }
  return img;
}

Effect classify(const ReflectionSpec& s, const Column& c) {
  const Column img = apply_to_column(s, c);
  bool up = false, down = false;
  for (size_t k = 0; k < c.codes.size(); ++k) {
    if (img.codes[k] > c.codes[k]) up = true;
    if (img.codes[k] < c.codes[k]) down = true;
  }
  if (up && down) {
    throw invariant_error("mixed movement under " + s.name() + " (should be impossible)");
  }
  if (up) return Effect::increases;
  if (down) return Effect::decreases;
  return Effect::fixes;
}

}  // namespace hl
