#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hl/errors.hpp"
#include "hl/root_system.hpp"

using namespace hl;

namespace {

Vec vec(std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

bool contains(const std::vector<Vec>& roots, const Vec& r) {
  return std::find(roots.begin(), roots.end(), r) != roots.end();
}

const RootDatum A1{Family::A, 1}, A2{Family::A, 2}, A3{Family::A, 3};
const RootDatum B2{Family::B, 2}, B3{Family::B, 3};
const RootDatum C2{Family::C, 2}, C3{Family::C, 3};

std::vector<RootDatum> all_data() { return {A1, A2, A3, B2, B3, C2, C3}; }

}  // namespace

TEST_CASE("positive roots") {
  const auto a2 = positive_roots(A2);
  CHECK(a2.size() == 3);
  CHECK(contains(a2, vec({1, -1, 0})));
  CHECK(contains(a2, vec({1, 0, -1})));
  CHECK(contains(a2, vec({0, 1, -1})));

  const auto b2 = positive_roots(B2);
  CHECK(b2.size() == 4);
  CHECK(contains(b2, vec({1, -1})));
  CHECK(contains(b2, vec({1, 1})));
  CHECK(contains(b2, vec({1, 0})));
  CHECK(contains(b2, vec({0, 1})));

  const auto c2 = positive_roots(C2);
  CHECK(c2.size() == 4);
  CHECK(contains(c2, vec({2, 0})));
  CHECK(contains(c2, vec({0, 2})));

  CHECK(positive_roots(A1) == std::vector<Vec>{vec({1, -1})});
  for (const RootDatum& d : all_data()) {
    const size_t expect = d.family == Family::A ? d.rank * (d.rank + 1) / 2 : d.rank * d.rank;
    CHECK(positive_roots(d).size() == expect);
  }
}

TEST_CASE("rho") {
  CHECK(rho(A2) == Vec{Rat(1), Rat(0), Rat(-1)});
  CHECK(rho(A3) == Vec{Rat(3, 2), Rat(1, 2), Rat(-1, 2), Rat(-3, 2)});
  CHECK(rho(B2) == Vec{Rat(2), Rat(1)});
  CHECK(rho(B3) == Vec{Rat(3), Rat(2), Rat(1)});
  // For C the normalization is pinned by the <alpha_i_dual, rho> = 1
  // invariant below (and by the oracle cross-validation), giving half-integer
  // coordinates: rho(C_2) = (3/2, 1/2).
  CHECK(rho(C2) == Vec{Rat(3, 2), Rat(1, 2)});
  CHECK(rho(C3) == Vec{Rat(5, 2), Rat(3, 2), Rat(1, 2)});
}

TEST_CASE("simple coroots pair to 1 against rho") {
  for (const RootDatum& d : all_data()) {
    for (const Vec& a : simple_coroots(d)) {
      CHECK(pair(a, rho(d)) == 1);
    }
  }
}

TEST_CASE("pair") {
  CHECK(pair(vec({1, 0, 1}), vec({1, 0, -1})) == 0);  // <e1+e3, rho(A2)> = 0
  CHECK(pair(zero_vec(A2), rho(A2)) == 0);
  // lambda = (2,1,0), mu = (1,1,1) in A_2: <lambda+mu, rho> = 2 (this is the
  // degree of L_{lambda,mu}, cross-checked against the computed polynomial).
  CHECK(pair(vec({3, 2, 1}), rho(A2)) == 2);
  // Type A: invariant under shifting x by multiples of (1,...,1).
  CHECK(pair(vec({5, 4, 3}), rho(A2)) == pair(vec({3, 2, 1}), rho(A2)));
  CHECK_THROWS_AS(pair(vec({1, 0}), vec({1, 0, -1})), invariant_error);
}

TEST_CASE("weyl action") {
  // A_2: s_2 sends e1+e2 to e1+e3.
  CHECK(hl::apply(simple_reflection(A2, 2), vec({1, 1, 0})) == vec({1, 0, 1}));
  CHECK(hl::apply(identity_element(A2), vec({1, 1, 0})) == vec({1, 1, 0}));
  // B_2: s_2 flips the sign of e2.
  CHECK(hl::apply(simple_reflection(B2, 2), vec({0, 1})) == vec({0, -1}));

  // s^2 = id on random vectors, all generators, all types.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (const RootDatum& d : all_data()) {
    for (int i = 1; i <= d.rank; ++i) {
      const WeylElement s = simple_reflection(d, i);
      for (int trial = 0; trial < 5; ++trial) {
        Vec x;
        for (int k = 0; k < d.dimension(); ++k) x.emplace_back(coord(rng));
        CHECK(hl::apply(s, hl::apply(s, x)) == x);
      }
    }
  }
}

TEST_CASE("composition is the action composition") {
  std::mt19937 rng(11);
  for (const RootDatum& d : {A2, B2, C3}) {
    const auto group = weyl_group(d);
    std::uniform_int_distribution<size_t> pick(0, group.size() - 1);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
      const WeylElement &w1 = group[pick(rng)], &w2 = group[pick(rng)];
      Vec x;
      for (int k = 0; k < d.dimension(); ++k) x.emplace_back(coord(rng));
      CHECK(hl::apply(compose(w1, w2), x) == hl::apply(w1, hl::apply(w2, x)));
    }
  }
}

TEST_CASE("weyl length") {
  for (const RootDatum& d : all_data()) {
    CHECK(weyl_length(d, identity_element(d)) == 0);
    for (int i = 1; i <= d.rank; ++i) CHECK(weyl_length(d, simple_reflection(d, i)) == 1);
  }
  auto longest = [](const RootDatum& d) {
    int best = 0;
    for (const WeylElement& w : weyl_group(d)) best = std::max(best, weyl_length(d, w));
    return best;
  };
  CHECK(longest(A2) == 3);
  CHECK(longest(B2) == 4);
}

TEST_CASE("weyl group sizes") {
  CHECK(weyl_group(A2).size() == 6);
  CHECK(weyl_group(A3).size() == 24);
  CHECK(weyl_group(B2).size() == 8);
  CHECK(weyl_group(C3).size() == 48);
}

TEST_CASE("orbit and stabilizer") {
  CHECK(weyl_orbit(A2, vec({1, 0, 0})).size() == 3);
  CHECK(stabilizer_poly(A2, vec({1, 0, 0})) == HalfLaurent::one() + HalfLaurent::t_pow(1));

  const auto b2_orbit = weyl_orbit(B2, vec({1, 0}));
  CHECK(b2_orbit.size() == 4);
  for (const Vec& v : {vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})}) {
    CHECK(std::find(b2_orbit.begin(), b2_orbit.end(), v) != b2_orbit.end());
  }
  CHECK(stabilizer_poly(B2, vec({1, 0})) == HalfLaurent::one() + HalfLaurent::t_pow(1));

  // lambda = 0: orbit {0}, stabilizer polynomial = Poincare polynomial of W.
  CHECK(weyl_orbit(A2, zero_vec(A2)) == std::vector<Vec>{zero_vec(A2)});
  HalfLaurent poincare;
  for (const WeylElement& w : weyl_group(A2)) poincare += HalfLaurent::t_pow(weyl_length(A2, w));
  CHECK(stabilizer_poly(A2, zero_vec(A2)) == poincare);

  CHECK_THROWS_AS(weyl_orbit(A2, vec({0, 1, 0})), usage_error);
}

TEST_CASE("orbit-stabilizer counting") {
  for (const RootDatum& d : all_data()) {
    std::vector<Vec> samples = {zero_vec(d)};
    for (int i = 1; i <= d.rank; ++i) samples.push_back(fundamental_coweight(d, i));
    {
      Vec sum = zero_vec(d);
      for (int i = 1; i <= d.rank; ++i) {
        const Vec w = fundamental_coweight(d, i);
        for (int k = 0; k < d.dimension(); ++k) sum[k] += w[k];
      }
      samples.push_back(sum);
    }
    const size_t order = weyl_group(d).size();
    for (const Vec& lam : samples) {
      size_t stab = 0;
      for (const WeylElement& w : weyl_group(d)) {
        if (hl::apply(w, lam) == lam) ++stab;
      }
      CHECK(weyl_orbit(d, lam).size() * stab == order);
    }
  }
}

TEST_CASE("pairing is W-invariant") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (const RootDatum& d : {A2, B2, C2, B3}) {
    for (const WeylElement& w : weyl_group(d)) {
      Vec x, y;
      for (int k = 0; k < d.dimension(); ++k) {
        x.emplace_back(coord(rng));
        y.emplace_back(coord(rng));
      }
      CHECK(pair(hl::apply(w, x), hl::apply(w, y)) == pair(x, y));
    }
  }
}

TEST_CASE("dominance and canonical form") {
  CHECK(is_dominant(A2, vec({2, 1, 0})));
  CHECK_FALSE(is_dominant(A2, vec({1, 2, 0})));
  CHECK(is_dominant(B2, Vec{Rat(1, 2), Rat(1, 2)}));
  CHECK_FALSE(is_dominant(B2, Vec{Rat(1, 2), Rat(-1, 2)}));
  CHECK(canonicalize(A2, vec({1, 1, 1})) == zero_vec(A2));
  CHECK(canonicalize(A2, vec({3, 2, 1})) == vec({2, 1, 0}));
  CHECK(canonicalize(B2, vec({3, 2})) == vec({3, 2}));
  CHECK(coweights_equal(A2, vec({3, 2, 1}), vec({2, 1, 0})));
  CHECK_FALSE(coweights_equal(A2, vec({3, 2, 1}), vec({3, 1, 0})));
}

TEST_CASE("fundamental coweights") {
  CHECK(fundamental_coweight(A2, 1) == vec({1, 0, 0}));
  CHECK(fundamental_coweight(A2, 2) == vec({1, 1, 0}));
  CHECK(fundamental_coweight(B2, 2) == Vec{Rat(1, 2), Rat(1, 2)});
  CHECK(fundamental_coweight(C2, 2) == vec({1, 1}));
  // The pairing matrix <omega_i, alpha_j-dual> is diagonal with positive
  // diagonal (1 throughout in type A; the last diagonal entry is 1/2 in B and
  // 2 in C) — exactly what makes the omega_i generate the dominant cone.
  for (const RootDatum& d : all_data()) {
    const auto coroots = simple_coroots(d);
    for (int i = 1; i <= d.rank; ++i) {
      CHECK(is_dominant(d, fundamental_coweight(d, i)));
      for (int j = 1; j <= d.rank; ++j) {
        const Rat value = pair(fundamental_coweight(d, i), coroots[j - 1]);
        if (i == j) {
          CHECK(value > 0);
        } else {
          CHECK(value == 0);
        }
      }
    }
  }
}
