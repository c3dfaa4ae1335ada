#include "hl/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hl/errors.hpp"

namespace hl {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
  }
  throw invariant_error("bad family");
}

Family family_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
  }
  throw usage_error(std::string("unknown family '") + c + "' (expected A, B, or C)");
}

Vec zero_vec(const RootDatum& d) { return Vec(d.dimension(), Rat(0)); }

namespace {

Vec unit(int dim, int i, const Rat& c) {
  Vec v(dim, Rat(0));
  v[i] = c;
  return v;
}

Vec unit2(int dim, int i, const Rat& ci, int j, const Rat& cj) {
  Vec v(dim, Rat(0));
  v[i] = ci;
  v[j] = cj;
  return v;
}

}  // namespace

std::vector<Vec> positive_roots(const RootDatum& d) {
  const int n = d.rank;
  std::vector<Vec> out;
  if (d.family == Family::A) {
    const int dim = n + 1;
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) out.push_back(unit2(dim, i, 1, j, -1));
    return out;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.push_back(unit2(n, i, 1, j, -1));
      out.push_back(unit2(n, i, 1, j, 1));
    }
  const Rat diag = d.family == Family::B ? Rat(1) : Rat(2);
  for (int i = 0; i < n; ++i) out.push_back(unit(n, i, diag));
  return out;
}

std::vector<Vec> simple_coroots(const RootDatum& d) {
  const int n = d.rank;
  std::vector<Vec> out;
  if (d.family == Family::A) {
    for (int i = 0; i < n; ++i) out.push_back(unit2(n + 1, i, 1, i + 1, -1));
    return out;
  }
  for (int i = 0; i + 1 < n; ++i) out.push_back(unit2(n, i, 1, i + 1, -1));
  out.push_back(unit(n, n - 1, d.family == Family::B ? Rat(1) : Rat(2)));
  return out;
}

Vec rho(const RootDatum& d) {
  const int n = d.rank;
  Vec v(d.dimension());
  switch (d.family) {
    case Family::A:
      // mpq_class(num, den) does not reduce; canonicalize so comparisons work.
      for (int i = 0; i <= n; ++i) {
        v[i] = Rat(n - 2 * i, 2);
        v[i].canonicalize();
      }
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) v[i] = Rat(n - i);
      break;
    case Family::C:
      for (int i = 0; i < n; ++i) v[i] = Rat(2 * (n - i) - 1, 2);
      break;
  }
  return v;
}

Vec fundamental_coweight(const RootDatum& d, int i) {
  const int n = d.rank;
  if (i < 1 || i > n) throw usage_error("fundamental_coweight index out of range");
  Vec v = zero_vec(d);
  if (d.family == Family::B && i == n) {
    for (int k = 0; k < n; ++k) v[k] = Rat(1, 2);
    return v;
  }
  for (int k = 0; k < i; ++k) v[k] = 1;
  return v;
}

Rat pair(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw invariant_error("pair: dimension mismatch");
  Rat acc(0);
  for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

Vec canonicalize(const RootDatum& d, Vec x) {
  if ((int)x.size() != d.dimension()) throw invariant_error("canonicalize: dimension mismatch");
  if (d.family == Family::A) {
    const Rat last = x.back();
    for (Rat& c : x) c -= last;
  }
  return x;
}

bool coweights_equal(const RootDatum& d, const Vec& a, const Vec& b) {
  return canonicalize(d, a) == canonicalize(d, b);
}

bool is_dominant(const RootDatum& d, const Vec& x) {
  for (const Vec& a : simple_coroots(d)) {
    if (pair(x, a) < 0) return false;
  }
  return true;
}

WeylElement identity_element(const RootDatum& d) {
  const int dim = d.dimension();
  WeylElement w;
  w.perm.resize(dim);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.sign.assign(dim, 1);
  return w;
}

WeylElement simple_reflection(const RootDatum& d, int i) {
  const int n = d.rank;
  WeylElement w = identity_element(d);
  if (d.family == Family::A) {
    if (i < 1 || i > n) throw usage_error("simple_reflection index out of range");
    std::swap(w.perm[i - 1], w.perm[i]);
    return w;
  }
  if (i < 1 || i > n) throw usage_error("simple_reflection index out of range");
  if (i < n) {
    std::swap(w.perm[i - 1], w.perm[i]);
  } else {
    w.sign[n - 1] = -1;
  }
  return w;
}

WeylElement compose(const WeylElement& w1, const WeylElement& w2) {
  const size_t dim = w1.perm.size();
  if (dim != w2.perm.size()) throw invariant_error("compose: dimension mismatch");
  WeylElement r;
  r.perm.resize(dim);
  r.sign.resize(dim);
  // (w1 w2)(e_i) = w1(sign2[i] e_{perm2[i]}) = sign2[i] sign1[perm2[i]] e_{perm1[perm2[i]]}
  for (size_t i = 0; i < dim; ++i) {
    r.perm[i] = w1.perm[w2.perm[i]];
    r.sign[i] = w2.sign[i] * w1.sign[w2.perm[i]];
  }
  return r;
}

Vec apply(const WeylElement& w, const Vec& x) {
  if (w.perm.size() != x.size()) throw invariant_error("apply: dimension mismatch");
  Vec y(x.size(), Rat(0));
  for (size_t i = 0; i < x.size(); ++i) y[w.perm[i]] += Rat(w.sign[i]) * x[i];
  return y;
}

int weyl_length(const RootDatum& d, const WeylElement& w) {
  const auto roots = positive_roots(d);
  std::set<Vec> pos(roots.begin(), roots.end());
  int l = 0;
  for (const Vec& a : roots) {
    Vec wa = apply(w, a);
    for (Rat& c : wa) c = -c;
    if (pos.count(wa)) ++l;
  }
  return l;
}

std::vector<WeylElement> weyl_group(const RootDatum& d) {
  const int dim = d.dimension();
  std::vector<int> p(dim);
  std::iota(p.begin(), p.end(), 0);
  std::vector<WeylElement> out;
  do {
    if (d.family == Family::A) {
      WeylElement w;
      w.perm = p;
      w.sign.assign(dim, 1);
      out.push_back(std::move(w));
    } else {
      for (unsigned mask = 0; mask < (1u << dim); ++mask) {
        WeylElement w;
        w.perm = p;
        w.sign.resize(dim);
        for (int i = 0; i < dim; ++i) w.sign[i] = (mask >> i) & 1 ? -1 : 1;
        out.push_back(std::move(w));
      }
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Vec> weyl_orbit(const RootDatum& d, const Vec& lambda) {
  if (!is_dominant(d, lambda)) throw usage_error("weyl_orbit: lambda is not dominant");
  std::set<Vec> seen;
  std::vector<Vec> out;
  for (const WeylElement& w : weyl_group(d)) {
    Vec v = apply(w, lambda);
    if (seen.insert(v).second) out.push_back(std::move(v));
  }
  return out;
}

HalfLaurent stabilizer_poly(const RootDatum& d, const Vec& lambda) {
  if (!is_dominant(d, lambda)) throw usage_error("stabilizer_poly: lambda is not dominant");
  HalfLaurent acc;
  for (const WeylElement& w : weyl_group(d)) {
    if (coweights_equal(d, apply(w, lambda), lambda)) acc += HalfLaurent::t_pow(weyl_length(d, w));
  }
  return acc;
}

}  // namespace hl
