#include "hl/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "hl/errors.hpp"

namespace hl {

namespace {

Rat rat_int_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (base == 0) throw invariant_error("rat_int_pow: negative power of zero");
    return rat_int_pow(Rat(1) / base, -e);
  }
  Rat acc(1), b = base;
  long k = e;
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

long as_long(const Rat& r, const char* what) {
  if (r.get_den() != 1) throw invariant_error(std::string(what) + ": not an integer");
  return r.get_num().get_si();
}

}  // namespace

SamplePoint sample_point(const RootDatum& d, std::mt19937_64& rng) {
  std::vector<int> pool(16);
  std::iota(pool.begin(), pool.end(), 2);  // 2..17
  std::shuffle(pool.begin(), pool.end(), rng);
  SamplePoint pt;
  pt.y.reserve(d.dimension());
  for (int i = 0; i < d.dimension(); ++i) pt.y.emplace_back(pool[i]);
  pt.v0 = Rat(2 + (int)(rng() % 16));
  return pt;
}

bool pole_free(const RootDatum& d, const SamplePoint& pt) {
  for (const Vec& a : positive_roots(d)) {
    if (x_pow(pt, a) == 1) return false;
  }
  return true;
}

Rat x_pow(const SamplePoint& pt, const Vec& e) {
  if (pt.y.size() != e.size()) throw invariant_error("x_pow: dimension mismatch");
  Rat acc(1);
  for (size_t i = 0; i < e.size(); ++i) {
    acc *= rat_int_pow(pt.y[i], as_long(Rat(e[i] * 2), "doubled exponent"));
  }
  return acc;
}

Rat monomial_eval(const RootDatum& d, const Vec& mu, const SamplePoint& pt) {
  Rat acc(0);
  for (const Vec& v : weyl_orbit(d, mu)) acc += x_pow(pt, v);
  return acc;
}

Rat definitional_P_eval(const RootDatum& d, const Vec& lambda, const SamplePoint& pt) {
  if (!is_dominant(d, lambda)) throw usage_error("definitional_P_eval: lambda is not dominant");
  if (!pole_free(d, pt)) throw invariant_error("definitional_P_eval: point hits a pole");
  const Rat q = pt.v0 * pt.v0;
  const Rat q_inv = Rat(1) / q;
  const auto roots = positive_roots(d);

  Rat sum(0);
  for (const WeylElement& w : weyl_group(d)) {
    // w(x^lambda prod_alpha ...) = x^{w lambda} prod (1 - q^{-1} x^{-w alpha})/(1 - x^{-w alpha})
    Rat term = x_pow(pt, apply(w, lambda));
    for (const Vec& a : roots) {
      Vec wa = apply(w, a);
      for (Rat& c : wa) c = -c;
      const Rat xma = x_pow(pt, wa);
      term *= (1 - q_inv * xma) / (1 - xma);
    }
    sum += term;
  }

  const Rat norm = stabilizer_poly(d, lambda).eval(pt.v0);  // W_lambda(q^{-1})
  if (norm == 0) throw invariant_error("W_lambda(q^{-1}) vanished at the sample point");
  return sum / norm;
}

Rat expansion_eval(const RootDatum& d, const Vec& lambda,
                   const std::map<Vec, HalfLaurent>& table, const SamplePoint& pt) {
  const Vec r = rho(d);
  Rat acc(0);
  for (const auto& [mu, coeff] : table) {
    Vec sum = lambda;
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += mu[i];
    const long e2 = as_long(Rat(pair(sum, r) * 2), "2<lambda+mu,rho>");
    acc += rat_int_pow(pt.v0, -e2) * coeff.eval(pt.v0) * monomial_eval(d, mu, pt);
  }
  return acc;
}

VerifyReport verify(const RootDatum& d, const Vec& lambda,
                    const std::map<Vec, HalfLaurent>& table, int k, std::uint64_t seed) {
  if (k < 1) throw usage_error("verify: need at least one point");
  std::mt19937_64 rng(seed);
  VerifyReport report;
  report.pass = true;
  for (int i = 0; i < k; ++i) {
    SamplePoint pt;
    int attempts = 0;
    do {
      if (++attempts > 100) throw invariant_error("verify: persistent pole resampling failure");
      pt = sample_point(d, rng);
    } while (!pole_free(d, pt));

    PointCheck check;
    check.point = pt;
    check.expansion = expansion_eval(d, lambda, table, pt);
    check.definitional = definitional_P_eval(d, lambda, pt);
    check.ok = check.expansion == check.definitional;
    report.pass = report.pass && check.ok;
    report.points.push_back(std::move(check));
  }
  return report;
}

}  // namespace hl
