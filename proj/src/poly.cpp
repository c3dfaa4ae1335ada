#include "hl/poly.hpp"

#include <sstream>
#include <vector>

#include "hl/errors.hpp"

namespace hl {

void HalfLaurent::set(int e, Int c) {
  if (c == 0) {
    terms_.erase(e);
  } else {
    terms_[e] = std::move(c);
  }
}

HalfLaurent HalfLaurent::v_pow(int e, Int coeff) {
  HalfLaurent p;
  p.set(e, std::move(coeff));
  return p;
}

HalfLaurent HalfLaurent::q_pow(int e, Int coeff) { return v_pow(2 * e, std::move(coeff)); }

HalfLaurent HalfLaurent::one_minus_t_pow(int k) { return one() - t_pow(k); }

HalfLaurent HalfLaurent::operator+(const HalfLaurent& o) const {
  HalfLaurent r = *this;
  for (const auto& [e, c] : o.terms_) {
    auto it = r.terms_.find(e);
    if (it == r.terms_.end()) {
      r.terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

HalfLaurent HalfLaurent::operator-(const HalfLaurent& o) const { return *this + (-o); }

HalfLaurent HalfLaurent::operator*(const HalfLaurent& o) const {
  HalfLaurent r;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      auto it = r.terms_.find(ea + eb);
      if (it == r.terms_.end()) {
        r.terms_.emplace(ea + eb, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  }
  // Cancellation can leave explicit zeros; sweep them out.
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
  }
  return r;
}

HalfLaurent HalfLaurent::shifted(int dv) const {
  HalfLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + dv, c);
  return r;
}

bool HalfLaurent::all_exponents_even() const {
  for (const auto& [e, c] : terms_) {
    if (e % 2 != 0) return false;
  }
  return true;
}

bool HalfLaurent::is_q_polynomial() const {
  for (const auto& [e, c] : terms_) {
    if (e < 0 || e % 2 != 0) return false;
  }
  return true;
}

int HalfLaurent::min_exponent() const {
  if (is_zero()) throw invariant_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int HalfLaurent::max_exponent() const {
  if (is_zero()) throw invariant_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

namespace {

Rat rat_int_pow(const Rat& base, int e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (base == 0) throw invariant_error("evaluation at 0 with negative exponent");
    return rat_int_pow(1 / base, -e);
  }
  Rat acc(1), b = base;
  int k = e;
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

}  // namespace

Rat HalfLaurent::eval(const Rat& v0) const {
  if (v0 == 0) throw invariant_error("eval at v = 0");
  Rat acc(0);
  for (const auto& [e, c] : terms_) acc += Rat(c) * rat_int_pow(v0, e);
  return acc;
}

Rat HalfLaurent::substitute_q(const Rat& q0) const {
  if (q0 == 0) throw invariant_error("substitute_q at q = 0");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    if (e % 2 != 0) throw invariant_error("substitute_q on a polynomial with odd v-exponent: " + str());
    acc += Rat(c) * rat_int_pow(q0, e / 2);
  }
  return acc;
}

std::string HalfLaurent::str() const {
  if (is_zero()) return "0";
  const bool in_q = all_exponents_even();
  std::ostringstream os;
  bool first = true;
  // Leading (highest) term first, matching how polynomials are written.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = in_q ? it->first / 2 : it->first;
    Int c = it->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      if (c < 0) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
    }
    const char* var = in_q ? "q" : "v";
    if (e == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

HalfLaurent exact_divide(const HalfLaurent& a, const HalfLaurent& b) {
  if (b.is_zero()) throw invariant_error("exact_divide by zero");
  if (a.is_zero()) return HalfLaurent::zero();

  // Shift both operands to ordinary polynomials (lowest exponent 0), divide,
  // then shift the quotient back.  Division is run over Q so that non-monic
  // divisors are handled; integrality of the quotient is checked at the end.
  const int sa = a.min_exponent(), sb = b.min_exponent();
  const int da = a.max_exponent() - sa, db = b.max_exponent() - sb;
  if (da < db) throw invariant_error("exact_divide: divisor degree exceeds dividend: (" + a.str() + ") / (" + b.str() + ")");

  std::vector<Rat> num(da + 1), den(db + 1);
  for (const auto& [e, c] : a.terms()) num[e - sa] = Rat(c);
  for (const auto& [e, c] : b.terms()) den[e - sb] = Rat(c);

  std::vector<Rat> quot(da - db + 1);
  for (int k = da - db; k >= 0; --k) {
    Rat f = num[k + db] / den[db];
    quot[k] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) num[k + j] -= f * den[j];
  }
  for (const Rat& r : num) {
    if (r != 0) throw invariant_error("exact_divide: nonzero remainder in (" + a.str() + ") / (" + b.str() + ")");
  }

  HalfLaurent q;
  for (int k = 0; k <= da - db; ++k) {
    if (quot[k] == 0) continue;
    if (quot[k].get_den() != 1) {
      throw invariant_error("exact_divide: non-integer quotient in (" + a.str() + ") / (" + b.str() + ")");
    }
    q += HalfLaurent::v_pow(k + sa - sb, quot[k].get_num());
  }
  return q;
}

HalfLaurent phi_k(int k) {
  if (k < 0) throw invariant_error("phi_k with negative k");
  HalfLaurent p = HalfLaurent::one();
  for (int i = 1; i <= k; ++i) p *= HalfLaurent::one_minus_t_pow(i);
  return p;
}

}  // namespace hl
