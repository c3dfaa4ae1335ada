#include "hl/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hl/errors.hpp"

namespace hl {

int alphabet_size(const RootDatum& d) {
  return d.family == Family::A ? d.rank + 1 : 2 * d.rank;
}

int letter_code(const RootDatum& d, const Letter& l) {
  const int n = d.rank;
  if (d.family == Family::A) {
    if (l.barred || l.base < 1 || l.base > n + 1) throw usage_error("invalid type A letter");
    return l.base;
  }
  if (l.base < 1 || l.base > n) throw usage_error("letter base out of range");
  return l.barred ? 2 * n + 1 - l.base : l.base;
}

Letter letter_at(const RootDatum& d, int code) {
  const int n = d.rank;
  if (code < 1 || code > alphabet_size(d)) throw usage_error("letter code out of range");
  if (d.family == Family::A || code <= n) return Letter{code, false};
  return Letter{2 * n + 1 - code, true};
}

std::string letter_str(const RootDatum& d, int code) {
  const Letter l = letter_at(d, code);
  return std::to_string(l.base) + (l.barred ? "'" : "");
}

bool column_valid(const RootDatum& d, const Column& c) {
  const int size = alphabet_size(d);
  int prev = 0;
  for (int code : c.codes) {
    if (code < 1 || code > size || code <= prev) return false;
    prev = code;
  }
  if (d.family != Family::A) {
    // i and ibar have codes summing to 2n+1.
    std::set<int> bases;
    for (int code : c.codes) {
      if (!bases.insert(letter_at(d, code).base).second) return false;
    }
  }
  return true;
}

std::vector<Column> valid_columns(const RootDatum& d, int height) {
  std::vector<Column> out;
  Column cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (cur.height() == height) {
      out.push_back(cur);
      return;
    }
    for (int code = next; code <= alphabet_size(d); ++code) {
      cur.codes.push_back(code);
      if (column_valid(d, cur)) self(self, code + 1);
      cur.codes.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<int> base_set(const RootDatum& d, const Column& c) {
  std::vector<int> out;
  for (int code : c.codes) out.push_back(letter_at(d, code).base);
  std::sort(out.begin(), out.end());
  return out;
}

Vec column_coweight_raw(const RootDatum& d, const Column& c, bool halved) {
  Vec v = zero_vec(d);
  for (int code : c.codes) {
    const Letter l = letter_at(d, code);
    v[l.base - 1] += l.barred ? Rat(-1) : Rat(1);
  }
  if (halved) {
    for (Rat& x : v) x /= 2;
  }
  return v;
}

Shape Shape::from_omega(const RootDatum& d, std::vector<int> a) {
  if ((int)a.size() != d.rank) throw usage_error("omega coefficient count must equal the rank");
  for (int x : a) {
    if (x < 0) throw usage_error("omega coefficients must be nonnegative");
  }
  return Shape{d, std::move(a)};
}

Shape Shape::from_lambda(const RootDatum& d, const Vec& lambda_eps) {
  if ((int)lambda_eps.size() != d.dimension()) throw usage_error("lambda has wrong dimension");
  const Vec l = canonicalize(d, lambda_eps);
  const int n = d.rank;
  std::vector<Rat> a(n, Rat(0));
  for (int i = 0; i + 1 < n; ++i) a[i] = l[i] - l[i + 1];
  switch (d.family) {
    case Family::A: a[n - 1] = l[n - 1] - l[n]; break;  // canonical l[n] = 0
    case Family::B: a[n - 1] = 2 * l[n - 1]; break;
    case Family::C: a[n - 1] = l[n - 1]; break;
  }
  std::vector<int> ai(n);
  for (int i = 0; i < n; ++i) {
    if (a[i].get_den() != 1 || a[i] < 0) {
      throw usage_error("lambda is not a dominant integral coweight of this type");
    }
    ai[i] = (int)a[i].get_num().get_si();
  }
  return from_omega(d, std::move(ai));
}

Vec Shape::lambda() const {
  Vec v = zero_vec(datum);
  for (int i = 1; i <= datum.rank; ++i) {
    if (omega[i - 1] == 0) continue;
    const Vec w = fundamental_coweight(datum, i);
    for (size_t k = 0; k < v.size(); ++k) v[k] += Rat(omega[i - 1]) * w[k];
  }
  return v;
}

std::vector<int> Shape::rows() const {
  const int n = datum.rank;
  std::vector<int> p(n, 0);
  switch (datum.family) {
    case Family::A:
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) p[i] += omega[j];
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n - 1; ++j) p[i] += 2 * omega[j];
        p[i] += omega[n - 1];
      }
      break;
    case Family::C:
      for (int i = 0; i < n; ++i)
        for (int j = std::max(i, 1); j < n; ++j) p[i] += 2 * omega[j];
      p[0] += omega[0];
      break;
  }
  return p;
}

std::vector<int> Shape::column_heights() const {
  const std::vector<int> p = rows();
  const int width = p.empty() ? 0 : p[0];
  std::vector<int> h(width, 0);
  for (int c = 0; c < width; ++c)
    for (int x : p) h[c] += (x > c) ? 1 : 0;
  return h;
}

int Shape::num_columns() const { return (int)column_heights().size(); }

int Shape::box_count() const {
  int total = 0;
  for (int x : rows()) total += x;
  return total;
}

std::optional<int> Shape::pair_partner(int col) const {
  if (datum.family == Family::A) return std::nullopt;
  const std::vector<int> h = column_heights();
  if (col < 0 || col >= (int)h.size()) throw usage_error("column index out of range");
  const int height = h[col];
  const bool paired_height =
      datum.family == Family::B ? (height < datum.rank) : (height > 1);
  if (!paired_height) return std::nullopt;
  // Height groups are contiguous; find the start of this one.
  int g0 = col;
  while (g0 > 0 && h[g0 - 1] == height) --g0;
  const int offset = col - g0;
  return (offset % 2 == 0) ? col + 1 : col - 1;
}

bool Shape::column_halved(int col) const {
  switch (datum.family) {
    case Family::A: return false;
    case Family::B: return pair_partner(col).has_value() || column_heights()[col] == datum.rank;
    case Family::C: return pair_partner(col).has_value();
  }
  throw invariant_error("bad family");
}

bool Tableau::operator<(const Tableau& o) const {
  // Rightmost column most significant.
  const int r1 = (int)cols.size(), r2 = (int)o.cols.size();
  for (int k = 1; k <= std::min(r1, r2); ++k) {
    if (cols[r1 - k] != o.cols[r2 - k]) return cols[r1 - k] < o.cols[r2 - k];
  }
  return r1 < r2;
}

namespace {

// Number of bases whose barredness differs between two same-base-set columns.
int bar_exchange_count(const RootDatum& d, const Column& a, const Column& b) {
  std::map<int, bool> bars_a;
  for (int code : a.codes) {
    const Letter l = letter_at(d, code);
    bars_a[l.base] = l.barred;
  }
  int count = 0;
  for (int code : b.codes) {
    const Letter l = letter_at(d, code);
    auto it = bars_a.find(l.base);
    if (it == bars_a.end()) return -1;  // different base sets
    if (it->second != l.barred) ++count;
  }
  return count;
}

bool pair_ok(const RootDatum& d, const Column& left, const Column& right) {
  if (left.height() != right.height()) return false;
  const int exchanges = bar_exchange_count(d, left, right);
  if (exchanges < 0) return false;
  if (d.family == Family::C && exchanges % 2 != 0) return false;
  return true;
}

}  // namespace

bool structurally_valid(const Tableau& t) {
  const RootDatum& d = t.shape.datum;
  const std::vector<int> h = t.shape.column_heights();
  if (t.cols.size() != h.size()) return false;
  for (size_t i = 0; i < h.size(); ++i) {
    if (t.cols[i].height() != h[i]) return false;
    if (!column_valid(d, t.cols[i])) return false;
  }
  for (size_t i = 0; i < h.size(); ++i) {
    auto partner = t.shape.pair_partner((int)i);
    if (partner && *partner == (int)i + 1 && !pair_ok(d, t.cols[i], t.cols[i + 1])) return false;
  }
  return true;
}

bool is_semistandard(const Tableau& t) {
  for (size_t i = 0; i + 1 < t.cols.size(); ++i) {
    const Column& left = t.cols[i];
    const Column& right = t.cols[i + 1];
    for (int k = 0; k < right.height(); ++k) {
      if (left.codes[k] > right.codes[k]) return false;
    }
  }
  return true;
}

bool is_minimal(const Tableau& t) {
  for (size_t i = 0; i + 1 < t.cols.size(); ++i) {
    const std::set<int> entries(t.cols[i].codes.begin(), t.cols[i].codes.end());
    for (int code : t.cols[i + 1].codes) {
      if (!entries.count(code)) return false;
    }
  }
  return true;
}

Vec column_coweight(const Tableau& t, int i) {
  return column_coweight_raw(t.shape.datum, t.cols[i], t.shape.column_halved(i));
}

Vec content_by_columns(const Tableau& t) {
  Vec v = zero_vec(t.shape.datum);
  for (size_t i = 0; i < t.cols.size(); ++i) {
    const Vec w = column_coweight(t, (int)i);
    for (size_t k = 0; k < v.size(); ++k) v[k] += w[k];
  }
  return v;
}

Vec content(const Tableau& t) {
  const RootDatum& d = t.shape.datum;
  Vec v = zero_vec(d);
  if (d.family == Family::A) {
    for (const Column& c : t.cols)
      for (int code : c.codes) v[code - 1] += 1;
    return v;
  }
  // #i - #ibar, overall and restricted to single-box columns.
  Vec all = zero_vec(d), singles = zero_vec(d);
  for (const Column& c : t.cols) {
    for (int code : c.codes) {
      const Letter l = letter_at(d, code);
      const Rat delta = l.barred ? Rat(-1) : Rat(1);
      all[l.base - 1] += delta;
      if (c.height() == 1) singles[l.base - 1] += delta;
    }
  }
  for (int k = 0; k < d.rank; ++k) {
    v[k] = d.family == Family::B ? Rat(all[k] / 2) : Rat((all[k] + singles[k]) / 2);
  }
  return v;
}

namespace {

struct Enumerator {
  const Shape& shape;
  const RootDatum& d;
  std::vector<int> heights;
  bool has_target = false;
  Vec target;  // raw content target
  std::vector<Tableau> out;
  std::vector<Column> cols;     // being filled, cols[i] meaningful for i >= next+1
  Vec placed;                   // content of the placed suffix
  std::vector<Rat> cap_prefix;  // cap_prefix[i] = sum of per-coordinate caps of columns 0..i-1
  std::map<int, std::vector<Column>> by_height;

  explicit Enumerator(const Shape& s) : shape(s), d(s.datum), heights(s.column_heights()) {
    cols.resize(heights.size());
    placed = zero_vec(d);
    cap_prefix.resize(heights.size() + 1);
    cap_prefix[0] = 0;
    for (size_t i = 0; i < heights.size(); ++i) {
      const Rat cap = shape.column_halved((int)i) ? Rat(1, 2) : Rat(1);
      // Type A columns add at most 1 box per letter value; B/C shift each
      // coordinate by at most the halving cap.
      cap_prefix[i + 1] = cap_prefix[i] + (d.family == Family::A ? Rat(1) : cap);
    }
    for (int h : heights) {
      if (!by_height.count(h)) by_height[h] = valid_columns(d, h);
    }
  }

  void run(int i) {
    if (i < 0) {
      Tableau t{shape, cols};
      if (!has_target || coweights_equal(d, placed, target)) out.push_back(std::move(t));
      return;
    }
    const bool pair_left = [&] {
      auto p = shape.pair_partner(i);
      return p && *p == i + 1;
    }();
    for (const Column& cand : by_height.at(heights[i])) {
      if (i + 1 < (int)cols.size()) {
        bool row_ok = true;
        const Column& right = cols[i + 1];
        for (int k = 0; k < right.height() && row_ok; ++k) {
          if (cand.codes[k] > right.codes[k]) row_ok = false;
        }
        if (!row_ok) continue;
        if (pair_left && !pair_ok(d, cand, right)) continue;
      }
      const Vec w = column_coweight_raw(d, cand, shape.column_halved(i));
      for (size_t k = 0; k < placed.size(); ++k) placed[k] += w[k];
      cols[i] = cand;
      if (!(has_target && feasible_fails(i - 1))) run(i - 1);
      for (size_t k = 0; k < placed.size(); ++k) placed[k] -= w[k];
    }
  }

  bool feasible_fails(int next) const {
    if (!has_target) return false;
    for (size_t k = 0; k < target.size(); ++k) {
      const Rat needed = target[k] - placed[k];
      const Rat cap = cap_prefix[next + 1];
      if (d.family == Family::A) {
        if (needed < 0 || needed > cap) return true;
      } else {
        if (needed > cap || needed < -cap) return true;
      }
    }
    return false;
  }
};

}  // namespace

std::vector<Tableau> enumerate_all_ssyt(const Shape& s) {
  Enumerator e(s);
  e.run((int)e.heights.size() - 1);
  return std::move(e.out);
}

std::vector<Tableau> enumerate_ssyt(const Shape& s, const Vec& mu) {
  if ((int)mu.size() != s.datum.dimension()) throw usage_error("content has wrong dimension");
  Enumerator e(s);
  e.has_target = true;
  if (s.datum.family == Family::A) {
    // Raw contents are box counts; lift the canonical form to total = #boxes.
    const Vec canon = canonicalize(s.datum, mu);
    Rat total(0);
    for (const Rat& c : canon) total += c;
    const Rat shift = (Rat(s.box_count()) - total) / s.datum.dimension();
    if (shift.get_den() != 1) return {};
    Vec raw = canon;
    for (Rat& c : raw) c += shift;
    for (const Rat& c : raw) {
      if (c < 0 || c.get_den() != 1) return {};
    }
    e.target = raw;
  } else {
    e.target = mu;
  }
  e.run((int)e.heights.size() - 1);
  return std::move(e.out);
}

VertexContext special_context(const RootDatum& d) {
  VertexContext ctx;
  ctx.datum = d;
  ctx.special = true;
  return ctx;
}

VertexContext nonspecial_context(const RootDatum& d, const Column& left) {
  if (d.family == Family::A) throw invariant_error("type A has no nonspecial vertices");
  VertexContext ctx;
  ctx.datum = d;
  ctx.special = false;
  ctx.j = left.height();
  if (d.family == Family::C && ctx.j < 2) {
    throw invariant_error("type C nonspecial vertices require j >= 2");
  }
  const std::vector<int> bases = base_set(d, left);
  if ((int)bases.size() != ctx.j) throw invariant_error("column has repeated base values");
  ctx.sigma.assign(d.rank + 1, 0);
  std::vector<bool> used(d.rank + 1, false);
  for (int m = 1; m <= ctx.j; ++m) {
    ctx.sigma[m] = bases[m - 1];
    used[bases[m - 1]] = true;
  }
  int m = ctx.j + 1;
  for (int b = 1; b <= d.rank; ++b) {
    if (!used[b]) ctx.sigma[m++] = b;
  }
  return ctx;
}

VertexContext vertex_context(const Tableau& t, int i) {
  if (i < 0 || i + 1 >= (int)t.cols.size()) throw usage_error("pair index out of range");
  auto partner = t.shape.pair_partner(i);
  if (partner && *partner == i + 1) return nonspecial_context(t.shape.datum, t.cols[i]);
  return special_context(t.shape.datum);
}

bool nonspecial_by_parity(const Shape& s, int i) {
  if (s.datum.family == Family::A) return false;
  const std::vector<int> h = s.column_heights();
  if (i < 0 || i + 1 >= (int)h.size() || h[i] != h[i + 1]) return false;
  const int r = (int)h.size() - 1;
  if (s.datum.family == Family::B) return h[i] < s.datum.rank && (r - i) % 2 == 1;
  return h[i] > 1 && i % 2 == 0;
}

std::vector<int> conjugate(const std::vector<int>& partition) {
  int width = 0;
  for (int p : partition) width = std::max(width, p);
  std::vector<int> conj(width, 0);
  for (int c = 0; c < width; ++c)
    for (int p : partition) conj[c] += (p > c) ? 1 : 0;
  return conj;
}

int m_index(const std::vector<int>& partition, int i) {
  const std::vector<int> conj = conjugate(partition);
  auto at = [&](int k) { return (k >= 1 && k <= (int)conj.size()) ? conj[k - 1] : 0; };
  if (i < 1) throw usage_error("m_index requires i >= 1");
  return at(i) - at(i + 1);
}

}  // namespace hl
