#include "hl/macdonald.hpp"

#include <algorithm>

#include "hl/errors.hpp"

namespace hl {

namespace {

void require_type_a(const RootDatum& d, const char* who) {
  if (d.family != Family::A) throw usage_error(std::string(who) + " is defined for type A only");
}

// Entry of T-hat at (row, col): the tableau entry when the box lies in T,
// infinity (nullopt) on the one-box frame of each nonzero row.
std::optional<std::optional<int>> hat_entry(const Tableau& t, int col, int row) {
  const std::vector<int> h = t.shape.column_heights();
  const int in_t_height = (col < (int)h.size()) ? h[col] : 0;
  if (row < in_t_height) return std::optional<int>(t.cols[col].codes[row]);
  // Frame: column col of T-hat extends to the height of column col-1 of T.
  const int hat_height = (col == 0) ? in_t_height : (col - 1 < (int)h.size() ? h[col - 1] : 0);
  if (row < hat_height) return std::optional<int>(std::nullopt);  // infinity
  return std::nullopt;                                            // outside T-hat
}

}  // namespace

std::vector<HeadBox> head(const Tableau& t, int col, int row) {
  require_type_a(t.shape.datum, "head");
  const std::vector<int> h = t.shape.column_heights();
  if (col < 0 || col >= (int)h.size() || row < 0 || row >= h[col]) {
    throw usage_error("head: box outside the tableau");
  }
  const int c_u = t.cols[col].codes[row];
  std::vector<HeadBox> out;
  for (int k = 0; k <= row; ++k) {
    const auto entry = hat_entry(t, col + 1, k);
    if (!entry) continue;  // outside T-hat (cannot happen for k <= row; frame covers it)
    if (!entry->has_value() || **entry >= c_u) out.push_back(HeadBox{k, col + 1, *entry});
  }
  return out;
}

HalfLaurent phi_column(const Tableau& t, int col) {
  require_type_a(t.shape.datum, "phi_column");
  HalfLaurent acc = HalfLaurent::one();
  const int height = t.cols[col].height();
  for (int row = 0; row < height; ++row) {
    const int c_u = t.cols[col].codes[row];
    const auto boxes = head(t, col, row);
    bool blocked = false;
    for (const HeadBox& b : boxes) {
      if (b.entry && *b.entry == c_u) blocked = true;
    }
    if (!blocked) acc *= HalfLaurent::one_minus_t_pow((int)boxes.size());
  }
  return acc;
}

HalfLaurent phi_T_heads(const Tableau& t) {
  require_type_a(t.shape.datum, "phi_T_heads");
  HalfLaurent acc = HalfLaurent::one();
  for (int col = 0; col < (int)t.cols.size(); ++col) acc *= phi_column(t, col);
  return acc;
}

HalfLaurent phi_T_chain(const Tableau& t) {
  require_type_a(t.shape.datum, "phi_T_chain");
  const int letters = alphabet_size(t.shape.datum);
  const int nrows = (int)t.shape.rows().size();
  auto subshape = [&](int max_letter) {
    std::vector<int> rows(nrows, 0);
    for (int col = 0; col < (int)t.cols.size(); ++col) {
      const Column& c = t.cols[col];
      for (int k = 0; k < c.height(); ++k) {
        if (c.codes[k] <= max_letter) rows[k] += 1;
      }
    }
    return rows;
  };
  auto conj_at = [](const std::vector<int>& conj, int j) {
    return (j >= 1 && j <= (int)conj.size()) ? conj[j - 1] : 0;
  };

  HalfLaurent acc = HalfLaurent::one();
  std::vector<int> lower = subshape(0);  // empty
  for (int i = 1; i <= letters; ++i) {
    const std::vector<int> upper = subshape(i);
    std::vector<int> strip_conj;  // (upper - lower)'
    {
      int width = 0;
      for (int x : upper) width = std::max(width, x);
      strip_conj.assign(width, 0);
      for (int k = 0; k < nrows; ++k)
        for (int j = lower[k]; j < upper[k]; ++j) strip_conj[j] += 1;
    }
    const std::vector<int> upper_conj = conjugate(upper);
    for (int j = 1; j <= (int)strip_conj.size(); ++j) {
      if (conj_at(strip_conj, j) > conj_at(strip_conj, j + 1)) {
        // Multiplicity of the part j in the UPPER partition of the pair.
        acc *= HalfLaurent::one_minus_t_pow(conj_at(upper_conj, j) - conj_at(upper_conj, j + 1));
      }
    }
    lower = upper;
  }
  return acc;
}

HalfLaurent b_lambda(const std::vector<int>& partition) {
  int width = 0;
  for (int p : partition) width = std::max(width, p);
  HalfLaurent acc = HalfLaurent::one();
  for (int i = 1; i <= width; ++i) acc *= phi_k(m_index(partition, i));
  return acc;
}

namespace {

// t^{-<omega_h + content, rho>} as a v-shift, where omega_h and the content
// are the shape and content coweights of the single column.
int column_shift(const Tableau& t, int col) {
  const RootDatum& d = t.shape.datum;
  const Column& c = t.cols[col];
  Vec lam_i = zero_vec(d);
  for (int k = 0; k < c.height(); ++k) lam_i[k] = 1;  // omega_{height}
  const Vec mu_i = column_coweight_raw(d, c);
  Vec sum = lam_i;
  for (size_t k = 0; k < sum.size(); ++k) sum[k] += mu_i[k];
  const Rat e = pair(sum, rho(d));  // in (1/2)Z
  const Rat two_e = e * 2;
  if (two_e.get_den() != 1) throw invariant_error("column exponent is not a half-integer");
  return (int)two_e.get_num().get_si();
}

HalfLaurent m_factor(const Tableau& t, int col) {
  const std::vector<int> h = t.shape.column_heights();
  const int right = (col + 1 < (int)h.size()) ? h[col + 1] : 0;
  return phi_k(h[col] - right);
}

}  // namespace

HalfLaurent M_pair(const Tableau& t, int col) {
  require_type_a(t.shape.datum, "M_pair");
  if (col < 0 || col + 1 >= (int)t.cols.size()) throw usage_error("M_pair: column index out of range");
  return exact_divide(phi_column(t, col), m_factor(t, col)).shifted(column_shift(t, col));
}

HalfLaurent M_last(const Tableau& t) {
  require_type_a(t.shape.datum, "M_last");
  if (t.cols.empty()) return HalfLaurent::one();
  const int col = (int)t.cols.size() - 1;
  return exact_divide(phi_column(t, col), m_factor(t, col)).shifted(column_shift(t, col));
}

HalfLaurent macdonald_L(const RootDatum& d, const Vec& lambda, const Vec& mu) {
  require_type_a(d, "macdonald_L");
  if (!is_dominant(d, lambda)) throw usage_error("macdonald_L: lambda is not dominant");
  if (!is_dominant(d, mu)) throw usage_error("macdonald_L: mu is not dominant");
  const Shape shape = Shape::from_lambda(d, lambda);

  // <lambda+mu, rho> is representative-independent (rho pairs to 0 with
  // (1,...,1)), so the caller's mu representative is fine as-is.
  Vec sum = canonicalize(d, lambda);
  const Vec mu_c = canonicalize(d, mu);
  for (size_t k = 0; k < sum.size(); ++k) sum[k] += mu_c[k];
  const Rat e = pair(sum, rho(d));
  const Rat two_e = e * 2;
  if (two_e.get_den() != 1) throw invariant_error("<lambda+mu, rho> is not a half-integer");
  const int shift = (int)two_e.get_num().get_si();

  std::vector<int> rows;
  for (const Rat& p : canonicalize(d, lambda)) rows.push_back((int)p.get_num().get_si());
  const HalfLaurent b = b_lambda(rows);

  HalfLaurent acc;
  for (const Tableau& t : enumerate_ssyt(shape, mu)) {
    acc += exact_divide(phi_T_heads(t), b).shifted(shift);
  }
  if (!acc.is_q_polynomial()) {
    throw invariant_error("macdonald_L is not a polynomial in q: " + acc.str());
  }
  return acc;
}

}  // namespace hl
