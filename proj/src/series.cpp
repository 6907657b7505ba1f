#include "invseq/series.hpp"

#include <algorithm>
#include <tuple>

#include "invseq/errors.hpp"
#include "invseq/patterns.hpp"
#include "invseq/statistics.hpp"

namespace invseq {

// ---------------------------------------------------------------------------
// PowerSeries

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {}

PowerSeries PowerSeries::from_coefficients(std::vector<Rational> coefficients, int order) {
  coefficients.resize(static_cast<std::size_t>(order + 1));
  return PowerSeries(std::move(coefficients));
}

PowerSeries PowerSeries::from_integers(const std::vector<BigInt>& coefficients, int order) {
  std::vector<Rational> q(static_cast<std::size_t>(order + 1));
  for (std::size_t i = 0; i < q.size() && i < coefficients.size(); ++i) q[i] = coefficients[i];
  return PowerSeries(std::move(q));
}

PowerSeries PowerSeries::from_integers(std::initializer_list<long> coefficients, int order) {
  std::vector<BigInt> z;
  for (long c : coefficients) z.emplace_back(c);
  return from_integers(z, order);
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
  std::vector<Rational> q(static_cast<std::size_t>(order + 1));
  if (!q.empty()) q[0] = c;
  return PowerSeries(std::move(q));
}

PowerSeries PowerSeries::truncated(int order) const {
  std::vector<Rational> q(coeffs_.begin(),
                          coeffs_.begin() + std::min<std::ptrdiff_t>(order + 1, coeffs_.size()));
  return PowerSeries(std::move(q));
}

PowerSeries PowerSeries::shifted_down(std::size_t k) const {
  for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) throw SeriesExpansionError("series is not divisible by t^" + std::to_string(k));
  }
  if (k >= coeffs_.size()) return PowerSeries();
  return PowerSeries(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

PowerSeries PowerSeries::shifted_up(std::size_t k) const {
  std::vector<Rational> q(coeffs_.size());
  for (std::size_t i = k; i < q.size(); ++i) q[i] = coeffs_[i - k];
  return PowerSeries(std::move(q));
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool PowerSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

std::vector<BigInt> PowerSeries::integer_coefficients() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].get_den() != 1) {
      throw SeriesExpansionError("coefficient of t^" + std::to_string(i) +
                                 " is not an integer: " + to_decimal(coeffs_[i]));
    }
    out.push_back(coeffs_[i].get_num());
  }
  return out;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (Rational& c : r.coeffs_) c = -c;
  return r;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (Rational& x : coeffs_) x *= c;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<Rational> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) q[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PowerSeries(std::move(q));
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.size(), b.size());
  if (n == 0) return PowerSeries();
  if (b.coeffs_[0] == 0) throw DivisionByNonUnit("divisor has zero constant term");
  const Rational inv = 1 / b.coeffs_[0];
  std::vector<Rational> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational acc = a.coeffs_[i];
    for (std::size_t j = 1; j <= i; ++j) acc -= q[i - j] * b.coeffs_[j];
    q[i] = acc * inv;
  }
  return PowerSeries(std::move(q));
}

PowerSeries sqrt(const PowerSeries& a) {
  if (a.size() == 0) return PowerSeries();
  if (a[0] != 1) throw ConstantTermNotOne("sqrt needs constant term 1, got " + to_decimal(a[0]));
  const int target = a.order();
  PowerSeries s = PowerSeries::constant(1, 0);
  int precision = 0;
  while (precision < target) {
    precision = std::min(target, 2 * precision + 1);
    const PowerSeries lifted = PowerSeries::from_coefficients(s.coefficients(), precision);
    s = (lifted + a.truncated(precision) / lifted) * Rational(1, 2);
  }
  return s;
}

// ---------------------------------------------------------------------------
// BivariateSeries

BivariateSeries::BivariateSeries(int order_t, int order_u)
    : rows_(static_cast<std::size_t>(order_t + 1), PowerSeries::constant(0, order_u)),
      order_u_(order_u) {}

BivariateSeries BivariateSeries::from_terms(std::initializer_list<std::tuple<int, int, long>> terms,
                                            int order_t, int order_u) {
  BivariateSeries s(order_t, order_u);
  for (auto [i, j, c] : terms) {
    if (i > order_t || j > order_u) continue;
    std::vector<Rational> row = s.rows_[static_cast<std::size_t>(i)].coefficients();
    row[static_cast<std::size_t>(j)] += c;
    s.rows_[static_cast<std::size_t>(i)] = PowerSeries(std::move(row));
  }
  return s;
}

BivariateSeries BivariateSeries::divided_by_u() const {
  BivariateSeries r;
  r.order_u_ = order_u_ - 1;
  r.rows_.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() > 0 && rows_[i][0] != 0) {
      throw SeriesExpansionError("numerator is not divisible by u (coefficient of t^" +
                                 std::to_string(i) + " u^0 is " + to_decimal(rows_[i][0]) + ")");
    }
    r.rows_.push_back(rows_[i].shifted_down(1));
  }
  return r;
}

bool BivariateSeries::is_integral() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const PowerSeries& r) { return r.is_integral(); });
}

bool BivariateSeries::is_nonnegative() const {
  for (const PowerSeries& r : rows_) {
    for (const Rational& c : r.coefficients()) {
      if (c < 0) return false;
    }
  }
  return true;
}

BivariateSeries BivariateSeries::operator-() const {
  BivariateSeries r = *this;
  for (PowerSeries& row : r.rows_) row = -row;
  return r;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& other) {
  rows_.resize(std::min(rows_.size(), other.rows_.size()));
  order_u_ = std::min(order_u_, other.order_u_);
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] += other.rows_[i];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& other) {
  return *this += -other;
}

BivariateSeries& BivariateSeries::operator*=(const Rational& c) {
  for (PowerSeries& row : rows_) row *= c;
  return *this;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  const std::size_t n = std::min(a.rows_.size(), b.rows_.size());
  BivariateSeries r(static_cast<int>(n) - 1, std::min(a.order_u_, b.order_u_));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.rows_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) r.rows_[i + j] += a.rows_[i] * b.rows_[j];
  }
  return r;
}

BivariateSeries operator/(const BivariateSeries& a, const BivariateSeries& b) {
  const std::size_t n = std::min(a.rows_.size(), b.rows_.size());
  BivariateSeries q(static_cast<int>(n) - 1, std::min(a.order_u_, b.order_u_));
  if (n == 0) return q;
  if (b.rows_[0].size() == 0 || b.rows_[0][0] == 0) {
    throw DivisionByNonUnit("bivariate divisor has zero constant term");
  }
  for (std::size_t i = 0; i < n; ++i) {
    PowerSeries acc = a.rows_[i];
    for (std::size_t j = 1; j <= i; ++j) acc -= q.rows_[i - j] * b.rows_[j];
    q.rows_[i] = acc / b.rows_[0];
  }
  return q;
}

BivariateSeries sqrt(const BivariateSeries& a) {
  if (a.order_t() < 0) return a;
  if (a.order_u() < 0 || a.coeff(0, 0) != 1) {
    throw ConstantTermNotOne("bivariate sqrt needs (0,0) coefficient 1");
  }
  const int target = a.order_t();
  BivariateSeries current(0, a.order_u());
  current.rows_[0] = sqrt(a.row(0));
  int precision = 0;
  while (precision < target) {
    precision = std::min(target, 2 * precision + 1);
    BivariateSeries lifted(precision, a.order_u());
    for (std::size_t i = 0; i < current.rows_.size(); ++i) lifted.rows_[i] = current.rows_[i];
    BivariateSeries a_trunc(precision, a.order_u());
    for (int i = 0; i <= precision; ++i) a_trunc.rows_[static_cast<std::size_t>(i)] = a.rows_[static_cast<std::size_t>(i)];
    current = (lifted + a_trunc / lifted) * Rational(1, 2);
  }
  return current;
}

// ---------------------------------------------------------------------------
// Algebraic equations

namespace {

PowerSeries polynomial_as_series(const std::vector<BigInt>& coeffs, int order) {
  return PowerSeries::from_integers(coeffs, order);
}

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

int AlgebraicEquation::degree() const {
  int d = 0;
  for (const auto& [power, poly] : terms) d = std::max(d, power);
  return d;
}

PowerSeries AlgebraicEquation::evaluate(const PowerSeries& y) const {
  const int order = y.order();
  const int d = degree();
  std::vector<PowerSeries> by_power(static_cast<std::size_t>(d + 1), PowerSeries::constant(0, order));
  for (const auto& [power, poly] : terms) {
    by_power[static_cast<std::size_t>(power)] += polynomial_as_series(poly, order);
  }
  PowerSeries acc = by_power[static_cast<std::size_t>(d)];
  for (int k = d - 1; k >= 0; --k) acc = acc * y + by_power[static_cast<std::size_t>(k)];
  return acc;
}

PowerSeries AlgebraicEquation::evaluate_derivative(const PowerSeries& y) const {
  AlgebraicEquation derivative;
  for (const auto& [power, poly] : terms) {
    if (power == 0) continue;
    std::vector<BigInt> scaled = poly;
    for (BigInt& c : scaled) c *= power;
    derivative.terms.emplace_back(power - 1, std::move(scaled));
  }
  if (derivative.terms.empty()) return PowerSeries::constant(0, y.order());
  return derivative.evaluate(y);
}

AlgebraicEquation f_010_102_cubic() {
  // (t^5 - 3t^4 + 4t^3 - 3t^2 + t) F^3 + (4t^4 - 8t^3 + 6t^2 - 2t) F^2
  //   + (-t^4 + 8t^3 - 11t^2 + 6t - 1) F - 2t^3 + 5t^2 - 4t + 1
  return AlgebraicEquation{{
      {3, ints({0, 1, -3, 4, -3, 1})},
      {2, ints({0, -2, 6, -8, 4})},
      {1, ints({-1, 6, -11, 8, -1})},
      {0, ints({1, -4, 5, -2})},
  }};
}

AlgebraicEquation b_010_102_cubic() {
  // (t^3 - 2t^2 + 2t - 1) B^3 + (t^3 - t^2 - t) B^2 + (-t^4 + 2t^3 - 4t^2 + t) B - t^4
  return AlgebraicEquation{{
      {3, ints({-1, 2, -2, 1})},
      {2, ints({0, -1, -1, 1})},
      {1, ints({0, 1, -4, 2, -1})},
      {0, ints({0, 0, 0, 0, -1})},
  }};
}

int residual_order(const AlgebraicEquation& eq, const PowerSeries& s) {
  const PowerSeries r = eq.evaluate(s);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] != 0) return static_cast<int>(i);
  }
  return static_cast<int>(r.size());
}

PowerSeries solve_algebraic(const AlgebraicEquation& eq, const std::vector<Rational>& seed,
                            int order) {
  const int m = static_cast<int>(seed.size());
  const PowerSeries seeded(seed);
  if (residual_order(eq, seeded) < m) {
    throw Inconsistent("seed does not satisfy the relation through t^" + std::to_string(m - 1));
  }
  if (order < m) return seeded.truncated(order);

  // Lowest nonvanishing term of dP/dY at the seed fixes how each new
  // coefficient enters the relation.
  const PowerSeries slope = eq.evaluate_derivative(seeded);
  int v = -1;
  for (int i = 0; i < m; ++i) {
    if (slope[static_cast<std::size_t>(i)] != 0) {
      v = i;
      break;
    }
  }
  if (v < 0) {
    throw BranchAmbiguity("seed of length " + std::to_string(m) +
                          " does not determine the next coefficient");
  }
  const Rational lead = slope[static_cast<std::size_t>(v)];

  std::vector<Rational> coeffs = seed;
  for (int n = m; n <= order; ++n) {
    // Coefficient n first appears at t^(n+v) with factor `lead`; quadratic
    // terms start at t^(2n) > t^(n+v) since n >= m > v.
    const PowerSeries trial = PowerSeries::from_coefficients(coeffs, n + v);
    const PowerSeries r = eq.evaluate(trial);
    for (int i = 0; i < n + v; ++i) {
      if (r[static_cast<std::size_t>(i)] != 0) {
        throw Inconsistent("relation fails at t^" + std::to_string(i) + " while solving");
      }
    }
    coeffs.push_back(-r[static_cast<std::size_t>(n + v)] / lead);
  }
  return PowerSeries(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Closed forms

PowerSeries gf_a_201_210(int order) {
  const PowerSeries radicand = PowerSeries::from_integers({1, -8}, order);
  const PowerSeries root = sqrt(radicand);
  const PowerSeries numerator =
      PowerSeries::from_integers({2, -1}, order) - PowerSeries::from_integers({0, 1}, order) * root;
  const PowerSeries denominator = PowerSeries::from_integers({2, -4, 4}, order);
  return numerator / denominator;
}

PowerSeries gf_f_010_102(int order) {
  const std::vector<std::uint64_t> counts = count_avoiders(1, patterns_010_102());
  std::vector<Rational> seed;
  for (std::uint64_t c : counts) seed.emplace_back(static_cast<unsigned long>(c));
  return solve_algebraic(f_010_102_cubic(), seed, order);
}

BivariateSeries gf_a_lk(int order_t, int order_u) {
  // The numerator is divided by u, so it is expanded one u-degree further.
  const int nu = order_u + 1;
  const BivariateSeries radicand = BivariateSeries::from_terms(
      {{2, 1, 4}, {2, 0, 4}, {1, 1, -4}, {1, 0, -4}, {0, 0, 1}}, order_t, nu);
  const BivariateSeries numerator =
      BivariateSeries::from_terms({{1, 0, 2}, {0, 0, -1}}, order_t, nu) + sqrt(radicand);
  const BivariateSeries t_minus_one =
      BivariateSeries::from_terms({{1, 0, 1}, {0, 0, -1}}, order_t, order_u);
  return (numerator.divided_by_u() / t_minus_one) * Rational(1, 2);
}

BivariateSeries gf_b_lk(int order_t, int order_u) {
  const BivariateSeries radicand = BivariateSeries::from_terms(
      {{2, 1, -4}, {2, 0, 4}, {1, 1, 4}, {0, 2, 1}, {1, 0, -4}, {0, 1, -2}, {0, 0, 1}}, order_t,
      order_u);
  const BivariateSeries numerator =
      BivariateSeries::from_terms({{1, 1, -2}, {1, 0, 2}, {0, 1, 1}, {0, 0, -1}}, order_t, order_u) +
      sqrt(radicand);
  const BivariateSeries t_minus_one =
      BivariateSeries::from_terms({{1, 0, 1}, {0, 0, -1}}, order_t, order_u);
  return (numerator / t_minus_one) * Rational(1, 2);
}

std::variant<PowerSeries, BivariateSeries> gf_eval(GfId id, int order) {
  switch (id) {
    case GfId::A201210: return gf_a_201_210(order);
    case GfId::F010102: return gf_f_010_102(order);
    case GfId::ALk: return gf_a_lk(order, order);
    case GfId::BLk: return gf_b_lk(order, order);
  }
  throw UnsupportedCombination("unknown generating function id");
}

}  // namespace invseq
