#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <variant>
#include <vector>

#include "invseq/bigint.hpp"

namespace invseq {

/// Truncated power series c_0 + c_1 t + ... + c_N t^N over exact rationals.
///
/// The order N is inclusive; a default-constructed series has no
/// coefficients (order -1). Binary operations truncate to the smaller order.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<Rational> coefficients);

  /// Pads with zeros or truncates `coefficients` to the given order.
  static PowerSeries from_coefficients(std::vector<Rational> coefficients, int order);
  static PowerSeries from_integers(const std::vector<BigInt>& coefficients, int order);
  static PowerSeries from_integers(std::initializer_list<long> coefficients, int order);
  static PowerSeries constant(const Rational& c, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  PowerSeries truncated(int order) const;

  /// Divides by t^k; throws SeriesExpansionError if a low coefficient is nonzero.
  PowerSeries shifted_down(std::size_t k) const;
  /// Multiplies by t^k, keeping the order.
  PowerSeries shifted_up(std::size_t k) const;

  bool is_zero() const;
  bool is_integral() const;
  /// Throws SeriesExpansionError unless every coefficient is an integer.
  std::vector<BigInt> integer_coefficients() const;

  PowerSeries operator-() const;
  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  PowerSeries& operator*=(const Rational& c);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  /// Throws DivisionByNonUnit when b_0 == 0.
  friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Square root with constant term 1, by Newton iteration with doubling
/// precision. Throws ConstantTermNotOne.
PowerSeries sqrt(const PowerSeries& a);

/// Series in t and u truncated to the box t^N, u^M (both inclusive).
/// Stored as rows: row i is the coefficient of t^i, a series in u.
class BivariateSeries {
 public:
  BivariateSeries() = default;
  BivariateSeries(int order_t, int order_u);

  /// Sum of c * t^i * u^j over `terms`, truncated to the box.
  static BivariateSeries from_terms(std::initializer_list<std::tuple<int, int, long>> terms,
                                    int order_t, int order_u);

  int order_t() const noexcept { return static_cast<int>(rows_.size()) - 1; }
  int order_u() const noexcept { return order_u_; }

  const Rational& coeff(std::size_t i, std::size_t j) const { return rows_.at(i)[j]; }
  const PowerSeries& row(std::size_t i) const { return rows_.at(i); }

  /// Divides by u; throws SeriesExpansionError unless every u^0 coefficient
  /// vanishes. The u-order drops by one.
  BivariateSeries divided_by_u() const;

  bool is_integral() const;
  bool is_nonnegative() const;

  BivariateSeries operator-() const;
  BivariateSeries& operator+=(const BivariateSeries& other);
  BivariateSeries& operator-=(const BivariateSeries& other);
  BivariateSeries& operator*=(const Rational& c);
  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
  friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
  friend BivariateSeries operator*(BivariateSeries a, const Rational& c) { return a *= c; }
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  /// Throws DivisionByNonUnit when the (0,0) coefficient of b is zero.
  friend BivariateSeries operator/(const BivariateSeries& a, const BivariateSeries& b);

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;
  friend BivariateSeries sqrt(const BivariateSeries& a);

 private:
  std::vector<PowerSeries> rows_;
  int order_u_ = -1;
};

/// Newton iteration in t over u-series coefficients. The (0,0) coefficient
/// must be exactly 1 (ConstantTermNotOne otherwise).
BivariateSeries sqrt(const BivariateSeries& a);

/// Polynomial relation P(t, Y) = sum_k p_k(t) Y^k with integer coefficients.
struct AlgebraicEquation {
  /// (Y-power, coefficients of p_k in increasing powers of t).
  std::vector<std::pair<int, std::vector<BigInt>>> terms;

  int degree() const;
  /// P(t, y) truncated to the order of y.
  PowerSeries evaluate(const PowerSeries& y) const;
  /// dP/dY evaluated at y, truncated to the order of y.
  PowerSeries evaluate_derivative(const PowerSeries& y) const;
};

/// Cubic satisfied by the generating function of I(010,102).
AlgebraicEquation f_010_102_cubic();
/// Cubic satisfied by B(t,1,1) = sum b_n t^n.
AlgebraicEquation b_010_102_cubic();

/// Extends `seed` to the unique series Y with P(t, Y) = O(t^(order+1+v)),
/// where t^v is the lowest nonvanishing term of dP/dY at the seed.
///
/// Throws Inconsistent if the seed already violates the relation, and
/// BranchAmbiguity if the seed is too short to fix v.
PowerSeries solve_algebraic(const AlgebraicEquation& eq, const std::vector<Rational>& seed,
                            int order);

/// Valuation of P(t, s) computed to the order of s: the number M such that
/// the coefficients of t^0..t^(M-1) vanish. All coefficients vanishing gives
/// order(s) + 1; an empty series gives 0.
int residual_order(const AlgebraicEquation& eq, const PowerSeries& s);

enum class GfId { A201210, F010102, ALk, BLk };

/// Generating function of I(201,210): (2 - t - t sqrt(1-8t)) / (4t^2 - 4t + 2).
PowerSeries gf_a_201_210(int order);

/// Generating function of I(010,102), solved from its cubic with seed 1, 1
/// taken from brute-force enumeration.
PowerSeries gf_f_010_102(int order);

/// sum a_{l,k} t^l u^k = (2t - 1 + sqrt(4t^2u + 4t^2 - 4tu - 4t + 1)) / (2u(t-1)).
BivariateSeries gf_a_lk(int order_t, int order_u);

/// sum b_{l,k} t^l u^k
///   = (-2tu + 2t + u - 1 + sqrt(-4t^2u + 4t^2 + 4tu + u^2 - 4t - 2u + 1)) / (2(t-1)).
BivariateSeries gf_b_lk(int order_t, int order_u);

/// Dispatch by id; bivariate ids use the square box order x order.
std::variant<PowerSeries, BivariateSeries> gf_eval(GfId id, int order);

}  // namespace invseq
