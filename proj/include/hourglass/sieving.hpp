#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hourglass {

/// Integer polynomial in q; coeffs[e] is the coefficient of q^e. Arithmetic
/// is exact and throws std::overflow_error on int64 overflow.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<std::int64_t> coeffs);
  static QPolynomial constant(std::int64_t c);
  static QPolynomial monomial(int e, std::int64_t c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t coeff(int e) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t at_one() const;

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  /// Quotient and remainder by a monic divisor.
  std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& d) const;
  /// Exact division; throws std::logic_error when the remainder is non-zero.
  QPolynomial exact_div(const QPolynomial& d) const;

  std::string to_string() const;
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// [m]_q = 1 + q + ... + q^{m-1}.
QPolynomial q_int(int m);
QPolynomial q_factorial(int m);
/// Hook lengths of the r x d rectangle, row by row.
std::vector<int> hook_lengths(int r, int d);
/// [n]_q! / prod of [h]_q over the hooks.
QPolynomial q_hook_poly(int r, int d);

/// d-th cyclotomic polynomial, memoized.
QPolynomial cyclotomic(int d);

/// Element of Z[q] / Phi_d(q), i.e. of Z[zeta_d].
class CyclotomicElement {
 public:
  CyclotomicElement(int d, const QPolynomial& p);
  int modulus() const { return d_; }
  const QPolynomial& value() const { return value_; }
  bool is_constant() const { return value_.degree() <= 0; }
  std::int64_t constant_term() const { return value_.coeff(0); }

 private:
  int d_;
  QPolynomial value_;
};

/// f(zeta^k) with zeta = exp(2 pi i / n). Throws std::logic_error when the
/// value is not an integer.
std::int64_t eval_root_of_unity(const QPolynomial& f, int n, int k);

/// Generating function of the major index over SYT(r x d).
QPolynomial maj_generating_function(int r, int d);

/// a[k] = number of tableaux fixed by the k-th power of promotion, k = 0..n-1.
/// Throws std::domain_error when there are more than `bound` tableaux.
std::vector<std::int64_t> promotion_fixed_counts(int r, int d, std::size_t bound = 200000);

struct CspRow {
  int k = 0;
  std::int64_t fixed_count = 0;
  std::int64_t f_value = 0;
  bool ok() const { return fixed_count == f_value; }
};

struct CspReport {
  int r = 0;
  int d = 0;
  QPolynomial f;
  std::vector<CspRow> rows;
  bool ok() const;
  /// First k with a mismatch, or -1.
  int first_failure() const;
};

CspReport csp_check(int r, int d, std::size_t bound = 200000);

}  // namespace hourglass
