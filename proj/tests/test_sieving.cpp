#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hourglass/sieving.hpp"
#include "hourglass/tableau.hpp"

using namespace hourglass;

namespace {

// f(exp(2 pi i k / n)) in floating point.
std::complex<double> numeric_eval(const QPolynomial& f, int n, int k) {
  const double pi = std::acos(-1.0);
  std::complex<double> z = std::polar(1.0, 2 * pi * k / n), acc = 0, pw = 1;
  for (int e = 0; e <= f.degree(); ++e) {
    acc += static_cast<double>(f.coeff(e)) * pw;
    pw *= z;
  }
  return acc;
}

// Counts fixed points of promotion powers directly.
std::vector<std::int64_t> brute_fixed(int r, int d) {
  const auto all = all_standard_tableaux(r, d);
  const int n = r * d;
  std::vector<std::int64_t> out(n, 0);
  for (const auto& t : all) {
    RectTableau cur = t;
    for (int k = 0; k < n; ++k) {
      if (cur == t) ++out[k];
      cur = promote(cur);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const auto a = q_int(4);
  const auto b = q_int(2);
  CHECK(a.exact_div(b).to_string() == "1 + q^2");
  CHECK_THROWS_AS(q_int(3).exact_div(b), std::logic_error);
  const auto [quot, rem] = q_int(5).divmod(b);
  CHECK(quot * b + rem == q_int(5));
  CHECK(rem.degree() < b.degree());
  CHECK((a - a).is_zero());
  CHECK(QPolynomial::monomial(3, 2).coeff(3) == 2);
  CHECK(q_factorial(4).at_one() == 24);
  const auto big = QPolynomial::constant(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + QPolynomial::constant(1), std::overflow_error);
  CHECK_THROWS_AS(big * QPolynomial::constant(2), std::overflow_error);
}

TEST_CASE("cyclotomic polynomials multiply to q^n - 1") {
  for (int n = 1; n <= 30; ++n) {
    QPolynomial prod = QPolynomial::constant(1);
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    CHECK(prod == QPolynomial::monomial(n) - QPolynomial::constant(1));
  }
  CHECK(cyclotomic(6).to_string() == "1 - q + q^2");
}

TEST_CASE("hook polynomial") {
  CHECK(hook_lengths(2, 3) == std::vector<int>{4, 3, 2, 3, 2, 1});
  for (auto [r, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {4, 3}, {2, 6}}) {
    const auto f = q_hook_poly(r, d);
    CHECK(f.at_one() == static_cast<std::int64_t>(all_standard_tableaux(r, d).size()));
    // Palindromic.
    for (int e = 0; e <= f.degree(); ++e) CHECK(f.coeff(e) == f.coeff(f.degree() - e));
  }
}

TEST_CASE("major index generating function") {
  for (auto [r, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 5}, {6, 2}, {3, 4}}) {
    std::vector<std::int64_t> direct;
    for (const auto& t : all_standard_tableaux(r, d)) {
      const int m = major_index(t);
      if (static_cast<int>(direct.size()) <= m) direct.resize(m + 1, 0);
      ++direct[m];
    }
    CHECK(maj_generating_function(r, d) == QPolynomial(direct));
    const int shift = d * r * (r - 1) / 2;
    CHECK(maj_generating_function(r, d) == QPolynomial::monomial(shift) * q_hook_poly(r, d));
  }
}

TEST_CASE("evaluation at roots of unity") {
  for (auto [r, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {3, 3}, {2, 5}, {5, 2}}) {
    const auto f = q_hook_poly(r, d);
    const int n = r * d;
    for (int k = 0; k < n; ++k) {
      const auto z = numeric_eval(f, n, k);
      CHECK(std::abs(z.imag()) < 1e-6);
      CHECK(eval_root_of_unity(f, n, k) == std::llround(z.real()));
    }
  }
  CHECK_THROWS_AS(eval_root_of_unity(q_int(2), 4, 1), std::logic_error);
  const CyclotomicElement e(3, q_int(3));
  CHECK(e.is_constant());
  CHECK(e.constant_term() == 0);
}

TEST_CASE("fixed point counts") {
  CHECK(promotion_fixed_counts(2, 2) == std::vector<std::int64_t>{2, 0, 2, 0});
  CHECK(promotion_fixed_counts(4, 1) == std::vector<std::int64_t>{1, 1, 1, 1});
  for (auto [r, d] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {3, 3}, {2, 4}}) {
    const auto a = promotion_fixed_counts(r, d);
    CHECK(a == brute_fixed(r, d));
    const int n = r * d;
    for (int k = 0; k < n; ++k) CHECK(a[k] == a[std::gcd(k, n) % n]);
  }
  CHECK_THROWS_AS(promotion_fixed_counts(4, 4, 10), std::domain_error);
}

TEST_CASE("cyclic sieving") {
  for (int r = 1; r <= 6; ++r) CHECK(csp_check(r, 2).ok());
  for (int d = 1; d <= 5; ++d) CHECK(csp_check(2, d).ok());
  CHECK(csp_check(3, 3).ok());
  const auto rep = csp_check(5, 1);
  CHECK(rep.ok());
  CHECK(rep.first_failure() == -1);
  for (const auto& row : rep.rows) CHECK(row.fixed_count == 1);
}
