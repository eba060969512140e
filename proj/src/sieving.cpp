#include "hourglass/sieving.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "hourglass/tableau.hpp"

namespace hourglass {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("QPolynomial: coefficient overflow");
  return out;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("QPolynomial: coefficient overflow");
  return out;
}

}  // namespace

QPolynomial::QPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::constant(std::int64_t c) { return QPolynomial({c}); }

QPolynomial QPolynomial::monomial(int e, std::int64_t c) {
  std::vector<std::int64_t> v(e + 1, 0);
  v[e] = c;
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t QPolynomial::coeff(int e) const {
  return e >= 0 && e < static_cast<int>(coeffs_.size()) ? coeffs_[e] : 0;
}

std::int64_t QPolynomial::at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s = add_checked(s, c);
  return s;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  std::vector<std::int64_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = add_checked(coeff(i), o.coeff(i));
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
  std::vector<std::int64_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = add_checked(coeff(i), mul_checked(-1, o.coeff(i)));
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<std::int64_t> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      v[i + j] = add_checked(v[i + j], mul_checked(coeffs_[i], o.coeffs_[j]));
    }
  }
  return QPolynomial(std::move(v));
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divmod(const QPolynomial& d) const {
  if (d.is_zero() || d.coeffs_.back() != 1) throw std::invalid_argument("QPolynomial: divisor must be monic");
  std::vector<std::int64_t> rem = coeffs_;
  const int dd = d.degree();
  std::vector<std::int64_t> quot(std::max<int>(0, degree() - dd + 1), 0);
  for (int e = degree(); e >= dd; --e) {
    const std::int64_t c = rem[e];
    if (c == 0) continue;
    quot[e - dd] = c;
    for (int j = 0; j <= dd; ++j) rem[e - dd + j] = add_checked(rem[e - dd + j], mul_checked(-c, d.coeffs_[j]));
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

QPolynomial QPolynomial::exact_div(const QPolynomial& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::logic_error("QPolynomial: inexact division by " + d.to_string());
  return q;
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int e = 0; e <= degree(); ++e) {
    const auto c = coeffs_[e];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const auto a = c < 0 ? -c : c;
    if (e == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a) + "*";
    s += e == 1 ? "q" : "q^" + std::to_string(e);
  }
  return s;
}

QPolynomial q_int(int m) {
  if (m < 1) throw std::domain_error("q_int: m must be positive");
  return QPolynomial(std::vector<std::int64_t>(m, 1));
}

QPolynomial q_factorial(int m) {
  QPolynomial p = QPolynomial::constant(1);
  for (int j = 2; j <= m; ++j) p = p * q_int(j);
  return p;
}

std::vector<int> hook_lengths(int r, int d) {
  if (r < 1 || d < 1) throw std::domain_error("hook_lengths: shape must be non-empty");
  std::vector<int> h;
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= d; ++j) h.push_back((r - i) + (d - j) + 1);
  }
  return h;
}

QPolynomial q_hook_poly(int r, int d) {
  QPolynomial p = q_factorial(r * d);
  for (int h : hook_lengths(r, d)) p = p.exact_div(q_int(h));
  return p;
}

QPolynomial cyclotomic(int d) {
  if (d < 1) throw std::domain_error("cyclotomic: d must be positive");
  static std::mutex mu;
  static std::map<int, QPolynomial> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(d); it != memo.end()) return it->second;
  }
  QPolynomial p = QPolynomial::monomial(d) - QPolynomial::constant(1);
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) p = p.exact_div(cyclotomic(e));
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(d, p);
  return p;
}

CyclotomicElement::CyclotomicElement(int d, const QPolynomial& p) : d_(d), value_(p.divmod(cyclotomic(d)).second) {}

std::int64_t eval_root_of_unity(const QPolynomial& f, int n, int k) {
  if (n < 1) throw std::domain_error("eval_root_of_unity: n must be positive");
  k = ((k % n) + n) % n;
  // zeta^k is eta^{k'} for a primitive d-th root eta, with gcd(k', d) = 1.
  const int g = std::gcd(n, k);
  const int d = n / g;
  const int kp = k / g;
  std::vector<std::int64_t> buckets(d, 0);
  for (int e = 0; e <= f.degree(); ++e) {
    const int slot = static_cast<int>((static_cast<long long>(e) * kp) % d);
    buckets[slot] = add_checked(buckets[slot], f.coeff(e));
  }
  const CyclotomicElement v(d, QPolynomial(std::move(buckets)));
  if (!v.is_constant()) {
    throw std::logic_error("eval_root_of_unity: value at a root of unity is not an integer: " + v.value().to_string());
  }
  return v.constant_term();
}

QPolynomial maj_generating_function(int r, int d) {
  std::vector<std::int64_t> c;
  for (const auto& t : all_standard_tableaux(r, d)) {
    const int m = major_index(t);
    if (m >= static_cast<int>(c.size())) c.resize(m + 1, 0);
    ++c[m];
  }
  return QPolynomial(std::move(c));
}

std::vector<std::int64_t> promotion_fixed_counts(int r, int d, std::size_t bound) {
  const auto f = q_hook_poly(r, d).at_one();
  if (static_cast<std::size_t>(f) > bound) {
    throw std::domain_error("promotion_fixed_counts: " + std::to_string(f) + " tableaux exceed the bound " +
                            std::to_string(bound));
  }
  const auto all = all_standard_tableaux(r, d);
  const int n = r * d;
  std::map<RectTableau, int> index;
  for (std::size_t k = 0; k < all.size(); ++k) index.emplace(all[k], static_cast<int>(k));
  std::vector<int> orbit_size(all.size(), 0);
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (orbit_size[k]) continue;
    std::vector<int> orbit = {static_cast<int>(k)};
    RectTableau t = promote(all[k]);
    while (!(t == all[k])) {
      orbit.push_back(index.at(t));
      t = promote(t);
    }
    for (int x : orbit) orbit_size[x] = static_cast<int>(orbit.size());
  }
  std::vector<std::int64_t> a(n, 0);
  for (int k = 0; k < n; ++k) {
    for (int o : orbit_size) {
      if (k % o == 0) ++a[k];
    }
  }
  return a;
}

bool CspReport::ok() const { return first_failure() == -1; }

int CspReport::first_failure() const {
  for (const auto& row : rows) {
    if (!row.ok()) return row.k;
  }
  return -1;
}

CspReport csp_check(int r, int d, std::size_t bound) {
  CspReport rep;
  rep.r = r;
  rep.d = d;
  rep.f = q_hook_poly(r, d);
  const auto a = promotion_fixed_counts(r, d, bound);
  const int n = r * d;
  for (int k = 0; k < n; ++k) rep.rows.push_back({k, a[k], eval_root_of_unity(rep.f, n, k)});
  return rep;
}

}  // namespace hourglass
