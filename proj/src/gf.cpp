// Copyright 2026 The codedcache Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "codedcache/gf.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "codedcache/error.hpp"

namespace codedcache::gf {

namespace {

struct ModulusEntry {
  std::uint32_t p;
  std::uint32_t m;
  std::array<std::uint8_t, 11> coeffs;  // constant first, monic
};

// Lexicographically smallest monic irreducible of each degree (ordered by the
// base-p value of the lower coefficients). Verified by the gf unit tests.
constexpr ModulusEntry kModuli[] = {
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 0, 0, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
    {2, 9, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
    {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
    {3, 2, {1, 0, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 1, 0, 0, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {3, 6, {2, 1, 0, 0, 0, 0, 1}},
    {5, 2, {2, 0, 1}},
    {5, 3, {1, 1, 0, 1}},
    {5, 4, {2, 0, 0, 0, 1}},
    {7, 2, {1, 0, 1}},
    {7, 3, {2, 0, 0, 1}},
    {11, 2, {1, 0, 1}},
    {13, 2, {2, 0, 1}},
    {17, 2, {3, 0, 1}},
    {19, 2, {1, 0, 1}},
    {23, 2, {1, 0, 1}},
    {29, 2, {2, 0, 1}},
    {31, 2, {1, 0, 1}},
};

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::uint32_t gcd32(std::uint32_t a, std::uint32_t b) { return std::gcd(a, b); }

// Inverse of x modulo q by the extended Euclidean algorithm; 0 if none.
std::uint32_t mod_inverse(std::uint32_t x, std::uint32_t q) {
  std::int64_t old_r = x, r = q, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
  }
  if (old_r != 1) return 0;
  return static_cast<std::uint32_t>(((old_s % q) + q) % q);
}

}  // namespace

bool is_prime(std::uint64_t v) noexcept {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t q) noexcept {
  if (q < 2) return std::nullopt;
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, m);
}

std::optional<Polynomial> builtin_modulus(std::uint32_t p, std::uint32_t m) {
  for (const auto& e : kModuli) {
    if (e.p == p && e.m == m) return Polynomial(e.coeffs.begin(), e.coeffs.begin() + m + 1);
  }
  return std::nullopt;
}

bool is_irreducible(std::uint32_t p, const Polynomial& poly) {
  const ScalarDomain fp = ScalarDomain::prime_field(p);
  const Polynomial f = poly_trim(poly);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
    for (std::uint64_t v = 0; v < count; ++v) {
      Polynomial g(d + 1, 0);
      std::uint64_t rest = v;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<Element>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_mod_monic(fp, f, g).empty()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// ScalarDomain

struct ScalarDomain::Impl {
  DomainKind kind = DomainKind::Field;
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  std::uint32_t q = 0;
  Polynomial modulus;
  std::vector<Element> exp_table;  // extension fields: generator powers
  std::vector<std::uint32_t> log_table;
  std::vector<Element> inverse;  // 0 marks a non-unit

  Element digit_add(Element a, Element b) const {
    if (p == 2) return a ^ b;
    Element r = 0, scale = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      r += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return r;
  }

  Element digit_neg(Element a) const {
    if (p == 2) return a;
    Element r = 0, scale = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      r += ((p - a % p) % p) * scale;
      a /= p;
      scale *= p;
    }
    return r;
  }

  // Schoolbook product reduced by the modulus; used to seed the log tables.
  Element poly_mul_mod(Element a, Element b) const {
    std::vector<std::uint32_t> x(m), y(m), prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      x[i] = a % p;
      a /= p;
      y[i] = b % p;
      b /= p;
    }
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    for (std::size_t i = 2 * m - 1; i >= m; --i) {
      const std::uint32_t c = prod[i];
      if (c == 0) continue;
      for (std::uint32_t j = 0; j <= m; ++j)
        prod[i - m + j] = (prod[i - m + j] + (p - c) * modulus[j]) % p;
    }
    Element r = 0, scale = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      r += prod[i] * scale;
      scale *= p;
    }
    return r;
  }

  void build_tables() {
    inverse.assign(q, 0);
    if (kind == DomainKind::Ring || m == 1) {
      for (Element x = 1; x < q; ++x) inverse[x] = mod_inverse(x, q);
      return;
    }
    const std::uint32_t group = q - 1;
    for (Element g = 2; g < q; ++g) {
      std::vector<Element> powers;
      powers.reserve(group);
      Element cur = 1;
      do {
        powers.push_back(cur);
        cur = poly_mul_mod(cur, g);
      } while (cur != 1 && powers.size() <= group);
      if (powers.size() == group) {
        exp_table = std::move(powers);
        break;
      }
    }
    if (q == 2 || exp_table.empty()) exp_table = {1};
    log_table.assign(q, 0);
    for (std::uint32_t i = 0; i < exp_table.size(); ++i) log_table[exp_table[i]] = i;
    for (Element x = 1; x < q; ++x) inverse[x] = exp_table[(group - log_table[x]) % group];
  }
};

ScalarDomain ScalarDomain::prime_field(std::uint32_t p) {
  if (!is_prime(p) || p > kMaxOrder)
    throw Error(ErrorCode::InvalidDomain, "GF(" + std::to_string(p) + ") needs a prime order <= 1024");
  auto impl = std::make_shared<Impl>();
  impl->kind = DomainKind::Field;
  impl->p = p;
  impl->q = p;
  impl->build_tables();
  return ScalarDomain(std::move(impl));
}

ScalarDomain ScalarDomain::extension_field(std::uint32_t p, std::uint32_t m) {
  if (m == 1) return prime_field(p);
  auto modulus = builtin_modulus(p, m);
  if (!modulus)
    throw Error(ErrorCode::InvalidDomain, "no built-in modulus for GF(" + std::to_string(p) + "^" +
                                              std::to_string(m) + ")");
  return extension_field(p, std::move(*modulus));
}

ScalarDomain ScalarDomain::extension_field(std::uint32_t p, Polynomial modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidDomain, "characteristic must be prime");
  modulus = poly_trim(std::move(modulus));
  if (modulus.size() < 2) throw Error(ErrorCode::InvalidDomain, "modulus must have degree >= 1");
  const auto m = static_cast<std::uint32_t>(modulus.size() - 1);
  if (m == 1) return prime_field(p);
  if (ipow(p, m) > kMaxOrder) throw Error(ErrorCode::InvalidDomain, "field order exceeds 1024");
  if (modulus.back() != 1) throw Error(ErrorCode::InvalidDomain, "modulus must be monic");
  for (Element c : modulus) {
    if (c >= p) throw Error(ErrorCode::InvalidDomain, "modulus coefficient out of range");
  }
  if (!is_irreducible(p, modulus)) throw Error(ErrorCode::InvalidDomain, "modulus is reducible");
  auto impl = std::make_shared<Impl>();
  impl->kind = DomainKind::Field;
  impl->p = p;
  impl->m = m;
  impl->q = static_cast<std::uint32_t>(ipow(p, m));
  impl->modulus = std::move(modulus);
  impl->build_tables();
  return ScalarDomain(std::move(impl));
}

ScalarDomain ScalarDomain::ring(std::uint32_t q) {
  if (q < 2 || q > kMaxOrder)
    throw Error(ErrorCode::InvalidDomain, "ring modulus must lie in [2, 1024]");
  auto impl = std::make_shared<Impl>();
  impl->kind = DomainKind::Ring;
  impl->p = q;
  impl->q = q;
  impl->build_tables();
  return ScalarDomain(std::move(impl));
}

ScalarDomain ScalarDomain::of_order(std::uint32_t q) {
  if (q < 2 || q > kMaxOrder)
    throw Error(ErrorCode::InvalidDomain, "order must lie in [2, 1024]");
  if (auto pm = prime_power(q)) return extension_field(pm->first, pm->second);
  return ring(q);
}

DomainKind ScalarDomain::kind() const noexcept { return impl_->kind; }
std::uint32_t ScalarDomain::characteristic() const noexcept { return impl_->p; }
std::uint32_t ScalarDomain::degree() const noexcept { return impl_->m; }
std::uint32_t ScalarDomain::order() const noexcept { return impl_->q; }
const Polynomial& ScalarDomain::modulus() const noexcept { return impl_->modulus; }

std::string ScalarDomain::name() const {
  std::ostringstream os;
  if (kind() == DomainKind::Ring) {
    os << "Z/" << order();
  } else if (degree() == 1) {
    os << "GF(" << order() << ")";
  } else {
    os << "GF(" << characteristic() << "^" << degree() << ")";
  }
  return os.str();
}

bool ScalarDomain::is_unit(Element x) const noexcept {
  if (x == 0 || x >= impl_->q) return false;
  if (impl_->kind == DomainKind::Field) return true;
  return gcd32(x, impl_->q) == 1;
}

Element ScalarDomain::add(Element a, Element b) const noexcept {
  const Impl& d = *impl_;
  if (d.m == 1) {
    const Element s = a + b;
    return s >= d.q ? s - d.q : s;
  }
  return d.digit_add(a, b);
}

Element ScalarDomain::neg(Element a) const noexcept {
  const Impl& d = *impl_;
  if (d.m == 1) return a == 0 ? 0 : d.q - a;
  return d.digit_neg(a);
}

Element ScalarDomain::sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

Element ScalarDomain::mul(Element a, Element b) const noexcept {
  const Impl& d = *impl_;
  if (d.m == 1) return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % d.q);
  if (a == 0 || b == 0) return 0;
  const std::uint32_t group = d.q - 1;
  return d.exp_table[(d.log_table[a] + d.log_table[b]) % group];
}

Element ScalarDomain::inv(Element x) const {
  if (x >= impl_->q || impl_->inverse[x] == 0) {
    throw Error(ErrorCode::NotAUnit,
                "element " + std::to_string(x) + " has no inverse in " + name());
  }
  return impl_->inverse[x];
}

Element ScalarDomain::pow(Element x, std::uint64_t e) const noexcept {
  Element result = 1;
  Element base = x;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Element ScalarDomain::from_integer(std::int64_t v) const noexcept {
  const std::int64_t mod = impl_->kind == DomainKind::Ring ? impl_->q : impl_->p;
  return static_cast<Element>(((v % mod) + mod) % mod);
}

Element ScalarDomain::from_code(std::int64_t v) const {
  if (v < 0) return neg(from_integer(-v));
  if (v >= static_cast<std::int64_t>(impl_->q)) {
    throw Error(ErrorCode::InvalidArgument,
                "value " + std::to_string(v) + " is not an element of " + name());
  }
  return static_cast<Element>(v);
}

bool operator==(const ScalarDomain& a, const ScalarDomain& b) noexcept {
  if (a.impl_ == b.impl_) return true;
  return a.kind() == b.kind() && a.order() == b.order() && a.modulus() == b.modulus();
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(ScalarDomain domain, std::size_t rows, std::size_t cols)
    : domain_(std::move(domain)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix Matrix::from_rows(ScalarDomain domain, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix out(std::move(domain), r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) out.entries_[i * c + j] = out.domain_.from_code(rows[i][j]);
  }
  return out;
}

Matrix Matrix::identity(ScalarDomain domain, std::size_t n) {
  Matrix out(std::move(domain), n, n);
  for (std::size_t i = 0; i < n; ++i) out.entries_[i * n + i] = 1;
  return out;
}

void Matrix::set(std::size_t r, std::size_t c, Element v) {
  if (!domain_.contains(v))
    throw Error(ErrorCode::InvalidArgument, "non-canonical element " + std::to_string(v));
  entries_[r * cols_ + c] = v;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(domain_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.entries_[i * cols.size() + j] = at(i, cols[j]);
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(domain_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    std::copy_n(entries_.begin() + static_cast<std::ptrdiff_t>(rows[i] * cols_), cols_,
                out.entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(domain_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.entries_[j * rows_ + i] = at(i, j);
  return out;
}

std::vector<std::vector<Element>> Matrix::to_rows() const {
  std::vector<std::vector<Element>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.domain_ == b.domain_ &&
         a.entries_ == b.entries_;
}

namespace {

void require_same_domain(const Matrix& a, const Matrix& b) {
  if (!(a.domain() == b.domain()))
    throw Error(ErrorCode::DomainMismatch, a.domain().name() + " vs " + b.domain().name());
}

using Rows = std::vector<std::vector<Element>>;

// Reduces rows in place to row echelon form over a field; returns the pivot
// column of each pivot row. Only the first `pivot_cols` columns are pivoted.
std::vector<std::size_t> echelon(const ScalarDomain& d, Rows& rows, std::size_t pivot_cols,
                                 bool reduced) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Element scale = d.inv(rows[r][c]);
    for (auto& v : rows[r]) v = d.mul(v, scale);
    for (std::size_t i = reduced ? 0 : r + 1; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Element f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j)
        rows[i][j] = d.sub(rows[i][j], d.mul(f, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Element cofactor_det(const ScalarDomain& d, const Rows& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return d.sub(d.mul(m[0][0], m[1][1]), d.mul(m[0][1], m[1][0]));
  Element total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Rows minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) minor[i - 1].push_back(m[i][j]);
    const Element term = d.mul(m[0][c], cofactor_det(d, minor));
    total = (c % 2 == 0) ? d.add(total, term) : d.sub(total, term);
  }
  return total;
}

}  // namespace

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_same_domain(a, b);
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "multiply shape mismatch");
  const ScalarDomain& d = a.domain();
  Matrix out(d, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Element acc = 0;
      for (std::size_t t = 0; t < a.cols(); ++t) acc = d.add(acc, d.mul(a.at(i, t), b.at(t, j)));
      out.set(i, j, acc);
    }
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_domain(a, b);
  const ScalarDomain& d = a.domain();
  Matrix out(d, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          out.set(i * b.rows() + r, j * b.cols() + c, d.mul(a.at(i, j), b.at(r, c)));
  return out;
}

Matrix hconcat(const Matrix& left, const Matrix& right) {
  require_same_domain(left, right);
  if (left.rows() != right.rows()) throw Error(ErrorCode::DimensionMismatch, "hconcat row mismatch");
  Matrix out(left.domain(), left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) out.set(i, j, left.at(i, j));
    for (std::size_t j = 0; j < right.cols(); ++j) out.set(i, left.cols() + j, right.at(i, j));
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  if (!m.domain().is_field())
    throw Error(ErrorCode::RingNotSupported, "rank is undefined over " + m.domain().name());
  Rows rows = m.to_rows();
  return echelon(m.domain(), rows, m.cols(), false).size();
}

Element bareiss_determinant(const Matrix& m) {
  using boost::multiprecision::cpp_int;
  if (m.rows() != m.cols()) throw Error(ErrorCode::NonSquare, "determinant of non-square matrix");
  const ScalarDomain& d = m.domain();
  if (d.is_field() && d.degree() > 1)
    throw Error(ErrorCode::InvalidArgument, "integer elimination needs a prime field or ring");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  cpp_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  cpp_int det = a[n - 1][n - 1] * sign;
  const cpp_int mod = d.kind() == DomainKind::Ring ? d.order() : d.characteristic();
  cpp_int r = det % mod;
  if (r < 0) r += mod;
  return static_cast<Element>(r.convert_to<std::uint32_t>());
}

Determinant det_is_unit(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NonSquare, "determinant of non-square matrix");
  const ScalarDomain& d = m.domain();
  Element det = 0;
  if (m.rows() <= 4) {
    det = cofactor_det(d, m.to_rows());
  } else if (d.is_field()) {
    Rows rows = m.to_rows();
    // Track the determinant through row swaps and pivot scaling.
    det = 1;
    const std::size_t n = rows.size();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t pivot = c;
      while (pivot < n && rows[pivot][c] == 0) ++pivot;
      if (pivot == n) {
        det = 0;
        break;
      }
      if (pivot != c) {
        std::swap(rows[c], rows[pivot]);
        det = d.neg(det);
      }
      det = d.mul(det, rows[c][c]);
      const Element inv = d.inv(rows[c][c]);
      for (std::size_t i = c + 1; i < n; ++i) {
        if (rows[i][c] == 0) continue;
        const Element f = d.mul(rows[i][c], inv);
        for (std::size_t j = c; j < n; ++j) rows[i][j] = d.sub(rows[i][j], d.mul(f, rows[c][j]));
      }
    }
  } else {
    det = bareiss_determinant(m);
  }
  return {det, d.is_unit(det)};
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require_same_domain(a, b);
  if (!a.domain().is_field())
    throw Error(ErrorCode::RingNotSupported, "solve is defined over fields only");
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "solve row mismatch");
  const ScalarDomain& d = a.domain();
  Rows aug(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    aug[i].assign(a.row(i).begin(), a.row(i).end());
    aug[i].insert(aug[i].end(), b.row(i).begin(), b.row(i).end());
  }
  const auto pivots = echelon(d, aug, a.cols(), true);
  for (std::size_t i = pivots.size(); i < aug.size(); ++i) {
    for (std::size_t j = a.cols(); j < aug[i].size(); ++j)
      if (aug[i][j] != 0) return std::nullopt;
  }
  Matrix x(d, a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(pivots[r], j, aug[r][a.cols() + j]);
  return x;
}

// ---------------------------------------------------------------------------
// Polynomials

Polynomial poly_trim(Polynomial p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Polynomial poly_mul(const ScalarDomain& d, const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = d.add(out[i + j], d.mul(a[i], b[j]));
  return poly_trim(std::move(out));
}

Polynomial poly_mod_monic(const ScalarDomain& d, Polynomial a, const Polynomial& divisor) {
  const Polynomial g = poly_trim(divisor);
  if (g.empty() || g.back() != 1) throw Error(ErrorCode::NotMonic, "divisor must be monic");
  a = poly_trim(std::move(a));
  const std::size_t dg = g.size() - 1;
  while (a.size() > dg) {
    const std::size_t shift = a.size() - 1 - dg;
    const Element lead = a.back();
    for (std::size_t j = 0; j <= dg; ++j) a[shift + j] = d.sub(a[shift + j], d.mul(lead, g[j]));
    a = poly_trim(std::move(a));
  }
  return a;
}

bool divides_xn_minus_one(const ScalarDomain& d, const Polynomial& g, std::size_t n) {
  Polynomial xn(n + 1, 0);
  xn[0] = d.neg(1);
  xn[n] = d.add(xn[n], 1);
  return poly_mod_monic(d, std::move(xn), g).empty();
}

}  // namespace codedcache::gf
