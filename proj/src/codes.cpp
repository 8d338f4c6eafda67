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

#include "codedcache/codes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "codedcache/error.hpp"
#include "codedcache/parallel.hpp"

namespace codedcache::codes {

namespace {

constexpr std::pair<Construction, std::string_view> kConstructionNames[] = {
    {Construction::Mds, "Mds"},
    {Construction::Cyclic, "Cyclic"},
    {Construction::Spc, "Spc"},
    {Construction::KronIdentity, "KronIdentity"},
    {Construction::Claim5, "Claim5"},
    {Construction::Claim6, "Claim6"},
    {Construction::Extended, "Extended"},
    {Construction::Claim9, "Claim9"},
    {Construction::CrtCyclic, "CrtCyclic"},
    {Construction::UserSupplied, "UserSupplied"},
};

Provenance make_provenance(Construction kind, std::map<std::string, std::int64_t> params) {
  Provenance p;
  p.kind = kind;
  p.params = std::move(params);
  return p;
}

void require_field(const ScalarDomain& d, const char* what) {
  if (!d.is_field())
    throw Error(ErrorCode::RingNotSupported, std::string(what) + " needs a field, got " + d.name());
}

// Every size-r subset of {0..n-1} in lexicographic order.
template <class Fn>
bool for_each_subset(std::size_t n, std::size_t r, Fn&& fn) {
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool square_invertible(const Matrix& m) {
  if (m.domain().is_field()) return gf::rank(m) == m.rows();
  return gf::det_is_unit(m).unit;
}

WindowVerdict check_window(const GeneratorMatrix& g, std::size_t alpha, std::size_t a) {
  WindowVerdict v;
  v.a = a;
  v.columns = window(g.n(), alpha, a);
  const Matrix sub = g.matrix().select_columns(v.columns);
  const std::size_t k = g.k();
  if (alpha == k + 1) {
    for (std::size_t j = 0; j <= k; ++j) {
      std::vector<std::size_t> keep;
      for (std::size_t c = 0; c <= k; ++c)
        if (c != j) keep.push_back(c);
      if (!square_invertible(sub.select_columns(keep))) v.failed_deletions.push_back(j);
    }
    v.satisfied = v.failed_deletions.empty();
  } else if (g.domain().is_field()) {
    v.satisfied = gf::rank(sub) == alpha;
  } else {
    v.satisfied = for_each_subset(k, alpha, [&](const std::vector<std::size_t>& rows) {
      if (!gf::det_is_unit(sub.select_rows(rows)).unit) return false;
      v.unit_rows = rows;
      return true;
    });
  }
  return v;
}

// Coefficient g_i, zero outside the support.
Element coeff(const Polynomial& g, std::int64_t i) {
  if (i < 0 || i >= static_cast<std::int64_t>(g.size())) return 0;
  return g[static_cast<std::size_t>(i)];
}

Polynomial validated_generator(std::size_t n, Polynomial gen_poly, const ScalarDomain& d) {
  gen_poly = gf::poly_trim(std::move(gen_poly));
  for (Element c : gen_poly)
    if (!d.contains(c)) throw Error(ErrorCode::InvalidArgument, "coefficient outside " + d.name());
  if (gen_poly.empty() || gen_poly.back() != 1)
    throw Error(ErrorCode::NotMonic, "generator polynomial must be monic");
  if (gen_poly.front() == 0)
    throw Error(ErrorCode::ZeroConstantTerm, "generator polynomial needs g_0 != 0");
  const std::size_t deg = gen_poly.size() - 1;
  if (deg < 1 || deg >= n)
    throw Error(ErrorCode::InvalidArgument,
                "generator degree " + std::to_string(deg) + " must lie in [1, n)");
  if (!gf::divides_xn_minus_one(d, gen_poly, n))
    throw Error(ErrorCode::NotADivisor, "g(X) does not divide X^" + std::to_string(n) + " - 1");
  return gen_poly;
}

// Shared layout for the z x t block family with identity blocks, a column of
// ones and b_i I_t / C(c1, c2) tail blocks.
Matrix claim6_layout(std::size_t t, std::size_t z, const ScalarDomain& d) {
  if (t < 1 || z < 1 || z * t < 2)
    throw Error(ErrorCode::ShapeMismatch, "need t >= 1, z >= 1 and k = z*t - 1 >= 1");
  const std::size_t k = z * t - 1;
  const std::size_t n = (z + 1) * t;
  Matrix m(d, k, n);
  const std::size_t ones_col = (z - 1) * t + (t - 1);
  const std::size_t tail = ones_col + 1;
  for (std::size_t i = 0; i + 1 < z; ++i) {
    const auto b = static_cast<Element>(i + 1);
    for (std::size_t r = 0; r < t; ++r) {
      m.set(i * t + r, i * t + r, 1);
      m.set(i * t + r, ones_col, 1);
      m.set(i * t + r, tail + r, b);
    }
  }
  const std::size_t last = (z - 1) * t;
  const Matrix c = shift_block(d, 1, d.neg(1), t - 1, t);
  for (std::size_t r = 0; r + 1 < t; ++r) {
    m.set(last + r, (z - 1) * t + r, 1);
    m.set(last + r, ones_col, 1);
    for (std::size_t j = 0; j < t; ++j) m.set(last + r, tail + j, c.at(r, j));
  }
  return m;
}

// Remainder X^n mod g for monic g of degree d >= 1, as d coefficients.
bool xn_is_one_mod(const ScalarDomain& dom, const Polynomial& g, std::size_t n,
                   std::vector<Element>& r) {
  const std::size_t deg = g.size() - 1;
  r.assign(deg, 0);
  r[0] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    const Element top = r[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) r[i] = dom.sub(r[i - 1], dom.mul(top, g[i]));
    r[0] = dom.neg(dom.mul(top, g[0]));
  }
  if (r[0] != 1) return false;
  return std::all_of(r.begin() + 1, r.end(), [](Element e) { return e == 0; });
}

}  // namespace

std::string_view to_string(Construction c) noexcept {
  for (const auto& [kind, name] : kConstructionNames)
    if (kind == c) return name;
  return "UserSupplied";
}

std::optional<Construction> construction_from_string(std::string_view s) noexcept {
  for (const auto& [kind, name] : kConstructionNames)
    if (name == s) return kind;
  return std::nullopt;
}

const Provenance& Provenance::root() const noexcept {
  const Provenance* p = this;
  while (p->base) p = p->base.get();
  return *p;
}

std::string Provenance::describe() const {
  std::ostringstream os;
  os << to_string(kind);
  if (!params.empty() || !gen_poly.empty()) {
    os << "(";
    bool first = true;
    for (const auto& [key, value] : params) {
      os << (first ? "" : ", ") << key << "=" << value;
      first = false;
    }
    if (!gen_poly.empty()) {
      os << (first ? "" : ", ") << "g=";
      for (std::size_t i = 0; i < gen_poly.size(); ++i) os << (i ? "," : "") << gen_poly[i];
    }
    os << ")";
  }
  if (base) os << " of " << base->describe();
  return os.str();
}

bool operator==(const Provenance& a, const Provenance& b) noexcept {
  if (a.kind != b.kind || a.params != b.params || a.gen_poly != b.gen_poly) return false;
  if (!a.base || !b.base) return !a.base && !b.base;
  return *a.base == *b.base;
}

GeneratorMatrix::GeneratorMatrix(Matrix mat, Provenance provenance)
    : mat_(std::move(mat)), provenance_(std::move(provenance)) {
  const std::size_t k = mat_.rows(), n = mat_.cols();
  if (k < 1 || k >= n)
    throw Error(ErrorCode::InvalidArgument,
                "generator matrix needs 1 <= k < n, got k=" + std::to_string(k) +
                    " n=" + std::to_string(n));
  const ScalarDomain& d = mat_.domain();
  for (std::size_t c = 0; c < n; ++c) {
    std::uint32_t g = d.is_field() ? 0 : d.order();
    bool nonzero = false;
    for (std::size_t r = 0; r < k; ++r) {
      nonzero = nonzero || mat_.at(r, c) != 0;
      g = std::gcd(g, mat_.at(r, c));
    }
    if (d.is_field() && !nonzero)
      throw Error(ErrorCode::InvalidArgument, "column " + std::to_string(c) + " is all zero");
    if (!d.is_field() && g != 1)
      throw Error(ErrorCode::RingConditionViolated,
                  "column " + std::to_string(c) + " entries share a factor with " +
                      std::to_string(d.order()));
  }
}

std::size_t least_z(std::size_t n, std::size_t alpha) {
  if (alpha == 0 || n == 0) throw Error(ErrorCode::InvalidAlpha, "alpha and n must be positive");
  return alpha / std::gcd(n, alpha);
}

std::size_t window_count(std::size_t n, std::size_t alpha) { return least_z(n, alpha) * n / alpha; }

std::vector<std::size_t> window(std::size_t n, std::size_t alpha, std::size_t a) {
  std::vector<std::size_t> cols(alpha);
  for (std::size_t i = 0; i < alpha; ++i) cols[i] = (a * alpha + i) % n;
  return cols;
}

CcpCertificate check_ccp(const GeneratorMatrix& g, std::size_t alpha) {
  if (alpha < 1 || alpha > g.k() + 1)
    throw Error(ErrorCode::InvalidAlpha, "alpha=" + std::to_string(alpha) + " outside [1, " +
                                             std::to_string(g.k() + 1) + "]");
  CcpCertificate cert;
  cert.alpha = alpha;
  cert.z = least_z(g.n(), alpha);
  cert.windows.resize(window_count(g.n(), alpha));
  parallel_for(cert.windows.size(),
               [&](std::size_t a) { cert.windows[a] = check_window(g, alpha, a); });
  cert.satisfied = std::all_of(cert.windows.begin(), cert.windows.end(),
                               [](const WindowVerdict& w) { return w.satisfied; });
  return cert;
}

std::vector<std::pair<std::size_t, Matrix>> cyclic_condition_matrices(const ScalarDomain& domain,
                                                                      const Polynomial& gen_poly,
                                                                      std::size_t n) {
  const std::size_t deg = gen_poly.size() - 1;
  const std::size_t k = n - deg;
  const auto r_deg = static_cast<std::int64_t>(deg);
  std::vector<std::pair<std::size_t, Matrix>> out;
  for (std::size_t j = 1; j < k; ++j) {
    if (j <= k / 2) {
      Matrix c(domain, j, j);
      for (std::size_t r = 0; r < j; ++r)
        for (std::size_t col = 0; col < j; ++col)
          c.set(r, col,
                coeff(gen_poly, r_deg - 1 - static_cast<std::int64_t>(r) +
                                    static_cast<std::int64_t>(col)));
      out.emplace_back(j, std::move(c));
    } else {
      const std::size_t size = k - j;
      Matrix c(domain, size, size);
      for (std::size_t r = 0; r < size; ++r)
        for (std::size_t col = 0; col < size; ++col)
          c.set(r, col,
                coeff(gen_poly, 1 - static_cast<std::int64_t>(r) + static_cast<std::int64_t>(col)));
      out.emplace_back(j, std::move(c));
    }
  }
  return out;
}

CcpCertificate check_ccp_cyclic_shortcut(const GeneratorMatrix& g) {
  const Provenance& p = g.provenance();
  if (p.kind != Construction::Cyclic || p.gen_poly.empty())
    throw Error(ErrorCode::NotCyclic, "provenance is " + std::string(to_string(p.kind)));
  const std::size_t n = g.n(), k = g.k();
  CcpCertificate cert;
  cert.alpha = k + 1;
  cert.z = least_z(n, k + 1);
  cert.shortcut = true;
  WindowVerdict v;
  const std::size_t start = n - k / 2 - 1;
  v.a = start;
  for (std::size_t i = 0; i <= k; ++i) v.columns.push_back((start + i) % n);
  const ScalarDomain& d = g.domain();
  // Over a ring the triangular factors are units only when g_0 is.
  if (!d.is_unit(p.gen_poly.front())) {
    for (std::size_t j = 0; j <= k; ++j) v.failed_deletions.push_back(j);
  } else {
    for (const auto& [j, c] : cyclic_condition_matrices(d, p.gen_poly, n))
      if (!square_invertible(c)) v.failed_deletions.push_back(j);
  }
  v.satisfied = v.failed_deletions.empty();
  cert.satisfied = v.satisfied;
  cert.windows.push_back(std::move(v));
  return cert;
}

GeneratorMatrix build_mds(std::size_t n, std::size_t k, const ScalarDomain& domain) {
  require_field(domain, "MDS construction");
  if (domain.order() < n)
    throw Error(ErrorCode::FieldTooSmall, "Vandermonde MDS code needs q >= n, got q=" +
                                              std::to_string(domain.order()) +
                                              " n=" + std::to_string(n));
  if (k < 1 || k >= n) throw Error(ErrorCode::InvalidArgument, "need 1 <= k < n");
  Matrix m(domain, k, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < k; ++r) m.set(r, c, domain.pow(static_cast<Element>(c), r));
  return GeneratorMatrix(std::move(m), make_provenance(Construction::Mds,
                                                       {{"n", static_cast<std::int64_t>(n)},
                                                        {"k", static_cast<std::int64_t>(k)}}));
}

GeneratorMatrix build_cyclic(std::size_t n, const Polynomial& gen_poly, const ScalarDomain& domain) {
  const Polynomial g = validated_generator(n, gen_poly, domain);
  const std::size_t k = n - (g.size() - 1);
  Matrix m(domain, k, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t i = 0; i < g.size(); ++i) m.set(r, r + i, g[i]);
  Provenance p = make_provenance(Construction::Cyclic, {{"n", static_cast<std::int64_t>(n)}});
  p.gen_poly = g;
  return GeneratorMatrix(std::move(m), std::move(p));
}

CyclicSearch search_cyclic_generators(std::size_t n, std::size_t k, const ScalarDomain& domain,
                                      std::uint64_t limit,
                                      const std::function<bool(const Polynomial&)>& accept) {
  CyclicSearch out;
  if (k < 1 || k >= n) return out;
  const std::size_t deg = n - k;
  const Element q = domain.order();
  // Lower coefficients (g_0, ..., g_{deg-1}), g_0 most significant.
  Polynomial g(deg + 1, 0);
  g[0] = 1;
  g[deg] = 1;
  std::vector<Element> scratch;
  while (true) {
    if (out.examined == limit) {
      out.inconclusive = true;
      return out;
    }
    ++out.examined;
    if (xn_is_one_mod(domain, g, n, scratch)) {
      if (!accept) {
        out.generators.push_back(g);
      } else if (accept(g)) {
        out.generators.push_back(g);
        return out;
      }
    }
    std::size_t pos = deg;
    while (pos > 0) {
      --pos;
      if (++g[pos] < q) break;
      g[pos] = pos == 0 ? 1 : 0;
      if (pos == 0) return out;
    }
  }
}

GeneratorMatrix build_spc(std::size_t k, const ScalarDomain& domain) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "SPC code needs k >= 1");
  Matrix m(domain, k, k + 1);
  for (std::size_t r = 0; r < k; ++r) {
    m.set(r, r, 1);
    m.set(r, k, 1);
  }
  return GeneratorMatrix(std::move(m),
                         make_provenance(Construction::Spc, {{"k", static_cast<std::int64_t>(k)}}));
}

GeneratorMatrix kron_identity(const GeneratorMatrix& base, std::size_t t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "Kronecker factor needs t >= 1");
  if (!check_ccp(base, base.k()).satisfied)
    throw Error(ErrorCode::BaseNotCcp, "base matrix fails the (z, z) property");
  if (t == 1) return base;
  Provenance p = make_provenance(Construction::KronIdentity, {{"t", static_cast<std::int64_t>(t)}});
  p.base = std::make_shared<const Provenance>(base.provenance());
  return GeneratorMatrix(gf::kronecker(base.matrix(), Matrix::identity(base.domain(), t)),
                         std::move(p));
}

Matrix shift_block(const ScalarDomain& d, Element c1, Element c2, std::size_t rows,
                   std::size_t cols) {
  Matrix m(d, rows, cols);
  if (cols == 0) return m;
  for (std::size_t r = 0; r < rows; ++r) {
    m.set(r, r % cols, c1);
    if (cols > 1) m.set(r, (r + 1) % cols, d.add(m.at(r, (r + 1) % cols), c2));
  }
  return m;
}

GeneratorMatrix build_claim5(std::size_t t, std::size_t z, std::size_t alpha,
                             const ScalarDomain& domain) {
  require_field(domain, "Vandermonde block construction");
  if (t < 1 || z < 1 || z > alpha || std::gcd(alpha, z) != 1 || t * z < 2)
    throw Error(ErrorCode::ShapeMismatch, "need t >= 1, 1 <= z <= alpha, gcd(alpha, z) = 1 and "
                                          "t*z >= 2");
  if (domain.order() <= alpha)
    throw Error(ErrorCode::FieldTooSmall, "need q > alpha, got q=" +
                                              std::to_string(domain.order()) +
                                              " alpha=" + std::to_string(alpha));
  const std::size_t k = t * z - 1;
  Matrix m(domain, k, t * alpha);
  for (std::size_t j = 0; j < alpha; ++j) {
    const auto x = static_cast<Element>(j + 1);
    for (std::size_t i = 0; i + 1 < z; ++i) {
      const Element b = domain.pow(x, i);
      for (std::size_t r = 0; r < t; ++r) m.set(i * t + r, j * t + r, b);
    }
    const Element b = domain.pow(x, z - 1);
    const Matrix c = shift_block(domain, b, b, t - 1, t);
    for (std::size_t r = 0; r + 1 < t; ++r)
      for (std::size_t col = 0; col < t; ++col) m.set((z - 1) * t + r, j * t + col, c.at(r, col));
  }
  return GeneratorMatrix(std::move(m),
                         make_provenance(Construction::Claim5,
                                         {{"t", static_cast<std::int64_t>(t)},
                                          {"z", static_cast<std::int64_t>(z)},
                                          {"alpha", static_cast<std::int64_t>(alpha)}}));
}

GeneratorMatrix build_claim6(std::size_t t, std::size_t z, const ScalarDomain& domain) {
  if (!domain.is_field() && z > 2)
    throw Error(ErrorCode::RingNotSupported, "distinct b_i differences need not be units in " +
                                                 domain.name());
  if (domain.order() < z)
    throw Error(ErrorCode::FieldTooSmall, "need q >= z, got q=" + std::to_string(domain.order()) +
                                              " z=" + std::to_string(z));
  return GeneratorMatrix(claim6_layout(t, z, domain),
                         make_provenance(Construction::Claim6,
                                         {{"t", static_cast<std::int64_t>(t)},
                                          {"z", static_cast<std::int64_t>(z)}}));
}

GeneratorMatrix build_claim9(std::size_t t, const ScalarDomain& domain) {
  return GeneratorMatrix(claim6_layout(t, 2, domain),
                         make_provenance(Construction::Claim9, {{"t", static_cast<std::int64_t>(t)}}));
}

GeneratorMatrix extend_ccp_alpha(const GeneratorMatrix& g, std::size_t s, std::size_t alpha) {
  if (!check_ccp(g, alpha).satisfied)
    throw Error(ErrorCode::BaseNotCcp, "base matrix fails the consecutive column property at alpha=" +
                                           std::to_string(alpha));
  if (s == 0) return g;
  std::vector<std::size_t> cols;
  for (std::size_t copy = 0; copy < s; ++copy)
    for (std::size_t c = 0; c < alpha; ++c) cols.push_back(c);
  for (std::size_t c = 0; c < g.n(); ++c) cols.push_back(c);
  Provenance p = make_provenance(Construction::Extended, {{"s", static_cast<std::int64_t>(s)},
                                                          {"alpha", static_cast<std::int64_t>(alpha)}});
  p.base = std::make_shared<const Provenance>(g.provenance());
  return GeneratorMatrix(g.matrix().select_columns(cols), std::move(p));
}

GeneratorMatrix extend_ccp(const GeneratorMatrix& g, std::size_t s) {
  return extend_ccp_alpha(g, s, g.k() + 1);
}

std::vector<Element> CodewordSource::codeword(std::uint64_t index) const {
  if (index >= num_codewords_) throw Error(ErrorCode::InvalidArgument, "codeword index out of range");
  const std::size_t d = codes_.size();
  // Split into component message indices, last component least significant.
  std::vector<std::uint64_t> msg(d);
  for (std::size_t i = d; i-- > 0;) {
    std::uint64_t count = 1;
    for (std::size_t r = 0; r < codes_[i].k(); ++r) count *= components_[i].domain.order();
    msg[i] = index % count;
    index /= count;
  }
  const std::uint32_t q = domain_.order();
  std::vector<Element> word(n_, 0);
  for (std::size_t i = 0; i < d; ++i) {
    const ScalarDomain& fi = components_[i].domain;
    const std::uint32_t qi = fi.order();
    const GeneratorMatrix& gi = codes_[i];
    std::vector<Element> u(gi.k());
    std::uint64_t rest = msg[i];
    for (std::size_t r = gi.k(); r-- > 0;) {
      u[r] = static_cast<Element>(rest % qi);
      rest /= qi;
    }
    // CRT basis element e_i = 1 mod q_i, 0 mod q_j.
    const std::uint32_t mi = q / qi;
    const std::uint64_t e = static_cast<std::uint64_t>(mi) * fi.inv(fi.from_integer(mi)) % q;
    for (std::size_t c = 0; c < n_; ++c) {
      Element ci = 0;
      for (std::size_t r = 0; r < gi.k(); ++r) ci = fi.add(ci, fi.mul(u[r], gi.matrix().at(r, c)));
      word[c] = static_cast<Element>((word[c] + e * ci) % q);
    }
  }
  return word;
}

CodewordSource build_crt_cyclic(const std::vector<CrtComponent>& components, std::size_t n) {
  if (components.empty())
    throw Error(ErrorCode::ModuliNotCoprimePrimes, "at least one component is required");
  std::uint64_t q = 1;
  std::vector<std::uint32_t> seen;
  for (const auto& c : components) {
    if (!c.domain.is_field() || c.domain.degree() != 1)
      throw Error(ErrorCode::ModuliNotCoprimePrimes,
                  "component domain " + c.domain.name() + " is not a prime field");
    const std::uint32_t p = c.domain.order();
    if (std::find(seen.begin(), seen.end(), p) != seen.end())
      throw Error(ErrorCode::ModuliNotCoprimePrimes, "repeated modulus " + std::to_string(p));
    seen.push_back(p);
    q *= p;
  }
  if (q > gf::kMaxOrder) throw Error(ErrorCode::InvalidDomain, "product of moduli exceeds 1024");
  CodewordSource src(ScalarDomain::ring(static_cast<std::uint32_t>(q)));
  src.n_ = n;
  src.components_ = components;
  src.num_codewords_ = 1;
  src.k_min_ = n;
  for (const auto& c : components) {
    try {
      src.codes_.push_back(build_cyclic(n, c.gen_poly, c.domain));
    } catch (const Error& e) {
      throw Error(ErrorCode::ComponentInvalid, "component over " + c.domain.name() + ": " + e.what());
    }
    const GeneratorMatrix& g = src.codes_.back();
    src.k_min_ = std::min(src.k_min_, g.k());
    for (std::size_t r = 0; r < g.k(); ++r) src.num_codewords_ *= c.domain.order();
  }
  return src;
}

GeneratorMatrix replay(const Provenance& p, const ScalarDomain& domain) {
  auto param = [&](const char* key) -> std::size_t {
    auto it = p.params.find(key);
    if (it == p.params.end() || it->second < 0)
      throw Error(ErrorCode::InvalidArgument,
                  "provenance " + std::string(to_string(p.kind)) + " lacks parameter " + key);
    return static_cast<std::size_t>(it->second);
  };
  switch (p.kind) {
    case Construction::Mds:
      return build_mds(param("n"), param("k"), domain);
    case Construction::Cyclic:
      return build_cyclic(param("n"), p.gen_poly, domain);
    case Construction::Spc:
      return build_spc(param("k"), domain);
    case Construction::Claim5:
      return build_claim5(param("t"), param("z"), param("alpha"), domain);
    case Construction::Claim6:
      return build_claim6(param("t"), param("z"), domain);
    case Construction::Claim9:
      return build_claim9(param("t"), domain);
    case Construction::KronIdentity:
    case Construction::Extended: {
      if (!p.base) throw Error(ErrorCode::InvalidArgument, "provenance lacks its base recipe");
      const GeneratorMatrix base = replay(*p.base, domain);
      if (p.kind == Construction::KronIdentity) return kron_identity(base, param("t"));
      return extend_ccp_alpha(base, param("s"), param("alpha"));
    }
    case Construction::CrtCyclic:
    case Construction::UserSupplied:
      break;
  }
  throw Error(ErrorCode::InvalidArgument,
              "provenance " + std::string(to_string(p.kind)) + " cannot be replayed");
}

}  // namespace codedcache::codes
