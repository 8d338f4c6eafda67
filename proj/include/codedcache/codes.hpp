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

/**
 * @file codes.hpp
 * @brief Generator-matrix families and the consecutive column property.
 *
 * A k x n generator matrix G has the (k, alpha) consecutive column property
 * when every cyclic window S_a = {a*alpha, ..., a*alpha + alpha - 1} (mod n),
 * a = 0 .. z*n/alpha - 1, is "good": for alpha = k + 1 every k x k submatrix
 * of G_{S_a} is invertible, for alpha <= k the alpha columns of G_{S_a} are
 * linearly independent. z is the least positive integer with alpha | n*z.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codedcache/gf.hpp"

namespace codedcache::codes {

using gf::Element;
using gf::Matrix;
using gf::Polynomial;
using gf::ScalarDomain;

enum class Construction {
  Mds,
  Cyclic,
  Spc,
  KronIdentity,
  Claim5,
  Claim6,
  Extended,
  Claim9,
  CrtCyclic,
  UserSupplied,
};

std::string_view to_string(Construction c) noexcept;
std::optional<Construction> construction_from_string(std::string_view s) noexcept;

/// How a matrix was built. Extended and KronIdentity keep the base recipe.
struct Provenance {
  Construction kind = Construction::UserSupplied;
  std::map<std::string, std::int64_t> params;
  Polynomial gen_poly;  // Cyclic only
  std::shared_ptr<const Provenance> base;

  /// Innermost provenance following the base chain.
  const Provenance& root() const noexcept;
  std::string describe() const;
};

bool operator==(const Provenance& a, const Provenance& b) noexcept;

class GeneratorMatrix {
 public:
  /// Validates 1 <= k < n and the column condition: no zero column over a
  /// field, every column generating the unit ideal over a ring.
  explicit GeneratorMatrix(Matrix mat, Provenance provenance = {});

  const Matrix& matrix() const noexcept { return mat_; }
  std::size_t k() const noexcept { return mat_.rows(); }
  std::size_t n() const noexcept { return mat_.cols(); }
  const ScalarDomain& domain() const noexcept { return mat_.domain(); }
  const Provenance& provenance() const noexcept { return provenance_; }

 private:
  Matrix mat_;
  Provenance provenance_;
};

/// Least z >= 1 with alpha | n*z.
std::size_t least_z(std::size_t n, std::size_t alpha);
/// Number of windows z*n/alpha.
std::size_t window_count(std::size_t n, std::size_t alpha);
/// Column indices of window a.
std::vector<std::size_t> window(std::size_t n, std::size_t alpha, std::size_t a);

struct WindowVerdict {
  std::size_t a = 0;
  std::vector<std::size_t> columns;
  bool satisfied = false;
  /// alpha = k + 1: window positions whose deletion leaves a singular matrix.
  std::vector<std::size_t> failed_deletions;
  /// Ring with alpha <= k: the row subset whose minor is a unit.
  std::vector<std::size_t> unit_rows;
};

struct CcpCertificate {
  std::size_t alpha = 0;
  std::size_t z = 0;
  std::vector<WindowVerdict> windows;
  bool satisfied = false;
  /// Produced by the single-window cyclic test rather than all windows.
  bool shortcut = false;
};

/// Full window-by-window check. Throws InvalidAlpha unless 1 <= alpha <= k+1.
CcpCertificate check_ccp(const GeneratorMatrix& g, std::size_t alpha);

/// The condition matrices for one cyclic window starting at
/// n - floor(k/2) - 1, indexed by the deleted window position j (0 < j < k).
std::vector<std::pair<std::size_t, Matrix>> cyclic_condition_matrices(
    const ScalarDomain& domain, const Polynomial& gen_poly, std::size_t n);

/// (k, k+1) test for a cyclic code using only its condition matrices.
/// Throws NotCyclic unless the provenance is Cyclic.
CcpCertificate check_ccp_cyclic_shortcut(const GeneratorMatrix& g);

/// Vandermonde rows x^i on the points 0, 1, ..., n-1. Needs q >= n.
GeneratorMatrix build_mds(std::size_t n, std::size_t k, const ScalarDomain& domain);

/// Banded matrix with row r holding g shifted right by r.
GeneratorMatrix build_cyclic(std::size_t n, const Polynomial& gen_poly,
                             const ScalarDomain& domain);

struct CyclicSearch {
  std::vector<Polynomial> generators;
  std::uint64_t examined = 0;
  bool inconclusive = false;  // stopped at the candidate limit
};

/// Monic degree n-k divisors of X^n - 1 with nonzero constant term, in
/// lexicographic order of (g_0, ..., g_{n-k-1}). At most `limit` candidates
/// are examined. When `accept` is given the search stops at (and returns
/// only) the first divisor it accepts.
CyclicSearch search_cyclic_generators(std::size_t n, std::size_t k, const ScalarDomain& domain,
                                      std::uint64_t limit = 1'000'000,
                                      const std::function<bool(const Polynomial&)>& accept = {});

/// [I_k | 1_k].
GeneratorMatrix build_spc(std::size_t k, const ScalarDomain& domain);

/// A (x) I_t, for A with the (z, z) property.
GeneratorMatrix kron_identity(const GeneratorMatrix& base, std::size_t t);

/// a x b matrix whose first row is [c1 c2 0 ... 0], each row the right
/// shift of the row above.
Matrix shift_block(const ScalarDomain& d, Element c1, Element c2, std::size_t rows,
                   std::size_t cols);

/// Block matrix with k + 1 = t*z, n = t*alpha over a z x alpha Vandermonde
/// matrix on the points 1..alpha. Needs q > alpha and gcd(alpha, z) = 1.
GeneratorMatrix build_claim5(std::size_t t, std::size_t z, std::size_t alpha,
                             const ScalarDomain& domain);

/// Block matrix with k = z*t - 1, n = (z+1)*t, b_i = i, c = (1, -1).
/// Needs q >= z.
GeneratorMatrix build_claim6(std::size_t t, std::size_t z, const ScalarDomain& domain);

/// The z = 2 member of the family above, valid over any Z mod q.
GeneratorMatrix build_claim9(std::size_t t, const ScalarDomain& domain);

/// Prepends s copies of the first k + 1 columns.
GeneratorMatrix extend_ccp(const GeneratorMatrix& g, std::size_t s);
/// Prepends s copies of the first alpha columns.
GeneratorMatrix extend_ccp_alpha(const GeneratorMatrix& g, std::size_t s, std::size_t alpha);

struct CrtComponent {
  Polynomial gen_poly;
  ScalarDomain domain;  // GF(q_i), q_i prime
};

/// Cyclic code over Z mod (q_1 ... q_d) assembled from component cyclic codes
/// by the Chinese remainder map. Codeword j splits into component message
/// indices with component 0 most significant.
class CodewordSource {
 public:
  std::size_t n() const noexcept { return n_; }
  std::size_t k_min() const noexcept { return k_min_; }
  const ScalarDomain& domain() const noexcept { return domain_; }
  const std::vector<CrtComponent>& components() const noexcept { return components_; }
  const std::vector<GeneratorMatrix>& component_codes() const noexcept { return codes_; }
  std::uint64_t num_codewords() const noexcept { return num_codewords_; }
  std::vector<Element> codeword(std::uint64_t index) const;

 private:
  friend CodewordSource build_crt_cyclic(const std::vector<CrtComponent>&, std::size_t);
  CodewordSource(ScalarDomain domain) : domain_(std::move(domain)) {}
  ScalarDomain domain_;
  std::size_t n_ = 0;
  std::size_t k_min_ = 0;
  std::uint64_t num_codewords_ = 0;
  std::vector<CrtComponent> components_;
  std::vector<GeneratorMatrix> codes_;
};

CodewordSource build_crt_cyclic(const std::vector<CrtComponent>& components, std::size_t n);

/// Rebuilds a matrix from its provenance alone (used to replay stored
/// certificates and search routes).
GeneratorMatrix replay(const Provenance& provenance, const ScalarDomain& domain);

}  // namespace codedcache::codes
