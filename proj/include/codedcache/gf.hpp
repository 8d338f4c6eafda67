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
 * @file gf.hpp
 * @brief Exact arithmetic over GF(p^m) and Z mod q, plus dense matrices.
 *
 * Elements are plain integers in [0, q). For an extension field GF(p^m) the
 * integer is the base-p digit encoding of the coefficient vector in the
 * polynomial basis, constant coefficient in the least significant digit, so
 * in GF(4) = GF(2)[x]/(x^2+x+1) the element x is 2 and x+1 is 3.
 *
 * A ScalarDomain is immutable and cheap to copy (it shares its tables), so
 * matrices carry their domain by value.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace codedcache::gf {

using Element = std::uint32_t;

/// Polynomial with coefficients in a ScalarDomain, constant term first.
using Polynomial = std::vector<Element>;

enum class DomainKind { Field, Ring };

inline constexpr std::uint32_t kMaxOrder = 1024;

bool is_prime(std::uint64_t v) noexcept;

/// Returns (p, m) with q = p^m, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t q) noexcept;

class ScalarDomain {
 public:
  static ScalarDomain prime_field(std::uint32_t p);
  /// GF(p^m) with the built-in modulus for that order.
  static ScalarDomain extension_field(std::uint32_t p, std::uint32_t m);
  /// GF(p^m) with a caller-chosen modulus (monic, degree m, constant first).
  static ScalarDomain extension_field(std::uint32_t p, Polynomial modulus);
  static ScalarDomain ring(std::uint32_t q);
  /// GF(q) when q is a prime power, Z mod q otherwise.
  static ScalarDomain of_order(std::uint32_t q);

  DomainKind kind() const noexcept;
  bool is_field() const noexcept { return kind() == DomainKind::Field; }
  std::uint32_t characteristic() const noexcept;
  std::uint32_t degree() const noexcept;
  std::uint32_t order() const noexcept;
  /// Defining polynomial; empty unless this is an extension field.
  const Polynomial& modulus() const noexcept;
  std::string name() const;

  bool contains(Element x) const noexcept { return x < order(); }
  bool is_zero(Element x) const noexcept { return x == 0; }
  bool is_unit(Element x) const noexcept;

  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element mul(Element a, Element b) const noexcept;
  /// Throws Error(NotAUnit) when x has no inverse.
  Element inv(Element x) const;
  Element pow(Element x, std::uint64_t e) const noexcept;
  /// Image of an integer under Z -> domain (lands in the prime subfield).
  Element from_integer(std::int64_t v) const noexcept;
  /// Canonical element from a CLI/file integer: values in [0, q) are taken
  /// as element codes, negative values as additive inverses of integers.
  Element from_code(std::int64_t v) const;

  friend bool operator==(const ScalarDomain& a, const ScalarDomain& b) noexcept;

 private:
  struct Impl;
  explicit ScalarDomain(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Built-in irreducible modulus for p^m <= kMaxOrder, m >= 2.
std::optional<Polynomial> builtin_modulus(std::uint32_t p, std::uint32_t m);

/// Irreducibility of a monic polynomial over the prime field GF(p), by trial
/// division against every monic polynomial of degree <= deg/2.
bool is_irreducible(std::uint32_t p, const Polynomial& poly);

class Matrix {
 public:
  Matrix(ScalarDomain domain, std::size_t rows, std::size_t cols);

  static Matrix from_rows(ScalarDomain domain,
                          const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix identity(ScalarDomain domain, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const ScalarDomain& domain() const noexcept { return domain_; }

  Element at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Element v);
  std::span<const Element> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Element> entries() const noexcept { return entries_; }

  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  Matrix transpose() const;
  std::vector<std::vector<Element>> to_rows() const;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept;

 private:
  ScalarDomain domain_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix hconcat(const Matrix& left, const Matrix& right);

/// Rank by Gaussian elimination, pivoting on the first (lowest-index) row
/// holding a nonzero entry. Fields only; rings throw RingNotSupported.
std::size_t rank(const Matrix& m);

struct Determinant {
  Element value;
  bool unit;
};

/// Exact determinant. Cofactor expansion up to 4x4; larger matrices use
/// Gaussian elimination over a field and integer Bareiss elimination over a
/// ring (reduced mod q at the end).
Determinant det_is_unit(const Matrix& m);

/// Integer Bareiss determinant of the canonical representatives, reduced into
/// the domain. Valid for prime fields and rings.
Element bareiss_determinant(const Matrix& m);

/// Some x with a * x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero. Fields only.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Polynomial helpers. All polynomials are trimmed of high zero coefficients.
Polynomial poly_trim(Polynomial p);
Polynomial poly_mul(const ScalarDomain& d, const Polynomial& a, const Polynomial& b);
/// Remainder of a modulo a monic divisor.
Polynomial poly_mod_monic(const ScalarDomain& d, Polynomial a, const Polynomial& divisor);
/// True iff the monic polynomial g divides X^n - 1.
bool divides_xn_minus_one(const ScalarDomain& d, const Polynomial& g, std::size_t n);

}  // namespace codedcache::gf
