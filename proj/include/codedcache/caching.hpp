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
 * @file caching.hpp
 * @brief Placement, delivery and simulation for block-design caching schemes.
 *
 * Users are the blocks of a resolvable design: user u = i*q + l owns block
 * B_{i,l}. Each file is split into one subfile per (point t, superscript s),
 * s < z, stored at index t*z + s. User u caches every subfile whose point lies
 * in its block.
 *
 * Schemes rebuilt from an equation-subfile matrix carry no design; their
 * placement is the explicit cache table.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "codedcache/design.hpp"

namespace codedcache::caching {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct CachingScheme {
  std::size_t num_users = 0;
  std::size_t num_subfiles = 0;  // F_s
  /// cache[u][j] is set when user u stores subfile j of every file.
  std::vector<boost::dynamic_bitset<>> cache;

  /// Present for schemes built by placement().
  std::optional<design::ResolvableDesign> design;
  std::size_t n = 0, k = 0, q = 0, z = 1, alpha = 0;

  bool caches(std::size_t user, std::size_t subfile) const { return cache[user].test(subfile); }
};

/// Placement for the design's users at the given alpha. Throws InvalidAlpha
/// unless 1 <= alpha <= min(k + 1, n).
CachingScheme placement(const design::ResolvableDesign& d, std::size_t alpha);

struct RecoverySetGraph {
  std::size_t n = 0, alpha = 0, z = 0;
  /// Member classes of S_a in window order.
  std::vector<std::vector<std::size_t>> sets;
  /// edges[i] lists (a, label) for class i with a ascending.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges;

  std::size_t label(std::size_t cls, std::size_t set) const;
};

RecoverySetGraph recovery_set_graph(std::size_t n, std::size_t alpha);

struct Term {
  std::size_t user = 0;
  std::size_t subfile = 0;  // subfile the user recovers
};

struct Equation {
  std::vector<Term> terms;
};

struct DeliveryPlan {
  std::vector<Equation> equations;
  std::vector<std::size_t> demands;  // file index per user
};

/// One equation per rank t for every block tuple of every recovery set, in
/// the order: recovery sets ascending, tuples over the sorted member classes
/// in lexicographic order, t ascending. Throws IncompleteDemands when demands
/// does not name one file per user, InvalidAlpha when a recovery set lacks
/// the intersection structure the property guarantees.
DeliveryPlan generate_delivery(const CachingScheme& scheme, const RecoverySetGraph& graph,
                               std::vector<std::size_t> demands);

/// Closed-form equation count (q - 1) * N * z * n / alpha for N points.
BigInt expected_equation_count(std::uint64_t num_points, std::size_t q, std::size_t n,
                               std::size_t alpha);

/// Terms W^s_{d<block>,t} joined by " ⊕ "; the superscript is omitted when
/// z = 1. Requires a design-backed scheme.
std::string render_equation(const CachingScheme& scheme, const Equation& eq);
std::string block_name(const design::Block& b);

struct UserReport {
  std::size_t user = 0;
  std::size_t demand = 0;
  std::size_t recovered = 0;   // distinct subfiles decoded
  std::size_t missing = 0;     // subfiles of the demand not in cache
  std::size_t duplicates = 0;  // subfiles decoded more than once
  bool exact = false;          // every subfile present and byte-identical
};

struct SimulationReport {
  std::vector<UserReport> users;
  std::size_t equations = 0;
  Rational rate;
  std::uint64_t load_bytes = 0;
  std::uint64_t subfile_bytes = 0;
  bool all_exact = false;
};

/// Byte-level run of a plan. Files are pseudorandom: file f, subfile j, byte
/// b is drawn in that nesting order from the generator below. Throws
/// DecodeFailure when a recipient lacks a co-participant's subfile and
/// InvalidArgument for demands outside [0, num_files).
SimulationReport simulate(const CachingScheme& scheme, const DeliveryPlan& plan,
                          std::size_t num_files, std::size_t subfile_bytes, std::uint64_t seed);

/// 64-bit linear congruential generator; each output byte is the top 8 bits
/// of the next state.
class ByteStream {
 public:
  explicit ByteStream(std::uint64_t seed) : state_(seed) {}
  std::uint8_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint8_t>(state_ >> 56);
  }

 private:
  std::uint64_t state_;
};

/// Delta x F_s matrix of 1-based user indices, 0 for empty.
struct EquationSubfileMatrix {
  std::size_t rows = 0, cols = 0, users = 0;
  std::vector<std::uint32_t> entries;  // row-major

  std::uint32_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  friend bool operator==(const EquationSubfileMatrix&, const EquationSubfileMatrix&) = default;
};

EquationSubfileMatrix equation_subfile_matrix(const CachingScheme& scheme, const DeliveryPlan& plan);
EquationSubfileMatrix transpose(const EquationSubfileMatrix& s);
/// Rows stay equations; column u holds 1 + the subfile user u recovers there.
EquationSubfileMatrix role_swap(const EquationSubfileMatrix& s);

struct Lemma4Report {
  bool ok = true;
  std::vector<std::string> violations;
};

/// No nonzero repeats in a column or a row, and S(i1,j1) = S(i2,j2) != 0
/// forces S(i1,j2) = S(i2,j1) = 0.
Lemma4Report verify_lemma4(const EquationSubfileMatrix& s);

/// User t caches column j iff t is absent from it; one equation per row,
/// terms in column order; user u demands file u. Throws Lemma4Violated.
std::pair<CachingScheme, DeliveryPlan> scheme_from_eq_subfile(const EquationSubfileMatrix& s);

struct Metrics {
  BigInt users;
  Rational m_over_n;
  BigInt subfiles;
  Rational rate;
  Rational gain;  // K (1 - M/N) / R
};

/// Closed form at the base point for a code with N points.
Metrics base_metrics(std::size_t n, std::size_t q, BigInt num_points, std::size_t alpha);
/// Closed form after transposing the equation-subfile matrix.
Metrics transposed_metrics(std::size_t n, std::size_t q, BigInt num_points, std::size_t alpha);
/// Measured from an explicit scheme and plan; M/N averaged over users.
Metrics scheme_metrics(const CachingScheme& scheme, const DeliveryPlan& plan);

}  // namespace codedcache::caching
