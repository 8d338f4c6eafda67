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
 * @file analysis.hpp
 * @brief Parameter search, subpacketization budgets and baseline comparisons.
 *
 * Rates, cache fractions and subfile counts are exact rationals and integers.
 * Floating point is confined to the scaling exponents and the bisection in
 * memory_sharing_bound.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "codedcache/caching.hpp"
#include "codedcache/codes.hpp"

namespace codedcache::analysis {

using caching::BigInt;
using caching::Rational;

/// One k of the candidate set C(n, q) and the recipe that realizes it.
struct CandidateEntry {
  std::size_t k = 0;
  std::size_t n_prime = 0;  // (n mod (k+1)) + k + 1
  std::size_t z = 0;        // (k+1) / gcd(n', k+1)
  std::size_t alpha = 0;    // n' / gcd(n', k+1)
  bool found = false;
  codes::Construction construction = codes::Construction::UserSupplied;
  std::size_t base_length = 0;  // length before extension
  std::size_t extension = 0;    // copies of the first k+1 columns prepended
  /// Full recipe for the length-n matrix; replay() rebuilds it.
  std::optional<codes::Provenance> route;
  bool search_inconclusive = false;  // a cyclic search hit its limit
};

struct CandidateSet {
  std::size_t n = 0;
  std::uint32_t q = 0;
  gf::ScalarDomain domain;
  std::vector<CandidateEntry> entries;  // k = 1 .. n-1

  std::vector<std::size_t> found_ks() const;
};

/// Branch cascade per k. Prime-power q: cyclic codes of lengths
/// n' + i(k+1) <= n passing the single-window test, then z <= 2 (parity code
/// or the z = 2 block family), then Vandermonde when q >= n', then the
/// alpha = z + 1 family when q >= z, then the alpha > z + 1 family when
/// q > alpha. Other q: the z <= 2 branch over Z mod q only. Every route is
/// extended to length n.
CandidateSet construct_candidate_set(std::size_t n, std::uint32_t q,
                                     std::uint64_t cyclic_search_limit = 1'000'000);

codes::GeneratorMatrix replay(const CandidateSet& set, const CandidateEntry& entry);

struct BudgetResult {
  std::size_t k_max = 0;
  BigInt subfiles;  // q^k_max * z
  std::size_t g_max = 0;
};

/// Largest found k with q^k * z <= budget. Throws NoFeasibleK.
BudgetResult k_max_for_budget(const CandidateSet& set, const BigInt& budget);

struct ComparisonRow {
  std::string scheme_id;
  BigInt users;
  Rational m_over_n;
  Rational rate;
  BigInt subfiles;
  Rational gain;
};

BigInt binomial(std::uint64_t n, std::uint64_t r);

/// Baseline with t = K M/N: R = K(1 - M/N)/(1 + t), F_s = C(K, t).
/// Throws NonIntegralCachePoint unless t is an integer in [0, K].
ComparisonRow mn_metrics(std::uint64_t users, const Rational& m_over_n);

/// Baseline run at several corner points with the given weights (summing
/// to 1); F_s is the sum of the corner binomials.
ComparisonRow mn_sharing(std::uint64_t users,
                         const std::vector<std::pair<Rational, Rational>>& weight_and_point);

struct MemorySharingBound {
  double lambda = 0;
  double m_star = 0;
  Rational m_prime;
  BigInt subfiles_lower;
  double residual_rate = 0;    // |R - (lambda h(M*) + (1-lambda) h(1-M*))|
  double residual_memory = 0;  // |M/N - (lambda M* + (1-lambda)(1-M*))|
};

/// Solves for (lambda, M*/N) with M*/N <= 1/2 by bisection on M*/N, then
/// rounds K M*/N up to the next integer. Throws NoSolutionInRange.
MemorySharingBound memory_sharing_bound(std::uint64_t users, const Rational& m_over_n,
                                        const Rational& rate);

enum class MemoryMode { Low, High };

double binary_entropy(double p);
/// Limit of (1/K) log2(F_s^MN / F_s*) as n grows with k/n = eta.
double scaling_exponent(std::uint32_t q, double eta, MemoryMode mode);
/// log2 of a positive big integer.
double log2_big(const BigInt& x);
/// (1/K) log2(F_s^MN / F_s*) for an (n, k) code over q symbols at one corner.
double finite_exponent(std::size_t n, std::size_t k, std::uint32_t q, MemoryMode mode);

/// Rows for both corner points of an (n, k) code over q symbols with N points.
std::vector<ComparisonRow> scheme_rows(const std::string& id, std::size_t n, std::size_t k,
                                       std::uint32_t q, const BigInt& num_points,
                                       std::size_t alpha);

/// Parity-code family for K users: for every prime power q | K with n = K/q
/// and every k with (k+1) | n, the parity code of length k+1 extended to n.
std::vector<ComparisonRow> spc_family_rows(std::uint64_t users);

struct CompareOptions {
  bool mn = false;  // add a baseline row for each integral (K, M/N)
};

/// Scheme rows plus requested baselines, sorted by M/N then R.
std::vector<ComparisonRow> compare(std::vector<ComparisonRow> rows, const CompareOptions& options);

std::string rational_string(const Rational& r);
/// Columns scheme_id, K, M_over_N, R, F_s, gain.
std::string to_csv(const std::vector<ComparisonRow>& rows);
std::string to_json(const std::vector<ComparisonRow>& rows);

}  // namespace codedcache::analysis
