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
 * @file design.hpp
 * @brief Codeword matrices and the resolvable designs they induce.
 *
 * The codeword matrix T lists every codeword of a code as a column. Row i of
 * T splits the codeword indices into q blocks B_{i,l} = {j : T(i,j) = l};
 * the q blocks of one row form the parallel class P_i.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "codedcache/codes.hpp"
#include "codedcache/gf.hpp"

namespace codedcache::design {

using Point = std::uint32_t;
using Block = std::vector<Point>;

struct CodewordMatrix {
  gf::Matrix t;       // n rows, one column per codeword
  std::size_t k = 0;  // message length (smallest component k for CRT sources)
  std::string source;

  std::size_t n() const noexcept { return t.rows(); }
  std::size_t num_codewords() const noexcept { return t.cols(); }
};

/// Largest codeword count that will be materialized.
inline constexpr std::uint64_t kMaxCodewords = std::uint64_t{1} << 24;

/// Column j is u_j * G where u_j is j written in base q with u_0 most
/// significant. Throws InvalidArgument above kMaxCodewords.
CodewordMatrix codeword_matrix(const codes::GeneratorMatrix& g);
/// Columns in the source's own enumeration order.
CodewordMatrix codeword_matrix(const codes::CodewordSource& src);

class ResolvableDesign {
 public:
  ResolvableDesign() = default;
  ResolvableDesign(std::size_t num_points, std::uint32_t q, std::size_t k,
                   std::vector<std::vector<Block>> classes);

  std::size_t num_points() const noexcept { return num_points_; }
  std::uint32_t q() const noexcept { return q_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t num_classes() const noexcept { return classes_.size(); }
  const std::vector<std::vector<Block>>& classes() const noexcept { return classes_; }
  const Block& block(std::size_t cls, std::size_t l) const { return classes_.at(cls).at(l); }
  /// Index l of the block of class cls that holds point p.
  std::uint32_t label(std::size_t cls, Point p) const { return labels_.at(cls).at(p); }

  friend bool operator==(const ResolvableDesign& a, const ResolvableDesign& b) {
    return a.num_points_ == b.num_points_ && a.q_ == b.q_ && a.k_ == b.k_ &&
           a.classes_ == b.classes_;
  }

 private:
  std::size_t num_points_ = 0;
  std::uint32_t q_ = 0;
  std::size_t k_ = 0;
  std::vector<std::vector<Block>> classes_;
  std::vector<std::vector<std::uint32_t>> labels_;  // 0xffffffff when absent
};

/// Blocks B_{i,l} in ascending l, classes in ascending i. Throws
/// RingConditionViolated when some symbol does not occur exactly N/q times in
/// a row of T.
ResolvableDesign resolvable_design(const CodewordMatrix& t);

struct ResolvabilityReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Equal block sizes, disjoint blocks within each class, each class covering
/// every point.
ResolvabilityReport verify_resolvable(const ResolvableDesign& d);

/// |X| x |blocks| 0/1 matrix over GF(2), blocks in class-major order.
gf::Matrix incidence_matrix(const ResolvableDesign& d);
std::string incidence_csv(const ResolvableDesign& d);

/// Column j of a 0/1 matrix read as the block of rows holding a 1.
std::vector<Block> blocks_from_incidence(const gf::Matrix& incidence);

}  // namespace codedcache::design
