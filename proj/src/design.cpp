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

#include "codedcache/design.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "codedcache/error.hpp"
#include "codedcache/parallel.hpp"

namespace codedcache::design {

using gf::Element;

namespace {

constexpr std::uint32_t kNoLabel = std::numeric_limits<std::uint32_t>::max();

void check_size(std::uint64_t count) {
  if (count > kMaxCodewords)
    throw Error(ErrorCode::InvalidArgument,
                "code has " + std::to_string(count) + " codewords, more than the " +
                    std::to_string(kMaxCodewords) + " that can be materialized");
}

// Fills columns [0, count) of an n x count matrix in parallel chunks.
template <class Fn>
gf::Matrix fill_columns(const gf::ScalarDomain& d, std::size_t n, std::uint64_t count, Fn&& fn) {
  std::vector<Element> entries(n * count);
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (count + kChunk - 1) / kChunk;
  parallel_for(chunks, [&](std::size_t c) {
    const std::uint64_t end = std::min<std::uint64_t>(count, (c + 1) * kChunk);
    for (std::uint64_t j = c * kChunk; j < end; ++j) {
      const std::vector<Element> word = fn(j);
      for (std::size_t i = 0; i < n; ++i) entries[i * count + j] = word[i];
    }
  });
  gf::Matrix t(d, n, count);
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < count; ++j) t.set(i, j, entries[i * count + j]);
  return t;
}

}  // namespace

CodewordMatrix codeword_matrix(const codes::GeneratorMatrix& g) {
  const gf::ScalarDomain& d = g.domain();
  const std::uint32_t q = d.order();
  std::uint64_t count = 1;
  for (std::size_t r = 0; r < g.k(); ++r) {
    count *= q;
    check_size(count);
  }
  const gf::Matrix& m = g.matrix();
  CodewordMatrix out{fill_columns(d, g.n(), count,
                                  [&](std::uint64_t j) {
                                    std::vector<Element> word(g.n(), 0);
                                    std::uint64_t rest = j;
                                    for (std::size_t r = g.k(); r-- > 0;) {
                                      const auto u = static_cast<Element>(rest % q);
                                      rest /= q;
                                      if (u == 0) continue;
                                      for (std::size_t c = 0; c < g.n(); ++c)
                                        word[c] = d.add(word[c], d.mul(u, m.at(r, c)));
                                    }
                                    return word;
                                  }),
                     g.k(), g.provenance().describe()};
  return out;
}

CodewordMatrix codeword_matrix(const codes::CodewordSource& src) {
  check_size(src.num_codewords());
  return CodewordMatrix{
      fill_columns(src.domain(), src.n(), src.num_codewords(),
                   [&](std::uint64_t j) { return src.codeword(j); }),
      src.k_min(), "crt over " + src.domain().name()};
}

ResolvableDesign::ResolvableDesign(std::size_t num_points, std::uint32_t q, std::size_t k,
                                   std::vector<std::vector<Block>> classes)
    : num_points_(num_points), q_(q), k_(k), classes_(std::move(classes)) {
  labels_.assign(classes_.size(), std::vector<std::uint32_t>(num_points_, kNoLabel));
  for (std::size_t i = 0; i < classes_.size(); ++i)
    for (std::size_t l = 0; l < classes_[i].size(); ++l)
      for (Point p : classes_[i][l])
        if (p < num_points_) labels_[i][p] = static_cast<std::uint32_t>(l);
}

ResolvableDesign resolvable_design(const CodewordMatrix& t) {
  const std::uint32_t q = t.t.domain().order();
  const std::size_t count = t.num_codewords();
  std::vector<std::vector<Block>> classes(t.n(), std::vector<Block>(q));
  for (std::size_t i = 0; i < t.n(); ++i) {
    for (std::size_t j = 0; j < count; ++j) classes[i][t.t.at(i, j)].push_back(static_cast<Point>(j));
    for (std::uint32_t l = 0; l < q; ++l) {
      if (classes[i][l].size() * q != count)
        throw Error(ErrorCode::RingConditionViolated,
                    "symbol " + std::to_string(l) + " occurs " +
                        std::to_string(classes[i][l].size()) + " times in row " +
                        std::to_string(i) + ", expected " + std::to_string(count / q));
    }
  }
  return ResolvableDesign(count, q, t.k, std::move(classes));
}

ResolvabilityReport verify_resolvable(const ResolvableDesign& d) {
  ResolvabilityReport report;
  auto flag = [&](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };
  std::size_t expected = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < d.num_classes(); ++i) {
    std::vector<std::size_t> hits(d.num_points(), 0);
    const auto& cls = d.classes()[i];
    for (std::size_t l = 0; l < cls.size(); ++l) {
      const Block& b = cls[l];
      if (expected == std::numeric_limits<std::size_t>::max()) expected = b.size();
      if (b.size() != expected)
        flag("block (" + std::to_string(i) + "," + std::to_string(l) + ") has size " +
             std::to_string(b.size()) + ", expected " + std::to_string(expected));
      for (Point p : b) {
        if (p >= d.num_points()) {
          flag("block (" + std::to_string(i) + "," + std::to_string(l) + ") holds point " +
               std::to_string(p) + " outside the point set");
          continue;
        }
        ++hits[p];
      }
    }
    for (std::size_t p = 0; p < d.num_points(); ++p) {
      if (hits[p] == 0)
        flag("class " + std::to_string(i) + " does not cover point " + std::to_string(p));
      else if (hits[p] > 1)
        flag("point " + std::to_string(p) + " lies in " + std::to_string(hits[p]) +
             " blocks of class " + std::to_string(i));
    }
  }
  return report;
}

gf::Matrix incidence_matrix(const ResolvableDesign& d) {
  std::size_t blocks = 0;
  for (const auto& cls : d.classes()) blocks += cls.size();
  gf::Matrix m(gf::ScalarDomain::prime_field(2), d.num_points(), blocks);
  std::size_t col = 0;
  for (const auto& cls : d.classes())
    for (const Block& b : cls) {
      for (Point p : b) m.set(p, col, 1);
      ++col;
    }
  return m;
}

std::string incidence_csv(const ResolvableDesign& d) {
  const gf::Matrix m = incidence_matrix(d);
  std::ostringstream out;
  out << "point";
  for (std::size_t i = 0; i < d.num_classes(); ++i)
    for (std::size_t l = 0; l < d.classes()[i].size(); ++l) out << ",B" << i << '_' << l;
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << r;
    for (std::size_t c = 0; c < m.cols(); ++c) out << ',' << m.at(r, c);
    out << '\n';
  }
  return out.str();
}

std::vector<Block> blocks_from_incidence(const gf::Matrix& incidence) {
  std::vector<Block> blocks(incidence.cols());
  for (std::size_t r = 0; r < incidence.rows(); ++r)
    for (std::size_t c = 0; c < incidence.cols(); ++c)
      if (incidence.at(r, c) != 0) blocks[c].push_back(static_cast<Point>(r));
  return blocks;
}

}  // namespace codedcache::design
