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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "codedcache/design.hpp"
#include "codedcache/error.hpp"
#include "oracles.hpp"

using namespace codedcache;
using namespace codedcache::design;
using codes::GeneratorMatrix;
using gf::Matrix;
using gf::ScalarDomain;

namespace {

using Rows = std::vector<std::vector<std::int64_t>>;
using Classes = std::vector<std::vector<Block>>;

GeneratorMatrix example3() {
  return GeneratorMatrix(
      Matrix::from_rows(ScalarDomain::prime_field(3), {{1, 0, 1, 1}, {0, 1, 1, 2}}));
}

// Label tuples over a set of classes, counted point by point from the blocks.
std::map<std::vector<std::uint32_t>, std::size_t> tuple_counts(const ResolvableDesign& d,
                                                               const std::vector<std::size_t>& cls) {
  std::vector<std::vector<std::uint32_t>> label(d.num_points(),
                                                std::vector<std::uint32_t>(cls.size()));
  for (std::size_t s = 0; s < cls.size(); ++s)
    for (std::size_t l = 0; l < d.q(); ++l)
      for (Point p : d.block(cls[s], l)) label[p][s] = static_cast<std::uint32_t>(l);
  std::map<std::vector<std::uint32_t>, std::size_t> counts;
  for (const auto& t : label) ++counts[t];
  return counts;
}

}  // namespace

TEST_CASE("codeword matrix of the (4,2) ternary example") {
  const CodewordMatrix t = codeword_matrix(example3());
  const Rows expected = {{0, 0, 0, 1, 1, 1, 2, 2, 2},
                         {0, 1, 2, 0, 1, 2, 0, 1, 2},
                         {0, 1, 2, 1, 2, 0, 2, 0, 1},
                         {0, 2, 1, 1, 0, 2, 2, 1, 0}};
  CHECK(t.t == Matrix::from_rows(ScalarDomain::prime_field(3), expected));
  CHECK(t.k == 2);
  CHECK(t.num_codewords() == 9);

  const auto words = oracle::codewords(example3().matrix());
  for (std::size_t j = 0; j < words.size(); ++j)
    for (std::size_t i = 0; i < 4; ++i) CHECK(t.t.at(i, j) == words[j][i]);
}

TEST_CASE("small codeword matrices") {
  const auto gf2 = ScalarDomain::prime_field(2);
  const CodewordMatrix spc = codeword_matrix(codes::build_spc(2, gf2));
  CHECK(spc.t == Matrix::from_rows(gf2, {{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}}));

  const CodewordMatrix rep = codeword_matrix(GeneratorMatrix(Matrix::from_rows(gf2, {{1, 1}})));
  CHECK(rep.t == Matrix::from_rows(gf2, {{0, 1}, {0, 1}}));
}

TEST_CASE("extension field codeword matrix agrees with the enumeration oracle") {
  const auto gf4 = ScalarDomain::of_order(4);
  const GeneratorMatrix g = codes::build_mds(4, 2, gf4);
  const CodewordMatrix t = codeword_matrix(g);
  const auto words = oracle::codewords(g.matrix());
  REQUIRE(t.num_codewords() == words.size());
  for (std::size_t j = 0; j < words.size(); ++j)
    for (std::size_t i = 0; i < 4; ++i) CHECK(t.t.at(i, j) == words[j][i]);
  for (std::size_t i = 0; i < 4; ++i) CHECK(t.t.at(i, 0) == 0);
}

TEST_CASE("resolvable design of the (4,2) ternary example") {
  const ResolvableDesign d = resolvable_design(codeword_matrix(example3()));
  const Classes expected = {{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}},
                            {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}},
                            {{0, 5, 7}, {1, 3, 8}, {2, 4, 6}},
                            {{0, 4, 8}, {2, 3, 7}, {1, 5, 6}}};
  CHECK(d.classes() == expected);
  CHECK(d.num_points() == 9);
  CHECK(d.q() == 3);
  CHECK(d.label(3, 7) == 1);
  CHECK(verify_resolvable(d).ok);
}

TEST_CASE("pair design from the (3,2) binary parity code") {
  const ResolvableDesign d =
      resolvable_design(codeword_matrix(codes::build_spc(2, ScalarDomain::prime_field(2))));
  const Classes expected = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
  CHECK(d.classes() == expected);
  CHECK(verify_resolvable(d).ok);

  // The displayed incidence matrix lists the blocks 12, 13, 14, 23, 24, 34.
  const Matrix displayed = Matrix::from_rows(ScalarDomain::prime_field(2), {{1, 1, 1, 0, 0, 0},
                                                                            {1, 0, 0, 1, 1, 0},
                                                                            {0, 1, 0, 1, 0, 1},
                                                                            {0, 0, 1, 0, 1, 1}});
  const Matrix ours = incidence_matrix(d);
  REQUIRE(ours.rows() == 4);
  REQUIRE(ours.cols() == 6);
  auto blocks = blocks_from_incidence(ours);
  std::sort(blocks.begin(), blocks.end());
  CHECK(blocks == blocks_from_incidence(displayed));
  const std::vector<std::size_t> perm = {0, 2, 4, 5, 3, 1};
  CHECK(ours.select_columns(perm) == displayed);

  CHECK(incidence_csv(d).starts_with("point,B0_0,B0_1,B1_0,B1_1,B2_0,B2_1\n0,1,0,1,0,1,0\n"));
}

TEST_CASE("incidence transpose round trip") {
  const ResolvableDesign d = resolvable_design(codeword_matrix(example3()));
  const Matrix inc = incidence_matrix(d);
  std::vector<Block> flat;
  for (const auto& cls : d.classes()) flat.insert(flat.end(), cls.begin(), cls.end());
  CHECK(blocks_from_incidence(inc.transpose().transpose()) == flat);

  // Transposed design: each point lies in exactly one block per class.
  const auto dual = blocks_from_incidence(inc.transpose());
  REQUIRE(dual.size() == d.num_points());
  for (std::size_t p = 0; p < dual.size(); ++p) {
    REQUIRE(dual[p].size() == d.num_classes());
    for (std::size_t i = 0; i < d.num_classes(); ++i)
      CHECK(dual[p][i] == i * d.q() + d.label(i, static_cast<Point>(p)));
  }

  const ResolvableDesign single(3, 3, 1, {{{0}, {1}, {2}}});
  CHECK(incidence_matrix(single) == Matrix::identity(ScalarDomain::prime_field(2), 3));
}

TEST_CASE("verify_resolvable flags a moved point") {
  const ResolvableDesign d = resolvable_design(codeword_matrix(example3()));
  Classes broken = d.classes();
  broken[2][0].push_back(1);
  broken[2][1].erase(broken[2][1].begin());
  const ResolvabilityReport r = verify_resolvable(ResolvableDesign(9, 3, 2, broken));
  CHECK_FALSE(r.ok);
  CHECK(r.violations.size() >= 2);

  Classes uncovered = d.classes();
  uncovered[0][0] = {0, 1, 3};
  const ResolvabilityReport r2 = verify_resolvable(ResolvableDesign(9, 3, 2, uncovered));
  CHECK_FALSE(r2.ok);
  CHECK(std::any_of(r2.violations.begin(), r2.violations.end(),
                    [](const std::string& v) { return v.find("cover point 2") != std::string::npos; }));
}

TEST_CASE("ring codeword matrices") {
  const auto gf2 = ScalarDomain::prime_field(2);
  const auto gf3 = ScalarDomain::prime_field(3);
  const auto src = codes::build_crt_cyclic({{{1, 1}, gf2}, {{1, 1, 1}, gf3}}, 3);
  const CodewordMatrix t = codeword_matrix(src);
  CHECK(t.k == 1);
  CHECK(t.num_codewords() == 12);
  const ResolvableDesign d = resolvable_design(t);
  CHECK(d.q() == 6);
  for (const auto& cls : d.classes()) {
    REQUIRE(cls.size() == 6);
    for (const Block& b : cls) CHECK(b.size() == 2);
  }
  CHECK(verify_resolvable(d).ok);

  // A row of Z/6 symbols in which 1, 3, 5 never occur.
  const auto z6 = ScalarDomain::ring(6);
  CodewordMatrix bad{Matrix::from_rows(z6, {{0, 2, 4, 0, 2, 4}}), 1, "bad"};
  CHECK_THROWS_AS(resolvable_design(bad), Error);
  try {
    (void)resolvable_design(bad);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RingConditionViolated);
  }

  // A generator over Z/6 with unit-ideal columns satisfies the count.
  const auto z6spc = codes::build_spc(2, z6);
  const ResolvableDesign ring_design = resolvable_design(codeword_matrix(z6spc));
  CHECK(verify_resolvable(ring_design).ok);
}

TEST_CASE("intersection counts inside recovery sets") {
  // Any a' <= alpha blocks from distinct classes of one window meet in
  // q^(k - a') points, for every code that passes the property check.
  std::mt19937 rng(11);
  std::size_t certified = 0;
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto dom = ScalarDomain::of_order(q);
    for (std::size_t k = 1; k <= 4; ++k) {
      if (oracle::ipow(q, k) > 625) continue;
      for (std::size_t n = k + 1; n <= k + 3; ++n) {
        std::vector<GeneratorMatrix> pool;
        if (n == k + 1) pool.push_back(codes::build_spc(k, dom));
        if (q >= n) pool.push_back(codes::build_mds(n, k, dom));
        for (int trial = 0; trial < 3; ++trial) {
          Matrix m(dom, k, n);
          for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < n; ++c) m.set(r, c, static_cast<gf::Element>(rng() % q));
          try {
            pool.emplace_back(m);
          } catch (const Error&) {
          }
        }
        for (const auto& g : pool) {
          const ResolvableDesign d = resolvable_design(codeword_matrix(g));
          for (std::size_t alpha = 1; alpha <= k + 1; ++alpha) {
            if (!codes::check_ccp(g, alpha).satisfied) continue;
            ++certified;
            const std::size_t top = std::min(alpha, k);
            for (std::size_t a = 0; a < codes::window_count(n, alpha); ++a) {
              const auto win = codes::window(n, alpha, a);
              for (std::uint32_t mask = 1; mask < (1u << alpha); ++mask) {
                std::vector<std::size_t> cls;
                for (std::size_t s = 0; s < alpha; ++s)
                  if (mask & (1u << s)) cls.push_back(win[s]);
                if (cls.size() > top) continue;
                const auto counts = tuple_counts(d, cls);
                CHECK(counts.size() == oracle::ipow(q, cls.size()));
                for (const auto& [tuple, c] : counts) CHECK(c == oracle::ipow(q, k - cls.size()));
              }
            }
          }
        }
      }
    }
  }
  CHECK(certified > 50);
}
