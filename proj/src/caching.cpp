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

#include "codedcache/caching.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <map>

#include "codedcache/codes.hpp"
#include "codedcache/error.hpp"
#include "codedcache/parallel.hpp"

namespace codedcache::caching {

using design::Block;
using design::Point;
using Bits = boost::dynamic_bitset<>;

CachingScheme placement(const design::ResolvableDesign& d, std::size_t alpha) {
  const std::size_t n = d.num_classes();
  if (alpha < 1 || alpha > d.k() + 1 || alpha > n)
    throw Error(ErrorCode::InvalidAlpha, "alpha " + std::to_string(alpha) +
                                             " outside [1, min(k + 1, n)] for k = " +
                                             std::to_string(d.k()) + ", n = " + std::to_string(n));
  CachingScheme s;
  s.n = n;
  s.k = d.k();
  s.q = d.q();
  s.alpha = alpha;
  s.z = codes::least_z(n, alpha);
  s.num_users = n * d.q();
  s.num_subfiles = d.num_points() * s.z;
  s.cache.assign(s.num_users, Bits(s.num_subfiles));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < d.q(); ++l)
      for (Point t : d.block(i, l))
        for (std::size_t sup = 0; sup < s.z; ++sup) s.cache[i * d.q() + l].set(t * s.z + sup);
  s.design = d;
  return s;
}

std::size_t RecoverySetGraph::label(std::size_t cls, std::size_t set) const {
  for (const auto& [a, lab] : edges.at(cls))
    if (a == set) return lab;
  throw Error(ErrorCode::InvalidArgument, "class " + std::to_string(cls) +
                                              " is not in recovery set " + std::to_string(set));
}

RecoverySetGraph recovery_set_graph(std::size_t n, std::size_t alpha) {
  if (alpha < 1 || alpha > n)
    throw Error(ErrorCode::InvalidAlpha, "alpha must lie in [1, n]");
  RecoverySetGraph g;
  g.n = n;
  g.alpha = alpha;
  g.z = codes::least_z(n, alpha);
  g.edges.resize(n);
  for (std::size_t a = 0; a < codes::window_count(n, alpha); ++a) {
    g.sets.push_back(codes::window(n, alpha, a));
    for (std::size_t cls : g.sets.back()) g.edges[cls].emplace_back(a, g.edges[cls].size());
  }
  return g;
}

namespace {

std::vector<Equation> deliver_set(const CachingScheme& scheme, const RecoverySetGraph& graph,
                                  const std::vector<Bits>& block_bits, std::size_t a) {
  const design::ResolvableDesign& d = *scheme.design;
  const std::size_t q = d.q();
  std::vector<std::size_t> cls = graph.sets[a];
  std::sort(cls.begin(), cls.end());
  const std::size_t m = cls.size();
  std::vector<std::size_t> sup(m);
  for (std::size_t s = 0; s < m; ++s) sup[s] = graph.label(cls[s], a);

  Bits all(d.num_points());
  all.set();
  std::vector<Bits> prefix(m + 1, all), suffix(m + 1, all);
  std::vector<std::size_t> l(m, 0);
  std::vector<Equation> out;
  std::vector<std::vector<Point>> hat(m);
  for (;;) {
    for (std::size_t s = 0; s < m; ++s) prefix[s + 1] = prefix[s] & block_bits[cls[s] * q + l[s]];
    for (std::size_t s = m; s-- > 0;) suffix[s] = suffix[s + 1] & block_bits[cls[s] * q + l[s]];
    const Bits& full = prefix[m];
    for (std::size_t s = 0; s < m; ++s) {
      Bits others = prefix[s] & suffix[s + 1];
      others -= full;
      hat[s].clear();
      for (auto p = others.find_first(); p != Bits::npos; p = others.find_next(p))
        hat[s].push_back(static_cast<Point>(p));
      if (hat[s].size() != hat[0].size())
        throw Error(ErrorCode::InvalidAlpha,
                    "recovery set " + std::to_string(a) +
                        " lacks the intersection structure required for alpha = " +
                        std::to_string(graph.alpha));
    }
    for (std::size_t t = 0; t < hat[0].size(); ++t) {
      Equation eq;
      eq.terms.reserve(m);
      for (std::size_t s = 0; s < m; ++s)
        eq.terms.push_back({cls[s] * q + l[s], hat[s][t] * scheme.z + sup[s]});
      out.push_back(std::move(eq));
    }
    std::size_t pos = m;
    while (pos > 0 && ++l[pos - 1] == q) l[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

}  // namespace

DeliveryPlan generate_delivery(const CachingScheme& scheme, const RecoverySetGraph& graph,
                               std::vector<std::size_t> demands) {
  if (demands.size() != scheme.num_users)
    throw Error(ErrorCode::IncompleteDemands, "expected " + std::to_string(scheme.num_users) +
                                                  " demands, got " +
                                                  std::to_string(demands.size()));
  if (!scheme.design)
    throw Error(ErrorCode::InvalidArgument, "delivery generation needs a design-backed scheme");
  if (graph.n != scheme.n || graph.alpha != scheme.alpha)
    throw Error(ErrorCode::InvalidArgument, "recovery set graph does not match the scheme");
  const design::ResolvableDesign& d = *scheme.design;
  std::vector<Bits> block_bits;
  block_bits.reserve(scheme.num_users);
  for (std::size_t i = 0; i < d.num_classes(); ++i)
    for (std::size_t l = 0; l < d.q(); ++l) {
      Bits b(d.num_points());
      for (Point p : d.block(i, l)) b.set(p);
      block_bits.push_back(std::move(b));
    }
  std::vector<std::vector<Equation>> per_set(graph.sets.size());
  parallel_for(graph.sets.size(),
               [&](std::size_t a) { per_set[a] = deliver_set(scheme, graph, block_bits, a); });
  DeliveryPlan plan;
  plan.demands = std::move(demands);
  for (auto& eqs : per_set)
    for (auto& e : eqs) plan.equations.push_back(std::move(e));
  return plan;
}

BigInt expected_equation_count(std::uint64_t num_points, std::size_t q, std::size_t n,
                               std::size_t alpha) {
  const std::size_t z = codes::least_z(n, alpha);
  return BigInt(q - 1) * num_points * z * n / alpha;
}

std::string block_name(const Block& b) {
  const bool wide = std::any_of(b.begin(), b.end(), [](Point p) { return p >= 10; });
  std::string out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(b[i]);
  }
  return out;
}

std::string render_equation(const CachingScheme& scheme, const Equation& eq) {
  if (!scheme.design) throw Error(ErrorCode::InvalidArgument, "rendering needs a design-backed scheme");
  std::string out;
  for (std::size_t i = 0; i < eq.terms.size(); ++i) {
    const Term& t = eq.terms[i];
    if (i > 0) out += " ⊕ ";
    out += "W";
    if (scheme.z > 1) out += "^" + std::to_string(t.subfile % scheme.z);
    out += "_{d" + block_name(scheme.design->block(t.user / scheme.q, t.user % scheme.q)) + "," +
           std::to_string(t.subfile / scheme.z) + "}";
  }
  return out;
}

SimulationReport simulate(const CachingScheme& scheme, const DeliveryPlan& plan,
                          std::size_t num_files, std::size_t subfile_bytes, std::uint64_t seed) {
  if (num_files < 1 || subfile_bytes < 1)
    throw Error(ErrorCode::InvalidArgument, "need at least one file and one byte per subfile");
  if (plan.demands.size() != scheme.num_users)
    throw Error(ErrorCode::IncompleteDemands, "plan does not name one demand per user");
  for (std::size_t d : plan.demands)
    if (d >= num_files)
      throw Error(ErrorCode::InvalidArgument,
                  "demand " + std::to_string(d) + " outside the " + std::to_string(num_files) + " files");

  const std::size_t fs = scheme.num_subfiles, b = subfile_bytes;
  std::vector<std::uint8_t> files(num_files * fs * b);
  ByteStream rng(seed);
  for (auto& byte : files) byte = rng.next();
  auto chunk = [&](std::size_t file, std::size_t sub) { return files.data() + (file * fs + sub) * b; };

  const auto& eqs = plan.equations;
  std::vector<std::uint8_t> payload(eqs.size() * b, 0);
  parallel_for(eqs.size(), [&](std::size_t e) {
    std::uint8_t* out = payload.data() + e * b;
    for (const Term& t : eqs[e].terms) {
      const std::uint8_t* src = chunk(plan.demands[t.user], t.subfile);
      for (std::size_t i = 0; i < b; ++i) out[i] ^= src[i];
    }
  });

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> involved(scheme.num_users);
  for (std::size_t e = 0; e < eqs.size(); ++e)
    for (std::size_t pos = 0; pos < eqs[e].terms.size(); ++pos)
      involved.at(eqs[e].terms[pos].user).emplace_back(e, pos);

  SimulationReport report;
  report.users.resize(scheme.num_users);
  parallel_for(scheme.num_users, [&](std::size_t u) {
    UserReport& r = report.users[u];
    r.user = u;
    r.demand = plan.demands[u];
    std::vector<std::uint8_t> got(fs * b, 0);
    std::vector<std::uint32_t> hits(fs, 0);
    std::vector<std::uint8_t> buf(b);
    for (const auto& [e, pos] : involved[u]) {
      std::memcpy(buf.data(), payload.data() + e * b, b);
      for (std::size_t other = 0; other < eqs[e].terms.size(); ++other) {
        if (other == pos) continue;
        const Term& t = eqs[e].terms[other];
        if (!scheme.caches(u, t.subfile))
          throw Error(ErrorCode::DecodeFailure,
                      "user " + std::to_string(u) + " cannot cancel subfile " +
                          std::to_string(t.subfile) + " in equation " + std::to_string(e));
        const std::uint8_t* src = chunk(plan.demands[t.user], t.subfile);
        for (std::size_t i = 0; i < b; ++i) buf[i] ^= src[i];
      }
      const std::size_t own = eqs[e].terms[pos].subfile;
      std::memcpy(got.data() + own * b, buf.data(), b);
      ++hits[own];
    }
    bool exact = true;
    for (std::size_t j = 0; j < fs; ++j) {
      if (hits[j] > 0) ++r.recovered;
      if (hits[j] > 1) r.duplicates += hits[j] - 1;
      const bool cached = scheme.caches(u, j);
      if (!cached) ++r.missing;
      const std::uint8_t* want = chunk(r.demand, j);
      if (hits[j] > 0) {
        if (std::memcmp(got.data() + j * b, want, b) != 0) exact = false;
      } else if (!cached) {
        exact = false;
      }
    }
    r.exact = exact;
  });

  report.equations = eqs.size();
  report.rate = Rational(BigInt(eqs.size()), BigInt(fs));
  report.subfile_bytes = b;
  report.load_bytes = static_cast<std::uint64_t>(eqs.size()) * b;
  report.all_exact = std::all_of(report.users.begin(), report.users.end(),
                                 [](const UserReport& r) { return r.exact; });
  return report;
}

EquationSubfileMatrix equation_subfile_matrix(const CachingScheme& scheme, const DeliveryPlan& plan) {
  EquationSubfileMatrix s;
  s.rows = plan.equations.size();
  s.cols = scheme.num_subfiles;
  s.users = scheme.num_users;
  s.entries.assign(s.rows * s.cols, 0);
  for (std::size_t i = 0; i < s.rows; ++i)
    for (const Term& t : plan.equations[i].terms) {
      std::uint32_t& cell = s.at(i, t.subfile);
      if (cell != 0)
        throw Error(ErrorCode::Lemma4Violated,
                    "equation " + std::to_string(i) + " delivers subfile " +
                        std::to_string(t.subfile) + " twice");
      cell = static_cast<std::uint32_t>(t.user + 1);
    }
  return s;
}

EquationSubfileMatrix transpose(const EquationSubfileMatrix& s) {
  EquationSubfileMatrix t;
  t.rows = s.cols;
  t.cols = s.rows;
  t.users = s.users;
  t.entries.assign(t.rows * t.cols, 0);
  for (std::size_t r = 0; r < s.rows; ++r)
    for (std::size_t c = 0; c < s.cols; ++c) t.at(c, r) = s.at(r, c);
  return t;
}

EquationSubfileMatrix role_swap(const EquationSubfileMatrix& s) {
  EquationSubfileMatrix w;
  w.rows = s.rows;
  w.cols = s.users;
  w.users = s.cols;
  w.entries.assign(w.rows * w.cols, 0);
  for (std::size_t r = 0; r < s.rows; ++r)
    for (std::size_t c = 0; c < s.cols; ++c)
      if (s.at(r, c) != 0) w.at(r, s.at(r, c) - 1) = static_cast<std::uint32_t>(c + 1);
  return w;
}

Lemma4Report verify_lemma4(const EquationSubfileMatrix& s) {
  Lemma4Report report;
  constexpr std::size_t kMaxListed = 64;
  auto flag = [&](std::string msg) {
    report.ok = false;
    if (report.violations.size() < kMaxListed) report.violations.push_back(std::move(msg));
  };
  auto cell = [](std::size_t r, std::size_t c) {
    return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
  };
  std::map<std::uint32_t, std::vector<std::pair<std::size_t, std::size_t>>> where;
  for (std::size_t r = 0; r < s.rows; ++r)
    for (std::size_t c = 0; c < s.cols; ++c) {
      const std::uint32_t v = s.at(r, c);
      if (v == 0) continue;
      if (v > s.users) flag("entry " + std::to_string(v) + " at " + cell(r, c) + " exceeds the user count");
      where[v].emplace_back(r, c);
    }
  for (const auto& [v, pos] : where) {
    for (std::size_t x = 0; x < pos.size(); ++x)
      for (std::size_t y = x + 1; y < pos.size(); ++y) {
        const auto [r1, c1] = pos[x];
        const auto [r2, c2] = pos[y];
        if (c1 == c2)
          flag("condition 1: " + std::to_string(v) + " repeats in column " + std::to_string(c1) +
               " at rows " + std::to_string(r1) + " and " + std::to_string(r2));
        else if (r1 == r2)
          flag("condition 2: " + std::to_string(v) + " repeats in row " + std::to_string(r1) +
               " at columns " + std::to_string(c1) + " and " + std::to_string(c2));
        else if (s.at(r1, c2) != 0 || s.at(r2, c1) != 0)
          flag("condition 3: " + std::to_string(v) + " at " + cell(r1, c1) + " and " + cell(r2, c2) +
               " but " + cell(r1, c2) + " or " + cell(r2, c1) + " is nonzero");
      }
  }
  return report;
}

std::pair<CachingScheme, DeliveryPlan> scheme_from_eq_subfile(const EquationSubfileMatrix& s) {
  const Lemma4Report check = verify_lemma4(s);
  if (!check.ok) throw Error(ErrorCode::Lemma4Violated, check.violations.front());
  CachingScheme scheme;
  scheme.num_users = s.users;
  scheme.num_subfiles = s.cols;
  Bits everything(s.cols);
  everything.set();
  scheme.cache.assign(s.users, everything);
  DeliveryPlan plan;
  plan.equations.resize(s.rows);
  for (std::size_t r = 0; r < s.rows; ++r)
    for (std::size_t c = 0; c < s.cols; ++c)
      if (const std::uint32_t v = s.at(r, c); v != 0) {
        scheme.cache[v - 1].reset(c);
        plan.equations[r].terms.push_back({v - 1, c});
      }
  plan.demands.resize(s.users);
  for (std::size_t u = 0; u < s.users; ++u) plan.demands[u] = u;
  return {std::move(scheme), std::move(plan)};
}

namespace {

Metrics finish(BigInt users, Rational m_over_n, BigInt subfiles, Rational rate) {
  Metrics m{std::move(users), std::move(m_over_n), std::move(subfiles), std::move(rate), 0};
  if (m.rate != 0) m.gain = Rational(m.users) * (1 - m.m_over_n) / m.rate;
  return m;
}

}  // namespace

Metrics base_metrics(std::size_t n, std::size_t q, BigInt num_points, std::size_t alpha) {
  const std::size_t z = codes::least_z(n, alpha);
  const BigInt fs = num_points * z;
  const BigInt delta = BigInt(q - 1) * num_points * z * n / alpha;
  return finish(BigInt(n * q), Rational(1, q), fs, Rational(delta, fs));
}

Metrics transposed_metrics(std::size_t n, std::size_t q, BigInt num_points, std::size_t alpha) {
  const std::size_t z = codes::least_z(n, alpha);
  const BigInt fs = num_points * z;
  const BigInt delta = BigInt(q - 1) * num_points * z * n / alpha;
  return finish(BigInt(n * q), 1 - Rational(alpha, n * q), delta, Rational(fs, delta));
}

Metrics scheme_metrics(const CachingScheme& scheme, const DeliveryPlan& plan) {
  BigInt cached = 0;
  for (const auto& c : scheme.cache) cached += c.count();
  const BigInt k(scheme.num_users), fs(scheme.num_subfiles);
  return finish(k, Rational(cached, k * fs), fs, Rational(BigInt(plan.equations.size()), fs));
}

}  // namespace codedcache::caching
