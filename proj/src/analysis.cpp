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

#include "codedcache/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "codedcache/error.hpp"
#include "codedcache/parallel.hpp"

namespace codedcache::analysis {

using codes::Construction;
using codes::GeneratorMatrix;

std::vector<std::size_t> CandidateSet::found_ks() const {
  std::vector<std::size_t> out;
  for (const auto& e : entries)
    if (e.found) out.push_back(e.k);
  return out;
}

namespace {

// Records a base construction of length L and extends it to length n.
void accept_route(CandidateEntry& e, const GeneratorMatrix& base, std::size_t n) {
  const std::size_t len = base.n();
  e.found = true;
  e.construction = base.provenance().kind;
  e.base_length = len;
  e.extension = (n - len) / (e.k + 1);
  e.route = codes::extend_ccp(base, e.extension).provenance();
}

CandidateEntry evaluate_k(std::size_t n, std::size_t k, const gf::ScalarDomain& d,
                          std::uint64_t limit) {
  CandidateEntry e;
  e.k = k;
  e.n_prime = n % (k + 1) + k + 1;
  const std::size_t g = std::gcd(e.n_prime, k + 1);
  e.z = (k + 1) / g;
  e.alpha = e.n_prime / g;
  const std::uint32_t q = d.order();

  auto z_le_2 = [&]() -> std::optional<GeneratorMatrix> {
    if (e.z == 1) return codes::build_spc(k, d);
    if (e.z == 2) return d.is_field() ? codes::build_claim6(g, 2, d) : codes::build_claim9(g, d);
    return std::nullopt;
  };

  if (!d.is_field()) {
    if (auto base = z_le_2()) accept_route(e, *base, n);
    return e;
  }

  for (std::size_t len = e.n_prime; len <= n; len += k + 1) {
    std::optional<GeneratorMatrix> hit;
    const codes::CyclicSearch search = codes::search_cyclic_generators(
        len, k, d, limit, [&](const gf::Polynomial& poly) {
          GeneratorMatrix cand = codes::build_cyclic(len, poly, d);
          if (!codes::check_ccp_cyclic_shortcut(cand).satisfied) return false;
          hit.emplace(std::move(cand));
          return true;
        });
    if (search.inconclusive) e.search_inconclusive = true;
    if (hit) {
      accept_route(e, *hit, n);
      return e;
    }
  }
  if (auto base = z_le_2()) {
    accept_route(e, *base, n);
  } else if (q >= e.n_prime) {
    accept_route(e, codes::build_mds(e.n_prime, k, d), n);
  } else if (e.alpha == e.z + 1 && q >= e.z) {
    accept_route(e, codes::build_claim6(g, e.z, d), n);
  } else if (e.alpha > e.z + 1 && q > e.alpha) {
    accept_route(e, codes::build_claim5(g, e.z, e.alpha, d), n);
  }
  return e;
}

}  // namespace

CandidateSet construct_candidate_set(std::size_t n, std::uint32_t q, std::uint64_t limit) {
  if (n < 2 || q < 2) throw Error(ErrorCode::InvalidArgument, "need n >= 2 and q >= 2");
  CandidateSet set{n, q, gf::ScalarDomain::of_order(q), {}};
  set.entries.resize(n - 1);
  parallel_for(n - 1, [&](std::size_t i) { set.entries[i] = evaluate_k(n, i + 1, set.domain, limit); });
  return set;
}

GeneratorMatrix replay(const CandidateSet& set, const CandidateEntry& entry) {
  if (!entry.found || !entry.route)
    throw Error(ErrorCode::InvalidArgument, "k = " + std::to_string(entry.k) + " has no route");
  return codes::replay(*entry.route, set.domain);
}

BudgetResult k_max_for_budget(const CandidateSet& set, const BigInt& budget) {
  std::optional<BudgetResult> best;
  for (const auto& e : set.entries) {
    if (!e.found) continue;
    const BigInt fs = boost::multiprecision::pow(BigInt(set.q), static_cast<unsigned>(e.k)) * e.z;
    if (fs <= budget && (!best || e.k > best->k_max)) best = BudgetResult{e.k, fs, e.k + 1};
  }
  if (!best)
    throw Error(ErrorCode::NoFeasibleK, "no found k has q^k z within the budget " + budget.str());
  return *best;
}

BigInt binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

namespace {

std::uint64_t integral_t(std::uint64_t users, const Rational& m_over_n) {
  const Rational t = m_over_n * users;
  if (denominator(t) != 1 || t < 0 || t > users)
    throw Error(ErrorCode::NonIntegralCachePoint,
                "K M/N = " + rational_string(t) + " is not an integer in [0, K]");
  return static_cast<std::uint64_t>(numerator(t));
}

Rational mn_rate(std::uint64_t users, std::uint64_t t) {
  return Rational(BigInt(users - t), BigInt(1 + t));
}

}  // namespace

ComparisonRow mn_metrics(std::uint64_t users, const Rational& m_over_n) {
  const std::uint64_t t = integral_t(users, m_over_n);
  return {"MN", users, m_over_n, mn_rate(users, t), binomial(users, t), Rational(1 + t)};
}

ComparisonRow mn_sharing(std::uint64_t users,
                         const std::vector<std::pair<Rational, Rational>>& weight_and_point) {
  ComparisonRow row{"MN-sharing", users, 0, 0, 0, 0};
  Rational total = 0;
  for (const auto& [w, m] : weight_and_point) {
    const std::uint64_t t = integral_t(users, m);
    total += w;
    row.m_over_n += w * m;
    row.rate += w * mn_rate(users, t);
    row.subfiles += binomial(users, t);
  }
  if (total != 1) throw Error(ErrorCode::InvalidArgument, "sharing weights must sum to 1");
  if (row.rate != 0) row.gain = Rational(users) * (1 - row.m_over_n) / row.rate;
  return row;
}

MemorySharingBound memory_sharing_bound(std::uint64_t users, const Rational& m_over_n,
                                        const Rational& rate) {
  const double k = static_cast<double>(users);
  const double m = static_cast<double>(m_over_n);
  const double r = static_cast<double>(rate);
  if (!(m > 0 && m < 1))
    throw Error(ErrorCode::NoSolutionInRange, "M/N must lie strictly between 0 and 1");
  auto h = [&](double x) { return k * (1 - x) / (1 + k * x); };
  auto lambda_at = [&](double x) {
    const double den = 1 - 2 * x;
    return std::abs(den) < 1e-15 ? 0.5 : (1 - x - m) / den;
  };
  auto f = [&](double x) {
    const double l = lambda_at(x);
    return l * h(x) + (1 - l) * h(1 - x) - r;
  };
  // lambda stays in [0, 1] exactly when M*/N <= min(M/N, 1 - M/N).
  double lo = 0, hi = std::min({m, 1 - m, 0.5});
  double flo = f(lo), fhi = f(hi);
  double x;
  if (std::abs(fhi) <= 1e-12) {
    x = hi;
  } else if (std::abs(flo) <= 1e-12) {
    x = lo;
  } else {
    if ((flo > 0) == (fhi > 0))
      throw Error(ErrorCode::NoSolutionInRange,
                  "rate " + rational_string(rate) + " at M/N = " + rational_string(m_over_n) +
                      " is outside the memory-sharing region");
    for (int it = 0; it < 200; ++it) {
      x = 0.5 * (lo + hi);
      const double fx = f(x);
      if (std::abs(fx) <= 1e-12 || hi - lo < 1e-15) break;
      if ((fx > 0) == (flo > 0)) {
        lo = x;
        flo = fx;
      } else {
        hi = x;
      }
    }
  }
  MemorySharingBound out;
  out.m_star = x;
  out.lambda = lambda_at(x);
  out.residual_rate = std::abs(f(x));
  out.residual_memory = std::abs(m - (out.lambda * x + (1 - out.lambda) * (1 - x)));
  const auto t = static_cast<std::uint64_t>(std::ceil(k * x - 1e-9));
  out.m_prime = Rational(BigInt(t), BigInt(users));
  out.subfiles_lower = binomial(users, t);
  return out;
}

double binary_entropy(double p) {
  if (p <= 0 || p >= 1) return 0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

double scaling_exponent(std::uint32_t q, double eta, MemoryMode mode) {
  const double qd = q;
  const double lead = mode == MemoryMode::Low ? binary_entropy(1 / qd) : binary_entropy(eta / qd);
  return lead - eta / qd * std::log2(qd);
}

double log2_big(const BigInt& x) {
  if (x <= 0) throw Error(ErrorCode::InvalidArgument, "log2 of a non-positive integer");
  const std::size_t bits = boost::multiprecision::msb(x);
  if (bits < 60) return std::log2(static_cast<double>(x));
  const std::size_t shift = bits - 52;
  return std::log2(static_cast<double>(BigInt(x >> shift))) + static_cast<double>(shift);
}

double finite_exponent(std::size_t n, std::size_t k, std::uint32_t q, MemoryMode mode) {
  const std::uint64_t users = static_cast<std::uint64_t>(n) * q;
  const BigInt points = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k));
  const caching::Metrics ours = mode == MemoryMode::Low
                                    ? caching::base_metrics(n, q, points, k + 1)
                                    : caching::transposed_metrics(n, q, points, k + 1);
  const BigInt mn = binomial(users, integral_t(users, ours.m_over_n));
  return (log2_big(mn) - log2_big(ours.subfiles)) / static_cast<double>(users);
}

std::vector<ComparisonRow> scheme_rows(const std::string& id, std::size_t n, std::size_t k,
                                       std::uint32_t q, const BigInt& num_points,
                                       std::size_t alpha) {
  (void)k;
  std::vector<ComparisonRow> rows;
  for (bool transposed : {false, true}) {
    const caching::Metrics m = transposed ? caching::transposed_metrics(n, q, num_points, alpha)
                                          : caching::base_metrics(n, q, num_points, alpha);
    rows.push_back({id + (transposed ? "/transposed" : ""), m.users, m.m_over_n, m.rate,
                    m.subfiles, m.gain});
  }
  return rows;
}

std::vector<ComparisonRow> spc_family_rows(std::uint64_t users) {
  std::vector<ComparisonRow> rows;
  for (std::uint64_t q = 2; q <= users / 2; ++q) {
    if (users % q != 0 || !gf::prime_power(static_cast<std::uint32_t>(q))) continue;
    const std::size_t n = users / q;
    for (std::size_t k = 1; k < n; ++k) {
      if (n % (k + 1) != 0) continue;
      const std::string id = "spc(" + std::to_string(k + 1) + "," + std::to_string(k) + ")^" +
                             std::to_string(n / (k + 1)) + "/GF(" + std::to_string(q) + ")";
      const BigInt points = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k));
      for (auto& r : scheme_rows(id, n, k, static_cast<std::uint32_t>(q), points, k + 1))
        rows.push_back(std::move(r));
    }
  }
  return rows;
}

std::vector<ComparisonRow> compare(std::vector<ComparisonRow> rows, const CompareOptions& options) {
  if (options.mn) {
    std::set<std::pair<BigInt, Rational>> seen;
    const std::size_t count = rows.size();
    for (std::size_t i = 0; i < count; ++i) {
      const auto key = std::make_pair(rows[i].users, rows[i].m_over_n);
      if (!seen.insert(key).second) continue;
      const Rational t = rows[i].m_over_n * rows[i].users;
      if (denominator(t) != 1) continue;
      rows.push_back(mn_metrics(static_cast<std::uint64_t>(rows[i].users), rows[i].m_over_n));
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ComparisonRow& a, const ComparisonRow& b) {
    if (a.m_over_n != b.m_over_n) return a.m_over_n < b.m_over_n;
    return a.rate < b.rate;
  });
  return rows;
}

std::string rational_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "scheme_id,K,M_over_N,R,F_s,gain\n";
  for (const auto& r : rows)
    out << r.scheme_id << ',' << r.users << ',' << rational_string(r.m_over_n) << ','
        << rational_string(r.rate) << ',' << r.subfiles << ',' << rational_string(r.gain) << '\n';
  return out.str();
}

std::string to_json(const std::vector<ComparisonRow>& rows) {
  nlohmann::json doc;
  doc["schema"] = "codedcache-compare";
  doc["version"] = 1;
  doc["rows"] = nlohmann::json::array();
  for (const auto& r : rows)
    doc["rows"].push_back({{"scheme_id", r.scheme_id},
                           {"K", r.users.str()},
                           {"M_over_N", rational_string(r.m_over_n)},
                           {"R", rational_string(r.rate)},
                           {"F_s", r.subfiles.str()},
                           {"gain", rational_string(r.gain)}});
  return doc.dump(2);
}

}  // namespace codedcache::analysis
