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

// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "codedcache/analysis.hpp"
#include "codedcache/caching.hpp"
#include "codedcache/codes.hpp"
#include "codedcache/design.hpp"
#include "codedcache/error.hpp"
#include "codedcache/parallel.hpp"
#include "oracles.hpp"

using namespace codedcache;
using analysis::BigInt;
using analysis::Rational;
using caching::CachingScheme;
using caching::DeliveryPlan;
using codes::GeneratorMatrix;
using gf::Matrix;
using gf::ScalarDomain;

namespace {

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  bool ok() const { return count_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    for (const auto& f : failures_) s << "; " << f;
    if (count_ > failures_.size()) s << "; ... " << count_ - failures_.size() << " more";
    return s.str();
  }

 private:
  std::vector<std::string> failures_;
  std::size_t count_ = 0;
};

GeneratorMatrix ternary_example() {
  return GeneratorMatrix(
      Matrix::from_rows(ScalarDomain::prime_field(3), {{1, 0, 1, 1}, {0, 1, 1, 2}}));
}

CachingScheme scheme_of(const GeneratorMatrix& g, std::size_t alpha) {
  return caching::placement(design::resolvable_design(design::codeword_matrix(g)), alpha);
}

DeliveryPlan plan_of(const CachingScheme& s) {
  std::vector<std::size_t> demands(s.num_users);
  std::iota(demands.begin(), demands.end(), 0);
  return caching::generate_delivery(s, caching::recovery_set_graph(s.n, s.alpha), demands);
}

// Each user receives every subfile it lacks exactly once, read straight
// from the equations and the cache bitsets.
bool receives_exactly_missing(const CachingScheme& s, const DeliveryPlan& plan) {
  std::vector<std::vector<std::uint32_t>> got(s.num_users, std::vector<std::uint32_t>(s.num_subfiles));
  for (const auto& eq : plan.equations)
    for (const auto& t : eq.terms) {
      ++got[t.user][t.subfile];
      for (const auto& o : eq.terms)
        if (&o != &t && !s.caches(t.user, o.subfile)) return false;
    }
  for (std::size_t u = 0; u < s.num_users; ++u)
    for (std::size_t j = 0; j < s.num_subfiles; ++j)
      if (got[u][j] != (s.caches(u, j) ? 0u : 1u)) return false;
  return true;
}

// Blocks from distinct classes of one window, at most min(alpha, k) of them,
// meet in q^(k - count) points.
bool intersection_counts_hold(const design::ResolvableDesign& d, std::size_t n, std::size_t k,
                              std::size_t alpha) {
  const std::size_t q = d.q();
  const std::size_t top = std::min(alpha, k);
  for (std::size_t a = 0; a < codes::window_count(n, alpha); ++a) {
    const auto win = codes::window(n, alpha, a);
    for (std::uint32_t mask = 1; mask < (1u << alpha); ++mask) {
      std::vector<std::size_t> cls;
      for (std::size_t s = 0; s < alpha; ++s)
        if (mask & (1u << s)) cls.push_back(win[s]);
      if (cls.size() > top) continue;
      std::map<std::vector<std::uint32_t>, std::size_t> counts;
      std::vector<std::vector<std::uint32_t>> label(d.num_points(), std::vector<std::uint32_t>(cls.size()));
      for (std::size_t s = 0; s < cls.size(); ++s)
        for (std::size_t l = 0; l < q; ++l)
          for (design::Point p : d.block(cls[s], l)) label[p][s] = static_cast<std::uint32_t>(l);
      for (const auto& t : label) ++counts[t];
      if (counts.size() != oracle::ipow(q, cls.size())) return false;
      for (const auto& [tuple, c] : counts)
        if (c != oracle::ipow(q, k - cls.size())) return false;
    }
  }
  return true;
}

// Runs fn(i) for i in [0, count) on plain threads; the library's own
// parallelism stays at one worker.
void spread(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& t : pool) t.join();
}

// ---------------------------------------------------------------------------

Check ternary_design_regression() {
  Check c;
  const design::CodewordMatrix t = design::codeword_matrix(ternary_example());
  const Matrix expected = Matrix::from_rows(ScalarDomain::prime_field(3), {{0, 0, 0, 1, 1, 1, 2, 2, 2},
                                                                           {0, 1, 2, 0, 1, 2, 0, 1, 2},
                                                                           {0, 1, 2, 1, 2, 0, 2, 0, 1},
                                                                           {0, 2, 1, 1, 0, 2, 2, 1, 0}});
  c.expect(t.t == expected, "codeword matrix differs");
  const design::ResolvableDesign d = design::resolvable_design(t);
  const std::vector<std::vector<design::Block>> classes = {{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}},
                                                           {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}},
                                                           {{0, 5, 7}, {1, 3, 8}, {2, 4, 6}},
                                                           {{0, 4, 8}, {2, 3, 7}, {1, 5, 6}}};
  c.expect(d.classes() == classes, "parallel classes differ");
  c.expect(design::verify_resolvable(d).ok, "design not resolvable");
  return c;
}

Check ternary_end_to_end() {
  Check c;
  const CachingScheme s = scheme_of(ternary_example(), 3);
  c.expect(s.num_users == 12, "K != 12");
  c.expect(s.num_subfiles == 27, "F_s != 27");
  for (const auto& cache : s.cache) c.expect(cache.count() * 3 == s.num_subfiles, "M/N != 1/3");

  std::mt19937 rng(2026);
  std::vector<std::size_t> demands(12);
  for (auto& d : demands) d = rng() % 12;
  const DeliveryPlan plan = caching::generate_delivery(s, caching::recovery_set_graph(4, 3), demands);
  c.expect(plan.equations.size() == 72, "equation count != 72");

  std::vector<std::string> served;
  for (const auto& eq : plan.equations)
    if (eq.terms[0].user == 0 && eq.terms[0].subfile % 3 == 1)
      served.push_back(caching::render_equation(s, eq));
  const std::vector<std::string> displayed = {
      "W^1_{d012,3} ⊕ W^1_{d036,2} ⊕ W^0_{d237,0}", "W^1_{d012,6} ⊕ W^1_{d036,1} ⊕ W^0_{d156,0}",
      "W^1_{d012,4} ⊕ W^1_{d147,0} ⊕ W^0_{d048,1}", "W^1_{d012,7} ⊕ W^1_{d147,2} ⊕ W^0_{d237,1}",
      "W^1_{d012,8} ⊕ W^1_{d258,0} ⊕ W^0_{d048,2}", "W^1_{d012,5} ⊕ W^1_{d258,1} ⊕ W^0_{d156,2}"};
  c.expect(served == displayed, "equations for user 0, superscript 1 differ");

  const caching::SimulationReport r = caching::simulate(s, plan, 12, 64, 7);
  c.expect(r.all_exact, "reconstruction not exact");
  c.expect(r.rate == Rational(8, 3), "rate != 8/3");
  return c;
}

Check operating_points_k64() {
  Check c;
  struct Point {
    std::size_t alpha;
    BigInt points;
    BigInt subfiles;
    Rational rate;
  };
  // K = nq = 64 with q = 4, n = 16.
  for (const Point& p : {Point{16, BigInt(1) << 30, 1073741824, 3}, Point{8, 16384, 16384, 6},
                         Point{4, 64, 64, 12}}) {
    const caching::Metrics m = caching::base_metrics(16, 4, p.points, p.alpha);
    c.expect(m.users == 64, "K != 64");
    c.expect(m.subfiles == p.subfiles, "F_s at alpha " + std::to_string(p.alpha));
    c.expect(m.rate == p.rate, "R at alpha " + std::to_string(p.alpha));
  }
  // The same points from actual parity-code families.
  const auto rows = analysis::spc_family_rows(64);
  std::map<std::string, analysis::ComparisonRow> by_id;
  for (const auto& r : rows) by_id.emplace(r.scheme_id, r);
  c.expect(by_id.count("spc(16,15)^1/GF(4)") && by_id.at("spc(16,15)^1/GF(4)").subfiles == 1073741824,
           "spc(16,15) row");
  c.expect(by_id.count("spc(8,7)^2/GF(4)") && by_id.at("spc(8,7)^2/GF(4)").rate == 6, "spc(8,7)^2 row");
  c.expect(by_id.count("spc(4,3)^4/GF(4)") && by_id.at("spc(4,3)^4/GF(4)").subfiles == 64,
           "spc(4,3)^4 row");
  const GeneratorMatrix top = codes::build_spc(15, ScalarDomain::of_order(4));
  c.expect(codes::check_ccp(top, 16).satisfied, "spc(16,15) over GF(4) fails the check");

  const analysis::ComparisonRow mn = analysis::mn_metrics(64, Rational(1, 4));
  c.expect(mn.subfiles == analysis::binomial(64, 16), "baseline F_s");
  // C(64,16) from Pascal's rule.
  std::vector<BigInt> row(65, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= 64; ++i)
    for (unsigned j = i; j > 0; --j) row[j] += row[j - 1];
  c.expect(mn.subfiles == row[16], "baseline F_s vs Pascal");
  c.expect(mn.rate == Rational(48, 17), "baseline R != 48/17");
  return c;
}

Check transpose_point() {
  Check c;
  const GeneratorMatrix g = codes::build_claim9(3, ScalarDomain::prime_field(2));
  c.expect(g.n() == 9 && g.k() == 5, "shape is not (9,5)");
  c.expect(codes::check_ccp(g, 6).satisfied, "(5,6) check fails");
  c.expect(oracle::ccp(g.matrix(), 6), "(5,6) enumeration oracle fails");
  const CachingScheme s = scheme_of(g, 6);
  const DeliveryPlan plan = plan_of(s);
  const caching::Metrics base = caching::scheme_metrics(s, plan);
  c.expect(base.subfiles == 64 && base.rate == Rational(3, 2) && base.m_over_n == Rational(1, 2),
           "base metrics");
  c.expect(caching::simulate(s, plan, 18, 16, 1).all_exact, "base simulation");

  const auto m = caching::equation_subfile_matrix(s, plan);
  const auto [ts, tp] = caching::scheme_from_eq_subfile(caching::transpose(m));
  const caching::Metrics tm = caching::scheme_metrics(ts, tp);
  c.expect(tm.subfiles == 96 && tm.rate == Rational(2, 3) && tm.m_over_n == Rational(2, 3),
           "transposed metrics");
  c.expect(caching::simulate(ts, tp, 18, 16, 2).all_exact, "transposed simulation");
  return c;
}

Check candidate_search() {
  Check c;
  const analysis::CandidateSet set = analysis::construct_candidate_set(12, 5, 1'000'000);
  const auto found = set.found_ks();
  for (std::size_t k : {1, 2, 3, 4, 5, 6, 7, 8, 9, 11})
    c.expect(std::find(found.begin(), found.end(), k) != found.end(), "k=" + std::to_string(k) + " missing");
  c.expect(std::find(found.begin(), found.end(), 10) == found.end(), "k=10 found");
  for (const auto& e : set.entries)
    if (e.found) c.expect(codes::check_ccp(analysis::replay(set, e), e.k + 1).satisfied,
                          "route for k=" + std::to_string(e.k) + " does not replay");
  const analysis::BudgetResult b = analysis::k_max_for_budget(set, 1'500'000);
  c.expect(b.k_max == 8, "k_max != 8");
  c.expect(b.subfiles == 1171875, "F_s != 1171875");
  return c;
}

Check memory_sharing_k18() {
  Check c;
  const auto one = analysis::memory_sharing_bound(18, Rational(1, 2), Rational(3, 2));
  c.expect(std::abs(one.m_star - 0.227) <= 0.005, "M*/N at (1/2, 3/2)");
  c.expect(one.subfiles_lower == 8568, "bound at (1/2, 3/2)");
  const auto two = analysis::memory_sharing_bound(18, Rational(2, 3), Rational(2, 3));
  c.expect(std::abs(two.m_star - 0.25) <= 0.005, "M*/N at (2/3, 2/3)");
  c.expect(two.subfiles_lower == 8568, "bound at (2/3, 2/3)");
  c.expect(analysis::binomial(18, 5) == 8568, "C(18,5)");
  return c;
}

// Every systematic generator [I | P] with q <= 3, n <= 6, k <= 3 and every
// alpha it certifies. All 2^K demand vectors run on the first certified
// scheme of each (q, n, k) at alpha = k + 1; the rest run N = 1 and three
// N = 2 vectors. Decodability itself is checked for every scheme from the
// equations, independent of the demands.
Check property_suite() {
  Check c;
  struct Case {
    GeneratorMatrix g;
    std::size_t alpha;
    bool exhaustive;
  };
  std::vector<Case> cases;
  for (std::uint32_t q : {2u, 3u}) {
    const auto dom = ScalarDomain::prime_field(q);
    for (std::size_t k = 1; k <= 3; ++k)
      for (std::size_t n = k + 1; n <= 6; ++n) {
        bool representative = false;
        for (const auto& p : oracle::all_vectors(q, k * (n - k))) {
          Matrix m(dom, k, n);
          for (std::size_t r = 0; r < k; ++r) {
            m.set(r, r, 1);
            for (std::size_t c2 = 0; c2 < n - k; ++c2) m.set(r, k + c2, p[r * (n - k) + c2]);
          }
          std::optional<GeneratorMatrix> g;
          try {
            g.emplace(m);
          } catch (const Error&) {
            continue;
          }
          for (std::size_t alpha = 1; alpha <= k + 1; ++alpha) {
            if (!codes::check_ccp(*g, alpha).satisfied) continue;
            const bool ex = alpha == k + 1 && !representative;
            representative = representative || ex;
            cases.push_back({*g, alpha, ex});
          }
        }
      }
  }

  std::vector<std::string> errors(cases.size());
  spread(cases.size(), [&](std::size_t i) {
    const Case& cs = cases[i];
    auto fail = [&](const std::string& what) {
      if (errors[i].empty()) {
        std::ostringstream s;
        s << what << " for " << cs.g.k() << "x" << cs.g.n() << " over Z"
          << cs.g.domain().order() << " alpha=" << cs.alpha;
        errors[i] = s.str();
      }
    };
    const std::size_t n = cs.g.n(), k = cs.g.k();
    const design::ResolvableDesign d = design::resolvable_design(design::codeword_matrix(cs.g));
    if (!intersection_counts_hold(d, n, k, cs.alpha)) fail("intersection counts");
    const CachingScheme s = caching::placement(d, cs.alpha);
    const DeliveryPlan plan = plan_of(s);
    if (plan.equations.size() != caching::expected_equation_count(d.num_points(), d.q(), n, cs.alpha))
      fail("equation count");
    if (!receives_exactly_missing(s, plan)) fail("received set != missing set");
    const auto m = caching::equation_subfile_matrix(s, plan);
    if (!caching::verify_lemma4(m).ok) fail("matrix conditions");
    if (!caching::verify_lemma4(caching::transpose(m)).ok) fail("transposed matrix conditions");

    auto run = [&](const std::vector<std::size_t>& demands, std::size_t files, std::uint64_t seed) {
      DeliveryPlan p = plan;
      p.demands = demands;
      const auto r = caching::simulate(s, p, files, 1, seed);
      if (!r.all_exact) fail("simulation");
      for (const auto& u : r.users)
        if (u.recovered != u.missing || u.duplicates != 0) fail("recovered != missing");
    };
    const std::size_t users = s.num_users;
    run(std::vector<std::size_t>(users, 0), 1, 1);
    if (cs.exhaustive) {
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << users); ++v) {
        std::vector<std::size_t> dv(users);
        for (std::size_t u = 0; u < users; ++u) dv[u] = (v >> u) & 1;
        run(dv, 2, v);
      }
    } else {
      std::vector<std::size_t> alt(users), ones(users, 1), mixed(users);
      for (std::size_t u = 0; u < users; ++u) {
        alt[u] = u & 1;
        mixed[u] = (u / d.q()) & 1;
      }
      run(alt, 2, 2);
      run(ones, 2, 3);
      run(mixed, 2, 4);
    }
  });
  std::size_t exhaustive = 0;
  for (const auto& cs : cases) exhaustive += cs.exhaustive;
  c.expect(cases.size() > 100, "only " + std::to_string(cases.size()) + " certified schemes");
  for (const auto& e : errors) c.expect(e.empty(), e);
  std::cerr << "  property suite: " << cases.size() << " certified schemes, " << exhaustive
            << " with every demand vector\n";
  return c;
}

// Quotient of X^n - 1 by a monic divisor.
gf::Polynomial cofactor(const ScalarDomain& d, const gf::Polynomial& g, std::size_t n) {
  gf::Polynomial rem(n + 1, 0);
  rem[0] = d.neg(1);
  rem[n] = 1;
  const std::size_t dg = g.size() - 1;
  gf::Polynomial quo(n - dg + 1, 0);
  for (std::size_t i = n + 1; i-- > dg;) {
    const gf::Element lead = rem[i];
    if (lead == 0) continue;
    quo[i - dg] = lead;
    for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] = d.sub(rem[i - dg + j], d.mul(lead, g[j]));
  }
  return quo;
}

// Every monic divisor of X^n - 1 for n <= 12, q in {2, 3, 5}: degrees up to
// 6 come from the generator search, larger ones as cofactors of those.
Check shortcut_equivalence() {
  Check c;
  struct Code {
    std::size_t n;
    gf::Polynomial g;
    ScalarDomain dom;
  };
  std::vector<Code> all;
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const auto dom = ScalarDomain::prime_field(q);
    for (std::size_t n = 2; n <= 12; ++n) {
      std::set<gf::Polynomial> divisors;
      for (std::size_t deg = 1; deg <= std::min<std::size_t>(6, n - 1); ++deg) {
        const auto search = codes::search_cyclic_generators(n, n - deg, dom, 10'000'000);
        c.expect(!search.inconclusive, "search limit hit");
        for (const auto& g : search.generators) {
          divisors.insert(g);
          if (n - deg >= 1) divisors.insert(cofactor(dom, g, n));
        }
      }
      for (const auto& g : divisors) {
        const std::size_t deg = g.size() - 1;
        if (deg == 0 || deg >= n) continue;
        c.expect(gf::divides_xn_minus_one(dom, g, n), "cofactor is not a divisor");
        all.push_back({n, g, dom});
      }
    }
  }
  std::vector<int> verdicts(all.size(), 0);
  spread(all.size(), [&](std::size_t i) {
    const GeneratorMatrix g = codes::build_cyclic(all[i].n, all[i].g, all[i].dom);
    const bool full = codes::check_ccp(g, g.k() + 1).satisfied;
    const bool quick = codes::check_ccp_cyclic_shortcut(g).satisfied;
    verdicts[i] = full == quick ? 1 + full : -1;
  });
  std::size_t agree = 0, satisfied = 0;
  for (int v : verdicts) {
    agree += v > 0;
    satisfied += v == 2;
  }
  c.expect(agree == all.size(), std::to_string(all.size() - agree) + " disagreements");
  std::cerr << "  shortcut: " << all.size() << " cyclic codes, " << agree << " agree, " << satisfied
            << " satisfy the property\n";
  return c;
}

Check parity_family_convergence() {
  Check c;
  double previous = 1;
  for (std::size_t users : {20u, 50u, 100u, 200u}) {
    const std::size_t n = users / 2;
    const double e = analysis::finite_exponent(n, n - 1, 2, analysis::MemoryMode::Low);
    // Independent big-integer form: C(K, K/2) / 2^(n-1).
    std::vector<BigInt> row(users + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= users; ++i)
      for (std::size_t j = i; j > 0; --j) row[j] += row[j - 1];
    const double direct = (analysis::log2_big(row[n]) - static_cast<double>(n - 1)) / users;
    c.expect(std::abs(e - direct) < 1e-9, "finite exponent at K=" + std::to_string(users));
    const double gap = std::abs(e - analysis::scaling_exponent(2, 1, analysis::MemoryMode::Low));
    c.expect(gap < previous, "gap not decreasing at K=" + std::to_string(users));
    previous = gap;
  }
  c.expect(std::abs(analysis::scaling_exponent(2, 1, analysis::MemoryMode::Low) - 0.5) < 1e-9,
           "limit != 1/2");
  c.expect(previous <= 0.05, "gap at K=200 above 0.05");
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_s;  // 0 = no runtime bound
    Check (*fn)();
  };
  const std::vector<Criterion> criteria = {
      {1, "ternary (4,2) codeword matrix and parallel classes", 1, ternary_design_regression},
      {2, "ternary (4,2) scheme end to end", 0, ternary_end_to_end},
      {3, "K=64 operating points and baseline", 0, operating_points_k64},
      {4, "(9,5) binary code and transposed scheme", 10, transpose_point},
      {5, "candidate set for n=12, q=5 and budget optimum", 60, candidate_search},
      {6, "memory-sharing bound for K=18", 0, memory_sharing_k18},
      {7, "oracle property suite (q<=3, n<=6, k<=3, N<=2)", 120, property_suite},
      {8, "cyclic shortcut agrees with the full check", 0, shortcut_equivalence},
      {9, "parity family exponent convergence", 0, parity_family_convergence},
  };
  set_thread_count(1);
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    std::string error;
    try {
      result = cr.fn();
    } catch (const std::exception& e) {
      error = std::string("; threw: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = result.ok() && error.empty();
    std::string detail = result.summary() + error;
    if (cr.limit_s > 0 && secs >= cr.limit_s) {
      ok = false;
      detail += "; over the " + std::to_string(static_cast<int>(cr.limit_s)) + " s limit";
    }
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << (ok ? "PASS" : "FAIL") << " " << cr.id << " " << cr.name << " (" << time.str() << " s)"
              << detail << std::endl;
    failed += !ok;
  }
  return failed;
}
