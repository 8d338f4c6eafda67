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

#include "codedcache/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "codedcache/analysis.hpp"
#include "codedcache/caching.hpp"
#include "codedcache/codes.hpp"
#include "codedcache/design.hpp"
#include "codedcache/error.hpp"
#include "codedcache/parallel.hpp"
#include "codedcache/scheme_file.hpp"

namespace codedcache::cli {

namespace {

using analysis::BigInt;
using analysis::Rational;
using analysis::rational_string;
using codes::GeneratorMatrix;
using gf::ScalarDomain;
using nlohmann::json;
using scheme_file::SchemeFile;

// Raised for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("empty entry in list '" + text + "'");
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("'" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

gf::Polynomial parse_poly(const std::string& text, const ScalarDomain& d) {
  gf::Polynomial p;
  for (std::int64_t v : parse_ints(text)) p.push_back(d.from_code(v));
  return p;
}

BigInt num_points(const SchemeFile& f) {
  if (f.generator)
    return boost::multiprecision::pow(BigInt(f.generator->domain().order()),
                                      static_cast<unsigned>(f.generator->k()));
  const auto src = codes::build_crt_cyclic(f.crt->components, f.crt->n);
  return BigInt(src.num_codewords());
}

struct CodeShape {
  std::size_t n = 0, k = 0;
  std::uint32_t q = 0;
  std::string description;
};

CodeShape shape_of(const SchemeFile& f) {
  if (f.generator)
    return {f.generator->n(), f.generator->k(), f.generator->domain().order(),
            f.generator->provenance().describe() + " over " + f.generator->domain().name()};
  const auto src = codes::build_crt_cyclic(f.crt->components, f.crt->n);
  return {src.n(), src.k_min(), src.domain().order(), "CrtCyclic over " + src.domain().name()};
}

std::string metrics_line(const caching::Metrics& m) {
  return "K=" + m.users.str() + " M/N=" + rational_string(m.m_over_n) + " F_s=" + m.subfiles.str() +
         " R=" + rational_string(m.rate) + " gain=" + rational_string(m.gain);
}

void print_summary(const SchemeFile& f, std::ostream& out) {
  const CodeShape s = shape_of(f);
  out << "code: (" << s.n << "," << s.k << ") " << s.description << "\n";
  if (f.certificate)
    out << "property: alpha=" << f.certificate->alpha << " z=" << f.certificate->z << " "
        << (f.certificate->satisfied ? "satisfied" : "not satisfied") << "\n";
  const BigInt points = num_points(f);
  out << "base: " << metrics_line(caching::base_metrics(s.n, s.q, points, s.k + 1)) << "\n";
  out << "transposed: " << metrics_line(caching::transposed_metrics(s.n, s.q, points, s.k + 1))
      << "\n";
}

design::ResolvableDesign design_of(const SchemeFile& f) {
  if (f.generator) return design::resolvable_design(design::codeword_matrix(*f.generator));
  return design::resolvable_design(
      design::codeword_matrix(codes::build_crt_cyclic(f.crt->components, f.crt->n)));
}

std::vector<std::size_t> parse_demands(const std::string& spec, std::size_t users,
                                       std::size_t files, std::uint64_t seed) {
  std::vector<std::size_t> d(users);
  if (spec == "uniform-random") {
    std::mt19937_64 rng(seed);
    for (auto& x : d) x = static_cast<std::size_t>(rng() % files);
  } else if (spec.starts_with("all-same:")) {
    const auto v = parse_ints(spec.substr(9));
    if (v.size() != 1 || v[0] < 0) throw UsageError("all-same takes one file index");
    std::fill(d.begin(), d.end(), static_cast<std::size_t>(v[0]));
  } else {
    const auto v = parse_ints(spec.starts_with("list:") ? spec.substr(5) : spec);
    if (v.size() != users)
      throw Error(ErrorCode::IncompleteDemands, "demand list has " + std::to_string(v.size()) +
                                                    " entries for " + std::to_string(users) + " users");
    for (std::size_t i = 0; i < users; ++i) {
      if (v[i] < 0) throw UsageError("negative file index");
      d[i] = static_cast<std::size_t>(v[i]);
    }
  }
  return d;
}

void emit_or_save(const SchemeFile& f, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << scheme_file::save(f);
    return;
  }
  scheme_file::write_file(path, f);
  print_summary(f, out);
  out << "wrote " << path << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coded caching schemes from linear block codes", "codedcache"};
  app.require_subcommand(1);
  bool json_errors = false;
  unsigned threads = 1;
  if (const char* env = std::getenv("CODEDCACHE_THREADS")) {
    try {
      threads = static_cast<unsigned>(std::stoul(env));
    } catch (const std::logic_error&) {
    }
  }
  app.add_flag("--json-errors", json_errors, "Report errors as JSON on stderr");
  app.add_option("--threads", threads, "Worker threads (default $CODEDCACHE_THREADS or 1)");

  // construct
  auto* construct = app.add_subcommand("construct", "Build a generator matrix and save it");
  construct->require_subcommand(1);
  std::string out_path;
  bool no_certify = false;
  std::size_t n = 0, k = 0, t = 0, z = 0, alpha = 0, s = 0;
  std::uint32_t q = 0;
  std::string poly_text, matrix_text, in_path;
  std::vector<std::string> components;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out,-o", out_path, "Output file (stdout when omitted)");
    sub->add_flag("--no-certify", no_certify, "Skip the property check");
  };
  auto* c_mds = construct->add_subcommand("mds", "Vandermonde code");
  c_mds->add_option("--n", n)->required();
  c_mds->add_option("--k", k)->required();
  c_mds->add_option("--q", q)->required();
  auto* c_cyc = construct->add_subcommand("cyclic", "Cyclic code from a generator polynomial");
  c_cyc->add_option("--n", n)->required();
  c_cyc->add_option("--q", q)->required();
  c_cyc->add_option("--g", poly_text, "Coefficients, constant first")->required();
  auto* c_spc = construct->add_subcommand("spc", "Single parity check code");
  c_spc->add_option("--k", k)->required();
  c_spc->add_option("--q", q)->required();
  auto* c_c5 = construct->add_subcommand("claim5", "Block Vandermonde family");
  c_c5->add_option("--t", t)->required();
  c_c5->add_option("--z", z)->required();
  c_c5->add_option("--alpha", alpha)->required();
  c_c5->add_option("--q", q)->required();
  auto* c_c6 = construct->add_subcommand("claim6", "Block family with alpha = z + 1");
  c_c6->add_option("--t", t)->required();
  c_c6->add_option("--z", z)->required();
  c_c6->add_option("--q", q)->required();
  auto* c_c9 = construct->add_subcommand("claim9", "z = 2 block family over Z mod q");
  c_c9->add_option("--t", t)->required();
  c_c9->add_option("--q", q)->required();
  auto* c_kron = construct->add_subcommand("kron", "Kronecker product with an identity");
  c_kron->add_option("--in", in_path)->required();
  c_kron->add_option("--t", t)->required();
  auto* c_ext = construct->add_subcommand("extend", "Prepend copies of the first columns");
  c_ext->add_option("--in", in_path)->required();
  c_ext->add_option("--s", s)->required();
  c_ext->add_option("--alpha", alpha, "Columns per copy (default k + 1)");
  auto* c_crt = construct->add_subcommand("crt", "Cyclic code over Z mod q by CRT");
  c_crt->add_option("--n", n)->required();
  c_crt->add_option("--component", components, "p:g0,g1,... (repeatable)")->required();
  auto* c_user = construct->add_subcommand("user", "Matrix given on the command line");
  c_user->add_option("--q", q)->required();
  c_user->add_option("--matrix", matrix_text, "Rows separated by ';'")->required();
  for (auto* sub : {c_mds, c_cyc, c_spc, c_c5, c_c6, c_c9, c_kron, c_ext, c_crt, c_user}) common(sub);

  // verify
  auto* verify = app.add_subcommand("verify", "Check the consecutive column property");
  std::string file_path;
  std::size_t verify_alpha = 0;
  bool use_shortcut = false, as_json = false;
  verify->add_option("file", file_path)->required();
  verify->add_option("--alpha", verify_alpha, "Window size (default k + 1)");
  verify->add_flag("--shortcut", use_shortcut, "Single-window test for cyclic codes");
  verify->add_flag("--json", as_json);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Byte-level delivery run");
  std::size_t files = 0, bytes = 16, sim_alpha = 0;
  std::uint64_t seed = 1;
  std::string demand_spec = "uniform-random";
  bool transpose = false;
  simulate->add_option("file", file_path)->required();
  simulate->add_option("--alpha", sim_alpha, "Window size (default k + 1)");
  simulate->add_option("--files", files, "Number of files (default K)");
  simulate->add_option("--bytes", bytes, "Bytes per subfile");
  simulate->add_option("--seed", seed);
  simulate->add_option("--demands", demand_spec, "uniform-random | i,j,... | all-same:i");
  simulate->add_flag("--transpose", transpose, "Run the transposed scheme");

  // search
  auto* search = app.add_subcommand("search", "Candidate k values and budget optimum");
  std::string budget_text;
  std::uint64_t cyclic_limit = 1'000'000;
  bool csv = false;
  search->add_option("--n", n)->required();
  search->add_option("--q", q)->required();
  search->add_option("--budget", budget_text, "Subpacketization budget");
  search->add_option("--cyclic-limit", cyclic_limit);
  search->add_flag("--csv", csv);
  search->add_flag("--json", as_json);

  // compare
  auto* compare = app.add_subcommand("compare", "Comparison table against the baseline");
  std::vector<std::string> compare_files;
  bool mn = false, memory_sharing = false;
  std::uint64_t spc_family = 0;
  std::string csv_path;
  compare->add_option("files", compare_files);
  compare->add_flag("--mn", mn, "Add baseline rows");
  compare->add_flag("--memory-sharing", memory_sharing, "Add memory-sharing lower bounds");
  compare->add_option("--spc-family", spc_family, "Parity-code family for K users");
  compare->add_option("--csv", csv_path, "Write CSV here ('-' for stdout)");
  compare->add_flag("--json", as_json);

  // design
  auto* design_cmd = app.add_subcommand("design", "Design views");
  design_cmd->require_subcommand(1);
  auto* incidence = design_cmd->add_subcommand("incidence", "Incidence matrix as CSV");
  incidence->add_option("file", file_path)->required();

  std::vector<const char*> argv{"codedcache"};
  for (const auto& a : args) argv.push_back(a.c_str());

  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    if (json_errors)
      err << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << "\n";
    else
      err << "error: " << message << "\n";
    return code;
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(kExitUsage, "UsageError", e.what());
  }
  set_thread_count(threads);

  try {
    if (construct->parsed()) {
      SchemeFile f;
      auto field = [&] { return ScalarDomain::of_order(q); };
      if (c_mds->parsed()) f.generator = codes::build_mds(n, k, field());
      if (c_cyc->parsed()) {
        const auto d = field();
        f.generator = codes::build_cyclic(n, parse_poly(poly_text, d), d);
      }
      if (c_spc->parsed()) f.generator = codes::build_spc(k, field());
      if (c_c5->parsed()) f.generator = codes::build_claim5(t, z, alpha, field());
      if (c_c6->parsed()) f.generator = codes::build_claim6(t, z, field());
      if (c_c9->parsed()) f.generator = codes::build_claim9(t, field());
      if (c_kron->parsed() || c_ext->parsed()) {
        const SchemeFile base = scheme_file::read_file(in_path);
        if (!base.generator) throw UsageError(in_path + " holds no generator matrix");
        if (c_kron->parsed())
          f.generator = codes::kron_identity(*base.generator, t);
        else
          f.generator = codes::extend_ccp_alpha(*base.generator, s,
                                                alpha == 0 ? base.generator->k() + 1 : alpha);
      }
      if (c_crt->parsed()) {
        scheme_file::CrtSpec spec{n, {}};
        for (const auto& c : components) {
          const auto colon = c.find(':');
          if (colon == std::string::npos) throw UsageError("component '" + c + "' lacks 'p:'");
          const auto p = parse_ints(c.substr(0, colon));
          if (p.size() != 1 || p[0] < 2 || p[0] > 1024) throw UsageError("bad modulus in '" + c + "'");
          const auto d = ScalarDomain::prime_field(static_cast<std::uint32_t>(p[0]));
          spec.components.push_back({parse_poly(c.substr(colon + 1), d), d});
        }
        (void)codes::build_crt_cyclic(spec.components, spec.n);
        f.crt = std::move(spec);
      }
      if (c_user->parsed()) {
        std::vector<std::vector<std::int64_t>> rows;
        std::stringstream ss(matrix_text);
        std::string row;
        while (std::getline(ss, row, ';')) rows.push_back(parse_ints(row));
        f.generator.emplace(gf::Matrix::from_rows(field(), rows));
      }
      if (f.generator && !no_certify) f.certificate = codes::check_ccp(*f.generator, f.generator->k() + 1);
      emit_or_save(f, out_path, out);
      return kExitOk;
    }

    if (verify->parsed()) {
      const SchemeFile f = scheme_file::read_file(file_path);
      if (!f.generator) throw Error(ErrorCode::InvalidArgument, "verify needs a generator matrix");
      const std::size_t a = verify_alpha ? verify_alpha
                                         : (f.certificate ? f.certificate->alpha : f.generator->k() + 1);
      const codes::CcpCertificate cert =
          use_shortcut ? codes::check_ccp_cyclic_shortcut(*f.generator) : codes::check_ccp(*f.generator, a);
      if (as_json) {
        json windows = json::array();
        for (const auto& w : cert.windows)
          windows.push_back({{"a", w.a}, {"columns", w.columns}, {"satisfied", w.satisfied},
                             {"failed_deletions", w.failed_deletions}});
        out << json{{"schema", "codedcache-verify"}, {"version", 1}, {"alpha", cert.alpha},
                    {"z", cert.z}, {"shortcut", cert.shortcut}, {"satisfied", cert.satisfied},
                    {"windows", windows}}
                   .dump(2)
            << "\n";
      } else {
        for (const auto& w : cert.windows) {
          out << "window " << w.a << " columns";
          for (auto c : w.columns) out << ' ' << c;
          out << ": " << (w.satisfied ? "ok" : "FAILED");
          if (!w.failed_deletions.empty()) {
            out << " (singular after deleting position";
            for (auto p : w.failed_deletions) out << ' ' << p;
            out << ")";
          }
          out << "\n";
        }
        out << "alpha=" << cert.alpha << " z=" << cert.z << (cert.shortcut ? " shortcut" : "") << ": "
            << (cert.satisfied ? "satisfied" : "not satisfied") << "\n";
      }
      return cert.satisfied ? kExitOk : kExitFailed;
    }

    if (simulate->parsed()) {
      const SchemeFile f = scheme_file::read_file(file_path);
      const CodeShape shape = shape_of(f);
      const std::size_t a = sim_alpha ? sim_alpha : shape.k + 1;
      const caching::CachingScheme base = caching::placement(design_of(f), a);
      const caching::RecoverySetGraph graph = caching::recovery_set_graph(base.n, a);
      const std::size_t users = base.num_users;
      const std::size_t file_count = files ? files : users;
      const auto demands = parse_demands(demand_spec, users, file_count, seed);
      caching::CachingScheme scheme = base;
      caching::DeliveryPlan plan;
      if (transpose) {
        std::vector<std::size_t> canonical(users);
        std::iota(canonical.begin(), canonical.end(), 0);
        const auto s_matrix = caching::equation_subfile_matrix(
            base, caching::generate_delivery(base, graph, canonical));
        auto [ts, tp] = caching::scheme_from_eq_subfile(caching::transpose(s_matrix));
        scheme = std::move(ts);
        plan = std::move(tp);
        plan.demands = demands;
      } else {
        plan = caching::generate_delivery(base, graph, demands);
      }
      const caching::SimulationReport r = caching::simulate(scheme, plan, file_count, bytes, seed);
      const caching::Metrics expected =
          transpose ? caching::transposed_metrics(base.n, base.q, base.design->num_points(), a)
                    : caching::base_metrics(base.n, base.q, base.design->num_points(), a);
      json per_user = json::array();
      for (const auto& u : r.users)
        per_user.push_back({{"user", u.user}, {"demand", u.demand}, {"recovered", u.recovered},
                            {"missing", u.missing}, {"duplicates", u.duplicates}, {"exact", u.exact}});
      out << json{{"schema", "codedcache-simulation"},
                  {"version", 1},
                  {"transposed", transpose},
                  {"users", users},
                  {"subfiles", scheme.num_subfiles},
                  {"files", file_count},
                  {"subfile_bytes", r.subfile_bytes},
                  {"seed", seed},
                  {"equations", r.equations},
                  {"rate", rational_string(r.rate)},
                  {"expected_rate", rational_string(expected.rate)},
                  {"load_bytes", r.load_bytes},
                  {"all_exact", r.all_exact},
                  {"per_user", per_user}}
                 .dump(2)
          << "\n";
      return r.all_exact && r.rate == expected.rate ? kExitOk : kExitFailed;
    }

    if (search->parsed()) {
      const analysis::CandidateSet set = analysis::construct_candidate_set(n, q, cyclic_limit);
      std::optional<analysis::BudgetResult> best;
      std::string budget_error;
      if (!budget_text.empty()) {
        BigInt budget;
        try {
          budget = BigInt(budget_text);
        } catch (const std::exception&) {
          throw UsageError("budget '" + budget_text + "' is not an integer");
        }
        try {
          best = analysis::k_max_for_budget(set, budget);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NoFeasibleK) throw;
          budget_error = e.what();
        }
      }
      auto route = [](const analysis::CandidateEntry& e) {
        return e.route ? e.route->describe() : std::string("-");
      };
      if (as_json) {
        json rows = json::array();
        for (const auto& e : set.entries)
          rows.push_back({{"k", e.k}, {"n_prime", e.n_prime}, {"z", e.z}, {"alpha", e.alpha},
                          {"construction", e.found ? std::string(codes::to_string(e.construction)) : "-"},
                          {"found", e.found}, {"route", route(e)},
                          {"search_inconclusive", e.search_inconclusive}});
        json doc{{"schema", "codedcache-search"}, {"version", 1}, {"n", n}, {"q", q}, {"rows", rows}};
        if (best) doc["k_max"] = {{"k", best->k_max}, {"F_s", best->subfiles.str()}, {"g_max", best->g_max}};
        if (!budget_error.empty()) doc["k_max_error"] = budget_error;
        out << doc.dump(2) << "\n";
      } else if (csv) {
        out << "k,n_prime,z,alpha,construction,found,route\n";
        for (const auto& e : set.entries)
          out << e.k << ',' << e.n_prime << ',' << e.z << ',' << e.alpha << ','
              << (e.found ? codes::to_string(e.construction) : "-") << ',' << (e.found ? 1 : 0) << ",\""
              << route(e) << "\"\n";
      } else {
        out << std::left << "   " << std::setw(4) << "k" << std::setw(5) << "n'" << std::setw(5) << "z"
            << std::setw(7) << "alpha" << std::setw(14) << "construction" << std::setw(7) << "found"
            << "route\n";
        for (auto it = set.entries.rbegin(); it != set.entries.rend(); ++it) {
          const auto& e = *it;
          out << (best && best->k_max == e.k ? " * " : "   ") << std::setw(4) << e.k << std::setw(5)
              << e.n_prime << std::setw(5) << e.z << std::setw(7) << e.alpha << std::setw(14)
              << (e.found ? codes::to_string(e.construction) : "-") << std::setw(7)
              << (e.found ? "yes" : "no") << route(e) << (e.search_inconclusive ? " [search limit hit]" : "")
              << "\n";
        }
      }
      if (!as_json) {
        if (best)
          out << "k_max=" << best->k_max << " F_s=" << best->subfiles << " g_max=" << best->g_max << "\n";
        if (!budget_error.empty()) out << budget_error << "\n";
      }
      return budget_error.empty() ? kExitOk : kExitDomain;
    }

    if (compare->parsed()) {
      if (compare_files.empty() && spc_family == 0)
        throw UsageError("compare needs scheme files or --spc-family");
      std::vector<analysis::ComparisonRow> rows;
      for (const auto& path : compare_files) {
        const SchemeFile f = scheme_file::read_file(path);
        const CodeShape sh = shape_of(f);
        for (auto& r : analysis::scheme_rows(path, sh.n, sh.k, sh.q, num_points(f), sh.k + 1))
          rows.push_back(std::move(r));
      }
      if (spc_family) {
        for (auto& r : analysis::spc_family_rows(spc_family)) rows.push_back(std::move(r));
      }
      rows = analysis::compare(std::move(rows), {.mn = mn});
      json bounds = json::array();
      std::ostringstream bound_text;
      if (memory_sharing) {
        for (const auto& r : rows) {
          if (r.scheme_id == "MN") continue;
          try {
            const auto b = analysis::memory_sharing_bound(static_cast<std::uint64_t>(r.users),
                                                          r.m_over_n, r.rate);
            bounds.push_back({{"scheme_id", r.scheme_id}, {"M_over_N", rational_string(r.m_over_n)},
                              {"R", rational_string(r.rate)}, {"M_star_over_N", b.m_star},
                              {"M_prime_over_N", rational_string(b.m_prime)},
                              {"F_s_lower", b.subfiles_lower.str()}, {"F_s", r.subfiles.str()}});
            bound_text << "memory-sharing " << r.scheme_id << ": M*/N=" << std::setprecision(6)
                       << b.m_star << " M'/N=" << rational_string(b.m_prime)
                       << " F_s^MS>=" << b.subfiles_lower << " vs F_s=" << r.subfiles << "\n";
          } catch (const Error& e) {
            if (e.code() != ErrorCode::NoSolutionInRange) throw;
            bound_text << "memory-sharing " << r.scheme_id << ": no solution in range\n";
          }
        }
      }
      if (!csv_path.empty()) {
        if (csv_path == "-") {
          out << analysis::to_csv(rows);
        } else {
          std::ofstream file(csv_path);
          if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + csv_path);
          file << analysis::to_csv(rows);
        }
      }
      if (as_json) {
        json doc = json::parse(analysis::to_json(rows));
        if (memory_sharing) doc["memory_sharing"] = bounds;
        out << doc.dump(2) << "\n";
      } else if (csv_path != "-") {
        out << std::left << std::setw(36) << "scheme_id" << std::setw(6) << "K" << std::setw(10)
            << "M/N" << std::setw(12) << "R" << std::setw(24) << "F_s" << "gain\n";
        for (const auto& r : rows)
          out << std::setw(36) << r.scheme_id << std::setw(6) << r.users << std::setw(10)
              << rational_string(r.m_over_n) << std::setw(12) << rational_string(r.rate)
              << std::setw(24) << r.subfiles << rational_string(r.gain) << "\n";
        out << bound_text.str();
      }
      return kExitOk;
    }

    if (incidence->parsed()) {
      out << design::incidence_csv(design_of(scheme_file::read_file(file_path)));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    return fail(kExitUsage, "UsageError", e.what());
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::DecodeFailure ? kExitFailed : kExitDomain;
    return fail(code, std::string(to_string(e.code())), e.what());
  }
  return fail(kExitUsage, "UsageError", "no command given");
}

}  // namespace codedcache::cli
