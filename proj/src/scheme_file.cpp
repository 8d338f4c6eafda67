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

#include "codedcache/scheme_file.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "codedcache/error.hpp"

namespace codedcache::scheme_file {

using nlohmann::json;
using codes::CcpCertificate;
using codes::Provenance;
using codes::WindowVerdict;
using gf::ScalarDomain;

bool operator==(const CcpCertificate& a, const CcpCertificate& b) noexcept {
  if (a.alpha != b.alpha || a.z != b.z || a.satisfied != b.satisfied || a.shortcut != b.shortcut ||
      a.windows.size() != b.windows.size())
    return false;
  for (std::size_t i = 0; i < a.windows.size(); ++i) {
    const WindowVerdict& x = a.windows[i];
    const WindowVerdict& y = b.windows[i];
    if (x.a != y.a || x.columns != y.columns || x.satisfied != y.satisfied ||
        x.failed_deletions != y.failed_deletions || x.unit_rows != y.unit_rows)
      return false;
  }
  return true;
}

bool operator==(const SchemeFile& a, const SchemeFile& b) noexcept {
  if (a.generator.has_value() != b.generator.has_value() || a.crt.has_value() != b.crt.has_value())
    return false;
  if (a.generator && !(a.generator->matrix() == b.generator->matrix() &&
                       a.generator->provenance() == b.generator->provenance()))
    return false;
  if (a.crt) {
    if (a.crt->n != b.crt->n || a.crt->components.size() != b.crt->components.size()) return false;
    for (std::size_t i = 0; i < a.crt->components.size(); ++i)
      if (a.crt->components[i].gen_poly != b.crt->components[i].gen_poly ||
          !(a.crt->components[i].domain == b.crt->components[i].domain))
        return false;
  }
  if (a.certificate.has_value() != b.certificate.has_value()) return false;
  if (a.certificate && !(*a.certificate == *b.certificate)) return false;
  return a.digests == b.digests;
}

namespace {

json domain_json(const ScalarDomain& d) {
  json j{{"kind", d.is_field() ? "field" : "ring"}, {"order", d.order()}};
  if (d.is_field()) {
    j["p"] = d.characteristic();
    j["m"] = d.degree();
    j["modulus"] = d.modulus();
  }
  return j;
}

ScalarDomain domain_from(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "ring") return ScalarDomain::ring(j.at("order").get<std::uint32_t>());
  if (kind != "field") throw Error(ErrorCode::ParseError, "unknown domain kind " + kind);
  const auto p = j.at("p").get<std::uint32_t>();
  const auto m = j.at("m").get<std::uint32_t>();
  ScalarDomain d = m == 1 ? ScalarDomain::prime_field(p)
                          : ScalarDomain::extension_field(p, j.at("modulus").get<gf::Polynomial>());
  if (j.contains("order") && j.at("order").get<std::uint32_t>() != d.order())
    throw Error(ErrorCode::ParseError, "domain order does not match p^m");
  return d;
}

json provenance_json(const Provenance& p) {
  json j{{"kind", std::string(codes::to_string(p.kind))}, {"params", p.params}};
  if (!p.gen_poly.empty()) j["gen_poly"] = p.gen_poly;
  if (p.base) j["base"] = provenance_json(*p.base);
  return j;
}

Provenance provenance_from(const json& j) {
  Provenance p;
  const auto kind = codes::construction_from_string(j.at("kind").get<std::string>());
  if (!kind) throw Error(ErrorCode::ParseError, "unknown construction " + j.at("kind").dump());
  p.kind = *kind;
  if (j.contains("params")) p.params = j.at("params").get<std::map<std::string, std::int64_t>>();
  if (j.contains("gen_poly")) p.gen_poly = j.at("gen_poly").get<gf::Polynomial>();
  if (j.contains("base")) p.base = std::make_shared<const Provenance>(provenance_from(j.at("base")));
  return p;
}

json certificate_json(const CcpCertificate& c) {
  json windows = json::array();
  for (const WindowVerdict& w : c.windows)
    windows.push_back({{"a", w.a},
                       {"columns", w.columns},
                       {"satisfied", w.satisfied},
                       {"failed_deletions", w.failed_deletions},
                       {"unit_rows", w.unit_rows}});
  return {{"alpha", c.alpha},
          {"z", c.z},
          {"satisfied", c.satisfied},
          {"shortcut", c.shortcut},
          {"windows", windows}};
}

CcpCertificate certificate_from(const json& j) {
  CcpCertificate c;
  c.alpha = j.at("alpha").get<std::size_t>();
  c.z = j.at("z").get<std::size_t>();
  c.satisfied = j.at("satisfied").get<bool>();
  c.shortcut = j.value("shortcut", false);
  for (const json& w : j.at("windows")) {
    WindowVerdict v;
    v.a = w.at("a").get<std::size_t>();
    v.columns = w.at("columns").get<std::vector<std::size_t>>();
    v.satisfied = w.at("satisfied").get<bool>();
    v.failed_deletions = w.value("failed_deletions", std::vector<std::size_t>{});
    v.unit_rows = w.value("unit_rows", std::vector<std::size_t>{});
    c.windows.push_back(std::move(v));
  }
  return c;
}

}  // namespace

std::string save(const SchemeFile& file) {
  json doc{{"format", "codedcache-scheme"}, {"version", kFormatVersion}};
  if (file.generator) {
    doc["domain"] = domain_json(file.generator->domain());
    doc["generator"] = file.generator->matrix().to_rows();
    doc["provenance"] = provenance_json(file.generator->provenance());
  }
  if (file.crt) {
    json comps = json::array();
    for (const auto& c : file.crt->components)
      comps.push_back({{"q", c.domain.order()}, {"gen_poly", c.gen_poly}});
    doc["crt"] = {{"n", file.crt->n}, {"components", comps}};
  }
  if (file.certificate) doc["certificate"] = certificate_json(*file.certificate);
  if (!file.digests.empty()) doc["digests"] = file.digests;
  return doc.dump(2) + "\n";
}

SchemeFile load(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (doc.value("format", "") != "codedcache-scheme")
      throw Error(ErrorCode::ParseError, "not a codedcache scheme document");
    if (doc.at("version").get<int>() != kFormatVersion)
      throw Error(ErrorCode::ParseError, "unsupported version " + doc.at("version").dump());
    SchemeFile file;
    if (doc.contains("generator")) {
      const ScalarDomain d = domain_from(doc.at("domain"));
      const auto rows = doc.at("generator").get<std::vector<std::vector<std::int64_t>>>();
      for (const auto& r : rows)
        for (std::int64_t v : r)
          if (v < 0 || v >= static_cast<std::int64_t>(d.order()))
            throw Error(ErrorCode::ParseError,
                        "entry " + std::to_string(v) + " is not an element of " + d.name());
      Provenance p = doc.contains("provenance") ? provenance_from(doc.at("provenance")) : Provenance{};
      file.generator.emplace(gf::Matrix::from_rows(d, rows), std::move(p));
    }
    if (doc.contains("crt")) {
      CrtSpec spec;
      spec.n = doc.at("crt").at("n").get<std::size_t>();
      for (const json& c : doc.at("crt").at("components"))
        spec.components.push_back(
            {c.at("gen_poly").get<gf::Polynomial>(), ScalarDomain::prime_field(c.at("q").get<std::uint32_t>())});
      file.crt = std::move(spec);
    }
    if (!file.generator && !file.crt)
      throw Error(ErrorCode::ParseError, "document holds neither a generator nor a CRT source");
    if (doc.contains("certificate")) file.certificate = certificate_from(doc.at("certificate"));
    if (doc.contains("digests")) file.digests = doc.at("digests").get<std::map<std::string, std::string>>();
    return file;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, e.what());
  }
}

SchemeFile read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load(buf.str());
}

void write_file(const std::string& path, const SchemeFile& file) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << save(file);
  if (!out) throw Error(ErrorCode::InvalidArgument, "failed writing " + path);
}

bool certificate_replays(const SchemeFile& file) {
  if (!file.certificate || !file.generator) return false;
  const CcpCertificate& stored = *file.certificate;
  const CcpCertificate fresh = stored.shortcut ? codes::check_ccp_cyclic_shortcut(*file.generator)
                                               : codes::check_ccp(*file.generator, stored.alpha);
  return fresh == stored;
}

}  // namespace codedcache::scheme_file
