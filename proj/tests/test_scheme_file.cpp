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

#include <filesystem>

#include <json.hpp>

#include "codedcache/error.hpp"
#include "codedcache/scheme_file.hpp"

using namespace codedcache;
using namespace codedcache::scheme_file;
using gf::ScalarDomain;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

SchemeFile certified(codes::GeneratorMatrix g) {
  SchemeFile f;
  f.certificate = codes::check_ccp(g, g.k() + 1);
  f.generator = std::move(g);
  return f;
}

}  // namespace

TEST_CASE("round trips") {
  const std::vector<SchemeFile> files = {
      certified(codes::build_spc(3, ScalarDomain::prime_field(2))),
      certified(codes::build_mds(4, 2, ScalarDomain::extension_field(2, 2))),
      certified(codes::build_claim9(2, ScalarDomain::ring(6))),
      certified(codes::extend_ccp(codes::build_cyclic(3, {1, 1}, ScalarDomain::prime_field(2)), 1)),
      certified(codes::build_claim6(2, 3, ScalarDomain::prime_field(5))),
  };
  for (const SchemeFile& f : files) {
    const std::string text = save(f);
    const SchemeFile back = load(text);
    CHECK(back == f);
    CHECK(save(back) == text);
    CHECK(certificate_replays(back));
    // The provenance alone rebuilds the same matrix.
    CHECK(codes::replay(back.generator->provenance(), back.generator->domain()).matrix() ==
          f.generator->matrix());
  }
}

TEST_CASE("CRT sources round trip") {
  SchemeFile f;
  f.crt = CrtSpec{3,
                  {{{1, 1}, ScalarDomain::prime_field(2)}, {{2, 1}, ScalarDomain::prime_field(3)}}};
  const SchemeFile back = load(save(f));
  CHECK(back == f);
  CHECK_FALSE(back.generator.has_value());
  CHECK(codes::build_crt_cyclic(back.crt->components, back.crt->n).num_codewords() == 36);
}

TEST_CASE("files on disk") {
  const auto path = std::filesystem::temp_directory_path() / "codedcache_scheme_file_test.json";
  SchemeFile f = certified(codes::build_spc(2, ScalarDomain::prime_field(3)));
  f.digests["note"] = "abc";
  write_file(path.string(), f);
  CHECK(read_file(path.string()) == f);
  std::filesystem::remove(path);
  CHECK(code_of([&] { (void)read_file(path.string()); }) == ErrorCode::ParseError);
}

TEST_CASE("tampered certificates do not replay") {
  SchemeFile f = certified(codes::build_spc(2, ScalarDomain::prime_field(2)));
  f.certificate->windows[0].satisfied = false;
  CHECK_FALSE(certificate_replays(f));
  f.certificate.reset();
  CHECK_FALSE(certificate_replays(f));

  // Same certificate, different matrix.
  SchemeFile g = certified(codes::build_spc(2, ScalarDomain::prime_field(2)));
  auto doc = nlohmann::json::parse(save(g));
  doc["generator"] = {{1, 0, 1}, {0, 1, 0}};
  CHECK_FALSE(certificate_replays(load(doc.dump())));
}

TEST_CASE("malformed documents") {
  const std::string good = save(certified(codes::build_spc(2, ScalarDomain::extension_field(2, 2))));
  auto edit = [&](auto&& fn) {
    auto doc = nlohmann::json::parse(good);
    fn(doc);
    return doc.dump();
  };
  CHECK(code_of([&] { (void)load("{not json"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { (void)load("[]"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { (void)load(edit([](auto& d) { d["version"] = 2; })); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { (void)load(edit([](auto& d) { d["format"] = "other"; })); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([&] { (void)load(edit([](auto& d) { d["generator"][0][0] = 4; })); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([&] { (void)load(edit([](auto& d) { d["generator"][0][0] = -1; })); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([&] { (void)load(edit([](auto& d) { d["generator"][1] = {1, 1}; })); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([&] { (void)load(edit([](auto& d) { d["generator"][0][1] = "x"; })); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([&] { (void)load(edit([](auto& d) { d["domain"]["order"] = 8; })); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([&] { (void)load(edit([](auto& d) { d["domain"]["kind"] = "module"; })); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([&] { (void)load(edit([](auto& d) { d["provenance"]["kind"] = "Magic"; })); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([&] { (void)load(edit([](auto& d) { d.erase("generator"); })); }) ==
        ErrorCode::ParseError);
}
