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
 * @file scheme_file.hpp
 * @brief Versioned JSON documents holding a code and, optionally, its
 * certificate.
 *
 * Layout (version 1):
 *
 *     {
 *       "format": "codedcache-scheme", "version": 1,
 *       "domain": {"kind": "field", "p": 2, "m": 2, "order": 4, "modulus": [1, 1, 1]},
 *       "generator": [[1, 0, 1], [0, 1, 1]],
 *       "provenance": {"kind": "Spc", "params": {"k": 2}},
 *       "certificate": {"alpha": 3, "z": 1, "satisfied": true, "shortcut": false,
 *                       "windows": [{"a": 0, "columns": [0, 1, 2], "satisfied": true,
 *                                    "failed_deletions": [], "unit_rows": []}]}
 *     }
 *
 * A CRT source stores "crt": {"n": 3, "components": [{"q": 2, "gen_poly": [1, 1]}]}
 * in place of "generator". Entries are integer element codes.
 */

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codedcache/codes.hpp"

namespace codedcache::scheme_file {

inline constexpr int kFormatVersion = 1;

struct CrtSpec {
  std::size_t n = 0;
  std::vector<codes::CrtComponent> components;
};

struct SchemeFile {
  std::optional<codes::GeneratorMatrix> generator;
  std::optional<CrtSpec> crt;
  std::optional<codes::CcpCertificate> certificate;
  std::map<std::string, std::string> digests;
};

bool operator==(const codes::CcpCertificate& a, const codes::CcpCertificate& b) noexcept;
bool operator==(const SchemeFile& a, const SchemeFile& b) noexcept;

std::string save(const SchemeFile& file);
/// Throws ParseError for malformed text, unknown versions and matrices that
/// do not fit the declared domain.
SchemeFile load(std::string_view text);

SchemeFile read_file(const std::string& path);
void write_file(const std::string& path, const SchemeFile& file);

/// Re-runs the stored check against the stored matrix; true when every
/// verdict matches.
bool certificate_replays(const SchemeFile& file);

}  // namespace codedcache::scheme_file
