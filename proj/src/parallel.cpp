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

#include "codedcache/parallel.hpp"

namespace codedcache {

namespace {
std::atomic<unsigned> g_threads{1};
}  // namespace

void set_thread_count(unsigned n) noexcept { g_threads = n == 0 ? 1 : n; }

unsigned thread_count() noexcept { return g_threads; }

}  // namespace codedcache
