// Copyright 2026 The qiaswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QIASWAP_PARALLEL_H_
#define QIASWAP_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace qiaswap {

/// Number of i in [0, count) with predicate(i) true. Work is split across
/// `threads` workers (0 means hardware concurrency); the first exception
/// thrown by any worker is rethrown.
std::size_t parallel_count(std::size_t count, unsigned threads,
                           const std::function<bool(std::size_t)>& predicate);

}  // namespace qiaswap

#endif  // QIASWAP_PARALLEL_H_
