// Copyright 2026 The gnmd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GNMD_PARALLEL_HPP_
#define GNMD_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace gnmd {

// Environment variable capping worker threads.
inline constexpr const char* kThreadsEnv = "GNMD_THREADS";

// Worker count: GNMD_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t worker_count();

// Calls body(i) for every i in [0, count) across up to `workers` threads.
// Iterations must write only to their own slots; the first exception thrown
// by any iteration is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t workers = worker_count());

}  // namespace gnmd

#endif  // GNMD_PARALLEL_HPP_
