// Copyright 2026 The motifwalk Authors
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


#ifndef MOTIFWALK_PARALLEL_HPP_
#define MOTIFWALK_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace motifwalk {

/// 0 means one worker per hardware thread.
std::size_t resolve_threads(std::size_t requested);

/// Calls body(worker, index) for every index in [0, count), handing indices
/// out in ascending order to up to `threads` workers. The first exception
/// stops further hand-outs and is rethrown after all workers finish.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t worker, std::size_t index)>& body);

}  // namespace motifwalk

#endif  // MOTIFWALK_PARALLEL_HPP_
