// Copyright 2026 The qcat Authors.
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

#pragma once

#include <functional>

namespace qcat {

/// Worker count used by parallel_for (default 1).
int thread_count();
void set_thread_count(int n);

/// Runs fn(0..n-1) on up to thread_count() threads. Callers write results
/// into per-index slots, so output does not depend on scheduling.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace qcat
