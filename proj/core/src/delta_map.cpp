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

#include "qcat/delta_map.hpp"

#include <algorithm>
#include <sstream>

#include "qcat/error.hpp"

namespace qcat {

DeltaMap::DeltaMap(int target, std::vector<int> values)
    : target_(target), values_(std::move(values)) {
  if (values_.empty()) throw InputError("DeltaMap: empty value list");
  if (target_ < 0) throw InputError("DeltaMap: negative target");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] > target_)
      throw InputError("DeltaMap: value out of range at position " + std::to_string(i));
    if (i > 0 && values_[i] < values_[i - 1])
      throw InputError("DeltaMap: values decrease at position " + std::to_string(i));
  }
}

DeltaMap DeltaMap::identity(int n) {
  std::vector<int> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = i;
  return DeltaMap(n, std::move(v));
}

DeltaMap DeltaMap::coface(int n, int i) {
  std::vector<int> v(n);
  for (int k = 0; k < n; ++k) v[k] = k < i ? k : k + 1;
  return DeltaMap(n, std::move(v));
}

DeltaMap DeltaMap::codegeneracy(int n, int i) {
  std::vector<int> v(n + 2);
  for (int k = 0; k <= n + 1; ++k) v[k] = k <= i ? k : k - 1;
  return DeltaMap(n, std::move(v));
}

std::vector<DeltaMap> DeltaMap::all(int a, int b) {
  std::vector<DeltaMap> out;
  std::vector<int> v(a + 1, 0);
  while (true) {
    out.emplace_back(b, v);
    int k = a;
    while (k >= 0 && v[k] == b) --k;
    if (k < 0) break;
    ++v[k];
    for (int j = k + 1; j <= a; ++j) v[j] = v[k];
  }
  return out;
}

bool DeltaMap::injective() const {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] == values_[i - 1]) return false;
  return true;
}

bool DeltaMap::surjective() const {
  if (values_.front() != 0 || values_.back() != target_) return false;
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] > values_[i - 1] + 1) return false;
  return true;
}

DeltaMap DeltaMap::reversed() const {
  const int a = source();
  std::vector<int> v(a + 1);
  for (int i = 0; i <= a; ++i) v[i] = target_ - values_[a - i];
  return DeltaMap(target_, std::move(v));
}

std::pair<DeltaMap, DeltaMap> DeltaMap::factor() const {
  std::vector<int> image;
  std::vector<int> epi(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (image.empty() || image.back() != values_[i]) image.push_back(values_[i]);
    epi[i] = static_cast<int>(image.size()) - 1;
  }
  const int k = static_cast<int>(image.size()) - 1;
  return {DeltaMap(k, std::move(epi)), DeltaMap(target_, std::move(image))};
}

DeltaMap DeltaMap::after(const DeltaMap& inner) const {
  std::vector<int> v(inner.values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[inner.values_[i]];
  return DeltaMap(target_, std::move(v));
}

std::vector<int> DeltaMap::degeneracy_word() const {
  std::vector<int> word;
  for (int p = source() - 1; p >= 0; --p)
    if (values_[p] == values_[p + 1]) word.push_back(p);
  return word;
}

DeltaMap DeltaMap::from_degeneracy_word(int n, const std::vector<int>& word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 0 || word[i] >= n)
      throw InputError("degeneracy word: index " + std::to_string(word[i]) + " out of range");
    if (i > 0 && word[i] >= word[i - 1])
      throw InputError("degeneracy word: indices must be strictly decreasing");
  }
  std::vector<int> v(n + 1, 0);
  for (int p = 1; p <= n; ++p) {
    const bool repeat = std::find(word.begin(), word.end(), p - 1) != word.end();
    v[p] = v[p - 1] + (repeat ? 0 : 1);
  }
  const int k = n - static_cast<int>(word.size());
  return DeltaMap(k, std::move(v));
}

std::string DeltaMap::str() const {
  std::ostringstream os;
  os << '[' << source() << "->" << target_ << ':';
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
  os << ']';
  return os.str();
}

}  // namespace qcat
