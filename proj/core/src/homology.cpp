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

#include "qcat/homology.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <unordered_map>

#include "qcat/error.hpp"

namespace qcat {

void IntMatrix::add(int r, int c, const BigInt& v) {
  if (v == 0) return;
  auto& row = data[static_cast<std::size_t>(r)];
  auto [it, fresh] = row.emplace(c, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  }
}

namespace {

class Reducer {
 public:
  explicit Reducer(IntMatrix m) : rows_(std::move(m.data)), cols_(static_cast<std::size_t>(m.cols)) {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) cols_[c].insert(static_cast<int>(r));
  }

  SmithForm run() {
    eliminate_units();
    eliminate_general();
    return normalize();
  }

 private:
  // rows_[dst] -= q * rows_[src]
  void row_axpy(int dst, int src, const BigInt& q) {
    auto& d = rows_[dst];
    for (const auto& [c, v] : rows_[src]) {
      auto [it, fresh] = d.emplace(c, -q * v);
      if (fresh) {
        cols_[c].insert(dst);
      } else {
        it->second -= q * v;
        if (it->second == 0) {
          d.erase(it);
          cols_[c].erase(dst);
        }
      }
    }
  }

  // column dst -= q * column src
  void col_axpy(int dst, int src, const BigInt& q) {
    for (int r : std::vector<int>(cols_[src].begin(), cols_[src].end())) {
      auto& row = rows_[r];
      const BigInt delta = q * row.at(src);
      auto [it, fresh] = row.emplace(dst, -delta);
      if (fresh) {
        cols_[dst].insert(r);
      } else {
        it->second -= delta;
        if (it->second == 0) {
          row.erase(it);
          cols_[dst].erase(r);
        }
      }
    }
  }

  void drop_row(int r) {
    for (const auto& [c, v] : rows_[r]) cols_[c].erase(r);
    rows_[r].clear();
  }

  void eliminate_units() {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t c = 0; c < cols_.size(); ++c) {
        int best = -1;
        for (int r : cols_[c]) {
          const BigInt& v = rows_[r].at(static_cast<int>(c));
          if ((v == 1 || v == -1) &&
              (best < 0 || rows_[r].size() < rows_[best].size()))
            best = r;
        }
        if (best < 0) continue;
        const BigInt v = rows_[best].at(static_cast<int>(c));
        for (int r : std::vector<int>(cols_[c].begin(), cols_[c].end()))
          if (r != best) row_axpy(r, best, rows_[r].at(static_cast<int>(c)) * v);
        drop_row(best);
        diagonal_.push_back(1);
        progress = true;
      }
    }
  }

  void eliminate_general() {
    while (true) {
      int pr = -1, pc = -1;
      BigInt best;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (const auto& [c, v] : rows_[r]) {
          BigInt a = abs(v);
          if (pr < 0 || a < best) {
            best = a;
            pr = static_cast<int>(r);
            pc = c;
          }
        }
      }
      if (pr < 0) return;
      const BigInt v = rows_[pr].at(pc);
      bool clean = true;
      for (int r : std::vector<int>(cols_[pc].begin(), cols_[pc].end())) {
        if (r == pr) continue;
        const BigInt q = rows_[r].at(pc) / v;
        if (q != 0) row_axpy(r, pr, q);
        if (rows_[r].count(pc)) clean = false;
      }
      if (!clean) continue;
      std::vector<std::pair<int, BigInt>> others;
      for (const auto& [c, a] : rows_[pr])
        if (c != pc) others.emplace_back(c, a);
      for (const auto& [c, a] : others) {
        const BigInt q = a / v;
        if (q != 0) col_axpy(c, pc, q);
        if (rows_[pr].count(c)) clean = false;
      }
      if (!clean) continue;
      drop_row(pr);
      diagonal_.push_back(abs(v));
    }
  }

  SmithForm normalize() {
    std::vector<BigInt> big;
    int units = 0;
    for (const auto& d : diagonal_) {
      if (d == 1) {
        ++units;
      } else {
        big.push_back(d);
      }
    }
    // Turn the diagonal into a divisibility chain.
    for (std::size_t i = 0; i < big.size(); ++i) {
      for (std::size_t j = i + 1; j < big.size(); ++j) {
        BigInt g = gcd(big[i], big[j]);
        BigInt l = big[i] / g * big[j];
        big[i] = g;
        big[j] = l;
      }
    }
    SmithForm out;
    out.rank = static_cast<int>(diagonal_.size());
    out.invariants.assign(static_cast<std::size_t>(units), BigInt(1));
    for (auto& d : big) out.invariants.push_back(std::move(d));
    std::stable_sort(out.invariants.begin(), out.invariants.end());
    return out;
  }

  std::vector<std::map<int, BigInt>> rows_;
  std::vector<std::set<int>> cols_;
  std::vector<BigInt> diagonal_;
};

}  // namespace

SmithForm smith_form(IntMatrix m) { return Reducer(std::move(m)).run(); }

IntMatrix boundary_matrix(const SimplicialSet& x, int k) {
  x.require_depth(k, "boundary");
  IntMatrix m(x.count(k), x.count(k - 1));
  if (k <= 0) return m;
  for (int i = 0; i < x.count(k); ++i) {
    const auto& fs = x.faces({k, i});
    for (int j = 0; j <= k; ++j)
      if (fs[j].nondegenerate()) m.add(i, fs[j].base.index, (j % 2) ? -1 : 1);
  }
  return m;
}

std::string HomologyGroup::str() const {
  std::string s;
  if (betti > 0) s = betti == 1 ? "Z" : "Z^" + std::to_string(betti);
  for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + to_string(t));
  return s.empty() ? "0" : s;
}

std::ostream& operator<<(std::ostream& os, const HomologyGroup& g) {
  return os << "H" << g.degree << " = " << g.str();
}

std::ostream& operator<<(std::ostream& os, const HomologyReport& h) {
  for (std::size_t k = 0; k < h.groups.size(); ++k) os << (k ? ", " : "") << h.groups[k];
  return os;
}

long long HomologyReport::euler_characteristic() const {
  long long chi = 0;
  for (const auto& g : groups) chi += (g.degree % 2 ? -1 : 1) * static_cast<long long>(g.betti);
  return chi;
}

HomologyReport homology(const SimplicialSet& x, std::optional<int> through) {
  const int stored = x.truncation() ? *x.truncation() - 1 : std::max(x.dimension(), 0);
  const int top = through.value_or(stored);
  if (x.truncation() && top > stored)
    throw DepthError("homology through degree " + std::to_string(top) +
                     " needs simplices through dimension " + std::to_string(top + 1));
  HomologyReport rep;
  rep.valid_through = top;
  // ranks[k] = rank of the boundary C_k -> C_{k-1}.
  std::vector<SmithForm> forms(static_cast<std::size_t>(top + 2));
  for (int k = 1; k <= top + 1; ++k)
    if (x.stored_through(k)) forms[k] = smith_form(boundary_matrix(x, k));
  for (int k = 0; k <= top; ++k) {
    HomologyGroup g;
    g.degree = k;
    g.betti = x.count(k) - forms[k].rank - forms[k + 1].rank;
    for (const auto& d : forms[k + 1].invariants)
      if (d > 1) g.torsion.push_back(d);
    rep.groups.push_back(std::move(g));
  }
  return rep;
}

}  // namespace qcat
