// Copyright 2026 The qfam Authors
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

#include "qfam/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qfam::semigroup {

CayleyTable::CayleyTable(int order, std::vector<int> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order < 1 || order > kMaxOrder) {
    throw std::invalid_argument("table order " + std::to_string(order) +
                                " outside supported range [1," +
                                std::to_string(kMaxOrder) + "]");
  }
  if (entries_.size() != static_cast<size_t>(order) * order) {
    throw std::invalid_argument(
        "table must have exactly " + std::to_string(order * order) +
        " entries, got " + std::to_string(entries_.size()));
  }
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0 || entries_[i] >= order) {
      throw std::invalid_argument(
          "entry " + std::to_string(entries_[i]) + " out of range at row " +
          std::to_string(i / order) + ", col " + std::to_string(i % order));
    }
  }
}

CayleyTable CayleyTable::relabeled(const std::vector<int>& perm) const {
  std::vector<int> inv(order_);
  for (int i = 0; i < order_; ++i) inv[perm[i]] = i;
  std::vector<int> out(entries_.size());
  for (int r = 0; r < order_; ++r)
    for (int s = 0; s < order_; ++s)
      out[r * order_ + s] = perm[xi(inv[r], inv[s])];
  return CayleyTable(order_, std::move(out));
}

std::string CayleyTable::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < order_; ++r) {
    os << (r ? ",[" : "[");
    for (int s = 0; s < order_; ++s) os << (s ? "," : "") << xi(r, s);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string NonAssocWitness::to_string() const {
  std::ostringstream os;
  os << "(" << r << "," << s << "," << t << "): (" << r << "·" << s << ")·"
     << t << " = " << left << ", " << r << "·(" << s << "·" << t
     << ") = " << right;
  return os.str();
}

AssociativityResult validate_associativity(const CayleyTable& table) {
  const int n = table.order();
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        const int left = table.xi(table.xi(r, s), t);
        const int right = table.xi(r, table.xi(s, t));
        if (left != right) return NonAssocWitness{r, s, t, left, right};
      }
  return SemigroupRecord(table, find_identity(table));
}

std::optional<int> find_identity(const CayleyTable& table) {
  const int n = table.order();
  std::optional<int> found;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int s = 0; s < n && ok; ++s)
      ok = table.xi(e, s) == s && table.xi(s, e) == s;
    if (!ok) continue;
    if (found) {
      throw std::logic_error("two distinct two-sided identities " +
                             std::to_string(*found) + " and " +
                             std::to_string(e) + ": table data is corrupt");
    }
    found = e;
  }
  return found;
}

std::optional<int> find_identity(const SemigroupRecord& rec) {
  return find_identity(rec.table());
}

namespace {

constexpr int kMaxMagmaOrder = 3;        // 3^9 = 19,683 tables
constexpr int kMaxAssociativeOrder = 4;  // pruned search

// True when `table` is lexicographically minimal among its relabelings.
bool is_canonical(const CayleyTable& table) {
  const int n = table.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (table.relabeled(perm) < table) return false;
  }
  return true;
}

}  // namespace

TableEnumerator::TableEnumerator(int order, EnumerateOptions opts)
    : order_(order), opts_(opts), cells_(order * order, 0) {
  const int cap = opts.filter == TableFilter::kAssociativeOnly
                      ? kMaxAssociativeOrder
                      : kMaxMagmaOrder;
  if (order < 1 || order > cap) {
    throw std::invalid_argument(
        "enumeration order " + std::to_string(order) +
        " outside supported range [1," + std::to_string(cap) + "] for " +
        (opts.filter == TableFilter::kAssociativeOnly ? "associative-only"
                                                      : "all-magmas") +
        " mode");
  }
}

// Checks every triple whose two bracketings are fully determined by the
// cells assigned so far and that involves the most recently assigned cell.
// Cells are assigned row-major, so cell (r,s) is determined iff
// r*order + s < pos_.
bool TableEnumerator::partial_ok(int last_cell) const {
  if (opts_.filter != TableFilter::kAssociativeOnly) return true;
  const int n = order_;
  auto known = [&](int r, int s) { return r * n + s <= last_cell; };
  auto get = [&](int r, int s) { return cells_[r * n + s]; };
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      if (!known(r, s)) continue;
      const int rs = get(r, s);
      for (int t = 0; t < n; ++t) {
        if (!known(s, t)) continue;
        const int st = get(s, t);
        if (!known(rs, t) || !known(r, st)) continue;
        if (get(rs, t) != get(r, st)) return false;
      }
    }
  return true;
}

// Depth-first over cells in row-major order, values ascending: completed
// tables therefore come out in lexicographic order.
bool TableEnumerator::advance() {
  const int total = order_ * order_;
  if (done_) return false;
  int trial;
  if (!started_) {
    started_ = true;
    pos_ = 0;
    trial = 0;
  } else {
    pos_ = total - 1;  // backtrack off the previous solution
    trial = cells_[pos_] + 1;
  }
  while (true) {
    if (trial >= order_) {
      if (pos_ == 0) {
        done_ = true;
        return false;
      }
      --pos_;
      trial = cells_[pos_] + 1;
      continue;
    }
    cells_[pos_] = trial;
    if (partial_ok(pos_)) {
      ++pos_;
      if (pos_ == total) return true;
      trial = 0;
    } else {
      ++trial;
    }
  }
}

std::optional<CayleyTable> TableEnumerator::next() {
  while (advance()) {
    CayleyTable t(order_, cells_);
    if (opts_.canonical_only && !is_canonical(t)) continue;
    return t;
  }
  return std::nullopt;
}

std::vector<CayleyTable> enumerate_tables(int order, EnumerateOptions opts) {
  TableEnumerator en(order, opts);
  std::vector<CayleyTable> out;
  while (auto t = en.next()) out.push_back(std::move(*t));
  return out;
}

}  // namespace qfam::semigroup
