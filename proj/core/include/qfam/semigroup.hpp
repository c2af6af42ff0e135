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

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qfam::semigroup {

/// Multiplication table of a binary operation on {0,...,n-1}.
///
/// Entry (r,s) is xi(r,s), stored row-major. Construction validates the
/// structural invariants (order in [1,6], every entry in [0,n)); anything
/// malformed throws std::invalid_argument. Associativity is a separate,
/// explicit question answered by validate_associativity.
class CayleyTable {
 public:
  static constexpr int kMaxOrder = 6;

  CayleyTable(int order, std::vector<int> entries);

  int order() const { return order_; }
  int xi(int r, int s) const { return entries_[r * order_ + s]; }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

  // Lexicographic order on (order, flattened entries).
  friend bool operator<(const CayleyTable& a, const CayleyTable& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return a.entries_ < b.entries_;
  }

  /// Relabels elements by the permutation perm: entry (r,s) of the result is
  /// perm[xi(inv(r), inv(s))].
  CayleyTable relabeled(const std::vector<int>& perm) const;

  std::string to_string() const;  // e.g. "[[0,1],[1,0]]"

 private:
  int order_;
  std::vector<int> entries_;
};

/// Lexicographically smallest triple (r,s,t) with
/// xi(xi(r,s),t) != xi(r,xi(s,t)).
struct NonAssocWitness {
  int r, s, t;
  int left;   // xi(xi(r,s),t)
  int right;  // xi(r,xi(s,t))

  std::string to_string() const;
};

/// A Cayley table together with the certificate that it is associative.
/// Instances come out of validate_associativity only.
class SemigroupRecord {
 public:
  const CayleyTable& table() const { return table_; }
  int order() const { return table_.order(); }
  bool associative() const { return true; }
  std::optional<int> identity() const { return identity_; }

 private:
  friend std::variant<SemigroupRecord, NonAssocWitness> validate_associativity(
      const CayleyTable&);
  SemigroupRecord(CayleyTable table, std::optional<int> identity)
      : table_(std::move(table)), identity_(identity) {}

  CayleyTable table_;
  std::optional<int> identity_;
};

using AssociativityResult = std::variant<SemigroupRecord, NonAssocWitness>;

/// Checks all n^3 triples. Returns a SemigroupRecord (with any two-sided
/// identity precomputed) or the lexicographically smallest failing triple.
AssociativityResult validate_associativity(const CayleyTable& table);

/// The unique two-sided identity, if one exists. A table with two distinct
/// two-sided identities is mathematically impossible; finding one anyway
/// means the data is corrupt and throws std::logic_error.
std::optional<int> find_identity(const CayleyTable& table);
std::optional<int> find_identity(const SemigroupRecord& rec);

enum class TableFilter { kAllMagmas, kAssociativeOnly };

struct EnumerateOptions {
  TableFilter filter = TableFilter::kAllMagmas;
  // Keep only tables that are the lexicographically smallest member of their
  // relabeling class. Off by default; labeled counts are the primary oracle.
  bool canonical_only = false;
};

/// Streams every order-n Cayley table in lexicographic order (row-major
/// flattening read as a base-n number), optionally filtered to associative
/// tables. Exhaustive associative enumeration prunes on partially determined
/// triples. Supported range: n <= 3 for all magmas (n=4 would be 4^16
/// tables), n <= 4 for associative-only.
class TableEnumerator {
 public:
  TableEnumerator(int order, EnumerateOptions opts = {});

  /// Next table in order, or nullopt when exhausted.
  std::optional<CayleyTable> next();

 private:
  bool advance();
  bool partial_ok(int last_cell) const;

  int order_;
  EnumerateOptions opts_;
  std::vector<int> cells_;
  int pos_ = 0;        // first unassigned cell
  bool done_ = false;
  bool started_ = false;
};

std::vector<CayleyTable> enumerate_tables(int order, EnumerateOptions opts = {});

}  // namespace qfam::semigroup
