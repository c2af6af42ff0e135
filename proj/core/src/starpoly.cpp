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

#include "qfam/starpoly.hpp"

#include <stdexcept>

namespace qfam::starpoly {

std::string to_string(RelationPreset preset) {
  return preset == RelationPreset::kAllMaps ? "allmaps" : "magicsquare";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kEqual:
      return "equal";
    case Verdict::kNotEqual:
      return "not_equal";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

void StarPoly::add_term(NCWord word, GaussianRational coeff) {
  if (coeff.is_zero()) return;
  for (const Generator& g : word) {
    if (g.row < 0 || g.row >= universe_.rows || g.col < 0 ||
        g.col >= universe_.cols) {
      throw std::out_of_range("generator c[" + std::to_string(g.row) + "," +
                              std::to_string(g.col) +
                              "] outside universe " +
                              std::to_string(universe_.rows) + "x" +
                              std::to_string(universe_.cols));
    }
  }
  auto [it, inserted] = terms_.emplace(std::move(word), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

void require_same_universe(const StarPoly& a, const StarPoly& b) {
  if (!(a.universe() == b.universe())) {
    throw std::invalid_argument("mismatched generator universes");
  }
}

}  // namespace

StarPoly operator+(const StarPoly& a, const StarPoly& b) {
  require_same_universe(a, b);
  StarPoly out = a;
  for (const auto& [w, c] : b.terms()) out.add_term(w, c);
  return out;
}

StarPoly operator-(const StarPoly& a, const StarPoly& b) {
  require_same_universe(a, b);
  StarPoly out = a;
  for (const auto& [w, c] : b.terms()) out.add_term(w, -c);
  return out;
}

StarPoly operator*(const GaussianRational& c, const StarPoly& a) {
  StarPoly out(a.universe());
  for (const auto& [w, k] : a.terms()) out.add_term(w, c * k);
  return out;
}

StarPoly poly_mul(const StarPoly& a, const StarPoly& b) {
  require_same_universe(a, b);
  StarPoly out(a.universe());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      NCWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(std::move(w), ca * cb);
    }
  }
  return out;
}

StarPoly poly_adjoint(const StarPoly& a) {
  StarPoly out(a.universe());
  for (const auto& [w, c] : a.terms()) {
    NCWord rev(w.rbegin(), w.rend());
    out.add_term(std::move(rev), c.conj());
  }
  return out;
}

namespace {

// Rule match for the adjacent pair (a,b); kNone when irreducible.
enum class Rule { kNone, kIdempotent, kKill };

Rule match_rule(const Generator& a, const Generator& b, RelationPreset preset) {
  if (a.row == b.row) {
    return a.col == b.col ? Rule::kIdempotent : Rule::kKill;
  }
  if (preset == RelationPreset::kMagicSquare && a.col == b.col) {
    return Rule::kKill;
  }
  return Rule::kNone;
}

}  // namespace

std::vector<size_t> redex_positions(const NCWord& w, RelationPreset preset) {
  std::vector<size_t> out;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (match_rule(w[i], w[i + 1], preset) != Rule::kNone) out.push_back(i);
  }
  return out;
}

std::optional<NCWord> rewrite_at(const NCWord& w, size_t i,
                                 RelationPreset preset) {
  if (i + 1 >= w.size()) throw std::out_of_range("redex position out of range");
  switch (match_rule(w[i], w[i + 1], preset)) {
    case Rule::kNone:
      throw std::invalid_argument("no rule applies at position " +
                                  std::to_string(i));
    case Rule::kKill:
      return std::nullopt;
    case Rule::kIdempotent: {
      NCWord out = w;
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(i + 1));
      return out;
    }
  }
  return std::nullopt;
}

std::optional<NCWord> reduce_word(NCWord w, RelationPreset preset) {
  // Leftmost reduction; confluence makes the strategy irrelevant.
  size_t i = 0;
  while (i + 1 < w.size()) {
    switch (match_rule(w[i], w[i + 1], preset)) {
      case Rule::kNone:
        ++i;
        break;
      case Rule::kKill:
        return std::nullopt;
      case Rule::kIdempotent:
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i + 1));
        if (i > 0) --i;  // the merge may expose a redex to the left
        break;
    }
  }
  return w;
}

StarPoly normal_form(const StarPoly& a, RelationPreset preset) {
  StarPoly out(a.universe());
  for (const auto& [w, c] : a.terms()) {
    if (auto nf = reduce_word(w, preset)) out.add_term(std::move(*nf), c);
  }
  return out;
}

StarPoly eliminate_row_sums(const StarPoly& a, RelationPreset preset) {
  const GeneratorSet u = a.universe();
  const int last = u.cols - 1;
  // Substitution image of a single generator.
  auto image = [&](const Generator& g) {
    StarPoly p(u);
    if (u.cols == 1) {
      p.add_term({}, 1);  // every c[x,0] equals 1
      return p;
    }
    if (g.col != last) {
      p.add_term({g}, 1);
      return p;
    }
    p.add_term({}, 1);
    for (int k = 0; k < last; ++k) p.add_term({gen(g.row, k)}, -1);
    return p;
  };
  StarPoly out(u);
  for (const auto& [w, c] : a.terms()) {
    StarPoly prod = StarPoly::monomial(u, {}, c);
    for (const Generator& g : w) {
      prod = normal_form(poly_mul(prod, image(g)), preset);
    }
    for (const auto& [w2, c2] : prod.terms()) out.add_term(w2, c2);
  }
  return out;
}

Verdict eq_mod(const StarPoly& a, const StarPoly& b, RelationPreset preset) {
  require_same_universe(a, b);
  const StarPoly reduced =
      normal_form(eliminate_row_sums(a - b, preset), preset);
  if (reduced.is_zero()) return Verdict::kEqual;
  return preset == RelationPreset::kAllMaps ? Verdict::kNotEqual
                                            : Verdict::kInconclusive;
}

std::string to_string(const NCWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += "·";
    out += "c[" + std::to_string(w[i].row) + "," + std::to_string(w[i].col) +
           "]";
  }
  return out;
}

std::string coeff_prefix(const GaussianRational& c) {
  if (c.is_one()) return "";
  if (c == GaussianRational(-1)) return "-";
  return c.to_string() + "·";
}

std::string join_terms(const std::vector<std::string>& rendered) {
  if (rendered.empty()) return "0";
  std::string out = rendered.front();
  for (size_t i = 1; i < rendered.size(); ++i) {
    const std::string& t = rendered[i];
    if (!t.empty() && t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

std::string to_string(const StarPoly& a) {
  std::vector<std::string> rendered;
  rendered.reserve(a.terms().size());
  for (const auto& [w, c] : a.terms()) {
    if (w.empty()) {
      rendered.push_back(c.to_string());
    } else {
      rendered.push_back(coeff_prefix(c) + to_string(w));
    }
  }
  return join_terms(rendered);
}

}  // namespace qfam::starpoly
