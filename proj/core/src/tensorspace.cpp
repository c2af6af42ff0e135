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

#include "qfam/tensorspace.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qfam::tensorspace {

using starpoly::Generator;
using starpoly::GeneratorSet;
using starpoly::NCWord;
using starpoly::RelationPreset;
using starpoly::StarPoly;
using starpoly::Verdict;
using starpoly::WordOrder;

Leg Leg::point(int dim) {
  if (dim < 1) {
    throw std::invalid_argument("point leg dimension must be at least 1");
  }
  return Leg{Kind::kPoint, dim};
}

std::string to_string(const Leg& leg) {
  return leg.is_point() ? "P" + std::to_string(leg.dim) : std::string("A");
}

std::string to_string(const Signature& sig) {
  std::string out = "[";
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) out += ",";
    out += to_string(sig[i]);
  }
  return out + "]";
}

bool TermOrder::operator()(const FactorList& a, const FactorList& b) const {
  // Point indices first (leg order), then words (leg order, length-then-lex).
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int* pa = std::get_if<int>(&a[i]);
    const int* pb = std::get_if<int>(&b[i]);
    if (pa && pb && *pa != *pb) return *pa < *pb;
  }
  WordOrder word_less;
  for (std::size_t i = 0; i < n; ++i) {
    const NCWord* wa = std::get_if<NCWord>(&a[i]);
    const NCWord* wb = std::get_if<NCWord>(&b[i]);
    if (wa && wb) {
      if (word_less(*wa, *wb)) return true;
      if (word_less(*wb, *wa)) return false;
    }
  }
  return a.size() < b.size();
}

TensorElem TensorElem::alg_unit(Signature signature, GeneratorSet universe) {
  FactorList units;
  units.reserve(signature.size());
  for (const Leg& leg : signature) {
    if (!leg.is_alg()) {
      throw std::invalid_argument("alg_unit requires an all-algebra signature");
    }
    units.emplace_back(NCWord{});
  }
  return monomial(std::move(signature), universe, std::move(units));
}

void TensorElem::add_term(FactorList factors, GaussianRational coeff) {
  if (coeff.is_zero()) return;
  if (factors.size() != signature_.size()) {
    throw std::invalid_argument("term has " + std::to_string(factors.size()) +
                                " factors for a " +
                                std::to_string(signature_.size()) +
                                "-leg signature");
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Leg& leg = signature_[i];
    if (leg.is_point()) {
      const int* idx = std::get_if<int>(&factors[i]);
      if (!idx) {
        throw std::invalid_argument("word factor on point leg " +
                                    std::to_string(i));
      }
      if (*idx < 0 || *idx >= leg.dim) {
        throw std::out_of_range("basis index " + std::to_string(*idx) +
                                " out of range on point leg " +
                                std::to_string(i));
      }
    } else {
      const NCWord* w = std::get_if<NCWord>(&factors[i]);
      if (!w) {
        throw std::invalid_argument("basis-index factor on algebra leg " +
                                    std::to_string(i));
      }
      for (const Generator& g : *w) {
        if (g.row < 0 || g.row >= universe_.rows || g.col < 0 ||
            g.col >= universe_.cols) {
          throw std::out_of_range("generator c[" + std::to_string(g.row) +
                                  "," + std::to_string(g.col) +
                                  "] outside universe on leg " +
                                  std::to_string(i));
        }
      }
    }
  }
  auto [it, inserted] = terms_.emplace(std::move(factors), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

void require_compatible(const TensorElem& a, const TensorElem& b,
                        bool same_signature) {
  if (!(a.universe() == b.universe())) {
    throw std::invalid_argument("mismatched generator universes");
  }
  if (same_signature && a.signature() != b.signature()) {
    throw std::invalid_argument("signature mismatch: " +
                                to_string(a.signature()) + " vs " +
                                to_string(b.signature()));
  }
}

}  // namespace

TensorElem operator+(const TensorElem& a, const TensorElem& b) {
  require_compatible(a, b, /*same_signature=*/true);
  TensorElem out = a;
  for (const auto& [f, c] : b.terms()) out.add_term(f, c);
  return out;
}

TensorElem operator-(const TensorElem& a, const TensorElem& b) {
  require_compatible(a, b, /*same_signature=*/true);
  TensorElem out = a;
  for (const auto& [f, c] : b.terms()) out.add_term(f, -c);
  return out;
}

TensorElem operator*(const GaussianRational& c, const TensorElem& a) {
  TensorElem out(a.signature(), a.universe());
  for (const auto& [f, k] : a.terms()) out.add_term(f, c * k);
  return out;
}

TensorElem tensor_concat(const TensorElem& u, const TensorElem& v) {
  require_compatible(u, v, /*same_signature=*/false);
  Signature sig = u.signature();
  sig.insert(sig.end(), v.signature().begin(), v.signature().end());
  TensorElem out(std::move(sig), u.universe());
  for (const auto& [fu, cu] : u.terms()) {
    for (const auto& [fv, cv] : v.terms()) {
      FactorList f = fu;
      f.insert(f.end(), fv.begin(), fv.end());
      out.add_term(std::move(f), cu * cv);
    }
  }
  return out;
}

namespace {

void require_position(const TensorElem& u, std::size_t at) {
  if (at + 1 >= u.signature().size()) {
    throw std::out_of_range("leg position " + std::to_string(at) +
                            " out of range for signature " +
                            to_string(u.signature()));
  }
}

}  // namespace

TensorElem apply_flip(const TensorElem& u, std::size_t at) {
  require_position(u, at);
  Signature sig = u.signature();
  std::swap(sig[at], sig[at + 1]);
  TensorElem out(std::move(sig), u.universe());
  for (const auto& [f, c] : u.terms()) {
    FactorList g = f;
    std::swap(g[at], g[at + 1]);
    out.add_term(std::move(g), c);
  }
  return out;
}

TensorElem apply_mult(const TensorElem& u, std::size_t at) {
  require_position(u, at);
  const Leg& a = u.signature()[at];
  const Leg& b = u.signature()[at + 1];
  if (!a.is_point() || !b.is_point() || a.dim != b.dim) {
    throw std::invalid_argument(
        "apply_mult needs two point legs of equal dimension at position " +
        std::to_string(at) + " of " + to_string(u.signature()));
  }
  Signature sig = u.signature();
  sig.erase(sig.begin() + static_cast<std::ptrdiff_t>(at + 1));
  TensorElem out(std::move(sig), u.universe());
  for (const auto& [f, c] : u.terms()) {
    if (std::get<int>(f[at]) != std::get<int>(f[at + 1])) continue;
    FactorList g = f;
    g.erase(g.begin() + static_cast<std::ptrdiff_t>(at + 1));
    out.add_term(std::move(g), c);
  }
  return out;
}

TensorElem apply_alg_mult(const TensorElem& u, std::size_t at,
                          RelationPreset preset) {
  require_position(u, at);
  if (!u.signature()[at].is_alg() || !u.signature()[at + 1].is_alg()) {
    throw std::invalid_argument(
        "apply_alg_mult needs two algebra legs at position " +
        std::to_string(at) + " of " + to_string(u.signature()));
  }
  Signature sig = u.signature();
  sig.erase(sig.begin() + static_cast<std::ptrdiff_t>(at + 1));
  TensorElem out(std::move(sig), u.universe());
  for (const auto& [f, c] : u.terms()) {
    NCWord w = std::get<NCWord>(f[at]);
    const NCWord& w2 = std::get<NCWord>(f[at + 1]);
    w.insert(w.end(), w2.begin(), w2.end());
    auto reduced = starpoly::reduce_word(std::move(w), preset);
    if (!reduced) continue;
    FactorList g = f;
    g[at] = std::move(*reduced);
    g.erase(g.begin() + static_cast<std::ptrdiff_t>(at + 1));
    out.add_term(std::move(g), c);
  }
  return out;
}

TensorElem tensor_adjoint(const TensorElem& u) {
  TensorElem out(u.signature(), u.universe());
  for (const auto& [f, c] : u.terms()) {
    FactorList g = f;
    for (Factor& fac : g) {
      if (NCWord* w = std::get_if<NCWord>(&fac)) {
        std::reverse(w->begin(), w->end());
      }
    }
    out.add_term(std::move(g), c.conj());
  }
  return out;
}

LegHom LegHom::identity() {
  LegHom h;
  h.kind_ = Kind::kIdentity;
  return h;
}

LegHom LegHom::phi(int points, int order) {
  if (points < 1 || order < 1) {
    throw std::invalid_argument("phi needs points >= 1 and order >= 1");
  }
  LegHom h;
  h.kind_ = Kind::kPhi;
  h.points_ = points;
  h.order_ = order;
  return h;
}

LegHom LegHom::delta(const semigroup::CayleyTable& table) {
  LegHom h;
  h.kind_ = Kind::kDelta;
  h.order_ = table.order();
  h.table_.assign(static_cast<std::size_t>(table.order()),
                  std::vector<int>(static_cast<std::size_t>(table.order())));
  for (int r = 0; r < table.order(); ++r) {
    for (int s = 0; s < table.order(); ++s) h.table_[r][s] = table.xi(r, s);
  }
  return h;
}

LegHom LegHom::alg_hom(std::map<Generator, TensorElem> images,
                       RelationPreset preset) {
  if (images.empty()) {
    throw std::invalid_argument("alg_hom needs at least one generator image");
  }
  LegHom h;
  h.kind_ = Kind::kAlgHom;
  h.preset_ = preset;
  h.alg_signature_ = images.begin()->second.signature();
  for (const Leg& leg : h.alg_signature_) {
    if (!leg.is_alg()) {
      throw std::invalid_argument(
          "alg_hom image signature must be all algebra legs");
    }
  }
  for (const auto& [g, img] : images) {
    if (img.signature() != h.alg_signature_) {
      throw std::invalid_argument("alg_hom images have mixed signatures");
    }
  }
  h.images_ = std::move(images);
  return h;
}

Signature LegHom::image_signature(const Leg& domain) const {
  switch (kind_) {
    case Kind::kIdentity:
      return {domain};
    case Kind::kPhi:
      if (!domain.is_point() || domain.dim != order_) {
        throw std::invalid_argument("phi domain is a point leg of dimension " +
                                    std::to_string(order_));
      }
      return {Leg::point(points_), Leg::alg()};
    case Kind::kDelta:
      if (!domain.is_point() || domain.dim != order_) {
        throw std::invalid_argument(
            "delta domain is a point leg of dimension " +
            std::to_string(order_));
      }
      return {domain, domain};
    case Kind::kAlgHom:
      if (!domain.is_alg()) {
        throw std::invalid_argument("alg_hom domain is an algebra leg");
      }
      return alg_signature_;
  }
  throw std::logic_error("unreachable");
}

TensorElem LegHom::image_of_point(int index, const Leg& domain,
                                  const GeneratorSet& universe) const {
  const Signature sig = image_signature(domain);
  switch (kind_) {
    case Kind::kIdentity:
      return TensorElem::monomial(sig, universe, {Factor(index)});
    case Kind::kPhi: {
      TensorElem out(sig, universe);
      for (int x = 0; x < points_; ++x) {
        out.add_term({Factor(x), Factor(NCWord{starpoly::gen(x, index)})}, 1);
      }
      return out;
    }
    case Kind::kDelta: {
      TensorElem out(sig, universe);
      for (int r = 0; r < order_; ++r) {
        for (int s = 0; s < order_; ++s) {
          if (table_[r][s] == index) out.add_term({Factor(r), Factor(s)}, 1);
        }
      }
      return out;
    }
    case Kind::kAlgHom:
      break;
  }
  throw std::invalid_argument("homomorphism does not act on point factors");
}

TensorElem LegHom::image_of_word(const NCWord& word, const Leg& domain,
                                 const GeneratorSet& universe) const {
  const Signature sig = image_signature(domain);
  switch (kind_) {
    case Kind::kIdentity:
      return TensorElem::monomial(sig, universe, {Factor(word)});
    case Kind::kAlgHom: {
      TensorElem out = TensorElem::alg_unit(sig, universe);
      for (const Generator& g : word) {
        auto it = images_.find(g);
        if (it == images_.end()) {
          throw std::invalid_argument("no image for generator c[" +
                                      std::to_string(g.row) + "," +
                                      std::to_string(g.col) + "]");
        }
        out = legwise_alg_product(out, it->second, preset_);
      }
      return out;
    }
    case Kind::kPhi:
    case Kind::kDelta:
      break;
  }
  throw std::invalid_argument("homomorphism does not act on word factors");
}

TensorElem substitute_hom(const TensorElem& u, std::size_t at,
                          const LegHom& h) {
  if (at >= u.signature().size()) {
    throw std::out_of_range("leg position " + std::to_string(at) +
                            " out of range for signature " +
                            to_string(u.signature()));
  }
  const Leg domain = u.signature()[at];
  const Signature fragment = h.image_signature(domain);
  Signature sig(u.signature().begin(),
                u.signature().begin() + static_cast<std::ptrdiff_t>(at));
  sig.insert(sig.end(), fragment.begin(), fragment.end());
  sig.insert(sig.end(),
             u.signature().begin() + static_cast<std::ptrdiff_t>(at + 1),
             u.signature().end());
  TensorElem out(std::move(sig), u.universe());
  for (const auto& [f, c] : u.terms()) {
    const TensorElem image =
        domain.is_point()
            ? h.image_of_point(std::get<int>(f[at]), domain, u.universe())
            : h.image_of_word(std::get<NCWord>(f[at]), domain, u.universe());
    for (const auto& [fi, ci] : image.terms()) {
      FactorList g(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(at));
      g.insert(g.end(), fi.begin(), fi.end());
      g.insert(g.end(), f.begin() + static_cast<std::ptrdiff_t>(at + 1),
               f.end());
      out.add_term(std::move(g), c * ci);
    }
  }
  return out;
}

TensorElem legwise_alg_product(const TensorElem& u, const TensorElem& v,
                               RelationPreset preset) {
  require_compatible(u, v, /*same_signature=*/true);
  const std::size_t legs = u.signature().size();
  for (const Leg& leg : u.signature()) {
    if (!leg.is_alg()) {
      throw std::invalid_argument(
          "legwise_alg_product needs an all-algebra signature");
    }
  }
  TensorElem out = tensor_concat(u, v);
  // Interleave [u_0..u_{L-1}, v_0..v_{L-1}] to [u_0, v_0, u_1, v_1, ...]:
  // v_i sits at position L+i and walks left to 2i+1.
  for (std::size_t i = 0; i + 1 < legs; ++i) {
    for (std::size_t p = legs + i; p > 2 * i + 1; --p) {
      out = apply_flip(out, p - 1);
    }
  }
  for (std::size_t i = 0; i < legs; ++i) {
    out = apply_alg_mult(out, i, preset);
  }
  return out;
}

TensorElem reduce_modulo(const TensorElem& u, RelationPreset preset) {
  TensorElem out(u.signature(), u.universe());
  for (const auto& [f, c] : u.terms()) {
    // Expand each algebra leg independently and distribute.
    std::vector<std::pair<FactorList, GaussianRational>> partial;
    partial.emplace_back(FactorList{}, c);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (u.signature()[i].is_point()) {
        for (auto& [g, k] : partial) g.push_back(f[i]);
        continue;
      }
      const StarPoly expanded = starpoly::normal_form(
          starpoly::eliminate_row_sums(
              StarPoly::monomial(u.universe(), std::get<NCWord>(f[i]), 1),
              preset),
          preset);
      std::vector<std::pair<FactorList, GaussianRational>> next;
      next.reserve(partial.size() * std::max<std::size_t>(
                                        expanded.terms().size(), 1));
      for (const auto& [g, k] : partial) {
        for (const auto& [w, cw] : expanded.terms()) {
          FactorList g2 = g;
          g2.emplace_back(w);
          next.emplace_back(std::move(g2), k * cw);
        }
      }
      partial = std::move(next);
      if (partial.empty()) break;
    }
    for (auto& [g, k] : partial) out.add_term(std::move(g), std::move(k));
  }
  return out;
}

Verdict eq_tensor(const TensorElem& u, const TensorElem& v,
                  RelationPreset preset) {
  require_compatible(u, v, /*same_signature=*/true);
  const TensorElem reduced = reduce_modulo(u - v, preset);
  if (reduced.is_zero()) return Verdict::kEqual;
  return preset == RelationPreset::kAllMaps ? Verdict::kNotEqual
                                            : Verdict::kInconclusive;
}

std::string to_string(const FactorList& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "⊗";
    if (const int* idx = std::get_if<int>(&factors[i])) {
      out += "e[" + std::to_string(*idx) + "]";
    } else {
      out += starpoly::to_string(std::get<NCWord>(factors[i]));
    }
  }
  return out;
}

std::string to_string(const TensorElem& u) {
  std::vector<std::string> rendered;
  rendered.reserve(u.terms().size());
  for (const auto& [f, c] : u.terms()) {
    rendered.push_back(starpoly::coeff_prefix(c) + to_string(f));
  }
  return starpoly::join_terms(rendered);
}

}  // namespace qfam::tensorspace
