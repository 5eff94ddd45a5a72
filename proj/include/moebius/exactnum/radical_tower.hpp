// Copyright 2026 The moebius Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License").
// You may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing,
// software distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions
// and limitations under the License.

#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "moebius/errors.hpp"

namespace moebius {

/// Multilinear polynomials in a growing list of square roots r_0, r_1, ...
/// with coefficients in a commutative ring Coeff.
///
/// Radical r_i is sqrt(w_i) where the radicand w_i only mentions radicals
/// r_j with j < i. An element is a map from a bitmask of radicals to a
/// coefficient; r_i^2 is always reduced to w_i, so every element is linear
/// in each radical. Elements are only meaningful relative to the tower that
/// produced them.
///
/// Coeff must provide ring operators, construction from long and
/// is_zero().
template <class Coeff>
class RadicalTower {
 public:
  using Mask = std::uint64_t;
  using Element = std::map<Mask, Coeff>;

  static constexpr std::size_t kMaxRadicals = 62;

  std::size_t radical_count() const { return radicands_.size(); }
  const Element& radicand(std::size_t i) const { return radicands_.at(i); }

  static Element constant(const Coeff& c) {
    Element e;
    if (!c.is_zero()) e.emplace(Mask{0}, c);
    return e;
  }

  Element radical(std::size_t i) const {
    Element e;
    e.emplace(Mask{1} << i, Coeff(1));
    return e;
  }

  static std::optional<Coeff> as_coefficient(const Element& e) {
    if (e.empty()) return Coeff(0);
    if (e.size() == 1 && e.begin()->first == 0) return e.begin()->second;
    return std::nullopt;
  }

  static Element add(const Element& x, const Element& y) {
    Element r = x;
    for (const auto& [m, c] : y) accumulate(r, m, c);
    return r;
  }

  static Element sub(const Element& x, const Element& y) {
    Element r = x;
    for (const auto& [m, c] : y) accumulate(r, m, -c);
    return r;
  }

  static Element neg(const Element& x) {
    Element r;
    for (const auto& [m, c] : x) r.emplace(m, -c);
    return r;
  }

  static Element scale(const Element& x, const Coeff& k) {
    Element r;
    if (k.is_zero()) return r;
    for (const auto& [m, c] : x) {
      Coeff p = c * k;
      if (!p.is_zero()) r.emplace(m, std::move(p));
    }
    return r;
  }

  Element multiply(const Element& x, const Element& y) const {
    Element r;
    for (const auto& [mx, cx] : x) {
      for (const auto& [my, cy] : y) {
        Coeff c = cx * cy;
        if (c.is_zero()) continue;
        Mask common = mx & my;
        if (common == 0) {
          accumulate(r, mx | my, c);
          continue;
        }
        Element term;
        term.emplace(mx ^ my, std::move(c));
        // r_i * r_i = w_i, highest radical first.
        while (common != 0) {
          std::size_t i = 63 - static_cast<std::size_t>(std::countl_zero(common));
          common &= ~(Mask{1} << i);
          term = multiply(term, radicands_[i]);
        }
        for (const auto& [m, cc] : term) accumulate(r, m, cc);
      }
    }
    return r;
  }

  std::optional<std::size_t> find_radical(const Element& w) const {
    for (std::size_t i = 0; i < radicands_.size(); ++i)
      if (radicands_[i] == w) return i;
    return std::nullopt;
  }

  /// Registers sqrt(w) (or reuses an equal radicand) and returns its index.
  std::size_t intern_radical(const Element& w) {
    if (auto found = find_radical(w)) return *found;
    if (radicands_.size() >= kMaxRadicals)
      throw UnsupportedExpression("radical tower exceeds the supported number of distinct radicals");
    radicands_.push_back(w);
    return radicands_.size() - 1;
  }

  static std::optional<std::size_t> top_radical(const Element& e) {
    Mask all = 0;
    for (const auto& [m, c] : e) all |= m;
    if (all == 0) return std::nullopt;
    return 63 - static_cast<std::size_t>(std::countl_zero(all));
  }

  /// e = u + v * r_i with u, v free of r_i.
  static std::pair<Element, Element> split(const Element& e, std::size_t i) {
    Element u;
    Element v;
    const Mask bit = Mask{1} << i;
    for (const auto& [m, c] : e) {
      if (m & bit) {
        v.emplace(m & ~bit, c);
      } else {
        u.emplace(m, c);
      }
    }
    return {u, v};
  }

  /// u^2 - v^2 w_i: vanishes whenever e = u + v r_i does.
  Element eliminate(const Element& e, std::size_t i) const {
    auto [u, v] = split(e, i);
    return sub(multiply(u, u), multiply(multiply(v, v), radicands_[i]));
  }

  /// u - v r_i.
  static Element conjugate(const Element& e, std::size_t i) {
    Element r;
    const Mask bit = Mask{1} << i;
    for (const auto& [m, c] : e) r.emplace(m, (m & bit) ? Coeff(-c) : c);
    return r;
  }

 private:
  static void accumulate(Element& r, Mask m, const Coeff& c) {
    if (c.is_zero()) return;
    auto it = r.find(m);
    if (it == r.end()) {
      r.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) r.erase(it);
  }

  std::vector<Element> radicands_;
};

}  // namespace moebius
