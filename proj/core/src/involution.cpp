/*
 *   Copyright 2026 The invsg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "invsg/involution.hpp"

#include <algorithm>
#include <unordered_map>

#include "invsg/errors.hpp"

namespace invsg {

  std::string describe(FiniteSemigroup const&     s,
                       std::span<Elem const>      star,
                       InvolutionViolation const& v) {
    using Law = InvolutionViolation::Law;
    switch (v.law) {
      case Law::out_of_range:
        return "star table is not a total map on the elements";
      case Law::not_involutive:
        return "(" + s.label(v.x) + "*)* = " + s.label(star[star[v.x]])
               + " != " + s.label(v.x);
      case Law::not_anti:
        return "(" + s.label(v.x) + " " + s.label(v.y)
               + ")* = " + s.label(star[s.mul(v.x, v.y)]) + " != "
               + s.label(s.mul(star[v.y], star[v.x])) + " = " + s.label(v.y)
               + "* " + s.label(v.x) + "*";
    }
    return {};
  }

  std::optional<InvolutionViolation>
  validate_involution(FiniteSemigroup const& s, std::span<Elem const> star) {
    using Law = InvolutionViolation::Law;
    if (star.size() != s.size()) {
      return InvolutionViolation{Law::out_of_range, 0, 0};
    }
    for (Elem x = 0; x < s.size(); ++x) {
      if (star[x] >= s.size()) {
        return InvolutionViolation{Law::out_of_range, x, 0};
      }
    }
    for (Elem x = 0; x < s.size(); ++x) {
      if (star[star[x]] != x) {
        return InvolutionViolation{Law::not_involutive, x, 0};
      }
    }
    for (Elem x = 0; x < s.size(); ++x) {
      for (Elem y = 0; y < s.size(); ++y) {
        if (star[s.mul(x, y)] != s.mul(star[y], star[x])) {
          return InvolutionViolation{Law::not_anti, x, y};
        }
      }
    }
    return std::nullopt;
  }

  InducedInvolution induced_involution(FiniteSemigroup const& s,
                                       std::span<Elem const>  generators,
                                       std::span<Elem const>  images) {
    if (generators.size() != images.size() || generators.empty()) {
      throw ArgumentError("induced_involution: one image per generator");
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (generators[i] >= s.size() || images[i] >= s.size()) {
        throw ArgumentError("induced_involution: element out of range");
      }
    }
    constexpr Elem    unset = static_cast<Elem>(-1);
    std::vector<Elem> star(s.size(), unset);
    std::vector<Word> witness(s.size());
    std::vector<Elem> order;
    InducedInvolution out;

    auto assign = [&](Elem x, Elem image, Word w) {
      if (star[x] == unset) {
        star[x]    = image;
        witness[x] = std::move(w);
        order.push_back(x);
        return true;
      }
      if (star[x] != image) {
        out.conflict = InducedConflict{x, witness[x], star[x], std::move(w), image};
        return false;
      }
      return true;
    };
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (!assign(generators[i], images[i], Word{static_cast<Letter>(i)})) {
        return out;
      }
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      Elem x = order[i];
      for (std::size_t g = 0; g < generators.size(); ++g) {
        Word w = witness[x];
        w.push_back(static_cast<Letter>(g));
        if (!assign(s.mul(x, generators[g]), s.mul(images[g], star[x]), std::move(w))) {
          return out;
        }
      }
    }
    if (order.size() != s.size()) {
      throw ArgumentError("induced_involution: generators do not generate the semigroup");
    }
    out.star = std::move(star);
    return out;
  }

  InvolutionSemigroup::InvolutionSemigroup(FiniteSemigroup s, std::vector<Elem> star)
      : base_(std::move(s)), star_(std::move(star)) {
    if (auto v = validate_involution(base_, star_)) {
      throw ArgumentError("not an involution: " + describe(base_, star_, *v));
    }
  }

  InvolutionSemigroup flip_product(FiniteSemigroup const& s) {
    FiniteSemigroup   p = direct_product(s, opposite(s));
    std::size_t const n = s.size();
    std::vector<Elem> star(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        star[x * n + y] = y * n + x;
      }
    }
    return InvolutionSemigroup(std::move(p), std::move(star));
  }

  std::vector<Elem> star_morphism(InvolutionSemigroup const& s,
                                  FiniteSemigroup const&     t,
                                  std::span<Elem const>      map) {
    if (!is_morphism(s.base(), t, map)) {
      throw ArgumentError("star_morphism: map is not a morphism");
    }
    std::vector<Elem> out(s.size());
    for (Elem x = 0; x < s.size(); ++x) {
      out[x] = map[s.star(x)];
    }
    if (!is_morphism(s.base(), opposite(t), out)) {
      throw Error("star_morphism: h-dagger is not a morphism into the opposite");
    }
    return out;
  }

  std::vector<Elem> star_letter_map(InvolutoryAlphabet const& alphabet,
                                    std::span<Elem const>     letter_map) {
    if (letter_map.size() != alphabet.size()) {
      throw ArgumentError("one image per letter required");
    }
    std::vector<Elem> out(letter_map.size());
    for (Letter a = 0; a < alphabet.size(); ++a) {
      out[a] = letter_map[alphabet.dagger(a)];
    }
    return out;
  }

  bool is_involutory_morphism(InvolutionSemigroup const& s,
                              InvolutionSemigroup const& t,
                              std::span<Elem const>      map) {
    if (!is_morphism(s.base(), t.base(), map)) {
      return false;
    }
    for (Elem x = 0; x < s.size(); ++x) {
      if (map[s.star(x)] != t.star(map[x])) {
        return false;
      }
    }
    return true;
  }

  std::vector<Elem> hermitian_elements(InvolutionSemigroup const& s) {
    std::vector<Elem> out;
    for (Elem x = 0; x < s.size(); ++x) {
      if (s.star(x) == x) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<Elem> star_closure(InvolutionSemigroup const& s,
                                 std::span<Elem const>      gens) {
    // The closure of a star-closed generating set under product is already
    // star-closed, since (xy)* = y* x*.
    std::vector<Elem> g(gens.begin(), gens.end());
    for (Elem x : gens) {
      g.push_back(s.star(x));
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return subsemigroup(s.base(), g);
  }

  InvolutionSemigroup sub_star_semigroup(InvolutionSemigroup const& s,
                                         std::span<Elem const>      elems) {
    FiniteSemigroup           sub = restrict_to(s.base(), elems);
    std::vector<std::int64_t> pos(s.size(), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      pos[elems[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<Elem> star(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      auto p = pos[s.star(elems[i])];
      if (p < 0) {
        throw ArgumentError("sub_star_semigroup: subset is not closed under star");
      }
      star[i] = static_cast<Elem>(p);
    }
    return InvolutionSemigroup(std::move(sub), std::move(star));
  }

  bool is_hermitian_generated(InvolutionSemigroup const& s) {
    return star_closure(s, hermitian_elements(s)).size() == s.size();
  }

  Recognition recognition(FiniteSemigroup const&   s,
                          std::span<Elem const>    letter_map,
                          std::vector<bool> const& accepting,
                          Dfa const&               d,
                          std::size_t              budget) {
    if (letter_map.size() != d.num_letters()) {
      throw ArgumentError("recognition: one image per letter required");
    }
    if (accepting.size() != s.size()) {
      throw ArgumentError("recognition: accepting set has the wrong size");
    }
    for (Elem x : letter_map) {
      if (x >= s.size()) {
        throw ArgumentError("recognition: letter image out of range");
      }
    }
    std::size_t const ns = s.size();
    // Pair (q, x) is indexed q * |S| + x; parents give shortest words.
    struct Node {
      std::size_t parent;
      Letter      letter;
    };
    constexpr std::size_t     root = static_cast<std::size_t>(-1);
    std::unordered_map<std::size_t, Node> seen;
    std::vector<std::size_t>  queue;
    Recognition               out;
    std::vector<bool>         in_image(ns, false);

    auto push = [&](std::size_t parent, Dfa::State q, Elem x, Letter a) {
      std::size_t key = static_cast<std::size_t>(q) * ns + x;
      if (seen.count(key)) {
        return;
      }
      if (seen.size() >= budget) {
        throw ResourceLimit("recognition search", seen.size());
      }
      seen.emplace(key, Node{parent, a});
      queue.push_back(key);
    };
    for (Letter a = 0; a < d.num_letters(); ++a) {
      push(root, d.next(d.initial(), a), letter_map[a], a);
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t key = queue[i];
      auto        q   = static_cast<Dfa::State>(key / ns);
      auto        x   = static_cast<Elem>(key % ns);
      in_image[x]     = true;
      if (d.is_final(q) != accepting[x]) {
        Word w;
        for (std::size_t k = key; k != root; k = seen.at(k).parent) {
          w.push_back(seen.at(k).letter);
        }
        std::reverse(w.begin(), w.end());
        out.counterexample = std::move(w);
        return out;
      }
      for (Letter a = 0; a < d.num_letters(); ++a) {
        push(key, d.next(q, a), s.mul(x, letter_map[a]), a);
      }
    }
    out.recognizes = true;
    for (Elem x = 0; x < ns; ++x) {
      if (in_image[x]) {
        out.image.push_back(x);
      }
    }
    return out;
  }

  Recognition recognition(InvolutionSemigroup const& s,
                          InvolutoryAlphabet const&  alphabet,
                          std::span<Elem const>      letter_map,
                          std::vector<bool> const&   accepting,
                          Dfa const&                 d,
                          std::size_t                budget) {
    if (letter_map.size() != alphabet.size()) {
      throw ArgumentError("recognition: one image per letter required");
    }
    for (Letter a = 0; a < alphabet.size(); ++a) {
      if (letter_map[a] >= s.size()
          || letter_map[alphabet.dagger(a)] != s.star(letter_map[a])) {
        throw PreconditionError(std::string("letter map does not respect the involution at '")
                                + alphabet.symbol(a) + "'");
      }
    }
    return recognition(s.base(), letter_map, accepting, d, budget);
  }

  bool recognizes(InvolutionSemigroup const& s,
                  InvolutoryAlphabet const&  alphabet,
                  std::span<Elem const>      letter_map,
                  std::vector<bool> const&   accepting,
                  Dfa const&                 d) {
    return recognition(s, alphabet, letter_map, accepting, d).recognizes;
  }

  Elem evaluate(FiniteSemigroup const&  s,
                std::span<Elem const>   letter_map,
                std::span<Letter const> w) {
    if (w.empty()) {
      throw ArgumentError("evaluate: the word must be nonempty");
    }
    Elem x = letter_map[w[0]];
    for (std::size_t i = 1; i < w.size(); ++i) {
      x = s.mul(x, letter_map[w[i]]);
    }
    return x;
  }

}  // namespace invsg
