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

// Finite involution semigroups (⋆-semigroups) and recognition by them.

#ifndef INVSG_INVOLUTION_HPP_
#define INVSG_INVOLUTION_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invsg/alphabet.hpp"
#include "invsg/regular.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

  /// A violated involution law.  `not_involutive`: star(star(x)) != x (y is
  /// unused).  `not_anti`: star(xy) != star(y) star(x).
  struct InvolutionViolation {
    enum class Law { out_of_range, not_involutive, not_anti };

    Law  law = Law::out_of_range;
    Elem x   = 0;
    Elem y   = 0;
  };

  std::string describe(FiniteSemigroup const&     s,
                       std::span<Elem const>      star,
                       InvolutionViolation const& v);

  /// Checks both involution laws exhaustively; returns the first violation
  /// (pairs in lexicographic order) or nullopt.
  std::optional<InvolutionViolation>
  validate_involution(FiniteSemigroup const& s, std::span<Elem const> star);

  /// Two witness words for `element` whose anti-morphic extensions disagree.
  struct InducedConflict {
    Elem element = 0;
    Word word1;  // over generator indices
    Elem image1 = 0;
    Word word2;
    Elem image2 = 0;
  };

  /// Extends an involution given on a generating set as an anti-morphism
  /// star(g_1 ... g_n) = star(g_n) ... star(g_1).  Either the full star table
  /// or the first inconsistency met along the right Cayley graph.
  struct InducedInvolution {
    std::optional<std::vector<Elem>> star;
    std::optional<InducedConflict>   conflict;
  };

  /// Throws ArgumentError if `generators` does not generate `s`.
  InducedInvolution induced_involution(FiniteSemigroup const& s,
                                       std::span<Elem const>  generators,
                                       std::span<Elem const>  images);

  class InvolutionSemigroup {
   public:
    InvolutionSemigroup() = default;

    /// Throws ArgumentError (with the violation spelled out) when `star` is
    /// not an involution of `s`.
    InvolutionSemigroup(FiniteSemigroup s, std::vector<Elem> star);

    FiniteSemigroup const& base() const noexcept {
      return base_;
    }

    std::size_t size() const noexcept {
      return base_.size();
    }

    Elem mul(Elem x, Elem y) const {
      return base_.mul(x, y);
    }

    Elem star(Elem x) const {
      return star_[x];
    }

    std::vector<Elem> const& star_table() const noexcept {
      return star_;
    }

    bool operator==(InvolutionSemigroup const&) const = default;

   private:
    FiniteSemigroup   base_;
    std::vector<Elem> star_;
  };

  /// S x S^op with (x, y)* = (y, x).  Element (x, y) has index x * |S| + y.
  InvolutionSemigroup flip_product(FiniteSemigroup const& s);

  /// For a morphism h: S -> T (as an element map), h†(x) = h(x*), a morphism
  /// S -> T^op.  Throws ArgumentError if `map` is not a morphism.
  std::vector<Elem> star_morphism(InvolutionSemigroup const& s,
                                  FiniteSemigroup const&     t,
                                  std::span<Elem const>      map);

  /// Letter-level version for h: A+ -> T: h†(a) = h(a†).
  std::vector<Elem> star_letter_map(InvolutoryAlphabet const& alphabet,
                                    std::span<Elem const>     letter_map);

  /// Whether `map` is a morphism of involution semigroups.
  bool is_involutory_morphism(InvolutionSemigroup const& s,
                              InvolutionSemigroup const& t,
                              std::span<Elem const>      map);

  std::vector<Elem> hermitian_elements(InvolutionSemigroup const& s);

  /// Sorted closure of `gens` under product and star.
  std::vector<Elem> star_closure(InvolutionSemigroup const& s,
                                 std::span<Elem const>      gens);

  /// The sub-⋆-semigroup on `elems` (closed under product and star),
  /// renumbered in the given order.
  InvolutionSemigroup sub_star_semigroup(InvolutionSemigroup const& s,
                                         std::span<Elem const>      elems);

  bool is_hermitian_generated(InvolutionSemigroup const& s);

  struct Recognition {
    bool                recognizes = false;
    /// Shortest word on which L(d) and h^{-1}(accepting) disagree.
    std::optional<Word> counterexample;
    /// Elements h(A+) actually reached.
    std::vector<Elem>   image;
  };

  /// Decides L(d) = h^{-1}(accepting) for the morphism h: A+ -> S extending
  /// `letter_map`, by breadth-first search over (DFA state, element) pairs.
  Recognition recognition(FiniteSemigroup const&   s,
                          std::span<Elem const>    letter_map,
                          std::vector<bool> const& accepting,
                          Dfa const&               d,
                          std::size_t              budget = default_state_budget);

  /// As above for an involution semigroup.  Throws PreconditionError unless
  /// letter_map(a†) = letter_map(a)* for every letter.
  Recognition recognition(InvolutionSemigroup const& s,
                          InvolutoryAlphabet const&  alphabet,
                          std::span<Elem const>      letter_map,
                          std::vector<bool> const&   accepting,
                          Dfa const&                 d,
                          std::size_t budget = default_state_budget);

  bool recognizes(InvolutionSemigroup const& s,
                  InvolutoryAlphabet const&  alphabet,
                  std::span<Elem const>      letter_map,
                  std::vector<bool> const&   accepting,
                  Dfa const&                 d);

  /// h(w) for the morphism extending `letter_map`.
  Elem evaluate(FiniteSemigroup const&  s,
                std::span<Elem const>   letter_map,
                std::span<Letter const> w);

}  // namespace invsg

#endif  // INVSG_INVOLUTION_HPP_
