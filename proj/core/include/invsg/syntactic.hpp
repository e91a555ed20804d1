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

// Syntactic semigroups and syntactic ⋆-semigroups of regular languages.

#ifndef INVSG_SYNTACTIC_HPP_
#define INVSG_SYNTACTIC_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invsg/alphabet.hpp"
#include "invsg/involution.hpp"
#include "invsg/regular.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

  /// A+/~_L realised as the transition semigroup of the minimal DFA.
  struct SyntacticData {
    Dfa               dfa;  // minimal
    FiniteSemigroup   semigroup;
    std::vector<Elem> letter_map;
    std::vector<bool> accepting;
    /// Shortlex-least word of each class.
    std::vector<Word> representatives;
  };

  /// Labels are the class representatives spelled over `alphabet`.
  SyntacticData syntactic_semigroup(Dfa const&                d,
                                    InvolutoryAlphabet const& alphabet,
                                    std::size_t budget = default_element_budget);

  /// A+/~*_L realised as the image of chi(w) = ([w]_L, [w†]_L) in
  /// S(L) x S(L)^op, with the flip involution.
  struct StarSyntacticData {
    SyntacticData                      syntactic;  // of L
    InvolutionSemigroup                semigroup;
    std::vector<std::pair<Elem, Elem>> pairs;  // coordinates in S(L)
    std::vector<Elem>                  letter_map;
    std::vector<bool>                  accepting;
    std::vector<Word>                  representatives;
  };

  StarSyntacticData syntactic_star_semigroup(Dfa const&                d,
                                             InvolutoryAlphabet const& alphabet,
                                             std::size_t budget = default_element_budget);

  /// [w]_L for a nonempty word.
  Elem syntactic_class(SyntacticData const& sd, std::span<Letter const> w);
  Elem syntactic_class(StarSyntacticData const& sd, std::span<Letter const> w);

  struct AntiIsomorphism {
    bool              found = false;
    /// S(L) -> S(L†), an isomorphism from S(L)^op.
    std::vector<Elem> map;
    /// Whether the map agrees with [w]_L -> [w†]_{L†} on representatives.
    bool              matches_alpha = false;
  };

  AntiIsomorphism anti_isomorphism_check(Dfa const&                d,
                                         InvolutoryAlphabet const& alphabet,
                                         std::size_t budget = default_element_budget);

  struct SyntacticDivision {
    bool                               divides = false;
    std::string                        reason;
    /// Image element of the recognizer -> element of the syntactic
    /// ⋆-semigroup.
    std::vector<std::pair<Elem, Elem>> map;
  };

  /// Builds the map x -> chi(w) (w any preimage of x) from the image
  /// sub-⋆-semigroup of `s` onto the syntactic ⋆-semigroup of L(d), and
  /// checks that it is a well-defined surjective involutory morphism.
  /// Throws PreconditionError unless (s, letter_map, accepting) recognises
  /// L(d).
  SyntacticDivision syntactic_divides(Dfa const&                 d,
                                      InvolutoryAlphabet const&  alphabet,
                                      InvolutionSemigroup const& s,
                                      std::span<Elem const>      letter_map,
                                      std::vector<bool> const&   accepting);

  /// {w in A+ : h(w) = x} for h extending `letter_map`.
  Dfa element_language(FiniteSemigroup const& s,
                       std::span<Elem const>  letter_map,
                       Elem                   x);
  Dfa element_language(SyntacticData const& sd, Elem x);
  Dfa element_language(StarSyntacticData const& sd, Elem x);

  /// The same classes as Boolean combinations of quotients u^{-1} L v^{-1}
  /// with u, v ranging over representatives of S(L)^1 (the empty context
  /// included).  The ⋆ version also uses the quotients of L†.
  Dfa class_from_quotients(SyntacticData const& sd, Elem x);
  Dfa class_from_quotients(StarSyntacticData const& sd,
                           InvolutoryAlphabet const& alphabet,
                           Elem                      x);

  struct ProductEmbedding {
    bool        embeds = false;
    std::string reason;
    /// Sizes of the syntactic ⋆-semigroups of the languages h^{-1}(s).
    std::vector<std::size_t> factor_sizes;
  };

  /// Checks that x -> (chi_s(w_x))_s, with w_x a preimage of x under h, is an
  /// injective involutory morphism from `s` into the product of the
  /// syntactic ⋆-semigroups of the languages h^{-1}(s).  Requires h
  /// surjective.
  ProductEmbedding embeds_in_syntactic_product(InvolutionSemigroup const& s,
                                               InvolutoryAlphabet const&  alphabet,
                                               std::span<Elem const>      letter_map);

}  // namespace invsg

#endif  // INVSG_SYNTACTIC_HPP_
