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


// First-order logic on words with the signature (P_a, min, max, N).
//
// Positions are 1..|w|; N(x, y) holds iff |x - y| = 1.  Implication and
// equivalence are desugared at parse time, so the tree only holds the
// connectives below.

#ifndef INVSG_FOLOG_HPP_
#define INVSG_FOLOG_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invsg/alphabet.hpp"
#include "invsg/regular.hpp"

namespace invsg {

  struct FoTerm {
    enum class Kind { variable, min, max };

    Kind        kind = Kind::variable;
    std::size_t var  = 0;  // slot, for variables

    bool operator==(FoTerm const&) const = default;
  };

  struct FoNode {
    enum class Kind { letter, adjacent, equal, negation, conjunction, disjunction, exists, forall };

    Kind                kind   = Kind::letter;
    Letter              letter = 0;   // letter
    FoTerm              lhs, rhs;     // letter (lhs only), adjacent, equal
    std::size_t         var = 0;      // exists, forall: the bound slot
    std::vector<FoNode> children;     // one for negation and quantifiers

    bool operator==(FoNode const&) const = default;
  };

  /// A parsed formula.  Every variable occurrence is resolved to a slot;
  /// each quantifier binds a fresh slot, so bound names never collide.
  /// Slots 0..free_count-1 are the declared free variables.
  struct FoFormula {
    FoNode                   root;
    std::vector<std::string> names;  // slot -> source name
    std::size_t              free_count = 0;

    std::size_t num_slots() const noexcept {
      return names.size();
    }
    bool is_sentence() const noexcept {
      return free_count == 0;
    }
  };

  /// Grammar:
  ///   form := 'exists' VAR '.' form | 'forall' VAR '.' form | imp
  ///   imp  := disj ('->' imp | '<->' imp)?
  ///   disj := conj ('|' conj)*
  ///   conj := neg ('&' neg)*
  ///   neg  := '!' neg | atom
  ///   atom := 'P_' LETTER '(' term ')' | 'N(' term ',' term ')'
  ///         | term '=' term | '(' form ')'
  ///   term := VAR | 'min' | 'max'
  /// A quantified formula may also stand as the operand of '!', '&', '|'
  /// or '->', extending as far right as possible, so `P_a(min) & forall x.
  /// P_a(x) | P_b(x)` is read as `P_a(min) & (forall x. (P_a(x) | P_b(x)))`.
  /// VAR is an identifier other than the keywords.  `free` declares the
  /// variables allowed to occur free.  Throws ParseError on syntax, scope
  /// and letter errors.
  FoFormula parse_formula(std::string_view                 text,
                          InvolutoryAlphabet const&        alphabet,
                          std::vector<std::string> const&  free = {});

  std::string to_string(FoFormula const& f, InvolutoryAlphabet const& alphabet);

  /// Positions are 1-based.  Throws ArgumentError on an empty word, an
  /// unassigned free variable or a position outside the word.
  bool evaluate(FoFormula const&                          f,
                std::span<Letter const>                   w,
                std::map<std::string, std::size_t> const& env = {});

  /// Every nonempty word of length <= maxlen satisfying the sentence, in
  /// shortlex order.  Throws PreconditionError for a formula with free
  /// variables.
  std::vector<Word> bounded_language(FoFormula const&          f,
                                     InvolutoryAlphabet const& alphabet,
                                     std::size_t               maxlen);

  struct Consistency {
    bool                agree = true;
    /// Shortlex-least word on which the formula and the automaton differ.
    std::optional<Word> mismatch;
    bool                formula_accepts = false;  // at the mismatch
  };

  Consistency consistency_check(FoFormula const&          f,
                                Dfa const&                d,
                                InvolutoryAlphabet const& alphabet,
                                std::size_t               maxlen);

}  // namespace invsg

#endif  // INVSG_FOLOG_HPP_
