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

// Regular languages over A+: regular expressions, complete DFAs, Boolean
// algebra, quotients, language involution and inverse morphic images.
//
// Every language handled here is a subset of A+; the empty word is never
// accepted, and complements are taken relative to A+.

#ifndef INVSG_REGULAR_HPP_
#define INVSG_REGULAR_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "invsg/alphabet.hpp"

namespace invsg {

  inline constexpr std::size_t default_state_budget = 1u << 20;

  struct Regex {
    enum class Kind { letter, concat, alt, star, plus };

    Kind               kind   = Kind::letter;
    Letter             letter = 0;
    std::vector<Regex> children;
  };

  /// Grammar:
  ///   expr   := term ('|' term)*
  ///   term   := factor+
  ///   factor := atom ('*' | '+')?
  ///   atom   := LETTER | '(' expr ')'
  /// Whitespace is ignored.  Throws ParseError on a syntax error or a letter
  /// outside `alphabet`.
  Regex parse_regex(std::string_view text, InvolutoryAlphabet const& alphabet);

  std::string to_string(Regex const& r, InvolutoryAlphabet const& alphabet);

  /// Complete deterministic automaton.  States are 0..num_states()-1.
  class Dfa {
   public:
    using State = std::uint32_t;

    Dfa() = default;
    Dfa(std::size_t num_letters, std::size_t num_states, State initial = 0);

    std::size_t num_states() const noexcept {
      return final_.size();
    }

    std::size_t num_letters() const noexcept {
      return num_letters_;
    }

    State initial() const noexcept {
      return initial_;
    }

    State next(State q, Letter a) const {
      return delta_[q * num_letters_ + a];
    }

    bool is_final(State q) const {
      return final_[q] != 0;
    }

    void set_initial(State q);
    void set_next(State q, Letter a, State r);
    void set_final(State q, bool f = true);

    State add_state();

    State run(State q, std::span<Letter const> w) const;

    /// Membership in the A+ language; the empty word is always rejected.
    bool accepts(std::span<Letter const> w) const;

    /// Text format: `states: n`, `initial: i`, `finals: i j ...`, then one
    /// `q a q'` line per transition.  Missing transitions go to a fresh sink.
    static Dfa  parse(std::string_view text, InvolutoryAlphabet const& alphabet);
    std::string to_text(InvolutoryAlphabet const& alphabet) const;

    /// Structural equality (compare minimized automata for language equality).
    bool operator==(Dfa const&) const = default;

   private:
    std::size_t              num_letters_ = 0;
    State                    initial_     = 0;
    std::vector<State>       delta_;
    std::vector<std::uint8_t> final_;
  };

  /// The unique minimal complete DFA with states numbered in breadth-first
  /// order from the initial state (letters in increasing order).
  Dfa minimize(Dfa const& d);

  /// Regex -> NFA -> subset construction -> minimize.  Throws ResourceLimit
  /// when determinization exceeds `budget` states.
  Dfa to_dfa(Regex const&              r,
             std::size_t               num_letters,
             std::size_t               budget = default_state_budget);

  /// Convenience: parse + to_dfa.
  Dfa regex_dfa(std::string_view          text,
                InvolutoryAlphabet const& alphabet,
                std::size_t               budget = default_state_budget);

  Dfa universal_dfa(std::size_t num_letters);  // A+
  Dfa empty_dfa(std::size_t num_letters);

  /// DFA of a finite set of nonempty words.
  Dfa finite_language_dfa(std::vector<Word> const& words,
                          std::size_t              num_letters);

  enum class BoolOp { union_, intersection, difference };

  /// Throws ArgumentError when the alphabets differ.
  Dfa boolean_op(Dfa const& d1, Dfa const& d2, BoolOp op);
  Dfa complement(Dfa const& d);  // relative to A+

  bool is_empty(Dfa const& d);
  bool same_language(Dfa const& d1, Dfa const& d2);

  enum class Side { left, right };

  /// left: {w in A+ : a w in L};  right: {w in A+ : w a in L}.
  Dfa quotient(Dfa const& d, Letter a, Side side);
  Dfa word_quotient(Dfa const& d, std::span<Letter const> u, Side side);

  /// Reversal of the language (a -> a, no dagger).
  Dfa reverse_language(Dfa const&  d,
                       std::size_t budget = default_state_budget);

  /// L† = { w† : w in L }.
  Dfa language_involution(Dfa const&                d,
                          InvolutoryAlphabet const& alphabet,
                          std::size_t               budget = default_state_budget);

  struct InverseImage {
    Dfa  dfa;
    bool involutory = false;  // h(a†) = h(a)† for every source letter
  };

  /// h^{-1}(L) for the morphism A+ -> B+ given by letter images.  Throws
  /// ArgumentError on an empty image (semigroup morphisms only) or a letter
  /// outside B.
  InverseImage inverse_morphism_image(Dfa const&                d,
                                      InvolutoryAlphabet const& target,
                                      std::vector<Word> const&  letter_images,
                                      InvolutoryAlphabet const& source);

  /// Accepted words of length 1..maxlen in shortlex order.
  std::vector<Word> bounded_words(Dfa const& d, std::size_t maxlen);

  /// States reachable from the initial state, and those from which a final
  /// state is reachable.
  std::vector<bool> reachable_states(Dfa const& d);
  std::vector<bool> coaccessible_states(Dfa const& d);

}  // namespace invsg

#endif  // INVSG_REGULAR_HPP_
