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

// Involutory alphabets and words over them.

#ifndef INVSG_ALPHABET_HPP_
#define INVSG_ALPHABET_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invsg {

  using Letter = std::uint8_t;
  using Word   = std::vector<Letter>;

  /// A finite alphabet of single ASCII characters together with an
  /// involutive bijection (the dagger) on its letters.  Letters are referred
  /// to by their index in `letters()`.
  class InvolutoryAlphabet {
   public:
    InvolutoryAlphabet() = default;

    /// Throws ArgumentError unless `dagger` is an involution on the letters
    /// and the letters are distinct printable characters.
    InvolutoryAlphabet(std::string letters, std::vector<Letter> dagger);

    /// Alphabet whose dagger is the identity (word involution = reversal).
    static InvolutoryAlphabet hermitian(std::string_view letters);

    /// `letters` plus whitespace-separated pairs "x y" meaning x† = y (and
    /// hence y† = x).  Letters not mentioned in a pair are fixed.
    static InvolutoryAlphabet with_pairs(std::string_view letters,
                                         std::string_view pairs);

    /// Alphabet file format: one line per letter, `x y` meaning x† = y, or a
    /// lone `x` for a fixed letter.  Letters are ordered by first appearance.
    static InvolutoryAlphabet parse(std::string_view text);
    std::string               to_text() const;

    std::size_t size() const noexcept {
      return letters_.size();
    }

    std::string const& letters() const noexcept {
      return letters_;
    }

    char symbol(Letter a) const;
    Letter dagger(Letter a) const;
    std::optional<Letter> index(char c) const noexcept;
    bool is_hermitian() const noexcept;

    /// Converts text to a word; throws ArgumentError on a foreign character.
    Word        word(std::string_view text) const;
    std::string str(std::span<Letter const> w) const;

    bool operator==(InvolutoryAlphabet const&) const = default;

   private:
    std::string         letters_;
    std::vector<Letter> dagger_;
  };

  /// w† = a_n† ... a_1†.  Throws ArgumentError on an out-of-range letter.
  Word word_involution(InvolutoryAlphabet const& alphabet,
                       std::span<Letter const> w);

  /// Plain reversal.
  Word reversed(std::span<Letter const> w);

  /// All words of length in [min_len, max_len] in length-lexicographic order.
  std::vector<Word> all_words(std::size_t num_letters,
                              std::size_t min_len,
                              std::size_t max_len);

  /// Advances `w` to the next word of the same length in lexicographic order;
  /// returns false once the last word has been passed (w wraps to a^n).
  bool next_word(Word& w, std::size_t num_letters);

  /// Shortlex order: shorter first, then lexicographic.
  bool shortlex_less(std::span<Letter const> u, std::span<Letter const> v);

}  // namespace invsg

#endif  // INVSG_ALPHABET_HPP_
