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

// Factor statistics and the two threshold equivalences on words.

#ifndef INVSG_FACTORS_HPP_
#define INVSG_FACTORS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "invsg/alphabet.hpp"

namespace invsg {

  /// Which threshold equivalence is meant: `plain` counts every factor on its
  /// own, `reverse` counts a factor together with its involution.
  enum class Mode { plain, reverse };

  char const*          to_string(Mode m) noexcept;
  std::optional<Mode>  parse_mode(std::string_view text) noexcept;

  /// i =^t j: equal below the threshold, or both at least t.
  constexpr bool threshold_eq(std::uint64_t i,
                              std::uint64_t j,
                              std::uint64_t t) noexcept {
    return i < t ? i == j : j >= t;
  }

  /// Number of pairs (x, z) with w = x v z; overlapping occurrences count.
  std::size_t count_factor(std::span<Letter const> w,
                           std::span<Letter const> v);

  /// Number of pairs (x, y) with w = x v y or w = x v† y.  An occurrence is
  /// counted once even when v = v†.
  std::size_t count_factor_rev(InvolutoryAlphabet const& alphabet,
                               std::span<Letter const> w,
                               std::span<Letter const> v);

  /// The canonical key of the factor class of v: v itself in plain mode, the
  /// lexicographically smaller of v and v† in reverse mode.
  Word factor_key(InvolutoryAlphabet const& alphabet,
                  std::span<Letter const>   v,
                  Mode                      mode);

  /// Descriptor of a ≈ class.  Either `short_word` is set (|w| < k) or the
  /// prefix/suffix/counts triple is.  Only nonzero counts are stored.
  struct Signature {
    Mode                       mode = Mode::plain;
    std::size_t                k    = 1;
    std::size_t                t    = 1;
    std::optional<Word>        short_word;
    Word                       prefix;
    Word                       suffix;
    std::map<Word, std::uint32_t> counts;

    bool operator==(Signature const&) const = default;
  };

  /// Throws ArgumentError on an empty word or k, t == 0.
  Signature signature(InvolutoryAlphabet const& alphabet,
                      std::span<Letter const>   w,
                      std::size_t               k,
                      std::size_t               t,
                      Mode                      mode);

  bool equivalent(InvolutoryAlphabet const& alphabet,
                  std::span<Letter const>   w,
                  std::span<Letter const>   w2,
                  std::size_t               k,
                  std::size_t               t,
                  Mode                      mode);

  /// Multi-line `key: value` rendering used by the CLI.
  std::string format_signature(InvolutoryAlphabet const& alphabet,
                               Signature const&          sig);

}  // namespace invsg

#endif  // INVSG_FACTORS_HPP_
