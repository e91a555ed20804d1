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

#include "invsg/factors.hpp"

#include <algorithm>

#include "invsg/errors.hpp"

namespace invsg {

  char const* to_string(Mode m) noexcept {
    return m == Mode::plain ? "plain" : "reverse";
  }

  std::optional<Mode> parse_mode(std::string_view text) noexcept {
    if (text == "plain") {
      return Mode::plain;
    }
    if (text == "reverse") {
      return Mode::reverse;
    }
    return std::nullopt;
  }

  namespace {
    bool occurs_at(std::span<Letter const> w,
                   std::size_t             pos,
                   std::span<Letter const> v) {
      return std::equal(v.begin(), v.end(), w.begin() + pos);
    }
  }  // namespace

  std::size_t count_factor(std::span<Letter const> w,
                           std::span<Letter const> v) {
    if (v.empty()) {
      throw ArgumentError("count_factor: the factor must be nonempty");
    }
    std::size_t n = 0;
    for (std::size_t i = 0; i + v.size() <= w.size(); ++i) {
      n += occurs_at(w, i, v);
    }
    return n;
  }

  std::size_t count_factor_rev(InvolutoryAlphabet const& alphabet,
                               std::span<Letter const>   w,
                               std::span<Letter const>   v) {
    if (v.empty()) {
      throw ArgumentError("count_factor_rev: the factor must be nonempty");
    }
    Word const  vd = word_involution(alphabet, v);
    std::size_t n  = 0;
    for (std::size_t i = 0; i + v.size() <= w.size(); ++i) {
      n += occurs_at(w, i, v) || occurs_at(w, i, vd);
    }
    return n;
  }

  Word factor_key(InvolutoryAlphabet const& alphabet,
                  std::span<Letter const>   v,
                  Mode                      mode) {
    Word key(v.begin(), v.end());
    if (mode == Mode::reverse) {
      Word vd = word_involution(alphabet, v);
      if (vd < key) {
        key = std::move(vd);
      }
    }
    return key;
  }

  Signature signature(InvolutoryAlphabet const& alphabet,
                      std::span<Letter const>   w,
                      std::size_t               k,
                      std::size_t               t,
                      Mode                      mode) {
    if (w.empty()) {
      throw ArgumentError("signature: the word must be nonempty");
    }
    if (k == 0 || t == 0) {
      throw ArgumentError("signature: k and t must be positive");
    }
    for (Letter a : w) {
      if (a >= alphabet.size()) {
        throw ArgumentError("malformed word: letter index out of range");
      }
    }
    Signature sig;
    sig.mode = mode;
    sig.k    = k;
    sig.t    = t;
    if (w.size() < k) {
      sig.short_word = Word(w.begin(), w.end());
      return sig;
    }
    sig.prefix.assign(w.begin(), w.begin() + (k - 1));
    sig.suffix.assign(w.end() - (k - 1), w.end());
    for (std::size_t len = 1; len <= k; ++len) {
      for (std::size_t i = 0; i + len <= w.size(); ++i) {
        auto& c = sig.counts[factor_key(alphabet, w.subspan(i, len), mode)];
        c       = std::min<std::uint32_t>(c + 1, static_cast<std::uint32_t>(t));
      }
    }
    return sig;
  }

  bool equivalent(InvolutoryAlphabet const& alphabet,
                  std::span<Letter const>   w,
                  std::span<Letter const>   w2,
                  std::size_t               k,
                  std::size_t               t,
                  Mode                      mode) {
    return signature(alphabet, w, k, t, mode)
           == signature(alphabet, w2, k, t, mode);
  }

  std::string format_signature(InvolutoryAlphabet const& alphabet,
                               Signature const&          sig) {
    std::string out;
    out += "mode: ";
    out += to_string(sig.mode);
    out += "\nk: " + std::to_string(sig.k) + "\nt: " + std::to_string(sig.t)
           + "\n";
    if (sig.short_word) {
      out += "short_word: " + alphabet.str(*sig.short_word) + "\n";
      return out;
    }
    out += "prefix: " + alphabet.str(sig.prefix) + "\n";
    out += "suffix: " + alphabet.str(sig.suffix) + "\n";
    // Stable order: by factor length, then lexicographic.
    std::vector<std::pair<Word, std::uint32_t>> items(sig.counts.begin(),
                                                      sig.counts.end());
    std::stable_sort(items.begin(), items.end(), [](auto const& x, auto const& y) {
      return shortlex_less(x.first, y.first);
    });
    for (auto const& [key, count] : items) {
      std::string name = alphabet.str(key);
      if (sig.mode == Mode::reverse) {
        Word kd = word_involution(alphabet, key);
        if (kd != key) {
          name += "/" + alphabet.str(kd);
        }
      }
      out += "count " + name + ": " + std::to_string(count) + "\n";
    }
    return out;
  }

}  // namespace invsg
