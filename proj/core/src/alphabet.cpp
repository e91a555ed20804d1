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

#include "invsg/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "invsg/errors.hpp"

namespace invsg {

  InvolutoryAlphabet::InvolutoryAlphabet(std::string         letters,
                                         std::vector<Letter> dagger)
      : letters_(std::move(letters)), dagger_(std::move(dagger)) {
    if (letters_.empty()) {
      throw ArgumentError("alphabet must be nonempty");
    }
    if (letters_.size() > 64) {
      throw ArgumentError("alphabets are limited to 64 letters");
    }
    if (dagger_.size() != letters_.size()) {
      throw ArgumentError("dagger must be defined on every letter");
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(letters_[i]);
      if (!std::isgraph(c)) {
        throw ArgumentError("letters must be printable ASCII characters");
      }
      if (letters_.find(letters_[i], i + 1) != std::string::npos) {
        throw ArgumentError(std::string("duplicate letter '") + letters_[i]
                            + "'");
      }
      if (dagger_[i] >= letters_.size()) {
        throw ArgumentError("dagger image out of range");
      }
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (dagger_[dagger_[i]] != i) {
        throw ArgumentError(std::string("dagger is not an involution at '")
                            + letters_[i] + "'");
      }
    }
  }

  InvolutoryAlphabet InvolutoryAlphabet::hermitian(std::string_view letters) {
    std::vector<Letter> id(letters.size());
    for (std::size_t i = 0; i < id.size(); ++i) {
      id[i] = static_cast<Letter>(i);
    }
    return InvolutoryAlphabet(std::string(letters), std::move(id));
  }

  InvolutoryAlphabet InvolutoryAlphabet::with_pairs(std::string_view letters,
                                                    std::string_view pairs) {
    InvolutoryAlphabet result = hermitian(letters);
    std::istringstream in{std::string(pairs)};
    std::string        x, y;
    while (in >> x) {
      if (!(in >> y) || x.size() != 1 || y.size() != 1) {
        throw ArgumentError("dagger pairs must be single letters 'x y'");
      }
      auto i = result.index(x[0]);
      auto j = result.index(y[0]);
      if (!i || !j) {
        throw ArgumentError("dagger pair mentions an unknown letter");
      }
      for (Letter l : {*i, *j}) {
        if (result.dagger_[l] != l) {
          throw ArgumentError(std::string("letter '") + result.letters_[l]
                              + "' paired twice");
        }
      }
      result.dagger_[*i] = *j;
      result.dagger_[*j] = *i;
    }
    return result;
  }

  InvolutoryAlphabet InvolutoryAlphabet::parse(std::string_view text) {
    std::string                      letters;
    std::vector<std::pair<char, char>> pairs;
    std::istringstream               in{std::string(text)};
    std::string                      line;
    auto add = [&letters](char c) {
      if (letters.find(c) == std::string::npos) {
        letters.push_back(c);
      }
    };
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string        x, y, extra;
      if (!(ls >> x)) {
        continue;
      }
      if (x.size() != 1) {
        throw ArgumentError("alphabet file: letters are single characters");
      }
      add(x[0]);
      if (ls >> y) {
        if (y.size() != 1 || (ls >> extra)) {
          throw ArgumentError("alphabet file: expected 'x y' per line");
        }
        add(y[0]);
        pairs.emplace_back(x[0], y[0]);
      }
    }
    InvolutoryAlphabet result = hermitian(letters);
    for (auto [x, y] : pairs) {
      Letter i = *result.index(x);
      Letter j = *result.index(y);
      if ((result.dagger_[i] != i && result.dagger_[i] != j)
          || (result.dagger_[j] != j && result.dagger_[j] != i)) {
        throw ArgumentError("alphabet file: inconsistent dagger pairs");
      }
      result.dagger_[i] = j;
      result.dagger_[j] = i;
    }
    return result;
  }

  std::string InvolutoryAlphabet::to_text() const {
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      out += letters_[i];
      out += ' ';
      out += letters_[dagger_[i]];
      out += '\n';
    }
    return out;
  }

  char InvolutoryAlphabet::symbol(Letter a) const {
    if (a >= letters_.size()) {
      throw ArgumentError("letter index out of range");
    }
    return letters_[a];
  }

  Letter InvolutoryAlphabet::dagger(Letter a) const {
    if (a >= dagger_.size()) {
      throw ArgumentError("letter index out of range");
    }
    return dagger_[a];
  }

  std::optional<Letter> InvolutoryAlphabet::index(char c) const noexcept {
    auto pos = letters_.find(c);
    if (pos == std::string::npos) {
      return std::nullopt;
    }
    return static_cast<Letter>(pos);
  }

  bool InvolutoryAlphabet::is_hermitian() const noexcept {
    for (std::size_t i = 0; i < dagger_.size(); ++i) {
      if (dagger_[i] != i) {
        return false;
      }
    }
    return true;
  }

  Word InvolutoryAlphabet::word(std::string_view text) const {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
      auto i = index(c);
      if (!i) {
        throw ArgumentError(std::string("unknown letter '") + c + "'");
      }
      w.push_back(*i);
    }
    return w;
  }

  std::string InvolutoryAlphabet::str(std::span<Letter const> w) const {
    std::string out;
    out.reserve(w.size());
    for (Letter a : w) {
      out.push_back(symbol(a));
    }
    return out;
  }

  Word word_involution(InvolutoryAlphabet const& alphabet,
                       std::span<Letter const> w) {
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] >= alphabet.size()) {
        throw ArgumentError("malformed word: letter index out of range");
      }
      out[w.size() - 1 - i] = alphabet.dagger(w[i]);
    }
    return out;
  }

  Word reversed(std::span<Letter const> w) {
    return Word(w.rbegin(), w.rend());
  }

  bool next_word(Word& w, std::size_t num_letters) {
    for (std::size_t i = w.size(); i-- > 0;) {
      if (w[i] + 1u < num_letters) {
        ++w[i];
        return true;
      }
      w[i] = 0;
    }
    return false;
  }

  std::vector<Word> all_words(std::size_t num_letters,
                              std::size_t min_len,
                              std::size_t max_len) {
    std::vector<Word> out;
    if (num_letters == 0) {
      return out;
    }
    for (std::size_t len = min_len; len <= max_len; ++len) {
      Word w(len, 0);
      do {
        out.push_back(w);
      } while (next_word(w, num_letters));
    }
    return out;
  }

  bool shortlex_less(std::span<Letter const> u, std::span<Letter const> v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
  }

}  // namespace invsg
