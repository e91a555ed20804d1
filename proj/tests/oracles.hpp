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


// Independent oracles and small generators shared by the test suites.  None
// of these call into the library beyond word/alphabet plumbing.

#ifndef INVSG_TESTS_ORACLES_HPP_
#define INVSG_TESTS_ORACLES_HPP_

#include <algorithm>
#include <map>
#include <random>
#include <regex>
#include <string>
#include <vector>

namespace oracle {

  /// Membership through std::regex; our regex syntax is a subset of ECMAScript.
  inline bool member(std::string const& re, std::string const& w) {
    static std::map<std::string, std::regex> cache;
    auto it = cache.find(re);
    if (it == cache.end()) {
      it = cache.emplace(re, std::regex(re)).first;
    }
    return !w.empty() && std::regex_match(w, it->second);
  }

  /// All nonempty words over `letters` of length <= n, shortlex.
  inline std::vector<std::string> words(std::string const& letters, std::size_t n) {
    std::vector<std::string> out, layer{""};
    for (std::size_t len = 1; len <= n; ++len) {
      std::vector<std::string> next;
      for (auto const& w : layer) {
        for (char c : letters) {
          next.push_back(w + c);
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

  inline std::size_t count(std::string const& w, std::string const& v) {
    std::size_t n = 0;
    for (std::size_t i = 0; i + v.size() <= w.size(); ++i) {
      n += w.compare(i, v.size(), v) == 0;
    }
    return n;
  }

  /// w† for a dagger given as a character map (identity when empty).
  inline std::string involution(std::string w, std::map<char, char> const& dagger = {}) {
    std::reverse(w.begin(), w.end());
    for (char& c : w) {
      if (auto it = dagger.find(c); it != dagger.end()) {
        c = it->second;
      }
    }
    return w;
  }

  /// A string determining the ≈ class of w: the short word, or prefix,
  /// suffix and capped factor counts (reverse mode pools v with v†).
  inline std::string signature(std::string const& w, std::size_t k, std::size_t t, bool reverse,
                               std::map<char, char> const& dagger = {}) {
    if (w.size() < k) {
      return "short " + w;
    }
    std::map<std::string, std::size_t> counts;
    for (std::size_t len = 1; len <= k; ++len) {
      for (std::size_t i = 0; i + len <= w.size(); ++i) {
        std::string v = w.substr(i, len);
        if (reverse) {
          v = std::min(v, involution(v, dagger));
        }
        ++counts[v];
      }
    }
    std::string key = w.substr(0, k - 1) + "|" + w.substr(w.size() - (k - 1)) + "|";
    for (auto const& [v, n] : counts) {
      key += v + ":" + std::to_string(std::min(n, t)) + ",";
    }
    return key;
  }

  /// Whether the language given by `accept` is a union of classes among
  /// the words over `letters` of length <= n.
  template <typename F>
  bool union_of_classes(std::string const& letters, std::size_t n, std::size_t k,
                        std::size_t t, bool reverse, F accept) {
    std::map<std::string, int> seen;
    for (auto const& w : words(letters, n)) {
      int  a              = accept(w) ? 1 : 2;
      auto [it, inserted] = seen.emplace(signature(w, k, t, reverse), a);
      if (!inserted && it->second != a) {
        return false;
      }
    }
    return true;
  }

  inline std::string random_word(std::mt19937_64& rng, std::string const& letters,
                                 std::size_t min_len, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len), pick(0, letters.size() - 1);
    std::string w(len(rng), ' ');
    for (char& c : w) {
      c = letters[pick(rng)];
    }
    return w;
  }

  /// A random regex over `letters` with about `size` operators.
  inline std::string random_regex(std::mt19937_64& rng, std::string const& letters, int size) {
    std::uniform_int_distribution<int> op(0, 5);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    if (size <= 0) {
      return std::string(1, letters[pick(rng)]);
    }
    switch (op(rng)) {
      case 0:
      case 1:
        return random_regex(rng, letters, size - 1) + random_regex(rng, letters, size - 2);
      case 2:
        return "(" + random_regex(rng, letters, size - 1) + "|" + random_regex(rng, letters, size - 2) + ")";
      case 3:
        return "(" + random_regex(rng, letters, size - 1) + ")*";
      case 4:
        return "(" + random_regex(rng, letters, size - 1) + ")+";
      default:
        return std::string(1, letters[pick(rng)]);
    }
  }

}  // namespace oracle

#endif  // INVSG_TESTS_ORACLES_HPP_
