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


#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "invsg/alphabet.hpp"
#include "invsg/errors.hpp"
#include "invsg/regular.hpp"
#include "oracles.hpp"

using namespace invsg;

namespace {

  InvolutoryAlphabet const ab  = InvolutoryAlphabet::hermitian("ab");
  InvolutoryAlphabet const abc = InvolutoryAlphabet::hermitian("abc");

  Dfa re(std::string const& text, InvolutoryAlphabet const& al = ab) {
    return regex_dfa(text, al);
  }

  std::vector<std::string> listing(Dfa const& d, InvolutoryAlphabet const& al, std::size_t n) {
    std::vector<std::string> out;
    for (auto const& w : bounded_words(d, n)) {
      out.push_back(al.str(w));
    }
    return out;
  }

}  // namespace

TEST_CASE("regex parsing", "[regular]") {
  auto r = parse_regex("a(ba)*b", ab);
  CHECK(r.kind == Regex::Kind::concat);
  CHECK(to_string(parse_regex(" c* a b c* ", abc), abc).find('c') != std::string::npos);
  CHECK_THROWS_AS(parse_regex("(", ab), ParseError);
  CHECK_THROWS_AS(parse_regex("a|", ab), ParseError);
  CHECK_THROWS_AS(parse_regex("ax", ab), ParseError);
  CHECK_THROWS_AS(parse_regex("*a", ab), ParseError);
}

TEST_CASE("membership of the running examples", "[regular]") {
  CHECK(re("a(ba)*b").accepts(ab.word("abab")));
  CHECK_FALSE(re("a(ba)*b").accepts(ab.word("aba")));
  CHECK_FALSE(re("c*abc*", abc).accepts(abc.word("cbac")));
  CHECK(re("c*abc*", abc).accepts(abc.word("ccabc")));
  CHECK_FALSE(re("a*").accepts(Word{}));
}

TEST_CASE("bounded enumeration", "[regular]") {
  using V = std::vector<std::string>;
  CHECK(listing(re("a(ba)*b"), ab, 8) == V{"ab", "abab", "ababab", "abababab"});
  CHECK(listing(empty_dfa(2), ab, 8).empty());
  CHECK(listing(re("c*abc*", abc), abc, 3) == V{"ab", "abc", "cab"});
}

TEST_CASE("boolean algebra", "[regular]") {
  Dfa l = re("a(ba)*b");
  CHECK(is_empty(boolean_op(l, complement(l), BoolOp::intersection)));
  CHECK(same_language(boolean_op(l, complement(l), BoolOp::union_), universal_dfa(2)));
  CHECK(same_language(complement(complement(l)), l));
  CHECK(is_empty(boolean_op(l, l, BoolOp::difference)));
  CHECK_THROWS_AS(boolean_op(l, re("c", abc), BoolOp::union_), ArgumentError);
}

TEST_CASE("quotients", "[regular]") {
  CHECK(same_language(quotient(re("a(ba)*b"), 0, Side::left), re("(ba)*b")));
  CHECK(same_language(quotient(re("a+b+"), 1, Side::right), re("a+b*")));
  CHECK(is_empty(quotient(re("b(a|b)*"), 0, Side::left)));
  CHECK(same_language(word_quotient(re("a(ba)*b"), ab.word("ab"), Side::left), re("(ab)+")));
}

TEST_CASE("language involution", "[regular]") {
  auto swap = InvolutoryAlphabet::with_pairs("ab", "a b");
  CHECK(same_language(language_involution(re("a+b+", swap), swap), re("a+b+", swap)));
  CHECK(same_language(language_involution(re("a(ba)*b"), ab), re("b(ab)*a")));
  CHECK(same_language(language_involution(re("aaa*"), ab), re("aaa*")));
  CHECK(same_language(reverse_language(re("a(ba)*b")), re("b(ab)*a")));
}

TEST_CASE("inverse morphic image of (xy)*ab(xy)*", "[regular]") {
  auto xy = InvolutoryAlphabet::hermitian("abxy");
  Dfa  l  = regex_dfa("(xy)*ab(xy)*", xy);
  auto im = inverse_morphism_image(l, xy, {xy.word("a"), xy.word("b"), xy.word("xy")}, abc);
  CHECK(same_language(im.dfa, re("c*abc*", abc)));
  // c -> xy but c† = c while (xy)† = yx.
  CHECK_FALSE(im.involutory);

  auto id = inverse_morphism_image(re("a(ba)*b"), ab, {ab.word("a"), ab.word("b")}, ab);
  CHECK(same_language(id.dfa, re("a(ba)*b")));
  CHECK(id.involutory);
  CHECK_THROWS_AS(inverse_morphism_image(re("ab"), ab, {Word{}, ab.word("b")}, ab), ArgumentError);
}

TEST_CASE("dfa text format round trip", "[regular]") {
  Dfa d = minimize(re("c*abc*", abc));
  CHECK(minimize(Dfa::parse(d.to_text(abc), abc)) == d);
  Dfa sparse = Dfa::parse("states: 2\ninitial: 0\nfinals: 1\n0 a 1\n", ab);
  CHECK(listing(sparse, ab, 3) == std::vector<std::string>{"a"});
  CHECK_THROWS_AS(Dfa::parse("states: 1\ninitial: 3\nfinals:\n", ab), ParseError);
}

TEST_CASE("minimization is canonical", "[regular]") {
  CHECK(minimize(re("(a|b)*a")) == minimize(re("(b*a)+")));
  CHECK(minimize(re("a+b+")).num_states() == 4);
}

TEST_CASE("the subset construction respects its budget", "[regular]") {
  CHECK_THROWS_AS(regex_dfa("(a|b)*a(a|b)(a|b)(a|b)(a|b)(a|b)(a|b)(a|b)", ab, 20), ResourceLimit);
}

TEST_CASE("random regexes agree with std::regex", "[regular][property]") {
  std::mt19937_64 rng(2026);
  auto            ws = oracle::words("ab", 8);
  for (int i = 0; i < 60; ++i) {
    std::string text = oracle::random_regex(rng, "ab", 5);
    Dfa         d    = re(text);
    for (auto const& w : ws) {
      INFO(text << " on " << w);
      REQUIRE(d.accepts(ab.word(w)) == oracle::member(text, w));
    }
  }
}

TEST_CASE("involution is an involution and commutes with boolean operations", "[regular][property]") {
  std::mt19937_64 rng(5);
  auto            swap = InvolutoryAlphabet::with_pairs("abc", "a b");
  for (int i = 0; i < 30; ++i) {
    Dfa l = re(oracle::random_regex(rng, "abc", 4), swap);
    Dfa m = re(oracle::random_regex(rng, "abc", 4), swap);
    Dfa li = language_involution(l, swap), mi = language_involution(m, swap);
    CHECK(same_language(language_involution(li, swap), l));
    CHECK(same_language(language_involution(boolean_op(l, m, BoolOp::union_), swap),
                        boolean_op(li, mi, BoolOp::union_)));
    CHECK(same_language(language_involution(boolean_op(l, m, BoolOp::intersection), swap),
                        boolean_op(li, mi, BoolOp::intersection)));
  }
}

TEST_CASE("quotients are dual under the involution", "[regular][property]") {
  std::mt19937_64 rng(8);
  auto            swap = InvolutoryAlphabet::with_pairs("abc", "a b");
  for (int i = 0; i < 30; ++i) {
    Dfa  l = re(oracle::random_regex(rng, "abc", 4), swap);
    Word u = swap.word(oracle::random_word(rng, "abc", 1, 3));
    // (u^{-1} L)† = L† (u†)^{-1}
    Dfa lhs = language_involution(word_quotient(l, u, Side::left), swap);
    Dfa rhs = word_quotient(language_involution(l, swap), word_involution(swap, u), Side::right);
    CHECK(same_language(lhs, rhs));
  }
}

TEST_CASE("inverse images compose contravariantly", "[regular][property]") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    Dfa               l = re(oracle::random_regex(rng, "ab", 4));
    std::vector<Word> g{ab.word(oracle::random_word(rng, "ab", 1, 2)),
                        ab.word(oracle::random_word(rng, "ab", 1, 2))};
    std::vector<Word> h{ab.word(oracle::random_word(rng, "ab", 1, 2)),
                        ab.word(oracle::random_word(rng, "ab", 1, 2))};
    // (g ∘ h)(a) = g(h(a))
    std::vector<Word> gh;
    for (auto const& w : h) {
      Word img;
      for (Letter a : w) {
        img.insert(img.end(), g[a].begin(), g[a].end());
      }
      gh.push_back(img);
    }
    Dfa once  = inverse_morphism_image(l, ab, gh, ab).dfa;
    Dfa twice = inverse_morphism_image(inverse_morphism_image(l, ab, g, ab).dfa, ab, h, ab).dfa;
    CHECK(same_language(once, twice));
  }
}
