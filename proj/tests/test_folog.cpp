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

#include <algorithm>
#include <regex>
#include <set>

#include "invsg/errors.hpp"
#include "invsg/folog.hpp"
#include "oracles.hpp"

using namespace invsg;

namespace {

  InvolutoryAlphabet const ab  = InvolutoryAlphabet::hermitian("ab");
  InvolutoryAlphabet const abc = InvolutoryAlphabet::hermitian("abc");

  std::string const alternating =
      "P_a(min) & P_b(max) & forall x. forall y. (N(x,y) -> (P_a(x) <-> P_b(y)))";

  bool holds(std::string const& f, std::string const& w, InvolutoryAlphabet const& al = ab) {
    return evaluate(parse_formula(f, al), al.word(w));
  }

  std::vector<std::string> language(std::string const& f, std::size_t n,
                                    InvolutoryAlphabet const& al = ab) {
    std::vector<std::string> out;
    for (auto const& w : bounded_language(parse_formula(f, al), al, n)) {
      out.push_back(al.str(w));
    }
    return out;
  }

  // Formulas without min and max, built from N, = and letter atoms.
  std::vector<std::string> symmetric_pool() {
    return {"exists x. exists y. (N(x,y) & P_a(x) & P_a(y))",
            "forall x. (P_a(x) -> exists y. (N(x,y) & P_b(y)))",
            "exists x. (P_b(x) & forall y. (N(x,y) -> P_a(y)))",
            "forall x. forall y. (N(x,y) -> !(P_b(x) & P_b(y)))",
            "exists x. exists y. exists z. (N(x,y) & N(y,z) & !(x = z) & P_a(x) & P_b(y) & P_b(z))",
            "forall x. (P_a(x) | exists y. (N(x,y) & P_a(y)))"};
  }

}  // namespace

TEST_CASE("the alternating sentence parses and evaluates", "[folog]") {
  auto f = parse_formula(alternating, ab);
  CHECK(f.is_sentence());
  CHECK(f.num_slots() == 2);
  CHECK(holds(alternating, "ab"));
  CHECK(holds(alternating, "abab"));
  CHECK_FALSE(holds(alternating, "aa"));
  CHECK_FALSE(holds(alternating, "aba"));
  // The printed form parses back to the same tree.
  CHECK(parse_formula(to_string(f, ab), ab).root == f.root);
}

TEST_CASE("parse errors", "[folog]") {
  CHECK_THROWS_AS(parse_formula("P_a(x)", ab), ParseError);
  CHECK_THROWS_AS(parse_formula("exists x. P_a(y)", ab), ParseError);
  CHECK_THROWS_AS(parse_formula("P_d(min)", abc), ParseError);
  CHECK_THROWS_AS(parse_formula("P_a(min) &", ab), ParseError);
  CHECK_THROWS_AS(parse_formula("exists min. P_a(min)", ab), ParseError);
  CHECK_THROWS_AS(parse_formula("N(min max)", ab), ParseError);
  try {
    parse_formula("P_a(min) & P_z(max)", ab);
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.position() >= 11);
  }
}

TEST_CASE("atoms", "[folog]") {
  CHECK(holds("N(min, max)", "ab"));
  CHECK_FALSE(holds("N(min, max)", "aba"));
  CHECK_FALSE(holds("N(min, min)", "a"));
  CHECK(holds("min = max", "b"));
  auto f = parse_formula("x = x", ab, {"x"});
  CHECK_FALSE(f.is_sentence());
  for (std::size_t i = 1; i <= 3; ++i) {
    CHECK(evaluate(f, ab.word("aba"), {{"x", i}}));
  }
  CHECK_THROWS_AS(evaluate(f, ab.word("aba")), ArgumentError);
  CHECK_THROWS_AS(evaluate(f, ab.word("aba"), {{"x", 4}}), ArgumentError);
  CHECK_THROWS_AS(evaluate(f, Word{}, {{"x", 1}}), ArgumentError);
}

TEST_CASE("quantifiers extend as far right as possible", "[folog]") {
  auto loose = parse_formula("P_a(min) & forall x. P_a(x) | P_b(x)", ab);
  auto tight = parse_formula("P_a(min) & (forall x. (P_a(x) | P_b(x)))", ab);
  CHECK(loose.root == tight.root);
  CHECK(holds("!exists x. P_b(x)", "aa"));
  CHECK_FALSE(holds("!exists x. P_b(x)", "ab"));
}

TEST_CASE("shadowing binds the innermost quantifier", "[folog]") {
  std::string f = "exists x. (P_a(x) & exists x. P_b(x))";
  CHECK(holds(f, "ab"));
  CHECK_FALSE(holds(f, "aa"));
  CHECK(parse_formula(f, ab).num_slots() == 2);
}

TEST_CASE("bounded languages", "[folog]") {
  using V = std::vector<std::string>;
  CHECK(language(alternating, 8) == V{"ab", "abab", "ababab", "abababab"});
  CHECK(language("forall x. P_a(x)", 3) == V{"a", "aa", "aaa"});
  CHECK(language("P_a(min) & P_b(min)", 4).empty());
  CHECK_THROWS_AS(bounded_language(parse_formula("P_a(x)", ab, {"x"}), ab, 3), PreconditionError);
}

TEST_CASE("consistency with automata", "[folog]") {
  auto f  = parse_formula(alternating, ab);
  auto ok = consistency_check(f, regex_dfa("a(ba)*b", ab), ab, 8);
  CHECK(ok.agree);
  CHECK_FALSE(ok.mismatch);

  auto bad = consistency_check(f, regex_dfa("a(ba)*", ab), ab, 4);
  CHECK_FALSE(bad.agree);
  REQUIRE(bad.mismatch);
  CHECK(ab.str(*bad.mismatch) == "a");
  CHECK_FALSE(bad.formula_accepts);
}

TEST_CASE("a sentence agrees with the automaton of its own bounded language", "[folog][property]") {
  for (auto const& text : symmetric_pool()) {
    auto f  = parse_formula(text, ab);
    auto ws = bounded_language(f, ab, 6);
    if (ws.empty()) {
      continue;
    }
    CHECK(consistency_check(f, finite_language_dfa(ws, 2), ab, 6).agree);
  }
}

TEST_CASE("bounded languages of the neighbour signature are closed under reversal", "[folog][property]") {
  for (auto const& text : symmetric_pool()) {
    auto ws = language(text, 7);
    std::set<std::string> set(ws.begin(), ws.end());
    for (auto const& w : ws) {
      INFO(text << " on " << w);
      CHECK(set.count(std::string(w.rbegin(), w.rend())) == 1);
    }
  }
}

TEST_CASE("negated existentials are universals of negations", "[folog][property]") {
  std::vector<std::string> bodies{"P_a(x)", "N(x, max) & P_b(x)", "x = min | P_b(x)",
                                  "exists y. (N(x,y) & P_a(y))"};
  auto ws = oracle::words("ab", 6);
  for (auto const& body : bodies) {
    auto lhs = parse_formula("!(exists x. " + body + ")", ab);
    auto rhs = parse_formula("forall x. !(" + body + ")", ab);
    for (auto const& w : ws) {
      CHECK(evaluate(lhs, ab.word(w)) == evaluate(rhs, ab.word(w)));
    }
  }
}

TEST_CASE("renaming bound variables changes nothing", "[folog][property]") {
  auto ws = oracle::words("ab", 6);
  for (auto text : symmetric_pool()) {
    std::string renamed = text;
    for (auto [from, to] : {std::pair{"x", "p"}, std::pair{"y", "q"}, std::pair{"z", "r"}}) {
      renamed = std::regex_replace(renamed, std::regex(std::string("\\b") + from + "\\b"), to);
    }
    REQUIRE(renamed != text);
    auto f = parse_formula(text, ab), g = parse_formula(renamed, ab);
    CHECK(f.root == g.root);
    for (auto const& w : ws) {
      CHECK(evaluate(f, ab.word(w)) == evaluate(g, ab.word(w)));
    }
  }
}

TEST_CASE("every sentence rejects the empty word", "[folog]") {
  auto f = parse_formula("forall x. P_a(x)", ab);
  auto c = consistency_check(f, regex_dfa("a+", ab), ab, 5);
  CHECK(c.agree);
  CHECK(bounded_language(f, ab, 0).empty());
}
