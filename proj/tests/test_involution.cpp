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
#include <set>

#include "invsg/errors.hpp"
#include "invsg/involution.hpp"
#include "invsg/regular.hpp"
#include "invsg/syntactic.hpp"
#include "oracles.hpp"

using namespace invsg;

namespace {

  FiniteSemigroup four_element() {
    return from_rewriting(2, {{{0, 0}, {0}}, {{1, 1}, {1}}, {{0, 1, 0}, {1, 0}}, {{1, 0, 1}, {1, 0}}},
                          "ab");
  }

  struct Named {
    FiniteSemigroup t = four_element();
    Elem            a = *t.find_label("a"), b = *t.find_label("b");
    Elem            ab = *t.find_label("ab"), ba = *t.find_label("ba");
  };

  InvolutionSemigroup swapped(Named const& n) {
    std::vector<Elem> gens{n.a, n.b}, imgs{n.b, n.a};
    return InvolutionSemigroup(n.t, *induced_involution(n.t, gens, imgs).star);
  }

}  // namespace

TEST_CASE("swapping the generators of the four-element semigroup", "[involution]") {
  Named n;
  std::vector<Elem> gens{n.a, n.b}, imgs{n.b, n.a};
  auto ind = induced_involution(n.t, gens, imgs);
  REQUIRE(ind.star);
  CHECK_FALSE(ind.conflict);
  auto const& s = *ind.star;
  CHECK(s[n.a] == n.b);
  CHECK(s[n.b] == n.a);
  CHECK(s[n.ab] == n.ab);
  CHECK(s[n.ba] == n.ba);
  CHECK_FALSE(validate_involution(n.t, s));
}

TEST_CASE("the identity is not an involution of the four-element semigroup", "[involution]") {
  Named n;
  std::vector<Elem> gens{n.a, n.b};
  auto ind = induced_involution(n.t, gens, gens);
  CHECK_FALSE(ind.star);
  REQUIRE(ind.conflict);
  CHECK(ind.conflict->element == n.ba);
  CHECK(std::set<Elem>{ind.conflict->image1, ind.conflict->image2} == std::set<Elem>{n.ab, n.ba});

  std::vector<Elem> id{0, 1, 2, 3};
  auto v = validate_involution(n.t, id);
  REQUIRE(v);
  CHECK(v->law == InvolutionViolation::Law::not_anti);
  // (xy)* = xy but y* x* = yx.
  CHECK(n.t.mul(v->x, v->y) != n.t.mul(v->y, v->x));
  CHECK_FALSE(describe(n.t, id, *v).empty());
  CHECK_THROWS_AS(InvolutionSemigroup(n.t, id), ArgumentError);
}

TEST_CASE("identity on a commutative semigroup is an involution", "[involution]") {
  auto s = FiniteSemigroup::from_table(3, {0, 1, 2, 1, 2, 0, 2, 0, 1});
  CHECK_FALSE(validate_involution(s, std::vector<Elem>{0, 1, 2}));
  InvolutionSemigroup is(s, {0, 1, 2});
  CHECK(hermitian_elements(is).size() == 3);
  CHECK(is_hermitian_generated(is));
  CHECK(validate_involution(s, std::vector<Elem>{1, 0, 2}));
  CHECK(validate_involution(s, std::vector<Elem>{0, 1, 7}));
}

TEST_CASE("flip products", "[involution]") {
  auto triv = flip_product(FiniteSemigroup::trivial());
  CHECK(triv.size() == 1);
  CHECK(triv.star(0) == 0);

  auto t = four_element();
  auto f = flip_product(t);
  REQUIRE(f.size() == 16);
  CHECK_FALSE(validate_involution(f.base(), f.star_table()));
  for (Elem x = 0; x < f.size(); ++x) {
    CHECK(f.star(f.star(x)) == x);
    CHECK(f.star(x) == (x % 4) * 4 + x / 4);
  }
}

TEST_CASE("hermitian elements of the four-element star-semigroup", "[involution]") {
  Named n;
  auto  s = swapped(n);
  CHECK(hermitian_elements(s) == std::vector<Elem>{std::min(n.ab, n.ba), std::max(n.ab, n.ba)});
  CHECK_FALSE(is_hermitian_generated(s));
  std::vector<Elem> sub{n.ab, n.ba};
  CHECK(star_closure(s, sub) == std::vector<Elem>{std::min(n.ab, n.ba), std::max(n.ab, n.ba)});
  auto h = sub_star_semigroup(s, sub);
  CHECK(h.size() == 2);
  CHECK(is_hermitian_generated(h));
}

TEST_CASE("recognition of a+b+ by the four-element star-semigroup", "[involution]") {
  Named n;
  auto  s  = swapped(n);
  auto  al = InvolutoryAlphabet::with_pairs("ab", "a b");
  Dfa   d  = regex_dfa("a+b+", al);
  std::vector<Elem> lm{n.a, n.b};
  std::vector<bool> acc(4, false);
  acc[n.ab] = true;
  CHECK(recognizes(s, al, lm, acc, d));
  auto r = recognition(s, al, lm, acc, d);
  CHECK(r.image.size() == 4);

  std::vector<bool> wrong(4, false);
  wrong[n.ba] = true;
  auto bad    = recognition(s, al, lm, wrong, d);
  CHECK_FALSE(bad.recognizes);
  REQUIRE(bad.counterexample);
  CHECK(al.str(*bad.counterexample) == "ab");

  // a -> a on a hermitian alphabet is not compatible with the swap.
  auto herm = InvolutoryAlphabet::hermitian("ab");
  CHECK_THROWS_AS(recognition(s, herm, lm, acc, d), PreconditionError);
}

TEST_CASE("the trivial star-semigroup recognizes everything", "[involution]") {
  auto t  = flip_product(FiniteSemigroup::trivial());
  auto al = InvolutoryAlphabet::hermitian("ab");
  CHECK(recognizes(t, al, std::vector<Elem>{0, 0}, {true}, universal_dfa(2)));
}

TEST_CASE("dual morphism of the syntactic morphism of a+b+", "[involution]") {
  auto al = InvolutoryAlphabet::hermitian("ab");
  auto sd = syntactic_semigroup(regex_dfa("a+b+", al), al);
  auto op = opposite(sd.semigroup);
  auto dual = star_letter_map(al, sd.letter_map);
  CHECK(dual == sd.letter_map);
  for (auto const& w : all_words(2, 1, 5)) {
    CHECK(evaluate(op, dual, w) == evaluate(sd.semigroup, sd.letter_map, reversed(w)));
  }

  // Element-level dual of the identity on a commutative star-semigroup.
  auto c = FiniteSemigroup::from_table(2, {0, 0, 0, 1});
  InvolutionSemigroup cs(c, {0, 1});
  CHECK(star_morphism(cs, c, std::vector<Elem>{0, 1}) == std::vector<Elem>{0, 1});
  CHECK_THROWS_AS(star_morphism(cs, c, std::vector<Elem>{1, 0}), ArgumentError);
}

TEST_CASE("involutory morphisms", "[involution]") {
  Named n;
  auto  s = swapped(n);
  std::vector<Elem> id{0, 1, 2, 3};
  CHECK(is_involutory_morphism(s, s, id));
  auto triv = flip_product(FiniteSemigroup::trivial());
  CHECK(is_involutory_morphism(s, triv, std::vector<Elem>{0, 0, 0, 0}));
  std::vector<Elem> collapse(4, n.ab);
  CHECK_FALSE(is_involutory_morphism(s, s, collapse));
}

TEST_CASE("stars send idempotents to idempotents", "[involution][property]") {
  std::vector<std::string> pool{"a+b+", "a(ba)*b", "(ab)+", "a*b", "(a|b)*ab"};
  auto al = InvolutoryAlphabet::with_pairs("ab", "a b");
  for (auto const& re : pool) {
    for (auto const& alpha : {al, InvolutoryAlphabet::hermitian("ab")}) {
      auto sd = syntactic_star_semigroup(regex_dfa(re, alpha), alpha);
      auto const& s = sd.semigroup;
      for (Elem e : idempotents(s.base())) {
        Elem es = s.star(e);
        CHECK(s.mul(es, es) == es);
      }
    }
  }
}

TEST_CASE("images of involutory morphisms are sub-star-semigroups", "[involution][property]") {
  std::vector<std::string> pool{"a+b+", "a(ba)*b", "(ab)+", "a*b", "(a|b)*ab", "b+a"};
  auto al = InvolutoryAlphabet::hermitian("ab");
  for (auto const& re : pool) {
    Dfa  d    = regex_dfa(re, al);
    auto sd   = syntactic_semigroup(d, al);
    auto flip = flip_product(sd.semigroup);
    std::vector<Elem> g;
    for (Letter a = 0; a < al.size(); ++a) {
      g.push_back(sd.letter_map[a] * static_cast<Elem>(sd.semigroup.size())
                  + sd.letter_map[al.dagger(a)]);
    }
    std::vector<bool> acc(flip.size());
    for (Elem x = 0; x < flip.size(); ++x) {
      acc[x] = sd.accepting[x / sd.semigroup.size()];
    }
    auto r = recognition(flip, al, g, acc, d);
    CHECK(r.recognizes);
    auto image = r.image;
    std::sort(image.begin(), image.end());
    CHECK(star_closure(flip, image) == image);
    auto sub = sub_star_semigroup(flip, image);
    // The image is generated by letter images, which are hermitian here.
    CHECK(is_hermitian_generated(sub));
  }
}

TEST_CASE("flip recognizers agree with the oracle on words", "[involution][property]") {
  auto al = InvolutoryAlphabet::hermitian("abc");
  for (std::string re : {"c*abc*", "(abc)+", "a(b|c)*"}) {
    Dfa  d  = regex_dfa(re, al);
    auto sd = syntactic_semigroup(d, al);
    for (auto const& w : oracle::words("abc", 5)) {
      bool in = sd.accepting[evaluate(sd.semigroup, sd.letter_map, al.word(w))];
      CHECK(in == oracle::member(re, w));
    }
  }
}
