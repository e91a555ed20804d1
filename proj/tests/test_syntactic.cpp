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

#include <map>

#include "invsg/errors.hpp"
#include "invsg/involution.hpp"
#include "invsg/regular.hpp"
#include "invsg/syntactic.hpp"
#include "oracles.hpp"

using namespace invsg;

namespace {

  struct Case {
    std::string        regex;
    InvolutoryAlphabet alphabet;
  };

  std::vector<Case> pool() {
    auto ab   = InvolutoryAlphabet::hermitian("ab");
    auto abc  = InvolutoryAlphabet::hermitian("abc");
    auto swap = InvolutoryAlphabet::with_pairs("ab", "a b");
    return {{"a+b+", swap}, {"a(ba)*b", ab}, {"(ab)+", swap}, {"c*abc*", abc}, {"(abc)+", abc}};
  }

  // Context classes: x ~ y iff u x v and u y v agree for all contexts of
  // length <= c (the empty context included), read off the DFA.
  template <typename Key>
  bool same_partition(std::vector<Word> const& ws, Key&& lhs, std::vector<std::vector<bool>> const& rhs) {
    std::map<decltype(lhs(ws[0])), std::size_t> l2r;
    std::map<std::vector<bool>, decltype(lhs(ws[0]))> r2l;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      auto k = lhs(ws[i]);
      if (auto [it, fresh] = l2r.emplace(k, i); !fresh && rhs[it->second] != rhs[i]) {
        return false;
      }
      if (auto [it, fresh] = r2l.emplace(rhs[i], k); !fresh && it->second != k) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::vector<bool>> context_vectors(Dfa const& d, std::size_t nletters,
                                                 std::vector<Word> const& ws, std::size_t c) {
    auto ctx = all_words(nletters, 0, c);
    std::vector<std::vector<bool>> out;
    for (auto const& x : ws) {
      std::vector<bool> v;
      for (auto const& u : ctx) {
        for (auto const& w : ctx) {
          Word uxv = u;
          uxv.insert(uxv.end(), x.begin(), x.end());
          uxv.insert(uxv.end(), w.begin(), w.end());
          v.push_back(d.accepts(uxv));
        }
      }
      out.push_back(std::move(v));
    }
    return out;
  }

  std::size_t word_len(InvolutoryAlphabet const& al) {
    return al.size() == 2 ? 7 : 5;
  }

}  // namespace

TEST_CASE("syntactic semigroup of a+b+", "[syntactic]") {
  auto al = InvolutoryAlphabet::hermitian("ab");
  auto sd = syntactic_semigroup(regex_dfa("a+b+", al), al);
  REQUIRE(sd.semigroup.size() == 4);
  std::vector<std::string> labels;
  for (auto const& w : sd.representatives) {
    labels.push_back(al.str(w));
  }
  CHECK(labels == std::vector<std::string>{"a", "b", "ab", "ba"});
  Elem zero = *sd.semigroup.find_label("ba");
  for (Elem x = 0; x < 4; ++x) {
    CHECK(sd.semigroup.mul(x, zero) == zero);
    CHECK(sd.semigroup.mul(zero, x) == zero);
  }
  CHECK(sd.accepting == std::vector<bool>{false, false, true, false});
  auto four = from_rewriting(2, {{{0, 0}, {0}}, {{1, 1}, {1}}, {{0, 1, 0}, {1, 0}}, {{1, 0, 1}, {1, 0}}}, "ab");
  CHECK(find_isomorphism(sd.semigroup, four));
}

TEST_CASE("syntactic semigroup of the full language", "[syntactic]") {
  auto al = InvolutoryAlphabet::hermitian("ab");
  CHECK(syntactic_semigroup(universal_dfa(2), al).semigroup.size() == 1);
  CHECK_THROWS_AS(syntactic_semigroup(regex_dfa("(a|b)*a(a|b)(a|b)(a|b)", al), al, 8), ResourceLimit);
}

TEST_CASE("syntactic star-semigroup of a+b+ under the swap", "[syntactic]") {
  auto al = InvolutoryAlphabet::with_pairs("ab", "a b");
  Dfa  d  = regex_dfa("a+b+", al);
  auto sd = syntactic_star_semigroup(d, al);
  REQUIRE(sd.semigroup.size() == 4);
  CHECK(find_isomorphism(sd.semigroup.base(), sd.syntactic.semigroup));
  CHECK(hermitian_elements(sd.semigroup).size() == 2);
  auto anti = anti_isomorphism_check(d, al);
  CHECK(anti.found);
  CHECK(anti.matches_alpha);
}

TEST_CASE("reversible languages over hermitian alphabets", "[syntactic]") {
  auto al = InvolutoryAlphabet::hermitian("ab");
  for (std::string re : {"(ab)*a", "a(a|b)*a|a", "(a|b)*aa(a|b)*"}) {
    Dfa d = regex_dfa(re, al);
    REQUIRE(same_language(language_involution(d, al), d));
    auto sd = syntactic_star_semigroup(d, al);
    CHECK(sd.semigroup.size() == sd.syntactic.semigroup.size());
    CHECK(find_isomorphism(sd.semigroup.base(), sd.syntactic.semigroup));
    CHECK(anti_isomorphism_check(d, al).found);
  }
}

TEST_CASE("hermitian alphabets give hermitian-generated star-semigroups", "[syntactic]") {
  auto al = InvolutoryAlphabet::hermitian("abc");
  for (std::string re : {"c*abc*", "(abc)+", "a(ba)*b", "a+b+"}) {
    auto sd = syntactic_star_semigroup(regex_dfa(re, al), al);
    for (Letter a = 0; a < al.size(); ++a) {
      CHECK(sd.semigroup.star(sd.letter_map[a]) == sd.letter_map[a]);
    }
    CHECK(is_hermitian_generated(sd.semigroup));
  }
}

TEST_CASE("anti-isomorphism for a(ba)*b", "[syntactic]") {
  auto al   = InvolutoryAlphabet::hermitian("ab");
  auto anti = anti_isomorphism_check(regex_dfa("a(ba)*b", al), al);
  CHECK(anti.found);
  CHECK(anti.matches_alpha);
}

TEST_CASE("element languages of a+b+", "[syntactic]") {
  auto al = InvolutoryAlphabet::hermitian("ab");
  auto sd = syntactic_semigroup(regex_dfa("a+b+", al), al);
  CHECK(same_language(element_language(sd, *sd.semigroup.find_label("ab")), regex_dfa("a+b+", al)));
  CHECK(same_language(element_language(sd, *sd.semigroup.find_label("ba")),
                      regex_dfa("(a|b)*ba(a|b)*", al)));
}

TEST_CASE("element languages partition the free semigroup", "[syntactic][property]") {
  for (auto const& c : pool()) {
    auto const& al = c.alphabet;
    auto        sd = syntactic_star_semigroup(regex_dfa(c.regex, al), al);
    Dfa         all = empty_dfa(al.size());
    for (Elem x = 0; x < sd.semigroup.size(); ++x) {
      Dfa lx = element_language(sd, x);
      CHECK(is_empty(boolean_op(all, lx, BoolOp::intersection)));
      CHECK(same_language(lx, class_from_quotients(sd, al, x)));
      all = boolean_op(all, lx, BoolOp::union_);
    }
    CHECK(same_language(all, universal_dfa(al.size())));
  }
}

TEST_CASE("syntactic classes match bounded two-sided contexts", "[syntactic][property]") {
  for (auto const& c : pool()) {
    auto const& al = c.alphabet;
    Dfa         d  = regex_dfa(c.regex, al);
    auto        sd = syntactic_semigroup(d, al);
    auto        ws = all_words(al.size(), 1, word_len(al));
    auto        cv = context_vectors(d, al.size(), ws, 4 - (al.size() > 2));
    INFO(c.regex);
    CHECK(same_partition(ws, [&](Word const& w) { return syntactic_class(sd, w); }, cv));
  }
}

TEST_CASE("star congruence is the meet with the involuted language", "[syntactic][property]") {
  for (auto const& c : pool()) {
    auto const& al   = c.alphabet;
    Dfa         d    = regex_dfa(c.regex, al);
    Dfa         dinv = language_involution(d, al);
    auto        star = syntactic_star_semigroup(d, al);
    auto        s1   = syntactic_semigroup(d, al);
    auto        s2   = syntactic_semigroup(dinv, al);
    auto        ws   = all_words(al.size(), 1, 7);
    std::map<Elem, std::pair<Elem, Elem>> fwd;
    std::map<std::pair<Elem, Elem>, Elem> back;
    for (auto const& w : ws) {
      Elem x = syntactic_class(star, w);
      std::pair<Elem, Elem> p{syntactic_class(s1, w), syntactic_class(s2, w)};
      CHECK(fwd.emplace(x, p).first->second == p);
      CHECK(back.emplace(p, x).first->second == x);
    }
  }
}

TEST_CASE("congruence of the involuted language is the involuted congruence", "[syntactic][property]") {
  for (auto const& c : pool()) {
    auto const& al = c.alphabet;
    Dfa         d  = regex_dfa(c.regex, al);
    auto        s  = syntactic_semigroup(d, al);
    auto        si = syntactic_semigroup(language_involution(d, al), al);
    auto        ws = all_words(al.size(), 1, 6);
    std::vector<Elem> cls, icls;
    for (auto const& w : ws) {
      cls.push_back(syntactic_class(s, word_involution(al, w)));
      icls.push_back(syntactic_class(si, w));
    }
    for (std::size_t i = 0; i < ws.size(); ++i) {
      for (std::size_t j = i + 1; j < ws.size(); j += 3) {
        CHECK((icls[i] == icls[j]) == (cls[i] == cls[j]));
      }
    }
  }
}

TEST_CASE("syntactic star-semigroups divide their recognizers", "[syntactic]") {
  auto al   = InvolutoryAlphabet::with_pairs("ab", "a b");
  Dfa  d    = regex_dfa("a+b+", al);
  auto sd   = syntactic_star_semigroup(d, al);
  auto self = syntactic_divides(d, al, sd.semigroup, sd.letter_map, sd.accepting);
  CHECK(self.divides);

  auto herm = InvolutoryAlphabet::hermitian("abc");
  for (std::string re : {"c*abc*", "a(ba)*b"}) {
    Dfa  dd = regex_dfa(re, herm);
    auto s  = syntactic_semigroup(dd, herm);
    auto f  = flip_product(s.semigroup);
    std::vector<Elem> g;
    for (Letter a = 0; a < herm.size(); ++a) {
      g.push_back(s.letter_map[a] * static_cast<Elem>(s.semigroup.size()) + s.letter_map[herm.dagger(a)]);
    }
    std::vector<bool> acc(f.size());
    for (Elem x = 0; x < f.size(); ++x) {
      acc[x] = s.accepting[x / s.semigroup.size()];
    }
    auto div = syntactic_divides(dd, herm, f, g, acc);
    CHECK(div.divides);
    std::vector<bool> none(f.size(), false);
    CHECK_THROWS_AS(syntactic_divides(dd, herm, f, g, none), PreconditionError);
  }
}

TEST_CASE("a star-semigroup embeds in the product of its element languages' star-semigroups", "[syntactic]") {
  auto four = from_rewriting(2, {{{0, 0}, {0}}, {{1, 1}, {1}}, {{0, 1, 0}, {1, 0}}, {{1, 0, 1}, {1, 0}}}, "ab");
  Elem a = *four.find_label("a"), b = *four.find_label("b");
  std::vector<Elem> gens{a, b}, imgs{b, a};
  InvolutionSemigroup s(four, *induced_involution(four, gens, imgs).star);
  auto al = InvolutoryAlphabet::with_pairs("ab", "a b");
  auto e  = embeds_in_syntactic_product(s, al, gens);
  CHECK(e.embeds);
  CHECK(e.factor_sizes.size() == 4);

  // A semilattice flipped onto itself.
  auto sl = FiniteSemigroup::from_table(2, {0, 0, 0, 1});
  auto f  = flip_product(sl);
  auto h  = InvolutoryAlphabet::with_pairs("abcd", "b c");
  auto e2 = embeds_in_syntactic_product(f, h, std::vector<Elem>{0, 1, 2, 3});
  CHECK(e2.embeds);
}
