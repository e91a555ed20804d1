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
#include <random>
#include <set>

#include "invsg/errors.hpp"
#include "invsg/lrtt.hpp"
#include "oracles.hpp"

using namespace invsg;

namespace {

  InvolutoryAlphabet const ab  = InvolutoryAlphabet::hermitian("ab");
  InvolutoryAlphabet const abc = InvolutoryAlphabet::hermitian("abc");

  InvolutoryAlphabet const& alphabet_for(std::string const& re) {
    return re.find('c') == std::string::npos ? ab : abc;
  }

  // Signatures agree and exactly one of the pair is accepted.
  void check_witness(Dfa const& d, InvolutoryAlphabet const& al, std::pair<Word, Word> const& w,
                     std::size_t k, std::size_t t, bool reverse) {
    std::string x = al.str(w.first), y = al.str(w.second);
    INFO(x << " / " << y);
    CHECK(oracle::signature(x, k, t, reverse) == oracle::signature(y, k, t, reverse));
    CHECK(d.accepts(w.first));
    CHECK_FALSE(d.accepts(w.second));
  }

  bool brute_delay(FiniteSemigroup const& s, std::size_t k) {
    auto sk = products_of_length(s, k);
    for (Elem p : sk) {
      for (Elem q : sk) {
        for (Elem z = 0; z < s.size(); ++z) {
          if (s.mul(s.mul(p, z), q) != s.mul(p, q)) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace

TEST_CASE("window semigroup over two letters", "[lrtt]") {
  auto w = window_semigroup(ab, 1);
  auto const& t = w.semigroup.base();
  REQUIRE(t.size() == 6);
  auto idx = [&](char const* s) { return w.index(ab.word(s)); };
  CHECK(t.mul(idx("ab"), idx("ba")) == idx("aa"));
  CHECK(t.mul(idx("a"), idx("b")) == idx("ab"));
  CHECK(t.mul(idx("ba"), idx("b")) == idx("bb"));
  auto           idem = idempotents(t);
  std::set<Elem> ids(idem.begin(), idem.end());
  CHECK(ids == std::set<Elem>{idx("aa"), idx("ab"), idx("ba"), idx("bb")});
  CHECK(is_locally_trivial(t));
  // p z q = p q already holds for single elements p, q.
  CHECK(local_delay(t) == 1);
  CHECK(brute_delay(t, 1));
  CHECK(w.semigroup.star(idx("ab")) == idx("ba"));
}

TEST_CASE("window semigroups are locally trivial with delay k", "[lrtt][property]") {
  for (std::size_t k = 1; k <= 2; ++k) {
    for (auto const* al : {&ab, &abc}) {
      auto w = window_semigroup(*al, k);
      auto const& t = w.semigroup.base();
      CHECK(is_locally_trivial(t));
      CHECK(local_delay(t) == k);
      CHECK(brute_delay(t, k));
      if (k > 1) {
        CHECK_FALSE(brute_delay(t, k - 1));
      }
      for (Elem e : idempotents(t)) {
        CHECK(w.words[e].size() == 2 * k);
      }
    }
  }
}

TEST_CASE("anchored words and letter actions", "[lrtt]") {
  AnchoredSpace sp(ab, 1);
  auto          bhat = sp.index({{}, 1, {}});
  auto          abh  = sp.left_letter(0, bhat);
  CHECK(sp.describe_word(abh) == "a.b.");
  auto sat = sp.index({ab.word("a"), 1, ab.word("b")});
  CHECK(sp.left_letter(1, sat) == sat);
  CHECK(sp.right_letter(sat, 0) == sat);
  CHECK(sp.describe_word(sp.dagger(sp.index({ab.word("a"), 1, {}}))) == ".b.a");
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    zeros += sp.is_zero(i);
  }
  CHECK(zeros == 8);
  CHECK(sp.size() == 18);
  // Non-palindromic zeros share a slot with their reverse.
  CHECK(sp.num_slots() == 10 + 6);
  CHECK(AnchoredSpace(ab, 1, false).num_slots() == 18);
}

TEST_CASE("letter images and evaluation", "[lrtt]") {
  CanonicalRecognizer rec(ab, 1, 1);
  auto                a = rec.letter_image(0);
  CHECK(rec.describe(a) == "({.a.}, a)");
  CHECK(rec.star(a) == a);
  CHECK(rec.eval(ab.word("a")) == a);
  auto w = rec.describe(rec.eval(ab.word("ab")));
  CHECK(w.find(".a.b") != std::string::npos);
  CHECK(w.find("a.b.") != std::string::npos);
  CHECK(w.substr(w.size() - 5) == ", ab)");
  CHECK_THROWS_AS(CanonicalRecognizer(ab, 0, 1), ArgumentError);
}

TEST_CASE("equivalent words evaluate equally", "[lrtt]") {
  CanonicalRecognizer rec(abc, 1, 2);
  // Width 3 also compares the length-2 prefixes, so cabc and cbac differ.
  CHECK_FALSE(equivalent(abc, abc.word("cabc"), abc.word("cbac"), 3, 2, Mode::reverse));
  auto w = abc.word("ccabcc"), v = abc.word("ccbacc");
  REQUIRE(equivalent(abc, w, v, 3, 2, Mode::reverse));
  CHECK(rec.eval(w) == rec.eval(v));
  CHECK_FALSE(rec.eval(abc.word("ab")) == rec.eval(abc.word("ba")));
}

TEST_CASE("forward property on short words", "[lrtt][property]") {
  CanonicalRecognizer rec(ab, 1, 1);
  std::map<std::string, CanonicalRecognizer::Element> seen;
  for (auto const& s : oracle::words("ab", 8)) {
    auto e           = rec.eval(ab.word(s));
    auto [it, fresh] = seen.emplace(oracle::signature(s, 3, 1, true), e);
    CHECK(it->second == e);
  }
}

TEST_CASE("the canonical recognizer passes its structural checks", "[lrtt]") {
  CanonicalRecognizer rec(ab, 1, 1);
  auto                img = recognizer_image(rec);
  CHECK(img.complete);
  auto rep = validate_canonical(rec, img);
  CHECK(rep.ok());
  CHECK(rep.s_aperiodicity_index == 1);
  CHECK(rep.t_local_delay == 1);
  CHECK(format_report(rep).find("locally_hermitian: true") != std::string::npos);

  auto dense = dense_image(rec, img);
  CHECK(dense.size() == img.size());
  CHECK_FALSE(validate_involution(dense.base(), dense.star_table()));
  CHECK_THROWS_AS(recognizer_image(rec, 10), ResourceLimit);
}

TEST_CASE("without pooled zeros the action is not locally hermitian", "[lrtt]") {
  CanonicalRecognizer rec(ab, 1, 1, false);
  auto                img = recognizer_image(rec);
  auto                rep = validate_canonical(rec, img);
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.locally_hermitian);
  CHECK((rep.locally_hermitian->law == ActionLaw::locally_hermitian
         || rep.locally_hermitian->law == ActionLaw::ese_hermitian));
  CHECK_FALSE(rep.action);
}

TEST_CASE("truncated images still validate the product involution", "[lrtt]") {
  CanonicalRecognizer rec(abc, 1, 1);
  auto                img = recognizer_image_prefix(rec, 500);
  CHECK_FALSE(img.complete);
  CHECK(img.size() == 500);
  CHECK(validate_canonical(rec, img).ok());
  CHECK_THROWS_AS(dense_image(rec, img), ArgumentError);
}

TEST_CASE("preimages of image subsets", "[lrtt]") {
  CanonicalRecognizer rec(ab, 1, 1);
  auto                img = recognizer_image(rec);
  std::vector<bool>   acc(img.size(), false);
  for (std::size_t i = 0; i < img.size(); i += 7) {
    acc[i] = true;
  }
  Dfa d = image_preimage_dfa(img, acc);
  std::map<CanonicalRecognizer::Element, bool, decltype([](auto const& x, auto const& y) {
             return std::tie(x.s, x.t) < std::tie(y.s, y.t);
           })> in;
  for (std::size_t i = 0; i < img.size(); ++i) {
    in[img.elements[i]] = acc[i];
  }
  for (auto const& w : all_words(2, 1, 7)) {
    CHECK(d.accepts(w) == in.at(rec.eval(w)));
  }
}

TEST_CASE("c*abc* separates the two equivalences", "[lrtt]") {
  Dfa  d = regex_dfa("c*abc*", abc);
  auto r = is_union_of_classes(d, abc, 2, 1, Mode::reverse);
  CHECK_FALSE(r.is_union);
  REQUIRE(r.witness);
  check_witness(d, abc, *r.witness, 2, 1, true);
  CHECK(is_union_of_classes(d, abc, 2, 2, Mode::plain).is_union);
  CHECK(union_check_exact(d, abc, 2, 2, Mode::plain).is_union);
}

TEST_CASE("the full language is a single class", "[lrtt]") {
  for (Mode m : {Mode::plain, Mode::reverse}) {
    auto r = is_union_of_classes(universal_dfa(2), ab, 2, 1, m);
    CHECK(r.is_union);
    CHECK(r.certified_k == 1);
  }
  CHECK(recognized_by_canonical(universal_dfa(2), ab, 1, 1).recognized);
}

TEST_CASE("union checks respect the budget", "[lrtt]") {
  Dfa d = regex_dfa("(abc)+", abc);
  CHECK_THROWS_AS(union_check_exact(d, abc, 3, 2, Mode::reverse, 50), ResourceLimit);
}

TEST_CASE("grid search on c*abc* finds nothing", "[lrtt]") {
  Dfa  d = regex_dfa("c*abc*", abc);
  auto s = lrtt_search(d, abc, 3, 2, Mode::reverse);
  CHECK_FALSE(s.found);
  REQUIRE(s.cells.size() == 6);
  std::size_t prev = 0;
  for (auto const& c : s.cells) {
    CHECK(c.k + c.t >= prev);
    prev = c.k + c.t;
    REQUIRE(c.status == SearchCell::Status::no);
    REQUIRE(c.witness);
    check_witness(d, abc, *c.witness, c.k, c.t, true);
  }
}

TEST_CASE("grid search on a(ba)*b succeeds", "[lrtt]") {
  Dfa  d = regex_dfa("a(ba)*b", ab);
  auto s = lrtt_search(d, ab, 3, 2, Mode::reverse);
  REQUIRE(s.found);
  auto [k, t] = *s.found;
  CHECK(oracle::union_of_classes("ab", 12, k, t, true,
                                 [](std::string const& w) { return oracle::member("a(ba)*b", w); }));
  CHECK(s.cells.back().status == SearchCell::Status::yes);
}

TEST_CASE("plain recognizer without pooled zeros recognizes c*abc*", "[lrtt]") {
  Dfa d = regex_dfa("c*abc*", abc);
  CHECK(recognized_by_canonical(d, abc, 1, 2, Mode::plain).recognized);
  auto rev = recognized_by_canonical(d, abc, 1, 2, Mode::reverse);
  CHECK_FALSE(rev.recognized);
  REQUIRE(rev.witness);
  CanonicalRecognizer rec(abc, 1, 2);
  CHECK(rec.eval(rev.witness->first) == rec.eval(rev.witness->second));
  CHECK(d.accepts(rev.witness->first) != d.accepts(rev.witness->second));
}

TEST_CASE("reverse classes are coarser than plain ones", "[lrtt][property]") {
  for (std::string re : {"a(ba)*b", "(ab)+", "a+b+", "c*abc*", "(abc)+", "b(a|b)*", "(a|b)*aa(a|b)*"}) {
    auto const& al = alphabet_for(re);
    Dfa         d  = regex_dfa(re, al);
    for (std::size_t k = 1; k <= 2; ++k) {
      for (std::size_t t = 1; t <= 2; ++t) {
        if (is_union_of_classes(d, al, k, t, Mode::reverse).is_union) {
          CHECK(is_union_of_classes(d, al, k, t, Mode::plain).is_union);
        }
      }
    }
  }
}

TEST_CASE("union checks agree with bounded enumeration", "[lrtt][property]") {
  for (std::string re : {"a(ba)*b", "(ab)+", "a+b+", "(a|b)*aa(a|b)*", "c*abc*", "(abc)+", "a(b|c)*a"}) {
    auto const& al     = alphabet_for(re);
    std::size_t maxlen = al.size() == 2 ? 10 : 7;
    Dfa         d      = regex_dfa(re, al);
    auto        member = [&](std::string const& w) { return oracle::member(re, w); };
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::size_t t = 1; t <= 2; ++t) {
        for (bool rev : {false, true}) {
          INFO(re << " k=" << k << " t=" << t << " reverse=" << rev);
          auto r = union_check_exact(d, al, k, t, rev ? Mode::reverse : Mode::plain);
          bool bounded = oracle::union_of_classes(al.letters(), maxlen, k, t, rev, member);
          if (r.is_union) {
            CHECK(bounded);
          } else {
            REQUIRE(r.witness);
            check_witness(d, al, *r.witness, k, t, rev);
            if (r.witness->first.size() <= maxlen && r.witness->second.size() <= maxlen) {
              CHECK_FALSE(bounded);
            }
          }
          CHECK(is_union_of_classes(d, al, k, t, rev ? Mode::reverse : Mode::plain).is_union
                == r.is_union);
        }
      }
    }
  }
}

TEST_CASE("preimages under the canonical recognizer are unions of wider classes", "[lrtt][property]") {
  CanonicalRecognizer rec(ab, 1, 1);
  auto                img = recognizer_image(rec);
  std::mt19937_64     rng(99);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < 3; ++i) {
    std::vector<bool> acc(img.size());
    for (std::size_t x = 0; x < acc.size(); ++x) {
      acc[x] = coin(rng);
    }
    Dfa d = image_preimage_dfa(img, acc);
    // Width 4k + 1 = 5 and threshold the aperiodicity index of S, which is 1.
    auto r = is_union_of_classes(d, ab, 5, 1, Mode::reverse);
    CHECK(r.is_union);
  }
}
