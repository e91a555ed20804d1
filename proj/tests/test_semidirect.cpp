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

#include "invsg/errors.hpp"
#include "invsg/semidirect.hpp"

using namespace invsg;

namespace {

  FiniteSemigroup table2(std::vector<Elem> t) {
    return FiniteSemigroup::from_table(2, std::move(t));
  }

  // The two-element semigroups up to isomorphism, plus right zero.
  std::vector<FiniteSemigroup> two_element() {
    return {table2({0, 0, 0, 1}), table2({0, 1, 1, 0}), table2({0, 0, 1, 1}),
            table2({0, 1, 0, 1}), table2({0, 0, 0, 0})};
  }

  std::vector<std::vector<Elem>> stars_of(FiniteSemigroup const& s) {
    std::vector<std::vector<Elem>> out;
    for (std::vector<Elem> p : {std::vector<Elem>{0, 1}, std::vector<Elem>{1, 0}}) {
      if (!validate_involution(s, p)) {
        out.push_back(p);
      }
    }
    return out;
  }

  // Subsets of {x, y} under union, indexed by bitmask.
  FiniteSemigroup union4() {
    std::vector<Elem> t(16);
    for (Elem i = 0; i < 4; ++i) {
      for (Elem j = 0; j < 4; ++j) {
        t[i * 4 + j] = i | j;
      }
    }
    return FiniteSemigroup::from_table(4, t);
  }

  // Z2 = {1, g} acting on both sides by swapping x and y.
  BilateralAction swap_action() {
    BilateralAction a{union4(), table2({0, 1, 1, 0}), {}, {}};
    auto flip = [](Elem g, Elem s) { return g ? ((s & 1) << 1) | (s >> 1) : s; };
    for (Elem g = 0; g < 2; ++g) {
      for (Elem s = 0; s < 4; ++s) {
        a.left.push_back(flip(g, s));
      }
    }
    for (Elem s = 0; s < 4; ++s) {
      for (Elem g = 0; g < 2; ++g) {
        a.right.push_back(flip(g, s));
      }
    }
    return a;
  }

  BilateralAction trivial_action(FiniteSemigroup s) {
    BilateralAction a{std::move(s), FiniteSemigroup::trivial(), {}, {}};
    for (Elem x = 0; x < a.s.size(); ++x) {
      a.left.push_back(x);
      a.right.push_back(x);
    }
    return a;
  }

}  // namespace

TEST_CASE("trivial actions", "[semidirect]") {
  auto a = trivial_action(FiniteSemigroup::trivial());
  CHECK_FALSE(validate_action(a));
  CHECK_FALSE(validate_involutory(a, {0}, {0}));
  auto sdp = build_sdp(a, {0}, {0});
  CHECK(sdp.product.size() == 1);
  CHECK(sdp.locally_hermitian);
  CHECK_FALSE(hermitian_rotation_check(sdp, 1));
}

TEST_CASE("a constant left map is not distributive", "[semidirect]") {
  // a, aa, 0 with a^3 = 0; the left map sends everything to a.
  auto n = FiniteSemigroup::from_table(3, {1, 2, 2, 2, 2, 2, 2, 2, 2});
  auto a = trivial_action(n);
  a.left = {0, 0, 0};
  auto v = validate_action(a);
  REQUIRE(v);
  CHECK(v->law == ActionLaw::left_distributive);
  CHECK(v->s.size() == 2);
  CHECK_FALSE(v->detail.empty());
  CHECK_THROWS_AS(build_sdp(a, {0, 1, 2}, {0}), PreconditionError);
}

TEST_CASE("swapping action on a union semilattice", "[semidirect]") {
  auto a = swap_action();
  CHECK_FALSE(validate_action(a));
  std::vector<Elem> id4{0, 1, 2, 3}, id2{0, 1};
  CHECK_FALSE(validate_involutory(a, id4, id2));
  CHECK_FALSE(two_sided_involutory_check(a, id4, id2));
  CHECK_FALSE(is_locally_hermitian(a, id4, id2));
  auto sdp = build_sdp(a, id4, id2);
  CHECK(sdp.product.size() == 8);
  CHECK(sdp.locally_hermitian);
  CHECK_FALSE(hermitian_rotation_check(sdp, 1));
  CHECK_FALSE(hermitian_rotation_check(sdp, 2));
  // (s1, t1)(s2, t2) = (s1 t2 + t1 s2, t1 t2)
  Elem x = sdp.pair(1, 1), y = sdp.pair(0, 1);
  CHECK(sdp.product.mul(x, y) == sdp.pair(2, 0));
}

TEST_CASE("a nontrivial star under a trivial action is not locally hermitian", "[semidirect]") {
  auto              a = trivial_action(union4());
  std::vector<Elem> swap{0, 2, 1, 3};
  CHECK_FALSE(validate_involutory(a, swap, {0}));
  auto v = is_locally_hermitian(a, swap, {0});
  REQUIRE(v);
  CHECK(v->law == ActionLaw::locally_hermitian);
  auto sdp = build_sdp(a, swap, {0});
  CHECK_FALSE(sdp.locally_hermitian);
  auto r = hermitian_rotation_check(sdp, 1);
  REQUIRE(r);
  CHECK(r->law == ActionLaw::rotation);
}

TEST_CASE("perturbing the right action breaks the involutory law", "[semidirect]") {
  auto              base = swap_action();
  std::vector<Elem> id4{0, 1, 2, 3}, id2{0, 1};
  for (std::size_t i = 0; i < base.right.size(); ++i) {
    for (Elem v = 0; v < 4; ++v) {
      if (v == base.right[i]) {
        continue;
      }
      auto a     = base;
      a.right[i] = v;
      auto bad   = validate_involutory(a, id4, id2);
      REQUIRE(bad);
      CHECK(bad->law == ActionLaw::involutory);
    }
  }
}

TEST_CASE("action files round trip", "[semidirect]") {
  ActionText at{swap_action(), std::vector<Elem>{0, 1, 2, 3}, std::vector<Elem>{0, 1}};
  auto       text = format_action(at);
  auto       back = parse_action(text);
  CHECK(back.action.s == at.action.s);
  CHECK(back.action.t == at.action.t);
  CHECK(back.action.left == at.action.left);
  CHECK(back.action.right == at.action.right);
  CHECK(back.star_s == at.star_s);
  CHECK(back.star_t == at.star_t);
  CHECK_THROWS_AS(parse_action(text.substr(0, text.size() / 2)), ParseError);
}

TEST_CASE("exhaustive small actions", "[semidirect][property]") {
  auto        pool      = two_element();
  std::size_t valid     = 0;
  std::size_t hermitian = 0;
  for (auto const& s : pool) {
    for (auto const& t : pool) {
      for (auto const& ss : stars_of(s)) {
        for (auto const& ts : stars_of(t)) {
          for (unsigned lmask = 0; lmask < 16; ++lmask) {
            for (unsigned rmask = 0; rmask < 16; ++rmask) {
              BilateralAction a{s, t, {}, {}};
              for (unsigned i = 0; i < 4; ++i) {
                a.left.push_back((lmask >> i) & 1);
                a.right.push_back((rmask >> i) & 1);
              }
              if (validate_action(a) || validate_involutory(a, ss, ts)) {
                continue;
              }
              ++valid;
              CHECK_FALSE(two_sided_involutory_check(a, ss, ts));
              auto sdp = build_sdp(a, ss, ts);
              CHECK_FALSE(validate_involution(sdp.product.base(), sdp.product.star_table()));
              // The product, recomputed by hand.
              for (Elem s1 = 0; s1 < 2; ++s1) {
                for (Elem t1 = 0; t1 < 2; ++t1) {
                  for (Elem s2 = 0; s2 < 2; ++s2) {
                    for (Elem t2 = 0; t2 < 2; ++t2) {
                      Elem sum = s.mul(a.act_right(s1, t2), a.act_left(t1, s2));
                      CHECK(sdp.product.mul(sdp.pair(s1, t1), sdp.pair(s2, t2))
                            == sdp.pair(sum, t.mul(t1, t2)));
                    }
                  }
                }
              }
              // Projection onto T is a star-morphism.
              for (Elem x = 0; x < 4; ++x) {
                CHECK(ts[x % 2] == sdp.product.star(x) % 2);
              }
              if (sdp.locally_hermitian) {
                ++hermitian;
                for (Elem e : idempotents(t)) {
                  for (Elem x = 0; x < 2; ++x) {
                    Elem ese = a.act_right(a.act_left(e, x), ts[e]);
                    CHECK(ss[ese] == ese);
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  CHECK(valid >= 20);
  CHECK(hermitian >= 1);

}
