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

// Bilateral actions and involutory semidirect products.
//
// The law checks are templates over an action model so that the same code
// validates dense action tables and the implicit threshold-multiset action
// of the canonical recognizer.  A model M provides
//
//   typename M::SElem;
//   FiniteSemigroup const& t() const;       Elem star_t(Elem) const;
//   SElem add(SElem const&, SElem const&) const;
//   SElem left(Elem, SElem const&) const;   SElem right(SElem const&, Elem) const;
//   SElem star(SElem const&) const;         std::string describe(SElem const&) const;
//
// and SElem is equality comparable.  S-elements are quantified over a
// caller-supplied carrier; T-elements over all of T.

#ifndef INVSG_SEMIDIRECT_HPP_
#define INVSG_SEMIDIRECT_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "invsg/involution.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

  /// Left and right actions of T on S, stored densely.
  struct BilateralAction {
    FiniteSemigroup   s;
    FiniteSemigroup   t;
    std::vector<Elem> left;   // left[x * |S| + y]  = x . y   (x in T, y in S)
    std::vector<Elem> right;  // right[y * |T| + x] = y . x

    Elem act_left(Elem x, Elem y) const {
      return left[x * s.size() + y];
    }
    Elem act_right(Elem y, Elem x) const {
      return right[y * t.size() + x];
    }
  };

  /// Action file: the S table, the T table (each optionally with a `star:`
  /// line), then `left:` with |T| x |S| indices and `right:` with |S| x |T|.
  struct ActionText {
    BilateralAction                  action;
    std::optional<std::vector<Elem>> star_s;
    std::optional<std::vector<Elem>> star_t;
  };

  /// Throws ParseError on malformed input (table dimensions included).
  ActionText  parse_action(std::string_view text);
  std::string format_action(ActionText const& a);

  enum class ActionLaw {
    left_distributive,     // t(s + s') = ts + ts'
    left_compatible,       // (tt')s = t(t's)
    right_distributive,    // (s + s')t = st + s't
    right_compatible,      // s(tt') = (st)t'
    bilateral,             // (ts)t' = t(st')
    star_s_involutive,     // (s*)* = s
    star_s_anti,           // (s + s')* = s'* + s*
    involutory,            // (st)* = t◇ s*
    two_sided_involutory,  // (t1 s t2)* = t2◇ s* t1◇
    locally_hermitian,     // e s e◇ = e s* e◇
    ese_hermitian,         // (e s e◇)* = e s e◇
    rotation,              // pq s uv = p u◇ s* q◇ v
  };

  char const* to_string(ActionLaw law) noexcept;

  /// `s` indexes the carrier, `t` indexes T.
  struct ActionViolation {
    ActionLaw                law = ActionLaw::left_distributive;
    std::vector<std::size_t> s;
    std::vector<Elem>        t;
    std::string              detail;
  };

  /// How to quantify over pairs of carrier elements: exhaustively when the
  /// pair count is at most `exhaustive_limit`, otherwise `samples` random
  /// pairs drawn with `seed`.
  struct SamplePolicy {
    std::size_t   exhaustive_limit = 1u << 22;
    std::size_t   samples          = 1u << 16;
    std::uint64_t seed             = 1;
  };

  namespace detail {

    template <typename F>
    bool for_pairs(std::size_t n, SamplePolicy const& policy, F&& f) {
      if (n * n <= policy.exhaustive_limit) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (!f(i, j)) {
              return false;
            }
          }
        }
        return true;
      }
      std::mt19937_64                            rng(policy.seed);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t k = 0; k < policy.samples; ++k) {
        std::size_t i = pick(rng), j = pick(rng);
        if (!f(i, j)) {
          return false;
        }
      }
      return true;
    }

  }  // namespace detail

  /// The five action laws.
  template <typename M>
  std::optional<ActionViolation>
  check_action_laws(M const&                              m,
                    std::span<typename M::SElem const>    carrier,
                    SamplePolicy const&                   policy = {}) {
    FiniteSemigroup const& t = m.t();
    std::optional<ActionViolation> out;
    auto fail = [&](ActionLaw law, std::vector<std::size_t> s, std::vector<Elem> tt) {
      out = ActionViolation{law, std::move(s), std::move(tt), {}};
      return false;
    };
    detail::for_pairs(carrier.size(), policy, [&](std::size_t i, std::size_t j) {
      auto const sum = m.add(carrier[i], carrier[j]);
      for (Elem x = 0; x < t.size(); ++x) {
        if (!(m.left(x, sum) == m.add(m.left(x, carrier[i]), m.left(x, carrier[j])))) {
          return fail(ActionLaw::left_distributive, {i, j}, {x});
        }
        if (!(m.right(sum, x) == m.add(m.right(carrier[i], x), m.right(carrier[j], x)))) {
          return fail(ActionLaw::right_distributive, {i, j}, {x});
        }
      }
      return true;
    });
    if (out) {
      return out;
    }
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      auto const& s = carrier[i];
      for (Elem x = 0; x < t.size(); ++x) {
        auto const xs = m.left(x, s);
        auto const sx = m.right(s, x);
        for (Elem y = 0; y < t.size(); ++y) {
          if (!(m.left(t.mul(x, y), s) == m.left(x, m.left(y, s)))) {
            fail(ActionLaw::left_compatible, {i}, {x, y});
            return out;
          }
          if (!(m.right(s, t.mul(x, y)) == m.right(sx, y))) {
            fail(ActionLaw::right_compatible, {i}, {x, y});
            return out;
          }
          if (!(m.right(xs, y) == m.left(x, m.right(s, y)))) {
            fail(ActionLaw::bilateral, {i}, {x, y});
            return out;
          }
        }
      }
    }
    return out;
  }

  /// The star of S is an involution (on the carrier) and the action is
  /// involutory: (st)* = t◇ s*.
  template <typename M>
  std::optional<ActionViolation>
  check_involutory(M const&                           m,
                   std::span<typename M::SElem const> carrier,
                   SamplePolicy const&                policy = {}) {
    FiniteSemigroup const& t = m.t();
    std::optional<ActionViolation> out;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      if (!(m.star(m.star(carrier[i])) == carrier[i])) {
        return ActionViolation{ActionLaw::star_s_involutive, {i}, {}, {}};
      }
    }
    detail::for_pairs(carrier.size(), policy, [&](std::size_t i, std::size_t j) {
      if (!(m.star(m.add(carrier[i], carrier[j]))
            == m.add(m.star(carrier[j]), m.star(carrier[i])))) {
        out = ActionViolation{ActionLaw::star_s_anti, {i, j}, {}, {}};
        return false;
      }
      return true;
    });
    if (out) {
      return out;
    }
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      auto const ss = m.star(carrier[i]);
      for (Elem x = 0; x < t.size(); ++x) {
        if (!(m.star(m.right(carrier[i], x)) == m.left(m.star_t(x), ss))) {
          return ActionViolation{ActionLaw::involutory, {i}, {x}, {}};
        }
      }
    }
    return std::nullopt;
  }

  /// (t1 s t2)* = t2◇ s* t1◇ for all t1, t2 and carrier elements s.
  template <typename M>
  std::optional<ActionViolation>
  check_two_sided_involutory(M const& m, std::span<typename M::SElem const> carrier) {
    FiniteSemigroup const& t = m.t();
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      auto const ss = m.star(carrier[i]);
      for (Elem x = 0; x < t.size(); ++x) {
        auto const xs = m.left(x, carrier[i]);
        for (Elem y = 0; y < t.size(); ++y) {
          if (!(m.star(m.right(xs, y))
                == m.right(m.left(m.star_t(y), ss), m.star_t(x)))) {
            return ActionViolation{ActionLaw::two_sided_involutory, {i}, {x, y}, {}};
          }
        }
      }
    }
    return std::nullopt;
  }

  /// e s e◇ = e s* e◇ and (e s e◇)* = e s e◇ for idempotents e of T.
  template <typename M>
  std::optional<ActionViolation>
  check_locally_hermitian(M const& m, std::span<typename M::SElem const> carrier) {
    for (Elem e : idempotents(m.t())) {
      Elem const ed = m.star_t(e);
      for (std::size_t i = 0; i < carrier.size(); ++i) {
        auto const ese = m.right(m.left(e, carrier[i]), ed);
        if (!(ese == m.right(m.left(e, m.star(carrier[i])), ed))) {
          return ActionViolation{ActionLaw::locally_hermitian, {i}, {e}, {}};
        }
        if (!(m.star(ese) == ese)) {
          return ActionViolation{ActionLaw::ese_hermitian, {i}, {e}, {}};
        }
      }
    }
    return std::nullopt;
  }

  /// (pq) s (uv) = (p u◇) s* (q◇ v) for p, q, u, v in T^k and carrier
  /// elements s.  Exhaustive when |T^k|^4 |carrier| is at most
  /// policy.exhaustive_limit, otherwise policy.samples random tuples.
  template <typename M>
  std::optional<ActionViolation>
  check_hermitian_rotation(M const&                           m,
                           std::span<typename M::SElem const> carrier,
                           std::size_t                        k,
                           SamplePolicy const&                policy = {}) {
    FiniteSemigroup const& t  = m.t();
    auto const             tk = products_of_length(t, k);
    std::size_t const      nt = tk.size();
    auto test = [&](std::size_t i, Elem p, Elem q, Elem u, Elem v)
        -> std::optional<ActionViolation> {
      auto const lhs = m.left(t.mul(p, q), m.right(carrier[i], t.mul(u, v)));
      auto const rhs = m.left(t.mul(p, m.star_t(u)),
                              m.right(m.star(carrier[i]), t.mul(m.star_t(q), v)));
      if (!(lhs == rhs)) {
        return ActionViolation{ActionLaw::rotation, {i}, {p, q, u, v}, {}};
      }
      return std::nullopt;
    };
    double const total = static_cast<double>(nt) * nt * nt * nt
                         * static_cast<double>(carrier.size());
    if (total <= static_cast<double>(policy.exhaustive_limit)) {
      for (std::size_t i = 0; i < carrier.size(); ++i) {
        for (Elem p : tk) {
          for (Elem q : tk) {
            for (Elem u : tk) {
              for (Elem v : tk) {
                if (auto bad = test(i, p, q, u, v)) {
                  return bad;
                }
              }
            }
          }
        }
      }
      return std::nullopt;
    }
    std::mt19937_64                            rng(policy.seed);
    std::uniform_int_distribution<std::size_t> pick_s(0, carrier.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_t(0, nt - 1);
    for (std::size_t n = 0; n < policy.samples; ++n) {
      std::size_t i = pick_s(rng);
      Elem p = tk[pick_t(rng)], q = tk[pick_t(rng)], u = tk[pick_t(rng)],
           v = tk[pick_t(rng)];
      if (auto bad = test(i, p, q, u, v)) {
        return bad;
      }
    }
    return std::nullopt;
  }

  /// Model over a dense BilateralAction; the stars are optional until an
  /// involution law is checked.
  class DenseActionModel {
   public:
    using SElem = Elem;

    DenseActionModel(BilateralAction const&   a,
                     std::vector<Elem> const* star_s = nullptr,
                     std::vector<Elem> const* star_t = nullptr)
        : a_(a), star_s_(star_s), star_t_(star_t) {}

    FiniteSemigroup const& t() const {
      return a_.t;
    }
    Elem star_t(Elem x) const {
      return (*star_t_)[x];
    }
    Elem add(Elem x, Elem y) const {
      return a_.s.mul(x, y);
    }
    Elem left(Elem x, Elem y) const {
      return a_.act_left(x, y);
    }
    Elem right(Elem y, Elem x) const {
      return a_.act_right(y, x);
    }
    Elem star(Elem x) const {
      return (*star_s_)[x];
    }
    std::string describe(Elem x) const {
      return a_.s.label(x);
    }

    /// All of S, for exhaustive checks.
    std::vector<Elem> carrier() const;

   private:
    BilateralAction const&   a_;
    std::vector<Elem> const* star_s_;
    std::vector<Elem> const* star_t_;
  };

  /// Fills `detail` with a readable rendering of the witness.
  template <typename M>
  void explain(M const&                           m,
               std::span<typename M::SElem const> carrier,
               ActionViolation&                   v) {
    std::string d = to_string(v.law);
    d += " fails at s =";
    for (auto i : v.s) {
      d += " " + m.describe(carrier[i]);
    }
    if (!v.t.empty()) {
      d += ", t =";
      for (auto x : v.t) {
        d += " " + m.t().label(x);
      }
    }
    v.detail = std::move(d);
  }

  /// Exhaustive checks of the dense action; witnesses index S directly.
  std::optional<ActionViolation> validate_action(BilateralAction const& a);
  std::optional<ActionViolation> validate_involutory(BilateralAction const&   a,
                                                     std::vector<Elem> const& star_s,
                                                     std::vector<Elem> const& star_t);
  std::optional<ActionViolation> two_sided_involutory_check(BilateralAction const&   a,
                                                             std::vector<Elem> const& star_s,
                                                             std::vector<Elem> const& star_t);
  std::optional<ActionViolation> is_locally_hermitian(BilateralAction const&   a,
                                                      std::vector<Elem> const& star_s,
                                                      std::vector<Elem> const& star_t);

  struct InvolutorySdp {
    BilateralAction     action;
    std::vector<Elem>   star_s;
    std::vector<Elem>   star_t;
    /// Pair (s, t) has index s * |T| + t.
    InvolutionSemigroup product;
    bool                locally_hermitian = false;

    Elem pair(Elem s, Elem t) const {
      return s * static_cast<Elem>(action.t.size()) + t;
    }
  };

  /// (s1, t1)(s2, t2) = (s1 t2 + t1 s2, t1 t2) and (s, t)* = (s*, t◇).
  /// Throws PreconditionError unless the action is valid and involutory and
  /// both stars are involutions.  Associativity and the involution laws of
  /// the product are re-verified.
  InvolutorySdp build_sdp(BilateralAction   a,
                          std::vector<Elem> star_s,
                          std::vector<Elem> star_t);

  /// The rotation identity on the product's action with delay `k`.
  std::optional<ActionViolation>
  hermitian_rotation_check(InvolutorySdp const& sdp,
                           std::size_t          k,
                           SamplePolicy const&  policy = {});

}  // namespace invsg

#endif  // INVSG_SEMIDIRECT_HPP_
