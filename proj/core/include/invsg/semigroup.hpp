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

// Finite semigroups given by multiplication tables.

#ifndef INVSG_SEMIGROUP_HPP_
#define INVSG_SEMIGROUP_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invsg/alphabet.hpp"

namespace invsg {

  using Elem = std::uint32_t;

  inline constexpr std::size_t default_element_budget  = 1u << 16;
  inline constexpr std::size_t default_division_budget = 64;

  /// Returns a triple (x, y, z) with (xy)z != x(yz), if any.
  std::optional<std::array<Elem, 3>>
  find_nonassociative(std::size_t n, std::span<Elem const> table);

  /// A finite semigroup stored as a dense n x n table; element i is labelled
  /// by an optional representative string.  Tables are immutable and always
  /// associative: the factory functions check this.
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    /// Throws ArgumentError when the table is ill-formed or not associative.
    static FiniteSemigroup from_table(std::size_t              n,
                                      std::vector<Elem>        table,
                                      std::vector<std::string> labels = {});

    /// As from_table, but trusts the caller for associativity (tables built
    /// by composition or from a known construction).  Other checks remain.
    static FiniteSemigroup from_trusted_table(std::size_t              n,
                                              std::vector<Elem>        table,
                                              std::vector<std::string> labels = {});

    /// The one-element semigroup.
    static FiniteSemigroup trivial();

    std::size_t size() const noexcept {
      return n_;
    }

    Elem mul(Elem x, Elem y) const {
      return table_[x * n_ + y];
    }

    /// Product of a nonempty sequence.
    Elem product(std::span<Elem const> xs) const;

    std::string label(Elem x) const;

    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }

    std::vector<Elem> const& table() const noexcept {
      return table_;
    }

    std::optional<Elem> find_label(std::string_view label) const;

    bool operator==(FiniteSemigroup const& other) const {
      return n_ == other.n_ && table_ == other.table_;
    }

   private:
    std::size_t              n_ = 0;
    std::vector<Elem>        table_;
    std::vector<std::string> labels_;
  };

  /// Text format: `size: n`, then n rows of n element indices, an optional
  /// `labels: l0 l1 ...` line and (for involution semigroups) an optional
  /// `star: i0 i1 ...` line.
  struct SemigroupText {
    FiniteSemigroup                  semigroup;
    std::optional<std::vector<Elem>> star;
  };

  SemigroupText parse_semigroup(std::string_view text);
  std::string   format_semigroup(FiniteSemigroup const&   s,
                                 std::vector<Elem> const* star = nullptr);

  /// A total map on {0, ..., n-1}.  Composition is left to right: (f * g)(q)
  /// = g(f(q)), matching how transition maps of a DFA compose along a word.
  class Transformation {
   public:
    Transformation() = default;
    explicit Transformation(std::vector<std::uint32_t> images);

    std::size_t degree() const noexcept {
      return images_.size();
    }

    std::uint32_t operator[](std::size_t q) const {
      return images_[q];
    }

    std::vector<std::uint32_t> const& images() const noexcept {
      return images_;
    }

    Transformation then(Transformation const& g) const;

    bool operator==(Transformation const&) const = default;

   private:
    std::vector<std::uint32_t> images_;
  };

  struct TransformationHash {
    std::size_t operator()(Transformation const& t) const noexcept;
  };

  struct GeneratedSemigroup {
    FiniteSemigroup             semigroup;
    std::vector<Transformation> elements;
    /// Shortest witness word (over generator indices) per element; ties are
    /// broken lexicographically.
    std::vector<Word>           witnesses;
    /// Element index of each generator.
    std::vector<Elem>           generators;
  };

  /// Closure of the generators under composition, elements numbered in
  /// breadth-first discovery order.  Throws ResourceLimit past `budget`
  /// elements and ArgumentError on an empty or inconsistent generator list.
  GeneratedSemigroup generate(std::span<Transformation const> generators,
                              std::size_t budget = default_element_budget);

  /// Finite semigroup presented by a shortlex-decreasing rewriting system
  /// over `num_generators` letters.  Elements are the reachable normal forms.
  /// Throws ArgumentError when a rule is not shortlex-decreasing or the
  /// system is not locally confluent.  `names` labels the generators.
  FiniteSemigroup from_rewriting(std::size_t                           num_generators,
                                 std::vector<std::pair<Word, Word>> const& rules,
                                 std::string_view                      names,
                                 std::size_t budget = default_element_budget);

  std::vector<Elem> idempotents(FiniteSemigroup const& s);

  /// Minimal t >= 1 with s^t = s^{t+1} for every s, or nullopt when some
  /// element generates a nontrivial group.
  std::optional<std::size_t> aperiodicity_index(FiniteSemigroup const& s);

  bool is_aperiodic(FiniteSemigroup const& s);
  bool is_commutative(FiniteSemigroup const& s);

  /// ese = e for every idempotent e and every s.
  bool is_locally_trivial(FiniteSemigroup const& s);

  /// The set of products of exactly k elements (S^k), sorted.
  std::vector<Elem> products_of_length(FiniteSemigroup const& s, std::size_t k);

  /// Whether p z q = p q for all p, q in S^k and z in S.
  bool satisfies_delay(FiniteSemigroup const& s, std::size_t k);

  /// Minimal k with p z q = p q for all p, q in S^k, z in S.  Throws
  /// PreconditionError unless `s` is locally trivial.
  std::size_t local_delay(FiniteSemigroup const& s);

  FiniteSemigroup opposite(FiniteSemigroup const& s);

  /// Element (x, y) has index x * |T| + y.
  FiniteSemigroup direct_product(FiniteSemigroup const& s,
                                 FiniteSemigroup const& t);

  /// map(xy) = map(x) map(y) for all x, y.
  bool is_morphism(FiniteSemigroup const& s,
                   FiniteSemigroup const& t,
                   std::span<Elem const>  map);

  /// Sorted closure of `gens` under multiplication.
  std::vector<Elem> subsemigroup(FiniteSemigroup const& s,
                                 std::span<Elem const>  gens);

  /// A small generating set, chosen greedily in index order.
  std::vector<Elem> generating_set(FiniteSemigroup const& s);

  /// The subsemigroup on `elems` (sorted, closed), renumbered 0..m-1 in the
  /// given order.  Throws ArgumentError if `elems` is not closed.
  FiniteSemigroup restrict_to(FiniteSemigroup const& s,
                              std::span<Elem const>  elems);

  /// A surjective morphism from a subsemigroup of `s` onto `t`, given as the
  /// pairs (x in s, image in t) over the subsemigroup's elements.  Throws
  /// ResourceLimit when |s| exceeds `budget`.
  std::optional<std::vector<std::pair<Elem, Elem>>>
  find_division(FiniteSemigroup const& t,
                FiniteSemigroup const& s,
                std::size_t            budget = default_division_budget);

  /// Whether `t` divides `s` (is a quotient of a subsemigroup of `s`).
  bool divides(FiniteSemigroup const& t,
               FiniteSemigroup const& s,
               std::size_t            budget = default_division_budget);

  /// An isomorphism s -> t as an element map, if one exists.  `hint` may fix
  /// the images of some elements (index -> image) to guide the search.
  std::optional<std::vector<Elem>>
  find_isomorphism(FiniteSemigroup const&                   s,
                   FiniteSemigroup const&                   t,
                   std::vector<std::pair<Elem, Elem>> const& hint = {});

}  // namespace invsg

#endif  // INVSG_SEMIGROUP_HPP_
