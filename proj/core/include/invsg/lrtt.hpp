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

// Locally (reversible) threshold testable languages: the canonical
// recognizer built from the window semigroup and threshold multisets of
// anchored words, and the fixed-parameter membership checks.

#ifndef INVSG_LRTT_HPP_
#define INVSG_LRTT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invsg/alphabet.hpp"
#include "invsg/factors.hpp"
#include "invsg/involution.hpp"
#include "invsg/regular.hpp"
#include "invsg/semidirect.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

  inline constexpr std::size_t default_signature_budget = 5'000'000;

  /// T = (A^{<=2k} \ {ε}, ⊙) with t ⊙ t' = tt' when |tt'| < 2k and
  /// pref_k(tt') suff_k(tt') otherwise; the star is the word involution.
  struct WindowSemigroup {
    std::size_t         k = 1;
    std::vector<Word>   words;  // element i, in shortlex order
    InvolutionSemigroup semigroup;

    Elem index(std::span<Letter const> w) const;  // w of length 1..2k
    Elem letter(Letter a) const {
      return a;
    }
  };

  WindowSemigroup window_semigroup(InvolutoryAlphabet const& alphabet,
                                   std::size_t               k,
                                   std::size_t budget = default_element_budget);

  /// k-anchored words l â r with |l|, |r| <= k.  Zeros have |l| = |r| = k.
  struct Anchored {
    Word   left;
    Letter anchor = 0;
    Word   right;

    bool operator==(Anchored const&) const = default;
  };

  /// The anchored words W_k with the letter actions, and the multiset slots:
  /// one per non-zero anchored word and one per zero class {z, z†} (or one
  /// per zero when `pool_zeros` is false).
  class AnchoredSpace {
   public:
    AnchoredSpace(InvolutoryAlphabet alphabet, std::size_t k, bool pool_zeros = true);

    InvolutoryAlphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    std::size_t k() const noexcept {
      return k_;
    }
    bool pool_zeros() const noexcept {
      return pool_zeros_;
    }

    std::size_t size() const noexcept {
      return num_words_;
    }
    Anchored    word(std::size_t i) const;
    std::size_t index(Anchored const& w) const;
    bool        is_zero(std::size_t i) const;

    /// a ⊗ ŵ (prepend unless the left context is full), ŵ ⊗ a, and ŵ†.
    std::size_t left_letter(Letter a, std::size_t i) const;
    std::size_t right_letter(std::size_t i, Letter a) const;
    std::size_t dagger(std::size_t i) const;

    std::size_t num_slots() const noexcept {
      return slot_rep_.size();
    }
    std::size_t slot(std::size_t i) const {
      return slot_of_[i];
    }
    /// Least anchored word in the slot.
    std::size_t slot_representative(std::size_t s) const {
      return slot_rep_[s];
    }
    bool slot_is_zero(std::size_t s) const {
      return is_zero(slot_rep_[s]);
    }

    /// `x.ŷ.z`, with the anchored letter after the dot; zero classes show
    /// both members.
    std::string describe_word(std::size_t i) const;
    std::string describe_slot(std::size_t s) const;

   private:
    InvolutoryAlphabet       alphabet_;
    std::size_t              k_;
    bool                     pool_zeros_;
    std::vector<Word>        contexts_;  // all words of length 0..k
    std::size_t              num_words_ = 0;
    std::vector<std::size_t> slot_of_;
    std::vector<std::size_t> slot_rep_;

    std::size_t context_index(std::span<Letter const> w) const;
  };

  /// An element of M(W_k)/≡^m: capped counts per slot.
  using ThresholdMultiset = std::vector<std::uint8_t>;

  /// The action of the window semigroup on threshold multisets, as an
  /// action model for the generic validators.
  class MultisetModel {
   public:
    using SElem = ThresholdMultiset;

    MultisetModel(AnchoredSpace const& space, WindowSemigroup const& window, std::size_t m);

    FiniteSemigroup const& t() const {
      return window_->semigroup.base();
    }
    Elem star_t(Elem x) const {
      return window_->semigroup.star(x);
    }
    SElem       add(SElem const& x, SElem const& y) const;
    SElem       left(Elem t, SElem const& s) const;
    SElem       right(SElem const& s, Elem t) const;
    SElem       star(SElem const& s) const;
    std::string describe(SElem const& s) const;

    std::size_t m() const noexcept {
      return m_;
    }
    SElem singleton(std::size_t anchored) const;

   private:
    AnchoredSpace const*     space_;
    WindowSemigroup const*   window_;
    std::size_t              m_;
    std::vector<std::size_t> left_;   // left_[t * slots + s]
    std::vector<std::size_t> right_;  // right_[s * |T| + t]
    std::vector<std::size_t> star_;
  };

  /// The canonical recognizer S ⋈ T with h(a) = ({â}, a).
  class CanonicalRecognizer {
   public:
    struct Element {
      ThresholdMultiset s;
      Elem              t = 0;

      bool operator==(Element const&) const = default;
    };

    struct ElementHash {
      std::size_t operator()(Element const& e) const noexcept;
    };

    /// `reverse` = false builds the plain variant: zeros are not pooled with
    /// their reverses.  Throws ArgumentError unless k, m >= 1 and m < 256.
    CanonicalRecognizer(InvolutoryAlphabet const& alphabet,
                        std::size_t               k,
                        std::size_t               m,
                        bool                      reverse = true);

    CanonicalRecognizer(CanonicalRecognizer const&)            = delete;
    CanonicalRecognizer& operator=(CanonicalRecognizer const&) = delete;

    InvolutoryAlphabet const& alphabet() const noexcept {
      return space_.alphabet();
    }
    std::size_t k() const noexcept {
      return space_.k();
    }
    std::size_t m() const noexcept {
      return model_.m();
    }
    WindowSemigroup const& window() const noexcept {
      return window_;
    }
    AnchoredSpace const& space() const noexcept {
      return space_;
    }
    MultisetModel const& model() const noexcept {
      return model_;
    }

    Element     letter_image(Letter a) const;
    Element     multiply(Element const& x, Element const& y) const;
    Element     star(Element const& x) const;
    Element     eval(std::span<Letter const> w) const;
    std::string describe(Element const& x) const;

   private:
    WindowSemigroup window_;
    AnchoredSpace   space_;
    MultisetModel   model_;
  };

  /// h(A+) with its right Cayley graph.  Element 0.. in breadth-first order;
  /// witnesses are shortlex-least preimages.
  struct RecognizerImage {
    std::vector<CanonicalRecognizer::Element> elements;
    std::vector<Word>                         witnesses;
    std::vector<Elem>                         right;  // right[x * |A| + a]
    std::vector<Elem>                         star;
    std::vector<Elem>                         letter_map;
    /// False for a truncated image: `elements` and `witnesses` then hold the
    /// first elements in breadth-first order and the tables are empty.
    bool                                      complete = true;

    std::size_t size() const noexcept {
      return elements.size();
    }
  };

  /// Throws ResourceLimit past `budget` elements.
  RecognizerImage recognizer_image(CanonicalRecognizer const& rec,
                                   std::size_t budget = default_element_budget);

  /// The first `count` elements of the image in breadth-first order (all of
  /// them when the image is smaller), for sampling when it is too large.
  RecognizerImage recognizer_image_prefix(CanonicalRecognizer const& rec,
                                          std::size_t                count);

  /// The image as a dense ⋆-semigroup.  Throws ResourceLimit when the image
  /// has more than `max_size` elements, ArgumentError when it is truncated.
  InvolutionSemigroup dense_image(CanonicalRecognizer const& rec,
                                  RecognizerImage const&     image,
                                  std::size_t                max_size = 4096);

  struct CanonicalReport {
    std::size_t window_size    = 0;
    std::size_t anchored_words = 0;
    std::size_t slots          = 0;
    std::size_t image_size     = 0;
    std::size_t carrier_size   = 0;

    bool        s_commutative         = false;
    bool        s_aperiodic           = false;
    std::size_t s_aperiodicity_index  = 0;
    bool        t_locally_trivial     = false;
    bool        t_idempotents_are_2k  = false;
    std::size_t t_local_delay         = 0;
    bool        letter_images_fixed   = false;  // h(a†) = h(a)*
    bool        product_involution    = false;

    std::optional<ActionViolation> action;
    std::optional<ActionViolation> involutory;
    std::optional<ActionViolation> two_sided_involutory;
    std::optional<ActionViolation> locally_hermitian;
    std::optional<ActionViolation> rotation;

    bool ok() const;
  };

  /// Runs every structural check.  The S-side carrier is the singletons of
  /// all anchored words together with the S-coordinates of the image; the
  /// action laws are additive in s, so the singletons settle them.  Pair
  /// quantifiers and the rotation identity follow `policy`.
  CanonicalReport validate_canonical(CanonicalRecognizer const& rec,
                                     RecognizerImage const&     image,
                                     SamplePolicy const&        policy = {});

  std::string format_report(CanonicalReport const& r);

  struct UnionCheck {
    bool                                  is_union = false;
    /// (accepted word, rejected word) with equal signatures.
    std::optional<std::pair<Word, Word>>  witness;
    std::size_t                           signature_states = 0;
    std::size_t                           product_states   = 0;
    /// Window length at which a positive answer was established; may be
    /// below the requested k (see below).
    std::size_t                           certified_k = 0;
  };

  /// Whether L(d) is a union of ≈ classes at (k, t) in the given mode.
  ///
  /// Since ≈ at (k, t) refines ≈ at (k', t) for k' <= k, a union of coarser
  /// classes is also a union of finer ones.  Positive answers are therefore
  /// first sought at k' = 1, ..., k, which is far cheaper than the direct
  /// computation when it succeeds early.  Negative answers and their
  /// witnesses always come from the requested cell.  Throws ResourceLimit
  /// past `budget` explored states.
  UnionCheck is_union_of_classes(Dfa const&                d,
                                 InvolutoryAlphabet const& alphabet,
                                 std::size_t               k,
                                 std::size_t               t,
                                 Mode                      mode,
                                 std::size_t budget = default_signature_budget);

  /// The direct computation at exactly (k, t), without coarsening.
  UnionCheck union_check_exact(Dfa const&                d,
                               InvolutoryAlphabet const& alphabet,
                               std::size_t               k,
                               std::size_t               t,
                               Mode                      mode,
                               std::size_t budget = default_signature_budget);

  struct SearchCell {
    std::size_t                          k = 0;
    std::size_t                          t = 0;
    enum class Status { yes, no, limit } status = Status::no;
    std::optional<std::pair<Word, Word>> witness;
  };

  struct SearchResult {
    std::optional<std::pair<std::size_t, std::size_t>> found;
    std::vector<SearchCell>                            cells;
  };

  /// Scans (k, t) <= (k_max, t_max) by k + t, then k, and stops at the
  /// first cell where L(d) is a union of classes.
  SearchResult lrtt_search(Dfa const&                d,
                           InvolutoryAlphabet const& alphabet,
                           std::size_t               k_max,
                           std::size_t               t_max,
                           Mode                      mode,
                           std::size_t budget = default_signature_budget);

  struct CanonicalRecognition {
    bool                                 recognized = false;
    /// (accepted word, rejected word) with the same image.
    std::optional<std::pair<Word, Word>> witness;
    std::size_t                          explored = 0;
  };

  /// Whether membership in L(d) is a function of h(w) for the canonical
  /// recognizer at (k, m); Mode::plain uses the variant without pooled
  /// zeros.
  CanonicalRecognition recognized_by_canonical(Dfa const&                d,
                                               InvolutoryAlphabet const& alphabet,
                                               std::size_t               k,
                                               std::size_t               m,
                                               Mode                      mode   = Mode::reverse,
                                               std::size_t budget = default_signature_budget);

  /// h^{-1}(P) as a DFA, for P a set of image elements.
  Dfa image_preimage_dfa(RecognizerImage const& image, std::vector<bool> const& accepting);

  /// Componentwise maximum of the zero-slot counts of h(w) over w in L(d);
  /// other slots are 0.
  ThresholdMultiset accepted_zero_bound(CanonicalRecognizer const& rec,
                                        Dfa const&                 d,
                                        std::size_t budget = default_signature_budget);

  /// Zero slots are fixed by both actions and counts never decrease along
  /// products, so the elements exceeding `bound` in some zero slot form an
  /// ideal I of h(A+), closed under the star when `bound` is.  The Rees
  /// quotient h(A+)/I is a ⋆-semigroup that stays small when h(A+) does not.
  struct ReesImage {
    InvolutionSemigroup semigroup;
    std::vector<Elem>   letter_map;
    /// Shortlex-least preimage per element; empty for the zero.
    std::vector<Word>   witnesses;
    std::optional<Elem> zero;  // the class of I, when reached
  };

  /// Throws ResourceLimit past `budget` elements and ArgumentError when
  /// `bound` is not star-invariant.
  ReesImage rees_image(CanonicalRecognizer const& rec,
                       ThresholdMultiset const&   bound,
                       std::size_t                budget = default_element_budget);

}  // namespace invsg

#endif  // INVSG_LRTT_HPP_
