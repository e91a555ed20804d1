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


#include "invsg/lrtt.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "invsg/errors.hpp"

namespace invsg {

  ////////////////////////////////////////////////////////////////////////
  // Window semigroup
  ////////////////////////////////////////////////////////////////////////

  Elem WindowSemigroup::index(std::span<Letter const> w) const {
    auto it = std::lower_bound(words.begin(), words.end(), w,
                               [](Word const& x, std::span<Letter const> y) {
                                 return shortlex_less(x, y);
                               });
    if (it == words.end() || !std::equal(it->begin(), it->end(), w.begin(), w.end())) {
      throw ArgumentError("not an element of the window semigroup");
    }
    return static_cast<Elem>(it - words.begin());
  }

  WindowSemigroup window_semigroup(InvolutoryAlphabet const& alphabet,
                                   std::size_t               k,
                                   std::size_t               budget) {
    if (k == 0) {
      throw ArgumentError("window_semigroup: k must be positive");
    }
    std::size_t count = 0, power = 1;
    for (std::size_t i = 1; i <= 2 * k; ++i) {
      power *= alphabet.size();
      count += power;
      if (count > budget) {
        throw ResourceLimit("window semigroup", count);
      }
    }
    WindowSemigroup w;
    w.k                 = k;
    w.words             = all_words(alphabet.size(), 1, 2 * k);
    std::size_t const n = w.words.size();
    std::vector<Elem> table(n * n), star(n);
    for (Elem x = 0; x < n; ++x) {
      star[x] = w.index(word_involution(alphabet, w.words[x]));
      for (Elem y = 0; y < n; ++y) {
        Word p = w.words[x];
        p.insert(p.end(), w.words[y].begin(), w.words[y].end());
        if (p.size() >= 2 * k) {
          p.erase(p.begin() + k, p.end() - k);
        }
        table[x * n + y] = w.index(p);
      }
    }
    std::vector<std::string> labels;
    for (auto const& word : w.words) {
      labels.push_back(alphabet.str(word));
    }
    w.semigroup = InvolutionSemigroup(
        FiniteSemigroup::from_table(n, std::move(table), std::move(labels)),
        std::move(star));
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Anchored words
  ////////////////////////////////////////////////////////////////////////

  AnchoredSpace::AnchoredSpace(InvolutoryAlphabet alphabet, std::size_t k, bool pool_zeros)
      : alphabet_(std::move(alphabet)), k_(k), pool_zeros_(pool_zeros) {
    if (k == 0) {
      throw ArgumentError("anchored words: k must be positive");
    }
    contexts_  = all_words(alphabet_.size(), 0, k);
    num_words_ = contexts_.size() * alphabet_.size() * contexts_.size();
    slot_of_.resize(num_words_);
    for (std::size_t i = 0; i < num_words_; ++i) {
      std::size_t d = dagger(i);
      if (pool_zeros_ && is_zero(i) && d < i) {
        slot_of_[i] = slot_of_[d];
      } else {
        slot_of_[i] = slot_rep_.size();
        slot_rep_.push_back(i);
      }
    }
  }

  std::size_t AnchoredSpace::context_index(std::span<Letter const> w) const {
    std::size_t offset = 0, power = 1;
    for (std::size_t len = 0; len < w.size(); ++len) {
      offset += power;
      power *= alphabet_.size();
    }
    std::size_t code = 0;
    for (Letter a : w) {
      code = code * alphabet_.size() + a;
    }
    return offset + code;
  }

  Anchored AnchoredSpace::word(std::size_t i) const {
    std::size_t const nc = contexts_.size(), na = alphabet_.size();
    return {contexts_[i / (na * nc)], static_cast<Letter>((i / nc) % na),
            contexts_[i % nc]};
  }

  std::size_t AnchoredSpace::index(Anchored const& w) const {
    if (w.left.size() > k_ || w.right.size() > k_ || w.anchor >= alphabet_.size()) {
      throw ArgumentError("not a k-anchored word");
    }
    std::size_t const nc = contexts_.size(), na = alphabet_.size();
    return (context_index(w.left) * na + w.anchor) * nc + context_index(w.right);
  }

  bool AnchoredSpace::is_zero(std::size_t i) const {
    Anchored w = word(i);
    return w.left.size() == k_ && w.right.size() == k_;
  }

  std::size_t AnchoredSpace::left_letter(Letter a, std::size_t i) const {
    Anchored w = word(i);
    if (w.left.size() == k_) {
      return i;
    }
    w.left.insert(w.left.begin(), a);
    return index(w);
  }

  std::size_t AnchoredSpace::right_letter(std::size_t i, Letter a) const {
    Anchored w = word(i);
    if (w.right.size() == k_) {
      return i;
    }
    w.right.push_back(a);
    return index(w);
  }

  std::size_t AnchoredSpace::dagger(std::size_t i) const {
    Anchored w = word(i);
    return index({word_involution(alphabet_, w.right), alphabet_.dagger(w.anchor),
                  word_involution(alphabet_, w.left)});
  }

  std::string AnchoredSpace::describe_word(std::size_t i) const {
    Anchored w = word(i);
    return alphabet_.str(w.left) + "." + alphabet_.symbol(w.anchor) + "."
           + alphabet_.str(w.right);
  }

  std::string AnchoredSpace::describe_slot(std::size_t s) const {
    std::size_t const r = slot_rep_[s];
    std::size_t const d = dagger(r);
    if (pool_zeros_ && is_zero(r) && d != r) {
      return describe_word(r) + "|" + describe_word(d);
    }
    return describe_word(r);
  }

  ////////////////////////////////////////////////////////////////////////
  // Threshold multisets
  ////////////////////////////////////////////////////////////////////////

  MultisetModel::MultisetModel(AnchoredSpace const&   space,
                               WindowSemigroup const& window,
                               std::size_t            m)
      : space_(&space), window_(&window), m_(m) {
    if (m == 0 || m > 255) {
      throw ArgumentError("threshold multisets: m must be in [1, 255]");
    }
    std::size_t const ns = space.num_slots(), nt = window.words.size();
    left_.resize(nt * ns);
    right_.resize(ns * nt);
    star_.resize(ns);
    for (std::size_t s = 0; s < ns; ++s) {
      std::size_t const rep = space.slot_representative(s);
      star_[s]              = space.slot(space.dagger(rep));
      for (std::size_t t = 0; t < nt; ++t) {
        Word const& u = window.words[t];
        std::size_t l = rep, r = rep;
        for (auto it = u.rbegin(); it != u.rend(); ++it) {
          l = space.left_letter(*it, l);
        }
        for (Letter a : u) {
          r = space.right_letter(r, a);
        }
        left_[t * ns + s]  = space.slot(l);
        right_[s * nt + t] = space.slot(r);
      }
    }
  }

  ThresholdMultiset MultisetModel::singleton(std::size_t anchored) const {
    ThresholdMultiset out(space_->num_slots(), 0);
    out[space_->slot(anchored)] = 1;
    return out;
  }

  ThresholdMultiset MultisetModel::add(SElem const& x, SElem const& y) const {
    ThresholdMultiset out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      out[i] = static_cast<std::uint8_t>(std::min<std::size_t>(m_, x[i] + y[i]));
    }
    return out;
  }

  ThresholdMultiset MultisetModel::left(Elem t, SElem const& s) const {
    std::size_t const ns = s.size();
    ThresholdMultiset out(ns, 0);
    for (std::size_t i = 0; i < ns; ++i) {
      if (s[i] != 0) {
        auto& c = out[left_[t * ns + i]];
        c       = static_cast<std::uint8_t>(std::min<std::size_t>(m_, c + s[i]));
      }
    }
    return out;
  }

  ThresholdMultiset MultisetModel::right(SElem const& s, Elem t) const {
    std::size_t const ns = s.size(), nt = window_->words.size();
    ThresholdMultiset out(ns, 0);
    for (std::size_t i = 0; i < ns; ++i) {
      if (s[i] != 0) {
        auto& c = out[right_[i * nt + t]];
        c       = static_cast<std::uint8_t>(std::min<std::size_t>(m_, c + s[i]));
      }
    }
    return out;
  }

  ThresholdMultiset MultisetModel::star(SElem const& s) const {
    ThresholdMultiset out(s.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      out[star_[i]] = s[i];
    }
    return out;
  }

  std::string MultisetModel::describe(SElem const& s) const {
    std::string out = "{";
    bool        first = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != 0) {
        out += first ? "" : " ";
        out += space_->describe_slot(i);
        if (s[i] > 1) {
          out += "^" + std::to_string(s[i]);
        }
        first = false;
      }
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical recognizer
  ////////////////////////////////////////////////////////////////////////

  std::size_t
  CanonicalRecognizer::ElementHash::operator()(Element const& e) const noexcept {
    std::size_t h = 1469598103934665603ull ^ e.t;
    for (auto c : e.s) {
      h = (h ^ c) * 1099511628211ull;
    }
    return h;
  }

  CanonicalRecognizer::CanonicalRecognizer(InvolutoryAlphabet const& alphabet,
                                           std::size_t               k,
                                           std::size_t               m,
                                           bool                      reverse)
      : window_(window_semigroup(alphabet, k)),
        space_(alphabet, k, reverse),
        model_(space_, window_, m) {}

  CanonicalRecognizer::Element CanonicalRecognizer::letter_image(Letter a) const {
    if (a >= alphabet().size()) {
      throw ArgumentError("letter out of range");
    }
    return {model_.singleton(space_.index({{}, a, {}})), window_.letter(a)};
  }

  CanonicalRecognizer::Element
  CanonicalRecognizer::multiply(Element const& x, Element const& y) const {
    return {model_.add(model_.right(x.s, y.t), model_.left(x.t, y.s)),
            window_.semigroup.mul(x.t, y.t)};
  }

  CanonicalRecognizer::Element CanonicalRecognizer::star(Element const& x) const {
    return {model_.star(x.s), window_.semigroup.star(x.t)};
  }

  CanonicalRecognizer::Element
  CanonicalRecognizer::eval(std::span<Letter const> w) const {
    if (w.empty()) {
      throw ArgumentError("eval: the word must be nonempty");
    }
    Element x = letter_image(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      x = multiply(x, letter_image(w[i]));
    }
    return x;
  }

  std::string CanonicalRecognizer::describe(Element const& x) const {
    return "(" + model_.describe(x.s) + ", " + window_.semigroup.base().label(x.t) + ")";
  }

  RecognizerImage recognizer_image(CanonicalRecognizer const& rec, std::size_t budget) {
    using Element          = CanonicalRecognizer::Element;
    std::size_t const na   = rec.alphabet().size();
    RecognizerImage   img;
    std::unordered_map<Element, Elem, CanonicalRecognizer::ElementHash> index;
    auto add = [&](Element e, Word w) -> Elem {
      auto it = index.find(e);
      if (it != index.end()) {
        return it->second;
      }
      if (img.elements.size() >= budget) {
        throw ResourceLimit("canonical recognizer image", img.elements.size());
      }
      Elem id = static_cast<Elem>(img.elements.size());
      index.emplace(e, id);
      img.elements.push_back(std::move(e));
      img.witnesses.push_back(std::move(w));
      return id;
    };
    std::vector<Element> letters;
    for (Letter a = 0; a < na; ++a) {
      letters.push_back(rec.letter_image(a));
      img.letter_map.push_back(add(letters.back(), Word{a}));
    }
    for (std::size_t i = 0; i < img.elements.size(); ++i) {
      for (Letter a = 0; a < na; ++a) {
        Word w = img.witnesses[i];
        w.push_back(a);
        Elem y = add(rec.multiply(img.elements[i], letters[a]), std::move(w));
        img.right.push_back(y);
      }
    }
    for (auto const& e : img.elements) {
      auto it = index.find(rec.star(e));
      if (it == index.end()) {
        throw Error("canonical recognizer image is not closed under the involution");
      }
      img.star.push_back(it->second);
    }
    return img;
  }

  RecognizerImage recognizer_image_prefix(CanonicalRecognizer const& rec,
                                          std::size_t                count) {
    try {
      return recognizer_image(rec, count);
    } catch (ResourceLimit const&) {
    }
    using Element        = CanonicalRecognizer::Element;
    std::size_t const na = rec.alphabet().size();
    RecognizerImage   img;
    img.complete = false;
    std::unordered_set<Element, CanonicalRecognizer::ElementHash> seen;
    std::vector<Element> letters;
    for (Letter a = 0; a < na; ++a) {
      letters.push_back(rec.letter_image(a));
    }
    auto add = [&](Element e, Word w) {
      if (img.elements.size() < count && seen.insert(e).second) {
        img.elements.push_back(std::move(e));
        img.witnesses.push_back(std::move(w));
      }
    };
    for (Letter a = 0; a < na; ++a) {
      add(letters[a], Word{a});
    }
    for (std::size_t i = 0; i < img.elements.size() && img.elements.size() < count; ++i) {
      for (Letter a = 0; a < na; ++a) {
        Word w = img.witnesses[i];
        w.push_back(a);
        add(rec.multiply(img.elements[i], letters[a]), std::move(w));
      }
    }
    return img;
  }

  InvolutionSemigroup dense_image(CanonicalRecognizer const& rec,
                                  RecognizerImage const&     image,
                                  std::size_t                max_size) {
    if (!image.complete) {
      throw ArgumentError("dense_image: the image is truncated");
    }
    std::size_t const n  = image.size();
    std::size_t const na = rec.alphabet().size();
    if (n > max_size) {
      throw ResourceLimit("dense recognizer image", n);
    }
    std::vector<Elem> table(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        Elem z = x;
        for (Letter a : image.witnesses[y]) {
          z = image.right[z * na + a];
        }
        table[x * n + y] = z;
      }
    }
    std::vector<std::string> labels;
    for (auto const& w : image.witnesses) {
      labels.push_back(rec.alphabet().str(w));
    }
    return InvolutionSemigroup(
        FiniteSemigroup::from_trusted_table(n, std::move(table), std::move(labels)),
        image.star);
  }

  bool CanonicalReport::ok() const {
    return s_commutative && s_aperiodic && t_locally_trivial && t_idempotents_are_2k
           && letter_images_fixed && product_involution && !action && !involutory
           && !two_sided_involutory && !locally_hermitian && !rotation;
  }

  CanonicalReport validate_canonical(CanonicalRecognizer const& rec,
                                     RecognizerImage const&     image,
                                     SamplePolicy const&        policy) {
    CanonicalReport      r;
    MultisetModel const& m = rec.model();
    FiniteSemigroup const& t = rec.window().semigroup.base();
    r.window_size    = t.size();
    r.anchored_words = rec.space().size();
    r.slots          = rec.space().num_slots();
    r.image_size     = image.size();

    std::set<ThresholdMultiset> seen;
    for (std::size_t i = 0; i < rec.space().size(); ++i) {
      seen.insert(m.singleton(i));
    }
    for (auto const& e : image.elements) {
      seen.insert(e.s);
    }
    std::vector<ThresholdMultiset> carrier(seen.begin(), seen.end());
    std::span<ThresholdMultiset const> c(carrier);
    r.carrier_size = carrier.size();

    r.s_commutative = detail::for_pairs(carrier.size(), policy, [&](auto i, auto j) {
      return m.add(carrier[i], carrier[j]) == m.add(carrier[j], carrier[i]);
    });
    r.s_aperiodic = true;
    for (auto const& s : carrier) {
      ThresholdMultiset p    = s;
      std::size_t       n    = 1;
      for (; n <= m.m() + 1; ++n) {
        ThresholdMultiset next = m.add(p, s);
        if (next == p) {
          break;
        }
        p = std::move(next);
      }
      if (n > m.m() + 1) {
        r.s_aperiodic = false;
      } else {
        r.s_aperiodicity_index = std::max(r.s_aperiodicity_index, n);
      }
    }

    r.t_locally_trivial = is_locally_trivial(t);
    {
      std::vector<Elem> expected;
      for (Elem x = 0; x < t.size(); ++x) {
        if (rec.window().words[x].size() == 2 * rec.k()) {
          expected.push_back(x);
        }
      }
      r.t_idempotents_are_2k = idempotents(t) == expected;
    }
    if (r.t_locally_trivial) {
      r.t_local_delay = local_delay(t);
    }

    r.letter_images_fixed = true;
    for (Letter a = 0; a < rec.alphabet().size(); ++a) {
      if (!(rec.star(rec.letter_image(a))
            == rec.letter_image(rec.alphabet().dagger(a)))) {
        r.letter_images_fixed = false;
      }
    }

    r.product_involution = true;
    for (auto const& e : image.elements) {
      if (!(rec.star(rec.star(e)) == e)) {
        r.product_involution = false;
      }
    }
    if (r.product_involution) {
      auto const& el = image.elements;
      r.product_involution = detail::for_pairs(el.size(), policy, [&](auto i, auto j) {
        return rec.star(rec.multiply(el[i], el[j]))
               == rec.multiply(rec.star(el[j]), rec.star(el[i]));
      });
    }

    auto finish = [&](std::optional<ActionViolation> v) {
      if (v) {
        explain(m, c, *v);
      }
      return v;
    };
    r.action               = finish(check_action_laws(m, c, policy));
    r.involutory           = finish(check_involutory(m, c, policy));
    r.two_sided_involutory = finish(check_two_sided_involutory(m, c));
    r.locally_hermitian    = finish(check_locally_hermitian(m, c));
    if (r.t_locally_trivial) {
      r.rotation = finish(check_hermitian_rotation(m, c, r.t_local_delay, policy));
    }
    return r;
  }

  std::string format_report(CanonicalReport const& r) {
    auto flag = [](bool b) { return b ? "true" : "false"; };
    auto law  = [](std::optional<ActionViolation> const& v) {
      return v ? "false (" + v->detail + ")" : std::string("true");
    };
    std::string out;
    out += "window_size: " + std::to_string(r.window_size) + "\n";
    out += "anchored_words: " + std::to_string(r.anchored_words) + "\n";
    out += "multiset_slots: " + std::to_string(r.slots) + "\n";
    out += "image_size: " + std::to_string(r.image_size) + "\n";
    out += "s_carrier_size: " + std::to_string(r.carrier_size) + "\n";
    out += std::string("s_commutative: ") + flag(r.s_commutative) + "\n";
    out += std::string("s_aperiodic: ") + flag(r.s_aperiodic) + "\n";
    out += "s_aperiodicity_index: " + std::to_string(r.s_aperiodicity_index) + "\n";
    out += std::string("t_locally_trivial: ") + flag(r.t_locally_trivial) + "\n";
    out += std::string("t_idempotents_are_length_2k: ") + flag(r.t_idempotents_are_2k)
           + "\n";
    out += "t_local_delay: " + std::to_string(r.t_local_delay) + "\n";
    out += std::string("letter_images_respect_involution: ")
           + flag(r.letter_images_fixed) + "\n";
    out += std::string("product_involution: ") + flag(r.product_involution) + "\n";
    out += "action_laws: " + law(r.action) + "\n";
    out += "action_involutory: " + law(r.involutory) + "\n";
    out += "two_sided_involutory: " + law(r.two_sided_involutory) + "\n";
    out += "locally_hermitian: " + law(r.locally_hermitian) + "\n";
    out += "hermitian_rotation: " + law(r.rotation) + "\n";
    return out;
  }

  Dfa image_preimage_dfa(RecognizerImage const& image, std::vector<bool> const& accepting) {
    std::size_t const n  = image.size();
    std::size_t const na = image.letter_map.size();
    if (accepting.size() != n) {
      throw ArgumentError("image_preimage_dfa: one flag per image element");
    }
    auto const init = static_cast<Dfa::State>(n);
    Dfa        d(na, n + 1, init);
    for (Letter a = 0; a < na; ++a) {
      d.set_next(init, a, image.letter_map[a]);
      for (Elem x = 0; x < n; ++x) {
        d.set_next(x, a, image.right[x * na + a]);
      }
    }
    for (Elem x = 0; x < n; ++x) {
      d.set_final(x, accepting[x]);
    }
    return minimize(d);
  }

  ////////////////////////////////////////////////////////////////////////
  // Signature automaton
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // State layout: [min(|w|, k)] [prefix: k-1] [window: k-1] [counts].  The
    // state of a nonempty word determines and is determined by its
    // signature; state 0 is the empty word.
    class SignatureAutomaton {
     public:
      SignatureAutomaton(InvolutoryAlphabet const& alphabet,
                         std::size_t               k,
                         std::size_t               t,
                         Mode                      mode,
                         std::size_t               budget)
          : na_(alphabet.size()), k_(k), t_(t), budget_(budget) {
        std::map<Word, std::uint32_t> classes;
        std::size_t                   power = 1;
        for (std::size_t len = 1; len <= k; ++len) {
          offset_.push_back(class_of_.size());
          power *= na_;
          Word w(len, 0);
          do {
            Word key = factor_key(alphabet, w, mode);
            auto it  = classes.try_emplace(key, static_cast<std::uint32_t>(classes.size()));
            class_of_.push_back(it.first->second);
          } while (next_word(w, na_));
          (void) power;
        }
        num_classes_ = classes.size();
        std::string empty(1 + 2 * (k - 1) + num_classes_, '\0');
        std::fill(empty.begin() + 1, empty.begin() + 1 + 2 * (k - 1), '\xff');
        intern(std::move(empty));
      }

      std::uint32_t next(std::uint32_t q, Letter a) {
        std::size_t const slot = static_cast<std::size_t>(q) * na_ + a;
        if (trans_[slot] != unset) {
          return trans_[slot];
        }
        std::string s       = states_[q];
        std::size_t old_len = static_cast<std::uint8_t>(s[0]);
        std::size_t const p = 1, w = 1 + (k_ - 1), c = 1 + 2 * (k_ - 1);
        std::size_t const wl = std::min(old_len, k_ - 1);
        Word              seq(s.begin() + w, s.begin() + w + wl);
        seq.push_back(a);
        if (old_len < k_ - 1) {
          s[p + old_len] = static_cast<char>(a);
        }
        s[0] = static_cast<char>(std::min(old_len + 1, k_));
        std::size_t const keep = std::min(seq.size(), k_ - 1);
        for (std::size_t i = 0; i < k_ - 1; ++i) {
          s[w + i] = i < keep ? static_cast<char>(seq[seq.size() - keep + i]) : '\xff';
        }
        std::size_t code = 0, power = 1;
        for (std::size_t len = 1; len <= seq.size(); ++len) {
          code += seq[seq.size() - len] * power;
          power *= na_;
          auto& cnt = s[c + class_of_[offset_[len - 1] + code]];
          cnt       = static_cast<char>(std::min<std::size_t>(
              t_, static_cast<std::uint8_t>(cnt) + 1));
        }
        std::uint32_t r = intern(std::move(s));
        trans_[slot]    = r;
        return r;
      }

      bool is_long(std::uint32_t q) const {
        return static_cast<std::uint8_t>(states_[q][0]) == k_;
      }

      std::string_view prefix(std::uint32_t q) const {
        return std::string_view(states_[q]).substr(1, k_ - 1);
      }

      std::string_view counts(std::uint32_t q) const {
        return std::string_view(states_[q]).substr(1 + 2 * (k_ - 1));
      }

      std::size_t size() const noexcept {
        return states_.size();
      }

     private:
      static constexpr std::uint32_t unset = static_cast<std::uint32_t>(-1);

      std::uint32_t intern(std::string s) {
        auto it = index_.find(s);
        if (it != index_.end()) {
          return it->second;
        }
        if (states_.size() >= budget_) {
          throw ResourceLimit("signature automaton", states_.size());
        }
        auto id = static_cast<std::uint32_t>(states_.size());
        index_.emplace(s, id);
        states_.push_back(std::move(s));
        trans_.resize(trans_.size() + na_, unset);
        return id;
      }

      std::size_t                                    na_, k_, t_, budget_;
      std::vector<std::size_t>                       offset_;
      std::vector<std::uint32_t>                     class_of_;
      std::size_t                                    num_classes_ = 0;
      std::vector<std::string>                       states_;
      std::unordered_map<std::string, std::uint32_t> index_;
      std::vector<std::uint32_t>                     trans_;
    };

    // Breadth-first exploration of (left state, DFA state) pairs with parent
    // links, so that each pair is reached first by its shortlex-least word.
    struct PairSearch {
      struct Node {
        std::uint32_t left;
        Dfa::State    q;
        std::uint32_t parent;
        Letter        letter;
      };

      static constexpr std::uint32_t root = static_cast<std::uint32_t>(-1);

      std::vector<Node>                            nodes;
      std::unordered_map<std::uint64_t, std::uint32_t> seen;
      std::size_t                                  budget;
      std::size_t                                  num_states;

      std::optional<std::uint32_t>
      push(std::uint32_t left, Dfa::State q, std::uint32_t parent, Letter a) {
        std::uint64_t key = static_cast<std::uint64_t>(left) * num_states + q;
        if (seen.count(key)) {
          return std::nullopt;
        }
        if (nodes.size() >= budget) {
          throw ResourceLimit("product search", nodes.size());
        }
        auto id = static_cast<std::uint32_t>(nodes.size());
        seen.emplace(key, id);
        nodes.push_back({left, q, parent, a});
        return id;
      }

      Word word(std::uint32_t id) const {
        Word w;
        for (; id != root; id = nodes[id].parent) {
          w.push_back(nodes[id].letter);
        }
        std::reverse(w.begin(), w.end());
        return w;
      }
    };

    bool dominated(std::string_view x, std::string const& bound) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (static_cast<std::uint8_t>(x[i]) > static_cast<std::uint8_t>(bound[i])) {
          return false;
        }
      }
      return true;
    }

    void raise_to(std::string& bound, std::string_view x) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (static_cast<std::uint8_t>(x[i]) > static_cast<std::uint8_t>(bound[i])) {
          bound[i] = x[i];
        }
      }
    }

  }  // namespace

  UnionCheck union_check_exact(Dfa const&                input,
                               InvolutoryAlphabet const& alphabet,
                               std::size_t               k,
                               std::size_t               t,
                               Mode                      mode,
                               std::size_t               budget) {
    if (k == 0 || t == 0) {
      throw ArgumentError("is_union_of_classes: k and t must be positive");
    }
    if (t > 255) {
      throw ArgumentError("is_union_of_classes: t must be below 256");
    }
    if (input.num_letters() != alphabet.size()) {
      throw ArgumentError("is_union_of_classes: DFA and alphabet disagree");
    }
    Dfa const          d = minimize(input);
    SignatureAutomaton sig(alphabet, k, t, mode, budget);
    auto const         coacc = coaccessible_states(d);
    std::size_t const  na    = alphabet.size();

    // Phase 1: every signature of an accepted word, with the shortlex-least
    // accepted word of each, found by exploring only pairs whose DFA state
    // can still reach acceptance.
    PairSearch acc{{}, {}, budget, d.num_states()};
    std::unordered_map<std::uint32_t, std::uint32_t> accepted;  // sig -> node
    auto visit_acc = [&](std::uint32_t parent, std::uint32_t s, Dfa::State q, Letter a) {
      if (!coacc[q]) {
        return;
      }
      auto id = acc.push(s, q, parent, a);
      if (id && d.is_final(q)) {
        accepted.try_emplace(s, *id);
      }
    };
    for (Letter a = 0; a < na; ++a) {
      visit_acc(PairSearch::root, sig.next(0, a), d.next(d.initial(), a), a);
    }
    for (std::uint32_t i = 0; i < acc.nodes.size(); ++i) {
      auto const n = acc.nodes[i];
      for (Letter a = 0; a < na; ++a) {
        visit_acc(i, sig.next(n.left, a), d.next(n.q, a), a);
      }
    }

    // Counts only grow along a word and the prefix is fixed once the word
    // is long, so a long rejected prefix whose counts exceed every accepted
    // signature with the same prefix cannot lead to a conflict.
    std::map<std::string, std::string, std::less<>> ceiling;
    for (auto [s, node] : accepted) {
      if (sig.is_long(s)) {
        auto [it, fresh] = ceiling.try_emplace(std::string(sig.prefix(s)),
                                               std::string(sig.counts(s)));
        if (!fresh) {
          raise_to(it->second, sig.counts(s));
        }
      }
    }
    auto hopeless = [&](std::uint32_t s) {
      if (!sig.is_long(s)) {
        return false;
      }
      auto it = ceiling.find(sig.prefix(s));
      return it == ceiling.end() || !dominated(sig.counts(s), it->second);
    };

    // Phase 2: the shortlex-least rejected word whose signature is that of
    // an accepted word.
    PairSearch all{{}, {}, budget, d.num_states()};
    UnionCheck out;
    std::optional<std::uint32_t> conflict;
    auto visit = [&](std::uint32_t parent, std::uint32_t s, Dfa::State q, Letter a) {
      if (conflict || hopeless(s)) {
        return;
      }
      auto id = all.push(s, q, parent, a);
      if (id && !d.is_final(q) && accepted.count(s)) {
        conflict = *id;
      }
    };
    for (Letter a = 0; a < na && !conflict; ++a) {
      visit(PairSearch::root, sig.next(0, a), d.next(d.initial(), a), a);
    }
    for (std::uint32_t i = 0; i < all.nodes.size() && !conflict; ++i) {
      auto const n = all.nodes[i];
      for (Letter a = 0; a < na; ++a) {
        visit(i, sig.next(n.left, a), d.next(n.q, a), a);
      }
    }
    out.signature_states = sig.size();
    out.product_states   = acc.nodes.size() + all.nodes.size();
    if (conflict) {
      std::uint32_t s = all.nodes[*conflict].left;
      out.witness     = std::make_pair(acc.word(accepted.at(s)), all.word(*conflict));
      return out;
    }
    out.is_union    = true;
    out.certified_k = k;
    return out;
  }

  UnionCheck is_union_of_classes(Dfa const&                d,
                                 InvolutoryAlphabet const& alphabet,
                                 std::size_t               k,
                                 std::size_t               t,
                                 Mode                      mode,
                                 std::size_t               budget) {
    std::size_t signature_states = 0, product_states = 0;
    for (std::size_t j = 1; j < k; ++j) {
      try {
        UnionCheck r = union_check_exact(d, alphabet, j, t, mode, budget);
        signature_states += r.signature_states;
        product_states += r.product_states;
        if (r.is_union) {
          r.signature_states = signature_states;
          r.product_states   = product_states;
          return r;
        }
      } catch (ResourceLimit const&) {
        break;  // finer windows cost more still
      }
    }
    UnionCheck r = union_check_exact(d, alphabet, k, t, mode, budget);
    r.signature_states += signature_states;
    r.product_states += product_states;
    return r;
  }

  SearchResult lrtt_search(Dfa const&                d,
                           InvolutoryAlphabet const& alphabet,
                           std::size_t               k_max,
                           std::size_t               t_max,
                           Mode                      mode,
                           std::size_t               budget) {
    if (k_max == 0 || t_max == 0) {
      throw ArgumentError("lrtt_search: bounds must be positive");
    }
    SearchResult out;
    for (std::size_t sum = 2; sum <= k_max + t_max; ++sum) {
      for (std::size_t k = 1; k <= k_max; ++k) {
        if (sum <= k || sum - k > t_max) {
          continue;
        }
        SearchCell cell;
        cell.k = k;
        cell.t = sum - k;
        try {
          // Coarser cells were visited already, so coarsening would only
          // repeat them.
          UnionCheck r = union_check_exact(d, alphabet, cell.k, cell.t, mode, budget);
          cell.status  = r.is_union ? SearchCell::Status::yes : SearchCell::Status::no;
          cell.witness = std::move(r.witness);
        } catch (ResourceLimit const&) {
          cell.status = SearchCell::Status::limit;
        }
        out.cells.push_back(cell);
        if (cell.status == SearchCell::Status::yes) {
          out.found = std::make_pair(cell.k, cell.t);
          return out;
        }
      }
    }
    return out;
  }

  CanonicalRecognition recognized_by_canonical(Dfa const&                input,
                                               InvolutoryAlphabet const& alphabet,
                                               std::size_t               k,
                                               std::size_t               m,
                                               Mode                      mode,
                                               std::size_t               budget) {
    using Element = CanonicalRecognizer::Element;
    if (input.num_letters() != alphabet.size()) {
      throw ArgumentError("recognized_by_canonical: DFA and alphabet disagree");
    }
    Dfa const               d = minimize(input);
    CanonicalRecognizer     rec(alphabet, k, m, mode == Mode::reverse);
    std::size_t const       na    = alphabet.size();
    auto const              coacc = coaccessible_states(d);
    std::vector<Element>    letters;
    for (Letter a = 0; a < na; ++a) {
      letters.push_back(rec.letter_image(a));
    }
    // Elements are interned lazily; transitions memoised per letter.
    std::vector<Element>                                                elems;
    std::unordered_map<Element, std::uint32_t, CanonicalRecognizer::ElementHash> index;
    std::vector<std::uint32_t>                                          trans;
    constexpr std::uint32_t unset = static_cast<std::uint32_t>(-1);
    auto intern = [&](Element e) -> std::uint32_t {
      auto it = index.find(e);
      if (it != index.end()) {
        return it->second;
      }
      if (elems.size() >= budget) {
        throw ResourceLimit("canonical recognizer image", elems.size());
      }
      auto id = static_cast<std::uint32_t>(elems.size());
      index.emplace(e, id);
      elems.push_back(std::move(e));
      trans.resize(trans.size() + na, unset);
      return id;
    };
    auto step = [&](std::uint32_t x, Letter a) {
      if (trans[x * na + a] == unset) {
        std::uint32_t y   = intern(rec.multiply(elems[x], letters[a]));
        trans[x * na + a] = y;
      }
      return trans[x * na + a];
    };
    std::vector<std::uint32_t> first(na);
    for (Letter a = 0; a < na; ++a) {
      first[a] = intern(letters[a]);
    }

    PairSearch acc{{}, {}, budget, d.num_states()};
    std::unordered_map<std::uint32_t, std::uint32_t> accepted;
    auto visit_acc = [&](std::uint32_t parent, std::uint32_t x, Dfa::State q, Letter a) {
      if (!coacc[q]) {
        return;
      }
      auto id = acc.push(x, q, parent, a);
      if (id && d.is_final(q)) {
        accepted.try_emplace(x, *id);
      }
    };
    for (Letter a = 0; a < na; ++a) {
      visit_acc(PairSearch::root, first[a], d.next(d.initial(), a), a);
    }
    for (std::uint32_t i = 0; i < acc.nodes.size(); ++i) {
      auto const n = acc.nodes[i];
      for (Letter a = 0; a < na; ++a) {
        visit_acc(i, step(n.left, a), d.next(n.q, a), a);
      }
    }

    // Zero slots are fixed by both actions, so their counts only grow.
    AnchoredSpace const& space = rec.space();
    ThresholdMultiset    ceiling(space.num_slots(), 0);
    for (auto [x, node] : accepted) {
      for (std::size_t s = 0; s < space.num_slots(); ++s) {
        ceiling[s] = std::max(ceiling[s], elems[x].s[s]);
      }
    }
    auto hopeless = [&](std::uint32_t x) {
      for (std::size_t s = 0; s < space.num_slots(); ++s) {
        if (space.slot_is_zero(s) && elems[x].s[s] > ceiling[s]) {
          return true;
        }
      }
      return false;
    };

    PairSearch all{{}, {}, budget, d.num_states()};
    std::optional<std::uint32_t> conflict;
    auto visit = [&](std::uint32_t parent, std::uint32_t x, Dfa::State q, Letter a) {
      if (conflict || hopeless(x)) {
        return;
      }
      auto id = all.push(x, q, parent, a);
      if (id && !d.is_final(q) && accepted.count(x)) {
        conflict = *id;
      }
    };
    for (Letter a = 0; a < na && !conflict; ++a) {
      visit(PairSearch::root, first[a], d.next(d.initial(), a), a);
    }
    for (std::uint32_t i = 0; i < all.nodes.size() && !conflict; ++i) {
      auto const n = all.nodes[i];
      for (Letter a = 0; a < na; ++a) {
        visit(i, step(n.left, a), d.next(n.q, a), a);
      }
    }
    CanonicalRecognition out;
    out.explored = elems.size();
    if (conflict) {
      out.witness = std::make_pair(acc.word(accepted.at(all.nodes[*conflict].left)),
                                   all.word(*conflict));
      return out;
    }
    out.recognized = true;
    return out;
  }

  ThresholdMultiset accepted_zero_bound(CanonicalRecognizer const& rec,
                                        Dfa const&                 input,
                                        std::size_t                budget) {
    using Element = CanonicalRecognizer::Element;
    if (input.num_letters() != rec.alphabet().size()) {
      throw ArgumentError("accepted_zero_bound: DFA and alphabet disagree");
    }
    Dfa const            d     = minimize(input);
    std::size_t const    na    = rec.alphabet().size();
    auto const           coacc = coaccessible_states(d);
    AnchoredSpace const& space = rec.space();
    std::vector<Element> letters;
    for (Letter a = 0; a < na; ++a) {
      letters.push_back(rec.letter_image(a));
    }
    ThresholdMultiset bound(space.num_slots(), 0);
    std::unordered_map<Element, std::vector<Dfa::State>, CanonicalRecognizer::ElementHash>
                                                  seen;
    std::vector<std::pair<Element, Dfa::State>> queue;
    std::size_t                                   pairs = 0;
    auto visit = [&](Element e, Dfa::State q) {
      if (!coacc[q]) {
        return;
      }
      auto& qs = seen[e];
      if (std::find(qs.begin(), qs.end(), q) != qs.end()) {
        return;
      }
      if (++pairs > budget) {
        throw ResourceLimit("accepted zero bound", pairs);
      }
      qs.push_back(q);
      if (d.is_final(q)) {
        for (std::size_t s = 0; s < space.num_slots(); ++s) {
          if (space.slot_is_zero(s)) {
            bound[s] = std::max(bound[s], e.s[s]);
          }
        }
      }
      queue.emplace_back(std::move(e), q);
    };
    for (Letter a = 0; a < na; ++a) {
      visit(letters[a], d.next(d.initial(), a));
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Letter a = 0; a < na; ++a) {
        visit(rec.multiply(queue[i].first, letters[a]), d.next(queue[i].second, a));
      }
    }
    return bound;
  }

  ReesImage rees_image(CanonicalRecognizer const& rec,
                       ThresholdMultiset const&   bound,
                       std::size_t                budget) {
    using Element                = CanonicalRecognizer::Element;
    AnchoredSpace const& space   = rec.space();
    MultisetModel const& model   = rec.model();
    std::size_t const    na      = rec.alphabet().size();
    std::size_t const    nslots  = space.num_slots();
    if (bound.size() != nslots || !(model.star(bound) == bound)) {
      throw ArgumentError("rees_image: the bound must be a star-invariant multiset");
    }
    auto in_ideal = [&](Element const& e) {
      for (std::size_t s = 0; s < nslots; ++s) {
        if (space.slot_is_zero(s) && e.s[s] > bound[s]) {
          return true;
        }
      }
      return false;
    };

    constexpr Elem       none = static_cast<Elem>(-1);
    ReesImage            out;
    std::vector<Element> elems;
    std::vector<Elem>    right;  // right[x * na + a]; `none` stands for I
    std::unordered_map<Element, Elem, CanonicalRecognizer::ElementHash> index;
    bool                 zero_reached = false;
    auto add = [&](Element e, Word w) -> Elem {
      if (in_ideal(e)) {
        zero_reached = true;
        return none;
      }
      auto it = index.find(e);
      if (it != index.end()) {
        return it->second;
      }
      if (elems.size() >= budget) {
        throw ResourceLimit("Rees quotient image", elems.size());
      }
      Elem id = static_cast<Elem>(elems.size());
      index.emplace(e, id);
      elems.push_back(std::move(e));
      out.witnesses.push_back(std::move(w));
      return id;
    };
    std::vector<Element> letters;
    for (Letter a = 0; a < na; ++a) {
      letters.push_back(rec.letter_image(a));
      out.letter_map.push_back(add(letters.back(), Word{a}));
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (Letter a = 0; a < na; ++a) {
        Word w = out.witnesses[i];
        w.push_back(a);
        right.push_back(add(rec.multiply(elems[i], letters[a]), std::move(w)));
      }
    }

    std::size_t const n = elems.size() + (zero_reached ? 1 : 0);
    Elem const        z = static_cast<Elem>(elems.size());
    auto fix = [&](Elem x) { return x == none ? z : x; };
    for (auto& x : out.letter_map) {
      x = fix(x);
    }
    std::vector<Elem> table(n * n, z);
    std::vector<Elem> star(n, z);
    for (Elem x = 0; x < elems.size(); ++x) {
      for (Elem y = 0; y < elems.size(); ++y) {
        Elem p = x;
        for (Letter a : out.witnesses[y]) {
          p = p == none ? none : right[p * na + a];
        }
        table[x * n + y] = fix(p);
      }
      auto it = index.find(rec.star(elems[x]));
      if (it == index.end()) {
        throw Error("rees_image: the image is not closed under the involution");
      }
      star[x] = it->second;
    }
    std::vector<std::string> labels;
    for (auto const& w : out.witnesses) {
      labels.push_back(rec.alphabet().str(w));
    }
    if (zero_reached) {
      out.zero = z;
      out.witnesses.emplace_back();
      labels.emplace_back("0");
    }
    out.semigroup = InvolutionSemigroup(
        FiniteSemigroup::from_table(n, std::move(table), std::move(labels)), std::move(star));
    return out;
  }

}  // namespace invsg
