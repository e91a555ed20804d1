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


#include "invsg/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "invsg/errors.hpp"
#include "invsg/factors.hpp"
#include "invsg/folog.hpp"
#include "invsg/involution.hpp"
#include "invsg/lrtt.hpp"
#include "invsg/regular.hpp"
#include "invsg/semigroup.hpp"
#include "invsg/syntactic.hpp"

namespace invsg {

  namespace {

    using Membership = std::function<bool(Word const&)>;

    ////////////////////////////////////////////////////////////////////////
    // Oracles that do not go through automata
    ////////////////////////////////////////////////////////////////////////

    // Set of end positions reachable by matching `r` from any of `from`.
    std::vector<bool> regex_step(Regex const&             r,
                                 std::span<Letter const>  w,
                                 std::vector<bool> const& from) {
      std::vector<bool> out(from.size(), false);
      switch (r.kind) {
        case Regex::Kind::letter:
          for (std::size_t i = 0; i < w.size(); ++i) {
            if (from[i] && w[i] == r.letter) {
              out[i + 1] = true;
            }
          }
          return out;
        case Regex::Kind::concat: {
          out = from;
          for (auto const& c : r.children) {
            out = regex_step(c, w, out);
          }
          return out;
        }
        case Regex::Kind::alt:
          for (auto const& c : r.children) {
            auto x = regex_step(c, w, from);
            for (std::size_t i = 0; i < out.size(); ++i) {
              out[i] = out[i] || x[i];
            }
          }
          return out;
        case Regex::Kind::star:
        case Regex::Kind::plus: {
          std::vector<bool> reached =
              r.kind == Regex::Kind::star ? from : regex_step(r.children[0], w, from);
          std::vector<bool> frontier = reached;
          for (;;) {
            auto next  = regex_step(r.children[0], w, frontier);
            bool fresh = false;
            for (std::size_t i = 0; i < next.size(); ++i) {
              frontier[i] = next[i] && !reached[i];
              fresh       = fresh || frontier[i];
              reached[i]  = reached[i] || next[i];
            }
            if (!fresh) {
              return reached;
            }
          }
        }
      }
      return out;
    }

    Membership regex_membership(std::string const& text, InvolutoryAlphabet const& alphabet) {
      Regex r = parse_regex(text, alphabet);
      return [r](Word const& w) {
        if (w.empty()) {
          return false;
        }
        std::vector<bool> start(w.size() + 1, false);
        start[0] = true;
        return static_cast<bool>(regex_step(r, w, start)[w.size()]);
      };
    }

    std::string signature_key(Signature const& s) {
      std::string key;
      if (s.short_word) {
        key = "s";
        key.append(s.short_word->begin(), s.short_word->end());
        return key;
      }
      key = "l";
      key.append(s.prefix.begin(), s.prefix.end());
      key += '\xff';
      key.append(s.suffix.begin(), s.suffix.end());
      for (auto const& [v, c] : s.counts) {
        key += '\xff';
        key.append(v.begin(), v.end());
        key += '\xfe';
        key += static_cast<char>(c);
      }
      return key;
    }

    // Groups the words of length <= maxlen by signature and returns the
    // first class (in shortlex order of its second member) mixing accepted
    // and rejected words, as (accepted, rejected).
    std::optional<std::pair<Word, Word>> enumerated_mixed_class(Membership const&         member,
                                                                InvolutoryAlphabet const& alphabet,
                                                                std::size_t               k,
                                                                std::size_t               t,
                                                                Mode                      mode,
                                                                std::size_t               maxlen) {
      struct Seen {
        std::optional<Word> accepted, rejected;
      };
      std::unordered_map<std::string, Seen> classes;
      for (std::size_t len = 1; len <= maxlen; ++len) {
        Word w(len, 0);
        do {
          bool  in = member(w);
          Seen& s  = classes[signature_key(signature(alphabet, w, k, t, mode))];
          auto& mine  = in ? s.accepted : s.rejected;
          auto& other = in ? s.rejected : s.accepted;
          if (!mine) {
            mine = w;
          }
          if (other) {
            return std::make_pair(*s.accepted, *s.rejected);
          }
        } while (next_word(w, alphabet.size()));
      }
      return std::nullopt;
    }

    std::string str(InvolutoryAlphabet const& alphabet, Word const& w) {
      return alphabet.str(w);
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    struct Check {
      CriterionResult& r;

      bool operator()(bool ok, std::string const& what) const {
        if (!ok) {
          r.passed = false;
          r.details.push_back("failed: " + what);
        }
        return ok;
      }

      void note(std::string line) const {
        r.details.push_back(std::move(line));
      }
    };

    ////////////////////////////////////////////////////////////////////////
    // Shared fixtures
    ////////////////////////////////////////////////////////////////////////

    // T = {a, b, ab, ba} with aa = a, bb = b, aba = bab = ba.
    FiniteSemigroup four_element_semigroup() {
      return from_rewriting(2,
                            {{{0, 0}, {0}}, {{1, 1}, {1}}, {{0, 1, 0}, {1, 0}}, {{1, 0, 1}, {1, 0}}},
                            "ab");
    }

    InvolutionSemigroup four_element_star_semigroup() {
      FiniteSemigroup   t    = four_element_semigroup();
      std::vector<Elem> gens = {*t.find_label("a"), *t.find_label("b")};
      std::vector<Elem> imgs = {gens[1], gens[0]};
      auto              star = induced_involution(t, gens, imgs).star;
      return InvolutionSemigroup(std::move(t), std::move(*star));
    }

    InvolutoryAlphabet swap_ab() {
      return InvolutoryAlphabet::with_pairs("ab", "a b");
    }

    struct LanguageCase {
      std::string        regex;
      InvolutoryAlphabet alphabet;
    };

    std::vector<LanguageCase> flip_product_pool() {
      auto ab  = InvolutoryAlphabet::hermitian("ab");
      auto abc = InvolutoryAlphabet::hermitian("abc");
      auto sw  = swap_ab();
      auto sw3 = InvolutoryAlphabet::with_pairs("abc", "a b");
      return {{"a+b+", sw},          {"a(ba)*b", ab},       {"c*abc*", abc},
              {"(abc)+", abc},       {"(ab)+", sw},         {"a*b", ab},
              {"(a|b)*aa(a|b)*", ab}, {"a(a|b)*b", sw},     {"(ab|ba)+", ab},
              {"(ac|cb)+", sw3}};
    }

    std::vector<LanguageCase> syntactic_pool() {
      auto ab  = InvolutoryAlphabet::hermitian("ab");
      auto abc = InvolutoryAlphabet::hermitian("abc");
      return {{"a+b+", swap_ab()}, {"a(ba)*b", ab}, {"c*abc*", abc}, {"(abc)+", abc},
              {"a(a|b)*b", swap_ab()}};
    }

    struct FlipRecognizer {
      Dfa                 dfa;
      InvolutionSemigroup semigroup;
      std::vector<Elem>   letter_map;
      std::vector<bool>   accepting;
    };

    // S(L) x S(L)^op with g(w) = (h(w), h(w†)), accepting the pairs whose
    // first coordinate is accepting.
    FlipRecognizer flip_recognizer(LanguageCase const& c) {
      Dfa           d  = regex_dfa(c.regex, c.alphabet);
      SyntacticData sd = syntactic_semigroup(d, c.alphabet);
      std::size_t   n  = sd.semigroup.size();
      FlipRecognizer out{d, flip_product(sd.semigroup), {}, std::vector<bool>(n * n, false)};
      for (Letter a = 0; a < c.alphabet.size(); ++a) {
        out.letter_map.push_back(
            static_cast<Elem>(sd.letter_map[a] * n + sd.letter_map[c.alphabet.dagger(a)]));
      }
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          out.accepting[x * n + y] = sd.accepting[x];
        }
      }
      return out;
    }

    struct SearchCase {
      std::string        regex;
      InvolutoryAlphabet alphabet;
      std::size_t        k_max, t_max;
      Mode               mode;
    };

    SearchCase abc_plus_search() {
      return {"(abc)+", InvolutoryAlphabet::hermitian("abc"), 4, 3, Mode::reverse};
    }

    SearchCase alternating_search() {
      return {"a(ba)*b", InvolutoryAlphabet::hermitian("ab"), 3, 2, Mode::reverse};
    }

    constexpr char const* separating_regex = "c*abc*";
    constexpr std::size_t converse_subsets  = 20;

    // Seeded random accepting subsets of the (k=1, m=1) image over {a, b}.
    std::vector<std::vector<bool>> random_subsets(std::size_t n, std::uint64_t seed) {
      std::mt19937_64                gen(seed);
      std::vector<std::vector<bool>> out;
      for (std::size_t i = 0; i < converse_subsets; ++i) {
        std::vector<bool> p(n);
        for (std::size_t x = 0; x < n; ++x) {
          p[x] = gen() & 1;
        }
        out.push_back(std::move(p));
      }
      return out;
    }

    Membership image_membership(CanonicalRecognizer const& rec,
                                RecognizerImage const&     image,
                                std::vector<bool> const&   accepting) {
      auto index = std::make_shared<
          std::unordered_map<CanonicalRecognizer::Element, Elem, CanonicalRecognizer::ElementHash>>();
      for (Elem x = 0; x < image.size(); ++x) {
        index->emplace(image.elements[x], x);
      }
      return [&rec, index, accepting](Word const& w) { return accepting[index->at(rec.eval(w))]; };
    }

    ////////////////////////////////////////////////////////////////////////
    // Criteria
    ////////////////////////////////////////////////////////////////////////

    void involution_on_four_elements(Check const& check) {
      FiniteSemigroup t = four_element_semigroup();
      Elem const      a = *t.find_label("a"), b = *t.find_label("b");
      Elem const      ab = *t.find_label("ab"), ba = *t.find_label("ba");
      check.note("elements: " + std::to_string(t.size()));
      check(t.size() == 4, "T has four elements");
      check(t.mul(a, a) == a && t.mul(b, b) == b && t.mul(ab, a) == ba && t.mul(ba, b) == ba,
            "defining relations hold");

      std::vector<Elem> gens = {a, b};
      std::vector<Elem> swap = {b, a};
      auto              good = induced_involution(t, gens, swap);
      if (check(good.star.has_value(), "a -> b extends to an anti-morphism")) {
        auto const& s = *good.star;
        check.note("swap_star: a->" + t.label(s[a]) + " b->" + t.label(s[b]) + " ab->"
                   + t.label(s[ab]) + " ba->" + t.label(s[ba]));
        check(s[a] == b && s[b] == a && s[ab] == ab && s[ba] == ba, "induced images");
        check(!validate_involution(t, s), "swap is an involution");
      }

      auto bad = induced_involution(t, gens, gens);
      if (check(bad.conflict.has_value(), "identity on letters is rejected")) {
        auto const& c = *bad.conflict;
        check.note("identity_conflict_element: " + t.label(c.element));
        check.note("identity_conflict: (" + InvolutoryAlphabet::hermitian("ab").str(c.word1)
                   + ")* = " + t.label(c.image1) + ", ("
                   + InvolutoryAlphabet::hermitian("ab").str(c.word2) + ")* = "
                   + t.label(c.image2));
        std::set<Elem> images = {c.image1, c.image2};
        check(c.element == ba && images == std::set<Elem>{ab, ba},
              "conflict is (ba)* = ab against (aba)* = ba");
      }
      std::vector<Elem> identity = {0, 1, 2, 3};
      auto              v        = validate_involution(t, identity);
      if (check(v.has_value(), "identity table is not an involution")) {
        check.note("identity_violation: " + describe(t, identity, *v));
      }
    }

    void recognition_of_a_plus_b_plus(Check const& check) {
      InvolutionSemigroup t  = four_element_star_semigroup();
      auto const          al = swap_ab();
      Dfa                 d  = regex_dfa("a+b+", al);
      FiniteSemigroup const& base = t.base();
      std::vector<Elem>   lm = {*base.find_label("a"), *base.find_label("b")};
      std::vector<bool>   acc(4, false);
      acc[*base.find_label("ab")] = true;
      check(recognizes(t, al, lm, acc, d), "T recognizes a+b+ with accepting set {ab}");

      SyntacticData sd = syntactic_semigroup(d, al);
      check.note("syntactic_size: " + std::to_string(sd.semigroup.size()));
      auto iso = find_isomorphism(sd.semigroup, base);
      if (check(iso.has_value(), "S(a+b+) is isomorphic to T")) {
        std::string m;
        for (Elem x = 0; x < iso->size(); ++x) {
          m += (x ? " " : "") + sd.semigroup.label(x) + "->" + base.label((*iso)[x]);
        }
        check.note("isomorphism: " + m);
        check(is_morphism(sd.semigroup, base, *iso), "exhibited map is a morphism");
      }
    }

    void flip_product_suite(Check const& check) {
      std::size_t words_checked = 0;
      for (auto const& c : flip_product_pool()) {
        FlipRecognizer fr = flip_recognizer(c);
        auto rec = recognition(fr.semigroup, c.alphabet, fr.letter_map, fr.accepting, fr.dfa);
        check(rec.recognizes, "flip product recognizes " + c.regex);
        bool twisted = true;
        for (Word const& w : all_words(c.alphabet.size(), 1, 6)) {
          Elem g  = evaluate(fr.semigroup.base(), fr.letter_map, w);
          Elem gd = evaluate(fr.semigroup.base(), fr.letter_map, word_involution(c.alphabet, w));
          twisted = twisted && gd == fr.semigroup.star(g);
          ++words_checked;
        }
        check(twisted, "g(w†) = flip(g(w)) for " + c.regex);
        check.note("language: " + c.regex + " product_size: "
                   + std::to_string(fr.semigroup.size())
                   + " image_size: " + std::to_string(rec.image.size()));
      }
      check.note("words_checked: " + std::to_string(words_checked));
    }

    void separating_language(Check const& check, AcceptanceOptions const& opt) {
      auto const al     = InvolutoryAlphabet::hermitian("abc");
      Dfa const  d      = regex_dfa(separating_regex, al);
      Membership member = regex_membership(separating_regex, al);
      for (std::size_t k = 1; k <= 3; ++k) {
        for (std::size_t t = 1; t <= 2; ++t) {
          UnionCheck  r    = is_union_of_classes(d, al, k, t, Mode::reverse, opt.budget);
          std::string cell = "(" + std::to_string(k) + "," + std::to_string(t) + ")";
          if (!check(!r.is_union && r.witness, "reverse NO at " + cell)) {
            continue;
          }
          auto const& [u, v] = *r.witness;
          check.note("reverse " + cell + ": no, witness " + str(al, u) + " / " + str(al, v));
          check(signature(al, u, k, t, Mode::reverse) == signature(al, v, k, t, Mode::reverse),
                "witness signatures agree at " + cell);
          check(member(u) && !member(v), "witness membership at " + cell);
        }
      }
      UnionCheck plain = is_union_of_classes(d, al, 2, 2, Mode::plain, opt.budget);
      check.note("plain (2,2): " + yes_no(plain.is_union));
      check(plain.is_union, "plain YES at (2,2)");
    }

    void canonical_forward(Check const& check) {
      auto const          al = InvolutoryAlphabet::hermitian("ab");
      CanonicalRecognizer rec(al, 1, 1);
      std::unordered_map<std::string, std::pair<Word, CanonicalRecognizer::Element>> seen;
      std::size_t words = 0, classes = 0;
      bool        ok    = true;
      for (Word const& w : all_words(al.size(), 1, 9)) {
        ++words;
        auto e  = rec.eval(w);
        auto [it, fresh] =
            seen.try_emplace(signature_key(signature(al, w, 3, 1, Mode::reverse)), w, e);
        classes += fresh;
        if (!fresh && !(it->second.second == e) && ok) {
          ok = false;
          check.note("counterexample: " + str(al, it->second.first) + " / " + str(al, w));
        }
      }
      check.note("words: " + std::to_string(words) + " classes: " + std::to_string(classes));
      check(ok, "equivalent words have equal images");
    }

    void canonical_structure(Check const& check, AcceptanceOptions const& opt) {
      SamplePolicy policy;
      policy.seed = opt.seed;
      for (char const* letters : {"ab", "abc"}) {
        auto const al = InvolutoryAlphabet::hermitian(letters);
        for (std::size_t m : {1, 2}) {
          CanonicalRecognizer rec(al, 1, m);
          // The |A| = 3 images run into the millions; a breadth-first prefix
          // of the image, together with all singletons, is checked instead.
          RecognizerImage img = recognizer_image_prefix(rec, 20000);
          CanonicalReport rep = validate_canonical(rec, img, policy);
          std::string     tag = std::string("|A|=") + std::to_string(al.size()) + " m="
                            + std::to_string(m);
          check.note(tag + ": image " + (img.complete ? "" : ">=") + std::to_string(img.size())
                     + ", carrier " + std::to_string(rep.carrier_size) + ", aperiodicity index "
                     + std::to_string(rep.s_aperiodicity_index));
          if (!check(rep.ok(), "canonical recognizer " + tag)) {
            std::istringstream lines(format_report(rep));
            for (std::string line; std::getline(lines, line);) {
              check.note("  " + line);
            }
          }
        }
      }
    }

    void canonical_converse(Check const& check, AcceptanceOptions const& opt) {
      auto const          al  = InvolutoryAlphabet::hermitian("ab");
      CanonicalRecognizer rec(al, 1, 1);
      RecognizerImage     img = recognizer_image(rec, opt.budget);
      SamplePolicy        policy;
      policy.seed           = opt.seed;
      CanonicalReport rep   = validate_canonical(rec, img, policy);
      std::size_t const t   = rep.s_aperiodicity_index;
      std::size_t const k   = 4 * rec.k() + 1;
      check.note("image_size: " + std::to_string(img.size()) + " k: " + std::to_string(k)
                 + " t: " + std::to_string(t));
      std::size_t passed = 0;
      for (auto const& p : random_subsets(img.size(), opt.seed)) {
        Dfa        d = image_preimage_dfa(img, p);
        UnionCheck r = is_union_of_classes(d, al, k, t, Mode::reverse, opt.budget);
        passed += r.is_union;
        if (!r.is_union && r.witness) {
          check.note("counterexample: " + str(al, r.witness->first) + " / "
                     + str(al, r.witness->second));
        }
      }
      check.note("subsets_passing: " + std::to_string(passed) + "/"
                 + std::to_string(converse_subsets));
      check(passed == converse_subsets, "every preimage is a union of classes");
    }

    void abc_plus(Check const& check, AcceptanceOptions const& opt) {
      SearchCase const c      = abc_plus_search();
      Dfa const        d      = regex_dfa(c.regex, c.alphabet);
      Membership       member = regex_membership(c.regex, c.alphabet);

      auto canon = recognized_by_canonical(d, c.alphabet, 1, 2, Mode::reverse, opt.budget);
      check.note("canonical (k=1, m=2): " + yes_no(canon.recognized)
                 + ", elements explored " + std::to_string(canon.explored));
      check(canon.recognized, "canonical recognizer at (1, 2) recognizes (abc)+");

      SearchResult s = lrtt_search(d, c.alphabet, c.k_max, c.t_max, c.mode, opt.budget);
      for (auto const& cell : s.cells) {
        std::string line = "cell (" + std::to_string(cell.k) + "," + std::to_string(cell.t) + "): ";
        line += cell.status == SearchCell::Status::yes ? "yes"
                : cell.status == SearchCell::Status::no ? "no" : "limit";
        if (cell.witness) {
          line += ", witness " + str(c.alphabet, cell.witness->first) + " / "
                  + str(c.alphabet, cell.witness->second);
        }
        check.note(line);
      }
      if (!check(s.found.has_value(), "search finds a cell")) {
        return;
      }
      auto [k, t] = *s.found;
      auto mixed  = enumerated_mixed_class(member, c.alphabet, k, t, c.mode, 12);
      check.note("brute_force_words_up_to: 12 mixed_class: " + yes_no(mixed.has_value()));
      check(!mixed, "found cell agrees with class grouping");
    }

    void first_order(Check const& check, AcceptanceOptions const& opt) {
      SearchCase const c = alternating_search();
      FoFormula        f = parse_formula(
          "P_a(min) & P_b(max) & forall x. forall y. (N(x,y) -> (P_a(x) <-> P_b(y)))",
          c.alphabet);
      std::vector<Word> lang = bounded_language(f, c.alphabet, 8);
      std::string       listed;
      for (auto const& w : lang) {
        listed += (listed.empty() ? "" : " ") + str(c.alphabet, w);
      }
      check.note("bounded_language: " + listed);
      check(listed == "ab abab ababab abababab", "bounded language at length 8");
      Dfa  d    = regex_dfa(c.regex, c.alphabet);
      auto cons = consistency_check(f, d, c.alphabet, 8);
      check(cons.agree, "formula and a(ba)*b agree up to length 8");
      SearchResult s = lrtt_search(d, c.alphabet, c.k_max, c.t_max, c.mode, opt.budget);
      if (check(s.found.has_value(), "search on a(ba)*b succeeds within (3,2)")) {
        check.note("found_cell: (" + std::to_string(s.found->first) + ","
                   + std::to_string(s.found->second) + ")");
      }
    }

    // Partition check: `f` and `g` induce the same partition of `words`.
    template <typename F, typename G>
    bool same_partition(std::vector<Word> const& words, F f, G g) {
      std::map<decltype(f(words[0])), decltype(g(words[0]))> fg;
      std::map<decltype(g(words[0])), decltype(f(words[0]))> gf;
      for (auto const& w : words) {
        auto x = f(w);
        auto y = g(w);
        if (!(fg.try_emplace(x, y).first->second == y) || !(gf.try_emplace(y, x).first->second == x)) {
          return false;
        }
      }
      return true;
    }

    void syntactic_suite(Check const& check, AcceptanceOptions const& opt) {
      for (auto const& c : syntactic_pool()) {
        auto const&        al  = c.alphabet;
        Dfa const          d   = regex_dfa(c.regex, al);
        Dfa const          dd  = language_involution(d, al);
        SyntacticData      sl  = syntactic_semigroup(d, al);
        SyntacticData      sld = syntactic_semigroup(dd, al);
        StarSyntacticData  st  = syntactic_star_semigroup(d, al);
        std::vector<Word>  words = all_words(al.size(), 1, 7);
        using P                  = std::pair<Elem, Elem>;
        bool meet = same_partition(
            words, [&](Word const& w) { return syntactic_class(st, w); },
            [&](Word const& w) { return P{syntactic_class(sl, w), syntactic_class(sld, w)}; });
        bool dual = same_partition(
            words, [&](Word const& w) { return syntactic_class(sld, w); },
            [&](Word const& w) { return syntactic_class(sl, word_involution(al, w)); });
        check(meet, "star congruence is the meet for " + c.regex);
        check(dual, "x ~ y under L† iff x† ~ y† under L, for " + c.regex);
        AntiIsomorphism anti = anti_isomorphism_check(d, al);
        check(anti.found && anti.matches_alpha, "S(L) anti-isomorphic to S(L†) for " + c.regex);
        check.note("language: " + c.regex + " |S(L)|: " + std::to_string(sl.semigroup.size())
                   + " |S*(L)|: " + std::to_string(st.semigroup.size()));
      }

      // Division of the syntactic ⋆-semigroup into every recognizer above.
      std::size_t divisions = 0;
      auto        divide    = [&](std::string const&         what,
                           Dfa const&                 d,
                           InvolutoryAlphabet const&  al,
                           InvolutionSemigroup const& s,
                           std::vector<Elem> const&   lm,
                           std::vector<bool> const&   acc) {
        auto r = syntactic_divides(d, al, s, lm, acc);
        check(r.divides, "syntactic star-semigroup divides the recognizer of " + what
                             + (r.reason.empty() ? "" : " (" + r.reason + ")"));
        ++divisions;
      };
      {
        InvolutionSemigroup t  = four_element_star_semigroup();
        std::vector<Elem>   lm = {*t.base().find_label("a"), *t.base().find_label("b")};
        std::vector<bool>   acc(4, false);
        acc[*t.base().find_label("ab")] = true;
        divide("a+b+ by T", regex_dfa("a+b+", swap_ab()), swap_ab(), t, lm, acc);
      }
      for (auto const& c : flip_product_pool()) {
        FlipRecognizer fr = flip_recognizer(c);
        divide(c.regex + " by its flip product", fr.dfa, c.alphabet, fr.semigroup,
               fr.letter_map, fr.accepting);
      }
      {
        SearchCase const    c = abc_plus_search();
        Dfa const           d = regex_dfa(c.regex, c.alphabet);
        CanonicalRecognizer rec(c.alphabet, 1, 2);
        // The full image is too large to tabulate; the Rees quotient by the
        // ideal of elements no accepted word reaches is a quotient of it, so
        // division into the quotient implies division into the recognizer.
        ReesImage         ri = rees_image(rec, accepted_zero_bound(rec, d, opt.budget));
        std::vector<bool> acc(ri.semigroup.size());
        for (Elem x = 0; x < acc.size(); ++x) {
          acc[x] = !ri.witnesses[x].empty() && d.accepts(ri.witnesses[x]);
        }
        check.note("abc_plus_rees_quotient_size: " + std::to_string(ri.semigroup.size()));
        divide("(abc)+ by the canonical recognizer", d, c.alphabet, ri.semigroup,
               ri.letter_map, acc);
      }
      check.note("divisions_checked: " + std::to_string(divisions));

      // Embedding of small ⋆-semigroups into products of syntactic ones.
      {
        InvolutionSemigroup t  = four_element_star_semigroup();
        std::vector<Elem>   lm = {*t.base().find_label("a"), *t.base().find_label("b")};
        auto                e  = embeds_in_syntactic_product(t, swap_ab(), lm);
        check(e.embeds, "T divides a product of syntactic star-semigroups " + e.reason);
      }
      {
        // {0, 1} x {0, 1}^op under min, with the flip involution.
        FiniteSemigroup     semilattice = FiniteSemigroup::from_table(2, {0, 0, 0, 1}, {"0", "1"});
        InvolutionSemigroup u           = flip_product(semilattice);
        auto const          al          = InvolutoryAlphabet::with_pairs("abc", "a b");
        std::vector<Elem>   lm          = {2, 1, 3};  // (1,0), (0,1), (1,1)
        auto                e           = embeds_in_syntactic_product(u, al, lm);
        check(e.embeds, "flip product of a semilattice divides a product " + e.reason);
        std::string sizes;
        for (auto n : e.factor_sizes) {
          sizes += (sizes.empty() ? "" : " ") + std::to_string(n);
        }
        check.note("semilattice_flip_factor_sizes: " + sizes);
      }
    }

      void oracle_agreement(Check const& check, AcceptanceOptions const& opt) {
      constexpr std::size_t maxlen = 10;
      std::size_t           triples = 0, agreed = 0;
      auto agree = [&](std::string const& what, Dfa const& d, Membership const& member,
                       InvolutoryAlphabet const& al, std::size_t k, std::size_t t, Mode mode) {
        UnionCheck r     = is_union_of_classes(d, al, k, t, mode, opt.budget);
        auto       mixed = enumerated_mixed_class(member, al, k, t, mode, maxlen);
        ++triples;
        if (r.is_union == !mixed) {
          ++agreed;
        } else {
          check.note("disagreement: " + what + " (" + std::to_string(k) + "," + std::to_string(t)
                     + "," + to_string(mode) + ")");
        }
      };
      {
        auto const al     = InvolutoryAlphabet::hermitian("abc");
        Dfa const  d      = regex_dfa(separating_regex, al);
        Membership member = regex_membership(separating_regex, al);
        for (std::size_t k = 1; k <= 3; ++k) {
          for (std::size_t t = 1; t <= 2; ++t) {
            agree(separating_regex, d, member, al, k, t, Mode::reverse);
          }
        }
        agree(separating_regex, d, member, al, 2, 2, Mode::plain);
      }
      for (SearchCase const& c : {abc_plus_search(), alternating_search()}) {
        Dfa const    d      = regex_dfa(c.regex, c.alphabet);
        Membership   member = regex_membership(c.regex, c.alphabet);
        SearchResult s      = lrtt_search(d, c.alphabet, c.k_max, c.t_max, c.mode, opt.budget);
        for (auto const& cell : s.cells) {
          if (cell.status != SearchCell::Status::limit) {
            agree(c.regex, d, member, c.alphabet, cell.k, cell.t, c.mode);
          }
        }
      }
      {
        auto const          al  = InvolutoryAlphabet::hermitian("ab");
        CanonicalRecognizer rec(al, 1, 1);
        RecognizerImage     img = recognizer_image(rec, opt.budget);
        SamplePolicy        policy;
        policy.seed         = opt.seed;
        std::size_t const t = validate_canonical(rec, img, policy).s_aperiodicity_index;
        std::size_t       i = 0;
        for (auto const& p : random_subsets(img.size(), opt.seed)) {
          agree("preimage " + std::to_string(i++), image_preimage_dfa(img, p),
                image_membership(rec, img, p), al, 4 * rec.k() + 1, t, Mode::reverse);
        }
      }
      check.note("triples: " + std::to_string(triples) + " agreed: " + std::to_string(agreed)
                 + " maxlen: " + std::to_string(maxlen));
      check(triples == agreed, "checker and enumeration agree on every triple");
    }

    char const* const titles[num_criteria] = {
        "involution on the four-element semigroup",
        "recognition of a+b+ and its syntactic semigroup",
        "flip product recognizers",
        "separating language c*abc*",
        "canonical recognizer maps equivalent words together",
        "canonical recognizer structure",
        "canonical recognizer preimages are unions of classes",
        "(abc)+ recognizability",
        "first-order sentence for a(ba)*b",
        "syntactic star-semigroups",
        "union checker agrees with enumeration",
    };

  }  // namespace

  CriterionResult run_criterion(int id, AcceptanceOptions const& options) {
    if (id < 1 || id > num_criteria) {
      throw ArgumentError("no criterion " + std::to_string(id));
    }
    CriterionResult r;
    r.id    = id;
    r.title = titles[id - 1];
    Check      check{r};
    auto const start = std::chrono::steady_clock::now();
    try {
      switch (id) {
        case 1:
          involution_on_four_elements(check);
          break;
        case 2:
          recognition_of_a_plus_b_plus(check);
          break;
        case 3:
          flip_product_suite(check);
          break;
        case 4:
          separating_language(check, options);
          break;
        case 5:
          canonical_forward(check);
          break;
        case 6:
          canonical_structure(check, options);
          break;
        case 7:
          canonical_converse(check, options);
          break;
        case 8:
          abc_plus(check, options);
          break;
        case 9:
          first_order(check, options);
          break;
        case 10:
          syntactic_suite(check, options);
          break;
        case 11:
          oracle_agreement(check, options);
          break;
      }
    } catch (std::exception const& e) {
      check(false, std::string("unexpected error: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

  std::vector<CriterionResult> run_acceptance(AcceptanceOptions const& options) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= num_criteria; ++id) {
      out.push_back(run_criterion(id, options));
    }
    return out;
  }

  std::string format_result(CriterionResult const& r, bool verbose, bool timing) {
    std::string out = "criterion " + std::to_string(r.id) + ": " + (r.passed ? "PASS" : "FAIL")
                      + " " + r.title;
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " (%.2f s)", r.seconds);
      out += buf;
    }
    out += "\n";
    if (verbose || !r.passed) {
      for (auto const& line : r.details) {
        out += "  " + line + "\n";
      }
    }
    return out;
  }

}  // namespace invsg
