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


#include "invsg/syntactic.hpp"

#include <algorithm>
#include <map>

#include "invsg/errors.hpp"

namespace invsg {

  SyntacticData syntactic_semigroup(Dfa const&                d,
                                    InvolutoryAlphabet const& alphabet,
                                    std::size_t               budget) {
    if (d.num_letters() != alphabet.size() || alphabet.size() == 0) {
      throw ArgumentError("syntactic_semigroup: DFA and alphabet disagree");
    }
    SyntacticData sd;
    sd.dfa = minimize(d);
    std::vector<Transformation> gens;
    for (Letter a = 0; a < alphabet.size(); ++a) {
      std::vector<std::uint32_t> images(sd.dfa.num_states());
      for (Dfa::State q = 0; q < sd.dfa.num_states(); ++q) {
        images[q] = sd.dfa.next(q, a);
      }
      gens.emplace_back(std::move(images));
    }
    GeneratedSemigroup g = generate(gens, budget);
    std::vector<std::string> labels;
    for (auto const& w : g.witnesses) {
      labels.push_back(alphabet.str(w));
    }
    std::size_t const n = g.semigroup.size();
    sd.semigroup = FiniteSemigroup::from_trusted_table(n, g.semigroup.table(),
                                                       std::move(labels));
    sd.letter_map      = g.generators;
    sd.representatives = std::move(g.witnesses);
    sd.accepting.resize(n);
    for (Elem x = 0; x < n; ++x) {
      sd.accepting[x] = sd.dfa.is_final(g.elements[x][sd.dfa.initial()]);
    }
    return sd;
  }

  StarSyntacticData syntactic_star_semigroup(Dfa const&                d,
                                             InvolutoryAlphabet const& alphabet,
                                             std::size_t               budget) {
    StarSyntacticData out;
    out.syntactic         = syntactic_semigroup(d, alphabet, budget);
    FiniteSemigroup const& s  = out.syntactic.semigroup;
    auto const&            lm = out.syntactic.letter_map;

    std::map<std::pair<Elem, Elem>, Elem> index;
    auto add = [&](std::pair<Elem, Elem> p, Word w) -> Elem {
      auto it = index.find(p);
      if (it != index.end()) {
        return it->second;
      }
      if (out.pairs.size() >= budget) {
        throw ResourceLimit("syntactic star semigroup", out.pairs.size());
      }
      Elem e = static_cast<Elem>(out.pairs.size());
      index.emplace(p, e);
      out.pairs.push_back(p);
      out.representatives.push_back(std::move(w));
      return e;
    };
    for (Letter a = 0; a < alphabet.size(); ++a) {
      out.letter_map.push_back(add({lm[a], lm[alphabet.dagger(a)]}, Word{a}));
    }
    for (std::size_t i = 0; i < out.pairs.size(); ++i) {
      for (Letter a = 0; a < alphabet.size(); ++a) {
        auto [x, y] = out.pairs[i];
        Word w      = out.representatives[i];
        w.push_back(a);
        add({s.mul(x, lm[a]), s.mul(lm[alphabet.dagger(a)], y)}, std::move(w));
      }
    }
    std::size_t const n = out.pairs.size();
    auto lookup = [&](std::pair<Elem, Elem> p) {
      auto it = index.find(p);
      if (it == index.end()) {
        throw Error("syntactic star semigroup: image is not closed");
      }
      return it->second;
    };
    std::vector<Elem> table(n * n), star(n);
    for (Elem i = 0; i < n; ++i) {
      auto [x1, y1] = out.pairs[i];
      star[i]       = lookup({y1, x1});
      for (Elem j = 0; j < n; ++j) {
        auto [x2, y2]    = out.pairs[j];
        table[i * n + j] = lookup({s.mul(x1, x2), s.mul(y2, y1)});
      }
    }
    std::vector<std::string> labels;
    for (auto const& w : out.representatives) {
      labels.push_back(alphabet.str(w));
    }
    out.semigroup = InvolutionSemigroup(
        FiniteSemigroup::from_trusted_table(n, std::move(table), std::move(labels)),
        std::move(star));
    for (auto [x, y] : out.pairs) {
      out.accepting.push_back(out.syntactic.accepting[x]);
    }
    return out;
  }

  Elem syntactic_class(SyntacticData const& sd, std::span<Letter const> w) {
    return evaluate(sd.semigroup, sd.letter_map, w);
  }

  Elem syntactic_class(StarSyntacticData const& sd, std::span<Letter const> w) {
    return evaluate(sd.semigroup.base(), sd.letter_map, w);
  }

  AntiIsomorphism anti_isomorphism_check(Dfa const&                d,
                                         InvolutoryAlphabet const& alphabet,
                                         std::size_t               budget) {
    SyntacticData const sl = syntactic_semigroup(d, alphabet, budget);
    SyntacticData const sr
        = syntactic_semigroup(language_involution(d, alphabet), alphabet, budget);
    std::vector<std::pair<Elem, Elem>> hint;
    for (Letter a = 0; a < alphabet.size(); ++a) {
      hint.emplace_back(sl.letter_map[a], sr.letter_map[alphabet.dagger(a)]);
    }
    AntiIsomorphism out;
    auto iso = find_isomorphism(opposite(sl.semigroup), sr.semigroup, hint);
    if (!iso) {
      return out;
    }
    out.found         = true;
    out.map           = std::move(*iso);
    out.matches_alpha = true;
    for (Elem x = 0; x < sl.semigroup.size(); ++x) {
      Word wd = word_involution(alphabet, sl.representatives[x]);
      if (out.map[x] != syntactic_class(sr, wd)) {
        out.matches_alpha = false;
      }
    }
    return out;
  }

  namespace {

    struct Image {
      std::vector<Elem> elements;
      std::vector<Word> witnesses;
    };

    // h(A+) in breadth-first order, with shortlex witnesses.
    Image morphism_image(FiniteSemigroup const& s,
                         std::span<Elem const>  letter_map) {
      Image             img;
      std::vector<bool> seen(s.size(), false);
      auto add = [&](Elem x, Word w) {
        if (!seen[x]) {
          seen[x] = true;
          img.elements.push_back(x);
          img.witnesses.push_back(std::move(w));
        }
      };
      for (std::size_t a = 0; a < letter_map.size(); ++a) {
        add(letter_map[a], Word{static_cast<Letter>(a)});
      }
      for (std::size_t i = 0; i < img.elements.size(); ++i) {
        for (std::size_t a = 0; a < letter_map.size(); ++a) {
          Word w = img.witnesses[i];
          w.push_back(static_cast<Letter>(a));
          add(s.mul(img.elements[i], letter_map[a]), std::move(w));
        }
      }
      return img;
    }

  }  // namespace

  SyntacticDivision syntactic_divides(Dfa const&                 d,
                                      InvolutoryAlphabet const&  alphabet,
                                      InvolutionSemigroup const& s,
                                      std::span<Elem const>      letter_map,
                                      std::vector<bool> const&   accepting) {
    if (!recognition(s, alphabet, letter_map, accepting, d).recognizes) {
      throw PreconditionError("syntactic_divides: the semigroup does not recognise L");
    }
    StarSyntacticData const syn   = syntactic_star_semigroup(d, alphabet);
    InvolutionSemigroup const& t  = syn.semigroup;
    Image const            img    = morphism_image(s.base(), letter_map);
    constexpr Elem         unset  = static_cast<Elem>(-1);
    std::vector<Elem>      map(s.size(), unset);
    for (std::size_t i = 0; i < img.elements.size(); ++i) {
      map[img.elements[i]] = syntactic_class(syn, img.witnesses[i]);
    }
    SyntacticDivision out;
    // Agreement along every edge of the right Cayley graph of the image
    // makes the map a morphism on the whole image.
    for (Elem x : img.elements) {
      for (Letter a = 0; a < alphabet.size(); ++a) {
        Elem y = s.mul(x, letter_map[a]);
        if (map[y] != t.mul(map[x], syn.letter_map[a])) {
          out.reason = "not well defined at " + s.base().label(x) + " * "
                       + alphabet.symbol(a);
          return out;
        }
      }
      if (map[s.star(x)] == unset || map[s.star(x)] != t.star(map[x])) {
        out.reason = "does not commute with the involution at " + s.base().label(x);
        return out;
      }
    }
    std::vector<bool> hit(t.size(), false);
    for (Elem x : img.elements) {
      hit[map[x]] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      out.reason = "not surjective";
      return out;
    }
    out.divides = true;
    for (Elem x : img.elements) {
      out.map.emplace_back(x, map[x]);
    }
    std::sort(out.map.begin(), out.map.end());
    return out;
  }

  Dfa element_language(FiniteSemigroup const& s,
                       std::span<Elem const>  letter_map,
                       Elem                   x) {
    if (x >= s.size()) {
      throw ArgumentError("element_language: element out of range");
    }
    auto const n = static_cast<Dfa::State>(s.size());
    Dfa        d(letter_map.size(), n + 1, n);
    for (std::size_t a = 0; a < letter_map.size(); ++a) {
      d.set_next(n, static_cast<Letter>(a), letter_map[a]);
      for (Elem y = 0; y < n; ++y) {
        d.set_next(y, static_cast<Letter>(a), s.mul(y, letter_map[a]));
      }
    }
    d.set_final(x);
    return minimize(d);
  }

  Dfa element_language(SyntacticData const& sd, Elem x) {
    return element_language(sd.semigroup, sd.letter_map, x);
  }

  Dfa element_language(StarSyntacticData const& sd, Elem x) {
    return element_language(sd.semigroup.base(), sd.letter_map, x);
  }

  Dfa class_from_quotients(SyntacticData const& sd, Elem x) {
    FiniteSemigroup const& s = sd.semigroup;
    if (x >= s.size()) {
      throw ArgumentError("class_from_quotients: element out of range");
    }
    // Contexts range over S^1: the empty word stands for the identity.
    std::vector<std::optional<Elem>> ctx{std::nullopt};
    std::vector<Word>                ctx_words{Word{}};
    for (Elem y = 0; y < s.size(); ++y) {
      ctx.emplace_back(y);
      ctx_words.push_back(sd.representatives[y]);
    }
    Dfa result = universal_dfa(sd.dfa.num_letters());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      Dfa left = word_quotient(sd.dfa, ctx_words[i], Side::left);
      for (std::size_t j = 0; j < ctx.size(); ++j) {
        Dfa  q = word_quotient(left, ctx_words[j], Side::right);
        Elem e = x;
        if (ctx[i]) {
          e = s.mul(*ctx[i], e);
        }
        if (ctx[j]) {
          e = s.mul(e, *ctx[j]);
        }
        result = boolean_op(result, q,
                            sd.accepting[e] ? BoolOp::intersection : BoolOp::difference);
      }
    }
    return minimize(result);
  }

  Dfa class_from_quotients(StarSyntacticData const& sd,
                           InvolutoryAlphabet const& alphabet,
                           Elem                      x) {
    auto [x1, x2] = sd.pairs.at(x);
    Dfa first     = class_from_quotients(sd.syntactic, x1);
    Dfa second    = language_involution(class_from_quotients(sd.syntactic, x2), alphabet);
    return minimize(boolean_op(first, second, BoolOp::intersection));
  }

  ProductEmbedding embeds_in_syntactic_product(InvolutionSemigroup const& s,
                                               InvolutoryAlphabet const&  alphabet,
                                               std::span<Elem const>      letter_map) {
    ProductEmbedding out;
    for (Letter a = 0; a < alphabet.size(); ++a) {
      if (letter_map[alphabet.dagger(a)] != s.star(letter_map[a])) {
        throw PreconditionError("letter map does not respect the involution");
      }
    }
    Image const img = morphism_image(s.base(), letter_map);
    if (img.elements.size() != s.size()) {
      throw PreconditionError("embeds_in_syntactic_product: h is not surjective");
    }
    std::vector<StarSyntacticData> factors;
    for (Elem e = 0; e < s.size(); ++e) {
      factors.push_back(
          syntactic_star_semigroup(element_language(s.base(), letter_map, e), alphabet));
      out.factor_sizes.push_back(factors.back().semigroup.size());
    }
    std::vector<std::vector<Elem>> tuple(s.size());
    for (std::size_t i = 0; i < img.elements.size(); ++i) {
      for (auto const& f : factors) {
        tuple[img.elements[i]].push_back(syntactic_class(f, img.witnesses[i]));
      }
    }
    for (Elem x = 0; x < s.size(); ++x) {
      for (Letter a = 0; a < alphabet.size(); ++a) {
        Elem y = s.mul(x, letter_map[a]);
        for (std::size_t f = 0; f < factors.size(); ++f) {
          auto const& t = factors[f].semigroup;
          if (tuple[y][f] != t.mul(tuple[x][f], factors[f].letter_map[a])) {
            out.reason = "not a morphism at " + s.base().label(x);
            return out;
          }
        }
      }
      for (std::size_t f = 0; f < factors.size(); ++f) {
        if (tuple[s.star(x)][f] != factors[f].semigroup.star(tuple[x][f])) {
          out.reason = "does not commute with the involution at " + s.base().label(x);
          return out;
        }
      }
    }
    std::vector<std::vector<Elem>> sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      out.reason = "not injective";
      return out;
    }
    out.embeds = true;
    return out;
  }

}  // namespace invsg
