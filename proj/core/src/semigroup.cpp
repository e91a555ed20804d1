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

#include "invsg/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "invsg/errors.hpp"

namespace invsg {

  std::optional<std::array<Elem, 3>>
  find_nonassociative(std::size_t n, std::span<Elem const> table) {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        Elem xy = table[x * n + y];
        for (Elem z = 0; z < n; ++z) {
          if (table[xy * n + z] != table[x * n + table[y * n + z]]) {
            return std::array<Elem, 3>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  FiniteSemigroup FiniteSemigroup::from_table(std::size_t              n,
                                              std::vector<Elem>        table,
                                              std::vector<std::string> labels) {
    FiniteSemigroup s = from_trusted_table(n, std::move(table), std::move(labels));
    if (auto bad = find_nonassociative(n, s.table_)) {
      auto [x, y, z] = *bad;
      throw ArgumentError("table is not associative at (" + std::to_string(x)
                          + ", " + std::to_string(y) + ", " + std::to_string(z)
                          + ")");
    }
    return s;
  }

  FiniteSemigroup
  FiniteSemigroup::from_trusted_table(std::size_t              n,
                                      std::vector<Elem>        table,
                                      std::vector<std::string> labels) {
    if (n == 0) {
      throw ArgumentError("a semigroup needs at least one element");
    }
    if (table.size() != n * n) {
      throw ArgumentError("table must have n*n entries");
    }
    for (Elem e : table) {
      if (e >= n) {
        throw ArgumentError("table entry out of range");
      }
    }
    if (!labels.empty() && labels.size() != n) {
      throw ArgumentError("one label per element");
    }
    FiniteSemigroup s;
    s.n_      = n;
    s.table_  = std::move(table);
    s.labels_ = std::move(labels);
    return s;
  }

  FiniteSemigroup FiniteSemigroup::trivial() {
    return from_table(1, {0});
  }

  Elem FiniteSemigroup::product(std::span<Elem const> xs) const {
    if (xs.empty()) {
      throw ArgumentError("product of an empty sequence");
    }
    Elem acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) {
      acc = mul(acc, xs[i]);
    }
    return acc;
  }

  std::string FiniteSemigroup::label(Elem x) const {
    if (x < labels_.size()) {
      return labels_[x];
    }
    return std::to_string(x);
  }

  std::optional<Elem> FiniteSemigroup::find_label(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) {
        return static_cast<Elem>(i);
      }
    }
    return std::nullopt;
  }

  SemigroupText parse_semigroup(std::string_view text) {
    std::istringstream       in{std::string(text)};
    std::vector<std::string> tok;
    for (std::string t; in >> t;) {
      tok.push_back(t);
    }
    std::size_t pos = 0;
    auto        read_index = [&](char const* what) -> Elem {
      if (pos >= tok.size()) {
        throw ParseError(std::string("semigroup: missing ") + what, pos);
      }
      try {
        std::size_t used = 0;
        long long   v    = std::stoll(tok[pos], &used);
        if (used != tok[pos].size() || v < 0) {
          throw std::invalid_argument("");
        }
        ++pos;
        return static_cast<Elem>(v);
      } catch (std::logic_error const&) {
        throw ParseError("semigroup: expected an index, got '" + tok[pos] + "'",
                         pos);
      }
    };
    if (tok.empty() || tok[0] != "size:") {
      throw ParseError("semigroup: expected 'size:'", 0);
    }
    ++pos;
    std::size_t const n = read_index("size");
    if (n == 0 || n > (1u << 14)) {
      throw ParseError("semigroup: unsupported size", 1);
    }
    std::vector<Elem> table(n * n);
    for (auto& e : table) {
      e = read_index("table entry");
    }
    std::vector<std::string>         labels;
    std::optional<std::vector<Elem>> star;
    while (pos < tok.size()) {
      if (tok[pos] == "labels:") {
        ++pos;
        for (std::size_t i = 0; i < n; ++i) {
          if (pos >= tok.size()) {
            throw ParseError("semigroup: too few labels", pos);
          }
          labels.push_back(tok[pos++]);
        }
      } else if (tok[pos] == "star:") {
        ++pos;
        star.emplace(n);
        for (auto& e : *star) {
          e = read_index("star entry");
          if (e >= n) {
            throw ParseError("semigroup: star entry out of range", pos - 1);
          }
        }
      } else {
        throw ParseError("semigroup: unexpected '" + tok[pos] + "'", pos);
      }
    }
    return {FiniteSemigroup::from_table(n, std::move(table), std::move(labels)),
            std::move(star)};
  }

  std::string format_semigroup(FiniteSemigroup const&   s,
                               std::vector<Elem> const* star) {
    std::string out = "size: " + std::to_string(s.size()) + "\n";
    for (Elem x = 0; x < s.size(); ++x) {
      for (Elem y = 0; y < s.size(); ++y) {
        out += (y ? " " : "") + std::to_string(s.mul(x, y));
      }
      out += "\n";
    }
    if (!s.labels().empty()) {
      out += "labels:";
      for (auto const& l : s.labels()) {
        out += " " + l;
      }
      out += "\n";
    }
    if (star != nullptr) {
      out += "star:";
      for (Elem e : *star) {
        out += " " + std::to_string(e);
      }
      out += "\n";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Transformations and generation
  ////////////////////////////////////////////////////////////////////////

  Transformation::Transformation(std::vector<std::uint32_t> images)
      : images_(std::move(images)) {
    for (auto q : images_) {
      if (q >= images_.size()) {
        throw ArgumentError("transformation image out of range");
      }
    }
  }

  Transformation Transformation::then(Transformation const& g) const {
    if (g.degree() != degree()) {
      throw ArgumentError("composing transformations of different degree");
    }
    std::vector<std::uint32_t> out(images_.size());
    for (std::size_t q = 0; q < images_.size(); ++q) {
      out[q] = g.images_[images_[q]];
    }
    Transformation t;
    t.images_ = std::move(out);
    return t;
  }

  std::size_t TransformationHash::operator()(Transformation const& t) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto q : t.images()) {
      h = (h ^ q) * 1099511628211ull;
    }
    return h;
  }

  GeneratedSemigroup generate(std::span<Transformation const> generators,
                              std::size_t                     budget) {
    if (generators.empty()) {
      throw ArgumentError("generate: at least one generator is required");
    }
    std::size_t const degree = generators[0].degree();
    for (auto const& g : generators) {
      if (g.degree() != degree) {
        throw ArgumentError("generate: generators act on different state sets");
      }
    }
    GeneratedSemigroup out;
    std::unordered_map<Transformation, Elem, TransformationHash> index;
    auto add = [&](Transformation t, Word w) -> Elem {
      auto it = index.find(t);
      if (it != index.end()) {
        return it->second;
      }
      if (out.elements.size() >= budget) {
        throw ResourceLimit("semigroup generation", out.elements.size());
      }
      Elem e = static_cast<Elem>(out.elements.size());
      index.emplace(t, e);
      out.elements.push_back(std::move(t));
      out.witnesses.push_back(std::move(w));
      return e;
    };
    for (std::size_t i = 0; i < generators.size(); ++i) {
      out.generators.push_back(add(generators[i], Word{static_cast<Letter>(i)}));
    }
    // Right Cayley graph, breadth first; this yields shortlex witnesses.
    std::vector<std::vector<Elem>> right;
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
      right.emplace_back(generators.size());
      for (std::size_t g = 0; g < generators.size(); ++g) {
        Word w = out.witnesses[i];
        w.push_back(static_cast<Letter>(g));
        right[i][g] = add(out.elements[i].then(generators[g]), std::move(w));
      }
    }
    std::size_t const n = out.elements.size();
    std::vector<Elem> table(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        Elem acc = x;
        for (Letter g : out.witnesses[y]) {
          acc = right[acc][g];
        }
        table[x * n + y] = acc;
      }
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (auto const& w : out.witnesses) {
      std::string l;
      for (Letter g : w) {
        l += std::to_string(g);
        l += '.';
      }
      l.pop_back();
      labels.push_back(std::move(l));
    }
    out.semigroup = FiniteSemigroup::from_trusted_table(n, std::move(table), std::move(labels));
    return out;
  }

  namespace {

    bool rewrite_once(Word& w, std::vector<std::pair<Word, Word>> const& rules) {
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (auto const& [lhs, rhs] : rules) {
          if (pos + lhs.size() <= w.size()
              && std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) {
            Word out(w.begin(), w.begin() + pos);
            out.insert(out.end(), rhs.begin(), rhs.end());
            out.insert(out.end(), w.begin() + pos + lhs.size(), w.end());
            w = std::move(out);
            return true;
          }
        }
      }
      return false;
    }

    Word normal_form(Word w, std::vector<std::pair<Word, Word>> const& rules) {
      while (rewrite_once(w, rules)) {
      }
      return w;
    }

    Word concat(std::span<Letter const> a, std::span<Letter const> b) {
      Word w(a.begin(), a.end());
      w.insert(w.end(), b.begin(), b.end());
      return w;
    }

  }  // namespace

  FiniteSemigroup from_rewriting(std::size_t                               num_generators,
                                 std::vector<std::pair<Word, Word>> const& rules,
                                 std::string_view                          names,
                                 std::size_t                               budget) {
    if (num_generators == 0 || names.size() < num_generators) {
      throw ArgumentError("from_rewriting: one name per generator required");
    }
    for (auto const& [lhs, rhs] : rules) {
      if (lhs.empty() || rhs.empty()) {
        throw ArgumentError("from_rewriting: rules relate nonempty words");
      }
      for (Letter a : concat(lhs, rhs)) {
        if (a >= num_generators) {
          throw ArgumentError("from_rewriting: rule letter out of range");
        }
      }
      if (!shortlex_less(rhs, lhs)) {
        throw ArgumentError("from_rewriting: rules must be shortlex-decreasing");
      }
    }
    // Local confluence on all critical pairs (overlaps and inclusions).
    for (auto const& [l1, r1] : rules) {
      for (auto const& [l2, r2] : rules) {
        for (std::size_t ov = 1; ov < std::min(l1.size(), l2.size()) + 1; ++ov) {
          if (ov >= l1.size() && ov >= l2.size()) {
            break;
          }
          if (ov < l1.size() && ov <= l2.size()
              && std::equal(l1.end() - ov, l1.end(), l2.begin())) {
            Word left  = concat(r1, std::span(l2).subspan(ov));
            Word right = concat(std::span(l1).first(l1.size() - ov), r2);
            if (normal_form(left, rules) != normal_form(right, rules)) {
              throw ArgumentError("from_rewriting: rewriting system is not confluent");
            }
          }
        }
        for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
          if (&l1 != &l2 && std::equal(l2.begin(), l2.end(), l1.begin() + p)) {
            Word via2 = concat(std::span(l1).first(p), r2);
            via2      = concat(via2, std::span(l1).subspan(p + l2.size()));
            if (normal_form(r1, rules) != normal_form(via2, rules)) {
              throw ArgumentError("from_rewriting: rewriting system is not confluent");
            }
          }
        }
      }
    }
    std::vector<Word>      elems;
    std::map<Word, Elem>   index;
    auto add = [&](Word w) -> Elem {
      w       = normal_form(std::move(w), rules);
      auto it = index.find(w);
      if (it != index.end()) {
        return it->second;
      }
      if (elems.size() >= budget) {
        throw ResourceLimit("presentation closure", elems.size());
      }
      Elem e = static_cast<Elem>(elems.size());
      index.emplace(w, e);
      elems.push_back(std::move(w));
      return e;
    };
    for (std::size_t g = 0; g < num_generators; ++g) {
      add(Word{static_cast<Letter>(g)});
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t g = 0; g < num_generators; ++g) {
        Word w = elems[i];
        w.push_back(static_cast<Letter>(g));
        add(std::move(w));
      }
    }
    std::size_t const n = elems.size();
    std::vector<Elem> table(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        auto it = index.find(normal_form(concat(elems[x], elems[y]), rules));
        if (it == index.end()) {
          throw ArgumentError("from_rewriting: product escapes the normal forms");
        }
        table[x * n + y] = it->second;
      }
    }
    std::vector<std::string> labels;
    for (auto const& w : elems) {
      std::string l;
      for (Letter a : w) {
        l += names[a];
      }
      labels.push_back(std::move(l));
    }
    return FiniteSemigroup::from_table(n, std::move(table), std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  std::vector<Elem> idempotents(FiniteSemigroup const& s) {
    std::vector<Elem> out;
    for (Elem e = 0; e < s.size(); ++e) {
      if (s.mul(e, e) == e) {
        out.push_back(e);
      }
    }
    return out;
  }

  namespace {

    // (index, period) of the monogenic subsemigroup of x: x^index =
    // x^{index+period}, both minimal.
    std::pair<std::size_t, std::size_t> index_period(FiniteSemigroup const& s,
                                                     Elem                   x) {
      std::vector<std::int64_t> seen(s.size(), -1);
      Elem                      p = x;
      for (std::size_t i = 1;; ++i) {
        if (seen[p] >= 0) {
          return {static_cast<std::size_t>(seen[p]), i - static_cast<std::size_t>(seen[p])};
        }
        seen[p] = static_cast<std::int64_t>(i);
        p       = s.mul(p, x);
      }
    }

  }  // namespace

  std::optional<std::size_t> aperiodicity_index(FiniteSemigroup const& s) {
    std::size_t t = 1;
    for (Elem x = 0; x < s.size(); ++x) {
      auto [index, period] = index_period(s, x);
      if (period != 1) {
        return std::nullopt;
      }
      t = std::max(t, index);
    }
    return t;
  }

  bool is_aperiodic(FiniteSemigroup const& s) {
    return aperiodicity_index(s).has_value();
  }

  bool is_commutative(FiniteSemigroup const& s) {
    for (Elem x = 0; x < s.size(); ++x) {
      for (Elem y = x + 1; y < s.size(); ++y) {
        if (s.mul(x, y) != s.mul(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_locally_trivial(FiniteSemigroup const& s) {
    for (Elem e : idempotents(s)) {
      for (Elem x = 0; x < s.size(); ++x) {
        if (s.mul(s.mul(e, x), e) != e) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Elem> products_of_length(FiniteSemigroup const& s, std::size_t k) {
    if (k == 0) {
      throw ArgumentError("products_of_length: k must be positive");
    }
    std::vector<bool> cur(s.size(), true);
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<bool> next(s.size(), false);
      for (Elem x = 0; x < s.size(); ++x) {
        if (cur[x]) {
          for (Elem y = 0; y < s.size(); ++y) {
            next[s.mul(x, y)] = true;
          }
        }
      }
      cur.swap(next);
    }
    std::vector<Elem> out;
    for (Elem x = 0; x < s.size(); ++x) {
      if (cur[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool satisfies_delay(FiniteSemigroup const& s, std::size_t k) {
    auto const pk = products_of_length(s, k);
    for (Elem p : pk) {
      for (Elem z = 0; z < s.size(); ++z) {
        Elem pz = s.mul(p, z);
        for (Elem q : pk) {
          if (s.mul(pz, q) != s.mul(p, q)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::size_t local_delay(FiniteSemigroup const& s) {
    if (!is_locally_trivial(s)) {
      throw PreconditionError("local_delay: semigroup is not locally trivial");
    }
    for (std::size_t k = 1; k <= s.size(); ++k) {
      if (satisfies_delay(s, k)) {
        return k;
      }
    }
    throw PreconditionError("local_delay: no delay up to |S|");
  }

  FiniteSemigroup opposite(FiniteSemigroup const& s) {
    std::size_t const n = s.size();
    std::vector<Elem> table(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        table[x * n + y] = s.mul(y, x);
      }
    }
    return FiniteSemigroup::from_trusted_table(n, std::move(table), s.labels());
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& s,
                                 FiniteSemigroup const& t) {
    std::size_t const m = s.size(), n = t.size(), N = m * n;
    std::vector<Elem> table(N * N);
    for (Elem x = 0; x < N; ++x) {
      for (Elem y = 0; y < N; ++y) {
        table[x * N + y] = s.mul(x / n, y / n) * n + t.mul(x % n, y % n);
      }
    }
    std::vector<std::string> labels;
    for (Elem x = 0; x < N; ++x) {
      labels.push_back("(" + s.label(x / n) + "," + t.label(x % n) + ")");
    }
    return FiniteSemigroup::from_trusted_table(N, std::move(table), std::move(labels));
  }

  bool is_morphism(FiniteSemigroup const& s,
                   FiniteSemigroup const& t,
                   std::span<Elem const>  map) {
    if (map.size() != s.size()) {
      return false;
    }
    for (Elem m : map) {
      if (m >= t.size()) {
        return false;
      }
    }
    for (Elem x = 0; x < s.size(); ++x) {
      for (Elem y = 0; y < s.size(); ++y) {
        if (map[s.mul(x, y)] != t.mul(map[x], map[y])) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Elem> subsemigroup(FiniteSemigroup const& s,
                                 std::span<Elem const>  gens) {
    std::vector<bool> in(s.size(), false);
    std::vector<Elem> out;
    for (Elem g : gens) {
      if (g >= s.size()) {
        throw ArgumentError("subsemigroup: generator out of range");
      }
      if (!in[g]) {
        in[g] = true;
        out.push_back(g);
      }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (Elem g : gens) {
        Elem p = s.mul(out[i], g);
        if (!in[p]) {
          in[p] = true;
          out.push_back(p);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Elem> generating_set(FiniteSemigroup const& s) {
    std::vector<Elem> gens;
    std::vector<bool> covered(s.size(), false);
    for (Elem x = 0; x < s.size(); ++x) {
      if (!covered[x]) {
        gens.push_back(x);
        for (Elem y : subsemigroup(s, gens)) {
          covered[y] = true;
        }
      }
    }
    return gens;
  }

  FiniteSemigroup restrict_to(FiniteSemigroup const& s,
                              std::span<Elem const>  elems) {
    std::vector<std::int64_t> pos(s.size(), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      pos[elems[i]] = static_cast<std::int64_t>(i);
    }
    std::size_t const m = elems.size();
    std::vector<Elem> table(m * m);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
      labels.push_back(s.label(elems[i]));
      for (std::size_t j = 0; j < m; ++j) {
        auto p = pos[s.mul(elems[i], elems[j])];
        if (p < 0) {
          throw ArgumentError("restrict_to: subset is not closed");
        }
        table[i * m + j] = static_cast<Elem>(p);
      }
    }
    return FiniteSemigroup::from_trusted_table(m, std::move(table), std::move(labels));
  }

  namespace {

    inline constexpr Elem unmapped = static_cast<Elem>(-1);

    // Extends the partial map `phi` (defined on `gens` -> `images`) along
    // the right Cayley graph of <gens>.  Returns false on a conflict.
    bool close_map(FiniteSemigroup const& s,
                   FiniteSemigroup const& t,
                   std::span<Elem const>  gens,
                   std::span<Elem const>  images,
                   std::vector<Elem>&     phi,
                   std::vector<Elem>&     domain) {
      std::fill(phi.begin(), phi.end(), unmapped);
      domain.clear();
      auto set = [&](Elem x, Elem y) {
        if (phi[x] == unmapped) {
          phi[x] = y;
          domain.push_back(x);
          return true;
        }
        return phi[x] == y;
      };
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!set(gens[i], images[i])) {
          return false;
        }
      }
      for (std::size_t i = 0; i < domain.size(); ++i) {
        Elem x = domain[i];
        for (std::size_t g = 0; g < gens.size(); ++g) {
          if (!set(s.mul(x, gens[g]), t.mul(phi[x], images[g]))) {
            return false;
          }
        }
      }
      return true;
    }

  }  // namespace

  std::optional<std::vector<std::pair<Elem, Elem>>>
  find_division(FiniteSemigroup const& t,
                FiniteSemigroup const& s,
                std::size_t            budget) {
    if (s.size() > budget) {
      throw ResourceLimit("division search", s.size());
    }
    auto const        tgens = generating_set(t);
    std::vector<Elem> choice;
    std::vector<Elem> phi(s.size());
    std::vector<Elem> domain;

    auto search = [&](auto&& self) -> bool {
      std::size_t const j = choice.size();
      if (j == tgens.size()) {
        return true;
      }
      for (Elem x = 0; x < s.size(); ++x) {
        choice.push_back(x);
        if (close_map(s, t, choice, std::span(tgens).first(j + 1), phi, domain)
            && self(self)) {
          return true;
        }
        choice.pop_back();
      }
      return false;
    };
    if (!search(search)) {
      return std::nullopt;
    }
    close_map(s, t, choice, tgens, phi, domain);
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem x : domain) {
      out.emplace_back(x, phi[x]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool divides(FiniteSemigroup const& t,
               FiniteSemigroup const& s,
               std::size_t            budget) {
    return find_division(t, s, budget).has_value();
  }

  std::optional<std::vector<Elem>>
  find_isomorphism(FiniteSemigroup const&                   s,
                   FiniteSemigroup const&                   t,
                   std::vector<std::pair<Elem, Elem>> const& hint) {
    if (s.size() != t.size()) {
      return std::nullopt;
    }
    std::size_t const n = s.size();
    // Isomorphism invariants: idempotency and (index, period).
    auto invariant = [](FiniteSemigroup const& u, Elem x) {
      auto [i, p] = index_period(u, x);
      return std::tuple(u.mul(x, x) == x, i, p);
    };
    std::vector<Elem> gens, fixed;
    for (auto [x, y] : hint) {
      if (x >= n || y >= n || invariant(s, x) != invariant(t, y)) {
        return std::nullopt;
      }
      gens.push_back(x);
      fixed.push_back(y);
    }
    {
      std::vector<bool> covered(n, false);
      for (Elem y : subsemigroup(s, gens)) {
        covered[y] = true;
      }
      for (Elem x = 0; x < n; ++x) {
        if (!covered[x]) {
          gens.push_back(x);
          for (Elem y : subsemigroup(s, gens)) {
            covered[y] = true;
          }
        }
      }
    }
    std::vector<Elem> images = fixed;
    std::vector<Elem> phi(n);
    std::vector<Elem> domain;
    auto injective = [&]() {
      std::vector<bool> hit(n, false);
      for (Elem x : domain) {
        if (hit[phi[x]]) {
          return false;
        }
        hit[phi[x]] = true;
      }
      return true;
    };
    auto search = [&](auto&& self) -> bool {
      std::size_t const j = images.size();
      if (!close_map(s, t, std::span(gens).first(j), images, phi, domain)
          || !injective()) {
        return false;
      }
      if (j == gens.size()) {
        return domain.size() == n;
      }
      auto const inv = invariant(s, gens[j]);
      for (Elem y = 0; y < n; ++y) {
        if (invariant(t, y) != inv) {
          continue;
        }
        images.push_back(y);
        if (self(self)) {
          return true;
        }
        images.pop_back();
      }
      return false;
    };
    if (!search(search)) {
      return std::nullopt;
    }
    return phi;
  }

}  // namespace invsg
