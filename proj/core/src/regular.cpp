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

#include "invsg/regular.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "invsg/errors.hpp"

namespace invsg {

  ////////////////////////////////////////////////////////////////////////
  // Regex parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class RegexParser {
     public:
      RegexParser(std::string_view text, InvolutoryAlphabet const& alphabet)
          : text_(text), alphabet_(alphabet) {}

      Regex parse() {
        Regex r = expr();
        skip_space();
        if (pos_ != text_.size()) {
          throw ParseError(std::string("unexpected '") + text_[pos_] + "'",
                           pos_);
        }
        return r;
      }

     private:
      void skip_space() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      int peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : -1;
      }

      Regex expr() {
        std::vector<Regex> alts;
        alts.push_back(term());
        while (peek() == '|') {
          ++pos_;
          alts.push_back(term());
        }
        if (alts.size() == 1) {
          return std::move(alts.front());
        }
        return Regex{Regex::Kind::alt, 0, std::move(alts)};
      }

      Regex term() {
        std::vector<Regex> parts;
        while (true) {
          int c = peek();
          if (c == -1 || c == '|' || c == ')') {
            break;
          }
          parts.push_back(factor());
        }
        if (parts.empty()) {
          throw ParseError("expected a letter or '('", pos_);
        }
        if (parts.size() == 1) {
          return std::move(parts.front());
        }
        return Regex{Regex::Kind::concat, 0, std::move(parts)};
      }

      Regex factor() {
        Regex a = atom();
        int   c = peek();
        if (c == '*' || c == '+') {
          ++pos_;
          Regex::Kind kind = c == '*' ? Regex::Kind::star : Regex::Kind::plus;
          a                = Regex{kind, 0, {std::move(a)}};
        }
        return a;
      }

      Regex atom() {
        int c = peek();
        if (c == '(') {
          ++pos_;
          Regex r = expr();
          if (peek() != ')') {
            throw ParseError("expected ')'", pos_);
          }
          ++pos_;
          return r;
        }
        if (c == -1) {
          throw ParseError("unexpected end of expression", pos_);
        }
        if (c == '*' || c == '+' || c == ')' || c == '|') {
          throw ParseError(std::string("unexpected '") + char(c) + "'", pos_);
        }
        auto l = alphabet_.index(static_cast<char>(c));
        if (!l) {
          throw ParseError(std::string("unknown letter '") + char(c) + "'",
                           pos_);
        }
        ++pos_;
        return Regex{Regex::Kind::letter, *l, {}};
      }

      std::string_view          text_;
      InvolutoryAlphabet const& alphabet_;
      std::size_t               pos_ = 0;
    };

    void render(Regex const& r, InvolutoryAlphabet const& alphabet, std::string& out) {
      switch (r.kind) {
        case Regex::Kind::letter:
          out += alphabet.symbol(r.letter);
          break;
        case Regex::Kind::concat:
          for (auto const& c : r.children) {
            bool paren = c.kind == Regex::Kind::alt;
            if (paren) out += '(';
            render(c, alphabet, out);
            if (paren) out += ')';
          }
          break;
        case Regex::Kind::alt:
          for (std::size_t i = 0; i < r.children.size(); ++i) {
            if (i) out += '|';
            render(r.children[i], alphabet, out);
          }
          break;
        case Regex::Kind::star:
        case Regex::Kind::plus: {
          auto const& c     = r.children.front();
          bool        paren = c.kind != Regex::Kind::letter;
          if (paren) out += '(';
          render(c, alphabet, out);
          if (paren) out += ')';
          out += r.kind == Regex::Kind::star ? '*' : '+';
          break;
        }
      }
    }

  }  // namespace

  Regex parse_regex(std::string_view text, InvolutoryAlphabet const& alphabet) {
    return RegexParser(text, alphabet).parse();
  }

  std::string to_string(Regex const& r, InvolutoryAlphabet const& alphabet) {
    std::string out;
    render(r, alphabet, out);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Dfa basics
  ////////////////////////////////////////////////////////////////////////

  Dfa::Dfa(std::size_t num_letters, std::size_t num_states, State initial)
      : num_letters_(num_letters),
        initial_(initial),
        delta_(num_letters * num_states, 0),
        final_(num_states, 0) {
    if (num_letters == 0) {
      throw ArgumentError("a DFA needs a nonempty alphabet");
    }
    if (num_states == 0 || initial >= num_states) {
      throw ArgumentError("a DFA needs an initial state");
    }
  }

  void Dfa::set_initial(State q) {
    if (q >= num_states()) {
      throw ArgumentError("state out of range");
    }
    initial_ = q;
  }

  void Dfa::set_next(State q, Letter a, State r) {
    if (q >= num_states() || r >= num_states() || a >= num_letters_) {
      throw ArgumentError("transition out of range");
    }
    delta_[q * num_letters_ + a] = r;
  }

  void Dfa::set_final(State q, bool f) {
    if (q >= num_states()) {
      throw ArgumentError("state out of range");
    }
    final_[q] = f;
  }

  Dfa::State Dfa::add_state() {
    State q = static_cast<State>(num_states());
    final_.push_back(0);
    delta_.resize(delta_.size() + num_letters_, q);
    return q;
  }

  Dfa::State Dfa::run(State q, std::span<Letter const> w) const {
    for (Letter a : w) {
      if (a >= num_letters_) {
        throw ArgumentError("malformed word: letter index out of range");
      }
      q = next(q, a);
    }
    return q;
  }

  bool Dfa::accepts(std::span<Letter const> w) const {
    return !w.empty() && is_final(run(initial_, w));
  }

  Dfa Dfa::parse(std::string_view text, InvolutoryAlphabet const& alphabet) {
    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        n = 0;
    long               initial = -1;
    std::vector<std::size_t> finals;
    std::vector<std::tuple<std::size_t, Letter, std::size_t>> edges;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
      std::size_t line_start = offset;
      offset += line.size() + 1;
      if (auto h = line.find('#'); h != std::string::npos) {
        line.erase(h);
      }
      std::istringstream ls(line);
      std::string        head;
      if (!(ls >> head)) {
        continue;
      }
      if (head == "states:") {
        if (!(ls >> n) || n == 0) {
          throw ParseError("dfa: bad state count", line_start);
        }
      } else if (head == "initial:") {
        if (!(ls >> initial)) {
          throw ParseError("dfa: bad initial state", line_start);
        }
      } else if (head == "finals:") {
        std::size_t f;
        while (ls >> f) {
          finals.push_back(f);
        }
        if (!ls.eof()) {
          throw ParseError("dfa: bad final state list", line_start);
        }
      } else {
        std::size_t q, r;
        std::string a;
        std::istringstream es(line);
        if (!(es >> q >> a >> r) || a.size() != 1) {
          throw ParseError("dfa: expected 'q a q2'", line_start);
        }
        auto l = alphabet.index(a[0]);
        if (!l) {
          throw ParseError(std::string("dfa: unknown letter '") + a + "'",
                           line_start);
        }
        edges.emplace_back(q, *l, r);
      }
    }
    if (n == 0 || initial < 0 || static_cast<std::size_t>(initial) >= n) {
      throw ParseError("dfa: missing or invalid 'states:'/'initial:'", 0);
    }
    Dfa  d(alphabet.size(), n + 1, static_cast<State>(initial));
    State sink = static_cast<State>(n);
    std::vector<bool> seen(d.num_states() * alphabet.size(), false);
    for (State q = 0; q <= n; ++q) {
      for (Letter a = 0; a < alphabet.size(); ++a) {
        d.set_next(q, a, sink);
      }
    }
    for (auto [q, a, r] : edges) {
      if (q >= n || r >= n) {
        throw ParseError("dfa: transition state out of range", 0);
      }
      if (seen[q * alphabet.size() + a]) {
        throw ParseError("dfa: nondeterministic transition", 0);
      }
      seen[q * alphabet.size() + a] = true;
      d.set_next(static_cast<State>(q), a, static_cast<State>(r));
    }
    for (auto f : finals) {
      if (f >= n) {
        throw ParseError("dfa: final state out of range", 0);
      }
      d.set_final(static_cast<State>(f));
    }
    return d;
  }

  std::string Dfa::to_text(InvolutoryAlphabet const& alphabet) const {
    std::string out = "states: " + std::to_string(num_states()) + "\n";
    out += "initial: " + std::to_string(initial_) + "\nfinals:";
    for (State q = 0; q < num_states(); ++q) {
      if (is_final(q)) {
        out += " " + std::to_string(q);
      }
    }
    out += "\n";
    for (State q = 0; q < num_states(); ++q) {
      for (Letter a = 0; a < num_letters_; ++a) {
        out += std::to_string(q) + " " + alphabet.symbol(a) + " "
               + std::to_string(next(q, a)) + "\n";
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Minimization
  ////////////////////////////////////////////////////////////////////////

  std::vector<bool> reachable_states(Dfa const& d) {
    std::vector<bool>       seen(d.num_states(), false);
    std::vector<Dfa::State> stack{d.initial()};
    seen[d.initial()] = true;
    while (!stack.empty()) {
      auto q = stack.back();
      stack.pop_back();
      for (Letter a = 0; a < d.num_letters(); ++a) {
        auto r = d.next(q, a);
        if (!seen[r]) {
          seen[r] = true;
          stack.push_back(r);
        }
      }
    }
    return seen;
  }

  std::vector<bool> coaccessible_states(Dfa const& d) {
    std::vector<std::vector<Dfa::State>> pred(d.num_states());
    for (Dfa::State q = 0; q < d.num_states(); ++q) {
      for (Letter a = 0; a < d.num_letters(); ++a) {
        pred[d.next(q, a)].push_back(q);
      }
    }
    std::vector<bool>       good(d.num_states(), false);
    std::vector<Dfa::State> stack;
    for (Dfa::State q = 0; q < d.num_states(); ++q) {
      if (d.is_final(q)) {
        good[q] = true;
        stack.push_back(q);
      }
    }
    while (!stack.empty()) {
      auto q = stack.back();
      stack.pop_back();
      for (auto p : pred[q]) {
        if (!good[p]) {
          good[p] = true;
          stack.push_back(p);
        }
      }
    }
    return good;
  }

  namespace {

    // Ensures the initial state is not final (languages live in A+).
    Dfa without_empty_word(Dfa const& d) {
      if (!d.is_final(d.initial())) {
        return d;
      }
      Dfa  out = d;
      auto q0  = out.add_state();
      for (Letter a = 0; a < d.num_letters(); ++a) {
        out.set_next(q0, a, d.next(d.initial(), a));
      }
      out.set_initial(q0);
      return out;
    }

  }  // namespace

  Dfa minimize(Dfa const& input) {
    Dfa const   d    = without_empty_word(input);
    auto const  live = reachable_states(d);
    std::size_t const k = d.num_letters();

    std::vector<Dfa::State> states;
    for (Dfa::State q = 0; q < d.num_states(); ++q) {
      if (live[q]) {
        states.push_back(q);
      }
    }
    // Moore refinement: class(q) <- (class(q), class(q.a) for each a).
    std::vector<std::uint32_t> cls(d.num_states(), 0);
    for (auto q : states) {
      cls[q] = d.is_final(q) ? 1 : 0;
    }
    std::size_t num_classes = 0;
    {
      bool f = false, nf = false;
      for (auto q : states) {
        (d.is_final(q) ? f : nf) = true;
      }
      num_classes = std::size_t(f) + std::size_t(nf);
    }
    while (true) {
      std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
      std::vector<std::uint32_t> next_cls(d.num_states(), 0);
      std::vector<std::uint32_t> key(k + 1);
      for (auto q : states) {
        key[0] = cls[q];
        for (Letter a = 0; a < k; ++a) {
          key[a + 1] = cls[d.next(q, a)];
        }
        auto [it, inserted] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size()));
        next_cls[q]         = it->second;
      }
      cls.swap(next_cls);
      if (ids.size() == num_classes) {
        break;
      }
      num_classes = ids.size();
    }
    // Canonical numbering: BFS from the initial class, letters in order.
    std::vector<Dfa::State> rep(num_classes, 0);
    for (auto q : states) {
      rep[cls[q]] = q;
    }
    std::vector<std::int64_t> number(num_classes, -1);
    std::vector<std::uint32_t> order;
    std::deque<std::uint32_t>  queue{cls[d.initial()]};
    number[cls[d.initial()]] = 0;
    order.push_back(cls[d.initial()]);
    while (!queue.empty()) {
      auto c = queue.front();
      queue.pop_front();
      for (Letter a = 0; a < k; ++a) {
        auto c2 = cls[d.next(rep[c], a)];
        if (number[c2] < 0) {
          number[c2] = static_cast<std::int64_t>(order.size());
          order.push_back(c2);
          queue.push_back(c2);
        }
      }
    }
    Dfa out(k, order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto q = rep[order[i]];
      out.set_final(static_cast<Dfa::State>(i), d.is_final(q));
      for (Letter a = 0; a < k; ++a) {
        out.set_next(static_cast<Dfa::State>(i), a,
                     static_cast<Dfa::State>(number[cls[d.next(q, a)]]));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Regex -> DFA
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Thompson automaton: each state has letter edges and epsilon edges.
    struct Nfa {
      std::vector<std::vector<std::pair<Letter, std::uint32_t>>> edges;
      std::vector<std::vector<std::uint32_t>>                     eps;
      std::uint32_t                                               start  = 0;
      std::uint32_t                                               accept = 0;

      std::uint32_t add() {
        edges.emplace_back();
        eps.emplace_back();
        return static_cast<std::uint32_t>(edges.size() - 1);
      }
    };

    // Returns (in, out) states of the fragment.
    std::pair<std::uint32_t, std::uint32_t> build(Nfa& nfa, Regex const& r) {
      switch (r.kind) {
        case Regex::Kind::letter: {
          auto in  = nfa.add();
          auto out = nfa.add();
          nfa.edges[in].emplace_back(r.letter, out);
          return {in, out};
        }
        case Regex::Kind::concat: {
          auto [in, out] = build(nfa, r.children.front());
          for (std::size_t i = 1; i < r.children.size(); ++i) {
            auto [i2, o2] = build(nfa, r.children[i]);
            nfa.eps[out].push_back(i2);
            out = o2;
          }
          return {in, out};
        }
        case Regex::Kind::alt: {
          auto in  = nfa.add();
          auto out = nfa.add();
          for (auto const& c : r.children) {
            auto [i2, o2] = build(nfa, c);
            nfa.eps[in].push_back(i2);
            nfa.eps[o2].push_back(out);
          }
          return {in, out};
        }
        case Regex::Kind::star:
        case Regex::Kind::plus: {
          auto in       = nfa.add();
          auto out      = nfa.add();
          auto [i2, o2] = build(nfa, r.children.front());
          nfa.eps[in].push_back(i2);
          nfa.eps[o2].push_back(out);
          nfa.eps[o2].push_back(i2);
          if (r.kind == Regex::Kind::star) {
            nfa.eps[in].push_back(out);
          }
          return {in, out};
        }
      }
      throw ArgumentError("corrupt regex");
    }

    void close(Nfa const& nfa, std::vector<std::uint32_t>& set) {
      std::vector<bool> in(nfa.edges.size(), false);
      for (auto q : set) {
        in[q] = true;
      }
      std::vector<std::uint32_t> stack = set;
      while (!stack.empty()) {
        auto q = stack.back();
        stack.pop_back();
        for (auto r : nfa.eps[q]) {
          if (!in[r]) {
            in[r] = true;
            set.push_back(r);
            stack.push_back(r);
          }
        }
      }
      std::sort(set.begin(), set.end());
    }

    // Generic subset construction over an epsilon-free successor function.
    template <typename Step, typename IsFinal>
    Dfa determinize(std::size_t                 num_letters,
                    std::vector<std::uint32_t>  start,
                    Step&&                      step,
                    IsFinal&&                   is_final,
                    std::size_t                 budget) {
      std::map<std::vector<std::uint32_t>, Dfa::State> ids;
      std::vector<std::vector<std::uint32_t>>          sets;
      std::vector<std::vector<Dfa::State>>             trans;
      ids.emplace(start, 0);
      sets.push_back(std::move(start));
      for (std::size_t i = 0; i < sets.size(); ++i) {
        trans.emplace_back(num_letters);
        for (Letter a = 0; a < num_letters; ++a) {
          std::vector<std::uint32_t> next = step(sets[i], a);
          auto it = ids.find(next);
          if (it == ids.end()) {
            if (sets.size() >= budget) {
              throw ResourceLimit("determinization", sets.size());
            }
            it = ids.emplace(next, static_cast<Dfa::State>(sets.size())).first;
            sets.push_back(std::move(next));
          }
          trans[i][a] = it->second;
        }
      }
      Dfa d(num_letters, sets.size(), 0);
      for (std::size_t i = 0; i < sets.size(); ++i) {
        d.set_final(static_cast<Dfa::State>(i), is_final(sets[i]));
        for (Letter a = 0; a < num_letters; ++a) {
          d.set_next(static_cast<Dfa::State>(i), a, trans[i][a]);
        }
      }
      return d;
    }

  }  // namespace

  Dfa to_dfa(Regex const& r, std::size_t num_letters, std::size_t budget) {
    Nfa nfa;
    auto [in, out] = build(nfa, r);
    nfa.start      = in;
    nfa.accept     = out;
    for (auto const& es : nfa.edges) {
      for (auto [a, q] : es) {
        if (a >= num_letters) {
          throw ArgumentError("regex letter outside the alphabet");
        }
      }
    }
    std::vector<std::uint32_t> start{in};
    close(nfa, start);
    auto step = [&nfa](std::vector<std::uint32_t> const& set, Letter a) {
      std::vector<std::uint32_t> next;
      for (auto q : set) {
        for (auto [b, r] : nfa.edges[q]) {
          if (b == a) {
            next.push_back(r);
          }
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      close(nfa, next);
      return next;
    };
    auto is_final = [&nfa](std::vector<std::uint32_t> const& set) {
      return std::binary_search(set.begin(), set.end(), nfa.accept);
    };
    return minimize(determinize(num_letters, std::move(start), step, is_final, budget));
  }

  Dfa regex_dfa(std::string_view          text,
                InvolutoryAlphabet const& alphabet,
                std::size_t               budget) {
    return to_dfa(parse_regex(text, alphabet), alphabet.size(), budget);
  }

  Dfa universal_dfa(std::size_t num_letters) {
    Dfa d(num_letters, 2, 0);
    for (Letter a = 0; a < num_letters; ++a) {
      d.set_next(0, a, 1);
      d.set_next(1, a, 1);
    }
    d.set_final(1);
    return d;
  }

  Dfa empty_dfa(std::size_t num_letters) {
    return Dfa(num_letters, 1, 0);
  }

  Dfa finite_language_dfa(std::vector<Word> const& words,
                          std::size_t              num_letters) {
    Dfa d(num_letters, 2, 0);  // 0 = root, 1 = sink
    for (Letter a = 0; a < num_letters; ++a) {
      d.set_next(0, a, 1);
      d.set_next(1, a, 1);
    }
    for (auto const& w : words) {
      if (w.empty()) {
        throw ArgumentError("finite_language_dfa: words must be nonempty");
      }
      Dfa::State q = 0;
      for (Letter a : w) {
        if (a >= num_letters) {
          throw ArgumentError("malformed word: letter index out of range");
        }
        if (d.next(q, a) == 1) {
          auto r = d.add_state();
          for (Letter b = 0; b < num_letters; ++b) {
            d.set_next(r, b, 1);
          }
          d.set_next(q, a, r);
        }
        q = d.next(q, a);
      }
      d.set_final(q);
    }
    return minimize(d);
  }

  ////////////////////////////////////////////////////////////////////////
  // Boolean algebra and quotients
  ////////////////////////////////////////////////////////////////////////

  Dfa boolean_op(Dfa const& d1, Dfa const& d2, BoolOp op) {
    if (d1.num_letters() != d2.num_letters()) {
      throw ArgumentError("boolean_op: alphabet mismatch");
    }
    std::size_t const k = d1.num_letters();
    std::unordered_map<std::uint64_t, Dfa::State> ids;
    std::vector<std::pair<Dfa::State, Dfa::State>> pairs;
    auto id = [&](Dfa::State p, Dfa::State q) {
      std::uint64_t key = (std::uint64_t(p) << 32) | q;
      auto [it, inserted] = ids.try_emplace(key, static_cast<Dfa::State>(pairs.size()));
      if (inserted) {
        pairs.emplace_back(p, q);
      }
      return it->second;
    };
    id(d1.initial(), d2.initial());
    std::vector<std::vector<Dfa::State>> trans;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      trans.emplace_back(k);
      for (Letter a = 0; a < k; ++a) {
        auto [p, q] = pairs[i];
        trans[i][a] = id(d1.next(p, a), d2.next(q, a));
      }
    }
    Dfa out(k, pairs.size(), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [p, q] = pairs[i];
      bool f1 = d1.is_final(p), f2 = d2.is_final(q);
      bool f  = op == BoolOp::union_          ? (f1 || f2)
                : op == BoolOp::intersection ? (f1 && f2)
                                             : (f1 && !f2);
      out.set_final(static_cast<Dfa::State>(i), f);
      for (Letter a = 0; a < k; ++a) {
        out.set_next(static_cast<Dfa::State>(i), a, trans[i][a]);
      }
    }
    return minimize(out);
  }

  Dfa complement(Dfa const& d) {
    Dfa out = minimize(d);
    for (Dfa::State q = 0; q < out.num_states(); ++q) {
      out.set_final(q, !out.is_final(q));
    }
    return minimize(out);
  }

  bool is_empty(Dfa const& d) {
    Dfa m = minimize(d);
    for (Dfa::State q = 0; q < m.num_states(); ++q) {
      if (m.is_final(q)) {
        return false;
      }
    }
    return true;
  }

  bool same_language(Dfa const& d1, Dfa const& d2) {
    return minimize(d1) == minimize(d2);
  }

  Dfa quotient(Dfa const& d, Letter a, Side side) {
    if (a >= d.num_letters()) {
      throw ArgumentError("quotient: unknown letter");
    }
    Dfa out = d;
    if (side == Side::left) {
      out.set_initial(d.next(d.initial(), a));
    } else {
      for (Dfa::State q = 0; q < d.num_states(); ++q) {
        out.set_final(q, d.is_final(d.next(q, a)));
      }
    }
    return minimize(out);
  }

  Dfa word_quotient(Dfa const& d, std::span<Letter const> u, Side side) {
    Dfa out = d;
    if (side == Side::left) {
      for (Letter a : u) {
        out = quotient(out, a, Side::left);
      }
    } else {
      for (std::size_t i = u.size(); i-- > 0;) {
        out = quotient(out, u[i], Side::right);
      }
    }
    return minimize(out);
  }

  namespace {

    Dfa reverse_with_relabel(Dfa const&                 d,
                             std::vector<Letter> const& relabel,
                             std::size_t                budget) {
      std::size_t const k = d.num_letters();
      // pred[a][q] = states p with p.a = q
      std::vector<std::vector<std::vector<std::uint32_t>>> pred(
          k, std::vector<std::vector<std::uint32_t>>(d.num_states()));
      for (Dfa::State p = 0; p < d.num_states(); ++p) {
        for (Letter a = 0; a < k; ++a) {
          pred[a][d.next(p, a)].push_back(p);
        }
      }
      std::vector<std::uint32_t> start;
      for (Dfa::State q = 0; q < d.num_states(); ++q) {
        if (d.is_final(q)) {
          start.push_back(q);
        }
      }
      // Reading letter b in the new automaton follows reversed edges of
      // letter a where relabel[a] = b.
      std::vector<Letter> source(k);
      for (Letter a = 0; a < k; ++a) {
        source[relabel[a]] = a;
      }
      auto step = [&](std::vector<std::uint32_t> const& set, Letter b) {
        std::vector<std::uint32_t> next;
        for (auto q : set) {
          auto const& ps = pred[source[b]][q];
          next.insert(next.end(), ps.begin(), ps.end());
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        return next;
      };
      auto init     = d.initial();
      auto is_final = [init](std::vector<std::uint32_t> const& set) {
        return std::binary_search(set.begin(), set.end(), init);
      };
      return minimize(determinize(k, std::move(start), step, is_final, budget));
    }

  }  // namespace

  Dfa reverse_language(Dfa const& d, std::size_t budget) {
    std::vector<Letter> id(d.num_letters());
    for (std::size_t a = 0; a < id.size(); ++a) {
      id[a] = static_cast<Letter>(a);
    }
    return reverse_with_relabel(minimize(d), id, budget);
  }

  Dfa language_involution(Dfa const&                d,
                          InvolutoryAlphabet const& alphabet,
                          std::size_t               budget) {
    if (alphabet.size() != d.num_letters()) {
      throw ArgumentError("language_involution: alphabet mismatch");
    }
    std::vector<Letter> relabel(alphabet.size());
    for (Letter a = 0; a < alphabet.size(); ++a) {
      relabel[a] = alphabet.dagger(a);
    }
    return reverse_with_relabel(minimize(d), relabel, budget);
  }

  InverseImage inverse_morphism_image(Dfa const&                d,
                                      InvolutoryAlphabet const& target,
                                      std::vector<Word> const&  letter_images,
                                      InvolutoryAlphabet const& source) {
    if (target.size() != d.num_letters()) {
      throw ArgumentError("inverse_morphism_image: target alphabet mismatch");
    }
    if (letter_images.size() != source.size()) {
      throw ArgumentError("inverse_morphism_image: one image per source letter");
    }
    for (auto const& w : letter_images) {
      if (w.empty()) {
        throw ArgumentError(
            "inverse_morphism_image: letter images must be nonempty words");
      }
      for (Letter b : w) {
        if (b >= target.size()) {
          throw ArgumentError("inverse_morphism_image: image letter out of range");
        }
      }
    }
    Dfa out(source.size(), d.num_states(), d.initial());
    for (Dfa::State q = 0; q < d.num_states(); ++q) {
      out.set_final(q, d.is_final(q));
      for (Letter a = 0; a < source.size(); ++a) {
        out.set_next(q, a, d.run(q, letter_images[a]));
      }
    }
    InverseImage result{minimize(out), true};
    for (Letter a = 0; a < source.size(); ++a) {
      if (letter_images[source.dagger(a)]
          != word_involution(target, letter_images[a])) {
        result.involutory = false;
      }
    }
    return result;
  }

  std::vector<Word> bounded_words(Dfa const& d, std::size_t maxlen) {
    std::vector<Word> out;
    std::size_t const n = d.num_states();
    // good[r][q]: some word of length exactly r leads from q to a final state.
    std::vector<std::vector<bool>> good(maxlen + 1, std::vector<bool>(n, false));
    for (Dfa::State q = 0; q < n; ++q) {
      good[0][q] = d.is_final(q);
    }
    for (std::size_t r = 1; r <= maxlen; ++r) {
      for (Dfa::State q = 0; q < n; ++q) {
        for (Letter a = 0; a < d.num_letters() && !good[r][q]; ++a) {
          good[r][q] = good[r - 1][d.next(q, a)];
        }
      }
    }
    for (std::size_t len = 1; len <= maxlen; ++len) {
      Word                    w;
      std::vector<Dfa::State> path{d.initial()};
      // Depth-first, lexicographic, pruned by `good`.
      auto                dfs = [&](auto&& self) -> void {
        std::size_t depth = w.size();
        Dfa::State  q     = path.back();
        if (depth == len) {
          out.push_back(w);
          return;
        }
        for (Letter a = 0; a < d.num_letters(); ++a) {
          auto r = d.next(q, a);
          if (good[len - depth - 1][r]) {
            w.push_back(a);
            path.push_back(r);
            self(self);
            path.pop_back();
            w.pop_back();
          }
        }
      };
      if (good[len][d.initial()]) {
        dfs(dfs);
      }
    }
    return out;
  }

}  // namespace invsg
