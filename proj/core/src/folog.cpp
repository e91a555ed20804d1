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


#include "invsg/folog.hpp"

#include <algorithm>
#include <cctype>

#include "invsg/errors.hpp"

namespace invsg {

  namespace {

    bool is_ident_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    bool is_ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    class FormulaParser {
     public:
      FormulaParser(std::string_view                text,
                    InvolutoryAlphabet const&       alphabet,
                    std::vector<std::string> const& free)
          : text_(text), alphabet_(alphabet) {
        for (auto const& name : free) {
          if (name.empty() || !is_ident_start(name[0]) || is_keyword(name)) {
            throw ArgumentError("invalid free variable name '" + name + "'");
          }
          scope_.push_back({name, out_.names.size()});
          out_.names.push_back(name);
        }
        out_.free_count = free.size();
      }

      FoFormula run() {
        out_.root = form();
        skip_ws();
        if (pos_ != text_.size()) {
          fail("unexpected input");
        }
        return std::move(out_);
      }

     private:
      struct Binding {
        std::string name;
        std::size_t slot;
      };

      static bool is_keyword(std::string_view s) {
        return s == "exists" || s == "forall" || s == "min" || s == "max";
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what, pos_);
      }

      void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      bool accept(std::string_view tok) {
        skip_ws();
        if (text_.substr(pos_, tok.size()) == tok) {
          pos_ += tok.size();
          return true;
        }
        return false;
      }

      void expect(std::string_view tok) {
        if (!accept(tok)) {
          fail("expected '" + std::string(tok) + "'");
        }
      }

      // Identifier at the cursor without consuming it.
      std::string_view peek_ident() {
        skip_ws();
        std::size_t end = pos_;
        if (end < text_.size() && is_ident_start(text_[end])) {
          while (end < text_.size() && is_ident_char(text_[end])) {
            ++end;
          }
        }
        return text_.substr(pos_, end - pos_);
      }

      FoNode form() {
        std::string_view id = peek_ident();
        if (id == "exists" || id == "forall") {
          pos_ += id.size();
          std::string_view name = peek_ident();
          if (name.empty() || is_keyword(name)) {
            fail("expected a variable");
          }
          pos_ += name.size();
          expect(".");
          FoNode n;
          n.kind = id == "exists" ? FoNode::Kind::exists : FoNode::Kind::forall;
          n.var  = out_.names.size();
          out_.names.emplace_back(name);
          scope_.push_back({std::string(name), n.var});
          n.children.push_back(form());
          scope_.pop_back();
          return n;
        }
        return imp();
      }

      static FoNode negate(FoNode x) {
        FoNode n;
        n.kind = FoNode::Kind::negation;
        n.children.push_back(std::move(x));
        return n;
      }

      static FoNode binary(FoNode::Kind k, FoNode x, FoNode y) {
        FoNode n;
        n.kind = k;
        n.children.push_back(std::move(x));
        n.children.push_back(std::move(y));
        return n;
      }

      FoNode imp() {
        FoNode lhs = disj();
        if (accept("<->")) {
          FoNode rhs = imp();
          return binary(FoNode::Kind::disjunction,
                        binary(FoNode::Kind::conjunction, lhs, rhs),
                        binary(FoNode::Kind::conjunction, negate(lhs), negate(rhs)));
        }
        if (accept("->")) {
          return binary(FoNode::Kind::disjunction, negate(std::move(lhs)), imp());
        }
        return lhs;
      }

      FoNode disj() {
        FoNode x = conj();
        while (accept("|")) {
          x = binary(FoNode::Kind::disjunction, std::move(x), conj());
        }
        return x;
      }

      FoNode conj() {
        FoNode x = neg();
        while (accept("&")) {
          x = binary(FoNode::Kind::conjunction, std::move(x), neg());
        }
        return x;
      }

      // A quantifier may also open an operand of a connective; its scope then
      // extends as far right as possible.
      FoNode neg() {
        if (accept("!")) {
          return negate(neg());
        }
        std::string_view id = peek_ident();
        if (id == "exists" || id == "forall") {
          return form();
        }
        return atom();
      }

      FoNode atom() {
        skip_ws();
        if (accept("(")) {
          FoNode x = form();
          expect(")");
          return x;
        }
        if (text_.substr(pos_, 2) == "P_") {
          pos_ += 2;
          if (pos_ >= text_.size()) {
            fail("expected a letter");
          }
          auto a = alphabet_.index(text_[pos_]);
          if (!a) {
            fail(std::string("unknown letter '") + text_[pos_] + "'");
          }
          ++pos_;
          FoNode n;
          n.kind   = FoNode::Kind::letter;
          n.letter = *a;
          expect("(");
          n.lhs = term();
          expect(")");
          return n;
        }
        std::string_view id = peek_ident();
        if (id == "N") {
          std::size_t const save = pos_;
          pos_ += 1;
          if (accept("(")) {
            FoNode n;
            n.kind = FoNode::Kind::adjacent;
            n.lhs  = term();
            expect(",");
            n.rhs = term();
            expect(")");
            return n;
          }
          pos_ = save;
        }
        if (id.empty()) {
          fail("expected a formula");
        }
        FoNode n;
        n.kind = FoNode::Kind::equal;
        n.lhs  = term();
        expect("=");
        n.rhs = term();
        return n;
      }

      FoTerm term() {
        std::string_view id = peek_ident();
        if (id.empty()) {
          fail("expected a term");
        }
        if (id == "exists" || id == "forall") {
          fail("expected a term");
        }
        FoTerm t;
        if (id == "min") {
          t.kind = FoTerm::Kind::min;
        } else if (id == "max") {
          t.kind = FoTerm::Kind::max;
        } else {
          auto it = std::find_if(scope_.rbegin(), scope_.rend(),
                                 [&](Binding const& b) { return b.name == id; });
          if (it == scope_.rend()) {
            fail("unbound variable '" + std::string(id) + "'");
          }
          t.var = it->slot;
        }
        pos_ += id.size();
        return t;
      }

      std::string_view          text_;
      InvolutoryAlphabet const& alphabet_;
      std::size_t               pos_ = 0;
      std::vector<Binding>      scope_;
      FoFormula                 out_;
    };

    std::string term_str(FoTerm const& t, FoFormula const& f) {
      switch (t.kind) {
        case FoTerm::Kind::min:
          return "min";
        case FoTerm::Kind::max:
          return "max";
        default:
          return f.names[t.var];
      }
    }

    std::string node_str(FoNode const&             n,
                         FoFormula const&          f,
                         InvolutoryAlphabet const& alphabet) {
      switch (n.kind) {
        case FoNode::Kind::letter:
          return std::string("P_") + alphabet.symbol(n.letter) + "(" + term_str(n.lhs, f) + ")";
        case FoNode::Kind::adjacent:
          return "N(" + term_str(n.lhs, f) + ", " + term_str(n.rhs, f) + ")";
        case FoNode::Kind::equal:
          return term_str(n.lhs, f) + " = " + term_str(n.rhs, f);
        case FoNode::Kind::negation:
          return "!" + node_str(n.children[0], f, alphabet);
        case FoNode::Kind::conjunction:
          return "(" + node_str(n.children[0], f, alphabet) + " & "
                 + node_str(n.children[1], f, alphabet) + ")";
        case FoNode::Kind::disjunction:
          return "(" + node_str(n.children[0], f, alphabet) + " | "
                 + node_str(n.children[1], f, alphabet) + ")";
        case FoNode::Kind::exists:
        case FoNode::Kind::forall:
          return std::string("(") + (n.kind == FoNode::Kind::exists ? "exists " : "forall ")
                 + f.names[n.var] + ". " + node_str(n.children[0], f, alphabet) + ")";
      }
      return {};
    }

    struct Evaluator {
      std::span<Letter const>  w;
      std::vector<std::size_t> env;  // 1-based positions

      std::size_t value(FoTerm const& t) const {
        switch (t.kind) {
          case FoTerm::Kind::min:
            return 1;
          case FoTerm::Kind::max:
            return w.size();
          default:
            return env[t.var];
        }
      }

      bool eval(FoNode const& n) {
        switch (n.kind) {
          case FoNode::Kind::letter:
            return w[value(n.lhs) - 1] == n.letter;
          case FoNode::Kind::adjacent: {
            std::size_t x = value(n.lhs), y = value(n.rhs);
            return x + 1 == y || y + 1 == x;
          }
          case FoNode::Kind::equal:
            return value(n.lhs) == value(n.rhs);
          case FoNode::Kind::negation:
            return !eval(n.children[0]);
          case FoNode::Kind::conjunction:
            return eval(n.children[0]) && eval(n.children[1]);
          case FoNode::Kind::disjunction:
            return eval(n.children[0]) || eval(n.children[1]);
          case FoNode::Kind::exists:
          case FoNode::Kind::forall: {
            bool const want = n.kind == FoNode::Kind::exists;
            for (std::size_t p = 1; p <= w.size(); ++p) {
              env[n.var] = p;
              if (eval(n.children[0]) == want) {
                return want;
              }
            }
            return !want;
          }
        }
        return false;
      }
    };

  }  // namespace

  FoFormula parse_formula(std::string_view                text,
                          InvolutoryAlphabet const&       alphabet,
                          std::vector<std::string> const& free) {
    return FormulaParser(text, alphabet, free).run();
  }

  std::string to_string(FoFormula const& f, InvolutoryAlphabet const& alphabet) {
    return node_str(f.root, f, alphabet);
  }

  bool evaluate(FoFormula const&                          f,
                std::span<Letter const>                   w,
                std::map<std::string, std::size_t> const& env) {
    if (w.empty()) {
      throw ArgumentError("evaluate: formulas are interpreted on nonempty words");
    }
    Evaluator ev{w, std::vector<std::size_t>(f.num_slots(), 0)};
    for (std::size_t i = 0; i < f.free_count; ++i) {
      auto it = env.find(f.names[i]);
      if (it == env.end()) {
        throw ArgumentError("evaluate: no position for free variable '" + f.names[i] + "'");
      }
      if (it->second < 1 || it->second > w.size()) {
        throw ArgumentError("evaluate: position of '" + f.names[i] + "' outside the word");
      }
      ev.env[i] = it->second;
    }
    return ev.eval(f.root);
  }

  std::vector<Word> bounded_language(FoFormula const&          f,
                                     InvolutoryAlphabet const& alphabet,
                                     std::size_t               maxlen) {
    if (!f.is_sentence()) {
      throw PreconditionError("bounded_language: the formula has free variables");
    }
    std::vector<Word> out;
    for (std::size_t len = 1; len <= maxlen; ++len) {
      Word w(len, 0);
      do {
        if (evaluate(f, w)) {
          out.push_back(w);
        }
      } while (next_word(w, alphabet.size()));
    }
    return out;
  }

  Consistency consistency_check(FoFormula const&          f,
                                Dfa const&                d,
                                InvolutoryAlphabet const& alphabet,
                                std::size_t               maxlen) {
    if (!f.is_sentence()) {
      throw PreconditionError("consistency_check: the formula has free variables");
    }
    if (d.num_letters() != alphabet.size()) {
      throw ArgumentError("consistency_check: DFA and alphabet disagree");
    }
    Consistency out;
    for (std::size_t len = 1; len <= maxlen; ++len) {
      Word w(len, 0);
      do {
        bool const fa = evaluate(f, w);
        if (fa != d.accepts(w)) {
          out.agree           = false;
          out.mismatch        = w;
          out.formula_accepts = fa;
          return out;
        }
      } while (next_word(w, alphabet.size()));
    }
    return out;
  }

}  // namespace invsg
