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


// invsg: command-line front end.  Every report is a sequence of `key: value`
// lines; exit codes are 0 (success or positive answer), 1 (negative answer
// with a witness), 2 (resource limit) and 3 (input error).

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "invsg/acceptance.hpp"
#include "invsg/alphabet.hpp"
#include "invsg/errors.hpp"
#include "invsg/factors.hpp"
#include "invsg/folog.hpp"
#include "invsg/involution.hpp"
#include "invsg/lrtt.hpp"
#include "invsg/regular.hpp"
#include "invsg/semidirect.hpp"
#include "invsg/semigroup.hpp"
#include "invsg/syntactic.hpp"

namespace {

  using namespace invsg;

  enum Exit { ok = 0, negative = 1, limit = 2, input_error = 3 };

  struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Global {
    std::size_t   budget = default_signature_budget;
    std::uint64_t seed   = 1;
    bool          timing = false;
  };

  // Accumulates the report and the digest of everything read.
  class Report {
   public:
    explicit Report(std::string command) {
      line("command", command);
    }

    void line(std::string const& key, std::string const& value) {
      out_ += key + ": " + value + "\n";
    }
    void line(std::string const& key, std::size_t value) {
      line(key, std::to_string(value));
    }
    void flag(std::string const& key, bool value) {
      line(key, value ? "true" : "false");
    }

    // FNV-1a over the inputs, in the order they were read.
    void digest(std::string_view data) {
      for (unsigned char c : data) {
        hash_ = (hash_ ^ c) * 1099511628211ull;
      }
      digested_ = true;
    }

    std::string text(Global const& g, double seconds) const {
      std::string head;
      if (digested_) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
        head += std::string("input_digest: ") + buf + "\n";
      }
      head += "seed: " + std::to_string(g.seed) + "\n";
      head += "budget: " + std::to_string(g.budget) + "\n";
      std::string tail;
      if (g.timing) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "elapsed_seconds: %.3f\n", seconds);
        tail = buf;
      }
      auto first = out_.find('\n') + 1;
      return out_.substr(0, first) + head + out_.substr(first) + tail;
    }

   private:
    std::string   out_;
    std::uint64_t hash_     = 1469598103934665603ull;
    bool          digested_ = false;
  };

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Alphabet options shared by the language-level commands.
  struct AlphabetOptions {
    std::string letters;
    std::string dagger;
    std::string file;

    void attach(CLI::App* app) {
      app->add_option("--letters", letters, "Alphabet letters (default: the letters of the regex)");
      app->add_option("--dagger", dagger, "Involution pairs, e.g. 'a b' for a<->b (default: identity)");
      app->add_option("--alphabet-file", file, "Alphabet file, one `x y` or `x` line per letter");
    }

    InvolutoryAlphabet resolve(Report& r, std::string const& regex = {}) const {
      if (!file.empty()) {
        std::string text = read_file(file);
        r.digest(text);
        return InvolutoryAlphabet::parse(text);
      }
      std::string l = letters;
      if (l.empty()) {
        std::set<char> seen;
        for (char c : regex) {
          if (std::string_view("()|*+ \t").find(c) == std::string_view::npos) {
            seen.insert(c);
          }
        }
        l.assign(seen.begin(), seen.end());
      }
      if (l.empty()) {
        throw InputError("no alphabet: give --letters or --alphabet-file");
      }
      r.digest(l);
      r.digest(dagger);
      return dagger.empty() ? InvolutoryAlphabet::hermitian(l)
                            : InvolutoryAlphabet::with_pairs(l, dagger);
    }
  };

  // A language given as a regex or as a DFA file.
  struct LanguageOptions {
    std::string     regex;
    std::string     dfa_file;
    AlphabetOptions alphabet;

    void attach(CLI::App* app) {
      auto* re = app->add_option("--regex", regex, "Regular expression over the alphabet");
      auto* df = app->add_option("--dfa", dfa_file, "DFA file");
      re->excludes(df);
      alphabet.attach(app);
    }

    std::pair<InvolutoryAlphabet, Dfa> resolve(Report& r, Global const& g) const {
      if (regex.empty() == dfa_file.empty()) {
        throw InputError("give exactly one of --regex and --dfa");
      }
      InvolutoryAlphabet al = alphabet.resolve(r, regex);
      if (!regex.empty()) {
        r.digest(regex);
        r.line("language", regex);
        return {al, regex_dfa(regex, al, g.budget)};
      }
      std::string text = read_file(dfa_file);
      r.digest(text);
      r.line("language", "dfa " + dfa_file);
      return {al, Dfa::parse(text, al)};
    }
  };

  std::string word_list(InvolutoryAlphabet const& al, std::vector<Word> const& ws) {
    std::string out;
    for (auto const& w : ws) {
      out += (out.empty() ? "" : " ") + al.str(w);
    }
    return out;
  }

  std::string elem_list(FiniteSemigroup const& s, std::vector<Elem> const& xs) {
    std::string out;
    for (Elem x : xs) {
      out += (out.empty() ? "" : " ") + s.label(x);
    }
    return out;
  }

  void semigroup_flags(Report& r, FiniteSemigroup const& s) {
    r.line("size", s.size());
    r.line("idempotents", elem_list(s, idempotents(s)));
    auto index = aperiodicity_index(s);
    r.flag("aperiodic", index.has_value());
    if (index) {
      r.line("aperiodicity_index", *index);
    }
    r.flag("commutative", is_commutative(s));
    bool lt = is_locally_trivial(s);
    r.flag("locally_trivial", lt);
    if (lt) {
      r.line("local_delay", local_delay(s));
    }
  }

  void star_flags(Report& r, InvolutionSemigroup const& s) {
    std::string star;
    for (Elem x = 0; x < s.size(); ++x) {
      star += (x ? " " : "") + s.base().label(x) + "->" + s.base().label(s.star(x));
    }
    r.line("star", star);
    r.line("hermitian_elements", elem_list(s.base(), hermitian_elements(s)));
    r.flag("hermitian_generated", is_hermitian_generated(s));
  }

  std::string cell_name(std::size_t k, std::size_t t) {
    return "(" + std::to_string(k) + "," + std::to_string(t) + ")";
  }

  Mode mode_of(std::string const& text) {
    auto m = parse_mode(text);
    if (!m) {
      throw InputError("mode must be plain or reverse");
    }
    return *m;
  }

  FoFormula formula_of(Report&                   r,
                       InvolutoryAlphabet const& al,
                       std::string const&        text,
                       std::string const&        file,
                       std::vector<std::string> const& free = {}) {
    if (text.empty() == file.empty()) {
      throw InputError("give exactly one of --formula and --formula-file");
    }
    std::string f = text.empty() ? read_file(file) : text;
    r.digest(f);
    return parse_formula(f, al, free);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Involution semigroups, syntactic star-semigroups and locally threshold testable languages"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--budget", g.budget, "Cap on explored states or elements")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for sampled checks")->capture_default_str();
  app.add_flag("--timing", g.timing, "Append the elapsed time to the report");

  app.fallthrough();

  std::function<int(Report&)> action;

  auto sub = [&](char const* name, char const* help) {
    return app.add_subcommand(name, help);
  };

  // sig
  std::string     word, mode_text = "reverse";
  std::size_t     k = 1, t = 1;
  AlphabetOptions sig_alpha;
  {
    auto* c = sub("sig", "Signature of a word at (k, t)");
    c->add_option("--word", word, "The word")->required();
    c->add_option("--k", k, "Factor length")->capture_default_str();
    c->add_option("--t", t, "Threshold")->capture_default_str();
    c->add_option("--mode", mode_text, "plain or reverse")->capture_default_str();
    sig_alpha.attach(c);
    c->final_callback([&] {
      action = [&](Report& r) {
        auto al = sig_alpha.resolve(r, word);
        r.digest(word);
        Word w = al.word(word);
        r.line("word", word);
        std::string s = format_signature(al, signature(al, w, k, t, mode_of(mode_text)));
        s.pop_back();
        std::istringstream lines(s);
        for (std::string l; std::getline(lines, l);) {
          auto colon = l.find(": ");
          r.line(l.substr(0, colon), l.substr(colon + 2));
        }
        return ok;
      };
    });
  }

  // regex2dfa
  LanguageOptions lang;
  {
    auto* c = sub("regex2dfa", "Minimal DFA of a regular expression");
    lang.attach(c);
    c->final_callback([&] {
      action = [&](Report& r) {
        auto [al, d] = lang.resolve(r, g);
        r.line("letters", al.letters());
        r.line("states", d.num_states());
        std::string text = d.to_text(al);
        r.line("dfa", "\n" + text.substr(0, text.size() - 1));
        return ok;
      };
    });
  }

  // syn
  bool show_table = false;
  {
    auto* c = sub("syn", "Syntactic semigroup report");
    lang.attach(c);
    c->add_flag("--table", show_table, "Print the multiplication table");
    c->final_callback([&] {
      action = [&](Report& r) {
        auto [al, d]     = lang.resolve(r, g);
        SyntacticData sd = syntactic_semigroup(d, al, g.budget);
        semigroup_flags(r, sd.semigroup);
        r.line("elements", elem_list(sd.semigroup, [&] {
                 std::vector<Elem> all(sd.semigroup.size());
                 for (Elem x = 0; x < all.size(); ++x) all[x] = x;
                 return all;
               }()));
        std::vector<Elem> acc;
        for (Elem x = 0; x < sd.accepting.size(); ++x) {
          if (sd.accepting[x]) acc.push_back(x);
        }
        r.line("accepting", elem_list(sd.semigroup, acc));
        if (show_table) {
          std::string tab = format_semigroup(sd.semigroup);
          r.line("table", "\n" + tab.substr(0, tab.size() - 1));
        }
        return ok;
      };
    });
  }

  // invsyn
  {
    auto* c = sub("invsyn", "Syntactic star-semigroup report");
    lang.attach(c);
    c->add_flag("--table", show_table, "Print the multiplication table");
    c->final_callback([&] {
      action = [&](Report& r) {
        auto [al, d]         = lang.resolve(r, g);
        StarSyntacticData sd = syntactic_star_semigroup(d, al, g.budget);
        FiniteSemigroup const& s = sd.semigroup.base();
        r.line("syntactic_size", sd.syntactic.semigroup.size());
        semigroup_flags(r, s);
        std::vector<Elem> all(s.size()), acc;
        for (Elem x = 0; x < s.size(); ++x) {
          all[x] = x;
          if (sd.accepting[x]) acc.push_back(x);
        }
        r.line("elements", elem_list(s, all));
        r.line("accepting", elem_list(s, acc));
        star_flags(r, sd.semigroup);
        AntiIsomorphism anti = anti_isomorphism_check(d, al, g.budget);
        r.flag("anti_isomorphic_to_reverse", anti.found && anti.matches_alpha);
        if (show_table) {
          std::string tab = format_semigroup(s, &sd.semigroup.star_table());
          r.line("table", "\n" + tab.substr(0, tab.size() - 1));
        }
        return ok;
      };
    });
  }

  // props
  std::string semigroup_file;
  {
    auto* c = sub("props", "Structural flags of a semigroup file");
    c->add_option("--semigroup-file", semigroup_file, "Semigroup file")->required();
    c->final_callback([&] {
      action = [&](Report& r) {
        std::string text = read_file(semigroup_file);
        r.digest(text);
        SemigroupText st = parse_semigroup(text);
        semigroup_flags(r, st.semigroup);
        if (st.star) {
          auto v = validate_involution(st.semigroup, *st.star);
          r.flag("involution", !v.has_value());
          if (v) {
            r.line("involution_violation", describe(st.semigroup, *st.star, *v));
            return negative;
          }
          star_flags(r, InvolutionSemigroup(st.semigroup, *st.star));
        }
        return ok;
      };
    });
  }

  // action-check and sdp-build
  std::string action_file;
  std::size_t rotation_k = 0;
  auto law_line = [](Report& r, char const* key, std::optional<ActionViolation> const& v) {
    r.line(key, v ? "false" : "true");
    if (v) {
      r.line(std::string(key) + "_violation", std::string(to_string(v->law)) + " " + v->detail);
    }
    return !v;
  };
  {
    auto* c = sub("action-check", "Validate a bilateral action file");
    c->add_option("--action-file", action_file, "Action file")->required();
    c->final_callback([&] {
      action = [&](Report& r) {
        std::string text = read_file(action_file);
        r.digest(text);
        ActionText at = parse_action(text);
        r.line("s_size", at.action.s.size());
        r.line("t_size", at.action.t.size());
        bool good = law_line(r, "action", validate_action(at.action));
        if (at.star_s && at.star_t) {
          good = law_line(r, "involutory", validate_involutory(at.action, *at.star_s, *at.star_t)) && good;
          good = law_line(r, "two_sided_involutory",
                          two_sided_involutory_check(at.action, *at.star_s, *at.star_t)) && good;
          good = law_line(r, "locally_hermitian",
                          is_locally_hermitian(at.action, *at.star_s, *at.star_t)) && good;
        } else {
          r.line("involutory", "skipped (no star lines)");
        }
        return good ? ok : negative;
      };
    });
  }
  {
    auto* c = sub("sdp-build", "Build the involutory semidirect product of an action file");
    c->add_option("--action-file", action_file, "Action file")->required();
    c->add_option("--rotation-k", rotation_k, "Also check the hermitian rotation identity at this delay");
    c->final_callback([&] {
      action = [&](Report& r) {
        std::string text = read_file(action_file);
        r.digest(text);
        ActionText at = parse_action(text);
        if (!at.star_s || !at.star_t) {
          throw InputError("sdp-build needs star lines for both semigroups");
        }
        InvolutorySdp sdp = build_sdp(at.action, *at.star_s, *at.star_t);
        r.line("size", sdp.product.size());
        r.flag("locally_hermitian", sdp.locally_hermitian);
        bool good = true;
        if (rotation_k) {
          SamplePolicy p;
          p.seed = g.seed;
          good   = law_line(r, "hermitian_rotation", hermitian_rotation_check(sdp, rotation_k, p));
        }
        std::string tab = format_semigroup(sdp.product.base(), &sdp.product.star_table());
        r.line("product", "\n" + tab.substr(0, tab.size() - 1));
        return good ? ok : negative;
      };
    });
  }

  // canonical
  std::size_t     m = 1, partial = 0;
  AlphabetOptions can_alpha;
  {
    auto* c = sub("canonical", "Build and validate the canonical recognizer at (k, m)");
    c->add_option("--k", k, "Context radius; classes are taken at width 2k+1")->capture_default_str();
    c->add_option("--m", m, "Multiset threshold")->capture_default_str();
    c->add_option("--mode", mode_text, "reverse (pooled zeros) or plain")->capture_default_str();
    c->add_option("--partial", partial,
                  "Validate on the first N image elements when the image is larger");
    can_alpha.attach(c);
    c->final_callback([&] {
      action = [&](Report& r) {
        auto al = can_alpha.resolve(r);
        Mode md = mode_of(mode_text);
        r.line("k", k);
        r.line("width", 2 * k + 1);
        r.line("m", m);
        r.line("mode", to_string(md));
        CanonicalRecognizer rec(al, k, m, md == Mode::reverse);
        RecognizerImage     img = partial ? recognizer_image_prefix(rec, partial)
                                          : recognizer_image(rec, g.budget);
        r.flag("image_complete", img.complete);
        SamplePolicy p;
        p.seed              = g.seed;
        CanonicalReport rep = validate_canonical(rec, img, p);
        std::string     s   = format_report(rep);
        s.pop_back();
        std::istringstream lines(s);
        for (std::string l; std::getline(lines, l);) {
          auto colon = l.find(": ");
          r.line(l.substr(0, colon), l.substr(colon + 2));
        }
        r.flag("valid", rep.ok());
        return rep.ok() ? ok : negative;
      };
    });
  }

  // ltt-check / lrtt-check
  auto union_check = [&](Report& r, Mode md) {
    auto [al, d] = lang.resolve(r, g);
    r.line("k", k);
    r.line("t", t);
    r.line("mode", to_string(md));
    UnionCheck u = is_union_of_classes(d, al, k, t, md, g.budget);
    r.flag("union_of_classes", u.is_union);
    r.line("signature_states", u.signature_states);
    if (u.is_union) {
      r.line("certified_k", u.certified_k);
      return ok;
    }
    r.line("witness_accepted", al.str(u.witness->first));
    r.line("witness_rejected", al.str(u.witness->second));
    return negative;
  };
  {
    auto* c = sub("ltt-check", "Is L a union of plain threshold classes at (k, t)?");
    lang.attach(c);
    c->add_option("--k", k, "Factor length")->required();
    c->add_option("--t", t, "Threshold")->required();
    c->final_callback([&] { action = [&](Report& r) { return union_check(r, Mode::plain); }; });
  }
  {
    auto* c = sub("lrtt-check", "Is L a union of threshold classes at (k, t)?");
    lang.attach(c);
    c->add_option("--k", k, "Factor length")->required();
    c->add_option("--t", t, "Threshold")->required();
    c->add_option("--mode", mode_text, "reverse or plain")->capture_default_str();
    c->final_callback([&] {
      action = [&](Report& r) { return union_check(r, mode_of(mode_text)); };
    });
  }

  // lrtt-search
  std::size_t k_max = 3, t_max = 2;
  {
    auto* c = sub("lrtt-search", "Scan (k, t) by k + t, then k, for the first passing cell");
    lang.attach(c);
    c->add_option("--k-max", k_max, "Largest factor length")->capture_default_str();
    c->add_option("--t-max", t_max, "Largest threshold")->capture_default_str();
    c->add_option("--mode", mode_text, "reverse or plain")->capture_default_str();
    c->final_callback([&] {
      action = [&](Report& r) {
        auto [al, d] = lang.resolve(r, g);
        Mode md      = mode_of(mode_text);
        r.line("mode", to_string(md));
        r.line("bounds", cell_name(k_max, t_max));
        SearchResult s = lrtt_search(d, al, k_max, t_max, md, g.budget);
        bool hit_limit = false;
        for (auto const& c : s.cells) {
          std::string v = c.status == SearchCell::Status::yes  ? "yes"
                          : c.status == SearchCell::Status::no ? "no"
                                                               : "limit";
          if (c.witness) {
            v += " " + al.str(c.witness->first) + " " + al.str(c.witness->second);
          }
          hit_limit = hit_limit || c.status == SearchCell::Status::limit;
          r.line("cell " + cell_name(c.k, c.t), v);
        }
        if (s.found) {
          r.line("found", cell_name(s.found->first, s.found->second));
          return ok;
        }
        r.line("found", "none");
        return hit_limit ? limit : negative;
      };
    });
  }

  // fo-eval, fo-lang, fo-consist
  std::string              formula, formula_file;
  std::vector<std::string> env_args;
  std::size_t              maxlen = 6;
  AlphabetOptions          fo_alpha;
  auto attach_formula = [&](CLI::App* c) {
    c->add_option("--formula", formula, "Formula text");
    c->add_option("--formula-file", formula_file, "File holding the formula");
  };
  {
    auto* c = sub("fo-eval", "Evaluate a formula on a word");
    attach_formula(c);
    c->add_option("--word", word, "The word")->required();
    c->add_option("--env", env_args, "Free variable assignment x=POS (1-based)");
    fo_alpha.attach(c);
    c->final_callback([&] {
      action = [&](Report& r) {
        auto al = fo_alpha.resolve(r, word);
        std::map<std::string, std::size_t> env;
        std::vector<std::string>           free;
        for (auto const& e : env_args) {
          auto eq = e.find('=');
          if (eq == std::string::npos) {
            throw InputError("--env expects NAME=POSITION");
          }
          free.push_back(e.substr(0, eq));
          try {
            env[free.back()] = std::stoul(e.substr(eq + 1));
          } catch (std::exception const&) {
            throw InputError("bad position in --env " + e);
          }
        }
        FoFormula f = formula_of(r, al, formula, formula_file, free);
        r.digest(word);
        r.line("formula", to_string(f, al));
        r.line("word", word);
        bool v = evaluate(f, al.word(word), env);
        r.flag("satisfied", v);
        return v ? ok : negative;
      };
    });
  }
  {
    auto* c = sub("fo-lang", "Words up to a length satisfying a sentence");
    attach_formula(c);
    c->add_option("--maxlen", maxlen, "Largest word length")->capture_default_str();
    fo_alpha.attach(c);
    c->final_callback([&] {
      action = [&](Report& r) {
        if (fo_alpha.letters.empty() && fo_alpha.file.empty()) {
          throw InputError("fo-lang needs --letters or --alphabet-file");
        }
        auto      al = fo_alpha.resolve(r);
        FoFormula f  = formula_of(r, al, formula, formula_file);
        r.line("formula", to_string(f, al));
        r.line("maxlen", maxlen);
        auto ws = bounded_language(f, al, maxlen);
        r.line("count", ws.size());
        r.line("words", word_list(al, ws));
        return ok;
      };
    });
  }
  {
    auto* c = sub("fo-consist", "Compare a sentence with a language up to a length");
    attach_formula(c);
    lang.attach(c);
    c->add_option("--maxlen", maxlen, "Largest word length")->capture_default_str();
    c->final_callback([&] {
      action = [&](Report& r) {
        auto [al, d] = lang.resolve(r, g);
        FoFormula f  = formula_of(r, al, formula, formula_file);
        r.line("maxlen", maxlen);
        Consistency cs = consistency_check(f, d, al, maxlen);
        r.flag("agree", cs.agree);
        if (cs.agree) {
          return ok;
        }
        r.line("mismatch", al.str(*cs.mismatch));
        r.flag("formula_accepts", cs.formula_accepts);
        return negative;
      };
    });
  }

  // verify-paper
  int  criterion = 0;
  bool verbose   = false;
  {
    auto* c = sub("verify-paper", "Run the acceptance suite");
    c->add_option("--criterion", criterion, "Run only this criterion (1-11)");
    c->add_flag("--verbose", verbose, "Print details of passing criteria too");
    c->final_callback([&] {
      action = [&](Report& r) {
        AcceptanceOptions opt;
        opt.seed   = g.seed;
        opt.budget = g.budget;
        std::vector<CriterionResult> results;
        if (criterion) {
          results.push_back(run_criterion(criterion, opt));
        } else {
          results = run_acceptance(opt);
        }
        std::size_t passed = 0;
        std::string body;
        for (auto const& res : results) {
          passed += res.passed;
          body += format_result(res, verbose, g.timing);
        }
        r.line("passed", std::to_string(passed) + "/" + std::to_string(results.size()));
        r.line("results", "\n" + body.substr(0, body.size() - 1));
        return passed == results.size() ? ok : negative;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return input_error;
  }

  // The echo is the argument list as given, so identical runs match.
  std::string command;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    bool plain = arg.find_first_of(" \t'\"*|()+") == std::string::npos && !arg.empty();
    command += (i > 1 ? " " : "") + (plain ? arg : "'" + arg + "'");
  }
  Report     report(command);
  auto const start = std::chrono::steady_clock::now();
  int        code  = ok;
  try {
    code = action(report);
  } catch (ResourceLimit const& e) {
    report.line("error", e.what());
    report.line("budget_used", e.used());
    code = limit;
  } catch (InputError const& e) {
    report.line("error", e.what());
    code = input_error;
  } catch (ParseError const& e) {
    report.line("error", e.what());
    report.line("error_position", e.position());
    code = input_error;
  } catch (Error const& e) {
    report.line("error", e.what());
    code = input_error;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << report.text(g, secs);
  return code;
}
