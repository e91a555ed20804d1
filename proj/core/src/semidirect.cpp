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


#include "invsg/semidirect.hpp"

#include <sstream>

#include "invsg/errors.hpp"

namespace invsg {

  char const* to_string(ActionLaw law) noexcept {
    switch (law) {
      case ActionLaw::left_distributive:
        return "left_distributive";
      case ActionLaw::left_compatible:
        return "left_compatible";
      case ActionLaw::right_distributive:
        return "right_distributive";
      case ActionLaw::right_compatible:
        return "right_compatible";
      case ActionLaw::bilateral:
        return "bilateral";
      case ActionLaw::star_s_involutive:
        return "star_s_involutive";
      case ActionLaw::star_s_anti:
        return "star_s_anti";
      case ActionLaw::involutory:
        return "involutory";
      case ActionLaw::two_sided_involutory:
        return "two_sided_involutory";
      case ActionLaw::locally_hermitian:
        return "locally_hermitian";
      case ActionLaw::ese_hermitian:
        return "ese_hermitian";
      case ActionLaw::rotation:
        return "rotation";
    }
    return "unknown";
  }

  namespace {

    struct Section {
      std::string name;
      std::string body;
      std::size_t line;
    };

    // Splits the file at lines starting with `size:`, `left:` or `right:`.
    std::vector<Section> split_sections(std::string_view text) {
      std::vector<Section> out;
      std::istringstream   in{std::string(text)};
      std::string          line;
      for (std::size_t n = 0; std::getline(in, line); ++n) {
        auto hash = line.find('#');
        if (hash != std::string::npos) {
          line.erase(hash);
        }
        std::istringstream ls(line);
        std::string        first;
        if (!(ls >> first)) {
          continue;
        }
        if (first == "size:" || first == "left:" || first == "right:") {
          out.push_back({first, {}, n});
        } else if (out.empty()) {
          throw ParseError("action: unexpected '" + first + "'", n);
        }
        out.back().body += line + "\n";
      }
      return out;
    }

    std::vector<Elem> read_indices(Section const& sec,
                                   std::size_t    count,
                                   std::size_t    bound) {
      std::istringstream in(sec.body);
      std::string        tok;
      in >> tok;  // the keyword
      std::vector<Elem> out;
      while (in >> tok) {
        std::size_t used = 0;
        long long   v    = -1;
        try {
          v = std::stoll(tok, &used);
        } catch (std::logic_error const&) {
        }
        if (v < 0 || used != tok.size() || static_cast<std::size_t>(v) >= bound) {
          throw ParseError("action: bad index '" + tok + "' in " + sec.name, sec.line);
        }
        out.push_back(static_cast<Elem>(v));
      }
      if (out.size() != count) {
        throw ParseError("action: " + sec.name + " needs " + std::to_string(count)
                             + " entries, got " + std::to_string(out.size()),
                         sec.line);
      }
      return out;
    }

  }  // namespace

  ActionText parse_action(std::string_view text) {
    auto secs = split_sections(text);
    if (secs.size() != 4 || secs[0].name != "size:" || secs[1].name != "size:"
        || secs[2].name != "left:" || secs[3].name != "right:") {
      throw ParseError("action: expected two semigroups, then left: and right:", 0);
    }
    ActionText out;
    auto       s = parse_semigroup(secs[0].body);
    auto       t = parse_semigroup(secs[1].body);
    out.action.s = std::move(s.semigroup);
    out.action.t = std::move(t.semigroup);
    out.star_s   = std::move(s.star);
    out.star_t   = std::move(t.star);
    std::size_t const ns = out.action.s.size(), nt = out.action.t.size();
    out.action.left  = read_indices(secs[2], nt * ns, ns);
    out.action.right = read_indices(secs[3], ns * nt, ns);
    return out;
  }

  std::string format_action(ActionText const& a) {
    std::string out = format_semigroup(a.action.s, a.star_s ? &*a.star_s : nullptr);
    out += format_semigroup(a.action.t, a.star_t ? &*a.star_t : nullptr);
    std::size_t const ns = a.action.s.size(), nt = a.action.t.size();
    out += "left:\n";
    for (std::size_t x = 0; x < nt; ++x) {
      for (std::size_t y = 0; y < ns; ++y) {
        out += (y ? " " : "") + std::to_string(a.action.left[x * ns + y]);
      }
      out += "\n";
    }
    out += "right:\n";
    for (std::size_t y = 0; y < ns; ++y) {
      for (std::size_t x = 0; x < nt; ++x) {
        out += (x ? " " : "") + std::to_string(a.action.right[y * nt + x]);
      }
      out += "\n";
    }
    return out;
  }

  std::vector<Elem> DenseActionModel::carrier() const {
    std::vector<Elem> out(a_.s.size());
    for (Elem x = 0; x < out.size(); ++x) {
      out[x] = x;
    }
    return out;
  }

  namespace {

    void check_shape(BilateralAction const& a) {
      if (a.left.size() != a.s.size() * a.t.size()
          || a.right.size() != a.s.size() * a.t.size()) {
        throw ArgumentError("action tables have the wrong size");
      }
      for (Elem e : a.left) {
        if (e >= a.s.size()) {
          throw ArgumentError("left action entry out of range");
        }
      }
      for (Elem e : a.right) {
        if (e >= a.s.size()) {
          throw ArgumentError("right action entry out of range");
        }
      }
    }

    void check_stars(BilateralAction const&   a,
                     std::vector<Elem> const& star_s,
                     std::vector<Elem> const& star_t) {
      if (auto v = validate_involution(a.s, star_s)) {
        throw PreconditionError("star on S: " + describe(a.s, star_s, *v));
      }
      if (auto v = validate_involution(a.t, star_t)) {
        throw PreconditionError("star on T: " + describe(a.t, star_t, *v));
      }
    }

    template <typename F>
    std::optional<ActionViolation> run_dense(BilateralAction const&   a,
                                             std::vector<Elem> const* star_s,
                                             std::vector<Elem> const* star_t,
                                             F&&                      f) {
      check_shape(a);
      DenseActionModel  m(a, star_s, star_t);
      std::vector<Elem> carrier = m.carrier();
      SamplePolicy      all;
      all.exhaustive_limit = static_cast<std::size_t>(-1);
      auto v = f(m, std::span<Elem const>(carrier), all);
      if (v) {
        explain(m, std::span<Elem const>(carrier), *v);
      }
      return v;
    }

  }  // namespace

  std::optional<ActionViolation> validate_action(BilateralAction const& a) {
    return run_dense(a, nullptr, nullptr, [](auto const& m, auto c, auto const& p) {
      return check_action_laws(m, c, p);
    });
  }

  std::optional<ActionViolation> validate_involutory(BilateralAction const&   a,
                                                     std::vector<Elem> const& star_s,
                                                     std::vector<Elem> const& star_t) {
    check_stars(a, star_s, star_t);
    return run_dense(a, &star_s, &star_t, [](auto const& m, auto c, auto const& p) {
      return check_involutory(m, c, p);
    });
  }

  std::optional<ActionViolation> two_sided_involutory_check(BilateralAction const&   a,
                                                             std::vector<Elem> const& star_s,
                                                             std::vector<Elem> const& star_t) {
    check_stars(a, star_s, star_t);
    return run_dense(a, &star_s, &star_t, [](auto const& m, auto c, auto const&) {
      return check_two_sided_involutory(m, c);
    });
  }

  std::optional<ActionViolation> is_locally_hermitian(BilateralAction const&   a,
                                                      std::vector<Elem> const& star_s,
                                                      std::vector<Elem> const& star_t) {
    check_stars(a, star_s, star_t);
    return run_dense(a, &star_s, &star_t, [](auto const& m, auto c, auto const&) {
      return check_locally_hermitian(m, c);
    });
  }

  InvolutorySdp build_sdp(BilateralAction   a,
                          std::vector<Elem> star_s,
                          std::vector<Elem> star_t) {
    if (auto v = validate_action(a)) {
      throw PreconditionError("invalid action: " + v->detail);
    }
    if (auto v = validate_involutory(a, star_s, star_t)) {
      throw PreconditionError("action is not involutory: " + v->detail);
    }
    std::size_t const ns = a.s.size(), nt = a.t.size(), n = ns * nt;
    std::vector<Elem> table(n * n), star(n);
    std::vector<std::string> labels(n);
    for (Elem s1 = 0; s1 < ns; ++s1) {
      for (Elem t1 = 0; t1 < nt; ++t1) {
        Elem const x = s1 * nt + t1;
        star[x]      = star_s[s1] * nt + star_t[t1];
        labels[x]    = "(" + a.s.label(s1) + "," + a.t.label(t1) + ")";
        for (Elem s2 = 0; s2 < ns; ++s2) {
          for (Elem t2 = 0; t2 < nt; ++t2) {
            Elem s = a.s.mul(a.act_right(s1, t2), a.act_left(t1, s2));
            table[x * n + s2 * nt + t2] = s * nt + a.t.mul(t1, t2);
          }
        }
      }
    }
    InvolutorySdp out{std::move(a),
                      std::move(star_s),
                      std::move(star_t),
                      InvolutionSemigroup(FiniteSemigroup::from_table(n, std::move(table),
                                                                      std::move(labels)),
                                          std::move(star)),
                      false};
    out.locally_hermitian
        = !is_locally_hermitian(out.action, out.star_s, out.star_t).has_value();
    return out;
  }

  std::optional<ActionViolation>
  hermitian_rotation_check(InvolutorySdp const& sdp,
                           std::size_t          k,
                           SamplePolicy const&  policy) {
    DenseActionModel  m(sdp.action, &sdp.star_s, &sdp.star_t);
    std::vector<Elem> carrier = m.carrier();
    auto v = check_hermitian_rotation(m, std::span<Elem const>(carrier), k, policy);
    if (v) {
      explain(m, std::span<Elem const>(carrier), *v);
    }
    return v;
  }

}  // namespace invsg
