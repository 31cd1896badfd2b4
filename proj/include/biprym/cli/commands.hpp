// Copyright 2026 The biprym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "biprym/cli/examples.hpp"
#include "biprym/cli/report.hpp"
#include "biprym/curve.hpp"
#include "biprym/family.hpp"
#include "biprym/hodge_lattice.hpp"
#include "biprym/torelli.hpp"

#ifndef BIPRYM_VERSION
#define BIPRYM_VERSION "unknown"
#endif

namespace biprym::cli {

inline constexpr std::string_view kVersion = BIPRYM_VERSION;

struct CurveSpec {
  std::array<Rational, 3> s;
  std::array<Rational, 3> t;

  BiellipticCurve curve() const { return BiellipticCurve(s[0], s[1], s[2], t[0], t[1], t[2]); }
};

/// "a,b,c" with each slot an integer or p/q.
inline std::array<Rational, 3> parse_triple(std::string_view text) {
  std::array<Rational, 3> out;
  std::size_t slot = 0;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (slot == 3) throw UndefinedInput("expected three comma-separated values: '" + std::string(text) + "'");
    out[slot++] = parse_rational(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (slot != 3) throw UndefinedInput("expected three comma-separated values: '" + std::string(text) + "'");
  return out;
}

inline CurveSpec parse_curve_spec(std::string_view s, std::string_view t) {
  return CurveSpec{parse_triple(s), parse_triple(t)};
}

inline Json header(const std::string& command) {
  return Json{{"tool", "biprym"}, {"version", std::string(kVersion)}, {"command", command}};
}

inline Json encode(const CurveSpec& spec) {
  Json s = Json::array(), t = Json::array();
  for (const auto& v : spec.s) s.push_back(encode(v));
  for (const auto& v : spec.t) t.push_back(encode(v));
  return Json{{"s", s}, {"t", t}};
}

inline Json cmd_curve_info(const CurveSpec& spec) {
  const BiellipticCurve c = spec.curve();
  const QuarticModel dual = dual_curve(c.model());
  Json d = header("curve-info");
  d["curve"] = encode(spec);
  d["nonsingular"] = true;
  d["tau"] = encode(c.tau());
  d["tau_check"] = encode(c.tau_check());
  d["disc_tau"] = encode(c.disc_tau());
  d["disc_tau_check"] = encode(c.disc_tau_check());
  d["j_base"] = encode(j_base(c));
  d["j_dual_base"] = encode(j_dual_base(c));
  d["model"] = Json{{"S", encode(c.S())}, {"T", encode(c.T())}};
  d["dual_model"] = Json{{"S", encode(dual.S())}, {"T", encode(dual.T())}};
  d["singular_fibers"] = encode(singular_fibers(c));
  return d;
}

inline Json cmd_jfun(const CurveSpec& spec) {
  const BiellipticCurve c = spec.curve();
  const JPair j = j_functions(c);
  const ProjRational inf = ProjRational::infinity();
  Json d = header("jfun");
  d["curve"] = encode(spec);
  d["jF"] = encode(j.jF);
  d["jK"] = encode(j.jK);
  d["jF_at_inf"] = encode(j.jF(inf));
  d["jK_at_inf"] = encode(j.jK(inf));
  d["degree"] = Json{{"jF", j.jF.degree()}, {"jK", j.jK.degree()}};
  d["ramification"] = Json{{"jF", encode(ramification_profile(j.jF))},
                           {"jK", encode(ramification_profile(j.jK))}};
  return d;
}

inline Json cmd_family_member(const CurveSpec& spec, const ProjRational& a) {
  const BiellipticCurve c = spec.curve();
  Json d = header("family-member");
  d["curve"] = encode(spec);
  d["a"] = encode(a);
  try {
    const FamilyMember m = family_member(c, a);
    const BinForm b = branch_quartic(m);
    d["c0"] = encode(m.c0);
    d["c1"] = encode(m.c1);
    d["c2"] = encode(m.c2);
    d["branch_quartic"] = encode(b);
    const JPair j = j_functions(c);
    d["jF"] = encode(j.jF(a));
    d["jK"] = encode(j.jK(a));
  } catch (const RedirectToDual& r) {
    d["redirect"] = "dual";
    d["dual_model"] = Json{{"S", encode(r.dual().S())}, {"T", encode(r.dual().T())}};
  }
  return d;
}

inline Json cmd_fiber(const CurveSpec& spec, const ProjRational& target) {
  const FiberSolution f = period_fiber(spec.curve(), target);
  Json d = header("fiber");
  d["curve"] = encode(spec);
  d["target"] = encode(f.target);
  d["side_F"] = encode(f.side_F);
  d["side_K"] = encode(f.side_K);
  d["shared"] = encode(f.shared);
  d["count"] = f.side_F.size() + f.side_K.size();
  d["distinct"] = f.side_F.size() + f.side_K.size() - f.shared.size();
  return d;
}

inline Json cmd_nodes(const CurveSpec& spec, std::uint64_t seed) {
  const std::vector<NodePair> nodes = find_nodes(spec.curve(), seed);
  Json d = header("nodes");
  d["curve"] = encode(spec);
  Json a = Json::array();
  for (const auto& n : nodes) a.push_back(encode(n));
  d["nodes"] = a;
  d["count"] = nodes.size();
  return d;
}

inline Json cmd_contains(const CurveSpec& spec, const ProjRational& u, const ProjRational& v) {
  const std::vector<ProjRational> w = image_witnesses(spec.curve(), u, v);
  Json d = header("contains");
  d["curve"] = encode(spec);
  d["point"] = Json::array({encode(u), encode(v)});
  d["contains"] = !w.empty();
  d["witnesses"] = encode(w);
  return d;
}

inline Json cmd_symmetry(const CurveSpec& spec) {
  const BiellipticCurve c = spec.curve();
  Json d = header("symmetry");
  d["curve"] = encode(spec);
  d["image_symmetry"] = image_symmetry(c);
  d["common_ramification"] = common_ramification(c);
  return d;
}

/// Throws ConstructionInconsistency when an identity fails.
inline Json cmd_lattice_verify() {
  const Overlattices o = build_overlattices();
  Json d = header("lattice-verify");
  d["gram_matches_printed"] = o.passed("gram_matches_printed");
  d["gram"] = encode(computed_gram());
  Json checks = Json::object();
  for (const auto& c : o.checks) checks[c.name] = c.passed;
  d["checks"] = checks;
  Json self = Json::object();
  for (const auto& c : curve_classes()) self[c.name] = encode(half_pair(c.ambient, c.ambient));
  d["self_intersections"] = self;
  d["c_Y"] = encode(o.c_Y);
  d["c_Y_norm"] = encode(half_pair(o.c_Y, o.c_Y));
  d["K_Y_dot_Gamma_1"] = encode(half_pair(curve_classes()[0].ambient, curve_classes()[2].ambient));
  d["index_Y"] = to_string(o.index_Y);
  d["index_A"] = to_string(o.index_A);
  d["ranks"] = Json{{"H2Y", o.H2Y.rank()},       {"H_Y", o.H_Y.rank()},
                    {"H_prime_Y", o.H_prime_Y.rank()}, {"H2A", o.H2A.rank()},
                    {"H_A", o.H_A.rank()},       {"H_prime_A", o.H_prime_A.rank()}};
  Json pi = Json::array();
  for (const auto& e : o.pi_map) {
    pi.push_back(Json{{"name", e.name},
                      {"y_ambient", encode(e.y_ambient)},
                      {"a_element", encode(e.a_element)},
                      {"matches", e.a_ambient == e.y_ambient}});
  }
  d["pi_correspondence"] = pi;
  d["compare_surface_vs_abelian_plus_H"] = encode(invariant_compare(o.H2Y, o.H2A_plus_H));
  d["compare_generic_ns"] = encode(invariant_compare(generic_ns_y(), generic_ns_a()));
  return d;
}

struct SampleRow {
  ProjRational a;
  ProjRational jF;
  ProjRational jK;
};

/// a = from + k (to - from) / steps for k = 0..steps, then a = inf.
inline std::vector<SampleRow> sample_rows(const CurveSpec& spec, const Rational& from, const Rational& to,
                                          int steps) {
  if (steps < 1) throw UndefinedInput("sample: steps must be positive");
  const JPair j = j_functions(spec.curve());
  std::vector<SampleRow> rows;
  for (int k = 0; k <= steps; ++k) {
    const ProjRational a(Rational(from + (to - from) * Rational(k) / Rational(steps)));
    rows.push_back({a, j.jF(a), j.jK(a)});
  }
  const ProjRational inf = ProjRational::infinity();
  rows.push_back({inf, j.jF(inf), j.jK(inf)});
  return rows;
}

inline std::string sample_csv(const std::vector<SampleRow>& rows) {
  std::ostringstream out;
  out << "a,jF,jK\n";
  for (const auto& r : rows) out << to_string(r.a) << ',' << to_string(r.jF) << ',' << to_string(r.jK) << '\n';
  return out.str();
}

inline Json cmd_sample(const CurveSpec& spec, const std::vector<SampleRow>& rows) {
  Json d = header("sample");
  d["curve"] = encode(spec);
  Json a = Json::array();
  for (const auto& r : rows) a.push_back(Json{{"a", encode(r.a)}, {"jF", encode(r.jF)}, {"jK", encode(r.jK)}});
  d["rows"] = a;
  return d;
}

inline Json cmd_examples(const std::vector<ExampleCheck>& checks) {
  Json d = header("examples");
  Json a = Json::array();
  int pass = 0, fail = 0, dev = 0;
  for (const auto& c : checks) {
    a.push_back(Json{{"example", c.example}, {"assertion", c.assertion}, {"status", c.status}, {"detail", c.detail}});
    if (c.status == "PASS") ++pass;
    else if (c.status == "FAIL") ++fail;
    else ++dev;
  }
  d["checks"] = a;
  d["summary"] = Json{{"PASS", pass}, {"FAIL", fail}, {"EXPECTED-DEVIATION", dev}};
  return d;
}

inline std::string examples_text(const std::vector<ExampleCheck>& checks) {
  std::string out;
  for (const auto& c : checks) {
    out += c.status + " " + c.example + " " + c.assertion;
    if (c.status != "PASS" && !c.detail.empty()) out += " [" + c.detail + "]";
    out += "\n";
  }
  return out;
}

}  // namespace biprym::cli
