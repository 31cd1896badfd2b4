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

#include <json.hpp>

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "biprym/binform.hpp"
#include "biprym/curve.hpp"
#include "biprym/family.hpp"
#include "biprym/lattice.hpp"
#include "biprym/poly.hpp"
#include "biprym/ratfn.hpp"
#include "biprym/rational.hpp"
#include "biprym/torelli.hpp"

namespace biprym::cli {

using Json = nlohmann::ordered_json;

inline Json encode(const Rational& q) { return to_string(q); }

inline Json encode(const ProjRational& p) { return p.is_infinite() ? "inf" : to_string(p.value()); }

/// Coefficients lowest degree first; the zero polynomial is [].
inline Json encode(const UniPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(encode(c));
  return a;
}

inline Json encode(const BinForm& f) {
  Json a = Json::array();
  for (const auto& c : f.coefficients()) a.push_back(encode(c));
  return Json{{"degree", f.degree()}, {"coefficients", a}};
}

inline Json encode(const RatFn& r) {
  return Json{{"num", encode(r.num())}, {"den", encode(r.den())}, {"text", to_string(r)}};
}

inline Json encode(const QVec& v) {
  Json a = Json::array();
  for (const auto& c : v.c) a.push_back(encode(c));
  return a;
}

inline Json encode(const std::vector<ProjRational>& v) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(encode(p));
  return a;
}

inline Json encode(const QMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(encode(row_vector(m, i)));
  return a;
}

inline Json encode(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(to_string(z));
  return a;
}

inline Json encode(const RamificationProfile& p) {
  Json fibers = Json::array();
  for (const auto& f : p.fibers) {
    Json pts = Json::array();
    for (const auto& pt : f.points) {
      Json e;
      if (const auto* q = std::get_if<ProjRational>(&pt.where)) {
        e["point"] = encode(*q);
      } else {
        e["factor"] = encode(std::get<UniPoly>(pt.where));
      }
      e["index"] = pt.index;
      pts.push_back(e);
    }
    fibers.push_back(Json{{"value", encode(f.value)}, {"points", pts}});
  }
  return Json{{"fibers", fibers},
              {"total_branching", p.total_branching},
              {"point_count", p.point_count},
              {"unresolved_branching", p.unresolved_branching}};
}

inline Json encode(const FiberReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j;
    if (const auto* q = std::get_if<Rational>(&e.location)) {
      j["location"] = encode(*q);
    } else {
      j["factor"] = encode(std::get<UniPoly>(e.location));
    }
    j["type"] = to_string(e.type);
    entries.push_back(j);
  }
  return Json{{"entries", entries}, {"count_sigma", r.count_sigma}};
}

inline Json encode(const NodePair& n) {
  return Json{{"a1", encode(n.a1)},
              {"a2", encode(n.a2)},
              {"value", Json::array({encode(n.value.first), encode(n.value.second)})}};
}

inline Json encode(const Signature& s) {
  return Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

inline Json encode(const DiscGroupData& d) {
  Json norms = Json::array();
  for (const auto& q : d.glue_norms) norms.push_back(encode(q));
  Json counts = Json::object();
  for (const auto& [q, n] : d.norm_counts) counts[to_string(q)] = n;
  Json j{{"rank", d.rank},
         {"signature", encode(d.signature)},
         {"determinant", to_string(d.determinant)},
         {"even", d.even},
         {"invariant_factors", encode(d.invariant_factors)},
         {"glue_norms", norms}};
  if (d.norm_counts_complete) j["norm_counts"] = counts;
  return j;
}

inline Json encode(const InvariantReport& r) {
  return Json{{"first", encode(r.first)},
              {"second", encode(r.second)},
              {"differing", r.differing},
              {"verdict", r.verdict}};
}

// Decoding.

inline Rational decode_rational(const Json& j) {
  if (!j.is_string()) throw UndefinedInput("expected a rational string");
  return parse_rational(j.get<std::string>());
}

inline ProjRational decode_proj(const Json& j) {
  if (!j.is_string()) throw UndefinedInput("expected a rational string or \"inf\"");
  return parse_proj_rational(j.get<std::string>());
}

inline UniPoly decode_poly(const Json& j) {
  if (!j.is_array()) throw UndefinedInput("expected a coefficient array");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(decode_rational(e));
  return UniPoly(std::move(c));
}

inline BinForm decode_binform(const Json& j) {
  std::vector<Rational> c;
  for (const auto& e : j.at("coefficients")) c.push_back(decode_rational(e));
  return BinForm(j.at("degree").get<int>(), std::move(c));
}

inline RatFn decode_ratfn(const Json& j) { return RatFn(decode_poly(j.at("num")), decode_poly(j.at("den"))); }

inline QVec decode_qvec(const Json& j) {
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(decode_rational(e));
  return QVec(std::move(c));
}

inline std::vector<ProjRational> decode_proj_list(const Json& j) {
  std::vector<ProjRational> out;
  for (const auto& e : j) out.push_back(decode_proj(e));
  return out;
}

inline NodePair decode_node(const Json& j) {
  const Json& v = j.at("value");
  return NodePair{decode_proj(j.at("a1")), decode_proj(j.at("a2")), {decode_proj(v.at(0)), decode_proj(v.at(1))}};
}

}  // namespace biprym::cli
