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


// One line per acceptance criterion. Exit status is the number of failures.

#include <algorithm>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "biprym/cli/examples.hpp"
#include "biprym/curve.hpp"
#include "biprym/elliptic.hpp"
#include "biprym/family.hpp"
#include "biprym/hodge_lattice.hpp"
#include "biprym/torelli.hpp"
#include "support.hpp"

namespace {

using namespace biprym;
using cli::detail::q;

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& note = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
  if (!note.empty()) std::cout << " (" << note << ")";
  std::cout << '\n';
  if (!ok) ++failures;
}

std::set<ProjRational> as_set(const std::vector<ProjRational>& v) { return {v.begin(), v.end()}; }

bool criterion1() {
  const std::vector<std::pair<BiellipticCurve, JPair>> cases = {
      {cli::node_curve(), cli::printed_j_node_curve()},
      {cli::fiber_curve(), cli::printed_j_fiber_curve()},
      {cli::selfdual_curve(), cli::printed_j_selfdual_curve()}};
  bool ok = true;
  for (const auto& [c, printed] : cases) {
    const JPair j = j_functions(c);
    ok = ok && j.jF.num() == printed.jF.num() && j.jF.den() == printed.jF.den() &&
         j.jK.num() == printed.jK.num() && j.jK.den() == printed.jK.den();
  }
  return ok;
}

bool criterion2() {
  for (const auto& n : find_nodes(cli::node_curve())) {
    if (n.a1 == q(-1, 3) && n.a2 == q(5, 6)) return n.value == std::make_pair(q(338688, 169), q(148176, 25));
  }
  return false;
}

bool criterion3() {
  const BiellipticCurve c = cli::node_curve();
  return !image_contains(c, q(148176, 25), q(48384)) &&
         image_contains(c, q(48384), q(148176, 25)) &&
         image_witnesses(c, q(48384), q(148176, 25)) == std::vector<ProjRational>{ProjRational::infinity()};
}

bool criterion4() {
  const BiellipticCurve c = cli::fiber_curve();
  const FiberSolution f = period_fiber(c, q(21952, 9));
  const std::set<ProjRational> side_f{ProjRational::infinity(), q(-5), q(-3, 2), q(3, 5), q(-3, 7), q(-15, 7)};
  const std::set<ProjRational> side_k{q(-1), q(9), q(-1, 3), q(3, 5), q(9, 5), q(3, 11)};
  const JPair j = j_functions(c);
  bool evaluated = true;
  for (const auto& a : side_f) evaluated = evaluated && j.jF(a) == q(21952, 9);
  for (const auto& a : side_k) evaluated = evaluated && j.jK(a) == q(21952, 9);
  return evaluated && f.side_F.size() == 6 && f.side_K.size() == 6 && as_set(f.side_F) == side_f &&
         as_set(f.side_K) == side_k;
}

bool criterion5() {
  const JPair j = j_functions(cli::fiber_curve());
  return j.jF(q(-3, 2)) == q(21952, 9) && j.jK(q(-3, 2)) == q(148176, 25) && j.jF(q(9)) == q(148176, 25) &&
         j.jK(q(9)) == q(21952, 9);
}

bool criterion6() {
  const BiellipticCurve c = cli::selfdual_curve();
  bool node = false;
  for (const auto& n : find_nodes(c)) {
    if (n.a1 == q(-3, 4) && n.a2 == q(21, 11)) {
      node = n.value == std::make_pair(q(3796416, 1225), q(3796416, 1225));
    }
  }
  int deviations = 0;
  for (const auto& e : cli::replay_examples()) {
    if (e.example == cli::kSelfDualCurve && e.status == "EXPECTED-DEVIATION") ++deviations;
  }
  return image_symmetry(c) && node && deviations == 1;
}

bool criterion7() {
  const QMatrix gram = computed_gram();
  const IntMatrix printed = printed_gram();
  int equal = 0;
  for (std::size_t i = 0; i < 14; ++i) {
    for (std::size_t k = 0; k < 14; ++k) equal += gram(i, k) == Rational(printed(i, k)) ? 1 : 0;
  }
  const Overlattices o = build_overlattices();
  const std::vector<CurveClass> classes = curve_classes();
  const std::vector<Rational> quadruple{half_pair(classes[0].ambient, classes[0].ambient),
                                        half_pair(classes[1].ambient, classes[1].ambient),
                                        half_pair(classes[2].ambient, classes[2].ambient),
                                        half_pair(classes[6].ambient, classes[6].ambient)};
  const bool ha_hy = lattice_contains(o.H_A.generators(), o.H_Y.generators()) &&
                     lattice_contains(o.H_Y.generators(), o.H_A.generators());
  const bool hpa_h2y = lattice_contains(o.H_prime_A.generators(), o.H2Y.generators()) &&
                       lattice_contains(o.H2Y.generators(), o.H_prime_A.generators());
  return equal == 196 && half_pair(o.c_Y, o.c_Y) == 4 &&
         quadruple == std::vector<Rational>{Rational(0), Rational(-4), Rational(-1), Rational(-2)} && ha_hy &&
         hpa_h2y && o.index_Y == 2 && o.index_A == 2;
}

bool curve_identities(const BiellipticCurve& c, testing::Gen& g) {
  const QuarticModel m = c.model();
  const JPair j = j_functions(c);
  const ProjRational inf = ProjRational::infinity();
  bool ok = dual_curve(dual_curve(m)) == m;
  ok = ok && family_polynomials(c).c0 == -c.tau_check();
  ok = ok && j.jK(inf) == j_base(c) && j.jF(inf) == j_dual_base(c);
  ok = ok && j.jF.degree() == 6 && j.jK.degree() == 6;
  ok = ok && ramification_profile(j.jF).total_branching == 10 && ramification_profile(j.jK).total_branching == 10;
  ok = ok && square_free_part(j.jF.den()) == c.tau_check() && square_free_part(j.jK.den()) == c.tau();
  int evaluated = 0;
  while (ok && evaluated < 10) {
    const Rational x = g.rational(20, 7);
    if (c.tau()(x) == 0 || c.tau_check()(x) == 0) continue;
    const ProjRational a(x);
    const FamilyMember f = family_member(c, a);
    const BinForm branch = branch_quartic(f);
    ok = j_of_binary_quartic(f.c2) == j.jK(a) && j_of_binary_quartic(branch) == j.jF(a);
    ++evaluated;
  }
  return ok;
}

bool lambda_paths(testing::Gen& g) {
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 20; ++trial) {
    const auto e = testing::marked_curve(g);
    if (!e) continue;
    const auto& m = e->marked();
    ECPoint p = cubic_group_add(*e, m[0], m[1]);
    p = cubic_group_add(*e, p, m[1]);
    if (!p) continue;
    try {
      if (lambda_closed_form(*e, *p) != lambda_cross_ratio(*e, *p)) return false;
      lambda_map(*e, *p);
    } catch (const IndeterminatePoint&) {
      continue;
    }
    ++checked;
  }
  return checked == 20;
}

bool criterion8(int& curves) {
  testing::Gen g(20261016);
  bool ok = true;
  for (curves = 0; curves < 24; ++curves) ok = ok && curve_identities(g.curve(), g);
  return ok && lambda_paths(g);
}

template <class F>
bool guarded(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    std::cout << "  exception: " << e.what() << '\n';
    return false;
  }
}

}  // namespace

int main() {
  report(1, guarded(criterion1), "jF and jK of the three example curves equal the tabulated rational functions");
  report(2, guarded(criterion2), "node (-1/3, 5/6) of (0,0,1;-6,5,0) with value (338688/169, 148176/25)");
  report(3, guarded(criterion3), "(148176/25, 48384) not in the image; swapped pair has witness a = inf");
  report(4, guarded(criterion4), "twelve-point fiber of (1,-1,0;2,-3,0) over 21952/9 as exact sets");
  report(5, guarded(criterion5), "j(-3/2) and j(9) on (1,-1,0;2,-3,0) cross over");
  report(6, guarded(criterion6), "self-dual image and node (-3/4, 21/11) of (1,-2,3;-4,3,0)",
         "printed parameter -4/3 reported as EXPECTED-DEVIATION");
  report(7, guarded(criterion7), "14x14 Gram fixture, c_Y^2 = 4, (0,-4,-1,-2), overlattice equalities, glue indices 2");
  int curves = 0;
  const bool c8 = guarded([&] { return criterion8(curves); });
  report(8, c8, "structural identities on random nonsingular curves", std::to_string(curves) + " curves");
  report(9, true, "global Torelli statements, transcendental lattice and surface cohomology are excluded",
         "not reproduced; the exact witnesses of criteria 2 to 7 stand in");
  return failures;
}
