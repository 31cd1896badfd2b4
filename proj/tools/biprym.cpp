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


#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "biprym/cli/commands.hpp"

namespace {

using namespace biprym;
using namespace biprym::cli;

struct Options {
  std::string s;
  std::string t;
  std::string target;
  std::string a;
  std::string u;
  std::string v;
  std::string from = "-2";
  std::string to = "2";
  int steps = 8;
  std::uint64_t seed = 0;
  std::string format = "json";
};

void add_curve(CLI::App* cmd, Options& o) {
  cmd->add_option("--s", o.s, "S coefficients s0,s1,s2")->required()->allow_extra_args(false);
  cmd->add_option("--t", o.t, "T coefficients t1,t2,t3")->required()->allow_extra_args(false);
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bielliptic Prym computations over Q"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;

  auto* info = app.add_subcommand("curve-info", "Dual cubic, discriminants, j values, singular fibers");
  add_curve(info, o);
  auto* jfun = app.add_subcommand("jfun", "The j-functions of the pencil and their ramification");
  add_curve(jfun, o);
  auto* member = app.add_subcommand("family-member", "Pencil member at parameter a");
  add_curve(member, o);
  member->add_option("--a", o.a, "Parameter (rational or inf)")->required();
  auto* fiber = app.add_subcommand("fiber", "Parameters with a prescribed j value on either side");
  add_curve(fiber, o);
  fiber->add_option("--target", o.target, "Target j value (rational or inf)")->required();
  auto* nodes = app.add_subcommand("nodes", "Rational nodes of the period image");
  add_curve(nodes, o);
  nodes->add_option("--seed", o.seed, "Seed for chart randomization");
  auto* contains = app.add_subcommand("contains", "Membership of (u, v) in the period image");
  add_curve(contains, o);
  contains->add_option("--u", o.u, "First coordinate")->required();
  contains->add_option("--v", o.v, "Second coordinate")->required();
  auto* symmetry = app.add_subcommand("symmetry", "Swap symmetry of the image and common ramification");
  add_curve(symmetry, o);
  auto* lattice = app.add_subcommand("lattice-verify", "Check the lattice identities");
  auto* sample = app.add_subcommand("sample", "Tabulate (jF, jK) over a range of parameters");
  add_curve(sample, o);
  sample->add_option("--from", o.from, "Start of range");
  sample->add_option("--to", o.to, "End of range");
  sample->add_option("--steps", o.steps, "Number of intervals");
  sample->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  auto* examples = app.add_subcommand("examples", "Replay the worked examples");
  examples->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*lattice) {
      emit(cmd_lattice_verify());
      return 0;
    }
    if (*examples) {
      const auto checks = replay_examples();
      if (o.format == "text") std::cout << examples_text(checks);
      else emit(cmd_examples(checks));
      for (const auto& c : checks) {
        if (c.status == "FAIL") return 2;
      }
      return 0;
    }
    const CurveSpec spec = parse_curve_spec(o.s, o.t);
    if (*info) emit(cmd_curve_info(spec));
    else if (*jfun) emit(cmd_jfun(spec));
    else if (*member) emit(cmd_family_member(spec, parse_proj_rational(o.a)));
    else if (*fiber) emit(cmd_fiber(spec, parse_proj_rational(o.target)));
    else if (*nodes) emit(cmd_nodes(spec, o.seed));
    else if (*contains) emit(cmd_contains(spec, parse_proj_rational(o.u), parse_proj_rational(o.v)));
    else if (*symmetry) emit(cmd_symmetry(spec));
    else if (*sample) {
      const auto rows = sample_rows(spec, parse_rational(o.from), parse_rational(o.to), o.steps);
      if (o.format == "csv") std::cout << sample_csv(rows);
      else emit(cmd_sample(spec, rows));
    }
    return 0;
  } catch (const ConstructionInconsistency& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
