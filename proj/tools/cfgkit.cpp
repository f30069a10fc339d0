// Copyright 2026 The cfgkit Authors
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

// cfgkit command-line front end.
//
// Exit codes: 0 accepted/true, 1 rejected/false, 2 invalid input, 3 internal error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "cfgkit/cfgkit.hpp"
#include "cfgkit/report.hpp"

namespace {

using namespace cfgkit;

enum Exit { kAccept = 0, kReject = 1, kInvalid = 2, kInternal = 3 };

struct Common {
  std::string input = "-";
  std::string output = "-";
  std::string format = "text";
  std::size_t cap = kDefaultCap;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const Common& c, const std::string& text) {
  if (c.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw InvalidInput("cannot write " + c.output);
  out << text;
}

bool machine(const Common& c) { return c.format == "machine"; }
std::string dump(const Json& j) { return j.dump(2) + "\n"; }

CoverDag load_poset(const Common& c) {
  std::vector<std::string> warnings;
  CoverDag dag = parse_poset(read_file(c.input), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return dag;
}

int run_check_uld(const Common& c) {
  Lattice lat = validate_lattice(load_poset(c));
  UldCertificate cert = check_uld(lat);
  if (machine(c)) {
    Json j = Json::object();
    j["uld"] = true;
    j["height"] = cert.height();
    Json labels = Json::array();
    const auto covers = lat.dag().covers();
    for (std::size_t k = 0; k < covers.size(); ++k)
      labels.push_back(Json::array({lat.name(covers[k].first), lat.name(covers[k].second), lat.name(cert.labels()[k])}));
    j["labels"] = labels;
    write_output(c, dump(j));
  } else {
    std::ostringstream out;
    out << "ULD lattice: " << lat.size() << " elements, height " << cert.height() << "\n";
    const auto covers = lat.dag().covers();
    for (std::size_t k = 0; k < covers.size(); ++k)
      out << lat.name(covers[k].first) << " " << lat.name(covers[k].second) << "  # " << lat.name(cert.labels()[k])
          << "\n";
    write_output(c, out.str());
  }
  return kAccept;
}

int run_irreducibles(const Common& c) {
  UldAnalysis a = analyze(load_poset(c));
  const Lattice& l = a.lattice;
  std::vector<ElementId> J;
  for (std::size_t j : l.join_irreducibles()) J.push_back(l.name(j));
  if (machine(c)) {
    Json j = to_json(a.context);
    j["join_irreducibles"] = J;
    j["distributive"] = is_distributive(l);
    write_output(c, dump(j));
    return kAccept;
  }
  std::ostringstream out;
  auto list = [&](const std::vector<ElementId>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : " ") + x;
    return "{" + s + "}";
  };
  out << "M = " << list(a.context.meet_irreducibles) << "\n";
  out << "J = " << list(J) << "\n";
  out << "distributive: " << (is_distributive(l) ? "yes" : "no") << "\n";
  for (const auto& e : a.context.entries) {
    out << e.m << ": U = " << list(e.upper) << ", L = " << list(e.lower) << "\n";
    for (const auto& [x, miss] : e.missing) out << "  M \\ M_" << x << " = " << list(miss) << "\n";
  }
  write_output(c, out.str());
  return kAccept;
}

int run_systems(const Common& c, const std::string& which) {
  UldAnalysis a = analyze(load_poset(c));
  std::vector<std::pair<std::string, IneqSystem>> systems;
  if (which == "E" || which == "all")
    for (const auto& m : a.context.meet_irreducibles) systems.emplace_back("E(" + m + ")", build_threshold_system(a.context, m));
  if (which == "Omega" || which == "all") systems.emplace_back("Omega", build_joint_system(a.context));
  if (machine(c)) {
    Json j = Json::object();
    for (const auto& [name, sys] : systems) {
      Json rows = Json::array();
      for (const auto& row : sys.constraints()) rows.push_back(row.str());
      j[name] = rows;
    }
    write_output(c, dump(j));
  } else {
    std::string out;
    for (const auto& [name, sys] : systems) out += "# " + name + "\n" + sys.str();
    write_output(c, out);
  }
  return kAccept;
}

int run_recognize(const Common& c, const std::string& model, bool verify) {
  UldAnalysis a = analyze(load_poset(c));
  std::vector<Model> models;
  if (model == "cfg" || model == "all") models.push_back(Model::CFG);
  if (model == "asm" || model == "all") models.push_back(Model::ASM);
  if (model == "acfg" || model == "all") models.push_back(Model::ACFG);
  bool all_accepted = true;
  Json results = Json::array();
  std::string text;
  for (Model m : models) {
    Recognition r = recognize(m, a.context);
    Json j = to_json(r);
    text += describe(r);
    if (accepted(r) && verify) {
      VerificationReport rep = verify_witness(std::get<GameWitness>(r), a.lattice, a.certificate, c.cap);
      j["verification"] = to_json(rep);
      text += describe(rep);
      if (!rep.passed()) throw InternalError("witness failed verification: " + rep.detail);
    }
    if (c.format == "dot" && accepted(r)) text = to_dot(std::get<GameWitness>(r).graph);
    all_accepted = all_accepted && accepted(r);
    results.push_back(j);
  }
  if (machine(c)) {
    Json j = Json::object();
    j["results"] = results;
    write_output(c, dump(j));
  } else {
    write_output(c, text);
  }
  return all_accepted ? kAccept : kReject;
}

struct GameFiles {
  std::string graph, config;
};

std::pair<MultiGraph, Configuration> load_game(const GameFiles& f) {
  MultiGraph g = parse_multigraph(read_file(f.graph));
  Configuration o = parse_configuration(read_file(f.config), g);
  return {std::move(g), std::move(o)};
}

int run_simulate(const Common& c, const GameFiles& f) {
  auto [g, o] = load_game(f);
  LabeledSpace space = generate_space(g, o, c.cap);
  if (c.format == "dot") {
    write_output(c, to_dot(space));
  } else if (machine(c)) {
    Json j = Json::object();
    j["configurations"] = space.size();
    j["simple"] = is_simple(space);
    j["lattice"] = to_labeled_cover_list(space);
    write_output(c, dump(j));
  } else {
    write_output(c, "# " + std::to_string(space.size()) + " configurations, " +
                        (is_simple(space) ? "simple" : "not simple") + "\n" + to_labeled_cover_list(space));
  }
  return kAccept;
}

int run_verify(const Common& c, const GameFiles& f, const std::string& model) {
  UldAnalysis a = analyze(load_poset(c));
  auto [g, o] = load_game(f);
  GameWitness w;
  w.model = model == "asm" ? Model::ASM : model == "acfg" ? Model::ACFG : Model::CFG;
  w.graph = std::move(g);
  w.initial = std::move(o);
  VerificationReport rep = verify_witness(w, a.lattice, a.certificate, c.cap);
  write_output(c, machine(c) ? dump(to_json(rep)) : describe(rep));
  return rep.passed() ? kAccept : kReject;
}

int run_gen_random(const Common& c, std::uint64_t seed, std::size_t count, std::size_t max_vertices) {
  std::mt19937_64 rng(seed);
  RandomGameParams p;
  p.max_vertices = max_vertices;
  p.cap = std::min<std::size_t>(c.cap, p.cap);
  const bool to_dir = c.output != "-";
  if (to_dir) std::filesystem::create_directories(c.output);
  std::string listing;
  for (std::size_t i = 0; i < count; ++i) {
    RandomGame game = random_game(rng, p);
    const std::string lattice = to_labeled_cover_list(game.space);
    char stem[32];
    std::snprintf(stem, sizeof stem, "random_%04zu", i);
    if (to_dir) {
      const std::filesystem::path dir(c.output);
      std::ofstream(dir / (std::string(stem) + ".lattice")) << lattice;
      std::ofstream(dir / (std::string(stem) + ".graph")) << to_text(game.graph);
      std::ofstream(dir / (std::string(stem) + ".config")) << to_text(game.initial, game.graph);
    } else {
      listing += "## " + std::string(stem) + "\n" + lattice;
    }
  }
  if (!to_dir) std::cout << listing;
  return kAccept;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognize lattices generated by chip-firing games"};
  app.require_subcommand(1);
  Common common;
  std::string model = "all", which = "all";
  bool verify = false;
  GameFiles files;
  std::uint64_t seed = 1;
  std::size_t count = 10, max_vertices = 5;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("-i,--input", common.input, "lattice file in cover-list format (- for stdin)");
    sub->add_option("-o,--output", common.output, "output file (- for stdout)");
    sub->add_option("-f,--format", common.format, "text | machine | dot")
        ->check(CLI::IsMember({"text", "machine", "dot"}));
    sub->add_option("--cap", common.cap, "bound on explored configurations")->envname("CFGKIT_CAP");
  };
  auto* check = app.add_subcommand("check-uld", "validate a lattice and print the cover labels");
  add_common(check, true);
  auto* irr = app.add_subcommand("irreducibles", "print M, J and the U/L sets");
  add_common(irr, true);
  auto* sys = app.add_subcommand("systems", "dump the inequality systems");
  add_common(sys, true);
  sys->add_option("--which", which, "E | Omega | all")->check(CLI::IsMember({"E", "Omega", "all"}));
  auto* rec = app.add_subcommand("recognize", "decide membership and print a witness game");
  add_common(rec, true);
  rec->add_option("-m,--model", model, "cfg | asm | acfg | all")->check(CLI::IsMember({"cfg", "asm", "acfg", "all"}));
  rec->add_flag("--verify", verify, "also certify the witness by simulation");
  auto* sim = app.add_subcommand("simulate", "generate the configuration space of a game");
  add_common(sim, false);
  sim->add_option("-g,--graph", files.graph, "multigraph file (U V K lines)")->required();
  sim->add_option("-c,--config", files.config, "configuration file (V N lines)")->required();
  auto* ver = app.add_subcommand("verify", "check that a game generates the input lattice");
  add_common(ver, true);
  ver->add_option("-g,--graph", files.graph, "multigraph file")->required();
  ver->add_option("-c,--config", files.config, "configuration file")->required();
  ver->add_option("-m,--model", model, "structural checks to apply: cfg | asm | acfg")
      ->check(CLI::IsMember({"cfg", "asm", "acfg", "all"}));
  auto* gen = app.add_subcommand("gen-random", "write random simple games and their lattices");
  add_common(gen, false);
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--count", count, "number of games");
  gen->add_option("--max-vertices", max_vertices, "non-sink vertices per game")->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kAccept : kInvalid;
  }

  try {
    if (*check) return run_check_uld(common);
    if (*irr) return run_irreducibles(common);
    if (*sys) return run_systems(common, which);
    if (*rec) return run_recognize(common, model, verify);
    if (*sim) return run_simulate(common, files);
    if (*ver) return run_verify(common, files, model);
    if (*gen) return run_gen_random(common, seed, count, max_vertices);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInvalid;
}
