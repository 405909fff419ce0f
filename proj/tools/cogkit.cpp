#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"

#include "cogkit/ops.hpp"

namespace {

const std::map<std::string, std::string> kHelp = {
    {"validate", "check every item in the workspace against its axioms"},
    {"local-cog", "build the local complex of groups at a vertex"},
    {"theta", "build the morphism from the local complex to the vertex group"},
    {"sigma", "build the morphism from the local complex to the ambient complex"},
    {"local-dev", "build the local development at a vertex"},
    {"develop", "build a development from a morphism to a finite group"},
    {"pi1", "presentation of the fundamental group relative to a maximal tree"},
    {"abel", "abelian invariants of the fundamental group"},
    {"export-pres", "write the presentation as plain text, a CAS script or JSON"},
    {"immerse", "immersion verdicts for morphisms of complexes of groups"},
    {"iso", "isomorphism test for the scwols of two files"},
    {"realize", "cells of the geometric realization, as JSON or OFF"},
    {"corpus", "random valid complexes of groups from a seed"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complexes of groups over finite local groups"};
  app.require_subcommand(1);
  cogkit::Options opt;
  std::string emit;
  std::string format;
  std::string cog, scwol, mor, vertex;
  for (const auto& name : cogkit::command_names()) {
    CLI::App* sub = app.add_subcommand(name, kHelp.at(name));
    sub->add_option("paths", opt.paths, name == "iso" ? "two files" : "files or directories (default: fixtures)");
    if (name == "corpus") {
      sub->add_option("--seed", opt.seed, "random seed");
      sub->add_option("--count", opt.count, "number of complexes");
    } else {
      sub->add_option("--cog", cog, "complex id");
      sub->add_option("--scwol", scwol, "scwol id");
      sub->add_option("--mor", mor, "morphism id");
      sub->add_option("--vertex", vertex, "object label or index");
      sub->add_option("--tree", opt.tree, "bfs, or a file listing tree morphisms");
      sub->add_option("--budget", opt.budget, "isomorphism search node cap");
    }
    sub->add_option("--format", format, "json, off, cas or plain")->check(CLI::IsMember({"json", "off", "cas", "plain"}));
    sub->add_option("--emit", emit, "write the result to this file instead of stdout");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cogkit::kMalformed;
  }
  if (!cog.empty()) opt.cog = cog;
  if (!scwol.empty()) opt.scwol = scwol;
  if (!mor.empty()) opt.mor = mor;
  if (!vertex.empty()) opt.vertex = vertex;
  if (!format.empty()) opt.format = format;

  const std::string command = app.get_subcommands().front()->get_name();
  const cogkit::Outcome out = cogkit::run_command(command, opt);
  if (!out.error.empty()) std::cerr << "cogkit " << command << ": " << out.error << "\n";
  if (emit.empty()) {
    std::cout << out.output;
  } else if (!out.output.empty()) {
    std::ofstream file(emit, std::ios::binary);
    if (!file) {
      std::cerr << "cogkit " << command << ": cannot write " << emit << "\n";
      return cogkit::kMalformed;
    }
    file << out.output;
  }
  return out.exit_code;
}
