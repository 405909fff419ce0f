// Acceptance checks, one line per criterion. Oracles here are computed
// directly from the definitions and do not reuse the validators under test.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cogkit/catalog.hpp"
#include "cogkit/cog.hpp"
#include "cogkit/development.hpp"
#include "cogkit/immersion.hpp"
#include "cogkit/iso.hpp"
#include "cogkit/local_cog.hpp"
#include "cogkit/presentation.hpp"

using namespace cogkit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void verdict(const std::string& ac, bool pass, const std::string& detail) {
  std::cout << ac << (pass ? " PASS " : " FAIL ") << detail << "\n";
  if (!pass) ++failures;
}

std::string pair_name(const Scwol& s, MorId a, MorId b) {
  return "(" + s.morphism_label(a) + "," + s.morphism_label(b) + ")";
}

bool injective(const GroupHom& f) {
  std::set<Elem> seen(f.image.begin(), f.image.end());
  return seen.size() == f.image.size();
}

std::set<Elem> image_set(const GroupHom& f) { return {f.image.begin(), f.image.end()}; }

// Cocycle conditions straight from the definition, by brute force over all
// morphism pairs and triples.
struct CocycleOracle {
  std::map<std::string, Elem> failing_pairs;  // pair -> least failing element
  std::set<std::string> failing_triples;
};

CocycleOracle cocycle_oracle(const ComplexOfGroups& c) {
  const Scwol& s = *c.base;
  CocycleOracle o;
  auto comp = [&](MorId a, MorId b) { return s.composite(a, b); };
  for (MorId a = 0; a < s.num_morphisms(); ++a) {
    for (MorId b = 0; b < s.num_morphisms(); ++b) {
      if (s.source(a) != s.target(b)) continue;
      const MorId ab = *comp(a, b);
      const FiniteGroup& G = *c.groups[s.target(a)];
      const Elem g = c.twist(a, b);
      for (Elem x = 0; x < c.groups[s.source(b)]->order(); ++x) {
        const Elem lhs = G.mul(G.mul(g, c.psi[ab](x)), G.inv(g));
        if (lhs != c.psi[a](c.psi[b](x))) {
          o.failing_pairs.emplace(pair_name(s, a, b), x);
          break;
        }
      }
      for (MorId cc = 0; cc < s.num_morphisms(); ++cc) {
        if (s.source(b) != s.target(cc)) continue;
        const MorId bc = *comp(b, cc);
        const Elem lhs = G.mul(c.psi[a](c.twist(b, cc)), c.twist(a, bc));
        const Elem rhs = G.mul(c.twist(a, b), c.twist(ab, cc));
        if (lhs != rhs) {
          o.failing_triples.insert("(" + s.morphism_label(a) + "," + s.morphism_label(b) + "," +
                                   s.morphism_label(cc) + ")");
        }
      }
    }
  }
  return o;
}

struct Corpus {
  std::vector<CogPtr> complexes;
};

Corpus build_corpus(std::uint64_t seed, std::size_t count) {
  Corpus c;
  CorpusGenerator gen(seed);
  for (const auto& n : fixtures::complexes()) c.complexes.push_back(n.complex);
  for (std::size_t k = 0; k < count; ++k) c.complexes.push_back(gen.next_complex());
  return c;
}

// ---------------------------------------------------------------- AC1

void ac1(const Corpus& corpus) {
  const auto t0 = Clock::now();
  CorpusGenerator rng(7);
  std::size_t valid = 0, with_pairs = 0, mutated = 0, detected = 0, by_triple = 0, silent = 0;
  std::string problem;
  auto check_mutation = [&](const ComplexOfGroups& m, MorId a, MorId b) {
    const Scwol& s = *m.base;
    const CocycleOracle o = cocycle_oracle(m);
    const Report r = validate_cog(m);
    if (o.failing_pairs.empty() && o.failing_triples.empty()) {
      // g_{a,b} moved inside a coset of the centralizer of the image and no
      // triple sees it: the mutated data is still a cocycle.
      ++silent;
      if (!r.ok() && problem.empty()) problem = "validator rejected a valid mutation: " + r.summary();
      return;
    }
    if (r.ok()) {
      if (problem.empty()) problem = "mutation of " + pair_name(s, a, b) + " not detected";
      return;
    }
    bool witness_ok = true;
    const std::string mutated_pair = pair_name(s, a, b);
    if (const Violation* v = r.find(ErrorCode::Cocycle2aFail)) {
      // Only the mutated pair can fail 3(a), at its least failing element.
      const auto it = o.failing_pairs.find(mutated_pair);
      witness_ok &= it != o.failing_pairs.end() &&
                    v->witness == "pair " + mutated_pair + " at element " + std::to_string(it->second);
    } else {
      witness_ok &= o.failing_pairs.empty();
    }
    if (const Violation* v = r.find(ErrorCode::Cocycle2bFail)) {
      ++by_triple;
      const std::string w = v->witness.substr(std::string("triple ").size());
      witness_ok &= o.failing_triples.count(w) > 0;
      // The triple must involve the mutated pair in one of its four twists.
      bool involves = false;
      std::vector<std::string> parts;
      std::stringstream ss(w.substr(1, w.size() - 2));
      for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
      if (parts.size() == 3) {
        const MorId x = s.morphism_id(parts[0]), y = s.morphism_id(parts[1]), z = s.morphism_id(parts[2]);
        const MorId xy = *s.composite(x, y), yz = *s.composite(y, z);
        const std::set<std::pair<MorId, MorId>> used{{y, z}, {x, yz}, {x, y}, {xy, z}};
        involves = used.count({a, b}) > 0;
      }
      witness_ok &= involves;
    } else {
      witness_ok &= o.failing_triples.empty();
    }
    if (witness_ok) {
      ++detected;
    } else if (problem.empty()) {
      problem = "wrong witness for mutated " + mutated_pair + ": " + r.summary();
    }
  };
  for (const auto& cp : corpus.complexes) {
    const ComplexOfGroups& c = *cp;
    const Scwol& s = *c.base;
    if (validate_cog(c).ok() && cocycle_oracle(c).failing_pairs.empty() && cocycle_oracle(c).failing_triples.empty()) {
      ++valid;
    } else if (problem.empty()) {
      problem = "corpus complex rejected: " + validate_cog(c).summary();
    }
    if (s.pairs().empty()) continue;
    ++with_pairs;
    // Every alternative value on a few random pairs.
    for (int trial = 0; trial < 3; ++trial) {
      const std::size_t p = rng.below(s.pairs().size());
      const MorId a = s.pairs()[p].a, b = s.pairs()[p].b;
      const std::size_t order = c.groups[s.target(a)]->order();
      for (Elem value = 0; value < order; ++value) {
        if (value == c.twists[p]) continue;
        ComplexOfGroups m = c;
        m.twists[p] = value;
        ++mutated;
        check_mutation(m, a, b);
      }
    }
  }
  const double secs = seconds_since(t0);
  const bool pass = problem.empty() && valid == corpus.complexes.size() && valid >= 206 && detected > 0 && secs < 60;
  std::ostringstream d;
  d << valid << " valid complexes (" << with_pairs << " with composable pairs), " << mutated << " mutations, " << detected << " rejected with correct witness (" << by_triple << " naming a triple), "
    << silent << " still cocycles, " << secs << " s";
  if (!problem.empty()) d << "; " << problem;
  verdict("AC1", pass, d.str());
}

// ---------------------------------------------------------------- AC2, AC3, AC5

struct LocalCase {
  CogPtr complex;
  ObjId gamma;
};

std::vector<LocalCase> local_cases(const Corpus& corpus) {
  std::vector<LocalCase> out;
  for (const auto& c : corpus.complexes)
    for (ObjId g = 0; g < c->base->num_objects(); ++g) out.push_back({c, g});
  return out;
}

void ac2_ac3_ac5(const std::vector<LocalCase>& cases) {
  std::size_t ok2 = 0, ok3 = 0, ok5 = 0;
  std::string p2, p3, p5;
  for (const auto& [c, g] : cases) {
    const LocalCog l = build_local_cog(c, g);
    const Report r2 = validate_cog(*l.cog);
    const CocycleOracle o = cocycle_oracle(*l.cog);
    if (r2.ok() && o.failing_pairs.empty() && o.failing_triples.empty()) {
      ++ok2;
    } else if (p2.empty()) {
      p2 = c->base->object_label(g) + ": " + r2.summary();
    }

    const MorphismToGroup theta = build_theta(l);
    bool inj = true;
    for (const auto& f : theta.local) inj &= injective(f);
    const Report r3 = validate_morphism_to_group(theta);
    if (r3.ok() && inj) {
      ++ok3;
    } else if (p3.empty()) {
      p3 = c->base->object_label(g) + ": " + r3.summary();
    }

    const CogMorphism sigma = build_sigma(l);
    const Report r5 = validate_cog_morphism(sigma);
    const ImmersionReport im = check_immersion(sigma);
    if (r5.ok() && im.immersion) {
      ++ok5;
    } else if (p5.empty()) {
      p5 = c->base->object_label(g) + ": " + r5.summary();
      for (const auto& v : im.objects)
        if (!v.witness.empty()) {
          p5 += " " + v.witness;
          break;
        }
    }
  }
  const auto n = cases.size();
  verdict("AC2", ok2 == n, std::to_string(ok2) + "/" + std::to_string(n) + " local complexes valid" + (p2.empty() ? "" : "; " + p2));
  verdict("AC3", ok3 == n,
          std::to_string(ok3) + "/" + std::to_string(n) + " Theta valid and locally injective" + (p3.empty() ? "" : "; " + p3));
  verdict("AC5", ok5 == n,
          std::to_string(ok5) + "/" + std::to_string(n) + " Sigma valid immersions" + (p5.empty() ? "" : "; " + p5));
}

// ---------------------------------------------------------------- AC4, AC9

void ac4_ac9(const std::vector<LocalCase>& cases) {
  const auto t0 = Clock::now();
  std::size_t eligible = 0, found = 0, max_nodes = 0;
  std::size_t actions = 0, actions_ok = 0;
  std::string p4, p9;
  auto check9 = [&](const MorphismToGroup& phi, const Development& d, const std::string& where) {
    ++actions;
    const ActionReport a = check_action(d);
    bool ok = a.report.ok() && a.object_orbits == phi.source->base->num_objects();
    // Stabilizer of (g K, sigma) is g K g^-1, so its order is |im phi_sigma|.
    for (ObjId o = 0; o < d.scwol->num_objects() && ok; ++o) {
      const ObjId sigma = d.projection.on_objects[o];
      ok &= a.stabilizer_orders[o] == image_set(phi.local[sigma]).size();
    }
    if (ok) {
      ++actions_ok;
    } else if (p9.empty()) {
      p9 = where + ": " + a.report.summary();
    }
  };
  for (const auto& [c, g] : cases) {
    if (c->groups[g]->order() > 24) continue;
    ++eligible;
    const std::string where = c->base->object_label(g);
    const LocalCog l = build_local_cog(c, g);
    const MorphismToGroup theta = build_theta(l);
    const Development d = build_development(theta);
    const LocalDevelopment ld = build_local_development(c, g);
    try {
      const auto iso = scwol_isomorphic(*d.scwol, *ld.scwol, kDefaultSearchBudget);
      if (iso && check_scwol_iso(*d.scwol, *ld.scwol, *iso).ok()) {
        ++found;
        max_nodes = std::max(max_nodes, iso->search_nodes);
      } else if (p4.empty()) {
        p4 = where + ": no isomorphism";
      }
    } catch (const Error& e) {
      if (p4.empty()) p4 = where + ": " + e.what();
    }
    check9(theta, d, where);
  }
  {
    const CogPtr s = fixtures::seg23();
    const MorphismToGroup phi = fixtures::seg23_to_z6(s);
    const Development d = build_development(phi);
    check9(phi, d, "seg23 -> Z/6");
  }
  const double secs = seconds_since(t0);
  verdict("AC4", found == eligible && secs < 300,
          std::to_string(found) + "/" + std::to_string(eligible) + " developments isomorphic to Y(gamma~), max " +
              std::to_string(max_nodes) + " search nodes, " + std::to_string(secs) + " s" + (p4.empty() ? "" : "; " + p4));
  verdict("AC9", actions_ok == actions,
          std::to_string(actions_ok) + "/" + std::to_string(actions) + " actions with correct orbits and stabilizers" +
              (p9.empty() ? "" : "; " + p9));
}

// ---------------------------------------------------------------- AC6

// Phi_sigma restricted to upper objects, read off the local development map.
bool upper_link_injective(const CogMorphism& phi, ObjId sigma) {
  const LocalDevMorphism m = build_local_dev_morphism(phi, sigma);
  std::set<ObjId> seen;
  for (ObjId o = 0; o < m.source.scwol->num_objects(); ++o) {
    if (m.source.objects[o].kind != Star::ObjKind::Upper) continue;
    if (!seen.insert(m.map.on_objects[o]).second) return false;
  }
  return true;
}

void ac6() {
  CorpusGenerator gen(2024);
  std::size_t morphisms = 0, agree = 0, immersions = 0, non_immersions = 0, coset_failures = 0;
  std::string problem;
  auto run = [&](const CogMorphism& phi) {
    if (!validate_cog_morphism(phi).ok()) {
      if (problem.empty()) problem = "generated morphism invalid: " + validate_cog_morphism(phi).summary();
      return;
    }
    ++morphisms;
    const auto verdicts = check_coset_condition(phi);
    bool all = true;
    bool imm = true;
    for (ObjId s = 0; s < phi.source->base->num_objects(); ++s) {
      bool coset = true;
      for (const auto& v : verdicts)
        if (v.sigma == s) coset &= v.injective;
      const bool link = upper_link_injective(phi, s);
      all &= coset == link;
      coset_failures += !coset;
      imm &= link && injective(phi.local[s]);
    }
    imm &= check_immersion(phi).immersion;
    if (all) {
      ++agree;
    } else if (problem.empty()) {
      problem = "disagreement";
    }
    (imm ? immersions : non_immersions)++;
  };
  while (morphisms < 150) {
    switch (gen.below(3)) {
      case 0: {
        const auto s = gen.next_simple();
        run(gen.quotient_morphism(s));
        break;
      }
      case 1: {
        const auto s = gen.next_simple();
        const CogMorphism q = gen.quotient_morphism(s);
        const Coboundary cb = gen.random_coboundary(s.complex);
        run(compose(q, cb.iso));
        break;
      }
      default:
        run(gen.fold_morphism());
        break;
    }
  }
  run(fixtures::fold2());
  run(fixtures::seg23_collapse(fixtures::seg23()));
  const bool pass = problem.empty() && agree == morphisms && morphisms >= 100 && non_immersions > 0 && coset_failures > 0;
  verdict("AC6", pass,
          std::to_string(agree) + "/" + std::to_string(morphisms) + " morphisms agree at every object (" +
              std::to_string(immersions) + " immersions, " + std::to_string(non_immersions) + " non-immersions, " +
              std::to_string(coset_failures) + " objects failing the coset condition)" +
              (problem.empty() ? "" : "; " + problem));
}

// ---------------------------------------------------------------- AC7

std::string show(const std::vector<long long>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

void ac7() {
  const CogPtr seg = fixtures::seg23();
  const auto a = abelianization(pi1_presentation(*seg, maximal_tree(*seg->base)));
  const ComplexOfGroups circ = trivial_complex(fixtures::circle());
  const auto b = abelianization(pi1_presentation(circ, maximal_tree(*circ.base)));
  const ComplexOfGroups pt = trivial_complex(fixtures::point());
  const GroupPresentation p = simplify(pi1_presentation(pt, maximal_tree(*pt.base)));
  const bool pass = a == std::vector<long long>{6} && b == std::vector<long long>{0} && p.generators.empty() &&
                    p.relators.empty();
  verdict("AC7", pass,
          "seg23 " + show(a) + ", circle " + show(b) + ", point " + std::to_string(p.generators.size()) +
              " generators " + std::to_string(p.relators.size()) + " relators");
}

// ---------------------------------------------------------------- AC8

void ac8(const std::vector<LocalCase>& cases) {
  std::size_t ok = 0;
  std::string problem;
  for (const auto& [c, g] : cases) {
    const LocalCog l = build_local_cog(c, g);
    const MorphismToGroup theta = build_theta(l);
    const GroupPresentation p = pi1_presentation(*l.cog, star_tree(l));
    const PresentationHomToGroup h = induced_hom_to_group(theta, p);
    // Relators and surjectivity checked here from the generator images.
    const FiniteGroup& G = *theta.target;
    bool killed = true;
    for (const Word& w : p.relators) {
      Elem x = G.identity();
      for (Letter t : w) x = G.mul(x, t > 0 ? h.images[gen_of(t)] : G.inv(h.images[gen_of(t)]));
      killed &= x == G.identity();
    }
    std::vector<Elem> gens(h.images.begin(), h.images.end());
    const bool onto = subgroup_closure(G, gens).size() == G.order();
    const auto ab = abelianization(p);
    const auto expected = abelian_invariants(G);
    if (killed && onto && h.report.ok() && h.surjective && ab == expected) {
      ++ok;
    } else if (problem.empty()) {
      problem = c->base->object_label(g) + ": abelianization " + show(ab) + " expected " + show(expected) +
                (killed ? "" : ", relator not killed") + (onto ? "" : ", not surjective");
    }
  }
  verdict("AC8", ok == cases.size(),
          std::to_string(ok) + "/" + std::to_string(cases.size()) + " local presentations map onto G_gamma" +
              (problem.empty() ? "" : "; " + problem));
}

// ---------------------------------------------------------------- AC10

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void ac10(const std::string& cli, const std::string& fixtures_dir) {
  const std::vector<std::string> commands = {"validate", "pi1", "abel", "local-cog --vertex 0", "immerse"};
  const auto tmp = std::filesystem::temp_directory_path() / ("cogkit-ac10-" + std::to_string(::getpid()));
  std::filesystem::create_directories(tmp);
  std::string outputs[2];
  bool ran = true;
  for (int run = 0; run < 2; ++run) {
    for (const auto& cmd : commands) {
      const auto out = (tmp / ("out" + std::to_string(run))).string();
      const std::string line = "\"" + cli + "\" " + cmd + " \"" + fixtures_dir + "\" > \"" + out + "\" 2>&1";
      const int rc = std::system(line.c_str());
      ran &= rc != -1;
      outputs[run] += "$ " + cmd + "\n" + slurp(out);
    }
  }
  std::filesystem::remove_all(tmp);
  const bool pass = ran && !outputs[0].empty() && outputs[0] == outputs[1];
  verdict("AC10", pass, "two runs of " + std::to_string(commands.size()) + " subcommands over " + fixtures_dir + ", " +
                            std::to_string(outputs[0].size()) + " bytes, " + (outputs[0] == outputs[1] ? "identical" : "different"));
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : COGKIT_CLI;
  const std::string fixtures_dir = argc > 2 ? argv[2] : COGKIT_FIXTURES;
  const Corpus corpus = build_corpus(20240601, 200);
  const auto cases = local_cases(corpus);
  ac1(corpus);
  ac2_ac3_ac5(cases);
  ac4_ac9(cases);
  ac6();
  ac7();
  ac8(cases);
  ac10(cli, fixtures_dir);
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << "\n";
  return failures ? 1 : 0;
}
