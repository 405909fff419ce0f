#include "cogkit/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>
#include "cogkit/json_text.hpp"

namespace cogkit {

using boost::multiprecision::cpp_int;

// ---------------------------------------------------------------- building

std::size_t vertex_generator(const ComplexOfGroups& c, ObjId sigma, Elem g) {
  std::size_t k = 0;
  for (ObjId s = 0; s < sigma; ++s) k += c.groups[s]->order();
  return k + g;
}

std::size_t edge_generator(const ComplexOfGroups& c, MorId a) {
  return vertex_generator(c, static_cast<ObjId>(c.groups.size()), 0) + a;
}

GroupPresentation pi1_presentation(const ComplexOfGroups& c, const std::vector<MorId>& tree) {
  const Scwol& s = *c.base;
  if (auto bad = spanning_tree_violation(s, tree)) throw Error(ErrorCode::TreeNotSpanning, *bad);
  GroupPresentation p;
  p.tree = tree;
  std::sort(p.tree.begin(), p.tree.end());
  std::vector<std::size_t> vbase;
  for (ObjId x = 0; x < s.num_objects(); ++x) {
    vbase.push_back(p.generators.size());
    for (Elem g = 0; g < c.groups[x]->order(); ++g) {
      p.generators.push_back(
          {Generator::Kind::Vertex, x, g, "x" + std::to_string(x) + "_" + std::to_string(g)});
    }
  }
  const std::size_t ebase = p.generators.size();
  for (MorId a = 0; a < s.num_morphisms(); ++a) {
    p.generators.push_back({Generator::Kind::Edge, a, 0, "a" + std::to_string(a)});
  }
  auto v = [&](ObjId x, Elem g, bool inv = false) { return letter(vbase[x] + g, inv); };
  auto e = [&](MorId a, bool inv = false) { return letter(ebase + a, inv); };

  for (ObjId x = 0; x < s.num_objects(); ++x) {
    const FiniteGroup& G = *c.groups[x];
    for (Elem g = 0; g < G.order(); ++g) {
      for (Elem h = 0; h < G.order(); ++h) p.relators.push_back({v(x, g), v(x, h), v(x, G.mul(g, h), true)});
    }
  }
  for (MorId a = 0; a < s.num_morphisms(); ++a) {
    for (Elem g = 0; g < c.groups[s.source(a)]->order(); ++g) {
      p.relators.push_back({e(a), v(s.source(a), g), e(a, true), v(s.target(a), c.psi[a](g), true)});
    }
  }
  for (std::size_t k = 0; k < s.pairs().size(); ++k) {
    const auto& [a, b, ab] = s.pairs()[k];
    p.relators.push_back({e(a), e(b), e(ab, true), v(s.target(a), c.twists[k], true)});
  }
  for (MorId a : p.tree) p.relators.push_back({e(a)});
  return p;
}

// ---------------------------------------------------------------- homs

Elem evaluate(const FiniteGroup& g, const std::vector<Elem>& images, const Word& w) {
  Elem x = g.identity();
  for (Letter l : w) {
    const Elem y = images.at(gen_of(l));
    x = g.mul(x, l < 0 ? g.inv(y) : y);
  }
  return x;
}

PresentationHomToGroup induced_hom_to_group(const MorphismToGroup& phi, const GroupPresentation& p) {
  const FiniteGroup& G = *phi.target;
  const Scwol& s = *phi.source->base;
  for (MorId a : p.tree) {
    if (phi.edge[a] != G.identity()) {
      throw Error(ErrorCode::TreeConditionViolated, "phi(" + s.morphism_label(a) + ") is not the identity");
    }
  }
  PresentationHomToGroup out;
  out.target = phi.target;
  for (const auto& gen : p.generators) {
    out.images.push_back(gen.kind == Generator::Kind::Vertex ? phi.local[gen.base](gen.element) : phi.edge[gen.base]);
  }
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    if (evaluate(G, out.images, p.relators[k]) != G.identity()) {
      out.report.add(ErrorCode::RelatorNotKilled, "relator " + std::to_string(k));
    }
  }
  out.surjective = subgroup_closure(G, out.images).size() == G.order();
  return out;
}

PresentationHom induced_hom(const CogMorphism& phi, const GroupPresentation& src, const GroupPresentation& tgt) {
  const ComplexOfGroups& X = *phi.target;
  const Scwol& x = *X.base;
  // Locate target generators by tag.
  std::map<std::pair<std::uint32_t, Elem>, std::size_t> vgen;
  std::map<std::uint32_t, std::size_t> egen;
  for (std::size_t k = 0; k < tgt.generators.size(); ++k) {
    const auto& g = tgt.generators[k];
    if (g.kind == Generator::Kind::Vertex) vgen[{g.base, g.element}] = k;
    else egen[g.base] = k;
  }
  PresentationHom out;
  for (const auto& g : src.generators) {
    if (g.kind == Generator::Kind::Vertex) {
      const ObjId fs = phi.over.on_objects[g.base];
      out.images.push_back({letter(vgen.at({fs, phi.local[g.base](g.element)}))});
    } else {
      const MorId fa = phi.over.on_morphisms[g.base];
      out.images.push_back({letter(vgen.at({x.target(fa), phi.edge[g.base]})), letter(egen.at(fa))});
    }
  }
  return out;
}

// ---------------------------------------------------------------- simplify

Word free_reduce(const Word& w) {
  Word out;
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

GroupPresentation simplify(const GroupPresentation& p) {
  GroupPresentation q = p;
  while (true) {
    for (auto& r : q.relators) r = free_reduce(r);
    std::vector<bool> dead(q.generators.size(), false);
    bool any = false;
    for (const auto& r : q.relators) {
      if (r.size() == 1) {
        dead[gen_of(r[0])] = true;
        any = true;
      }
    }
    if (any) {
      std::vector<std::size_t> renum(q.generators.size());
      std::vector<Generator> gens;
      for (std::size_t g = 0; g < q.generators.size(); ++g) {
        renum[g] = gens.size();
        if (!dead[g]) gens.push_back(q.generators[g]);
      }
      for (auto& r : q.relators) {
        Word w;
        for (Letter l : r) {
          if (!dead[gen_of(l)]) w.push_back(letter(renum[gen_of(l)], l < 0));
        }
        r = free_reduce(w);
      }
      q.generators = std::move(gens);
    }
    std::set<Word> seen;
    std::vector<Word> kept;
    for (auto& r : q.relators) {
      if (!r.empty() && seen.insert(r).second) kept.push_back(std::move(r));
    }
    q.relators = std::move(kept);
    if (!any) break;
  }
  return q;
}

// ---------------------------------------------------------------- abelianization

namespace {

struct Overflow {};

template <class T>
T checked_mul(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, long long>) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  } else {
    return a * b;
  }
}

template <class T>
T checked_sub(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, long long>) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  } else {
    return a - b;
  }
}

cpp_int to_big(const long long& x) { return cpp_int(x); }
cpp_int to_big(const cpp_int& x) { return x; }

// Eliminates unit pivots sparsely, then returns the remaining dense block
// and the number of surviving columns.
template <class T>
std::pair<std::vector<std::vector<cpp_int>>, std::size_t> eliminate(const GroupPresentation& p) {
  const std::size_t n = p.generators.size();
  std::vector<std::map<std::size_t, T>> rows;
  for (const auto& r : p.relators) {
    std::map<std::size_t, T> row;
    for (Letter l : r) row[gen_of(l)] += (l < 0 ? T(-1) : T(1));
    for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  std::vector<std::set<std::size_t>> cols(n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, v] : rows[i]) cols[j].insert(i);
  std::vector<bool> row_alive(rows.size(), true), col_alive(n, true);

  while (true) {
    std::size_t best_i = 0, best_j = 0, best_cost = SIZE_MAX;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!row_alive[i]) continue;
      for (const auto& [j, v] : rows[i]) {
        if (v != 1 && v != -1) continue;
        const std::size_t cost = (rows[i].size() - 1) * (cols[j].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_cost == SIZE_MAX) break;
    const auto pivot_row = rows[best_i];
    const T pv = pivot_row.at(best_j);
    const std::vector<std::size_t> others(cols[best_j].begin(), cols[best_j].end());
    for (std::size_t k : others) {
      if (k == best_i) continue;
      const T factor = checked_mul(rows[k].at(best_j), pv);  // pv = +-1 is its own inverse
      for (const auto& [j, v] : pivot_row) {
        T nv = checked_sub(rows[k][j], checked_mul(factor, v));
        if (nv == 0) {
          rows[k].erase(j);
          cols[j].erase(k);
        } else {
          rows[k][j] = nv;
          cols[j].insert(k);
        }
      }
      if (rows[k].empty()) row_alive[k] = false;
    }
    for (const auto& [j, v] : pivot_row) cols[j].erase(best_i);
    row_alive[best_i] = false;
    col_alive[best_j] = false;
  }
  std::vector<std::size_t> live_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (col_alive[j]) live_cols.push_back(j);
  std::map<std::size_t, std::size_t> col_index;
  for (std::size_t k = 0; k < live_cols.size(); ++k) col_index[live_cols[k]] = k;
  std::vector<std::vector<cpp_int>> dense;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!row_alive[i] || rows[i].empty()) continue;
    std::vector<cpp_int> row(live_cols.size());
    for (const auto& [j, v] : rows[i]) row[col_index.at(j)] = to_big(v);
    dense.push_back(std::move(row));
  }
  return {std::move(dense), live_cols.size()};
}

// Diagonal of the Smith normal form (nonzero entries only).
std::vector<cpp_int> smith_diagonal(std::vector<std::vector<cpp_int>> m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<cpp_int> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry in the trailing block.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const cpp_int q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const cpp_int q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // Divisibility: fold a row holding a non-multiple into row t.
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols && clean; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
              clean = false;
            }
      }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

template <class T>
std::vector<long long> abelianize_with(const GroupPresentation& p) {
  auto [dense, cols] = eliminate<T>(p);
  const auto diag = smith_diagonal(std::move(dense), cols);
  std::vector<long long> out;
  for (const auto& d : diag)
    if (d > 1) out.push_back(static_cast<long long>(d));
  std::sort(out.begin(), out.end());
  for (std::size_t k = diag.size(); k < cols; ++k) out.push_back(0);
  return out;
}

}  // namespace

std::vector<long long> abelianization(const GroupPresentation& p) {
  try {
    return abelianize_with<long long>(p);
  } catch (const Overflow&) {
    return abelianize_with<cpp_int>(p);
  }
}

// ---------------------------------------------------------------- export

PresentationFormat parse_presentation_format(const std::string& name) {
  if (name == "plain") return PresentationFormat::Plain;
  if (name == "cas") return PresentationFormat::Cas;
  if (name == "json" || name == "structured") return PresentationFormat::Structured;
  throw Error(ErrorCode::UnknownFormat, "presentation format '" + name + "'");
}

namespace {

std::string word_text(const GroupPresentation& p, const Word& w, bool gap) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += "*";
    const std::size_t g = gen_of(w[k]);
    out += gap ? "F." + std::to_string(g + 1) : p.generators[g].name;
    if (w[k] < 0) out += "^-1";
  }
  return out;
}

}  // namespace

std::string export_presentation(const GroupPresentation& p, PresentationFormat format) {
  std::ostringstream os;
  switch (format) {
    case PresentationFormat::Plain: {
      os << "< ";
      for (std::size_t k = 0; k < p.generators.size(); ++k) os << (k ? ", " : "") << p.generators[k].name;
      os << (p.generators.empty() ? "| " : " | ");
      for (std::size_t k = 0; k < p.relators.size(); ++k) os << (k ? ", " : "") << word_text(p, p.relators[k], false);
      os << (p.relators.empty() ? ">\n" : " >\n");
      break;
    }
    case PresentationFormat::Cas: {
      os << "F := FreeGroup(";
      for (std::size_t k = 0; k < p.generators.size(); ++k) os << (k ? ", " : "") << '"' << p.generators[k].name << '"';
      os << ");;\nG := F / [";
      for (std::size_t k = 0; k < p.relators.size(); ++k) {
        os << (k ? ",\n  " : "\n  ") << word_text(p, p.relators[k], true);
      }
      os << (p.relators.empty() ? "];;\n" : "\n];;\n");
      break;
    }
    case PresentationFormat::Structured: {
      nlohmann::ordered_json j;
      j["schema"] = "cogkit/1";
      j["kind"] = "presentation";
      auto gens = nlohmann::ordered_json::array();
      for (const auto& g : p.generators) {
        nlohmann::ordered_json x;
        x["name"] = g.name;
        if (g.kind == Generator::Kind::Vertex) {
          x["kind"] = "vertex";
          x["object"] = g.base;
          x["element"] = g.element;
        } else {
          x["kind"] = "edge";
          x["morphism"] = g.base;
        }
        gens.push_back(std::move(x));
      }
      j["generators"] = std::move(gens);
      j["relators"] = p.relators;
      j["tree"] = p.tree;
      os << dump_json(j);
      break;
    }
  }
  return os.str();
}

GroupPresentation parse_structured_presentation(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  try {
    if (j.at("kind") != "presentation") throw Error(ErrorCode::ParseError, "kind is not 'presentation'");
    GroupPresentation p;
    for (const auto& g : j.at("generators")) {
      Generator gen{};
      gen.name = g.at("name").get<std::string>();
      if (g.at("kind") == "vertex") {
        gen.kind = Generator::Kind::Vertex;
        gen.base = g.at("object").get<std::uint32_t>();
        gen.element = g.at("element").get<Elem>();
      } else {
        gen.kind = Generator::Kind::Edge;
        gen.base = g.at("morphism").get<std::uint32_t>();
      }
      p.generators.push_back(std::move(gen));
    }
    p.relators = j.at("relators").get<std::vector<Word>>();
    p.tree = j.at("tree").get<std::vector<MorId>>();
    for (const auto& r : p.relators) {
      for (Letter l : r) {
        if (l == 0 || gen_of(l) >= p.generators.size()) {
          throw Error(ErrorCode::ParseError, "relator letter " + std::to_string(l) + " out of range");
        }
      }
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace cogkit
