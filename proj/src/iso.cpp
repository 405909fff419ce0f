#include "cogkit/iso.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cogkit {

namespace {

// Edge labels of the incidence graph.
enum : std::uint32_t { kSource = 0, kTarget = 1, kFirst = 2, kSecond = 3, kComposite = 4 };

struct Incidence {
  std::size_t offset = 0;  // first node id in the joint graph
  std::size_t objects = 0, morphisms = 0, pairs = 0;
  std::size_t size() const { return objects + morphisms + pairs; }
};

class Search {
 public:
  Search(const Scwol& a, const Scwol& b, std::size_t budget) : a_(a), b_(b), budget_(budget) {
    ga_ = add(a, 0);
    gb_ = add(b, ga_.size());
  }

  std::optional<ScwolIso> run() {
    std::vector<std::uint32_t> colors(type_.begin(), type_.end());
    if (!descend(colors)) return std::nullopt;
    result_.search_nodes = nodes_;
    return result_;
  }

 private:
  Incidence add(const Scwol& s, std::size_t offset) {
    Incidence g{offset, s.num_objects(), s.num_morphisms(), s.pairs().size()};
    const std::size_t total = offset + g.size();
    out_.resize(total);
    in_.resize(total);
    type_.resize(total);
    for (std::size_t x = 0; x < g.objects; ++x) type_[offset + x] = 0;
    const std::size_t mor0 = offset + g.objects;
    const std::size_t pair0 = mor0 + g.morphisms;
    for (MorId m = 0; m < g.morphisms; ++m) {
      type_[mor0 + m] = 1;
      link(mor0 + m, offset + s.source(m), kSource);
      link(mor0 + m, offset + s.target(m), kTarget);
    }
    for (std::size_t p = 0; p < g.pairs; ++p) {
      const auto& c = s.pairs()[p];
      type_[pair0 + p] = 2;
      link(pair0 + p, mor0 + c.a, kFirst);
      link(pair0 + p, mor0 + c.b, kSecond);
      link(pair0 + p, mor0 + c.ab, kComposite);
    }
    return g;
  }

  void link(std::size_t from, std::size_t to, std::uint32_t label) {
    out_[from].push_back({label, static_cast<std::uint32_t>(to)});
    in_[to].push_back({label, static_cast<std::uint32_t>(from)});
  }

  // Color refinement to the coarsest equitable partition. Returns false if
  // the two sides become unbalanced.
  bool refine(std::vector<std::uint32_t>& colors) const {
    const std::size_t n = colors.size();
    std::size_t classes = std::set<std::uint32_t>(colors.begin(), colors.end()).size();
    std::vector<std::uint64_t> sig;
    while (true) {
      std::map<std::pair<std::uint32_t, std::vector<std::uint64_t>>, std::uint32_t> index;
      std::vector<std::uint32_t> next(n);
      std::vector<decltype(index)::iterator> slot(n);
      for (std::size_t v = 0; v < n; ++v) {
        sig.clear();
        for (auto [label, w] : out_[v]) sig.push_back((std::uint64_t{label} * 2) << 32 | colors[w]);
        for (auto [label, w] : in_[v]) sig.push_back((std::uint64_t{label} * 2 + 1) << 32 | colors[w]);
        std::sort(sig.begin(), sig.end());
        slot[v] = index.emplace(std::make_pair(colors[v], sig), 0).first;
      }
      std::uint32_t id = 0;
      for (auto& entry : index) entry.second = id++;
      for (std::size_t v = 0; v < n; ++v) next[v] = slot[v]->second;
      colors.swap(next);
      if (!balanced(colors)) return false;
      if (index.size() == classes) return true;
      classes = index.size();
    }
  }

  bool balanced(const std::vector<std::uint32_t>& colors) const {
    std::vector<long> count(colors.size() + 1, 0);
    for (std::size_t v = 0; v < ga_.size(); ++v) ++count[colors[v]];
    for (std::size_t v = gb_.offset; v < colors.size(); ++v) --count[colors[v]];
    return std::all_of(count.begin(), count.end(), [](long c) { return c == 0; });
  }

  bool descend(std::vector<std::uint32_t> colors) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::SearchBudgetExceeded, "more than " + std::to_string(budget_) + " search nodes");
    }
    if (!refine(colors)) return false;

    const std::size_t n = ga_.size();
    std::vector<std::size_t> size(colors.size() + 1, 0);
    for (std::size_t v = 0; v < n; ++v) ++size[colors[v]];
    std::uint32_t pick = 0;
    std::size_t best = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t s = size[colors[v]];
      if (s > 1 && (best == 0 || s < best)) {
        best = s;
        pick = static_cast<std::uint32_t>(v);
      }
    }
    if (best == 0) return finish(colors);

    const std::uint32_t cell = colors[pick];
    const std::uint32_t fresh = static_cast<std::uint32_t>(colors.size());
    for (std::size_t w = gb_.offset; w < colors.size(); ++w) {
      if (colors[w] != cell) continue;
      auto trial = colors;
      trial[pick] = fresh;
      trial[w] = fresh;
      if (descend(std::move(trial))) return true;
    }
    return false;
  }

  bool finish(const std::vector<std::uint32_t>& colors) {
    std::vector<std::size_t> in_b(colors.size() + 1, 0);
    for (std::size_t w = gb_.offset; w < colors.size(); ++w) in_b[colors[w]] = w - gb_.offset;
    ScwolIso iso;
    for (std::size_t x = 0; x < ga_.objects; ++x) iso.on_objects.push_back(static_cast<ObjId>(in_b[colors[x]]));
    for (std::size_t m = 0; m < ga_.morphisms; ++m) {
      iso.on_morphisms.push_back(static_cast<MorId>(in_b[colors[ga_.objects + m]] - gb_.objects));
    }
    if (!check_scwol_iso(a_, b_, iso).ok()) return false;
    result_ = std::move(iso);
    return true;
  }

  const Scwol& a_;
  const Scwol& b_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  Incidence ga_, gb_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> out_, in_;
  std::vector<std::uint32_t> type_;
  ScwolIso result_;
};

}  // namespace

std::optional<ScwolIso> scwol_isomorphic(const Scwol& a, const Scwol& b, std::size_t budget) {
  if (a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms() ||
      a.pairs().size() != b.pairs().size()) {
    return std::nullopt;
  }
  return Search(a, b, budget).run();
}

Report check_scwol_iso(const Scwol& a, const Scwol& b, const ScwolIso& iso) {
  Report r;
  if (iso.on_objects.size() != a.num_objects() || iso.on_morphisms.size() != a.num_morphisms() ||
      a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms()) {
    r.add(ErrorCode::ShapeMismatch, "sizes differ");
    return r;
  }
  std::vector<bool> hit_o(b.num_objects(), false), hit_m(b.num_morphisms(), false);
  for (ObjId x = 0; x < a.num_objects(); ++x) {
    const ObjId y = iso.on_objects[x];
    if (y >= b.num_objects() || hit_o[y]) {
      r.add(ErrorCode::ShapeMismatch, "object map not bijective at " + a.object_label(x));
      return r;
    }
    hit_o[y] = true;
  }
  for (MorId m = 0; m < a.num_morphisms(); ++m) {
    const MorId n = iso.on_morphisms[m];
    if (n >= b.num_morphisms() || hit_m[n]) {
      r.add(ErrorCode::ShapeMismatch, "morphism map not bijective at " + a.morphism_label(m));
      return r;
    }
    hit_m[n] = true;
    if (b.source(n) != iso.on_objects[a.source(m)] || b.target(n) != iso.on_objects[a.target(m)]) {
      r.add(ErrorCode::NotAFunctor, "morphism " + a.morphism_label(m) + " does not commute with i/t");
    }
  }
  if (a.pairs().size() != b.pairs().size()) r.add(ErrorCode::ShapeMismatch, "pair counts differ");
  for (const auto& [x, y, xy] : a.pairs()) {
    auto c = b.composite(iso.on_morphisms[x], iso.on_morphisms[y]);
    if (!c || *c != iso.on_morphisms[xy]) {
      r.add(ErrorCode::NotAFunctor,
            "composition not preserved at (" + a.morphism_label(x) + "," + a.morphism_label(y) + ")");
    }
  }
  return r;
}

}  // namespace cogkit
