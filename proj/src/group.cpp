#include "cogkit/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace cogkit {

namespace {

std::string triple(Elem x, Elem y, Elem z) {
  std::ostringstream os;
  os << "(" << x << "," << y << "," << z << ")";
  return os.str();
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> ps;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<Elem>>& table, Elem identity,
                                           std::string label) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty Cayley table");
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      throw Error(ErrorCode::InvalidInput, "Cayley table row " + std::to_string(r) + " is not of length " +
                                               std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (table[r][c] >= n) {
        throw Error(ErrorCode::IndexOutOfRange, "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                                    ") = " + std::to_string(table[r][c]));
      }
    }
  }
  if (identity >= n) throw Error(ErrorCode::IndexOutOfRange, "identity " + std::to_string(identity));

  FiniteGroup g;
  g.order_ = n;
  g.identity_ = identity;
  g.label_ = std::move(label);
  g.mult_.resize(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::copy(table[r].begin(), table[r].end(), g.mult_.begin() + static_cast<std::ptrdiff_t>(r * n));
  }

  for (Elem x = 0; x < n; ++x) {
    if (g.mul(identity, x) != x || g.mul(x, identity) != x) {
      throw Error(ErrorCode::NoIdentity, "element " + std::to_string(identity) + " fails against " +
                                             std::to_string(x));
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = g.mul(x, y);
      for (Elem z = 0; z < n; ++z) {
        if (g.mul(xy, z) != g.mul(x, g.mul(y, z))) {
          throw Error(ErrorCode::NotAssociative, "triple " + triple(x, y, z));
        }
      }
    }
  }
  g.inv_.assign(n, 0);
  for (Elem x = 0; x < n; ++x) {
    bool found = false;
    for (Elem y = 0; y < n && !found; ++y) {
      if (g.mul(x, y) == identity && g.mul(y, x) == identity) {
        g.inv_[x] = y;
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::NoInverse, "element " + std::to_string(x));
  }
  return g;
}

FiniteGroup FiniteGroup::from_permutation_generators(std::size_t degree, const std::vector<Permutation>& gens,
                                                     std::size_t cap, std::string label) {
  if (degree == 0) throw Error(ErrorCode::InvalidInput, "degree must be positive");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& p = gens[k];
    std::vector<bool> seen(degree, false);
    bool ok = p.size() == degree;
    for (std::size_t x = 0; ok && x < p.size(); ++x) {
      if (p[x] >= degree || seen[p[x]]) ok = false;
      else seen[p[x]] = true;
    }
    if (!ok) throw Error(ErrorCode::NotPermutation, "generator " + std::to_string(k));
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  auto compose = [degree](const Permutation& p, const Permutation& q) {
    Permutation r(degree);
    for (std::size_t x = 0; x < degree; ++x) r[x] = p[q[x]];
    return r;
  };

  std::map<Permutation, Elem> index;
  std::vector<Permutation> elems;
  std::deque<Elem> queue;
  index.emplace(id, 0);
  elems.push_back(id);
  queue.push_back(0);
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Permutation y = compose(elems[x], s);
      if (index.count(y)) continue;
      if (elems.size() >= cap) {
        throw Error(ErrorCode::ClosureTooLarge, "closure exceeds " + std::to_string(cap) + " elements");
      }
      index.emplace(y, static_cast<Elem>(elems.size()));
      queue.push_back(static_cast<Elem>(elems.size()));
      elems.push_back(std::move(y));
    }
  }

  FiniteGroup g;
  g.order_ = elems.size();
  g.identity_ = 0;
  g.label_ = std::move(label);
  g.mult_.resize(g.order_ * g.order_);
  for (Elem x = 0; x < g.order_; ++x) {
    for (Elem y = 0; y < g.order_; ++y) {
      g.mult_[x * g.order_ + y] = index.at(compose(elems[x], elems[y]));
    }
  }
  g.inv_.resize(g.order_);
  for (Elem x = 0; x < g.order_; ++x) {
    Permutation q(degree);
    for (std::size_t i = 0; i < degree; ++i) q[elems[x][i]] = static_cast<std::uint32_t>(i);
    g.inv_[x] = index.at(q);
  }
  g.perms_ = std::move(elems);
  return g;
}

Elem FiniteGroup::pow(Elem x, long long k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Elem r = identity_;
  Elem b = x;
  while (k > 0) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

std::size_t FiniteGroup::element_order(Elem x) const {
  std::size_t k = 1;
  Elem y = x;
  while (y != identity_) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = x + 1; y < order_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

std::vector<std::vector<Elem>> FiniteGroup::table() const {
  std::vector<std::vector<Elem>> t(order_, std::vector<Elem>(order_));
  for (Elem x = 0; x < order_; ++x)
    for (Elem y = 0; y < order_; ++y) t[x][y] = mul(x, y);
  return t;
}

std::optional<Elem> FiniteGroup::find_permutation(const Permutation& p) const {
  for (Elem x = 0; x < perms_.size(); ++x)
    if (perms_[x] == p) return x;
  return std::nullopt;
}

GroupPtr make_group(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

GroupHom GroupHom::make(GroupPtr source, GroupPtr target, std::vector<Elem> image) {
  GroupHom f{std::move(source), std::move(target), std::move(image)};
  Report r = f.check();
  if (!r.ok()) throw Error(r.violations().front().code, r.violations().front().witness);
  return f;
}

GroupHom GroupHom::identity(const GroupPtr& g) {
  std::vector<Elem> img(g->order());
  std::iota(img.begin(), img.end(), Elem{0});
  return GroupHom{g, g, std::move(img)};
}

GroupHom GroupHom::trivial(const GroupPtr& source, const GroupPtr& target) {
  return GroupHom{source, target, std::vector<Elem>(source->order(), target->identity())};
}

Report GroupHom::check() const {
  Report r;
  if (!source || !target) {
    r.add(ErrorCode::InvalidInput, "missing source or target group");
    return r;
  }
  if (image.size() != source->order()) {
    r.add(ErrorCode::IndexOutOfRange, "image has " + std::to_string(image.size()) + " entries, source order " +
                                          std::to_string(source->order()));
    return r;
  }
  for (Elem x = 0; x < image.size(); ++x) {
    if (image[x] >= target->order()) {
      r.add(ErrorCode::IndexOutOfRange, "image of " + std::to_string(x) + " is " + std::to_string(image[x]));
      return r;
    }
  }
  if (image[source->identity()] != target->identity()) {
    r.add(ErrorCode::NotAHomomorphism, "identity not preserved");
    return r;
  }
  for (Elem x = 0; x < source->order(); ++x) {
    for (Elem y = 0; y < source->order(); ++y) {
      if (image[source->mul(x, y)] != target->mul(image[x], image[y])) {
        r.add(ErrorCode::NotAHomomorphism, "f(" + std::to_string(x) + "*" + std::to_string(y) + ") != f(" +
                                               std::to_string(x) + ")*f(" + std::to_string(y) + ")");
        return r;
      }
    }
  }
  const auto img = hom_image(*this);
  if (auto bad = subgroup_violation(*target, img)) r.add(ErrorCode::NotASubgroup, "image: " + *bad);
  return r;
}

GroupHom ad(Elem g, const GroupPtr& group) {
  if (g >= group->order()) throw Error(ErrorCode::IndexOutOfRange, "element " + std::to_string(g));
  std::vector<Elem> img(group->order());
  for (Elem h = 0; h < group->order(); ++h) img[h] = group->conj(g, h);
  return GroupHom{group, group, std::move(img)};
}

GroupHom compose_homs(const GroupHom& f, const GroupHom& g) {
  if (g.target != f.source && !(g.target && f.source && *g.target == *f.source)) {
    throw Error(ErrorCode::SourceTargetMismatch, "target of inner map differs from source of outer map");
  }
  std::vector<Elem> img(g.source->order());
  for (Elem x = 0; x < img.size(); ++x) img[x] = f.image[g.image[x]];
  return GroupHom{g.source, f.target, std::move(img)};
}

bool is_injective(const GroupHom& f) {
  std::vector<bool> hit(f.target->order(), false);
  for (Elem y : f.image) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

std::vector<Elem> hom_image(const GroupHom& f) {
  std::vector<Elem> img(f.image.begin(), f.image.end());
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

bool same_map(const GroupHom& f, const GroupHom& g) { return f.image == g.image; }

std::optional<std::string> subgroup_violation(const FiniteGroup& g, std::span<const Elem> elements) {
  std::vector<bool> in(g.order(), false);
  for (Elem x : elements) {
    if (x >= g.order()) return "element " + std::to_string(x) + " out of range";
    in[x] = true;
  }
  if (!in[g.identity()]) return std::string("identity missing");
  for (Elem x : elements) {
    if (!in[g.inv(x)]) return "inverse of " + std::to_string(x) + " missing";
    for (Elem y : elements) {
      if (!in[g.mul(x, y)]) return "product of pair (" + std::to_string(x) + "," + std::to_string(y) + ") missing";
    }
  }
  return std::nullopt;
}

CosetSpace cosets(const GroupPtr& group, std::span<const Elem> subgroup_elements) {
  if (auto bad = subgroup_violation(*group, subgroup_elements)) throw Error(ErrorCode::NotASubgroup, *bad);
  CosetSpace cs;
  cs.ambient = group;
  cs.subgroup.assign(subgroup_elements.begin(), subgroup_elements.end());
  std::sort(cs.subgroup.begin(), cs.subgroup.end());
  cs.subgroup.erase(std::unique(cs.subgroup.begin(), cs.subgroup.end()), cs.subgroup.end());
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  cs.index_of.assign(group->order(), kUnset);
  for (Elem x = 0; x < group->order(); ++x) {
    if (cs.index_of[x] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(cs.reps.size());
    cs.reps.push_back(x);
    for (Elem h : cs.subgroup) cs.index_of[group->mul(x, h)] = id;
  }
  return cs;
}

std::vector<Elem> subgroup_closure(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> elems{g.identity()};
  in[g.identity()] = true;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (Elem s : gens) {
      const Elem y = g.mul(elems[k], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Subgroup make_subgroup(const GroupPtr& ambient, std::span<const Elem> elements, std::string label) {
  if (auto bad = subgroup_violation(*ambient, elements)) throw Error(ErrorCode::NotASubgroup, *bad);
  std::vector<Elem> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // Identity of the ambient group first so that the subgroup's identity is 0.
  std::stable_partition(sorted.begin(), sorted.end(), [&](Elem x) { return x == ambient->identity(); });
  std::vector<std::uint32_t> local(ambient->order(), 0);
  for (std::uint32_t k = 0; k < sorted.size(); ++k) local[sorted[k]] = k;
  std::vector<std::vector<Elem>> table(sorted.size(), std::vector<Elem>(sorted.size()));
  for (std::size_t x = 0; x < sorted.size(); ++x)
    for (std::size_t y = 0; y < sorted.size(); ++y) table[x][y] = local[ambient->mul(sorted[x], sorted[y])];
  auto sub = make_group(FiniteGroup::from_cayley_table(table, 0, std::move(label)));
  return Subgroup{sub, GroupHom{sub, ambient, sorted}};
}

std::vector<long long> abelian_invariants(const FiniteGroup& g) {
  std::vector<Elem> commutators;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      commutators.push_back(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
  const auto derived = subgroup_closure(g, commutators);
  std::vector<bool> in_derived(g.order(), false);
  for (Elem x : derived) in_derived[x] = true;

  // One representative per coset of the derived subgroup.
  std::vector<Elem> reps;
  std::vector<bool> covered(g.order(), false);
  for (Elem x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Elem d : derived) covered[g.mul(x, d)] = true;
  }
  const auto quotient_order = static_cast<long long>(reps.size());

  // p-primary parts from counts of elements killed by p^k.
  std::map<long long, std::vector<int>> exponents;
  for (long long p : prime_factors(quotient_order)) {
    std::vector<int> log_counts{0};
    long long pk = 1;
    while (true) {
      pk *= p;
      long long count = 0;
      for (Elem r : reps)
        if (in_derived[g.pow(r, pk)]) ++count;
      int lg = 0;
      for (long long c = count; c > 1; c /= p) ++lg;
      log_counts.push_back(lg);
      if (log_counts.back() == log_counts[log_counts.size() - 2]) break;
    }
    // number of cyclic factors of exponent >= k is log_counts[k] - log_counts[k-1]
    std::vector<int> parts;
    for (std::size_t k = 1; k < log_counts.size(); ++k) {
      const int at_least_k = log_counts[k] - log_counts[k - 1];
      const int at_least_next = k + 1 < log_counts.size() ? log_counts[k + 1] - log_counts[k] : 0;
      for (int c = 0; c < at_least_k - at_least_next; ++c) parts.push_back(static_cast<int>(k));
    }
    std::sort(parts.rbegin(), parts.rend());
    exponents[p] = parts;
  }
  std::size_t width = 0;
  for (const auto& [p, parts] : exponents) width = std::max(width, parts.size());
  std::vector<long long> factors(width, 1);
  for (const auto& [p, parts] : exponents) {
    for (std::size_t k = 0; k < parts.size(); ++k) {
      long long q = 1;
      for (int e = 0; e < parts[k]; ++e) q *= p;
      factors[width - 1 - k] *= q;
    }
  }
  return factors;
}

GroupPtr trivial_group() { return make_group(FiniteGroup::from_cayley_table({{0}}, 0, "1")); }

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "cyclic group of order 0");
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = static_cast<Elem>((x + y) % n);
  return make_group(FiniteGroup::from_cayley_table(t, 0, "C" + std::to_string(n)));
}

GroupPtr dihedral_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "dihedral group of order 0");
  // Elements r^k s^e encoded as k + n*e; s r s = r^-1.
  const std::size_t order = 2 * n;
  std::vector<std::vector<Elem>> t(order, std::vector<Elem>(order));
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t k1 = x % n, e1 = x / n, k2 = y % n, e2 = y / n;
      const std::size_t k = e1 ? (k1 + n - k2) % n : (k1 + k2) % n;
      t[x][y] = static_cast<Elem>(k + n * ((e1 + e2) % 2));
    }
  }
  return make_group(FiniteGroup::from_cayley_table(t, 0, "D" + std::to_string(order)));
}

GroupPtr symmetric_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "symmetric group of degree 0");
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), 0u);
    std::swap(swap[0], swap[1]);
    for (std::size_t x = 0; x < n; ++x) cycle[x] = static_cast<std::uint32_t>((x + 1) % n);
    gens = {swap, cycle};
  }
  return make_group(FiniteGroup::from_permutation_generators(n, gens, kDefaultClosureCap, "S" + std::to_string(n)));
}

GroupPtr quaternion_group() {
  // Elements (sign, unit) with unit in {1,i,j,k}; index = unit + 4*sign.
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<Elem>> t(8, std::vector<Elem>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u1 = x % 4, s1 = x / 4, u2 = y % 4, s2 = y / 4;
      t[x][y] = static_cast<Elem>(kUnit[u1][u2] + 4 * ((s1 + s2 + kSign[u1][u2]) % 2));
    }
  }
  return make_group(FiniteGroup::from_cayley_table(t, 0, "Q8"));
}

GroupPtr relabel_group(const FiniteGroup& g, const std::vector<Elem>& perm) {
  const std::size_t n = g.order();
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) t[perm[x]][perm[y]] = perm[g.mul(x, y)];
  return make_group(FiniteGroup::from_cayley_table(t, perm[g.identity()], g.label()));
}

}  // namespace cogkit
