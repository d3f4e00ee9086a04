#include "hcpack/posa.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <string>

#include "hcpack/rng.hpp"

namespace hcpack {

ColorClassGraph::ColorClassGraph(Vertex n, std::span<const Edge> star, std::vector<Edge> boosters)
    : n_(n), offsets_(static_cast<std::size_t>(n) + 1, 0), boosters_(std::move(boosters)) {
  for (const Edge& e : star) {
    if (e.v >= n) throw InvalidParameter("star edge endpoint out of range");
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (Vertex v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  targets_.resize(offsets_[n]);
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : star) {
    targets_[fill[e.u]++] = e.v;
    targets_[fill[e.v]++] = e.u;
  }
  for (Vertex v = 0; v < n; ++v) {
    auto first = targets_.begin() + offsets_[v];
    auto last = targets_.begin() + offsets_[v + 1];
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) throw InvalidParameter("star edges repeat");
  }
  for (const Edge& b : boosters_) {
    if (b.v >= n) throw InvalidParameter("booster endpoint out of range");
    if (has_star_edge(b.u, b.v)) throw InvalidParameter("booster duplicates a star edge");
  }
}

bool ColorClassGraph::has_star_edge(Vertex a, Vertex b) const {
  auto nb = star_neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

PathState::PathState(Vertex n) : pos_(n, kAbsent) {}

PathState::PathState(Vertex n, std::span<const Vertex> sequence) : pos_(n, kAbsent) {
  seq_.reserve(sequence.size());
  for (Vertex v : sequence) push_back(v);
}

void PathState::push_back(Vertex v) {
  if (v >= pos_.size()) throw InvalidParameter("path vertex out of range");
  if (contains(v)) throw InvalidParameter("path vertex repeats: " + std::to_string(v));
  pos_[v] = static_cast<std::uint32_t>(seq_.size());
  seq_.push_back(v);
}

void PathState::push_front(Vertex v) {
  if (v >= pos_.size()) throw InvalidParameter("path vertex out of range");
  if (contains(v)) throw InvalidParameter("path vertex repeats: " + std::to_string(v));
  seq_.insert(seq_.begin(), v);
  for (std::size_t i = 0; i < seq_.size(); ++i) pos_[seq_[i]] = static_cast<std::uint32_t>(i);
}

void PathState::reverse_range(std::size_t first, std::size_t last) {
  std::reverse(seq_.begin() + static_cast<std::ptrdiff_t>(first), seq_.begin() + static_cast<std::ptrdiff_t>(last));
  for (std::size_t i = first; i < last; ++i) pos_[seq_[i]] = static_cast<std::uint32_t>(i);
}

PathState rotate(const ColorClassGraph& g, const PathState& path, std::size_t i) {
  const std::size_t k = path.size();
  if (k < 4 || i < 2 || i + 2 > k) {
    throw InvalidRotation("rotation index " + std::to_string(i) + " outside [2, " + std::to_string(k) + "-2]");
  }
  if (!g.has_star_edge(path[i - 1], path.back())) {
    throw InvalidRotation("no star edge {" + std::to_string(path[i - 1]) + "," + std::to_string(path.back()) + "}");
  }
  PathState out = path;
  out.reverse_range(i, k);
  return out;
}

PathState RotationTree::path_to(Vertex b) const {
  if (!contains(b)) throw InvalidParameter("vertex " + std::to_string(b) + " is not in END");
  if (auto it = stored_paths.find(b); it != stored_paths.end()) {
    return PathState(static_cast<Vertex>(parent.size()), it->second);
  }
  std::vector<Vertex> chain;
  for (Vertex x = b; parent[x] != x; x = parent[x]) chain.push_back(x);
  PathState p(static_cast<Vertex>(parent.size()), base);
  const std::size_t k = p.size();
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    p.reverse_range(p.position(pivot[*it]) + 1, k);
  }
  if (p.back() != b) throw ContractViolation("rotation replay ended at the wrong endpoint");
  return p;
}

namespace {

std::vector<Vertex> with_extra_back(const PathState& p, Vertex w) {
  std::vector<Vertex> out(p.vertices().begin(), p.vertices().end());
  out.push_back(w);
  return out;
}

std::vector<Vertex> with_extra_front(const PathState& p, Vertex w) {
  std::vector<Vertex> out;
  out.reserve(p.size() + 1);
  out.push_back(w);
  out.insert(out.end(), p.vertices().begin(), p.vertices().end());
  return out;
}

}  // namespace

RotationTree compute_end_set(const ColorClassGraph& g, const PathState& path, Vertex fixed,
                             const EndSetOptions& options) {
  if (path.empty()) throw InvalidParameter("rotation search on an empty path");
  if (fixed != path.front() && fixed != path.back()) throw InvalidParameter("fixed vertex is not a path endpoint");

  PathState work = path;
  if (fixed != work.front()) work.reverse();
  const std::size_t k = work.size();
  const Vertex root = work.back();

  RotationTree tree;
  tree.fixed = fixed;
  tree.base.assign(work.vertices().begin(), work.vertices().end());
  tree.parent.assign(g.n(), kNoVertex);
  tree.pivot.assign(g.n(), kNoVertex);
  tree.parent[root] = root;
  tree.endpoints.push_back(root);

  for (Vertex w : g.star_neighbors(fixed)) {
    if (!work.contains(w)) {
      tree.extension = with_extra_front(work, w);
      if (options.stop_at_extension) return tree;
      break;
    }
  }

  // Returns true when the search should stop.
  auto inspect = [&](Vertex x) {
    for (Vertex w : g.star_neighbors(x)) {
      if (!work.contains(w)) {
        if (!tree.extension) tree.extension = with_extra_back(work, w);
        if (options.stop_at_extension) return true;
      } else if (w == fixed && k >= 3 && options.record_closure && !tree.closure) {
        tree.closure.emplace(work.vertices().begin(), work.vertices().end());
      }
    }
    return false;
  };

  if (k == 1) {
    tree.complete = !inspect(root) || !options.stop_at_extension;
    return tree;
  }
  if (inspect(root)) return tree;

  if (options.exact) {
    std::set<std::vector<Vertex>> seen{tree.base};
    std::vector<std::vector<Vertex>> pending{tree.base};
    tree.stored_paths.emplace(root, tree.base);
    while (!pending.empty()) {
      std::vector<Vertex> p = std::move(pending.back());
      pending.pop_back();
      const Vertex x = p.back();
      for (std::size_t i = 1; i + 2 < k; ++i) {
        if (!g.has_star_edge(p[i], x)) continue;
        std::vector<Vertex> r = p;
        std::reverse(r.begin() + static_cast<std::ptrdiff_t>(i) + 1, r.end());
        if (!seen.insert(r).second) continue;
        if (seen.size() > options.max_states) return tree;
        const Vertex z = r.back();
        if (tree.parent[z] == kNoVertex) {
          tree.parent[z] = x;
          tree.endpoints.push_back(z);
          tree.stored_paths.emplace(z, r);
          work = PathState(g.n(), r);
          if (inspect(z)) return tree;
        }
        pending.push_back(std::move(r));
      }
    }
    tree.complete = true;
    return tree;
  }

  struct Frame {
    Vertex x;
    std::uint32_t next;
    std::uint32_t undo_from;  // 0 for the root
  };
  std::vector<Frame> stack{{root, 0, 0}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto nbrs = g.star_neighbors(top.x);
    if (top.next == nbrs.size()) {
      if (top.undo_from != 0) work.reverse_range(top.undo_from, k);
      stack.pop_back();
      continue;
    }
    const Vertex y = nbrs[top.next++];
    const std::size_t i = work.position(y);
    if (i < 1 || i + 3 > k) continue;  // pivot must sit at x_2 .. x_{k-2}
    const Vertex z = work[i + 1];
    if (tree.parent[z] != kNoVertex) continue;
    tree.parent[z] = top.x;
    tree.pivot[z] = y;
    tree.endpoints.push_back(z);
    work.reverse_range(i + 1, k);
    if (inspect(z)) return tree;
    stack.push_back({z, 0, static_cast<std::uint32_t>(i + 1)});
  }
  tree.complete = true;
  return tree;
}

std::size_t end_set_neighborhood(const ColorClassGraph& g, const RotationTree& tree) {
  std::vector<bool> seen(g.n(), false);
  for (Vertex b : tree.endpoints) seen[b] = true;
  std::size_t count = 0;
  for (Vertex b : tree.endpoints) {
    for (Vertex w : g.star_neighbors(b)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
      }
    }
  }
  return count;
}

std::optional<PathState> extend_path(const ColorClassGraph& g, const RotationTree& tree) {
  if (tree.extension) return PathState(g.n(), *tree.extension);
  if (tree.complete) return std::nullopt;
  // Partial tree without a recorded extension: probe each endpoint directly.
  PathState base(g.n(), tree.base);
  for (Vertex w : g.star_neighbors(tree.fixed)) {
    if (!base.contains(w)) return PathState(g.n(), with_extra_front(base, w));
  }
  for (Vertex b : tree.endpoints) {
    for (Vertex w : g.star_neighbors(b)) {
      if (!base.contains(w)) return PathState(g.n(), with_extra_back(tree.path_to(b), w));
    }
  }
  return std::nullopt;
}

namespace {

enum class CloseResult { kHamilton, kLonger, kStuck };

// Turns a closed cycle into either a Hamilton cycle or a path one longer
// than the cycle, leaving via the first star edge to an outside vertex.
CloseResult close_cycle(const ColorClassGraph& g, const std::vector<Vertex>& cycle, RotationState& state) {
  const Vertex n = g.n();
  if (cycle.size() == n) return CloseResult::kHamilton;
  std::vector<std::uint32_t> at(n, static_cast<std::uint32_t>(-1));
  for (std::size_t i = 0; i < cycle.size(); ++i) at[cycle[i]] = static_cast<std::uint32_t>(i);
  for (Vertex x = 0; x < n; ++x) {
    if (at[x] == static_cast<std::uint32_t>(-1)) continue;
    for (Vertex w : g.star_neighbors(x)) {
      if (at[w] != static_cast<std::uint32_t>(-1)) continue;
      PathState next(n);
      next.push_back(w);
      const std::size_t j = at[x];
      for (std::size_t s = 0; s < cycle.size(); ++s) next.push_back(cycle[(j + s) % cycle.size()]);
      state.path = std::move(next);
      return CloseResult::kLonger;
    }
  }
  return CloseResult::kStuck;
}

const RotationTree& secondary_tree(const ColorClassGraph& g, RotationState& state, Vertex x) {
  auto it = state.secondary.find(x);
  if (it != state.secondary.end()) return it->second;
  const PathState px = state.primary->path_to(x);
  auto tree = compute_end_set(g, px, x, EndSetOptions{.stop_at_extension = false, .record_closure = true});
  return state.secondary.emplace(x, std::move(tree)).first->second;
}

bool path_is_valid(const ColorClassGraph& g, const PathState& p, const std::unordered_set<std::uint64_t>& boosters) {
  for (std::size_t i = 1; i < p.size(); ++i) {
    const Vertex a = p[i - 1];
    const Vertex b = p[i];
    if (!g.has_star_edge(a, b) && !boosters.contains(Edge(a, b).key())) return false;
  }
  return true;
}

PathState greedy_path(const ColorClassGraph& g, Vertex start) {
  const Vertex n = g.n();
  PathState path(n);
  std::vector<std::uint32_t> free_degree(n);
  for (Vertex v = 0; v < n; ++v) free_degree[v] = g.star_degree(v);
  auto visit = [&](Vertex v) {
    for (Vertex w : g.star_neighbors(v)) --free_degree[w];
  };
  // Warnsdorff's rule: step to the neighbor with the fewest unvisited neighbors.
  auto grow = [&] {
    for (;;) {
      Vertex best = kNoVertex;
      for (Vertex w : g.star_neighbors(path.back())) {
        if (!path.contains(w) && (best == kNoVertex || free_degree[w] < free_degree[best])) best = w;
      }
      if (best == kNoVertex) return;
      path.push_back(best);
      visit(best);
    }
  };
  path.push_back(start);
  visit(start);
  grow();
  path.reverse();
  grow();
  return path;
}

}  // namespace

BoosterStep try_boosters(const ColorClassGraph& g, RotationState& state, const EngineOptions& options) {
  if (!state.primary) throw ContractViolation("try_boosters needs END(a) for the current path");
  const RotationTree& primary = *state.primary;
  const Vertex a = primary.fixed;
  const auto boosters = g.boosters();
  while (state.cursor < boosters.size()) {
    const Edge f = boosters[state.cursor++];
    ++state.stats.boosters_examined;
    for (auto [x, y] : {std::pair{f.u, f.v}, std::pair{f.v, f.u}}) {
      std::optional<PathState> closing;
      if (x == a) {
        if (primary.contains(y)) closing = primary.path_to(y);
      } else if (primary.contains(x)) {
        const RotationTree& tx = secondary_tree(g, state, x);
        if (tx.contains(y)) {
          closing = tx.path_to(y);
        } else if (tx.extension) {
          // Rotations from the other side reached a vertex off the path.
          state.path = PathState(g.n(), *tx.extension);
          ++state.stats.extensions;
          return {BoosterStep::Kind::kLongerPath, {}};
        }
      }
      if (!closing) continue;
      std::vector<Vertex> cycle(closing->vertices().begin(), closing->vertices().end());
      state.applied.insert(f.key());
      const CloseResult r = close_cycle(g, cycle, state);
      if (r == CloseResult::kHamilton) {
        ++state.stats.boosters_used;
        return {BoosterStep::Kind::kHamiltonCycle, std::move(cycle)};
      }
      if (r == CloseResult::kLonger) {
        ++state.stats.boosters_used;
        return {BoosterStep::Kind::kLongerPath, {}};
      }
      // The cycle spans a whole star component; the booster cannot help.
      state.applied.erase(f.key());
      break;
    }
  }
  (void)options;
  return {BoosterStep::Kind::kExhausted, {}};
}

bool verify_hamilton_cycle(const ColorClassGraph& g, std::span<const Vertex> cycle,
                           const std::unordered_set<std::uint64_t>& boosters) {
  const Vertex n = g.n();
  if (n < 3 || cycle.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : cycle) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % n];
    if (!g.has_star_edge(a, b) && !boosters.contains(Edge(a, b).key())) return false;
  }
  return true;
}

CycleResult find_hamilton_cycle(const ColorClassGraph& g, const EngineOptions& options) {
  const Vertex n = g.n();
  CycleResult result;
  if (n < 3) return result;

  Rng rng(options.seed);
  RotationState state(n);
  state.path = greedy_path(g, static_cast<Vertex>(rng.below(n)));

  auto succeed = [&](std::vector<Vertex> cycle) {
    if (!verify_hamilton_cycle(g, cycle, state.applied)) {
      throw ContractViolation("engine produced a cycle that does not verify");
    }
    result.outcome = CycleOutcome::kHamiltonCycle;
    result.cycle = std::move(cycle);
    result.final_path_length = n;
    result.stats = state.stats;
    return result;
  };

  for (;;) {
    ++state.stats.rounds;
    state.secondary.clear();
    const std::size_t length = state.path.size();
    if (options.validate_paths && !path_is_valid(g, state.path, state.applied)) {
      throw ContractViolation("current path uses an edge outside this class");
    }

    RotationTree tree = compute_end_set(g, state.path, state.path.front());
    if (auto longer = extend_path(g, tree)) {
      state.path = std::move(*longer);
      ++state.stats.extensions;
      continue;
    }
    if (!tree.closure) {
      ++state.stats.posa_checks;
      if (end_set_neighborhood(g, tree) >= 2 * tree.size()) ++state.stats.posa_violations;
    }
    state.primary = std::move(tree);

    if (!options.strict_boosters) {
      bool progressed = false;
      auto use_closure = [&](const std::vector<Vertex>& cycle) -> std::optional<CycleResult> {
        const CloseResult r = close_cycle(g, cycle, state);
        if (r == CloseResult::kHamilton) {
          ++state.stats.star_closures;
          return succeed(cycle);
        }
        if (r == CloseResult::kLonger) {
          ++state.stats.star_closures;
          progressed = true;
        }
        return std::nullopt;
      };
      if (state.primary->closure) {
        if (auto done = use_closure(*state.primary->closure)) return *done;
      }
      const std::size_t limit = std::min(options.secondary_closure_limit, state.primary->endpoints.size());
      for (std::size_t i = 0; i < limit && !progressed; ++i) {
        const RotationTree& tb = secondary_tree(g, state, state.primary->endpoints[i]);
        if (tb.extension) {
          state.path = PathState(n, *tb.extension);
          ++state.stats.extensions;
          progressed = true;
        } else if (tb.closure) {
          if (auto done = use_closure(*tb.closure)) return *done;
        }
      }
      if (progressed) continue;
    }

    BoosterStep step = try_boosters(g, state, options);
    if (step.kind == BoosterStep::Kind::kHamiltonCycle) return succeed(std::move(step.cycle));
    if (step.kind == BoosterStep::Kind::kExhausted) break;
    if (state.path.size() <= length) throw ContractViolation("path did not grow after a booster");
  }

  result.final_path_length = state.path.size();
  result.stats = state.stats;
  return result;
}

void dump_cycle(std::ostream& out, int color, std::span<const Vertex> cycle) {
  out << color;
  for (Vertex v : cycle) out << ' ' << v;
  out << '\n';
}

}  // namespace hcpack
