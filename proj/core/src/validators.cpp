#include "hcpack/validators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>

#include "hcpack/formulas.hpp"

namespace hcpack {

Graph::Graph(Vertex n, std::span<const Edge> edges) : adjacency_(n) {
  for (const Edge& e : edges) {
    if (e.v >= n) throw InvalidParameter("edge endpoint out of range");
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  edges_ = edges.size();
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      return "skipped";
  }
  return "unknown";
}

CheckResult CheckResult::pass(std::string name, std::string detail) {
  return {std::move(name), Verdict::kPass, std::move(detail), {}};
}

CheckResult CheckResult::fail(std::string name, std::string detail, std::vector<std::uint64_t> witness) {
  if (witness.empty()) throw ContractViolation("failing check " + name + " has no witness");
  return {std::move(name), Verdict::kFail, std::move(detail), std::move(witness)};
}

CheckResult CheckResult::skipped(std::string name, std::string reason) {
  return {std::move(name), Verdict::kSkipped, std::move(reason), {}};
}

const CheckResult* ValidatorReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

double default_divisor(int q, double divisor) { return divisor > 0.0 ? divisor : 100.0 * q; }

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Independent re-check of a witness; a mismatch means the check itself is broken.
void require_witness(bool holds, const std::string& check) {
  if (!holds) throw ContractViolation("witness for " + check + " does not re-verify");
}

bool is_simple_path(const Graph& g, std::span<const std::uint64_t> p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j]) return false;
    }
    if (i > 0 && !g.has_edge(static_cast<Vertex>(p[i - 1]), static_cast<Vertex>(p[i]))) return false;
  }
  return true;
}

bool is_cycle(const Graph& g, std::span<const std::uint64_t> c) {
  return c.size() >= 3 && is_simple_path(g, c) &&
         g.has_edge(static_cast<Vertex>(c.back()), static_cast<Vertex>(c.front()));
}

}  // namespace

SmallClassification classify_small(const Graph& g, int q, double divisor) {
  SmallClassification sc;
  sc.threshold = formulas::small_threshold(g.n(), default_divisor(q, divisor));
  sc.small.assign(g.n(), false);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (static_cast<int>(g.degree(v)) < sc.threshold) {
      sc.small[v] = true;
      sc.small_vertices.push_back(v);
    }
  }
  return sc;
}

CheckResult find_small_structures(const Graph& g, const SmallClassification& small) {
  const std::string name = "small_structures";
  if (small.vacuous()) return CheckResult::skipped(name, "vacuous threshold: floor(ln n/100q) < 1");
  const Vertex n = g.n();

  // Path of length <= 5 between two small vertices (covers adjacent small pairs).
  std::vector<int> dist(n, -1);
  std::vector<Vertex> parent(n, kNoVertex);
  for (Vertex s : small.small_vertices) {
    std::vector<Vertex> touched{s};
    std::queue<Vertex> bfs;
    dist[s] = 0;
    bfs.push(s);
    Vertex hit = kNoVertex;
    while (!bfs.empty() && hit == kNoVertex) {
      const Vertex x = bfs.front();
      bfs.pop();
      if (dist[x] == 5) continue;
      for (Vertex w : g.neighbors(x)) {
        if (dist[w] != -1) continue;
        dist[w] = dist[x] + 1;
        parent[w] = x;
        touched.push_back(w);
        if (small.is_small(w)) {
          hit = w;
          break;
        }
        bfs.push(w);
      }
    }
    if (hit != kNoVertex) {
      std::vector<std::uint64_t> path;
      for (Vertex x = hit; x != s; x = parent[x]) path.push_back(x);
      path.push_back(s);
      require_witness(is_simple_path(g, path) && path.size() <= 6 && small.is_small(s) && small.is_small(hit), name);
      return CheckResult::fail(name, "path of length " + str(path.size() - 1) + " between small vertices", path);
    }
    for (Vertex x : touched) dist[x] = -1;
  }

  // C3 or C4 through a small vertex.
  std::vector<Vertex> via(n, kNoVertex);
  for (Vertex s : small.small_vertices) {
    const auto nb = g.neighbors(s);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) {
          std::vector<std::uint64_t> c{s, nb[i], nb[j]};
          require_witness(is_cycle(g, c), name);
          return CheckResult::fail(name, "triangle through a small vertex", c);
        }
      }
    }
    std::vector<Vertex> touched;
    for (Vertex a : nb) {
      for (Vertex x : g.neighbors(a)) {
        if (x == s) continue;
        if (via[x] != kNoVertex && via[x] != a) {
          std::vector<std::uint64_t> c{s, via[x], x, a};
          require_witness(is_cycle(g, c), name);
          return CheckResult::fail(name, "4-cycle through a small vertex", c);
        }
        if (via[x] == kNoVertex) {
          via[x] = a;
          touched.push_back(x);
        }
      }
    }
    for (Vertex x : touched) via[x] = kNoVertex;
  }

  // Two distinct triangles sharing a vertex.
  std::vector<std::array<Vertex, 3>> first(n, {kNoVertex, kNoVertex, kNoVertex});
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w <= v || !g.has_edge(u, w)) continue;
        const std::array<Vertex, 3> tri{u, v, w};
        for (Vertex x : tri) {
          if (first[x][0] == kNoVertex) {
            first[x] = tri;
          } else if (first[x] != tri) {
            std::vector<std::uint64_t> wit{first[x][0], first[x][1], first[x][2], u, v, w};
            require_witness(is_cycle(g, std::span(wit).first(3)) && is_cycle(g, std::span(wit).last(3)), name);
            return CheckResult::fail(name, "two triangles sharing vertex " + str(x), wit);
          }
        }
      }
    }
  }
  return CheckResult::pass(name, str(small.small_vertices.size()) + " small vertices");
}

CheckResult degree_tail_check(const Graph& g, int q, double omega, double divisor) {
  const std::string name = "degree_tail";
  const int upper = formulas::small_threshold(g.n(), default_divisor(q, divisor));
  if (upper < q - 1) {
    return CheckResult::skipped(name, "vacuous range: floor(ln n/100q)=" + str(upper) + " < q-1");
  }
  std::vector<std::vector<Vertex>> by_degree(upper + 1);
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto d = g.degree(v);
    if (d <= static_cast<std::uint32_t>(upper)) by_degree[d].push_back(v);
  }
  for (int k = std::max(q - 1, 1); k <= upper; ++k) {
    const double limit = formulas::nu(g.n(), q, k, omega);
    if (static_cast<double>(by_degree[k].size()) >= limit) {
      std::vector<std::uint64_t> wit(by_degree[k].begin(), by_degree[k].end());
      require_witness(std::all_of(wit.begin(), wit.end(),
                                  [&](std::uint64_t v) { return g.degree(static_cast<Vertex>(v)) == static_cast<std::uint32_t>(k); }),
                      name);
      return CheckResult::fail(name, str(wit.size()) + " vertices of degree " + str(k) + " >= nu_k=" + str(limit), wit);
    }
  }
  return CheckResult::pass(name, "k in [" + str(q - 1) + "," + str(upper) + "]");
}

CheckResult max_degree_check(const Graph& g) {
  const std::string name = "max_degree";
  const double bound = formulas::max_degree_bound(g.n());
  Vertex worst = 0;
  for (Vertex v = 1; v < g.n(); ++v) {
    if (g.degree(v) > g.degree(worst)) worst = v;
  }
  if (g.n() > 0 && g.degree(worst) >= bound) {
    require_witness(g.degree(worst) >= bound, name);
    return CheckResult::fail(name, "degree " + str(g.degree(worst)) + " >= 20 ln n=" + str(bound), {worst});
  }
  return CheckResult::pass(name, "max degree " + str(g.n() ? g.degree(worst) : 0));
}

CheckResult color_list_check(const Graph& g, std::span<const std::uint32_t> color_degrees, int q) {
  const std::string name = "color_lists";
  if (color_degrees.size() != static_cast<std::size_t>(g.n()) * q) {
    throw InvalidParameter("color degree table does not match the graph");
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto row = color_degrees.subspan(static_cast<std::size_t>(v) * q, q);
    const auto missing = static_cast<int>(std::count(row.begin(), row.end(), 0u));
    const auto total = std::accumulate(row.begin(), row.end(), std::uint64_t{0});
    const int d = static_cast<int>(g.degree(v));
    const int target = std::max(0, q - d);
    if (total != static_cast<std::uint64_t>(d) || missing != target) {
      return CheckResult::fail(name,
                               "vertex " + str(v) + " has degree " + str(d) + " but misses " + str(missing) +
                                   " colors (expected " + str(target) + ")",
                               {v});
    }
  }
  return CheckResult::pass(name);
}

std::vector<CheckResult> star_degree_check(const MergedColoring& merged, std::span<const std::uint32_t> star_degrees,
                                           int q, const SmallClassification& small, int d_full) {
  std::vector<CheckResult> out;
  const Vertex n = merged.n;
  {
    const std::string name = "star_degree_merged";
    std::optional<CheckResult> bad;
    std::uint32_t overall_min = ~0u;
    for (std::size_t c = 0; c < merged.classes.size() && !bad; ++c) {
      std::vector<std::uint32_t> deg(n, 0);
      for (const Edge& e : merged.classes[c].star) {
        ++deg[e.u];
        ++deg[e.v];
      }
      for (Vertex v = 0; v < n; ++v) {
        overall_min = std::min(overall_min, deg[v]);
        if (deg[v] < 2) {
          bad = CheckResult::fail(name, "vertex " + str(v) + " has star degree " + str(deg[v]) + " in color " + str(c),
                                  {c, v});
          break;
        }
      }
    }
    out.push_back(bad ? *bad : CheckResult::pass(name, "min merged star degree " + str(overall_min)));
  }
  {
    const std::string name = "star_degree_internal";
    if (star_degrees.size() != static_cast<std::size_t>(n) * q) throw InvalidParameter("star degree table size");
    std::optional<CheckResult> bad;
    for (Vertex v = 0; v < n && !bad; ++v) {
      if (small.is_small(v)) continue;
      for (int c = 0; c < q; ++c) {
        if (star_degrees[static_cast<std::size_t>(v) * q + c] < static_cast<std::uint32_t>(d_full)) {
          bad = CheckResult::fail(name, "large vertex " + str(v) + " below d_full in internal color " + str(c),
                                  {v, static_cast<std::uint64_t>(c)});
          break;
        }
      }
    }
    out.push_back(bad ? *bad : CheckResult::pass(name, "d_full=" + str(d_full)));
  }
  return out;
}

std::vector<CheckResult> full_size_check(Vertex n, int q, double eps, std::size_t full_prime_size,
                                         std::size_t full_size, double exponent) {
  std::vector<CheckResult> out;
  const double prime_bound = formulas::full_prime_bound(n, q, eps);
  if (prime_bound <= 0.0) {
    out.push_back(CheckResult::skipped("full_prime_size", "vacuous: bound " + str(prime_bound) + " <= 0"));
  } else if (static_cast<double>(full_prime_size) >= prime_bound) {
    out.push_back(CheckResult::pass("full_prime_size", str(full_prime_size) + " >= " + str(prime_bound)));
  } else {
    out.push_back(CheckResult::fail("full_prime_size", str(full_prime_size) + " < " + str(prime_bound),
                                    {full_prime_size}));
  }
  const double bound = formulas::full_bound(n, exponent);
  if (bound <= 0.0) {
    out.push_back(CheckResult::skipped("full_size", "vacuous: bound " + str(bound) + " <= 0"));
  } else if (static_cast<double>(full_size) >= bound) {
    out.push_back(CheckResult::pass("full_size", str(full_size) + " >= " + str(bound)));
  } else {
    out.push_back(CheckResult::fail("full_size", str(full_size) + " < " + str(bound), {full_size}));
  }
  return out;
}

CheckResult pool_size_check(const MergedColoring& merged, int q) {
  const std::string name = "pool_sizes";
  const double floor_size = formulas::pool_floor(merged.n, q);
  std::ostringstream detail;
  for (std::size_t c = 0; c < merged.classes.size(); ++c) {
    const auto& cls = merged.classes[c];
    detail << "c" << c << ": star=" << cls.star.size() << " plus=" << cls.boosters.size() << "; ";
    if (static_cast<double>(cls.star.size()) < floor_size || static_cast<double>(cls.boosters.size()) < floor_size) {
      return CheckResult::fail(name, detail.str() + "below m_+=" + str(floor_size),
                               {c, cls.star.size(), cls.boosters.size()});
    }
  }
  return CheckResult::pass(name, detail.str() + "m_+=" + str(floor_size));
}

namespace {

// |N(S)| and e(S) for a vertex set, with scratch marks.
struct SetProbe {
  const Graph& g;
  std::vector<std::uint8_t> mark;  // 1 in S, 2 in N(S)

  explicit SetProbe(const Graph& graph) : g(graph), mark(graph.n(), 0) {}

  std::pair<std::size_t, std::size_t> measure(std::span<const Vertex> s) {
    for (Vertex v : s) mark[v] = 1;
    std::size_t nbhd = 0;
    std::size_t inside = 0;
    std::vector<Vertex> touched;
    for (Vertex v : s) {
      for (Vertex w : g.neighbors(v)) {
        if (mark[w] == 1) {
          ++inside;
        } else if (mark[w] == 0) {
          mark[w] = 2;
          touched.push_back(w);
          ++nbhd;
        }
      }
    }
    for (Vertex v : s) mark[v] = 0;
    for (Vertex w : touched) mark[w] = 0;
    return {nbhd, inside / 2};
  }
};

}  // namespace

CheckResult expansion_sampler(const Graph& star, const ExpansionOptions& options, Rng& rng, std::string name) {
  const Vertex n = star.n();
  const auto cap = static_cast<std::size_t>(std::floor(options.alpha * n));
  if (cap < 1) return CheckResult::skipped(name, "vacuous: floor(alpha n) < 1");
  const double ln = std::log(static_cast<double>(n));
  const auto dense_cap = static_cast<std::size_t>(std::floor(n / (ln * ln * ln)));
  SetProbe probe(star);
  std::size_t sampled = 0;

  auto test = [&](std::span<const Vertex> s) -> std::optional<CheckResult> {
    ++sampled;
    const auto [nbhd, inside] = probe.measure(s);
    std::vector<std::uint64_t> wit(s.begin(), s.end());
    if (nbhd < 2 * s.size()) {
      SetProbe again(star);
      require_witness(again.measure(s).first == nbhd, name);
      return CheckResult::fail(name, "|N(S)|=" + str(nbhd) + " < 2|S|=" + str(2 * s.size()), wit);
    }
    if (s.size() <= dense_cap && inside > 2 * s.size()) {
      return CheckResult::fail(name, "e(R)=" + str(inside) + " > 2|R|=" + str(2 * s.size()), wit);
    }
    return std::nullopt;
  };

  // Singletons, then pairs of minimum-degree vertices.
  std::uint32_t min_deg = ~0u;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex one[1] = {v};
    if (auto bad = test(one)) return *bad;
    min_deg = std::min(min_deg, star.degree(v));
  }
  std::vector<Vertex> lowest;
  for (Vertex v = 0; v < n && lowest.size() < options.max_pair_vertices; ++v) {
    if (star.degree(v) == min_deg) lowest.push_back(v);
  }
  if (cap >= 2) {
    for (std::size_t i = 0; i < lowest.size(); ++i) {
      for (std::size_t j = i + 1; j < lowest.size(); ++j) {
        const Vertex two[2] = {lowest[i], lowest[j]};
        if (auto bad = test(two)) return *bad;
      }
    }
  }

  // Uniform random sets with sizes on a doubling grid.
  std::vector<std::size_t> grid;
  for (std::size_t s = 1; s < cap; s *= 2) grid.push_back(s);
  grid.push_back(cap);
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  for (std::size_t i = 0; i < options.samples; ++i) {
    const std::size_t size = grid[i % grid.size()];
    for (std::size_t j = 0; j < size; ++j) std::swap(pool[j], pool[j + rng.below(n - j)]);
    if (auto bad = test(std::span(pool).first(size))) return *bad;
  }

  // Greedy growth: add the frontier vertex that enlarges N(S) the least.
  const std::size_t greedy_cap = std::min(cap, options.greedy_max_size);
  std::vector<std::uint8_t> state(n, 0);  // 1 in S, 2 in N(S)
  for (std::size_t seed_i = 0; seed_i < std::min(options.greedy_seeds, lowest.size()); ++seed_i) {
    std::fill(state.begin(), state.end(), 0);
    std::vector<Vertex> s;
    std::vector<Vertex> frontier;
    auto add = [&](Vertex v) {
      state[v] = 1;
      s.push_back(v);
      for (Vertex w : star.neighbors(v)) {
        if (state[w] == 0) {
          state[w] = 2;
          frontier.push_back(w);
        }
      }
    };
    add(lowest[seed_i]);
    while (s.size() < greedy_cap) {
      Vertex best = kNoVertex;
      long best_gain = 0;
      for (Vertex x : frontier) {
        if (state[x] != 2) continue;
        long gain = -1;
        for (Vertex w : star.neighbors(x)) gain += state[w] == 0 ? 1 : 0;
        if (best == kNoVertex || gain < best_gain) {
          best = x;
          best_gain = gain;
        }
      }
      if (best == kNoVertex) break;
      add(best);
      std::erase_if(frontier, [&](Vertex x) { return state[x] != 2; });
      if (auto bad = test(s)) return *bad;
    }
  }
  return CheckResult::pass(name, str(sampled) + " sets up to size " + str(cap));
}

CheckResult connectivity_check(const Graph& star, std::string name) {
  const Vertex n = star.n();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> members;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      members[id].push_back(x);
      for (Vertex w : star.neighbors(x)) {
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  if (members.size() <= 1) return CheckResult::pass(name);
  auto smallest = std::min_element(members.begin(), members.end(),
                                    [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::uint64_t> wit(smallest->begin(), smallest->end());
  std::sort(wit.begin(), wit.end());
  for (std::uint64_t v : wit) {
    for (Vertex w : star.neighbors(static_cast<Vertex>(v))) {
      require_witness(std::binary_search(wit.begin(), wit.end(), w), name);
    }
  }
  return CheckResult::fail(name, str(members.size()) + " components; smallest has " + str(wit.size()) + " vertices",
                           wit);
}

std::vector<CheckResult> post_teps_degree_check(const Graph& at_m, std::span<const std::uint32_t> degree_at_teps,
                                                std::span<const Edge> late_edges, const FullSet& full,
                                                const SmallClassification& small, double eps) {
  const Vertex n = at_m.n();
  const double ln = std::log(static_cast<double>(n));
  const double many = eps * ln / 200.0;
  const double half = eps * ln / 400.0;
  std::vector<CheckResult> out;
  if (half < 1.0) {
    out.push_back(CheckResult::skipped("late_edges_to_full", "vacuous: eps ln n/400 < 1"));
    out.push_back(CheckResult::skipped("late_degree_large", "vacuous: eps ln n/200 < 1"));
    return out;
  }
  std::vector<std::uint32_t> late(n, 0);
  std::vector<std::uint32_t> late_to_full(n, 0);
  for (const Edge& e : late_edges) {
    ++late[e.u];
    ++late[e.v];
    if (full.contains(e.v)) ++late_to_full[e.u];
    if (full.contains(e.u)) ++late_to_full[e.v];
  }
  {
    std::optional<CheckResult> bad;
    for (Vertex v = 0; v < n && !bad; ++v) {
      require_witness(late[v] == at_m.degree(v) - degree_at_teps[v], "late_edges_to_full");
      if (!full.contains(v) && late[v] >= many && late_to_full[v] <= half) {
        bad = CheckResult::fail("late_edges_to_full",
                                "vertex " + str(v) + " outside Full: " + str(late[v]) + " late edges, " +
                                    str(late_to_full[v]) + " to Full",
                                {v});
      }
    }
    out.push_back(bad ? *bad : CheckResult::pass("late_edges_to_full"));
  }
  {
    std::optional<CheckResult> bad;
    for (Vertex v = 0; v < n && !bad; ++v) {
      if (!small.is_small(v) && late[v] < many) {
        bad = CheckResult::fail("late_degree_large", "large vertex " + str(v) + " has " + str(late[v]) + " late edges",
                                {v});
      }
    }
    out.push_back(bad ? *bad : CheckResult::pass("late_degree_large"));
  }
  return out;
}

CheckResult hitting_window_check(Vertex n, int q, std::uint64_t tau, double omega, Vertex min_n) {
  const std::string name = "hitting_window";
  if (n < min_n) return CheckResult::skipped(name, "n below " + str(min_n));
  const double lo = formulas::snapshot_time(n, q, omega);
  const double hi = formulas::window_upper(n, q, omega);
  const auto t = static_cast<double>(tau);
  if (t >= lo && t <= hi) return CheckResult::pass(name, str(lo) + " <= " + str(tau) + " <= " + str(hi));
  return CheckResult::fail(name, "tau=" + str(tau) + " outside [" + str(lo) + "," + str(hi) + "]", {tau});
}

}  // namespace hcpack
