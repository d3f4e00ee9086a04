#include "hcpack/coloring.hpp"

#include "hcpack/formulas.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>

namespace hcpack {

std::string_view to_string(Pool pool) { return pool == Pool::kStar ? "star" : "plus"; }

FullSet::FullSet(std::vector<bool> members, std::uint64_t freeze_time, int d_full)
    : members_(std::move(members)), freeze_time_(freeze_time), d_full_(d_full) {
  for (bool b : members_) size_ += b ? 1 : 0;
}

void InvariantTally::record(bool ok, const std::string& witness_if_bad) {
  ++checks;
  if (!ok) {
    if (violations == 0) first_witness = witness_if_bad;
    ++violations;
  }
}

namespace {

int d_full_for(Vertex n, const ColoringParams& p) {
  if (p.d_full_override) {
    if (*p.d_full_override < 1) throw InvalidParameter("d_full override must be >= 1");
    return *p.d_full_override;
  }
  return formulas::d_full(n, 2 * p.sigma, p.epsilon);
}

std::string edge_text(const Edge& e, std::uint64_t t) {
  return "t=" + std::to_string(t) + " {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

ColoringState::ColoringState(Vertex n, const ColoringParams& params)
    : n_(n), sigma_(params.sigma), q_(2 * params.sigma), epsilon_(params.epsilon), rng_(params.seed) {
  if (n < 3) throw InvalidParameter("coloring needs n >= 3");
  if (params.sigma < 2) throw InvalidParameter("sigma must be >= 2");
  if (q_ > kMaxColors) throw InvalidParameter("sigma too large: at most 32 colors supported");
  if (!(params.epsilon > 0.0)) throw InvalidParameter("epsilon must be positive");
  d_full_ = d_full_for(n, params);
  t_eps_ = formulas::t_eps(n, epsilon_);
  const std::size_t cells = static_cast<std::size_t>(n) * q_;
  color_degree_.assign(cells, 0);
  star_degree_.assign(cells, 0);
  const ColorMask all = q_ == 64 ? ~ColorMask{0} : ((ColorMask{1} << q_) - 1);
  need_.assign(n, all);
  total_need_ = static_cast<std::uint64_t>(n) * q_;
  if (t_eps_ == 0) freeze_full();
}

const FullSet& ColoringState::full() const {
  if (!full_) throw ContractViolation("Full has not been frozen yet");
  return *full_;
}

const FullSet& ColoringState::freeze_full() {
  if (full_) throw ContractViolation("Full already frozen");
  if (t_ != t_eps_) {
    throw ContractViolation("Full must be frozen at t_eps=" + std::to_string(t_eps_) + ", now t=" + std::to_string(t_));
  }
  std::vector<bool> members(n_, false);
  for (Vertex v = 0; v < n_; ++v) {
    bool all = true;
    for (int c = 0; c < q_ && all; ++c) all = color_degree(v, c) >= static_cast<std::uint32_t>(d_full_);
    members[v] = all;
  }
  full_.emplace(std::move(members), t_, d_full_);
  return *full_;
}

const FullSet& ColoringState::freeze_full_early() {
  if (full_) throw ContractViolation("Full already frozen");
  t_eps_ = t_;
  eps_too_large_ = true;
  return freeze_full();
}

int ColoringState::pick_from_mask(ColorMask mask) {
  auto r = rng_.below(static_cast<std::uint64_t>(std::popcount(mask)));
  while (r--) mask &= mask - 1;
  return std::countr_zero(mask);
}

int min_degree_color(std::span<const std::uint32_t> color_degrees) {
  if (color_degrees.empty()) throw InvalidParameter("no colors");
  return static_cast<int>(std::min_element(color_degrees.begin(), color_degrees.end()) - color_degrees.begin());
}

ColorAssignment ColoringState::color_edge(const Edge& e, std::uint64_t t) {
  if (t != t_ + 1) throw ContractViolation("color_edge expects t=" + std::to_string(t_ + 1));
  if (e.v >= n_) throw InvalidParameter("edge endpoint out of range");
  if (t > t_eps_ && !full_) throw ContractViolation("Full must be frozen before coloring past t_eps");

  ColorAssignment a;
  const ColorMask needed = need_[e.u] | need_[e.v];
  if (needed != 0) {
    a = {pick_from_mask(needed), Pool::kStar, ColStep::kNeed};
  } else {
    const bool late = t > t_eps_;
    const bool full_u = late && full_->contains(e.u);
    const bool full_v = late && full_->contains(e.v);
    if (!late || (!full_u && !full_v)) {
      a = {static_cast<int>(rng_.below(q_)), Pool::kStar, ColStep::kUniform};
    } else if (full_u != full_v) {
      a = {min_degree_color(color_degrees().subspan(index(full_u ? e.v : e.u, 0), q_)), Pool::kStar, ColStep::kMinDegree};
    } else {
      const int c = static_cast<int>(rng_.below(q_));
      a = {c, rng_.coin() ? Pool::kPlus : Pool::kStar, ColStep::kFullPair};
    }
  }

  const std::uint64_t need_before = total_need_;
  const ColorMask bit = ColorMask{1} << a.color;
  for (Vertex x : {e.u, e.v}) {
    const std::size_t i = index(x, a.color);
    if (color_degree_[i] == 0) {
      invariants_.first_color_star.record(a.pool == Pool::kStar,
                                          edge_text(e, t) + ": first color-" + std::to_string(a.color) + " edge at " +
                                              std::to_string(x) + " went to plus");
    }
    ++color_degree_[i];
    if (a.pool == Pool::kStar) ++star_degree_[i];
    if (need_[x] & bit) {
      need_[x] &= ~bit;
      --total_need_;
    }
  }
  invariants_.need_monotone.record(
      total_need_ <= need_before && (a.step != ColStep::kNeed || total_need_ < need_before),
      edge_text(e, t) + ": total need " + std::to_string(need_before) + " -> " + std::to_string(total_need_));
  if (a.pool == Pool::kPlus) {
    invariants_.booster_endpoints.record(full_->contains(e.u) && full_->contains(e.v),
                                         edge_text(e, t) + ": plus edge with a non-Full endpoint");
  }

  log_.push_back({e, t, a});
  t_ = t;
  if (t_ % 1000 == 0) check_needs_consistent();
  if (t_ == t_eps_ && !full_) freeze_full();
  return a;
}

bool ColoringState::needs_consistent() const {
  for (Vertex v = 0; v < n_; ++v) {
    ColorMask expect = 0;
    for (int c = 0; c < q_; ++c) {
      if (color_degree(v, c) == 0) expect |= ColorMask{1} << c;
    }
    if (expect != need_[v]) return false;
  }
  return true;
}

void ColoringState::check_needs_consistent() {
  invariants_.need_consistent.record(needs_consistent(), "C_v mismatch at t=" + std::to_string(t_));
}

ColoringState init_coloring(Vertex n, int sigma, double epsilon, std::uint64_t seed) {
  return ColoringState(n, ColoringParams{sigma, epsilon, seed, std::nullopt});
}

std::uint64_t MergedColoring::total_edges() const {
  std::uint64_t total = 0;
  for (const auto& c : classes) total += c.star.size() + c.boosters.size();
  return total;
}

MergedColoring merge_colors(const ColoringState& state) {
  MergedColoring merged;
  merged.n = state.n();
  merged.sigma = state.sigma();
  merged.classes.resize(state.sigma());
  for (const ColoredEdge& ce : state.log()) {
    MergedClass& cls = merged.classes[ce.assignment.color % state.sigma()];
    (ce.assignment.pool == Pool::kStar ? cls.star : cls.boosters).push_back(ce.edge);
  }
  return merged;
}

void dump_colored_edges(std::ostream& out, std::span<const ColoredEdge> edges) {
  for (const ColoredEdge& ce : edges) {
    out << ce.t << ' ' << ce.edge.u << ' ' << ce.edge.v << ' ' << ce.assignment.color << ' '
        << to_string(ce.assignment.pool) << '\n';
  }
}

}  // namespace hcpack
