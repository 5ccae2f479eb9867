#include "indsub/extractor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace indsub {
namespace {

// Picks one vertex of every component of a graph with maximum degree <= 1.
VertexSet matching_pick(const Graph& g, const VertexSet& view) {
  VertexSet out(g.order());
  view.for_each([&](Vertex v) {
    if (!g.neighbours(v).intersects(out)) out.insert(v);
  });
  return out;
}

std::string join_ids(const std::vector<Vertex>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ids[i]);
  }
  return s;
}

double log2_size(std::size_t n) { return std::log2(static_cast<double>(n)); }

int claim_rank(std::string_view claim) {
  if (claim == "assemble") return 10;
  if (claim.size() == 1 && claim[0] >= '1' && claim[0] <= '9') return claim[0] - '0';
  return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Params, trace, outcome helpers

void Params::validate() const {
  if (t < 3) throw DomainError("t must be at least 3");
  if (k < 1) throw DomainError("k must be at least 1");
  if (recursion_depth_limit < 1) throw DomainError("recursion depth limit must be positive");
  if (mode == Mode::faithful) {
    if (force_pipeline) throw DomainError("faithful mode does not accept force_pipeline");
    return;
  }
  if (!(star_constant > 0)) throw DomainError("star constant must be positive");
  if (!(log_exponent >= 0)) throw DomainError("log exponent must be non-negative");
  if (!(density_margin > 0 && density_margin <= 1))
    throw DomainError("density margin must lie in (0, 1]");
}

BoundModel Params::bound_model() const {
  if (mode == Mode::faithful) return BoundModel::faithful(t);
  return BoundModel{star_constant, log_exponent};
}

std::string format_trace_line(const TraceRecord& r) {
  std::string s = "claim=";
  s += r.claim;
  s += " branch=";
  s += r.branch;
  s += " |set|=" + std::to_string(r.set_size) + " depth=" + std::to_string(r.depth) +
       " n=" + std::to_string(r.n);
  if (!r.detail.empty()) s += " " + r.detail;
  return s;
}

std::string_view to_string(Outcome::Kind k) {
  switch (k) {
    case Outcome::Kind::stable: return "stable";
    case Outcome::Kind::subdivision: return "subdivision";
    case Outcome::Kind::regime_failure: return "regime-failure";
  }
  return "stable";
}

std::string Outcome::deepest_claim() const {
  int best = 0;
  for (const auto& r : trace)
    if (r.depth == 0) best = std::max(best, claim_rank(r.claim));
  if (best == 0) return "base";
  if (best == 10) return "assemble";
  return std::to_string(best);
}

VertexSet greedy_stable(const Graph& g, const VertexSet& within) {
  VertexSet remaining = within;
  VertexSet out(g.order());
  std::vector<std::size_t> deg(g.order(), 0);
  within.for_each([&](Vertex v) { deg[v] = g.degree_within(v, within); });
  while (!remaining.empty()) {
    Vertex pick = 0;
    std::size_t low = std::numeric_limits<std::size_t>::max();
    remaining.for_each([&](Vertex v) {
      if (deg[v] < low) {
        low = deg[v];
        pick = v;
      }
    });
    out.insert(pick);
    VertexSet removed = g.neighbours(pick) & remaining;
    removed.insert(pick);
    remaining -= removed;
    removed.for_each([&](Vertex u) {
      for (Vertex w : g.neighbour_list(u))
        if (remaining.contains(w)) --deg[w];
    });
  }
  return out;
}

VertexSet greedy_stable(const Graph& g) { return greedy_stable(g, g.all()); }

// ---------------------------------------------------------------------------
// Extractor

Extractor::Extractor(const Graph& g, Params p)
    : g_(g), params_(p), model_(), max_len_(max_subdivision_length(g.order())),
      best_(g.order()) {
  params_.validate();
  model_ = params_.bound_model();
}

void Extractor::note(std::string_view claim, std::string_view branch, std::size_t set_size,
                     std::size_t depth, std::size_t n, std::string detail) {
  trace_.push_back(TraceRecord{claim, branch, set_size, depth, n, std::move(detail)});
}

void Extractor::faithful_check(bool ok, std::string_view claim, const std::string& what) {
  if (ok || params_.mode != Mode::faithful) return;
  throw FaithfulAssertion(
      "faithful-mode assertion failed at claim " + std::string(claim) + ": " + what, trace_);
}

void Extractor::record_best(const VertexSet& s) {
  if (s.size() > best_.size()) best_ = s;
}

double Extractor::x2_threshold(std::size_t n, std::size_t leaf_count) const {
  const double b = static_cast<double>(leaf_count);
  if (params_.mode == Mode::scaled) return std::max(2.0, params_.density_margin * b);
  const double L = log2_size(n);
  const double t = params_.t;
  return b / (2.0 * t * t * L * L);
}

Extractor::Verdict Extractor::fail(const VertexSet& view, std::size_t depth,
                                   std::string diagnostic) {
  note("regime", "failure", 0, depth, view.size(), diagnostic);
  faithful_check(false, "regime", diagnostic);
  VertexSet best = depth == 0 ? best_ : greedy_stable(g_, view);
  if (depth > 0 && best_.is_subset_of(view) && best_.size() > best.size()) best = best_;
  return Failure{std::move(diagnostic), std::move(best)};
}

std::variant<VertexSet, Extractor::Verdict> Extractor::take_stable(Verdict v,
                                                                   const char* claim,
                                                                   std::size_t depth) {
  if (auto* s = std::get_if<Stable>(&v)) return std::move(s->set);
  if (auto* f = std::get_if<Failure>(&v)) {
    note(claim, "sub-failure", f->best.size(), depth, 0, f->diagnostic);
    return std::move(f->best);
  }
  return v;
}

Outcome Extractor::run() {
  const std::size_t n = g_.order();
  Outcome out;
  VertexSet all = g_.all();
  if (n > 0) {
    best_ = greedy_stable(g_);
    out.d = std::max<std::size_t>(max_degree(g_, all).degree, 2);
  }
  Verdict v = solve(all, params_.k, 0);
  const auto claimed =
      params_.mode == Mode::faithful ? ClaimedMode::faithful : ClaimedMode::scaled;

  if (auto* s = std::get_if<Stable>(&v)) {
    VertexSet set = std::move(s->set);
    if (n > 0) {
      VertexSet floor = greedy_stable(g_);
      if (floor.size() > set.size()) {
        note("final", "greedy-floor", floor.size(), 0, n);
        set = std::move(floor);
      }
    }
    out.result = StableSetCertificate{set.to_vector(), claimed};
  } else if (auto* c = std::get_if<SubdivisionCertificate>(&v)) {
    out.result = std::move(*c);
  } else {
    auto& f = std::get<Failure>(v);
    out.result = RegimeFailure{f.diagnostic,
                               StableSetCertificate{f.best.to_vector(), ClaimedMode::best_effort}};
  }
  out.calls = calls_;
  out.trace = trace_;
  return out;
}

Extractor::Verdict Extractor::solve(const VertexSet& view, int k, std::size_t depth) {
  ++calls_;
  if (depth > params_.recursion_depth_limit)
    throw ExtractError("recursion depth limit " +
                       std::to_string(params_.recursion_depth_limit) + " exceeded");
  const std::size_t n = view.size();
  auto stable = [&](VertexSet s) -> Verdict {
    record_best(s);
    return Stable{std::move(s)};
  };

  if (n == 0) return Stable{VertexSet(g_.order())};
  if (k == 1) {
    if (is_stable(g_, view)) {
      note("base", "k1", n, depth, n);
      return stable(view);
    }
    // The clique bound was wrong for this subgraph; stay sound.
    VertexSet s = greedy_stable(g_, view);
    note("base", "clique-bound-violated", s.size(), depth, n);
    return stable(std::move(s));
  }
  const DegreeWitness top = max_degree(g_, view);
  if (top.degree <= 1) {
    VertexSet s = matching_pick(g_, view);
    note("base", "max-degree-le-1", s.size(), depth, n);
    return stable(std::move(s));
  }
  const std::size_t d = top.degree;
  if (depth == 0 && max_len_ < 3) {
    VertexSet s = greedy_stable(g_, view);
    note("base", "degenerate-size", s.size(), depth, n);
    return stable(std::move(s));
  }
  const std::size_t target = ceil_size(model_.bound(n, k, d));
  if (depth > 0 && params_.mode == Mode::scaled && calls_ > params_.work_budget) {
    VertexSet s = greedy_stable(g_, view);
    note("budget", "greedy", s.size(), depth, n);
    return stable(std::move(s));
  }

  const bool forced = depth == 0 && params_.force_pipeline;
  if (!forced) {
    if (static_cast<double>(target) <=
        static_cast<double>(n) / static_cast<double>(d + 1)) {
      VertexSet s = greedy_stable(g_, view);
      note("1", "greedy", s.size(), depth, n, "target=" + std::to_string(target));
      return stable(std::move(s));
    }
    if (auto v = neighborhood_branch(view, top.vertex, k, target, depth)) {
      if (auto* s = std::get_if<Stable>(&*v)) record_best(s->set);
      return std::move(*v);
    }
  } else {
    note("1", "forced", 0, depth, n, "target=" + std::to_string(target));
  }

  if (params_.mode == Mode::faithful) {
    const double T = model_.star_constant;
    const double L = log2_size(n);
    const double D = log2_size(d);
    faithful_check(d * D * D * D <= n / T, "1", "d D^3 <= |G|/T");
    faithful_check(static_cast<double>(d + 1) >= model_.denominator(k, L, D), "1",
                   "d + 1 >= T^(k-1) L^(3(k-1)) D");
  }
  Verdict v = pipeline(view, k, d, target, depth);
  if (auto* s = std::get_if<Stable>(&v)) record_best(s->set);
  return v;
}

std::optional<Extractor::Verdict> Extractor::neighborhood_branch(const VertexSet& view,
                                                                 Vertex v, int k,
                                                                 std::size_t target,
                                                                 std::size_t depth) {
  const VertexSet nbhd = g_.neighbours(v) & view;
  auto sub = take_stable(solve(nbhd, k - 1, depth + 1), "1", depth);
  if (auto* verdict = std::get_if<Verdict>(&sub)) return std::move(*verdict);
  auto& s = std::get<VertexSet>(sub);
  if (s.size() >= target) {
    note("1", "neighbourhood", s.size(), depth, view.size(),
         "vertex=" + std::to_string(v));
    return Stable{std::move(s)};
  }
  note("1", "pass", s.size(), depth, view.size(), "vertex=" + std::to_string(v));
  return std::nullopt;
}

Extractor::Step<Vertex> Extractor::removal_branch(const VertexSet& view,
                                                  const VertexSet& removed, int k,
                                                  std::size_t d, std::size_t target,
                                                  std::size_t depth) {
  const VertexSet rest = view - removed;
  std::optional<DegreeWitness> w;
  if (!rest.empty()) w = max_degree(g_, rest);
  const std::size_t rest_degree = w ? w->degree : 0;
  if (2 * rest_degree <= d) {
    const double D = log2_size(d);
    faithful_check(static_cast<double>(removed.size()) <= view.size() / D, "2",
                   "|X| <= |G|/D");
    auto sub = take_stable(solve(rest, k, depth + 1), "2", depth);
    if (auto* verdict = std::get_if<Verdict>(&sub)) return std::move(*verdict);
    auto& s = std::get<VertexSet>(sub);
    faithful_check(s.size() >= target, "2", "stable set of G\\X meets the bound");
    note("2", "recurse", s.size(), depth, view.size(),
         "removed=" + std::to_string(removed.size()));
    return Verdict{Stable{std::move(s)}};
  }
  note("2", "pass", 0, depth, view.size(),
       "witness=" + std::to_string(w->vertex) + " degree=" + std::to_string(rest_degree));
  return w->vertex;
}

Extractor::Step<StarSystem> Extractor::build_star_system(const VertexSet& view,
                                                         std::size_t length, double q,
                                                         int k, std::size_t d,
                                                         std::size_t target,
                                                         std::size_t depth) {
  const std::size_t n = view.size();
  faithful_check(static_cast<double>(length) / q <= 400.0 * model_.star_constant, "3",
                 "p/q <= 400T");
  StarSystem sys;
  VertexSet centres(g_.order());
  for (std::size_t p = 0; p < length; ++p) {
    VertexSet x1(g_.order());
    for (Vertex a : sys.centers) x1 |= g_.neighbours(a);
    x1 &= view;
    VertexSet x2(g_.order());
    (view - x1).for_each([&](Vertex v) {
      for (const auto& b : sys.leaves)
        if (static_cast<double>(g_.degree_within(v, b)) >=
            q * static_cast<double>(b.size())) {
          x2.insert(v);
          return;
        }
    });
    const VertexSet removed = x1 | x2 | centres;
    if (params_.mode == Mode::faithful) {
      const double D = log2_size(d);
      faithful_check(x1.size() <= p * d, "3", "|X1| <= (p-1)d");
      faithful_check(static_cast<double>(x2.size()) <= p * d / q, "3", "|X2| <= (p-1)d/q");
      faithful_check(static_cast<double>(removed.size()) <= n / D, "3", "|X| <= |G|/D");
    }

    auto witness = removal_branch(view, removed, k, d, target, depth);
    if (auto* verdict = std::get_if<Verdict>(&witness)) return std::move(*verdict);
    const Vertex a = std::get<Vertex>(witness);

    const VertexSet c = g_.neighbours(a) & (view - removed);
    auto sub = take_stable(solve(c, k - 1, depth + 1), "3", depth);
    if (auto* verdict = std::get_if<Verdict>(&sub)) return std::move(*verdict);
    VertexSet leaves = std::move(std::get<VertexSet>(sub));
    if (leaves.size() >= target) {
      note("3", "leaf-set", leaves.size(), depth, n, "center=" + std::to_string(a));
      return Verdict{Stable{std::move(leaves)}};
    }
    const double leaf_target = model_.leaf_target(d, k);
    if (static_cast<double>(leaves.size()) < leaf_target) {
      faithful_check(false, "3", "leaf set size >= d / (2 T^(k-2) D^(3k-5))");
      return fail(view, depth,
                  "claim 3: leaf set of centre " + std::to_string(a) + " has " +
                      std::to_string(leaves.size()) + " vertices, below " +
                      std::to_string(leaf_target));
    }
    // The new centre may see a few earlier leaves; drop them so every centre
    // stays anticomplete to the other leaf sets.
    for (auto& b : sys.leaves) b -= g_.neighbours(a);
    note("3", "center", leaves.size(), depth, n,
         "center=" + std::to_string(a) + " index=" + std::to_string(p));
    sys.centers.push_back(a);
    sys.leaves.push_back(std::move(leaves));
    centres.insert(a);
  }
  return sys;
}

Extractor::Step<std::size_t> Extractor::expand_or_merge(const VertexSet& view,
                                                        const VertexSet& a,
                                                        double threshold, int k,
                                                        std::size_t target,
                                                        std::size_t depth) {
  const VertexSet s = closed_neighborhood(g_, a) & view;
  if (static_cast<double>(s.size()) >= threshold * static_cast<double>(a.size())) {
    note("5", "expanded", a.size(), depth, view.size(),
         "closed=" + std::to_string(s.size()));
    return s.size();
  }
  auto sub = take_stable(solve(view - s, k, depth + 1), "5", depth);
  if (auto* verdict = std::get_if<Verdict>(&sub)) return std::move(*verdict);
  VertexSet merged = std::move(std::get<VertexSet>(sub));
  merged |= a;
  faithful_check(merged.size() >= target, "5", "merged stable set meets the bound");
  note("5", "merge", merged.size(), depth, view.size(),
       "closed=" + std::to_string(s.size()));
  return Verdict{Stable{std::move(merged)}};
}

ObstructionContext Extractor::make_context(const VertexSet& view, const StarSystem& sys,
                                           const VertexSet& y) const {
  ObstructionContext ctx;
  const std::size_t n = g_.order();
  ctx.x1 = VertexSet(n);
  VertexSet centres(n);
  for (Vertex a : sys.centers) {
    ctx.x1 |= g_.neighbours(a);
    centres.insert(a);
  }
  ctx.x1 &= view;
  ctx.x2 = VertexSet(n);
  (view - ctx.x1).for_each([&](Vertex v) {
    for (const auto& b : sys.leaves)
      if (static_cast<double>(g_.degree_within(v, b)) >= x2_threshold(view.size(), b.size())) {
        ctx.x2.insert(v);
        return;
      }
  });
  ctx.y = y;
  ctx.x3 = closed_neighborhood(g_, y) & view;
  ctx.allowed = view - ctx.x1 - ctx.x2 - ctx.x3 - centres;
  return ctx;
}

Extractor::Step<LayerState> Extractor::grow_layers(const VertexSet& view,
                                                   const ObstructionContext& ctx,
                                                   const StarSystem& sys, std::size_t i,
                                                   const VertexSet& toward, int k,
                                                   std::size_t d,
                                                   std::size_t target,
                                                   std::size_t depth) {
  const std::size_t n = view.size();
  const double L = log2_size(n);
  const double D = log2_size(d);
  const double half_square = std::floor(L * L / 2.0);
  const std::size_t cap = half_square >= 1 ? static_cast<std::size_t>(half_square) - 1 : 0;
  const double threshold = model_.denominator(k, L, D);

  LayerState st;
  st.i = i;
  st.L = L;
  st.layer = sys.leaves[i] - ctx.x3;
  st.history.push_back(st.layer.size());
  const std::string tag = "i=" + std::to_string(i);

  while (true) {
    if (2 * st.layer.size() > n) {
      note("8", "half", st.layer.size(), depth, n, tag + " r=" + std::to_string(st.r));
      layer_log_.push_back(st);
      return st;
    }
    if (params_.mode == Mode::scaled && closed_neighborhood(g_, st.layer).intersects(toward)) {
      note("8", "reached", st.layer.size(), depth, n, tag + " r=" + std::to_string(st.r));
      layer_log_.push_back(st);
      return st;
    }
    if (st.r >= cap)
      return fail(view, depth,
                  "claims 7-8: layer " + std::to_string(i) + " stuck at " +
                      std::to_string(st.layer.size()) + " of " + std::to_string(n) +
                      " after radius cap " + std::to_string(cap));

    auto sub = take_stable(solve(st.layer, k, depth + 1), "8", depth);
    if (auto* verdict = std::get_if<Verdict>(&sub)) return std::move(*verdict);
    VertexSet a = std::move(std::get<VertexSet>(sub));
    if (a.size() >= target) {
      note("8", "layer-stable", a.size(), depth, n, tag);
      return Verdict{Stable{std::move(a)}};
    }
    auto em = expand_or_merge(view, a, threshold, k, target, depth);
    if (auto* verdict = std::get_if<Verdict>(&em)) return std::move(*verdict);

    VertexSet next = st.layer | (open_neighborhood(g_, st.layer) & ctx.allowed);
    if (next == st.layer)
      return fail(view, depth,
                  "claims 7-8: layer " + std::to_string(i) + " cannot grow past " +
                      std::to_string(st.layer.size()) + " of " + std::to_string(n));
    const double before = static_cast<double>(st.layer.size());
    const double after = static_cast<double>(next.size());
    const bool grew = L * after >= (L + 2.0) * before;
    if (st.r == 0) {
      const double t = params_.t;
      faithful_check(after >= 3.0 * t * t * t * L * L * L * static_cast<double>(d), "7",
                     "|N^1| >= 3 t^3 L^3 d");
    } else {
      faithful_check(grew, "8", "|N^r| >= (1 + 2/L) |N^(r-1)|");
    }
    st.accepted.push_back(grew);
    st.layer = std::move(next);
    st.history.push_back(st.layer.size());
    ++st.r;
    note(st.r == 1 ? "7" : "8", grew ? "grow" : "grow-slow", st.layer.size(), depth, n,
         tag + " r=" + std::to_string(st.r));
  }
}

Extractor::Step<Path> Extractor::route_path(const VertexSet& view,
                                            const ObstructionContext& ctx,
                                            const StarSystem& sys, std::size_t i,
                                            std::size_t j, std::size_t depth) {
  const VertexSet from = sys.leaves[i] - ctx.x3;
  const VertexSet to = sys.leaves[j] - ctx.x3;
  const std::string tag = "pair=" + std::to_string(i) + "," + std::to_string(j);
  auto path = shortest_pair_path(g_, from, to, ctx.allowed);
  if (!path) return fail(view, depth, "claim 9: no admissible path for " + tag);
  const double L = log2_size(view.size());
  faithful_check(static_cast<double>(path->length()) <= L * L - 2, "9",
                 "path length <= L^2 - 2");
  if (path->length() + 2 > max_len_)
    return fail(view, depth,
                "claim 9: shortest path for " + tag + " has length " +
                    std::to_string(path->length() + 2) + " > " + std::to_string(max_len_));
  note("9", "route", path->vertices.size(), depth, view.size(),
       tag + " length=" + std::to_string(path->length()));
  return std::move(*path);
}

Extractor::Step<SubdivisionCertificate> Extractor::assemble_subdivision(
    const VertexSet& view, const StarSystem& sys, int k, std::size_t d,
    std::size_t target, std::size_t depth) {
  const std::size_t t = sys.length();
  const double L = log2_size(view.size());
  const double tt = static_cast<double>(t);
  const VertexSet leaves = sys.all_leaves(g_.order());

  SubdivisionCertificate cert;
  cert.t = static_cast<int>(t);
  cert.branch = sys.centers;
  cert.min_len = 3;
  cert.max_len = max_len_;
  VertexSet y(g_.order());

  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      const ObstructionContext ctx = make_context(view, sys, y);
      // Structural conditions on the obstruction set hold in every mode.
      if (!(y & ctx.x1).is_subset_of(leaves) || y.intersects(ctx.x2))
        throw ExtractError("obstruction set left X1 \\ leaves or met X2");
      if (params_.mode == Mode::faithful) {
        faithful_check((y & ctx.x1).size() <= t * t, "6", "|Y & X1| <= t^2");
        faithful_check(static_cast<double>(y.size()) <= 0.5 * tt * tt * L * L, "6",
                       "|Y| <= t^2 L^2 / 2");
        faithful_check(static_cast<double>(ctx.x3.size()) <= 0.5 * tt * tt * L * L * d,
                       "6", "|X3| <= t^2 L^2 d / 2");
        for (const auto& b : sys.leaves)
          faithful_check(2 * (ctx.x3 & b).size() <= b.size(), "6", "|X3 & B_i| <= |B_i|/2");
      }
      note("6", "obstruction", y.size(), depth, view.size(),
           "x3=" + std::to_string(ctx.x3.size()) +
               " allowed=" + std::to_string(ctx.allowed.size()));

      for (auto [end, other] : {std::pair{i, j}, std::pair{j, i}}) {
        const VertexSet toward = sys.leaves[other] - ctx.x3;
        auto grown = grow_layers(view, ctx, sys, end, toward, k, d, target, depth);
        if (auto* verdict = std::get_if<Verdict>(&grown)) return std::move(*verdict);
      }
      auto routed = route_path(view, ctx, sys, i, j, depth);
      if (auto* verdict = std::get_if<Verdict>(&routed)) return std::move(*verdict);
      Path path = std::move(std::get<Path>(routed));
      for (Vertex v : path.vertices) y.insert(v);
      cert.paths.push_back(PairPath{static_cast<int>(i), static_cast<int>(j), std::move(path)});
    }
  }

  const SubdivisionReport report = verify_subdivision(g_, cert);
  if (!report.valid()) {
    std::ostringstream msg;
    msg << "assembled certificate rejected by the verifier:";
    for (const auto& v : report.violations) msg << "\n  " << v;
    throw ExtractError(msg.str());
  }
  note("assemble", "subdivision", y.size() + t, depth, view.size(),
       "branch=" + join_ids(cert.branch));
  return cert;
}

Extractor::Verdict Extractor::pipeline(const VertexSet& view, int k, std::size_t d,
                                       std::size_t target, std::size_t depth) {
  const std::size_t t = static_cast<std::size_t>(params_.t);
  const double tt = static_cast<double>(t);
  const double q = 1.0 / (4.0 * tt * tt);
  const double q_semi = q / (2.0 * tt);
  // Half of the semi-sparsity target: trimming earlier leaf sets when a new
  // centre is added can raise measured ratios by at most a factor 2.
  const double q_build = q_semi / 2.0;

  auto built = build_star_system(view, t, q_build, k, d, target, depth);
  if (auto* verdict = std::get_if<Verdict>(&built)) return std::move(*verdict);
  StarSystem sys = std::move(std::get<StarSystem>(built));
  star_log_.push_back(sys);
  if (auto bad = star_system_violations(g_, sys); !bad.empty())
    throw ExtractError("star construction produced an invalid system: " + bad.front());
  const double semi = semi_sparsity(g_, sys);
  faithful_check(semi <= q_semi, "4", "semi-sparsity <= q/(2p)");

  StarSystem sparse = sparsify_star_system(g_, sys, q);
  star_log_.push_back(sparse);
  if (auto bad = star_system_violations(g_, sparse); !bad.empty())
    throw ExtractError("sparsification produced an invalid system: " + bad.front());
  if (semi <= q_semi) {
    for (std::size_t i = 0; i < t; ++i)
      if (2 * sparse.leaves[i].size() < sys.leaves[i].size())
        throw ExtractError("sparsification lost more than half of a leaf set");
    if (sparsity(g_, sparse) > q) throw ExtractError("sparsified system is not q-sparse");
  }
  note("4", "sparsified", sparse.size(g_.order()), depth, view.size(),
       "semi=" + std::to_string(semi));

  auto assembled = assemble_subdivision(view, sparse, k, d, target, depth);
  if (auto* verdict = std::get_if<Verdict>(&assembled)) return std::move(*verdict);
  return std::move(std::get<SubdivisionCertificate>(assembled));
}

// ---------------------------------------------------------------------------

Outcome extract(const Graph& g, const Params& p) {
  Extractor ex(g, p);
  return ex.run();
}

CertificateDocument to_document(const Graph& g, const Params& p, const Outcome& o) {
  CertificateDocument doc;
  doc.n = g.order();
  doc.params = CertificateParams{p.k, p.t, o.d, p.mode};
  if (auto* s = std::get_if<StableSetCertificate>(&o.result)) {
    doc.certificate = *s;
  } else if (auto* c = std::get_if<SubdivisionCertificate>(&o.result)) {
    doc.certificate = *c;
  } else {
    const auto& f = std::get<RegimeFailure>(o.result);
    doc.certificate = f.best;
    doc.regime_failure = f.diagnostic;
  }
  return doc;
}

bool outcome_verifies(const Graph& g, const Params& p, const Outcome& o) {
  const std::size_t n = g.order();
  auto stable_ok = [&](const StableSetCertificate& s, bool need_bound) {
    if (n == 0) return s.set.empty();
    try {
      const auto r = verify_stable(g, s, DerivedConstants::make(n, p.k, p.t, o.d));
      return r.is_stable && (!need_bound || r.meets_faithful_bound);
    } catch (const CertificateError&) {
      return false;
    }
  };
  switch (o.kind()) {
    case Outcome::Kind::stable:
      return stable_ok(std::get<StableSetCertificate>(o.result), p.mode == Mode::faithful);
    case Outcome::Kind::subdivision: {
      const auto& c = std::get<SubdivisionCertificate>(o.result);
      return c.t == p.t && c.min_len >= 3 && c.max_len <= max_subdivision_length(n) &&
             verify_subdivision(g, c).valid();
    }
    case Outcome::Kind::regime_failure:
      return p.mode == Mode::scaled &&
             stable_ok(std::get<RegimeFailure>(o.result).best, false);
  }
  return false;
}

}  // namespace indsub
