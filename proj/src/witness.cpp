#include "bipow/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>

#include "bipow/powers.hpp"

namespace bipow {
namespace {

int mod(int a, int p) { return ((a % p) + p) % p; }

std::string join(std::span<const Vertex> vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  return out.str();
}

void enforce(const ClaimChecks& checks, ClaimPolicy policy) {
  if (policy != ClaimPolicy::Throw) return;
  for (const auto& e : checks.entries()) {
    if (!e.ok) throw ClaimViolation(e.name, e.detail.empty() ? "check failed" : e.detail);
  }
}

}  // namespace

std::span<const Vertex> PathSystem::q(int i) const {
  const auto& vs = q_paths.at(static_cast<std::size_t>(mod(i, p()))).vertices;
  return std::span<const Vertex>(vs).subspan(1);
}

void ClaimChecks::set(const std::string& name, bool ok, std::string detail) {
  for (auto& e : entries_) {
    if (e.name == name) {
      // A check evaluated twice only passes if both evaluations passed.
      if (e.ok && !ok) {
        e.ok = false;
        e.detail = std::move(detail);
      }
      return;
    }
  }
  entries_.push_back({name, ok, std::move(detail)});
}

void ClaimChecks::merge(const ClaimChecks& other) {
  for (const auto& e : other.entries_) set(e.name, e.ok, e.detail);
}

std::optional<bool> ClaimChecks::get(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e.ok;
  }
  return std::nullopt;
}

bool ClaimChecks::all_passed() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.ok; });
}

std::vector<std::string> ClaimChecks::failed() const {
  std::vector<std::string> names;
  for (const auto& e : entries_) {
    if (!e.ok) names.push_back(e.name);
  }
  return names;
}

PathSystem build_path_system(const Graph& g, int m, const Hole& c) {
  const Graph power = bipartite_power(g, m);
  if (!is_induced_cycle(power, c.vertices)) throw HoleNotInduced("input cycle is not a hole of G^[m]");
  const int p = c.length();
  if (p < 6) throw HoleTooShort("pullback needs a hole of length >= 6, got " + std::to_string(p));

  PathSystem sys;
  sys.hole = c;
  sys.m = m;
  std::vector<Vertex> support;
  for (int i = 0; i < p; ++i) {
    Path path = shortest_path(g, c.vertices[mod(i - 1, p)], c.vertices[i]);
    if (path.length() > m) {
      throw PathTooLong("P_" + std::to_string(i) + " has length " + std::to_string(path.length()) + " > m");
    }
    support.insert(support.end(), path.vertices.begin(), path.vertices.end());
    sys.paths.push_back(std::move(path));
  }

  auto induced = induced_subgraph(g, support);
  sys.h = std::move(induced.graph);
  sys.h_to_g = std::move(induced.to_parent);
  std::vector<Vertex> g_to_h(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sys.h_to_g.size(); ++i) g_to_h[sys.h_to_g[i]] = static_cast<Vertex>(i);

  // holders[v]: ascending indices of the paths holding v past their first vertex.
  std::vector<std::vector<int>> holders(static_cast<std::size_t>(sys.h.order()));
  for (int i = 0; i < p; ++i) {
    const auto& vs = sys.paths[i].vertices;
    for (std::size_t k = 1; k < vs.size(); ++k) holders[g_to_h[vs[k]]].push_back(i);
  }
  std::vector<int> sizes;
  for (const auto& list : holders) sizes.push_back(static_cast<int>(list.size()));
  sys.expansion = expand(sys.h, sizes);

  auto own_copy = [&](Vertex g_vertex, int path) {
    const Vertex hv = g_to_h[g_vertex];
    const auto& list = holders[hv];
    const auto rank = std::lower_bound(list.begin(), list.end(), path) - list.begin();
    return sys.expansion.copy(hv, static_cast<int>(rank));
  };

  for (int i = 0; i < p; ++i) sys.hole_copies.push_back(own_copy(c.vertices[i], i));

  const int n_prime = sys.h_prime().order();
  sys.owner.assign(static_cast<std::size_t>(n_prime), -1);
  for (int i = 0; i < p; ++i) {
    Path q{{sys.hole_copies[mod(i - 1, p)]}};
    const auto& vs = sys.paths[i].vertices;
    for (std::size_t k = 1; k < vs.size(); ++k) {
      const Vertex x = own_copy(vs[k], i);
      if (sys.owner[x] != -1) throw GraphError("internal: H' vertex " + std::to_string(x) + " on two paths");
      sys.owner[x] = i;
      q.vertices.push_back(x);
    }
    sys.q_paths.push_back(std::move(q));
  }
  if (std::count(sys.owner.begin(), sys.owner.end(), -1) != 0) {
    throw GraphError("internal: H' vertex not covered by any path");
  }

  for (int i = 0; i < p; ++i) {
    const auto& vs = sys.q_paths[i].vertices;
    sys.arrangement.push_back(vs.front());
    sys.arrangement.insert(sys.arrangement.end(), vs.begin() + 1, vs.end() - 1);
  }
  sys.position.assign(static_cast<std::size_t>(n_prime), -1);
  for (std::size_t k = 0; k < sys.arrangement.size(); ++k) sys.position[sys.arrangement[k]] = static_cast<int>(k);
  return sys;
}

int clock_dist(const PathSystem& sys, Vertex x, Vertex y) {
  return mod(sys.owner.at(y) - sys.owner.at(x), sys.p());
}

bool before(const PathSystem& sys, Vertex x, Vertex y, Vertex z) {
  const int n = static_cast<int>(sys.arrangement.size());
  const int px = sys.position.at(x);
  return mod(sys.position.at(y) - px, n) < mod(sys.position.at(z) - px, n);
}

std::optional<Vertex> farthest_neighbor_before(const PathSystem& sys, Vertex x, Vertex z) {
  const Graph& hp = sys.h_prime();
  auto in_window = [&](Vertex y) { return clock_dist(sys, x, y) <= 2; };
  if (hp.has_edge(x, z) && in_window(z)) return std::nullopt;

  std::optional<Vertex> best;
  for (Vertex y : hp.neighbors(x)) {
    if (y == z || !in_window(y) || !before(sys, x, y, z)) continue;
    if (!best || before(sys, x, *best, y)) best = y;
  }
  return best;
}

int edge_level(const PathSystem& sys, Vertex x, Vertex y) {
  if (!sys.h_prime().has_edge(x, y)) throw GraphError("edge_level: not an edge of H'");
  return std::min(clock_dist(sys, x, y), clock_dist(sys, y, x));
}

namespace {

EdgeLevel scan_edge_levels(const PathSystem& sys) {
  EdgeLevel best;
  std::tuple<int, int> best_key{0, 0};
  for (auto [u, v] : sys.h_prime().edges()) {
    const int level = edge_level(sys, u, v);
    for (auto [from, to] : {Edge{u, v}, Edge{v, u}}) {
      if (clock_dist(sys, from, to) != level) continue;
      const std::tuple<int, int> key{sys.owner[from], sys.position[from]};
      if (level > best.level || (level == best.level && key < best_key)) {
        best = {level, {from, to}};
        best_key = key;
      }
    }
  }
  return best;
}

std::string level_detail(const EdgeLevel& lv) {
  return "maximum edge level " + std::to_string(lv.level) + " on H' edge (" + std::to_string(lv.edge.first) + ", " +
         std::to_string(lv.edge.second) + ")";
}

}  // namespace

EdgeLevel max_edge_level(const PathSystem& sys) {
  const EdgeLevel lv = scan_edge_levels(sys);
  if (lv.level < 1 || lv.level > 2) throw ClaimViolation("claim1", level_detail(lv));
  return lv;
}

CycleSearch find_cycle(const PathSystem& sys, ClaimPolicy policy) {
  const Graph& hp = sys.h_prime();
  const int p = sys.p();
  CycleSearch out;
  out.level = scan_edge_levels(sys);
  const int l = out.level.level;
  out.checks.set("claim1", l >= 1 && l <= 2, level_detail(out.level));
  enforce(out.checks, policy);
  if (l < 1) throw ClaimViolation("claim1", level_detail(out.level));

  const int base = sys.owner[out.level.edge.first];
  out.base_index = base;
  auto on_target = [&](Vertex y) { return sys.owner[y] == mod(base + l, p); };

  std::optional<Vertex> z0;
  for (Vertex x : sys.q(base)) {
    const auto nb = hp.neighbors(x);
    if (std::any_of(nb.begin(), nb.end(), on_target)) {
      z0 = x;
      break;
    }
  }
  if (!z0) throw ClaimViolation("claim1", "no " + std::to_string(l) + "-edge leaves Q_0");

  std::optional<Vertex> z1;
  for (Vertex y : sys.q(base + l)) {
    if (hp.has_edge(*z0, y)) z1 = y;
  }

  std::vector<Vertex> walk{*z0, *z1};
  auto z2 = farthest_neighbor_before(sys, *z1, *z0);
  out.checks.set("claim2", z2.has_value(), "no farthest neighbour of z_1 before z_0");
  enforce(out.checks, policy);
  if (!z2) throw ClaimViolation("claim2", "walk cannot leave z_1");
  walk.push_back(*z2);

  const int cap = hp.order();
  while (!hp.has_edge(walk.back(), *z0)) {
    if (out.iterations >= cap) {
      throw ClaimViolation("claim3", "walk did not close within " + std::to_string(cap) + " steps");
    }
    auto next = farthest_neighbor_before(sys, walk.back(), *z0);
    if (!next) throw ClaimViolation("claim3", "no farthest neighbour of z_" + std::to_string(walk.size() - 1));
    walk.push_back(*next);
    ++out.iterations;
  }
  out.checks.set("claim3", true);

  out.cycle.vertices = std::move(walk);
  const bool induced = is_induced_cycle(hp, out.cycle.vertices);
  out.checks.set("claim4", induced, "C' = " + join(out.cycle.vertices) + " has a chord in H'");
  out.checks.set("length", out.cycle.length() >= p,
                 "|C'| = " + std::to_string(out.cycle.length()) + " < p = " + std::to_string(p));
  out.checks.set("parity", out.cycle.length() % 2 == 0, "|C'| is odd");
  enforce(out.checks, policy);
  return out;
}

ClaimChecks verify_claims(const PathSystem& sys, const Hole& c_prime) {
  const int p = sys.p();
  ClaimChecks checks;

  std::vector<int> contrib(static_cast<std::size_t>(p), 0);
  for (Vertex z : c_prime.vertices) ++contrib.at(sys.owner.at(z));

  {
    std::string detail;
    for (int j = 0; j < p && detail.empty(); ++j) {
      if (contrib[j] + contrib[mod(j + 1, p)] == 0) detail = "Q_" + std::to_string(j) + " and its successor miss C'";
    }
    checks.set("claim5", detail.empty(), detail);
  }

  {
    // Edge t of C' joins z_t and z_{t+1}.
    const int len = c_prime.length();
    std::vector<int> level(static_cast<std::size_t>(len));
    std::vector<int> two_edges;
    for (int t = 0; t < len; ++t) {
      level[t] = edge_level(sys, c_prime.vertices[t], c_prime.vertices[mod(t + 1, len)]);
      if (level[t] == 2) two_edges.push_back(t);
    }
    // Edges strictly between t = from and t = to, walking forward.
    auto arc_has_zero_edge = [&](int from, int to) {
      for (int t = mod(from + 1, len); t != to; t = mod(t + 1, len)) {
        if (level[t] == 0) return true;
      }
      return false;
    };
    std::string detail;
    for (std::size_t x = 0; x < two_edges.size() && detail.empty(); ++x) {
      for (std::size_t y = x + 1; y < two_edges.size() && detail.empty(); ++y) {
        const int a = two_edges[x];
        const int b = two_edges[y];
        if (!arc_has_zero_edge(a, b) || !arc_has_zero_edge(b, a)) {
          detail = "2-edges at z_" + std::to_string(a) + " and z_" + std::to_string(b) + " lack a 0-edge between them";
        }
      }
    }
    checks.set("claim6", detail.empty(), detail);
  }

  {
    std::string detail;
    for (int j = 0; j < p && detail.empty(); ++j) {
      for (int jj = j + 1; jj < p && detail.empty(); ++jj) {
        if (contrib[j] != 0 || contrib[jj] != 0) continue;
        bool inside = false;
        bool outside = false;
        for (int i = 0; i < p; ++i) {
          if (contrib[i] < 2) continue;
          (j < i && i < jj ? inside : outside) = true;
        }
        if (!inside || !outside) {
          detail = "no compensating path around missed Q_" + std::to_string(j) + ", Q_" + std::to_string(jj);
        }
      }
    }
    checks.set("claim7", detail.empty(), detail);
  }
  return checks;
}

ClaimChecks verify_path_system(const PathSystem& sys) {
  const Graph& hp = sys.h_prime();
  const int p = sys.p();
  ClaimChecks checks;

  checks.set("observation1", is_bipartite(hp), "H' is not bipartite");

  {
    const auto& ring = sys.arrangement;
    const std::size_t n = ring.size();
    bool ok = n == static_cast<std::size_t>(hp.order());
    for (std::size_t k = 0; k < n && ok; ++k) ok = hp.has_edge(ring[k], ring[(k + 1) % n]);
    checks.set("arrangement", ok, "circle neighbours not adjacent in H'");
  }

  {
    std::string detail;
    if (p < 6 || p % 2 != 0) detail = "p = " + std::to_string(p) + " is not even and >= 6";
    std::vector<int> seen(static_cast<std::size_t>(hp.order()), 0);
    for (int i = 0; i < p && detail.empty(); ++i) {
      const Path& q = sys.q_paths[i];
      if (q.length() != sys.paths[i].length() || q.length() > sys.m) detail = "||Q'_" + std::to_string(i) + "|| wrong";
      if (q.vertices.front() != sys.hole_copies[mod(i - 1, p)] || q.vertices.back() != sys.hole_copies[i]) {
        detail = "Q'_" + std::to_string(i) + " has wrong endpoints";
      }
      for (std::size_t k = 1; k < q.vertices.size(); ++k) {
        ++seen[q.vertices[k]];
        if (!hp.has_edge(q.vertices[k - 1], q.vertices[k])) detail = "Q'_" + std::to_string(i) + " is not a path";
      }
    }
    if (detail.empty() && std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; })) {
      detail = "Q_0 ... Q_{p-1} do not partition V(H')";
    }
    checks.set("path-system", detail.empty(), detail);
  }

  {
    std::string detail;
    if (is_bipartite(hp)) {
      const Bipartition part = bipartition(hp);
      for (int a = 0; a < p && detail.empty(); ++a) {
        const Vertex wa = sys.hole_copies[a];
        const auto dist = bfs_distances(hp, wa);
        for (int b = 0; b < p; ++b) {
          const int gap = mod(b - a, p);
          if (gap <= 1 || gap == p - 1) continue;
          const Vertex wb = sys.hole_copies[b];
          if (part.same_side(wa, wb)) continue;
          if (dist[wb] < sys.m + 2) {
            detail = "d_H'(u_" + std::to_string(a) + ", u_" + std::to_string(b) + ") = " + std::to_string(dist[wb]);
            break;
          }
        }
      }
    } else {
      detail = "H' is not bipartite";
    }
    checks.set("nonadjacency-gap", detail.empty(), detail);
  }
  return checks;
}

WitnessReport pullback_hole(const Graph& g, int m, const Hole& c, ClaimPolicy policy) {
  const PathSystem sys = build_path_system(g, m, c);
  WitnessReport report;
  report.input_hole = c;

  report.claim_checks = verify_path_system(sys);
  enforce(report.claim_checks, policy);

  CycleSearch search = find_cycle(sys, policy);
  report.cycle_prime = search.cycle;
  report.max_edge_level = search.level.level;
  report.iteration_count = search.iterations;
  report.claim_checks.merge(search.checks);
  report.claim_checks.merge(verify_claims(sys, search.cycle));
  enforce(report.claim_checks, policy);

  std::string detail;
  try {
    const Hole in_h = project_hole(sys.expansion, search.cycle);
    for (Vertex v : in_h.vertices) report.pulled_back_hole.vertices.push_back(sys.h_to_g[v]);
  } catch (const GraphError& e) {
    detail = e.what();
  }
  const bool ok = detail.empty() && is_induced_cycle(g, report.pulled_back_hole.vertices) &&
                  report.pulled_back_hole.length() >= c.length();
  if (detail.empty() && !ok) detail = "pulled-back cycle is not a hole of G at least as long as the input";
  report.claim_checks.set("pullback", ok, detail);
  enforce(report.claim_checks, policy);
  return report;
}

std::string write_arrangement_dot(const PathSystem& sys, const Hole& c_prime) {
  const Graph& hp = sys.h_prime();
  const int n = static_cast<int>(sys.arrangement.size());
  const double radius = std::max(2.0, n * 0.35);

  std::vector<std::uint8_t> on_cycle(static_cast<std::size_t>(hp.order()), 0);
  for (Vertex z : c_prime.vertices) on_cycle[z] = 1;
  auto cycle_edge = [&](Vertex a, Vertex b) {
    const auto& vs = c_prime.vertices;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const Vertex x = vs[k];
      const Vertex y = vs[(k + 1) % vs.size()];
      if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
  };

  std::ostringstream out;
  out << "graph Hprime {\n  layout=neato;\n  node [shape=circle, fontsize=10];\n";
  for (int k = 0; k < n; ++k) {
    const Vertex x = sys.arrangement[k];
    // Clockwise from twelve o'clock.
    const double angle = std::numbers::pi / 2 - 2 * std::numbers::pi * k / n;
    out << "  " << x << " [label=\"" << sys.h_to_g[sys.expansion.copy_to_base[x]] << ":Q" << sys.owner[x]
        << "\", pos=\"" << radius * std::cos(angle) << ',' << radius * std::sin(angle) << "!\"";
    if (on_cycle[x]) out << ", style=filled, fillcolor=lightcoral";
    out << "];\n";
  }
  for (auto [a, b] : hp.edges()) {
    out << "  " << a << " -- " << b;
    if (cycle_edge(a, b)) out << " [color=red, penwidth=2.5]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bipow
