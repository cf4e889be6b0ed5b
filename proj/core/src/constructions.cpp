#include "rainbow/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "rainbow/lifting.hpp"

namespace rainbow {

std::vector<Edge> CanonicalEdgeSchedule::cycle_edges() const {
  std::vector<Edge> out;
  for (std::size_t a = 0; a < e_list.size(); ++a) {
    out.push_back(e_list[a]);                                  // e_{a+2}
    if (a + 1 < eprime_list.size()) out.push_back(eprime_list[a + 1]);  // e'_{a+2}
  }
  out.push_back(closing_edge);
  out.push_back(eprime_list.front());
  return out;
}

CanonicalEdgeSchedule canonical_schedule(int n) {
  if (n < 4) throw std::invalid_argument("canonical schedule needs n >= 4");
  CanonicalEdgeSchedule s;
  s.n = n;
  const int up = (n + 1) / 2;
  const int down = n / 2;
  for (int j = 2; j <= up; ++j) s.e_list.emplace_back(j, n + 2 - j);
  for (int k = 1; k <= down; ++k) s.eprime_list.emplace_back(k, n + 1 - k);
  s.closing_edge = n % 2 == 0 ? Edge(n + 1 - down, 1) : Edge(up, 1);

  const auto edges = s.cycle_edges();
  if (static_cast<int>(edges.size()) != n || !cycle_from_color_edges(n, edges)) {
    throw std::logic_error("canonical schedule for n=" + std::to_string(n) + " is not a Hamiltonian cycle");
  }
  return s;
}

namespace {

struct ScheduleAttempt {
  std::optional<SizeConditionResult> result;
  std::string failure;
};

ScheduleAttempt schedule_and_lift(const GraphFamily& family) {
  const int n = family.order();
  auto [fixed, transcript] = kelmans_family(family);
  const auto schedule = canonical_schedule(n);
  const Edge e2 = schedule.e_list.front();

  int e2_color = 0;
  for (int c = 1; c <= n && e2_color == 0; ++c) {
    if (fixed.member(c).has_edge(e2)) e2_color = c;
  }
  if (e2_color == 0) return {std::nullopt, "no Kelmans fixpoint contains e_2 = {2," + std::to_string(n) + "}"};

  const auto edges = schedule.cycle_edges();
  std::vector<Edge> edge_of_color(static_cast<std::size_t>(n));
  edge_of_color[e2_color - 1] = edges.front();
  int next_color = 1;
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (next_color == e2_color) ++next_color;
    edge_of_color[next_color - 1] = edges[k];
    ++next_color;
  }
  for (int c = 1; c <= n; ++c) {
    const Edge& e = edge_of_color[c - 1];
    if (!fixed.member(c).has_edge(e)) {
      return {std::nullopt, "schedule edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                "} missing from fixpoint of member " + std::to_string(c)};
    }
  }
  auto transformed = cycle_from_color_edges(n, edge_of_color);
  if (!transformed) return {std::nullopt, "schedule does not close into a cycle"};

  SizeConditionResult r;
  r.e2_color = e2_color;
  r.transformed_cycle = *transformed;
  r.cycle = lift_full(family, transcript, *transformed);
  r.transcript = std::move(transcript);
  return {std::move(r), {}};
}

}  // namespace

std::optional<SizeConditionResult> try_schedule_and_lift(const GraphFamily& family) {
  if (family.order() < 4) throw std::invalid_argument("schedule construction needs n >= 4");
  return schedule_and_lift(family).result;
}

SizeConditionResult construct_cycle_size_condition_detailed(const GraphFamily& family) {
  const int n = family.order();
  if (n < 4) throw std::invalid_argument("size-condition construction needs n >= 4");
  for (int c = 1; c <= n; ++c) {
    const int e = family.member(c).edge_count();
    if (e <= extremal_size(n)) {
      throw HypothesisViolation(c, "member " + std::to_string(c) + " has " + std::to_string(e) +
                                       " edges, not more than C(n-1,2)+1 = " + std::to_string(extremal_size(n)));
    }
  }
  auto attempt = schedule_and_lift(family);
  if (!attempt.result) throw ConstructionFailure("size-condition construction failed: " + attempt.failure);
  return std::move(*attempt.result);
}

RainbowCycle construct_cycle_size_condition(const GraphFamily& family) {
  return construct_cycle_size_condition_detailed(family).cycle;
}

Graph extremal_graph_with(int n, int pendant, int attachment) {
  if (pendant == attachment) throw std::invalid_argument("pendant vertex cannot attach to itself");
  Graph g(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (u != pendant && v != pendant) g.add_edge(u, v);
    }
  }
  g.add_edge(pendant, attachment);
  return g;
}

ExtremalFamilyProfile extremal_profile(const GraphFamily& family) {
  const int n = family.order();
  ExtremalFamilyProfile p;
  for (int c = 1; c <= n; ++c) {
    const Graph& g = family.member(c);
    if (!is_isomorphic_to_extremal(g)) {
      throw HypothesisViolation(c, "member " + std::to_string(c) + " is not isomorphic to K1 v (K_{n-2} u K1)");
    }
    for (int v = 1; v <= n; ++v) {
      if (g.degree(v) == 1) {
        p.pendant.push_back(v);
        p.attachment.push_back(std::countr_zero(g.neighbors(v)) + 1);
        break;
      }
    }
  }
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (int v : p.pendant) ++count[v];
  for (int v = 1; v <= n; ++v) {
    if (count[v] > 0) p.pendant_vertices.push_back(v);
  }
  std::stable_sort(p.pendant_vertices.begin(), p.pendant_vertices.end(),
                   [&](int a, int b) { return count[a] < count[b]; });
  for (int v : p.pendant_vertices) {
    p.multiplicities.push_back(count[v]);
    std::vector<int> members;
    for (int c = 1; c <= n; ++c) {
      if (p.pendant[c - 1] == v) members.push_back(c);
    }
    p.memberships.push_back(std::move(members));
  }
  return p;
}

const char* to_string(ExtremalBranch b) {
  switch (b) {
    case ExtremalBranch::all_equal: return "all-equal";
    case ExtremalBranch::single_pendant: return "single-pendant";
    case ExtremalBranch::direct: return "direct";
    case ExtremalBranch::switch_a: return "switch-a";
    case ExtremalBranch::switch_b: return "switch-b";
  }
  return "?";
}

namespace {

std::string describe(const ExtremalFamilyProfile& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.pendant.size(); ++i) {
    os << " G" << i + 1 << ":pendant " << p.pendant[i] << "->" << p.attachment[i];
  }
  return os.str();
}

// Normalised labels: vertex t stands for vord[t-1], color i for ford[i-1].
struct Normalised {
  std::vector<int> vord;
  std::vector<int> ford;

  RainbowCycle to_family(int n, const std::vector<Edge>& edge_of_color) const {
    std::vector<Edge> mapped(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      const Edge& e = edge_of_color[i - 1];
      mapped[ford[i - 1] - 1] = Edge(vord[e.u - 1], vord[e.v - 1]);
    }
    auto c = cycle_from_color_edges(n, mapped);
    if (!c) throw ConstructionFailure("normalised edge set does not form a Hamiltonian cycle");
    return *c;
  }
};

}  // namespace

ExtremalResult construct_cycle_extremal_detailed(const GraphFamily& family) {
  const int n = family.order();
  if (n < 4) throw std::invalid_argument("extremal construction needs n >= 4");
  const ExtremalFamilyProfile p = extremal_profile(family);
  ExtremalResult result;
  if (family.all_equal()) return result;

  Normalised norm;
  std::vector<Edge> edge_of_color(static_cast<std::size_t>(n));

  if (p.k() == 1) {
    // G_1, G_2 attach the common pendant v_1 to different vertices u_1, u_2
    const int v1 = p.pendant_vertices.front();
    const int a = 1;
    int b = 2;
    while (p.attachment[b - 1] == p.attachment[a - 1]) ++b;
    const int u1 = p.attachment[a - 1];
    const int u2 = p.attachment[b - 1];
    norm.ford = {a, b};
    for (int c = 1; c <= n; ++c) {
      if (c != a && c != b) norm.ford.push_back(c);
    }
    norm.vord = {v1, u1};
    for (int v = 1; v <= n; ++v) {
      if (v != v1 && v != u1 && v != u2) norm.vord.push_back(v);
    }
    norm.vord.push_back(u2);
    // cycle v_1 v_2 ... v_n: v_1v_2 in G_1, v_nv_1 in G_2, the rest inside K_{n-1}
    edge_of_color[0] = Edge(1, 2);
    edge_of_color[1] = Edge(n, 1);
    for (int t = 2; t < n; ++t) edge_of_color[t] = Edge(t, t + 1);
    result.branch = ExtremalBranch::single_pendant;
  } else {
    for (const auto& members : p.memberships) norm.ford.insert(norm.ford.end(), members.begin(), members.end());
    norm.vord = p.pendant_vertices;
    const int last_member = norm.ford.back();
    const int un = p.attachment[last_member - 1];
    const bool un_free = std::find(norm.vord.begin(), norm.vord.end(), un) == norm.vord.end();
    for (int v = 1; v <= n; ++v) {
      if (v != un && std::find(norm.vord.begin(), norm.vord.end(), v) == norm.vord.end()) norm.vord.push_back(v);
    }
    // G_n's attachment goes last so the m_1 = 1 switch has j = n >= 4
    if (un_free) norm.vord.push_back(un);

    auto has = [&](int color, int s, int t) {
      return family.member(norm.ford[color - 1]).has_edge(norm.vord[s - 1], norm.vord[t - 1]);
    };
    // rainbow path e_i = v_{i+1} v_{i+2} in G_i, i = 1..n-2
    for (int i = 1; i <= n - 2; ++i) edge_of_color[i - 1] = Edge(i + 1, i + 2);
    edge_of_color[n - 2] = Edge(1, n);  // e_{n-1} = v_1 v_n in G_{n-1}

    const int m1 = p.multiplicities.front();
    if (has(n, 1, 2)) {
      edge_of_color[n - 1] = Edge(1, 2);
      result.branch = ExtremalBranch::direct;
    } else {
      const int pn = p.pendant[last_member - 1];
      if (p.k() != 2 || pn != norm.vord[1]) {
        throw ConstructionFailure("v_1 v_2 missing from G_n but G_n's pendant is not v_2 with k = 2:" + describe(p));
      }
      if (m1 >= 2) {
        edge_of_color[n - 1] = Edge(1, m1 + 1);
        edge_of_color[m1 - 1] = Edge(2, m1 + 2);
        result.branch = ExtremalBranch::switch_a;
      } else {
        const int j = static_cast<int>(std::find(norm.vord.begin(), norm.vord.end(), un) - norm.vord.begin()) + 1;
        if (j <= 2 || j > n) throw ConstructionFailure("attachment of G_n is v_1 or v_2:" + describe(p));
        edge_of_color[n - 1] = Edge(2, j);
        edge_of_color[j - 3] = Edge(1, j - 1);
        result.branch = ExtremalBranch::switch_b;
      }
    }
  }

  RainbowCycle cycle = norm.to_family(n, edge_of_color);
  if (auto defect = rainbow_cycle_defect(family, cycle)) {
    throw ConstructionFailure(std::string("extremal construction (") + to_string(result.branch) +
                              ") produced an invalid cycle: " + *defect + ";" + describe(p));
  }
  result.cycle = std::move(cycle);
  result.vertex_order = std::move(norm.vord);
  result.member_order = std::move(norm.ford);
  return result;
}

std::optional<RainbowCycle> construct_cycle_extremal(const GraphFamily& family) {
  return construct_cycle_extremal_detailed(family).cycle;
}

const char* to_string(PipelineRoute r) {
  switch (r) {
    case PipelineRoute::schedule_lift: return "schedule-lift";
    case PipelineRoute::extremal: return "extremal";
    case PipelineRoute::none: return "none";
  }
  return "?";
}

namespace {

bool all_extremal(const GraphFamily& family) {
  for (const auto& g : family.graphs()) {
    if (!is_isomorphic_to_extremal(g)) return false;
  }
  return true;
}

}  // namespace

PipelineResult construct_cycle(const GraphFamily& family) {
  if (family.order() < 4) throw std::invalid_argument("construction pipeline needs n >= 4");
  PipelineResult out;
  if (auto r = try_schedule_and_lift(family)) {
    out.cycle = std::move(r->cycle);
    out.route = PipelineRoute::schedule_lift;
  } else if (all_extremal(family)) {
    auto e = construct_cycle_extremal_detailed(family);
    if (e.cycle) {
      out.cycle = std::move(e.cycle);
      out.route = PipelineRoute::extremal;
      out.branch = e.branch;
    }
  }
  if (out.cycle) {
    if (auto defect = rainbow_cycle_defect(family, *out.cycle)) {
      throw ConstructionFailure(std::string("pipeline route ") + to_string(out.route) +
                                " produced an invalid cycle: " + *defect);
    }
  }
  return out;
}

}  // namespace rainbow
