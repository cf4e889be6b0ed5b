#include "rainbow/lifting.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace rainbow {

const char* to_string(LiftCase c) {
  switch (c) {
    case LiftCase::unchanged: return "unchanged";
    case LiftCase::xy_on_cycle_swap: return "xy-on-cycle-swap";
    case LiftCase::off_cycle_keep: return "off-cycle-keep";
    case LiftCase::off_cycle_single: return "off-cycle-single";
    case LiftCase::off_cycle_first_only: return "off-cycle-first-only";
    case LiftCase::off_cycle_double: return "off-cycle-double";
  }
  return "?";
}

namespace {

RainbowCycle reversed(const RainbowCycle& c) {
  const int n = c.length();
  RainbowCycle r;
  r.vertices.reserve(static_cast<std::size_t>(n));
  r.colors.reserve(static_cast<std::size_t>(n));
  r.vertices.push_back(c.vertices[0]);
  for (int k = n - 1; k >= 1; --k) r.vertices.push_back(c.vertices[k]);
  for (int k = n - 1; k >= 0; --k) r.colors.push_back(c.colors[k]);
  return r;
}

struct Attempt {
  RainbowCycle cycle;
  LiftCase which;
};

// Case analysis along the traversal direction of `c`: for vertex x the
// predecessor is a1 and the successor a2, likewise b1, b2 for y.
std::optional<Attempt> apply_cases(const GraphFamily& family, int x, int y, const RainbowCycle& c) {
  const int n = c.length();
  const auto pos = [&](int v) {
    return static_cast<int>(std::find(c.vertices.begin(), c.vertices.end(), v) - c.vertices.begin());
  };
  const int px = pos(x);
  const int py = pos(y);
  const int a1 = c.vertices[(px + n - 1) % n];
  const int a2 = c.vertices[(px + 1) % n];
  const int b1 = c.vertices[(py + n - 1) % n];
  const int b2 = c.vertices[(py + 1) % n];
  const int ci = c.colors[(px + n - 1) % n];   // a1 x
  const int ci2 = c.colors[px];                // x a2
  const int cj = c.colors[(py + n - 1) % n];   // b1 y
  const int cj2 = c.colors[py];                // y b2
  const auto in = [&](int color, int u, int v) { return family.member(color).has_edge(u, v); };

  std::vector<Edge> edge_of_color = c.edges_by_color();
  LiftCase which;

  if (a1 == y || a2 == y) {
    // u: the other cycle neighbour of x, v: the other cycle neighbour of y
    const int u = a2 == y ? a1 : a2;
    const int cu = a2 == y ? ci : ci2;
    const int v = a2 == y ? b2 : b1;
    const int cv = a2 == y ? cj2 : cj;
    if (!in(cu, u, y)) return std::nullopt;
    edge_of_color[cu - 1] = Edge(u, y);
    edge_of_color[cv - 1] = Edge(x, v);
    which = LiftCase::xy_on_cycle_swap;
  } else if (!in(ci, y, a1)) {
    if (in(ci2, x, a2)) {
      which = LiftCase::off_cycle_keep;
    } else {
      edge_of_color[ci2 - 1] = Edge(y, a2);
      edge_of_color[cj - 1] = Edge(b1, x);
      which = LiftCase::off_cycle_single;
    }
  } else {
    edge_of_color[ci - 1] = Edge(y, a1);
    edge_of_color[cj2 - 1] = Edge(x, b2);
    if (in(ci2, x, a2)) {
      which = LiftCase::off_cycle_first_only;
    } else {
      edge_of_color[ci2 - 1] = Edge(y, a2);
      edge_of_color[cj - 1] = Edge(b1, x);
      which = LiftCase::off_cycle_double;
    }
  }
  auto rebuilt = cycle_from_color_edges(n, edge_of_color);
  if (!rebuilt) return std::nullopt;
  return Attempt{std::move(*rebuilt), which};
}

int changed_assignments(const RainbowCycle& before, const RainbowCycle& after) {
  const auto a = before.edges_by_color();
  const auto b = after.edges_by_color();
  int changed = 0;
  for (std::size_t c = 0; c < a.size(); ++c) changed += a[c] != b[c] ? 1 : 0;
  return changed;
}

std::string describe_state(const GraphFamily& family, int x, int y, const RainbowCycle& cycle) {
  std::ostringstream os;
  os << "step (" << x << "," << y << "), cycle " << to_string(cycle) << ", family:";
  for (int c = 1; c <= family.size(); ++c) {
    os << " G" << c << "={";
    for (const auto& e : family.member(c).edges()) os << e.u << "-" << e.v << " ";
    os << "}";
  }
  return os.str();
}

}  // namespace

LiftStepResult lift_one_step_detailed(const GraphFamily& family, int x, int y, const RainbowCycle& cycle) {
  if (x == y) throw std::invalid_argument("lift step needs x != y");
  const GraphFamily stepped = kelmans_step(family, x, y);
  if (auto defect = rainbow_cycle_defect(stepped, cycle)) {
    throw std::invalid_argument("cycle is not valid for the stepped family: " + *defect);
  }
  if (is_rainbow_hamiltonian_cycle(family, cycle)) return {cycle, LiftCase::unchanged, 0, false};

  for (bool reverse : {false, true}) {
    const RainbowCycle oriented = reverse ? reversed(cycle) : cycle;
    auto attempt = apply_cases(family, x, y, oriented);
    if (attempt && is_rainbow_hamiltonian_cycle(family, attempt->cycle)) {
      const int changed = changed_assignments(cycle, attempt->cycle);
      return {std::move(attempt->cycle), attempt->which, changed, reverse};
    }
  }
  throw LiftError("no lifting case applies: " + describe_state(family, x, y, cycle));
}

RainbowCycle lift_one_step(const GraphFamily& family, int x, int y, const RainbowCycle& cycle) {
  return lift_one_step_detailed(family, x, y, cycle).cycle;
}

RainbowCycle lift_full(const GraphFamily& family, const KelmansTranscript& transcript, const RainbowCycle& cycle) {
  const auto stages = replay_transcript(family, transcript);
  if (auto defect = rainbow_cycle_defect(stages.back(), cycle)) {
    throw std::invalid_argument("cycle is not valid for the transformed family: " + *defect);
  }
  RainbowCycle current = cycle;
  for (std::size_t k = transcript.steps.size(); k-- > 0;) {
    current = lift_one_step(stages[k], transcript.steps[k].x, transcript.steps[k].y, current);
  }
  if (auto defect = rainbow_cycle_defect(family, current)) {
    throw LiftError("lifted cycle failed validation: " + *defect);
  }
  return current;
}

}  // namespace rainbow
