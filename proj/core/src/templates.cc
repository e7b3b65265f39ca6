#include "tiling_disc/templates.h"

#include <algorithm>

#include "tiling_disc/errors.h"

namespace tiling_disc {

void KrTemplate::add(const Clique& c, int copies) {
  if (c.size() != r_) {
    throw ParameterError("template member of size " + std::to_string(c.size()) +
                         ", expected " + std::to_string(r_));
  }
  if (copies <= 0) throw ParameterError("multiplicity must be positive");
  auto it = std::lower_bound(
      members_.begin(), members_.end(), c,
      [](const Member& m, const Clique& key) { return m.clique < key; });
  if (it != members_.end() && it->clique == c) {
    it->multiplicity += copies;
  } else {
    members_.insert(it, Member{c, copies});
  }
}

int KrTemplate::size() const {
  int s = 0;
  for (const Member& m : members_) s += m.multiplicity;
  return s;
}

int KrTemplate::multiplicity(const Clique& c) const {
  for (const Member& m : members_) {
    if (m.clique == c) return m.multiplicity;
  }
  return 0;
}

int KrTemplate::coverage(Vertex v) const {
  int total = 0;
  for (const Member& m : members_) {
    if (m.clique.contains(v)) total += m.multiplicity;
  }
  return total;
}

CoverageReport validate_template(const KrTemplate& t) {
  const Graph& host = t.host();
  for (const auto& m : t.members()) {
    if (!is_clique(host, m.clique)) {
      throw StructureError("template member is not a clique of the host");
    }
  }
  CoverageReport report;
  report.s = t.size();
  const int n = host.order();
  if (n == 0) return report;

  std::vector<int> cover(n, 0);
  for (const auto& m : t.members()) {
    for (Vertex v : m.clique) cover[v] += m.multiplicity;
  }
  const long long total = static_cast<long long>(report.s) * t.r();
  const bool divisible = total % n == 0;
  const int expected = divisible ? static_cast<int>(total / n) : cover[0];
  for (Vertex v = 0; v < n; ++v) {
    if (cover[v] != expected) {
      report.status = divisible ? CoverageReport::Status::kNonUniform
                                : CoverageReport::Status::kIndivisible;
      report.deviant = v;
      report.deviant_coverage = cover[v];
      return report;
    }
  }
  // Uniform coverage c gives s*r = c*n, so divisibility cannot fail here.
  report.s_prime = expected;
  return report;
}

std::int64_t template_discrepancy(const EdgeLabeling& f, const KrTemplate& t) {
  const CoverageReport report = validate_template(t);
  switch (report.status) {
    case CoverageReport::Status::kValid:
      break;
    case CoverageReport::Status::kIndivisible:
      throw ArithmeticError("template size " + std::to_string(report.s) +
                            " times r is not a multiple of |F|");
    case CoverageReport::Status::kNonUniform:
      throw StructureError("vertex " + std::to_string(*report.deviant) + " lies in " +
                           std::to_string(report.deviant_coverage) +
                           " members, expected " +
                           std::to_string(report.s * t.r() / t.host().order()));
  }
  std::int64_t sum = 0;
  for (const auto& m : t.members()) sum += m.multiplicity * discrepancy(f, m.clique);
  return sum;
}

KrTemplate hamilton_window_template(const EdgeLabeling& f,
                                    std::span<const Vertex> cycle, int r) {
  const int k = f.order();
  Graph host = f.support();
  if (!host.is_complete()) {
    throw StructureError("Hamilton window templates need a complete host");
  }
  if (static_cast<int>(cycle.size()) != k) {
    throw ParameterError("cycle must list all " + std::to_string(k) + " vertices");
  }
  std::vector<char> seen(k, 0);
  for (Vertex v : cycle) {
    if (v < 0 || v >= k || seen[v]) {
      throw ParameterError("cycle is not a permutation of the vertices");
    }
    seen[v] = 1;
  }
  if (r < 1 || r >= k) {
    throw ParameterError("window size must satisfy 1 <= r < k");
  }
  KrTemplate t(std::move(host), r);
  for (int start = 0; start < k; ++start) {
    std::vector<Vertex> window;
    for (int j = 0; j < r; ++j) window.push_back(cycle[(start + j) % k]);
    t.add(Clique(std::move(window)));
  }
  return t;
}

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::kObsB:
      return "obsB";
    case Scenario::kObsCAvoidHead:
      return "obsC-avoid-head";
    case Scenario::kObsCWithHead:
      return "obsC-with-head";
    case Scenario::kCase1:
      return "case1";
    case Scenario::kCase2a:
      return "case2a";
    case Scenario::kCase2b:
      return "case2b";
  }
  return "unknown";
}

std::vector<Scenario> all_scenarios() {
  return {Scenario::kObsB,  Scenario::kObsCAvoidHead, Scenario::kObsCWithHead,
          Scenario::kCase1, Scenario::kCase2a,        Scenario::kCase2b};
}

Scenario scenario_from_string(const std::string& name) {
  for (Scenario s : all_scenarios()) {
    if (to_string(s) == name) return s;
  }
  throw ParameterError("unknown scenario '" + name + "'");
}

int required_attach(Scenario scenario, int r) {
  switch (scenario) {
    case Scenario::kObsB:
    case Scenario::kObsCAvoidHead:
    case Scenario::kObsCWithHead:
      return r % 2 == 0 ? r - 1 : r;
    case Scenario::kCase1:
      return r - 1;
    case Scenario::kCase2a:
    case Scenario::kCase2b:
      return r + 1;
  }
  return 0;
}

GadgetSpec make_spec(Scenario scenario, int r, int i) {
  return GadgetSpec{r, scenario, required_attach(scenario, r), i};
}

namespace {

bool is_case2(Scenario s) { return s == Scenario::kCase2a || s == Scenario::kCase2b; }

// Structural validity, independent of whether the argument covers this i.
std::optional<std::string> structural_problem(const GadgetSpec& spec) {
  const int r = spec.r;
  if (r < 3) return "gadgets need r >= 3";
  if (is_case2(spec.scenario) && r != 3) return "case 2 gadgets need r = 3";
  if (spec.scenario == Scenario::kCase1 && r < 4) return "case 1 gadgets need r >= 4";
  if (spec.attach != required_attach(spec.scenario, r)) {
    return to_string(spec.scenario) + " at r=" + std::to_string(r) + " needs attach=" +
           std::to_string(required_attach(spec.scenario, r)) + ", got " +
           std::to_string(spec.attach);
  }
  if (is_case2(spec.scenario)) {
    if (spec.i != 0) return "case 2 cross labels are fixed; i must be 0";
  } else if (spec.i < 0 || spec.i > r - 1) {
    return "i must lie in [0, r-1]";
  }
  return std::nullopt;
}

bool excluded(const GadgetSpec& spec) {
  const int r = spec.r;
  switch (spec.scenario) {
    case Scenario::kObsB:
    case Scenario::kObsCAvoidHead:
      return r % 2 == 1 && 2 * spec.i == r - 1;
    case Scenario::kObsCWithHead:
      return r % 2 == 1 && r >= 5 && 2 * spec.i == r + 1;
    default:
      return false;
  }
}

// Labels inside an (r+1)-clique on [first, first + r]; head = first.
enum class CliqueLabel { kAllPlus, kAllMinus, kPlusStar, kMinusStar };

int inner_label(CliqueLabel kind, Vertex head, Vertex a, Vertex b) {
  const bool at_head = a == head || b == head;
  switch (kind) {
    case CliqueLabel::kAllPlus:
      return 1;
    case CliqueLabel::kAllMinus:
      return -1;
    case CliqueLabel::kPlusStar:
      return at_head ? 1 : -1;
    case CliqueLabel::kMinusStar:
      return at_head ? -1 : 1;
  }
  return 0;
}

// r-subcliques of the clique `members` (size r+1): members minus one vertex.
Clique without(const std::vector<Vertex>& members, Vertex drop) {
  std::vector<Vertex> out;
  for (Vertex v : members) {
    if (v != drop) out.push_back(v);
  }
  return Clique(std::move(out));
}

}  // namespace

bool is_admissible(const GadgetSpec& spec) {
  return !structural_problem(spec) && !excluded(spec);
}

bool uses_avoid_head_fallback(const GadgetSpec& spec) {
  return spec.scenario == Scenario::kObsCWithHead && spec.r == 3 && spec.i == 2;
}

std::vector<GadgetSpec> admissible_specs(Scenario scenario, int r) {
  std::vector<GadgetSpec> out;
  const int i_max = is_case2(scenario) ? 0 : r - 1;
  for (int i = 0; i <= i_max; ++i) {
    GadgetSpec spec = make_spec(scenario, r, i);
    if (is_admissible(spec)) out.push_back(spec);
  }
  return out;
}

Gadget build_gadget(const GadgetSpec& spec, bool allow_excluded) {
  if (auto problem = structural_problem(spec)) throw ParameterError(*problem);
  if (!allow_excluded && excluded(spec)) {
    throw ParameterError(to_string(spec.scenario) + " makes no claim at r=" +
                         std::to_string(spec.r) + ", i=" + std::to_string(spec.i));
  }
  const int r = spec.r;
  const Vertex a = 0;
  const Vertex head = r + 1;
  std::vector<Vertex> first_clique, second_clique;
  for (Vertex v = 0; v <= r; ++v) first_clique.push_back(v);
  for (Vertex v = r + 1; v <= 2 * r + 1; ++v) second_clique.push_back(v);

  CliqueLabel first_kind = CliqueLabel::kAllPlus;
  CliqueLabel second_kind = CliqueLabel::kAllMinus;
  switch (spec.scenario) {
    case Scenario::kObsB:
      break;
    case Scenario::kObsCAvoidHead:
    case Scenario::kObsCWithHead:
      second_kind = CliqueLabel::kPlusStar;
      break;
    case Scenario::kCase1:
    case Scenario::kCase2a:
      first_kind = CliqueLabel::kPlusStar;
      second_kind = CliqueLabel::kMinusStar;
      break;
    case Scenario::kCase2b:
      first_kind = CliqueLabel::kPlusStar;
      second_kind = CliqueLabel::kPlusStar;
      break;
  }

  // Cross edges in attachment order, with their labels.
  std::vector<Vertex> targets;
  std::vector<int> cross;
  Gadget gadget;
  gadget.spec = spec;
  gadget.attach_vertex = a;
  const std::vector<Vertex> non_head(second_clique.begin() + 1, second_clique.end());

  switch (spec.scenario) {
    case Scenario::kObsB:
    case Scenario::kObsCAvoidHead: {
      const auto& pool = spec.scenario == Scenario::kObsB ? second_clique : non_head;
      targets.assign(pool.begin(), pool.begin() + spec.attach);
      for (int k = 0; k < spec.attach; ++k) {
        // The first r-1 targets are used; the spare target of odd r is +1.
        cross.push_back(k >= r - 1 || k < spec.i ? 1 : -1);
      }
      gadget.chosen.assign(targets.begin(), targets.begin() + (r - 1));
      break;
    }
    case Scenario::kObsCWithHead: {
      targets.push_back(head);
      targets.insert(targets.end(), non_head.begin(), non_head.begin() + (spec.attach - 1));
      for (int k = 0; k < spec.attach; ++k) cross.push_back(k >= r - 1 || k < spec.i ? 1 : -1);
      if (uses_avoid_head_fallback(spec)) {
        // Every cross edge is +1; use the two into non-head vertices.
        gadget.chosen.assign(targets.begin() + 1, targets.end());
      } else {
        gadget.chosen.assign(targets.begin(), targets.begin() + (r - 1));
      }
      break;
    }
    case Scenario::kCase1: {
      targets.assign(non_head.begin(), non_head.begin() + (r - 1));
      for (int k = 0; k < spec.attach; ++k) cross.push_back(k < spec.i ? -1 : 1);
      gadget.chosen = targets;
      break;
    }
    case Scenario::kCase2a:
    case Scenario::kCase2b: {
      targets = second_clique;
      const int head_label = spec.scenario == Scenario::kCase2a ? -1 : 1;
      for (Vertex t : targets) cross.push_back(t == head ? head_label : -head_label);
      gadget.chosen = non_head;
      break;
    }
  }

  std::vector<Vertex> rest;
  for (Vertex v : second_clique) {
    if (std::find(gadget.chosen.begin(), gadget.chosen.end(), v) == gadget.chosen.end()) {
      rest.push_back(v);
    }
  }
  if (is_case2(spec.scenario)) {
    gadget.x = head;
  } else if (spec.scenario == Scenario::kCase1) {
    // X is the non-good vertex outside the head; the head plays Y.
    gadget.x = rest[0] == head ? rest[1] : rest[0];
    gadget.y = head;
  } else {
    gadget.x = rest[0];
    gadget.y = rest[1];
  }

  std::vector<Edge> edges;
  for (const auto* clique : {&first_clique, &second_clique}) {
    for (std::size_t i = 0; i < clique->size(); ++i) {
      for (std::size_t j = i + 1; j < clique->size(); ++j) {
        edges.emplace_back((*clique)[i], (*clique)[j]);
      }
    }
  }
  for (Vertex t : targets) edges.emplace_back(a, t);
  gadget.host = Graph(2 * r + 2, edges);

  gadget.labeling = EdgeLabeling(gadget.host, [&](Vertex u, Vertex v) {
    if (u <= r && v <= r) return inner_label(first_kind, a, u, v);
    if (u > r && v > r) return inner_label(second_kind, head, u, v);
    const Vertex other = u == a ? v : u;
    const auto it = std::find(targets.begin(), targets.end(), other);
    return cross[it - targets.begin()];
  });
  return gadget;
}

TemplatePair build_k1_k2(const Gadget& gadget) {
  const int r = gadget.spec.r;
  const Vertex a = gadget.attach_vertex;
  std::vector<Vertex> first_clique, second_clique;
  for (Vertex v = 0; v <= r; ++v) first_clique.push_back(v);
  for (Vertex v = r + 1; v <= 2 * r + 1; ++v) second_clique.push_back(v);

  KrTemplate k1(gadget.host, r);
  for (const auto* clique : {&first_clique, &second_clique}) {
    for (Vertex drop : *clique) k1.add(without(*clique, drop), r);
  }

  KrTemplate k2(gadget.host, r);
  if (is_case2(gadget.spec.scenario)) {
    const Vertex head = gadget.x;
    k2.add(without(first_clique, a), 5);
    for (Vertex w : first_clique) {
      if (w != a) k2.add(without(first_clique, w), 2);
    }
    const auto& c = gadget.chosen;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) k2.add(Clique{a, c[i], c[j]}, 1);
    }
    for (Vertex w : second_clique) {
      if (w != head) k2.add(without(second_clique, w), 3);
    }
    k2.add(without(second_clique, head), 1);
  } else {
    k2.add(without(first_clique, a), 2 * r - 1);
    for (Vertex w : first_clique) {
      if (w != a) k2.add(without(first_clique, w), r - 1);
    }
    std::vector<Vertex> bridge{a};
    bridge.insert(bridge.end(), gadget.chosen.begin(), gadget.chosen.end());
    k2.add(Clique(std::move(bridge)), r);
    // Dropping a chosen vertex keeps both X and Y.
    for (Vertex w : gadget.chosen) k2.add(without(second_clique, w), r + 1);
    k2.add(without(second_clique, gadget.x), 1);
    k2.add(without(second_clique, gadget.y), 1);
  }
  return TemplatePair{std::move(k1), std::move(k2)};
}

TemplatePair build_k1_k2(const GadgetSpec& spec) { return build_k1_k2(build_gadget(spec)); }

ExpectedDifference expected_difference(const GadgetSpec& spec) {
  const std::int64_t r = spec.r;
  const std::int64_t i = spec.i;
  switch (spec.scenario) {
    case Scenario::kObsB:
      return {2 * i * r - r * (r - 1), true};
    case Scenario::kObsCAvoidHead:
      return {2 * i * r - r * (r - 1), false};
    case Scenario::kObsCWithHead:
      if (uses_avoid_head_fallback(spec)) {
        // Avoid-head form with both used edges +1.
        return {2 * 2 * r - r * (r - 1), false};
      }
      return {2 * r * i - r * r - r, true};
    case Scenario::kCase1:
      return {-r * (r - 1) - 2 * r * i, true};
    case Scenario::kCase2a:
      return {-6, true};
    case Scenario::kCase2b:
      return {-12, true};
  }
  return {};
}

TemplateCheck check_gadget(const GadgetSpec& spec, bool allow_excluded) {
  const Gadget gadget = build_gadget(spec, allow_excluded);
  const TemplatePair pair = build_k1_k2(gadget);
  TemplateCheck row;
  row.spec = spec;
  const CoverageReport r1 = validate_template(pair.k1);
  const CoverageReport r2 = validate_template(pair.k2);
  row.s = pair.k2.size();
  row.s_prime = r2.s_prime;
  row.templates_valid = r1.valid() && r2.valid() && r1.s == r2.s &&
                        r1.s_prime == r2.s_prime;
  if (row.templates_valid) {
    row.disc_k1 = template_discrepancy(gadget.labeling, pair.k1);
    row.disc_k2 = template_discrepancy(gadget.labeling, pair.k2);
    row.diff = row.disc_k2 - row.disc_k1;
  }
  row.expected = expected_difference(spec);
  return row;
}

std::vector<TemplateCheck> sweep_templates(std::span<const Scenario> scenarios,
                                           int r_min, int r_max) {
  std::vector<TemplateCheck> rows;
  for (Scenario scenario : scenarios) {
    for (int r = r_min; r <= r_max; ++r) {
      for (const GadgetSpec& spec : admissible_specs(scenario, r)) {
        rows.push_back(check_gadget(spec));
      }
    }
  }
  return rows;
}

}  // namespace tiling_disc
