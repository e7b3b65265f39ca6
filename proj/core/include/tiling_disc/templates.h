#ifndef TILING_DISC_TEMPLATES_H_
#define TILING_DISC_TEMPLATES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tiling_disc/graph.h"
#include "tiling_disc/labeling.h"

namespace tiling_disc {

// A multiset of r-cliques of a host graph, stored as (clique, multiplicity)
// pairs sorted by clique. A template is valid when every host vertex lies in
// the same number s' of members, which forces s' = s * r / |F|.
class KrTemplate {
 public:
  struct Member {
    Clique clique;
    int multiplicity = 0;

    friend bool operator==(const Member&, const Member&) = default;
  };

  KrTemplate(Graph host, int r) : host_(std::move(host)), r_(r) {}

  // Adds `copies` copies of c. Throws ParameterError if c has the wrong size
  // or copies is not positive.
  void add(const Clique& c, int copies = 1);

  const Graph& host() const { return host_; }
  int r() const { return r_; }
  std::span<const Member> members() const { return members_; }
  // s: total multiplicity.
  int size() const;
  int multiplicity(const Clique& c) const;
  // Number of members containing v, with multiplicity.
  int coverage(Vertex v) const;

 private:
  Graph host_;
  int r_;
  std::vector<Member> members_;
};

struct CoverageReport {
  enum class Status { kValid, kNonUniform, kIndivisible };

  Status status = Status::kValid;
  int s = 0;
  // Per-vertex coverage; meaningful when valid.
  int s_prime = 0;
  // First vertex whose coverage differs from the expected s * r / |F| (or
  // from vertex 0's coverage when that quotient is not an integer).
  std::optional<Vertex> deviant;
  int deviant_coverage = 0;

  bool valid() const { return status == Status::kValid; }
};

// Throws StructureError if some member is not a clique of the host. Coverage
// problems are reported, not thrown.
CoverageReport validate_template(const KrTemplate& t);

// Multiplicity-weighted label sum. Throws StructureError for non-uniform
// coverage and ArithmeticError when s * r is not a multiple of |F|.
std::int64_t template_discrepancy(const EdgeLabeling& f, const KrTemplate& t);

// The k windows of r consecutive vertices around the cycle, on the complete
// host of f. Throws StructureError if f's host is not complete and
// ParameterError unless `cycle` is a permutation of the vertices and
// 1 <= r < k.
KrTemplate hamilton_window_template(const EdgeLabeling& f,
                                    std::span<const Vertex> cycle, int r);

// Two-clique gadgets. Vertices 0..r form the first (r+1)-clique with vertex 0
// the attaching vertex (and its head when it is a star); vertices r+1..2r+1
// form the second, vertex r+1 being its head when it is a star. Cross edges
// leave vertex 0 only.
enum class Scenario {
  kObsB,           // K+ attaches to K-
  kObsCAvoidHead,  // K+ attaches to a +star, avoiding its head
  kObsCWithHead,   // K+ attaches to a +star, including its head
  kCase1,          // +star head attaches to a -star, avoiding its head (r >= 4)
  kCase2a,         // r = 3: +star head sees all of a -star
  kCase2b,         // r = 3: +star head sees all of a +star
};

std::string to_string(Scenario s);
// Accepts the names produced by to_string. Throws ParameterError.
Scenario scenario_from_string(const std::string& name);
std::vector<Scenario> all_scenarios();

struct GadgetSpec {
  int r = 3;
  Scenario scenario = Scenario::kObsB;
  // Number of cross edges at vertex 0.
  int attach = 0;
  // +1 cross edges among the r-1 used ones (ObsB, ObsC); -1 cross edges
  // among them (Case1); unused (0) for Case2a/2b.
  int i = 0;

  friend bool operator==(const GadgetSpec&, const GadgetSpec&) = default;
};

// The attach count each scenario requires for r.
int required_attach(Scenario scenario, int r);

// Spec with the required attach count.
GadgetSpec make_spec(Scenario scenario, int r, int i = 0);

// Whether the scenario's argument makes a claim at this (r, i): ObsB and
// ObsC_AvoidHead exclude i = (r-1)/2, ObsC_WithHead excludes i = (r+1)/2 for
// odd r >= 5 (for r = 3 that value selects the all-plus fallback instead).
bool is_admissible(const GadgetSpec& spec);

// True for ObsC_WithHead at r = 3 with every cross edge +1: the K2 recipe is
// the avoid-head one, using the two +1 edges into the non-head vertices.
bool uses_avoid_head_fallback(const GadgetSpec& spec);

// Every admissible spec of a scenario for one r, in increasing i.
std::vector<GadgetSpec> admissible_specs(Scenario scenario, int r);

struct Gadget {
  GadgetSpec spec;
  Graph host;
  EdgeLabeling labeling;
  Vertex attach_vertex = 0;
  // Second-clique vertices joined to vertex 0 by the r-1 cross edges the K2
  // recipe uses.
  std::vector<Vertex> chosen;
  // The two second-clique vertices outside `chosen` (for Case1: the non-good
  // non-head vertex and the head).
  Vertex x = -1;
  Vertex y = -1;
};

// Throws ParameterError for structurally invalid specs (r, attach, i out of
// range) and, unless allow_excluded, for specs is_admissible() rejects.
Gadget build_gadget(const GadgetSpec& spec, bool allow_excluded = false);

struct TemplatePair {
  KrTemplate k1;
  KrTemplate k2;
};

// K1: r copies of every r-subclique of both (r+1)-cliques. K2: the scenario's
// rebalancing recipe. Both have size 2r(r+1) and cover every vertex r^2
// times.
TemplatePair build_k1_k2(const Gadget& gadget);
TemplatePair build_k1_k2(const GadgetSpec& spec);

struct ExpectedDifference {
  std::int64_t value = 0;
  // False when no closed form is printed for this case (ObsC_AvoidHead and the
  // r = 3 fallback); the value is then our own derivation.
  bool printed = true;
};

// Closed form of disc(K2) - disc(K1).
ExpectedDifference expected_difference(const GadgetSpec& spec);

// One row of the template sweep.
struct TemplateCheck {
  GadgetSpec spec;
  int s = 0;
  int s_prime = 0;
  std::int64_t disc_k1 = 0;
  std::int64_t disc_k2 = 0;
  std::int64_t diff = 0;
  ExpectedDifference expected;
  bool templates_valid = false;

  bool match() const { return templates_valid && diff == expected.value; }
};

TemplateCheck check_gadget(const GadgetSpec& spec, bool allow_excluded = false);

// Rows for every admissible (scenario, r, i) with r in [r_min, r_max].
std::vector<TemplateCheck> sweep_templates(std::span<const Scenario> scenarios,
                                           int r_min, int r_max);

}  // namespace tiling_disc

#endif  // TILING_DISC_TEMPLATES_H_
