#pragma once

#include <map>

#include "copeland/solver.hpp"

namespace copeland {

// A VERTEX COVER instance; vertices are 1..n.
struct CoverInstance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted, no duplicates
};

CoverInstance parse_cover(std::istream& in);
CoverInstance parse_cover(std::string_view text);
std::string serialize_cover(const CoverInstance& h);

struct VertexGadget {
  VertexId a = 0, b = 0, ap = 0, bp = 0;
  std::vector<VertexId> aux;  // u^0..u^{A-1}
};

struct EdgeGadget {
  std::pair<int, int> h_edge;  // (i, j), i < j
  VertexId s = 0, t = 0, sp = 0, tp = 0, spp = 0, tpp = 0;
  VertexId v = 0, vp = 0, w = 0, wp = 0, c = 0, d = 0, cp = 0, dp = 0;
};

// The compiled roommates instance plus the maps into it. The only edges
// crossing gadget boundaries are (b_i, d_e) and (b_j, d'_e) per H-edge
// e = (i, j) with i < j.
struct ReductionArtifacts {
  Instance instance;
  int aux_count = 0;
  std::vector<VertexGadget> vertex_gadgets;       // by H-vertex, 0-based
  std::vector<EdgeGadget> edge_gadgets;           // sorted by h_edge
  std::vector<Edge> inter_gadget_edges;
  std::map<std::pair<int, int>, int> edge_gadget_index;
};

ReductionArtifacts build_reduction(const CoverInstance& h, int aux_count = 100);

enum class GadgetState { red, blue };

struct StateAssignment {
  std::vector<GadgetState> state;  // by H-vertex, 0-based
  // Every H-edge has at least one blue endpoint.
  bool covers(const CoverInstance& h) const;
};

// Red: {(a,b),(a',b')}; blue: {(a,b'),(a',b)}. Per H-edge the gadget gets F
// when the min endpoint is blue, otherwise L; auxiliaries stay unmatched.
// With strict=true an assignment leaving some H-edge all-red is rejected.
Matching build_state_matching(const ReductionArtifacts& art,
                              const StateAssignment& s, bool strict = true);

// The two canonical edge-gadget matchings.
Matching f_matching(const ReductionArtifacts& art, std::pair<int, int> h_edge);
Matching l_matching(const ReductionArtifacts& art, std::pair<int, int> h_edge);

// Vertex potentials certifying popularity of build_state_matching(art, s).
// Requires s to cover all H-edges.
DualCertificate build_dual_certificate(const ReductionArtifacts& art,
                                       const StateAssignment& s);

struct GadgetCounts {
  long long ties = 0;  // includes the self-tie
  long long defeats = 0;
};

struct EdgeGadgetReport {
  std::pair<int, int> h_edge;
  GadgetCounts f, l;
  long long min_defeats_plus_ties = 0;  // over all matchings of the subgraph
  bool f_tie_list_matches = false;      // ties are exactly the canonical ten
  bool l_tie_list_matches = false;
  long long subgraph_matchings = 0;
  bool ok() const {
    return f.ties == 10 && f.defeats == 0 && l.ties == 10 && l.defeats == 0 &&
           min_defeats_plus_ties == 10 && f_tie_list_matches &&
           l_tie_list_matches;
  }
};

struct VertexGadgetReport {
  int h_vertex = 0;  // 1-based
  GadgetCounts red, blue;
  long long subgraph_matchings = 0;
  bool ok() const {
    return red.ties == 2 && red.defeats == 0 && blue.ties == 3 &&
           blue.defeats == 0;
  }
};

struct GadgetInvariantReport {
  std::vector<EdgeGadgetReport> edge_reports;
  std::vector<VertexGadgetReport> vertex_reports;
  bool ok() const {
    for (const auto& r : edge_reports)
      if (!r.ok()) return false;
    for (const auto& r : vertex_reports)
      if (!r.ok()) return false;
    return true;
  }
};

// Exhaustive verification on the induced gadget subgraphs: tie/defeat counts
// of F, L, red and blue, the tie-list identities, and the minimum of
// defeats+ties over every edge-gadget matching.
GadgetInvariantReport verify_gadget_invariants(const ReductionArtifacts& art);

struct WitnessReport {
  int construction_case = 0;  // 1, 2 or 3
  long long expected = 0;     // == aux_count
  long long confirmed = 0;
  std::vector<long long> deltas;  // delta(witness, m) per auxiliary index
  bool ok() const { return confirmed == expected; }
};

// For an H-edge with both endpoint gadgets red in m, constructs the
// aux_count explicit matchings that tie with or defeat m on the union
// subgraph of the edge gadget and its two vertex gadgets, and confirms each
// by direct comparison. m must be restricted to that union.
WitnessReport verify_red_red_witnesses(const ReductionArtifacts& art,
                                       std::pair<int, int> h_edge,
                                       const Matching& m);

struct CoverExtraction {
  std::vector<int> blue_vertices;  // 1-based, ascending
  bool covers = false;
};

// Reads the blue set out of a matching whose vertex gadgets are all in a
// canonical state. Throws if some gadget is in neither state or an
// inter-gadget edge is used.
CoverExtraction extract_cover(const ReductionArtifacts& art, const Matching& m);

}  // namespace copeland
