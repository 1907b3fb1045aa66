#include <algorithm>

#include "doctest.h"
#include "support.hpp"

#include "copeland/reduction.hpp"

using namespace copeland;
using namespace copeland::test;

namespace {

CoverInstance single_h_edge() { return parse_cover("p vc 2 1\ne 1 2\n"); }

CoverInstance triangle_h() {
  return parse_cover("p vc 3 3\ne 1 2\ne 2 3\ne 1 3\n");
}

StateAssignment states(std::initializer_list<GadgetState> ss) {
  StateAssignment s;
  s.state.assign(ss);
  return s;
}

// Red gadget pairs for both endpoints plus a custom edge-gadget part.
Matching red_red_with(const ReductionArtifacts& art, std::pair<int, int> e,
                      const std::vector<Edge>& y_part) {
  const VertexGadget& zi = art.vertex_gadgets[e.first - 1];
  const VertexGadget& zj = art.vertex_gadgets[e.second - 1];
  std::vector<Edge> edges = {make_edge(zi.a, zi.b), make_edge(zi.ap, zi.bp),
                             make_edge(zj.a, zj.b), make_edge(zj.ap, zj.bp)};
  for (const Edge& y : y_part) edges.push_back(y);
  return Matching(std::move(edges));
}

}  // namespace

TEST_CASE("cover parsing and serialization") {
  CoverInstance h = parse_cover("c comment\np vc 3 2\ne 2 1\ne 2 3\n");
  CHECK(h.n == 3);
  REQUIRE(h.edges.size() == 2);
  CHECK(h.edges[0] == std::pair<int, int>{1, 2});
  CHECK(h.edges[1] == std::pair<int, int>{2, 3});
  CHECK(parse_cover(serialize_cover(h)).edges == h.edges);
  CHECK_THROWS_AS(parse_cover("p vc 2 1\ne 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_cover("p vc 2 2\ne 1 2\ne 2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_cover("e 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_cover("p vc 2 5\ne 1 2\n"), ParseError);
}

TEST_CASE("reduction sizes") {
  auto art = build_reduction(single_h_edge(), 100);
  CHECK(art.instance.num_vertices() == 222);  // 2*(4+100) + 14
  CHECK(art.inter_gadget_edges.size() == 2);

  CoverInstance lone;
  lone.n = 1;
  auto art1 = build_reduction(lone, 5);
  CHECK(art1.instance.num_vertices() == 9);
  CHECK(art1.edge_gadgets.empty());

  auto art3 = build_reduction(triangle_h(), 5);
  CHECK(art3.instance.num_vertices() == 3 * 9 + 3 * 14);
  CHECK(art3.inter_gadget_edges.size() == 6);
}

TEST_CASE("only inter-gadget edges cross gadget boundaries") {
  auto art = build_reduction(triangle_h(), 3);
  const Instance& g = art.instance;
  std::vector<int> owner(g.num_vertices(), -1);
  int tag = 0;
  for (const auto& z : art.vertex_gadgets) {
    owner[z.a] = owner[z.b] = owner[z.ap] = owner[z.bp] = tag;
    for (VertexId u : z.aux) owner[u] = tag;
    ++tag;
  }
  for (const auto& y : art.edge_gadgets) {
    for (VertexId u : {y.s, y.t, y.sp, y.tp, y.spp, y.tpp, y.v, y.vp, y.w,
                       y.wp, y.c, y.d, y.cp, y.dp})
      owner[u] = tag;
    ++tag;
  }
  std::vector<Edge> crossing;
  for (const Edge& e : g.edges())
    if (owner[e.u] != owner[e.v]) crossing.push_back(e);
  std::vector<Edge> expected = art.inter_gadget_edges;
  std::sort(expected.begin(), expected.end());
  std::sort(crossing.begin(), crossing.end());
  CHECK(crossing == expected);
}

TEST_CASE("vertex gadget subgraph has 3A+7 matchings") {
  for (int aux : {1, 4}) {
    CoverInstance lone;
    lone.n = 1;
    auto art = build_reduction(lone, aux);
    auto report = verify_gadget_invariants(art);
    REQUIRE(report.vertex_reports.size() == 1);
    CHECK(report.vertex_reports[0].subgraph_matchings == 3 * aux + 7);
  }
}

TEST_CASE("gadget invariants hold for small auxiliary counts") {
  for (int aux : {1, 5}) {
    auto art = build_reduction(single_h_edge(), aux);
    auto report = verify_gadget_invariants(art);
    CHECK(report.ok());
    for (const auto& r : report.vertex_reports) {
      CHECK(r.red.ties == 2);
      CHECK(r.red.defeats == 0);
      CHECK(r.blue.ties == 3);
      CHECK(r.blue.defeats == 0);
    }
    for (const auto& r : report.edge_reports) {
      CHECK(r.f.ties == 10);
      CHECK(r.f.defeats == 0);
      CHECK(r.l.ties == 10);
      CHECK(r.l.defeats == 0);
      CHECK(r.min_defeats_plus_ties == 10);
      CHECK(r.f_tie_list_matches);
      CHECK(r.l_tie_list_matches);
    }
  }
}

TEST_CASE("state matchings: placement, selection rule, strict mode") {
  auto art = build_reduction(single_h_edge(), 5);
  const auto& zi = art.vertex_gadgets[0];
  const auto& zj = art.vertex_gadgets[1];

  Matching blue_red =
      build_state_matching(art, states({GadgetState::blue, GadgetState::red}));
  CHECK(blue_red.contains(make_edge(zi.a, zi.bp)));
  CHECK(blue_red.contains(make_edge(zi.ap, zi.b)));
  CHECK(blue_red.contains(make_edge(zj.a, zj.b)));
  CHECK(blue_red.contains(make_edge(zj.ap, zj.bp)));
  // min endpoint blue -> F
  const auto& y = art.edge_gadgets[0];
  CHECK(blue_red.contains(make_edge(y.s, y.tpp)));

  Matching red_blue =
      build_state_matching(art, states({GadgetState::red, GadgetState::blue}));
  CHECK(red_blue.contains(make_edge(y.s, y.tp)));  // min endpoint red -> L

  CHECK_THROWS_AS(
      build_state_matching(art, states({GadgetState::red, GadgetState::red})),
      std::invalid_argument);
  Matching lax = build_state_matching(
      art, states({GadgetState::red, GadgetState::red}), false);
  CHECK(lax.contains(make_edge(y.s, y.tp)));

  // Auxiliaries stay unmatched; no inter-gadget edge is used.
  auto mate = blue_red.partners(art.instance.num_vertices());
  for (VertexId u : zi.aux) CHECK(mate[u] == kSelf);
  for (const Edge& e : art.inter_gadget_edges)
    CHECK_FALSE(blue_red.contains(e));
}

TEST_CASE("dual certificates verify with objective zero and slack crossings") {
  for (auto ss : {states({GadgetState::blue, GadgetState::blue}),
                  states({GadgetState::blue, GadgetState::red}),
                  states({GadgetState::red, GadgetState::blue})}) {
    auto art = build_reduction(single_h_edge(), 5);
    Matching m = build_state_matching(art, ss);
    DualCertificate cert = build_dual_certificate(art, ss);
    auto check = verify_dual(art.instance, m, cert);
    CHECK(check.certified());
    CHECK(check.objective == 0);
    for (const Edge& e : art.inter_gadget_edges) {
      int idx = art.instance.edge_index(e.u, e.v);
      CHECK(check.edge_slack[idx] >= 1);
    }
    for (long long yv : cert.y) {
      CHECK(yv >= -1);
      CHECK(yv <= 1);
    }
  }
  auto art = build_reduction(single_h_edge(), 5);
  CHECK_THROWS_AS(build_dual_certificate(
                      art, states({GadgetState::red, GadgetState::red})),
                  std::invalid_argument);
}

TEST_CASE("cover extraction round-trips state assignments") {
  auto art = build_reduction(triangle_h(), 2);
  StateAssignment ss =
      states({GadgetState::blue, GadgetState::red, GadgetState::blue});
  Matching m = build_state_matching(art, ss);
  auto extraction = extract_cover(art, m);
  CHECK(extraction.blue_vertices == std::vector<int>{1, 3});
  CHECK(extraction.covers);

  Matching lax = build_state_matching(
      art, states({GadgetState::red, GadgetState::red, GadgetState::red}),
      false);
  auto all_red = extract_cover(art, lax);
  CHECK(all_red.blue_vertices.empty());
  CHECK_FALSE(all_red.covers);
}

TEST_CASE("cover extraction rejects non-canonical matchings") {
  auto art = build_reduction(single_h_edge(), 2);
  const auto& zi = art.vertex_gadgets[0];
  const auto& y = art.edge_gadgets[0];
  // Inter-gadget edge present.
  Matching bad1({make_edge(zi.b, y.d)});
  CHECK_THROWS_AS(extract_cover(art, bad1), std::invalid_argument);
  // Gadget in neither state.
  Matching bad2({make_edge(zi.a, zi.b)});
  CHECK_THROWS_AS(extract_cover(art, bad2), std::invalid_argument);
}

TEST_CASE("certified state matchings are popular (solver cross-check)") {
  auto art = build_reduction(single_h_edge(), 2);
  for (auto ss : {states({GadgetState::blue, GadgetState::blue}),
                  states({GadgetState::red, GadgetState::blue})}) {
    Matching m = build_state_matching(art, ss);
    auto check = popularity_via_solver(art.instance, m, SolverBackend::dense);
    CHECK(check.popular);
  }
}

TEST_CASE("red-red witnesses, construction case 1 (both orientations)") {
  for (int aux : {1, 5}) {
    auto art = build_reduction(single_h_edge(), aux);
    const auto& y = art.edge_gadgets[0];
    Matching m = red_red_with(art, {1, 2},
                              {make_edge(y.s, y.c), make_edge(y.cp, y.dp),
                               make_edge(y.v, y.vp), make_edge(y.w, y.wp),
                               make_edge(y.sp, y.tp), make_edge(y.spp, y.tpp)});
    auto report = verify_red_red_witnesses(art, {1, 2}, m);
    CHECK(report.construction_case == 1);
    CHECK(report.expected == aux);
    CHECK(report.confirmed == aux);
    for (long long d : report.deltas) CHECK(d == 0);  // exact ties

    Matching mirror = red_red_with(
        art, {1, 2},
        {make_edge(y.t, y.cp), make_edge(y.c, y.d), make_edge(y.v, y.vp),
         make_edge(y.w, y.wp), make_edge(y.sp, y.tp), make_edge(y.spp, y.tpp)});
    auto mreport = verify_red_red_witnesses(art, {1, 2}, mirror);
    CHECK(mreport.construction_case == 1);
    CHECK(mreport.confirmed == aux);
  }
}

TEST_CASE("red-red witnesses, construction case 2") {
  for (int aux : {1, 5, 20}) {
    auto art = build_reduction(single_h_edge(), aux);
    const auto& y = art.edge_gadgets[0];
    Matching m = red_red_with(art, {1, 2},
                              {make_edge(y.s, y.tp), make_edge(y.spp, y.t),
                               make_edge(y.c, y.d), make_edge(y.cp, y.dp),
                               make_edge(y.v, y.vp), make_edge(y.w, y.wp)});
    auto report = verify_red_red_witnesses(art, {1, 2}, m);
    CHECK(report.construction_case == 2);
    CHECK(report.confirmed == aux);
    for (long long d : report.deltas) CHECK(d == 0);
  }
}

TEST_CASE("red-red witnesses, construction case 3 variants") {
  auto art = build_reduction(single_h_edge(), 5);
  const auto& y = art.edge_gadgets[0];

  // (s',t) in m, s unmatched.
  Matching a = red_red_with(art, {1, 2},
                            {make_edge(y.sp, y.t), make_edge(y.c, y.d),
                             make_edge(y.cp, y.dp), make_edge(y.v, y.vp),
                             make_edge(y.w, y.wp)});
  auto ra = verify_red_red_witnesses(art, {1, 2}, a);
  CHECK(ra.construction_case == 3);
  CHECK(ra.confirmed == 5);

  // (s'',t) in m with s parked on t''.
  Matching b = red_red_with(art, {1, 2},
                            {make_edge(y.s, y.tpp), make_edge(y.spp, y.t),
                             make_edge(y.c, y.d), make_edge(y.cp, y.dp),
                             make_edge(y.v, y.vp), make_edge(y.w, y.wp)});
  auto rb = verify_red_red_witnesses(art, {1, 2}, b);
  CHECK(rb.construction_case == 3);
  CHECK(rb.confirmed == 5);

  // Triangle rotation: s on v, t on w.
  Matching c = red_red_with(art, {1, 2},
                            {make_edge(y.s, y.v), make_edge(y.t, y.w),
                             make_edge(y.c, y.d), make_edge(y.cp, y.dp)});
  auto rc = verify_red_red_witnesses(art, {1, 2}, c);
  CHECK(rc.construction_case == 3);
  CHECK(rc.confirmed == 5);

  // Mirrored: s holds its top choice, t sits below c'.
  Matching d = red_red_with(art, {1, 2},
                            {make_edge(y.s, y.tp), make_edge(y.t, y.w),
                             make_edge(y.c, y.d), make_edge(y.cp, y.dp),
                             make_edge(y.v, y.vp)});
  auto rd = verify_red_red_witnesses(art, {1, 2}, d);
  CHECK(rd.construction_case == 3);
  CHECK(rd.confirmed == 5);
}

TEST_CASE("witness preconditions are enforced") {
  auto art = build_reduction(single_h_edge(), 2);
  // Blue gadget instead of red.
  Matching blue =
      build_state_matching(art, states({GadgetState::blue, GadgetState::blue}));
  CHECK_THROWS_AS(verify_red_red_witnesses(art, {1, 2}, blue),
                  std::invalid_argument);
}

TEST_CASE("restriction to the union subgraph is required") {
  auto art = build_reduction(triangle_h(), 2);
  // Red-red on edge (1,2) but with gadget Z_3 matched too.
  std::vector<Edge> edges;
  for (int i : {0, 1, 2}) {
    const auto& z = art.vertex_gadgets[i];
    edges.push_back(make_edge(z.a, z.b));
    edges.push_back(make_edge(z.ap, z.bp));
  }
  const auto& y = art.edge_gadgets[art.edge_gadget_index.at({1, 2})];
  edges.push_back(make_edge(y.s, y.c));
  CHECK_THROWS_AS(verify_red_red_witnesses(art, {1, 2}, Matching(edges)),
                  std::invalid_argument);
}
