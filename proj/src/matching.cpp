#include "copeland/matching.hpp"

#include <algorithm>
#include <sstream>

namespace copeland {

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (auto& e : edges_) e = make_edge(e.u, e.v);
  std::sort(edges_.begin(), edges_.end());
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i].v)
      throw ValidationError("matching contains a self-pair");
    if (i > 0 && edges_[i] == edges_[i - 1])
      throw ValidationError("matching contains a duplicate pair");
  }
  std::vector<VertexId> seen;
  for (const auto& e : edges_) {
    seen.push_back(e.u);
    seen.push_back(e.v);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw ValidationError("matching pairs are not vertex-disjoint");
}

bool Matching::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(),
                            make_edge(e.u, e.v));
}

std::vector<VertexId> Matching::partners(int num_vertices) const {
  std::vector<VertexId> mate(num_vertices, kSelf);
  for (const auto& e : edges_) {
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  return mate;
}

void Matching::validate_for(const Instance& inst) const {
  for (const auto& e : edges_) {
    if (e.u < 0 || e.v >= inst.num_vertices())
      throw ValidationError("matching pair references unknown vertex");
    if (!inst.adjacent(e.u, e.v))
      throw ValidationError("matching pair (" + inst.name(e.u) + ", " +
                            inst.name(e.v) + ") is not an edge");
  }
}

AugmentedMatching augment(const Instance& inst, const Matching& m) {
  AugmentedMatching am{m, {}};
  auto mate = m.partners(inst.num_vertices());
  for (VertexId u = 0; u < inst.num_vertices(); ++u)
    if (mate[u] == kSelf) am.loops.push_back(u);
  return am;
}

Matching parse_matching(std::istream& in, const Instance& inst) {
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls{line};
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    if (!saw_header) {
      std::string version, extra;
      if (first != "match" || !(ls >> version) || version != "v1" ||
          (ls >> extra))
        throw ParseError(line_no, 1, "expected header 'match v1'");
      saw_header = true;
      continue;
    }
    std::string dash, second, extra;
    if (!(ls >> dash >> second) || dash != "-" || (ls >> extra))
      throw ParseError(line_no, 1, "expected '<name> - <name>'");
    auto u = inst.find_vertex(first);
    auto v = inst.find_vertex(second);
    if (!u) throw ParseError(line_no, 1, "unknown vertex name '" + first + "'");
    if (!v)
      throw ParseError(line_no, 1, "unknown vertex name '" + second + "'");
    edges.push_back(make_edge(*u, *v));
  }
  if (!saw_header) throw ParseError(1, 1, "missing 'match v1' header");
  Matching m(std::move(edges));
  m.validate_for(inst);
  return m;
}

Matching parse_matching(std::string_view text, const Instance& inst) {
  std::istringstream in{std::string(text)};
  return parse_matching(in, inst);
}

std::string serialize_matching(const Matching& m, const Instance& inst) {
  std::ostringstream out;
  out << "match v1\n";
  for (const auto& e : m.edges())
    out << inst.name(e.u) << " - " << inst.name(e.v) << "\n";
  return out.str();
}

std::string format_matching(const Matching& m, const Instance& inst) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < m.edges().size(); ++i) {
    const auto& e = m.edges()[i];
    out << (i ? ", " : "") << "(" << inst.name(e.u) << "," << inst.name(e.v)
        << ")";
  }
  out << "}";
  return out.str();
}

}  // namespace copeland
