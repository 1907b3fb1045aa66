#include "copeland/instance.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>

#include "copeland/rng.hpp"

namespace copeland {

std::optional<VertexId> Instance::find_vertex(std::string_view name) const {
  for (VertexId u = 0; u < num_vertices(); ++u)
    if (names_[u] == name) return u;
  return std::nullopt;
}

int Instance::tier(VertexId u, VertexId v) const {
  int t = tier_at(u, v);
  if (u == v || t == 0)
    throw std::invalid_argument("vertex " + names_[v] +
                                " is not a neighbor of " + names_[u]);
  return t;
}

int Instance::effective_tier(VertexId u, VertexId x) const {
  if (x == kSelf || x == u) return INT_MAX;
  return tier(u, x);
}

Instance Instance::induced(const std::vector<VertexId>& keep) const {
  std::vector<VertexId> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<VertexId> to_new(num_vertices(), -1);
  InstanceBuilder b;
  for (VertexId old : sorted) to_new[old] = b.add_vertex(names_[old]);
  for (VertexId old : sorted)
    for (VertexId nb : neighbors_[old])
      if (to_new[nb] >= 0)
        b.add_preference(to_new[old], to_new[nb], tier_at(old, nb));
  return std::move(b).build();
}

std::vector<std::string> Instance::validation_warnings() const {
  std::vector<std::string> warnings;
  for (VertexId u = 0; u < num_vertices(); ++u)
    if (neighbors_[u].empty())
      warnings.push_back("isolated vertex '" + names_[u] +
                         "' (always self-matched)");
  return warnings;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t Instance::content_hash() const {
  return fnv1a64(serialize_instance(*this));
}

VertexId InstanceBuilder::add_vertex(const std::string& name) {
  for (const auto& existing : names_)
    if (existing == name)
      throw ValidationError("duplicate vertex name '" + name + "'");
  names_.push_back(name);
  prefs_.emplace_back();
  return static_cast<VertexId>(names_.size()) - 1;
}

VertexId InstanceBuilder::vertex(const std::string& name) const {
  for (VertexId u = 0; u < static_cast<VertexId>(names_.size()); ++u)
    if (names_[u] == name) return u;
  throw ValidationError("unknown vertex name '" + name + "'");
}

bool InstanceBuilder::has_vertex(const std::string& name) const {
  for (const auto& existing : names_)
    if (existing == name) return true;
  return false;
}

void InstanceBuilder::add_preference(VertexId u, VertexId v, int tier) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
    throw ValidationError("preference references unknown vertex id");
  if (u == v) throw ValidationError("vertex '" + names_[u] + "' ranks itself");
  if (tier <= 0) throw ValidationError("tiers must be positive");
  for (const auto& [nb, t] : prefs_[u])
    if (nb == v)
      throw ValidationError("vertex '" + names_[u] + "' ranks '" + names_[v] +
                            "' twice");
  prefs_[u].push_back({v, tier});
}

Instance InstanceBuilder::build() && {
  const int n = num_vertices();
  Instance inst;
  inst.names_ = std::move(names_);
  inst.tiers_.assign(static_cast<size_t>(n) * n, 0);
  inst.edge_index_.assign(static_cast<size_t>(n) * n, -1);
  inst.tier_count_.assign(n, 0);
  inst.neighbors_.resize(n);

  // Mutual acceptability: u ranks v iff v ranks u.
  std::vector<std::vector<char>> ranks(n);
  for (int u = 0; u < n; ++u) ranks[u].assign(n, 0);
  for (int u = 0; u < n; ++u)
    for (const auto& [v, t] : prefs_[u]) ranks[u][v] = 1;
  for (int u = 0; u < n; ++u)
    for (const auto& [v, t] : prefs_[u])
      if (!ranks[v][u])
        throw ValidationError("asymmetric acceptability: '" + inst.names_[u] +
                              "' ranks '" + inst.names_[v] +
                              "' but not vice versa");

  // Normalize tiers per vertex to consecutive 1..T_u.
  for (int u = 0; u < n; ++u) {
    std::vector<int> used;
    for (const auto& [v, t] : prefs_[u]) used.push_back(t);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    inst.tier_count_[u] = static_cast<int>(used.size());
    for (const auto& [v, t] : prefs_[u]) {
      int norm = static_cast<int>(std::lower_bound(used.begin(), used.end(),
                                                   t) -
                                  used.begin()) +
                 1;
      inst.tiers_[inst.flat(u, v)] = norm;
    }
    for (int v = 0; v < n; ++v)
      if (inst.tiers_[inst.flat(u, v)] != 0)
        inst.neighbors_[u].push_back(v);
  }

  for (int u = 0; u < n; ++u)
    for (int v : inst.neighbors_[u])
      if (u < v) inst.edges_.push_back({u, v});
  std::sort(inst.edges_.begin(), inst.edges_.end());
  for (int i = 0; i < static_cast<int>(inst.edges_.size()); ++i) {
    const Edge& e = inst.edges_[i];
    inst.edge_index_[inst.flat(e.u, e.v)] = i;
    inst.edge_index_[inst.flat(e.v, e.u)] = i;
  }
  return inst;
}

namespace {

std::string_view trim(std::string_view s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

void check_name(std::string_view name, int line, int col) {
  if (name.empty()) throw ParseError(line, col, "empty vertex name");
  if (name.find_first_of(" \t") != std::string_view::npos)
    throw ParseError(line, col, "vertex name contains whitespace");
  if (name.find_first_of(":>=#") != std::string_view::npos)
    throw ParseError(line, col,
                     "vertex name contains a reserved character (:>=#)");
}

// Splits "b > c = d" into tier groups of names; reports 1-based columns
// relative to `base_col`.
std::vector<std::vector<std::pair<std::string, int>>> split_groups(
    std::string_view body, int line, int base_col) {
  std::vector<std::vector<std::pair<std::string, int>>> groups;
  size_t start = 0;
  for (size_t pos = 0; pos <= body.size(); ++pos) {
    if (pos == body.size() || body[pos] == '>') {
      std::string_view group = body.substr(start, pos - start);
      std::vector<std::pair<std::string, int>> members;
      size_t gstart = 0;
      for (size_t gpos = 0; gpos <= group.size(); ++gpos) {
        if (gpos == group.size() || group[gpos] == '=') {
          std::string_view raw = group.substr(gstart, gpos - gstart);
          std::string_view name = trim(raw);
          int col = base_col + static_cast<int>(start + gstart) +
                    static_cast<int>(raw.find_first_not_of(" \t\r") ==
                                             std::string_view::npos
                                         ? 0
                                         : raw.find_first_not_of(" \t\r"));
          if (name.empty()) {
            // "a:" with no groups at all is allowed (isolated vertex), but
            // "a: b > " or "a: b = " is not.
            if (groups.empty() && members.empty() &&
                trim(body).empty())
              return {};
            throw ParseError(line, col, "empty preference group");
          }
          check_name(name, line, col);
          members.push_back({std::string(name), col});
          gstart = gpos + 1;
        }
      }
      groups.push_back(std::move(members));
      start = pos + 1;
    }
  }
  return groups;
}

struct AgentLine {
  std::string name;
  int line;
  int name_col;
  std::vector<std::vector<std::pair<std::string, int>>> groups;
};

}  // namespace

Instance parse_instance(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  std::vector<AgentLine> agents;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    if (!saw_header) {
      std::istringstream hs{std::string(content)};
      std::string word, version, extra;
      hs >> word >> version;
      if (word != "instance" || version != "v1" || (hs >> extra))
        throw ParseError(line_no, 1, "expected header 'instance v1'");
      saw_header = true;
      continue;
    }
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError(line_no, 1, "expected '<name> : <preferences>'");
    std::string_view name = trim(std::string_view(line).substr(0, colon));
    check_name(name, line_no, 1);
    AgentLine agent;
    agent.name = std::string(name);
    agent.line = line_no;
    agent.name_col = 1;
    agent.groups = split_groups(std::string_view(line).substr(colon + 1),
                                line_no, static_cast<int>(colon) + 2);
    agents.push_back(std::move(agent));
  }
  if (!saw_header && line_no > 0)
    throw ParseError(1, 1, "missing 'instance v1' header");
  if (!saw_header) throw ParseError(1, 1, "empty input");

  InstanceBuilder b;
  for (const auto& agent : agents) {
    if (b.has_vertex(agent.name))
      throw ParseError(agent.line, agent.name_col,
                       "duplicate agent line for '" + agent.name + "'");
    b.add_vertex(agent.name);
  }
  for (const auto& agent : agents) {
    VertexId u = b.vertex(agent.name);
    for (size_t t = 0; t < agent.groups.size(); ++t) {
      for (const auto& [nb_name, col] : agent.groups[t]) {
        if (!b.has_vertex(nb_name))
          throw ParseError(agent.line, col,
                           "unknown vertex name '" + nb_name + "'");
        VertexId v = b.vertex(nb_name);
        if (v == u)
          throw ParseError(agent.line, col,
                           "'" + agent.name + "' ranks itself");
        try {
          b.add_preference(u, v, static_cast<int>(t) + 1);
        } catch (const ValidationError& e) {
          throw ParseError(agent.line, col, e.what());
        }
      }
    }
  }
  try {
    return std::move(b).build();
  } catch (const ValidationError& e) {
    throw ParseError(line_no, 1, e.what());
  }
}

Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "instance v1\n";
  for (VertexId u = 0; u < inst.num_vertices(); ++u) {
    out << inst.name(u) << ":";
    for (int t = 1; t <= inst.tier_count(u); ++t) {
      bool first_in_tier = true;
      for (VertexId v : inst.neighbors(u)) {
        if (inst.tier(u, v) != t) continue;
        out << (first_in_tier ? (t == 1 ? " " : " > ") : " = ")
            << inst.name(v);
        first_in_tier = false;
      }
    }
    out << "\n";
  }
  return out.str();
}

Instance random_instance(int n, const Rational& edge_probability,
                         int max_tiers, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_instance: n < 0");
  if (max_tiers < 1) throw std::invalid_argument("random_instance: max_tiers");
  if (edge_probability < 0 || edge_probability > 1)
    throw std::invalid_argument("random_instance: p outside [0,1]");
  Rng rng(seed);
  InstanceBuilder b;
  for (int i = 0; i < n; ++i) b.add_vertex("v" + std::to_string(i));
  std::vector<std::pair<int, int>> chosen;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(edge_probability)) chosen.push_back({i, j});
  std::vector<std::vector<int>> nbrs(n);
  for (auto [i, j] : chosen) {
    nbrs[i].push_back(j);
    nbrs[j].push_back(i);
  }
  for (int u = 0; u < n; ++u)
    for (int v : nbrs[u])
      b.add_preference(u, v,
                       1 + static_cast<int>(rng.below(
                               static_cast<std::uint64_t>(max_tiers))));
  return std::move(b).build();
}

}  // namespace copeland
