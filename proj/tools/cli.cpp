#include "cli.hpp"

#include <chrono>
#include <climits>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "copeland/fpras.hpp"
#include "copeland/reduction.hpp"
#include "copeland/solver.hpp"
#include "json.hpp"

namespace copeland {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

struct CliError : std::runtime_error {
  CliError(int code, const std::string& what)
      : std::runtime_error(what), code(code) {}
  int code;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError(1, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw CliError(1, "cannot write '" + path + "'");
  out << content;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

Json matching_json(const Matching& m, const Instance& inst) {
  Json arr = Json::array();
  for (const Edge& e : m.edges())
    arr.push_back(Json::array({inst.name(e.u), inst.name(e.v)}));
  return arr;
}

// Shared state per invocation: manifest skeleton plus the output sink.
class Run {
 public:
  Run(std::string command, std::ostream& out) : out_(out) {
    manifest_["command"] = std::move(command);
    manifest_["tool_version"] = kVersion;
    start_ = std::chrono::steady_clock::now();
  }

  void flag(const std::string& name, const Json& value) {
    flags_[name] = value;
  }
  void digest(const std::string& content) {
    manifest_["instance_digest"] = hex64(fnv1a64(content));
  }

  void emit(Json result) {
    auto elapsed = std::chrono::steady_clock::now() - start_;
    manifest_["flags"] = flags_;
    manifest_["duration_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    Json doc;
    doc["manifest"] = manifest_;
    doc["result"] = std::move(result);
    out_ << doc.dump(2) << "\n";
  }

  std::string manifest_comment() const {
    std::string line = "# generated by copeland " +
                       manifest_["command"].get<std::string>() + " (v" +
                       std::string(kVersion) + ")";
    for (const auto& [k, v] : flags_.items())
      line += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    return line + "\n";
  }

 private:
  std::ostream& out_;
  Json manifest_;
  Json flags_;
  std::chrono::steady_clock::time_point start_;
};

SolverBackend parse_backend(const std::string& name) {
  if (name == "auto") return SolverBackend::automatic;
  if (name == "exhaustive") return SolverBackend::exhaustive;
  if (name == "dense") return SolverBackend::dense;
  throw CliError(1, "unknown solver backend '" + name + "'");
}

// ----- enumerate ----------------------------------------------------------

struct EnumerateOpts {
  std::string instance_path;
  std::string alpha = "1/2";
  bool per_matching = false;
  long long budget = 0;
  int jobs = 1;
};

void cmd_enumerate(const EnumerateOpts& opt, Run& run, std::ostream& err) {
  std::string text = read_file(opt.instance_path);
  run.digest(text);
  Instance inst = parse_instance(text);
  long long budget = opt.budget > 0 ? opt.budget : default_enum_budget();
  Rational alpha = parse_rational(opt.alpha);
  if (alpha < 0 || alpha > 1) throw CliError(1, "alpha must lie in [0,1]");

  auto all = enumerate_matchings(inst, budget);
  auto table = score_table(inst, all, opt.jobs);
  const long long mu = static_cast<long long>(all.size());

  Json result;
  result["mu"] = mu;
  Json warnings = Json::array();
  for (const auto& warning : inst.validation_warnings())
    warnings.push_back(warning);
  if (!warnings.empty()) result["warnings"] = warnings;
  auto winner_idx = copeland_winner_indices(table, alpha);
  result["alpha"] = to_string(alpha);
  result["max_alpha_score"] =
      to_string(table[winner_idx[0]].alpha_score(alpha));
  Json winners = Json::array();
  for (int i : winner_idx) winners.push_back(matching_json(all[i], inst));
  result["copeland_winners"] = winners;
  auto weak_idx = weak_copeland_winner_indices(table);
  result["weak_copeland_count"] = weak_idx.size();

  Json populars = Json::array();
  long long popular_count = 0;
  for (size_t i = 0; i < all.size(); ++i) {
    if (table[i].losses == 0) {
      ++popular_count;
      populars.push_back(matching_json(all[i], inst));
    }
  }
  result["popular_count"] = popular_count;
  result["popular"] = populars;

  long long stable_count = 0;
  for (const Matching& m : all)
    if (is_stable(inst, m)) ++stable_count;
  result["stable_count"] = stable_count;

  if (opt.per_matching) {
    Json rows = Json::array();
    for (size_t i = 0; i < all.size(); ++i) {
      Json row;
      row["matching"] = matching_json(all[i], inst);
      row["wins"] = table[i].wins;
      row["ties"] = table[i].ties;
      row["losses"] = table[i].losses;
      row["score"] = to_string(table[i].score());
      row["popular"] = table[i].losses == 0;
      row["weak_copeland"] = table[i].twice_score() >= mu;
      row["semi_popular"] = 2 * (table[i].wins + table[i].ties) >= mu;
      row["condorcet"] = table[i].wins == mu - 1;
      row["stable"] = is_stable(inst, all[i]);
      row["pareto_optimal"] = is_pareto_optimal(inst, all[i], budget);
      row["unpopularity_margin"] = to_string(
          popularity_via_solver(inst, all[i], SolverBackend::automatic, budget)
              .margin);
      rows.push_back(std::move(row));
    }
    result["matchings"] = rows;
  }
  run.emit(result);
  err << "mu=" << mu << " copeland_winners=" << winner_idx.size()
      << " popular=" << popular_count << "\n";
}

// ----- elect ---------------------------------------------------------------

struct ElectOpts {
  std::string instance_path, m_path, n_path;
};

void cmd_elect(const ElectOpts& opt, Run& run, std::ostream& err) {
  std::string text = read_file(opt.instance_path);
  run.digest(text);
  Instance inst = parse_instance(text);
  Matching m = parse_matching(read_file(opt.m_path), inst);
  Matching n = parse_matching(read_file(opt.n_path), inst);
  ElectionResult r = compare(inst, m, n);
  Json result;
  result["m"] = matching_json(m, inst);
  result["n"] = matching_json(n, inst);
  result["votes_for"] = r.votes_for;
  result["votes_against"] = r.votes_against;
  result["delta"] = r.delta;
  result["outcome"] = r.outcome == ElectionResult::Outcome::win    ? "win"
                      : r.outcome == ElectionResult::Outcome::loss ? "loss"
                                                                   : "tie";
  run.emit(result);
  err << "delta=" << r.delta << "\n";
}

// ----- fpras ---------------------------------------------------------------

struct FprasOpts {
  std::string instance_path;
  std::string epsilon = "1/4";
  std::uint64_t seed = 0;
  long long trials = 1;
  bool exact_uniform = false;
  long long steps = 0;
  std::string laziness = "1/2";
  long long k_override = 0;
  long long budget = 0;
  int jobs = 1;
  bool full = false;  // also emit the samples and their counters
};

void cmd_fpras(const FprasOpts& opt, Run& run, std::ostream& err) {
  std::string text = read_file(opt.instance_path);
  run.digest(text);
  Instance inst = parse_instance(text);
  Rational epsilon = parse_rational(opt.epsilon);
  if (epsilon <= 0) throw CliError(1, "epsilon must be positive");
  if (opt.trials < 1) throw CliError(1, "trials must be >= 1");

  FprasConfig cfg;
  cfg.epsilon = epsilon;
  cfg.exact_uniform = opt.exact_uniform;
  cfg.sampler.steps = opt.steps;
  cfg.sampler.laziness = parse_rational(opt.laziness);
  cfg.jobs = opt.jobs;
  cfg.budget = opt.budget > 0 ? opt.budget : default_enum_budget();
  if (opt.k_override > 0) cfg.k_override = opt.k_override;

  // Oracle cross-check when the instance is small enough to enumerate.
  std::vector<Matching> all;
  std::vector<ScoreRecord> table;
  bool oracle_ready = false;
  try {
    all = enumerate_matchings(inst, std::min<long long>(cfg.budget, 100'000));
    table = score_table(inst, all, opt.jobs);
    oracle_ready = true;
  } catch (const BudgetExceeded&) {
  }
  std::map<Matching, Rational> oracle_score;
  if (oracle_ready)
    for (size_t i = 0; i < all.size(); ++i)
      oracle_score[all[i]] = table[i].score();

  Json trials = Json::array();
  bool all_ok = true;
  for (long long t = 0; t < opt.trials; ++t) {
    cfg.seed = mix_seed(opt.seed, static_cast<std::uint64_t>(t));
    TournamentReport report = run_fpras(inst, cfg);
    Json row;
    row["trial"] = t;
    row["seed"] = cfg.seed;
    row["k"] = report.k;
    row["backend"] = report.backend;
    row["winner"] = matching_json(report.winner, inst);
    row["winner_primed_score"] = to_string(report.winner_primed_score);
    bool bound = tournament_bound_holds(report);
    bool conserved = tournament_conserved(report);
    row["sample_bound_ok"] = bound;
    row["conservation_ok"] = conserved;
    all_ok = all_ok && bound && conserved;
    if (oracle_ready) {
      row["oracle_score"] = to_string(oracle_score.at(report.winner));
      row["mu"] = static_cast<long long>(all.size());
    }
    if (opt.full || opt.trials == 1) {
      // Full audit trail: both samples with their cross-sample counters.
      auto dump_side = [&](const std::vector<TournamentEntry>& entries) {
        Json side = Json::array();
        for (const auto& entry : entries) {
          Json e;
          e["matching"] = matching_json(entry.matching, inst);
          e["wins"] = entry.wins;
          e["ties"] = entry.ties;
          side.push_back(std::move(e));
        }
        return side;
      };
      row["sample0"] = dump_side(report.sample0);
      row["sample1"] = dump_side(report.sample1);
    }
    trials.push_back(std::move(row));
  }
  Json result;
  result["trials"] = std::move(trials);
  result["all_checks_ok"] = all_ok;
  run.emit(result);
  err << "trials=" << opt.trials << " checks=" << (all_ok ? "ok" : "FAILED")
      << "\n";
  if (!all_ok) throw CliError(3, "tournament invariants failed");
}

// ----- wtscore --------------------------------------------------------------

struct WtscoreOpts {
  std::string instance_path;
  std::string mode = "exact";
  std::string epsilon = "1/4";
  long long samples = 0;
  std::uint64_t seed = 0;
  bool exact_uniform = false;
  long long steps = 0;
  std::string solver = "auto";
  long long budget = 0;
  int jobs = 1;
};

void cmd_wtscore(const WtscoreOpts& opt, Run& run, std::ostream& err) {
  std::string text = read_file(opt.instance_path);
  run.digest(text);
  Instance inst = parse_instance(text);
  long long budget = opt.budget > 0 ? opt.budget : default_enum_budget();
  SolverBackend backend = parse_backend(opt.solver);

  Json result;
  result["mode"] = opt.mode;
  if (opt.mode == "exact") {
    WeightedWinner win = weighted_copeland_exact(inst, budget, backend);
    result["matching"] = matching_json(win.matching, inst);
    result["wt_score"] = to_string(win.score);
    // Independent route: the direct average margin of the winner.
    Rational direct = average_margin(inst, win.matching, budget);
    result["direct_average_margin"] = to_string(direct);
    result["routes_agree"] = direct == win.score;
    result["nonnegative_max"] = win.score >= 0;
    run.emit(result);
    err << "wt-score=" << to_string(win.score) << "\n";
    if (direct != win.score || win.score < 0)
      throw CliError(3, "weighted winner invariants failed");
  } else if (opt.mode == "apx") {
    ApxConfig cfg;
    cfg.epsilon = parse_rational(opt.epsilon);
    cfg.num_samples = opt.samples;
    cfg.exact_uniform = opt.exact_uniform;
    cfg.sampler.steps = opt.steps;
    cfg.seed = opt.seed;
    cfg.jobs = opt.jobs;
    cfg.solver = backend;
    cfg.budget = budget;
    WeightedWinner win = weighted_copeland_apx(inst, cfg);
    result["matching"] = matching_json(win.matching, inst);
    result["estimated_wt_score"] = to_string(win.score);
    result["samples"] = cfg.num_samples > 0
                            ? cfg.num_samples
                            : default_marginal_samples(inst, cfg.epsilon);
    try {
      UniformMarginals q =
          exact_marginals(inst, std::min<long long>(budget, 100'000));
      result["exact_wt_score_of_winner"] =
          to_string(wt_score(inst, win.matching, q));
    } catch (const BudgetExceeded&) {
    }
    run.emit(result);
    err << "estimated wt-score=" << to_string(win.score) << "\n";
  } else {
    throw CliError(1, "mode must be 'exact' or 'apx'");
  }
}

// ----- reduce ---------------------------------------------------------------

struct ReduceOpts {
  std::string cover_path;
  int aux = 100;
  std::string output;
  std::string map_path;
};

void cmd_reduce(const ReduceOpts& opt, Run& run, std::ostream& err) {
  std::string text = read_file(opt.cover_path);
  run.digest(text);
  CoverInstance h = parse_cover(text);
  ReductionArtifacts art = build_reduction(h, opt.aux);

  std::string instance_text =
      run.manifest_comment() + serialize_instance(art.instance);
  if (!opt.output.empty()) write_file(opt.output, instance_text);

  Json map;
  map["aux_count"] = art.aux_count;
  Json vgs = Json::array();
  for (size_t i = 0; i < art.vertex_gadgets.size(); ++i) {
    const auto& z = art.vertex_gadgets[i];
    Json g;
    g["h_vertex"] = i + 1;
    g["a"] = art.instance.name(z.a);
    g["b"] = art.instance.name(z.b);
    g["a_prime"] = art.instance.name(z.ap);
    g["b_prime"] = art.instance.name(z.bp);
    Json aux = Json::array();
    for (VertexId u : z.aux) aux.push_back(art.instance.name(u));
    g["aux"] = aux;
    vgs.push_back(std::move(g));
  }
  map["vertex_gadgets"] = vgs;
  Json egs = Json::array();
  for (const auto& y : art.edge_gadgets) {
    Json g;
    g["h_edge"] = Json::array({y.h_edge.first, y.h_edge.second});
    for (auto [key, id] :
         std::initializer_list<std::pair<const char*, VertexId>>{
             {"s", y.s},
             {"t", y.t},
             {"s_prime", y.sp},
             {"t_prime", y.tp},
             {"s_dprime", y.spp},
             {"t_dprime", y.tpp},
             {"v", y.v},
             {"v_prime", y.vp},
             {"w", y.w},
             {"w_prime", y.wp},
             {"c", y.c},
             {"d", y.d},
             {"c_prime", y.cp},
             {"d_prime", y.dp}})
      g[key] = art.instance.name(id);
    egs.push_back(std::move(g));
  }
  map["edge_gadgets"] = egs;
  Json inter = Json::array();
  for (const Edge& e : art.inter_gadget_edges)
    inter.push_back(
        Json::array({art.instance.name(e.u), art.instance.name(e.v)}));
  map["inter_gadget_edges"] = inter;
  if (!opt.map_path.empty()) write_file(opt.map_path, map.dump(2) + "\n");

  Json result;
  result["h_vertices"] = h.n;
  result["h_edges"] = h.edges.size();
  result["aux_count"] = art.aux_count;
  result["instance_vertices"] = art.instance.num_vertices();
  result["instance_edges"] = art.instance.num_edges();
  result["inter_gadget_edges"] = art.inter_gadget_edges.size();
  if (!opt.output.empty()) result["instance_file"] = opt.output;
  if (!opt.map_path.empty()) result["gadget_map_file"] = opt.map_path;
  if (opt.output.empty()) result["instance_text"] = instance_text;
  run.emit(result);
  err << "reduced " << h.n << " vertices / " << h.edges.size() << " edges -> "
      << art.instance.num_vertices() << " agents\n";
}

// ----- certify --------------------------------------------------------------

struct CertifyOpts {
  std::string cover_path;
  int aux = 100;
  std::string blue;  // comma-separated H-vertices; empty means none
  bool all_blue = false;
  bool solver_check = false;
  std::string solver = "dense";
};

StateAssignment parse_states(const CoverInstance& h, const CertifyOpts& opt) {
  StateAssignment s;
  s.state.assign(h.n, GadgetState::red);
  if (opt.all_blue) {
    std::fill(s.state.begin(), s.state.end(), GadgetState::blue);
    return s;
  }
  std::stringstream ss(opt.blue);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int v = 0;
    try {
      v = std::stoi(item);
    } catch (const std::exception&) {
      throw CliError(1, "bad blue vertex '" + item + "'");
    }
    if (v < 1 || v > h.n)
      throw CliError(1, "blue vertex " + item + " outside 1..n");
    s.state[v - 1] = GadgetState::blue;
  }
  return s;
}

void cmd_certify(const CertifyOpts& opt, Run& run, std::ostream& err) {
  std::string text = read_file(opt.cover_path);
  run.digest(text);
  CoverInstance h = parse_cover(text);
  StateAssignment s = parse_states(h, opt);
  if (!s.covers(h))
    throw CliError(1,
                   "state assignment leaves an H-edge with both endpoints "
                   "red; no certified matching exists for it");
  ReductionArtifacts art = build_reduction(h, opt.aux);
  Matching m = build_state_matching(art, s);
  DualCertificate cert = build_dual_certificate(art, s);
  DualCheck check = verify_dual(art.instance, m, cert);

  long long min_slack = LLONG_MAX;
  for (const Edge& e : art.inter_gadget_edges)
    min_slack = std::min(min_slack,
                         check.edge_slack[art.instance.edge_index(e.u, e.v)]);

  Json result;
  Json blues = Json::array();
  for (int i = 0; i < h.n; ++i)
    if (s.state[i] == GadgetState::blue) blues.push_back(i + 1);
  result["blue_vertices"] = blues;
  result["matching_size"] = m.size();
  result["dual_feasible"] = check.feasible;
  result["dual_zero_sum"] = check.zero_sum;
  result["objective"] = check.objective;
  result["certified_popular"] = check.certified();
  if (!art.inter_gadget_edges.empty())
    result["min_inter_gadget_slack"] = min_slack;
  bool ok = check.certified();
  if (opt.solver_check) {
    auto pop =
        popularity_via_solver(art.instance, m, parse_backend(opt.solver));
    result["solver_confirms_popular"] = pop.popular;
    result["solver_margin"] = to_string(pop.margin);
    ok = ok && pop.popular;
  }
  run.emit(result);
  err << "certified=" << (check.certified() ? "yes" : "NO") << "\n";
  if (!ok) throw CliError(3, "certificate verification failed");
}

// ----- sample-diag ----------------------------------------------------------

struct SampleDiagOpts {
  std::string instance_path;
  long long samples = 10000;
  long long steps = 0;
  std::uint64_t seed = 0;
  std::string laziness = "1/2";
  bool transition_check = false;
  long long budget = 0;
  int jobs = 1;
};

void cmd_sample_diag(const SampleDiagOpts& opt, Run& run, std::ostream& err) {
  std::string text = read_file(opt.instance_path);
  run.digest(text);
  Instance inst = parse_instance(text);
  long long budget = opt.budget > 0 ? opt.budget : default_enum_budget();
  SamplerConfig cfg;
  cfg.steps = opt.steps;
  cfg.seed = opt.seed;
  cfg.laziness = parse_rational(opt.laziness);

  Json result;
  result["mu"] = count_matchings(inst, budget);
  result["steps"] = cfg.steps > 0 ? cfg.steps : default_chain_steps(inst);
  result["samples"] = opt.samples;
  Rational tv = tv_diagnostic(inst, cfg, opt.samples, budget, opt.jobs);
  result["tv_distance"] = to_string(tv);
  result["tv_distance_approx"] = tv.get_d();
  bool ok = true;
  if (opt.transition_check) {
    TransitionCheck check = check_transition_matrix(inst, cfg.laziness, budget);
    Json tj;
    tj["symmetric"] = check.symmetric;
    tj["rows_sum_one"] = check.rows_sum_one;
    tj["lazy_diagonal"] = check.lazy_diagonal;
    tj["uniform_stationary"] = check.uniform_stationary;
    result["transition_check"] = tj;
    ok = check.ok();
  }
  run.emit(result);
  err << "tv=" << tv.get_d() << "\n";
  if (!ok) throw CliError(3, "transition matrix checks failed");
}

// ----- verify-gadgets -------------------------------------------------------

struct VerifyGadgetOpts {
  std::string cover_path;
  int aux = 5;
  bool witnesses = false;
};

void cmd_verify_gadgets(const VerifyGadgetOpts& opt, Run& run,
                        std::ostream& err) {
  std::string text = read_file(opt.cover_path);
  run.digest(text);
  CoverInstance h = parse_cover(text);
  ReductionArtifacts art = build_reduction(h, opt.aux);
  GadgetInvariantReport report = verify_gadget_invariants(art);

  Json result;
  Json vgs = Json::array();
  for (const auto& r : report.vertex_reports) {
    Json row;
    row["h_vertex"] = r.h_vertex;
    row["red_ties"] = r.red.ties;
    row["red_defeats"] = r.red.defeats;
    row["blue_ties"] = r.blue.ties;
    row["blue_defeats"] = r.blue.defeats;
    row["subgraph_matchings"] = r.subgraph_matchings;
    row["ok"] = r.ok();
    vgs.push_back(std::move(row));
  }
  result["vertex_gadgets"] = vgs;
  Json egs = Json::array();
  for (const auto& r : report.edge_reports) {
    Json row;
    row["h_edge"] = Json::array({r.h_edge.first, r.h_edge.second});
    row["f_ties"] = r.f.ties;
    row["f_defeats"] = r.f.defeats;
    row["l_ties"] = r.l.ties;
    row["l_defeats"] = r.l.defeats;
    row["min_defeats_plus_ties"] = r.min_defeats_plus_ties;
    row["tie_lists_match"] = r.f_tie_list_matches && r.l_tie_list_matches;
    row["subgraph_matchings"] = r.subgraph_matchings;
    row["ok"] = r.ok();
    egs.push_back(std::move(row));
  }
  result["edge_gadgets"] = egs;
  bool ok = report.ok();

  if (opt.witnesses) {
    // Canonical red-red configurations exercising each construction case.
    Json wits = Json::array();
    for (const auto& y : art.edge_gadgets) {
      auto base = [&](std::vector<Edge> part) {
        const auto& zi = art.vertex_gadgets[y.h_edge.first - 1];
        const auto& zj = art.vertex_gadgets[y.h_edge.second - 1];
        part.push_back(make_edge(zi.a, zi.b));
        part.push_back(make_edge(zi.ap, zi.bp));
        part.push_back(make_edge(zj.a, zj.b));
        part.push_back(make_edge(zj.ap, zj.bp));
        return Matching(std::move(part));
      };
      std::vector<std::pair<const char*, Matching>> cases = {
          {"holds_c",
           base({make_edge(y.s, y.c), make_edge(y.cp, y.dp),
                 make_edge(y.v, y.vp), make_edge(y.w, y.wp),
                 make_edge(y.sp, y.tp), make_edge(y.spp, y.tpp)})},
          {"both_tops",
           base({make_edge(y.s, y.tp), make_edge(y.spp, y.t),
                 make_edge(y.c, y.d), make_edge(y.cp, y.dp),
                 make_edge(y.v, y.vp), make_edge(y.w, y.wp)})},
          {"below_c",
           base({make_edge(y.sp, y.t), make_edge(y.c, y.d),
                 make_edge(y.cp, y.dp), make_edge(y.v, y.vp),
                 make_edge(y.w, y.wp)})},
      };
      for (const auto& [label, m] : cases) {
        WitnessReport wr = verify_red_red_witnesses(art, y.h_edge, m);
        Json row;
        row["h_edge"] = Json::array({y.h_edge.first, y.h_edge.second});
        row["configuration"] = label;
        row["construction_case"] = wr.construction_case;
        row["expected"] = wr.expected;
        row["confirmed"] = wr.confirmed;
        row["ok"] = wr.ok();
        ok = ok && wr.ok();
        wits.push_back(std::move(row));
      }
    }
    result["witnesses"] = wits;
  }
  result["ok"] = ok;
  run.emit(result);
  err << "gadget checks " << (ok ? "ok" : "FAILED") << "\n";
  if (!ok) throw CliError(3, "gadget verification failed");
}

// ----- random ---------------------------------------------------------------

struct RandomOpts {
  int n = 8;
  std::string p = "1/2";
  int tiers = 3;
  std::uint64_t seed = 0;
  std::string output;
};

void cmd_random(const RandomOpts& opt, Run& run, std::ostream& out,
                std::ostream& err) {
  Instance inst =
      random_instance(opt.n, parse_rational(opt.p), opt.tiers, opt.seed);
  std::string text = run.manifest_comment() + serialize_instance(inst);
  if (opt.output.empty())
    out << text;
  else
    write_file(opt.output, text);
  err << "generated " << inst.num_vertices() << " agents, " << inst.num_edges()
      << " edges\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "matchings under weak preferences: elections, sampling tournaments, "
      "weighted winners, hardness gadgets"};
  app.require_subcommand(1);

  EnumerateOpts en;
  auto* cen = app.add_subcommand(
      "enumerate", "exhaustive scores, winner sets and popularity flags");
  cen->add_option("instance", en.instance_path)->required();
  cen->add_option("--alpha", en.alpha, "tie weight for the alpha-scored rule");
  cen->add_flag("--per-matching", en.per_matching);
  cen->add_option("--budget", en.budget);
  cen->add_option("--jobs", en.jobs);

  ElectOpts el;
  auto* cel = app.add_subcommand("elect", "one head-to-head election");
  cel->add_option("instance", el.instance_path)->required();
  cel->add_option("--m", el.m_path)->required();
  cel->add_option("--n", el.n_path)->required();

  FprasOpts fp;
  auto* cfp = app.add_subcommand("fpras", "sampling tournament winner");
  cfp->add_option("instance", fp.instance_path)->required();
  cfp->add_option("--epsilon", fp.epsilon);
  cfp->add_option("--seed", fp.seed);
  cfp->add_option("--trials", fp.trials);
  cfp->add_flag("--exact-uniform", fp.exact_uniform);
  cfp->add_option("--steps", fp.steps);
  cfp->add_option("--laziness", fp.laziness);
  cfp->add_option("--k", fp.k_override);
  cfp->add_option("--budget", fp.budget);
  cfp->add_option("--jobs", fp.jobs);
  cfp->add_flag("--full", fp.full, "emit both samples and their counters");

  WtscoreOpts wt;
  auto* cwt = app.add_subcommand("wtscore", "weighted winner, exact or apx");
  cwt->add_option("instance", wt.instance_path)->required();
  cwt->add_option("--mode", wt.mode);
  cwt->add_option("--epsilon", wt.epsilon);
  cwt->add_option("--samples", wt.samples);
  cwt->add_option("--seed", wt.seed);
  cwt->add_flag("--exact-uniform", wt.exact_uniform);
  cwt->add_option("--steps", wt.steps);
  cwt->add_option("--solver", wt.solver);
  cwt->add_option("--budget", wt.budget);
  cwt->add_option("--jobs", wt.jobs);

  ReduceOpts rd;
  auto* crd = app.add_subcommand("reduce", "compile a cover instance");
  crd->add_option("cover", rd.cover_path)->required();
  crd->add_option("--aux", rd.aux);
  crd->add_option("-o,--output", rd.output);
  crd->add_option("--map", rd.map_path);

  CertifyOpts ct;
  auto* cct =
      app.add_subcommand("certify", "state matching + dual certificate check");
  cct->add_option("cover", ct.cover_path)->required();
  cct->add_option("--aux", ct.aux);
  cct->add_option("--blue", ct.blue, "comma-separated blue H-vertices");
  cct->add_flag("--all-blue", ct.all_blue);
  cct->add_flag("--solver-check", ct.solver_check);
  cct->add_option("--solver", ct.solver);

  SampleDiagOpts sd;
  auto* csd = app.add_subcommand("sample-diag", "chain closeness diagnostics");
  csd->add_option("instance", sd.instance_path)->required();
  csd->add_option("--samples", sd.samples);
  csd->add_option("--steps", sd.steps);
  csd->add_option("--seed", sd.seed);
  csd->add_option("--laziness", sd.laziness);
  csd->add_flag("--transition-check", sd.transition_check);
  csd->add_option("--budget", sd.budget);
  csd->add_option("--jobs", sd.jobs);

  VerifyGadgetOpts vg;
  auto* cvg =
      app.add_subcommand("verify-gadgets", "exhaustive gadget subgraph checks");
  cvg->add_option("cover", vg.cover_path)->required();
  cvg->add_option("--aux", vg.aux);
  cvg->add_flag("--witnesses", vg.witnesses);

  RandomOpts rn;
  auto* crn = app.add_subcommand("random", "seeded random instance");
  crn->add_option("--n", rn.n);
  crn->add_option("--p", rn.p);
  crn->add_option("--tiers", rn.tiers);
  crn->add_option("--seed", rn.seed);
  crn->add_option("-o,--output", rn.output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (cen->parsed()) {
      Run run("enumerate", out);
      run.flag("instance", en.instance_path);
      run.flag("alpha", en.alpha);
      run.flag("per_matching", en.per_matching);
      run.flag("budget", en.budget > 0 ? en.budget : default_enum_budget());
      run.flag("jobs", en.jobs);
      cmd_enumerate(en, run, err);
    } else if (cel->parsed()) {
      Run run("elect", out);
      run.flag("instance", el.instance_path);
      run.flag("m", el.m_path);
      run.flag("n", el.n_path);
      cmd_elect(el, run, err);
    } else if (cfp->parsed()) {
      Run run("fpras", out);
      run.flag("instance", fp.instance_path);
      run.flag("epsilon", fp.epsilon);
      run.flag("seed", fp.seed);
      run.flag("trials", fp.trials);
      run.flag("exact_uniform", fp.exact_uniform);
      run.flag("steps", fp.steps);
      run.flag("laziness", fp.laziness);
      run.flag("k_override", fp.k_override);
      run.flag("jobs", fp.jobs);
      cmd_fpras(fp, run, err);
    } else if (cwt->parsed()) {
      Run run("wtscore", out);
      run.flag("instance", wt.instance_path);
      run.flag("mode", wt.mode);
      run.flag("epsilon", wt.epsilon);
      run.flag("samples", wt.samples);
      run.flag("seed", wt.seed);
      run.flag("exact_uniform", wt.exact_uniform);
      run.flag("steps", wt.steps);
      run.flag("solver", wt.solver);
      run.flag("jobs", wt.jobs);
      cmd_wtscore(wt, run, err);
    } else if (crd->parsed()) {
      Run run("reduce", out);
      run.flag("cover", rd.cover_path);
      run.flag("aux", rd.aux);
      cmd_reduce(rd, run, err);
    } else if (cct->parsed()) {
      Run run("certify", out);
      run.flag("cover", ct.cover_path);
      run.flag("aux", ct.aux);
      run.flag("blue", ct.all_blue ? "all" : ct.blue);
      run.flag("solver_check", ct.solver_check);
      cmd_certify(ct, run, err);
    } else if (csd->parsed()) {
      Run run("sample-diag", out);
      run.flag("instance", sd.instance_path);
      run.flag("samples", sd.samples);
      run.flag("steps", sd.steps);
      run.flag("seed", sd.seed);
      run.flag("laziness", sd.laziness);
      run.flag("transition_check", sd.transition_check);
      run.flag("jobs", sd.jobs);
      cmd_sample_diag(sd, run, err);
    } else if (cvg->parsed()) {
      Run run("verify-gadgets", out);
      run.flag("cover", vg.cover_path);
      run.flag("aux", vg.aux);
      run.flag("witnesses", vg.witnesses);
      cmd_verify_gadgets(vg, run, err);
    } else if (crn->parsed()) {
      Run run("random", out);
      run.flag("n", rn.n);
      run.flag("p", rn.p);
      run.flag("tiers", rn.tiers);
      run.flag("seed", rn.seed);
      cmd_random(rn, run, out, err);
    }
  } catch (const CliError& e) {
    err << "error: " << e.what() << "\n";
    return e.code;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace copeland
