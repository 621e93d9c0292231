// Command-line front end: builds the Hermitian tangent graphs, verifies
// their parameters, spectra and clique structure, and certifies the
// automorphism-group identifications. JSON goes to stdout, logs to stderr.
//
// Exit codes: 0 ok / claim confirmed, 1 verification failed, 2 usage error,
// 3 resource cap exceeded.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nu/aut_engine.hpp"
#include "nu/brute_force.hpp"
#include "nu/cliques.hpp"
#include "nu/perm_group.hpp"
#include "nu/srg.hpp"
#include "nu/tangent_graphs.hpp"
#include "nu/theorem.hpp"
#include "nu/unitary.hpp"
#include "nu/util.hpp"

using nlohmann::json;
using namespace nu;

namespace {

constexpr int kSchemaVersion = 1;

json field_json(const Field& f) {
  return json{{"p", f.characteristic()},
              {"e", f.extension_exponent()},
              {"q", f.q()},
              {"size", f.size()},
              {"modulus", f.modulus_string()},
              {"modulus_coefficients", f.modulus()}};
}

json params_json(const SrgParams& p) {
  return json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

json measurement_json(const SrgMeasurement& m) {
  json j;
  switch (m.status) {
    case SrgStatus::srg:
      j["status"] = "srg";
      j["params"] = params_json(m.params);
      break;
    case SrgStatus::not_regular:
      j["status"] = "not_regular";
      break;
    case SrgStatus::lambda_not_constant:
      j["status"] = "lambda_not_constant";
      break;
    case SrgStatus::mu_not_constant:
      j["status"] = "mu_not_constant";
      break;
    case SrgStatus::degenerate_complete:
      j["status"] = "degenerate_complete";
      break;
    case SrgStatus::degenerate_empty:
      j["status"] = "degenerate_empty";
      break;
  }
  if (m.witness_u >= 0) j["witness"] = {m.witness_u, m.witness_w};
  return j;
}

json spectrum_json(const Spectrum& s) {
  return json{{"k", s.k}, {"theta1", s.theta1}, {"m1", s.m1}, {"theta2", s.theta2}, {"m2", s.m2}};
}

TangentGraph build_graph(int n, int q, bool gamma, long long max_points) {
  auto [p, e] = prime_power_decompose(q);
  auto space = std::make_shared<const HermitianSpace>(make_field(p, e), n, max_points);
  return gamma ? build_gamma(space) : build_nu(space);
}

int run_build(int n, int q, bool gamma, bool complement, const std::string& out,
              const std::string& format, long long max_points) {
  TangentGraph t = build_graph(n, q, gamma, max_points);
  Graph g = complement ? t.graph.complement() : t.graph;
  std::string payload = format == "graph6" ? to_graph6(g) + "\n" : to_dimacs(g);
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output file: " << out << "\n";
    return 2;
  }
  f << payload;
  f.close();

  json labels = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(t.space->point(t.vertex_point[v]));
  json j{{"schema_version", kSchemaVersion},
         {"n", n},
         {"q", q},
         {"gamma", gamma},
         {"complement", complement},
         {"v", g.vertex_count()},
         {"edges", g.edge_count()},
         {"format", format},
         {"out", out},
         {"field", field_json(t.space->field())},
         {"vertex_labels", labels}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_params(int n, int q, int threads, long long max_points) {
  TangentGraph t = build_graph(n, q, false, max_points);
  SrgParams expect = expected_params(n, q);
  SrgParams expect_c = expected_complement_params(n, q);
  SrgMeasurement got = measure_srg(t.graph, threads);
  Graph comp = t.graph.complement();
  SrgMeasurement got_c = measure_srg(comp, threads);
  bool match = got.is_srg() && got.params == expect;
  bool match_c = got_c.is_srg() && got_c.params == expect_c;
  bool identity = verify_srg_identity(t.graph, expect, threads);
  bool identity_c = verify_srg_identity(comp, expect_c, threads);

  json j{{"schema_version", kSchemaVersion},
         {"n", n},
         {"q", q},
         {"field", field_json(t.space->field())},
         {"expected", params_json(expect)},
         {"measured", measurement_json(got)},
         {"match", match},
         {"srg_identity", identity},
         {"feasible", expect.feasible()},
         {"spectrum", spectrum_json(spectrum_from_params(expect))},
         {"complement",
          json{{"expected", params_json(expect_c)},
               {"measured", measurement_json(got_c)},
               {"match", match_c},
               {"srg_identity", identity_c},
               {"spectrum", spectrum_json(spectrum_from_params(expect_c))}}}};
  std::cout << j.dump(2) << "\n";
  return (match && match_c && identity && identity_c) ? 0 : 1;
}

int run_cliques(int n, int q, long long max_points, int max_vertices) {
  if (n != 2) {
    std::cerr << "clique classification is defined for n = 2\n";
    return 2;
  }
  TangentGraph t = build_graph(n, q, false, max_points);
  auto cliques = maximal_cliques(t.graph, max_vertices);
  CliqueCensus census = classify_cliques(t, cliques);
  long long expected_tangent = (long long)q * q * q + 1;
  json sizes = json::object();
  for (auto& [s, c] : census.by_size) sizes[std::to_string(s)] = c;
  bool tangent_match = census.tangent_type == expected_tangent;
  json j{{"schema_version", kSchemaVersion},
         {"n", n},
         {"q", q},
         {"v", t.graph.vertex_count()},
         {"field", field_json(t.space->field())},
         {"clique_count", cliques.size()},
         {"by_size", sizes},
         {"tangent_type", census.tangent_type},
         {"two_line_type", census.two_line_type},
         {"expected_tangent_type", expected_tangent},
         {"tangent_match", tangent_match}};
  std::cout << j.dump(2) << "\n";
  return tangent_match ? 0 : 1;
}

int run_aut(int n, int q, bool gamma, long long max_points, int max_vertices) {
  TangentGraph t = build_graph(n, q, gamma, max_points);
  AutResult aut = automorphism_group(t.graph, max_vertices);
  json gens = json::array();
  for (const auto& g : aut.generators)
    gens.push_back(json{{"images", g.images()}, {"cycles", g.cycle_string()}});
  json orbits = json::array();
  for (const auto& o : aut.orbit_partition) orbits.push_back(o);
  json j{{"schema_version", kSchemaVersion},
         {"n", n},
         {"q", q},
         {"gamma", gamma},
         {"v", t.graph.vertex_count()},
         {"field", field_json(t.space->field())},
         {"aut_order", aut.group.order().str()},
         {"generators", gens},
         {"orbits", orbits},
         {"canonical_graph6", to_graph6(t.graph.relabeled(aut.canonical_labeling.images()))}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_theorem1_cmd(int q, int max_vertices) {
  Theorem1Report rep = run_theorem1(q, max_vertices);
  json j{{"schema_version", kSchemaVersion},
         {"q", rep.q},
         {"p", rep.p},
         {"e", rep.e},
         {"field_modulus", rep.field_modulus},
         {"v", rep.vertices},
         {"aut_order", rep.aut_order},
         {"expected_aut_order", rep.expected_aut_order},
         {"aut_order_matches", rep.aut_order_matches},
         {"confirmed", rep.confirmed}};
  if (rep.q == 2) {
    j["complement_component_count"] = rep.complement_component_count;
    j["complement_components_are_k3"] = rep.complement_components_are_k3;
    j["wreath_order"] = rep.wreath_order;
    j["wreath_generators_in_aut"] = rep.wreath_generators_in_aut;
  } else {
    j["pgu_order"] = rep.pgu_order;
    j["pgammau_order"] = rep.pgammau_order;
    j["pgammau_generators_are_automorphisms"] = rep.pgammau_generators_are_automorphisms;
    j["contained_in_aut"] = rep.contained_in_aut;
    j["orders_equal"] = rep.orders_equal;
  }
  std::cout << j.dump(2) << "\n";
  return rep.confirmed ? 0 : 1;
}

int run_selftest(int graphs, uint64_t seed, int relabelings) {
  std::mt19937_64 rng(seed);
  json j{{"schema_version", kSchemaVersion}, {"seed", seed}, {"graphs", graphs}};
  bool all_ok = true;

  // field axioms, exhaustive on the four smallest tabulated fields
  bool fields_ok = true;
  for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto f = make_field(p, e);
    int N = f->size();
    for (int a = 0; a < N && fields_ok; ++a) {
      if (f->conj(f->conj(a)) != a) fields_ok = false;
      if (a != 0 && f->mul(a, f->inv(a)) != 1) fields_ok = false;
      for (int b = 0; b < N; ++b) {
        if (f->add(a, b) != f->add(b, a) || f->mul(a, b) != f->mul(b, a)) fields_ok = false;
        if (f->norm(f->mul(a, b)) != f->mul(f->norm(a), f->norm(b))) fields_ok = false;
      }
    }
  }
  j["field_axioms_ok"] = fields_ok;
  all_ok = all_ok && fields_ok;

  // SRG identity: naive adjacency-list measurement against the bitset path
  bool srg_ok = true;
  for (int q : {2, 3}) {
    TangentGraph t = build_nu(2, q);
    SrgMeasurement naive = naive_measure_srg(t.graph);
    SrgMeasurement fast = measure_srg(t.graph);
    if (!naive.is_srg() || !fast.is_srg() || !(naive.params == fast.params)) srg_ok = false;
    if (!(naive.params == expected_params(2, q))) srg_ok = false;
    if (!verify_srg_identity(t.graph, expected_params(2, q))) srg_ok = false;
  }
  j["srg_identity_ok"] = srg_ok;
  all_ok = all_ok && srg_ok;

  // automorphism oracle: engine order vs full permutation filtering, and
  // canonical-form invariance under random relabelings
  int order_mismatches = 0, canon_mismatches = 0;
  for (int i = 0; i < graphs; ++i) {
    int v = 1 + int(rng() % 10);
    int permille = 200 + int(rng() % 600);
    Graph g = random_graph(rng, v, permille);
    AutResult aut = automorphism_group(g);
    if (BigInt(brute_force_aut_order(g)) != aut.group.order()) ++order_mismatches;
    Graph canon = canonical_form(g);
    for (int r = 0; r < relabelings; ++r)
      if (!(canonical_form(random_relabeling(rng, g)) == canon)) ++canon_mismatches;
  }
  j["aut_order_mismatches"] = order_mismatches;
  j["canonical_mismatches"] = canon_mismatches;
  all_ok = all_ok && order_mismatches == 0 && canon_mismatches == 0;

  j["ok"] = all_ok;
  std::cout << j.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian-variety tangent graphs: construction and verification"};
  app.require_subcommand(1);

  int threads = 0;
  int max_vertices = 600;
  long long max_points = 20000;
  app.add_option("--threads", threads, "worker threads (0 = hardware)");
  app.add_option("--max-vertices", max_vertices, "vertex cap for Aut/clique computations");
  app.add_option("--max-points", max_points, "point cap for geometry enumeration");

  auto* build = app.add_subcommand("build", "construct a graph and export it");
  int b_n = 2, b_q = 2;
  bool b_gamma = false, b_complement = false;
  std::string b_out, b_format = "graph6";
  build->add_option("--n", b_n, "projective dimension")->required();
  build->add_option("--q", b_q, "prime power q")->required();
  build->add_flag("--gamma", b_gamma, "build Gamma (all points) instead of NU");
  build->add_flag("--complement", b_complement, "export the complement");
  build->add_option("--out", b_out, "output file")->required();
  build->add_option("--format", b_format, "graph6 or dimacs")
      ->check(CLI::IsMember({"graph6", "dimacs"}));

  auto* params = app.add_subcommand("params", "expected vs measured SRG parameters + spectrum");
  int p_n = 2, p_q = 2;
  params->add_option("--n", p_n)->required();
  params->add_option("--q", p_q)->required();

  auto* cliques = app.add_subcommand("cliques", "maximal clique census and classification");
  int c_n = 2, c_q = 3;
  cliques->add_option("--n", c_n)->required();
  cliques->add_option("--q", c_q)->required();

  auto* aut = app.add_subcommand("aut", "automorphism group, orbits, canonical form");
  int a_n = 2, a_q = 2;
  bool a_gamma = false;
  aut->add_option("--n", a_n)->required();
  aut->add_option("--q", a_q)->required();
  aut->add_flag("--gamma", a_gamma, "use Gamma (all points) instead of NU");

  auto* theorem = app.add_subcommand("theorem1", "verify the automorphism-group identification");
  int t_q = 2;
  theorem->add_option("--q", t_q)->required();

  auto* selftest = app.add_subcommand("selftest", "brute-force oracle suites");
  int s_graphs = 120, s_relabelings = 25;
  uint64_t s_seed = 12345;
  selftest->add_option("--graphs", s_graphs, "number of random oracle graphs");
  selftest->add_option("--relabelings", s_relabelings, "relabelings per graph");
  selftest->add_option("--seed", s_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? 0 : 2;
  }

  try {
    if (build->parsed())
      return run_build(b_n, b_q, b_gamma, b_complement, b_out, b_format, max_points);
    if (params->parsed()) return run_params(p_n, p_q, threads, max_points);
    if (cliques->parsed()) return run_cliques(c_n, c_q, max_points, max_vertices);
    if (aut->parsed()) return run_aut(a_n, a_q, a_gamma, max_points, max_vertices);
    if (theorem->parsed()) return run_theorem1_cmd(t_q, max_vertices);
    if (selftest->parsed()) return run_selftest(s_graphs, s_seed, s_relabelings);
  } catch (const ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
