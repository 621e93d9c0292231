// scratch smoke test; not part of the build once tests exist
#include <chrono>
#include <iostream>

#include "nu/aut_engine.hpp"
#include "nu/brute_force.hpp"
#include "nu/cliques.hpp"
#include "nu/perm_group.hpp"
#include "nu/srg.hpp"
#include "nu/tangent_graphs.hpp"
#include "nu/theorem.hpp"
#include "nu/unitary.hpp"

using namespace nu;

int main() {
  auto t0 = std::chrono::steady_clock::now();
  auto lap = [&](const char* what) {
    auto t1 = std::chrono::steady_clock::now();
    std::cout << "[" << what << "] "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << " ms\n";
    t0 = t1;
  };

  // q = 4
  TangentGraph nu24 = build_nu(2, 4);
  auto m4 = measure_srg(nu24.graph);
  std::cout << "NU(3,16): v=" << nu24.graph.vertex_count() << " params=" << m4.params.to_string()
            << "\n";
  lap("build q=4");
  AutResult aut4 = automorphism_group(nu24.graph);
  std::cout << "Aut(NU(3,16)) order = " << aut4.group.order().str() << " (expect 249600), gens="
            << aut4.generators.size() << "\n";
  lap("aut q=4");
  UnitaryGroup pg4 = pgammau3(*nu24.space);
  std::cout << "PGammaU(3,4) order = " << pg4.group.order().str() << "\n";
  lap("pgammau q=4");
  auto cl4 = maximal_cliques(nu24.graph);
  auto census4 = classify_cliques(nu24, cl4);
  std::cout << "cliques q=4: total=" << cl4.size() << " tangent=" << census4.tangent_type
            << " sizes:";
  for (auto& [s, c] : census4.by_size) std::cout << " " << s << "x" << c;
  std::cout << "\n";
  lap("cliques q=4");

  // induced action on tangent cliques, q=4
  std::vector<std::vector<int>> tangent_sets;
  for (int id : census4.tangent_clique_ids) tangent_sets.push_back(cl4[id]);
  PermGroup act4 = induced_action_on_sets(aut4.group, tangent_sets);
  std::cout << "tangent action q=4: 2-transitive=" << act4.is_k_transitive(2)
            << " 3-transitive=" << act4.is_k_transitive(3) << "\n";
  lap("action q=4");

  // gamma graphs
  TangentGraph g22 = build_gamma(2, 2);
  AutResult autg2 = automorphism_group(g22.graph);
  std::cout << "Aut(Gamma_2 q=2) order = " << autg2.group.order().str() << " (expect 432)\n";
  TangentGraph g23 = build_gamma(2, 3);
  AutResult autg3 = automorphism_group(g23.graph);
  std::cout << "Aut(Gamma_2 q=3) order = " << autg3.group.order().str()
            << " (expect 12096), orbits:";
  for (auto& o : autg3.orbit_partition) std::cout << " " << o.size();
  std::cout << "\n";
  lap("gamma");

  // n=3
  TangentGraph nu32 = build_nu(3, 2);
  auto m32 = measure_srg(nu32.graph);
  std::cout << "NU(4,4): v=" << nu32.graph.vertex_count() << " params=" << m32.params.to_string()
            << " (expect (40,27,18,18))\n";
  int gen_lines = 0;
  for (const auto& l : nu32.space->lines())
    if (l.cls == LineClass::generator) ++gen_lines;
  std::cout << "generator lines on H(3,4): " << gen_lines << " (expect 27)\n";
  lap("n=3 q=2");

  TangentGraph nu33 = build_nu(3, 3);
  auto m33 = measure_srg(nu33.graph);
  std::cout << "NU(4,9): v=" << nu33.graph.vertex_count() << " params=" << m33.params.to_string()
            << " (expect (540,224,88,96))\n";
  auto mc33 = measure_srg(nu33.graph.complement());
  std::cout << "complement: " << mc33.params.to_string() << " (expect (540,315,186,180))\n";
  lap("n=3 q=3");

  // q = 5
  TangentGraph nu25 = build_nu(2, 5);
  auto m5 = measure_srg(nu25.graph);
  std::cout << "NU(3,25): v=" << nu25.graph.vertex_count() << " params=" << m5.params.to_string()
            << "\n";
  lap("build q=5");
  AutResult aut5 = automorphism_group(nu25.graph);
  std::cout << "Aut(NU(3,25)) order = " << aut5.group.order().str() << " (expect 756000)\n";
  lap("aut q=5");
  UnitaryGroup pg5 = pgammau3(*nu25.space);
  std::cout << "PGammaU(3,5) order = " << pg5.group.order().str() << "\n";
  bool contained = true;
  for (const auto& mp : pg5.generators)
    if (!aut5.group.contains(induced_vertex_permutation(mp, nu25))) contained = false;
  std::cout << "containment q=5: " << contained << "\n";
  lap("pgammau q=5");
  return 0;
}
