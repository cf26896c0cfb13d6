// Check a coloring, find a repetitive walk, and search for a minimum coloring.

#include <iostream>

#include "nonrep/construct.hpp"
#include "nonrep/decide.hpp"
#include "nonrep/search.hpp"

int main() {
  using namespace nonrep;

  const Graph p21 = path_graph(21);
  const Coloring word = Coloring::from_digits("121312321323123213121");
  std::cout << "P21 " << word.to_digits() << " stroll-nonrepetitive: " << std::boolalpha
            << is_nonrepetitive(p21, word, Property::stroll) << '\n';

  const Graph p7 = path_graph(7);
  const Coloring bad = Coloring::from_digits("1232123");
  if (auto w = find_witness(p7, bad, Property::stroll)) {
    std::cout << "P7 " << bad.to_digits() << " has a repetitive stroll:";
    for (Vertex v : w->walk.vertices) std::cout << ' ' << v;
    std::cout << " colored " << sequence_string(colors_of(bad, w->walk)) << '\n';
  }

  for (std::size_t n : {6, 7, 10}) {
    SolveReport r = solve(cycle_graph(n), Property::walk, 5);
    std::cout << "sigma(C" << n << ") = " << *r.value << ", e.g. " << r.certificate->to_digits() << '\n';
  }

  ConstructionTrace t = sigma_cycle_coloring(25);
  std::cout << "C25 from C" << t.base.size() << ": " << t.coloring.to_digits() << '\n';
}
