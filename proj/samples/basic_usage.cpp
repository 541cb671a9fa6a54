#include <iostream>

#include "qrat/qrat.hpp"

int main() {
  using namespace qrat;

  const Rational x(25, 11);
  const QRational q = qdeform(x);
  std::cout << "[" << x.to_string() << "]_q = " << q.to_string() << "\n";
  std::cout << "regular " << to_string(expand_regular(x)) << ", negative " << to_string(expand_negative(x)) << "\n";

  // The same numerator from closures of the path graph.
  const QuiverPath g = build_graph(expand_regular(x));
  std::cout << "graph " << g.to_string() << " has closure polynomial " << closure_polynomial(g).to_string() << "\n";

  for (const auto& n : farey_tree(1).nodes) {
    std::cout << n.node.value.to_string() << "  " << n.node.label.to_latex() << "\n";
  }

  const JonesPoly j = jones_polynomial(Rational(15, 4));
  std::cout << "J_{15/4} = " << j.j.to_string() << "\n";
  std::cout << "V(t) = " << to_signed_laurent(j, 16, -1).to_string() << "\n";

  const QuiddityResult r = quiddity_classify({3, 3, 1, 2, 4, 3, 1, 2, 4, 1});
  std::cout << "decagon: " << to_string(r.kind) << ", exponent " << *r.exponent << "\n";
}
