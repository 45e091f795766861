#include "fatcob/standard_graphs.hpp"

namespace fatcob {

OpenClosedFatGraph cylinder_graph() {
  FatGraph g = FatGraph::create({{"i"}, {"o"}, {"p"}}, {{"a", "p", "p"}, {"l", "p", "i"}, {"m", "p", "o"}},
                                {{"p", {"l.0", "a.0", "m.0", "a.1"}}, {"i", {"l.1"}}, {"o", {"m.1"}}});
  return decorate(std::move(g), std::vector<std::string>{"i"}, std::vector<std::string>{"o"},
                  std::vector<std::string>{"i", "o"});
}

OpenClosedFatGraph pants_graph() {
  FatGraph g = FatGraph::create(
      {{"i1"}, {"i2"}, {"o"}, {"p"}, {"q"}, {"r"}},
      {{"a", "p", "p"}, {"b", "q", "q"}, {"c1", "p", "r"}, {"c2", "r", "q"}, {"l1", "p", "i1"}, {"l2", "q", "i2"},
       {"m", "r", "o"}},
      {{"p", {"l1.0", "a.0", "c1.0", "a.1"}},
       {"q", {"l2.0", "b.0", "c2.1", "b.1"}},
       {"r", {"c1.1", "m.0", "c2.0"}},
       {"i1", {"l1.1"}},
       {"i2", {"l2.1"}},
       {"o", {"m.1"}}});
  return decorate(std::move(g), std::vector<std::string>{"i1", "i2"}, std::vector<std::string>{"o"},
                  std::vector<std::string>{"i1", "i2", "o"});
}

}  // namespace fatcob
