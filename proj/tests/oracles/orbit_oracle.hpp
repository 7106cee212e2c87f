#pragma once

// Orbit decomposition of X x Y by a breadth-first search over pairs, with the
// stabilizer of each orbit's first pair read off element by element.

#include <map>
#include <queue>
#include <vector>

#include "catkit/finite_group.hpp"
#include "catkit/gset.hpp"

namespace catkit::oracle {

inline std::map<int, int> product_orbit_types(const mackey::GSet& x, const mackey::GSet& y,
                                              const mackey::SubgroupLattice& lattice) {
  const auto& g = x.group();
  const int nx = x.size(), ny = y.size();
  std::vector<bool> seen(static_cast<std::size_t>(nx * ny), false);
  std::map<int, int> out;
  for (int start = 0; start < nx * ny; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::queue<int> todo;
    todo.push(start);
    seen[static_cast<std::size_t>(start)] = true;
    while (!todo.empty()) {
      const int p = todo.front();
      todo.pop();
      for (int e = 0; e < g.order(); ++e) {
        const int im = x.act(e, p / ny) * ny + y.act(e, p % ny);
        if (!seen[static_cast<std::size_t>(im)]) {
          seen[static_cast<std::size_t>(im)] = true;
          todo.push(im);
        }
      }
    }
    mackey::Subset stab = 0;
    for (int e = 0; e < g.order(); ++e)
      if (x.act(e, start / ny) == start / ny && y.act(e, start % ny) == start % ny) stab |= mackey::Subset{1} << e;
    ++out[lattice.conj_class(lattice.index_of(stab))];
  }
  return out;
}

}  // namespace catkit::oracle
