#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "catkit/serialize.hpp"
#include "catkit/sparse_matrix.hpp"

namespace catkit::diagram {

// Progressive plane string diagrams in the strict monoidal category of
// finite-dimensional free modules over Z[v, v^-1].
//
// A diagram is read bottom-up as a list of horizontal layers. Each layer is a
// left-to-right list of cells; the value of a layer is the Kronecker product of
// its cells and the value of the diagram is the composite of its layers
// (first layer applied first). The associator and unitors are identities.
//
// Dual objects are written with a trailing '*': "A*" has the same dimension as
// "A" and carries the dual basis.

struct Wire {
  std::string object;
};
struct Box {
  std::string name;
};
/// Counit e : A (x) A* -> I,  v (x) phi |-> phi(v).
struct Cap {
  std::string object;
};
/// Unit d : I -> A* (x) A,  1 |-> sum_i v_i* (x) v_i.
struct Cup {
  std::string object;
};
/// Symmetry A (x) B -> B (x) A of the underlying category of modules.
struct Swap {
  std::string first;
  std::string second;
};

using Cell = std::variant<Wire, Box, Cap, Cup, Swap>;
using Layer = std::vector<Cell>;

struct Diagram {
  std::vector<Layer> layers;
};

struct BoxSignature {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  SparseMat value;  // (prod of output dims) x (prod of input dims)
};

class Environment {
 public:
  void set_object(const std::string& label, std::size_t dim);
  /// Binds a box; throws DimensionError when the matrix shape disagrees with the labels.
  void set_box(const std::string& name, BoxSignature sig);

  std::size_t dim(const std::string& label) const;
  const BoxSignature& box(const std::string& name) const;
  const std::map<std::string, std::size_t>& objects() const { return dims_; }
  const std::map<std::string, BoxSignature>& boxes() const { return boxes_; }

 private:
  std::map<std::string, std::size_t> dims_;
  std::map<std::string, BoxSignature> boxes_;
};

std::string dual_label(const std::string& label);

std::vector<std::string> cell_inputs(const Cell& cell, const Environment& env);
std::vector<std::string> cell_outputs(const Cell& cell, const Environment& env);
SparseMat cell_value(const Cell& cell, const Environment& env);

std::vector<std::string> layer_inputs(const Layer& layer, const Environment& env);
std::vector<std::string> layer_outputs(const Layer& layer, const Environment& env);
SparseMat layer_value(const Layer& layer, const Environment& env);

/// Value of the diagram. Throws DimensionError when consecutive layers disagree
/// on their boundary labels and DomainError for unbound boxes or objects.
SparseMat eval_diagram(const Diagram& d, const Environment& env);

/// Standard counit and unit of a free module of the given dimension.
SparseMat counit(std::size_t dim);
SparseMat unit(std::size_t dim);
/// The symmetry of A (x) B as a permutation matrix.
SparseMat symmetry(std::size_t dim_a, std::size_t dim_b);

/// Both snake (string straightening) identities at the given dimension.
bool check_snake(std::size_t dim);

/// Trace of an endomorphism computed as the closed diagram
/// I -d-> A* (x) A -1(x)f-> A* (x) A -swap-> A (x) A* -e-> I.
LaurentPoly categorical_trace(const SparseMat& f);

// JSON format:
//   {"objects": {"A": 2, ...},
//    "boxes": {"a": {"inputs": ["B","B"], "outputs": ["A"], "matrix": <SparseMat>}, ...},
//    "layers": [[{"wire": "B"}, {"box": "c"}, {"cap": "A"}, {"cup": "A"},
//                {"swap": ["A", "B"]}], ...]}
Environment environment_from_json(const Json& j);
Diagram diagram_from_json(const Json& j);
Json to_json(const Diagram& d);

}  // namespace catkit::diagram
