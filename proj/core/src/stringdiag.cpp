#include "catkit/stringdiag.hpp"

#include <cmath>

namespace catkit::diagram {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string base_label(const std::string& label) {
  std::string s = label;
  while (!s.empty() && s.back() == '*') s.pop_back();
  return s;
}

std::size_t product_of_dims(const std::vector<std::string>& labels, const Environment& env) {
  std::size_t p = 1;
  for (const auto& l : labels) p *= env.dim(l);
  return p;
}

std::string join(const std::vector<std::string>& labels) {
  std::string out = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
  return out + "]";
}

}  // namespace

void Environment::set_object(const std::string& label, std::size_t dim) {
  if (dim == 0) throw DomainError("object '" + label + "' must have positive dimension");
  if (label.empty() || label.back() == '*') throw DomainError("object labels may not end in '*'");
  dims_[label] = dim;
}

void Environment::set_box(const std::string& name, BoxSignature sig) {
  const std::size_t in = product_of_dims(sig.inputs, *this);
  const std::size_t out = product_of_dims(sig.outputs, *this);
  if (sig.value.rows() != out || sig.value.cols() != in)
    throw DimensionError("box '" + name + "' has a " + std::to_string(sig.value.rows()) + "x" +
                         std::to_string(sig.value.cols()) + " matrix but its labels need " +
                         std::to_string(out) + "x" + std::to_string(in));
  boxes_[name] = std::move(sig);
}

std::size_t Environment::dim(const std::string& label) const {
  auto it = dims_.find(base_label(label));
  if (it == dims_.end()) throw DomainError("unknown object '" + label + "'");
  return it->second;
}

const BoxSignature& Environment::box(const std::string& name) const {
  auto it = boxes_.find(name);
  if (it == boxes_.end()) throw DomainError("unbound box '" + name + "'");
  return it->second;
}

std::string dual_label(const std::string& label) {
  if (!label.empty() && label.back() == '*') return label.substr(0, label.size() - 1);
  return label + "*";
}

std::vector<std::string> cell_inputs(const Cell& cell, const Environment& env) {
  return std::visit(Overloaded{
                        [](const Wire& w) { return std::vector<std::string>{w.object}; },
                        [&](const Box& b) { return env.box(b.name).inputs; },
                        [](const Cap& c) { return std::vector<std::string>{c.object, dual_label(c.object)}; },
                        [](const Cup&) { return std::vector<std::string>{}; },
                        [](const Swap& s) { return std::vector<std::string>{s.first, s.second}; },
                    },
                    cell);
}

std::vector<std::string> cell_outputs(const Cell& cell, const Environment& env) {
  return std::visit(Overloaded{
                        [](const Wire& w) { return std::vector<std::string>{w.object}; },
                        [&](const Box& b) { return env.box(b.name).outputs; },
                        [](const Cap&) { return std::vector<std::string>{}; },
                        [](const Cup& c) { return std::vector<std::string>{dual_label(c.object), c.object}; },
                        [](const Swap& s) { return std::vector<std::string>{s.second, s.first}; },
                    },
                    cell);
}

SparseMat counit(std::size_t dim) {
  SparseMat e(1, dim * dim);
  for (std::size_t i = 0; i < dim; ++i) e.set(0, i * dim + i, LaurentPoly(1));
  return e;
}

SparseMat unit(std::size_t dim) { return counit(dim).transpose(); }

SparseMat symmetry(std::size_t dim_a, std::size_t dim_b) {
  SparseMat s(dim_a * dim_b, dim_a * dim_b);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j) s.set(j * dim_a + i, i * dim_b + j, LaurentPoly(1));
  return s;
}

SparseMat cell_value(const Cell& cell, const Environment& env) {
  return std::visit(Overloaded{
                        [&](const Wire& w) { return SparseMat::identity(env.dim(w.object)); },
                        [&](const Box& b) { return env.box(b.name).value; },
                        [&](const Cap& c) { return counit(env.dim(c.object)); },
                        [&](const Cup& c) { return unit(env.dim(c.object)); },
                        [&](const Swap& s) { return symmetry(env.dim(s.first), env.dim(s.second)); },
                    },
                    cell);
}

std::vector<std::string> layer_inputs(const Layer& layer, const Environment& env) {
  std::vector<std::string> out;
  for (const auto& c : layer)
    for (auto& l : cell_inputs(c, env)) out.push_back(std::move(l));
  return out;
}

std::vector<std::string> layer_outputs(const Layer& layer, const Environment& env) {
  std::vector<std::string> out;
  for (const auto& c : layer)
    for (auto& l : cell_outputs(c, env)) out.push_back(std::move(l));
  return out;
}

SparseMat layer_value(const Layer& layer, const Environment& env) {
  SparseMat out = SparseMat::identity(1);
  for (const auto& c : layer) out = kron(out, cell_value(c, env));
  return out;
}

SparseMat eval_diagram(const Diagram& d, const Environment& env) {
  if (d.layers.empty()) return SparseMat::identity(1);
  SparseMat value = layer_value(d.layers.front(), env);
  auto boundary = layer_outputs(d.layers.front(), env);
  for (std::size_t k = 1; k < d.layers.size(); ++k) {
    const auto in = layer_inputs(d.layers[k], env);
    if (in != boundary)
      throw DimensionError("layer " + std::to_string(k) + " expects " + join(in) + " but receives " +
                           join(boundary));
    value = compose(layer_value(d.layers[k], env), value);
    boundary = layer_outputs(d.layers[k], env);
  }
  return value;
}

bool check_snake(std::size_t dim) {
  if (dim == 0) throw DomainError("check_snake: dimension must be positive");
  Environment env;
  env.set_object("A", dim);
  const Diagram first{{{Wire{"A"}, Cup{"A"}}, {Cap{"A"}, Wire{"A"}}}};
  const Diagram second{{{Cup{"A"}, Wire{"A*"}}, {Wire{"A*"}, Cap{"A"}}}};
  const SparseMat id = SparseMat::identity(dim);
  return eval_diagram(first, env) == id && eval_diagram(second, env) == id;
}

LaurentPoly categorical_trace(const SparseMat& f) {
  if (!f.is_square()) throw DimensionError("categorical_trace of a non-square matrix");
  if (f.rows() == 0) return LaurentPoly();
  Environment env;
  env.set_object("A", f.rows());
  env.set_box("f", BoxSignature{{"A"}, {"A"}, f});
  const Diagram loop{{
      {Cup{"A"}},
      {Wire{"A*"}, Box{"f"}},
      {Swap{"A*", "A"}},
      {Cap{"A"}},
  }};
  return eval_diagram(loop, env).at(0, 0);
}

Environment environment_from_json(const Json& j) try {
  Environment env;
  if (j.contains("objects"))
    for (const auto& [label, dim] : j.at("objects").items()) env.set_object(label, dim.get<std::size_t>());
  if (j.contains("boxes")) {
    for (const auto& [name, spec] : j.at("boxes").items()) {
      BoxSignature sig{spec.at("inputs").get<std::vector<std::string>>(),
                       spec.at("outputs").get<std::vector<std::string>>(),
                       sparse_mat_from_json(spec.at("matrix"))};
      env.set_box(name, std::move(sig));
    }
  }
  return env;
} catch (const Json::exception& e) {
  throw ParseError(std::string("environment: ") + e.what());
}

Diagram diagram_from_json(const Json& j) try {
  Diagram d;
  for (const auto& layer_json : j.at("layers")) {
    Layer layer;
    for (const auto& c : layer_json) {
      if (!c.is_object() || c.size() != 1) throw ParseError("diagram cell must be a one-key object: " + c.dump());
      const auto first = c.begin();
      const std::string kind = first.key();
      const Json& arg = first.value();
      if (kind == "wire") {
        layer.emplace_back(Wire{arg.get<std::string>()});
      } else if (kind == "box") {
        layer.emplace_back(Box{arg.get<std::string>()});
      } else if (kind == "cap") {
        layer.emplace_back(Cap{arg.get<std::string>()});
      } else if (kind == "cup") {
        layer.emplace_back(Cup{arg.get<std::string>()});
      } else if (kind == "swap") {
        const auto pair = arg.get<std::vector<std::string>>();
        if (pair.size() != 2) throw ParseError("swap needs two labels");
        layer.emplace_back(Swap{pair[0], pair[1]});
      } else {
        throw ParseError("unknown diagram cell kind '" + kind + "'");
      }
    }
    d.layers.push_back(std::move(layer));
  }
  return d;
} catch (const Json::exception& e) {
  throw ParseError(std::string("diagram: ") + e.what());
}

Json to_json(const Diagram& d) {
  Json layers = Json::array();
  for (const auto& layer : d.layers) {
    Json cells = Json::array();
    for (const auto& c : layer) {
      cells.push_back(std::visit(Overloaded{
                                     [](const Wire& w) { return Json{{"wire", w.object}}; },
                                     [](const Box& b) { return Json{{"box", b.name}}; },
                                     [](const Cap& c) { return Json{{"cap", c.object}}; },
                                     [](const Cup& c) { return Json{{"cup", c.object}}; },
                                     [](const Swap& s) { return Json{{"swap", Json::array({s.first, s.second})}}; },
                                 },
                                 c));
    }
    layers.push_back(std::move(cells));
  }
  return Json{{"layers", layers}};
}

}  // namespace catkit::diagram
