// catkit: command-line front end.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error or malformed input.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catkit/braid.hpp"
#include "catkit/duoid.hpp"
#include "catkit/errors.hpp"
#include "catkit/gl_classes.hpp"
#include "catkit/gset.hpp"
#include "catkit/hall.hpp"
#include "catkit/mackey.hpp"
#include "catkit/planar_diagram.hpp"
#include "catkit/species.hpp"
#include "catkit/subspace.hpp"
#include "catkit/ybrep.hpp"

namespace {

using catkit::Json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

// Inline JSON if the text starts with '{' or '[', otherwise a file path.
Json read_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  std::string body;
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    body = text;
  } else {
    std::ifstream in(text);
    if (!in) throw catkit::ParseError("cannot open " + text);
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw catkit::ParseError(text + ": " + e.what());
  }
}

std::string show(const catkit::LaurentPoly& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

std::vector<int> parse_word(const std::string& text) {
  try {
    return Json::parse(text).get<std::vector<int>>();
  } catch (const Json::exception&) {
    throw catkit::ParseError("braid word must look like [1,-2,1], got " + text);
  }
}

catkit::yb::YBOp operator_from(const std::string& file, const std::string& name) {
  if (!file.empty()) {
    const Json j = read_json(file);
    return catkit::yb::YBOp::make(catkit::sparse_mat_from_json(j.contains("matrix") ? j.at("matrix") : j));
  }
  return catkit::yb::builtin_operator(name).yb;
}

catkit::mackey::GroupPtr group_from(const std::string& spec) {
  using catkit::mackey::FiniteGroup;
  auto number = [&](std::size_t from) {
    try {
      return std::stoi(spec.substr(from));
    } catch (const std::exception&) {
      throw catkit::ParseError("bad group name " + spec);
    }
  };
  std::shared_ptr<const FiniteGroup> g;
  if (spec == "trivial") {
    g = std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  } else if (spec == "Q8") {
    g = std::make_shared<const FiniteGroup>(FiniteGroup::quaternion());
  } else if (spec.size() >= 2 && spec[0] == 'C' && std::isdigit(static_cast<unsigned char>(spec[1]))) {
    g = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(number(1)));
  } else if (spec.size() >= 2 && spec[0] == 'D' && std::isdigit(static_cast<unsigned char>(spec[1]))) {
    g = std::make_shared<const FiniteGroup>(FiniteGroup::dihedral(number(1)));
  } else if (spec.size() >= 2 && spec[0] == 'S' && std::isdigit(static_cast<unsigned char>(spec[1]))) {
    g = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(number(1)));
  } else {
    g = std::make_shared<const FiniteGroup>(catkit::mackey::group_from_json(read_json(spec)));
  }
  return g;
}

std::shared_ptr<const catkit::duoidal::FiniteCategory> category_from(const std::string& spec) {
  using catkit::duoidal::FiniteCategory;
  for (const auto& c : catkit::duoidal::small_categories())
    if (c.name() == spec) return std::make_shared<const FiniteCategory>(c);
  return std::make_shared<const FiniteCategory>(catkit::duoidal::category_from_json(read_json(spec)));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int pass_fail(bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catkit: exact computations with braids, species, Hall algebras, Mackey functors and duoids"};
  app.require_subcommand(1);
  int status = kOk;

  // ybe-check
  std::string yb_file, yb_name = "jones";
  auto* ybe = app.add_subcommand("ybe-check", "Check the Yang-Baxter equation for an operator");
  ybe->add_option("--file", yb_file, "operator JSON (a matrix, or {\"matrix\": ...})");
  ybe->add_option("--operator", yb_name, "built-in operator when no file is given")->capture_default_str();
  ybe->callback([&] { status = pass_fail(catkit::yb::check_ybe(operator_from(yb_file, yb_name))); });

  // hecke-check
  std::string hk_file, hk_name = "jones", hk_case = "equal";
  catkit::yb::HeckeParams hk_params;
  auto* hecke = app.add_subcommand("hecke-check", "Check the quadratic Hecke relation");
  hecke->add_option("--file", hk_file, "operator JSON");
  hecke->add_option("--operator", hk_name, "built-in operator when no file is given")->capture_default_str();
  hecke->add_option("--r", hk_params.r, "exponent r")->capture_default_str();
  hecke->add_option("--s", hk_params.s, "exponent s (distinct case)")->capture_default_str();
  hecke->add_option("--case", hk_case, "equal or distinct")
      ->check(CLI::IsMember({"equal", "distinct"}))
      ->capture_default_str();
  hecke->callback([&] {
    const auto which = hk_case == "equal" ? catkit::yb::HeckeCase::Equal : catkit::yb::HeckeCase::Distinct;
    status = pass_fail(catkit::yb::check_hecke(operator_from(hk_file, hk_name), hk_params, which));
  });

  // invariant
  int inv_strands = 0;
  std::string inv_word, inv_file, inv_name = "jones";
  bool inv_bracket = false;
  auto* invariant = app.add_subcommand("invariant", "Link invariant of the closure of a braid");
  invariant->add_option("--strands", inv_strands, "number of strands");
  invariant->add_option("--word", inv_word, "braid word, e.g. [1,1,1]");
  invariant->add_option("--braid", inv_file, "braid JSON {\"strands\", \"word\"}");
  invariant->add_option("--operator", inv_name, "enhanced operator")->capture_default_str();
  invariant->add_flag("--bracket", inv_bracket, "use the Kauffman bracket state sum instead of the operator");
  invariant->callback([&] {
    catkit::braid::BraidWord b;
    if (!inv_file.empty()) {
      b = catkit::braid::braid_from_json(read_json(inv_file));
    } else {
      if (inv_strands <= 0 || inv_word.empty()) throw CLI::ValidationError("invariant", "give --braid, or --strands and --word");
      b = {inv_strands, parse_word(inv_word)};
    }
    catkit::braid::validate(b);
    if (inv_bracket)
      std::cout << show(catkit::braid::kauffman_bracket(catkit::braid::markov_closure(b))) << "\n";
    else
      std::cout << show(catkit::yb::eyb_invariant(b, catkit::yb::builtin_operator(inv_name))) << "\n";
  });

  // braid
  int br_strands = 0, br_stabilize = 0;
  std::string br_word, br_conj;
  bool br_inverse = false;
  auto* braid = app.add_subcommand("braid", "Braid word operations and data");
  braid->add_option("--strands", br_strands, "number of strands")->required();
  braid->add_option("--word", br_word, "braid word, e.g. [1,-2]")->required();
  braid->add_flag("--inverse", br_inverse, "invert first");
  braid->add_option("--conjugate-by", br_conj, "conjugate by this word");
  braid->add_option("--stabilize", br_stabilize, "append sigma_n^(+1 or -1)")->check(CLI::IsMember({-1, 0, 1}));
  braid->callback([&] {
    catkit::braid::BraidWord b{br_strands, parse_word(br_word)};
    catkit::braid::validate(b);
    if (br_inverse) b = catkit::braid::braid_inverse(b);
    if (!br_conj.empty()) b = catkit::braid::conjugate(b, {br_strands, parse_word(br_conj)});
    if (br_stabilize != 0) b = catkit::braid::stabilize(b, br_stabilize);
    const auto pd = catkit::braid::markov_closure(b);
    Json j = catkit::braid::to_json(b);
    j["permutation"] = catkit::braid::underlying_perm(b).images;
    j["writhe"] = catkit::braid::writhe(b);
    j["components"] = pd.components();
    j["reduced"] = catkit::braid::free_reduce(b.word);
    emit(j);
  });

  // gaussian
  int ga_n = 0, ga_k = 0, ga_q = 2;
  bool ga_poly = false, ga_enum = false;
  auto* gaussian = app.add_subcommand("gaussian", "Gaussian binomial [n choose k]_q");
  gaussian->add_option("n", ga_n)->required()->check(CLI::NonNegativeNumber);
  gaussian->add_option("k", ga_k)->required()->check(CLI::NonNegativeNumber);
  gaussian->add_option("q", ga_q)->required()->check(CLI::IsMember({2, 3, 4, 5}));
  gaussian->add_flag("--polynomial", ga_poly, "print the polynomial in v (q = v^2)");
  gaussian->add_flag("--enumerate", ga_enum, "count subspaces directly");
  gaussian->callback([&] {
    if (ga_poly) {
      std::cout << show(catkit::hall::gaussian_binomial(ga_n, ga_k)) << "\n";
    } else if (ga_enum) {
      const catkit::hall::FiniteField f(ga_q);
      std::cout << catkit::hall::enumerate_subspaces(ga_n, ga_k, f).size() << "\n";
    } else {
      std::cout << catkit::hall::gaussian_binomial_at(ga_n, ga_k, ga_q) << "\n";
    }
  });

  // hall-product
  std::string hp_left, hp_right;
  auto* hall = app.add_subcommand("hall-product", "Product in the Hall algebra of F_q-vector spaces");
  hall->add_option("left", hp_left, "element JSON {\"<dim>\": <poly>}")->required();
  hall->add_option("right", hp_right, "element JSON")->required();
  hall->callback([&] {
    const auto f = catkit::hall::hall_element_from_json(read_json(hp_left));
    const auto g = catkit::hall::hall_element_from_json(read_json(hp_right));
    emit(catkit::hall::to_json(catkit::hall::hall_product(f, g)));
  });

  // green-conv
  int gc_q = 2, gc_n1 = 1, gc_n2 = 1;
  std::string gc_left, gc_right;
  auto* green = app.add_subcommand("green-conv", "Green convolution of class functions on GL_n(F_q)");
  green->add_option("--q", gc_q, "field size")->check(CLI::IsMember({2, 3, 4, 5}))->capture_default_str();
  green->add_option("--n1", gc_n1, "degree of the left factor")->capture_default_str();
  green->add_option("--n2", gc_n2, "degree of the right factor")->capture_default_str();
  green->add_option("--left", gc_left, "left values {\"<class id>\": \"p/q\"} (default: constant 1)");
  green->add_option("--right", gc_right, "right values (default: constant 1)");
  green->callback([&] {
    const catkit::hall::FiniteField f(gc_q);
    auto load = [&](const std::string& s, int n) {
      return s.empty() ? catkit::hall::GLClassFunction::constant(n, f, 1)
                       : catkit::hall::gl_class_function_from_json(read_json(s), n, f);
    };
    emit(catkit::hall::to_json(catkit::hall::green_convolution(load(gc_left, gc_n1), load(gc_right, gc_n2), f)));
  });

  // species
  std::string sp_series = "set-partitions", sp_left, sp_right;
  int sp_upto = 5;
  auto* species = app.add_subcommand("species", "Species counts and the Cauchy product");
  species->add_option("--series", sp_series, "set, nonempty-set or set-partitions")
      ->check(CLI::IsMember({"set", "nonempty-set", "set-partitions"}))
      ->capture_default_str();
  species->add_option("--upto", sp_upto, "largest n")->check(CLI::Range(0, 8))->capture_default_str();
  species->add_option("--cauchy-left", sp_left, "class function {\"degree\": n, \"values\": {...}}");
  species->add_option("--cauchy-right", sp_right, "class function");
  species->callback([&] {
    namespace sp = catkit::species;
    if (!sp_left.empty() || !sp_right.empty()) {
      if (sp_left.empty() || sp_right.empty()) throw CLI::ValidationError("species", "give both Cauchy factors");
      auto load = [](const std::string& s) {
        const Json j = read_json(s);
        return sp::class_function_from_json(j.at("values"), j.at("degree").get<int>());
      };
      emit(sp::to_json(sp::cauchy_product(load(sp_left), load(sp_right))));
      return;
    }
    sp::SymFunc series;
    if (sp_series == "set")
      series = sp::exp_series();
    else if (sp_series == "nonempty-set")
      series = sp::exp_plus_series();
    else
      series = sp::plethysm(sp::exp_series(), sp::exp_plus_series());
    Json out = Json::array();
    for (const auto& c : sp::species_counts(series, sp_upto)) out.push_back(c.get_str());
    std::cout << out.dump() << "\n";
  });

  // mackey-check
  std::string mk_group, mk_functor = "burnside", mk_gset;
  auto* mackey = app.add_subcommand("mackey-check", "Validate the Mackey and Green axioms");
  mackey->add_option("--group", mk_group, "C<n>, D<n>, S<n>, Q8, trivial, or a group JSON file")->required();
  mackey->add_option("--functor", mk_functor, "burnside or fixed-point")
      ->check(CLI::IsMember({"burnside", "fixed-point"}))
      ->capture_default_str();
  mackey->add_option("--gset", mk_gset, "G-set for fixed-point (default: regular)");
  mackey->callback([&] {
    const auto g = group_from(mk_group);
    catkit::mackey::MackeyData m;
    if (mk_functor == "burnside") {
      m = catkit::mackey::burnside_mackey(g);
    } else {
      const auto x = mk_gset.empty() ? catkit::mackey::GSet::regular(g) : catkit::mackey::gset_from_json(read_json(mk_gset), g);
      m = catkit::mackey::fixed_point_mackey(x);
    }
    const auto rep = catkit::mackey::mackey_axioms_validate(m);
    Json j = catkit::mackey::to_json(rep);
    j["functor"] = catkit::mackey::to_json(m);
    emit(j);
    status = rep.ok() ? kOk : kCheckFailed;
  });

  // burnside
  std::string bu_group, bu_left, bu_right;
  auto* burnside = app.add_subcommand("burnside", "Burnside ring: table of marks, or a product of G-sets");
  burnside->add_option("--group", bu_group, "group name or JSON file")->required();
  burnside->add_option("--left", bu_left, "G-set JSON {\"table\": ...}");
  burnside->add_option("--right", bu_right, "G-set JSON");
  burnside->callback([&] {
    namespace mk = catkit::mackey;
    const auto g = group_from(bu_group);
    const mk::SubgroupLattice lattice(*g);
    auto str_rows = [](const std::vector<std::vector<catkit::BigInt>>& t) {
      Json rows = Json::array();
      for (const auto& r : t) {
        Json row = Json::array();
        for (const auto& v : r) row.push_back(v.get_str());
        rows.push_back(row);
      }
      return rows;
    };
    Json classes = Json::array();
    for (const auto& cls : lattice.classes()) classes.push_back(mk::elements(lattice.subgroup(cls.front())));
    if (bu_left.empty() && bu_right.empty()) {
      emit(Json{{"group", g->name()}, {"classes", classes}, {"marks", str_rows(mk::table_of_marks(*g, lattice))}});
      return;
    }
    if (bu_left.empty() || bu_right.empty()) throw CLI::ValidationError("burnside", "give both --left and --right");
    const auto x = mk::gset_from_json(read_json(bu_left), g);
    const auto y = mk::gset_from_json(read_json(bu_right), g);
    Json orbits = Json::array();
    for (const auto& [cls, count] : mk::burnside_mul(x, y, lattice)) orbits.push_back({cls, count});
    emit(Json{{"group", g->name()}, {"classes", classes}, {"product", orbits}});
  });

  // duoid-check
  std::string du_file, du_category = "cyclic2", du_kind = "terminal", du_corrupt;
  int du_m = 2;
  auto* duoid = app.add_subcommand("duoid-check", "Validate a duoid of derivation schemes and its 2-category axioms");
  duoid->add_option("--file", du_file, "duoid JSON");
  duoid->add_option("--category", du_category, "built-in category name or category JSON")->capture_default_str();
  duoid->add_option("--kind", du_kind, "terminal, discrete or cyclic")
      ->check(CLI::IsMember({"terminal", "discrete", "cyclic"}))
      ->capture_default_str();
  duoid->add_option("--m", du_m, "order of the 2-cell group for --kind cyclic")->check(CLI::Range(1, 9))->capture_default_str();
  duoid->add_option("--corrupt", du_corrupt, "damage one structure map: mu_h, eta_h, mu_v or eta_v")
      ->check(CLI::IsMember({"mu_h", "eta_h", "mu_v", "eta_v"}));
  duoid->callback([&] {
    namespace du = catkit::duoidal;
    du::DuoidData d = [&] {
      if (!du_file.empty()) return du::duoid_from_json(read_json(du_file));
      const auto c = category_from(du_category);
      if (du_kind == "terminal") return du::terminal_duoid(c);
      if (du_kind == "discrete") return du::discrete_duoid(c);
      return du::cyclic_duoid(c, du_m);
    }();
    if (!du_corrupt.empty()) {
      const auto part = du_corrupt == "mu_h"    ? du::DuoidPart::MuH
                        : du_corrupt == "eta_h" ? du::DuoidPart::EtaH
                        : du_corrupt == "mu_v"  ? du::DuoidPart::MuV
                                                : du::DuoidPart::EtaV;
      d = du::corrupt(d, part);
    }
    const auto rep = du::duoid_validate(d);
    Json j = du::to_json(rep);
    j["category"] = d.a.category().name();
    j["cells"] = d.a.total();
    if (rep.shapes) j["two_category"] = du::two_category_check(d);
    emit(j);
    status = rep.ok() ? kOk : kCheckFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const catkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}
