// Command-line front end. Output is one JSON object per call unless --text
// is given; domain errors go to stderr as JSON with exit status 1, usage
// errors exit with 2.
#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "periodica/error.hpp"
#include "periodica/fixtures.hpp"
#include "periodica/io.hpp"
#include "periodica/periodic.hpp"
#include "periodica/real_set.hpp"
#include "periodica/representation.hpp"
#include "periodica/solver.hpp"
#include "periodica/structure.hpp"
#include "periodica/subset_algebra.hpp"
#include "periodica/topology.hpp"
#include "periodica/verify.hpp"

using namespace periodica;
using nlohmann::json;

namespace {

struct Globals {
  bool json_out = false;
  bool text_out = false;
  bool timing = false;
  std::uint64_t seed = 1;
};

// What a subcommand produces: a JSON object, or raw text (DOT, reports).
struct Output {
  json data = json::object();
  std::optional<std::string> raw;
};

using Action = std::function<Output()>;

struct MagmaSource {
  std::string table;
  std::string named;

  FiniteMagma load() const {
    if (!table.empty() && !named.empty()) fail(ErrorCode::InvalidInput, "give --table or --named, not both");
    if (!table.empty()) return magma_from_file(table);
    if (!named.empty()) return build_named(named);
    fail(ErrorCode::InvalidInput, "a magma is required (--table FILE or --named SPEC)");
  }
};

void add_magma(CLI::App* cmd, MagmaSource& src) {
  cmd->add_option("--table", src.table, "Cayley table JSON file");
  cmd->add_option("--named", src.named, "builder spec, e.g. cyclic:6, m2, product:cyclic:2:s3");
}

json hex(const Subset& s) { return s.to_hex(); }

json hex_list(const std::vector<Subset>& v) {
  json out = json::array();
  for (const Subset& s : v) out.push_back(s.to_hex());
  return out;
}

json opt_element(const std::optional<Element>& e) { return e ? json(*e) : json(nullptr); }

std::string read_text(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  std::ifstream in(arg);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open " + arg);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

real::UnitPeriodicRealSet load_set(const std::string& arg) { return real::set_from_text(read_text(arg)); }
real::ExactReal number(const std::string& text) { return real::number_from_json(json(text)); }

json sup_json(const real::Supremum& s) {
  if (s.kind == real::SupKind::ZeroConvention) return json{{"kind", "ZeroConvention"}, {"value", "0"}};
  return json{{"kind", "Finite"}, {"value", s.value.to_string()}, {"attained", s.attained}};
}

json ray_json(const real::RayInterval& r) {
  json out{{"kind", real::ray_kind_name(r.kind)}};
  if (r.kind == real::RayKind::ClosedRay || r.kind == real::RayKind::OpenRay) out["lo"] = r.lo.to_string();
  return out;
}

std::string render_text(const json& j) {
  std::ostringstream s;
  for (const auto& [key, value] : j.items()) {
    s << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  return s.str();
}

void add_magma_commands(CLI::App& app, Action& action) {
  auto* magma = app.add_subcommand("magma", "inspect or build Cayley tables")->require_subcommand(1);
  static MagmaSource check_src;
  auto* check = magma->add_subcommand("check", "structural flags of a table");
  add_magma(check, check_src);
  check->callback([&] {
    action = [] {
      FiniteMagma x = check_src.load();
      Output o;
      o.data = {{"n", x.size()},
                {"associative", x.is_associative()},
                {"left_identities", hex(x.left_identities())},
                {"identity", opt_element(x.identity())},
                {"group", x.is_group()}};
      return o;
    };
  });
  static std::string gen_spec;
  auto* gen = magma->add_subcommand("gen", "print the table of a builder spec");
  gen->add_option("spec", gen_spec, "builder spec")->required();
  gen->callback([&] {
    action = [] {
      Output o;
      o.data = magma_to_json(build_named(gen_spec));
      return o;
    };
  });
}

struct SubsetArgs {
  MagmaSource src;
  std::string a, b, bb, d, e, h, transversal, l;
};

// Options holding subsets are parsed after the magma is known.
Subset sub(const FiniteMagma& x, const std::string& text, const char* name) {
  if (text.empty()) fail(ErrorCode::InvalidInput, std::string("missing --") + name);
  return parse_subset(x, text);
}

std::optional<Element> opt_elem(const FiniteMagma& x, const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_element(x, text);
}

void add_subset_commands(CLI::App& app, Action& action) {
  static SubsetArgs s;
  static std::size_t fa = 0, fb = 0;
  auto* subset = app.add_subcommand("subset", "products, directness, symmetry, factorizations")->require_subcommand(1);
  auto with_ab = [&](const char* name, const char* help, std::function<json(const FiniteMagma&)> f) {
    auto* c = subset->add_subcommand(name, help);
    add_magma(c, s.src);
    c->add_option("--A", s.a);
    c->add_option("--B", s.b);
    c->add_option("--l", s.l, "left identity");
    c->callback([&action, f] {
      action = [f] {
        FiniteMagma x = s.src.load();
        Output o;
        o.data = f(x);
        return o;
      };
    });
    return c;
  };
  with_ab("product", "the set product AB", [](const FiniteMagma& x) {
    return json{{"product", hex(product(x, sub(x, s.a, "A"), sub(x, s.b, "B")))}};
  });
  with_ab("direct", "whether |AB| = |A||B|", [](const FiniteMagma& x) {
    return json{{"direct", is_direct(x, sub(x, s.a, "A"), sub(x, s.b, "B"))}};
  });
  with_ab("anti-transfer", "whether A misses BA", [](const FiniteMagma& x) {
    return json{{"anti_transference", is_anti_left_transference(x, sub(x, s.a, "A"), sub(x, s.b, "B"))}};
  });
  with_ab("symmetry", "B against its canonical inverse", [](const FiniteMagma& x) {
    Subset b = sub(x, s.b, "B");
    auto l = opt_elem(x, s.l);
    if (!l) {
      if (x.left_identities().empty()) fail(ErrorCode::NotLeftIdentity, "the carrier has no left identity");
      l = x.left_identities().first();
    }
    return json{{"kind", symmetry_name(symmetry_kind(x, b, *l))}, {"inverse", hex(canonical_inverse(x, b, *l))}};
  });
  auto* fac = with_ab("factorize", "direct factorization G = AB with given sizes", [](const FiniteMagma& x) {
    auto [a, b] = search_factorization(x, fa, fb);
    return json{{"A", hex(a)}, {"B", hex(b)}};
  });
  fac->add_option("--size-a", fa)->required();
  fac->add_option("--size-b", fb)->required();
}

void add_periodic_commands(CLI::App& app, Action& action) {
  static SubsetArgs s;
  static bool trace = false;
  auto simple = [&](const char* name, const char* help, std::function<json(const FiniteMagma&)> f) {
    auto* c = app.add_subcommand(name, help);
    add_magma(c, s.src);
    c->add_option("--A", s.a, "subset, e.g. 0x3F or [0,2,4]");
    c->add_option("--B", s.b);
    c->add_option("--bb", s.bb, "subgroup or subsemigroup in the kernel slot");
    c->add_option("--l", s.l, "left identity");
    c->callback([&action, f] {
      action = [f] {
        FiniteMagma x = s.src.load();
        Output o;
        o.data = f(x);
        return o;
      };
    });
    return c;
  };
  auto* k = simple("kernel", "largest B-periodic subset of A", [](const FiniteMagma& x) {
    Fixpoint f = periodic_kernel_traced(x, sub(x, s.a, "A"), sub(x, s.b, "B"));
    json out{{"kernel", hex(f.set)}};
    if (trace) out["iterations"] = f.iterations;
    return out;
  });
  k->add_flag("--trace", trace, "report fixpoint iterations");
  simple("upk", "largest Y within A with BY within Y", [](const FiniteMagma& x) {
    return json{{"upper_kernel", hex(upper_periodic_kernel(x, sub(x, s.a, "A"), sub(x, s.b, "B")))}};
  });
  simple("start", "A minus BA", [](const FiniteMagma& x) {
    return json{{"start", hex(start(x, sub(x, s.a, "A"), sub(x, s.b, "B")))}};
  });
  simple("summand", "{x : Bx within A}", [](const FiniteMagma& x) {
    return json{{"summand", hex(summand(x, sub(x, s.a, "A"), sub(x, s.b, "B")))}};
  });
  simple("classify", "periodic, periodic-free or mixed", [](const FiniteMagma& x) {
    PeriodicClass c = classify(x, sub(x, s.a, "A"), sub(x, s.b, "B"));
    return json{{"tag", periodic_tag_name(c.tag)}, {"kernel", hex(c.kernel)}, {"free_part", hex(c.free_part)}};
  });
  simple("wellstarted", "well-startedness of an upper periodic A", [](const FiniteMagma& x) {
    WellStartedReport r = well_started_report(x, sub(x, s.a, "A"), sub(x, s.bb, "bb"), sub(x, s.b, "B"));
    return json{{"well_started", r.well_started},
                {"via_upper_kernel", r.via_upper_kernel},
                {"via_summand", r.via_summand},
                {"complement_form", r.complement_form}};
  });
  simple("decompose", "kernel, shifted free part and start", [](const FiniteMagma& x) {
    ThreeParts t = decompose_three_parts(x, sub(x, s.a, "A"), sub(x, s.bb, "bb"), sub(x, s.b, "B"), opt_elem(x, s.l));
    return json{{"kernel", hex(t.kernel)}, {"shifted_free", hex(t.shifted_free)}, {"start", hex(t.start)}};
  });
}

void add_represent_commands(CLI::App& app, Action& action, Globals& g) {
  static SubsetArgs s;
  static std::size_t witnesses = 5;
  auto* rep = app.add_subcommand("represent", "direct representations of upper periodic sets")->require_subcommand(1);
  auto cmd = [&](const char* name, const char* help, std::function<Output(const FiniteMagma&)> f) {
    auto* c = rep->add_subcommand(name, help);
    add_magma(c, s.src);
    c->add_option("--A", s.a);
    c->add_option("--B", s.b);
    c->add_option("--bb", s.bb);
    c->add_option("--D", s.d);
    c->add_option("--E", s.e);
    c->add_option("--H", s.h, "factor subgroup");
    c->add_option("--transversal", s.transversal);
    c->callback([&action, f] {
      action = [f] { return f(s.src.load()); };
    });
    return c;
  };
  cmd("report", "representation flags for A = bb D u B^1 E", [](const FiniteMagma& x) {
    std::optional<Subset> tr;
    if (!s.transversal.empty()) tr = parse_subset(x, s.transversal);
    RepresentationReport r = representation_report(x, sub(x, s.a, "A"), sub(x, s.bb, "bb"), sub(x, s.b, "B"), tr);
    Output o;
    o.data = {{"kernel", hex(r.kernel)},
              {"D", hex(r.d)},
              {"E", hex(r.e)},
              {"first_half_direct", r.first_half_direct},
              {"second_half_direct", r.second_half_direct},
              {"halves_disjoint", r.halves_disjoint},
              {"e_unique", r.e_unique},
              {"d_unique_given_transversal", r.d_unique_given_transversal},
              {"b_is_subsemigroup", r.b_is_subsemigroup},
              {"well_started", r.well_started},
              {"reconstructs", r.reconstructs}};
    return o;
  });
  cmd("periodic", "D = transversal n A for an H-periodic A", [](const FiniteMagma& x) {
    Subset h = sub(x, s.h, "H");
    FactorContext ctx = s.transversal.empty() ? make_factor_context(x, h)
                                              : make_factor_context(x, h, parse_subset(x, s.transversal));
    Output o;
    o.data = {{"D", hex(periodic_representation(ctx, sub(x, s.a, "A")))}, {"transversal", hex(ctx.transversal)}};
    return o;
  });
  cmd("generate", "bb D u <B>^1 E", [](const FiniteMagma& x) {
    Output o;
    o.data = {{"A", hex(generate_upper_periodic(x, sub(x, s.bb, "bb"), sub(x, s.b, "B"), sub(x, s.d, "D"),
                                                sub(x, s.e, "E")))}};
    return o;
  });
  cmd("partitions", "positive-negative partitions of a group", [](const FiniteMagma& x) {
    PositivePartitions parts = enumerate_positive_partitions(x);
    Output o;
    o.data = {{"count", parts.size()}, {"g2", hex(g_two(x))}};
    if (parts.pair_count() <= 10) {
      json list = json::array();
      for (const PositivePartition& p : parts) list.push_back({{"positive", hex(p.positive)}, {"negative", hex(p.negative)}});
      o.data["partitions"] = std::move(list);
    }
    return o;
  });
  cmd("positive", "whether B is a positive subset or subsemigroup", [](const FiniteMagma& x) {
    Subset b = sub(x, s.b, "B");
    Output o;
    o.data = {{"positive", is_positive_subset(x, b)}, {"subsemigroup", is_positive_subsemigroup(x, b)}};
    return o;
  });
  auto* q2 = cmd("question2", "search for bb D u B^1 E that is not well started", [](const FiniteMagma& x) {
    StartedProbe p = probe_generated_well_started(x, witnesses);
    json list = json::array();
    for (const StartedProbeCase& c : p.witnesses) {
      list.push_back({{"bb", hex(c.bb)},
                      {"B", hex(c.b)},
                      {"D", hex(c.d)},
                      {"E", hex(c.e)},
                      {"well_started", c.well_started},
                      {"kernel_is_generated", c.kernel_is_generated}});
    }
    Output o;
    o.data = {{"cases", p.cases},
              {"not_well_started", p.not_well_started},
              {"kernel_mismatch", p.kernel_mismatch},
              {"witnesses", std::move(list)}};
    return o;
  });
  q2->add_option("--witnesses", witnesses, "how many failures to list");
  (void)g;
}

json solution_json(const SolutionSet& r) {
  json out{{"top", hex(r.top)}, {"count", r.count.get_str()}};
  if (r.all) out["solutions"] = hex_list(*r.all);
  return out;
}

void add_solve_commands(CLI::App& app, Action& action) {
  static SubsetArgs s;
  auto* solve = app.add_subcommand("solve", "subset inequalities and equations")->require_subcommand(1);
  auto cmd = [&](const char* name, const char* help, std::function<json(const FiniteMagma&)> f) {
    auto* c = solve->add_subcommand(name, help);
    add_magma(c, s.src);
    c->add_option("--A", s.a);
    c->add_option("--B", s.b);
    c->add_option("--bb", s.bb);
    c->add_option("--D", s.d);
    c->callback([&action, f] {
      action = [f] {
        FiniteMagma x = s.src.load();
        Output o;
        o.data = f(x);
        return o;
      };
    });
  };
  cmd("upper", "all Y with BY within A", [](const FiniteMagma& x) {
    return solution_json(solve_upper(x, sub(x, s.b, "B"), sub(x, s.a, "A")));
  });
  cmd("inside", "all Y with B^1 Y within A", [](const FiniteMagma& x) {
    return solution_json(solve_upper_inside(x, sub(x, s.b, "B"), sub(x, s.a, "A")));
  });
  cmd("sandwich", "all Y with BY within Y within A", [](const FiniteMagma& x) {
    return solution_json(solve_sandwich(x, sub(x, s.b, "B"), sub(x, s.a, "A")));
  });
  cmd("eq", "all Y with BY = A", [](const FiniteMagma& x) {
    return json{{"solutions", hex_list(solve_equation(x, sub(x, s.b, "B"), sub(x, s.a, "A")))}};
  });
  cmd("split", "all Y with bb D u BY = A, disjointly", [](const FiniteMagma& x) {
    SplitSolutions r = solve_split(x, sub(x, s.bb, "bb"), sub(x, s.b, "B"), sub(x, s.d, "D"), sub(x, s.a, "A"));
    return json{{"solutions", hex_list(r.solutions)}, {"unique", r.unique}};
  });
}

void add_topo_commands(CLI::App& app, Action& action) {
  static SubsetArgs s;
  static bool periodic = false, dot = false;
  auto* topo = app.add_subcommand("topo", "Alexandrov topologies from subsets")->require_subcommand(1);
  auto cmd = [&](const char* name, const char* help, std::function<Output(const FiniteMagma&)> f) {
    auto* c = topo->add_subcommand(name, help);
    add_magma(c, s.src);
    c->add_option("--A", s.a);
    c->add_option("--B", s.b);
    c->add_flag("--periodic", periodic, "B-periodic opens instead of upper B-periodic");
    c->callback([&action, f] {
      action = [f] { return f(s.src.load()); };
    });
    return c;
  };
  auto build = [](const FiniteMagma& x) {
    return build_topology(x, sub(x, s.b, "B"), periodic ? TopologyKind::Periodic : TopologyKind::UpperPeriodic);
  };
  auto* b = cmd("build", "minimal open neighborhoods", [build](const FiniteMagma& x) {
    AlexandrovTopology t = build(x);
    Output o;
    if (dot) {
      o.raw = to_dot(t);
      return o;
    }
    o.data = {{"kind", topology_kind_name(t.kind)}, {"reach", hex_list(t.reach)}};
    return o;
  });
  b->add_flag("--dot", dot, "Graphviz output");
  cmd("open", "whether A is open", [build](const FiniteMagma& x) {
    Output o;
    o.data = {{"open", is_open(build(x), sub(x, s.a, "A"))}};
    return o;
  });
  cmd("count", "number of open sets", [build](const FiniteMagma& x) {
    Output o;
    o.data = {{"opens", count_opens(build(x)).get_str()}};
    return o;
  });
  cmd("semigroup", "continuity of the product", [](const FiniteMagma& x) {
    SemigroupTopologyReport r = is_topological_semigroup(x, sub(x, s.b, "B"));
    Output o;
    o.data = {{"b_is_subsemigroup", r.b_is_subsemigroup},
              {"left_normal", r.left_normal},
              {"continuous", r.continuous},
              {"basis_open", r.basis_open},
              {"basis_continuous", r.basis_continuous}};
    return o;
  });
  cmd("group", "topological group test", [](const FiniteMagma& x) {
    GroupTopologyReport r = is_topological_group(x, sub(x, s.b, "B"));
    Output o;
    o.data = {{"normal_subgroup", r.normal_subgroup},
              {"multiplication_continuous", r.multiplication_continuous},
              {"inversion_continuous", r.inversion_continuous},
              {"topological_group", r.topological_group},
              {"cosets", hex_list(r.cosets)}};
    return o;
  });
  cmd("ideals", "the topology of left ideals", [](const FiniteMagma& x) {
    AlexandrovTopology t = ideal_topology(x);
    Output o;
    o.data = {{"opens", count_opens(t).get_str()}, {"reach", hex_list(t.reach)}};
    return o;
  });
}

void add_real_commands(CLI::App& app, Action& action) {
  static std::string set, x_text, b_text, h1, h2;
  auto* re = app.add_subcommand("real", "unit periodic real sets")->require_subcommand(1);
  auto cmd = [&](const char* name, const char* help, std::function<json()> f) {
    auto* c = re->add_subcommand(name, help);
    c->add_option("--set", set, "set JSON file or inline JSON");
    c->callback([&action, f] {
      action = [f] {
        Output o;
        o.data = f();
        return o;
      };
    });
    return c;
  };
  auto needs_set = [] {
    if (set.empty()) fail(ErrorCode::InvalidInput, "missing --set");
    return load_set(set);
  };
  cmd("member", "membership of --x", [needs_set] {
    if (x_text.empty()) fail(ErrorCode::InvalidInput, "missing --x");
    return json{{"member", membership(needs_set(), number(x_text))}};
  })->add_option("--x", x_text, "number such as 5/2 or 1+sqrt(2)");
  cmd("pk", "periodic kernel", [needs_set] { return real::set_to_json(real::pk(needs_set())); });
  cmd("pf", "periodic-free part", [needs_set] { return real::set_to_json(real::pf(needs_set())); });
  cmd("st", "start", [needs_set] {
    json cells = json::array();
    for (const real::Cell& c : real::st(needs_set()).cells()) cells.push_back(real::cell_to_json(c));
    return json{{"start", std::move(cells)}};
  });
  cmd("delta", "sup of A minus (A + 1)", [needs_set] { return sup_json(real::delta(needs_set())); });
  cmd("coc", "all concentration numbers", [needs_set] { return ray_json(real::coc(needs_set())); });
  cmd("sigma", "summand set and sup of summand minus A", [needs_set] {
    real::UnitPeriodicRealSet a = needs_set();
    return json{{"summand", real::set_to_json(real::summand_zplus(a))}, {"sigma", sup_json(real::sigma(a))}};
  });
  cmd("classify", "first, second or third class", [needs_set] {
    return json{{"class", real::real_class_name(real::classify_real(needs_set()))}};
  });
  cmd("semigroup", "closure under addition, both criteria", [needs_set] {
    real::SemigroupCheck c = real::semigroup_dual_check(needs_set());
    return json{{"semigroup", c.criterion},
                {"shift_agnostic_criterion", c.shift_agnostic_criterion},
                {"oracle", c.oracle},
                {"agree", c.agree()}};
  });
  cmd("subgroup", "additive subgroup test", [needs_set] { return json{{"subgroup", real::is_subgroup(needs_set())}}; });
  cmd("rescale", "the set divided by --b", [needs_set] {
    if (b_text.empty()) fail(ErrorCode::InvalidInput, "missing --b");
    return real::set_to_json(real::rescale(needs_set(), real::ExactReal::parse_rational(b_text)));
  })->add_option("--b", b_text, "rational factor");
  cmd("project", "generator and shift of --x", [needs_set] {
    if (x_text.empty()) fail(ErrorCode::InvalidInput, "missing --x");
    real::Projection p = real::projections(needs_set(), number(x_text));
    return json{{"part", p.kind == real::ProjectionKind::Kernel ? "Kernel" : "Free"},
                {"generator", p.generator.to_string()},
                {"shift", p.shift.get_str()}};
  })->add_option("--x", x_text);
  auto* mix = cmd("mix", "(H1 + H2) u H2", [] {
    if (h1.empty() || h2.empty()) fail(ErrorCode::InvalidInput, "missing --h1 or --h2");
    return real::set_to_json(real::construct_mixed(load_set(h1), load_set(h2)));
  });
  mix->add_option("--h1", h1, "first class semigroup");
  mix->add_option("--h2", h2, "second class semigroup");
}

void add_verify_command(CLI::App& app, Action& action, Globals& g) {
  static std::string suite = "all";
  static std::size_t max_n = 16, cases = 100;
  static bool list = false;
  auto* v = app.add_subcommand("verify", "run the property batteries");
  v->add_option("--suite", suite, "suite name or all");
  v->add_option("--max-n", max_n, "cap on exhaustive scopes");
  v->add_option("--cases", cases, "randomized cases per suite");
  v->add_flag("--list", list, "print suite names");
  v->callback([&action, &g] {
    action = [&g] {
      Output o;
      if (list) {
        o.data = {{"suites", suite_names()}};
        return o;
      }
      VerifyOptions opts;
      opts.max_n = max_n;
      opts.seed = g.seed;
      opts.random_cases = cases;
      VerifyReport r = run_suite(suite, opts);
      if (g.text_out) {
        o.raw = report_to_text(r, g.timing);
      } else {
        o.data = report_to_json(r, g.timing);
      }
      o.data["__failed"] = !r.passed;
      return o;
    };
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"periodica: periodic subsets of finite magmas and of the real line"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json_out, "JSON output (the default)");
  auto* text = app.add_flag("--text", g.text_out, "key: value output");
  text->excludes(app.get_option("--json"));
  app.add_flag("--timing", g.timing, "report elapsed time");
  app.add_option("--seed", g.seed, "seed for randomized suites");
  app.fallthrough();

  Action action;
  add_magma_commands(app, action);
  add_subset_commands(app, action);
  add_periodic_commands(app, action);
  add_represent_commands(app, action, g);
  add_solve_commands(app, action);
  add_topo_commands(app, action);
  add_real_commands(app, action);
  add_verify_command(app, action, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!action) return 2;

  auto started = std::chrono::steady_clock::now();
  try {
    Output o = action();
    bool failed = false;
    if (o.data.contains("__failed")) {
      failed = o.data["__failed"].get<bool>();
      o.data.erase("__failed");
    }
    if (o.raw) {
      std::cout << *o.raw;
    } else if (g.text_out) {
      std::cout << render_text(o.data);
    } else {
      std::cout << o.data.dump() << '\n';
    }
    if (g.timing) {
      auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
      std::cerr << "elapsed_ms: " << static_cast<long>(ms) << '\n';
    }
    return failed ? 1 : 0;
  } catch (const Error& e) {
    std::cerr << json{{"error", std::string(error_name(e.code()))}, {"detail", e.what()}}.dump() << '\n';
    return 1;
  } catch (const json::exception& e) {
    std::cerr << json{{"error", "InvalidInput"}, {"detail", e.what()}}.dump() << '\n';
    return 1;
  }
}
