#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "sylowlab/catalog.hpp"
#include "sylowlab/error.hpp"
#include "sylowlab/lattice.hpp"
#include "sylowlab/verify.hpp"

namespace sylowlab::cli {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string member_list(const ElementSet& s) {
  std::string text = "{";
  bool first = true;
  s.for_each([&](Element e) {
    if (!first) text += ",";
    first = false;
    text += std::to_string(e);
  });
  return text + "}";
}

void cmd_info(const FiniteGroup& g, bool list_elements, std::ostream& out) {
  std::map<std::uint32_t, std::size_t> histogram;
  for (auto o : g.element_orders()) ++histogram[o];
  out << "group " << g.name() << "\n";
  out << "order " << g.order() << "\n";
  out << "abelian " << (is_abelian(g) ? "yes" : "no") << "\n";
  out << "cyclic " << (is_cyclic(g) ? "yes" : "no") << "\n";
  out << "center_order " << center(g).order() << "\n";
  out << "exponent " << exponent(g) << "\n";
  out << "element_orders";
  for (const auto& [o, n] : histogram) out << " " << o << ":" << n;
  out << "\n";
  if (list_elements) {
    for (Element a = 0; a < g.order(); ++a) {
      out << a << " " << g.label(a) << " order " << g.order_of(a) << "\n";
    }
  }
}

void cmd_subgroups(const FiniteGroup& g, const Caps& caps, std::optional<std::size_t> order,
                   bool normal_only, std::ostream& out) {
  const SubgroupLattice lattice(g, caps.subgroups);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& s = lattice[i];
    if (order && s.order() != *order) continue;
    if (normal_only && !lattice.normal(i)) continue;
    out << "order " << s.order() << " members " << member_list(s.members()) << " normal "
        << (lattice.normal(i) ? "yes" : "no") << " normalizer " << lattice.normalizer_order(i) << "\n";
  }
}

void cmd_classes(const FiniteGroup& g, std::ostream& out) {
  const auto part = conjugacy_classes(g);
  for (std::size_t c = 0; c < part.representatives.size(); ++c) {
    ElementSet members(g.order());
    for (Element a = 0; a < g.order(); ++a) {
      if (part.class_of[a] == c) members.insert(a);
    }
    const Element rep = part.representatives[c];
    out << "class " << c << " size " << part.class_sizes[c] << " representative " << rep
        << " order " << g.order_of(rep) << " members " << member_list(members) << "\n";
  }
}

void cmd_sylow(const FiniteGroup& g, std::int64_t p, std::ostream& out) {
  const SylowChain chain = sylow_chain(g, p);
  out << "prime " << chain.prime << " exponent " << chain.exponent << "\n";
  out << "chain_orders";
  for (std::size_t i = 0; i < chain.chain.size(); ++i) {
    out << (i == 0 ? " " : ",") << chain.chain[i].order();
  }
  out << "\n";
  for (const auto& term : chain.chain) {
    out << "order " << term.order() << " members " << member_list(term.members()) << "\n";
  }
}

void cmd_decompose(const FiniteGroup& g, Element c, std::int64_t a, std::int64_t b, std::ostream& out) {
  g.check(c);
  const auto d = coprime_decomposition(g, c, a, b);
  out << "element " << c << " " << g.label(c) << " order " << g.order_of(c) << "\n";
  out << "alpha " << d.alpha << " beta " << d.beta << "\n";
  out << "a_part " << d.a_part << " " << g.label(d.a_part) << " order " << g.order_of(d.a_part) << "\n";
  out << "b_part " << d.b_part << " " << g.label(d.b_part) << " order " << g.order_of(d.b_part) << "\n";
}

int cmd_verify(const std::vector<CatalogEntry>& groups, const VerifyOptions& options, bool json,
               std::ostream& out, std::ostream& err) {
  bool all_passed = true;
  for (const auto& entry : groups) {
    const VerifyResult result = verify_group(entry.group, options);
    for (const auto& r : result.reports) {
      out << (json ? to_json_line(r) : to_text_line(r)) << "\n";
      all_passed = all_passed && r.passed;
    }
    for (const auto& s : result.skipped) err << "skipped: " << s << "\n";
  }
  return all_passed ? 0 : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite group computations and theorem checks", "sylowlab"};
  app.require_subcommand(1);

  std::string spec;
  bool list_elements = false;
  auto* info = app.add_subcommand("info", "Order, center, exponent and element orders");
  info->add_option("group", spec, "Group spec")->required();
  info->add_flag("--elements", list_elements, "List every element with its label");

  std::optional<std::size_t> order;
  bool normal_only = false;
  auto* subgroups = app.add_subcommand("subgroups", "List every subgroup");
  subgroups->add_option("group", spec, "Group spec")->required();
  subgroups->add_option("--order", order, "Only subgroups of this order")->check(CLI::PositiveNumber);
  subgroups->add_flag("--normal", normal_only, "Only normal subgroups");

  auto* classes = app.add_subcommand("classes", "Conjugacy classes of elements");
  classes->add_option("group", spec, "Group spec")->required();

  std::int64_t prime = 0;
  auto* sylow = app.add_subcommand("sylow", "Chain of p-subgroups up to a Sylow subgroup");
  sylow->add_option("group", spec, "Group spec")->required();
  sylow->add_option("--prime,-p", prime, "Prime dividing the order")->required();

  Element element = 0;
  std::int64_t a = 1, b = 1;
  auto* decompose = app.add_subcommand("decompose", "Split an element of order ab into coprime parts");
  decompose->add_option("group", spec, "Group spec")->required();
  decompose->add_option("--element", element, "Element index")->required();
  decompose->add_option("--a", a, "First coprime factor")->required();
  decompose->add_option("--b", b, "Second coprime factor")->required();

  std::optional<std::size_t> catalog_max;
  std::vector<std::string> theorems;
  bool json = false;
  auto* verify = app.add_subcommand("verify", "Run every applicable theorem check");
  auto* group_opt = verify->add_option("group", spec, "Group spec");
  auto* catalog_opt = verify->add_option("--catalog", catalog_max, "Verify every catalog group up to this order");
  group_opt->excludes(catalog_opt);
  verify->add_option("--theorems", theorems, "Comma-separated theorem ids or prefixes")->delimiter(',');
  verify->add_flag("--json", json, "One JSON object per report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const Caps caps = caps_from_env();
    if (*verify) {
      if (!*group_opt && !*catalog_opt) {
        err << "error: verify needs a group spec or --catalog\n";
        return kExitUsage;
      }
      VerifyOptions options;
      options.caps = caps;
      options.theorems = theorems;
      std::vector<CatalogEntry> groups;
      if (catalog_max) {
        groups = standard_catalog(*catalog_max, caps.construction);
      } else {
        FiniteGroup g = build(spec, caps.construction);
        groups.push_back({g.name(), g});
      }
      std::ostringstream buffer;
      const int code = cmd_verify(groups, options, json, buffer, err);
      out << buffer.str();
      return code;
    }
    const FiniteGroup g = build(spec, caps.construction);
    if (*info) cmd_info(g, list_elements, out);
    if (*subgroups) cmd_subgroups(g, caps, order, normal_only, out);
    if (*classes) cmd_classes(g, out);
    if (*sylow) cmd_sylow(g, prime, out);
    if (*decompose) cmd_decompose(g, element, a, b, out);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace sylowlab::cli
