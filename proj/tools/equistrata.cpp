#include <CLI11.hpp>
#include <iostream>

#include "equistrata/report.hpp"

using namespace equistrata;

namespace {

// Splits at commas outside parentheses, so cycle strings survive.
std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct Options {
  std::string format = "json";
  std::string group, names, signature, vector, handles, subgroup, target, family, catalog;
  int genus = 0, g = 0, n = 0, k = 0;
  std::size_t max_order = 0, max_vectors = 0, max_orbit = 0;
  unsigned threads = 0;
};

GroupPtr build_group(const Options& o, const Limits& limits) {
  if (o.names.empty()) return make_group(o.group, limits);
  return make_group(o.group, split_list(o.names), limits);
}

GeneratingVector build_vector(const Options& o, GroupPtr g) {
  auto handles = split_list(o.handles);
  auto elliptic = split_list(o.vector);
  if (handles.size() % 2) throw ParseError("--handles needs an even number of entries");
  Signature s;
  if (!o.signature.empty()) {
    s = Signature::parse(o.signature);
  } else {
    s.h = static_cast<int>(handles.size() / 2);
    for (const auto& w : elliptic) s.periods.push_back(g->element_order(g->parse_element(w)));
  }
  auto v = make_vector(g, s, handles, elliptic);
  if (auto ok = is_valid(v); !ok) throw MathError("vector is not a surface-kernel epimorphism: " + ok.diagnostic);
  return v;
}

void emit(const Json& report, const std::string& format) {
  if (format == "md") std::cout << to_markdown(report);
  else std::cout << report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite group actions on Riemann surfaces and non-normal equisymmetric strata"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
  app.add_option("--max-order", o.max_order, "Largest group order")->check(CLI::PositiveNumber);
  app.add_option("--max-vectors", o.max_vectors, "Generating-vector budget")->check(CLI::PositiveNumber);
  app.add_option("--max-orbit", o.max_orbit, "Braid orbit budget")->check(CLI::PositiveNumber);
  app.add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  app.add_option("--catalog", o.catalog, "Catalog file");

  auto group_opts = [&](CLI::App* sub, bool signature_required) {
    sub->add_option("--group", o.group, "Group spec, e.g. C2xC2, D4, SD(C4;[3]), Perm[(1,2);(1,2,3)]")->required();
    sub->add_option("--names", o.names, "Generator names, comma separated");
    auto s = sub->add_option("--signature", o.signature, "Signature, e.g. 0;2,2,2,4");
    if (signature_required) s->required();
  };
  auto vector_opts = [&](CLI::App* sub) {
    sub->add_option("--vector", o.vector, "Elliptic entries as words or cycles, comma separated")->required();
    sub->add_option("--handles", o.handles, "Handle entries a1,b1,...");
  };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every generating vector");
  group_opts(enumerate_cmd, true);
  auto* classes_cmd = app.add_subcommand("classes", "Topological classes of actions");
  group_opts(classes_cmd, true);
  auto* restrict_cmd = app.add_subcommand("restrict", "Induced action of a subgroup");
  group_opts(restrict_cmd, false);
  vector_opts(restrict_cmd);
  restrict_cmd->add_option("--subgroup", o.subgroup, "Subgroup generators, comma separated")->required();
  auto* detect_cmd = app.add_subcommand("detect", "Search for non-normality witnesses");
  group_opts(detect_cmd, false);
  vector_opts(detect_cmd);
  detect_cmd->add_option("--target", o.target, "Only subgroups isomorphic to this group spec");
  auto* scan_cmd = app.add_subcommand("scan", "Scan every catalog action of a genus");
  scan_cmd->add_option("--genus", o.genus, "Genus (2 or 3)")->required()->check(CLI::Range(2, 3));
  auto* family_cmd = app.add_subcommand("family", "Check a family instance");
  family_cmd->add_option("--name", o.family, "Family")
      ->required()
      ->check(CLI::IsMember({"hyperelliptic_klein", "dihedral_8n", "cyclic_2n", "generalized_fermat"}));
  family_cmd->add_option("--g", o.g, "Genus parameter");
  family_cmd->add_option("--n", o.n, "n parameter");
  family_cmd->add_option("--k", o.k, "k parameter");
  auto* verify_cmd = app.add_subcommand("catalog-verify", "Verify the catalog");
  verify_cmd->add_option("--genus", o.genus, "Only this genus")->check(CLI::Range(2, 3));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Limits limits = Limits::from_environment();
  if (o.max_order) limits.max_order = std::min(o.max_order, kMaxGroupOrder);
  if (o.max_vectors) limits.max_vectors = o.max_vectors;
  if (o.max_orbit) limits.max_orbit = o.max_orbit;
  limits.threads = o.threads;

  try {
    if (*enumerate_cmd) {
      auto g = build_group(o, limits);
      auto s = Signature::parse(o.signature);
      emit(enumerate_report(o.group, s, enumerate(g, s, limits)), o.format);
    } else if (*classes_cmd) {
      auto g = build_group(o, limits);
      auto s = Signature::parse(o.signature);
      emit(classes_report(o.group, s, topological_classes(g, s, limits)), o.format);
    } else if (*restrict_cmd) {
      auto g = build_group(o, limits);
      auto v = build_vector(o, g);
      auto words = split_list(o.subgroup);
      std::vector<Element> xs;
      for (const auto& w : words) xs.push_back(g->parse_element(w));
      emit(restriction_report(o.group, words, v, induced_classes(v, g->closure(xs), limits)), o.format);
    } else if (*detect_cmd) {
      auto g = build_group(o, limits);
      auto v = build_vector(o, g);
      std::vector<GroupPtr> targets;
      if (!o.target.empty()) targets.push_back(make_group(o.target, limits));
      emit(detect_report(o.group, v, detect(v, targets, limits)), o.format);
    } else if (*scan_cmd) {
      auto catalog = load_catalog(o.catalog.empty() ? default_catalog_path() : o.catalog);
      emit(scan_report(scan_genus(o.genus, catalog, limits)), o.format);
    } else if (*family_cmd) {
      std::vector<std::pair<std::string, int>> params;
      if (family_cmd->count("--g")) params.emplace_back("g", o.g);
      if (family_cmd->count("--n")) params.emplace_back("n", o.n);
      if (family_cmd->count("--k")) params.emplace_back("k", o.k);
      auto f = family_check(o.family, params, limits);
      emit(family_report(f), o.format);
      return f.pass ? 0 : 1;
    } else if (*verify_cmd) {
      auto catalog = load_catalog(o.catalog.empty() ? default_catalog_path() : o.catalog);
      std::optional<int> genus;
      if (verify_cmd->count("--genus")) genus = o.genus;
      auto c = verify_catalog(catalog, genus, limits);
      emit(catalog_report(c), o.format);
      if (!c.pass) {
        for (const auto& e : c.entries)
          for (const auto& k : e.checks)
            if (!k.pass) std::cerr << "equistrata: " << e.entry << ": " << k.name << " expected " << k.expected
                                   << ", got " << k.actual << "\n";
        return 1;
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "equistrata: usage: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "equistrata: budget exceeded: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "equistrata: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
