#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "simptree/cycles.hpp"
#include "simptree/generators.hpp"
#include "simptree/grafting.hpp"
#include "simptree/io.hpp"
#include "simptree/oracle.hpp"
#include "simptree/tree_decision.hpp"

namespace simptree::cli {
namespace {

// Input problems distinct from usage errors only in wording; both exit 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FacetComplex load_complex(const std::string& file, const std::string& names) {
  ParseOptions opt;
  if (names == "single") opt.names = NameMode::single_char;
  if (names == "multi") opt.names = NameMode::named;
  std::string text;
  if (file == "-") {
    text = slurp(std::cin);
  } else {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open '" + file + "'");
    text = slurp(in);
  }
  return parse_complex(text, opt);
}

Variant parse_variant(const std::string& name) {
  if (name == "baseline") return Variant::baseline;
  if (name == "useless") return Variant::useless_removal;
  if (name == "connset") return Variant::connection_set;
  if (name == "incmat") return Variant::incidence_matrix;
  if (name == "naive") return Variant::naive;
  throw InputError("unknown variant '" + name + "' (want baseline|useless|connset|incmat|naive)");
}

std::string vertex_set(const FacetComplex& c, const Bitset& b) {
  std::string out = "{";
  b.for_each([&](int v) {
    if (out.size() > 1) out += ", ";
    out += c.vertex_name(v);
  });
  return out + "}";
}

std::string cycle_line(const FacetComplex& c, const CycleCertificate& cert) {
  std::string out;
  for (int f : cert.ordering) {
    if (!out.empty()) out += " -> ";
    out += c.label(f);
  }
  if (cert.apex.any()) out += ", apex " + vertex_set(c, cert.apex);
  return out;
}

std::string labels_line(const FacetComplex& c, const std::vector<int>& facets) {
  std::string out;
  for (int f : facets) {
    if (!out.empty()) out += ' ';
    out += c.label(f);
  }
  return out;
}

double ms_since(std::chrono::steady_clock::time_point start) {
  auto d = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double, std::milli>(d).count();
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::string stats_record(const FacetComplex& c, const Verdict& v, double ms) {
  std::ostringstream line;
  line << "variant=" << variant_name(v.stats.variant) << " l=" << c.facet_count()
       << " n=" << c.vertex_count() << " tree=" << (v.is_tree ? 1 : 0)
       << " triples=" << v.stats.triples_enumerated
       << " comparability_rejections=" << v.stats.comparability_rejections
       << " connectivity_checks=" << v.stats.connectivity_checks
       << " cycle_triples=" << v.stats.cycle_triples
       << " facets_removed=" << v.stats.facets_removed << " wall_time_ms=" << format_ms(ms);
  return line.str();
}

// Spec strings for bench: path:L, interval:L:W, random:L:N:LO:HI[:SEED],
// anything else is a file name.
FacetComplex complex_from_spec(const std::string& spec, const std::string& names) {
  auto fields = [&](std::size_t skip) {
    std::vector<long long> out;
    std::string rest = spec.substr(skip);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t colon = rest.find(':', pos);
      std::string tok = rest.substr(pos, colon == std::string::npos ? rest.size() - pos : colon - pos);
      try {
        std::size_t used = 0;
        out.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw InputError("bad number '" + tok + "' in spec '" + spec + "'");
      }
      if (colon == std::string::npos) break;
      pos = colon + 1;
    }
    return out;
  };
  try {
    if (spec.rfind("path:", 0) == 0) {
      auto v = fields(5);
      if (v.size() != 1) throw InputError("path spec wants path:L, got '" + spec + "'");
      return gen_path(static_cast<int>(v[0]));
    }
    if (spec.rfind("interval:", 0) == 0) {
      auto v = fields(9);
      if (v.size() != 2) throw InputError("interval spec wants interval:L:W, got '" + spec + "'");
      return gen_interval(static_cast<int>(v[0]), static_cast<int>(v[1]));
    }
    if (spec.rfind("random:", 0) == 0) {
      auto v = fields(7);
      if (v.size() != 4 && v.size() != 5)
        throw InputError("random spec wants random:L:N:LO:HI[:SEED], got '" + spec + "'");
      RandomSpec rs;
      rs.l = static_cast<int>(v[0]);
      rs.n = static_cast<int>(v[1]);
      rs.size_lo = static_cast<int>(v[2]);
      rs.size_hi = static_cast<int>(v[3]);
      rs.seed = v.size() == 5 ? static_cast<std::uint64_t>(v[4]) : 0;
      return gen_random(rs);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad generator spec: ") + e.what());
  }
  return load_complex(spec, names);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"facet complex toolkit: simplicial trees, cycles, grafting, covers"};
  app.require_subcommand(1);

  std::string file, names = "auto", variant_str = "incmat";
  bool stats = false, no_early_exit = false, witness = false, machine = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "facet list file, or - for standard input")->required();
    cmd->add_option("--names", names, "vertex name mode: auto|single|multi")
        ->check(CLI::IsMember({"auto", "single", "multi"}))
        ->capture_default_str();
  };

  auto* tree_cmd = app.add_subcommand("is-tree", "decide whether the complex is a simplicial tree");
  add_input(tree_cmd);
  tree_cmd->add_option("--variant", variant_str, "baseline|useless|connset|incmat|naive")
      ->check(CLI::IsMember({"baseline", "useless", "connset", "incmat", "naive"}))
      ->capture_default_str();
  tree_cmd->add_flag("--stats", stats, "print enumeration counters");
  tree_cmd->add_flag("--no-early-exit", no_early_exit, "enumerate all triples even after a cycle");
  tree_cmd->add_flag("--witness", witness, "print a cycle certificate when not a tree");
  tree_cmd->add_flag("--machine", machine, "one key=value record instead of prose");

  auto* forest_cmd = app.add_subcommand("is-forest", "decide whether every component is a tree");
  add_input(forest_cmd);

  auto* cycles_cmd = app.add_subcommand("cycles", "list facets lying on a simplicial cycle");
  add_input(cycles_cmd);

  auto* graft_cmd = app.add_subcommand("is-grafted", "decide whether the complex is grafted");
  add_input(graft_cmd);
  graft_cmd->add_flag("--machine", machine, "one key=value record instead of prose");

  int max_n = 25;
  auto* cm_cmd = app.add_subcommand("cm-report", "unmixedness and Cohen-Macaulayness report");
  add_input(cm_cmd);
  cm_cmd->add_option("--max-n", max_n, "vertex limit for the minimal cover search")
      ->capture_default_str();
  cm_cmd->add_flag("--machine", machine, "one key=value record instead of prose");

  auto* ideal_cmd = app.add_subcommand("ideal", "print the facet ideal generators");
  add_input(ideal_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "emit a generated complex");
  gen_cmd->require_subcommand(1);
  int gen_l = 0, gen_width = 0;
  RandomSpec gen_rs;
  std::uint64_t gen_seed = 0;
  auto* gen_path_cmd = gen_cmd->add_subcommand("path", "path of l three-vertex facets");
  gen_path_cmd->add_option("l", gen_l, "facet count")->required();
  auto* gen_interval_cmd = gen_cmd->add_subcommand("interval", "sliding window facets");
  gen_interval_cmd->add_option("l", gen_l, "facet count")->required();
  gen_interval_cmd->add_option("width", gen_width, "window width (facet size minus one)")->required();
  auto* gen_random_cmd = gen_cmd->add_subcommand("random", "seeded random antichain");
  gen_random_cmd->add_option("l", gen_rs.l, "facet count")->required();
  gen_random_cmd->add_option("n", gen_rs.n, "vertex pool size")->required();
  gen_random_cmd->add_option("lo", gen_rs.size_lo, "smallest facet size")->required();
  gen_random_cmd->add_option("hi", gen_rs.size_hi, "largest facet size")->required();
  gen_random_cmd->add_option("seed", gen_seed, "random seed (default 0)");

  std::vector<std::string> bench_specs, bench_variants;
  auto* bench_cmd = app.add_subcommand("bench",
                                       "run decision variants over generator specs or files");
  bench_cmd->add_option("spec", bench_specs,
                        "path:L | interval:L:W | random:L:N:LO:HI[:SEED] | file")
      ->required();
  bench_cmd->add_option("--variant", bench_variants, "variants to run (default: all four)")
      ->check(CLI::IsMember({"baseline", "useless", "connset", "incmat"}));
  bench_cmd->add_option("--names", names, "vertex name mode for file specs: auto|single|multi")
      ->check(CLI::IsMember({"auto", "single", "multi"}));

  std::vector<std::string> argv_like = args;
  argv_like.insert(argv_like.begin(), "simptree");
  std::vector<const char*> argv;
  argv.reserve(argv_like.size());
  for (const auto& a : argv_like) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(tree_cmd)) {
      auto c = load_complex(file, names);
      Variant variant = parse_variant(variant_str);
      if (!is_connected(c)) {
        if (machine) {
          out << "variant=" << variant_name(variant) << " l=" << c.facet_count()
              << " n=" << c.vertex_count() << " tree=0 connected=0\n";
        } else {
          out << "not a tree (complex is disconnected; see is-forest)\n";
        }
        return 1;
      }
      if (variant == Variant::naive) {
        auto start = std::chrono::steady_clock::now();
        bool tree = is_forest_naive(c);
        double ms = ms_since(start);
        if (machine) {
          out << "variant=naive l=" << c.facet_count() << " n=" << c.vertex_count()
              << " tree=" << (tree ? 1 : 0) << " wall_time_ms=" << format_ms(ms) << "\n";
        } else {
          out << (tree ? "tree\n" : "not a tree\n");
          if (stats) out << "variant=naive (no triple counters)\n";
        }
        return tree ? 0 : 1;
      }
      DecisionOptions opt;
      opt.early_exit = !no_early_exit;
      auto start = std::chrono::steady_clock::now();
      auto verdict = decide_tree(c, variant, opt);
      double ms = ms_since(start);
      if (machine) {
        out << stats_record(c, verdict, ms) << "\n";
      } else {
        out << (verdict.is_tree ? "tree\n" : "not a tree\n");
        if (witness && verdict.witness) out << "witness cycle: " << cycle_line(c, *verdict.witness) << "\n";
        if (stats) out << stats_record(c, verdict, ms) << "\n";
      }
      return verdict.is_tree ? 0 : 1;
    }

    if (app.got_subcommand(forest_cmd)) {
      auto c = load_complex(file, names);
      bool forest = is_forest(c);
      out << (forest ? "forest\n" : "not a forest\n");
      return forest ? 0 : 1;
    }

    if (app.got_subcommand(cycles_cmd)) {
      auto c = load_complex(file, names);
      auto cyclic = cyclic_facets(c);
      if (cyclic.empty()) {
        out << "no cyclic facets\n";
        return 1;
      }
      for (const auto& [f, cert] : cyclic) out << c.label(f) << ": " << cycle_line(c, cert) << "\n";
      return 0;
    }

    if (app.got_subcommand(graft_cmd)) {
      auto c = load_complex(file, names);
      auto rep = is_grafted(c);
      const char* reason = "";
      if (rep.failure == GraftFailure::uncovered_vertex)
        reason = "a non-leaf vertex lies outside every leaf";
      if (rep.failure == GraftFailure::intersecting_leaves) reason = "two leaves share a vertex";
      if (rep.failure == GraftFailure::irreducible_leaf)
        reason = "a leaf has incomparable facet intersections";
      if (machine) {
        const char* key[] = {"uncovered_vertex", "intersecting_leaves", "irreducible_leaf"};
        out << "grafted=" << (rep.grafted ? 1 : 0) << " leaves=" << rep.leaves.size()
            << " non_leaves=" << rep.non_leaves.size();
        if (rep.failure) out << " reason=" << key[static_cast<int>(*rep.failure)];
        out << "\n";
      } else {
        out << (rep.grafted ? "grafted" : std::string("not grafted: ") + reason) << "\n";
        out << "leaves: " << labels_line(c, rep.leaves) << "\n";
        out << "non-leaves: " << labels_line(c, rep.non_leaves) << "\n";
      }
      return rep.grafted ? 0 : 1;
    }

    if (app.got_subcommand(cm_cmd)) {
      auto c = load_complex(file, names);
      auto rep = cm_report(c, max_n);
      const char* verdict = rep.verdict == CmVerdict::yes      ? "yes"
                            : rep.verdict == CmVerdict::no     ? "no"
                                                               : "unknown";
      if (machine) {
        out << "tree=" << (rep.is_tree ? 1 : 0) << " grafted=" << (rep.graft.grafted ? 1 : 0);
        if (rep.covers) {
          out << " alpha=" << rep.covers->alpha << " unmixed=" << (rep.covers->unmixed ? 1 : 0)
              << " height=" << rep.covers->height << " dim=" << rep.covers->dim
              << " covers=" << rep.covers->minimal_covers.size();
        }
        out << " cm=" << verdict << "\n";
      } else {
        out << "tree: " << (rep.is_tree ? "yes" : "no") << "\n";
        out << "grafted: " << (rep.graft.grafted ? "yes" : "no") << "\n";
        if (rep.covers) {
          out << "alpha=" << rep.covers->alpha
              << " unmixed=" << (rep.covers->unmixed ? "yes" : "no")
              << " height=" << rep.covers->height << " dim=" << rep.covers->dim << "\n";
          out << "minimal primes:";
          for (const auto& cover : rep.covers->minimal_covers) {
            out << " (";
            for (std::size_t i = 0; i < cover.size(); ++i)
              out << (i ? ", " : "") << c.vertex_name(cover[i]);
            out << ")";
          }
          out << "\n";
        } else {
          out << "cover search skipped (vertex count " << c.vertex_count() << " exceeds bound "
              << max_n << ")\n";
        }
        out << "cohen-macaulay: " << verdict << "\n";
      }
      return rep.verdict == CmVerdict::yes ? 0 : 1;
    }

    if (app.got_subcommand(ideal_cmd)) {
      auto c = load_complex(file, names);
      for (int f = 0; f < c.facet_count(); ++f) {
        if (f) out << ", ";
        bool lead = true;
        c.facet(f).for_each([&](int v) {
          out << (lead ? "" : "*") << c.vertex_name(v);
          lead = false;
        });
      }
      out << "\n";
      return 0;
    }

    if (app.got_subcommand(gen_cmd)) {
      FacetComplex c;
      if (gen_cmd->got_subcommand(gen_path_cmd)) {
        c = gen_path(gen_l);
      } else if (gen_cmd->got_subcommand(gen_interval_cmd)) {
        c = gen_interval(gen_l, gen_width);
      } else {
        gen_rs.seed = gen_seed;
        c = gen_random(gen_rs);
      }
      out << serialize_complex(c);
      return 0;
    }

    if (app.got_subcommand(bench_cmd)) {
      if (bench_variants.empty()) bench_variants = {"baseline", "useless", "connset", "incmat"};
      DecisionOptions opt;
      opt.early_exit = false;  // full enumeration keeps counters comparable
      for (const auto& spec : bench_specs) {
        auto c = complex_from_spec(spec, names);
        for (const auto& vname : bench_variants) {
          auto start = std::chrono::steady_clock::now();
          auto verdict = decide_tree(c, parse_variant(vname), opt);
          double ms = ms_since(start);
          out << "id=" << spec << " " << stats_record(c, verdict, ms) << "\n";
        }
      }
      return 0;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << file << ": " << e.what() << "\n";
    return 2;
  } catch (const OracleBoundError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CoverBoundError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace simptree::cli
