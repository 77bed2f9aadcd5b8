#include "tridist/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>

#include "tridist/cache.hpp"
#include "tridist/errors.hpp"
#include "tridist/io.hpp"
#include "tridist/search.hpp"

namespace tridist {

namespace {

struct GlobalFlags {
  std::string cache_dir = ".tridist-cache";
  bool no_cache = false;
  unsigned threads = 1;
  bool seed_lower_bounds = false;
  bool require_optimal = false;
  double budget = 0;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

std::vector<Method> methods_for(const std::string& name) {
  if (name == "both") return {Method::SmallestMenuClique, Method::Hexagon};
  return {parse_method(name)};
}

SearchReport run_method(Searcher& searcher, std::size_t m, Method method) {
  return method == Method::Hexagon ? searcher.hexagon(m) : searcher.solve_smallest_menu(m);
}

void print_summary(std::ostream& out, const SearchReport& r) {
  out << "m=" << r.m << " method=" << method_name(r.method) << " size=" << r.size
      << ", optimal=" << (r.optimal ? "true" : "false") << " distances=" << distance_count(r.construction)
      << " menu=" << r.menu << " remark=\"" << r.remark << "\""
      << (r.overshoot ? " overshoot=true" : "") << " elapsed=" << r.elapsed.count() << "s\n";
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions of m-distance sets on the triangular lattice"};
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_option("--cache-dir", g.cache_dir, "Directory for cached search reports");
  app.add_flag("--no-cache", g.no_cache, "Do not read or write the cache");
  app.add_option("--threads", g.threads, "Solver worker threads")->check(CLI::Range(1U, 1024U));
  app.add_flag("--seed-lower-bounds", g.seed_lower_bounds, "Seed each clique search with the (m-1) result");
  app.add_flag("--require-optimal", g.require_optimal, "Exit with status 2 if any clique result is not proven optimal");

  std::size_t m = 0;
  std::string method = "both";
  std::string points_out;
  auto* solve = app.add_subcommand("solve", "Construct an m-distance set and print a summary");
  solve->add_option("--m", m, "Number of distances")->required()->check(CLI::Range(1, 10000));
  solve->add_option("--method", method, "clique, hexagon or both")->check(CLI::IsMember({"clique", "hexagon", "both"}));
  solve->add_option("--budget", g.budget, "Per-search time budget in seconds")->check(CLI::PositiveNumber);
  solve->add_option("--emit-points", points_out, "Write the best construction as a point list");

  std::size_t from = 0, to = 0;
  std::string format = "csv";
  std::string table_out;
  auto* table = app.add_subcommand("table", "Best sizes of both methods over a range of m");
  table->add_option("--from", from)->required()->check(CLI::Range(3, 10000));
  table->add_option("--to", to)->required()->check(CLI::Range(3, 10000));
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", table_out, "Output file (default: stdout)");
  table->add_option("--budget", g.budget, "Per-search time budget in seconds")->check(CLI::PositiveNumber);

  std::string render_method;
  std::string svg_out;
  RenderOptions render_opts;
  auto* render = app.add_subcommand("render", "Draw a construction as SVG");
  render->add_option("--m", m)->required()->check(CLI::Range(1, 10000));
  render->add_option("--method", render_method)->required()->check(CLI::IsMember({"clique", "hexagon"}));
  render->add_option("--out", svg_out)->required();
  render->add_option("--scale", render_opts.scale)->check(CLI::PositiveNumber);
  render->add_option("--radius", render_opts.point_radius)->check(CLI::PositiveNumber);
  render->add_flag("--hull", render_opts.show_removed_hull, "Outline the enclosing hexagon");

  std::string mult_method;
  auto* multiplicity = app.add_subcommand("multiplicity", "Print the multiplicity array of a construction");
  multiplicity->add_option("--m", m)->required()->check(CLI::Range(1, 10000));
  multiplicity->add_option("--method", mult_method)->required()->check(CLI::IsMember({"clique", "hexagon"}));

  std::string points_path;
  auto* verify = app.add_subcommand("verify", "Report the distances of a point-list file");
  verify->add_option("--points", points_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArgs;
  }

  try {
    SearchOptions options;
    options.threads = g.threads;
    options.seed_lower_bounds = g.seed_lower_bounds;
    if (g.budget > 0) options.budget = std::chrono::duration<double>(g.budget);
    std::unique_ptr<ResultCache> cache;
    if (!g.no_cache) cache = std::make_unique<ResultCache>(g.cache_dir);
    Searcher searcher(options, cache.get());
    bool all_optimal = true;

    if (*solve) {
      const auto methods = methods_for(method);
      if (m < 3 && std::find(methods.begin(), methods.end(), Method::Hexagon) != methods.end())
        throw InvalidSpecError("the hexagon method needs m >= 3");
      std::optional<SearchReport> best;
      for (auto meth : methods) {
        auto report = run_method(searcher, m, meth);
        print_summary(out, report);
        all_optimal = all_optimal && report.optimal;
        if (!best || report.size > best->size) best = report;
      }
      if (!points_out.empty()) {
        write_file(points_out, write_point_list(best->construction, "m=" + std::to_string(m) + " method=" +
                                                                        std::string(method_name(best->method)) +
                                                                        " size=" + std::to_string(best->size)));
      }
    } else if (*table) {
      if (to < from) throw InvalidSpecError("--to must not be smaller than --from");
      const auto rows = searcher.table_range(from, to);
      for (const auto& row : rows) all_optimal = all_optimal && row.clique_optimal;
      const auto text = emit_table(rows, parse_table_format(format));
      if (table_out.empty()) {
        out << text;
      } else {
        write_file(table_out, text);
      }
    } else if (*render) {
      const auto report = run_method(searcher, m, parse_method(render_method));
      all_optimal = report.optimal;
      write_file(svg_out, render_svg(report.construction, render_opts));
      out << "wrote " << svg_out << " (" << report.size << " points)\n";
    } else if (*multiplicity) {
      const auto report = run_method(searcher, m, parse_method(mult_method));
      all_optimal = report.optimal;
      out << "menu=" << report.menu << '\n' << "multiplicities=[";
      for (std::size_t i = 0; i < report.multiplicities.counts.size(); ++i)
        out << (i ? "," : "") << report.multiplicities.counts[i];
      out << "]\n" << "pairs=" << report.multiplicities.total() << " size=" << report.size << '\n';
    } else if (*verify) {
      const auto config = read_point_list_file(points_path);
      out << config.size() << " points, " << distance_count(config) << " distances";
      if (config.size() >= 2) out << ", menu=" << distance_set(config);
      out << '\n';
    }

    if (g.require_optimal && !all_optimal) {
      err << "error: result not proven optimal within the budget\n";
      return kExitNotOptimal;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArgs;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArgs;
  }
}

}  // namespace tridist
