#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tropmod/reports.hpp"

namespace {

using tropmod::Errc;
using tropmod::Error;
using tropmod::StabilityGraph;
using tropmod::VerifyLevel;
using tropmod::cli::Json;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
      return 1;
    case Errc::Internal:
      return 3;  // a theorem-level consistency failure, never expected
    default:
      return 2;  // validation
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) tropmod::fail(Errc::ParseError, "cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) tropmod::fail(Errc::ParseError, "cannot open output file: " + out_path);
  out << content;
}

struct CommonOpts {
  std::string graph_spec;
  std::string graph_file;
  std::string format = "json";
  std::string level = "full";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_graph) {
  if (with_graph) {
    cmd->add_option("--graph", o.graph_spec, "graph spec, e.g. n=5;edges=2-3,2-4,2-5,3-4");
    cmd->add_option("--graph-file", o.graph_file, "file containing a graph spec");
  }
  cmd->add_option("--format", o.format, "json|text|tsv|dot")
      ->check(CLI::IsMember({"json", "text", "tsv", "dot"}));
  cmd->add_option("--level", o.level, "quick|full verification")
      ->check(CLI::IsMember({"quick", "full"}));
  cmd->add_option("--out", o.out_path, "output path (default stdout)");
}

StabilityGraph load_graph(const CommonOpts& o) {
  if (!o.graph_spec.empty()) return StabilityGraph::parse(o.graph_spec);
  if (!o.graph_file.empty()) return StabilityGraph::parse(read_file(o.graph_file));
  tropmod::fail(Errc::ParseError, "one of --graph or --graph-file is required");
}

VerifyLevel level_of(const CommonOpts& o) {
  return o.level == "quick" ? VerifyLevel::Quick : VerifyLevel::Full;
}

void emit(const CommonOpts& o, const Json& report, const StabilityGraph* graph) {
  if (o.format == "json") {
    write_output(o.out_path, report.dump(2) + "\n");
  } else if (o.format == "text") {
    write_output(o.out_path, tropmod::cli::render_text(report));
  } else if (o.format == "tsv") {
    write_output(o.out_path, tropmod::cli::render_tsv(report));
  } else {
    if (!graph) tropmod::fail(Errc::ParseError, "dot output needs a graph command");
    write_output(o.out_path, tropmod::cli::render_dot(*graph));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boundary combinatorics and tropical fans of graphically stable curve moduli"};
  app.require_subcommand(1);

  CommonOpts classify_opts, fan_opts, trop_opts, survey_opts;
  std::string family_file;
  int survey_n = 5;
  long long survey_limit = 0;
  uint64_t seed = 12345;

  CLI::App* classify = app.add_subcommand("classify", "multipartite / injectivity / embedding verdicts");
  add_common(classify, classify_opts, true);

  CLI::App* fan = app.add_subcommand("fan", "divisors, boundary complex, weighted fan, balancing");
  add_common(fan, fan_opts, true);

  CLI::App* trop = app.add_subcommand("tropicalize", "valuation vector of a degenerating point family");
  add_common(trop, trop_opts, true);
  trop->add_option("--family", family_file, "point family file, one point per line")->required();

  CLI::App* survey = app.add_subcommand("survey", "exhaustive classification cross-check");
  survey_opts.level = "quick";  // face compatibility on every n=6 graph takes minutes
  add_common(survey, survey_opts, false);
  survey->add_option("--n", survey_n, "marking count, 4..6")->required();
  survey->add_option("--limit", survey_limit, "cap the number of graphs (0 = all)");
  survey->add_option("--seed", seed, "seed for the graph sample when --limit is set");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    auto started = std::chrono::steady_clock::now();
    if (classify->parsed()) {
      StabilityGraph g = load_graph(classify_opts);
      emit(classify_opts, tropmod::cli::classify_report(g, level_of(classify_opts)), &g);
    } else if (fan->parsed()) {
      StabilityGraph g = load_graph(fan_opts);
      emit(fan_opts, tropmod::cli::fan_report(g), &g);
    } else if (trop->parsed()) {
      StabilityGraph g = load_graph(trop_opts);
      emit(trop_opts, tropmod::cli::tropicalize_report(g, read_file(family_file)), &g);
    } else if (survey->parsed()) {
      emit(survey_opts,
           tropmod::cli::survey_report(survey_n, survey_limit, level_of(survey_opts), seed),
           nullptr);
    }
    auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed_ms " << elapsed.count() << "\n";
  } catch (const Error& e) {
    Json diag;
    diag["schema"] = tropmod::cli::kSchema;
    diag["error"] = tropmod::errc_name(e.code());
    diag["message"] = e.what();
    std::cerr << diag.dump(2) << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": \"Unhandled\", \"message\": \"" << e.what() << "\"}\n";
    return 3;
  }
  return 0;
}
