#include "toricgraph/graph.hpp"
#include "toricgraph/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

namespace tg = toricgraph;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNotNormal = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int parse_int(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

std::vector<int> parse_list(const std::vector<std::string>& args) {
  std::vector<int> out;
  for (const auto& a : args) {
    std::stringstream ss(a);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) out.push_back(parse_int(item));
  }
  return out;
}

// "a..b" or "a..b:step"; a single integer is a one-element range
std::vector<int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) return {parse_int(s)};
  const auto colon = s.find(':', dots);
  const int lo = parse_int(s.substr(0, dots));
  const int hi = parse_int(s.substr(dots + 2, colon == std::string::npos ? std::string::npos : colon - dots - 2));
  const int step = colon == std::string::npos ? 1 : parse_int(s.substr(colon + 1));
  if (step < 1 || hi < lo) throw UsageError("bad range '" + s + "'");
  std::vector<int> out;
  for (int v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

struct AnalyzeArgs {
  std::string path;
  bool json = false;
  bool verify = false;
  std::optional<int> omega_max_deg;
  bool no_canonical = false;
  std::vector<std::string> sections;
};

int cmd_analyze(const AnalyzeArgs& a) {
  for (const auto& s : a.sections)
    if (std::find(std::begin(tg::kReportSections), std::end(tg::kReportSections), s) ==
        std::end(tg::kReportSections))
      throw UsageError("unknown section '" + s + "'");

  const auto g = tg::parse_graph(read_input(a.path));
  tg::AnalysisOptions opts;
  opts.verify = a.verify;
  opts.omega_max_degree = a.omega_max_deg;
  opts.canonical = !a.no_canonical;
  auto report = tg::analyze(g, opts);

  tg::Json shown = report;
  if (!a.sections.empty()) {
    shown = tg::Json::object();
    for (const char* key : tg::kReportSections)
      if (std::find(a.sections.begin(), a.sections.end(), key) != a.sections.end()) shown[key] = report[key];
    tg::Json reasons = tg::Json::object();
    for (const auto& [k, v] : report["null_reasons"].items())
      if (shown.contains(k)) reasons[k] = v;
    shown["null_reasons"] = reasons;
  }
  std::cout << (a.json ? shown.dump(2) + "\n" : tg::render_text(shown));

  const bool normal = report["normality"]["normal"].get<bool>();
  const bool wanted = std::any_of(a.sections.begin(), a.sections.end(),
                                  [](const std::string& s) { return tg::section_requires_normality(s); });
  if (!normal && wanted) {
    std::cerr << "error: R_G is not normal; requested sections are unavailable\n";
    return kExitNotNormal;
  }
  return 0;
}

int cmd_family(const std::string& name, const std::vector<std::string>& params) {
  std::cout << tg::format_graph(tg::make_family(name, parse_list(params)));
  return 0;
}

struct SweepArgs {
  std::string family;
  std::vector<std::string> ranges;
  bool json = false;
  bool no_canonical = false;
  bool verify = false;
  int k = 3;
  int max_whiskers = 3;
  int jobs = 1;
};

int cmd_sweep(const SweepArgs& a) {
  std::vector<tg::SweepInstance> instances;
  auto add = [&](const std::vector<int>& params) {
    instances.push_back({tg::family_instance_name(a.family, params), tg::make_family(a.family, params)});
  };
  if (a.family == "whiskered") {
    if (!a.ranges.empty()) throw UsageError("sweep whiskered takes --k and --max-whiskers, not ranges");
    for (const auto& seq : tg::whisker_sequences(a.k, a.max_whiskers)) add(seq);
  } else if (a.family == "complete_bipartite") {
    if (a.ranges.size() != 2) throw UsageError("sweep complete_bipartite takes two ranges (m and n)");
    for (int m : parse_range(a.ranges[0]))
      for (int n : parse_range(a.ranges[1]))
        if (m <= n) add({m, n});
  } else {
    if (a.ranges.size() != 1) throw UsageError("sweep " + a.family + " takes one range");
    for (int k : parse_range(a.ranges[0])) add({k});
  }

  tg::AnalysisOptions opts;
  opts.canonical = !a.no_canonical;
  opts.verify = a.verify;
  int jobs = a.jobs;
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const auto table = tg::sweep(instances, opts, jobs);
  std::cout << (a.json ? tg::sweep_json(table).dump(2) + "\n" : tg::sweep_csv(table));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisorial data of the toric ring K[t, x_i t, x_i x_j t] of a graph"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "full analysis of an edge-list file ('-' for stdin)");
  analyze->add_option("file", an.path, "edge-list file")->required();
  analyze->add_flag("--json", an.json, "emit JSON");
  analyze->add_flag("--verify", an.verify, "run brute-force cross-checks");
  analyze->add_option("--omega-max-deg", an.omega_max_deg, "degree bound for omega generators (default n+2)");
  analyze->add_flag("--no-canonical", an.no_canonical, "skip the canonical-module enumeration");
  analyze->add_option("--section", an.sections, "only print these report sections");

  std::string fam_name;
  std::vector<std::string> fam_params;
  auto* family = app.add_subcommand("family", "print a named graph family as an edge list");
  family->add_option("name", fam_name, "cycle | path | complete_bipartite | whiskered")->required();
  family->add_option("params", fam_params, "k | k | m n | a_1,...,a_k")->required();

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "one report row per family member");
  sweep->add_option("family", sw.family, "cycle | path | complete_bipartite | whiskered")->required();
  sweep->add_option("ranges", sw.ranges, "lo..hi[:step]");
  sweep->add_flag("--json", sw.json, "emit JSON instead of CSV");
  sweep->add_flag("--no-canonical", sw.no_canonical, "skip the canonical-module enumeration");
  sweep->add_flag("--verify", sw.verify, "run brute-force cross-checks per row");
  sweep->add_option("--k", sw.k, "cycle length for whiskered sweeps");
  sweep->add_option("--max-whiskers", sw.max_whiskers, "bound on the total number of whiskers");
  sweep->add_option("--jobs,-j", sw.jobs, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    if (*analyze) return cmd_analyze(an);
    if (*family) return cmd_family(fam_name, fam_params);
    return cmd_sweep(sw);
  } catch (const tg::GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
