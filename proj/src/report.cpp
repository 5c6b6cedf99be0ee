#include "toricgraph/report.hpp"

#include "toricgraph/canonical.hpp"
#include "toricgraph/divisor.hpp"
#include "toricgraph/normality.hpp"
#include "toricgraph/oracle.hpp"
#include "toricgraph/primes.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace toricgraph {
namespace {

Json int_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Json vec_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(int_json(x));
  return out;
}

template <class T>
Json opt_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json monomial_json(const SemigroupMonomial& m) {
  return Json{{"exps", m.exps}, {"t_deg", m.t_deg}};
}

Json oracle_json(const OracleReport& r) {
  return Json{{"subject", r.subject},
              {"agreement", r.agreement},
              {"skipped", r.skipped},
              {"discrepancy", opt_json(r.discrepancy)},
              {"note", opt_json(r.note)}};
}

Json graph_section(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  const auto unmixed = is_unmixed(g);
  Json shape = nullptr;
  if (auto w = recognize_whiskered_cycle(g)) shape = Json{{"k", w->k}, {"a", w->a}};
  const bool connected = is_connected(g);
  return Json{{"n", g.num_vertices()},
              {"num_edges", g.num_edges()},
              {"edges", edges},
              {"components", connected_components(g)},
              {"connected", connected},
              {"bipartite", bipartition(g).bipartite},
              {"unicyclic", is_unicyclic(g)},
              {"whiskered_shape", shape},
              {"unmixed", unmixed.unmixed},
              {"cover_sizes", unmixed.cover_sizes},
              {"odd_cycle_condition", odd_cycle_condition(g)},
              {"dominated_odd_cycle_condition",
               connected ? Json(dominated_odd_cycle_condition(g)) : Json(nullptr)}};
}

Json normality_section(const Graph& g, const NormalityVerdict& v) {
  Json witness = nullptr;
  if (v.witness) witness = Json::array({v.witness->first, v.witness->second});
  return Json{{"normal", v.normal},
              {"reason", to_string(v.reason)},
              {"witness", witness},
              {"zero_prime_supporting", p0_supporting_check(g)}};
}

Json primes_section(const Graph& g, const std::vector<ClassifiedPrime>& primes) {
  Json counts{{"cover", 0}, {"zero", 0}, {"exceptional", 0}, {"variable", 0}};
  Json list = Json::array();
  std::size_t with_t = 0;
  for (const auto& p : primes) {
    counts[p.kind.name()] = counts[p.kind.name()].get<int>() + 1;
    with_t += p.prime.contains_t;
    Json faces = Json::array();
    for (const auto& f : p.prime.generator_faces) faces.push_back(f.str());
    list.push_back(Json{{"kind", p.kind.name()},
                        {"label", p.kind.str()},
                        {"form", vec_json(p.prime.form.coeffs())},
                        {"contains_t", p.prime.contains_t},
                        {"generators", faces}});
  }
  Json prediction = nullptr;
  if (is_connected(g)) {
    const auto pred = predicted_prime_set(g);
    prediction = Json{{"theorem", pred.theorem_tag},
                      {"exact", pred.exact},
                      {"prime_set_equals_prediction", prime_set_equals_prediction(primes, pred)},
                      {"prime_set_includes_prediction", prime_set_includes_prediction(primes, pred)}};
  }
  return Json{{"count", primes.size()},
              {"num_t_primes", with_t},
              {"counts", counts},
              {"list", list},
              {"prediction", prediction}};
}

Json oracle_section(const Graph& g, bool normal, int omega_bound) {
  const int n = g.num_vertices();
  Json out;
  out["facets"] = oracle_json(check_facets(g));
  if (n <= 20) out["minimal_covers"] = oracle_json(check_minimal_covers(g));
  else out["minimal_covers"] = Json{{"subject", "minimal_covers"}, {"skipped", true}};
  out["normality"] = oracle_json(check_normality(g, n <= 8 ? 5 : 3));
  if (normal && n <= 7) out["prime_closure"] = oracle_json(check_prime_closure(g, 3));
  else out["prime_closure"] = nullptr;
  if (normal && n <= 7) out["omega_hilbert"] = oracle_json(check_omega_hilbert(g, std::min(omega_bound, 5)));
  else out["omega_hilbert"] = nullptr;
  return out;
}

}  // namespace

bool section_requires_normality(const std::string& section) {
  return section == "primes" || section == "class_group" || section == "canonical_class" ||
         section == "gorenstein" || section == "pseudo_gorenstein" || section == "omega_generators";
}

Json analyze(const Graph& g, const AnalysisOptions& opts) {
  const int n = g.num_vertices();
  const int omega_bound = opts.omega_max_degree.value_or(n + 2);
  if (omega_bound < 0) throw std::invalid_argument("omega bound must be nonnegative");

  Json report;
  Json reasons = Json::object();
  report["graph"] = graph_section(g);
  const auto verdict = is_normal(g);
  report["normality"] = normality_section(g, verdict);

  if (!verdict.normal) {
    const std::string why = "R_G is not normal (" + to_string(verdict.reason) + ")";
    for (const char* s : kReportSections)
      if (section_requires_normality(s)) {
        report[s] = nullptr;
        reasons[s] = why;
      }
  } else {
    const auto cone = ToricCone::build(g);
    const auto primes = height_one_primes(cone);
    report["primes"] = primes_section(g, primes);

    const auto forms = t_prime_forms(primes);
    const auto cl = class_group(forms);
    report["class_group"] = Json{{"r", cl.r},
                                 {"relation", vec_json(cl.relation)},
                                 {"rank", cl.rank},
                                 {"relation_invariants", vec_json(cl.relation_invariants)}};

    const auto kappa = canonical_class(forms);
    DivisorClass sum{IntVector(cl.r, Integer(1))};
    for (int j = 1; j <= n; ++j) sum = sum + q_class(j, forms);
    report["canonical_class"] = Json{{"kappa", vec_json(kappa.coeffs)},
                                     {"equals_sum_of_prime_classes", equivalent(kappa, sum, cl)}};

    const auto gor = is_gorenstein(g, primes);
    report["gorenstein"] = Json{{"gorenstein", gor.gorenstein},
                                {"a", gor.a ? int_json(*gor.a) : Json(nullptr)},
                                {"bipartite_fast_path", opt_json(gor.bipartite_fast_path)},
                                {"odd_cycle_fast_path", opt_json(gor.odd_cycle_fast_path)},
                                {"fast_paths_agree", gor.fast_paths_agree}};

    if (!opts.canonical) {
      report["pseudo_gorenstein"] = nullptr;
      report["omega_generators"] = nullptr;
      reasons["pseudo_gorenstein"] = "skipped (--no-canonical)";
      reasons["omega_generators"] = "skipped (--no-canonical)";
    } else {
      const auto pg = is_pseudo_gorenstein(cone);
      report["pseudo_gorenstein"] = Json{{"pseudo_gorenstein", pg.pseudo_gorenstein},
                                         {"initial_degree", pg.initial_degree},
                                         {"slice_count", pg.slice_count}};
      const auto om = omega_generators(cone, omega_bound);
      Json gens = Json::array();
      for (const auto& m : om.generators) gens.push_back(monomial_json(m));
      report["omega_generators"] = Json{{"max_degree", om.max_degree},
                                        {"truncated", om.truncated},
                                        {"count", om.generators.size()},
                                        {"generators", gens}};
    }
  }

  if (opts.verify) {
    report["verification"] = oracle_section(g, verdict.normal, omega_bound);
  } else {
    report["verification"] = nullptr;
    reasons["verification"] = "not requested (--verify)";
  }
  report["null_reasons"] = reasons;
  return report;
}

namespace {

bool is_scalar_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) {
           return e.is_primitive() || (e.is_array() && std::all_of(e.begin(), e.end(),
                                                                   [](const Json& x) { return x.is_primitive(); }));
         });
}

void render(std::ostringstream& out, const Json& j, int depth) {
  const std::string pad(2 * depth, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() && value.empty()) {
      out << pad << key << ": {}\n";
    } else if (value.is_object()) {
      out << pad << key << ":\n";
      render(out, value, depth + 1);
    } else if (value.is_array() && !is_scalar_array(value)) {
      out << pad << key << ":\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          std::ostringstream sub;
          render(sub, item, depth + 2);
          std::string body = sub.str();
          body.replace(0, pad.size() + 4, pad + "  - ");
          out << body;
        } else {
          out << pad << "  - " << item.dump() << '\n';
        }
      }
    } else {
      out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

Graph make_family(const std::string& name, const std::vector<int>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument("family " + name + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (name == "cycle") {
    need(1);
    if (params[0] < 3) throw std::invalid_argument("family cycle: k must be at least 3");
    return cycle_graph(params[0]);
  }
  if (name == "path") {
    need(1);
    if (params[0] < 2) throw std::invalid_argument("family path: k must be at least 2");
    return path_graph(params[0]);
  }
  if (name == "complete_bipartite") {
    need(2);
    if (params[0] < 1 || params[1] < 1)
      throw std::invalid_argument("family complete_bipartite: m and n must be positive");
    return complete_bipartite_graph(params[0], params[1]);
  }
  if (name == "whiskered") {
    if (params.size() < 3) throw std::invalid_argument("family whiskered: need at least 3 cycle vertices");
    for (int a : params)
      if (a < 0) throw std::invalid_argument("family whiskered: whisker counts must be nonnegative");
    return whiskered_cycle(params);
  }
  throw std::invalid_argument("unknown family '" + name +
                              "' (expected cycle, path, complete_bipartite or whiskered)");
}

std::string family_instance_name(const std::string& name, const std::vector<int>& params) {
  std::string out = name;
  const char* sep = " ";
  for (int p : params) {
    out += sep + std::to_string(p);
    sep = name == "whiskered" ? "," : " ";
  }
  return out;
}

std::vector<std::vector<int>> whisker_sequences(int k, int max_total) {
  if (k < 3) throw std::invalid_argument("whisker_sequences: k must be at least 3");
  std::vector<std::vector<int>> out;
  std::vector<int> a(k, 0);
  auto canonical = [&](const std::vector<int>& s) {
    for (int r = 0; r < k; ++r)
      for (int dir : {1, -1}) {
        std::vector<int> t(k);
        for (int i = 0; i < k; ++i) t[i] = s[((r + dir * i) % k + k) % k];
        if (t < s) return false;
      }
    return true;
  };
  auto rec = [&](auto& self, int i, int left) -> void {
    if (i == k) {
      if (canonical(a)) out.push_back(a);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      a[i] = v;
      self(self, i + 1, left - v);
    }
    a[i] = 0;
  };
  rec(rec, 0, max_total);
  return out;
}

Json sweep_row(const std::string& name, const Json& report) {
  const Json& g = report["graph"];
  const Json& primes = report["primes"];
  const Json& gor = report["gorenstein"];
  const Json& pg = report["pseudo_gorenstein"];
  auto field = [](const Json& section, const char* key) {
    return section.is_null() ? Json(nullptr) : section[key];
  };
  auto count = [&](const char* kind) { return primes.is_null() ? Json(nullptr) : primes["counts"][kind]; };
  const Json pred = primes.is_null() ? Json(nullptr) : primes["prediction"];
  Json row;
  row["instance"] = name;
  row["n"] = g["n"];
  row["num_edges"] = g["num_edges"];
  row["connected"] = g["connected"];
  row["bipartite"] = g["bipartite"];
  row["unicyclic"] = g["unicyclic"];
  row["whiskered"] = !g["whiskered_shape"].is_null();
  row["normal"] = report["normality"]["normal"];
  row["num_primes"] = field(primes, "count");
  row["num_t_primes"] = field(primes, "num_t_primes");
  row["cover_primes"] = count("cover");
  row["zero_primes"] = count("zero");
  row["exceptional_primes"] = count("exceptional");
  row["unmixed"] = g["unmixed"];
  row["gorenstein"] = field(gor, "gorenstein");
  row["a"] = field(gor, "a");
  row["pseudo_gorenstein"] = field(pg, "pseudo_gorenstein");
  row["initial_degree"] = field(pg, "initial_degree");
  row["dominated_odd_cycle_condition"] = g["dominated_odd_cycle_condition"];
  row["prediction_tag"] = field(pred, "theorem");
  row["prime_set_equals_prediction"] = field(pred, "prime_set_equals_prediction");
  return row;
}

SweepTable sweep(const std::vector<SweepInstance>& instances, const AnalysisOptions& opts, int jobs) {
  SweepTable table;
  table.rows.resize(instances.size());
  const std::size_t width = static_cast<std::size_t>(std::max(jobs, 1));
  for (std::size_t start = 0; start < instances.size(); start += width) {
    const std::size_t stop = std::min(instances.size(), start + width);
    std::vector<std::future<Json>> batch;
    for (std::size_t i = start; i < stop; ++i)
      batch.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred, [&, i] {
        return sweep_row(instances[i].name, analyze(instances[i].graph, opts));
      }));
    for (std::size_t i = start; i < stop; ++i) table.rows[i] = batch[i - start].get();
  }
  return table;
}

std::string sweep_csv(const SweepTable& table) {
  std::ostringstream out;
  const char* sep = "";
  for (const char* c : kSweepColumns) {
    out << sep << c;
    sep = ",";
  }
  out << '\n';
  for (const auto& row : table.rows) {
    sep = "";
    for (const char* c : kSweepColumns) {
      const Json& v = row[c];
      out << sep;
      if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s.find_first_of(",\"") == std::string::npos) {
          out << s;
        } else {
          out << '"';
          for (char ch : s) out << (ch == '"' ? "\"\"" : std::string(1, ch));
          out << '"';
        }
      } else if (!v.is_null()) {
        out << v.dump();
      }
      sep = ",";
    }
    out << '\n';
  }
  return out.str();
}

Json sweep_json(const SweepTable& table) {
  Json rows = Json::array();
  for (const auto& r : table.rows) rows.push_back(r);
  return Json{{"columns", kSweepColumns}, {"rows", rows}};
}

}  // namespace toricgraph
