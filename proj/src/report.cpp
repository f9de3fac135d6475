#include "engel/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace engel {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

json config_json(const RunConfig& cfg) {
  json j;
  j["command"] = cfg.command;
  j["groups"] = cfg.groups;
  j["zoo"] = cfg.zoo;
  if (cfg.command == "verify") j["suite"] = cfg.suite;
  if (cfg.command == "search") j["predicate"] = cfg.predicate;
  j["max_n"] = cfg.max_n;
  j["cap"] = cfg.cap;
  j["samples"] = cfg.samples;
  j["format"] = cfg.format;
  return j;
}

json meta_json(const RunConfig& cfg) {
  json j;
  j["version"] = kVersion;
  j["seed"] = cfg.seed;
  j["config"] = config_json(cfg);
  return j;
}

// Element sets are emitted as sorted label arrays to keep reports diffable.
json label_set(const FiniteGroup& G, const std::vector<Element>& elems) {
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (Element e : elems) labels.push_back(G.label(e));
  std::sort(labels.begin(), labels.end());
  return json(labels);
}

json series_json(const SeriesResult& s) {
  json j;
  std::vector<int> sizes;
  for (const Subgroup& t : s.terms) sizes.push_back(t.size());
  j["sizes"] = sizes;
  j["stabilized"] = s.stabilized;
  j["length"] = s.length;
  return j;
}

json structure_json(GroupAnalysis& A) {
  const FiniteGroup& G = A.group();
  json j;
  auto cls = A.nilpotency_class();
  auto dl = A.derived_length();
  j["nilpotent"] = cls.has_value();
  j["nilpotency_class"] = cls ? json(*cls) : json(nullptr);
  j["soluble"] = dl.has_value();
  j["derived_length"] = dl ? json(*dl) : json(nullptr);
  j["exponent"] = group_exponent(G);
  j["center"] = label_set(G, A.zeta(1));
  j["hypercenter"] = label_set(G, A.hypercenter_elements());
  json series;
  series["upper_central"] = series_json(A.upper_central());
  series["lower_central"] = series_json(A.lower_central());
  series["derived"] = series_json(A.derived_series());
  j["series"] = series;
  json rad;
  rad["fitting"] = label_set(G, A.radicals().fitting.elements);
  rad["baer"] = label_set(G, A.radicals().baer.elements);
  rad["gruenberg"] = label_set(G, A.radicals().gruenberg.elements);
  rad["hirsch_plotkin"] = label_set(G, A.radicals().hirsch_plotkin.elements);
  j["radicals"] = rad;
  return j;
}

json engel_json(GroupAnalysis& A) {
  const FiniteGroup& G = A.group();
  const EngelReport& e = A.engel();
  json j;
  j["max_n"] = e.max_n;
  json left, right;
  left["set"] = label_set(G, e.left_set);
  left["bounded"] = label_set(G, e.bounded_left);
  json llev, rlev;
  for (int k = 1; k <= e.max_n; ++k) {
    llev[std::to_string(k)] = label_set(G, e.left_levels[k - 1]);
    rlev[std::to_string(k)] = label_set(G, e.right_levels[k - 1]);
  }
  left["levels"] = llev;
  right["set"] = label_set(G, e.right_set);
  right["bounded"] = label_set(G, e.bounded_right);
  right["levels"] = rlev;
  j["left"] = left;
  j["right"] = right;
  j["rho"] = label_set(G, A.rho());
  j["rho_bar"] = label_set(G, A.rho_bar());
  json elems = json::array();
  for (Element x = 0; x < G.order(); ++x) {
    json el;
    el["label"] = G.label(x);
    el["left_engel"] = e.left_length[x] >= 0;
    el["left_length"] = e.left_length[x] >= 0 ? json(e.left_length[x]) : json(nullptr);
    el["right_engel"] = e.right_length[x] >= 0;
    el["right_length"] =
        e.right_length[x] >= 0 ? json(e.right_length[x]) : json(nullptr);
    elems.push_back(el);
  }
  j["elements"] = elems;
  return j;
}

json check_json(const CheckResult& r) {
  json j;
  j["id"] = r.id;
  j["outcome"] = outcome_name(r.outcome);
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.detail.empty()) j["detail"] = r.detail;
  json stats;
  stats["examined"] = r.stats.examined;
  stats["sampled"] = r.stats.sampled;
  stats["seed"] = r.stats.seed;
  if (!r.stats.note.empty()) stats["note"] = r.stats.note;
  j["stats"] = stats;
  return j;
}

std::vector<GroupSpec> zoo_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open zoo file '" + path + "'");
  std::vector<GroupSpec> zoo;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || line[first] == '#') continue;
    zoo.push_back(parse_group_spec(line));
  }
  if (zoo.empty()) throw usage_error("zoo file '" + path + "' lists no groups");
  return zoo;
}

}  // namespace

AnalysisOptions analysis_options(const RunConfig& cfg) {
  AnalysisOptions opts;
  opts.build.cap = cfg.cap;
  opts.build.samples = cfg.samples;
  opts.build.seed = cfg.seed;
  opts.max_n = cfg.max_n;
  opts.samples = cfg.samples;
  opts.seed = cfg.seed;
  return opts;
}

CheckOptions check_options(const RunConfig& cfg) {
  CheckOptions opts;
  opts.samples = cfg.samples;
  opts.seed = cfg.seed;
  opts.max_n = cfg.max_n;
  return opts;
}

std::vector<GroupSpec> resolve_zoo(const RunConfig& cfg) {
  if (!cfg.groups.empty()) {
    std::vector<GroupSpec> specs;
    for (const std::string& g : cfg.groups) specs.push_back(parse_group_spec(g));
    return specs;
  }
  if (cfg.zoo == "default") {
    return cfg.command == "search" ? default_search_zoo() : default_zoo_full();
  }
  return zoo_from_file(cfg.zoo);
}

RunResult run_analyze(const RunConfig& cfg) {
  RunResult res;
  res.json["meta"] = meta_json(cfg);
  json groups = json::array();
  std::vector<GroupSpec> specs = resolve_zoo(cfg);
  AnalysisOptions opts = analysis_options(cfg);
  for (const GroupSpec& spec : specs) {
    GroupAnalysis A(spec, opts);  // black-box specs throw capacity_error
    json g;
    g["spec"] = spec.to_string();
    g["order"] = A.group().order();
    g["validation"] = A.group().validation_note();
    g["structure"] = structure_json(A);
    g["engel"] = engel_json(A);
    g["checks"] = json::array();
    groups.push_back(std::move(g));
  }
  res.json["groups"] = groups;
  return res;
}

RunResult run_verify(const RunConfig& cfg) {
  RunResult res;
  res.json["meta"] = meta_json(cfg);
  json groups = json::array();

  std::vector<std::string> suite;
  if (cfg.suite == "all") {
    suite = check_catalog();
  } else {
    if (!check_exists(cfg.suite))
      throw usage_error("unknown check id '" + cfg.suite + "'");
    suite = {cfg.suite};
  }

  std::vector<GroupSpec> specs = resolve_zoo(cfg);
  AnalysisOptions aopts = analysis_options(cfg);
  CheckOptions copts = check_options(cfg);
  bool any_fail = false;

  for (const GroupSpec& spec : specs) {
    json g;
    g["spec"] = spec.to_string();
    json checks = json::array();
    if (spec.is_black_box()) {
      auto M = make_gupta_levin(spec, aopts.build);
      g["order"] = nullptr;
      for (const std::string& id : suite) {
        CheckResult r = run_check(id, *M, copts);
        any_fail |= r.outcome == Outcome::fail;
        checks.push_back(check_json(r));
      }
    } else {
      GroupAnalysis A(spec, aopts);
      g["order"] = A.group().order();
      for (const std::string& id : suite) {
        CheckResult r = run_check(id, A, copts);
        any_fail |= r.outcome == Outcome::fail;
        checks.push_back(check_json(r));
      }
    }
    g["checks"] = std::move(checks);
    groups.push_back(std::move(g));
  }
  res.json["groups"] = groups;
  res.exit_code = any_fail ? 1 : 0;
  return res;
}

RunResult run_search(const RunConfig& cfg) {
  RunResult res;
  res.json["meta"] = meta_json(cfg);
  std::vector<GroupSpec> zoo = resolve_zoo(cfg);
  auto found = search_witness(cfg.predicate, zoo, analysis_options(cfg));
  json s;
  s["predicate"] = cfg.predicate;
  s["found"] = found.has_value();
  if (found) {
    s["group"] = found->group_name;
    s["witness"] = found->witness;
    s["detail"] = found->detail;
  }
  res.json["search"] = s;
  return res;
}

namespace {

std::string render_text(const RunResult& result) {
  std::ostringstream os;
  const json& j = result.json;
  os << "engel-lab " << j["meta"]["version"].get<std::string>()
     << " (seed " << j["meta"]["seed"] << ")\n";
  if (j.contains("search")) {
    const json& s = j["search"];
    os << "search " << s["predicate"].get<std::string>() << ": ";
    if (s["found"].get<bool>()) {
      os << "witness " << s["witness"].dump() << " in "
         << s["group"].get<std::string>() << " (" << s["detail"].get<std::string>()
         << ")\n";
    } else {
      os << "no witness in the searched zoo (absence is not a refutation)\n";
    }
    return os.str();
  }
  for (const json& g : j["groups"]) {
    os << "== " << g["spec"].get<std::string>();
    if (!g["order"].is_null()) os << "  order " << g["order"];
    os << "\n";
    if (g.contains("structure")) {
      const json& st = g["structure"];
      os << "   nilpotent: " << (st["nilpotent"].get<bool>() ? "yes" : "no");
      if (!st["nilpotency_class"].is_null())
        os << " (class " << st["nilpotency_class"] << ")";
      os << ", soluble: " << (st["soluble"].get<bool>() ? "yes" : "no");
      if (!st["derived_length"].is_null())
        os << " (derived length " << st["derived_length"] << ")";
      os << "\n   |center| = " << st["center"].size()
         << ", |hypercenter| = " << st["hypercenter"].size()
         << ", |Fitt| = " << st["radicals"]["fitting"].size() << "\n";
    }
    if (g.contains("engel")) {
      const json& e = g["engel"];
      os << "   |L| = " << e["left"]["set"].size()
         << ", |R| = " << e["right"]["set"].size()
         << ", |L2| = " << e["left"]["levels"]["2"].size()
         << ", |rho| = " << e["rho"].size() << "\n";
    }
    for (const json& c : g["checks"]) {
      os << "   [" << c["outcome"].get<std::string>() << "] "
         << c["id"].get<std::string>();
      if (c.contains("detail")) os << " - " << c["detail"].get<std::string>();
      if (c.contains("witness")) os << " witness " << c["witness"].dump();
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace

std::string render(const RunResult& result, const RunConfig& cfg) {
  if (cfg.format == "text") return render_text(result);
  return result.json.dump(2) + "\n";
}

}  // namespace engel
