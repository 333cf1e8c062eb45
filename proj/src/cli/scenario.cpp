#include "quermass/cli/scenario.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include "quermass/cli/body_io.hpp"
#include "quermass/cli/corpus.hpp"
#include "quermass/core/parallel.hpp"
#include "quermass/verify/context.hpp"

namespace quermass {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& s : items) out += (out.empty() ? "" : "\n") + s;
  return out;
}

std::uint64_t env_seed() {
  if (const char* env = std::getenv("QUERMASS_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
    }
  }
  return 0;
}

struct Parser {
  std::vector<std::string> problems;

  void add(const std::string& path, const std::string& what) { problems.push_back(path + ": " + what); }

  template <class T>
  bool read_uint(const json& doc, const char* key, const std::string& path, T& out) {
    if (!doc.contains(key)) return false;
    const json& v = doc.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      add(path + "." + key, "expected a non-negative integer");
      return false;
    }
    out = static_cast<T>(v.get<long long>());
    return true;
  }

  ParamSweep sweep(const json& doc, const char* key, const std::string& path, bool allow_n_plus) {
    ParamSweep s;
    if (!doc.contains(key)) return s;
    const json& v = doc.at(key);
    const std::string p = path + "." + key;
    if (v.is_number_integer()) {
      s.kind = ParamSweep::Kind::values;
      s.values.push_back(v.get<int>());
    } else if (v.is_array()) {
      s.kind = ParamSweep::Kind::values;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_integer()) {
          add(p + "[" + std::to_string(i) + "]", "expected an integer");
          continue;
        }
        s.values.push_back(v[i].get<int>());
      }
    } else if (v.is_string() && v.get<std::string>() == "all") {
      s.kind = ParamSweep::Kind::all;
    } else if (allow_n_plus && v.is_string() && v.get<std::string>().rfind("n+", 0) == 0) {
      try {
        s.offset = std::stoi(v.get<std::string>().substr(2));
        s.kind = ParamSweep::Kind::n_plus;
      } catch (...) {
        add(p, "expected n+<integer>");
      }
    } else {
      add(p, allow_n_plus ? "expected an integer, a list, \"all\" or \"n+<c>\"" : "expected an integer, a list or \"all\"");
    }
    return s;
  }
};

std::vector<ConvexBody> parse_body_entry(const json& entry, const std::string& path, const std::string& base_dir,
                                         Parser& parser) {
  try {
    if (entry.is_object()) return {body_from_json(entry, path)};
    if (entry.is_string()) {
      const std::string s = entry.get<std::string>();
      if (s.rfind("corpus:", 0) == 0) return resolve_corpus_entry(s.substr(7));
      const std::string file = s.rfind("file:", 0) == 0 ? s.substr(5) : s;
      const std::filesystem::path fp(file);
      return {load_body_file(fp.is_absolute() ? fp.string() : (std::filesystem::path(base_dir) / fp).string())};
    }
    parser.add(path, "expected a body object or a \"corpus:\"/\"file:\" string");
  } catch (const ValidationError& e) {
    parser.add(path, e.what());
  } catch (const std::exception& e) {
    parser.add(path, e.what());
  }
  return {};
}

std::vector<int> values_for(const ParamSweep& s, int lo, int hi, int n) {
  switch (s.kind) {
    case ParamSweep::Kind::unset:
      return {-1};
    case ParamSweep::Kind::values:
      return s.values;
    case ParamSweep::Kind::all: {
      std::vector<int> out;
      for (int v = lo; v <= hi; ++v) out.push_back(v);
      return out;
    }
    case ParamSweep::Kind::n_plus:
      return {n + s.offset};
  }
  return {-1};
}

bool has_flag(const CheckSpec& spec, const ConvexBody& k) {
  switch (spec.body) {
    case BodyRequirement::symmetric:
      return k.flags.symmetric;
    case BodyRequirement::centered:
      return k.flags.centered;
    case BodyRequirement::polytope:
      return k.is_polytope() || std::holds_alternative<Box>(k.rep());
    case BodyRequirement::none:
      return true;
  }
  return true;
}

}  // namespace

ScenarioError::ScenarioError(std::vector<std::string> problems)
    : ValidationError(join(problems)), problems_(std::move(problems)) {}

Scenario parse_scenario(const json& doc, const std::string& base_dir) {
  Parser parser;
  Scenario sc;
  if (!doc.is_object()) throw ScenarioError({"scenario: expected an object"});
  if (doc.contains("name")) sc.name = doc.at("name").is_string() ? doc.at("name").get<std::string>() : "";
  sc.seed = env_seed();
  parser.read_uint(doc, "seed", "scenario", sc.seed);

  if (doc.contains("bodies")) {
    const json& bodies = doc.at("bodies");
    if (!bodies.is_array()) {
      parser.add("bodies", "expected an array");
    } else {
      for (std::size_t i = 0; i < bodies.size(); ++i) {
        for (ConvexBody& k : parse_body_entry(bodies[i], "bodies[" + std::to_string(i) + "]", base_dir, parser)) {
          sc.bodies.push_back(std::move(k));
        }
      }
    }
  }

  if (doc.contains("budgets")) {
    const json& b = doc.at("budgets");
    if (!b.is_object()) {
      parser.add("budgets", "expected an object");
    } else {
      parser.read_uint(b, "flats", "budgets", sc.budgets.flats);
      parser.read_uint(b, "tuples", "budgets", sc.budgets.tuples);
      parser.read_uint(b, "constants", "budgets", sc.budgets.constants);
      parser.read_uint(b, "reference", "budgets", sc.budgets.reference);
      parser.read_uint(b, "inner", "budgets", sc.budgets.inner);
      parser.read_uint(b, "trials", "budgets", sc.budgets.trials);
      parser.read_uint(b, "offsets", "budgets", sc.budgets.offsets);
    }
  }

  if (doc.contains("skip_ineligible")) {
    if (!doc.at("skip_ineligible").is_boolean()) {
      parser.add("skip_ineligible", "expected a boolean");
    } else {
      sc.skip_ineligible = doc.at("skip_ineligible").get<bool>();
    }
  }

  if (doc.contains("output")) {
    const json& o = doc.at("output");
    if (!o.is_object()) {
      parser.add("output", "expected an object");
    } else {
      if (o.contains("path")) {
        if (o.at("path").is_string()) {
          sc.output = o.at("path").get<std::string>();
        } else {
          parser.add("output.path", "expected a string");
        }
      }
      if (o.contains("format")) {
        try {
          sc.format = parse_report_format(o.at("format").get<std::string>());
        } catch (const std::exception& e) {
          parser.add("output.format", "expected \"csv\" or \"json\"");
        }
      }
      if (o.contains("timing")) {
        if (o.at("timing").is_boolean()) {
          sc.timing = o.at("timing").get<bool>();
        } else {
          parser.add("output.timing", "expected a boolean");
        }
      }
    }
  }

  if (doc.contains("checks")) {
    const json& checks = doc.at("checks");
    if (!checks.is_array()) {
      parser.add("checks", "expected an array");
    } else {
      for (std::size_t i = 0; i < checks.size(); ++i) {
        const std::string path = "checks[" + std::to_string(i) + "]";
        const json& c = checks[i];
        if (!c.is_object()) {
          parser.add(path, "expected an object");
          continue;
        }
        ScenarioCheck chk;
        if (!c.contains("id") || !c.at("id").is_string()) {
          parser.add(path + ".id", "missing check id");
          continue;
        }
        chk.id = c.at("id").get<std::string>();
        if (!find_check(chk.id)) {
          parser.add(path + ".id", "unknown check '" + chk.id + "'");
          continue;
        }
        chk.k = parser.sweep(c, "k", path, false);
        chk.j = parser.sweep(c, "j", path, false);
        chk.N = parser.sweep(c, "N", path, true);
        chk.s = parser.sweep(c, "s", path, false);
        chk.d = parser.sweep(c, "d", path, true);
        chk.q = parser.sweep(c, "q", path, true);
        parser.read_uint(c, "samples", path, chk.samples);
        parser.read_uint(c, "trials", path, chk.trials);
        parser.read_uint(c, "inner", path, chk.inner);
        if (c.contains("bodies")) {
          const json& names = c.at("bodies");
          if (!names.is_array()) {
            parser.add(path + ".bodies", "expected an array of body names");
          } else {
            for (const json& nme : names) {
              if (nme.is_string()) chk.bodies.push_back(nme.get<std::string>());
            }
          }
        }
        sc.checks.push_back(std::move(chk));
      }
    }
  }
  for (const auto& [key, value] : doc.items()) {
    static const std::vector<std::string> known = {"name",   "seed",    "bodies",          "checks",
                                                   "budgets", "output", "skip_ineligible"};
    if (std::find(known.begin(), known.end(), key) == known.end()) parser.add(key, "unknown field");
  }
  if (!parser.problems.empty()) throw ScenarioError(parser.problems);
  return sc;
}

const std::vector<std::string>& builtin_scenario_names() {
  static const std::vector<std::string> names = {"ball-closed-forms"};
  return names;
}

json builtin_scenario(const std::string& name) {
  if (name == "ball-closed-forms") {
    return json::parse(R"({
      "name": "ball-closed-forms",
      "seed": 1,
      "bodies": ["corpus:balls"],
      "budgets": {"flats": 2000, "tuples": 5000, "constants": 20000, "reference": 5000, "trials": 50},
      "checks": [
        {"id": "crofton", "k": "all", "j": "all"},
        {"id": "lemma-rs", "k": "all", "j": "all"},
        {"id": "thm-1-1", "k": "all", "j": "all"},
        {"id": "cor-1-2", "k": "all", "j": "all"},
        {"id": "thm-1-2", "k": "all", "j": "all"},
        {"id": "thm-3-4", "k": "all", "j": "all"},
        {"id": "spingarn", "k": "all"},
        {"id": "rs-lower", "k": "all"},
        {"id": "fradelizi", "k": "all"},
        {"id": "stephen-yaskin", "k": "all", "j": "all"},
        {"id": "dpp-spot", "d": "n+0", "q": "n+1"},
        {"id": "bp-identity", "s": "all"},
        {"id": "thm-4-3", "k": 1, "j": "all"},
        {"id": "thm-4-5", "k": 1, "j": "all"},
        {"id": "thm-1-3", "k": 1, "j": "all"},
        {"id": "thm-4-6", "j": [0, 1], "N": "n+2", "bodies": ["ball2", "ball3"]},
        {"id": "aleksandrov"}
      ]
    })");
  }
  throw ValidationError("unknown builtin scenario '" + name + "'");
}

Scenario load_scenario(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) return parse_scenario(builtin_scenario(source.substr(8)));
  std::ifstream in(source);
  if (!in) throw ScenarioError({source + ": cannot open scenario file"});
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ScenarioError({source + ": " + e.what()});
  }
  const std::filesystem::path parent = std::filesystem::path(source).parent_path();
  return parse_scenario(doc, parent.empty() ? "." : parent.string());
}

std::uint64_t job_seed(std::uint64_t scenario_seed, std::size_t check_index, const ConvexBody& body,
                       const CheckParams& p) {
  std::uint64_t h = hash_combine(scenario_seed, static_cast<std::uint64_t>(check_index));
  h = hash_combine(h, body_fingerprint(body));
  for (int v : {p.k, p.j, p.N, p.s, p.d, p.q}) h = hash_combine(h, static_cast<std::uint64_t>(v + 1));
  return h;
}

std::vector<ScenarioJob> expand_scenario(const Scenario& sc) {
  std::vector<ScenarioJob> jobs;
  std::vector<std::string> problems;
  for (std::size_t ci = 0; ci < sc.checks.size(); ++ci) {
    const ScenarioCheck& chk = sc.checks[ci];
    const CheckSpec* spec = find_check(chk.id);
    const std::string path = "checks[" + std::to_string(ci) + "]";
    for (const std::string& name : chk.bodies) {
      const bool found =
          std::any_of(sc.bodies.begin(), sc.bodies.end(), [&](const ConvexBody& k) { return k.name == name; });
      if (!found) problems.push_back(path + ".bodies: no body named '" + name + "'");
    }
    for (const ConvexBody& body : sc.bodies) {
      if (!chk.bodies.empty() && std::find(chk.bodies.begin(), chk.bodies.end(), body.name) == chk.bodies.end()) {
        continue;
      }
      if (!has_flag(*spec, body) && sc.skip_ineligible) continue;
      const int n = body.dim();
      const bool needs_k = spec->params == ParamRule::k_and_j || spec->params == ParamRule::k_only;
      for (int k : needs_k ? values_for(chk.k, 1, n - 1, n) : std::vector<int>{-1}) {
        int j_hi = n - 1;
        if (spec->params == ParamRule::k_and_j) j_hi = n - k - 1;
        const bool uses_j = spec->params == ParamRule::k_and_j || spec->params == ParamRule::j_and_N ||
                            spec->params == ParamRule::optional_j;
        for (int j : uses_j ? values_for(chk.j, 0, j_hi, n) : std::vector<int>{-1}) {
          const bool uses_N = spec->params == ParamRule::j_and_N;
          for (int N : uses_N ? values_for(chk.N, n + 1, n + 1, n) : std::vector<int>{-1}) {
            for (int s : spec->params == ParamRule::s_only ? values_for(chk.s, 1, n - 1, n) : std::vector<int>{-1}) {
              const bool uses_dq = spec->params == ParamRule::d_and_q;
              for (int d : uses_dq ? values_for(chk.d, 1, n, n) : std::vector<int>{-1}) {
                for (int q : uses_dq ? values_for(chk.q, d, d, n) : std::vector<int>{-1}) {
                  CheckParams p;
                  p.k = k;
                  p.j = j;
                  p.N = N;
                  p.s = s;
                  p.d = d;
                  p.q = q;
                  p.samples = chk.samples;
                  p.trials = chk.trials;
                  p.inner = chk.inner;
                  p.seed = job_seed(sc.seed, ci, body, p);
                  const bool poly = body.is_polytope() || std::holds_alternative<Box>(body.rep());
                  const std::vector<std::string> issues = validate_check(*spec, n, body.flags, poly, p);
                  for (const std::string& issue : issues) {
                    problems.push_back(path + " (" + chk.id + ", body " + body.name + "): " + issue);
                  }
                  if (issues.empty()) jobs.push_back(ScenarioJob{spec, &body, p});
                }
              }
            }
          }
        }
      }
    }
  }
  if (!problems.empty()) throw ScenarioError(problems);
  return jobs;
}

std::vector<CheckReport> run_jobs(const std::vector<ScenarioJob>& jobs, VerifyContext& ctx, int threads) {
  std::vector<CheckReport> reports(jobs.size());
  const int workers = std::min<int>(threads > 0 ? threads : thread_count(), static_cast<int>(jobs.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) reports[i] = run_check(*jobs[i].spec, *jobs[i].body, jobs[i].params, ctx);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    SerialScope serial;
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      reports[i] = run_check(*jobs[i].spec, *jobs[i].body, jobs[i].params, ctx);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  return reports;
}

ScenarioOutcome run_scenario(const Scenario& sc, std::ostream& summary, int threads) {
  const std::vector<ScenarioJob> jobs = expand_scenario(sc);
  VerifyContext ctx(sc.seed, sc.budgets);
  ScenarioOutcome out;
  out.reports = run_jobs(jobs, ctx, threads);
  write_summary(summary, out.reports);
  if (sc.output) write_reports(*sc.output, sc.format, out.reports, sc.timing);
  for (const CheckReport& r : out.reports) {
    if (r.verdict == Verdict::fail || r.verdict == Verdict::error) out.exit_code = 1;
  }
  return out;
}

}  // namespace quermass
