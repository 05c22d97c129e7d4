// pperm: distances, enumeration tables, identity checks and conjecture scans
// for plane permutations.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pperm/distances.hpp"
#include "pperm/enumeration.hpp"
#include "pperm/suites.hpp"

namespace {

using namespace pperm;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct RunConfig {
  std::string format = "text";
  unsigned jobs = 1;
  std::size_t cap = kDefaultStateCap;
  std::uint64_t seed = 1;
  bool allow_large = false;
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_n(int n, int limit, int hard_limit, const RunConfig& cfg, const std::string& what) {
  if (n < 1) throw UsageError(what + ": N must be at least 1");
  const int allowed = cfg.allow_large ? hard_limit : limit;
  if (n > allowed) {
    throw CapExceeded(what + ": N = " + std::to_string(n) + " exceeds the limit " + std::to_string(allowed) +
                      (cfg.allow_large ? "" : " (use --allow-large)"));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// --- distance ---------------------------------------------------------------

struct DistanceRecord {
  std::string input;
  std::string kind;
  int value = 0;
  bool exact = false;  // distance rather than bound
  std::optional<int> oracle;
  json scenario;
  std::vector<std::string> scenario_text;
  bool ok = true;
};

DistanceRecord distance_one(const std::string& kind, const std::string& text, bool scenario, bool oracle,
                            const RunConfig& cfg) {
  DistanceRecord rec;
  rec.input = text;
  rec.kind = kind;
  if (kind == "bid" || kind == "td-lb") {
    const Permutation parsed = parse_one_line(text);
    Sequence s;
    for (Label x : parsed.domain()) s.push_back(parsed(x));
    try {
      validate_sequence(s);
    } catch (const DomainError&) {
      throw ParseError("expected a permutation of 1..n: '" + text + "'");
    }
    rec.input = to_one_line_string(parsed);
    if (kind == "bid") {
      rec.value = bid(s);
      rec.exact = true;
      if (scenario) {
        rec.scenario = json::array();
        Sequence cur = s;
        for (const auto& st : bid_sort(s)) {
          cur = apply_block_interchange(cur, st.h);
          std::string after;
          for (std::size_t t = 0; t < cur.size(); ++t) after += (t ? " " : "") + std::to_string(cur[t]);
          rec.scenario.push_back({{"i", st.h.i},
                                  {"j", st.h.j},
                                  {"k", st.h.k},
                                  {"l", st.h.l},
                                  {"case", std::string(to_string(st.kind))},
                                  {"result", after}});
          rec.scenario_text.push_back(to_string(st.h) + " " + std::string(to_string(st.kind)) + " -> " + after);
        }
      }
    } else {
      if (scenario) throw UsageError("td-lb has no sorting scenario");
      rec.value = td_lower_bound(s);
    }
    if (oracle) {
      const auto g = kind == "bid" ? Generators::BlockInterchanges : Generators::Transpositions;
      rec.oracle = bfs_distance(s, identity_sequence(s.size()), g, cfg.cap);
    }
  } else {
    const SignedPermutation a = parse_signed(text);
    rec.input = to_string(a);
    rec.value = kind == "rev-lb" ? rev_lower_bound(a) : breakpoint_bound(a);
    if (scenario) {
      const auto res = greedy_reversal_sort(a);
      json steps = json::array();
      SignedPermutation cur = a;
      for (const auto& rv : res.steps) {
        cur = apply_reversal(cur, rv);
        steps.push_back({{"i", rv.i}, {"j", rv.j}, {"result", to_string(cur)}});
        rec.scenario_text.push_back("reverse [" + std::to_string(rv.i) + "," + std::to_string(rv.j) + "] -> " +
                                    to_string(cur));
      }
      rec.scenario = steps;
      if (!res.sorted) rec.scenario_text.push_back("no 2-reversal from " + to_string(res.final_state));
    }
    if (oracle) rec.oracle = bfs_distance(a.values(), SignedPermutation::identity(a.n()).values(), Generators::Reversals, cfg.cap);
  }
  if (rec.oracle) rec.ok = rec.exact ? rec.value == *rec.oracle : rec.value <= *rec.oracle;
  return rec;
}

json to_json(const DistanceRecord& r) {
  json j{{"input", r.input}, {"kind", r.kind}};
  j[r.exact ? "distance" : "bound"] = r.value;
  if (!r.scenario.is_null()) j["scenario"] = r.scenario;
  if (r.oracle) {
    j["oracle"] = *r.oracle;
    j["match"] = r.value == *r.oracle;
  }
  return j;
}

int cmd_distance(const std::string& kind, const std::vector<std::string>& tokens, const std::string& input_file,
                 bool scenario, bool oracle, const RunConfig& cfg, std::ostream& os) {
  std::vector<std::string> inputs;
  if (!tokens.empty()) {
    std::string joined;
    for (const auto& t : tokens) joined += (joined.empty() ? "" : " ") + t;
    inputs.push_back(joined);
  }
  if (!input_file.empty()) {
    std::ifstream in(input_file);
    if (!in) throw UsageError("cannot read " + input_file);
    for (std::string line; std::getline(in, line);) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) inputs.push_back(line);
    }
  }
  if (inputs.empty()) throw UsageError("distance: no permutation given");

  std::vector<DistanceRecord> recs;
  for (const auto& text : inputs) recs.push_back(distance_one(kind, text, scenario, oracle, cfg));
  bool ok = true;
  for (const auto& r : recs) ok = ok && r.ok;

  if (cfg.format == "json") {
    if (recs.size() == 1) {
      os << to_json(recs[0]).dump(2) << '\n';
    } else {
      json arr = json::array();
      for (const auto& r : recs) arr.push_back(to_json(r));
      os << arr.dump(2) << '\n';
    }
  } else if (cfg.format == "csv") {
    os << "input,kind,value,oracle,match\n";
    for (const auto& r : recs) {
      os << csv_field(r.input) << ',' << r.kind << ',' << r.value << ','
         << (r.oracle ? std::to_string(*r.oracle) : "") << ','
         << (r.oracle ? (r.value == *r.oracle ? "true" : "false") : "") << '\n';
    }
  } else {
    for (const auto& r : recs) {
      if (recs.size() > 1) os << r.input << ": ";
      os << r.value << '\n';
      for (const auto& line : r.scenario_text) os << "  " << line << '\n';
      if (r.oracle) os << "  oracle " << *r.oracle << (r.value == *r.oracle ? " (match)" : " (no match)") << '\n';
    }
  }
  return ok ? kExitPass : kExitFail;
}

// --- enumerate --------------------------------------------------------------

void emit_series(const std::string& kind, int n, const std::vector<std::pair<int, ExactInt>>& rows,
                 const RunConfig& cfg, std::ostream& os) {
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& [k, c] : rows) arr.push_back({{"n", n}, {"k", k}, {"count", exact_json(c)}});
    os << json{{"schema", "pperm.series.v1"}, {"kind", kind}, {"columns", {"n", "k", "count"}}, {"rows", arr}}.dump(2)
       << '\n';
  } else if (cfg.format == "csv") {
    os << "n,k,count\n";
    for (const auto& [k, c] : rows) os << n << ',' << k << ',' << to_string(c) << '\n';
  } else {
    for (const auto& [k, c] : rows) os << "k=" << k << ": " << to_string(c) << '\n';
  }
}

int cmd_enumerate(const std::string& kind, int n, const std::string& lambda_text, bool oracle, const RunConfig& cfg,
                  std::ostream& os) {
  std::vector<std::pair<int, ExactInt>> rows;
  if (kind == "xi") {
    require_n(n, 10, 12, cfg, "enumerate xi");
    const auto xs = xi_bruteforce(n, cfg.jobs, 12);
    for (int k = 1; k <= n; ++k) {
      if (xs[k] != 0) rows.emplace_back(k, xs[k]);
    }
  } else if (kind == "stirling") {
    require_n(n, 2000, 20000, cfg, "enumerate stirling");
    const auto row = stirling_row(n);
    for (int k = 1; k <= n; ++k) rows.emplace_back(k, row[k]);
  } else if (kind == "bid-k") {
    require_n(n, 2000, 20000, cfg, "enumerate bid-k");
    for (int k = 0; 2 * k <= n; ++k) rows.emplace_back(k, bid_count(n, k));
    if (oracle) {
      require_n(n, 8, 9, cfg, "enumerate bid-k --oracle");
      const auto hist = DistanceTable(n, Generators::BlockInterchanges, cfg.cap).histogram();
      bool ok = hist.size() <= rows.size();
      for (std::size_t k = 0; ok && k < rows.size(); ++k) {
        ok = rows[k].second == (k < hist.size() ? ExactInt(hist[k]) : ExactInt(0));
      }
      emit_series(kind, n, rows, cfg, os);
      if (cfg.format == "text") os << "oracle: BFS histogram " << (ok ? "matches" : "differs") << '\n';
      return ok ? kExitPass : kExitFail;
    }
  } else {
    require_n(n, 8, 10, cfg, "enumerate pk-lambda");
    if (!lambda_text.empty() && parse_partition(lambda_text).n() != n) {
      throw UsageError("--lambda must be a partition of " + std::to_string(n));
    }
    const CountTable t = lambda_text.empty() ? tabulate_all(n, cfg.jobs, 10)
                                             : tabulate(parse_partition(lambda_text), cfg.jobs, 10);
    if (cfg.format == "json") {
      os << to_json(t).dump(2) << '\n';
    } else if (cfg.format == "csv") {
      os << to_csv(t);
    } else {
      os << "lambda\teta\tk\ta\tcount\n";
      for (const auto& r : t.rows()) {
        os << r.lambda.to_string() << '\t' << r.eta.to_string() << '\t' << r.k << '\t' << r.a << '\t'
           << to_string(r.count) << '\n';
      }
    }
    return kExitPass;
  }
  emit_series(kind, n, rows, cfg, os);
  return kExitPass;
}

// --- verify / conjecture ---------------------------------------------------------

int emit_report(const Report& r, const RunConfig& cfg, std::ostream& os) {
  if (cfg.format == "json") {
    os << to_json(r).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << "suite,pass,checks,failures\n"
       << csv_field(r.name) << ',' << (r.pass ? "true" : "false") << ',' << r.checks << ',' << r.failure_count << '\n';
  } else {
    os << to_text(r);
  }
  return r.pass ? kExitPass : kExitFail;
}

int cmd_verify(const std::string& suite, int n, const RunConfig& cfg, std::ostream& os) {
  SuiteOptions opt;
  opt.jobs = cfg.jobs;
  opt.seed = cfg.seed;
  opt.cap = cfg.cap;
  opt.allow_large = cfg.allow_large;
  return emit_report(run_suite(suite, n, opt), cfg, os);
}

int cmd_conjecture(const std::string& which, int n, const RunConfig& cfg, std::ostream& os) {
  require_n(n, 6, 7, cfg, "conjecture");
  const Conjecture c = which == "7.1" ? Conjecture::SameCycleExact : Conjecture::SameCycleAll;
  const ConjectureReport rep = conjecture_scan(static_cast<std::size_t>(n), c, cfg.jobs);
  if (cfg.format == "json") {
    json ce = json::array();
    for (const auto& a : rep.counterexamples) ce.push_back(to_string(a));
    os << json{{"conjecture", which}, {"n", n}, {"scanned", rep.scanned}, {"counterexamples", ce}}.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << "conjecture,n,scanned,counterexamples\n"
       << which << ',' << n << ',' << rep.scanned << ',' << rep.counterexamples.size() << '\n';
  } else {
    os << "conjecture " << which << " n=" << n << ": " << rep.scanned << " instances, "
       << rep.counterexamples.size() << " counterexamples\n";
    for (const auto& a : rep.counterexamples) os << "  " << to_string(a) << '\n';
  }
  return rep.counterexamples.empty() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane permutations: rearrangement distances, enumeration tables and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--cap", cfg.cap, "BFS state cap");
  app.add_option("--seed", cfg.seed, "Seed for sampled checks");
  app.add_flag("--allow-large", cfg.allow_large, "Lift the default size limits");
  app.add_option("--out", cfg.out, "Write output to FILE");

  std::vector<std::string> suite_names;
  for (const auto& s : suites()) suite_names.push_back(s.name);

  std::string kind, input_file, lambda_text, suite, which;
  std::vector<std::string> perm_tokens;
  bool scenario = false, oracle = false;
  int n = 0;

  auto* dist = app.add_subcommand("distance", "Distance or lower bound for one permutation or a file of them");
  dist->fallthrough();
  dist->add_option("kind", kind)->required()->check(CLI::IsMember({"bid", "td-lb", "rev-lb", "rev-bp"}));
  dist->add_option("perm", perm_tokens, "One-line permutation; signed entries need '--' first");
  dist->add_option("--input", input_file, "File with one permutation per line");
  dist->add_flag("--scenario", scenario, "Print a sorting scenario");
  dist->add_flag("--oracle", oracle, "Compare with breadth-first search");

  auto* en = app.add_subcommand("enumerate", "Exact counting tables");
  en->fallthrough();
  en->add_option("kind", kind)->required()->check(CLI::IsMember({"xi", "stirling", "pk-lambda", "bid-k"}));
  en->add_option("N", n)->required();
  en->add_option("--lambda", lambda_text, "Restrict pk-lambda to one diagonal type, e.g. 3+1 or 1^1 3^1");
  en->add_flag("--oracle", oracle, "bid-k: compare with the BFS histogram");

  auto* ver = app.add_subcommand("verify", "Run a verification suite for sizes up to N");
  ver->fallthrough();
  ver->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names));
  ver->add_option("N", n)->required();

  auto* conj = app.add_subcommand("conjecture", "Exhaustive same-cycle conjecture scan");
  conj->fallthrough();
  conj->add_option("which", which)->required()->check(CLI::IsMember({"7.1", "7.2"}));
  conj->add_option("N", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ostringstream os;
  int code = kExitPass;
  try {
    if (*dist) {
      code = cmd_distance(kind, perm_tokens, input_file, scenario, oracle, cfg, os);
    } else if (*en) {
      code = cmd_enumerate(kind, n, lambda_text, oracle, cfg, os);
    } else if (*ver) {
      code = cmd_verify(suite, n, cfg, os);
    } else {
      code = cmd_conjecture(which, n, cfg, os);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "pperm: " << e.what() << '\n';
    return kExitCap;
  } catch (const UsageError& e) {
    std::cerr << "pperm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {  // ParseError, DomainError
    std::cerr << "pperm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantBreach& e) {
    std::cerr << "pperm: internal invariant broken: " << e.what() << '\n';
    return kExitFail;
  }

  if (cfg.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "pperm: cannot write " << cfg.out << '\n';
      return kExitUsage;
    }
    f << os.str();
  }
  return code;
}
