// Command-line front end: rule inspection, orbit tracing, fixed points,
// mode searches, table classification and the claim-registry checks.
// Results go to stdout (JSON unless plain text is asked for); progress and
// errors go to stderr.  Exit codes: 0 success, 1 negative analysis result
// where a positive one was demanded, 2 usage error.

#include <unistd.h>

#include <atomic>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "seqeca/seqeca.hpp"

using namespace seqeca;

namespace {

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    for (int n = lo; n <= hi; ++n) sizes.push_back(n);
    return sizes;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    sizes.push_back(std::stoi(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return sizes;
}

UpdateMode parse_any_mode(int n, const std::string& text) {
  if (!text.empty() && text.front() == '(')
    return UpdateMode::from_sequential(SequentialMode::parse(text));
  return UpdateMode::parse(n, text);
}

// Periodic progress lines on stderr while a long search runs; silent when
// stderr is not a terminal.
class ProgressMonitor {
 public:
  explicit ProgressMonitor(ProgressSink& sink) : sink_(sink), active_(isatty(2)) {
    if (active_)
      thread_ = std::thread([this] {
        while (!stop_.load()) {
          std::this_thread::sleep_for(std::chrono::milliseconds(2000));
          if (stop_.load()) break;
          auto done = sink_.done.load();
          if (sink_.total)
            std::cerr << "progress: " << done << "/" << sink_.total << " modes\n";
        }
      });
  }
  ~ProgressMonitor() {
    stop_.store(true);
    if (thread_.joinable()) thread_.join();
  }

 private:
  ProgressSink& sink_;
  bool active_;
  std::atomic<bool> stop_{false};
  std::thread thread_;
};

void print_rule_info_text(const RuleTable& rule) {
  std::cout << "rule " << rule.code().value() << "\n";
  std::cout << "table:";
  for (int p = 7; p >= 0; --p) {
    std::cout << ' ' << ((p >> 2) & 1) << ((p >> 1) & 1) << (p & 1) << "->"
              << rule.output(static_cast<unsigned>(p));
  }
  std::cout << "\nactive:";
  for (int p = 7; p >= 0; --p)
    if (rule.active(static_cast<unsigned>(p)))
      std::cout << ' ' << ((p >> 2) & 1) << ((p >> 1) & 1) << (p & 1);
  auto condition = convergence_condition(rule);
  std::cout << "\ncondition: " << (condition ? condition_name(*condition) : "none") << "\n";
  std::cout << "symmetry class:";
  for (int m : symmetry_class(rule.code()).members) std::cout << ' ' << m;
  std::cout << "\n";
  for (int k = 1; k <= 3; ++k) {
    std::cout << "walls k=" << k << ":";
    for (const auto& w : find_walls(rule, k)) std::cout << ' ' << w;
    std::cout << "\n";
  }
}

json rule_info_json(const RuleTable& rule) {
  json table = json::object();
  json active = json::object();
  for (int p = 0; p < 8; ++p) {
    std::string key{static_cast<char>('0' + ((p >> 2) & 1)),
                    static_cast<char>('0' + ((p >> 1) & 1)), static_cast<char>('0' + (p & 1))};
    table[key] = rule.output(static_cast<unsigned>(p));
    active[key] = rule.active(static_cast<unsigned>(p));
  }
  auto condition = convergence_condition(rule);
  json walls = json::object();
  for (int k = 1; k <= 3; ++k) walls[std::to_string(k)] = find_walls(rule, k);
  return json{{"rule", rule.code().value()},
              {"table", table},
              {"active", active},
              {"condition", condition ? json(condition_name(*condition)) : json(nullptr)},
              {"symmetry_class", symmetry_class(rule.code()).members},
              {"walls", walls}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ring automaton convergence toolkit"};
  app.require_subcommand(1);

  int rule_code = 0;
  int ring = 0;
  int workers = 0;
  std::string mode_text, config_text, format, sizes_text, counting = "raw", strategy = "greedy";
  std::string trace = "steps";
  bool expect_universal = false;

  auto* info = app.add_subcommand("rule-info", "truth table, symmetries, conditions and walls");
  info->add_option("--rule", rule_code, "Wolfram code")->required();
  info->add_option("--format", format, "json|text");

  auto* orbit_cmd = app.add_subcommand("orbit", "trace one trajectory until its cycle closes");
  orbit_cmd->add_option("--rule", rule_code)->required();
  orbit_cmd->add_option("--config", config_text, "initial configuration, e.g. 01101")->required();
  orbit_cmd->add_option("--mode", mode_text, "(i0,i1,...) or {a,b};{c}")->required();
  orbit_cmd->add_option("--trace", trace, "steps|substeps");
  orbit_cmd->add_option("--format", format, "json|text");

  auto* fp = app.add_subcommand("fixed-points", "fixed points of the synchronous map");
  fp->add_option("--rule", rule_code)->required();
  fp->add_option("--n", ring, "ring size")->required();

  auto* search = app.add_subcommand("search", "mode-space searches");
  std::string kind;
  search->add_option("kind", kind, "universal|count|covering|nonconv")->required();
  search->add_option("--rule", rule_code)->required();
  search->add_option("--n", ring)->required();
  search->add_option("--mode", mode_text, "sequential mode for 'universal'");
  search->add_option("--counting", counting, "raw|classes");
  search->add_option("--strategy", strategy, "greedy|exact");
  search->add_option("--workers", workers, "worker threads (0 = all cores)");
  search->add_flag("--expect-universal", expect_universal,
                   "exit 1 when the verdict is not universal");

  auto* classify_cmd = app.add_subcommand("classify", "classify rules by convergence behavior");
  classify_cmd->add_option("--n", sizes_text, "sizes, e.g. 4..8 or 4,6,8");
  int classify_rule_code = -1;
  classify_cmd->add_option("--rule", classify_rule_code, "restrict to one rule");
  classify_cmd->add_option("--workers", workers);
  classify_cmd->add_option("--format", format, "json|csv");

  auto* verify_cmd = app.add_subcommand("verify", "run claim-registry checks");
  std::vector<std::string> ids;
  verify_cmd->add_option("ids", ids, "registry ids, or 'all'");
  verify_cmd->add_option("--n", sizes_text, "restrict sizes where applicable");
  verify_cmd->add_option("--workers", workers);
  verify_cmd->add_option("--format", format, "json|text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*info) {
      RuleTable rule{RuleCode(rule_code)};
      if (format == "text")
        print_rule_info_text(rule);
      else
        std::cout << rule_info_json(rule).dump(2) << "\n";
      return 0;
    }

    if (*orbit_cmd) {
      auto start = Configuration::from_string(config_text);
      DynamicalSystem sys(RuleTable(RuleCode(rule_code)),
                          parse_any_mode(start.size(), mode_text));
      auto granularity =
          trace == "substeps" ? TraceGranularity::kSubsteps : TraceGranularity::kSteps;
      auto diagram = trace_orbit(sys, start, granularity);
      if (format == "json") {
        std::cout << to_json(diagram).dump(2) << "\n";
      } else {
        std::cout << render_text(diagram);
        std::cout << "transient " << diagram.record.transient << ", cycle "
                  << diagram.record.cycle << "\n";
      }
      return 0;
    }

    if (*fp) {
      std::cout << to_json(fixed_point_existence(RuleTable(RuleCode(rule_code)), ring)).dump(2)
                << "\n";
      return 0;
    }

    if (*search) {
      RuleTable rule{RuleCode(rule_code)};
      SearchOptions opts{workers, nullptr};
      if (kind == "universal") {
        if (mode_text.empty()) {
          std::cerr << "search universal needs --mode\n";
          return 2;
        }
        auto verdict = is_universal(rule, ring, SequentialMode::parse(mode_text));
        std::cout << to_json(verdict).dump(2) << "\n";
        return expect_universal && !verdict.universal ? 1 : 0;
      }
      if (kind == "count") {
        ProgressSink sink;
        opts.progress = &sink;
        ProgressMonitor monitor(sink);
        auto n_modes = count_universal_modes(
            rule, ring, counting == "classes" ? Counting::kClasses : Counting::kRaw, opts);
        std::cout << json{{"rule", rule_code}, {"n", ring}, {"counting", counting},
                          {"count", n_modes}}
                         .dump(2)
                  << "\n";
        return 0;
      }
      if (kind == "covering") {
        auto result = find_covering(
            rule, ring, strategy == "exact" ? CoverStrategy::kExact : CoverStrategy::kGreedy,
            opts);
        std::cout << to_json(result).dump(2) << "\n";
        return expect_universal && !result.found() ? 1 : 0;
      }
      if (kind == "nonconv") {
        json witnesses = json::array();
        for (const auto& c : non_convergent_configs(rule, ring, opts))
          witnesses.push_back(c.to_string());
        std::cout << json{{"rule", rule_code}, {"n", ring}, {"non_convergent", witnesses}}.dump(2)
                  << "\n";
        return 0;
      }
      std::cerr << "unknown search kind: " << kind << "\n";
      return 2;
    }

    if (*classify_cmd) {
      std::vector<int> sizes =
          sizes_text.empty() ? std::vector<int>{4, 5, 6, 7, 8} : parse_sizes(sizes_text);
      SearchOptions opts{workers, nullptr};
      std::vector<ClassificationReport> reports;
      if (classify_rule_code >= 0)
        reports.push_back(classify_rule(RuleTable(RuleCode(classify_rule_code)), sizes, opts));
      else
        reports = classify_representatives(sizes, opts);
      if (format == "csv") {
        std::cout << classification_csv(reports);
      } else {
        json out = json::array();
        for (const auto& r : reports) out.push_back(to_json(r));
        std::cout << json{{"sizes", sizes}, {"rules", out}}.dump(2) << "\n";
      }
      return 0;
    }

    if (*verify_cmd) {
      VerifyOptions opts;
      opts.workers = workers;
      if (!sizes_text.empty()) opts.sizes = parse_sizes(sizes_text);
      std::vector<Certificate> certs;
      if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
        certs = verify_all(opts);
      } else {
        for (const auto& id : ids) certs.push_back(verify_theorem(id, opts));
      }
      bool all_pass = true;
      for (const auto& cert : certs)
        if (!cert.conjecture) all_pass = all_pass && cert.pass;
      if (format == "text") {
        for (const auto& cert : certs) {
          std::cout << (cert.pass ? "[pass] " : "[fail] ") << cert.id
                    << (cert.conjecture ? " (conjecture evidence)" : "") << ": " << cert.title
                    << "\n";
          for (const auto& line : cert.details) std::cout << "    " << line << "\n";
        }
      } else {
        json out = json::array();
        for (const auto& cert : certs) out.push_back(to_json(cert));
        std::cout << json{{"certificates", out}, {"all_pass", all_pass}}.dump(2) << "\n";
      }
      return all_pass ? 0 : 1;
    }
  } catch (const UnknownTheoremError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
