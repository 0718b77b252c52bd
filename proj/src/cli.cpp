#include "omegasynth/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "omegasynth/automata.hpp"
#include "omegasynth/decompose.hpp"
#include "omegasynth/errors.hpp"
#include "omegasynth/expr_parse.hpp"
#include "omegasynth/hoa.hpp"
#include "omegasynth/json_io.hpp"
#include "omegasynth/oracle.hpp"
#include "omegasynth/synthesis.hpp"

namespace omegasynth {

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitTimeout = 4;

double default_timeout_secs() {
  if (const char* env = std::getenv("OMEGA_SYNTH_TIMEOUT_SECS")) {
    try {
      return std::stod(env);
    } catch (...) {
      return 120.0;
    }
  }
  return 120.0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Extension first, then a content sniff.
Nba load_automaton(const std::string& path) {
  std::string text = read_file(path);
  bool looks_json = false;
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    looks_json = true;
  } else if (path.size() >= 4 && path.substr(path.size() - 4) == ".hoa") {
    looks_json = false;
  } else {
    size_t i = text.find_first_not_of(" \t\r\n");
    looks_json = i != std::string::npos && text[i] == '{';
  }
  return looks_json ? parse_json(text) : parse_hoa(text);
}

std::string format_word(const Nba& b, const Word& w) {
  bool single = true;
  for (const auto& l : b.alphabet)
    if (l.size() != 1) single = false;
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!single && i > 0) out += " ";
    out += b.alphabet[static_cast<size_t>(w[i])];
  }
  return out;
}

EliminationOrder parse_order(const std::string& s) {
  if (s == "lowest") return EliminationOrder::LowestIndexFirst;
  if (s == "fewest") return EliminationOrder::FewestPathsFirst;
  throw CLI::ValidationError("--elim-order", "expected 'lowest' or 'fewest'");
}

SynthesisMethod parse_method(const std::string& s) {
  if (s == "transition") return SynthesisMethod::TransitionDirect;
  if (s == "state") return SynthesisMethod::StateBased;
  if (s == "auto") return SynthesisMethod::AutoSelect;
  throw CLI::ValidationError("--method", "expected 'transition', 'state' or 'auto'");
}

void require_kind(const Nba& b, SynthesisMethod m) {
  if (m == SynthesisMethod::StateBased) {
    if (b.acceptance_kind != AcceptanceKind::StateBased)
      throw std::invalid_argument(
          "method 'state' needs a state-based automaton (this input is transition-based)");
  } else {
    if (b.acceptance_kind != AcceptanceKind::TransitionBased)
      throw std::invalid_argument("method '" + std::string(to_string(m)) +
                                  "' needs a transition-based automaton (this input is "
                                  "state-based)");
  }
}

struct SynthOptions {
  std::string input;
  std::string method = "transition";
  std::string elim_order = "lowest";
  bool simplify = false;
  double timeout = -1.0;
  std::string format = "text";
};

int cmd_synth(const SynthOptions& opt, std::ostream& out) {
  Nba b = trim(load_automaton(opt.input));
  SynthesisMethod method = parse_method(opt.method);
  require_kind(b, method);
  double budget = opt.timeout >= 0 ? opt.timeout : default_timeout_secs();

  SynthesisReport report =
      synthesize_report(b, method, parse_order(opt.elim_order), opt.simplify,
                        RuleSet::defaults(), budget);

  const OmegaRegex& shown = report.simplified ? *report.simplified : report.expression;
  const Metrics& m = report.metrics_simplified ? *report.metrics_simplified : report.metrics;

  if (opt.format == "json") {
    nlohmann::ordered_json doc;
    doc["file"] = opt.input;
    doc["method"] = to_string(report.method);
    doc["auto_selected"] = report.auto_selected;
    doc["simplified"] = opt.simplify;
    doc["status"] = "ok";
    doc["expression"] = to_text(shown);
    doc["empty_language"] = shown->kind == OmegaKind::EmptyOmega;
    doc["rpn"] = m.rpn;
    doc["tllen"] = m.tllen;
    doc["star_height"] = m.star_height;
    doc["rpn_unsimplified"] = report.metrics.rpn;
    doc["pairs"] = report.pair_count;
    doc["states"] = report.states;
    doc["acc_sources"] = report.accepting_count;
    doc["elapsed_ms"] = report.elapsed_ms;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }

  if (shown->kind == OmegaKind::EmptyOmega) {
    out << "%0^w-equivalent: empty language\n";
  } else {
    out << to_text(shown) << "\n";
  }
  out << "method: " << to_string(report.method) << (report.auto_selected ? " (auto)" : "")
      << "\n";
  out << "states: " << report.states << "\n";
  out << "acc-sources: " << report.accepting_count << "\n";
  out << "pairs: " << report.pair_count << "\n";
  out << "rpn: " << m.rpn << "\n";
  out << "tllen: " << m.tllen << "\n";
  out << "star-height: " << m.star_height << "\n";
  if (opt.simplify) out << "rpn-unsimplified: " << report.metrics.rpn << "\n";
  if (report.simplify_capped) out << "warning: simplification pass cap exceeded\n";
  out << "elapsed-ms: " << report.elapsed_ms << "\n";
  return kExitOk;
}

struct VerifyOptions {
  std::string input;
  std::string bounds = "4,4";
  std::string method;  // empty: follow the input's acceptance kind
  std::string expect;  // compare against this expression instead of re-synthesizing
  std::string elim_order = "lowest";
  double timeout = -1.0;
};

EquivBounds parse_bounds(const std::string& s) {
  size_t comma = s.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--bounds", "expected 'prefix,loop' e.g. 4,4");
  try {
    EquivBounds b;
    b.max_prefix = std::stoi(s.substr(0, comma));
    b.max_loop = std::stoi(s.substr(comma + 1));
    if (b.max_prefix < 0 || b.max_loop < 1) throw std::out_of_range("");
    return b;
  } catch (...) {
    throw CLI::ValidationError("--bounds", "expected 'prefix,loop' with prefix>=0, loop>=1");
  }
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  Nba b = trim(load_automaton(opt.input));
  EquivBounds bounds = parse_bounds(opt.bounds);
  double budget = opt.timeout >= 0 ? opt.timeout : default_timeout_secs();

  OmegaRegex expression;
  if (!opt.expect.empty()) {
    expression = parse_omega(opt.expect);
  } else {
    std::string method_name = opt.method;
    if (method_name.empty())
      method_name =
          b.acceptance_kind == AcceptanceKind::TransitionBased ? "transition" : "state";
    SynthesisMethod method = parse_method(method_name);
    require_kind(b, method);
    SynthesisReport report =
        synthesize_report(b, method, parse_order(opt.elim_order), false, RuleSet::defaults(),
                          budget);
    expression = report.expression;
  }
  Nba from_expr = omega_regex_to_nba(expression, b.alphabet);

  EquivResult res = bounded_equiv(b, from_expr, bounds, 20000000,
                                  Deadline::after_seconds(budget));
  if (res.cost_warning) out << "warning: enumeration cost exceeds budget\n";
  if (res.equal) {
    out << "equal (bounds " << bounds.max_prefix << "," << bounds.max_loop << "; "
        << res.lassos_checked << " lassos checked)\n";
    return kExitOk;
  }
  out << "not equal: counterexample u=\"" << format_word(b, res.counterexample->prefix)
      << "\" v=\"" << format_word(b, res.counterexample->loop) << "\"\n";
  return kExitVerifyFail;
}

struct TripletOptions {
  std::string input;
  int i = 0;
  int j = 0;
  std::string kind = "all";
  std::string format = "hoa";
};

int cmd_triplet(const TripletOptions& opt, std::ostream& out) {
  Nba b = load_automaton(opt.input);
  TripletKind kind;
  if (opt.kind == "all") kind = TripletKind::All;
  else if (opt.kind == "rej") kind = TripletKind::Rej;
  else if (opt.kind == "acc") kind = TripletKind::Acc;
  else throw CLI::ValidationError("kind", "expected 'all', 'rej' or 'acc'");

  Triplet t = build_nfa(b, opt.i, opt.j, kind);
  if (opt.format == "json") {
    out << emit_json(t.nfa);
  } else {
    out << emit_hoa(t.nfa);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::string corpus;
  std::string methods = "transition,state";
  std::string simplify = "both";
  std::string out_path;
  std::string elim_order = "lowest";
  double timeout = -1.0;
};

struct BenchRow {
  std::string file;
  std::string method;
  bool simplified = false;
  std::string status = "ok";
  int states = 0;
  int acc_sources = 0;
  long long pairs = 0;
  Metrics metrics;
  double elapsed_ms = 0.0;
};

struct BenchEntry {
  std::string display_name;
  std::string transition_file;  // empty when not applicable
  std::string state_file;       // empty: derive by degeneralization
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

void write_row(std::ostream& os, const BenchRow& r) {
  os << csv_escape(r.file) << "," << r.method << "," << (r.simplified ? "yes" : "no") << ","
     << r.status << ",";
  if (r.status == "ok") {
    os << r.states << "," << r.acc_sources << "," << r.pairs << "," << r.metrics.rpn << ","
       << r.metrics.tllen << "," << r.metrics.star_height << ",";
  } else {
    os << ",,,,,,";
  }
  os << r.elapsed_ms << "\n";
}

struct SummaryStats {
  double mean = 0.0;
  double stddev = 0.0;
  int down = 0, same = 0, up = 0;
  int counted = 0;
};

SummaryStats summarize(const std::vector<std::pair<long long, long long>>& pairs) {
  // pair = (state metric, transition metric)
  SummaryStats s;
  std::vector<double> decreases;
  for (auto [state_v, trans_v] : pairs) {
    if (trans_v < state_v) ++s.down;
    else if (trans_v == state_v) ++s.same;
    else ++s.up;
    if (state_v > 0) decreases.push_back(100.0 * (double)(state_v - trans_v) / (double)state_v);
  }
  s.counted = static_cast<int>(decreases.size());
  if (!decreases.empty()) {
    for (double d : decreases) s.mean += d;
    s.mean /= decreases.size();
    for (double d : decreases) s.stddev += (d - s.mean) * (d - s.mean);
    s.stddev = std::sqrt(s.stddev / decreases.size());
  }
  return s;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<std::string> methods;
  {
    std::stringstream ss(opt.methods);
    std::string m;
    while (std::getline(ss, m, ',')) {
      if (m != "transition" && m != "state")
        throw CLI::ValidationError("--methods", "expected a list of 'transition'/'state'");
      methods.push_back(m);
    }
    if (methods.empty()) throw CLI::ValidationError("--methods", "empty method list");
  }
  std::vector<bool> simp_modes;
  if (opt.simplify == "both") simp_modes = {false, true};
  else if (opt.simplify == "no") simp_modes = {false};
  else if (opt.simplify == "yes") simp_modes = {true};
  else throw CLI::ValidationError("--simplify", "expected 'both', 'no' or 'yes'");

  if (!fs::is_directory(opt.corpus))
    throw std::runtime_error("corpus '" + opt.corpus + "' is not a directory");
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(opt.corpus)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    if (ext == ".hoa" || ext == ".json") files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());

  // Pair x.tba.hoa with x.sba.hoa; everything else stands alone.
  std::vector<BenchEntry> entries;
  std::map<std::string, std::pair<std::string, std::string>> paired;
  for (const auto& f : files) {
    std::string stem = fs::path(f).stem().string();  // e.g. "x.tba"
    if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".tba")
      paired[stem.substr(0, stem.size() - 4)].first = f;
    else if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".sba")
      paired[stem.substr(0, stem.size() - 4)].second = f;
    else
      entries.push_back({fs::path(f).filename().string(), f, ""});
  }
  for (const auto& [base, pr] : paired) {
    BenchEntry e;
    e.display_name = base;
    e.transition_file = pr.first;
    e.state_file = pr.second;
    entries.push_back(e);
  }
  std::sort(entries.begin(), entries.end(),
            [](const BenchEntry& a, const BenchEntry& b) { return a.display_name < b.display_name; });

  double budget = opt.timeout >= 0 ? opt.timeout : default_timeout_secs();
  EliminationOrder order = parse_order(opt.elim_order);

  std::vector<BenchRow> rows;
  std::vector<std::string> notes;
  for (const auto& entry : entries) {
    for (const auto& method : methods) {
      // Resolve the automaton for this method.
      Nba automaton;
      std::string load_error;
      try {
        if (method == "transition") {
          std::string path = entry.transition_file.empty() ? entry.state_file
                                                           : entry.transition_file;
          Nba b = trim(load_automaton(path));
          if (b.acceptance_kind == AcceptanceKind::StateBased) {
            notes.push_back(entry.display_name + ": transition-based form lifted from '" +
                            path + "'");
            b = lift_state_based(b);
          }
          automaton = std::move(b);
        } else {
          if (!entry.state_file.empty()) {
            Nba b = trim(load_automaton(entry.state_file));
            if (b.acceptance_kind != AcceptanceKind::StateBased)
              throw std::runtime_error("paired .sba file is not state-based");
            automaton = std::move(b);
          } else {
            Nba b = trim(load_automaton(entry.transition_file));
            if (b.acceptance_kind == AcceptanceKind::StateBased) {
              automaton = std::move(b);
            } else {
              notes.push_back(entry.display_name +
                              ": state-based form derived by degeneralization");
              automaton = degeneralize(b);
            }
          }
        }
      } catch (const TimeoutError&) {
        throw;
      } catch (const std::exception& e) {
        load_error = e.what();
        err << "error: " << entry.display_name << " [" << method << "]: " << load_error << "\n";
      }

      for (bool simp : simp_modes) {
        BenchRow row;
        row.file = entry.display_name;
        row.method = method;
        row.simplified = simp;
        if (!load_error.empty()) {
          row.status = "error";
          rows.push_back(row);
          continue;
        }
        try {
          SynthesisMethod m = method == "transition" ? SynthesisMethod::TransitionDirect
                                                     : SynthesisMethod::StateBased;
          SynthesisReport report = synthesize_report(
              automaton, m, order, simp, RuleSet::defaults(), budget);
          row.states = report.states;
          row.acc_sources = report.accepting_count;
          row.pairs = report.pair_count;
          row.metrics = report.metrics_simplified ? *report.metrics_simplified : report.metrics;
          row.elapsed_ms = report.elapsed_ms;
        } catch (const TimeoutError&) {
          row.status = "timeout";
        } catch (const std::exception& e) {
          row.status = "error";
          err << "error: " << entry.display_name << " [" << method << "]: " << e.what() << "\n";
        }
        rows.push_back(row);
      }
    }
  }

  std::ostringstream csv;
  csv << "file,method,simplified,status,states,acc_sources,pairs,rpn,tllen,h,elapsed_ms\n";
  for (const auto& r : rows) write_row(csv, r);
  for (const auto& n : notes) csv << "# note: " << n << "\n";

  // Table-1-style summary: mean percentage decrease per metric when using the
  // transition route instead of the state route, plus down/same/up counts.
  bool have_both = std::find(methods.begin(), methods.end(), "transition") != methods.end() &&
                   std::find(methods.begin(), methods.end(), "state") != methods.end();
  if (have_both) {
    for (bool simp : simp_modes) {
      std::map<std::string, const BenchRow*> trans_rows, state_rows;
      for (const auto& r : rows) {
        if (r.simplified != simp || r.status != "ok") continue;
        if (r.method == "transition") trans_rows[r.file] = &r;
        else state_rows[r.file] = &r;
      }
      std::vector<std::pair<long long, long long>> rpn_pairs, tllen_pairs, h_pairs;
      for (const auto& [file, tr] : trans_rows) {
        auto it = state_rows.find(file);
        if (it == state_rows.end()) continue;  // timed out / errored rows excluded
        rpn_pairs.emplace_back(it->second->metrics.rpn, tr->metrics.rpn);
        tllen_pairs.emplace_back(it->second->metrics.tllen, tr->metrics.tllen);
        h_pairs.emplace_back(it->second->metrics.star_height, tr->metrics.star_height);
      }
      const char* simp_name = simp ? "yes" : "no";
      struct {
        const char* name;
        SummaryStats stats;
      } table[] = {{"rpn", summarize(rpn_pairs)},
                   {"tllen", summarize(tllen_pairs)},
                   {"h", summarize(h_pairs)}};
      for (const auto& row : table) {
        csv << "# summary simplified=" << simp_name << " metric=" << row.name
            << " mean_decrease_pct=" << row.stats.mean << " std=" << row.stats.stddev
            << " down=" << row.stats.down << " same=" << row.stats.same
            << " up=" << row.stats.up << "\n";
      }
      out << "simplified=" << simp_name << ":";
      for (const auto& row : table) {
        out << "  " << row.name << " " << row.stats.mean << "% (↓" << row.stats.down
            << " =" << row.stats.same << " ↑" << row.stats.up << ")";
      }
      out << "\n";
    }
  }

  if (opt.out_path.empty()) {
    out << csv.str();
  } else {
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + opt.out_path + "'");
    f << csv.str();
    out << "wrote " << rows.size() << " rows to " << opt.out_path << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"omega-regular expression synthesis from Buchi automata"};
  app.require_subcommand(1);

  SynthOptions synth_opt;
  auto* synth = app.add_subcommand("synth", "synthesize an expression from an automaton");
  synth->add_option("input", synth_opt.input, "HOA or JSON automaton")->required();
  synth->add_option("--method", synth_opt.method, "transition|state|auto");
  synth->add_option("--elim-order", synth_opt.elim_order, "lowest|fewest");
  synth->add_flag("--simplify", synth_opt.simplify, "apply the rewrite rules");
  synth->add_option("--timeout", synth_opt.timeout, "per-phase budget in seconds");
  synth->add_option("--format", synth_opt.format, "text|json");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "check the synthesized expression against the "
                                              "automaton on bounded lassos");
  verify->add_option("input", verify_opt.input, "HOA or JSON automaton")->required();
  verify->add_option("--bounds", verify_opt.bounds, "prefix,loop length bounds (default 4,4)");
  verify->add_option("--method", verify_opt.method, "transition|state|auto");
  verify->add_option("--expect", verify_opt.expect,
                     "compare against this omega-expression instead of re-synthesizing");
  verify->add_option("--elim-order", verify_opt.elim_order, "lowest|fewest");
  verify->add_option("--timeout", verify_opt.timeout, "per-phase budget in seconds");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "run both routes over a corpus and emit CSV");
  bench->add_option("corpus", bench_opt.corpus, "directory of .hoa/.json automata")->required();
  bench->add_option("--methods", bench_opt.methods, "comma list of transition,state");
  bench->add_option("--simplify", bench_opt.simplify, "both|no|yes");
  bench->add_option("--out", bench_opt.out_path, "CSV output path (default stdout)");
  bench->add_option("--elim-order", bench_opt.elim_order, "lowest|fewest");
  bench->add_option("--timeout", bench_opt.timeout, "per-phase budget in seconds");

  TripletOptions triplet_opt;
  auto* triplet = app.add_subcommand("triplet", "dump one decomposition NFA");
  triplet->add_option("input", triplet_opt.input, "HOA or JSON automaton")->required();
  triplet->add_option("i", triplet_opt.i, "source state")->required();
  triplet->add_option("j", triplet_opt.j, "target state")->required();
  triplet->add_option("kind", triplet_opt.kind, "all|rej|acc")->required();
  triplet->add_option("--format", triplet_opt.format, "hoa|json");

  std::vector<const char*> argv;
  argv.push_back("omega-synth");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (synth->parsed()) return cmd_synth(synth_opt, out);
    if (verify->parsed()) return cmd_verify(verify_opt, out);
    if (bench->parsed()) return cmd_bench(bench_opt, out, err);
    if (triplet->parsed()) return cmd_triplet(triplet_opt, out);
    err << "usage error: no subcommand\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TimeoutError& e) {
    err << "timeout: " << e.what() << "\n";
    return kExitTimeout;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace omegasynth
