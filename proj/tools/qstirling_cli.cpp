// qstirling: enumerate, inspect, map and verify rooted quasi-Stirling objects.
//
// Exit codes: 0 pass, 1 identity failure, 2 usage error, 3 guard exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qstirling/bijections.hpp"
#include "qstirling/errors.hpp"
#include "qstirling/eulerian.hpp"
#include "qstirling/json_io.hpp"
#include "qstirling/result_log.hpp"
#include "qstirling/verifier.hpp"

using namespace qstirling;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct Globals {
  std::string multiset;
  int order = 10;
  int max_total = kDefaultMaxTotal;
  std::string format = "json";
  std::string out;
  int jobs = 1;
  std::string log;
};

// What a command hands back: the JSON form, optional text lines, the exit code.
struct Output {
  json data;
  std::vector<std::string> text;
  int code = kExitPass;
  std::string outcome = "pass";
};

MultisetSpec require_multiset(const Globals& g) {
  if (g.multiset.empty()) throw InvalidInput("--multiset is required");
  return MultisetSpec::parse(g.multiset);
}

std::optional<MultisetSpec> optional_multiset(const Globals& g) {
  if (g.multiset.empty()) return std::nullopt;
  return MultisetSpec::parse(g.multiset);
}

json read_json(const std::string& path) {
  try {
    if (path.empty() || path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Arrays of objects become one row per element; objects become key,value rows.
std::string to_csv(const json& data) {
  std::ostringstream os;
  if (data.is_array() && !data.empty() && data.front().is_object()) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : data.front().items()) keys.push_back(k);
    for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << csv_cell(keys[i]);
    os << '\n';
    for (const auto& row : data) {
      for (std::size_t i = 0; i < keys.size(); ++i) {
        os << (i ? "," : "") << csv_cell(row.contains(keys[i]) ? scalar(row.at(keys[i])) : "");
      }
      os << '\n';
    }
  } else if (data.is_object()) {
    os << "key,value\n";
    for (const auto& [k, v] : data.items()) os << csv_cell(k) << ',' << csv_cell(scalar(v)) << '\n';
  } else if (data.is_array()) {
    os << "value\n";
    for (const auto& v : data) os << csv_cell(scalar(v)) << '\n';
  } else {
    os << scalar(data) << '\n';
  }
  return os.str();
}

std::string render(const Output& o, const std::string& format) {
  if (format == "csv") return to_csv(o.data);
  if (format == "text") {
    if (o.text.empty()) return o.data.dump(2) + "\n";
    std::string s;
    for (const auto& line : o.text) s += line + "\n";
    return s;
  }
  return o.data.dump() + "\n";
}

// ------------------------------------------------------------ commands

Output cmd_enumerate(const Globals& g, const std::string& kind, int bars, int root) {
  const MultisetSpec m = require_multiset(g);
  const EnumerationOptions opts{g.max_total, g.jobs};
  Output o;
  o.data = json::array();
  if (kind == "words") {
    for (const auto& w : enumerate_quasi_stirling(m, opts)) {
      o.data.push_back(io::word_to_json(w));
      o.text.push_back(word_to_string(w));
    }
  } else if (kind == "rooted") {
    for (const auto& rw : enumerate_rooted(m, opts)) {
      o.data.push_back(io::to_json(rw));
      o.text.push_back(word_to_string(rw.word) + (rw.root ? " root@" + std::to_string(*rw.root) : " root 0"));
    }
  } else if (kind == "trees") {
    for (const auto& t : enumerate_trees(m, g.max_total)) {
      o.data.push_back(io::to_json(t));
      o.text.push_back(to_string(t.root()));
    }
  } else if (kind == "unordered-trees") {
    for (const auto& t : enumerate_unordered_trees(m, g.max_total)) {
      o.data.push_back(io::to_json(t));
      o.text.push_back(to_string(t.to_node()));
    }
  } else if (kind == "graphs") {
    for (const auto& gr : enumerate_regular_graphs(m, g.max_total)) {
      o.data.push_back(io::to_json(gr));
      std::string line;
      for (const auto& [v, p] : gr.parent()) line += (line.empty() ? "" : " ") + to_string(v) + "->" + std::to_string(p);
      o.text.push_back(line);
    }
  } else if (kind == "partitions") {
    for (const auto& p : enumerate_partitions(m.n(), m.block_count(), g.max_total)) {
      o.data.push_back(io::to_json(p));
      o.text.push_back(p.to_string());
    }
  } else if (kind == "barred") {
    if (bars < 0) throw InvalidInput("--bars is required for barred partitions");
    for (const auto& b : enumerate_barred(m.n(), m.block_count(), bars, g.max_total)) {
      o.data.push_back(io::to_json(b));
      o.text.push_back(io::to_json(b).dump());
    }
  } else if (kind == "coding") {
    const Coding c = build_coding(m, root);
    o.data = io::to_json(c);
    for (const auto& row : c.table()) {
      o.text.push_back(std::to_string(row.entry.value) + "_" + std::to_string(row.entry.copy) + " -> " +
                       to_string(row.code));
    }
  } else {
    throw InvalidInput("unknown object kind " + kind);
  }
  return o;
}

Output cmd_stats(const Globals& g, const std::string& kind, const std::string& word_text, const std::string& in) {
  Output o;
  if (kind == "word" || kind == "sibling" || kind == "cyclic") {
    const Word w = word_text.empty() ? io::word_from_json(read_json(in)) : parse_word(word_text);
    if (kind == "word") {
      const auto s = word_stats(w);
      o.data = io::to_json(s);
      o.data["dd"] = double_descents(w);
      o.data["quasi_stirling"] = is_quasi_stirling(w);
      o.data["stirling"] = is_stirling(w);
    } else if (kind == "sibling") {
      o.data = io::to_json(sibling_stats(w));
      o.data["dsd_literal"] = sibling_stats(w, DsdRule::literal).dsd;
    } else {
      const auto c = cyclic_stats(w);
      o.data = {{"cdes", c.cdes}, {"casc", c.casc}};
    }
  } else if (kind == "tree") {
    const VETree t = io::tree_from_json(read_json(in), optional_multiset(g));
    o.data = io::to_json(tree_stats(t));
    json words = json::object();
    for (const auto& [v, w] : edge_words(t)) words[std::to_string(v)] = w;
    o.data["edge_words"] = words;
    o.data["class_size"] = class_size(t);
  } else if (kind == "partition") {
    const auto p = io::partition_from_json(read_json(in));
    o.data = io::to_json(partition_stats(p));
    o.data["class_size"] = io::integer_to_json(partition_class_size(p));
  } else {
    throw InvalidInput("unknown stats kind " + kind);
  }
  return o;
}

Output cmd_map(const Globals& g, const std::string& name, const std::string& in, bool trace) {
  const json input = read_json(in);
  const auto m = optional_multiset(g);
  Output o;
  if (name == "phi") {
    o.data = io::to_json(phi(io::tree_from_json(input, m)));
  } else if (name == "phi-inverse") {
    o.data = io::to_json(phi_inverse(io::rooted_word_from_json(input)));
  } else if (name == "psi1") {
    Psi1Trace t;
    const auto graph = psi1(io::unordered_tree_from_json(input, m), &t);
    o.data = io::to_json(graph);
    if (trace) o.data["trace"] = io::to_json(t);
  } else if (name == "psi1-inverse") {
    o.data = io::to_json(psi1_inverse(io::graph_from_json(input, m)));
  } else if (name == "psi2") {
    o.data = io::to_json(psi2(io::graph_from_json(input, m)));
  } else if (name == "psi2-inverse") {
    if (!m) throw InvalidInput("psi2-inverse needs --multiset");
    o.data = io::to_json(psi2_inverse(io::partition_from_json(input), *m));
  } else if (name == "Psi") {
    o.data = io::to_json(Psi(io::tree_from_json(input, m)));
  } else if (name == "Psi-inverse") {
    if (!m) throw InvalidInput("Psi-inverse needs --multiset");
    o.data = io::to_json(Psi_inverse(io::partition_from_json(input), *m));
  } else {
    throw InvalidInput("unknown bijection " + name);
  }
  return o;
}

Output cmd_poly(const Globals& g, const std::string& family, int n) {
  auto need_n = [&] {
    if (n < 0) throw InvalidInput(family + " needs --n");
    return n;
  };
  Polynomial p;
  if (family == "eulerian") {
    p = eulerian_t(need_n(), Route::enumeration, g.max_total);
  } else if (family == "eulerian-xy") {
    p = eulerian_xy(need_n(), Route::enumeration, g.max_total);
  } else if (family == "cyclic-eulerian") {
    p = cyclic_eulerian_xy(need_n(), g.max_total);
  } else if (family == "stirling") {
    p = stirling_poly(need_n(), g.max_total);
  } else if (family == "egf") {
    p = eulerian_egf_coefficient(need_n());
  } else if (family == "qstirling") {
    p = qstirling_poly(require_multiset(g), {g.max_total, g.jobs});
  } else if (family == "qstirling-t") {
    p = qstirling_t(require_multiset(g), {g.max_total, g.jobs});
  } else if (family == "rhs") {
    p = rhs_multiset_eulerian(require_multiset(g));
  } else {
    throw InvalidInput("unknown polynomial family " + family);
  }
  Output o;
  o.data = io::to_json(p);
  o.text.push_back(p.to_string());
  return o;
}

Output cmd_gamma(const Globals& g, int n) {
  Output o;
  if (n >= 0) {
    const auto r = gamma_extract(eulerian_xy(n, Route::enumeration, g.max_total), n + 1);
    o.data = io::to_json(r);
    if (!r.exact || !r.nonnegative) {
      o.code = kExitFail;
      o.outcome = "fail";
    }
    return o;
  }
  const MultisetSpec m = require_multiset(g);
  const auto r = partial_gamma(m, {g.max_total, g.jobs});
  o.data = io::to_json(r);
  o.data["multiset"] = m.multiplicities();
  for (const auto& [ij, v] : r.words) {
    o.text.push_back("i=" + std::to_string(ij.first) + " j=" + std::to_string(ij.second) + " " + v.str());
  }
  o.text.push_back(r.agree && r.nonnegative ? "agree" : "DISAGREE: " + r.failure);
  if (!r.agree || !r.nonnegative || !r.extraction_ok) {
    o.code = kExitFail;
    o.outcome = "fail";
  }
  return o;
}

Output cmd_verify(const Globals& g, std::vector<std::string> ids, int n) {
  if (ids.empty() || (ids.size() == 1 && ids.front() == "all")) {
    ids.clear();
    for (const auto& info : registry()) ids.push_back(info.id);
  }
  Output o;
  o.data = json::array();
  const auto given = optional_multiset(g);
  for (const auto& id : ids) {
    const auto& info = find_identity(id);
    MultisetSpec m;
    if (given) {
      m = *given;
    } else if (n > 0) {
      m = domain_multiset(info.domain, n);
    } else {
      throw InvalidInput("verify needs --multiset or --n");
    }
    if (ids.size() > 1 && !applies_to(info, m)) continue;
    const auto r = run_identity(id, IdentityParams{m, g.order, g.max_total, g.jobs});
    o.data.push_back(to_json(r));
    o.text.push_back(to_string(r.outcome) + " " + r.id + " " + m.to_string() + (r.reason.empty() ? "" : "  " + r.reason));
    if (r.outcome == Outcome::fail) {
      o.code = kExitFail;
      o.outcome = "fail";
    }
  }
  if (o.code == kExitFail && g.format != "json") {
    // Counterexamples always go to stdout as JSON.
    json ce = json::array();
    for (const auto& r : o.data) {
      if (r.at("outcome") == "fail") ce.push_back({{"id", r.at("id")}, {"counterexample", r.at("counterexample")}});
    }
    o.text.push_back(ce.dump());
  }
  return o;
}

Output cmd_sweep(const Globals& g, int up_to) {
  const auto report = sweep(up_to, g.order, g.max_total, g.jobs);
  Output o;
  o.data = to_json(report);
  for (const auto& r : report.results) {
    o.text.push_back(to_string(r.outcome) + " " + r.id + " " + r.multiset.to_string() +
                     (r.reason.empty() ? "" : "  " + r.reason));
  }
  o.text.push_back("passed " + std::to_string(report.passed) + ", failed " + std::to_string(report.failed) +
                   ", skipped " + std::to_string(report.skipped) + " over " + std::to_string(report.multisets) +
                   " multisets");
  if (!report.ok()) {
    o.code = kExitFail;
    o.outcome = "fail";
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted quasi-Stirling multipermutations: objects, bijections and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--multiset", g.multiset, "Multiplicities, e.g. 2,2,1");
  app.add_option("--order", g.order, "Series truncation order")->capture_default_str();
  app.add_option("--max-M", g.max_total, "Guard on the multiset size M")->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--log", g.log, "Append a line-delimited JSON run record to this file");

  std::string kind, in, word_text, name, family;
  int bars = -1, root = 0, n = -1, up_to = 5;
  bool trace = false;
  std::vector<std::string> ids;

  auto* enumerate = app.add_subcommand("enumerate", "List objects for a multiset");
  enumerate->add_option("kind", kind, "words|rooted|trees|unordered-trees|graphs|partitions|barred|coding")->required();
  enumerate->add_option("--bars", bars, "Bar count for barred partitions");
  enumerate->add_option("--root", root, "r for the coding table");

  auto* stats = app.add_subcommand("stats", "Statistics of a word, tree or partition");
  stats->add_option("kind", kind, "word|sibling|cyclic|tree|partition")->required();
  stats->add_option("--word", word_text, "Word as text (1221 or 7,8,2)");
  stats->add_option("--in", in, "JSON input file ('-' for stdin)");

  auto* map = app.add_subcommand("map", "Apply a bijection to JSON input");
  map->add_option("bijection", name, "phi|phi-inverse|psi1|psi1-inverse|psi2|psi2-inverse|Psi|Psi-inverse")
      ->required();
  map->add_option("--in", in, "JSON input file ('-' for stdin)");
  map->add_flag("--trace", trace, "Include the psi1 intermediate data");

  auto* poly = app.add_subcommand("poly", "Polynomial enumerators");
  poly->add_option("family", family, "eulerian|eulerian-xy|cyclic-eulerian|stirling|egf|qstirling|qstirling-t|rhs")
      ->required();
  poly->add_option("--n", n, "Size n");

  auto* gamma = app.add_subcommand("gamma", "Gamma tables (partial gamma for --multiset, bivariate for --n)");
  gamma->add_option("--n", n, "Size n for A_n(x,y)");

  auto* verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_option("ids", ids, "Identity ids, or 'all'");
  verify->add_option("--n", n, "Size n; picks the identity's own multiset family");

  auto* sweep_cmd = app.add_subcommand("sweep", "Run every identity over all multisets up to a size");
  sweep_cmd->add_option("--up-to", up_to, "Largest M in the sweep")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  std::string command;
  Output out;
  try {
    if (*enumerate) {
      command = "enumerate";
      out = cmd_enumerate(g, kind, bars, root);
    } else if (*stats) {
      command = "stats";
      out = cmd_stats(g, kind, word_text, in);
    } else if (*map) {
      command = "map";
      out = cmd_map(g, name, in, trace);
    } else if (*poly) {
      command = "poly";
      out = cmd_poly(g, family, n);
    } else if (*gamma) {
      command = "gamma";
      out = cmd_gamma(g, n);
    } else if (*verify) {
      command = "verify";
      out = cmd_verify(g, ids, n);
    } else {
      command = "sweep";
      out = cmd_sweep(g, up_to);
    }
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return kExitGuard;
  } catch (const InvalidInput& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

  const std::string body = render(out, g.format);
  if (g.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(g.out);
    if (!f) {
      std::cerr << "usage error: cannot write " << g.out << '\n';
      return kExitUsage;
    }
    f << body;
  }

  if (!g.log.empty()) {
    json params{{"argv", std::vector<std::string>(argv + 1, argv + argc)},
                {"multiset", g.multiset},
                {"order", g.order},
                {"max_M", g.max_total},
                {"jobs", g.jobs}};
    try {
      append_log(g.log, make_log_record(command, params, out.data, out.outcome, elapsed));
    } catch (const std::exception& e) {
      std::cerr << "usage error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return out.code;
}
