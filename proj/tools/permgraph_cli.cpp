// Command-line front end. Talks to the library only through permgraph.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "permgraph/permgraph.h"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(pg_status status) {
  if (status != PG_OK) throw CliError(std::string(pg_status_name(status)) + " error: " + pg_last_error());
}

std::string take(char* s) {
  std::string out(s);
  pg_string_free(s);
  return out;
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Graph = std::unique_ptr<pg_graph, Deleter<pg_graph, pg_graph_free>>;
using GraphList = std::unique_ptr<pg_graph_list, Deleter<pg_graph_list, pg_graph_list_free>>;
using Perm = std::unique_ptr<pg_perm, Deleter<pg_perm, pg_perm_free>>;
using CyclePoly = std::unique_ptr<pg_cyclepoly, Deleter<pg_cyclepoly, pg_cyclepoly_free>>;
using BiPoly = std::unique_ptr<pg_bipoly, Deleter<pg_bipoly, pg_bipoly_free>>;
using PgmSampler = std::unique_ptr<pg_pgm_sampler, Deleter<pg_pgm_sampler, pg_pgm_sampler_free>>;
using CrpSampler = std::unique_ptr<pg_crp_sampler, Deleter<pg_crp_sampler, pg_crp_sampler_free>>;

/// Short text form of a "p/q" string: "8/1" prints as "8".
std::string short_form(const std::string& fraction) {
  if (fraction.size() > 2 && fraction.ends_with("/1")) return fraction.substr(0, fraction.size() - 2);
  return fraction;
}

struct Global {
  std::string format = "text";
  std::string out;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  bool brute = false;
  bool accept_cost = false;
};

Global global;

/// Everything a command produces goes through here so --out and --format
/// behave the same way for every subcommand.
class Output {
 public:
  void text(const std::string& s) { buffer_ << s; }
  void line(const std::string& s) { buffer_ << s << '\n'; }
  void flush() {
    if (global.out.empty()) {
      std::cout << buffer_.str();
      return;
    }
    std::ofstream file(global.out, std::ios::binary);
    if (!file) throw CliError("io error: cannot write '" + global.out + "'");
    file << buffer_.str();
  }

 private:
  std::ostringstream buffer_;
};

bool want_json() { return global.format == "json"; }
bool want_csv() { return global.format == "csv"; }

/// Canonical "p/q"; model parameters must be strictly positive.
std::string positive_rational(const std::string& text, const std::string& flag) {
  char* canonical = nullptr;
  int sign = 0;
  pg_status status = pg_rational_parse(text.c_str(), &canonical, &sign);
  if (status != PG_OK) throw CliError(flag + ": " + pg_last_error());
  std::string value = take(canonical);
  if (sign <= 0)
    throw CliError(flag + " must be > 0: the model assigns positive probabilities only when alpha > 0 and "
                          "beta > 0 (got " + text + ")");
  return value;
}

Graph read_graph(const std::string& path) {
  pg_graph* g = nullptr;
  check(pg_graph_read_file(path.c_str(), &g));
  return Graph(g);
}

json graph_json(const pg_graph* g) { return json::parse(take([&] {
  char* s = nullptr;
  check(pg_graph_to_json(g, &s));
  return s;
}())); }

std::string graph_text(const pg_graph* g) {
  char* s = nullptr;
  check(pg_graph_format(g, &s));
  return take(s);
}

std::string poly_text(const pg_bipoly* p) {
  char* s = nullptr;
  check(pg_bipoly_to_string(p, &s));
  return take(s);
}

json poly_json(const pg_bipoly* p) {
  char* s = nullptr;
  check(pg_bipoly_to_json(p, &s));
  return json::parse(take(s));
}

std::string call_string(const std::function<pg_status(char**)>& f) {
  char* s = nullptr;
  check(f(&s));
  return take(s);
}

/// The scalar document {"n","alpha","beta","value"} with optional fields.
void emit_value(Output& out, std::size_t n, const std::string& alpha, const std::string& beta,
                const std::string& quantity, const std::string& value) {
  if (want_json()) {
    json doc = {{"n", n}, {"quantity", quantity}, {"value", value}};
    if (!alpha.empty()) doc["alpha"] = alpha;
    if (!beta.empty()) doc["beta"] = beta;
    out.line(doc.dump());
  } else if (want_csv()) {
    out.line("n,alpha,beta,quantity,value");
    out.line(std::to_string(n) + "," + alpha + "," + beta + "," + quantity + "," + value);
  } else {
    out.line(short_form(value));
  }
}

void print_verdict(Output& out, bool pass, const std::string& detail) {
  out.line(std::string(pass ? "PASS" : "FAIL") + (detail.empty() ? "" : " " + detail));
}

std::string describe_graph(const json& g) {
  std::string s;
  if (g.contains("name")) s += g["name"].get<std::string>() + " ";
  if (g.contains("permutation")) s += g["permutation"].get<std::string>() + " ";
  s += "[";
  for (std::size_t i = 0; i < g["rows"].size(); ++i) s += (i ? "/" : "") + g["rows"][i].get<std::string>();
  return s + "]";
}

// --- permanent -------------------------------------------------------------

struct PermanentArgs {
  std::string alpha;
  bool poly = false;
  bool json_flag = false;
  std::string graph;
};

int run_permanent(const PermanentArgs& a) {
  Output out;
  Graph g = read_graph(a.graph);
  const bool as_json = a.json_flag || want_json();
  if (a.poly || a.alpha.empty()) {
    pg_cyclepoly* raw = nullptr;
    check(global.brute ? pg_cycle_polynomial_bruteforce(g.get(), &raw)
                       : pg_cycle_polynomial(g.get(), global.threads, global.accept_cost, &raw));
    CyclePoly p(raw);
    const std::size_t n = pg_cyclepoly_size(p.get());
    std::vector<std::string> coeffs;
    for (std::size_t k = 1; k <= n; ++k)
      coeffs.push_back(call_string([&](char** s) { return pg_cyclepoly_coefficient(p.get(), k, s); }));
    if (as_json) {
      json arr = json::array();
      for (const auto& c : coeffs) arr.push_back(json::parse(c));
      out.line(arr.dump());
    } else if (want_csv()) {
      out.line("k,count");
      for (std::size_t k = 0; k < coeffs.size(); ++k) out.line(std::to_string(k + 1) + "," + coeffs[k]);
    } else {
      for (const auto& c : coeffs) out.line(c);
    }
    out.flush();
    return kExitPass;
  }
  char* canonical = nullptr;
  int sign = 0;
  if (pg_rational_parse(a.alpha.c_str(), &canonical, &sign) != PG_OK) throw CliError("--alpha: " + std::string(pg_last_error()));
  const std::string alpha = take(canonical);
  const std::string value =
      call_string([&](char** s) { return pg_permanent_value(g.get(), alpha.c_str(), global.brute, s); });
  if (as_json) global.format = "json";
  emit_value(out, pg_graph_size(g.get()), alpha, "", "per_alpha", value);
  out.flush();
  return kExitPass;
}

// --- pgm -------------------------------------------------------------------

struct PgmArgs {
  std::size_t n = 0;
  std::string alpha = "1";
  std::string beta = "1";
  std::string family = "all";
  std::string graph;
  std::size_t count = 1;
  bool empirical = false;
  std::size_t samples = 100000;
  std::size_t trials = 8;
};

void require_n(std::size_t n) {
  if (n == 0) throw CliError("--n is required and must be at least 1");
}

int run_pgm_z(const PgmArgs& a) {
  require_n(a.n);
  Output out;
  const std::string alpha = positive_rational(a.alpha, "--alpha");
  const std::string beta = positive_rational(a.beta, "--beta");
  const std::string value = call_string(
      [&](char** s) { return pg_pgm_normalizer(a.n, alpha.c_str(), beta.c_str(), a.family.c_str(), global.brute, s); });
  emit_value(out, a.n, alpha, beta, "z", value);
  out.flush();
  return kExitPass;
}

int run_pgm_pmf(const PgmArgs& a) {
  if (a.graph.empty()) throw CliError("--graph is required");
  Output out;
  const std::string alpha = positive_rational(a.alpha, "--alpha");
  const std::string beta = positive_rational(a.beta, "--beta");
  Graph g = read_graph(a.graph);
  const std::string value = call_string(
      [&](char** s) { return pg_pgm_pmf(g.get(), alpha.c_str(), beta.c_str(), a.family.c_str(), s); });
  emit_value(out, pg_graph_size(g.get()), alpha, beta, "pmf", value);
  out.flush();
  return kExitPass;
}

int run_pgm_sample(const PgmArgs& a) {
  require_n(a.n);
  Output out;
  const std::string alpha = positive_rational(a.alpha, "--alpha");
  const std::string beta = positive_rational(a.beta, "--beta");
  pg_pgm_sampler* raw = nullptr;
  check(pg_pgm_sampler_new(a.n, alpha.c_str(), beta.c_str(), global.seed, &raw));
  PgmSampler sampler(raw);
  if (want_csv()) out.line("index,edges,rows");
  std::vector<std::uint8_t> cells(a.n * a.n);
  for (std::size_t i = 0; i < a.count; ++i) {
    check(pg_pgm_sampler_draw_cells(sampler.get(), cells.data(), cells.size()));
    std::vector<std::string> rows(a.n, std::string(a.n, '0'));
    std::size_t edges = 0;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c]) {
        rows[c / a.n][c % a.n] = '1';
        ++edges;
      }
    if (want_json()) {
      out.line(json{{"n", a.n}, {"rows", rows}}.dump());
    } else if (want_csv()) {
      std::string joined;
      for (const auto& r : rows) joined += (joined.empty() ? "" : "/") + r;
      out.line(std::to_string(i) + "," + std::to_string(edges) + "," + joined);
    } else {
      std::string text = std::to_string(a.n) + "\n";
      for (const auto& r : rows) text += r + "\n";
      out.text(text);
    }
  }
  out.flush();
  return kExitPass;
}

int run_pgm_degree(const PgmArgs& a) {
  require_n(a.n);
  Output out;
  const std::string beta = positive_rational(a.beta, "--beta");
  std::vector<std::string> exact;
  for (std::size_t k = 0; k < a.n; ++k)
    exact.push_back(call_string([&](char** s) { return pg_pgm_degree_pmf(a.n, beta.c_str(), k, s); }));
  std::vector<std::size_t> counts(a.n, 0);
  if (a.empirical) {
    const std::string alpha = positive_rational(a.alpha, "--alpha");
    pg_pgm_sampler* raw = nullptr;
    check(pg_pgm_sampler_new(a.n, alpha.c_str(), beta.c_str(), global.seed, &raw));
    PgmSampler sampler(raw);
    std::vector<std::uint8_t> cells(a.n * a.n);
    for (std::size_t i = 0; i < a.samples; ++i) {
      check(pg_pgm_sampler_draw_cells(sampler.get(), cells.data(), cells.size()));
      const auto degree = static_cast<std::size_t>(std::count(cells.begin(), cells.begin() + a.n, 1));
      ++counts[degree - 1];
    }
  }
  auto frequency = [&](std::size_t k) {
    std::ostringstream s;
    s.precision(6);
    s << std::fixed << static_cast<double>(counts[k]) / static_cast<double>(a.samples);
    return s.str();
  };
  if (want_json()) {
    json doc = {{"n", a.n}, {"beta", beta}, {"pmf", json::array()}};
    for (std::size_t k = 0; k < a.n; ++k) doc["pmf"].push_back({{"degree", k + 1}, {"probability", exact[k]}});
    if (a.empirical) {
      doc["samples"] = a.samples;
      doc["seed"] = global.seed;
      doc["empirical"] = json::array();
      for (std::size_t k = 0; k < a.n; ++k) doc["empirical"].push_back({{"degree", k + 1}, {"count", counts[k]}});
    }
    out.line(doc.dump());
  } else {
    out.line(a.empirical ? (want_csv() ? "degree,probability,empirical" : "degree probability empirical")
                         : (want_csv() ? "degree,probability" : "degree probability"));
    const std::string sep = want_csv() ? "," : " ";
    for (std::size_t k = 0; k < a.n; ++k)
      out.line(std::to_string(k + 1) + sep + short_form(exact[k]) + (a.empirical ? sep + frequency(k) : ""));
  }
  out.flush();
  return kExitPass;
}

int run_pgm_edges(const PgmArgs& a) {
  require_n(a.n);
  Output out;
  const std::string beta = positive_rational(a.beta, "--beta");
  emit_value(out, a.n, "", beta, "expected_edges",
             call_string([&](char** s) { return pg_pgm_expected_edges(a.n, beta.c_str(), s); }));
  out.flush();
  return kExitPass;
}

int run_pgm_tv(const PgmArgs& a) {
  require_n(a.n);
  Output out;
  const std::string alpha = positive_rational(a.alpha, "--alpha");
  const std::string beta = positive_rational(a.beta, "--beta");
  emit_value(out, a.n, alpha, beta, "total_variation",
             call_string([&](char** s) { return pg_pgm_total_variation(a.n, alpha.c_str(), beta.c_str(), s); }));
  out.flush();
  return kExitPass;
}

int run_pgm_exchangeability(const PgmArgs& a) {
  require_n(a.n);
  Output out;
  const std::string alpha = positive_rational(a.alpha, "--alpha");
  const std::string beta = positive_rational(a.beta, "--beta");
  int ok = 0;
  check(pg_pgm_exchangeability(a.n, alpha.c_str(), beta.c_str(), a.trials, global.seed, &ok));
  if (want_json())
    out.line(json({{"n", a.n}, {"alpha", alpha}, {"beta", beta}, {"trials", a.trials}, {"pass", ok != 0}}).dump());
  else
    print_verdict(out, ok != 0, "");
  out.flush();
  return ok ? kExitPass : kExitFail;
}

// --- crp -------------------------------------------------------------------

struct CrpArgs {
  std::size_t n = 0;
  std::string alpha = "1";
  std::string kind = "permutation";
  std::size_t count = 1;
  std::string op = "dr";
  std::string perm;
  std::string partition;
};

int run_crp_sample(const CrpArgs& a) {
  require_n(a.n);
  Output out;
  const std::string alpha = positive_rational(a.alpha, "--alpha");
  pg_crp_sampler* raw = nullptr;
  check(pg_crp_sampler_new(a.n, alpha.c_str(), global.seed, &raw));
  CrpSampler sampler(raw);
  if (want_csv()) out.line(std::string("index,") + a.kind);
  for (std::size_t i = 0; i < a.count; ++i) {
    std::string value;
    if (a.kind == "permutation") {
      pg_perm* p = nullptr;
      check(pg_crp_sampler_draw_permutation(sampler.get(), &p));
      Perm perm(p);
      value = call_string([&](char** s) { return pg_perm_format(perm.get(), s); });
    } else {
      value = call_string([&](char** s) { return pg_crp_sampler_draw_partition(sampler.get(), s); });
    }
    if (want_json()) out.line(json({{"n", a.n}, {a.kind, value}}).dump());
    else if (want_csv()) out.line(std::to_string(i) + ",\"" + value + "\"");
    else out.line(value);
  }
  out.flush();
  return kExitPass;
}

int run_crp_check(const CrpArgs& a, bool partitions) {
  require_n(a.n);
  Output out;
  const std::string alpha = positive_rational(a.alpha, "--alpha");
  int pass = 0;
  if (partitions) {
    check(pg_crp_partition_check(a.n, alpha.c_str(), &pass));
    if (want_json()) out.line(json({{"n", a.n}, {"alpha", alpha}, {"pass", pass != 0}}).dump());
    else print_verdict(out, pass != 0, "");
    out.flush();
    return pass ? kExitPass : kExitFail;
  }
  char* raw = nullptr;
  check(pg_crp_check(a.n, alpha.c_str(), a.op.c_str(), &raw, &pass));
  const json report = json::parse(take(raw));
  if (want_json()) {
    out.line(report.dump());
  } else {
    std::string detail = "n=" + std::to_string(a.n) + " alpha=" + short_form(alpha) + " op=" + a.op +
                         " checked=" + std::to_string(report["checked"].get<std::size_t>());
    if (a.op == "dr") detail += std::string(" census=") + (report["census_ok"].get<bool>() ? "ok" : "broken");
    print_verdict(out, pass != 0, detail);
    if (!report["violation"].is_null()) {
      const json& v = report["violation"];
      out.line("first violation " + v["permutation"].get<std::string>() + ": expected " +
               short_form(v["expected"].get<std::string>()) + ", preimage mass " +
               short_form(v["observed"].get<std::string>()));
    }
  }
  out.flush();
  return pass ? kExitPass : kExitFail;
}

int run_crp_pmf(const CrpArgs& a) {
  Output out;
  const std::string alpha = positive_rational(a.alpha, "--alpha");
  if (a.perm.empty() == a.partition.empty()) throw CliError("give exactly one of --perm or --partition");
  std::string value;
  std::size_t n = 0;
  if (!a.perm.empty()) {
    pg_perm* p = nullptr;
    check(pg_perm_parse(a.perm.c_str(), a.n, &p));
    Perm perm(p);
    n = pg_perm_size(perm.get());
    value = call_string([&](char** s) { return pg_crp_ewens_pmf(perm.get(), alpha.c_str(), s); });
  } else {
    value = call_string([&](char** s) { return pg_crp_partition_pmf(a.partition.c_str(), alpha.c_str(), s); });
    n = a.n;
  }
  emit_value(out, n, alpha, "", a.perm.empty() ? "partition_pmf" : "ewens_pmf", value);
  out.flush();
  return kExitPass;
}

int run_crp_rising(const CrpArgs& a) {
  Output out;
  char* canonical = nullptr;
  int sign = 0;
  if (pg_rational_parse(a.alpha.c_str(), &canonical, &sign) != PG_OK) throw CliError("--alpha: " + std::string(pg_last_error()));
  const std::string alpha = take(canonical);
  emit_value(out, a.n, alpha, "", "rising_factorial",
             call_string([&](char** s) { return pg_crp_rising_factorial(alpha.c_str(), a.n, s); }));
  out.flush();
  return kExitPass;
}

// --- projection ------------------------------------------------------------

struct ProjectArgs {
  std::string op;
  std::string graph;
  bool require_permutation = false;
  bool require_degree = false;
  bool count_only = false;
};

int run_project(const ProjectArgs& a) {
  Output out;
  Graph g = read_graph(a.graph);
  pg_graph* raw = nullptr;
  check(pg_project(g.get(), a.op.c_str(), &raw));
  Graph image(raw);
  if (want_json()) out.line(graph_json(image.get()).dump());
  else out.text(graph_text(image.get()));
  out.flush();
  return kExitPass;
}

int run_preimages(const ProjectArgs& a) {
  if (a.require_permutation && a.require_degree)
    throw CliError("--require-permutation and --require-degree are mutually exclusive");
  Output out;
  Graph g = read_graph(a.graph);
  const char* filter = a.require_permutation ? "permutation" : a.require_degree ? "degree" : "none";
  if (a.count_only) {
    std::uint64_t count = 0;
    check(pg_preimage_count(g.get(), a.op.c_str(), filter, &count));
    if (want_json()) out.line(json({{"op", a.op}, {"filter", filter}, {"count", count}}).dump());
    else out.line(std::to_string(count));
    out.flush();
    return kExitPass;
  }
  pg_graph_list* raw = nullptr;
  check(pg_preimages(g.get(), a.op.c_str(), filter, &raw));
  GraphList list(raw);
  const std::size_t size = pg_graph_list_size(list.get());
  if (want_json()) {
    json doc = {{"op", a.op}, {"filter", filter}, {"count", size}, {"graphs", json::array()}};
    for (std::size_t i = 0; i < size; ++i) doc["graphs"].push_back(graph_json(pg_graph_list_at(list.get(), i)));
    out.line(doc.dump());
  } else {
    for (std::size_t i = 0; i < size; ++i) out.text(graph_text(pg_graph_list_at(list.get(), i)));
  }
  out.flush();
  return kExitPass;
}

// --- consistency -----------------------------------------------------------

struct ConsistencyArgs {
  std::string op = "dr";
  std::string family = "all";
  std::size_t n = 0;
  std::string alpha;
  std::string beta;
  std::string alpha_next;
  std::string beta_next;
  std::string graph;
  std::string graph2;
};

std::string grid_from_flags(const ConsistencyArgs& a) {
  if (a.alpha.empty() && a.beta.empty() && a.alpha_next.empty() && a.beta_next.empty()) return {};
  if (a.alpha.empty() || a.beta.empty()) throw CliError("--alpha and --beta go together");
  const std::string an = positive_rational(a.alpha, "--alpha");
  const std::string bn = positive_rational(a.beta, "--beta");
  const std::string ax = a.alpha_next.empty() ? an : positive_rational(a.alpha_next, "--alpha-next");
  const std::string bx = a.beta_next.empty() ? bn : positive_rational(a.beta_next, "--beta-next");
  return json::array({{{"alpha_n", an}, {"beta_n", bn}, {"alpha_next", ax}, {"beta_next", bx}}}).dump();
}

void describe_witness(Output& out, const json& w) {
  const std::string type = w.value("type", "");
  out.line("witness: " + type);
  if (type == "witness_pair_certificate") {
    for (const auto& g : w["graphs"]) out.line("  graph " + describe_graph(g));
    out.line(std::string("  denominators equal: ") + (w["denominators_equal"].get<bool>() ? "yes" : "no") + " (" +
             w["denominator_text"].get<std::string>() + ")");
    out.line("  numerator difference: " + w["difference_text"].get<std::string>());
    out.line("  one-signed: " + std::string(w["difference_sign"].get<int>() != 0 ? "yes" : "no") +
             ", value at alpha=beta=1: " + short_form(w["difference_at_one"].get<std::string>()));
  } else if (type == "ratio_mismatch") {
    for (std::size_t i = 0; i < 2; ++i)
      out.line("  graph " + describe_graph(w["graphs"][i]) + " ratio " + short_form(w["ratios"][i].get<std::string>()));
  } else if (type == "zero_denominator") {
    out.line("  graph " + describe_graph(w["graph"]) + " has probability 0 but preimage weight " +
             short_form(w["preimage_weight"].get<std::string>()));
  } else if (type == "zero_mass_certificate") {
    out.line("  graph " + describe_graph(w["graph"]) + " has probability 0");
    out.line("  preimage weight: " + w["preimage_polynomial_text"].get<std::string>());
  } else if (type == "support_leak") {
    out.line("  " + std::to_string(w["leaking_count"].get<std::size_t>()) +
             " preimages project outside the family, weight " + short_form(w["leaked_weight"].get<std::string>()));
    for (const auto& l : w["leaking"])
      out.line("  " + describe_graph(l["preimage"]) + " -> " + describe_graph(l["image"]));
  }
}

int run_consistency_check(const ConsistencyArgs& a) {
  require_n(a.n);
  Output out;
  const std::string grid = grid_from_flags(a);
  char* raw = nullptr;
  int pass = 0;
  check(pg_consistency_check(a.op.c_str(), a.family.c_str(), a.n, grid.empty() ? nullptr : grid.c_str(),
                             global.threads, global.accept_cost, &raw, &pass));
  const json report = json::parse(take(raw));
  if (want_json()) {
    out.line(report.dump());
  } else {
    print_verdict(out, pass != 0,
                  "op=" + a.op + " family=" + a.family + " n=" + std::to_string(a.n) +
                      " method=" + report["method"].get<std::string>());
    if (report.contains("points"))
      for (const auto& p : report["points"])
        out.line("  alpha=" + short_form(p["alpha_n"].get<std::string>()) + "->" +
                 short_form(p["alpha_next"].get<std::string>()) + " beta=" + short_form(p["beta_n"].get<std::string>()) +
                 "->" + short_form(p["beta_next"].get<std::string>()) + " " + (p["pass"].get<bool>() ? "PASS" : "FAIL"));
    if (report.contains("witness")) describe_witness(out, report["witness"]);
  }
  out.flush();
  return pass ? kExitPass : kExitFail;
}

int run_consistency_certificate() {
  Output out;
  pg_bipoly* raw = nullptr;
  check(pg_dr_difference_certificate(&raw));
  BiPoly p(raw);
  if (want_json()) {
    out.line(poly_json(p.get()).dump());
  } else {
    out.line(poly_text(p.get()));
    out.line(poly_json(p.get()).dump());
  }
  out.flush();
  return pg_bipoly_uniform_sign(p.get()) != 0 ? kExitPass : kExitFail;
}

int run_consistency_rhs(const ConsistencyArgs& a) {
  Output out;
  Graph g = read_graph(a.graph);
  pg_bipoly* raw = nullptr;
  check(pg_ltp_rhs(g.get(), a.op.c_str(), a.family.c_str(), &raw));
  BiPoly p(raw);
  if (want_json()) {
    out.line(poly_json(p.get()).dump());
  } else {
    out.line(poly_text(p.get()));
  }
  out.flush();
  return kExitPass;
}

int run_consistency_pair(const ConsistencyArgs& a) {
  Output out;
  Graph g1 = read_graph(a.graph);
  Graph g2 = read_graph(a.graph2);
  const json w = json::parse(call_string([&](char** s) { return pg_witness_pair_certificate(g1.get(), g2.get(), a.op.c_str(), s); }));
  const bool refutes = w["refutes"].get<bool>();
  if (want_json()) {
    out.line(w.dump());
  } else {
    out.line(refutes ? "FAIL certificate found" : "no certificate");
    json typed = w;
    typed["type"] = "witness_pair_certificate";
    describe_witness(out, typed);
  }
  out.flush();
  return refutes ? kExitFail : kExitPass;
}

int run_consistency_chain(const ConsistencyArgs& a) {
  require_n(a.n);
  Output out;
  char* raw = nullptr;
  int pass = 0;
  check(pg_ss_contradiction_chain(a.n, &raw, &pass));
  const json report = json::parse(take(raw));
  if (want_json()) {
    out.line(report.dump());
  } else {
    for (const auto& step : report["steps"])
      out.line(std::string(step["pass"].get<bool>() ? "PASS " : "FAIL ") + step["name"].get<std::string>());
    print_verdict(out, pass != 0, "subselection chain n=" + std::to_string(a.n));
  }
  out.flush();
  return pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact alpha-permanents, permanental graph models, Ewens/CRP laws and projective consistency checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", global.out, "Write output to this file instead of stdout");
  app.add_option("--threads", global.threads, "Worker threads for the permanent DP and consistency scans")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--seed", global.seed, "Seed for every sampler (64-bit)");
  app.add_flag("--brute", global.brute, "Use the factorial/enumeration oracle instead of the fast path");
  app.add_flag("--accept-cost", global.accept_cost, "Lift the default size limits of exhaustive kernels");

  std::function<int()> action;

  // permanent
  PermanentArgs perm_args;
  auto* permanent = app.add_subcommand(
      "permanent", "alpha-permanent sum_sigma alpha^#cycles(sigma) over permutations sigma contained in the graph");
  permanent->add_option("--alpha", perm_args.alpha, "Evaluate per_alpha at this rational");
  permanent->add_flag("--poly", perm_args.poly, "Print the cycle counts c_1..c_n, one per line");
  permanent->add_flag("--json", perm_args.json_flag, "JSON output");
  permanent->add_option("graph", perm_args.graph, "Graph file")->required()->check(CLI::ExistingFile);
  permanent->callback([&] { action = [&] { return run_permanent(perm_args); }; });

  // pgm
  PgmArgs pgm_args;
  auto* pgm = app.add_subcommand("pgm", "Permanental graph model P(G) proportional to beta^#edges per_alpha(G)");
  pgm->require_subcommand(1);
  auto add_params = [&](CLI::App* cmd, bool with_alpha, bool with_n) {
    if (with_n) cmd->add_option("--n", pgm_args.n, "Number of vertices");
    if (with_alpha) cmd->add_option("--alpha", pgm_args.alpha, "alpha > 0 (p/q or decimal)");
    cmd->add_option("--beta", pgm_args.beta, "beta > 0 (p/q or decimal)");
    cmd->fallthrough();
  };
  auto* pgm_z = pgm->add_subcommand(
      "z", "Normalizer: alpha(alpha+1)...(alpha+n-1) beta^n (1+beta)^(n^2-n), or a sum over a family");
  add_params(pgm_z, true, true);
  pgm_z->add_option("--family", pgm_args.family, "Support family")
      ->check(CLI::IsMember({"all", "permutations", "partitions", "fixed-point-free", "single-cycle"}));
  pgm_z->callback([&] { action = [&] { return run_pgm_z(pgm_args); }; });
  auto* pgm_pmf = pgm->add_subcommand("pmf", "Exact probability of one graph");
  add_params(pgm_pmf, true, false);
  pgm_pmf->add_option("--graph", pgm_args.graph, "Graph file")->check(CLI::ExistingFile);
  pgm_pmf->add_option("--family", pgm_args.family, "Support family")
      ->check(CLI::IsMember({"all", "permutations", "partitions", "fixed-point-free", "single-cycle"}));
  pgm_pmf->callback([&] { action = [&] { return run_pgm_pmf(pgm_args); }; });
  auto* pgm_sample = pgm->add_subcommand(
      "sample", "Exact sampler: Ewens(alpha) permutation, then each other cell with probability beta/(1+beta)");
  add_params(pgm_sample, true, true);
  pgm_sample->add_option("--count", pgm_args.count, "Number of graphs");
  pgm_sample->callback([&] { action = [&] { return run_pgm_sample(pgm_args); }; });
  auto* pgm_degree = pgm->add_subcommand("degree", "Out-degree law of a vertex: 1 + Binomial(n-1, beta/(1+beta))");
  add_params(pgm_degree, true, true);
  pgm_degree->add_flag("--empirical", pgm_args.empirical, "Also tabulate sampled degrees");
  pgm_degree->add_option("--samples", pgm_args.samples, "Sample size for --empirical")->check(CLI::PositiveNumber);
  pgm_degree->callback([&] { action = [&] { return run_pgm_degree(pgm_args); }; });
  auto* pgm_edges = pgm->add_subcommand("edges", "Exact expected edge count n + (n^2-n) beta/(1+beta)");
  add_params(pgm_edges, false, true);
  pgm_edges->callback([&] { action = [&] { return run_pgm_edges(pgm_args); }; });
  auto* pgm_tv = pgm->add_subcommand("tv", "Total variation distance to Erdos-Renyi with p = beta/(1+beta), n <= 4");
  add_params(pgm_tv, true, true);
  pgm_tv->callback([&] { action = [&] { return run_pgm_tv(pgm_args); }; });
  auto* pgm_exch = pgm->add_subcommand("exchangeability", "Check P(tau G tau^-1) = P(G) over all graphs, n <= 4");
  add_params(pgm_exch, true, true);
  pgm_exch->add_option("--trials", pgm_args.trials, "Random relabellings per graph");
  pgm_exch->callback([&] { action = [&] { return run_pgm_exchangeability(pgm_args); }; });

  // crp
  CrpArgs crp_args;
  auto* crp = app.add_subcommand("crp", "Ewens law alpha^#cycles / alpha(alpha+1)...(alpha+n-1) and its seating process");
  crp->require_subcommand(1);
  auto add_crp = [&](CLI::App* cmd) {
    cmd->add_option("--n", crp_args.n, "Number of points");
    cmd->add_option("--alpha", crp_args.alpha, "alpha > 0 (p/q or decimal)");
    cmd->fallthrough();
  };
  auto* crp_sample = crp->add_subcommand("sample", "Sequential seating: new cycle w.p. alpha/(alpha+k), else after a seated point");
  add_crp(crp_sample);
  crp_sample->add_option("--kind", crp_args.kind, "What to print")->check(CLI::IsMember({"permutation", "partition"}));
  crp_sample->add_option("--count", crp_args.count, "Number of draws");
  crp_sample->callback([&] { action = [&] { return run_crp_sample(crp_args); }; });
  auto* crp_check = crp->add_subcommand(
      "check-dr", "Exact check that the n+1 delete-and-repair preimages carry the level-n Ewens mass, n <= 6");
  add_crp(crp_check);
  crp_check->add_option("--op", crp_args.op, "Projection to test")->check(CLI::IsMember({"ss", "dr"}));
  crp_check->callback([&] { action = [&] { return run_crp_check(crp_args, false); }; });
  auto* crp_partitions = crp->add_subcommand(
      "check-partitions", "Same check for alpha^#blocks prod (n_j - 1)! on set partitions, n <= 6");
  add_crp(crp_partitions);
  crp_partitions->callback([&] { action = [&] { return run_crp_check(crp_args, true); }; });
  auto* crp_pmf = crp->add_subcommand("pmf", "Exact Ewens probability of a permutation or partition");
  add_crp(crp_pmf);
  crp_pmf->add_option("--perm", crp_args.perm, "Permutation, e.g. \"(1 2)(3)\" or \"2 1 3\"");
  crp_pmf->add_option("--partition", crp_args.partition, "Partition, e.g. \"{1 2}{3}\"");
  crp_pmf->callback([&] { action = [&] { return run_crp_pmf(crp_args); }; });
  auto* crp_rising = crp->add_subcommand("rising", "Rising factorial alpha(alpha+1)...(alpha+n-1)");
  add_crp(crp_rising);
  crp_rising->callback([&] { action = [&] { return run_crp_rising(crp_args); }; });

  // projections
  ProjectArgs proj_args;
  auto* proj = app.add_subcommand(
      "project", "Drop the last vertex: ss keeps the top-left block, dr also adds i->j for each path i->last->j");
  proj->add_option("--op", proj_args.op, "ss or dr")->required()->check(CLI::IsMember({"ss", "dr"}));
  proj->add_option("graph", proj_args.graph, "Graph file")->required()->check(CLI::ExistingFile);
  proj->fallthrough();
  proj->callback([&] { action = [&] { return run_project(proj_args); }; });
  auto* pre = app.add_subcommand("preimages", "All (n+1)-graphs projecting onto the given graph, base n <= 6");
  pre->add_option("--op", proj_args.op, "ss or dr")->required()->check(CLI::IsMember({"ss", "dr"}));
  pre->add_flag("--require-permutation", proj_args.require_permutation, "Keep only graphs containing a permutation");
  pre->add_flag("--require-degree", proj_args.require_degree,
                "Keep only graphs whose every vertex has an out-edge and an in-edge");
  pre->add_flag("--count-only", proj_args.count_only, "Print only the number of preimages");
  pre->add_option("graph", proj_args.graph, "Graph file")->required()->check(CLI::ExistingFile);
  pre->fallthrough();
  pre->callback([&] { action = [&] { return run_preimages(proj_args); }; });

  // consistency
  ConsistencyArgs cons_args;
  auto* cons = app.add_subcommand(
      "consistency", "Law of total probability P_n(G) = sum of P_(n+1) over the preimages of G, checked exactly");
  cons->require_subcommand(1);
  auto* cons_check = cons->add_subcommand(
      "check", "Exhaustive check over a family (or a parameter-free certificate), exit 1 on FAIL");
  cons_check->add_option("--op", cons_args.op, "ss or dr")->check(CLI::IsMember({"ss", "dr"}));
  cons_check->add_option("--family", cons_args.family, "Support family")
      ->check(CLI::IsMember({"all", "permutations", "partitions", "fixed-point-free", "single-cycle"}));
  cons_check->add_option("--n", cons_args.n, "Level n");
  cons_check->add_option("--alpha", cons_args.alpha, "Single grid point instead of the default 3x3 grid");
  cons_check->add_option("--beta", cons_args.beta, "Single grid point instead of the default 3x3 grid");
  cons_check->add_option("--alpha-next", cons_args.alpha_next, "alpha at level n+1 (default: same)");
  cons_check->add_option("--beta-next", cons_args.beta_next, "beta at level n+1 (default: same)");
  cons_check->fallthrough();
  cons_check->callback([&] { action = [&] { return run_consistency_check(cons_args); }; });
  auto* cons_cert = cons->add_subcommand(
      "certificate", "Difference of the dr preimage polynomials of the two 4-vertex witness graphs");
  cons_cert->fallthrough();
  cons_cert->callback([&] { action = [&] { return run_consistency_certificate(); }; });
  auto* cons_rhs = cons->add_subcommand("rhs", "Preimage polynomial sum over preimages of b^#edges per_a");
  cons_rhs->add_option("--op", cons_args.op, "ss or dr")->check(CLI::IsMember({"ss", "dr"}));
  cons_rhs->add_option("--family", cons_args.family, "Restrict preimages to a family")
      ->check(CLI::IsMember({"all", "permutations", "partitions", "fixed-point-free", "single-cycle"}));
  cons_rhs->add_option("graph", cons_args.graph, "Graph file")->required()->check(CLI::ExistingFile);
  cons_rhs->fallthrough();
  cons_rhs->callback([&] { action = [&] { return run_consistency_rhs(cons_args); }; });
  auto* cons_pair = cons->add_subcommand(
      "pair", "Parameter-free comparison of two graphs with equal denominators, exit 1 when it refutes");
  cons_pair->add_option("--op", cons_args.op, "ss or dr")->check(CLI::IsMember({"ss", "dr"}));
  cons_pair->add_option("g1", cons_args.graph, "First graph file")->required()->check(CLI::ExistingFile);
  cons_pair->add_option("g2", cons_args.graph2, "Second graph file")->required()->check(CLI::ExistingFile);
  cons_pair->fallthrough();
  cons_pair->callback([&] { action = [&] { return run_consistency_pair(cons_args); }; });
  auto* cons_chain = cons->add_subcommand(
      "ss-chain", "Step-by-step refutation of subselection consistency, 2 <= n <= 6");
  cons_chain->add_option("--n", cons_args.n, "Level n");
  cons_chain->fallthrough();
  cons_chain->callback([&] { action = [&] { return run_consistency_chain(cons_args); }; });

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
  if (!action) {
    std::cerr << "error: no command given\n";
    return kExitUsage;
  }
  try {
    return action();
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
