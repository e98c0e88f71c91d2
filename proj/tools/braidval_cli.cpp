// braidval: exact and sampled evaluation of Jones/HOMFLYPT invariants of
// braid closures at roots of unity, plus circuit-to-braid compilation.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "braidval/compiler.hpp"
#include "braidval/invariants.hpp"
#include "braidval/sampler.hpp"

using namespace braidval;

namespace {

// Flat record with a stable key order; numbers printed with 15 significant
// digits so seeded runs are byte-identical in json and csv.
class Record {
 public:
  void add(const std::string& key, const std::string& value, bool quote = true) {
    fields_.push_back({key, quote ? quoted(value) : value, value});
  }
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void add(const std::string& key, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", value);
    fields_.push_back({key, buf, buf});
  }
  void add(const std::string& key, long long value) {
    fields_.push_back({key, std::to_string(value), std::to_string(value)});
  }
  void add(const std::string& key, bool value) {
    fields_.push_back({key, value ? "true" : "false", value ? "true" : "false"});
  }

  void print(const std::string& format, std::ostream& os) const {
    if (format == "json") {
      os << '{';
      for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (i) os << ',';
        os << quoted(fields_[i].key) << ':' << fields_[i].json;
      }
      os << "}\n";
    } else if (format == "csv") {
      for (std::size_t i = 0; i < fields_.size(); ++i) os << (i ? "," : "") << fields_[i].key;
      os << '\n';
      for (std::size_t i = 0; i < fields_.size(); ++i) {
        std::string v = fields_[i].plain;
        const bool needs_quote = v.find_first_of(",\"\n") != std::string::npos;
        if (needs_quote) {
          std::string q = "\"";
          for (char ch : v) q += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
          q += '"';
          v = q;
        }
        os << (i ? "," : "") << v;
      }
      os << '\n';
    } else {
      std::size_t w = 0;
      for (const auto& f : fields_) w = std::max(w, f.key.size());
      for (const auto& f : fields_)
        os << f.key << std::string(w - f.key.size() + 2, ' ') << f.plain << '\n';
    }
  }

 private:
  struct Field {
    std::string key;
    std::string json;
    std::string plain;
  };
  static std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += '"';
    return out;
  }
  std::vector<Field> fields_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ClosureArgs {
  bool trace = false, plat = false, generalized = false;
  int p = 0, r = 0;
  std::string top, bottom;

  ClosureSpec build(const BraidWord& b) const {
    ClosureSpec spec;
    if (plat)
      spec = ClosureSpec::plat(b.strands);
    else if (generalized)
      spec = ClosureSpec::generalized(p, r);
    else
      spec = ClosureSpec::trace(b.strands);
    if (!top.empty()) spec.x = parse_braid(top);
    if (!bottom.empty()) spec.y = parse_braid(bottom);
    spec.validate(b.strands);
    return spec;
  }

  void attach(CLI::App* cmd) {
    cmd->add_flag("--trace", trace, "trace closure (default)");
    cmd->add_flag("--plat", plat, "plat closure");
    cmd->add_flag("--generalized", generalized, "generalized closure (needs --p/--r)");
    cmd->add_option("--p", p, "plat pairs of the generalized closure");
    cmd->add_option("--r", r, "trace strands of the generalized closure");
    cmd->add_option("--top", top, "top framing braid x (braid text)");
    cmd->add_option("--bottom", bottom, "bottom framing braid y (braid text)");
  }

  const char* name() const { return plat ? "plat" : generalized ? "generalized" : "trace"; }
};

BraidWord braid_from(const std::string& inline_text, const std::string& path) {
  if (!path.empty()) return parse_braid(slurp(path));
  if (!inline_text.empty()) return parse_braid(inline_text);
  throw std::invalid_argument("no braid given (positional text or --input)");
}

int cmd_eval(const std::string& braid_text, const std::string& input, int k, int ell,
             const ClosureArgs& closure, bool with_oracle, const std::string& format) {
  const auto t0 = std::chrono::steady_clock::now();
  const BraidWord b = braid_from(braid_text, input);
  const ClosureSpec spec = closure.build(b);
  RootParams params(k, ell);

  const InvariantValue v = [&] {
    if (k == 2) return jones_generalized_closure(b, spec, params);
    if (spec.kind == ClosureKind::Trace) return homflypt_trace_closure(b, params);
    throw std::invalid_argument("plat/generalized closures require k = 2");
  }();

  Record rec;
  rec.add("closure", closure.name());
  rec.add("k", static_cast<long long>(k));
  rec.add("l", static_cast<long long>(ell));
  rec.add("braid", format_braid(b));
  rec.add("strands", static_cast<long long>(b.strands));
  rec.add("crossings", static_cast<long long>(b.length()));
  rec.add("exponent_sum", static_cast<long long>(b.exponent_sum()));
  rec.add("value_re", v.value.real());
  rec.add("value_im", v.value.imag());
  rec.add("value_abs", std::abs(v.value));
  rec.add("normalization", v.normalization);
  rec.add("normalized_abs", v.normalized_abs);
  if (with_oracle) {
    const double oracle = kauffman_oracle(spec, b, ell);
    rec.add("oracle_abs", oracle);
    rec.add("oracle_gap", std::abs(std::abs(v.value) - oracle));
  }
  if (format == "human") {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    rec.add("wall_ms", ms.count());
  }
  rec.print(format, std::cout);
  return 0;
}

int cmd_estimate(const std::string& braid_text, const std::string& input, int k, int ell,
                 const ClosureArgs& closure, double delta, std::uint64_t seed,
                 std::uint64_t min_samples, const std::string& mode, const std::string& route,
                 const std::string& sample_log, const std::string& format) {
  const BraidWord b = braid_from(braid_text, input);
  const ClosureSpec spec = closure.build(b);
  RootParams params(k, ell);

  EstimatorOptions opt;
  opt.delta = delta;
  opt.min_samples = min_samples;
  opt.mode = (mode == "full") ? SampleMode::ControlledCircuit : SampleMode::Bernoulli;
  opt.keep_samples = !sample_log.empty();

  Record rec;
  rec.add("closure", closure.name());
  rec.add("k", static_cast<long long>(k));
  rec.add("l", static_cast<long long>(ell));
  rec.add("braid", format_braid(b));
  rec.add("delta", delta);
  rec.add("seed", static_cast<long long>(seed));
  rec.add("mode", mode);
  rec.add("samples",
          static_cast<long long>(std::max(chernoff_samples(delta), min_samples)));

  auto log_samples = [&](const EstimatorRun& run) {
    if (sample_log.empty()) return;
    std::ofstream out(sample_log);
    out << "x,y\n";
    for (const auto& [x, y] : run.xy) out << int(x) << ',' << int(y) << '\n';
  };

  if (spec.kind == ClosureKind::Trace) {
    Rng rng(seed);
    EstimatorRun run = estimate_homflypt(b, params, opt, rng);
    rec.add("estimate_re", run.estimate.real());
    rec.add("estimate_im", run.estimate.imag());
    const Complex exact =
        normalized_trace(b, params) / std::pow(quantum_integer(k, ell), b.strands - 1);
    rec.add("exact_re", exact.real());
    rec.add("exact_im", exact.imag());
    rec.add("error", std::abs(run.estimate - exact));
    log_samples(run);
  } else {
    if (k != 2) throw std::invalid_argument("plat/generalized closures require k = 2");
    const double exact = jones_generalized_closure(b, spec, params).normalized_abs;
    const bool both = route == "both";
    double plat_est = 0, direct_est = 0;
    if (both || route == "plat") {
      Rng rng(seed);
      EstimatorRun run =
          estimate_jones_closure(b, spec, ell, opt, JonesRoute::ViaPlatConjugation, rng);
      plat_est = run.abs_estimate;
      rec.add("route_plat_estimate", run.abs_estimate);
      rec.add("route_plat_error", std::abs(run.abs_estimate - exact));
      log_samples(run);
    }
    if (both || route == "direct") {
      Rng rng(seed);
      EstimatorRun run = estimate_jones_closure(b, spec, ell, opt, JonesRoute::Direct, rng);
      direct_est = run.abs_estimate;
      rec.add("route_direct_estimate", run.abs_estimate);
      rec.add("route_direct_error", std::abs(run.abs_estimate - exact));
      log_samples(run);
    }
    if (both) rec.add("route_gap", std::abs(plat_est - direct_est));
    rec.add("exact", exact);
  }
  rec.print(format, std::cout);
  return 0;
}

int cmd_compile(const std::string& circuit_path, int ell, double eps, const std::string& output,
                int net_depth, int beam_width, int beam_depth, int sk_depth,
                const std::string& format) {
  const QuantumCircuit circuit = QuantumCircuit::parse(slurp(circuit_path));
  CompilerOptions opt;
  opt.net_depth = net_depth;
  opt.beam_width = beam_width;
  opt.beam_depth = beam_depth;
  opt.sk_depth = sk_depth;

  const CompiledBraid cb = compile_circuit(circuit, ell, eps, opt);
  const VerifyReport rep = verify_compiled(cb, circuit);

  if (!output.empty()) {
    std::ofstream out(output);
    out << format_braid(cb.braid) << '\n';
  }

  Record rec;
  rec.add("qubits", static_cast<long long>(circuit.qubits));
  rec.add("gates", static_cast<long long>(circuit.gates.size()));
  rec.add("l", static_cast<long long>(ell));
  rec.add("eps_target", eps);
  rec.add("braid_length", static_cast<long long>(cb.braid.length()));
  rec.add("eps_achieved", cb.eps_achieved);
  rec.add("eps_budget", cb.eps_budget);
  rec.add("target_met", cb.target_met);
  rec.add("amp_circuit_sq", rep.amp_circuit_sq);
  rec.add("amp_braid_sq", rep.amp_braid_sq);
  rec.add("gap", rep.gap);
  rec.add("verify_pass", rep.pass);
  if (!output.empty()) rec.add("braid_file", output);
  rec.print(format, std::cout);
  return cb.target_met ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jones/HOMFLYPT invariants of braid closures at roots of unity"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "output format: human, json, csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  // eval
  auto* eval = app.add_subcommand("eval", "exact invariant of a braid closure");
  std::string braid_text, input_path;
  int k = 2, ell = 5;
  ClosureArgs closure;
  bool with_oracle = false;
  eval->add_option("braid", braid_text, "braid text, e.g. \"n:4; word: 2 -3 2\"");
  eval->add_option("--input", input_path, "file containing the braid text");
  eval->add_option("--k", k, "HOMFLYPT index k (k = 2 is Jones)");
  eval->add_option("--l", ell, "root of unity order");
  closure.attach(eval);
  eval->add_flag("--oracle", with_oracle, "also run the Kauffman bracket oracle");

  // estimate
  auto* est = app.add_subcommand("estimate", "simulated quantum additive approximation");
  std::string est_braid, est_input, mode = "full", route = "direct", sample_log;
  int est_k = 2, est_ell = 5;
  double delta = 0.1;
  std::uint64_t seed = 0, min_samples = 0;
  ClosureArgs est_closure;
  est->add_option("braid", est_braid, "braid text");
  est->add_option("--input", est_input, "file containing the braid text");
  est->add_option("--k", est_k, "HOMFLYPT index k");
  est->add_option("--l", est_ell, "root of unity order");
  est_closure.attach(est);
  est->add_option("--delta", delta, "additive accuracy");
  est->add_option("--seed", seed, "random seed");
  est->add_option("--samples", min_samples, "raise the sample count above the bound");
  est->add_option("--mode", mode, "fast (Bernoulli) or full (controlled circuit)")
      ->check(CLI::IsMember({"fast", "full"}));
  est->add_option("--route", route, "jones route: direct, plat, both")
      ->check(CLI::IsMember({"direct", "plat", "both"}));
  est->add_option("--sample-log", sample_log, "write X,Y samples to this CSV file");

  // compile
  auto* comp = app.add_subcommand("compile", "compile a circuit into a braid");
  std::string circuit_path, braid_out;
  int comp_ell = 5, net_depth = 4, beam_width = 2000, beam_depth = 28, sk_depth = 0;
  double eps = 0.3;
  comp->add_option("circuit", circuit_path, "circuit file")->required();
  comp->add_option("--l", comp_ell, "root of unity order (>= 5, != 6)");
  comp->add_option("--epsilon", eps, "target operator-norm accuracy");
  comp->add_option("--output", braid_out, "write the braid text here");
  comp->add_option("--net-depth", net_depth, "exhaustive net depth");
  comp->add_option("--beam-width", beam_width, "beam width (0 disables)");
  comp->add_option("--beam-depth", beam_depth, "beam extension depth");
  comp->add_option("--sk-depth", sk_depth, "commutator recursion depth");

  // weights
  auto* wts = app.add_subcommand("weights", "Markov weight table as CSV");
  int w_k = 2, w_ell = 5, w_n = 4;
  std::string w_out;
  wts->add_option("--k", w_k, "HOMFLYPT index k");
  wts->add_option("--l", w_ell, "root of unity order");
  wts->add_option("--n", w_n, "number of boxes");
  wts->add_option("--output", w_out, "output file (stdout when absent)");

  // graph
  auto* gr = app.add_subcommand("graph", "restricted Young graph in DOT format");
  int g_k = 2, g_ell = 5, g_n = 4;
  std::string g_out;
  gr->add_option("--k", g_k, "HOMFLYPT index k");
  gr->add_option("--l", g_ell, "root of unity order");
  gr->add_option("--n", g_n, "number of layers");
  gr->add_option("--output", g_out, "output file (stdout when absent)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed())
      return cmd_eval(braid_text, input_path, k, ell, closure, with_oracle, format);
    if (est->parsed())
      return cmd_estimate(est_braid, est_input, est_k, est_ell, est_closure, delta, seed,
                          min_samples, mode, route, sample_log, format);
    if (comp->parsed())
      return cmd_compile(circuit_path, comp_ell, eps, braid_out, net_depth, beam_width,
                         beam_depth, sk_depth, format);
    if (wts->parsed()) {
      MarkovWeightTable table(w_n, RootParams(w_k, w_ell));
      std::string text;
      if (format == "json") {
        text = "[";
        bool first = true;
        for (const WeightEntry& e : table.entries()) {
          Record row;
          row.add("lambda", e.lambda.to_string());
          row.add("dim", e.dim.str(), false);
          row.add("weight", e.weight);
          row.add("probability", e.probability);
          std::ostringstream os;
          row.print("json", os);
          std::string line = os.str();
          line.pop_back();  // trailing newline
          text += (first ? "" : ",") + line;
          first = false;
        }
        text += "]\n";
      } else {
        text = table.to_csv();
      }
      if (w_out.empty())
        std::cout << text;
      else
        std::ofstream(w_out) << text;
      return 0;
    }
    if (gr->parsed()) {
      RootParams params(g_k, g_ell);
      YoungGraph graph(g_n, params);
      std::string text;
      if (format == "json") {
        std::ostringstream os;
        os << "{\"layers\":[";
        for (int i = 0; i <= g_n; ++i) {
          os << (i ? "," : "") << '[';
          bool first = true;
          for (const YoungDiagram& d : graph.layer(i)) {
            os << (first ? "" : ",") << "{\"diagram\":\"" << d.to_string() << "\",\"paths\":"
               << graph.path_count(d).str() << '}';
            first = false;
          }
          os << ']';
        }
        os << "]}\n";
        text = os.str();
      } else {
        text = graph.to_dot();
      }
      if (g_out.empty())
        std::cout << text;
      else
        std::ofstream(g_out) << text;
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  } catch (const std::length_error& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
