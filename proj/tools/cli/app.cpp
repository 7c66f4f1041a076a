#include "commands.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace qvb::cli {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum-volume benchmarking: generate, compile, simulate and score QV circuits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qvbench 0.1.0");

  GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "Write a suite of QV model circuits and a manifest");
  g->add_option("-m,--width", gen.width, "Qubits per circuit")->required();
  g->add_option("-d,--depth", gen.depth, "Layers (default: width)");
  g->add_option("-n,--count", gen.count, "Number of circuits");
  g->add_option("-s,--seed", gen.seed, "Base seed")->envname("QVBENCH_SEED");
  g->add_option("-o,--out", gen.outdir, "Output directory")->envname("QVBENCH_OUT");
  g->add_option("-j,--workers", gen.workers, "Worker threads (0: all cores)");

  EnumerateOptions en;
  auto* e = app.add_subcommand("enumerate", "List connected qubit subsets of a device");
  e->add_option("-p,--profile", en.profile, "Profile file or builtin name")->required();
  e->add_option("-n,--size", en.size, "Subset size")->required();
  e->add_flag("--json", en.json, "Emit JSON");

  CompileOptions co;
  std::string co_subset;
  auto* c = app.add_subcommand("compile", "Compile a circuit file to a device");
  c->add_option("-p,--profile", co.profile, "Profile file or builtin name")->required();
  c->add_option("-i,--input", co.input, "Input circuit")->required();
  c->add_option("-o,--output", co.output, "Output circuit (layout written to <output>.layout.json)")->required();
  c->add_option("--subset", co_subset, "Comma-separated device qubits, one per logical qubit");
  c->add_flag("--spill", co.allow_spill, "Allow routing through neighbouring qubits");
  c->add_option("-s,--seed", co.seed, "Seed for layout reshuffles")->envname("QVBENCH_SEED");

  RunOptions run;
  std::string m_range, sigma = "printed";
  bool no_early_stop = false, no_hopeless = false;
  auto* r = app.add_subcommand("run", "Run the QV protocol and persist suite results");
  r->add_option("-p,--profile", run.profile, "Profile file or builtin name")->required();
  r->add_option("-m,--width", m_range, "Width m or range lo:hi")->required();
  r->add_option("--subset", run.subset, "auto | enumerate | comma-separated qubits");
  r->add_option("-n,--count", run.protocol.max_circuits, "Maximum circuits per suite");
  r->add_option("--shots", run.protocol.shots, "Shots per circuit");
  r->add_option("-s,--seed", run.protocol.seed, "Base seed")->envname("QVBENCH_SEED");
  r->add_option("--min-circuits", run.protocol.min_circuits, "Circuits before any early stop");
  r->add_option("--stop-conf", run.protocol.early_stop_conf, "Confidence that ends a suite early");
  r->add_flag("--no-early-stop", no_early_stop, "Never stop on pass");
  r->add_flag("--no-hopeless-stop", no_hopeless, "Never stop on hopeless failure");
  r->add_option("--sigma", sigma, "printed | binomial")->check(CLI::IsMember({"printed", "binomial"}));
  r->add_flag("--spill", run.protocol.allow_spill, "Allow routing through neighbouring qubits");
  r->add_option("-j,--workers", run.protocol.workers, "Worker threads (0: all cores)");
  r->add_option("-o,--out", run.outdir, "Output directory")->envname("QVBENCH_OUT");
  r->add_flag("--save-counts", run.save_counts, "Write per-circuit counts files");

  ReportOptions rep;
  auto* rp = app.add_subcommand("report", "Emit plot data from suite result files");
  rp->add_option("inputs", rep.inputs, "Suite JSON files")->required();
  rp->add_option("-o,--out", rep.outdir, "Output directory")->envname("QVBENCH_OUT");

  QvOptions qv;
  auto* q = app.add_subcommand("qv", "Aggregate per-width verdicts into log2 QV");
  q->add_option("inputs", qv.inputs, "Suite JSON files")->required();

  ProfilesOptions prof;
  auto* pr = app.add_subcommand("profiles", "List builtin device profiles");
  pr->add_option("--export", prof.export_dir, "Write each profile as JSON into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitPass : kExitError;
  }

  if (*g) return cmd_generate(gen, out, err);
  if (*e) return cmd_enumerate(en, out, err);
  if (*c) {
    if (!co_subset.empty()) {
      std::vector<int> s;
      for (const auto& part : CLI::detail::split(co_subset, ',')) {
        try {
          s.push_back(std::stoi(part));
        } catch (const std::exception&) {
          err << "compile: bad --subset '" << co_subset << "'\n";
          return kExitError;
        }
      }
      co.subset = s;
    }
    return cmd_compile(co, out, err);
  }
  if (*r) {
    try {
      const auto colon = m_range.find(':');
      if (colon == std::string::npos) {
        run.m_min = run.m_max = std::stoi(m_range);
      } else {
        run.m_min = std::stoi(m_range.substr(0, colon));
        run.m_max = std::stoi(m_range.substr(colon + 1));
      }
    } catch (const std::exception&) {
      err << "run: bad --width '" << m_range << "'\n";
      return kExitError;
    }
    run.protocol.stop_on_pass = !no_early_stop;
    run.protocol.stop_on_hopeless = !no_hopeless;
    run.protocol.sigma = sigma == "binomial" ? SigmaFormula::Binomial : SigmaFormula::Printed;
    return cmd_run(run, out, err);
  }
  if (*rp) return cmd_report(rep, out, err);
  if (*q) return cmd_qv(qv, out, err);
  if (*pr) return cmd_profiles(prof, out, err);
  return kExitError;
}

}  // namespace qvb::cli
