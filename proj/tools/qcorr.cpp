// qcorr: information content of correlations in N-qubit states.
//
//   qcorr analyze --state ghz:4 --partition ab|cd [--units bits] [--json]
//   qcorr sweep   --state ghz:6 [--size-alpha 2] [--json]
//   qcorr entropy --state ue:4 --subset ab
//   qcorr purify  --state ghz:4 --subset ab [--json]
//   qcorr dump    --state bellpairs:2 [--out state.json]
//
// Exit codes: 0 success, 2 parse or validation error, 3 size cap exceeded.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "qcorr/purification.hpp"
#include "qcorr/report.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitSize = 3;

struct Common {
  std::string state;
  std::string units = "nats";
  bool json = false;
};

void add_state_options(CLI::App* cmd, Common& opts) {
  cmd->add_option("--state", opts.state, "ghz:N | ue:N | bellpairs:K | ghzblocks:N | file:PATH")->required();
  cmd->add_flag("--json", opts.json, "emit a JSON document");
}

void print_value(const std::string& label, double nats, qcorr::Units units) {
  const double shown = units == qcorr::Units::Bits ? qcorr::nats_to_bits(nats) : nats;
  std::cout << std::left << std::setw(22) << label << std::fixed << std::setprecision(9) << shown << ' '
            << qcorr::to_string(units) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information content of correlations in N-qubit states"};
  app.require_subcommand(1);
  app.fallthrough();
  int max_qubits = qcorr::kDefaultMaxQubits;
  app.add_option("--max-qubits", max_qubits, "register size cap")->check(CLI::Range(1, 20));

  Common analyze_opts;
  std::string partition_text = "all";
  auto* analyze = app.add_subcommand("analyze", "decompose correlations across given partitions");
  add_state_options(analyze, analyze_opts);
  analyze->add_option("--partition", partition_text, "ab|cd[,ac|bd...] or all");
  analyze->add_option("--units", analyze_opts.units, "nats or bits");

  Common sweep_opts;
  std::optional<int> size_alpha;
  auto* sweep = app.add_subcommand("sweep", "decompose across every canonical bipartition");
  add_state_options(sweep, sweep_opts);
  sweep->add_option("--size-alpha", size_alpha, "only partitions with this many qubits on the qubit-0 side");
  sweep->add_option("--units", sweep_opts.units, "nats or bits");

  Common entropy_opts;
  std::string entropy_subset;
  auto* entropy = app.add_subcommand("entropy", "von Neumann entropy of a reduced state");
  add_state_options(entropy, entropy_opts);
  entropy->add_option("--subset", entropy_subset, "qubits to keep, e.g. ab or 0,1")->required();
  entropy->add_option("--units", entropy_opts.units, "nats or bits");

  Common purify_opts;
  std::string purify_subset;
  auto* purify = app.add_subcommand("purify", "minimal purification of a reduced state");
  add_state_options(purify, purify_opts);
  purify->add_option("--subset", purify_subset, "qubits to keep, e.g. ab or 0,1")->required();

  std::string dump_state;
  std::string dump_out;
  auto* dump = app.add_subcommand("dump", "write a state file");
  dump->add_option("--state", dump_state, "state spec")->required();
  dump->add_option("--out", dump_out, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (analyze->parsed()) {
      const auto spec = qcorr::parse_state_spec(analyze_opts.state);
      const auto units = qcorr::parse_units(analyze_opts.units);
      const auto state = qcorr::build_state(spec, max_qubits);
      const auto cuts = partition_text == "all" ? qcorr::enumerate_bipartitions(state.n_qubits())
                                                : qcorr::parse_partition_list(partition_text, state.n_qubits());
      const auto report = qcorr::analyze(qcorr::to_density(state), cuts, units, spec.text);
      if (analyze_opts.json) {
        std::cout << qcorr::to_json(report).dump(2) << '\n';
      } else {
        qcorr::print_table(std::cout, report);
      }
    } else if (sweep->parsed()) {
      const auto spec = qcorr::parse_state_spec(sweep_opts.state);
      const auto report = qcorr::sweep(spec, size_alpha, qcorr::parse_units(sweep_opts.units), max_qubits);
      if (sweep_opts.json) {
        std::cout << qcorr::to_json(report).dump(2) << '\n';
      } else {
        qcorr::print_table(std::cout, report);
      }
    } else if (entropy->parsed()) {
      const auto spec = qcorr::parse_state_spec(entropy_opts.state);
      const auto units = qcorr::parse_units(entropy_opts.units);
      const auto state = qcorr::build_state(spec, max_qubits);
      const auto keep = qcorr::parse_qubit_set(entropy_subset, state.n_qubits());
      const auto reduced = qcorr::reduce(qcorr::to_density(state), keep);
      const double s = qcorr::von_neumann_entropy(reduced);
      if (entropy_opts.json) {
        nlohmann::json j = {{"state", spec.text},
                            {"subset", entropy_subset},
                            {"units", std::string(qcorr::to_string(units))},
                            {"entropy", qcorr::round_significant(s)}};
        if (units == qcorr::Units::Bits) j["entropy_bits"] = qcorr::round_significant(qcorr::nats_to_bits(s));
        std::cout << j.dump(2) << '\n';
      } else {
        print_value("entropy", s, units);
      }
    } else if (purify->parsed()) {
      const auto spec = qcorr::parse_state_spec(purify_opts.state);
      const auto state = qcorr::build_state(spec, max_qubits);
      const auto keep = qcorr::parse_qubit_set(purify_subset, state.n_qubits());
      const auto reduced = qcorr::reduce(qcorr::to_density(state), keep);
      const auto result = qcorr::purify(reduced);
      const auto purified = qcorr::to_density(result.purified);
      const int total_qubits = result.system_qubits + result.ancilla_qubits;
      std::vector<int> ancilla;
      for (int q = result.system_qubits; q < total_qubits; ++q) ancilla.push_back(q);
      const double ancilla_entropy =
          ancilla.empty() ? 0.0 : qcorr::von_neumann_entropy(qcorr::reduce(purified, ancilla));
      const double correlation = qcorr::total_correlation(purified);
      const bool maximal = qcorr::is_maximally_correlated_purification(result);
      if (purify_opts.json) {
        nlohmann::json j = {{"state", spec.text},
                            {"subset", purify_subset},
                            {"rank", qcorr::spectral_rank(reduced)},
                            {"system_qubits", result.system_qubits},
                            {"ancilla_qubits", result.ancilla_qubits},
                            {"residual", qcorr::round_significant(result.residual)},
                            {"ancilla_entropy", qcorr::round_significant(ancilla_entropy)},
                            {"total_correlation", qcorr::round_significant(correlation)},
                            {"maximally_correlated", maximal},
                            {"purified", qcorr::state_to_json(result.purified)}};
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "rank                  " << qcorr::spectral_rank(reduced) << '\n'
                  << "ancilla qubits        " << result.ancilla_qubits << '\n'
                  << "residual              " << std::scientific << std::setprecision(3) << result.residual << '\n';
        print_value("ancilla entropy", ancilla_entropy, qcorr::Units::Nats);
        print_value("total correlation", correlation, qcorr::Units::Nats);
        std::cout << "maximally correlated  " << (maximal ? "yes" : "no") << '\n';
      }
    } else if (dump->parsed()) {
      const auto state = qcorr::build_state(qcorr::parse_state_spec(dump_state), max_qubits);
      if (dump_out.empty()) {
        std::cout << qcorr::state_to_json(state).dump(1) << '\n';
      } else {
        qcorr::save_state_file(state, dump_out);
      }
    }
  } catch (const qcorr::SizeError& e) {
    std::cerr << "qcorr: " << e.what() << '\n';
    return kExitSize;
  } catch (const qcorr::Error& e) {
    std::cerr << "qcorr: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
