#pragma once

// State specifications, state files, partition syntax and correlation
// reports: everything the command-line front end needs beyond the numerics.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qcorr/correlation.hpp"
#include "qcorr/partitions.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

enum class StateKind { Ghz, UniformEntangled, BellPairs, GhzBlocks, File };

// `ghz:N`, `ue:N` (N total qubits, even), `bellpairs:K`, `ghzblocks:N` (per
// block) or `file:PATH`.
struct StateSpec {
  StateKind kind = StateKind::Ghz;
  int parameter = 0;
  std::filesystem::path path;
  std::string text;  // as written, echoed in reports
};

StateSpec parse_state_spec(std::string_view text);

PureState build_state(const StateSpec& spec, int max_qubits = kDefaultMaxQubits);

// State file: {"n_qubits": n, "amplitudes": [[re, im], ...]} with 2^n
// big-endian amplitudes; the norm must be 1 within 1e-8.
PureState load_state_file(const std::filesystem::path& path, int max_qubits = kDefaultMaxQubits);
PureState state_from_json(const nlohmann::json& doc, int max_qubits = kDefaultMaxQubits);
nlohmann::json state_to_json(const PureState& s);
void save_state_file(const PureState& s, const std::filesystem::path& path);

// Qubit sets: letters (`abd`, a = qubit 0) or comma-separated indices (`0,1,3`).
std::vector<int> parse_qubit_set(std::string_view text, int n_qubits);

// `ab|cd` or `0,2|1,3`.
Partition parse_partition(std::string_view text, int n_qubits);

// Comma-separated partitions such as `ab|cd,ac|bd`.  Index syntax shares the
// comma, so a partition ends once it names all n qubits: `0,1|2,3,0,2|1,3`.
std::vector<Partition> parse_partition_list(std::string_view text, int n_qubits);

enum class Units { Nats, Bits };

std::string_view to_string(Units units);
Units parse_units(std::string_view text);

struct ReportEntry {
  Partition partition;
  Decomposition decomposition;
  Region external_region = Region::Classical;
  Region internal_alpha_region = Region::Classical;
  Region internal_beta_region = Region::Classical;
  bool product_across = false;
  ArakiLieb araki_lieb;
};

struct CorrelationReport {
  std::string state;
  int n_qubits = 0;
  double total_nats = 0;
  std::vector<double> single_qubit_entropies;
  BoundsReport bounds;
  Units units = Units::Nats;
  std::vector<ReportEntry> entries;
};

// Decomposes `rho` across each partition.  Region labels use the maximum
// attainable entropy of each side, |side| ln 2: the external value is banded
// against [|alpha| ln 2, |beta| ln 2] and each internal value against ln 2
// per qubit of its side.  Entries are evaluated concurrently and returned in
// input order.
CorrelationReport analyze(const DensityOperator& rho, std::span<const Partition> partitions, Units units,
                          std::string state_label = {});

// nullopt partitions means every canonical bipartition.
CorrelationReport analyze(const StateSpec& spec, const std::optional<std::vector<Partition>>& partitions, Units units,
                          int max_qubits = kDefaultMaxQubits);

// All canonical bipartitions, optionally only those with |alpha| = size_alpha.
CorrelationReport sweep(const StateSpec& spec, std::optional<int> size_alpha = std::nullopt, Units units = Units::Nats,
                        int max_qubits = kDefaultMaxQubits);

// Rounds to 12 significant digits, the precision of every reported number.
double round_significant(double value, int digits = 12);

// Values in nats; with bits requested each entry also carries a "bits" block.
nlohmann::json to_json(const CorrelationReport& report);

void print_table(std::ostream& os, const CorrelationReport& report);

}  // namespace qcorr
