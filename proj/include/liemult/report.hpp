#ifndef LIEMULT_REPORT_HPP
#define LIEMULT_REPORT_HPP

#include <string>
#include <vector>

#include "liemult/catalog.hpp"
#include "liemult/theorems.hpp"

namespace liemult {

enum class OutputFormat { table, lines };

/// Human table or a single machine-readable line (stable field order,
/// byte-deterministic) with every invariant and applicable bound.
std::string format_info(const std::string& name, const LieAlgebra& l,
                        OutputFormat format);

struct SweepChecks {
  bool main = false;
  bool batten = false;
  bool kunneth = false;
  bool sr = false;
  bool t_classify = false;
};

/// Parses "main,batten,kunneth,sr,t-classify"; unknown names throw
/// invalid_parameter.
SweepChecks parse_checks(const std::string& csv);

struct SweepItem {
  std::string key;
  LieAlgebra algebra;
};

/// A failed check: the full serialized algebra is carried along so the
/// case is reproducible from the log alone.
struct Anomaly {
  std::string check;
  std::string key;
  std::string detail;
  std::string algebra_text;
};

struct SweepResult {
  std::vector<std::string> lines;  // per-check records, deterministic order
  std::vector<Anomaly> anomalies;
  std::size_t checks_run = 0;
};

/// Runs the selected checks over the items (sorted by key internally).
/// The kunneth check pairs items exhaustively up to total dimension 8
/// and adds a fixed-seed random sample of larger pairs; the sr check
/// enumerates the canonical basis lines of L^2 cap Z(L) as the
/// one-dimensional central ideals.
SweepResult run_sweep(std::vector<SweepItem> items, const SweepChecks& checks,
                      OutputFormat format);

/// Renders the result: per-check lines, anomaly blocks, summary line.
std::string render_sweep(const SweepResult& result, OutputFormat format);

/// "q" -> Q, "gf:p" -> GF(p); anything else throws invalid_parameter.
FieldDescriptor parse_field_flag(const std::string& spec);

/// Reduces a rational table mod p (or checks the field already matches).
StructureConstants convert_field(const StructureConstants& sc,
                                 const FieldDescriptor& target);

}  // namespace liemult

#endif
