#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "bergman/analysis.hpp"
#include "bergman/operators.hpp"
#include "bergman/spectral.hpp"

namespace bergman {

/// Shortest round-trip decimal form of a double (std::to_chars). Used
/// for every floating-point field in CSV output so identical inputs
/// give byte-identical files.
std::string format_double(double v);

/// Writers share one layout: a '#' metadata line, a column-header
/// line, then data rows. All numeric formatting goes through
/// format_double.

/// Metadata + "m,n,re,im"; one row per entry with |entry| > 0, row
/// major.
void write_matrix_csv(std::ostream& os, const OperatorMatrix& m);

/// Dense row-major JSON document:
/// {"alpha":..,"convention":..,"entries":[[re,im],..],"k":..,
///  "kind":..,"n_dim":..}
std::string matrix_json(const OperatorMatrix& m);

/// Metadata + "re,im"; eigenvalues in their sorted order.
void write_spectrum_csv(std::ostream& os, const OperatorMatrix& m,
                        const SpectrumResult& spectrum);

/// Metadata + "re,im,sigma_min"; re sweeps in the outer loop.
void write_pseudospectrum_csv(std::ostream& os, const OperatorMatrix& m,
                              const PseudospectrumGrid& grid);

/// Metadata + "axis_index,max_abs".
void write_decay_csv(std::ostream& os, const OperatorMatrix& m,
                     DecayAxis axis, const std::vector<double>& profile);

/// Metadata + "j,sup_value".
void write_tail_csv(std::ostream& os, int k, double alpha,
                    const std::vector<double>& tail);

/// Metadata + "pair_id,op_norm,frobenius".
struct CommutatorRecord {
  std::string pair_id;
  CommutatorNorms norms;
};
void write_commutator_csv(std::ostream& os, double alpha, int k, int dim,
                          const std::vector<CommutatorRecord>& records);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

/// One-line machine-readable error record for the CLI:
/// {"error":{"class":..,"exit_code":..,"message":..}}
std::string error_record(const std::string& error_class, int exit_code,
                         const std::string& message);

/// Collects the files of one run directory and seals them with a
/// manifest. Files are written as they are added; the manifest
/// (schema_version, experiment, inputs, per-file SHA-256 and sizes) is
/// written last via a temporary so no partial manifest is observable.
class ExperimentWriter {
public:
  ExperimentWriter(std::filesystem::path dir, std::string experiment);

  const std::filesystem::path& dir() const noexcept { return dir_; }

  /// Writes dir/name and records its checksum. Throws IoError on
  /// filesystem failure, DomainError on duplicate names.
  void add_file(const std::string& name, const std::string& content);

  /// `text` must be a JSON object; it becomes the manifest's "inputs"
  /// block. Throws ParseError otherwise.
  void set_inputs(const std::string& text);

  /// Writes dir/manifest.json atomically. Call once, after all files.
  void finalize();

private:
  std::filesystem::path dir_;
  std::string experiment_;
  std::string inputs_text_;
  struct FileRecord {
    std::string name;
    std::string sha256;
    size_t bytes;
  };
  std::vector<FileRecord> files_;
  bool finalized_ = false;
};

}  // namespace bergman
