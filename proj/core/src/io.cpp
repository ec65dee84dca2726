#include "bergman/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

namespace bergman {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::string meta_line(const OperatorMatrix& m) {
  std::string s = "# kind=" + kind_name(m.kind) +
                  " alpha=" + format_double(m.params.alpha) +
                  " k=" + std::to_string(m.params.k) +
                  " dim=" + std::to_string(m.params.dim) +
                  " convention=" + convention_name(m.convention);
  return s;
}

void append_complex(std::string& row, Complex v) {
  row += format_double(v.real());
  row += ',';
  row += format_double(v.imag());
}

}  // namespace

void write_matrix_csv(std::ostream& os, const OperatorMatrix& m) {
  os << meta_line(m) << "\nm,n,re,im\n";
  const int n_dim = m.dim();
  std::string row;
  for (int i = 0; i < n_dim; ++i) {
    for (int j = 0; j < n_dim; ++j) {
      Complex v = m.entries(i, j);
      if (std::abs(v) > 0.0) {
        row.clear();
        row += std::to_string(i);
        row += ',';
        row += std::to_string(j);
        row += ',';
        append_complex(row, v);
        row += '\n';
        os << row;
      }
    }
  }
}

std::string matrix_json(const OperatorMatrix& m) {
  nlohmann::json doc;
  doc["kind"] = kind_name(m.kind);
  doc["alpha"] = m.params.alpha;
  doc["k"] = m.params.k;
  doc["n_dim"] = m.params.dim;
  doc["convention"] = convention_name(m.convention);
  nlohmann::json entries = nlohmann::json::array();
  const int n_dim = m.dim();
  for (int i = 0; i < n_dim; ++i) {
    for (int j = 0; j < n_dim; ++j) {
      Complex v = m.entries(i, j);
      entries.push_back(nlohmann::json::array({v.real(), v.imag()}));
    }
  }
  doc["entries"] = std::move(entries);
  return doc.dump();
}

void write_spectrum_csv(std::ostream& os, const OperatorMatrix& m,
                        const SpectrumResult& spectrum) {
  os << meta_line(m)
     << " max_residual=" << format_double(spectrum.max_residual)
     << "\nre,im\n";
  std::string row;
  for (Complex lam : spectrum.eigenvalues) {
    row.clear();
    append_complex(row, lam);
    row += '\n';
    os << row;
  }
}

void write_pseudospectrum_csv(std::ostream& os, const OperatorMatrix& m,
                              const PseudospectrumGrid& grid) {
  os << meta_line(m) << " steps=" << grid.spec.steps
     << "\nre,im,sigma_min\n";
  std::string row;
  for (size_t i = 0; i < grid.re.size(); ++i) {
    for (size_t j = 0; j < grid.im.size(); ++j) {
      row.clear();
      row += format_double(grid.re[i]);
      row += ',';
      row += format_double(grid.im[j]);
      row += ',';
      row += format_double(grid.sigma(static_cast<Eigen::Index>(i),
                                      static_cast<Eigen::Index>(j)));
      row += '\n';
      os << row;
    }
  }
}

void write_decay_csv(std::ostream& os, const OperatorMatrix& m,
                     DecayAxis axis, const std::vector<double>& profile) {
  os << meta_line(m) << " axis=" << axis_name(axis)
     << "\naxis_index,max_abs\n";
  for (size_t i = 0; i < profile.size(); ++i) {
    os << i << ',' << format_double(profile[i]) << '\n';
  }
}

void write_tail_csv(std::ostream& os, int k, double alpha,
                    const std::vector<double>& tail) {
  os << "# alpha=" << format_double(alpha) << " k=" << k
     << " j_max=" << (tail.empty() ? 0 : tail.size() - 1)
     << "\nj,sup_value\n";
  for (size_t j = 0; j < tail.size(); ++j) {
    os << j << ',' << format_double(tail[j]) << '\n';
  }
}

void write_commutator_csv(std::ostream& os, double alpha, int k, int dim,
                          const std::vector<CommutatorRecord>& records) {
  os << "# alpha=" << format_double(alpha) << " k=" << k << " dim=" << dim
     << "\npair_id,op_norm,frobenius\n";
  for (const CommutatorRecord& r : records) {
    os << r.pair_id << ',' << format_double(r.norms.operator_norm) << ','
       << format_double(r.norms.frobenius) << '\n';
  }
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw IoError("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

std::string error_record(const std::string& error_class, int exit_code,
                         const std::string& message) {
  nlohmann::json doc;
  doc["error"]["class"] = error_class;
  doc["error"]["exit_code"] = exit_code;
  doc["error"]["message"] = message;
  return doc.dump();
}

ExperimentWriter::ExperimentWriter(std::filesystem::path dir,
                                   std::string experiment)
    : dir_(std::move(dir)), experiment_(std::move(experiment)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    throw IoError("cannot create output directory '" + dir_.string() +
                  "': " + ec.message());
  }
}

void ExperimentWriter::add_file(const std::string& name,
                                const std::string& content) {
  if (finalized_) throw DomainError("run already finalized");
  for (const FileRecord& f : files_) {
    if (f.name == name) throw DomainError("duplicate output file " + name);
  }
  std::filesystem::path path = dir_ / name;
  {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
    os.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!os) throw IoError("short write to '" + path.string() + "'");
  }
  files_.push_back({name, sha256_hex(content), content.size()});
}

void ExperimentWriter::set_inputs(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), static_cast<long>(e.byte));
  }
  if (!doc.is_object()) throw ParseError("inputs must be a JSON object");
  inputs_text_ = doc.dump();
}

void ExperimentWriter::finalize() {
  if (finalized_) throw DomainError("run already finalized");

  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["experiment"] = experiment_;
  doc["inputs"] = inputs_text_.empty()
                      ? nlohmann::json::object()
                      : nlohmann::json::parse(inputs_text_);
  nlohmann::json files = nlohmann::json::array();
  for (const FileRecord& f : files_) {
    nlohmann::json rec;
    rec["name"] = f.name;
    rec["sha256"] = f.sha256;
    rec["bytes"] = f.bytes;
    files.push_back(std::move(rec));
  }
  doc["files"] = std::move(files);

  std::filesystem::path tmp = dir_ / "manifest.json.tmp";
  std::filesystem::path final_path = dir_ / "manifest.json";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + tmp.string() + "' for writing");
    os << doc.dump(2) << '\n';
    if (!os) throw IoError("short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) {
    throw IoError("cannot commit manifest: " + ec.message());
  }
  finalized_ = true;
}

}  // namespace bergman
