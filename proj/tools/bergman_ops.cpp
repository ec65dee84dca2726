// bergman-ops: builds weighted Bergman space operator truncations and
// runs the spectral / structural experiments on them.
//
// Exit codes: 0 success, 2 usage, 3 file I/O, 4 input parse,
// 5 validation or domain, 6 solver non-convergence. Failures print a
// one-line JSON error record to stderr. BERGMAN_WORKERS caps assembly
// and grid parallelism; results are byte-identical across worker
// counts (benchmark timings excepted).

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bergman/analysis.hpp"
#include "bergman/io.hpp"
#include "bergman/oracle.hpp"
#include "bergman/spectral.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitParse = 4;
constexpr int kExitValidation = 5;
constexpr int kExitSolver = 6;

struct Options {
  double alpha = 1.0;
  int k = 2;
  int dim = 15;
  std::string kind;
  std::string convention = "monomial";
  std::string symbol;
  std::string symbol2;
  std::string out;
  std::string format = "csv";
  std::string grid = "-1.25,1.25,-1.25,1.25,101";
  std::string dims;
  std::string axis = "row";
  std::string family;
  double tol = 1e-10;
  int jmax = 60;
  int reps = 3;
};

void add_space_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--alpha", o.alpha, "weight exponent, > -1")
      ->capture_default_str();
  cmd->add_option("--k", o.k, "slant order, >= 2")->capture_default_str();
  cmd->add_option("--dim", o.dim, "truncation dimension, >= 1")
      ->capture_default_str();
  cmd->add_option("--convention", o.convention,
                  "slant shift weighting: monomial | normalized")
      ->capture_default_str();
}

void add_output_flags(CLI::App* cmd, Options& o, const std::string& def_out) {
  o.out = def_out;
  cmd->add_option("--out", o.out, "output directory")->capture_default_str();
  cmd->add_option("--format", o.format, "output format: csv | json")
      ->capture_default_str();
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw bergman::IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  if (is.bad()) throw bergman::IoError("read failed on '" + path + "'");
  return ss.str();
}

// --symbol accepts inline JSON (leading '{') or a path to a JSON file.
bergman::HarmonicSymbol load_symbol(const std::string& arg) {
  if (arg.empty()) throw bergman::ValidationError("empty symbol argument");
  std::string text = arg[0] == '{' ? arg : slurp(arg);
  return bergman::parse_symbol(text);
}

bergman::SpaceParams space_of(const Options& o) {
  bergman::SpaceParams p;
  p.alpha = o.alpha;
  p.k = o.k;
  p.dim = o.dim;
  p.validate();
  return p;
}

bergman::GridSpec parse_grid(const std::string& text) {
  bergman::GridSpec g;
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      vals.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw bergman::ParseError("grid component '" + item +
                                "' is not a number");
    }
  }
  if (vals.size() != 5) {
    throw bergman::ParseError("grid must be re0,re1,im0,im1,steps");
  }
  g.re0 = vals[0];
  g.re1 = vals[1];
  g.im0 = vals[2];
  g.im1 = vals[3];
  if (vals[4] != static_cast<int>(vals[4]) || vals[4] < 1) {
    throw bergman::ParseError("grid steps must be a positive integer");
  }
  g.steps = static_cast<int>(vals[4]);
  g.validate();
  return g;
}

std::vector<int> parse_dims(const std::string& text,
                            const std::vector<int>& fallback) {
  if (text.empty()) return fallback;
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      dims.push_back(v);
    } catch (const std::exception&) {
      throw bergman::ParseError("dimension '" + item +
                                "' is not a positive integer");
    }
  }
  if (dims.empty()) throw bergman::ParseError("empty dimension list");
  return dims;
}

void require_format(const Options& o) {
  if (o.format != "csv" && o.format != "json") {
    throw bergman::ValidationError("format must be csv or json, got '" +
                                   o.format + "'");
  }
}

nlohmann::json symbol_json(const bergman::HarmonicSymbol& s) {
  return nlohmann::json::parse(bergman::serialize_symbol(s));
}

nlohmann::json base_inputs(const std::string& command, const Options& o) {
  nlohmann::json in;
  in["command"] = command;
  in["alpha"] = o.alpha;
  in["k"] = o.k;
  in["convention"] = o.convention;
  in["format"] = o.format;
  return in;
}

nlohmann::json complex_pairs(const std::vector<bergman::Complex>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (bergman::Complex c : v) {
    arr.push_back(nlohmann::json::array({c.real(), c.imag()}));
  }
  return arr;
}

struct BuiltOperator {
  bergman::OperatorKind kind;
  std::optional<bergman::HarmonicSymbol> symbol;
  bergman::OperatorMatrix matrix;
};

BuiltOperator build_from_options(const Options& o) {
  if (o.kind.empty()) {
    throw bergman::ValidationError("--kind is required");
  }
  bergman::OperatorKind kind = bergman::kind_from_name(o.kind);
  std::optional<bergman::HarmonicSymbol> symbol;
  if (bergman::kind_requires_symbol(kind)) {
    if (o.symbol.empty()) {
      throw bergman::ValidationError("--symbol is required for kind " +
                                     o.kind);
    }
    symbol = load_symbol(o.symbol);
  } else if (!o.symbol.empty()) {
    throw bergman::ValidationError("kind " + o.kind +
                                   " does not take a symbol");
  }
  BuiltOperator b{kind, symbol, {}};
  b.matrix = bergman::build_matrix(
      kind, symbol, space_of(o), bergman::convention_from_name(o.convention));
  return b;
}

void attach_operator_inputs(nlohmann::json& in, const Options& o,
                            const BuiltOperator& b) {
  in["kind"] = bergman::kind_name(b.kind);
  in["dim"] = o.dim;
  in["symbol"] = b.symbol ? symbol_json(*b.symbol) : nlohmann::json();
}

// ---------------------------------------------------------------- build

void run_build(const Options& o) {
  require_format(o);
  BuiltOperator b = build_from_options(o);
  bergman::ExperimentWriter w(o.out, "build");
  if (o.format == "csv") {
    std::ostringstream os;
    bergman::write_matrix_csv(os, b.matrix);
    w.add_file("matrix.csv", os.str());
  } else {
    w.add_file("matrix.json", bergman::matrix_json(b.matrix) + "\n");
  }
  nlohmann::json in = base_inputs("build", o);
  attach_operator_inputs(in, o, b);
  w.set_inputs(in.dump());
  w.finalize();
}

// -------------------------------------------------------------- spectrum

void run_spectrum(const Options& o) {
  require_format(o);
  BuiltOperator b = build_from_options(o);
  bergman::SpectrumResult spec = bergman::eigenvalues(b.matrix);
  bergman::ExperimentWriter w(o.out, "spectrum");
  if (o.format == "csv") {
    std::ostringstream os;
    bergman::write_spectrum_csv(os, b.matrix, spec);
    w.add_file("spectrum.csv", os.str());
  } else {
    nlohmann::json doc;
    doc["kind"] = bergman::kind_name(b.kind);
    doc["alpha"] = o.alpha;
    doc["k"] = o.k;
    doc["n_dim"] = o.dim;
    doc["convention"] = o.convention;
    doc["max_residual"] = spec.max_residual;
    doc["eigenvalues"] = complex_pairs(spec.eigenvalues);
    w.add_file("spectrum.json", doc.dump() + "\n");
  }
  nlohmann::json in = base_inputs("spectrum", o);
  attach_operator_inputs(in, o, b);
  w.set_inputs(in.dump());
  w.finalize();
}

// ------------------------------------------------------------ commutator

void run_commutator(const Options& o) {
  require_format(o);
  if (o.symbol.empty() || o.symbol2.empty()) {
    throw bergman::ValidationError(
        "commutator needs --symbol and --symbol2");
  }
  bergman::HarmonicSymbol phi = load_symbol(o.symbol);
  bergman::HarmonicSymbol psi = load_symbol(o.symbol2);
  bergman::SpaceParams params = space_of(o);
  bergman::Convention conv = bergman::convention_from_name(o.convention);

  std::vector<bergman::OperatorKind> kinds;
  if (o.kind.empty()) {
    kinds = {bergman::OperatorKind::SlantLittleHankel,
             bergman::OperatorKind::SlantToeplitz};
  } else {
    kinds = {bergman::kind_from_name(o.kind)};
    if (!bergman::kind_requires_symbol(kinds[0])) {
      throw bergman::ValidationError("commutator kind must take a symbol");
    }
  }

  std::vector<bergman::CommutatorRecord> records;
  for (bergman::OperatorKind kind : kinds) {
    bergman::OperatorMatrix a = bergman::build_matrix(kind, phi, params, conv);
    bergman::OperatorMatrix b = bergman::build_matrix(kind, psi, params, conv);
    records.push_back(
        {bergman::kind_name(kind), bergman::commutator_norms(a, b)});
  }
  std::sort(records.begin(), records.end(),
            [](const auto& x, const auto& y) { return x.pair_id < y.pair_id; });

  bergman::ExperimentWriter w(o.out, "commutator");
  if (o.format == "csv") {
    std::ostringstream os;
    bergman::write_commutator_csv(os, o.alpha, o.k, o.dim, records);
    w.add_file("commutator.csv", os.str());
  } else {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& r : records) {
      nlohmann::json rec;
      rec["pair_id"] = r.pair_id;
      rec["op_norm"] = r.norms.operator_norm;
      rec["frobenius"] = r.norms.frobenius;
      doc.push_back(std::move(rec));
    }
    w.add_file("commutator.json", doc.dump() + "\n");
  }

  nlohmann::json in = base_inputs("commutator", o);
  in["dim"] = o.dim;
  in["symbol"] = symbol_json(phi);
  in["symbol2"] = symbol_json(psi);
  auto dep = bergman::linear_dependence(phi, psi);
  in["dependent"] = dep.has_value();
  w.set_inputs(in.dump());
  w.finalize();
}

// ------------------------------------------------------------- normality

void run_normality(const Options& o) {
  require_format(o);
  BuiltOperator b = build_from_options(o);
  double defect = bergman::self_commutator_defect(b.matrix);
  bergman::ExperimentWriter w(o.out, "normality");
  if (o.format == "csv") {
    std::ostringstream os;
    os << "# alpha=" << bergman::format_double(o.alpha) << " k=" << o.k
       << " convention=" << o.convention << "\nkind,dim,defect\n"
       << bergman::kind_name(b.kind) << ',' << o.dim << ','
       << bergman::format_double(defect) << '\n';
    w.add_file("normality.csv", os.str());
  } else {
    nlohmann::json doc;
    doc["kind"] = bergman::kind_name(b.kind);
    doc["dim"] = o.dim;
    doc["defect"] = defect;
    w.add_file("normality.json", doc.dump() + "\n");
  }
  nlohmann::json in = base_inputs("normality", o);
  attach_operator_inputs(in, o, b);
  w.set_inputs(in.dump());
  w.finalize();
}

// ----------------------------------------------------------- compactness

void run_compactness(const Options& o) {
  require_format(o);
  if (o.symbol.empty() == o.family.empty()) {
    throw bergman::ValidationError(
        "compactness needs exactly one of --symbol or --family");
  }
  if (o.jmax < 0) throw bergman::ValidationError("--jmax must be >= 0");
  bergman::validate_alpha(o.alpha);

  std::vector<double> tail;
  nlohmann::json in = base_inputs("compactness", o);
  in["j_max"] = o.jmax;
  if (!o.symbol.empty()) {
    bergman::HarmonicSymbol s = load_symbol(o.symbol);
    tail = bergman::compactness_tail(s, o.k, o.alpha, o.jmax);
    in["symbol"] = symbol_json(s);
  } else {
    std::function<bergman::Complex(int)> coeff;
    if (o.family == "inv-factorial") {
      coeff = [](int j) {
        double f = 1.0;
        for (int i = 2; i <= j; ++i) f /= i;
        return bergman::Complex(f, 0.0);
      };
    } else if (o.family == "ones") {
      coeff = [](int) { return bergman::Complex(1.0, 0.0); };
    } else if (o.family == "inv-square") {
      coeff = [](int j) {
        return bergman::Complex(1.0 / ((j + 1.0) * (j + 1.0)), 0.0);
      };
    } else {
      throw bergman::ValidationError(
          "family must be inv-factorial | ones | inv-square");
    }
    tail = bergman::compactness_tail(coeff, o.k, o.alpha, o.jmax);
    in["family"] = o.family;
  }

  bergman::ExperimentWriter w(o.out, "compactness");
  if (o.format == "csv") {
    std::ostringstream os;
    bergman::write_tail_csv(os, o.k, o.alpha, tail);
    w.add_file("tail.csv", os.str());
  } else {
    nlohmann::json doc;
    doc["alpha"] = o.alpha;
    doc["k"] = o.k;
    doc["sup_values"] = tail;
    w.add_file("tail.json", doc.dump() + "\n");
  }
  w.set_inputs(in.dump());
  w.finalize();
}

// ----------------------------------------------------------------- decay

void run_decay(const Options& o) {
  require_format(o);
  bergman::DecayAxis axis = bergman::axis_from_name(o.axis);
  BuiltOperator b = build_from_options(o);
  std::vector<double> profile = bergman::decay_profile(b.matrix, axis);

  bergman::ExperimentWriter w(o.out, "decay");
  if (o.format == "csv") {
    std::ostringstream os;
    bergman::write_decay_csv(os, b.matrix, axis, profile);
    w.add_file("decay.csv", os.str());
  } else {
    nlohmann::json doc;
    doc["kind"] = bergman::kind_name(b.kind);
    doc["axis"] = bergman::axis_name(axis);
    doc["max_abs"] = profile;
    w.add_file("decay.json", doc.dump() + "\n");
  }
  nlohmann::json in = base_inputs("decay", o);
  attach_operator_inputs(in, o, b);
  in["axis"] = bergman::axis_name(axis);
  w.set_inputs(in.dump());
  w.finalize();
}

// ---------------------------------------------------------------- pseudo

void run_pseudo(const Options& o) {
  require_format(o);
  bergman::GridSpec grid = parse_grid(o.grid);
  BuiltOperator b = build_from_options(o);
  bergman::PseudospectrumGrid result = bergman::pseudospectrum(b.matrix, grid);

  bergman::ExperimentWriter w(o.out, "pseudo");
  if (o.format == "csv") {
    std::ostringstream os;
    bergman::write_pseudospectrum_csv(os, b.matrix, result);
    w.add_file("pseudo.csv", os.str());
  } else {
    nlohmann::json doc;
    doc["kind"] = bergman::kind_name(b.kind);
    doc["re"] = result.re;
    doc["im"] = result.im;
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < result.sigma.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index j = 0; j < result.sigma.cols(); ++j) {
        row.push_back(result.sigma(i, j));
      }
      rows.push_back(std::move(row));
    }
    doc["sigma_min"] = std::move(rows);
    w.add_file("pseudo.json", doc.dump() + "\n");
  }
  nlohmann::json in = base_inputs("pseudo", o);
  attach_operator_inputs(in, o, b);
  in["grid"] = o.grid;
  w.set_inputs(in.dump());
  w.finalize();
}

// ----------------------------------------------------------------- sweep

void run_sweep(const Options& o) {
  require_format(o);
  if (o.kind.empty()) throw bergman::ValidationError("--kind is required");
  bergman::OperatorKind kind = bergman::kind_from_name(o.kind);
  std::optional<bergman::HarmonicSymbol> symbol;
  if (bergman::kind_requires_symbol(kind)) {
    if (o.symbol.empty()) {
      throw bergman::ValidationError("--symbol is required for kind " +
                                     o.kind);
    }
    symbol = load_symbol(o.symbol);
  }
  std::vector<int> dims = parse_dims(o.dims, {8, 16, 32});
  bergman::SpaceParams base = space_of(o);
  std::vector<bergman::SweepEntry> entries = bergman::truncation_sweep(
      kind, symbol, base, dims, bergman::convention_from_name(o.convention),
      o.tol);

  bergman::ExperimentWriter w(o.out, "sweep");
  nlohmann::json stats = nlohmann::json::array();
  for (const bergman::SweepEntry& e : entries) {
    nlohmann::json rec;
    rec["dim"] = e.dim;
    rec["max_modulus"] = e.max_modulus;
    rec["fraction_near_zero"] = e.fraction_near_zero;
    rec["max_residual"] = e.spectrum.max_residual;
    if (o.format == "json") {
      rec["eigenvalues"] = complex_pairs(e.spectrum.eigenvalues);
    }
    stats.push_back(std::move(rec));
  }
  if (o.format == "csv") {
    for (const bergman::SweepEntry& e : entries) {
      bergman::SpaceParams p = base;
      p.dim = e.dim;
      bergman::OperatorMatrix meta;
      meta.kind = kind;
      meta.params = p;
      meta.convention = bergman::convention_from_name(o.convention);
      std::ostringstream os;
      bergman::write_spectrum_csv(os, meta, e.spectrum);
      w.add_file("spectrum_" + std::to_string(e.dim) + ".csv", os.str());
    }
  }
  nlohmann::json doc;
  doc["kind"] = bergman::kind_name(kind);
  doc["near_zero_eps"] = o.tol;
  doc["stats"] = std::move(stats);
  w.add_file("sweep.json", doc.dump(2) + "\n");

  nlohmann::json in = base_inputs("sweep", o);
  in["kind"] = bergman::kind_name(kind);
  in["dims"] = dims;
  in["symbol"] = symbol ? symbol_json(*symbol) : nlohmann::json();
  in["near_zero_eps"] = o.tol;
  w.set_inputs(in.dump());
  w.finalize();
}

// ----------------------------------------------------------------- bench

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

void run_bench(const Options& o) {
  require_format(o);
  if (o.reps < 1) throw bergman::ValidationError("--reps must be >= 1");
  std::vector<int> dims = parse_dims(o.dims, {64, 128, 256});
  bergman::Convention conv = bergman::convention_from_name(o.convention);

  std::vector<bergman::OperatorKind> kinds;
  if (o.kind.empty()) {
    kinds = {bergman::OperatorKind::SlantLittleHankel,
             bergman::OperatorKind::SlantToeplitz};
  } else {
    kinds = {bergman::kind_from_name(o.kind)};
  }

  // Default fixtures: the slant little Hankel sees only the
  // anti-analytic part, so it gets the anti-analytic exponential and
  // everything else the analytic one.
  auto fixture_for = [&](bergman::OperatorKind kind) {
    if (!o.symbol.empty()) return load_symbol(o.symbol);
    return bergman::truncated_exponential(
        kind == bergman::OperatorKind::SlantLittleHankel
            ? bergman::ExpKind::AntiAnalytic
            : bergman::ExpKind::Analytic,
        15);
  };

  struct Row {
    std::string kind;
    int dim;
    double build_s;
    double eig_s;
    long nnz;
    long storage_bytes;
    double sparsity;
  };
  std::vector<Row> rows;

  for (bergman::OperatorKind kind : kinds) {
    std::optional<bergman::HarmonicSymbol> symbol;
    if (bergman::kind_requires_symbol(kind)) symbol = fixture_for(kind);
    for (int d : dims) {
      bergman::SpaceParams p;
      p.alpha = o.alpha;
      p.k = o.k;
      p.dim = d;
      p.validate();

      std::vector<double> build_times, eig_times;
      bergman::OperatorMatrix m;
      for (int r = 0; r < o.reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        m = bergman::build_matrix(kind, symbol, p, conv);
        auto t1 = std::chrono::steady_clock::now();
        bergman::SpectrumResult spec = bergman::eigenvalues(m);
        auto t2 = std::chrono::steady_clock::now();
        (void)spec;
        build_times.push_back(std::chrono::duration<double>(t1 - t0).count());
        eig_times.push_back(std::chrono::duration<double>(t2 - t1).count());
      }
      long nnz = 0;
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          if (std::abs(m.entries(i, j)) > o.tol) ++nnz;
        }
      }
      rows.push_back({bergman::kind_name(kind), d, median(build_times),
                      median(eig_times), nnz,
                      nnz * static_cast<long>(sizeof(bergman::Complex)),
                      static_cast<double>(nnz) / (static_cast<double>(d) * d)});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.dim < b.dim;
  });

  bergman::ExperimentWriter w(o.out, "bench");
  if (o.format == "csv") {
    std::ostringstream os;
    os << "# alpha=" << bergman::format_double(o.alpha) << " k=" << o.k
       << " reps=" << o.reps << " tol=" << bergman::format_double(o.tol)
       << "\nkind,n_dim,build_seconds,eig_seconds,nnz,storage_bytes,"
          "sparsity\n";
    for (const Row& r : rows) {
      os << r.kind << ',' << r.dim << ',' << bergman::format_double(r.build_s)
         << ',' << bergman::format_double(r.eig_s) << ',' << r.nnz << ','
         << r.storage_bytes << ',' << bergman::format_double(r.sparsity)
         << '\n';
    }
    w.add_file("bench.csv", os.str());
  } else {
    nlohmann::json doc = nlohmann::json::array();
    for (const Row& r : rows) {
      nlohmann::json rec;
      rec["kind"] = r.kind;
      rec["n_dim"] = r.dim;
      rec["build_seconds"] = r.build_s;
      rec["eig_seconds"] = r.eig_s;
      rec["nnz"] = r.nnz;
      rec["storage_bytes"] = r.storage_bytes;
      rec["sparsity"] = r.sparsity;
      doc.push_back(std::move(rec));
    }
    w.add_file("bench.json", doc.dump(2) + "\n");
  }

  nlohmann::json in = base_inputs("bench", o);
  in["dims"] = dims;
  in["reps"] = o.reps;
  in["tol"] = o.tol;
  in["symbol"] = o.symbol.empty()
                     ? nlohmann::json("exp-family defaults: anti-analytic "
                                      "for slant-little-hankel, analytic "
                                      "otherwise, degree 15")
                     : nlohmann::json(o.symbol);
  w.set_inputs(in.dump());
  w.finalize();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "bergman-ops: weighted Bergman space operator truncations.\n"
      "Exit codes: 0 ok, 2 usage, 3 io, 4 parse, 5 validation, 6 solver.\n"
      "BERGMAN_WORKERS sets the worker thread count (results are\n"
      "byte-identical across worker counts; bench timings vary)."};
  app.require_subcommand(1);

  Options o;

  CLI::App* build = app.add_subcommand("build", "assemble a truncation");
  add_space_flags(build, o);
  build->add_option("--kind", o.kind, "operator kind")->required();
  build->add_option("--symbol", o.symbol, "symbol JSON (inline or path)");
  add_output_flags(build, o, "out/build");

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues");
  add_space_flags(spectrum, o);
  spectrum->add_option("--kind", o.kind, "operator kind")->required();
  spectrum->add_option("--symbol", o.symbol, "symbol JSON (inline or path)");
  add_output_flags(spectrum, o, "out/spectrum");

  CLI::App* commutator =
      app.add_subcommand("commutator", "commutator norms of a symbol pair");
  add_space_flags(commutator, o);
  commutator->add_option("--kind", o.kind,
                         "restrict to one kind (default: both slant kinds)");
  commutator->add_option("--symbol", o.symbol, "first symbol")->required();
  commutator->add_option("--symbol2", o.symbol2, "second symbol")->required();
  add_output_flags(commutator, o, "out/commutator");

  CLI::App* normality =
      app.add_subcommand("normality", "self-commutator defect");
  add_space_flags(normality, o);
  normality->add_option("--kind", o.kind, "operator kind")->required();
  normality->add_option("--symbol", o.symbol, "symbol JSON (inline or path)");
  add_output_flags(normality, o, "out/normality");

  CLI::App* compactness =
      app.add_subcommand("compactness", "diagonal tail statistic");
  compactness->add_option("--alpha", o.alpha, "weight exponent, > -1")
      ->capture_default_str();
  compactness->add_option("--k", o.k, "slant order, >= 2")
      ->capture_default_str();
  compactness->add_option("--symbol", o.symbol,
                          "symbol JSON (inline or path)");
  compactness->add_option(
      "--family", o.family,
      "coefficient family: inv-factorial | ones | inv-square");
  compactness->add_option("--jmax", o.jmax, "last diagonal index")
      ->capture_default_str();
  add_output_flags(compactness, o, "out/compactness");

  CLI::App* decay = app.add_subcommand("decay", "entry decay profile");
  add_space_flags(decay, o);
  decay->add_option("--kind", o.kind, "operator kind")->required();
  decay->add_option("--symbol", o.symbol, "symbol JSON (inline or path)");
  decay->add_option("--axis", o.axis, "row | column | diagonal")
      ->capture_default_str();
  add_output_flags(decay, o, "out/decay");

  CLI::App* pseudo = app.add_subcommand("pseudo", "sigma_min grid");
  add_space_flags(pseudo, o);
  pseudo->add_option("--kind", o.kind, "operator kind")->required();
  pseudo->add_option("--symbol", o.symbol, "symbol JSON (inline or path)");
  pseudo->add_option("--grid", o.grid, "re0,re1,im0,im1,steps")
      ->capture_default_str();
  add_output_flags(pseudo, o, "out/pseudo");

  CLI::App* sweep =
      app.add_subcommand("sweep", "spectra across truncation dimensions");
  add_space_flags(sweep, o);
  sweep->add_option("--kind", o.kind, "operator kind")->required();
  sweep->add_option("--symbol", o.symbol, "symbol JSON (inline or path)");
  sweep->add_option("--dims", o.dims, "dimension list (default 8,16,32)");
  sweep->add_option("--tol", o.tol, "near-zero eigenvalue threshold")
      ->capture_default_str();
  add_output_flags(sweep, o, "out/sweep");

  CLI::App* bench =
      app.add_subcommand("bench", "assembly and eigensolver timings");
  add_space_flags(bench, o);
  bench->add_option("--kind", o.kind,
                    "restrict to one kind (default: both slant kinds)");
  bench->add_option("--symbol", o.symbol,
                    "symbol for all kinds (default: exp family)");
  bench->add_option("--dims", o.dims, "dimension list (default 64,128,256)");
  bench->add_option("--reps", o.reps, "repetitions per cell, median taken")
      ->capture_default_str();
  bench->add_option("--tol", o.tol, "nnz / sparsity threshold")
      ->capture_default_str();
  add_output_flags(bench, o, "out/bench");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << bergman::error_record("usage", kExitUsage, e.what())
              << std::endl;
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(build)) run_build(o);
    if (app.got_subcommand(spectrum)) run_spectrum(o);
    if (app.got_subcommand(commutator)) run_commutator(o);
    if (app.got_subcommand(normality)) run_normality(o);
    if (app.got_subcommand(compactness)) run_compactness(o);
    if (app.got_subcommand(decay)) run_decay(o);
    if (app.got_subcommand(pseudo)) run_pseudo(o);
    if (app.got_subcommand(sweep)) run_sweep(o);
    if (app.got_subcommand(bench)) run_bench(o);
  } catch (const bergman::ParseError& e) {
    std::cerr << bergman::error_record("parse", kExitParse, e.what())
              << std::endl;
    return kExitParse;
  } catch (const bergman::IoError& e) {
    std::cerr << bergman::error_record("io", kExitIo, e.what()) << std::endl;
    return kExitIo;
  } catch (const bergman::SolverError& e) {
    std::cerr << bergman::error_record("solver", kExitSolver, e.what())
              << std::endl;
    return kExitSolver;
  } catch (const bergman::Error& e) {
    // DomainError and ValidationError both land here.
    std::cerr << bergman::error_record("validation", kExitValidation,
                                       e.what())
              << std::endl;
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << bergman::error_record("internal", 1, e.what()) << std::endl;
    return 1;
  }
  return 0;
}
