// spectral-lab: command-line front end for the tree/lattice spectral library.
// Emits CSV tables or JSON reports; `verify` runs the cross-check suites.

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectral/cyclic.hpp"
#include "spectral/lattice.hpp"
#include "spectral/measures.hpp"
#include "spectral/operators.hpp"
#include "spectral/periodic.hpp"
#include "spectral/resistance.hpp"
#include "spectral/verify.hpp"
#include "spectral/walks.hpp"
#include "spectral/words.hpp"

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

struct OutputSink {
  std::string path;  // empty: stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(path);
      f << text;
    }
  }
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}

// Rows of (header, cells) rendered as CSV or a JSON array of objects.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render(const std::string& format) const {
    if (format == "json") {
      json arr = json::array();
      for (const auto& row : rows) {
        json obj;
        for (std::size_t k = 0; k < header.size(); ++k) obj[header[k]] = row[k];
        arr.push_back(obj);
      }
      return arr.dump(2) + "\n";
    }
    std::string out;
    for (std::size_t k = 0; k < header.size(); ++k)
      out += (k ? "," : "") + csv_escape(header[k]);
    out += "\n";
    for (const auto& row : rows) {
      for (std::size_t k = 0; k < row.size(); ++k) out += (k ? "," : "") + csv_escape(row[k]);
      out += "\n";
    }
    return out;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Spectral laboratory for tree and lattice graph Laplacians"};
  app.require_subcommand(1);
  std::string format = "csv";
  std::string out_path;
  app.add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "Write output to a file instead of stdout");

  // --- density ---
  auto* cmd_density = app.add_subcommand("density", "Tabulate a spectral density on [-1,1]");
  int den_n = 0;
  std::string den_measure = "c";
  int den_points = 101;
  cmd_density->add_option("--N", den_n, "Branching number")->required()->check(CLI::PositiveNumber);
  cmd_density->add_option("--measure", den_measure, "Measure: c or c+p")
      ->check(CLI::IsMember({"c", "c+p"}));
  cmd_density->add_option("--points", den_points, "Grid size")->check(CLI::Range(2, 1000000));

  // --- moments ---
  auto* cmd_moments = app.add_subcommand("moments", "Moments of the two spectral measures");
  int mom_n = 1, mom_max = 12;
  cmd_moments->add_option("--N", mom_n, "Branching number")->required()->check(CLI::PositiveNumber);
  cmd_moments->add_option("--n-max", mom_max, "Highest moment order")->check(CLI::Range(0, 40));

  // --- paths ---
  auto* cmd_paths = app.add_subcommand("paths", "Exact closed-walk counts on the looped tree");
  int paths_n = 1, paths_len = 10;
  cmd_paths->add_option("--N", paths_n, "Branching number")->required()->check(CLI::PositiveNumber);
  cmd_paths->add_option("--n", paths_len, "Horizon")->check(CLI::Range(0, 80));

  // --- resistance ---
  auto* cmd_res = app.add_subcommand("resistance", "Resistance distance between two tree words");
  int res_n = 1;
  std::string res_x, res_y;
  cmd_res->add_option("--N", res_n, "Branching number")->required()->check(CLI::PositiveNumber);
  cmd_res->add_option("--x", res_x, "First word (digits, empty for the root)");
  cmd_res->add_option("--y", res_y, "Second word (digits, empty for the root)");

  // --- eigvec ---
  auto* cmd_eig = app.add_subcommand("eigvec", "Periodic eigenvector of the half-line Laplacian");
  std::string eig_lambda = "0";
  int eig_len = 50;
  cmd_eig->add_option("--lambda", eig_lambda, "0, 1, golden-, golden+, or a number");
  cmd_eig->add_option("--len", eig_len, "Sequence length")->check(CLI::Range(20, 100000));

  // --- jacobi ---
  auto* cmd_jac = app.add_subcommand("jacobi", "Jacobi blocks of the cyclic decomposition");
  int jac_n = 1, jac_m = 10;
  std::string jac_block = "root";
  cmd_jac->add_option("--N", jac_n, "Branching number")->required()->check(CLI::PositiveNumber);
  cmd_jac->add_option("--M", jac_m, "Truncation size")->check(CLI::Range(1, 100000));
  cmd_jac->add_option("--block", jac_block, "Block: root or generic")
      ->check(CLI::IsMember({"root", "generic"}));

  // --- lattice ---
  auto* cmd_lat = app.add_subcommand("lattice", "Torus Laplacian eigenvalues via the symbol");
  int lat_d = 1, lat_side = 8;
  cmd_lat->add_option("--d", lat_d, "Dimension")->check(CLI::Range(1, 4));
  cmd_lat->add_option("--L", lat_side, "Side length")->check(CLI::Range(2, 64));

  // --- verify ---
  auto* cmd_verify = app.add_subcommand("verify", "Run a cross-check suite");
  std::string suite = "all";
  spectral::VerifyOptions vopt;
  cmd_verify->add_option("suite", suite, "operators|cyclic|measures|resistance|walks|eigen|lattice|all")
      ->check(CLI::IsMember({"operators", "cyclic", "measures", "resistance", "walks", "eigen",
                             "lattice", "all"}));
  cmd_verify->add_option("--seed", vopt.seed, "Seed for randomized checks");
  cmd_verify->add_option("--trials", vopt.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);

  // Let --format/--out appear after the subcommand name as well.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  OutputSink sink{out_path};

  if (*cmd_density) {
    Table t;
    t.header = {"x", "density"};
    for (int k = 0; k < den_points; ++k) {
      double x = -1.0 + 2.0 * k / (den_points - 1);
      double d = den_measure == "c" ? spectral::mu_c_density(x)
                                    : spectral::mu_cp_density(x, den_n);
      t.rows.push_back({fmt(x), fmt(d)});
    }
    sink.write(t.render(format));
    return 0;
  }

  if (*cmd_moments) {
    Table t;
    t.header = {"n", "mu_c", "mu_cp"};
    double edge = 2.0 * std::sqrt(double(mom_n));
    for (int k = 0; k <= mom_max; ++k) {
      double cp = static_cast<double>(spectral::path_count(mom_n, k)) / std::pow(edge, k);
      t.rows.push_back({std::to_string(k), fmt(spectral::mu_c_moment(k)), fmt(cp)});
    }
    sink.write(t.render(format));
    return 0;
  }

  if (*cmd_paths) {
    Table t;
    t.header = {"n", "count", "return_probability"};
    spectral::WalkCounter counter(paths_n, paths_len);
    for (int k = 0; k <= paths_len; ++k) {
      t.rows.push_back({std::to_string(k), std::to_string(counter.count(k)),
                        fmt(spectral::return_probability_exact(paths_n, k))});
    }
    sink.write(t.render(format));
    return 0;
  }

  if (*cmd_res) {
    spectral::Word x = spectral::Word::parse(res_x);
    spectral::Word y = spectral::Word::parse(res_y);
    for (const auto& w : {x, y})
      for (int a : w.letters())
        if (a > res_n) throw CLI::ValidationError("word letter exceeds branching number");
    Table t;
    t.header = {"x", "y", "path_length", "dist"};
    t.rows.push_back({x.str(), y.str(), std::to_string(spectral::tree_path_length(x, y)),
                      fmt(spectral::resistance_dist(x, y))});
    sink.write(t.render(format));
    return 0;
  }

  if (*cmd_eig) {
    double lambda;
    auto [glo, ghi] = spectral::golden_eigenvalues();
    if (eig_lambda == "golden-") lambda = glo;
    else if (eig_lambda == "golden+") lambda = ghi;
    else lambda = std::stod(eig_lambda);
    Eigen::VectorXd v = spectral::eigvec_generate(lambda, eig_len);
    auto period = spectral::detect_period(v);
    Table t;
    t.header = {"k", "v_k"};
    for (int k = 0; k < v.size(); ++k) t.rows.push_back({std::to_string(k), fmt(v[k])});
    std::string body = t.render(format);
    if (format == "csv") {
      body += "# lambda=" + fmt(lambda);
      body += " residual=" + fmt(spectral::eigvec_residual(v, lambda));
      body += period ? " period=" + std::to_string(*period) : std::string(" period=none");
      body += "\n";
    } else {
      json meta;
      meta["lambda"] = fmt(lambda);
      meta["residual"] = fmt(spectral::eigvec_residual(v, lambda));
      if (period) meta["period"] = *period;
      body += meta.dump(2) + "\n";
    }
    sink.write(body);
    return 0;
  }

  if (*cmd_jac) {
    spectral::JacobiMatrix j = jac_block == "root"
                                   ? spectral::jacobi_root_block(jac_n, jac_m)
                                   : spectral::jacobi_generic_block(jac_n, jac_m);
    Table t;
    t.header = {"k", "diagonal", "offdiagonal"};
    for (Eigen::Index k = 0; k < j.size(); ++k) {
      t.rows.push_back({std::to_string(k), fmt(j.diag[k]),
                        k + 1 < j.size() ? fmt(j.off[k]) : std::string()});
    }
    sink.write(t.render(format));
    return 0;
  }

  if (*cmd_lat) {
    spectral::LatticeTorus torus(lat_d, lat_side);
    spectral::DftReport rep = spectral::dft_verify(torus);
    Table t;
    t.header = {"frequency", "eigenvalue"};
    for (std::int64_t f = 0; f < torus.vertex_count(); ++f) {
      std::string freq;
      for (int c : torus.coords(f)) freq += (freq.empty() ? "" : " ") + std::to_string(c);
      t.rows.push_back({freq, fmt(rep.eigenvalues[f])});
    }
    std::string body = t.render(format);
    if (format == "csv") body += "# max_residual=" + fmt(rep.max_residual) + "\n";
    sink.write(body);
    return 0;
  }

  if (*cmd_verify) {
    auto checks = spectral::run_suite(suite, vopt);
    bool all_pass = true;
    json rep;
    rep["command"] = "verify";
    rep["suite"] = suite;
    rep["seed"] = vopt.seed;
    rep["trials"] = vopt.trials;
    rep["version"] = "1.0.0";
    rep["checks"] = json::array();
    for (const auto& c : checks) {
      json jc;
      jc["name"] = c.name;
      jc["residual"] = fmt(c.residual);
      jc["tolerance"] = fmt(c.tolerance);
      jc["pass"] = c.pass;
      rep["checks"].push_back(jc);
      if (!c.pass) all_pass = false;
    }
    rep["pass"] = all_pass;
    sink.write(rep.dump(2) + "\n");
    return all_pass ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("SPECTRAL_LAB_THREADS")) {
    int cap = std::atoi(threads);
    if (cap > 0) Eigen::setNbThreads(cap);
  }
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
