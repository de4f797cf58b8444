#include "cli.hpp"

#include "dilate/dilatation.hpp"
#include "dilate/report_json.hpp"
#include "dilate/verify.hpp"
#include "dilate/volume.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace dilate::cli {

namespace {

class OutputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot open output path '" + path + "' for writing");
  file << text;
  if (!file) throw OutputError("failed writing to '" + path + "'");
}

struct Options {
  std::string tuple;
  std::string prefix;
  std::string method = "formula";
  std::string format = "dense";
  std::string out_path;
  double precision = kDefaultTol;
  bool json = false;
  bool chain = false;
  bool dump_matrix = false;
  int max_k = 3;
  int max_m = 5;
  int m_min = 1;
  int m_max = 30;
  int digits = 5;
  double target_lambda = 0;
  double target_volume = 0;
};

std::string dilatation_text(const DilatationReport& rep, bool dump_matrix) {
  std::ostringstream os;
  os << "tuple: " << rep.tuple.to_string() << '\n';
  os << "polynomial: " << rep.polynomial << '\n';
  os << "lambda_formula: " << fixed(rep.lambda_formula, 12) << '\n';
  if (rep.lambda_matrix) os << "lambda_matrix: " << fixed(*rep.lambda_matrix, 12) << '\n';
  if (rep.agreement) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", *rep.agreement);
    os << "agreement: " << buf << '\n';
  }
  if (rep.certificate) {
    os << "primitive: " << (rep.certificate->primitive ? "yes" : "no") << '\n';
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", rep.certificate->residual);
    os << "residual: " << buf << '\n';
  }
  if (dump_matrix) os << "matrix:\n" << transition_matrix(rep.tuple).to_text();
  return os.str();
}

std::string run_dilatation(const Options& o) {
  const MTuple m = MTuple::parse(o.tuple);
  const DilatationReport rep = dilatation(m, parse_method(o.method), o.precision);
  if (o.json) {
    nlohmann::json j = to_json(rep);
    if (o.dump_matrix) j["matrix"] = transition_matrix(m).to_text();
    return j.dump(2) + "\n";
  }
  return dilatation_text(rep, o.dump_matrix);
}

std::string run_polynomial(const Options& o) {
  const MTuple m = MTuple::parse(o.tuple);
  std::ostringstream os;
  if (o.chain) {
    const auto chain = r_chain(m.prefix());
    for (std::size_t i = 0; i < chain.size(); ++i)
      os << "R_(" << m.prefix().head(i + 1).to_string() << ") = " << chain[i] << '\n';
    os << "P_(" << m.to_string() << ") = " << braid_char_poly(m) << '\n';
  } else {
    os << braid_char_poly(m) << '\n';
  }
  return os.str();
}

std::string run_matrix(const Options& o) {
  const NNMatrix b = transition_matrix(MTuple::parse(o.tuple));
  return o.format == "sparse" ? b.to_text() : b.to_dense_text();
}

std::string run_scan(const Options& o) {
  return scan_csv(convergence_table(parse_prefix(o.prefix), o.m_min, o.m_max, o.precision));
}

std::string run_limit(const Options& o) {
  const Prefix p = parse_prefix(o.prefix);
  const double value = limit_dilatation(p, o.precision);
  if (o.json) {
    nlohmann::json j{{"prefix", std::vector<int>(p.values().begin(), p.values().end())},
                     {"polynomial", dominant_polynomial(p).to_string()},
                     {"limit", value}};
    return j.dump(2) + "\n";
  }
  return fixed(value, o.digits) + "\n";
}

std::string run_bound(const Options& o) {
  return to_json(find_parameters(o.target_lambda, o.target_volume)).dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dilatations of the beta_(m1,...,mk+1) braid family"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out_path, "Write the report to a file"); };
  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", o.precision, "Root and eigenvalue tolerance")
        ->check(CLI::PositiveNumber);
  };

  auto* dil = app.add_subcommand("dilatation", "Dilatation of one braid");
  dil->add_option("--tuple", o.tuple, "m1,...,mk+1")->required();
  dil->add_option("--method", o.method, "formula, matrix or both")
      ->check(CLI::IsMember({"formula", "matrix", "both"}));
  dil->add_flag("--json", o.json, "JSON report");
  dil->add_flag("--dump-matrix", o.dump_matrix, "Include the transition matrix");
  add_precision(dil);
  add_out(dil);

  auto* poly = app.add_subcommand("polynomial", "Characteristic polynomial of the braid");
  poly->add_option("--tuple", o.tuple, "m1,...,mk+1")->required();
  poly->add_flag("--chain", o.chain, "Also print the R-chain");
  add_out(poly);

  auto* mat = app.add_subcommand("matrix", "Transition matrix of the combined tree map");
  mat->add_option("--tuple", o.tuple, "m1,...,mk+1")->required();
  mat->add_option("--format", o.format, "dense or sparse")->check(CLI::IsMember({"dense", "sparse"}));
  add_out(mat);

  auto* ver = app.add_subcommand("verify", "Exhaustive identity suite on a parameter grid");
  ver->add_option("--max-k", o.max_k, "Largest k (tuples have up to k+1 entries)")->check(CLI::PositiveNumber);
  ver->add_option("--max-m", o.max_m, "Largest parameter value")->check(CLI::PositiveNumber);
  add_out(ver);

  auto* scan = app.add_subcommand("scan", "Convergence of lambda as the last parameter grows");
  scan->add_option("--prefix", o.prefix, "m1,...,mk")->required();
  scan->add_option("--m-min", o.m_min, "First value of the last parameter")->check(CLI::PositiveNumber);
  scan->add_option("--m-max", o.m_max, "Last value of the last parameter")->check(CLI::PositiveNumber);
  add_precision(scan);
  add_out(scan);

  auto* lim = app.add_subcommand("limit", "Limit dilatation for a prefix");
  lim->add_option("--prefix", o.prefix, "m1,...,mk")->required();
  lim->add_option("--digits", o.digits, "Decimal places")->check(CLI::Range(0, 17));
  lim->add_flag("--json", o.json, "JSON report");
  add_precision(lim);
  add_out(lim);

  auto* bound = app.add_subcommand("bound", "Parameters with small dilatation and large volume bound");
  bound->add_option("--lambda", o.target_lambda, "Dilatation target (> 1)")->required();
  bound->add_option("--volume", o.target_volume, "Volume target (> 0)")->required();
  add_out(bound);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    out << help.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::string text;
    int status = kExitOk;
    if (*dil) {
      text = run_dilatation(o);
    } else if (*poly) {
      text = run_polynomial(o);
    } else if (*mat) {
      text = run_matrix(o);
    } else if (*ver) {
      const GridSummary summary = verify_grid(o.max_k, o.max_m);
      text = summary.to_text();
      status = summary.all_passed() ? kExitOk : kExitFailure;
    } else if (*scan) {
      if (o.m_min > o.m_max) {
        err << "scan: --m-min must not exceed --m-max\n";
        return kExitUsage;
      }
      text = run_scan(o);
    } else if (*lim) {
      text = run_limit(o);
    } else if (*bound) {
      if (!(o.target_lambda > 1) || !(o.target_volume > 0)) {
        err << "bound: --lambda must be > 1 and --volume > 0\n";
        return kExitUsage;
      }
      text = run_bound(o);
    }
    emit(text, o.out_path, out);
    return status;
  } catch (const TupleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace dilate::cli
