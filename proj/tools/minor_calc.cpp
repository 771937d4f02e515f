// minor_calc: command-line front end.
//
// Exit codes: 0 pass, 1 a mathematical property failed (or a counterexample
// was found), 2 usage or input error.

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "minorcalc/harness/demos.hpp"
#include "minorcalc/harness/scan.hpp"
#include "minorcalc/harness/verify.hpp"
#include "minorcalc/io.hpp"

namespace mc = minorcalc;
namespace mh = minorcalc::harness;

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Common {
  std::string ring;
  std::uint64_t seed = 1;
  bool json = false;
  std::string out;
};

void emit(const Common& common, const std::string& text) {
  std::cout << text;
  if (!common.out.empty()) {
    std::ofstream f(common.out);
    if (!f) throw mc::InputError("cannot write '" + common.out + "'");
    f << text;
  }
}

std::string json_text(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

template <mc::CommutativeRing R>
std::string minors_output(const mc::MinorTable<R>& table, bool json) {
  return json ? json_text(mc::minor_table_to_json(table)) : mc::format_minor_table(table);
}

int cmd_minors(const Common& common, const std::string& path, std::optional<int> m) {
  const mc::AnyMatrix any = mc::read_matrix_file(path);
  std::string text = std::visit(
      [&](const auto& a) {
        if (!a.is_square()) throw mc::InputError("matrix must be square");
        if (!m) return minors_output(mc::principal_minors(a), common.json);
        if (*m < 0) throw mc::InputError("--m must be non-negative");
        return minors_output(mc::principal_minors(mc::mat_pow(a, static_cast<std::uint64_t>(*m))),
                             common.json);
      },
      any);
  emit(common, text);
  return kPass;
}

int cmd_synth(const Common& common, int n, int i, int m, std::optional<int> j) {
  if (j) {
    const auto cert = mc::synth_offdiag(n, i, *j, m);
    const std::string text = json_text(mc::certificate_to_json(cert));
    emit(common, text);
    return kPass;
  }
  const auto u = mc::synth_diag(n, i, m);
  if (common.json) {
    std::cout << json_text({{"n", n}, {"i", i}, {"m", m}, {"polynomial", u.body.to_string()}});
  } else {
    std::cout << u.body.to_string() << "\n";
  }
  if (!common.out.empty()) {
    std::ofstream f(common.out);
    if (!f) throw mc::InputError("cannot write '" + common.out + "'");
    f << u.serialize();
  }
  return kPass;
}

struct VerifyArgs {
  std::string suite;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<std::uint64_t> trials;
  std::int64_t range = 9;
  std::string in;
};

int cmd_verify(const Common& common, const VerifyArgs& args) {
  mh::SuiteResult result;
  mh::SuiteOptions opt;
  opt.ring = mc::RingSpec::parse(common.ring.empty() ? "int" : common.ring);
  opt.seed = common.seed;
  opt.entries.int_range = args.range;
  const auto& s = args.suite;
  if (s == "symbolic") {
    if (!args.in.empty()) {
      std::ifstream f(args.in);
      if (!f) throw mc::InputError("cannot open '" + args.in + "'");
      std::stringstream buffer;
      buffer << f.rdbuf();
      const auto u = mc::UniversalPolynomial::deserialize(buffer.str());
      result.suite = "symbolic[" + u.header() + "]";
      result.cases = 1;
      if (!mc::verify_symbolic(u)) result.fail(u.header() + " differs from the generic power");
    } else {
      result = mh::run_symbolic_suite(args.n.value_or(3), args.m.value_or(4));
    }
  } else if (s == "random") {
    opt.max_n = args.n.value_or(5);
    opt.max_m = args.m.value_or(6);
    opt.trials = args.trials.value_or(200);
    result = mh::run_random_suite(opt);
  } else if (s == "all-ones") {
    result = mh::run_all_ones_suite(args.n.value_or(5), args.m.value_or(8));
  } else if (s == "offdiag") {
    opt.max_n = args.n.value_or(4);
    opt.max_m = args.m.value_or(4);
    opt.trials = args.trials.value_or(100);
    result = mh::run_offdiag_suite(opt);
  } else if (s == "adjugate") {
    opt.max_n = args.n.value_or(5);
    opt.trials = args.trials.value_or(200);
    result = mh::run_adjugate_suite(opt);
  } else if (s == "charpoly") {
    result = mh::run_charpoly_suite(args.n.value_or(4));
  } else {
    throw mc::InputError("unknown suite '" + s +
                         "' (expected symbolic, random, all-ones, offdiag, adjugate or charpoly)");
  }
  if (common.json) {
    emit(common, json_text({{"suite", result.suite},
                            {"passed", result.passed},
                            {"cases", result.cases},
                            {"first_failure", result.first_failure}}));
  } else {
    emit(common, result.summary() + "\n");
  }
  return result.passed ? kPass : kViolation;
}

int cmd_example_cd(const Common& common, bool symbolic, const std::vector<std::string>& values) {
  mh::ExampleCdReport report;
  if (symbolic || values.empty()) {
    if (!values.empty()) throw mc::InputError("--symbolic takes no values");
    report = mh::example_cd_symbolic();
  } else {
    if (values.size() != 8) {
      throw mc::InputError("example-cd needs eight integers a b c d p q r s (got " +
                           std::to_string(values.size()) + ")");
    }
    std::array<mc::BigInt, 8> v;
    for (std::size_t k = 0; k < 8; ++k) {
      const auto& t = values[k];
      const bool ok = !t.empty() && t != "-" &&
                      t.find_first_not_of("0123456789", t[0] == '-' ? 1 : 0) == std::string::npos;
      if (!ok) throw mc::InputError("not an integer: '" + t + "'");
      v[k] = mc::BigInt(t);
    }
    report = mh::example_cd_numeric(v);
  }
  emit(common, common.json ? json_text(report.to_json()) : report.to_text());
  return report.reproduced() ? kPass : kViolation;
}

int cmd_counterexample(const Common& common) {
  const auto spec = mc::RingSpec::parse(common.ring.empty() ? "footnote:2" : common.ring);
  if (spec.kind != mc::RingSpec::Kind::kFootnote) {
    throw mc::InputError("counterexample runs over the footnote algebra (--ring footnote:p)");
  }
  const auto report = mh::counterexample(spec.modulus);
  emit(common, common.json ? json_text(report.to_json()) : report.to_text());
  return report.reproduced() ? kPass : kViolation;
}

struct ScanArgs {
  int n = 3;
  int m_max = 4;
  std::string mode = "random";
  std::uint64_t trials = 1000;
  unsigned workers = 0;
  std::int64_t range = 9;
  bool timing = false;
};

int cmd_scan(const Common& common, const ScanArgs& args) {
  mh::ScanOptions opt;
  opt.ring = mc::RingSpec::parse(common.ring.empty() ? "mod:2" : common.ring);
  opt.n = args.n;
  opt.m_max = args.m_max;
  opt.mode = mh::parse_scan_mode(args.mode);
  opt.trials = args.trials;
  opt.seed = common.seed;
  opt.workers = args.workers;
  opt.int_range = args.range;
  const auto report = mh::run_scan(opt);
  emit(common, common.json ? json_text(report.to_json(args.timing)) : report.to_text(args.timing));
  return report.violations.empty() ? kPass : kViolation;
}

void add_common(CLI::App* sub, Common& common, bool ring, bool seed) {
  if (ring) sub->add_option("--ring", common.ring, "int, mod:k or footnote:p");
  if (seed) sub->add_option("--seed", common.seed, "RNG seed");
  sub->add_flag("--json", common.json, "JSON output");
  sub->add_option("--out", common.out, "also write the output to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal minors, universal polynomials for diagonal entries of matrix powers, "
               "and finite-ring scans"};
  app.require_subcommand(1);
  Common common;

  std::string matrix_path;
  int pow_m = 0;
  auto* minors = app.add_subcommand("minors", "print all principal minors of a matrix");
  minors->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  add_common(minors, common, false, false);

  auto* pow_minors = app.add_subcommand("pow-minors", "print all principal minors of A^m");
  pow_minors->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  pow_minors->add_option("--m", pow_m, "power")->required();
  add_common(pow_minors, common, false, false);

  int sn = 0, si = 0, sm = 0;
  std::optional<int> sj;
  auto* synth = app.add_subcommand("synth", "universal polynomial for (A^m)_{i,i}, or a "
                                            "certificate for (A^m)_{i,j} with --j");
  synth->add_option("n", sn, "matrix size")->required();
  synth->add_option("i", si, "row index")->required();
  synth->add_option("m", sm, "power")->required();
  synth->add_option("--j", sj, "column index for an off-diagonal certificate");
  add_common(synth, common, false, false);

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", vargs.suite,
                     "symbolic | random | all-ones | offdiag | adjugate | charpoly")
      ->required();
  verify->add_option("--n", vargs.n, "largest matrix size");
  verify->add_option("--m", vargs.m, "largest power");
  verify->add_option("--trials", vargs.trials, "random trials");
  verify->add_option("--range", vargs.range, "integer entries are drawn from [-range, range]");
  verify->add_option("--in", vargs.in, "symbolic: check a serialized polynomial file instead");
  add_common(verify, common, true, true);

  bool cd_symbolic = false;
  std::vector<std::string> cd_values;
  auto* cd = app.add_subcommand("example-cd", "matrices with equal principal minors whose "
                                              "squares differ");
  cd->add_flag("--symbolic", cd_symbolic, "work over Z[a,b,c,d,p,q,r,s] (the default)");
  cd->add_option("values", cd_values, "a b c d p q r s");
  add_common(cd, common, false, false);

  auto* ce = app.add_subcommand("counterexample", "the footnote-algebra counterexample");
  add_common(ce, common, true, false);

  ScanArgs sargs;
  auto* scan = app.add_subcommand("scan", "search a finite ring for matrices whose principal "
                                          "minors are 1 but those of a power are not");
  scan->add_option("--n", sargs.n, "matrix size");
  scan->add_option("--m-max", sargs.m_max, "largest power checked");
  scan->add_option("--mode", sargs.mode, "exhaustive | random | family");
  scan->add_option("--trials", sargs.trials, "random mode: number of matrices");
  scan->add_option("--workers", sargs.workers, "threads (default: all, capped by MINOR_CALC_WORKERS)");
  scan->add_option("--range", sargs.range, "random integer entries from [-range, range]");
  scan->add_flag("--timing", sargs.timing, "include elapsed time in the report");
  add_common(scan, common, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*minors) return cmd_minors(common, matrix_path, std::nullopt);
    if (*pow_minors) return cmd_minors(common, matrix_path, pow_m);
    if (*synth) return cmd_synth(common, sn, si, sm, sj);
    if (*verify) return cmd_verify(common, vargs);
    if (*cd) return cmd_example_cd(common, cd_symbolic, cd_values);
    if (*ce) return cmd_counterexample(common);
    if (*scan) return cmd_scan(common, sargs);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return kUsage;
}
