// Copyright 2026 The unifac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unifac/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "unifac/factorizer.hpp"
#include "unifac/io.hpp"
#include "unifac/oracle.hpp"
#include "unifac/orthogen.hpp"

namespace unifac::cli {

namespace {

struct Options {
  std::vector<std::string> in;
  std::vector<std::string> out;
  std::optional<double> tolerance;
  bool special_unitary = false;
  bool reflect = false;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string kind = "haar_unitary";
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err) {}

  int compose_cmd() {
    const io::ParamDocument doc = io::parse_params(io::read_file(opt_.in.at(0)));
    const bool su = opt_.special_unitary || doc.special_unitary;
    const ComplexMatrix m = su ? compose_su(doc.params) : compose(doc.params);
    err_ << "unitarity defect: " << io::format_number(unitarity_defect(m)) << '\n';
    emit(opt_.out.at(0), io::format_matrix(m));
    return kOk;
  }

  int decompose_cmd() {
    const ComplexMatrix m = io::parse_matrix(io::read_file(opt_.in.at(0)));
    err_ << "unitarity defect: " << io::format_number(unitarity_defect(m)) << '\n';
    const ParameterSet p = decompose(m, opt_.tolerance);
    emit(opt_.out.at(0), io::format_params({p, false}));
    return kOk;
  }

  int weyl_cmd() {
    const io::ParamDocument doc = io::parse_params(io::read_file(opt_.in.at(0)));
    const WeylForm form = weyl_form(doc.params);
    err_ << "max eigenrelation residual: " << io::format_number(form.eigen_residual()) << '\n';
    emit(opt_.out.at(0), io::format_matrix(form.w));
    emit(opt_.out.at(1), io::format_matrix(form.reconstruct()));
    return kOk;
  }

  int givens_cmd() {
    const io::ParamDocument doc = io::parse_params(io::read_file(opt_.in.at(0)));
    const ParameterSet& p = doc.params;
    std::vector<GivensChain> chains;
    for (std::size_t level = 0; level + 1 < p.n(); ++level) {
      chains.push_back(givens_chain(p.angle_block(level)));
    }
    emit(opt_.out.at(0), io::format_givens(p.n(), chains));
    return kOk;
  }

  int so_cmd() {
    const io::ParamDocument doc = io::parse_params(io::read_file(opt_.in.at(0)));
    const RealMatrix r = compose_so(doc.params.n(), doc.params.angles(), opt_.reflect);
    err_ << "orthogonality defect: " << io::format_number(orthogonality_defect(r)) << '\n';
    emit(opt_.out.at(0), io::format_matrix(to_complex(r)));
    return kOk;
  }

  int verify_cmd() {
    const ComplexMatrix a = io::parse_matrix(io::read_file(opt_.in.at(0)));
    const io::ParamDocument doc = io::parse_params(io::read_file(opt_.in.at(1)));
    const ParameterSet p =
        doc.special_unitary ? special_unitary_parameters(doc.params) : doc.params;
    const VerificationReport report = verify_factorization(a, factor_sequence(p));
    const double tol = opt_.tolerance.value_or(default_decompose_gate(a.size()));

    err_ << "residual: " << io::format_number(report.residual) << '\n';
    for (const FactorCheck& c : report.factors) {
      err_ << "factor " << c.position << (c.orthogonal ? " orthogonal" : " diagonal")
           << " level " << c.level << " defect " << io::format_number(c.unitarity_defect)
           << " structure " << (c.structure_ok ? "ok" : "BROKEN") << '\n';
    }
    const bool ok = report.residual <= tol;
    err_ << (ok ? "verified" : "FAILED") << " (tolerance " << io::format_number(tol) << ")\n";
    return ok ? kOk : kVerifyFailed;
  }

  int random_cmd() {
    const auto kind = parse_random_kind(opt_.kind);
    if (!kind) {
      err_ << "unknown --kind " << opt_.kind << '\n';
      return kParseError;
    }
    const RandomSpec spec{opt_.n, opt_.seed, *kind};
    std::string text;
    switch (*kind) {
      case RandomKind::haar_unitary:
      case RandomKind::haar_special_unitary:
        text = io::format_matrix(random_unitary(spec));
        break;
      case RandomKind::haar_orthogonal:
        text = io::format_matrix(to_complex(random_orthogonal(spec)));
        break;
      case RandomKind::random_parameters:
        text = io::format_params({random_parameters(spec), false});
        break;
    }
    emit(opt_.out.at(0), text);
    return kOk;
  }

 private:
  void emit(const std::string& path, const std::string& text) {
    if (path == "-") {
      out_ << text;
    } else {
      io::write_file(path, text);
    }
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Factor unitary matrices into phase diagonals and orthogonal matrices", "unifac"};
  app.require_subcommand(1, 1);

  auto add_in = [&](CLI::App* cmd, int count, const std::string& what) {
    cmd->add_option("--in", opt.in, what)->required()->expected(count);
  };
  auto add_out = [&](CLI::App* cmd, int count, const std::string& what) {
    cmd->add_option("--out", opt.out, what + " ('-' for standard output)")
        ->required()
        ->expected(count);
  };

  auto* compose_app = app.add_subcommand("compose", "Parameter file -> unitary matrix file");
  add_in(compose_app, 1, "Parameter file");
  add_out(compose_app, 1, "Matrix file");
  compose_app->add_flag("--special-unitary", opt.special_unitary,
                        "Adjust the last phase so the determinant is 1");

  auto* decompose_app = app.add_subcommand("decompose", "Unitary matrix file -> parameter file");
  add_in(decompose_app, 1, "Matrix file");
  add_out(decompose_app, 1, "Parameter file");
  decompose_app->add_option("--tolerance", opt.tolerance,
                            "Unitarity gate on ||A*A - I||_F (default 1e-8 * n)");

  auto* weyl_app = app.add_subcommand("weyl", "Parameter file -> w and W = w* d w");
  add_in(weyl_app, 1, "Parameter file");
  add_out(weyl_app, 2, "Matrix files for w and W, in that order");

  auto* givens_app = app.add_subcommand("givens", "Parameter file -> Givens chains per level");
  add_in(givens_app, 1, "Parameter file");
  add_out(givens_app, 1, "Givens chain file");

  auto* so_app = app.add_subcommand("so", "Angles of a parameter file -> rotation matrix file");
  add_in(so_app, 1, "Parameter file (phases are ignored)");
  add_out(so_app, 1, "Matrix file");
  so_app->add_flag("--reflect", opt.reflect, "Right-multiply by diag(1, ..., 1, -1)");

  auto* verify_app = app.add_subcommand("verify", "Check a matrix file against a parameter file");
  add_in(verify_app, 2, "Matrix file, then parameter file");
  verify_app->add_option("--tolerance", opt.tolerance,
                         "Largest accepted residual ||A - product||_F (default 1e-8 * n)");

  auto* random_app = app.add_subcommand("random", "Seeded random matrix or parameter file");
  random_app->add_option("--n", opt.n, "Dimension")->required()->check(CLI::PositiveNumber);
  random_app->add_option("--seed", opt.seed, "Seed")->capture_default_str();
  random_app->add_option("--kind", opt.kind,
                         "haar_unitary | haar_special_unitary | haar_orthogonal | "
                         "random_parameters")
      ->capture_default_str();
  add_out(random_app, 1, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  Runner runner(opt, out, err);
  try {
    if (compose_app->parsed()) return runner.compose_cmd();
    if (decompose_app->parsed()) return runner.decompose_cmd();
    if (weyl_app->parsed()) return runner.weyl_cmd();
    if (givens_app->parsed()) return runner.givens_cmd();
    if (so_app->parsed()) return runner.so_cmd();
    if (verify_app->parsed()) return runner.verify_cmd();
    return runner.random_cmd();
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const NotUnitaryError& e) {
    err << "error: " << e.what() << '\n';
    return kNotUnitary;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kShapeError;
  }
}

}  // namespace unifac::cli
