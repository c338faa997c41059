// fuscond: command-line front end for fusion rings, modular data and
// condensation bundles.
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fuscond/errors.h"
#include "fuscond/examples.h"
#include "fuscond/galois.h"
#include "fuscond/io.h"

using namespace fuscond;

namespace {

enum Status { kOk = 0, kCheckFailed = 1, kParse = 2, kNumerical = 3 };

std::string join(const std::vector<long long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

int run_validate(const std::string& path) {
  Json doc = read_json_file(path);
  const std::string schema = schema_of(doc);
  ValidationReport report;
  if (schema == "ring.v1") {
    BasedRing ring = ring_from_json(doc);
    report = validate(ring);
    if (report.ok()) {
      DimVector d = fp_dims(ring);
      std::cout << "FP dimensions:";
      for (std::size_t i = 0; i < ring.rank(); ++i) {
        std::cout << " " << ring.name(i) << "=" << to_string(d[i].to_complex(), 12);
      }
      std::cout << "\n\n";
    }
  } else if (schema == "mtc.v1") {
    ModularData md = mtc_from_json(doc);
    report = validate(md, settings().tol);
    if (report.ok()) {
      IdempotentCheck ic = check_central_idempotents(md);
      if (std::max(ic.orthogonality, ic.completeness) > settings().tol) {
        report.fail("central-idempotents", {}, "S-matrix idempotents not orthogonal/complete",
                    std::max(ic.orthogonality, ic.completeness));
      } else {
        report.pass("central-idempotents", "orthogonal and complete",
                    std::max(ic.orthogonality, ic.completeness));
      }
    }
  } else {
    report = check_bundle(bundle_from_json(doc));
  }
  std::cout << report.to_markdown();
  return report.ok() ? kOk : kCheckFailed;
}

int run_analyze(const std::string& path) {
  CondensationBundle b = bundle_from_json(read_json_file(path));
  ValidationReport bundle_report = check_bundle(b);
  std::cout << "# " << b.name << "\n\n## bundle checks\n\n" << bundle_report.to_markdown() << "\n";
  if (!bundle_report.ok()) return kCheckFailed;

  SchurWeylReport sw = schur_weyl(b);
  ValidationReport codegree = codegree_check(b, sw);
  std::cout << "## Schur-Weyl\n\n";
  std::cout << "rank " << sw.rank << "\n";
  std::cout << "ideal_dim " << sw.ideal_dim << "\n";
  std::cout << "kernel_dim " << sw.kernel_dim << "\n";
  std::cout << "sum_n_squared " << sw.sum_n_squared << "\n";
  std::cout << "blocks " << join(sw.block_m) << "\n";
  std::cout << "seed " << sw.profile.seed << " retries " << sw.profile.retries << "\n\n";
  std::cout << "| block | m | label | d(x) | best | second |\n|---|---|---|---|---|---|\n";
  for (std::size_t k = 0; k < sw.blocks.size(); ++k) {
    const auto& bm = sw.matches[k];
    std::cout << "| " << k << " | " << bm.m << " | " << (bm.x ? b.ambient.labels()[*bm.x] : "-") << " | "
              << to_string(bm.dim_x.to_complex(), 10) << " | " << (bm.x ? fmt(bm.best_residual) : "-") << " | "
              << (bm.x ? fmt(bm.second_residual) : "-") << " |\n";
  }
  std::cout << "\n" << sw.checks.to_markdown() << "\n## formal codegree\n\n" << codegree.to_markdown();
  return sw.checks.ok() && codegree.ok() ? kOk : kCheckFailed;
}

int run_galois(const std::string& path, const std::string& dot_path) {
  CondensationBundle b = bundle_from_json(read_json_file(path));
  ValidationReport bundle_report = check_bundle(b);
  if (!bundle_report.ok()) {
    std::cout << bundle_report.to_markdown();
    return kCheckFailed;
  }
  SchurWeylReport sw = schur_weyl(b);
  GaloisReport g = verify_correspondence(b, sw);
  std::cout << "# " << b.name << "\n\n" << galois_markdown(b, sw, g);
  auto q = group_quotient(b, sw);
  std::cout << "group quotient: " << (q ? q->name : "none") << "\n";
  std::cout << "pointed subgroup: " << pointed_subgroup(b.module_ring).name << "\n\n";
  std::cout << g.checks.to_markdown();
  if (!dot_path.empty()) write_text_file(dot_path, galois_dot(b, sw, g));
  return g.ok() ? kOk : kCheckFailed;
}

int run_example(const std::string& name, int n, const std::string& mtc_path, const std::string& emit) {
  auto family = family_from_name(name);
  if (!family) throw CapabilityError("unknown example '" + name + "'");
  ExampleSpec spec{*family, n, std::nullopt};
  if (*family == Family::CosetDiagonal) {
    if (mtc_path.empty()) throw CapabilityError("coset needs --mtc <file>");
    spec.md = mtc_from_json(read_json_file(mtc_path));
  }
  const std::string text = dump_canonical(bundle_to_json(build(spec)));
  if (emit.empty()) {
    std::cout << text;
  } else {
    write_text_file(emit, text);
  }
  return kOk;
}

int run_indicators(const std::string& path, const std::string& x) {
  CondensationBundle b = bundle_from_json(read_json_file(path));
  SchurWeylReport sw = schur_weyl(b);
  const std::size_t xi = b.ambient.index_of(x);
  std::cout << "| Y | indicator |\n|---|---|\n";
  const std::size_t s = b.module_ring.rank();
  for (std::size_t y = 0; y < s; ++y) {
    Element a(s);
    a[y] = Complex(1);
    Complex v = indicator(b, sw, xi, a);
    // Print residue-level parts as exact zeros.
    if (abs(v.real()) < settings().tol) v = Complex(Real(0), v.imag());
    if (abs(v.imag()) < settings().tol) v = Complex(v.real(), Real(0));
    std::cout << "| " << b.module_ring.name(y) << " | " << to_string(v, 12) << " |\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuscond: fusion rings, modular data and condensable algebras"};
  app.require_subcommand(1, 1);
  double tol = 1e-9;
  unsigned digits = 64;
  app.add_option("--tol", tol, "residual tolerance")->capture_default_str();
  app.add_option("--digits", digits, "significant digits of the float backend")->capture_default_str();

  std::string input, dot, x, mtc, emit, name;
  int n = 1;
  auto* validate_cmd = app.add_subcommand("validate", "check a ring.v1, mtc.v1 or bundle.v1 file");
  validate_cmd->add_option("input", input)->required();
  auto* analyze_cmd = app.add_subcommand("analyze", "bundle checks, Schur-Weyl blocks and codegrees");
  analyze_cmd->add_option("input", input)->required();
  auto* galois_cmd = app.add_subcommand("galois", "lattice of subrings and invariant subalgebras");
  galois_cmd->add_option("input", input)->required();
  galois_cmd->add_option("--dot", dot, "write the Hasse diagram");
  auto* example_cmd = app.add_subcommand("example", "emit a built-in bundle");
  example_cmd->add_option("name", name)->required()->check(CLI::IsMember(family_names()));
  example_cmd->add_option("--n", n)->capture_default_str();
  example_cmd->add_option("--mtc", mtc, "modular data for the coset example");
  example_cmd->add_option("--emit", emit, "output path (default stdout)");
  auto* indicators_cmd = app.add_subcommand("indicators", "character of W_x on the module ring basis");
  indicators_cmd->add_option("input", input)->required();
  indicators_cmd->add_option("--x", x)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    settings().tol = tol;
    set_float_digits(digits);
    if (const char* seed = std::getenv("FUSCOND_SEED")) settings().seed = std::stoull(seed, nullptr, 0);
    if (*validate_cmd) return run_validate(input);
    if (*analyze_cmd) return run_analyze(input);
    if (*galois_cmd) return run_galois(input, dot);
    if (*example_cmd) return run_example(name, n, mtc, emit);
    if (*indicators_cmd) return run_indicators(input, x);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kNumerical;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}
