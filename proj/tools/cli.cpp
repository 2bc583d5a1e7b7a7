#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <ostream>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "document.hpp"
#include "jbdet/biquat.hpp"
#include "jbdet/determinant.hpp"
#include "jbdet/errors.hpp"
#include "jbdet/generators.hpp"
#include "jbdet/minproj.hpp"
#include "jbdet/reduce.hpp"
#include "jbdet/sampling.hpp"
#include "jbdet/spectral.hpp"
#include "jbdet/suites.hpp"

namespace jbdet::cli {

namespace {

using io::json;

struct Globals {
  std::uint64_t seed = kDefaultSuiteSeed;
  std::optional<double> tolerance;
  std::optional<long> trials;
  std::string out;
  bool no_timestamp = false;
};

std::string fmt_c(cplx z) { return fmt::format("{:f}+({:f})i", z.real(), z.imag()); }

std::string timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

HermMatrix as_c6(const io::Document& d, const char* what) {
  if (!d.herm) throw io::DocumentError(std::string(what) + ": expected a matrix document");
  if (d.kind == io::DocKind::c6_element) return *d.herm;
  if (d.herm->order() != 3) throw io::DocumentError(std::string(what) + ": expected a 3x3 matrix");
  return promote(*d.herm, 3);
}

void emit(const Globals& g, std::ostream& out, const json& j) {
  if (g.out.empty()) {
    out << j.dump(2) << '\n';
  } else {
    io::write_text(g.out, j.dump(2) + "\n");
  }
}

int cmd_dt(const Globals& g, const std::string& path, bool check_hat, std::ostream& out) {
  const io::Document d = io::read_document(path);
  if (!d.herm) throw io::DocumentError("dt: expected a matrix document, got " + io::to_string(d.kind));
  const HermMatrix& x = *d.herm;

  cplx value;
  std::string route;
  std::optional<HermMatrix> biq;
  if (d.kind == io::DocKind::herm_biquat) {
    const DtResult r = dt_n(x);
    value = r.value;
    route = to_string(r.route);
    biq = x;
  } else {
    const C6DtResult r = dt_general(x);
    value = r.value;
    route = to_string(r.route);
    if (r.route == DtGeneralRoute::biquaternionic) biq = demote(x, 2);
  }

  out << "dt = " << fmt_c(value) << '\n';
  out << "route = " << route << '\n';
  json report = {{"dt", io::encode_complex(value)}, {"route", route}};
  int code = kOk;
  if (biq) {
    const cplx det = det_lu(hat_matrix(*biq));
    const double abs_err = std::abs(value * value - det);
    const double rel = abs_err / std::max(1.0, std::abs(det));
    out << fmt::format("residual = {:.3e}\n", rel);
    report["residual"] = rel;
    if (check_hat) {
      const double tol = g.tolerance.value_or(1e-9);
      const bool ok = rel <= tol;
      out << fmt::format("check-hat: |dt^2 - det(hat)| = {:.3e}, relative {:.3e}, tolerance {:.1e}: {}\n", abs_err,
                         rel, tol, ok ? "ok" : "FAILED");
      report["check_hat"] = {{"abs", abs_err}, {"relative", rel}, {"tolerance", tol}, {"ok", ok}};
      if (!ok) code = kNumeric;
    }
  } else if (check_hat) {
    out << "check-hat: skipped, the entries are not biquaternionic\n";
  }
  if (!g.out.empty()) io::write_text(g.out, report.dump(2) + "\n");
  return code;
}

int cmd_verify(const Globals& g, const std::string& name, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names;
  if (name == "all") {
    names = suite_names();
  } else if (is_suite(name)) {
    names.push_back(name);
  } else {
    err << "unknown suite '" << name << "'; known suites:";
    for (const auto& s : suite_names()) err << ' ' << s;
    err << " all\n";
    return kUsage;
  }

  SuiteOptions opt;
  opt.seed = g.seed;
  opt.trials = g.trials;
  opt.tolerance = g.tolerance;

  json reports = json::array();
  bool all_pass = true;
  if (!g.no_timestamp) out << "generated " << timestamp() << '\n';
  for (const auto& n : names) {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteReport r = run_suite(n, opt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out << "suite " << n << " (seed " << g.seed << ")\n";
    json props = json::array();
    for (const auto& p : r.properties) {
      const std::string tag = p.criterion ? fmt::format("[{}]", p.criterion) : "";
      out << fmt::format("  {} {:>4} {}: trials {}, worst {:.3e}, tolerance {:.1e}", p.pass() ? "PASS" : "FAIL", tag,
                         p.name, p.trials, p.worst, p.tolerance);
      if (p.failures) out << fmt::format(", {} failed ({})", p.failures, p.note);
      out << '\n';
      props.push_back({{"name", p.name},
                       {"criterion", p.criterion},
                       {"trials", p.trials},
                       {"worst", p.worst},
                       {"tolerance", p.tolerance},
                       {"failures", p.failures},
                       {"note", p.note},
                       {"pass", p.pass()}});
    }
    if (!r.coverage.empty()) {
      out << "  coverage:\n";
      for (const auto& [path, count] : r.coverage) out << fmt::format("    {:<45} {}\n", path, count);
    }
    out << "  " << (r.pass() ? "suite passed" : "suite FAILED");
    if (!g.no_timestamp) out << fmt::format(" in {:.2f} s", secs);
    out << '\n';
    all_pass = all_pass && r.pass();
    json jr = {{"suite", n}, {"properties", std::move(props)}, {"coverage", r.coverage}, {"pass", r.pass()}};
    reports.push_back(std::move(jr));
  }
  if (!g.out.empty()) {
    json doc = {{"schema_version", io::kSchemaVersion}, {"seed", g.seed}, {"suites", std::move(reports)},
                {"pass", all_pass}};
    if (g.trials) doc["trials"] = *g.trials;
    if (g.tolerance) doc["tolerance"] = *g.tolerance;
    if (!g.no_timestamp) doc["generated_at"] = timestamp();
    io::write_text(g.out, doc.dump(2) + "\n");
  }
  return all_pass ? kOk : kFailed;
}

const std::vector<std::string>& gen_kinds() {
  static const std::vector<std::string> kinds{
      "octonion",     "herm-biquat",    "unitary-biquat",        "herm-c6",
      "unitary-c6",   "normal-c6",      "self-adjoint-c6",       "diagonal-unitary-c6",
      "min-projection-c6"};
  return kinds;
}

json generate(const std::string& kind, Rng& rng, int order) {
  if (kind == "octonion") return io::encode(random_cd(rng, 3));
  if (kind == "herm-biquat") return io::encode(random_herm(rng, order, 2));
  if (kind == "unitary-biquat") return io::encode(random_unitary(rng, 2));
  if (kind == "herm-c6") return io::encode(random_herm(rng, 3, 3));
  if (kind == "unitary-c6") return io::encode(random_unitary(rng, 3));
  if (kind == "normal-c6") return io::encode(random_normal(rng, 3));
  if (kind == "self-adjoint-c6") return io::encode(random_self_adjoint(rng, 3, 3));
  if (kind == "diagonal-unitary-c6") return io::encode(random_diagonal_unitary(rng, 3));
  return io::encode(random_min_projection(rng));
}

int cmd_gen(const Globals& g, const std::string& kind, long count, int order, std::ostream& out, std::ostream& err) {
  const auto& kinds = gen_kinds();
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
    err << "unknown kind '" << kind << "'; known kinds:";
    for (const auto& k : kinds) err << ' ' << k;
    err << '\n';
    return kUsage;
  }
  if (count < 1) {
    err << "--count must be positive\n";
    return kUsage;
  }
  if (!g.out.empty()) std::filesystem::create_directories(g.out);
  for (long i = 0; i < count; ++i) {
    Rng rng(subseed(g.seed, static_cast<std::uint64_t>(i)));
    const json doc = generate(kind, rng, order);
    if (g.out.empty()) {
      out << doc.dump() << '\n';
    } else {
      const std::string path = (std::filesystem::path(g.out) / fmt::format("{}-{}.json", kind, i)).string();
      io::write_text(path, doc.dump(2) + "\n");
      out << path << '\n';
    }
  }
  return kOk;
}

int cmd_spectral(const Globals& g, const std::string& path, const std::string& isotope, std::ostream& out) {
  const HermMatrix x = as_c6(io::read_document(path), "spectral");
  std::optional<HermMatrix> e;
  if (!isotope.empty()) e = as_c6(io::read_document(isotope), "spectral --isotope");
  const SpectralResolution s = spectral_decompose(x, e);

  json eigen = json::array();
  for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) {
    out << fmt::format("eigenvalue {} (m={})\n", fmt_c(s.eigenvalues[j]), s.multiplicities[j]);
    eigen.push_back({{"value", io::encode_complex(s.eigenvalues[j])},
                     {"multiplicity", s.multiplicities[j]},
                     {"component", io::encode(s.components[j])}});
  }
  out << fmt::format("reconstruction residual {:.3e}\n", s.residual);
  if (!g.out.empty()) {
    io::write_text(g.out, json{{"schema_version", io::kSchemaVersion},
                               {"kind", "spectral_resolution"},
                               {"eigenvalues", std::move(eigen)},
                               {"residual", s.residual}}
                                  .dump(2) +
                              "\n");
  }
  return kOk;
}

int cmd_reduce(const Globals& g, const std::string& u_path, const std::string& e_path, std::ostream& out) {
  const HermMatrix u = as_c6(io::read_document(u_path), "reduce u");
  const HermMatrix e = as_c6(io::read_document(e_path), "reduce e");
  const ReductionResult r = simultaneous_biq(u, e);
  json doc = {{"schema_version", io::kSchemaVersion},
              {"kind", "reduction_result"},
              {"automorphism", io::encode(r.automorphism)},
              {"images", json::array({io::encode(r.images[0]), io::encode(r.images[1])})},
              {"certificate", io::encode(r.certificate)}};
  if (!g.out.empty()) {
    out << "case path: " << r.certificate.case_path << '\n';
    out << fmt::format("worst residual: {:.3e}\n", r.certificate.worst_residual);
  }
  emit(g, out, doc);
  return kOk;
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("JBDET_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && end != s) return v;
  }
  return kDefaultSuiteSeed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Determinants, spectra and reductions on H_n(H_C) and C6", "jbdet"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  g.seed = default_seed();
  app.add_option("--seed", g.seed, "Random seed (default: $JBDET_SEED or 20240501)");
  app.add_option("--tolerance", g.tolerance, "Override residual tolerances");
  app.add_option("--trials", g.trials, "Override trial counts")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Write the machine-readable result here (a directory for gen)");
  app.add_flag("--no-timestamp", g.no_timestamp, "Leave timestamps and timings out of reports");

  std::string input, isotope, suite, kind, u_path, e_path;
  bool check_hat = false;
  long count = 1;
  int order = 3;

  auto* dt = app.add_subcommand("dt", "Determinant of a matrix document");
  dt->add_option("input", input, "ElementDocument path")->required();
  dt->add_flag("--check-hat", check_hat, "Compare dt^2 with det of the complex matrix");

  auto* verify = app.add_subcommand("verify", "Run a named property suite");
  verify->add_option("suite", suite, "Suite name, or 'all'")->required();

  auto* gen = app.add_subcommand("gen", "Generate random element documents");
  gen->add_option("kind", kind, "Instance kind")->required();
  gen->add_option("--count", count, "Number of documents");
  gen->add_option("--order", order, "Matrix order for herm-biquat")->check(CLI::Range(1, 16));

  auto* spectral = app.add_subcommand("spectral", "Spectral decomposition of a normal element");
  spectral->add_option("input", input, "ElementDocument path")->required();
  spectral->add_option("--isotope", isotope, "Unitary document used as the isotope unit");

  auto* reduce = app.add_subcommand("reduce", "Simultaneous reduction of a unitary u and a diagonal unitary e");
  reduce->add_option("u", u_path, "Unitary document")->required();
  reduce->add_option("e", e_path, "Diagonal unitary document")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*dt) return cmd_dt(g, input, check_hat, out);
    if (*verify) return cmd_verify(g, suite, out, err);
    if (*gen) return cmd_gen(g, kind, count, order, out, err);
    if (*spectral) return cmd_spectral(g, input, isotope, out);
    if (*reduce) return cmd_reduce(g, u_path, e_path, out);
  } catch (const io::DocumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  }
  return kUsage;
}

}  // namespace jbdet::cli
