// gpd: command-line front end for finite groupoid computations.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ample/automorphisms.hpp"
#include "ample/bisection.hpp"
#include "ample/builders.hpp"
#include "ample/cohomology.hpp"
#include "ample/convolution.hpp"
#include "ample/groupoid.hpp"
#include "ample/norms.hpp"
#include "ample/report.hpp"
#include "ample/verify.hpp"

using namespace ample;

namespace {

constexpr std::size_t kNormArrowLimit = 2000;

// Usage problems that surface after CLI11 parsing (unreadable file, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", std::abs(v) < 5e-7 ? 0.0 : v);
  return buf;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string complex_vector(const Eigen::VectorXcd& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    const double im = v[i].imag();
    out += fixed6(v[i].real()) + (im <= -5e-7 ? "-" : "+") + fixed6(std::abs(im)) + "i";
  }
  return out + "]";
}

GroupoidPtr load(const std::string& path) {
  GroupoidPtr g;
  try {
    g = load_groupoid(path);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return g;
}

// Every command except validate assumes the axioms hold.
GroupoidPtr load_valid(const std::string& path) {
  GroupoidPtr g = load(path);
  const ValidationReport v = validate(*g, 1);
  if (!v.ok()) throw InvalidGroupoid(v.violations.front());
  return g;
}

int cmd_validate(const std::string& file, Report& r) {
  GroupoidPtr g = load(file);
  const ValidationReport v = validate(*g);
  r.line().add("VALID", bool_str(v.ok())).add("ARROWS", std::to_string(g->size()))
      .add("UNITS", std::to_string(g->unit_count()));
  for (const std::string& s : v.violations) r.line().add("VIOLATION", s);
  return v.ok() ? 0 : 1;
}

int cmd_orbits(const std::string& file, Report& r) {
  GroupoidPtr g = load_valid(file);
  const auto orbs = orbits(*g);
  const IsotropySummary iso = isotropy(*g);
  r.line().add("ORBITS", std::to_string(orbs.size())).add("EFFECTIVE", bool_str(is_effective(*g)));
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    r.line().add("ORBIT", std::to_string(i)).add("UNITS", format_arrows(orbs[i]))
        .add("ISOTROPY", std::to_string(iso.per_orbit[i].elements.size()));
  }
  return 0;
}

int cmd_full_group(const std::string& file, std::size_t limit, Report& r) {
  GroupoidPtr g = load_valid(file);
  const auto full = full_group(*g, limit);
  r.line().add("ORDER", std::to_string(full.size()));
  for (const Bisection& b : full) {
    r.line().add("BISECTION", b.str()).add("RHO", format_arrows(rho(*g, b)));
  }
  return 0;
}

int cmd_h1(const std::string& file, Report& r) {
  GroupoidPtr g = load_valid(file);
  const H1Description h = h1(*g);
  r.line().add("H1", h.str()).add("ORDER", std::to_string(h.order()))
      .add("TORUS_RANK_Z1", std::to_string(h.z1.torus_rank));
  for (std::size_t i = 0; i < h.z1.orbits.size(); ++i) {
    const OrbitFrame& o = h.z1.orbits[i];
    std::string ab;
    for (std::int64_t d : o.invariants) ab += (ab.empty() ? "" : "+") + ("Z/" + std::to_string(d));
    r.line().add("ORBIT", std::to_string(i)).add("BASE", std::to_string(o.isotropy.base))
        .add("ISOTROPY", std::to_string(o.isotropy.elements.size()))
        .add("ABELIANIZATION", ab.empty() ? "0" : ab);
  }
  for (std::size_t i = 0; i < h.z1.orbits.size(); ++i) {
    const OrbitFrame& o = h.z1.orbits[i];
    for (std::size_t c = 0; c < o.characters.size(); ++c) {
      std::string values = "[";
      for (std::size_t k = 0; k < o.characters[c].size(); ++k) {
        values += (k ? "," : "") + std::to_string(o.isotropy.elements[k]) + ":" + o.characters[c][k].str();
      }
      r.line().add("CHARACTER", std::to_string(c)).add("ORBIT", std::to_string(i))
          .add("ORDER", std::to_string(o.invariants[c])).add("VALUES", values + "]");
    }
  }
  return 0;
}

struct NormArgs {
  std::string element;
  std::string p;
  int iters = 200;
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

int cmd_norm(const std::string& file, const NormArgs& args, Report& r) {
  const double p = parse_exponent(args.p);
  GroupoidPtr g = load_valid(file);
  if (g->size() > kNormArrowLimit) {
    throw SizeLimitExceeded("norm commands are limited to " + std::to_string(kNormArrowLimit) + " arrows");
  }
  const ExactElement a = parse_element(args.element, g);
  PNormOptions opts;
  opts.iters = args.iters;
  opts.seed = args.seed;
  const NormEstimate est = p_norm(regular_rep(a), p, opts);
  r.line().add("LOWER", fixed6(est.lower)).add("UPPER", fixed6(est.upper))
      .add("WITNESS", complex_vector(est.witness));
  const auto exact = i_norm_exact(a);
  r.line().add("I_NORM", exact ? exact->get_str() : fixed6(i_norm(a)));

  CertifyOptions copts;
  copts.tol = args.tol;
  copts.ascent = opts;
  Record& iso = r.line();
  try {
    const IsometryCertificate cert = certify_invertible_isometry(a, p, copts);
    iso.add("ISOMETRY", bool_str(cert.invertible_isometry)).add("NORM_STATUS", cert.norm_status)
        .add("SIDE", cert.witness_side.empty() ? "none" : cert.witness_side);
    if (cert.norm_status == "refuted") iso.add("REFUTATION", complex_vector(cert.witness));
  } catch (const ExponentTwoUnsupported&) {
    iso.add("ISOMETRY", "unknown").add("NORM_STATUS", "unsupported").add("SIDE", "none");
  } catch (const NotInvertible&) {
    iso.add("ISOMETRY", "false").add("NORM_STATUS", "not_invertible").add("SIDE", "none");
  }
  return 0;
}

int cmd_decompose(const std::string& file, const std::string& element, Report& r) {
  GroupoidPtr g = load_valid(file);
  const ExactElement a = parse_element(element, g);
  const LampertiElement u = decompose_partial_isometry(a);
  r.line().add("BISECTION", u.bisection.str()).add("PHASE", format_circle_function(u.phase))
      .add("FULL", bool_str(is_full(*g, u.bisection)));
  return 0;
}

int cmd_aut(const std::string& file, std::size_t limit, Report& r) {
  GroupoidPtr g = load_valid(file);
  const auto auts = aut_group(*g, limit);
  r.line().add("ORDER", std::to_string(auts.size()));
  for (const GroupoidAut& t : auts) r.line().add("AUT", format_aut(t));
  return 0;
}

int cmd_verify(const std::string& file, const std::string& theorem, const VerifyOptions& opts,
               Report& r) {
  GroupoidPtr g = load(file);
  const ValidationReport v = validate(*g, 1);
  if (!v.ok()) {
    r.line().add("CHECK", "groupoid.valid").add("STATUS", "fail").add("WITNESS", v.violations.front());
    r.line().add("THEOREM", theorem).add("PASSED", "0").add("FAILED", "1");
    return 1;
  }
  const VerifyReport rep = verify(g, theorem, opts);
  std::size_t passed = 0;
  for (const CheckResult& c : rep.checks) {
    passed += c.pass ? 1 : 0;
    r.line().add("CHECK", c.id).add("STATUS", c.pass ? "pass" : "fail")
        .add("WITNESS", c.witness.empty() ? "none" : c.witness);
  }
  r.line().add("THEOREM", theorem).add("PASSED", std::to_string(passed))
      .add("FAILED", std::to_string(rep.checks.size() - passed));
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groupoid algebra toolkit", "gpd"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit the report as one JSON document");

  std::string file;
  auto add_file = [&file](CLI::App* sub) {
    sub->add_option("FILE", file, "Groupoid spec (.gpd)")->required();
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the groupoid axioms");
  add_file(validate_cmd);
  auto* orbits_cmd = app.add_subcommand("orbits", "Unit orbits and effectiveness");
  add_file(orbits_cmd);

  std::size_t fg_limit = kDefaultFullGroupLimit;
  auto* full_cmd = app.add_subcommand("full-group", "Enumerate the full bisections");
  add_file(full_cmd);
  full_cmd->add_option("--limit", fg_limit, "Fail beyond this many elements")->check(CLI::PositiveNumber);

  auto* h1_cmd = app.add_subcommand("h1", "First cohomology with circle coefficients");
  add_file(h1_cmd);

  NormArgs norm;
  auto* norm_cmd = app.add_subcommand("norm", "p-norm bounds and isometry certificate");
  add_file(norm_cmd);
  norm_cmd->add_option("--element", norm.element, "Element expression")->required();
  norm_cmd->add_option("--p", norm.p, "Exponent in [1, inf]")->required();
  norm_cmd->add_option("--iters", norm.iters, "Ascent iterations per start")->check(CLI::PositiveNumber);
  norm_cmd->add_option("--seed", norm.seed, "Random seed");
  norm_cmd->add_option("--tol", norm.tol, "Certification tolerance")->check(CLI::NonNegativeNumber);

  std::string element;
  auto* dec_cmd = app.add_subcommand("decompose", "Spatial decomposition f * 1_B");
  add_file(dec_cmd);
  dec_cmd->add_option("--element", element, "Element expression")->required();

  std::size_t aut_limit = kDefaultAutLimit;
  auto* aut_cmd = app.add_subcommand("aut", "Enumerate groupoid automorphisms");
  add_file(aut_cmd);
  aut_cmd->add_option("--limit", aut_limit, "Fail beyond this many automorphisms")->check(CLI::PositiveNumber);

  std::string theorem;
  VerifyOptions vopts;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  add_file(verify_cmd);
  verify_cmd->add_option("--theorem", theorem, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"2.6", "3.7A", "3.7I", "3.7O"}));
  verify_cmd->add_option("--samples", vopts.samples, "Random samples per check")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", vopts.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  Report report;
  int status = 0;
  try {
    if (*validate_cmd) {
      report.command = "validate";
      status = cmd_validate(file, report);
    } else if (*orbits_cmd) {
      report.command = "orbits";
      status = cmd_orbits(file, report);
    } else if (*full_cmd) {
      report.command = "full-group";
      status = cmd_full_group(file, fg_limit, report);
    } else if (*h1_cmd) {
      report.command = "h1";
      status = cmd_h1(file, report);
    } else if (*norm_cmd) {
      report.command = "norm";
      status = cmd_norm(file, norm, report);
    } else if (*dec_cmd) {
      report.command = "decompose";
      status = cmd_decompose(file, element, report);
    } else if (*aut_cmd) {
      report.command = "aut";
      status = cmd_aut(file, aut_limit, report);
    } else if (*verify_cmd) {
      report.command = "verify";
      status = cmd_verify(file, theorem, vopts, report);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const InvalidExponent& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << (json ? report.json() : report.text());
  return status;
}
