#include "dkahler/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "dkahler/calculus.hpp"
#include "dkahler/form_io.hpp"
#include "dkahler/verify.hpp"

namespace dkahler {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos)
      return parts;
    start = pos + 1;
  }
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

double parse_double(std::string_view text, std::string_view what) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value))
    throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::string format_complex(Complex c) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%+.12e %+.12e", c.real(), c.imag());
  return buf;
}

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return buf;
}

struct VerifyArgs {
  std::string shape = "2x2x2x2";
  std::uint64_t seed = 0;
  double tol = 1e-10;
  std::string suite = "all";
  int samples = 1000;
};

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
  VerifyOptions opts;
  opts.shape = parse_shape(a.shape);
  opts.seed = a.seed;
  opts.tol = a.tol;
  opts.suite = parse_suite(a.suite);
  if (a.samples < 1)
    throw UsageError("--samples must be positive");
  opts.samples = a.samples;

  bool ok = true;
  for (const PropResult &r : run_verify(opts)) {
    out << format_report_line(r) << '\n';
    ok = ok && r.pass;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

struct SolveArgs {
  std::string equation = "dk";
  std::string shape;
  std::string momentum = "0,0,0,0";
  std::string mass_filter = "all";
  std::string out;
  double tol = 1e-10;
};

int cmd_solve(const SolveArgs &a, std::ostream &out, std::ostream &err) {
  const EquationKind kind = parse_equation_kind(a.equation);
  const LatticeShape shape = parse_shape(a.shape);
  const Momentum n = parse_momentum(a.momentum);
  if (a.mass_filter != "all" && a.mass_filter != "real")
    throw UsageError("--mass-filter must be all or real");
  const bool real_only = a.mass_filter == "real";

  std::vector<MomentumMode> modes = eigenmodes(kind, shape, n);
  std::erase_if(modes, [&](const MomentumMode &m) {
    return real_only && std::abs(m.mass.imag()) > a.tol;
  });
  if (modes.empty()) {
    err << "no eigenmodes pass the mass filter\n";
    return kExitNoModes;
  }

  out << "# equation " << to_string(kind) << " shape " << to_string(shape) << " momentum "
      << n.n[0] << ',' << n.n[1] << ',' << n.n[2] << ',' << n.n[3] << '\n';
  out << "# mode  mass.re  mass.im  residual\n";
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const FormField wave = plane_wave(modes[k], shape);
    const double r = sup_norm(residual(kind, wave, modes[k].mass));
    out << "MODE " << k << ' ' << format_complex(modes[k].mass) << ' ' << format_residual(r) << '\n';
    if (!a.out.empty())
      write_form_file(a.out + ".mode" + std::to_string(k) + ".json", wave);
  }
  return kExitOk;
}

int cmd_apply(const std::string &op, const std::string &in, const std::string &out_path) {
  const OperatorKind kind = parse_operator_kind(op);
  write_form_file(out_path, apply(kind, read_form_file(in)));
  return kExitOk;
}

int cmd_decompose(const std::string &tag, const std::string &in, const std::string &out_path) {
  const ProjectorKind kind = parse_projector_kind(tag);
  const FormField omega = read_form_file(in);
  write_form_file(out_path, omega * projector(kind));
  return kExitOk;
}

int cmd_residual(const std::string &equation, const std::string &mass, const std::string &in,
                 double tol, std::ostream &out) {
  const EquationKind kind = parse_equation_kind(equation);
  const Complex m = parse_mass(mass);
  const double r = sup_norm(residual(kind, read_form_file(in), m));
  out << "RESIDUAL " << to_string(kind) << ' ' << format_residual(r) << ' '
      << (r <= tol ? "PASS" : "FAIL") << '\n';
  return r <= tol ? kExitOk : kExitCheckFailed;
}

} // namespace

LatticeShape parse_shape(std::string_view text) {
  const auto parts = split(text, 'x');
  if (parts.size() != kDimensions)
    throw UsageError("shape must look like N0xN1xN2xN3, got '" + std::string(text) + "'");
  std::array<int, kDimensions> extents{};
  for (std::size_t mu = 0; mu < kDimensions; ++mu) {
    extents[mu] = parse_int(parts[mu], "extent");
    if (extents[mu] < 2)
      throw UsageError("every lattice extent must be at least 2");
  }
  return LatticeShape(extents);
}

Momentum parse_momentum(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != kDimensions)
    throw UsageError("momentum must look like n0,n1,n2,n3, got '" + std::string(text) + "'");
  Momentum n;
  for (std::size_t mu = 0; mu < kDimensions; ++mu)
    n.n[mu] = parse_int(parts[mu], "momentum component");
  return n;
}

Complex parse_mass(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1)
    return {parse_double(parts[0], "mass"), 0.0};
  if (parts.size() == 2)
    return {parse_double(parts[0], "mass"), parse_double(parts[1], "mass")};
  throw UsageError("mass must be RE or RE,IM");
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Discrete Dirac-Kahler calculus on a periodic 4-D lattice", "dkahler"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto *verify_cmd = app.add_subcommand("verify", "Run the identity and solution checks");
  verify_cmd->add_option("--shape", verify.shape, "Lattice extents N0xN1xN2xN3");
  verify_cmd->add_option("--seed", verify.seed, "Seed for random forms");
  verify_cmd->add_option("--tol", verify.tol, "Pass threshold on max residuals");
  verify_cmd->add_option("--suite", verify.suite,
                         "all|clifford|calculus|projectors|decompositions|solver");
  verify_cmd->add_option("--samples", verify.samples, "Random forms for the dual-route checks");

  SolveArgs solve;
  auto *solve_cmd = app.add_subcommand("solve", "Plane-wave eigenmodes at one momentum");
  solve_cmd->add_option("--equation", solve.equation, "dk|hestenes|joyce|volume");
  solve_cmd->add_option("--shape", solve.shape, "Lattice extents N0xN1xN2xN3")->required();
  solve_cmd->add_option("--momentum", solve.momentum, "n0,n1,n2,n3");
  solve_cmd->add_option("--mass-filter", solve.mass_filter, "all|real");
  solve_cmd->add_option("--out", solve.out, "Write PATH.modeK.json per mode");
  solve_cmd->add_option("--tol", solve.tol, "Imaginary-part tolerance of the real filter");

  std::string op, in, out_path;
  auto *apply_cmd = app.add_subcommand("apply", "Apply dc, deltac or dirac to a form file");
  apply_cmd->add_option("--op", op, "dc|deltac|dirac")->required();
  apply_cmd->add_option("--in", in, "Input form file")->required();
  apply_cmd->add_option("--out", out_path, "Output form file")->required();

  std::string projector_tag, dec_in, dec_out;
  auto *dec_cmd = app.add_subcommand("decompose", "Right-multiply a form by a projector");
  dec_cmd->add_option("--projector", projector_tag, "p0+|p0-|p12+|p12-|pe+|pe-")->required();
  dec_cmd->add_option("--in", dec_in, "Input form file")->required();
  dec_cmd->add_option("--out", dec_out, "Output form file")->required();

  std::string equation = "dk", mass = "0", res_in;
  double res_tol = 1e-10;
  auto *res_cmd = app.add_subcommand("residual", "Sup-norm residual of an equation");
  res_cmd->add_option("--equation", equation, "dk|hestenes|joyce|volume");
  res_cmd->add_option("--mass", mass, "RE or RE,IM");
  res_cmd->add_option("--in", res_in, "Input form file")->required();
  res_cmd->add_option("--tol", res_tol, "Pass threshold");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*verify_cmd)
      return cmd_verify(verify, out);
    if (*solve_cmd)
      return cmd_solve(solve, out, err);
    if (*apply_cmd)
      return cmd_apply(op, in, out_path);
    if (*dec_cmd)
      return cmd_decompose(projector_tag, dec_in, dec_out);
    if (*res_cmd)
      return cmd_residual(equation, mass, res_in, res_tol, out);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError &e) {
    err << "malformed form file: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericError &e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

} // namespace dkahler
