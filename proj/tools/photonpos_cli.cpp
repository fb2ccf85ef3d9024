// Command-line front end: invariant verification, Berry phases, frames,
// phase-space evaluation and eigenfunction density grids.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <random>

#include "photonpos/algebra.hpp"
#include "photonpos/berry.hpp"
#include "photonpos/eigenstates.hpp"
#include "photonpos/inner_product.hpp"
#include "photonpos/phasespace.hpp"
#include "photonpos/position_operator.hpp"

using json = nlohmann::ordered_json;
using namespace photonpos;

namespace {

struct RunConfig {
  std::string gauge_name = "stereo-north";
  double s = 0.5;
  std::uint64_t seed = 42;
  double tol_scale = 1.0;
  std::string out_path;
  std::string format = "json";
  int threads = 1;
  std::string fault = "none";
  double hbar = 1.0;
  double c = 1.0;

  Gauge gauge() const {
    if (gauge_name == "stereo-north") return Gauge::stereo_north();
    if (gauge_name == "spherical") return Gauge::spherical();
    if (gauge_name == "stereo-south") return Gauge::stereo_south();
    throw CLI::ValidationError("--gauge", "unknown gauge " + gauge_name);
  }
  Constants constants() const { return Constants(hbar, c); }
};

double json_safe(double v) { return v; }

json num_or_string(double v) {
  if (std::isfinite(v)) return json(v);
  return json(std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf"));
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    if (!text.empty() && text.back() != '\n') std::fputc('\n', stdout);
  } else {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw CLI::ValidationError("--out", "cannot open " + cfg.out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
  }
}

Vec3R parse_vec3(const std::string& s, const char* what) {
  Vec3R v;
  if (std::sscanf(s.c_str(), "%lf,%lf,%lf", &v[0], &v[1], &v[2]) != 3)
    throw CLI::ValidationError(what, "expected three comma-separated numbers");
  return v;
}

// ---------------------------------------------------------------------------
// verify

struct InvariantReport {
  std::string name;
  int points = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

Vec3R sample_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double kn = 0.3 + 2.2 * u(rng);
  const double theta = 0.15 + (M_PI - 0.3) * u(rng);
  const double phi = 2.0 * M_PI * u(rng);
  return Vec3R(kn * std::sin(theta) * std::cos(phi), kn * std::sin(theta) * std::sin(phi),
               kn * std::cos(theta));
}

WaveSection sample_bump(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Vec3R k0 = sample_point(rng);
  const Vec3C v(Complex(g(rng), g(rng)), Complex(g(rng), g(rng)), Complex(g(rng), g(rng)));
  return gaussian_bump(k0, v, 0.4 + 0.4 * u(rng));
}

/// Bump whose 6-sigma support stays clear of the k3-axis and the origin;
/// the integral identities require sections supported inside the gauge
/// domain.
WaveSection sample_bump_cut_safe(std::mt19937_64& rng, const Vec3R* center = nullptr) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vec3R k0;
  if (center) {
    k0 = *center;
  } else {
    const double kn = 1.2 + 0.8 * u(rng);
    const double theta = M_PI / 3 + (M_PI / 3) * u(rng);
    const double phi = 2.0 * M_PI * u(rng);
    k0 = Vec3R(kn * std::sin(theta) * std::cos(phi), kn * std::sin(theta) * std::sin(phi),
               kn * std::cos(theta));
  }
  const double clearance = std::min(std::hypot(k0[0], k0[1]), k0.norm());
  const double w = (0.6 + 0.4 * u(rng)) * 0.8 * clearance / (6.0 / std::sqrt(2.0));
  const Vec3C v(Complex(g(rng), g(rng)), Complex(g(rng), g(rng)), Complex(g(rng), g(rng)));
  return gaussian_bump(k0, v, w);
}

std::vector<InvariantReport> run_invariants(const RunConfig& cfg) {
  std::vector<InvariantReport> reports;
  const Gauge g = cfg.gauge();
  const ConnectionParams params{cfg.s, g};
  auto add = [&](const std::string& name, int pts, double res, double tol) {
    reports.push_back({name, pts, res, tol * cfg.tol_scale, res <= tol * cfg.tol_scale});
  };

  {
    std::mt19937_64 rng(cfg.seed);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const Frame f = frame_for(g, sample_point(rng));
      worst = std::max(worst, (f.E.adjoint() * f.E - Mat3C::Identity()).norm());
      worst = std::max(worst, (f.E.col(2) - (f.k / f.k.norm()).cast<Complex>()).norm());
    }
    add("frame-orthonormality", 100, worst, 1e-12);
  }
  {
    std::mt19937_64 rng(cfg.seed + 1);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const Vec3R k = sample_point(rng);
      worst = std::max(worst, (from_stereo(to_stereo(k)) - k).norm() / k.norm());
    }
    add("stereo-roundtrip", 100, worst, 1e-12);
  }
  {
    std::mt19937_64 rng(cfg.seed + 2);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const Vec3R k = sample_point(rng);
      const auto a = gamma_closed_form(k, params);
      const auto b = gamma_from_frame(k, params);
      for (int l = 0; l < 3; ++l)
        worst = std::max(worst, (a[l] - b[l]).cwiseAbs().maxCoeff());
    }
    add("connection-closed-vs-fd", 100, worst, 1e-6);
  }
  {
    std::mt19937_64 rng(cfg.seed + 3);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t)
      worst = std::max(worst, curvature_residual(sample_point(rng), params));
    add("curvature-flat", 100, worst, 1e-6);
  }
  {
    const TorsionTensor q = torsion(Vec3R(1, 0, 0), 0.5, Gauge::stereo_north());
    add("torsion-witness-stereo-north", 1, std::abs(q(1, 1, 0) - 0.5), 1e-9);
    std::mt19937_64 rng(cfg.seed + 4);
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
      const TorsionTensor qt = torsion(sample_point(rng), cfg.s, Gauge::stereo_north());
      for (int j = 0; j < 3; ++j)
        for (int m = 0; m < 3; ++m)
          for (int l = 0; l < 3; ++l)
            worst = std::max(worst, std::abs(qt(j, m, l) + qt(j, l, m)));
    }
    add("torsion-antisymmetry", 10, worst, 1e-15);
  }
  {
    std::mt19937_64 rng(cfg.seed + 5);
    double worst_trans = 0.0, worst_comm = 0.0, worst_compact = 0.0;
    for (int t = 0; t < 50; ++t) {
      const WaveSection psi = sample_bump(rng);
      const Vec3R k = sample_point(rng);
      const int l = static_cast<int>(rng() % 3);
      const int m = (l + 1 + static_cast<int>(rng() % 2)) % 3;
      const Vec3C xl = apply_position(psi, k, l, params);
      worst_trans = std::max(worst_trans, std::abs(k.cast<Complex>().dot(xl)) /
                                              std::max(xl.norm(), kResidualFloor));
      const Vec3C comm = cfg.fault == "pryce" ? pryce_commutator(psi, k, l, m)
                                              : commutator_residual(psi, k, l, m, params);
      worst_comm = std::max(worst_comm, comm.norm());
      worst_compact = std::max(
          worst_compact,
          (xl - apply_position_compact(psi, k, l, params)).norm() / std::max(1.0, xl.norm()));
    }
    add("transversality", 50, worst_trans, 1e-8);
    add(cfg.fault == "pryce" ? "commutator(fault=pryce)" : "commutator", 50, worst_comm,
        1e-5);
    add("compact-vs-direct", 50, worst_compact, 1e-8);
  }
  {
    std::mt19937_64 rng(cfg.seed + 6);
    double worst = 0.0;
    for (int pair = 0; pair < 2; ++pair) {
      const WaveSection phi = sample_bump_cut_safe(rng);
      const Vec3R near = 0.5 * (phi.support->lo + phi.support->hi) +
                         Vec3R(0.03, -0.02, 0.04);
      const WaveSection psi = sample_bump_cut_safe(rng, &near);
      for (int l = 0; l < 3; ++l) {
        const Complex res = antihermiticity_residual(phi, psi, l, params);
        const double scale =
            std::abs(bb_inner(phi, psi).value) + std::abs(weighted_inner(phi, psi, cfg.s).value) +
            kResidualFloor;
        worst = std::max(worst, std::abs(res) / scale);
      }
    }
    add("anti-hermiticity", 6, worst, 1e-6);
  }
  {
    std::mt19937_64 rng(cfg.seed + 7);
    EigenParams ep;
    ep.X = Vec3R(0.4, -0.3, 0.8);
    ep.c1 = Complex(0.6, 0.0);
    ep.c2 = Complex(0.0, 0.8);
    ep.s = cfg.s;
    ep.gauge = g;
    const WaveSection psi = eigenfunction_momentum(ep);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      const Vec3R k = sample_point(rng);
      for (int l = 0; l < 3; ++l)
        worst = std::max(worst,
                         (apply_position(psi, k, l, params) - ep.X[l] * psi.value(k)).norm());
    }
    add("eigen-relation", 20, worst, 1e-8);

    EigenParams e2 = ep;
    e2.s = 0.5;
    EigenParams e3 = e2;
    e3.X = Vec3R(-0.2, 0.5, 0.1);
    double worst_norm = 0.0;
    for (int t = 0; t < 50; ++t) {
      const Vec3R k = sample_point(rng);
      const Complex got = normalization_integrand(e2, e3, k);
      const Complex expect = std::exp(Complex(0, k.dot(e2.X - e3.X))) / std::pow(2 * M_PI, 3);
      worst_norm = std::max(worst_norm, std::abs(got - expect));
    }
    add("normalization-integrand", 50, worst_norm, 1e-14);
  }
  {
    const int which = g.kind() == GaugeKind::StereoNorth    ? 1
                      : g.kind() == GaugeKind::Spherical    ? 2
                                                            : 3;
    double worst_int = 0.0, worst_transport = 0.0;
    for (double th : {M_PI / 4, M_PI / 3, M_PI / 2}) {
      for (int lam : {+1, -1}) {
        const LoopSpec loop = LoopSpec::circle(th, 1.0, g, lam);
        const double gamma = berry_phase_integral(loop);
        worst_int = std::max(worst_int, std::abs(gamma - berry_phase_closed(th, lam, which)));
        const Vec3C psi0 =
            helicity_eigenstate(Vec3R::Zero(), lam, 0.5, g).value(loop.point(0.0));
        worst_transport =
            std::max(worst_transport, std::abs(transport(loop, psi0).phase - gamma));
      }
    }
    add("berry-circle-vs-closed", 6, worst_int, 1e-8);
    add("berry-transport-vs-integral", 6, worst_transport, 1e-6);
  }
  {
    std::mt19937_64 rng(cfg.seed + 8);
    double worst = 0.0;
    for (int t = 0; t < 4; ++t) {
      const Vec3R k = sample_point(rng);
      const WaveSection psi = sample_bump(rng);
      const double h = default_fd_step(k);
      const double h2 = std::sqrt(h) * std::max(1.0, k.norm());
      for (int l = 0; l < 3; ++l)
        for (int m = l + 1; m < 3; ++m) {
          WaveSection dm, dl;
          dm.value = [&psi, m, &g, h](const Vec3R& kk) { return dprime_apply(psi, kk, m, g, h); };
          dl.value = [&psi, l, &g, h](const Vec3R& kk) { return dprime_apply(psi, kk, l, g, h); };
          const Vec3C comm =
              dprime_apply(dm, k, l, g, h2) - dprime_apply(dl, k, m, g, h2);
          const Vec3C closed = dprime_curvature(k, l, m, g) * psi.value(k);
          worst = std::max(worst, (comm - closed).norm() / std::max(1.0, closed.norm()));
        }
    }
    add("dprime-curvature-vs-fd", 4, worst, 1e-6);
  }
  {
    double worst = 0.0;
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) {
        const auto forms = grid_d_operator_forms(k, l);
        for (int f = 1; f < 4; ++f)
          worst = std::max(worst, (forms[f] - forms[0]).cwiseAbs().maxCoeff());
        worst = std::max(worst, (forms[0].adjoint() * forms[0] - GridOperator::Identity())
                                    .cwiseAbs()
                                    .maxCoeff());
      }
    add("grid-algebra", 9, worst, 1e-14);

    std::mt19937_64 rng(cfg.seed + 9);
    double worst_m0 = 0.0;
    for (int t = 0; t < 10; ++t) {
      const Vec3R p = sample_point(rng), x = sample_point(rng);
      for (int n = 0; n < 3; ++n)
        for (int l = 0; l < 3; ++l)
          worst_m0 = std::max(
              worst_m0,
              std::abs(phase_space_position(p, x, GridPoint(0, n), l, g, cfg.constants()) -
                       x[l]));
    }
    add("phasespace-m0-identity", 10, worst_m0, 1e-15);
  }
  return reports;
}

int cmd_verify(const RunConfig& cfg) {
  const auto reports = run_invariants(cfg);
  json j;
  j["schema"] = 1;
  j["command"] = "verify";
  j["gauge"] = cfg.gauge_name;
  j["s"] = cfg.s;
  j["seed"] = cfg.seed;
  j["threads"] = cfg.threads;
  j["fault"] = cfg.fault;
  json arr = json::array();
  bool all_pass = true;
  for (const auto& r : reports) {
    json e;
    e["name"] = r.name;
    e["points"] = r.points;
    e["max_residual"] = num_or_string(r.max_residual);
    e["tolerance"] = r.tolerance;
    e["pass"] = r.pass;
    arr.push_back(e);
    all_pass = all_pass && r.pass;
  }
  j["invariants"] = arr;
  j["pass"] = all_pass;
  emit(cfg, j.dump(2));
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// berry

int cmd_berry(const RunConfig& cfg, const std::string& loop_arg) {
  std::string text = loop_arg;
  if (!loop_arg.empty() && loop_arg.front() == '@') {
    std::ifstream f(loop_arg.substr(1));
    if (!f) throw CLI::ValidationError("--loop", "cannot read " + loop_arg.substr(1));
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  json spec;
  try {
    spec = json::parse(text);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--loop", std::string("invalid JSON: ") + e.what());
  }
  RunConfig local = cfg;
  if (spec.contains("gauge")) local.gauge_name = spec["gauge"].get<std::string>();
  const int lambda = spec.value("lambda", 1);
  const Gauge g = local.gauge();

  LoopSpec loop = LoopSpec::circle(M_PI / 2, 1.0, g, lambda);
  bool is_circle = false;
  double theta = 0.0;
  if (spec.contains("circle")) {
    const auto& c = spec["circle"];
    theta = c.at("theta").get<double>();
    const double radius = c.value("radius", 1.0);
    loop = LoopSpec::circle(theta, radius, g, lambda);
    is_circle = true;
  } else if (spec.contains("polyline")) {
    std::vector<Vec3R> nodes;
    for (const auto& n : spec["polyline"]) {
      if (!n.is_array() || n.size() != 3)
        throw CLI::ValidationError("--loop", "polyline nodes must be [x, y, z]");
      nodes.emplace_back(n[0].get<double>(), n[1].get<double>(), n[2].get<double>());
    }
    loop = LoopSpec::polyline(nodes, g, lambda);
  } else {
    throw CLI::ValidationError("--loop", "expected a 'circle' or 'polyline' key");
  }

  const double gamma = berry_phase_integral(loop);
  json j;
  j["schema"] = 1;
  j["command"] = "berry";
  j["gauge"] = local.gauge_name;
  j["lambda"] = lambda;
  j["seed"] = cfg.seed;
  j["gamma"] = num_or_string(gamma);
  j["phase_factor_re"] = num_or_string(std::cos(gamma));
  j["phase_factor_im"] = num_or_string(std::sin(gamma));
  if (is_circle) {
    const int which = g.kind() == GaugeKind::StereoNorth    ? 1
                      : g.kind() == GaugeKind::Spherical    ? 2
                                                            : 3;
    const double closed = berry_phase_closed(theta, lambda, which);
    j["closed_form"] = num_or_string(closed);
    j["abs_error"] = num_or_string(std::abs(gamma - closed));
  } else {
    j["closed_form"] = nullptr;
    j["abs_error"] = nullptr;
  }
  emit(cfg, j.dump(2));
  return 0;
}

// ---------------------------------------------------------------------------
// frame / phasespace

int cmd_frame(const RunConfig& cfg, const std::string& karg) {
  const Vec3R k = parse_vec3(karg, "--k");
  const Frame f = frame_for(cfg.gauge(), k);
  auto col = [&](int i) {
    json a = json::array();
    for (int j = 0; j < 3; ++j)
      a.push_back(json::array({f.E(j, i).real(), f.E(j, i).imag()}));
    return a;
  };
  json j;
  j["schema"] = 1;
  j["command"] = "frame";
  j["gauge"] = cfg.gauge_name;
  j["seed"] = cfg.seed;
  j["k"] = {k[0], k[1], k[2]};
  j["E1"] = col(0);
  j["E2"] = col(1);
  j["E3"] = col(2);
  j["orthonormality_residual"] =
      num_or_string((f.E.adjoint() * f.E - Mat3C::Identity()).norm());
  emit(cfg, j.dump(2));
  return 0;
}

int cmd_phasespace(const RunConfig& cfg, const std::string& parg, const std::string& xarg,
                   int m, int n, int l) {
  const Vec3R p = parse_vec3(parg, "--p");
  const Vec3R x = parse_vec3(xarg, "--x");
  const double xl = phase_space_position(p, x, GridPoint(m, n), l, cfg.gauge(),
                                         cfg.constants());
  json j;
  j["schema"] = 1;
  j["command"] = "phasespace";
  j["gauge"] = cfg.gauge_name;
  j["seed"] = cfg.seed;
  j["p"] = {p[0], p[1], p[2]};
  j["x"] = {x[0], x[1], x[2]};
  j["m"] = m;
  j["n"] = n;
  j["l"] = l;
  j["X_l"] = num_or_string(xl);
  j["x_l"] = x[l];
  j["hbar_term"] = num_or_string(xl - x[l]);
  emit(cfg, j.dump(2));
  return 0;
}

// ---------------------------------------------------------------------------
// eigen-density

int cmd_eigen_density(const RunConfig& cfg, double X, double c1re, double c1im,
                      double c2re, double c2im, int theta_samples, int phi_samples,
                      double margin) {
  if (theta_samples < 0 || phi_samples < 0)
    throw CLI::ValidationError("--theta-samples", "sample counts must be nonnegative");
  const Complex c1(c1re, c1im), c2(c2re, c2im);
  std::string csv = "theta1,phi1,density\n";
  int skipped = 0;
  std::vector<std::pair<double, double>> cells;
  for (int i = 0; i < theta_samples; ++i) {
    const double th =
        margin + (M_PI - 2.0 * margin) * (theta_samples == 1 ? 0.5 : double(i) / (theta_samples - 1));
    for (int jj = 0; jj < phi_samples; ++jj) {
      const double ph = 2.0 * M_PI * jj / phi_samples;
      cells.emplace_back(th, ph);
    }
  }
  std::vector<std::string> rows(cells.size());
  const int nthreads = std::max(1, cfg.threads);
  auto worker = [&](size_t begin, size_t end) {
    char buf[96];
    for (size_t i = begin; i < end; ++i) {
      const auto [th, ph] = cells[i];
      if (std::abs(std::cos(th)) < 1e-12 || std::abs(th - M_PI / 2) < margin) {
        rows[i].clear();
        continue;
      }
      const double d = energy_density({X, th, ph}, c1, c2, cfg.constants());
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", th, ph, d);
      rows[i] = buf;
    }
  };
  if (nthreads == 1 || cells.size() < 64) {
    worker(0, cells.size());
  } else {
    std::vector<std::future<void>> futs;
    const size_t chunk = (cells.size() + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      const size_t b = std::min(cells.size(), t * chunk);
      const size_t e = std::min(cells.size(), (t + 1) * chunk);
      futs.push_back(std::async(std::launch::async, worker, b, e));
    }
    for (auto& f : futs) f.get();
  }
  for (const auto& r : rows) {
    if (r.empty() && !cells.empty()) ++skipped;
    csv += r;
  }
  if (skipped > 0)
    std::fprintf(stderr, "eigen-density: skipped %d cells inside the theta1 margin\n",
                 skipped);
  emit(cfg, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photon position operator numerics"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--gauge", cfg.gauge_name, "stereo-north | spherical | stereo-south");
  app.add_option("--s", cfg.s, "scalar-product weight exponent");
  app.add_option("--seed", cfg.seed, "RNG seed for sampled invariants");
  app.add_option("--tol", cfg.tol_scale, "tolerance scale factor for verify");
  app.add_option("--out", cfg.out_path, "output path (default stdout)");
  app.add_option("--format", cfg.format, "json | csv (commands pick their native one)");
  app.add_option("--threads", cfg.threads, "worker threads for grid commands");
  app.add_option("--fault", cfg.fault, "fault injection: none | pryce");
  app.add_option("--hbar", cfg.hbar, "Planck constant (default 1)");
  app.add_option("--c", cfg.c, "speed of light (default 1)");

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  std::string loop_arg;
  auto* berry = app.add_subcommand("berry", "Berry phase for a loop spec");
  berry->add_option("--loop", loop_arg, "loop JSON or @file")->required();
  std::string karg;
  auto* frame = app.add_subcommand("frame", "triad at a momentum point");
  frame->add_option("--k", karg, "momentum x,y,z")->required();
  std::string parg, xarg;
  int gm = 0, gn = 0, gl = 0;
  auto* phasespace = app.add_subcommand("phasespace", "phase-space position image");
  phasespace->add_option("--p", parg, "momentum x,y,z")->required();
  phasespace->add_option("--x", xarg, "position x,y,z")->required();
  phasespace->add_option("--m", gm, "grid index m in {0,1,2}")->required();
  phasespace->add_option("--n", gn, "grid index n in {0,1,2}")->required();
  phasespace->add_option("--l", gl, "component l in {0,1,2}")->required();
  double dx = 1.0, c1re = 1.0, c1im = 0.0, c2re = 0.0, c2im = 0.0, margin = 0.05;
  int theta_samples = 0, phi_samples = 0;
  auto* dens = app.add_subcommand("eigen-density", "closed-form density grid CSV");
  dens->add_option("--X", dx, "distance |x - X|");
  dens->add_option("--c1-re", c1re);
  dens->add_option("--c1-im", c1im);
  dens->add_option("--c2-re", c2re);
  dens->add_option("--c2-im", c2im);
  dens->add_option("--theta-samples", theta_samples);
  dens->add_option("--phi-samples", phi_samples);
  dens->add_option("--margin", margin, "excluded margin around theta1 = pi/2");

  try {
    app.parse(argc, argv);
    if (cfg.fault != "none" && cfg.fault != "pryce")
      throw CLI::ValidationError("--fault", "unknown fault mode " + cfg.fault);
    cfg.constants();  // validate positivity early
    if (verify->parsed()) return cmd_verify(cfg);
    if (berry->parsed()) return cmd_berry(cfg, loop_arg);
    if (frame->parsed()) return cmd_frame(cfg, karg);
    if (phasespace->parsed()) return cmd_phasespace(cfg, parg, xarg, gm, gn, gl);
    if (dens->parsed())
      return cmd_eigen_density(cfg, dx, c1re, c1im, c2re, c2im, theta_samples,
                               phi_samples, margin);
    return 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
