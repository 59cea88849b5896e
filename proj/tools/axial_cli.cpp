// Command-line front end for the axial library.
// Exit codes: 0 verified, 1 property failed, 2 usage or domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "axial/axial.hpp"
#include "axial/io.hpp"

namespace {

using namespace axial;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Globals {
  std::size_t trunc = 64;
  double tol = 1e-9;
  std::uint64_t seed = 1;
};

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << std::hash<std::string>{}(ss.str());
  return hex.str();
}

int report(const Verdict& v) {
  print(to_json(v));
  return v.passed() ? kPass : kFail;
}

Quaternion parse_point(const std::string& text) { return quaternion_from_json(json::parse(text)); }

// ---------------------------------------------------------------------------

int cmd_appell(unsigned m, const std::string& point) {
  const Quaternion x = parse_point(point);
  const Rational c = c_coeff(m);
  json t = json::array();
  for (unsigned j = 0; j <= m; ++j) {
    const Rational r = t_coeff(m, j);
    t.push_back(std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()));
  }
  print({{"m", m},
         {"point", to_json(x)},
         {"T", t},
         {"c", std::to_string(c.numerator()) + "/" + std::to_string(c.denominator())},
         {"c_value", to_double(c)},
         {"Q", to_json(eval_Q(m, x))},
         {"P", to_json(eval_P(m, x))}});
  return kPass;
}

int cmd_fueter_check(const Globals& g, unsigned max_m, std::size_t count, double radius, double h) {
  std::mt19937_64 rng(g.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double d_res = 0.0, appell_res = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    Quaternion x(u(rng), u(rng), u(rng), u(rng));
    x = x * (radius * std::abs(u(rng)) / std::max(x.abs(), 1e-300));
    for (unsigned m = 0; m <= max_m; ++m) {
      const PointFunction p = [m](const Quaternion& y) { return QuatMatrix::scalar(eval_P(m, y)); };
      d_res = std::max(d_res, apply_D_fd(p, x, h).max_abs());
      if (m >= 1) {
        const PointFunction q = [m](const Quaternion& y) { return QuatMatrix::scalar(eval_Q(m, y)); };
        const Quaternion lhs = apply_Dbar_fd(q, x, h)(0, 0) * 0.5;
        appell_res = std::max(appell_res, (lhs - eval_Q(m - 1, x) * static_cast<double>(m)).abs());
      }
    }
  }
  Verdict v;
  v.add("D_P_m", d_res, 1e-7);
  v.add("appell_property", appell_res, 1e-7);
  v.metadata = {{"max_degree", max_m}, {"points", count}, {"radius", radius}, {"h", h}, {"seed", g.seed}};
  return report(v);
}

int cmd_schur_test(const Globals& g, const std::string& file) {
  const AxialSeries f = series_from_json(read_json_file(file));
  const SchurVerdict s = verify_schur(f, g.trunc, g.tol);
  Verdict v;
  v.add("section_norm", s.contraction.norm, 1.0 + g.tol);
  json trace = json::array();
  for (const auto& [n, x] : s.contraction.trace) trace.push_back({{"N", n}, {"norm", x}});
  v.metadata = {{"input_digest", digest(file)}, {"N", s.contraction.n}, {"N_max", g.trunc}, {"tol", g.tol}, {"trace", trace}};
  return report(v);
}

int cmd_schur_algo(const Globals& g, const std::string& file, std::size_t steps) {
  const AxialSeries f = series_from_json(read_json_file(file));
  SchurAlgorithmOptions opt;
  opt.contraction_tol = g.tol;
  const auto r = schur_algorithm_matrix(RealPowerSeries::from_axial(f), steps, f.tail().is_finite(), opt);
  json params = json::array();
  for (const auto& p : r.parameters) {
    if (p.rows() == 1 && p.cols() == 1) params.push_back(to_json(p(0, 0)));
    else params.push_back(to_json(p));
  }
  print({{"parameters", params}, {"stop", to_string(r.stop)}, {"input_digest", digest(file)}});
  return kPass;
}

int cmd_gram(const Globals& g, const std::string& kernel, const std::string& points_file, const std::string& series_file,
             const std::string& format, const std::string& out_file) {
  const json pts = read_json_file(points_file);
  const bool real_axis = pts.contains("real_axis");
  GramResult gram;
  if (real_axis) {
    std::vector<double> t;
    for (const auto& x : pts.at("real_axis")) t.push_back(3.0 * x.get<double>());
    std::function<KernelValue(double, double)> k;
    AxialSeries s;
    if (kernel == "K_S" || kernel == "L_Phi") {
      if (series_file.empty()) raise(ErrorCode::invalid_argument, kernel + " needs --series");
      const json sj = read_json_file(series_file);
      s = sj.contains("V") ? herglotz_coefficients(generator_from_json(sj), g.trunc) : series_from_json(sj);
    }
    if (kernel == "hardy") k = [](double a, double b) { return hardy_kernel_symbol(a, b); };
    else if (kernel == "K_S") k = [&](double a, double b) { return kernel_K_S_symbol(s, a, b); };
    else if (kernel == "L_Phi") k = [&](double a, double b) { return kernel_L_Phi_symbol(s, a, b); };
    else if (kernel == "K_P") k = [&](double a, double b) { return kernel_K_P_real(a, b, std::max<std::size_t>(g.trunc, 80)); };
    else raise(ErrorCode::invalid_argument, "unknown kernel " + kernel);
    gram = gram_matrix_symbol(k, t);
  } else {
    std::vector<Quaternion> x;
    for (const auto& p : pts.at("points")) x.push_back(quaternion_from_json(p));
    Kernel k;
    AxialSeries s;
    if (kernel == "K_S" || kernel == "L_Phi") {
      if (series_file.empty()) raise(ErrorCode::invalid_argument, kernel + " needs --series");
      const json sj = read_json_file(series_file);
      s = sj.contains("V") ? herglotz_coefficients(generator_from_json(sj), g.trunc) : series_from_json(sj);
    }
    if (kernel == "hardy") k = [&](const Quaternion& a, const Quaternion& b) { return hardy_kernel(a, b, g.trunc); };
    else if (kernel == "K_S") k = [&](const Quaternion& a, const Quaternion& b) { return kernel_K_S(s, a, b, g.trunc); };
    else if (kernel == "L_Phi") k = [&](const Quaternion& a, const Quaternion& b) { return kernel_L_Phi(s, a, b, g.trunc); };
    else if (kernel == "K_P") k = [&](const Quaternion& a, const Quaternion& b) { return kernel_K_P(a, b); };
    else raise(ErrorCode::invalid_argument, "unknown kernel " + kernel);
    gram = gram_matrix(k, x);
  }
  const PsdReport psd = psd_report(gram.gram, g.tol);
  const bool ok = psd.min_eigenvalue >= -g.tol * std::max(1.0, psd.max_abs_eigenvalue) - gram.bound;

  std::ostringstream body;
  if (format == "csv") {
    body << std::setprecision(17);
    for (std::size_t i = 0; i < gram.gram.rows(); ++i) {
      for (std::size_t j = 0; j < gram.gram.cols(); ++j) {
        const Quaternion& q = gram.gram(i, j);
        if (j) body << ',';
        if (q.vec_abs() == 0.0) body << q.x0;
        else body << q.x0 << ' ' << q.x1 << ' ' << q.x2 << ' ' << q.x3;
      }
      body << '\n';
    }
  } else {
    body << to_json(gram.gram).dump(2) << '\n';
  }
  if (out_file.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_file);
    out << body.str();
  }
  const json summary = {{"kernel", kernel},
                        {"real_axis", real_axis},
                        {"min_eigenvalue", psd.min_eigenvalue},
                        {"truncation_bound", gram.bound},
                        {"psd", ok}};
  (out_file.empty() ? std::cerr : std::cout) << summary.dump() << '\n';
  return ok ? kPass : kFail;
}

int cmd_blaschke(const Globals& g, const std::string& file) {
  const Colligation c = colligation_from_json(read_json_file(file));
  BlaschkeReport r;
  try {
    r = blaschke_isometry_check(c, g.trunc, 1e-8);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::non_decaying_state) throw;
    std::cerr << "warning: " << e.what() << '\n';
    print({{"passed", false}, {"error", e.what()}});
    return kFail;
  }
  Verdict v;
  for (const auto& [name, x] : r.unitary.residuals) v.add(name, x, 1e-10);
  v.add("gram", r.gram_residual, r.tail_bound + 1e-8);
  v.add("lag", r.lag_residual, r.tail_bound + 1e-8);
  v.metadata = {{"input_digest", digest(file)}, {"N_terms", g.trunc}, {"tail_bound", r.tail_bound}, {"exact_tail", r.exact_tail}};
  return report(v);
}

int cmd_herglotz_test(const Globals& g, const std::string& file, std::size_t sections) {
  const json j = read_json_file(file);
  const AxialSeries phi = j.contains("V") ? herglotz_coefficients(generator_from_json(j), g.trunc) : series_from_json(j);
  const PsdReport p = verify_herglotz(phi, sections, g.tol);
  Verdict v;
  v.add("negative_eigenvalue", -p.min_eigenvalue, g.tol * std::max(1.0, p.max_abs_eigenvalue));
  v.metadata = {{"input_digest", digest(file)}, {"sections", sections}, {"min_eigenvalue", p.min_eigenvalue}};
  return report(v);
}

int cmd_halfspace_eval(const Globals& g, std::size_t n, const std::string& point) {
  const json p = json::parse(point);
  json out = {{"n", n}};
  const Quaternion x = quaternion_from_json(p);
  if (p.is_number()) out["real_axis"] = eval_W_real(n, x.x0);
  const Evaluation e = eval_W(n, x, g.trunc);
  out["pointwise"] = to_json(e.value(0, 0));
  out["tail_bound"] = e.tail_bound;
  print(out);
  return kPass;
}

int cmd_halfspace_lyapunov(double x0, double y0, std::size_t terms, double tol) {
  Verdict v;
  v.add("lyapunov", lyapunov_residual(x0, y0, terms), tol);
  v.metadata = {{"x0", x0}, {"y0", y0}, {"N", terms}, {"K_P", kernel_K_P_real(3 * x0, 3 * y0, terms).value(0, 0).x0}};
  return report(v);
}

int cmd_halfspace_cayley(const Globals& g, const std::string& file, const std::vector<double>& x0s) {
  const Colligation c = colligation_from_json(read_json_file(file));
  json values = json::array();
  for (double x : x0s) {
    values.push_back({{"x0", x}, {"S", to_json(halfspace_schur_value(c, x))}, {"Phi", to_json(caratheodory_value(c, x))}});
  }
  const GramResult gram = caratheodory_gram(c, x0s);
  const PsdReport p = psd_report(gram.gram, g.tol);
  Verdict v;
  v.add("negative_eigenvalue", -p.min_eigenvalue, g.tol * std::max(1.0, p.max_abs_eigenvalue));
  v.metadata = {{"input_digest", digest(file)}, {"values", values}, {"K_Phi", to_json(gram.gram)}};
  return report(v);
}

RationalRealForm load_rational(const std::string& file) {
  const json j = read_json_file(file);
  if (j.contains("A")) return RationalRealForm::from_colligation(colligation_from_json(j));
  return rational_from_json(j);
}

int cmd_realize_eval(const std::string& file, const std::vector<double>& ts) {
  const RationalRealForm m = load_rational(file);
  json values = json::array();
  for (double t : ts) values.push_back({{"t", t}, {"value", to_json(rational_value(m, t))}});
  print({{"values", values}});
  return kPass;
}

int cmd_realize_invert(const std::string& file) {
  print(to_json(rational_inverse(load_rational(file))));
  return kPass;
}

int cmd_realize_multiply(const std::string& a, const std::string& b) {
  print(to_json(rational_product(load_rational(a), load_rational(b))));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur analysis for axially hyperholomorphic functions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--trunc", g.trunc, "truncation depth N")->capture_default_str();
  app.add_option("--tol", g.tol, "tolerance")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();

  std::function<int()> run;

  unsigned m = 0;
  std::string point = "[0,0,0,0]";
  auto* appell = app.add_subcommand("appell", "evaluate Q_m, P_m and c_m");
  appell->add_option("--m", m, "degree")->required();
  appell->add_option("--point", point, "quaternion as JSON [x0,x1,x2,x3]");
  appell->callback([&] { run = [&] { return cmd_appell(m, point); }; });

  unsigned max_m = 6;
  std::size_t count = 10;
  double radius = 0.5, h = 1e-5;
  auto* fueter = app.add_subcommand("fueter-check", "finite-difference Cauchy-Fueter residuals of P_m");
  fueter->add_option("--max-degree", max_m)->capture_default_str();
  fueter->add_option("--points", count)->capture_default_str();
  fueter->add_option("--radius", radius)->capture_default_str();
  fueter->add_option("--step", h, "finite-difference step")->capture_default_str();
  fueter->callback([&] { run = [&] { return cmd_fueter_check(g, max_m, count, radius, h); }; });

  std::string file, file2;
  auto* schur_test = app.add_subcommand("schur-test", "Toeplitz contraction test");
  schur_test->add_option("series", file)->required();
  schur_test->callback([&] { run = [&] { return cmd_schur_test(g, file); }; });

  std::size_t steps = 8;
  auto* schur_algo = app.add_subcommand("schur-algo", "Schur algorithm parameters");
  schur_algo->add_option("series", file)->required();
  schur_algo->add_option("--steps", steps)->capture_default_str();
  schur_algo->callback([&] { run = [&] { return cmd_schur_algo(g, file, steps); }; });

  std::string kernel, series, format = "json", out;
  auto* gram = app.add_subcommand("gram", "Gram matrix and PSD verdict");
  gram->add_option("--kernel", kernel)->required()->check(CLI::IsMember({"hardy", "K_S", "L_Phi", "K_P"}));
  gram->add_option("--points", file)->required();
  gram->add_option("--series", series, "multiplier series or Herglotz generator");
  gram->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  gram->add_option("--out", out);
  gram->callback([&] { run = [&] { return cmd_gram(g, kernel, file, series, format, out); }; });

  auto* blaschke = app.add_subcommand("blaschke", "unitarity and isometry residuals");
  blaschke->add_option("colligation", file)->required();
  blaschke->callback([&] { run = [&] { return cmd_blaschke(g, file); }; });

  std::size_t sections = 32;
  auto* herglotz = app.add_subcommand("herglotz-test", "Hermitian Toeplitz positivity");
  herglotz->add_option("input", file, "generator {V,C,a} or coefficient series")->required();
  herglotz->add_option("--sections", sections)->capture_default_str();
  herglotz->callback([&] { run = [&] { return cmd_herglotz_test(g, file, sections); }; });

  auto* half = app.add_subcommand("halfspace", "half-space tools");
  half->require_subcommand(1);
  half->fallthrough();
  std::size_t power = 1, terms = 80;
  std::string hpoint;
  auto* heval = half->add_subcommand("eval", "W_n at a point (bare number = real x0)");
  heval->add_option("--n", power)->capture_default_str();
  heval->add_option("--point", hpoint)->required();
  heval->callback([&] { run = [&] { return cmd_halfspace_eval(g, power, hpoint); }; });
  double x0 = 0.0, y0 = 0.0;
  auto* lyap = half->add_subcommand("lyapunov", "|6(x0+y0) K_P - 1|");
  lyap->add_option("--x0", x0)->required();
  lyap->add_option("--y0", y0)->required();
  lyap->add_option("--terms", terms)->capture_default_str();
  lyap->callback([&] { run = [&] { return cmd_halfspace_lyapunov(x0, y0, terms, 1e-8); }; });
  std::vector<double> x0s;
  auto* cayley = half->add_subcommand("cayley", "Caratheodory values and K_Phi positivity");
  cayley->add_option("colligation", file)->required();
  cayley->add_option("--x0", x0s, "positive real points")->required();
  cayley->callback([&] { run = [&] { return cmd_halfspace_cayley(g, file, x0s); }; });

  auto* realize = app.add_subcommand("realize", "rational realizations");
  realize->require_subcommand(1);
  realize->fallthrough();
  std::vector<double> ts;
  auto* reval = realize->add_subcommand("eval", "M(t)");
  reval->add_option("realization", file)->required();
  reval->add_option("--t", ts)->required();
  reval->callback([&] { run = [&] { return cmd_realize_eval(file, ts); }; });
  auto* rinv = realize->add_subcommand("invert", "realization of M^{-1}");
  rinv->add_option("realization", file)->required();
  rinv->callback([&] { run = [&] { return cmd_realize_invert(file); }; });
  auto* rmul = realize->add_subcommand("multiply", "realization of M1 M2");
  rmul->add_option("left", file)->required();
  rmul->add_option("right", file2)->required();
  rmul->callback([&] { run = [&] { return cmd_realize_multiply(file, file2); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return run ? run() : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: JSON: " << e.what() << '\n';
    return kUsage;
  }
}
