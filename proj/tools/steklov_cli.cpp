// Copyright 2026 The Steklov Cuboid Authors
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

// steklov: command-line front end to the Steklov cuboid library.
//
//   steklov spectrum        --dims 1,1 --sigma-max 5 [--method exact|quasi] [--format csv|json] [-o FILE]
//   steklov weyl            --dims 1,1,1 --sigma-min 50 --sigma-max 300 --step 0.5 [-o FILE]
//   steklov constants       --dim 3 [--nodes 32]
//   steklov sigma1          --dims 0.5,2
//   steklov invert-rectangle --perimeter 2 --sigma1 0.68823
//   steklov isoperimetric   --dims 0.5,2 --constraint volume
//   steklov isoperimetric   --samples 100 --seed 7 --dim 3 --constraint area
//   steklov concentration   --dims 1,1,1 --trig 0,1 --u 0:1,-1:1 --eps 0.1 --k-max 60
//
// Exit codes: 0 success, 1 argument error, 2 numerical failure, 3 I/O failure.

#include <cerrno>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "steklov/steklov.h"

namespace {

using nlohmann::json;

enum ExitCode { kOk = 0, kArgument = 1, kNumerical = 2, kIo = 3, kInternal = 4 };

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(steklov_status s) {
  switch (s) {
    case STEKLOV_OK: return kOk;
    case STEKLOV_ERR_ARGUMENT: return kArgument;
    case STEKLOV_ERR_NUMERICAL: return kNumerical;
    case STEKLOV_ERR_IO: return kIo;
    case STEKLOV_ERR_INTERNAL: return kInternal;
  }
  return kInternal;
}

void check(steklov_status s, const char* what) {
  if (s != STEKLOV_OK) throw Failure{exit_code_for(s), std::string(what) + ": " + steklov_last_error()};
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& field, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (text.empty() || end != begin + text.size() || errno == ERANGE)
    throw Failure{kArgument, "invalid number '" + text + "' in " + field};
  return v;
}

int parse_int(const std::string& field, const std::string& text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw Failure{kArgument, "invalid integer '" + text + "' in " + field};
  return v;
}

std::vector<double> parse_dims(const std::string& text) {
  std::vector<double> dims;
  for (const auto& tok : split(text, ',')) {
    const double v = parse_double("--dims", tok);
    if (!(v > 0.0) || !std::isfinite(v)) throw Failure{kArgument, "--dims: half lengths must be positive, got '" + tok + "'"};
    dims.push_back(v);
  }
  if (dims.size() < 2) throw Failure{kArgument, "--dims: need at least 2 half lengths"};
  return dims;
}

struct CuboidDeleter {
  void operator()(steklov_cuboid* c) const { steklov_cuboid_destroy(c); }
};
using CuboidPtr = std::unique_ptr<steklov_cuboid, CuboidDeleter>;

CuboidPtr make_cuboid(const std::vector<double>& dims) {
  steklov_cuboid* c = nullptr;
  check(steklov_cuboid_create(dims.data(), dims.size(), &c), "--dims");
  return CuboidPtr(c);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Failure{kIo, "failed writing to standard output"};
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Failure{kIo, "cannot open output file '" + path + "'"};
  out << text;
  out.close();
  if (!out) throw Failure{kIo, "failed writing output file '" + path + "'"};
}

std::string mask_list(std::uint32_t mask) {
  std::string s;
  for (int i = 0; i < 32; ++i) {
    if (!((mask >> i) & 1u)) continue;
    if (!s.empty()) s += ';';
    s += std::to_string(i);
  }
  return s;
}

const char* family_label(steklov_family f) {
  switch (f) {
    case STEKLOV_FAMILY_CONSTANT: return "constant";
    case STEKLOV_FAMILY_REGULAR: return "regular";
    case STEKLOV_FAMILY_ZERO_BOX: return "zero_box";
    case STEKLOV_FAMILY_LINEAR: return "linear";
    case STEKLOV_FAMILY_QUASI: return "quasi";
  }
  return "unknown";
}

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct SpectrumArgs {
  std::string dims, method = "exact", format = "csv", output = "-";
  double sigma_max = 0.0;
};

int run_spectrum(const SpectrumArgs& a) {
  const auto dims = parse_dims(a.dims);
  auto c = make_cuboid(dims);
  const steklov_method m = a.method == "exact" ? STEKLOV_METHOD_EXACT : STEKLOV_METHOD_QUASI;
  std::cerr << "spectrum: " << a.method << " eigenvalues below " << fmt(a.sigma_max) << "\n";
  steklov_spectrum* raw = nullptr;
  check(steklov_spectrum_compute(c.get(), a.sigma_max, m, &raw), "spectrum");
  std::unique_ptr<steklov_spectrum, void (*)(steklov_spectrum*)> s(raw, steklov_spectrum_destroy);
  const size_t n = steklov_spectrum_size(s.get());

  std::string text;
  json rows = json::array();
  if (a.format == "csv") text = "sigma,method,p,tau_mask,box,ell_tau2_mask,multiplicity\n";
  for (size_t i = 0; i < n; ++i) {
    steklov_eigenvalue e{};
    check(steklov_spectrum_get(s.get(), i, &e), "spectrum");
    std::vector<std::int64_t> box(e.box_len);
    check(steklov_spectrum_box(s.get(), i, box.data(), box.size()), "spectrum");
    const char* method = e.method == STEKLOV_METHOD_EXACT ? "exact" : "quasi";
    if (a.format == "csv") {
      std::string b;
      for (size_t k = 0; k < box.size(); ++k) b += (k ? ";" : "") + std::to_string(box[k]);
      text += fmt(e.sigma) + ',' + method + ',' + std::to_string(e.p) + ',' + std::to_string(e.tau_mask) + ',' + b +
              ',' + std::to_string(e.ell_tau2_mask) + ',' + std::to_string(e.multiplicity) + '\n';
    } else {
      rows.push_back({{"sigma", e.sigma},
                      {"method", method},
                      {"family", family_label(e.family)},
                      {"p", e.p},
                      {"tau_mask", e.tau_mask},
                      {"trig_coordinates", mask_list(e.tau_mask)},
                      {"box", box},
                      {"ell_tau2_mask", e.ell_tau2_mask},
                      {"linear_mask", e.linear_mask},
                      {"multiplicity", e.multiplicity}});
    }
  }
  if (a.format == "json") {
    json doc{{"dims", dims}, {"coordinate_base", 0}, {"method", a.method}, {"sigma_max", a.sigma_max}, {"rows", rows}};
    text = doc.dump(2) + "\n";
  }
  emit(a.output, text);
  std::cerr << "spectrum: " << n << " rows\n";
  return kOk;
}

struct WeylArgs {
  std::string dims, format = "csv", output = "-";
  double sigma_min = 0.0, sigma_max = 0.0, step = 0.5;
  int nodes = 32;
};

int run_weyl(const WeylArgs& a) {
  const auto dims = parse_dims(a.dims);
  if (!(a.step > 0.0)) throw Failure{kArgument, "--step must be positive"};
  if (!(a.sigma_min > 0.0)) throw Failure{kArgument, "--sigma-min must be positive"};
  auto c = make_cuboid(dims);
  std::vector<double> grid;
  for (long long k = 0;; ++k) {
    const double s = a.sigma_min + static_cast<double>(k) * a.step;
    if (s > a.sigma_max * (1.0 + 1e-12)) break;
    grid.push_back(s);
  }
  std::cerr << "weyl: " << grid.size() << " grid points\n";
  steklov_weyl_table* raw = nullptr;
  check(steklov_weyl_table_compute(c.get(), grid.data(), grid.size(), a.nodes, &raw), "weyl");
  std::unique_ptr<steklov_weyl_table, void (*)(steklov_weyl_table*)> t(raw, steklov_weyl_table_destroy);
  const bool two_term = dims.size() >= 3;
  std::string text = two_term ? "sigma,N,main,second,R\n" : "sigma,N,main,R\n";
  json rows = json::array();
  double max_r = 0.0;
  for (size_t i = 0; i < steklov_weyl_table_size(t.get()); ++i) {
    steklov_weyl_row r{};
    check(steklov_weyl_table_get(t.get(), i, &r), "weyl");
    max_r = std::max(max_r, std::abs(r.R));
    if (a.format == "csv") {
      text += fmt(r.sigma) + ',' + std::to_string(r.N) + ',' + fmt(r.main) + ',';
      if (two_term) text += fmt(r.second) + ',';
      text += fmt(r.R) + '\n';
    } else {
      json row{{"sigma", r.sigma}, {"N", r.N}, {"main", r.main}, {"R", r.R}};
      if (two_term) row["second"] = r.second;
      rows.push_back(row);
    }
  }
  if (a.format == "json") text = json{{"dims", dims}, {"rows", rows}, {"max_abs_R", max_r}}.dump(2) + "\n";
  emit(a.output, text);
  std::cerr << "weyl: max |R| = " << fmt(max_r) << "\n";
  return kOk;
}

int run_constants(int dim, int nodes, const std::string& output) {
  steklov_constants* raw = nullptr;
  check(steklov_constants_compute(dim, nodes, &raw), "constants");
  std::unique_ptr<steklov_constants, void (*)(steklov_constants*)> k(raw, steklov_constants_destroy);
  steklov_constants_summary s{};
  check(steklov_constants_summary_get(k.get(), &s), "constants");
  double eta = 0.0;
  check(steklov_remainder_exponent(dim, &eta), "constants");
  json cp = json::array();
  for (size_t i = 0; i < s.num_p; ++i) {
    steklov_p_constants p{};
    check(steklov_constants_p_get(k.get(), i, &p), "constants");
    cp.push_back({{"p", p.p},
                  {"q", p.q},
                  {"c_prime", p.c_prime},
                  {"c_double_prime", p.c_double_prime},
                  {"c", p.c},
                  {"G", p.G},
                  {"G_standard_error", p.G_standard_error},
                  {"G_sampled", p.G_sampled != 0}});
  }
  json doc{{"d", s.d}, {"C1", s.C1}, {"C2", s.C2}, {"C2_assembly", s.C2_assembly}, {"remainder_exponent", eta},
           {"c_p", cp}};
  emit(output, doc.dump(2) + "\n");
  return kOk;
}

int run_sigma1(const std::string& dims_text, const std::string& output) {
  const auto dims = parse_dims(dims_text);
  auto c = make_cuboid(dims);
  double sigma = 0.0, alpha = 0.0;
  int axis = 0;
  std::vector<double> beta(dims.size() - 1);
  check(steklov_sigma1(c.get(), &sigma, &alpha, &axis, beta.data(), beta.size()), "sigma1");
  json doc{{"dims", dims}, {"sigma1", sigma}, {"alpha", alpha}, {"beta", beta}, {"longest_axis", axis}};
  emit(output, doc.dump(2) + "\n");
  return kOk;
}

int run_invert(double L, double sigma1, const std::string& output) {
  double a1 = 0.0, a2 = 0.0;
  check(steklov_invert_rectangle(L, sigma1, &a1, &a2), "invert-rectangle");
  emit(output, json{{"perimeter", L}, {"sigma1", sigma1}, {"a1", a1}, {"a2", a2}}.dump(2) + "\n");
  return kOk;
}

struct IsoArgs {
  std::string dims, constraint = "volume", output = "-";
  int samples = 0, dim = 3;
  std::uint64_t seed = 0;
  double min_length = 0.25, max_length = 2.0;
};

json iso_report(const std::vector<double>& dims, steklov_constraint k) {
  auto c = make_cuboid(dims);
  steklov_iso_report r{};
  check(steklov_isoperimetric(c.get(), k, &r), "isoperimetric");
  return {{"dims", dims},
          {"sigma1_cuboid", r.sigma1_cuboid},
          {"sigma1_cube", r.sigma1_cube},
          {"cube_half_length", r.cube_half_length},
          {"margin", r.margin},
          {"aspect_deviation", r.aspect_deviation},
          {"is_cube", r.is_cube != 0}};
}

int run_isoperimetric(const IsoArgs& a) {
  const steklov_constraint k = a.constraint == "volume" ? STEKLOV_CONSTRAINT_VOLUME : STEKLOV_CONSTRAINT_AREA;
  if (!a.dims.empty()) {
    json doc = iso_report(parse_dims(a.dims), k);
    doc["constraint"] = a.constraint;
    emit(a.output, doc.dump(2) + "\n");
    return kOk;
  }
  if (a.samples < 1) throw Failure{kArgument, "isoperimetric: give --dims or --samples"};
  if (a.dim < 2) throw Failure{kArgument, "--dim must be at least 2"};
  if (!(a.min_length > 0.0) || !(a.max_length >= a.min_length))
    throw Failure{kArgument, "--min-length/--max-length must satisfy 0 < min <= max"};
  std::mt19937_64 rng(a.seed);
  json reports = json::array();
  int violations = 0;
  for (int s = 0; s < a.samples; ++s) {
    std::vector<double> dims(static_cast<size_t>(a.dim));
    for (auto& x : dims) x = a.min_length + (a.max_length - a.min_length) * unit_draw(rng);
    json r = iso_report(dims, k);
    if (r["margin"].get<double>() < 0.0) ++violations;
    reports.push_back(std::move(r));
    if ((s + 1) % 25 == 0) std::cerr << "isoperimetric: " << (s + 1) << "/" << a.samples << "\n";
  }
  json doc{{"constraint", a.constraint}, {"seed", a.seed}, {"samples", a.samples}, {"violations", violations},
           {"reports", reports}};
  emit(a.output, doc.dump(2) + "\n");
  return kOk;
}

struct ConcArgs {
  std::string dims, trig, u, signs, format = "json", output = "-";
  double eps = 0.1;
  int k_min = 1, k_max = 60;
};

int run_concentration(const ConcArgs& a) {
  const auto dims = parse_dims(a.dims);
  auto c = make_cuboid(dims);
  std::uint32_t mask = 0;
  for (const auto& tok : split(a.trig, ',')) {
    const int i = parse_int("--trig", tok);
    if (i < 0 || i >= static_cast<int>(dims.size())) throw Failure{kArgument, "--trig: coordinate out of range"};
    mask |= 1u << i;
  }
  std::vector<double> lo, hi;
  for (const auto& tok : split(a.u, ',')) {
    const auto parts = split(tok, ':');
    if (parts.size() != 2) throw Failure{kArgument, "--u: expected lo:hi per trigonometric coordinate"};
    lo.push_back(parse_double("--u", parts[0]));
    hi.push_back(parse_double("--u", parts[1]));
  }
  if (static_cast<int>(lo.size()) != __builtin_popcount(mask))
    throw Failure{kArgument, "--u: need one range per trigonometric coordinate"};
  std::vector<int> signs;
  for (const auto& tok : a.signs.empty() ? std::vector<std::string>{} : split(a.signs, ','))
    signs.push_back(parse_int("--signs", tok));
  if (!signs.empty() && signs.size() != dims.size() - lo.size())
    throw Failure{kArgument, "--signs: need one sign per hyperbolic coordinate"};
  if (a.k_min < 1 || a.k_max < a.k_min) throw Failure{kArgument, "--k-min/--k-max must satisfy 1 <= k-min <= k-max"};

  std::vector<steklov_mass_report> reports(static_cast<size_t>(a.k_max - a.k_min + 1));
  size_t count = 0;
  check(steklov_concentration_sequence(c.get(), mask, lo.data(), hi.data(), signs.empty() ? nullptr : signs.data(),
                                       a.eps, a.k_min, a.k_max, reports.data(), reports.size(), &count),
        "concentration");
  const std::string diagnostic = count < reports.size() ? steklov_last_error() : "";
  if (!diagnostic.empty()) std::cerr << "concentration: truncated: " << diagnostic << "\n";
  std::string text;
  if (a.format == "csv") {
    text = "k,sigma,mass,target,epsilon,off_collar\n";
    for (size_t i = 0; i < count; ++i) {
      const auto& r = reports[i];
      text += std::to_string(r.k) + ',' + fmt(r.sigma) + ',' + fmt(r.mass) + ',' + fmt(r.target) + ',' +
              fmt(r.epsilon) + ',' + fmt(r.off_collar) + '\n';
    }
  } else {
    json rows = json::array();
    for (size_t i = 0; i < count; ++i) {
      const auto& r = reports[i];
      rows.push_back({{"k", r.k},
                      {"sigma", r.sigma},
                      {"mass_in_U_eps", r.mass},
                      {"target_ratio", r.target},
                      {"epsilon", r.epsilon},
                      {"off_collar_mass", r.off_collar}});
    }
    text = json{{"dims", dims}, {"tau_mask", mask}, {"reports", rows}, {"diagnostic", diagnostic}}.dump(2) + "\n";
  }
  emit(a.output, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steklov spectra of cuboids: exact and approximate eigenvalues, Weyl remainders, extremal checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(steklov_version()));

  SpectrumArgs sp;
  auto* cmd_sp = app.add_subcommand("spectrum", "Sorted eigenvalue table below --sigma-max");
  cmd_sp->add_option("--dims", sp.dims, "Half lengths a_1,...,a_d")->required();
  cmd_sp->add_option("--sigma-max", sp.sigma_max, "Upper bound (exclusive)")->required();
  cmd_sp->add_option("--method", sp.method)->check(CLI::IsMember({"exact", "quasi"}));
  cmd_sp->add_option("--format", sp.format)->check(CLI::IsMember({"csv", "json"}));
  cmd_sp->add_option("-o,--output", sp.output, "Output file, '-' for standard output");

  WeylArgs wa;
  auto* cmd_w = app.add_subcommand("weyl", "Two-term Weyl remainder table on a sigma grid");
  cmd_w->add_option("--dims", wa.dims)->required();
  cmd_w->add_option("--sigma-min", wa.sigma_min)->required();
  cmd_w->add_option("--sigma-max", wa.sigma_max)->required();
  cmd_w->add_option("--step", wa.step);
  cmd_w->add_option("--nodes", wa.nodes, "Gauss-Legendre nodes per axis");
  cmd_w->add_option("--format", wa.format)->check(CLI::IsMember({"csv", "json"}));
  cmd_w->add_option("-o,--output", wa.output);

  int c_dim = 3, c_nodes = 32;
  std::string c_out = "-";
  auto* cmd_c = app.add_subcommand("constants", "Weyl constants C1, C2, c_p and G_{p,q}");
  cmd_c->add_option("--dim", c_dim)->required();
  cmd_c->add_option("--nodes", c_nodes);
  cmd_c->add_option("-o,--output", c_out);

  std::string s1_dims, s1_out = "-";
  auto* cmd_s1 = app.add_subcommand("sigma1", "First nonzero eigenvalue");
  cmd_s1->add_option("--dims", s1_dims)->required();
  cmd_s1->add_option("-o,--output", s1_out);

  double inv_L = 0.0, inv_sigma = 0.0;
  std::string inv_out = "-";
  auto* cmd_inv = app.add_subcommand("invert-rectangle", "Recover rectangle half sides from a1 + a2 and sigma1");
  cmd_inv->add_option("--perimeter", inv_L, "Sum of the half sides a1 + a2")->required();
  cmd_inv->add_option("--sigma1", inv_sigma)->required();
  cmd_inv->add_option("-o,--output", inv_out);

  IsoArgs ia;
  auto* cmd_iso = app.add_subcommand("isoperimetric", "Compare sigma1 with the cube of equal volume or area");
  cmd_iso->add_option("--dims", ia.dims);
  cmd_iso->add_option("--constraint", ia.constraint)->check(CLI::IsMember({"volume", "area"}));
  cmd_iso->add_option("--samples", ia.samples, "Number of random cuboids");
  cmd_iso->add_option("--seed", ia.seed);
  cmd_iso->add_option("--dim", ia.dim);
  cmd_iso->add_option("--min-length", ia.min_length);
  cmd_iso->add_option("--max-length", ia.max_length);
  cmd_iso->add_option("-o,--output", ia.output);

  ConcArgs ca;
  auto* cmd_conc = app.add_subcommand("concentration", "Boundary mass of U_eps along the concentrating sequence");
  cmd_conc->add_option("--dims", ca.dims)->required();
  cmd_conc->add_option("--trig", ca.trig, "Trigonometric coordinates, e.g. 0,1")->required();
  cmd_conc->add_option("--u", ca.u, "U as lo:hi per trigonometric coordinate")->required();
  cmd_conc->add_option("--signs", ca.signs, "Component of X_tau: +1/-1 per hyperbolic coordinate");
  cmd_conc->add_option("--eps", ca.eps);
  cmd_conc->add_option("--k-min", ca.k_min);
  cmd_conc->add_option("--k-max", ca.k_max);
  cmd_conc->add_option("--format", ca.format)->check(CLI::IsMember({"csv", "json"}));
  cmd_conc->add_option("-o,--output", ca.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kArgument;
  }

  try {
    if (cmd_sp->parsed()) return run_spectrum(sp);
    if (cmd_w->parsed()) return run_weyl(wa);
    if (cmd_c->parsed()) return run_constants(c_dim, c_nodes, c_out);
    if (cmd_s1->parsed()) return run_sigma1(s1_dims, s1_out);
    if (cmd_inv->parsed()) return run_invert(inv_L, inv_sigma, inv_out);
    if (cmd_iso->parsed()) return run_isoperimetric(ia);
    if (cmd_conc->parsed()) return run_concentration(ca);
  } catch (const Failure& f) {
    std::cerr << "steklov: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "steklov: " << e.what() << "\n";
    return kInternal;
  }
  return kArgument;
}
