#include "gac/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

namespace gac {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

int parse_int(const std::string& s) {
  int v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw std::invalid_argument("bad integer: " + s);
  return v;
}

double parse_real(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number: " + s);
  }
}

std::vector<double> theta_grid(double start, double end, double step) {
  if (step <= 0) throw std::invalid_argument("theta step must be positive");
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double t = start + i * step;
    if (t > end + step / 2) break;
    grid.push_back(std::min(t, end));
  }
  return grid;
}

}  // namespace

double MeasureSpec::evaluate(const PureState& psi) const {
  switch (id) {
    case MeasureId::GAlphaC:
      return galpha_c(psi, AlphaParam(parameter.value())).aggregate;
    case MeasureId::GQC:
      return gqc(psi, QParam(parameter.value())).aggregate;
    case MeasureId::GMC:
      return gmc(psi).aggregate;
    case MeasureId::GGM:
      return ggm(psi).aggregate;
    case MeasureId::Fill:
      return concurrence_fill(psi);
  }
  throw std::invalid_argument("unknown measure id");
}

bool is_builtin_state(const std::string& id) {
  for (const char* prefix : {"ghz:", "w:", "typeA:", "typeB:", "fam4:", "random:"})
    if (id.rfind(prefix, 0) == 0) return true;
  return false;
}

PureState parse_builtin_state(const std::string& id) {
  const auto parts = split(id, ':');
  const std::string& kind = parts.front();
  if (kind == "ghz" && parts.size() == 2) return ghz(parse_int(parts[1]));
  if (kind == "w" && parts.size() == 2) return w(parse_int(parts[1]));
  if (kind == "typeA" && parts.size() == 2) return type_a(FamilyParam(parse_real(parts[1])));
  if (kind == "typeB" && parts.size() == 2) return type_b(FamilyParam(parse_real(parts[1])));
  if (kind == "fam4" && parts.size() == 2)
    return four_qubit_family(FamilyParam(parse_real(parts[1])));
  if (kind == "random" && parts.size() == 3) {
    std::vector<int> dims;
    for (const auto& tok : split(parts[1], 'x')) dims.push_back(parse_int(tok));
    return random_pure(dims, Seed{static_cast<std::uint64_t>(std::stoull(parts[2]))});
  }
  throw std::invalid_argument("unknown builtin state id: " + id);
}

PureState family_state(const std::string& family, double theta) {
  if (family == "typeA") return type_a(FamilyParam(theta));
  if (family == "typeB") return type_b(FamilyParam(theta));
  if (family == "fam4") return four_qubit_family(FamilyParam(theta));
  throw std::invalid_argument("not a theta family: " + family);
}

SweepResult run_sweep(const SweepSpec& spec) {
  if (spec.measures.empty()) throw std::invalid_argument("sweep needs at least one measure");
  SweepResult result;
  result.thetas = theta_grid(spec.theta_start, spec.theta_end, spec.theta_step);
  result.values.assign(spec.measures.size(), {});
  for (auto& col : result.values) col.reserve(result.thetas.size());
  for (double t : result.thetas) {
    const PureState psi = family_state(spec.family, t);
    for (std::size_t mi = 0; mi < spec.measures.size(); ++mi)
      result.values[mi].push_back(spec.measures[mi].evaluate(psi));
  }
  for (std::size_t mi = 0; mi < spec.measures.size(); ++mi) {
    const auto& col = result.values[mi];
    const auto it = std::max_element(col.begin(), col.end());
    result.argmax.emplace_back(result.thetas[it - col.begin()], *it);
  }
  return result;
}

std::optional<CrossingPair> find_crossing_pair(const MeasureSpec& shared,
                                               const MeasureSpec& distinguishing,
                                               double shared_tol, double dist_gap,
                                               double grid_step) {
  const auto grid = theta_grid(0.0, std::numbers::pi / 2, grid_step);
  std::vector<double> shared_b(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    shared_b[i] = shared.evaluate(type_b(FamilyParam(grid[i])));

  auto shared_of_b = [&](double t) { return shared.evaluate(type_b(FamilyParam(t))); };

  for (double ta : grid) {
    const PureState a = type_a(FamilyParam(ta));
    const double target = shared.evaluate(a);
    const double dist_a = distinguishing.evaluate(a);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      if ((shared_b[i] - target) * (shared_b[i + 1] - target) > 0) continue;
      // bisect inside the bracket
      double lo = grid[i], hi = grid[i + 1];
      double flo = shared_b[i] - target;
      double tb = 0.5 * (lo + hi);
      for (int it = 0; it < 60; ++it) {
        tb = 0.5 * (lo + hi);
        const double f = shared_of_b(tb) - target;
        if (std::abs(f) <= shared_tol / 4) break;
        if (f * flo <= 0) {
          hi = tb;
        } else {
          lo = tb;
          flo = f;
        }
      }
      const PureState b = type_b(FamilyParam(tb));
      if (std::abs(shared.evaluate(b) - target) > shared_tol) continue;
      const double dist_b = distinguishing.evaluate(b);
      if (std::abs(dist_a - dist_b) >= dist_gap) {
        return CrossingPair{ta, tb, target, shared.evaluate(b), dist_a, dist_b};
      }
    }
  }
  return std::nullopt;
}

BoundCheckReport run_bound_check(int trials, Seed seed, const std::vector<int>& local_dims,
                                 const std::vector<double>& alphas) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const int n = static_cast<int>(local_dims.size());
  const auto cuts = enumerate_bipartitions(n);

  // per-cut marginal dimensions and per-class minimum dimensions
  std::vector<int> cut_dim;
  std::vector<int> class_dims(n / 2, std::numeric_limits<int>::max());
  for (const auto& cut : cuts.members) {
    long ds = 1, dc = 1;
    for (int p : cut.parties()) ds *= local_dims[p];
    for (int p : cut.complement_parties()) dc *= local_dims[p];
    const int d = static_cast<int>(std::min(ds, dc));
    cut_dim.push_back(d);
    auto& cd = class_dims[cut.parties().size() - 1];
    cd = std::min(cd, d);
  }

  BoundCheckReport report;
  report.trials = trials;
  std::mt19937_64 seq(seed.value);
  std::uniform_real_distribution<double> eps_dist(0.0, 0.2);

  for (int t = 0; t < trials; ++t) {
    const Seed s1{seq()}, s2{seq()};
    const double eps_request = eps_dist(seq);
    const PureState psi = random_pure(local_dims, s1);
    const PureState phi = perturb(psi, eps_request, s2);
    const double eps = trace_distance(DensityMatrix::projector(psi),
                                      DensityMatrix::projector(phi));

    for (const auto& alpha_value : alphas) {
      const AlphaParam alpha(alpha_value);
      // Lemma bound per cut
      for (std::size_t ci = 0; ci < cuts.members.size(); ++ci) {
        const double v1 = alpha_concurrence(reduced_spectrum(psi, cuts.members[ci]), alpha);
        const double v2 = alpha_concurrence(reduced_spectrum(phi, cuts.members[ci]), alpha);
        const double bound = continuity_bound_bipartite(eps, cut_dim[ci], alpha);
        const double observed = std::abs(v1 - v2);
        if (bound > 0)
          report.max_lemma_slack_ratio =
              std::max(report.max_lemma_slack_ratio, observed / bound);
        if (observed > bound + 1e-9) ++report.lemma_violations;
      }
      // aggregate bound
      const double g1 = galpha_c(psi, alpha).aggregate;
      const double g2 = galpha_c(phi, alpha).aggregate;
      const double bound = continuity_bound_multipartite(eps, n, class_dims, alpha);
      const double observed = std::abs(g1 - g2);
      if (bound > 0)
        report.max_theorem_slack_ratio =
            std::max(report.max_theorem_slack_ratio, observed / bound);
      if (observed > bound + 1e-9) ++report.theorem_violations;
    }
  }
  return report;
}

std::vector<Fig1Row> fig1_rows() {
  std::vector<Fig1Row> rows;
  const AlphaParam third(1.0 / 3.0);
  for (int n = 5; n <= 21; ++n) {
    const double wv = w_alpha_c_analytic(n, third);
    rows.push_back({n, wv, wv / ghz_alpha_c_analytic(n, third)});
  }
  return rows;
}

namespace {

std::vector<FamilyCurveRow> family_curves(double step,
                                          const std::function<double(const PureState&)>& shared) {
  const AlphaParam half(0.5);
  std::vector<FamilyCurveRow> rows;
  for (double t : theta_grid(0.0, std::numbers::pi / 2, step)) {
    const PureState a = type_a(FamilyParam(t));
    const PureState b = type_b(FamilyParam(t));
    rows.push_back({t, shared(a), galpha_c(a, half).aggregate, shared(b),
                    galpha_c(b, half).aggregate});
  }
  return rows;
}

}  // namespace

std::vector<FamilyCurveRow> fig2_rows(double step) {
  return family_curves(step, [](const PureState& s) { return concurrence_fill(s); });
}

std::vector<FamilyCurveRow> fig3_rows(double step) {
  return family_curves(step, [](const PureState& s) { return gmc(s).aggregate; });
}

std::vector<Fig4Row> fig4_rows(double step) {
  const AlphaParam half(0.5);
  const QParam three(3.0);
  std::vector<Fig4Row> rows;
  for (double t : theta_grid(0.0, std::numbers::pi / 2, step)) {
    const PureState psi = four_qubit_family(FamilyParam(t));
    rows.push_back({t, galpha_c(psi, half).aggregate, gqc(psi, three).aggregate,
                    gmc(psi).aggregate, ggm(psi).aggregate});
  }
  return rows;
}

}  // namespace gac
