#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gac/measures.hpp"
#include "gac/states.hpp"

namespace gac {

/// One measure column of a sweep: id plus its parameter where applicable.
struct MeasureSpec {
  MeasureId id;
  std::optional<double> parameter;

  std::string label() const { return measure_label(id, parameter); }
  double evaluate(const PureState& psi) const;
};

/// Parse builtin state ids: ghz:<n>, w:<n>, typeA:<t>, typeB:<t>, fam4:<t>,
/// random:<d1xd2x...>:<seed>.
PureState parse_builtin_state(const std::string& id);
bool is_builtin_state(const std::string& id);

/// theta-parameterized builtin families usable in sweeps.
PureState family_state(const std::string& family, double theta);

struct SweepSpec {
  std::string family;
  double theta_start = 0.0;
  double theta_end = 0.0;
  double theta_step = 0.0;
  std::vector<MeasureSpec> measures;
};

struct SweepResult {
  std::vector<double> thetas;
  std::vector<std::vector<double>> values;             // [measure][grid point]
  std::vector<std::pair<double, double>> argmax;       // per measure: (theta, value)
};

SweepResult run_sweep(const SweepSpec& spec);

/// A pair of states from two families that one measure cannot tell apart
/// while another can.
struct CrossingPair {
  double theta_a = 0.0;
  double theta_b = 0.0;
  double shared_a = 0.0, shared_b = 0.0;          // near-equal measure
  double distinguishing_a = 0.0, distinguishing_b = 0.0;
};

/// Scan family A ("typeA") against family B ("typeB"): find theta_a, theta_b
/// with |shared(A)-shared(B)| <= shared_tol and |dist(A)-dist(B)| >= dist_gap.
/// The B-side angle is refined by bisection on the shared measure.
std::optional<CrossingPair> find_crossing_pair(const MeasureSpec& shared,
                                               const MeasureSpec& distinguishing,
                                               double shared_tol, double dist_gap,
                                               double grid_step = 1e-3);

struct BoundCheckReport {
  int trials = 0;
  int lemma_violations = 0;      // per-cut bipartite bound
  int theorem_violations = 0;    // aggregate multipartite bound
  double max_lemma_slack_ratio = 0.0;    // observed / bound, <= 1 expected
  double max_theorem_slack_ratio = 0.0;
};

/// Randomized continuity-bound check: perturbed Haar-random states, measured
/// projector trace distance as epsilon.
BoundCheckReport run_bound_check(int trials, Seed seed, const std::vector<int>& local_dims,
                                 const std::vector<double>& alphas);

// ---- figure data ----

struct Fig1Row {
  int n;
  double w_value;   // G_{1/3}(W_n)
  double ratio;     // against G_{1/3}(GHZ_n)
};
std::vector<Fig1Row> fig1_rows();  // n = 5..21, analytic path

struct FamilyCurveRow {
  double theta;
  double a_shared, a_g12c;
  double b_shared, b_g12c;
};
std::vector<FamilyCurveRow> fig2_rows(double step = 1e-3);  // shared = fill
std::vector<FamilyCurveRow> fig3_rows(double step = 1e-3);  // shared = gmc

struct Fig4Row {
  double theta;
  double g12c, g3c, gmc, ggm;
};
std::vector<Fig4Row> fig4_rows(double step = 1e-3);

}  // namespace gac
