#include "spinor_inv/suites.hpp"

#include "spinor_inv/analysis.hpp"
#include "spinor_inv/catalog.hpp"
#include "spinor_inv/dynamics.hpp"
#include "spinor_inv/expansions.hpp"
#include "spinor_inv/forms.hpp"
#include "spinor_inv/lorentz.hpp"
#include "spinor_inv/parallel.hpp"
#include "spinor_inv/reductions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spinv {
namespace {

constexpr cplx kI{0.0, 1.0};

// Collects checks for one suite and applies the tolerance override.
class Recorder {
 public:
  Recorder(std::string suite, const SuiteOptions& opts) : opts_(opts) { report_.suite = std::move(suite); }

  // Passes when value <= tol (the override replaces tol when set).
  void residual(std::string name, CheckOrigin origin, double value, double tol, std::string detail = {}) {
    const double t = opts_.tol ? *opts_.tol : tol;
    push(std::move(name), origin, std::isfinite(value) && value <= t, value, t, std::move(detail));
  }

  // Exact or verdict check; tolerance reported as 0.
  void exact(std::string name, CheckOrigin origin, bool passed, double value, std::string detail = {}) {
    push(std::move(name), origin, passed, value, 0.0, std::move(detail));
  }

  // Passes when value > floor; used for "must be nonzero" witnesses.
  void nonzero(std::string name, CheckOrigin origin, double value, double floor, std::string detail = {}) {
    push(std::move(name), origin, value > floor, value, floor, std::move(detail));
  }

  std::uint64_t seed(std::uint64_t k) const { return opts_.seed * 1000003ULL + k; }
  SuiteReport& report() { return report_; }

 private:
  void push(std::string name, CheckOrigin origin, bool passed, double value, double tol, std::string detail) {
    CheckResult r;
    r.suite = report_.suite;
    r.name = std::move(name);
    r.origin = origin;
    r.passed = passed;
    r.value = value;
    r.tolerance = tol;
    r.detail = std::move(detail);
    report_.checks.push_back(std::move(r));
  }

  SuiteOptions opts_;
  SuiteReport report_;
};

std::string fmt_g(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Product of gamma matrices; index 5 stands for gamma^5.
Mat4 gprod(std::initializer_list<int> idx) {
  Mat4 m = Mat4::Identity();
  for (int i : idx) m = m * (i == 5 ? special(Special::G5) : gamma(i));
  return m;
}

bool is_bilinear_kind(FormKind k) { return k == FormKind::C || k == FormKind::C5; }

const std::vector<FormKind>& all_forms() {
  static const std::vector<FormKind> k{FormKind::C, FormKind::C5, FormKind::G0, FormKind::G05};
  return k;
}

std::string form_label(FormKind k) { return std::string(form_kind_name(k)); }

// Sandwich conjugation appropriate to the form: X^T M for bilinear kinds,
// X^dagger M for sesquilinear kinds.
Mat4 pulled_back(FormKind k, const Mat4& x) {
  const Mat4& m = form_matrix(k);
  return (is_bilinear_kind(k) ? Mat4(x.transpose()) : Mat4(x.adjoint())) * m * x;
}

// ---------------------------------------------------------------- algebra

struct GeneratorSpec {
  cplx factor;
  std::vector<int> idx;
};

Mat4 build(const GeneratorSpec& g) {
  Mat4 m = Mat4::Identity();
  for (int i : g.idx) m = m * (i == 5 ? special(Special::G5) : gamma(i));
  return g.factor * m;
}

struct GeneratorList {
  FormKind form;
  int dimension;
  std::vector<GeneratorSpec> skew;
  std::vector<GeneratorSpec> hermitian;
};

const std::vector<GeneratorList>& invariance_generators() {
  const cplx one = 1.0;
  const cplx i = kI;
  static const std::vector<GeneratorList> lists{
      {FormKind::C,
       20,
       {{one, {5, 0}}, {i, {5, 1}}, {i, {5, 2}}, {i, {5, 3}}, {i, {0, 1}}, {i, {0, 2}}, {i, {0, 3}},
        {one, {1, 2}}, {one, {1, 3}}, {one, {2, 3}}},
       {{i, {5, 0}}, {one, {5, 1}}, {one, {5, 2}}, {one, {5, 3}}, {one, {0, 1}}, {one, {0, 2}},
        {one, {0, 3}}, {i, {1, 2}}, {i, {1, 3}}, {i, {2, 3}}}},
      {FormKind::C5,
       20,
       {{i, {0}}, {one, {1}}, {one, {2}}, {one, {3}}, {i, {0, 1}}, {i, {0, 2}}, {i, {0, 3}}, {one, {1, 2}},
        {one, {1, 3}}, {one, {2, 3}}},
       {{one, {0}}, {i, {1}}, {i, {2}}, {i, {3}}, {one, {0, 1}}, {one, {0, 2}}, {one, {0, 3}}, {i, {1, 2}},
        {i, {1, 3}}, {i, {2, 3}}}},
      {FormKind::G0,
       16,
       {{i, {0}}, {i, {5, 1}}, {i, {5, 2}}, {i, {5, 3}}, {one, {1, 2}}, {one, {1, 3}}, {one, {2, 3}}, {i, {}}},
       {{i, {1}}, {i, {2}}, {i, {3}}, {i, {5, 0}}, {one, {0, 1}}, {one, {0, 2}}, {one, {0, 3}}, {one, {5}}}},
      {FormKind::G05,
       16,
       {{one, {1}}, {one, {2}}, {one, {3}}, {one, {1, 2}}, {one, {1, 3}}, {one, {2, 3}}, {one, {5, 0}}, {i, {}}},
       {{one, {0}}, {one, {0, 1}}, {one, {0, 2}}, {one, {0, 3}}, {one, {5, 1}}, {one, {5, 2}}, {one, {5, 3}},
        {one, {5}}}},
  };
  return lists;
}

// Signs s_n in (product of n distinct gammas)^{T or dagger} M = s_n M (product).
const std::map<FormKind, std::array<int, 4>>& grade_signs() {
  static const std::map<FormKind, std::array<int, 4>> s{
      {FormKind::C, {+1, -1, -1, +1}},
      {FormKind::C5, {-1, -1, +1, +1}},
      {FormKind::G0, {+1, -1, -1, +1}},
      {FormKind::G05, {-1, -1, +1, +1}},
  };
  return s;
}

void run_algebra(Recorder& r) {
  constexpr double tol = kConstTol;
  const Mat4 id = Mat4::Identity();
  const Mat4& c = special(Special::C);
  const Mat4& c5 = special(Special::C5);
  const Mat4& g5 = special(Special::G5);
  const Mat4& g0 = special(Special::G0);
  const Mat4& g05 = special(Special::G05);

  double clifford = 0.0, conj0 = 0.0, conjc = 0.0, anti5 = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      clifford = std::max(clifford, max_abs(gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu) - 2.0 * metric(mu, nu) * id));
    }
    conj0 = std::max(conj0, max_abs(g0 * gamma(mu) * g0 - gamma(mu).adjoint()));
    conjc = std::max(conjc, max_abs(c * gamma(mu) * c - gamma(mu).transpose()));
    anti5 = std::max(anti5, max_abs(g5 * gamma(mu) + gamma(mu) * g5));
  }
  r.residual("clifford", CheckOrigin::Printed, clifford, tol);
  r.residual("gamma0_conjugation", CheckOrigin::Printed, conj0, tol);
  r.residual("c_conjugation", CheckOrigin::Printed, conjc, tol);
  r.residual("gamma5_anticommutation", CheckOrigin::Printed, anti5, tol);
  r.residual("gamma5_involution", CheckOrigin::Printed,
             std::max({max_abs(g5 - g5.adjoint()), max_abs(g5 - g5.transpose()), max_abs(g5 * g5 - id)}), tol);
  r.residual("antisymmetry/C", CheckOrigin::Printed, max_abs(c.transpose() + c), tol);
  r.residual("antisymmetry/C5", CheckOrigin::Printed, max_abs(c5.transpose() + c5), tol);
  r.residual("c_self_inverse", CheckOrigin::Printed, std::max(max_abs(c * c - id), max_abs(c - c.adjoint())), tol);
  {
    double im0 = 0.0, im05 = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        im0 = std::max(im0, std::abs(g0(i, j).imag()));
        im05 = std::max(im05, std::abs(g05(i, j).imag()));
      }
    }
    r.residual("symmetry/G0", CheckOrigin::Printed, std::max(im0, max_abs(g0 - g0.transpose())), tol);
    r.residual("symmetry/G05", CheckOrigin::Printed, std::max(im05, max_abs(g05 + g05.transpose())), tol);
  }

  const Mat4& pp = projector(Projector::Pplus);
  const Mat4& pm = projector(Projector::Pminus);
  const Mat4& pl = projector(Projector::PL);
  const Mat4& pr = projector(Projector::PR);
  for (auto [name, p] : std::vector<std::pair<std::string, const Mat4*>>{{"P+", &pp}, {"P-", &pm}, {"L", &pl}, {"R", &pr}}) {
    r.residual("projector/" + name, CheckOrigin::Derived, std::max(max_abs(*p * *p - *p), max_abs(*p - p->adjoint())), tol,
               "idempotent and Hermitian");
  }
  r.residual("projector/complete", CheckOrigin::Derived, std::max(max_abs(pp + pm - id), max_abs(pl + pr - id)), tol);
  r.residual("kill/P+P-", CheckOrigin::Derived, max_abs(pp * pm), tol);
  r.residual("kill/LR", CheckOrigin::Derived, max_abs(pl * pr), tol);
  r.residual("kill/P+C5P+", CheckOrigin::Printed, max_abs(pp * c5 * pp), tol);
  r.residual("kill/P-C5P-", CheckOrigin::Printed, max_abs(pm * c5 * pm), tol);
  r.residual("kill/P+G05P+", CheckOrigin::Printed, max_abs(pp * g05 * pp), tol);
  r.residual("kill/P-G05P-", CheckOrigin::Printed, max_abs(pm * g05 * pm), tol);
  r.residual("kill/LG0L", CheckOrigin::Printed, max_abs(pl * g0 * pl), tol);
  r.residual("kill/RG0R", CheckOrigin::Printed, max_abs(pr * g0 * pr), tol);
  r.residual("kill/LG05L", CheckOrigin::Printed, max_abs(pl * g05 * pl), tol);
  r.residual("kill/RG05R", CheckOrigin::Printed, max_abs(pr * g05 * pr), tol);

  double gt = 0.0, ga = 0.0, g5c = 0.0;
  for (const auto& pr2 : kGeneratorPairs) {
    const Mat4 s = generator(pr2[0], pr2[1]);
    gt = std::max(gt, max_abs(s.transpose() + c * s * c));
    ga = std::max(ga, max_abs(s.adjoint() + g0 * s * g0));
    g5c = std::max(g5c, max_abs(s * g5 - g5 * s));
  }
  r.residual("lorentz_generator/transpose", CheckOrigin::Printed, gt, tol, "S^T = -C S C");
  r.residual("lorentz_generator/adjoint", CheckOrigin::Printed, ga, tol, "S^dagger = -g0 S g0");
  r.residual("lorentz_generator/gamma5", CheckOrigin::Printed, g5c, tol, "[S, g5] = 0");

  const std::map<FormKind, int> p_sign{{FormKind::C, +1}, {FormKind::C5, -1}, {FormKind::G0, +1}, {FormKind::G05, -1}};
  for (FormKind k : all_forms()) {
    const Mat4& m = form_matrix(k);
    r.residual("discrete/P/" + form_label(k), CheckOrigin::Printed,
               max_abs(pulled_back(k, discrete(Discrete::P)) - p_sign.at(k) * m), tol);
    r.residual("discrete/CPT/" + form_label(k), CheckOrigin::Printed,
               max_abs(pulled_back(k, discrete(Discrete::CPT)) + m), tol);
  }

  // Pointwise symmetry classes of the forms on random spinors.
  double skew_c = 0.0, skew_c5 = 0.0, herm = 0.0, skewh = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Spinor a = random_spinor(r.seed(100 + 2 * k));
    const Spinor b = random_spinor(r.seed(101 + 2 * k));
    skew_c = std::max(skew_c, std::abs(form(FormKind::C, a, b) + form(FormKind::C, b, a)));
    skew_c5 = std::max(skew_c5, std::abs(form(FormKind::C5, a, b) + form(FormKind::C5, b, a)));
    herm = std::max(herm, std::abs(form(FormKind::G0, a, b) - std::conj(form(FormKind::G0, b, a))));
    skewh = std::max(skewh, std::abs(form(FormKind::G05, a, b) + std::conj(form(FormKind::G05, b, a))));
  }
  r.residual("form_symmetry/C", CheckOrigin::Printed, skew_c, tol, "skew-symmetric");
  r.residual("form_symmetry/C5", CheckOrigin::Printed, skew_c5, tol, "skew-symmetric");
  r.residual("form_symmetry/G0", CheckOrigin::Printed, herm, tol, "Hermitian");
  r.residual("form_symmetry/G05", CheckOrigin::Printed, skewh, tol, "skew-Hermitian");

  // Products of n distinct gammas against each form matrix.
  for (FormKind k : all_forms()) {
    const Mat4& m = form_matrix(k);
    for (int n = 1; n <= 4; ++n) {
      double worst = 0.0;
      for (int mask = 0; mask < 16; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != n) continue;
        Mat4 g = Mat4::Identity();
        for (int mu = 0; mu < 4; ++mu) {
          if (mask & (1 << mu)) g = g * gamma(mu);
        }
        const Mat4 lhs = (is_bilinear_kind(k) ? Mat4(g.transpose()) : Mat4(g.adjoint())) * m;
        worst = std::max(worst, max_abs(lhs - grade_signs().at(k)[n - 1] * m * g));
      }
      r.residual("grade/" + form_label(k) + "/" + std::to_string(n), CheckOrigin::Printed, worst, tol,
                 "sign " + std::to_string(grade_signs().at(k)[n - 1]));
    }
  }

  // Infinitesimal invariance algebras.
  for (const GeneratorList& gl : invariance_generators()) {
    const std::string base = "invariance_algebra/" + form_label(gl.form);
    const int dim = invariance_algebra_dimension({gl.form});
    r.exact(base + "/dimension", CheckOrigin::Printed, dim == gl.dimension, dim,
            "expected " + std::to_string(gl.dimension));
    std::vector<Mat4> mats;
    double defect = 0.0, cls = 0.0;
    for (const auto& g : gl.skew) {
      const Mat4 x = build(g);
      mats.push_back(x);
      defect = std::max(defect, infinitesimal_defect(gl.form, x));
      cls = std::max(cls, max_abs(x + x.adjoint()));
    }
    for (const auto& g : gl.hermitian) {
      const Mat4 x = build(g);
      mats.push_back(x);
      defect = std::max(defect, infinitesimal_defect(gl.form, x));
      cls = std::max(cls, max_abs(x - x.adjoint()));
    }
    r.residual(base + "/generators", CheckOrigin::Printed, defect, tol);
    r.residual(base + "/hermiticity", CheckOrigin::Printed, cls, tol);
    const int rank = real_rank(mats);
    r.exact(base + "/span", CheckOrigin::Printed, rank == gl.dimension, rank,
            "expected " + std::to_string(gl.dimension));
  }
  {
    const int dim = invariance_algebra_dimension(all_forms());
    r.exact("invariance_algebra/common/dimension", CheckOrigin::Printed, dim == 6, dim, "expected 6");
    std::vector<Mat4> lorentz{gprod({1, 2}), gprod({1, 3}), gprod({2, 3}), gprod({0, 1}), gprod({0, 2}), gprod({0, 3})};
    double defect = 0.0;
    for (const Mat4& x : lorentz) {
      for (FormKind k : all_forms()) defect = std::max(defect, infinitesimal_defect(k, x));
    }
    r.residual("invariance_algebra/common/generators", CheckOrigin::Printed, defect, tol);
    const int rank = real_rank(lorentz);
    r.exact("invariance_algebra/common/span", CheckOrigin::Printed, rank == 6, rank, "expected 6");
  }

  // Trace identities behind the invariant evolution laws.
  double tc = 0.0, tc5 = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Mat4 psi = random_state(2, r.seed(300 + k)).as_matrix();
    for (int mu = 1; mu <= 3; ++mu) {
      tc = std::max(tc, std::abs((psi.transpose() * c * g0 * gamma(mu) * psi * c).trace()));
      tc5 = std::max(tc5, std::abs((psi.transpose() * c5 * g0 * gamma(mu) * psi * c5).trace()));
    }
  }
  r.residual("trace_identity/C", CheckOrigin::Printed, tc, tol);
  r.residual("trace_identity/C5", CheckOrigin::Printed, tc5, tol);
}

// ------------------------------------------------------------- invariance

// Relative difference with a floor so that values at rounding level do not
// produce spurious residuals.
double rel(cplx a, cplx b, double floor) {
  const double s = std::max({std::abs(a), std::abs(b), floor});
  return std::abs(a - b) / s;
}

// State in which one observer is unentangled from the others.
StateTensor partial_product(int particles, int observer, std::uint64_t seed) {
  const Spinor a = random_spinor(seed);
  const StateTensor rest = random_state(particles - 1, seed + 1);
  std::vector<cplx> coeff(tensor_size(particles));
  for (std::size_t f = 0; f < coeff.size(); ++f) {
    std::vector<int> idx = multi_index(f, particles);
    const int j = idx[static_cast<std::size_t>(observer)];
    idx.erase(idx.begin() + observer);
    coeff[f] = a(j) * rest[flat_index(idx)];
  }
  return StateTensor(particles, std::move(coeff)).normalized();
}

StateTensor random_product(int particles, std::uint64_t seed) {
  std::vector<Spinor> sp;
  for (int k = 0; k < particles; ++k) sp.push_back(random_spinor(seed + static_cast<std::uint64_t>(k)).normalized());
  return product_state(sp);
}

StateTensor transform_all(const StateTensor& s, std::uint64_t seed, double scale) {
  StateTensor out = s;
  for (int p = 0; p < s.particles(); ++p) {
    out = apply_local(out, p, random_proper_orthochronous(seed + static_cast<std::uint64_t>(p), scale));
  }
  return out;
}

// Distinct plans reachable from an invariant's primary and alternate forms.
std::vector<const EvaluationPlan*> plans_of(const NamedInvariant& inv) {
  std::vector<const EvaluationPlan*> all;
  inv.primary.patterns(all);
  for (const AltForm& a : inv.alt_forms) a.expr.patterns(all);
  std::vector<const EvaluationPlan*> out;
  std::set<std::string> seen;
  for (const EvaluationPlan* p : all) {
    if (seen.insert(p->pattern.to_string()).second) out.push_back(p);
  }
  return out;
}

struct PermutationRelation {
  std::string a;
  std::string b;
  int swap_x;
  int swap_y;
  int sign;
};

const std::vector<PermutationRelation>& permutation_relations() {
  static const std::vector<PermutationRelation> rel{
      {"R1", "R4", 0, 1, +1},   {"R2", "R5", 0, 1, +1},   {"R3", "R6", 0, 1, +1},   {"Q3", "Q4", 0, 1, +1},
      {"I2A", "I2B", 0, 1, +1}, {"N2", "N3", 0, 1, -1},   {"B1", "D1", 0, 1, +1},   {"Z1", "Z1", 0, 1, +1},
      {"B1", "Z1", 0, 2, +1},   {"D1", "D1", 0, 2, +1},   {"Z1", "D1", 1, 2, +1},   {"B1", "B1", 1, 2, +1},
      {"B03_1", "D03_1", 0, 1, +1}, {"B03_1", "Z03_1", 0, 2, +1}, {"D03_1", "Z03_1", 1, 2, +1},
  };
  return rel;
}

void run_invariance(Recorder& r) {
  // Forms: 100 sampled transformations applied to both arguments.
  {
    std::map<FormKind, double> worst;
    double matrix_worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const Mat4 s = random_proper_orthochronous(r.seed(1000 + k), 1.0);
      const Spinor a = random_spinor(r.seed(2000 + 2 * k));
      const Spinor b = random_spinor(r.seed(2001 + 2 * k));
      for (FormKind f : all_forms()) {
        worst[f] = std::max(worst[f], rel(form(f, s * a, s * b), form(f, a, b), 1e-300));
        matrix_worst = std::max(matrix_worst, max_abs(pulled_back(f, s) - form_matrix(f)));
      }
    }
    for (FormKind f : all_forms()) {
      r.residual("forms/lorentz/" + form_label(f), CheckOrigin::Printed, worst[f], 1e-8, "100 samples");
    }
    r.residual("forms/matrix", CheckOrigin::Printed, matrix_worst, 1e-9, "S^T M S = M over 100 samples");
  }

  const std::vector<std::string>& names = all_invariant_names();
  const std::size_t n_names = names.size();

  // Named invariants: 20 states x 5 per-particle transformations.
  {
    constexpr int kStates = 20;
    constexpr int kTransforms = 5;
    std::vector<std::vector<double>> per_state(kStates, std::vector<double>(n_names, 0.0));
    parallel_for(kStates, [&](std::size_t k) {
      StateTensor base2 = random_state(2, r.seed(3000 + k));
      StateTensor base3 = random_state(3, r.seed(4000 + k));
      Evaluator e2(base2), e3(base3);
      std::vector<StateTensor> t2, t3;
      for (int t = 0; t < kTransforms; ++t) {
        t2.push_back(transform_all(base2, r.seed(5000 + 100 * k + 10 * t), 1.0));
        t3.push_back(transform_all(base3, r.seed(6000 + 100 * k + 10 * t), 1.0));
      }
      std::vector<Evaluator> ev2, ev3;
      for (int t = 0; t < kTransforms; ++t) {
        ev2.emplace_back(t2[t]);
        ev3.emplace_back(t3[t]);
      }
      for (std::size_t i = 0; i < n_names; ++i) {
        const bool two = invariant(names[i]).particles == 2;
        const cplx v = two ? e2(names[i]) : e3(names[i]);
        for (int t = 0; t < kTransforms; ++t) {
          const cplx w = two ? ev2[t](names[i]) : ev3[t](names[i]);
          per_state[k][i] = std::max(per_state[k][i], rel(w, v, 1e-300));
        }
      }
    });
    for (std::size_t i = 0; i < n_names; ++i) {
      double w = 0.0;
      for (const auto& ps : per_state) w = std::max(w, ps[i]);
      r.residual("invariants/lorentz/" + names[i], CheckOrigin::Printed, w, 1e-8, "20 states x 5 transformations");
    }
  }

  // Planner against the naive full sum on every distinct pattern.
  {
    std::vector<double> worst(n_names, 0.0);
    std::vector<std::size_t> counts(n_names, 0);
    parallel_for(n_names, [&](std::size_t i) {
      const NamedInvariant& inv = invariant(names[i]);
      const auto plans = plans_of(inv);
      counts[i] = plans.size();
      for (int k = 0; k < 20; ++k) {
        const StateTensor s = random_state(inv.particles, r.seed(7000 + k));
        for (const EvaluationPlan* p : plans) {
          worst[i] = std::max(worst[i], rel(execute(*p, s), evaluate_naive(p->pattern, s), 1e-300));
        }
      }
    });
    for (std::size_t i = 0; i < n_names; ++i) {
      r.residual("oracle/planner/" + names[i], CheckOrigin::Derived, worst[i], 1e-10,
                 std::to_string(counts[i]) + " patterns x 20 states");
    }
  }

  // Written-out expansions against the primary forms.
  for (const std::string& name : expansion_names()) {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const StateTensor s = random_state(2, r.seed(8000 + k));
      worst = std::max(worst, relative_difference(expansion_oracle(name, s), eval_named(name, s)));
    }
    r.residual("oracle/expansion/" + name, CheckOrigin::Printed, worst, 1e-10, "50 states");
  }

  // Alternate forms against the primary forms.
  for (const std::string& name : names) {
    const NamedInvariant& inv = invariant(name);
    for (const AltForm& a : inv.alt_forms) {
      double worst = 0.0;
      for (int k = 0; k < 20; ++k) {
        const StateTensor s = random_state(inv.particles, r.seed(9000 + k));
        Evaluator ev(s);
        worst = std::max(worst, relative_difference(ev.eval(a.expr), ev(name)));
      }
      r.residual("oracle/alt/" + name + "/" + a.label,
                 a.status == FormStatus::Printed ? CheckOrigin::Printed : CheckOrigin::Reconciled, worst, 1e-10,
                 "20 states");
    }
  }

  // Product-state nullity, observer scope, parity, scaling.
  for (const std::string& name : names) {
    const NamedInvariant& inv = invariant(name);
    const int n = inv.particles;
    if (inv.scope.kind == ScopeKind::NotIndicator) {
      double smallest = 1e300;
      for (int k = 0; k < 5; ++k) {
        smallest = std::min(smallest, std::abs(eval_named(name, random_product(n, r.seed(10000 + 10 * k)))));
      }
      r.nonzero("scope/" + name + "/product_nonzero", CheckOrigin::Printed, smallest, 1e-6, inv.scope.to_string());
    } else {
      double worst = 0.0;
      for (int k = 0; k < 5; ++k) {
        worst = std::max(worst, std::abs(eval_named(name, random_product(n, r.seed(10000 + 10 * k)))));
      }
      r.residual("nullity/" + name, CheckOrigin::Printed, worst, 1e-10, "5 random product states");
      double forced = 0.0;
      double witness = 1e300;
      bool has_witness = false;
      for (int o = 0; o < n; ++o) {
        double v = 0.0;
        for (int k = 0; k < 3; ++k) {
          v = std::max(v, std::abs(eval_named(name, partial_product(n, o, r.seed(11000 + 100 * o + 10 * k)))));
        }
        if (inv.scope.forces_zero(o, n)) {
          forced = std::max(forced, v);
        } else {
          has_witness = true;
          witness = std::min(witness, v);
        }
      }
      r.residual("scope/" + name + "/forced_zero", CheckOrigin::Printed, forced, 1e-10, inv.scope.to_string());
      if (has_witness) {
        r.nonzero("scope/" + name + "/witness", CheckOrigin::Printed, witness, 1e-6,
                  "nonzero with an observer outside the scope unentangled");
      }
    }

    const StateTensor s = random_state(n, r.seed(12000));
    const cplx v = eval_named(name, s);
    for (int o = 0; o < n; ++o) {
      const cplx w = eval_named(name, apply_local(s, o, discrete(Discrete::P)));
      int expected = 0;
      if (const EvaluationPlan* single = inv.primary.single_pattern()) {
        expected = single->pattern.parity_odd_counts()[static_cast<std::size_t>(o)] % 2 ? -1 : 1;
      }
      const double plus = rel(w, v, 1e-300);
      const double minus = rel(w, -v, 1e-300);
      const std::string nm = "parity/" + name + "/" + std::string(1, static_cast<char>('A' + o));
      if (expected != 0) {
        r.residual(nm, CheckOrigin::Printed, expected > 0 ? plus : minus, 1e-10,
                   expected > 0 ? "even" : "odd");
      } else {
        r.residual(nm, CheckOrigin::Derived, std::min(plus, minus), 1e-10, plus <= minus ? "even" : "odd");
      }
    }

    const auto [kd, ld] = inv.bidegree;
    std::mt19937_64 rng(r.seed(13000));
    std::normal_distribution<double> nd;
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const cplx lambda(nd(rng), nd(rng));
      const cplx factor = std::pow(lambda, kd) * std::pow(std::conj(lambda), ld);
      worst = std::max(worst, rel(eval_named(name, s.scaled(lambda)), factor * v, 1e-300));
    }
    r.residual("scaling/" + name, CheckOrigin::Printed, worst, 1e-10,
               "bidegree (" + std::to_string(kd) + "," + std::to_string(ld) + ")");
  }

  // Reality classes.
  const std::vector<std::string> real_names{"N1", "N4", "R1", "R3", "R4", "R6", "T1", "N1N4mN2N3"};
  const std::vector<std::string> imag_names{"N2", "N3", "T2"};
  for (bool real_class : {true, false}) {
    for (const std::string& name : real_class ? real_names : imag_names) {
      double worst = 0.0;
      for (int k = 0; k < 20; ++k) {
        const cplx v = eval_named(name, random_state(2, r.seed(14000 + k)));
        const double off = real_class ? std::abs(v.imag()) : std::abs(v.real());
        worst = std::max(worst, off / std::max(std::abs(v), 1e-300));
      }
      r.residual("reality/" + name, CheckOrigin::Printed, worst, 1e-10, real_class ? "real" : "imaginary");
    }
  }

  // Lab permutations.
  for (const PermutationRelation& p : permutation_relations()) {
    const int n = invariant(p.a).particles;
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const StateTensor s = random_state(n, r.seed(15000 + k));
      const StateTensor w = s.swapped(p.swap_x, p.swap_y);
      worst = std::max(worst, rel(eval_named(p.b, w), static_cast<double>(p.sign) * eval_named(p.a, s), 1e-300));
    }
    std::string label = "permutation/" + p.a + "~" + p.b + "/" + std::string(1, static_cast<char>('A' + p.swap_x)) +
                        std::string(1, static_cast<char>('A' + p.swap_y));
    r.residual(label, CheckOrigin::Printed, worst, 1e-10, p.sign > 0 ? "equal" : "opposite sign");
  }
}

// --------------------------------------------------------------- examples

struct BalanceExpectation {
  std::string state;
  bool balanced;
  bool affine;
  CheckOrigin origin;
};

const std::vector<BalanceExpectation>& balance_expectations() {
  static const std::vector<BalanceExpectation> e{
      {"xccx", false, false, CheckOrigin::Printed},  {"xccx2", false, false, CheckOrigin::Printed},
      {"xccx3", false, false, CheckOrigin::Printed}, {"xccx4", false, false, CheckOrigin::Printed},
      {"utoy", false, false, CheckOrigin::Printed},  {"utoya", false, false, CheckOrigin::Printed},
      {"w3", false, false, CheckOrigin::Printed},    {"req1", false, true, CheckOrigin::Printed},
      {"xccx5", false, false, CheckOrigin::Derived}, {"xccx6", false, false, CheckOrigin::Derived},
      {"req2", false, true, CheckOrigin::Derived},   {"req3", false, true, CheckOrigin::Derived},
      {"epr2", true, true, CheckOrigin::Derived},    {"i2", true, true, CheckOrigin::Derived},
      {"i2a", true, true, CheckOrigin::Derived},     {"i2b", true, true, CheckOrigin::Derived},
      {"toi", true, true, CheckOrigin::Derived},     {"toi2", true, true, CheckOrigin::Derived},
  };
  return e;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void run_examples(Recorder& r) {
  for (const std::string& state : catalog_names()) {
    const CatalogEntry& e = catalog_state(state);
    Evaluator ev(e.state);
    const std::string prefix = (e.state.particles() == 2 ? "2p/" : "3p/") + state + "/";
    for (const ExpectedValue& x : e.expected) {
      const double got = std::abs(ev(x.invariant));
      r.residual(prefix + x.invariant, CheckOrigin::Printed, std::abs(got - x.magnitude), 1e-9,
                 "|value| " + fmt_g(got) + ", expected " + fmt_g(x.magnitude));
    }
  }
  {
    Evaluator ev(catalog_state("xccx6").state);
    r.residual("regression/xccx6/T1", CheckOrigin::Derived, std::abs(std::abs(ev("T1")) - 4.0 / 9.0), 1e-9,
               "frozen 4/9");
    r.residual("regression/xccx6/T2", CheckOrigin::Derived, std::abs(std::abs(ev("T2")) - 2.0 / 9.0), 1e-9,
               "frozen 2/9");
  }

  for (const BalanceExpectation& b : balance_expectations()) {
    const StateTensor& s = catalog_state(b.state).state;
    const WeightSystem w = weight_vectors(s);
    const bool bal = is_balanced(w);
    const bool aff = is_affinely_balanced(w);
    const bool ok = bal == b.balanced && aff == b.affine;
    r.exact("balance/" + b.state, b.origin, ok, ok ? 0.0 : 1.0,
            std::string("balanced ") + yes_no(bal) + ", affinely balanced " + yes_no(aff) + "; expected " +
                yes_no(b.balanced) + "/" + yes_no(b.affine));

    // Consequences of the verdicts for the implemented invariants.
    if (!aff || !bal) {
      Evaluator ev(s);
      double worst = 0.0;
      std::string arg;
      for (const std::string& name : list_names(s.particles())) {
        const auto [k, l] = invariant(name).bidegree;
        const bool constrained = !aff ? k != l : (k == 0 || l == 0);
        if (!constrained) continue;
        const double v = std::abs(ev(name));
        if (v > worst) {
          worst = v;
          arg = name;
        }
      }
      r.residual(std::string("consistency/") + b.state, b.origin, worst, 1e-10,
                 std::string(!aff ? "all k != l invariants vanish" : "all homogeneous invariants vanish") +
                     (arg.empty() ? "" : "; largest " + arg));
    }
  }
}

// ------------------------------------------------------------- reductions

std::string blocks_label(const std::vector<Block>& b) {
  std::string s;
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::string(block_name(b[i]));
  return s;
}

std::vector<std::vector<Block>> block_combinations(int n, Block x, Block y) {
  std::vector<std::vector<Block>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<Block> b;
    for (int i = 0; i < n; ++i) b.push_back((mask >> (n - 1 - i)) & 1 ? y : x);
    out.push_back(b);
  }
  return out;
}

void run_reductions(Recorder& r, double tol) {
  for (int n : {2, 3}) {
    for (const std::string& name : reducible_names(n)) {
      for (const auto& blocks : block_combinations(n, Block::Plus, Block::Minus)) {
        for (const ReductionReport& rep : reduce_energy_subspace(name, blocks, 30, r.seed(16000), tol)) {
          const CheckOrigin origin = rep.status == FormStatus::Printed ? CheckOrigin::Printed : CheckOrigin::Reconciled;
          std::ostringstream d;
          d.precision(6);
          d << "constant " << rep.constant.real() << (rep.constant.imag() >= 0 ? "+" : "") << rep.constant.imag()
            << "i, expected |c| " << rep.expected_magnitude;
          const double mag_err = std::abs(std::abs(rep.constant) - rep.expected_magnitude);
          const double value = rep.target == "0" ? rep.residual : std::max(rep.residual, mag_err);
          r.residual("energy/" + blocks_label(blocks) + "/" + name + "/" + rep.target, origin, value, tol, d.str());
        }
      }
    }
    for (const std::string& name : weyl_null_names(n)) {
      for (Block chir : {Block::Left, Block::Right}) {
        double worst = 0.0;
        for (int k = 0; k < 10; ++k) {
          QubitTensor q = random_qubits(n, r.seed(17000 + k));
          const StateTensor s = embed_qubits(q, std::vector<Block>(static_cast<std::size_t>(n), chir));
          worst = std::max(worst, std::abs(eval_named(name, s)));
        }
        r.residual("weyl/" + std::string(block_name(chir)) + "/" + name, CheckOrigin::Printed, worst, 1e-10,
                   "10 chiral states");
      }
    }
  }
}

// ----------------------------------------------------------- dependencies

void run_dependencies(Recorder& r) {
  const std::map<std::string, int> expected{{"2p-22", 27}, {"2p-31", 20}, {"3p-22-selected", 21}, {"3p-31", 20}};
  for (const std::string& id : family_ids()) {
    const RankReport rep = numeric_rank(family(id), 0, r.seed(18000));
    const int want = expected.at(id);
    std::ostringstream d;
    d.precision(6);
    d << family(id).size() << " polynomials, smallest retained " << rep.smallest_retained << ", largest discarded "
      << rep.largest_discarded << ", expected " << want;
    r.exact("rank/" + id, CheckOrigin::Printed, rep.rank == want, rep.rank, d.str());
  }
  {
    std::vector<std::string> names = family("2p-31");
    names.push_back(names.front());
    const RankReport rep = numeric_rank(names, 0, r.seed(18000));
    r.exact("rank/duplicate", CheckOrigin::Derived, rep.rank == 20, rep.rank, "2p-31 plus a repeated member");
  }
  const auto printed = dependency_residuals(printed_dependencies(), 20, r.seed(19000));
  for (std::size_t i = 0; i < printed.size(); ++i) {
    r.residual("printed/" + printed_dependencies()[i].label, CheckOrigin::Printed, printed[i], 1e-9, "20 states");
  }
  const auto recon = dependency_residuals(reconciled_dependencies(), 20, r.seed(19000));
  for (std::size_t i = 0; i < recon.size(); ++i) {
    r.residual("reconciled/" + reconciled_dependencies()[i].label, CheckOrigin::Reconciled, recon[i], 1e-9,
               "20 states");
  }
  {
    const LinearRelation bogus{"X1-X2", {{1, "X1"}, {-1, "X2"}}};
    const double v = dependency_residuals({bogus}, 20, r.seed(19000)).front();
    r.nonzero("negative_control", CheckOrigin::Derived, v, 1e-3, "a false relation must not vanish");
  }
}

// --------------------------------------------------------------- dynamics

Spinor basis_spinor(int k) {
  Spinor s = Spinor::Zero();
  s(k) = 1.0;
  return s;
}

// Least-squares slope of the unwrapped phase of a sampled complex series.
double phase_slope(const std::vector<double>& t, const std::vector<cplx>& f) {
  std::vector<double> ph{std::arg(f.front())};
  for (std::size_t n = 1; n < f.size(); ++n) {
    double d = std::arg(f[n]) - std::arg(f[n - 1]);
    while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
    while (d < -std::numbers::pi) d += 2.0 * std::numbers::pi;
    ph.push_back(ph.back() + d);
  }
  double tm = 0.0, pm = 0.0;
  for (std::size_t n = 0; n < ph.size(); ++n) {
    tm += t[n];
    pm += ph[n];
  }
  tm /= static_cast<double>(ph.size());
  pm /= static_cast<double>(ph.size());
  double num = 0.0, den = 0.0;
  for (std::size_t n = 0; n < ph.size(); ++n) {
    num += (t[n] - tm) * (ph[n] - pm);
    den += (t[n] - tm) * (t[n] - tm);
  }
  return den > 0.0 ? num / den : 0.0;
}

EvolutionParams generic_params() {
  EvolutionParams p;
  p.p = {0.3, -0.5, 0.7};
  p.m = 0.7;
  p.q = 0.4;
  p.g = 0.5;
  p.A = {constant_potential(0.3), constant_potential(-0.2), constant_potential(0.6),
         [](double t) { return 0.3 * std::sin(t); }};
  p.phi = [](double t) { return 0.9 * std::cos(0.5 * t); };
  p.t0 = 0.0;
  p.t1 = 2.0;
  p.dt = 1e-3;
  return p;
}

void run_dynamics(Recorder& r) {
  // Free particle at rest.
  {
    EvolutionParams p;
    p.m = 0.8;
    p.t1 = 10.0;
    p.dt = 1e-3;
    for (int k = 0; k < 4; ++k) {
      const Spinor chi0 = basis_spinor(k);
      const Trajectory tr = evolve(chi0, p);
      const double sign = k < 2 ? -1.0 : 1.0;
      double worst = 0.0;
      for (std::size_t n = 0; n < tr.times.size(); ++n) {
        worst = std::max(worst, (tr.spinors[n] - std::exp(kI * sign * p.m * tr.times[n]) * chi0).norm());
      }
      r.residual("free/phi" + std::to_string(k), CheckOrigin::Printed, worst, 1e-8,
                 k < 2 ? "exp(-imt) phi" : "exp(+imt) phi");
    }
  }
  // Norm conservation.
  {
    EvolutionParams p;
    p.p = {0.4, 0.1, -0.3};
    p.m = 1.1;
    p.t1 = 10.0;
    const Spinor chi0 = random_spinor(r.seed(20000)).normalized();
    const Trajectory tr = evolve(chi0, p);
    r.residual("norm_drift/free", CheckOrigin::Printed, std::abs(tr.spinors.back().norm() - 1.0), 1e-8, "t in [0, 10]");
    const EvolutionParams g = generic_params();
    const Trajectory tg = evolve(chi0, g);
    r.residual("norm_drift/coupled", CheckOrigin::Derived, std::abs(tg.spinors.back().norm() - 1.0), 1e-8,
               "bounded potentials");
  }
  // U(1) phase laws of the two bilinear forms.
  for (FormKind kind : {FormKind::C, FormKind::C5}) {
    EvolutionParams p = generic_params();
    p.t1 = 10.0;
    if (kind == FormKind::C) {
      p.m = 0.0;
    } else {
      p.g = 0.0;
    }
    const double a0 = 0.3;
    p.A[0] = constant_potential(a0);
    const Trajectory x = evolve(random_spinor(r.seed(21000)), p);
    const Trajectory y = evolve(random_spinor(r.seed(21001)), p);
    std::vector<cplx> f;
    for (std::size_t n = 0; n < x.times.size(); ++n) f.push_back(form(kind, x.spinors[n], y.spinors[n]));
    double dev = 0.0;
    for (std::size_t n = 0; n < f.size(); ++n) {
      dev = std::max(dev, std::abs(f[n] - std::exp(-2.0 * kI * p.q * a0 * x.times[n]) * f.front()));
    }
    dev /= std::abs(f.front());
    const std::string base = "phase_law/" + form_label(kind);
    r.residual(base + "/deviation", CheckOrigin::Printed, dev, 1e-7,
               kind == FormKind::C ? "m = 0" : "g = 0");
    const double slope = phase_slope(x.times, f);
    const double expected = -2.0 * p.q * a0;
    r.residual(base + "/slope", CheckOrigin::Printed, std::abs(slope - expected), 1e-4,
               "slope " + fmt_g(slope) + ", expected " + fmt_g(expected));
  }
  // Derivative laws of all four forms with generic couplings.
  {
    const EvolutionParams p = generic_params();
    const Trajectory x = evolve(random_spinor(r.seed(22000)), p);
    const Trajectory y = evolve(random_spinor(r.seed(22001)), p);
    for (FormKind kind : all_forms()) {
      r.residual("form_law/" + form_label(kind), CheckOrigin::Printed, form_evolution_residual(kind, x, y, p), 1e-5,
                 "centered differences, dt = 1e-3");
    }
  }
  // Invariant laws under evolution of particle A.
  for (const char* name : {"I1", "I2"}) {
    EvolutionParams p = generic_params();
    p.t1 = 10.0;
    const bool i1 = std::string_view(name) == "I1";
    if (i1) {
      p.m = 0.0;
    } else {
      p.g = 0.0;
    }
    const StateTensor s = random_state(2, r.seed(23000));
    const InvariantEvolutionReport rep = invariant_evolution_check(name, s, p);
    const std::string base = std::string("invariant/") + name;
    r.residual(base + "/modulus", CheckOrigin::Printed, rep.modulus_drift, 1e-6,
               i1 ? "massless evolution" : "g = 0");
    r.residual(base + "/slope", CheckOrigin::Printed, std::abs(rep.phase_slope - rep.expected_slope), 1e-4,
               "slope " + fmt_g(rep.phase_slope) + ", expected " + fmt_g(rep.expected_slope));
    const EvolutionParams g = generic_params();
    const InvariantEvolutionReport gen = invariant_evolution_check(name, s, g);
    r.residual(base + "/rhs", i1 ? CheckOrigin::Printed : CheckOrigin::Reconciled, gen.rhs_residual, 1e-5,
               "generic couplings");
  }
  // RK4 order: global error ratio when halving dt with constant potentials.
  {
    EvolutionParams p = generic_params();
    p.A = {constant_potential(0.3), constant_potential(-0.2), constant_potential(0.6), constant_potential(0.1)};
    p.phi = constant_potential(0.4);
    p.t1 = 5.0;
    const Spinor chi0 = random_spinor(r.seed(24000));
    std::vector<double> err;
    for (double dt : {0.1, 0.05}) {
      p.dt = dt;
      const Trajectory tr = evolve(chi0, p);
      err.push_back((tr.spinors.back() - exact_constant_solution(chi0, p, tr.times.back())).norm());
    }
    const double ratio = err[0] / err[1];
    r.residual("rk4/order", CheckOrigin::Printed, std::abs(ratio - 16.0), 2.0,
               "error ratio " + fmt_g(ratio) + " between dt = 0.1 and 0.05");
  }
}

}  // namespace

std::string_view check_origin_name(CheckOrigin o) {
  switch (o) {
    case CheckOrigin::Printed: return "printed";
    case CheckOrigin::Reconciled: return "reconciled";
    case CheckOrigin::Derived: return "derived";
  }
  return "";
}

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n{"algebra", "invariance", "examples", "reductions", "dependencies", "dynamics"};
  return n;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Recorder r(std::string(name), opts);
  if (name == "algebra") {
    run_algebra(r);
  } else if (name == "invariance") {
    run_invariance(r);
  } else if (name == "examples") {
    run_examples(r);
  } else if (name == "reductions") {
    run_reductions(r, opts.tol ? *opts.tol : 1e-8);
  } else if (name == "dependencies") {
    run_dependencies(r);
  } else if (name == "dynamics") {
    run_dynamics(r);
  } else {
    std::string msg = "unknown suite '" + std::string(name) + "'; valid:";
    for (const auto& s : suite_names()) msg += " " + s;
    throw std::invalid_argument(msg + " all");
  }
  SuiteReport out = std::move(r.report());
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<SuiteReport> run_all_suites(const SuiteOptions& opts) {
  std::vector<SuiteReport> out;
  for (const auto& s : suite_names()) out.push_back(run_suite(s, opts));
  return out;
}

}  // namespace spinv
