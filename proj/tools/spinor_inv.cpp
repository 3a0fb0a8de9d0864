/// spinor-inv: evaluate, check and analyze Lorentz invariant entanglement
/// indicators of Dirac spinor states.
///
/// Exit codes:
///   0  success
///   1  a check failed
///   2  malformed state file (message carries line and column)
///   3  unknown invariant name (message lists the valid names)
///   4  pattern error
///   5  invalid input (particle-count mismatch, unknown family or suite)
///   64 command-line usage error

#include "spinor_inv/analysis.hpp"
#include "spinor_inv/catalog.hpp"
#include "spinor_inv/contraction.hpp"
#include "spinor_inv/dynamics.hpp"
#include "spinor_inv/forms.hpp"
#include "spinor_inv/state_io.hpp"
#include "spinor_inv/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using spinv::cplx;
using Json = nlohmann::ordered_json;

enum Exit : int {
  kOk = 0,
  kCheckFailed = 1,
  kBadStateFile = 2,
  kUnknownName = 3,
  kPatternError = 4,
  kBadInput = 5,
  kUsage = 64,
};

enum class Format { Table, Json, Csv };

struct Common {
  std::vector<std::string> states;
  std::string names;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  Format format = Format::Table;
  std::string out;
};

/// Thrown for inputs that are well-formed but inconsistent.
struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sig6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string sig6(cplx z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

Json json_cplx(cplx z) { return Json::array({z.real(), z.imag()}); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

/// Left-aligned text table with a header rule.
std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) w[c] = header[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size() && c < w.size(); ++c) w[c] = std::max(w[c], r[c].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      os << r[c];
      if (c + 1 < r.size()) os << std::string(w[c] - r[c].size() + 2, ' ');
    }
    os << "\n";
  };
  line(header);
  std::vector<std::string> rule;
  for (std::size_t c = 0; c < w.size(); ++c) rule.emplace_back(w[c], '-');
  line(rule);
  for (const auto& r : rows) line(r);
  return os.str();
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw BadInput("cannot write '" + c.out + "'");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string bidegree_text(std::pair<int, int> b) {
  return "(" + std::to_string(b.first) + "," + std::to_string(b.second) + ")";
}

std::vector<spinv::StateTensor> load_states(const Common& c, std::size_t min_count) {
  if (c.states.size() < min_count) throw BadInput("expected at least " + std::to_string(min_count) + " --state file(s)");
  std::vector<spinv::StateTensor> out;
  for (const auto& p : c.states) out.push_back(spinv::read_state_file(p));
  return out;
}

// ------------------------------------------------------------------- eval

int cmd_eval(const Common& c) {
  const auto states = load_states(c, 1);
  const std::vector<std::string> filter = split_csv(c.names);
  for (const auto& n : filter) spinv::invariant(n);

  Json doc{{"schema", 1}, {"command", "eval"}, {"states", Json::array()}};
  std::string table;
  std::string csv = "state,name,re,im,abs,k,l,scope_class\n";
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& s = states[i];
    const std::vector<std::string> names = filter.empty() ? spinv::list_names(s.particles()) : filter;
    for (const auto& n : names) {
      if (spinv::invariant(n).particles != s.particles()) {
        throw BadInput(n + " is a " + std::to_string(spinv::invariant(n).particles) + "-particle invariant but '" +
                       c.states[i] + "' has " + std::to_string(s.particles()) + " particles");
      }
    }
    spinv::Evaluator ev(s);
    Json results = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& n : names) {
      const auto& inv = spinv::invariant(n);
      const cplx v = ev(n);
      const std::string scope = inv.scope.to_string();
      results.push_back({{"name", n},
                         {"value", json_cplx(v)},
                         {"abs", std::abs(v)},
                         {"bidegree", {inv.bidegree.first, inv.bidegree.second}},
                         {"scope_class", scope}});
      rows.push_back({n, sig6(v), sig6(std::abs(v)), bidegree_text(inv.bidegree), scope});
      csv += csv_field(c.states[i]) + "," + csv_field(n) + "," + sig6(v.real()) + "," + sig6(v.imag()) + "," +
             sig6(std::abs(v)) + "," + std::to_string(inv.bidegree.first) + "," +
             std::to_string(inv.bidegree.second) + "," + csv_field(scope) + "\n";
    }
    doc["states"].push_back({{"path", c.states[i]}, {"particles", s.particles()}, {"results", std::move(results)}});
    if (states.size() > 1) table += (i ? "\n" : "") + c.states[i] + "\n";
    table += render_table({"name", "value", "|value|", "bidegree", "scope_class"}, rows);
  }
  emit(c, c.format == Format::Json ? dump(doc) : c.format == Format::Csv ? csv : table);
  return kOk;
}

// ------------------------------------------------------------------ check

int cmd_check(const Common& c, const std::string& suite) {
  spinv::SuiteOptions opts;
  opts.seed = c.seed;
  opts.tol = c.tol;
  std::vector<spinv::SuiteReport> reports;
  if (suite == "all") {
    reports = spinv::run_all_suites(opts);
  } else {
    reports.push_back(spinv::run_suite(suite, opts));
  }
  bool ok = true;
  Json doc{{"schema", 1}, {"command", "check"}, {"seed", c.seed}, {"suites", Json::array()}};
  std::string csv = "suite,name,origin,passed,value,tolerance,detail\n";
  std::ostringstream table;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    Json checks = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& k : r.checks) {
      const std::string origin(spinv::check_origin_name(k.origin));
      checks.push_back({{"name", k.name},
                        {"origin", origin},
                        {"passed", k.passed},
                        {"value", k.value},
                        {"tolerance", k.tolerance},
                        {"detail", k.detail}});
      rows.push_back({k.passed ? "pass" : "FAIL", k.name, origin, sig6(k.value), sig6(k.tolerance), k.detail});
      csv += csv_field(r.suite) + "," + csv_field(k.name) + "," + origin + "," + (k.passed ? "true" : "false") + "," +
             sig6(k.value) + "," + sig6(k.tolerance) + "," + csv_field(k.detail) + "\n";
    }
    doc["suites"].push_back({{"suite", r.suite},
                             {"passed", r.passed()},
                             {"checks_run", r.checks.size()},
                             {"failures", r.failures()},
                             {"checks", std::move(checks)}});
    table << "suite " << r.suite << "\n"
          << render_table({"status", "check", "origin", "value", "tolerance", "detail"}, rows) << r.checks.size()
          << " checks, " << r.failures() << " failed, " << sig6(r.seconds) << " s\n\n";
  }
  emit(c, c.format == Format::Json ? dump(doc) : c.format == Format::Csv ? csv : table.str());
  return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- balance

std::string index_text(std::size_t flat, int n) {
  std::string s;
  for (int j : spinv::multi_index(flat, n)) s += static_cast<char>('0' + j);
  return s;
}

std::string weight_text(const std::vector<int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::string(w[i] > 0 ? "+" : "-") + "1";
  return s + ")";
}

int cmd_balance(const Common& c, int frames) {
  const auto states = load_states(c, 1);
  Json doc{{"schema", 1}, {"command", "balance"}, {"seed", c.seed}, {"states", Json::array()}};
  std::ostringstream table;
  std::string csv = "state,balanced,affinely_balanced,support_size,frames,unbalanced_frames,affinely_unbalanced_frames\n";
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& s = states[i];
    const auto w = spinv::weight_vectors(s);
    const bool bal = spinv::is_balanced(w);
    const bool aff = spinv::is_affinely_balanced(w);
    const auto sweep = spinv::frame_sweep(s, frames, c.seed);
    Json support = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < w.support.size(); ++k) {
      support.push_back({{"index", index_text(w.support[k], s.particles())}, {"weight", w.weights[k]}});
      rows.push_back({index_text(w.support[k], s.particles()), weight_text(w.weights[k])});
    }
    doc["states"].push_back({{"path", c.states[i]},
                             {"particles", s.particles()},
                             {"support", std::move(support)},
                             {"balanced", bal},
                             {"affinely_balanced", aff},
                             {"frame_sweep",
                              {{"frames", sweep.frames},
                               {"unbalanced", sweep.unbalanced},
                               {"affinely_unbalanced", sweep.affinely_unbalanced},
                               {"note", "randomized semi-decision over local frames"}}}});
    csv += csv_field(c.states[i]) + "," + (bal ? "yes" : "no") + "," + (aff ? "yes" : "no") + "," +
           std::to_string(w.support.size()) + "," + std::to_string(sweep.frames) + "," +
           std::to_string(sweep.unbalanced) + "," + std::to_string(sweep.affinely_unbalanced) + "\n";
    if (i) table << "\n";
    table << c.states[i] << "\n"
          << render_table({"support", "weight"}, rows) << "balanced: " << (bal ? "yes" : "no")
          << ", affinely balanced: " << (aff ? "yes" : "no") << "\n"
          << "frame sweep (randomized semi-decision): " << sweep.unbalanced << "/" << sweep.frames
          << " frames unbalanced, " << sweep.affinely_unbalanced << "/" << sweep.frames
          << " frames affinely unbalanced\n";
  }
  emit(c, c.format == Format::Json ? dump(doc) : c.format == Format::Csv ? csv : table.str());
  return kOk;
}

// --------------------------------------------------------------- contract

int cmd_contract(const Common& c, const std::string& text) {
  const spinv::ContractionPattern p = spinv::parse_pattern(text);
  const auto states = load_states(c, 1);
  const auto& s = states.front();
  if (s.particles() != p.particles) {
    throw BadInput("pattern has " + std::to_string(p.particles) + " slots per tensor but the state has " +
                   std::to_string(s.particles()) + " particles");
  }
  const spinv::EvaluationPlan plan = spinv::plan(p);
  const cplx v = spinv::execute(plan, s);
  const auto b = p.bidegree();
  Json doc{{"schema", 1},
           {"command", "contract"},
           {"pattern", p.to_string()},
           {"value", json_cplx(v)},
           {"abs", std::abs(v)},
           {"bidegree", {b.first, b.second}},
           {"plan_cost", plan.flops},
           {"naive_cost", plan.naive_flops},
           {"steps", plan.steps.size()}};
  std::ostringstream table;
  table << "pattern   " << p.to_string() << "\n"
        << "value     " << sig6(v) << "\n"
        << "|value|   " << sig6(std::abs(v)) << "\n"
        << "bidegree  " << bidegree_text(b) << "\n"
        << "plan cost " << sig6(plan.flops) << " (naive " << sig6(plan.naive_flops) << ")\n"
        << plan.describe();
  const std::string csv = "re,im,abs,k,l,plan_cost,naive_cost\n" + sig6(v.real()) + "," + sig6(v.imag()) + "," +
                          sig6(std::abs(v)) + "," + std::to_string(b.first) + "," + std::to_string(b.second) + "," +
                          sig6(plan.flops) + "," + sig6(plan.naive_flops) + "\n";
  emit(c, c.format == Format::Json ? dump(doc) : c.format == Format::Csv ? csv : table.str());
  return kOk;
}

// ------------------------------------------------------------------- rank

int cmd_rank(const Common& c, const std::string& family, int n_states) {
  std::vector<std::string> names;
  std::string label;
  if (!family.empty()) {
    try {
      names = spinv::family(family);
    } catch (const std::out_of_range& e) {
      throw BadInput(e.what());
    }
    label = family;
  } else {
    names = split_csv(c.names);
    if (names.empty()) throw BadInput("rank needs --family or --names");
    for (const auto& n : names) spinv::invariant(n);
    label = "custom";
  }
  const spinv::RankReport r = spinv::numeric_rank(names, n_states, c.seed, c.tol.value_or(1e-8));
  Json doc{{"schema", 1},
           {"command", "rank"},
           {"family", label},
           {"polynomials", names.size()},
           {"states", r.n_states},
           {"seed", c.seed},
           {"rank", r.rank},
           {"smallest_retained", r.smallest_retained},
           {"largest_discarded", r.largest_discarded},
           {"singular_values", r.singular_values}};
  std::ostringstream table;
  table << "family             " << label << " (" << names.size() << " polynomials, " << r.n_states
        << " states)\n"
        << "rank               " << r.rank << "\n"
        << "smallest retained  " << sig6(r.smallest_retained) << "\n"
        << "largest discarded  " << sig6(r.largest_discarded) << "\n";
  const std::string csv = "family,polynomials,states,rank,smallest_retained,largest_discarded\n" + label + "," +
                          std::to_string(names.size()) + "," + std::to_string(r.n_states) + "," +
                          std::to_string(r.rank) + "," + sig6(r.smallest_retained) + "," +
                          sig6(r.largest_discarded) + "\n";
  emit(c, c.format == Format::Json ? dump(doc) : c.format == Format::Csv ? csv : table.str());
  return kOk;
}

// ----------------------------------------------------------------- evolve

struct EvolveArgs {
  double mass = 1.0;
  double charge = 0.0;
  double coupling = 0.0;
  std::vector<double> momentum{0.0, 0.0, 0.0};
  std::vector<double> potential{0.0, 0.0, 0.0, 0.0};
  double pseudoscalar = 0.0;
  double t0 = 0.0;
  double t1 = 1.0;
  double dt = 1e-3;
  int stride = 1;
};

// A two-particle state, or two single-particle states placed in the
// columns for Bob's basis spinors 0 and 1.
spinv::StateTensor evolve_input(const std::vector<spinv::StateTensor>& s) {
  if (s.size() == 1 && s[0].particles() == 2) return s[0];
  if (s.size() == 2 && s[0].particles() == 1 && s[1].particles() == 1) {
    spinv::Mat4 m = spinv::Mat4::Zero();
    for (int j = 0; j < 4; ++j) {
      m(j, 0) = s[0][static_cast<std::size_t>(j)];
      m(j, 1) = s[1][static_cast<std::size_t>(j)];
    }
    return spinv::StateTensor::from_matrix(m);
  }
  throw BadInput("evolve takes one two-particle state or two single-particle states");
}

int cmd_evolve(const Common& c, const EvolveArgs& a) {
  if (a.stride < 1) throw BadInput("--stride must be positive");
  const spinv::StateTensor s0 = evolve_input(load_states(c, 1));
  spinv::EvolutionParams p;
  p.p = {a.momentum[0], a.momentum[1], a.momentum[2]};
  p.m = a.mass;
  p.q = a.charge;
  p.g = a.coupling;
  for (int mu = 0; mu < 4; ++mu) p.A[static_cast<std::size_t>(mu)] = spinv::constant_potential(a.potential[static_cast<std::size_t>(mu)]);
  p.phi = spinv::constant_potential(a.pseudoscalar);
  p.t0 = a.t0;
  p.t1 = a.t1;
  p.dt = a.dt;
  const std::vector<double> times = spinv::time_grid(p);

  const spinv::Mat4& cm = spinv::special(spinv::Special::C);
  const spinv::Mat4& c5 = spinv::special(spinv::Special::C5);
  const spinv::FormKind kinds[] = {spinv::FormKind::C, spinv::FormKind::C5, spinv::FormKind::G0,
                                   spinv::FormKind::G05};
  std::string csv = "t,C_re,C_im,C5_re,C5_im,G0_re,G0_im,G05_re,G05_im,abs_I1,abs_I2\n";
  Json rows = Json::array();
  std::ostringstream table;
  table << "t          |C|        |C5|       |G0|       |G05|      |I1|       |I2|\n";
  spinv::Mat4 psi = s0.as_matrix();
  for (std::size_t n = 0; n < times.size(); ++n) {
    if (n > 0) psi = spinv::rk4_step_matrix(p, times[n - 1], p.dt) * psi;
    if (n % static_cast<std::size_t>(a.stride) != 0 && n + 1 != times.size()) continue;
    const spinv::Spinor x = psi.col(0);
    const spinv::Spinor y = psi.col(1);
    cplx f[4];
    for (int k = 0; k < 4; ++k) f[k] = spinv::form(kinds[k], x, y);
    const double i1 = std::abs(0.5 * (psi.transpose() * cm * psi * cm).trace());
    const double i2 = std::abs(0.5 * (psi.transpose() * c5 * psi * c5).trace());
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.10g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", times[n],
                  f[0].real(), f[0].imag(), f[1].real(), f[1].imag(), f[2].real(), f[2].imag(), f[3].real(),
                  f[3].imag(), i1, i2);
    csv += buf;
    rows.push_back({{"t", times[n]},
                    {"C", json_cplx(f[0])},
                    {"C5", json_cplx(f[1])},
                    {"G0", json_cplx(f[2])},
                    {"G05", json_cplx(f[3])},
                    {"abs_I1", i1},
                    {"abs_I2", i2}});
    std::snprintf(buf, sizeof buf, "%-10s %-10s %-10s %-10s %-10s %-10s %-10s\n", sig6(times[n]).c_str(),
                  sig6(std::abs(f[0])).c_str(), sig6(std::abs(f[1])).c_str(), sig6(std::abs(f[2])).c_str(),
                  sig6(std::abs(f[3])).c_str(), sig6(i1).c_str(), sig6(i2).c_str());
    table << buf;
  }
  Json doc{{"schema", 1}, {"command", "evolve"}, {"rows", std::move(rows)}};
  emit(c, c.format == Format::Json ? dump(doc) : c.format == Format::Table ? table.str() : csv);
  return kOk;
}

void add_common(CLI::App* sub, Common& c, bool states, bool names) {
  if (states) sub->add_option("--state", c.states, "State file (JSON); repeatable");
  if (names) sub->add_option("--names", c.names, "Comma-separated invariant names");
  sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  sub->add_option("--tol", c.tol, "Tolerance override");
  sub->add_option("--format", c.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}},
          CLI::ignore_case));
  sub->add_option("--out", c.out, "Write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lorentz invariant entanglement indicators for Dirac spinor states"};
  app.require_subcommand(1);
  Common common;

  auto* eval = app.add_subcommand("eval", "Evaluate named invariants on state files");
  add_common(eval, common, true, true);

  std::string suite;
  auto* check = app.add_subcommand("check", "Run a property suite");
  check->add_option("suite", suite, "algebra | invariance | examples | reductions | dependencies | dynamics | all")
      ->required();
  add_common(check, common, false, false);

  int frames = 50;
  auto* balance = app.add_subcommand("balance", "Weight vectors and balancedness verdicts");
  add_common(balance, common, true, false);
  balance->add_option("--frames", frames, "Random frames in the sweep")->capture_default_str();

  std::string pattern;
  auto* contract = app.add_subcommand("contract", "Evaluate a contraction pattern on a state");
  contract->add_option("pattern", pattern, "Pattern text, e.g. \"C[i k] C[j l] Psi[i j] Psi[k l]\"")->required();
  add_common(contract, common, true, false);

  std::string family;
  int n_states = 0;
  auto* rank = app.add_subcommand("rank", "Numeric rank of a polynomial family");
  add_common(rank, common, false, true);
  rank->add_option("--family", family, "2p-22 | 2p-31 | 3p-22-selected | 3p-31");
  rank->add_option("--states", n_states, "Random states (0: three per polynomial)")->capture_default_str();

  EvolveArgs ev;
  auto* evolve = app.add_subcommand("evolve", "Evolve particle A and print forms and |I1|, |I2|");
  add_common(evolve, common, true, false);
  evolve->add_option("--mass", ev.mass, "Mass m >= 0")->capture_default_str();
  evolve->add_option("--charge", ev.charge, "Charge q")->capture_default_str();
  evolve->add_option("--coupling", ev.coupling, "Pseudoscalar coupling g")->capture_default_str();
  evolve->add_option("--momentum", ev.momentum, "px,py,pz")->delimiter(',')->expected(3);
  evolve->add_option("--potential", ev.potential, "Constant A0,A1,A2,A3")->delimiter(',')->expected(4);
  evolve->add_option("--pseudoscalar", ev.pseudoscalar, "Constant pseudoscalar field")->capture_default_str();
  evolve->add_option("--t0", ev.t0, "Start time")->capture_default_str();
  evolve->add_option("--t1", ev.t1, "End time")->capture_default_str();
  evolve->add_option("--dt", ev.dt, "RK4 step")->capture_default_str();
  evolve->add_option("--stride", ev.stride, "Print every n-th grid point")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(common);
    if (*check) return cmd_check(common, suite);
    if (*balance) return cmd_balance(common, frames);
    if (*contract) return cmd_contract(common, pattern);
    if (*rank) return cmd_rank(common, family, n_states);
    if (*evolve) return cmd_evolve(common, ev);
  } catch (const spinv::StateFormatError& e) {
    std::cerr << "error: malformed state file: " << e.what() << "\n";
    return kBadStateFile;
  } catch (const spinv::UnknownInvariant& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnknownName;
  } catch (const spinv::PatternError& e) {
    std::cerr << "error: invalid pattern: " << e.what() << "\n";
    return kPatternError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kUsage;
}
