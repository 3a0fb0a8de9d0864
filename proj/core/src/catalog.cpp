#include "spinor_inv/catalog.hpp"

#include "spinor_inv/expansions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace spinv {
namespace {

Expr tr(std::string_view tokens) { return Expr::trace(tokens); }
Expr pat(std::string_view text) { return Expr::pattern(text); }
Expr ref(std::string name) { return Expr::named(std::move(name)); }

constexpr cplx kHalf{0.5, 0.0};

Scope all_particles() { return {ScopeKind::AllParticles, {}}; }
Scope not_indicator() { return {ScopeKind::NotIndicator, {}}; }
Scope subset(std::vector<int> obs) { return {ScopeKind::Subset, std::move(obs)}; }

struct Registry {
  std::vector<NamedInvariant> items;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::string> names;

  void add(std::string name, int particles, std::string description, Expr primary, Scope scope,
           std::vector<AltForm> alts = {}) {
    NamedInvariant inv;
    inv.name = name;
    inv.particles = particles;
    inv.description = std::move(description);
    inv.bidegree = primary.bidegree([this](const std::string& n) {
      auto it = index.find(n);
      if (it == index.end()) throw std::logic_error("forward reference to " + n);
      return items[it->second].bidegree;
    });
    inv.primary = std::move(primary);
    inv.alt_forms = std::move(alts);
    inv.scope = std::move(scope);
    index.emplace(name, items.size());
    names.push_back(name);
    items.push_back(std::move(inv));
  }
};

const std::array<std::string, 4> kI = {"I1", "I2", "I2A", "I2B"};
const std::array<std::string, 4> kN = {"N1", "N2", "N3", "N4"};

void add_two_particle(Registry& r) {
  const Scope all = all_particles();
  r.add("I1", 2, "C-C bilinear contraction; reduces to the concurrence", kHalf * tr("PT C P C"), all);
  r.add("I2", 2, "C5-C5 bilinear contraction", kHalf * tr("PT C5 P C5"), all);
  r.add("I2A", 2, "C on A, C5 on B bilinear contraction", kHalf * tr("PT C P C5"), all);
  r.add("I2B", 2, "C5 on A, C on B bilinear contraction", kHalf * tr("PT C5 P C"), all);

  r.add("N1", 2, "g0-g0 sesquilinear norm", tr("PT g0 Ps g0"), not_indicator());
  r.add("N2", 2, "g05 on A, g0 on B sesquilinear form", tr("PT g05 Ps g0"), not_indicator());
  r.add("N3", 2, "g0 on A, g05 on B sesquilinear form", tr("PT g0 Ps g05"), not_indicator());
  r.add("N4", 2, "g05-g05 sesquilinear form", tr("PT g05 Ps g05"), not_indicator());

  for (const auto& a : kI) {
    r.add("|" + a + "|^2", 2, "squared modulus of " + a, ref(a).abs2(), all);
  }
  for (const auto& a : kI) {
    for (const auto& b : kI) {
      if (a == b) continue;
      r.add(a + "*conj(" + b + ")", 2, "product of " + a + " and the conjugate of " + b,
            ref(a) * ref(b).conj(), all);
    }
  }

  const Expr i1 = ref("I1"), i2 = ref("I2"), ia = ref("I2A"), ib = ref("I2B");
  auto alt = [](std::string label, Expr e, FormStatus s = FormStatus::Printed) {
    return AltForm{std::move(label), std::move(e), s};
  };

  r.add("R1", 2, "C on both observers, g0 mixing", kHalf * tr("PT C P g0 Pd C Ps g0"), all,
        {alt("g05 form", kHalf * tr("PT C P g05 Pd C Ps g05") - ia.abs2() + i1.abs2())});
  r.add("R2", 2, "C5 then C with g0 mixing", kHalf * tr("PT C5 P g0 Pd C Ps g0"), all,
        {alt("g05 form", kHalf * tr("PT C5 P g05 Pd C Ps g05") + ib * i1.conj() - i2 * ia.conj())});
  r.add("conj(R2)", 2, "complex conjugate of R2", ref("R2").conj(), all);
  r.add("R3", 2, "C5 on both sides with g0 mixing", kHalf * tr("PT C5 P g0 Pd C5 Ps g0"), all,
        {alt("g05 form", kHalf * tr("PT C5 P g05 Pd C5 Ps g05") + ib.abs2() - i2.abs2())});
  r.add("R4", 2, "R1 with the two observers exchanged", kHalf * tr("P C PT g0 Ps C Pd g0"), all,
        {alt("g05 form", kHalf * tr("P C PT g05 Ps C Pd g05") - ib.abs2() + i1.abs2())});
  r.add("R5", 2, "R2 with the two observers exchanged", kHalf * tr("P C5 PT g0 Ps C Pd g0"), all,
        {alt("g05 form", kHalf * tr("P C5 PT g05 Ps C Pd g05") + ia * i1.conj() - i2 * ib.conj())});
  r.add("conj(R5)", 2, "complex conjugate of R5", ref("R5").conj(), all);
  r.add("R6", 2, "R3 with the two observers exchanged", kHalf * tr("P C5 PT g0 Ps C5 Pd g0"), all,
        {alt("g05 form", kHalf * tr("P C5 PT g05 Ps C5 Pd g05") + ia.abs2() - i2.abs2())});

  const Expr n1 = ref("N1"), n2 = ref("N2"), n3 = ref("N3"), n4 = ref("N4");
  const Expr r1 = ref("R1"), r3 = ref("R3"), r4 = ref("R4"), r6 = ref("R6");
  const Expr two = Expr::constant(2.0);
  const Expr t1_head = tr("PT g05 Ps g05 PT g05 Ps g05") - n4 * n4 + two * r3 - two * r1 - two * r4 + two * r6;
  r.add("T1", 2, "sesquilinear quartic built from g0 only", tr("PT g0 Ps g0 PT g0 Ps g0") - n1 * n1, all,
        {alt("g05 on A", -tr("PT g05 Ps g0 PT g05 Ps g0") + n2 * n2 + two * r3 - two * r1),
         alt("g05 on B", -tr("PT g0 Ps g05 PT g0 Ps g05") + n3 * n3 + two * r6 - two * r4),
         alt("g05 on both", t1_head - ib.abs2() + i2.abs2() + two * i1.abs2() - two * ia.abs2()),
         alt("g05 on both", t1_head + two * i1.abs2() + two * i2.abs2() - two * ia.abs2() - two * ib.abs2(),
             FormStatus::Reconciled)});
  r.add("T2", 2, "pure imaginary quartic mixing g0 and g05",
        tr("PT g05 Ps g05 PT g0 Ps g0") - tr("Pd g05 P g05 Pd g0 P g0"), all,
        {alt("crossed g05", -tr("PT g05 Ps g0 PT g0 Ps g05") + tr("Pd g05 P g0 Pd g0 P g05"))});
  r.add("N1N4mN2N3", 2, "real quartic N1 N4 - N2 N3", n1 * n4 - n2 * n3, all);

  r.add("Q1", 2, "bidegree (3,1) trace built on I1 and N1", tr("PT C P C PT g0 Ps g0") - i1 * n1, all,
        {alt("C5 C5 form", -tr("PT C5 P C5 PT g05 Ps g05") + i2 * n4),
         alt("C C5 form", -tr("PT C P C5 PT g0 Ps g05") + ia * n3),
         alt("C5 C form", tr("PT C5 P C PT g05 Ps g0") - ib * n2)});
  r.add("Q2", 2, "bidegree (3,1) trace built on I2 and N1", tr("PT C5 P C5 PT g0 Ps g0") - i2 * n1, all,
        {alt("C C form", -tr("PT C P C PT g05 Ps g05") + i1 * n4),
         alt("C C5 form", tr("PT C P C5 PT g05 Ps g0") - ia * n2),
         alt("C5 C form", -tr("PT C5 P C PT g0 Ps g05") + ib * n3)});
  r.add("Q3", 2, "bidegree (3,1) trace built on I2B and N1", tr("PT C5 P C PT g0 Ps g0") - ib * n1, all,
        {alt("C C form", tr("PT C P C PT g05 Ps g0") - i1 * n2),
         alt("C5 C5 form", -tr("PT C5 P C5 PT g0 Ps g05") + i2 * n3),
         alt("C C5 form", -tr("PT C P C5 PT g05 Ps g05") + ia * n4)});
  r.add("Q4", 2, "bidegree (3,1) trace built on I2A and N1", tr("PT C P C5 PT g0 Ps g0") - ia * n1, all,
        {alt("C C form", -tr("PT C P C PT g0 Ps g05") + i1 * n3),
         alt("C5 C5 form", tr("PT C5 P C5 PT g05 Ps g0") - i2 * n2),
         alt("C5 C form", -tr("PT C5 P C PT g05 Ps g0") + ib * n4),
         alt("C5 C form", -tr("PT C5 P C PT g05 Ps g05") + ib * n4, FormStatus::Reconciled)});

  for (const auto& a : kI) {
    for (const auto& b : kN) {
      r.add(a + "*" + b, 2, "product of " + a + " and " + b, ref(a) * ref(b), all);
    }
  }
}

// Slot letters of the V family: A pairs (l i), B (m j), C (n k).
std::string v_pattern(bool a5, bool b5, bool c5) {
  auto g = [](bool odd) { return odd ? std::string("g05") : std::string("g0"); };
  return g(a5) + "[l i] " + g(b5) + "[m j] " + g(c5) + "[n k] Psi*[i j k] Psi[l m n]";
}

// Per-observer lab types of the (3,1) members, by member number 1..8.
// true selects C5 with g05, false C with g0.
constexpr std::array<std::array<bool, 3>, 8> kLongTypes = {{
    {false, false, false},
    {false, false, true},
    {true, false, false},
    {false, true, false},
    {true, true, false},
    {false, true, true},
    {true, false, true},
    {true, true, true},
}};

// For D the printed numbering swaps members 5 and 7.
constexpr std::array<int, 8> kDTypeIndex = {0, 1, 2, 3, 6, 5, 4, 7};

struct LongShape {
  char family;
  std::array<const char*, 3> c_slots;  // per observer
  std::array<const char*, 3> g_slots;
};

const std::array<LongShape, 4> kLongShapes = {{
    {'X', {"i l", "j p", "n q"}, {"o r", "m s", "k t"}},
    {'Z', {"i l", "j m", "n q"}, {"o r", "p s", "k t"}},
    {'B', {"i o", "j m", "k n"}, {"l r", "p s", "q t"}},
    {'D', {"i l", "j p", "k n"}, {"o r", "m s", "q t"}},
}};

std::string long_pattern(const LongShape& shape, const std::array<bool, 3>& type) {
  std::string out;
  for (int o = 0; o < 3; ++o) {
    out += std::string(type[o] ? "C5[" : "C[") + shape.c_slots[o] + "] ";
  }
  for (int o = 0; o < 3; ++o) {
    out += std::string(type[o] ? "g05[" : "g0[") + shape.g_slots[o] + "] ";
  }
  return out + "Psi[i j k] Psi[l m n] Psi[o p q] Psi*[r s t]";
}

void add_three_particle(Registry& r) {
  const std::array<std::array<bool, 3>, 8> vtypes = {{
      {false, false, false},
      {true, false, false},
      {false, true, false},
      {false, false, true},
      {true, true, false},
      {true, false, true},
      {false, true, true},
      {true, true, true},
  }};
  for (int k = 0; k < 8; ++k) {
    const auto& t = vtypes[k];
    r.add("V" + std::to_string(k + 1), 3, "sesquilinear g0/g05 contraction of all three observers",
          pat(v_pattern(t[0], t[1], t[2])), not_indicator());
  }

  const Expr v1sq = ref("V1") * ref("V1");
  struct Tong {
    const char* name;
    const char* text;
    bool subtract_v1;
    std::vector<int> scope;
    const char* description;
  };
  const std::vector<Tong> tong = {
      {"B03_1", "g0[i j] g0[m k] g0[n l] Psi[j k l] Psi*[q m n] g0[q r] g0[p s] g0[u t] Psi[r s t] Psi*[i p u]",
       true, {0}, "g0-only quartic exchanging A between copies, minus V1^2"},
      {"D03_1", "g0[i j] g0[m k] g0[n l] Psi[j k l] Psi*[i p n] g0[q r] g0[p s] g0[u t] Psi[r s t] Psi*[q m u]",
       true, {1}, "g0-only quartic exchanging B between copies, minus V1^2"},
      {"Z03_1", "g0[i j] g0[m k] g0[n l] Psi[j k l] Psi*[i m u] g0[q r] g0[p s] g0[u t] Psi[r s t] Psi*[q p n]",
       true, {2}, "g0-only quartic exchanging C between copies, minus V1^2"},
      {"B21_1", "g0[i j] C[m k] C[n l] Psi[j k l] Psi[q m n] g0[q r] C[p s] C[u t] Psi*[r s t] Psi*[i p u]",
       false, {1, 2}, "C pairings on B and C, g0 on A"},
      {"D21_1", "C[i j] g0[m k] C[n l] Psi[j k l] Psi[i p n] C[q r] g0[p s] C[u t] Psi*[r s t] Psi*[q m u]",
       false, {0, 2}, "C pairings on A and C, g0 on B"},
      {"Z21_1", "C[i j] C[m k] g0[n l] Psi[j k l] Psi[i m u] C[q r] C[p s] g0[u t] Psi*[r s t] Psi*[q p n]",
       false, {0, 1}, "C pairings on A and B, g0 on C"},
      {"B12_1", "C[i j] g0[m k] g0[n l] Psi*[j k l] Psi[q m n] C[q r] g0[p s] g0[u t] Psi[r s t] Psi*[i p u]",
       false, {0}, "C pairing on A, g0 on B and C"},
      {"D12_1", "g0[i j] C[m k] g0[n l] Psi*[j k l] Psi[i p n] g0[q r] C[p s] g0[u t] Psi[r s t] Psi*[q m u]",
       false, {1}, "C pairing on B, g0 on A and C"},
      {"Z12_1", "g0[i j] g0[m k] C[n l] Psi*[j k l] Psi[i m u] g0[q r] g0[p s] C[u t] Psi[r s t] Psi*[q p n]",
       false, {2}, "C pairing on C, g0 on A and B"},
      {"X12A_1", "g0[i j] C[m k] g0[n l] Psi*[j k l] Psi[i p t] g0[q r] C[p s] g0[u t] Psi[r s n] Psi*[q m u]",
       false, {1}, "crossed variant with the C pairing on B"},
      {"X12B_1", "C[i j] g0[m k] g0[n l] Psi[j k l] Psi[i p t] C[q r] g0[p s] g0[u t] Psi*[r s n] Psi*[q m u]",
       false, {0}, "crossed variant with the C pairing on A"},
      {"X12C_1", "g0[i j] g0[m k] C[n l] Psi[j k l] Psi*[i p t] g0[q r] g0[p s] C[u t] Psi[r s n] Psi*[q m u]",
       false, {2}, "crossed variant with the C pairing on C"},
  };
  for (const auto& t : tong) {
    Expr e = pat(t.text);
    if (t.subtract_v1) e = e - v1sq;
    r.add(t.name, 3, t.description, e, subset(t.scope));
  }

  struct Diff {
    int a, b, c, d;
    std::vector<int> scope;
  };
  const std::vector<Diff> diffs = {
      {1, 8, 3, 6, {1}},    {2, 7, 3, 6, {2}},    {2, 7, 4, 5, {1}},
      {1, 7, 3, 4, {1, 2}}, {1, 5, 2, 3, {0, 1}}, {1, 6, 2, 4, {0, 2}},
      {2, 8, 5, 6, {1, 2}}, {4, 8, 6, 7, {0, 1}}, {3, 8, 5, 7, {0, 2}},
  };
  for (const auto& d : diffs) {
    auto v = [](int k) { return "V" + std::to_string(k); };
    const std::string name = v(d.a) + v(d.b) + "m" + v(d.c) + v(d.d);
    r.add(name, 3, "difference of V products " + v(d.a) + v(d.b) + " - " + v(d.c) + v(d.d),
          ref(v(d.a)) * ref(v(d.b)) - ref(v(d.c)) * ref(v(d.d)), subset(d.scope));
  }

  for (const auto& shape : kLongShapes) {
    for (int k = 0; k < 8; ++k) {
      const int type = shape.family == 'D' ? kDTypeIndex[k] : k;
      const std::string name = std::string(1, shape.family) + std::to_string(k + 1);
      std::vector<AltForm> alts;
      if (name == "Z7") {
        alts.push_back({"printed index string",
                        pat("C5[i l] C5[j m] C[n q] g05[o r] g0[p s] g05[k t] "
                            "Psi[i j k] Psi[l m n] Psi[o p q] Psi*[r s t]"),
                        FormStatus::Printed});
      }
      r.add(name, 3, "bidegree (3,1) contraction, family " + std::string(1, shape.family),
            pat(long_pattern(shape, kLongTypes[type])), all_particles(), std::move(alts));
    }
  }

  const Expr v1 = ref("V1");
  r.add("K1", 3, "g0-only sextic of Kempe type, minus V1^3",
        pat("g0[i l] g0[j s] g0[k z] g0[m p] g0[n w] g0[o x] g0[q t] g0[r u] g0[v y] "
            "Psi[i j k] Psi*[l m n] Psi[o p q] Psi*[r s t] Psi[u v w] Psi*[x y z]") -
            v1 * v1 * v1,
        subset({}));
  r.add("W1", 3, "sextic with C pairings on every observer; nonzero on the W state",
        pat("C[i l] C[j m] C[k q] g0[n t] g0[o u] g0[p s] C[r x] C[w z] C[v y] "
            "Psi*[i j k] Psi*[l m n] Psi*[o p q] Psi[r s t] Psi[u v w] Psi[x y z]"),
        all_particles());
}

const Registry& registry() {
  static const Registry r = [] {
    Registry reg;
    add_two_particle(reg);
    add_three_particle(reg);
    return reg;
  }();
  return r;
}

LinearRelation parse_relation(std::string text) {
  LinearRelation rel;
  rel.label = text;
  std::size_t i = 0;
  int sign = 1;
  while (i < text.size()) {
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != '+' && text[j] != '-') ++j;
    rel.terms.emplace_back(sign, text.substr(i, j - i));
    sign = 1;
    i = j;
  }
  return rel;
}

std::vector<LinearRelation> parse_relations(const std::vector<std::string>& texts) {
  std::vector<LinearRelation> out;
  for (const auto& t : texts) out.push_back(parse_relation(t));
  return out;
}

}  // namespace

std::string Scope::to_string() const {
  switch (kind) {
    case ScopeKind::AllParticles: return "all_particles";
    case ScopeKind::NotIndicator: return "not_indicator";
    case ScopeKind::Subset: {
      std::string out = "subset(";
      for (std::size_t i = 0; i < observers.size(); ++i) {
        if (i) out += ",";
        out += static_cast<char>('A' + observers[i]);
      }
      return out + ")";
    }
  }
  return "";
}

bool Scope::forces_zero(int observer, int particles) const {
  switch (kind) {
    case ScopeKind::AllParticles: return observer >= 0 && observer < particles;
    case ScopeKind::NotIndicator: return false;
    case ScopeKind::Subset:
      return std::find(observers.begin(), observers.end(), observer) != observers.end();
  }
  return false;
}

std::string_view form_status_name(FormStatus s) {
  return s == FormStatus::Printed ? "printed" : "reconciled";
}

UnknownInvariant::UnknownInvariant(std::string_view name)
    : std::out_of_range([&] {
        std::string msg = "unknown invariant '" + std::string(name) + "'; valid names:";
        for (const auto& n : registry().names) msg += " " + n;
        return msg;
      }()),
      name_(name) {}

const NamedInvariant& invariant(std::string_view name) {
  const auto& r = registry();
  auto it = r.index.find(std::string(name));
  if (it == r.index.end()) throw UnknownInvariant(name);
  return r.items[it->second];
}

bool is_known_invariant(std::string_view name) {
  return registry().index.count(std::string(name)) > 0;
}

const std::vector<std::string>& all_invariant_names() { return registry().names; }

std::vector<std::string> list_names(int particles, std::optional<std::pair<int, int>> bidegree) {
  std::vector<std::string> out;
  for (const auto& inv : registry().items) {
    if (inv.particles != particles) continue;
    if (bidegree && inv.bidegree != *bidegree) continue;
    out.push_back(inv.name);
  }
  return out;
}

cplx Evaluator::operator()(const std::string& name) {
  if (auto it = memo_.find(name); it != memo_.end()) return it->second;
  const NamedInvariant& inv = invariant(name);
  if (inv.particles != s_->particles()) {
    throw std::invalid_argument(name + " needs a " + std::to_string(inv.particles) +
                                "-particle state, got " + std::to_string(s_->particles()));
  }
  const cplx v = eval(inv.primary);
  memo_.emplace(name, v);
  return v;
}

cplx Evaluator::eval(const Expr& e) {
  return e.eval(*s_, [this](const std::string& n) { return (*this)(n); });
}

cplx eval_named(std::string_view name, const StateTensor& s) {
  Evaluator ev(s);
  return ev(std::string(name));
}

double relative_difference(cplx a, cplx b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::vector<FormResidual> alt_forms_report(std::string_view name, const StateTensor& s) {
  const NamedInvariant& inv = invariant(name);
  Evaluator ev(s);
  const cplx primary = ev(inv.name);
  std::vector<FormResidual> out;
  for (const auto& alt : inv.alt_forms) {
    const cplx v = ev.eval(alt.expr);
    out.push_back({alt.label, alt.status, v, relative_difference(primary, v)});
  }
  if (has_expansion(inv.name)) {
    const cplx v = expansion_oracle(inv.name, s);
    out.push_back({"expansion", FormStatus::Printed, v, relative_difference(primary, v)});
  }
  return out;
}

double alt_forms_residual(std::string_view name, const StateTensor& s) {
  const auto report = alt_forms_report(name, s);
  if (report.empty()) throw std::invalid_argument(std::string(name) + " has a single form");
  double worst = 0.0;
  for (const auto& r : report) {
    if (r.status == FormStatus::Printed) worst = std::max(worst, r.residual);
  }
  return worst;
}

const std::vector<std::string>& family_ids() {
  static const std::vector<std::string> ids = {"2p-22", "2p-31", "3p-22-selected", "3p-31"};
  return ids;
}

const std::vector<std::string>& family(std::string_view id) {
  static const std::unordered_map<std::string, std::vector<std::string>> families = [] {
    std::unordered_map<std::string, std::vector<std::string>> f;
    auto& f22 = f["2p-22"];
    for (const auto& a : kI) f22.push_back("|" + a + "|^2");
    for (const auto& a : kI) {
      for (const auto& b : kI) {
        if (a != b) f22.push_back(a + "*conj(" + b + ")");
      }
    }
    for (const char* n : {"R1", "R2", "conj(R2)", "R3", "R4", "R5", "conj(R5)", "R6", "T1", "T2", "N1N4mN2N3"}) {
      f22.push_back(n);
    }
    auto& f31 = f["2p-31"];
    for (const char* n : {"Q1", "Q2", "Q3", "Q4"}) f31.push_back(n);
    for (const auto& a : kI) {
      for (const auto& b : kN) f31.push_back(a + "*" + b);
    }
    f["3p-22-selected"] = list_names(3, std::pair{2, 2});
    f["3p-31"] = list_names(3, std::pair{3, 1});
    return f;
  }();
  auto it = families.find(std::string(id));
  if (it == families.end()) {
    std::string msg = "unknown family '" + std::string(id) + "'; valid families:";
    for (const auto& n : family_ids()) msg += " " + n;
    throw std::out_of_range(msg);
  }
  return it->second;
}

const std::vector<LinearRelation>& printed_dependencies() {
  static const std::vector<LinearRelation> rels = parse_relations({
      "X7+X3-B7-B3+Z7+Z3",
      "X6+X4-B4-B6+Z6+Z4",
      "X8+X5-B8-B5+Z8+Z5",
      "X1+X2-B1-B2+Z1+Z2",
      "X5+X4-Z5-Z4+D5+D4",
      "X8+X6-Z8-Z6+D8+D6",
      "X7+X2-Z7-Z2+D7+D2",
      "X1+X3-Z1-Z3+D1+D3",
      "X1+X4-D1-D4+B1+B4",
      "X7+X8-D8-D7+B7+B8",
      "X6+X2-D6-D2+B6+B2",
      "X5+X3-D5-D3+B5+B3",
  });
  return rels;
}

const std::vector<LinearRelation>& reconciled_dependencies() {
  static const std::vector<LinearRelation> rels = parse_relations({
      "X1-X2-B1+B2+D1-D2",
      "X1-X4-Z1+Z4+B1-B4",
      "X1-X3+Z1-Z3-D1+D3",
      "X2-X6-Z2+Z6+B2-B6",
      "X2-X7+Z2-Z7-D2+D5",
      "X4-X6-B4+B6+D4-D6",
      "X4-X5+Z4-Z5-D4+D7",
      "X6-X8+Z6-Z8-D6+D8",
      "X3-X7-B3+B7+D3-D5",
      "X3-X5-Z3+Z5+B3-B5",
      "X7-X8-Z7+Z8+B7-B8",
      "X5-X8-B5+B8+D7-D8",
  });
  return rels;
}

double relation_residual(const LinearRelation& r, const StateTensor& s) {
  Evaluator ev(s);
  cplx sum = 0.0;
  double scale = 0.0;
  for (const auto& [c, name] : r.terms) {
    const cplx v = ev(name);
    sum += static_cast<double>(c) * v;
    scale += std::abs(v);
  }
  return scale == 0.0 ? 0.0 : std::abs(sum) / scale;
}

std::vector<double> dependency_residuals(const std::vector<LinearRelation>& relations, int n_states,
                                         std::uint64_t seed) {
  std::vector<double> worst(relations.size(), 0.0);
  for (int k = 0; k < n_states; ++k) {
    const StateTensor s = random_state(3, seed + static_cast<std::uint64_t>(k));
    Evaluator ev(s);
    for (std::size_t i = 0; i < relations.size(); ++i) {
      cplx sum = 0.0;
      double scale = 0.0;
      for (const auto& [c, name] : relations[i].terms) {
        const cplx v = ev(name);
        sum += static_cast<double>(c) * v;
        scale += std::abs(v);
      }
      if (scale > 0.0) worst[i] = std::max(worst[i], std::abs(sum) / scale);
    }
  }
  return worst;
}

}  // namespace spinv
