// Writes the invariant-name table (docs/invariants.md) from the catalog.
// Usage: spinor-inv-table > docs/invariants.md

#include "spinor_inv/catalog.hpp"
#include "spinor_inv/expansions.hpp"
#include "spinor_inv/reductions.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

using namespace spinv;

namespace {

// Pipes inside names such as |I1|^2 would split markdown cells.
std::string cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

int main() {
  std::printf(
      "# Invariant names\n\n"
      "Generated by `spinor-inv-table`; do not edit by hand. The `data.invariants_table_current`\n"
      "test fails when this file and the catalog disagree.\n\n"
      "Columns:\n\n"
      "- bidegree: (k, l) = degree in the coefficients and in their conjugates.\n"
      "- vanishing scope: `all_particles` vanishes when any observer is unentangled,\n"
      "  `subset(...)` when one of the listed observers is, `not_indicator` is nonzero on\n"
      "  product states.\n"
      "- alternate forms: transcribed equivalent expressions checked against the primary one;\n"
      "  reconciled forms are corrected variants of printed forms that did not match.\n"
      "- expansion: a written-out coefficient expansion exists and serves as an oracle.\n"
      "- Weyl-null: asserted to vanish on chirality-projected states.\n");
  for (int n : {2, 3}) {
    const auto weyl = weyl_null_names(n);
    std::printf("\n## %s particles (%zu names)\n\n", n == 2 ? "Two" : "Three", list_names(n).size());
    std::printf("| name | bidegree | vanishing scope | alternate forms | expansion | Weyl-null | role |\n");
    std::printf("|---|---|---|---|---|---|---|\n");
    for (const auto& name : list_names(n)) {
      const NamedInvariant& v = invariant(name);
      int printed = 0;
      int reconciled = 0;
      for (const auto& a : v.alt_forms) ++(a.status == FormStatus::Printed ? printed : reconciled);
      std::string alt;
      if (printed > 0) alt = std::to_string(printed) + " printed";
      if (reconciled > 0) alt += (alt.empty() ? "" : ", ") + std::to_string(reconciled) + " reconciled";
      const bool null = std::find(weyl.begin(), weyl.end(), name) != weyl.end();
      std::printf("| %s | (%d,%d) | %s | %s | %s | %s | %s |\n", cell(name).c_str(), v.bidegree.first,
                  v.bidegree.second, v.scope.to_string().c_str(), alt.c_str(), has_expansion(name) ? "yes" : "",
                  null ? "yes" : "", cell(v.description).c_str());
    }
  }
  return 0;
}
