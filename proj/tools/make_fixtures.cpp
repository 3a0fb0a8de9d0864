/// Writes every catalog state to <dir>/<name>.json plus two product states
/// used by the command-line tests.

#include "spinor_inv/state.hpp"
#include "spinor_inv/state_io.hpp"

#include <fstream>
#include <iostream>
#include <string>

namespace {

bool write(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: spinor-inv-fixtures <output-dir>\n";
    return 64;
  }
  const std::string dir = argv[1];
  bool ok = true;
  for (const std::string& name : spinv::catalog_names()) {
    ok = write(dir + "/" + name + ".json", spinv::state_to_json(spinv::catalog_state(name).state, name)) && ok;
  }
  ok = write(dir + "/basis000.json", spinv::state_to_json(spinv::basis_state({0, 0, 0}), "basis000")) && ok;
  ok = write(dir + "/product2.json",
             spinv::state_to_json(spinv::product_state({spinv::random_spinor(1).normalized(),
                                                        spinv::random_spinor(2).normalized()}),
                                  "product2")) &&
       ok;
  if (!ok) std::cerr << "failed to write fixtures into " << dir << "\n";
  return ok ? 0 : 1;
}
