#pragma once

/// \file
/// Written-out coefficient expansions of two-particle invariants. They are
/// evaluated directly on the entries of Psi and never touch the contraction
/// engine, so they serve as independent oracles.

#include "spinor_inv/state.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace spinv {

/// Names with a transcribed expansion, in a stable order.
const std::vector<std::string>& expansion_names();

bool has_expansion(std::string_view name);

/// Throws std::out_of_range when no expansion is transcribed for the name
/// and std::invalid_argument unless the state has two particles.
cplx expansion_oracle(std::string_view name, const StateTensor& s);

}  // namespace spinv
