// Copyright 2026 The projevo Authors
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

#pragma once

// Ready-made term sets for the shipped experiments.

#include <cstdint>

#include "projevo/decomposer.hpp"
#include "projevo/search_models.hpp"
#include "projevo/trotter.hpp"

namespace projevo {

/// H_C = |s><s| + |t><t| split into its two projectors, source first.
inline HermitianTermSet search_projector_terms(const SearchInstance& inst) {
  return {2, {{"source", Matrix(projector(inst.source_state()))}, {"target", Matrix(projector(inst.target_state()))}}};
}

/// Periodic chain Laplacian split into even and odd bonds.
inline HermitianTermSet ring_even_odd_terms(Vertex length) {
  const LatticeHamiltonian lat = laplacian_chain(length, true);
  return decompose(lat.h, lat.graph, chain_parity_coloring(lat.graph, true)).term_set();
}

}  // namespace projevo
