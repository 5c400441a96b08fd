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

#include "projevo/amplifier.hpp"
#include "projevo/costs.hpp"
#include "projevo/decomposer.hpp"
#include "projevo/errors.hpp"
#include "projevo/io.hpp"
#include "projevo/linalg.hpp"
#include "projevo/parallel.hpp"
#include "projevo/pauli_bloch.hpp"
#include "projevo/philox.hpp"
#include "projevo/search_models.hpp"
#include "projevo/statevector.hpp"
#include "projevo/term_sets.hpp"
#include "projevo/trotter.hpp"
