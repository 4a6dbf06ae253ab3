// Copyright 2026 The seidelg Authors
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

// Convenience include for the whole library (the CLI front end is separate
// in seidel/cli.hpp because it pulls in vendored dependencies).

#ifndef SEIDELG_SEIDELG_HPP
#define SEIDELG_SEIDELG_HPP

#include "seidel/bench.hpp"
#include "seidel/canonical.hpp"
#include "seidel/enumeration.hpp"
#include "seidel/graph.hpp"
#include "seidel/halfgraph_fast.hpp"
#include "seidel/harness.hpp"
#include "seidel/io.hpp"
#include "seidel/modular.hpp"
#include "seidel/recognition.hpp"
#include "seidel/seidel.hpp"
#include "seidel/structure.hpp"

#endif  // SEIDELG_SEIDELG_HPP
