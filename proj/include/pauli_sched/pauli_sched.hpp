// Copyright 2026 The pauli_sched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "pauli_sched/acceptance.hpp"
#include "pauli_sched/bits.hpp"
#include "pauli_sched/circuit.hpp"
#include "pauli_sched/graph.hpp"
#include "pauli_sched/instances.hpp"
#include "pauli_sched/json_io.hpp"
#include "pauli_sched/order.hpp"
#include "pauli_sched/pareto.hpp"
#include "pauli_sched/pauli.hpp"
#include "pauli_sched/random.hpp"
#include "pauli_sched/schedule.hpp"
#include "pauli_sched/search.hpp"
#include "pauli_sched/sweep.hpp"
#include "pauli_sched/tracker.hpp"
