// Copyright 2026 The Authors.
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

#ifndef REWIRE_REWIRE_HPP_
#define REWIRE_REWIRE_HPP_

#include "rewire/candidates.hpp"
#include "rewire/correlation.hpp"
#include "rewire/error.hpp"
#include "rewire/exact.hpp"
#include "rewire/experiment.hpp"
#include "rewire/generators.hpp"
#include "rewire/graph.hpp"
#include "rewire/random.hpp"
#include "rewire/robustness.hpp"
#include "rewire/strategies.hpp"

#endif  // REWIRE_REWIRE_HPP_
