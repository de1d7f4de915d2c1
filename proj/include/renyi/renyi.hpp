// Copyright 2026 The renyi Authors
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

#ifndef RENYI_RENYI_HPP
#define RENYI_RENYI_HPP

#include "renyi/channels.hpp"
#include "renyi/divergence.hpp"
#include "renyi/eig.hpp"
#include "renyi/harness.hpp"
#include "renyi/io.hpp"
#include "renyi/matrix.hpp"
#include "renyi/norms.hpp"
#include "renyi/optimize.hpp"
#include "renyi/rng.hpp"
#include "renyi/states.hpp"

#endif  // RENYI_RENYI_HPP
