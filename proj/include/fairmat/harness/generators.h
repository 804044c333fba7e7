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

// Seeded synthetic instances. Each generator also supplies default config
// lines (matroid, bounds, k) that a config may override.

#ifndef FAIRMAT_HARNESS_GENERATORS_H_
#define FAIRMAT_HARNESS_GENERATORS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fairmat/harness/dataset.h"

namespace fairmat::harness {

using GeneratorParams = std::map<std::string, std::string>;

// random-coverage | modular | adversarial-C3 | matching-gadget | bank-like
const std::vector<std::string>& GeneratorKinds();

// Throws ConfigError for unknown kinds or parameters.
Dataset Generate(const std::string& kind, const GeneratorParams& params,
                 uint64_t seed);

// `key = value` lines.
std::string GeneratorDefaults(const std::string& kind);

}  // namespace fairmat::harness

#endif  // FAIRMAT_HARNESS_GENERATORS_H_
