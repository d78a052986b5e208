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


// Umbrella header.

#ifndef GAMMOID_GAMMOID_HPP_
#define GAMMOID_GAMMOID_HPP_

#include "gammoid/dimaze.hpp"
#include "gammoid/enumeration.hpp"
#include "gammoid/error.hpp"
#include "gammoid/generators.hpp"
#include "gammoid/io.hpp"
#include "gammoid/linkage_engine.hpp"
#include "gammoid/matroid_oracle.hpp"
#include "gammoid/pym_merge.hpp"
#include "gammoid/transversal.hpp"

#endif  // GAMMOID_GAMMOID_HPP_
