// Copyright 2026 The folded-rs Authors.
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

#ifndef FRS_FRS_HPP
#define FRS_FRS_HPP

#include "frs/code.hpp"
#include "frs/decoder.hpp"
#include "frs/galois.hpp"
#include "frs/harness.hpp"
#include "frs/interp.hpp"
#include "frs/multipoly.hpp"
#include "frs/rootfind.hpp"
#include "frs/roots.hpp"
#include "frs/text_io.hpp"
#include "frs/unipoly.hpp"

#endif  // FRS_FRS_HPP
