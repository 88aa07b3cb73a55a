// Copyright 2026 The effecta Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "effecta/algebra.hpp"
#include "effecta/error.hpp"
#include "effecta/io.hpp"
#include "effecta/linalg.hpp"
#include "effecta/lp.hpp"
#include "effecta/mv.hpp"
#include "effecta/observables.hpp"
#include "effecta/polytope.hpp"
#include "effecta/rational.hpp"
#include "effecta/rdp.hpp"
#include "effecta/report.hpp"
#include "effecta/representation.hpp"
#include "effecta/sharp.hpp"
#include "effecta/spectral.hpp"
#include "effecta/states.hpp"
#include "effecta/tribe.hpp"
#include "effecta/zoo.hpp"
