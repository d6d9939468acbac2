// Copyright 2026 The metricdim Authors
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

#ifndef METRICDIM_METRICDIM_HPP
#define METRICDIM_METRICDIM_HPP

#include <metricdim/audit.hpp>
#include <metricdim/fixtures.hpp>
#include <metricdim/formulas.hpp>
#include <metricdim/generators.hpp>
#include <metricdim/graph.hpp>
#include <metricdim/io.hpp>
#include <metricdim/json.hpp>
#include <metricdim/resolvability.hpp>
#include <metricdim/search.hpp>

#endif
