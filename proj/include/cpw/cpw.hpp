// Copyright 2026 The cpw Authors
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

#ifndef CPW_CPW_HPP
#define CPW_CPW_HPP

#include "cpw/decomposition.hpp"
#include "cpw/edge_list_io.hpp"
#include "cpw/errors.hpp"
#include "cpw/generators.hpp"
#include "cpw/graph.hpp"
#include "cpw/json.hpp"
#include "cpw/oracle.hpp"
#include "cpw/solver.hpp"
#include "cpw/structurer.hpp"
#include "cpw/vertex_set.hpp"
#include "cpw/workbench.hpp"

#endif  // CPW_CPW_HPP
