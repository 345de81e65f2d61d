// Copyright 2026 The cfft11 Authors.
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

#pragma once

#include "cfft11/aft_int.hpp"
#include "cfft11/bilinear.hpp"
#include "cfft11/bit_matrix.hpp"
#include "cfft11/cfft.hpp"
#include "cfft11/gf.hpp"
#include "cfft11/oracle.hpp"
#include "cfft11/plan_io.hpp"
#include "cfft11/slp.hpp"
