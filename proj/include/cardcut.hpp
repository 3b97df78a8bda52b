// Copyright 2026 The cardcut Authors.
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

#include "cardcut/certificate.hpp"
#include "cardcut/coeffs.hpp"
#include "cardcut/core.hpp"
#include "cardcut/cutting_plane.hpp"
#include "cardcut/errors.hpp"
#include "cardcut/extform.hpp"
#include "cardcut/family.hpp"
#include "cardcut/general.hpp"
#include "cardcut/index_set.hpp"
#include "cardcut/linalg.hpp"
#include "cardcut/linearization.hpp"
#include "cardcut/lp_model.hpp"
#include "cardcut/mixing.hpp"
#include "cardcut/oracle.hpp"
#include "cardcut/rational.hpp"
#include "cardcut/separation.hpp"
#include "cardcut/separation_lp.hpp"
#include "cardcut/simplex.hpp"
