// Copyright 2026 The Quarrel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Everything except the JSON layer (quarrel/io.hpp), which pulls in json.hpp.

#include "quarrel/enumerate.hpp"
#include "quarrel/game.hpp"
#include "quarrel/monotonicity.hpp"
#include "quarrel/player_set.hpp"
#include "quarrel/postulates.hpp"
#include "quarrel/power.hpp"
#include "quarrel/rational.hpp"
#include "quarrel/rule.hpp"
#include "quarrel/theorems.hpp"
#include "quarrel/transforms.hpp"
#include "quarrel/verifiers.hpp"
