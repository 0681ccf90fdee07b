// Copyright 2026 The entverify Authors
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

#include "entverify/clifford.hpp"
#include "entverify/linalg.hpp"
#include "entverify/mub.hpp"
#include "entverify/protocol.hpp"
#include "entverify/report.hpp"
#include "entverify/rng.hpp"
#include "entverify/serialization.hpp"
#include "entverify/sic.hpp"
#include "entverify/test_operators.hpp"
#include "entverify/weyl.hpp"
