// Copyright 2026 The sep2xn Authors
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

#include "sep2xn/certificate.hpp"
#include "sep2xn/density_state.hpp"
#include "sep2xn/elimination.hpp"
#include "sep2xn/engine.hpp"
#include "sep2xn/errors.hpp"
#include "sep2xn/linalg.hpp"
#include "sep2xn/polynomial.hpp"
#include "sep2xn/product_finder.hpp"
#include "sep2xn/product_vector.hpp"
#include "sep2xn/random_states.hpp"
#include "sep2xn/tolerance.hpp"
