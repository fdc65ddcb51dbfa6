// Copyright 2026 The clmetrics Authors.
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

// Umbrella header for the metric engine (the CLI lives in clmetrics/cli.hpp).

#include "clmetrics/error.hpp"
#include "clmetrics/harmonic.hpp"
#include "clmetrics/io.hpp"
#include "clmetrics/learners.hpp"
#include "clmetrics/random_baseline.hpp"
#include "clmetrics/random_tables.hpp"
#include "clmetrics/report.hpp"
#include "clmetrics/rescaled.hpp"
#include "clmetrics/schedule.hpp"
#include "clmetrics/traditional.hpp"
