/**************************************************************************
 * cyclochar.hpp
 *
 * Copyright 2026 The cyclochar Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/
#pragma once

#include "characterize.hpp"
#include "code_spec.hpp"
#include "codes.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "expsum.hpp"
#include "gf.hpp"
#include "numth.hpp"
#include "parallel.hpp"
#include "poly.hpp"
#include "report.hpp"
#include "verify.hpp"
#include "weight_distribution.hpp"
