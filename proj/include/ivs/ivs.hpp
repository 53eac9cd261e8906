// Copyright 2026 The ivs Authors
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

#ifndef IVS_IVS_HPP
#define IVS_IVS_HPP

#include "ivs/config.hpp"
#include "ivs/generator.hpp"
#include "ivs/homotopy.hpp"
#include "ivs/interval.hpp"
#include "ivs/loop.hpp"
#include "ivs/oracle.hpp"
#include "ivs/pam.hpp"
#include "ivs/rational.hpp"
#include "ivs/scanning.hpp"
#include "ivs/suite.hpp"
#include "ivs/suspension.hpp"
#include "ivs/text.hpp"

#endif  // IVS_IVS_HPP
