// Copyright 2026 The clutterkit Authors
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

#ifndef CLUTTERKIT_CLUTTERKIT_HPP
#define CLUTTERKIT_CLUTTERKIT_HPP

#include "clutterkit/blocker.hpp"
#include "clutterkit/clutter.hpp"
#include "clutterkit/enumerate.hpp"
#include "clutterkit/error.hpp"
#include "clutterkit/graphview.hpp"
#include "clutterkit/matroid.hpp"
#include "clutterkit/minor.hpp"
#include "clutterkit/splitter.hpp"

#endif  // CLUTTERKIT_CLUTTERKIT_HPP
