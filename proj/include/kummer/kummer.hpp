// Copyright 2026 The Kummer Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KUMMER_KUMMER_HPP
#define KUMMER_KUMMER_HPP

#include "kummer/model.hpp"
#include "kummer/algebra.hpp"
#include "kummer/quantum.hpp"
#include "kummer/meanfield.hpp"
#include "kummer/semiclassics.hpp"
#include "kummer/sweep.hpp"
#include "kummer/io.hpp"
#include "kummer/plot.hpp"
#include "kummer/verify.hpp"

#endif  // KUMMER_KUMMER_HPP
