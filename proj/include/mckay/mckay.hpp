// Copyright 2026 The mckay-cyclic Authors
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

#ifndef MCKAY_MCKAY_HPP_
#define MCKAY_MCKAY_HPP_

#include "mckay/bareiss.hpp"
#include "mckay/check.hpp"
#include "mckay/collection.hpp"
#include "mckay/ext.hpp"
#include "mckay/ext_oracle.hpp"
#include "mckay/hj.hpp"
#include "mckay/ktheory.hpp"
#include "mckay/reps.hpp"
#include "mckay/verify.hpp"

#endif  // MCKAY_MCKAY_HPP_
