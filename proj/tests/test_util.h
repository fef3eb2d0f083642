// Copyright 2026 The Fair CC Authors.
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

#ifndef FAIR_CC_TESTS_TEST_UTIL_H_
#define FAIR_CC_TESTS_TEST_UTIL_H_

#include <functional>

#include "fair_cc/error.h"
#include "gtest/gtest.h"

namespace fair_cc::testing {

// Code of the fair_cc::Error thrown by fn; fails the test if none is thrown.
inline ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvariantViolation;
}

}  // namespace fair_cc::testing

#endif  // FAIR_CC_TESTS_TEST_UTIL_H_
