/*
 * Copyright (C) 2026 The kernint Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <span>
#include <string>

#include "kernint/verify.hpp"

namespace kernint {

enum class Format { text, json };

/// JSON: {"config": {...}, "records": [...]}, keys in fixed order, reals in
/// shortest round-trip form, non-finite values as null.
std::string render(std::span<const VerificationRecord> records, const VerifyConfig& cfg,
                   Format format);
std::string render(const RateRecord& record, Format format);

struct SelfTestItem {
  std::string name;
  double got;
  double expected;
  double tol;
  bool ok;
};

/// Closed-form spot checks of the quadrature engines and special functions.
std::vector<SelfTestItem> run_selftest();
std::string render(std::span<const SelfTestItem> items, Format format);

}  // namespace kernint
