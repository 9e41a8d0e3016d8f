// Copyright 2026 The dpledger Authors
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

#ifndef DPLEDGER_STATUS_MACROS_H_
#define DPLEDGER_STATUS_MACROS_H_

#include <utility>

#define DPL_CONCAT_INNER_(a, b) a##b
#define DPL_CONCAT_(a, b) DPL_CONCAT_INNER_(a, b)

#define DPL_RETURN_IF_ERROR(expr)      \
  do {                                 \
    auto dpl_status_ = (expr);         \
    if (!dpl_status_.ok()) return dpl_status_; \
  } while (0)

#define DPL_ASSIGN_OR_RETURN_IMPL_(tmp, lhs, expr) \
  auto tmp = (expr);                               \
  if (!tmp.ok()) return tmp.status();              \
  lhs = *std::move(tmp)

#define DPL_ASSIGN_OR_RETURN(lhs, expr) \
  DPL_ASSIGN_OR_RETURN_IMPL_(DPL_CONCAT_(dpl_status_or_, __LINE__), lhs, expr)

#endif  // DPLEDGER_STATUS_MACROS_H_
