// Copyright (c) 2026 The fsolink Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace fso {

/// Malformed input file (bad header, bad row, bad JSON shape). Kept apart
/// from domain errors so callers can exit with a distinct status.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fso
