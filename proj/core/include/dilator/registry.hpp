// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Dilators by name: omega, bump, segment, zplus, star, and d:<name> for the
// derivative of a normal named dilator (so d:d:omega works).

#ifndef DILATOR_REGISTRY_HPP_
#define DILATOR_REGISTRY_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "dilator/praedil.hpp"

namespace dilator {

// DomainError for unknown names; CapabilityError for d: over a non-normal
// dilator. Repeated lookups of a name return the same object.
Dilator LookupDilator(std::string_view name);
std::vector<std::string> BuiltinDilatorNames();

}  // namespace dilator

#endif  // DILATOR_REGISTRY_HPP_
