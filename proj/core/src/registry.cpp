// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dilator/registry.hpp"

#include <map>
#include <mutex>

#include "dilator/derivative.hpp"
#include "dilator/errors.hpp"

namespace dilator {

std::vector<std::string> BuiltinDilatorNames() { return {"omega", "bump", "segment", "zplus", "star"}; }

namespace {

Dilator Build(std::string_view name) {
  if (name == "omega") return OmegaDilator();
  if (name == "bump") return BumpDilator();
  if (name == "segment") return SegmentDilator();
  if (name == "zplus") return ZPlusDilator();
  if (name == "star") return StarDilator();
  if (name.starts_with("d:")) return Derivative(LookupDilator(name.substr(2)));
  throw DomainError("unknown dilator '" + std::string(name) + "'");
}

}  // namespace

Dilator LookupDilator(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, Dilator, std::less<>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(name); it != cache.end()) return it->second;
  }
  Dilator d = Build(name);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::string(name), d).first->second;
}

}  // namespace dilator
