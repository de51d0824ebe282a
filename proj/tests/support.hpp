#pragma once

#include <optional>

#include "phyloag/models.hpp"

inline phyloag::ModelOptions opts(std::optional<unsigned> k, bool homogeneous = false, bool observe_internal = false) {
  phyloag::ModelOptions o;
  o.k = k;
  o.homogeneous = homogeneous;
  o.observe_internal = observe_internal;
  return o;
}
