#pragma once

#include <string>
#include <vector>

#include "podo/model.hpp"

namespace podo {

struct Issue {
  ErrorCode code;
  EntityId entity;
  std::string message;
};

/// Every violated model invariant, in entity order. Empty means valid.
std::vector<Issue> check_model(const Model& model);

/// Throws the first issue as podo::Error.
void validate(const Model& model);

/// Soft findings that do not make a model invalid (e.g. a partition chain
/// pulled apart by a later axis step edit).
std::vector<Issue> lint_model(const Model& model);

}  // namespace podo
