#include "confluent/conflict.hpp"

#include <utility>

namespace confluent {

std::string_view to_string(ConflictKind kind) {
  switch (kind) {
    case ConflictKind::duplicate_add:
      return "duplicate-add";
    case ConflictKind::duplicate_delete:
      return "duplicate-delete";
  }
  return "unknown";
}

std::string_view to_string(MeldPass pass) {
  switch (pass) {
    case MeldPass::set:
      return "set";
    case MeldPass::key:
      return "key-conflict";
    case MeldPass::value:
      return "value-conflict";
  }
  return "unknown";
}

DisjointnessViolation::DisjointnessViolation(std::string key)
    : std::runtime_error("add: element present in both operands: " + key),
      key_(std::move(key)) {}

SubsetViolation::SubsetViolation(std::string key)
    : std::runtime_error("sub: element missing from minuend: " + key),
      key_(std::move(key)) {}

MeldConflict::MeldConflict(ConflictKind kind, std::string key, MeldPass pass)
    : std::runtime_error(std::string(to_string(kind)) + " conflict on " + key +
                         (pass == MeldPass::set
                              ? std::string()
                              : " (" + std::string(to_string(pass)) + ")")),
      kind_(kind),
      pass_(pass),
      key_(std::move(key)) {}

}  // namespace confluent
