#ifndef CONFLUENT_CONFLICT_HPP_
#define CONFLUENT_CONFLICT_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace confluent {

enum class ConflictKind { duplicate_add, duplicate_delete };

/// Which meld pass found a conflict. Sets have one pass; maps run a
/// key-only pass and a key-then-value pass.
enum class MeldPass { set, key, value };

std::string_view to_string(ConflictKind kind);
std::string_view to_string(MeldPass pass);

/// Raised by add(): the operands share an element.
class DisjointnessViolation : public std::runtime_error {
 public:
  explicit DisjointnessViolation(std::string key);
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Raised by sub(): the subtrahend has an element the minuend lacks.
class SubsetViolation : public std::runtime_error {
 public:
  explicit SubsetViolation(std::string key);
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Raised by meld() when both branches added, or both deleted, the same
/// element relative to the ancestor.
class MeldConflict : public std::runtime_error {
 public:
  MeldConflict(ConflictKind kind, std::string key, MeldPass pass = MeldPass::set);
  ConflictKind kind() const { return kind_; }
  MeldPass pass() const { return pass_; }
  const std::string& key() const { return key_; }

 private:
  ConflictKind kind_;
  MeldPass pass_;
  std::string key_;
};

}  // namespace confluent

#endif  // CONFLUENT_CONFLICT_HPP_
