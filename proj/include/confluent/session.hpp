#ifndef CONFLUENT_SESSION_HPP_
#define CONFLUENT_SESSION_HPP_

// Script-driven multi-user sessions: one shared set and named local flows,
// driven by line-oriented commands.
//
//   shared <key>...            replace the shared set
//   branch <flow>              new flow at the current shared set
//   add <flow> <key>           add a key to the flow's current set
//   remove <flow> <key>        remove a key from the flow's current set
//   commit <flow>              meld the flow's changes into shared
//   refresh <flow>             meld shared changes into the flow
//   print shared|<flow>        S = { 'a', 'b' }  /  <flow> = { ... }
//   drop <flow>                forget a flow and release its versions
//   stats                      interned node counts since session start
//   probe <n> <m> <trials> <seed>
//
// Blank lines and text after '#' are ignored. Conflicts and failed updates
// print a line and leave the session unchanged.

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "confluent/interner.hpp"
#include "confluent/meld.hpp"
#include "confluent/set.hpp"

namespace confluent::cli {

using Version = Set<std::string>;

enum class Op { shared, branch, add, remove, commit, refresh, print, drop, stats, probe };

struct Command {
  Op op;
  std::vector<std::string> args;
  std::size_t line = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses a whole script; throws ParseError at the first malformed line.
std::vector<Command> parse_script(std::string_view text);

/// `{ 'a', 'b' }`, or `{ }` when empty.
std::string format_set(const Version& version);

class Session {
 public:
  Session();

  /// Applies one command and returns its output lines, each
  /// newline-terminated (possibly none).
  std::string execute(const Command& command);

  const Version& shared() const { return shared_; }
  const Flow<Version>* flow(const std::string& name) const;

 private:
  Flow<Version>* find_flow(const std::string& name, std::string& out);

  Version shared_;
  std::map<std::string, Flow<Version>> flows_;
  StoreStats baseline_;
};

/// Parses then runs a script in a fresh session.
std::string execute_script(std::string_view text);

}  // namespace confluent::cli

#endif  // CONFLUENT_SESSION_HPP_
