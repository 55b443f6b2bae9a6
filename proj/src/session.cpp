#include "confluent/session.hpp"

#include <fmt/format.h>

#include <charconv>
#include <sstream>
#include <utility>

#include "confluent/conflict.hpp"
#include "confluent/probe.hpp"

namespace confluent::cli {
namespace {

struct Grammar {
  std::string_view name;
  Op op;
  std::size_t min_args;
  std::size_t max_args;
};

constexpr std::size_t kAny = static_cast<std::size_t>(-1);

constexpr Grammar kGrammar[] = {
    {"shared", Op::shared, 0, kAny}, {"branch", Op::branch, 1, 1},
    {"add", Op::add, 2, 2},          {"remove", Op::remove, 2, 2},
    {"commit", Op::commit, 1, 1},    {"refresh", Op::refresh, 1, 1},
    {"print", Op::print, 1, 1},      {"drop", Op::drop, 1, 1},
    {"stats", Op::stats, 0, 0},      {"probe", Op::probe, 4, 4},
};

bool parse_count(const std::string& text, std::uint64_t& out) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::string quoted(std::string_view key) { return fmt::format("'{}'", key); }

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(fmt::format("line {}: {}", line, message)), line_(line) {}

std::vector<Command> parse_script(std::string_view text) {
  std::vector<Command> commands;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    std::string word;
    std::vector<std::string> tokens;
    while (words >> word) tokens.push_back(word);
    if (tokens.empty()) continue;

    const Grammar* rule = nullptr;
    for (const auto& g : kGrammar) {
      if (g.name == tokens.front()) rule = &g;
    }
    if (!rule) throw ParseError(line, "unknown command '" + tokens.front() + "'");
    tokens.erase(tokens.begin());
    if (tokens.size() < rule->min_args || tokens.size() > rule->max_args) {
      throw ParseError(line, fmt::format("wrong number of arguments to '{}'",
                                         rule->name));
    }
    if (rule->op == Op::probe) {
      for (const auto& t : tokens) {
        std::uint64_t ignored;
        if (!parse_count(t, ignored)) {
          throw ParseError(line, "probe arguments must be non-negative integers");
        }
      }
    }
    commands.push_back(Command{rule->op, std::move(tokens), line});
  }
  return commands;
}

std::string format_set(const Version& version) {
  if (version.empty()) return "{ }";
  std::string out = "{ ";
  bool first = true;
  for (const auto& key : version) {
    if (!first) out += ", ";
    out += quoted(key);
    first = false;
  }
  return out + " }";
}

Session::Session() : baseline_(store_stats<std::string, Sha512Priority>()) {}

const Flow<Version>* Session::flow(const std::string& name) const {
  auto it = flows_.find(name);
  return it == flows_.end() ? nullptr : &it->second;
}

Flow<Version>* Session::find_flow(const std::string& name, std::string& out) {
  auto it = flows_.find(name);
  if (it == flows_.end()) {
    out += fmt::format("error: unknown flow {}\n", quoted(name));
    return nullptr;
  }
  return &it->second;
}

std::string Session::execute(const Command& command) {
  const auto& args = command.args;
  std::string out;
  switch (command.op) {
    case Op::shared: {
      Version s;
      for (const auto& key : args) {
        try {
          s = add(s, Version::singleton(key));
        } catch (const DisjointnessViolation& e) {
          out += fmt::format("error: duplicate-add {}\n", quoted(e.key()));
        }
      }
      shared_ = std::move(s);
      break;
    }
    case Op::branch:
      if (!flows_.try_emplace(args[0], Flow<Version>::branch(shared_)).second) {
        out += fmt::format("error: flow {} already exists\n", quoted(args[0]));
      }
      break;
    case Op::add:
      if (auto* f = find_flow(args[0], out)) {
        try {
          f->current = add(f->current, Version::singleton(args[1]));
        } catch (const DisjointnessViolation& e) {
          out += fmt::format("error: duplicate-add {}\n", quoted(e.key()));
        }
      }
      break;
    case Op::remove:
      if (auto* f = find_flow(args[0], out)) {
        try {
          f->current = sub(f->current, Version::singleton(args[1]));
        } catch (const SubsetViolation& e) {
          out += fmt::format("error: duplicate-delete {}\n", quoted(e.key()));
        }
      }
      break;
    case Op::commit:
      if (auto* f = find_flow(args[0], out)) {
        try {
          auto result = commit(*f, shared_);
          shared_ = std::move(result.shared);
          *f = std::move(result.flow);
        } catch (const MeldConflict& e) {
          out += fmt::format("conflict: {} {}\n", to_string(e.kind()), quoted(e.key()));
        }
      }
      break;
    case Op::refresh:
      if (auto* f = find_flow(args[0], out)) {
        try {
          *f = refresh(*f, shared_);
        } catch (const MeldConflict& e) {
          out += fmt::format("conflict: {} {}\n", to_string(e.kind()), quoted(e.key()));
        }
      }
      break;
    case Op::print:
      if (args[0] == "shared") {
        out += "S = " + format_set(shared_) + "\n";
      } else if (auto* f = find_flow(args[0], out)) {
        out += args[0] + " = " + format_set(f->current) + "\n";
      }
      break;
    case Op::drop:
      if (flows_.erase(args[0]) == 0) {
        out += fmt::format("error: unknown flow {}\n", quoted(args[0]));
      }
      break;
    case Op::stats: {
      const auto now = store_stats<std::string, Sha512Priority>();
      out += fmt::format("stats: live_nodes={} total_interned={}\n",
                         static_cast<std::int64_t>(now.live_nodes) -
                             static_cast<std::int64_t>(baseline_.live_nodes),
                         now.total_interned - baseline_.total_interned);
      break;
    }
    case Op::probe: {
      std::uint64_t v[4];
      for (int i = 0; i < 4; ++i) parse_count(args[i], v[i]);
      try {
        out += probe_csv_row(run_probe(v[0], v[1], v[2], v[3])) + "\n";
      } catch (const std::invalid_argument& e) {
        out += fmt::format("error: {}\n", e.what());
      }
      break;
    }
  }
  return out;
}

std::string execute_script(std::string_view text) {
  const auto commands = parse_script(text);
  Session session;
  std::string out;
  for (const auto& c : commands) out += session.execute(c);
  return out;
}

}  // namespace confluent::cli
