// confluent: replays a multi-user version script.
//
//   confluent script.txt
//   confluent < script.txt
//
// Exit status is 0 when the script parsed (conflicts are reported in the
// output, not as failures), 2 on a parse error, 1 if the script cannot be
// read.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "confluent/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Replay refresh/commit scripts over persistent sets"};
  std::string script_path;
  app.add_option("script", script_path, "Script file (default: standard input)");
  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (script_path.empty() || script_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(script_path);
    if (!in) {
      std::cerr << "confluent: cannot open " << script_path << "\n";
      return 1;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }

  try {
    std::cout << confluent::cli::execute_script(text);
  } catch (const confluent::cli::ParseError& e) {
    std::cerr << "confluent: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
