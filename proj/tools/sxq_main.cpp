// sxq: run queries against s-expression data.
//
//   sxq match <query> [file]                 first solution, if any
//   sxq all [--max N] [--format F] <query> [file]   every solution
//
// The input (file or standard input) must hold exactly one s-expression.
// Exit status: 0 a solution was found, 1 no solution, 2 parse or usage error.

#include <cstddef>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sxq/query.hpp"
#include "sxq/reader.hpp"

namespace {

constexpr int kExitMatched = 0;
constexpr int kExitNoMatch = 1;
constexpr int kExitError = 2;

struct OutputRecord {
  std::size_t index = 0;
  sxq::BindingSet bindings;
};

std::string format_text(const OutputRecord& record) {
  std::string line;
  for (const auto& [name, value] : record.bindings.entries) {
    if (!line.empty()) line += ' ';
    line += name;
    line += '=';
    line += sxq::print(value);
  }
  return line;
}

std::string format_json(const OutputRecord& record) {
  nlohmann::ordered_json object = nlohmann::ordered_json::object();
  for (const auto& [name, value] : record.bindings.entries) {
    object[name] = sxq::print(value);
  }
  return object.dump();
}

std::string read_input(const std::string& path) {
  if (path.empty()) {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open input file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file),
                     std::istreambuf_iterator<char>());
}

struct Request {
  std::string query_text;
  std::string input_path;
  std::optional<std::size_t> max;
  std::string format = "text";
};

int run_query(const Request& request, bool first_only) {
  sxq::CompiledQuery query = [&] {
    try {
      return sxq::compile_query(request.query_text);
    } catch (const sxq::ParseError& e) {
      throw std::runtime_error(std::string("query: ") + e.what());
    }
  }();

  sxq::Value target = [&] {
    try {
      return sxq::read(read_input(request.input_path));
    } catch (const sxq::ParseError& e) {
      throw std::runtime_error(std::string("input: ") + e.what());
    }
  }();

  std::optional<std::size_t> limit = first_only ? std::optional<std::size_t>(1)
                                                : request.max;
  std::vector<sxq::BindingSet> solutions =
      sxq::collect_bindings(query, target, limit);
  if (solutions.empty()) return kExitNoMatch;

  for (std::size_t i = 0; i < solutions.size(); ++i) {
    OutputRecord record{i, std::move(solutions[i])};
    std::cout << (request.format == "json" ? format_json(record)
                                           : format_text(record))
              << '\n';
  }
  return kExitMatched;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"s-expression query tool"};
  app.require_subcommand(1);

  Request request;

  CLI::App* cmd_match = app.add_subcommand(
      "match", "report the first solution of a query against the input");
  cmd_match->add_option("query", request.query_text, "query text")->required();
  cmd_match->add_option("file", request.input_path,
                        "input file (standard input when omitted)");

  std::size_t max_value = 0;
  CLI::App* cmd_all = app.add_subcommand(
      "all", "report every solution of a query against the input");
  cmd_all->add_option("query", request.query_text, "query text")->required();
  cmd_all->add_option("file", request.input_path,
                      "input file (standard input when omitted)");
  CLI::Option* max_option =
      cmd_all->add_option("--max", max_value, "report at most N solutions")
          ->check(CLI::PositiveNumber);
  cmd_all->add_option("--format", request.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  if (max_option->count() > 0) request.max = max_value;

  try {
    return run_query(request, cmd_match->parsed());
  } catch (const std::exception& e) {
    std::cerr << "sxq: " << e.what() << '\n';
    return kExitError;
  }
}
