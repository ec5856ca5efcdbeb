#pragma once

// Runs the kgrotor binary through the shell and parses its machine output.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace kgrotor::testing {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("kgrotor_cli_" + name)).string();
}

/// `args` is appended verbatim to the binary path; `env` is prefixed.
inline RunResult run_cli(const std::string& args, const std::string& env = {}) {
  const std::string err_path = temp_path("stderr.txt");
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" KGROTOR_CLI "' " + args + " 2>'" + err_path + "'";
  RunResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = read_text(err_path);
  return r;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw std::out_of_range("no column " + name);
  }
  double number(std::size_t row, const std::string& name) const {
    return std::strtod(rows.at(row).at(column(name)).c_str(), nullptr);
  }
};

inline CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (first) t.header = std::move(fields);
    else t.rows.push_back(std::move(fields));
    first = false;
  }
  return t;
}

}  // namespace kgrotor::testing
