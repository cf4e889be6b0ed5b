#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Text format:
///
///     n=<int>
///
///     graph 1:
///     u v
///     ...
///
///     graph 2:
///     ...
///
/// Labels are 1-based, u < v on every line, lines sorted, blocks separated
/// by one blank line. The JSON form is {"n": int, "graphs": [[[u,v],...],...]}.
enum class FamilyFormat { text, json };

class FamilyFormatError : public std::runtime_error {
 public:
  FamilyFormatError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  /// 1-based line of the problem, 0 when not tied to a line.
  int line() const { return line_; }

 private:
  int line_;
};

std::string format_family(const GraphFamily& family, FamilyFormat format);
GraphFamily parse_family(const std::string& content, FamilyFormat format);

/// Detects JSON by a leading '{'.
GraphFamily parse_family(const std::string& content);

GraphFamily read_family(const std::filesystem::path& path);
void write_family(const GraphFamily& family, const std::filesystem::path& path,
                  FamilyFormat format = FamilyFormat::text);

std::string format_cycle_json(const RainbowCycle& cycle);
RainbowCycle parse_cycle_json(const std::string& content);

/// Throws std::invalid_argument if the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace rainbow
