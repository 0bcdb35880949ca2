#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "modkernel/errors.h"
#include "modkernel/instance.h"

namespace modkernel {

// Line-oriented text format, ids 1-indexed:
//
//   c <comment>
//   p vc-struct <n> <m> <k> <d> <class>
//   e <u> <v>
//   x <v1> <v2> ...
//
// One header, m edge lines, at most one modulator line (absent or bare `x`
// means X is empty).
class ParseError : public InputError {
 public:
  enum class Kind { kSyntax, kModulator, kClass };

  ParseError(Kind kind, int line, const std::string& message);

  Kind kind() const { return kind_; }
  // 1-based; 0 for whole-instance errors such as class violations.
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

struct ParseOptions {
  int cap = kDefaultBruteForceCap;
  bool check_class = true;
};

Instance parse_instance(std::string_view text, const ParseOptions& options = {});

// Requires dense labels (see compacted()).
std::string emit_instance(const Instance& inst);

Instance read_instance_file(const std::filesystem::path& path, const ParseOptions& options = {});
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace modkernel
