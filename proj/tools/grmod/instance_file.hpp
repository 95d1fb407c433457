#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "graded/families.hpp"

namespace grmod {

/// Malformed instance file; `line` is 1-based (0 when the error is not tied
/// to a line).
class InstanceFileError : public std::runtime_error {
 public:
  InstanceFileError(const std::string& origin, std::size_t line, const std::string& msg);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct InstanceFile {
  std::string origin;  // path or label the text came from
  std::string name;
  std::string description;
  bool axioms_checked = true;
  graded::Instance instance;  // family "file"
};

/// Parses the sectioned instance format documented in docs/instance-format.md.
/// Unless `verify-axioms = false`, the module is run through verify_axioms
/// and a failure throws graded::AxiomError.
InstanceFile parse_instance(std::istream& in, const std::string& origin);
InstanceFile parse_instance_text(const std::string& text, const std::string& origin = "<text>");
InstanceFile load_instance(const std::string& path);

}  // namespace grmod
