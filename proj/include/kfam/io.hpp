#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kfam/family.hpp"

namespace kfam {

/// Family text format: a first line `n=<n>`, then one member per line as
/// ascending space-separated labels. Blank lines and `#` comments are skipped.
/// Duplicate members are dropped and reported through `warnings`.
/// Throws ParseError (with line number) on malformed lines and DomainError
/// for labels outside [n].
Family parse_family(std::istream& in, std::vector<std::string>* warnings = nullptr);
Family parse_family_text(const std::string& text, std::vector<std::string>* warnings = nullptr);
/// Also throws std::runtime_error when the file cannot be opened.
Family parse_family_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

std::string format_family(const Family& f);
void write_family_file(const Family& f, const std::string& path);

}  // namespace kfam
