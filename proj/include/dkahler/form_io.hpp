#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "dkahler/forms.hpp"

namespace dkahler {

inline constexpr int kFormFormatVersion = 1;

// FormFile layout (JSON):
//   {"format_version": 1,
//    "shape": [N0, N1, N2, N3],
//    "coeffs": [ site 0: [[re, im] x 16 blades], site 1: ..., ... ]}
// Sites in lexicographic order, blades by mask 0..15. Numbers are written in
// shortest round-trip form, so reading back reproduces every bit.

std::string format_form(const FormField &form);
void write_form(std::ostream &out, const FormField &form);
void write_form_file(const std::filesystem::path &path, const FormField &form);

// Throw FormatError naming the first offending location.
FormField parse_form(std::string_view text);
FormField read_form_file(const std::filesystem::path &path);

} // namespace dkahler
