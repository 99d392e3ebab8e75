#include "dkahler/form_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dkahler {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string &where, const std::string &what) {
  throw FormatError(where + ": " + what);
}

double read_number(const json &v, const std::string &where) {
  if (!v.is_number())
    fail(where, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x))
    fail(where, "number is not finite");
  return x;
}

} // namespace

void write_form(std::ostream &out, const FormField &form) {
  const auto &n = form.shape().extents();
  out << "{\n  \"format_version\": " << kFormFormatVersion << ",\n  \"shape\": ["
      << n[0] << ", " << n[1] << ", " << n[2] << ", " << n[3] << "],\n  \"coeffs\": [";
  for (std::size_t s = 0; s < form.site_count(); ++s) {
    json site = json::array();
    for (const Complex &c : form.site(s))
      site.push_back(json::array({c.real(), c.imag()}));
    out << (s == 0 ? "\n    " : ",\n    ") << site.dump();
  }
  out << "\n  ]\n}\n";
}

std::string format_form(const FormField &form) {
  std::ostringstream out;
  write_form(out, form);
  return out.str();
}

void write_form_file(const std::filesystem::path &path, const FormField &form) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_form(out, form);
  if (!out)
    throw std::runtime_error("failed writing " + path.string());
}

FormField parse_form(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    fail("document", e.what());
  }
  if (!doc.is_object())
    fail("document", "expected a JSON object");

  if (!doc.contains("format_version"))
    fail("format_version", "missing");
  const json &version = doc["format_version"];
  if (!version.is_number_integer() || version.get<long long>() != kFormFormatVersion)
    fail("format_version", "expected integer " + std::to_string(kFormFormatVersion));

  if (!doc.contains("shape"))
    fail("shape", "missing");
  const json &shape_json = doc["shape"];
  if (!shape_json.is_array() || shape_json.size() != kDimensions)
    fail("shape", "expected an array of 4 integers");
  std::array<int, kDimensions> extents{};
  for (std::size_t mu = 0; mu < kDimensions; ++mu) {
    const json &v = shape_json[mu];
    const std::string where = "shape[" + std::to_string(mu) + "]";
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > (1 << 20))
      fail(where, "expected a positive integer");
    extents[mu] = static_cast<int>(v.get<long long>());
  }
  const LatticeShape shape(extents);

  if (!doc.contains("coeffs"))
    fail("coeffs", "missing");
  const json &coeffs = doc["coeffs"];
  if (!coeffs.is_array())
    fail("coeffs", "expected an array");
  if (coeffs.size() != shape.site_count())
    fail("coeffs", "expected " + std::to_string(shape.site_count()) + " sites, found " +
                       std::to_string(coeffs.size()));

  FormField form(shape);
  for (std::size_t s = 0; s < coeffs.size(); ++s) {
    const json &site = coeffs[s];
    const std::string site_where = "coeffs[" + std::to_string(s) + "]";
    if (!site.is_array() || site.size() != kBladeCount)
      fail(site_where, "expected an array of 16 [re, im] pairs");
    for (unsigned b = 0; b < kBladeCount; ++b) {
      const json &pair = site[b];
      const std::string where = site_where + "[" + std::to_string(b) + "]";
      if (!pair.is_array() || pair.size() != 2)
        fail(where, "expected a [re, im] pair");
      form(s, Blade(b)) = {read_number(pair[0], where + "[0]"), read_number(pair[1], where + "[1]")};
    }
  }
  return form;
}

FormField read_form_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw FormatError(path.string() + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_form(buf.str());
}

} // namespace dkahler
