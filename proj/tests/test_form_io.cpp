#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>

#include "dkahler/form_io.hpp"
#include "dkahler/random.hpp"

using namespace dkahler;

namespace {

bool bit_identical(const FormField &a, const FormField &b) {
  if (a.shape() != b.shape())
    return false;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Complex x = a.coeffs()[i], y = b.coeffs()[i];
    if (std::bit_cast<std::uint64_t>(x.real()) != std::bit_cast<std::uint64_t>(y.real()) ||
        std::bit_cast<std::uint64_t>(x.imag()) != std::bit_cast<std::uint64_t>(y.imag()))
      return false;
  }
  return true;
}

std::string error_of(std::string_view text) {
  try {
    parse_form(text);
  } catch (const FormatError &e) {
    return e.what();
  }
  return "<no error>";
}

const char *kOneSite = R"({"format_version": 1, "shape": [1, 1, 1, 1], "coeffs": [%s]})";

std::string one_site(const std::string &site) {
  std::string s = kOneSite;
  s.replace(s.find("%s"), 2, site);
  return s;
}

std::string zeros(int n) {
  std::string out = "[";
  for (int i = 0; i < n; ++i)
    out += (i ? ", " : "") + std::string("[0, 0]");
  return out + "]";
}

} // namespace

TEST(FormIo, RandomFormsRoundTripExactly) {
  FormSampler rng(1);
  for (const LatticeShape shape : {LatticeShape{{2, 2, 2, 2}}, LatticeShape{{3, 1, 2, 4}}}) {
    const FormField omega = rng.form(shape);
    EXPECT_TRUE(bit_identical(parse_form(format_form(omega)), omega));
  }
}

TEST(FormIo, AwkwardValuesRoundTripExactly) {
  FormField f(LatticeShape{{2, 1, 1, 1}});
  f(0, Blade(0)) = {-0.0, 0.1};
  f(0, Blade(1)) = {std::numeric_limits<double>::denorm_min(), -std::numeric_limits<double>::max()};
  f(0, Blade(2)) = {1.0 / 3.0, 1e300};
  f(1, Blade(15)) = {std::nextafter(1.0, 2.0), -1e-310};
  const FormField back = parse_form(format_form(f));
  EXPECT_TRUE(bit_identical(back, f));
  EXPECT_TRUE(std::signbit(back(0, Blade(0)).real()));
}

TEST(FormIo, FormattingIsStable) {
  FormSampler rng(2);
  const FormField omega = rng.form(LatticeShape{{2, 2, 2, 2}});
  const std::string text = format_form(omega);
  EXPECT_EQ(format_form(parse_form(text)), text);
  EXPECT_EQ(text.rfind("{\n  \"format_version\": 1,\n  \"shape\": [2, 2, 2, 2],", 0), 0u);
}

TEST(FormIo, FileRoundTrip) {
  FormSampler rng(3);
  const FormField omega = rng.form(LatticeShape{{2, 3, 2, 2}});
  const auto path = std::filesystem::temp_directory_path() / "dkahler_form_io_test.json";
  write_form_file(path, omega);
  EXPECT_TRUE(bit_identical(read_form_file(path), omega));
  std::filesystem::remove(path);
  EXPECT_THROW(read_form_file(path), FormatError);
}

TEST(FormIo, AcceptsMinimalDocument) {
  const FormField f = parse_form(one_site(zeros(16)));
  EXPECT_EQ(f.shape(), (LatticeShape{{1, 1, 1, 1}}));
  EXPECT_EQ(sup_norm(f), 0.0);
}

TEST(FormIo, MalformedInputsNameTheLocation) {
  EXPECT_EQ(error_of("[1, 2]").rfind("document:", 0), 0u);
  EXPECT_EQ(error_of("{\"shape\": [1,1,1,1]").rfind("document:", 0), 0u);
  EXPECT_EQ(error_of(R"({"shape": [1,1,1,1], "coeffs": []})").rfind("format_version:", 0), 0u);
  EXPECT_EQ(error_of(R"({"format_version": 2, "shape": [1,1,1,1], "coeffs": []})").rfind("format_version:", 0),
            0u);
  EXPECT_EQ(error_of(R"({"format_version": 1, "shape": [1,1,1], "coeffs": []})").rfind("shape:", 0), 0u);
  EXPECT_EQ(error_of(R"({"format_version": 1, "shape": [1,0,1,1], "coeffs": []})").rfind("shape[1]:", 0),
            0u);
  EXPECT_EQ(error_of(R"({"format_version": 1, "shape": [1,1,1.5,1], "coeffs": []})").rfind("shape[2]:", 0),
            0u);
  EXPECT_EQ(error_of(R"({"format_version": 1, "shape": [1,1,1,1]})").rfind("coeffs:", 0), 0u);
  EXPECT_EQ(error_of(R"({"format_version": 1, "shape": [2,1,1,1], "coeffs": [[]]})"),
            "coeffs: expected 2 sites, found 1");
  EXPECT_EQ(error_of(one_site(zeros(15))).rfind("coeffs[0]:", 0), 0u);

  std::string bad_pair = zeros(16);
  bad_pair.replace(bad_pair.rfind("[0, 0]"), 6, "[0, 0, 0]");
  EXPECT_EQ(error_of(one_site(bad_pair)).rfind("coeffs[0][15]:", 0), 0u);

  std::string bad_number = zeros(16);
  bad_number.replace(bad_number.find("[0, 0]"), 6, "[0, \"x\"]");
  EXPECT_EQ(error_of(one_site(bad_number)), "coeffs[0][0][1]: expected a number");
}
