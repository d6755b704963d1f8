#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "skewcode/code.hpp"
#include "skewcode/skew_ring.hpp"

namespace skewcode::io {

using nlohmann::json;

class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

json element_to_json(const GaloisField& field, Elem x);
Elem element_from_json(const GaloisField& field, const json& j);

/// {"p", "m", "modulus" (ascending), "generator"}; the generator is written
/// as the power of the default (smallest) primitive element it equals.
json field_to_json(const GaloisField& field);
FieldPtr field_from_json(const json& j);

/// Reads a JSON document from a file.
json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);

/// Resolves a "field" entry: an inline object, or a path relative to base_dir.
FieldPtr resolve_field(const json& entry, const std::filesystem::path& base_dir);
FieldPtr load_field(const std::filesystem::path& path);

json poly_to_json(const SkewPoly& f, const json& field_entry);
SkewPoly poly_from_json(const json& j, const std::filesystem::path& base_dir);

/// Descending alpha-power text, e.g. "X^6 + a^345*X^5 + a^777".
std::string render(const SkewPoly& f, std::string_view var = "X");
std::string render(const TildePoly& f, std::string_view var = "z");
std::string render_word(const GaloisField& field, std::span<const Elem> word, std::string_view var = "X");

/**
 * Parses "x^14 + x^13 + a*x^11 + ... + a^2". Coefficients are "a", "a^k",
 * "alpha^k" or prime-field integers; the variable is x, X or z. Terms may
 * use '-' and juxtaposition ("2 x^6").
 */
std::vector<Elem> parse_poly_coeffs(const GaloisField& field, std::string_view text);
SkewPoly parse_poly(const RingPtr& ring, std::string_view text);

struct CodeSpec {
    RingPtr ring;
    std::size_t n = 0;
    SkewPoly generator;
    std::optional<std::size_t> k;
    std::optional<std::size_t> d;
    json field_entry;
};

/// {"field", "theta_power", "n", "generator": [power...], "k"?, "d"?}.
CodeSpec code_spec_from_json(const json& j, const std::filesystem::path& base_dir);
CodeSpec load_code_spec(const std::filesystem::path& path);
json code_to_json(const SkewCyclicCode& code, const json& field_entry, std::optional<std::size_t> d = std::nullopt);

/// {"coeffs": [power...]} or a bare array.
Codeword word_from_json(const GaloisField& field, const json& j);
json word_to_json(const GaloisField& field, std::span<const Elem> word);

}  // namespace skewcode::io
