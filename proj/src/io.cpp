#include "skewcode/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace skewcode::io {

json element_to_json(const GaloisField& field, Elem x) {
    if (x == 0) return "zero";
    return field.log(x);
}

Elem element_from_json(const GaloisField& field, const json& j) {
    if (j.is_string()) return parse_power_string(field, j.get<std::string>());
    if (j.is_number_integer()) return field.antilog(j.get<std::int64_t>());
    throw FormatError("element must be an exponent or \"zero\": " + j.dump());
}

json field_to_json(const GaloisField& field) {
    const auto base = GaloisField::create(field.characteristic(), field.degree(), field.modulus());
    return {{"p", field.characteristic()},
            {"m", field.degree()},
            {"modulus", field.modulus()},
            {"generator", base->log(field.generator())}};
}

FieldPtr field_from_json(const json& j) {
    try {
        const auto p = j.at("p").get<unsigned>();
        const auto m = j.at("m").get<unsigned>();
        const auto modulus = j.at("modulus").get<std::vector<unsigned>>();
        if (!j.contains("generator") || j.at("generator").is_null()) return GaloisField::create(p, m, modulus);
        const auto base = GaloisField::create(p, m, modulus);
        return GaloisField::create(p, m, modulus, element_from_json(*base, j.at("generator")));
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad field description: ") + e.what());
    }
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

FieldPtr resolve_field(const json& entry, const std::filesystem::path& base_dir) {
    if (entry.is_string()) {
        std::filesystem::path p = entry.get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        return load_field(p);
    }
    if (entry.is_object()) return field_from_json(entry);
    throw FormatError("\"field\" must be an object or a file path");
}

FieldPtr load_field(const std::filesystem::path& path) { return field_from_json(read_json(path)); }

json poly_to_json(const SkewPoly& f, const json& field_entry) {
    json coeffs = json::array();
    for (auto c : f.coeffs()) coeffs.push_back(element_to_json(f.field(), c));
    return {{"field", field_entry}, {"theta_power", f.ring().theta().power()}, {"coeffs", coeffs}};
}

SkewPoly poly_from_json(const json& j, const std::filesystem::path& base_dir) {
    try {
        auto field = resolve_field(j.at("field"), base_dir);
        auto ring = SkewRing::create(field, j.value("theta_power", 0U));
        std::vector<Elem> c;
        for (const auto& e : j.at("coeffs")) c.push_back(element_from_json(*field, e));
        return ring->from_coeffs(std::move(c));
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad polynomial: ") + e.what());
    }
}

namespace {

std::string coeff_text(const GaloisField& F, Elem c) {
    if (c == 1) return "1";
    const auto k = F.log(c);
    return k == 1 ? "a" : "a^" + std::to_string(k);
}

template <class Terms>
std::string render_terms(const GaloisField& F, const Terms& descending, std::string_view var) {
    std::string out;
    for (const auto& [k, c] : descending) {
        if (!out.empty()) out += " + ";
        std::string mono;
        if (k == 1)
            mono = std::string(var);
        else if (k > 1)
            mono = std::string(var) + "^" + std::to_string(k);
        if (mono.empty())
            out += coeff_text(F, c);
        else if (c == 1)
            out += mono;
        else
            out += coeff_text(F, c) + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string render(const SkewPoly& f, std::string_view var) {
    std::vector<std::pair<std::uint64_t, Elem>> terms;
    const auto c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        if (c[i] != 0) terms.emplace_back(i, c[i]);
    return render_terms(f.field(), terms, var);
}

std::string render(const TildePoly& f, std::string_view var) {
    std::vector<std::pair<std::uint64_t, Elem>> terms(f.terms().rbegin(), f.terms().rend());
    return render_terms(f.field(), terms, var);
}

std::string render_word(const GaloisField& field, std::span<const Elem> word, std::string_view var) {
    std::vector<std::pair<std::uint64_t, Elem>> terms;
    for (std::size_t i = word.size(); i-- > 0;)
        if (word[i] != 0) terms.emplace_back(i, word[i]);
    return render_terms(field, terms, var);
}

namespace {

class TermParser {
  public:
    TermParser(const GaloisField& F, std::string_view text) : F_(F) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}' && ch != '\\')
                s_ += ch;
    }

    std::map<std::size_t, Elem> parse() {
        std::map<std::size_t, Elem> out;
        if (s_.empty() || s_ == "0") return out;
        bool negate = false;
        if (peek() == '-' || peek() == '+') negate = get() == '-';
        while (true) {
            auto [k, c] = term();
            if (negate) c = F_.neg(c);
            out[k] = F_.add(out[k], c);
            if (pos_ == s_.size()) break;
            const char op = get();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            negate = op == '-';
        }
        return out;
    }

  private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw FormatError("polynomial text '" + s_ + "' at " + std::to_string(pos_) + ": " + msg);
    }

    std::int64_t integer() {
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (get() - '0');
        return neg ? -v : v;
    }

    bool at_alpha() const {
        if (s_.compare(pos_, 5, "alpha") == 0) return true;
        return peek() == 'a';
    }
    bool at_var() const { return peek() == 'x' || peek() == 'X' || peek() == 'z'; }

    std::pair<std::size_t, Elem> term() {
        Elem c = 1;
        bool have_coeff = false;
        bool want_factor = false;
        while (true) {
            if (at_alpha()) {
                pos_ += s_.compare(pos_, 5, "alpha") == 0 ? 5 : 1;
                std::int64_t k = 1;
                if (peek() == '^') {
                    ++pos_;
                    k = integer();
                }
                c = F_.mul(c, F_.antilog(k));
                have_coeff = true;
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c = F_.mul(c, F_.from_int(integer()));
                have_coeff = true;
            } else {
                break;
            }
            want_factor = peek() == '*';
            if (want_factor) ++pos_;
        }
        if (want_factor && !at_var()) fail("expected a factor after '*'");
        std::size_t k = 0;
        if (at_var()) {
            ++pos_;
            k = 1;
            if (peek() == '^') {
                ++pos_;
                const auto e = integer();
                if (e < 0) fail("negative exponent");
                k = static_cast<std::size_t>(e);
            }
        } else if (!have_coeff) {
            fail("expected a term");
        }
        return {k, c};
    }

    const GaloisField& F_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<Elem> parse_poly_coeffs(const GaloisField& field, std::string_view text) {
    const auto terms = TermParser(field, text).parse();
    std::vector<Elem> c;
    for (auto [k, v] : terms) {
        if (c.size() <= k) c.resize(k + 1, 0);
        c[k] = v;
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

SkewPoly parse_poly(const RingPtr& ring, std::string_view text) {
    return ring->from_coeffs(parse_poly_coeffs(ring->field(), text));
}

CodeSpec code_spec_from_json(const json& j, const std::filesystem::path& base_dir) {
    try {
        const json& entry = j.at("field");
        auto field = resolve_field(entry, base_dir);
        auto ring = SkewRing::create(field, j.value("theta_power", 0U));
        const auto n = j.at("n").get<std::size_t>();
        const auto& g = j.at("generator");
        std::vector<Elem> c;
        if (g.is_string()) {
            c = parse_poly_coeffs(*field, g.get<std::string>());
        } else {
            for (const auto& e : g) c.push_back(element_from_json(*field, e));
        }
        std::optional<std::size_t> k, d;
        if (j.contains("k")) k = j.at("k").get<std::size_t>();
        if (j.contains("d")) d = j.at("d").get<std::size_t>();
        auto gen = ring->from_coeffs(std::move(c));
        return CodeSpec{std::move(ring), n, std::move(gen), k, d, entry};
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad code description: ") + e.what());
    }
}

CodeSpec load_code_spec(const std::filesystem::path& path) {
    return code_spec_from_json(read_json(path), path.parent_path());
}

json code_to_json(const SkewCyclicCode& code, const json& field_entry, std::optional<std::size_t> d) {
    json g = json::array();
    for (auto c : code.generator().coeffs()) g.push_back(element_to_json(code.field(), c));
    json out{{"field", field_entry},
             {"theta_power", code.ring().theta().power()},
             {"n", code.length()},
             {"generator", g},
             {"k", code.dimension()}};
    if (d) out["d"] = *d;
    return out;
}

Codeword word_from_json(const GaloisField& field, const json& j) {
    const json& arr = j.is_object() ? (j.contains("coeffs") ? j.at("coeffs") : j.at("message")) : j;
    if (!arr.is_array()) throw FormatError("word must be an array of power-notation elements");
    Codeword w;
    for (const auto& e : arr) w.push_back(element_from_json(field, e));
    return w;
}

json word_to_json(const GaloisField& field, std::span<const Elem> word) {
    json arr = json::array();
    for (auto c : word) arr.push_back(element_to_json(field, c));
    return {{"coeffs", arr}};
}

}  // namespace skewcode::io
