// Command-line front end for the skew-cyclic code library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or budget error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "skewcode/bch.hpp"
#include "skewcode/distance.hpp"
#include "skewcode/divisor_search.hpp"
#include "skewcode/io.hpp"
#include "skewcode/search.hpp"

#ifndef SKEWCODE_DATA_DIR
#define SKEWCODE_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace skewcode;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "5", "4-10", "2,4,6" or a mix such as "2,8-12".
std::vector<std::size_t> parse_range(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        const auto dash = part.find('-');
        try {
            if (dash == std::string::npos) {
                out.push_back(std::stoul(part));
            } else {
                const std::size_t lo = std::stoul(part.substr(0, dash)), hi = std::stoul(part.substr(dash + 1));
                for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
            }
        } catch (const std::logic_error&) {
            throw UsageError("bad range '" + text + "'");
        }
    }
    return out;
}

void emit(const json& j, const std::string& out) {
    if (out.empty() || out == "-")
        std::cout << j.dump(2) << '\n';
    else
        io::write_json(out, j);
}

std::string field_reference(const std::string& path) { return fs::absolute(path).string(); }

struct CodeFile {
    io::CodeSpec spec;
    SkewCyclicCode code;
};

CodeFile load_code(const std::string& path) {
    auto spec = io::load_code_spec(path);
    auto code = SkewCyclicCode::from_generator(spec.ring, spec.n, spec.generator);
    if (spec.k && *spec.k != code.dimension())
        throw std::runtime_error("code file says k = " + std::to_string(*spec.k) + " but the generator gives " +
                                 std::to_string(code.dimension()));
    return {std::move(spec), std::move(code)};
}

json words_json(const GaloisField& F, const std::vector<Codeword>& words) {
    json arr = json::array();
    for (const auto& w : words) arr.push_back(io::render_word(F, w));
    return arr;
}

int cmd_field(const std::string& file, const std::string& builtin, const std::string& out) {
    FieldPtr F;
    if (!builtin.empty()) {
        if (builtin == "gf4")
            F = GaloisField::gf4();
        else if (builtin == "gf9")
            F = GaloisField::gf9();
        else if (builtin == "gf1024")
            F = GaloisField::gf1024();
        else
            throw UsageError("unknown builtin field '" + builtin + "'");
    } else if (!file.empty()) {
        F = io::load_field(file);
    } else {
        throw UsageError("field needs --field or --builtin");
    }
    json desc = io::field_to_json(*F);
    if (!out.empty() && out != "-") {
        io::write_json(out, desc);
        return kOk;
    }
    json info = desc;
    info["q"] = F->order();
    info["alpha_digits"] = F->digits(F->generator());
    json autos = json::array();
    for (unsigned s = 0; s < F->degree(); ++s) {
        const Automorphism th(*F, s);
        autos.push_back({{"theta_power", s}, {"order", th.order()}, {"fixed_field_order", th.fixed_field_order()}});
    }
    info["automorphisms"] = autos;
    std::cout << info.dump(2) << '\n';
    return kOk;
}

int cmd_divisors(const std::string& field, unsigned theta, const DivisorQuery& query, const std::string& out) {
    const auto F = io::load_field(field);
    const auto ring = SkewRing::create(F, theta);
    const auto set = find_right_divisors(ring, query);
    json list = json::array();
    for (const auto& g : set.divisors) {
        json rec = io::poly_to_json(g, field_reference(field));
        rec["degree"] = g.degree();
        rec["mode"] = to_string(query.mode);
        rec["text"] = io::render(g, "x");
        list.push_back(rec);
    }
    emit({{"n", query.n},
          {"degree", query.degree},
          {"mode", to_string(query.mode)},
          {"complete", set.complete},
          {"candidates_tested", set.candidates_tested},
          {"count", set.divisors.size()},
          {"divisors", list}},
         out);
    if (!out.empty() && out != "-") std::cout << set.divisors.size() << " divisors written to " << out << '\n';
    return kOk;
}

int cmd_code_info(const std::string& path) {
    const auto [spec, code] = load_code(path);
    const auto size = message_space_size(code);
    bool closed = true;
    for (const auto& row : code.generator_matrix())
        closed = closed && code.is_codeword(theta_shift(code.ring().theta(), row));
    json info{{"n", code.length()},
              {"k", code.dimension()},
              {"generator_degree", code.generator().degree()},
              {"generator", io::render(code.generator(), "x")},
              {"theta_power", code.ring().theta().power()},
              {"q", code.field().order()},
              {"right_divides", is_right_divisor(code.generator(), code.length())},
              {"shift_closed", closed},
              {"central_modulus", is_central(code.ring().x_n_minus_one(code.length()))}};
    if (size) info["message_space"] = *size;
    if (spec.d) info["d"] = *spec.d;
    std::cout << info.dump(2) << '\n';
    return closed ? kOk : kVerifyFailed;
}

json report_json(const GaloisField& F, const DistanceReport& r) {
    const char* status = r.status == DistanceStatus::Exact          ? "exact"
                         : r.status == DistanceStatus::UpperBound ? "upper-bound"
                                                                  : "target-reached";
    json j{{"distance", r.distance}, {"status", status}, {"messages", r.messages}, {"seconds", r.seconds}};
    if (r.witness) j["witness"] = io::render_word(F, *r.witness);
    return j;
}

int cmd_distance(const std::string& path, std::uint64_t budget, unsigned threads, std::optional<std::size_t> target,
                 std::uint64_t upper_trials, std::uint64_t seed) {
    const auto [spec, code] = load_code(path);
    const auto size = message_space_size(code);
    if (size && *size > kLongDistanceRun && *size <= budget)
        std::cerr << "warning: " << *size << " messages; this enumeration can take hours\n";
    DistanceReport rep;
    if (upper_trials > 0) {
        rep = min_distance_upper(code, upper_trials, seed, threads, budget);
    } else {
        DistanceOptions opt;
        opt.budget = budget;
        opt.threads = threads;
        opt.target = target;
        rep = min_distance_exact(code, opt);
    }
    json j = report_json(code.field(), rep);
    j["n"] = code.length();
    j["k"] = code.dimension();
    std::cout << j.dump(2) << '\n';
    if (spec.d && rep.exact() && rep.distance != *spec.d) {
        std::cerr << "distance differs from the code file's d = " << *spec.d << '\n';
        return kVerifyFailed;
    }
    if (spec.d && rep.distance < *spec.d) {
        std::cerr << "found a codeword of weight " << rep.distance << " < d = " << *spec.d << '\n';
        return kVerifyFailed;
    }
    return kOk;
}

int cmd_search(const std::string& field, unsigned theta, const std::string& lengths, const std::string& degrees,
               SearchOptions opt, const std::string& reference, const std::string& out) {
    const auto F = io::load_field(field);
    const auto ring = SkewRing::create(F, theta);
    opt.lengths = parse_range(lengths);
    opt.degrees = parse_range(degrees);
    std::optional<ReferenceTable> ref;
    if (!reference.empty()) {
        ref = ReferenceTable::load(reference);
        opt.reference = &*ref;
    }
    const auto rows = run_search(ring, opt);
    if (out.empty() || out == "-") {
        write_search_csv(std::cout, rows);
    } else {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write " + out);
        write_search_csv(f, rows);
        std::cout << rows.size() << " rows written to " << out << '\n';
    }
    return kOk;
}

int cmd_bch_gen(const std::string& field, std::size_t n, std::size_t d, const std::string& out,
                const std::string& code_out) {
    const auto F = io::load_field(field);
    const auto ring = SkewRing::create(F, 1);
    const auto g = bch_generator(ring, n, d);
    std::cout << io::render(g, "X") << '\n';
    bool ok = is_right_divisor(g, n);
    for (std::size_t k = 1; k < d; ++k) ok = ok && eval_rem_linear(g, F->antilog(static_cast<std::int64_t>(k))) == 0;
    if (!out.empty()) io::write_json(out, io::poly_to_json(g, field_reference(field)));
    if (!code_out.empty()) {
        const auto code = SkewCyclicCode::from_generator(ring, n, g);
        io::write_json(code_out, io::code_to_json(code, field_reference(field), d));
    }
    return ok ? kOk : kVerifyFailed;
}

int cmd_encode(const std::string& code_path, const std::string& message, const std::string& out) {
    const auto [spec, code] = load_code(code_path);
    const auto msg = io::word_from_json(code.field(), io::read_json(message));
    const auto c = code.encode(msg);
    emit(io::word_to_json(code.field(), c), out);
    if (!out.empty() && out != "-") std::cout << io::render_word(code.field(), c) << '\n';
    return kOk;
}

std::size_t designed_distance(const io::CodeSpec& spec, std::optional<std::size_t> d) {
    if (d) return *d;
    if (spec.d) return *spec.d;
    throw UsageError("designed distance missing: pass --d or put d in the code file");
}

int cmd_decode(const std::string& code_path, const std::string& received, std::optional<std::size_t> d_opt,
               const std::string& strategy, const std::string& out) {
    const auto [spec, code] = load_code(code_path);
    const SkewBchCode bch(code, designed_distance(spec, d_opt));
    const auto& F = code.field();
    const auto b = io::word_from_json(F, io::read_json(received));
    DecodeOptions opt;
    if (strategy == "mod-n")
        opt.strategy = PositionStrategy::ModN;
    else if (strategy != "refined")
        throw UsageError("strategy must be 'refined' or 'mod-n'");
    try {
        const auto res = decode(bch, b, opt);
        json j{{"syndrome", io::render(res.syndrome, "z")}};
        if (res.key_equation) {
            j["sigma"] = io::render(res.key_equation->sigma, "z");
            j["omega"] = io::render(res.key_equation->omega, "z");
        }
        j["roots"] = io::word_to_json(F, res.roots)["coeffs"];
        j["j"] = res.js;
        j["magnitudes"] = io::word_to_json(F, res.magnitudes)["coeffs"];
        j["candidates"] = words_json(F, res.mod_n_candidates);
        j["trialed"] = words_json(F, res.trialed);
        j["error"] = io::render_word(F, res.error);
        j["corrected"] = io::render_word(F, res.corrected);
        std::cout << j.dump(2) << '\n';
        if (!out.empty()) io::write_json(out, io::word_to_json(F, res.corrected));
        return kOk;
    } catch (const DecodeError& e) {
        std::cerr << "decoding failed (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kVerifyFailed;
    }
}

int cmd_roundtrip(const std::string& code_path, std::optional<std::size_t> d_opt, std::uint64_t trials,
                  std::size_t max_errors, std::uint64_t seed) {
    const auto [spec, code] = load_code(code_path);
    const SkewBchCode bch(code, designed_distance(spec, d_opt));
    if (max_errors > bch.correctable())
        std::cerr << "note: max errors " << max_errors << " exceeds t = " << bch.correctable() << '\n';
    const auto stats = roundtrip(bch, trials, max_errors, seed);
    std::cout << stats.successes << "/" << stats.trials << " decoded (" << stats.seconds << " s)\n";
    for (const auto& [kind, count] : stats.failures) std::cout << "  " << kind << ": " << count << '\n';
    return stats.successes == stats.trials ? kOk : kVerifyFailed;
}

int cmd_verify_tables(const std::string& dir) {
    const auto checks = verify_tables(dir);
    bool ok = !checks.empty();
    for (const auto& c : checks) {
        std::cout << (c.ok() ? "PASS " : "FAIL ") << c.table << " (" << c.n << "," << c.k << "," << c.d << ")"
                  << " divides=" << c.divides << " k=" << c.dimension << " shift=" << c.shift_closed;
        if (!c.detail.empty()) std::cout << "  " << c.detail;
        std::cout << '\n';
        ok = ok && c.ok();
    }
    if (checks.empty()) std::cout << "no table files in " << dir << '\n';
    return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skew-cyclic codes over finite fields"};
    app.require_subcommand(1);

    std::string field, builtin, out, code_path, message, received, reference, strategy = "refined";
    std::string tables = std::string(SKEWCODE_DATA_DIR) + "/tables";
    std::string lengths, degrees, mode_text = "exhaustive";
    unsigned theta = 1, threads = 0;
    std::size_t n = 0, degree = 0, max_errors = 3;
    std::optional<std::size_t> d, target;
    std::uint64_t trials = 1000, seed = 1, budget = std::uint64_t{1} << 24;
    std::uint64_t distance_budget = std::uint64_t{1} << 33, upper_trials = 0;
    SearchOptions search;

    auto* field_cmd = app.add_subcommand("field", "Describe or write a field");
    field_cmd->add_option("--field", field, "Field description file");
    field_cmd->add_option("--builtin", builtin, "gf4, gf9 or gf1024");
    field_cmd->add_option("--out", out, "Write the field description here");

    auto* div_cmd = app.add_subcommand("divisors", "Monic right divisors of X^n - 1");
    div_cmd->add_option("--field", field, "Field description file")->required();
    div_cmd->add_option("--theta", theta, "Frobenius power s");
    div_cmd->add_option("--n", n, "Length")->required();
    div_cmd->add_option("--degree", degree, "Divisor degree")->required();
    div_cmd->add_option("--mode", mode_text, "exhaustive, random or dfs");
    div_cmd->add_option("--trials", trials, "Random trials");
    div_cmd->add_option("--seed", seed, "Random seed");
    div_cmd->add_option("--budget", budget, "Largest q^degree scanned exhaustively");
    div_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
    div_cmd->add_option("--out", out, "Output JSON");

    auto* code_cmd = app.add_subcommand("code", "Code utilities");
    auto* info_cmd = code_cmd->add_subcommand("info", "Parameters and checks of a code file");
    info_cmd->add_option("--code", code_path, "Code file")->required();
    code_cmd->require_subcommand(1);

    auto* dist_cmd = app.add_subcommand("distance", "Minimum distance of a code");
    dist_cmd->add_option("--code", code_path, "Code file")->required();
    dist_cmd->add_option("--budget", distance_budget, "Largest q^k enumerated");
    dist_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
    dist_cmd->add_option("--target", target, "Stop once a codeword of weight <= target is seen");
    dist_cmd->add_option("--upper", upper_trials, "Sample this many messages for an upper bound instead");
    dist_cmd->add_option("--seed", seed, "Random seed for --upper");

    auto* search_cmd = app.add_subcommand("search", "Search theta-cyclic codes and tabulate them");
    search_cmd->add_option("--field", field, "Field description file")->required();
    search_cmd->add_option("--theta", theta, "Frobenius power s");
    search_cmd->add_option("--n", lengths, "Lengths, e.g. 30 or 4-12 or 4,6")->required();
    search_cmd->add_option("--degree", degrees, "Generator degrees n-k, same syntax")->required();
    search_cmd->add_option("--mode", mode_text, "exhaustive, random or dfs");
    search_cmd->add_option("--budget", search.divisor_budget, "Largest q^degree scanned exhaustively");
    search_cmd->add_option("--trials", search.trials, "Random divisor trials");
    search_cmd->add_option("--seed", search.seed, "Random seed");
    search_cmd->add_option("--distance-budget", search.distance_budget, "Largest q^k enumerated per code");
    search_cmd->add_option("--upper-trials", search.upper_trials, "Samples for codes over the distance budget");
    search_cmd->add_option("--max-codes", search.max_codes, "Codes kept per (n, degree)");
    search_cmd->add_option("--threads", search.threads, "Worker threads (0: all cores)");
    search_cmd->add_option("--reference", reference, "Best-known table CSV (q,n,k,best_known_d)");
    search_cmd->add_option("--out", out, "Output CSV");

    auto* bch_cmd = app.add_subcommand("bch", "Skew-BCH codes");
    auto* gen_cmd = bch_cmd->add_subcommand("gen", "Generator with designed distance d");
    gen_cmd->add_option("--field", field, "Field description file (q = 2^n)")->required();
    gen_cmd->add_option("--n", n, "Length (= extension degree, even)")->required();
    gen_cmd->add_option("--d", d, "Designed distance")->required();
    gen_cmd->add_option("--out", out, "Write the generator polynomial here");
    gen_cmd->add_option("--code-out", code_path, "Also write a code file");
    bch_cmd->require_subcommand(1);

    auto* enc_cmd = app.add_subcommand("encode", "Encode a message");
    enc_cmd->add_option("--code", code_path, "Code file")->required();
    enc_cmd->add_option("--message", message, "Message file")->required();
    enc_cmd->add_option("--out", out, "Output word file");

    auto* dec_cmd = app.add_subcommand("decode", "Decode a received word of a skew-BCH code");
    dec_cmd->add_option("--code", code_path, "Code file")->required();
    dec_cmd->add_option("--received", received, "Received word file")->required();
    dec_cmd->add_option("--d", d, "Designed distance");
    dec_cmd->add_option("--strategy", strategy, "refined or mod-n");
    dec_cmd->add_option("--out", out, "Write the corrected word here");

    auto* rt_cmd = app.add_subcommand("roundtrip", "Random encode/corrupt/decode trials");
    rt_cmd->add_option("--code", code_path, "Code file")->required();
    rt_cmd->add_option("--d", d, "Designed distance");
    rt_cmd->add_option("--trials", trials, "Number of trials");
    rt_cmd->add_option("--max-errors", max_errors, "Largest error weight");
    rt_cmd->add_option("--seed", seed, "Random seed");

    auto* vt_cmd = app.add_subcommand("verify-tables", "Check the bundled generator tables");
    vt_cmd->add_option("--tables", tables, "Directory of table files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*field_cmd) return cmd_field(field, builtin, out);
        if (*div_cmd) {
            DivisorQuery q;
            q.n = n;
            q.degree = degree;
            q.mode = parse_divisor_mode(mode_text);
            q.budget = budget;
            q.trials = trials;
            q.seed = seed;
            q.threads = threads;
            return cmd_divisors(field, theta, q, out);
        }
        if (*info_cmd) return cmd_code_info(code_path);
        if (*dist_cmd) return cmd_distance(code_path, distance_budget, threads, target, upper_trials, seed);
        if (*search_cmd) {
            search.mode = parse_divisor_mode(mode_text);
            return cmd_search(field, theta, lengths, degrees, search, reference, out);
        }
        if (*gen_cmd) return cmd_bch_gen(field, n, *d, out, code_path);
        if (*enc_cmd) return cmd_encode(code_path, message, out);
        if (*dec_cmd) return cmd_decode(code_path, received, d, strategy, out);
        if (*rt_cmd) return cmd_roundtrip(code_path, d, trials, max_errors, seed);
        if (*vt_cmd) return cmd_verify_tables(tables);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
