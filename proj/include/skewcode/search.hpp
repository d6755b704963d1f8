#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "skewcode/distance.hpp"
#include "skewcode/divisor_search.hpp"

namespace skewcode {

/// Best known minimum distances, keyed by (q, n, k).
class ReferenceTable {
  public:
    /// CSV with header q,n,k,best_known_d; duplicate keys are rejected.
    static ReferenceTable load(const std::filesystem::path& path);
    static ReferenceTable parse(std::istream& in);

    void add(std::uint32_t q, std::size_t n, std::size_t k, std::size_t d);
    std::optional<std::size_t> best_known(std::uint32_t q, std::size_t n, std::size_t k) const;
    std::size_t size() const noexcept { return rows_.size(); }

  private:
    std::map<std::tuple<std::uint32_t, std::size_t, std::size_t>, std::size_t> rows_;
};

enum class ReferenceFlag { None, Below, Meets, Beats };
std::string to_string(ReferenceFlag flag);

struct SearchResultRow {
    std::size_t n = 0;
    std::size_t k = 0;
    /// Exact distance, or an upper bound when `exact` is false. Empty when no
    /// distance was computed (divisor search over budget).
    std::optional<std::size_t> d;
    bool exact = false;
    DivisorMode mode = DivisorMode::Exhaustive;
    std::string generator;
    double seconds = 0.0;
    ReferenceFlag reference = ReferenceFlag::None;
    std::string note;
};

struct SearchOptions {
    std::vector<std::size_t> lengths;
    /// Degrees of the generator polynomials, n - k.
    std::vector<std::size_t> degrees;
    DivisorMode mode = DivisorMode::Exhaustive;
    std::uint64_t divisor_budget = std::uint64_t{1} << 24;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    /// Codes with q^k above this get a sampled upper bound instead.
    std::uint64_t distance_budget = std::uint64_t{1} << 24;
    std::uint64_t upper_trials = 100000;
    /// At most this many codes per (n, degree), taken in canonical divisor order.
    std::size_t max_codes = 5000;
    unsigned threads = 0;
    const ReferenceTable* reference = nullptr;
};

/// One row per code, sorted by (n, k, -d, generator). Budget problems are
/// recorded in the row's note rather than thrown.
std::vector<SearchResultRow> run_search(const RingPtr& ring, const SearchOptions& options);

inline constexpr const char* kSearchCsvHeader = "n,k,d,exact,mode,generator,seconds,reference,note";
void write_search_csv(std::ostream& out, const std::vector<SearchResultRow>& rows);

struct TableCheck {
    std::string table;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    bool parsed = false;
    bool divides = false;
    bool dimension = false;
    bool shift_closed = false;
    /// The failing check and the data that shows it, e.g. the nonzero remainder.
    std::string detail;
    double seconds = 0.0;

    bool ok() const noexcept { return parsed && divides && dimension && shift_closed; }
};

/// Checks every row of a table file: {"field", "theta_power", "rows": [{n, k, d, count, generator}]}.
/// Stops after the first failing row.
std::vector<TableCheck> verify_table_file(const std::filesystem::path& path);

/// verify_table_file over every *.json in a directory, in name order.
std::vector<TableCheck> verify_tables(const std::filesystem::path& dir);

}  // namespace skewcode
