#include "skewcode/search.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "skewcode/io.hpp"
#include "skewcode/parallel.hpp"

namespace skewcode {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        cell.erase(0, cell.find_first_not_of(" \t\r"));
        cell.erase(cell.find_last_not_of(" \t\r") + 1);
        out.push_back(cell);
    }
    return out;
}

ReferenceFlag compare(std::optional<std::size_t> best, const SearchResultRow& row) {
    if (!best || !row.d) return ReferenceFlag::None;
    if (*row.d > *best) return row.exact ? ReferenceFlag::Beats : ReferenceFlag::None;
    if (*row.d == *best) return row.exact ? ReferenceFlag::Meets : ReferenceFlag::None;
    return ReferenceFlag::Below;
}

}  // namespace

ReferenceTable ReferenceTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reference table " + path.string());
    return parse(in);
}

ReferenceTable ReferenceTable::parse(std::istream& in) {
    ReferenceTable t;
    std::string line;
    std::size_t line_no = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto cells = split_csv_line(line);
        if (header) {
            if (cells.size() < 4 || cells[0] != "q" || cells[1] != "n" || cells[2] != "k" || cells[3] != "best_known_d")
                throw std::runtime_error("reference table header must start with q,n,k,best_known_d");
            header = false;
            continue;
        }
        if (cells.size() < 4) throw std::runtime_error("reference table line " + std::to_string(line_no) + " is short");
        try {
            t.add(static_cast<std::uint32_t>(std::stoul(cells[0])), std::stoul(cells[1]), std::stoul(cells[2]),
                  std::stoul(cells[3]));
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("reference table line " + std::to_string(line_no) + " is not numeric");
        }
    }
    return t;
}

void ReferenceTable::add(std::uint32_t q, std::size_t n, std::size_t k, std::size_t d) {
    if (!rows_.emplace(std::tuple{q, n, k}, d).second)
        throw std::runtime_error("duplicate reference entry q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
}

std::optional<std::size_t> ReferenceTable::best_known(std::uint32_t q, std::size_t n, std::size_t k) const {
    const auto it = rows_.find({q, n, k});
    if (it == rows_.end()) return std::nullopt;
    return it->second;
}

std::string to_string(ReferenceFlag flag) {
    switch (flag) {
        case ReferenceFlag::None: return "";
        case ReferenceFlag::Below: return "below";
        case ReferenceFlag::Meets: return "meets";
        case ReferenceFlag::Beats: return "beats";
    }
    return "";
}

std::vector<SearchResultRow> run_search(const RingPtr& ring, const SearchOptions& options) {
    const auto& F = ring->field();
    std::vector<SearchResultRow> rows;
    for (const std::size_t n : options.lengths) {
        require_theta_cyclic_length(*ring, n);
        for (const std::size_t degree : options.degrees) {
            if (degree == 0 || degree >= n) continue;
            const auto start = Clock::now();
            DivisorQuery query;
            query.n = n;
            query.degree = degree;
            query.mode = options.mode;
            query.budget = options.divisor_budget;
            query.trials = options.trials;
            query.seed = options.seed;
            query.threads = options.threads;
            DivisorSet found;
            try {
                found = find_right_divisors(ring, query);
            } catch (const BudgetExceeded& e) {
                SearchResultRow row;
                row.n = n;
                row.k = n - degree;
                row.mode = options.mode;
                row.seconds = seconds_since(start);
                row.note = "divisor budget exceeded";
                rows.push_back(std::move(row));
                continue;
            }
            auto& divisors = found.divisors;
            const bool truncated = divisors.size() > options.max_codes;
            if (truncated) divisors.erase(divisors.begin() + static_cast<std::ptrdiff_t>(options.max_codes), divisors.end());

            std::vector<SearchResultRow> batch(divisors.size());
            parallel_blocks(divisors.size(), options.threads, [&](std::uint64_t i, unsigned) {
                const auto t0 = Clock::now();
                const auto code = SkewCyclicCode::from_generator(ring, n, divisors[i]);
                SearchResultRow& row = batch[i];
                row.n = n;
                row.k = code.dimension();
                row.mode = options.mode;
                row.generator = io::render(code.generator(), "x");
                const auto size = message_space_size(code);
                if (size && *size <= options.distance_budget) {
                    DistanceOptions opt;
                    opt.budget = options.distance_budget;
                    opt.threads = 1;
                    row.d = min_distance_exact(code, opt).distance;
                    row.exact = true;
                } else {
                    const auto rep = min_distance_upper(code, options.upper_trials, stream_seed(options.seed, i), 1,
                                                        options.distance_budget);
                    row.d = rep.distance;
                    row.exact = rep.exact();
                    if (!row.exact) row.note = "distance budget exceeded: sampled upper bound";
                }
                if (truncated) row.note += row.note.empty() ? "code cap reached" : "; code cap reached";
                row.seconds = seconds_since(t0);
                if (options.reference) row.reference = compare(options.reference->best_known(F.order(), n, row.k), row);
            });
            for (auto& r : batch) rows.push_back(std::move(r));
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const SearchResultRow& a, const SearchResultRow& b) {
        const long da = a.d ? static_cast<long>(*a.d) : -1, db = b.d ? static_cast<long>(*b.d) : -1;
        return std::tuple(a.n, a.k, -da, a.generator) < std::tuple(b.n, b.k, -db, b.generator);
    });
    return rows;
}

void write_search_csv(std::ostream& out, const std::vector<SearchResultRow>& rows) {
    out << kSearchCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.n << ',' << r.k << ',' << (r.d ? std::to_string(*r.d) : "") << ',' << (r.exact ? "true" : "false")
            << ',' << to_string(r.mode) << ',' << r.generator << ',' << std::fixed << std::setprecision(3) << r.seconds
            << ',' << to_string(r.reference) << ',' << r.note << '\n';
    }
}

std::vector<TableCheck> verify_table_file(const std::filesystem::path& path) {
    const auto doc = io::read_json(path);
    const auto field = io::resolve_field(doc.at("field"), path.parent_path());
    const auto ring = SkewRing::create(field, doc.value("theta_power", 0U));
    std::vector<TableCheck> out;
    for (const auto& entry : doc.at("rows")) {
        const auto start = Clock::now();
        TableCheck c;
        c.table = path.filename().string();
        c.n = entry.at("n").get<std::size_t>();
        c.k = entry.at("k").get<std::size_t>();
        c.d = entry.at("d").get<std::size_t>();
        try {
            const auto g = io::parse_poly(ring, entry.at("generator").get<std::string>());
            c.parsed = true;
            const auto rem = right_divmod(ring->x_n_minus_one(c.n), g).remainder;
            c.divides = rem.is_zero();
            if (!c.divides) {
                c.detail = "X^" + std::to_string(c.n) + " - 1 has remainder " + io::render(rem, "x");
            } else {
                const auto code = SkewCyclicCode::from_generator(ring, c.n, g);
                c.dimension = code.dimension() == c.k;
                if (!c.dimension) c.detail = "dimension " + std::to_string(code.dimension());
                c.shift_closed = true;
                for (std::size_t i = 0; i < code.generator_matrix().size() && c.shift_closed; ++i) {
                    const auto shifted = theta_shift(ring->theta(), code.generator_matrix()[i]);
                    if (!code.is_codeword(shifted)) {
                        c.shift_closed = false;
                        c.detail = "theta shift of row " + std::to_string(i) + " is not a codeword";
                    }
                }
            }
        } catch (const std::exception& e) {
            c.detail = e.what();
        }
        c.seconds = seconds_since(start);
        out.push_back(std::move(c));
        if (!out.back().ok()) break;
    }
    return out;
}

std::vector<TableCheck> verify_tables(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<TableCheck> out;
    for (const auto& f : files) {
        auto part = verify_table_file(f);
        const bool failed = !part.empty() && !part.back().ok();
        out.insert(out.end(), part.begin(), part.end());
        if (failed) break;
    }
    return out;
}

}  // namespace skewcode
