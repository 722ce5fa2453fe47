#include "sheafcalc/exceptional.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace sheafcalc {

namespace {

constexpr const char* kTableMagic = "sheafcalc-exc";
constexpr const char* kTableVersion = "v1";

Rat disc_of_rank(const Int& r) {
    Int num = r * r - 1, den = 2 * r * r;
    return Rat(num) / Rat(den);
}

}  // namespace

ExceptionalSlope::ExceptionalSlope(Rat alpha_, Int rank_, Rat disc_, long dy_p_, unsigned dy_q_)
    : alpha(std::move(alpha_)), rank(std::move(rank_)), disc(std::move(disc_)), dy_p(dy_p_), dy_q(dy_q_) {
    std::string tag = "eps(" + std::to_string(dy_p) + "/2^" + std::to_string(dy_q) + ")";
    if (dy_q >= 1 && dy_p % 2 == 0)
        throw std::logic_error(tag + ": dyadic index not in lowest form");
    if (rank < 1) throw std::logic_error(tag + ": rank must be positive");
    if (disc != disc_of_rank(rank))
        throw std::logic_error(tag + ": discriminant is not (1 - 1/r^2)/2 for rank " +
                               rank.get_str());
    if (!is_integer(Rat(rank) * alpha))
        throw std::logic_error(tag + ": rank * slope is not an integer");
    Rat chi = Rat(rank) * (hilbert_p(alpha) - disc);
    if (!is_integer(chi))
        throw std::logic_error(tag + ": chi-integrality fails, chi = " + rat_str(chi));
}

ExceptionalSlope ExceptionalSlope::shifted(long n) const {
    if (n == 0) return *this;
    long p = to_long_checked(Int(dy_p) + (Int(1) << dy_q) * n, "dyadic index");
    return {alpha + n, rank, disc, p, dy_q};
}

CharP2 ExceptionalSlope::character() const {
    return char_from_slope_disc(to_long_checked(rank, "exceptional rank"), alpha, disc);
}

namespace {

// Recursion over reduced dyadic indices inside [0, 1]; integer shifts are
// handled by the caller.
const ExceptionalSlope& eps_fundamental(long p, unsigned q,
                                        std::map<std::pair<long, unsigned>, ExceptionalSlope>& memo) {
    while (q >= 1 && p % 2 == 0) {
        p /= 2;
        --q;
    }
    auto key = std::make_pair(p, q);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (q == 0) {
        auto [it, ok] = memo.emplace(key, ExceptionalSlope{Rat(p), 1, Rat(0), p, 0});
        return it->second;
    }
    const ExceptionalSlope& a = eps_fundamental((p - 1) / 2, q - 1, memo);
    const ExceptionalSlope& b = eps_fundamental((p + 1) / 2, q - 1, memo);
    Rat gamma = (a.alpha + b.alpha) / 2 + (b.disc - a.disc) / (3 + a.alpha - b.alpha);
    Int rank = gamma.get_den();
    auto [it, ok] = memo.emplace(key, ExceptionalSlope{gamma, rank, disc_of_rank(rank), p, q});
    return it->second;
}

}  // namespace

ExceptionalSlope eps(long p, unsigned q) {
    if (q >= 1 && p % 2 == 0)
        throw std::invalid_argument("dyadic index " + std::to_string(p) + "/2^" +
                                    std::to_string(q) + " is not in lowest form");
    // Shift into [0, 1], recurse, shift back.
    long span = to_long_checked(Int(1) << q, "2^q");
    long n = p >= 0 ? p / span : -((-p + span - 1) / span);
    std::map<std::pair<long, unsigned>, ExceptionalSlope> memo;
    return eps_fundamental(p - n * span, q, memo).shifted(n);
}

ExceptionalTable ExceptionalTable::build(unsigned q_max) {
    std::map<std::pair<long, unsigned>, ExceptionalSlope> memo;
    long top = to_long_checked(Int(1) << q_max, "2^q_max");
    for (long p = 0; p < top; ++p) eps_fundamental(p, q_max, memo);
    ExceptionalTable t;
    t.q_max_ = q_max;
    for (auto& kv : memo)
        if (kv.second.alpha >= 0 && kv.second.alpha < 1) t.rows_.push_back(kv.second);
    t.finalize();
    return t;
}

void ExceptionalTable::finalize() {
    std::sort(rows_.begin(), rows_.end(),
              [](const ExceptionalSlope& x, const ExceptionalSlope& y) { return x.alpha < y.alpha; });
    rows_.erase(std::unique(rows_.begin(), rows_.end(),
                            [](const ExceptionalSlope& x, const ExceptionalSlope& y) {
                                return x.alpha == y.alpha;
                            }),
                rows_.end());
    by_rank_.resize(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) by_rank_[i] = i;
    std::sort(by_rank_.begin(), by_rank_.end(), [this](std::size_t i, std::size_t j) {
        if (rows_[i].rank != rows_[j].rank) return rows_[i].rank < rows_[j].rank;
        return rows_[i].alpha < rows_[j].alpha;
    });
}

void ExceptionalTable::save(std::ostream& out) const {
    out << kTableMagic << ' ' << kTableVersion << " qmax=" << q_max_ << '\n';
    for (const auto& e : rows_)
        out << e.dy_p << ' ' << e.dy_q << ' ' << rat_str_explicit(e.alpha) << ' ' << e.rank << ' '
            << rat_str_explicit(e.disc) << '\n';
}

ExceptionalTable ExceptionalTable::load(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw TableFormatError("empty table file");
    std::istringstream hs(header);
    std::string magic, version, qfield;
    hs >> magic >> version >> qfield;
    if (magic != kTableMagic || version != kTableVersion || qfield.rfind("qmax=", 0) != 0)
        throw TableFormatError("bad table header: '" + header + "'");
    ExceptionalTable t;
    try {
        t.q_max_ = static_cast<unsigned>(std::stoul(qfield.substr(5)));
    } catch (const std::exception&) {
        throw TableFormatError("bad table header: '" + header + "'");
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        long p = 0;
        unsigned q = 0;
        std::string alpha_s, rank_s, disc_s;
        if (!(ls >> p >> q >> alpha_s >> rank_s >> disc_s))
            throw TableFormatError("bad table row: '" + line + "'");
        Rat alpha, disc;
        Int rank;
        try {
            alpha = parse_rat(alpha_s);
            disc = parse_rat(disc_s);
            rank = Int(rank_s);
        } catch (const std::invalid_argument&) {
            throw TableFormatError("bad table row: '" + line + "'");
        }
        if (alpha < 0 || alpha >= 1)
            throw TableFormatError("table row outside fundamental window: '" + line + "'");
        // Rows are trusted beyond the constructor checks; duplicate slopes
        // collapse in finalize().
        t.rows_.emplace_back(alpha, rank, disc, p, q);
    }
    t.finalize();
    return t;
}

std::optional<ExceptionalSlope> ExceptionalTable::find_slope(const Rat& alpha) const {
    long n = to_long_checked(rat_floor(alpha), "slope shift");
    Rat f = alpha - n;
    auto it = std::lower_bound(rows_.begin(), rows_.end(), f,
                               [](const ExceptionalSlope& e, const Rat& x) { return e.alpha < x; });
    if (it == rows_.end() || it->alpha != f) return std::nullopt;
    return it->shifted(n);
}

std::vector<ExceptionalSlope> ExceptionalTable::window(const Rat& lo, const Rat& hi) const {
    std::vector<ExceptionalSlope> out;
    if (lo > hi) return out;
    long n_lo = to_long_checked(rat_floor(lo), "window shift");
    long n_hi = to_long_checked(rat_floor(hi), "window shift");
    for (long n = n_lo; n <= n_hi + 1; ++n)
        for (const auto& e : rows_) {
            Rat a = e.alpha + n;
            if (a < lo || a > hi) continue;
            out.push_back(e.shifted(n));
        }
    return out;
}

std::vector<ExceptionalSlope> enumerate_exceptional(unsigned q_max, const Rat& lo, const Rat& hi) {
    if (lo > hi) throw std::invalid_argument("empty slope window");
    return shared_table(q_max)->window(lo, hi);
}

namespace {

std::mutex g_table_mutex;
std::map<unsigned, std::shared_ptr<const ExceptionalTable>>& table_cache() {
    static std::map<unsigned, std::shared_ptr<const ExceptionalTable>> cache;
    return cache;
}
std::string& store_dir_ref() {
    static std::string dir;
    return dir;
}

std::filesystem::path table_path(const std::string& dir, unsigned q_max) {
    return std::filesystem::path(dir) / ("exc-q" + std::to_string(q_max) + ".tbl");
}

}  // namespace

std::shared_ptr<const ExceptionalTable> shared_table(unsigned q_max) {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto& cache = table_cache();
    if (auto it = cache.find(q_max); it != cache.end()) return it->second;

    const std::string dir = store_dir_ref();
    std::shared_ptr<const ExceptionalTable> table;
    if (!dir.empty()) {
        std::ifstream in(table_path(dir, q_max));
        if (in) {
            try {
                auto loaded = ExceptionalTable::load(in);
                if (loaded.q_max() == q_max)
                    table = std::make_shared<const ExceptionalTable>(std::move(loaded));
            } catch (const TableFormatError&) {
                // absent or stale format: fall through and rebuild
            }
        }
    }
    if (!table) {
        table = std::make_shared<const ExceptionalTable>(ExceptionalTable::build(q_max));
        if (!dir.empty()) {
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            std::ofstream out(table_path(dir, q_max));
            if (out) table->save(out);
        }
    }
    cache.emplace(q_max, table);
    return table;
}

void set_table_store_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    store_dir_ref() = dir;
}

std::string table_store_dir() {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    return store_dir_ref();
}

}  // namespace sheafcalc
