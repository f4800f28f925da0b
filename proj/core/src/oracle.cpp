#include <langford/oracle.hpp>

#include <algorithm>
#include <ostream>

namespace langford::oracle {

auto to_string(Symmetry s) -> std::string
{
    return s == Symmetry::None ? "none" : "first-less-last";
}

auto parse_symmetry(const std::string & s) -> Symmetry
{
    if (s == "none")
        return Symmetry::None;
    if (s == "first-less-last")
        return Symmetry::FirstLessLast;
    throw std::invalid_argument("unknown oracle symmetry '" + s + "'");
}

auto is_langford(const std::vector<int> & cells, int k, int n) -> bool
{
    if (static_cast<long long>(cells.size()) != static_cast<long long>(k) * n)
        return false;
    for (int m = 1; m <= n; ++m) {
        std::vector<int> at;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i] == m)
                at.push_back(static_cast<int>(i));
        if (static_cast<int>(at.size()) != k)
            return false;
        for (std::size_t t = 1; t < at.size(); ++t)
            if (at[t] - at[t - 1] != m + 1)
                return false;
    }
    return std::all_of(cells.begin(), cells.end(), [&](int v) { return v >= 1 && v <= n; });
}

namespace {
    auto check_guard(int k, int n) -> void
    {
        if (k < 1 || n < 1)
            throw GuardViolation("k and n must be positive");
        if (static_cast<long long>(k) * n > max_cells)
            throw GuardViolation("L(" + std::to_string(k) + "," + std::to_string(n) + ") has "
                + std::to_string(static_cast<long long>(k) * n) + " cells; the brute-force limit is "
                + std::to_string(max_cells));
    }

    struct Placer
    {
        int k;
        int n;
        Symmetry symmetry;
        const std::function<void(const std::vector<int> &)> & emit;
        std::vector<int> cells;

        auto place(int m) -> void
        {
            if (m == 0) {
                if (symmetry == Symmetry::None || cells.front() < cells.back())
                    emit(cells);
                return;
            }
            int length = static_cast<int>(cells.size());
            int span = (k - 1) * (m + 1);
            for (int start = 0; start + span < length; ++start) {
                bool free = true;
                for (int t = 0; t < k && free; ++t)
                    free = cells[static_cast<std::size_t>(start + t * (m + 1))] == 0;
                if (! free)
                    continue;
                for (int t = 0; t < k; ++t)
                    cells[static_cast<std::size_t>(start + t * (m + 1))] = m;
                place(m - 1);
                for (int t = 0; t < k; ++t)
                    cells[static_cast<std::size_t>(start + t * (m + 1))] = 0;
            }
        }
    };
}

auto for_each_arrangement(int k, int n, Symmetry symmetry, const std::function<void(const std::vector<int> &)> & f) -> void
{
    check_guard(k, n);
    Placer placer{k, n, symmetry, f, std::vector<int>(static_cast<std::size_t>(k * n), 0)};
    placer.place(n);
}

auto enumerate_bruteforce(int k, int n, Symmetry symmetry) -> std::vector<Arrangement>
{
    std::vector<Arrangement> result;
    for_each_arrangement(k, n, symmetry, [&](const std::vector<int> & cells) { result.push_back({cells}); });
    std::sort(result.begin(), result.end());
    return result;
}

auto count(int k, int n, Symmetry symmetry) -> std::uint64_t
{
    std::uint64_t c = 0;
    for_each_arrangement(k, n, symmetry, [&](const std::vector<int> &) { ++c; });
    return c;
}

auto count_table(int k_first, int k_last, int n_first, int n_last, Symmetry symmetry) -> std::vector<CountRow>
{
    for (int k = k_first; k <= k_last; ++k)
        for (int n = n_first; n <= n_last; ++n)
            check_guard(k, n);

    std::vector<CountRow> rows;
    for (int k = k_first; k <= k_last; ++k)
        for (int n = n_first; n <= n_last; ++n)
            rows.push_back({k, n, symmetry, count(k, n, symmetry)});
    return rows;
}

auto write_count_csv(std::ostream & out, const std::vector<CountRow> & rows) -> void
{
    out << "k,n,symmetry,count\n";
    for (const auto & r : rows)
        out << r.k << ',' << r.n << ',' << to_string(r.symmetry) << ',' << r.count << '\n';
}

} // namespace langford::oracle
