#ifndef LANGFORD_ORACLE_HPP
#define LANGFORD_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace langford::oracle {

/// Largest k * n the brute-force enumerator accepts.
inline constexpr int max_cells = 28;

class GuardViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Arrangement
{
    std::vector<int> cells;

    friend auto operator<=>(const Arrangement &, const Arrangement &) = default;
};

enum class Symmetry
{
    None,
    FirstLessLast
};

auto to_string(Symmetry) -> std::string;
auto parse_symmetry(const std::string &) -> Symmetry;

/// True iff cells is an L(k, n) arrangement: each m in 1..n occurs exactly k
/// times with consecutive occurrences m + 1 apart.
auto is_langford(const std::vector<int> & cells, int k, int n) -> bool;

/// Places the chains for n, n-1, ..., 1 over the free cells and calls f with
/// every complete arrangement (order unspecified). Throws GuardViolation.
auto for_each_arrangement(int k, int n, Symmetry symmetry, const std::function<void(const std::vector<int> &)> & f) -> void;

/// All arrangements in lexicographic order. Throws GuardViolation.
auto enumerate_bruteforce(int k, int n, Symmetry symmetry) -> std::vector<Arrangement>;

auto count(int k, int n, Symmetry symmetry) -> std::uint64_t;

struct CountRow
{
    int k;
    int n;
    Symmetry symmetry;
    std::uint64_t count;
};

/// One row per (k, n), k-major. Every cell is checked against the guard
/// before any counting starts.
auto count_table(int k_first, int k_last, int n_first, int n_last, Symmetry symmetry) -> std::vector<CountRow>;

/// CSV with header `k,n,symmetry,count`.
auto write_count_csv(std::ostream &, const std::vector<CountRow> &) -> void;

} // namespace langford::oracle

#endif
