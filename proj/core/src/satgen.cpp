#include <langford/satgen.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace langford::sat {

auto Cnf::literal(VarId var, int value) const -> int
{
    for (const auto & e : literals)
        if (e.var == var && e.value == value)
            return e.index;
    return 0;
}

namespace {
    constexpr int lit_true = std::numeric_limits<int>::max();
    constexpr int lit_false = -lit_true;

    class Encoder {
    public:
        explicit Encoder(const Model & model) :
            _model(model)
        {
            for (std::size_t v = 0; v < model.num_vars(); ++v) {
                const auto & info = model.variable(VarId{v});
                _cnf.var_names.push_back(info.name);
                auto & table = _index.emplace_back();
                _lower.push_back(info.initial.lower());
                if (info.initial.empty())
                    continue;
                table.assign(static_cast<std::size_t>(info.initial.upper() - info.initial.lower()) + 1, 0);
                info.initial.for_each([&](int value) {
                    int idx = ++_cnf.num_vars;
                    table[static_cast<std::size_t>(value - info.initial.lower())] = idx;
                    _cnf.literals.push_back({VarId{v}, value, idx});
                });
            }
        }

        auto run() -> Cnf
        {
            for (std::size_t v = 0; v < _model.num_vars(); ++v)
                exactly_one(VarId{v});
            for (const auto & p : _model.propagators())
                encode(*p);
            return std::move(_cnf);
        }

    private:
        // [var = value], or lit_false when the value is outside the initial domain.
        auto lit(VarId var, int value) const -> int
        {
            const auto & table = _index[var.index];
            auto off = static_cast<long long>(value) - _lower[var.index];
            if (off < 0 || off >= static_cast<long long>(table.size()))
                return lit_false;
            int idx = table[static_cast<std::size_t>(off)];
            return idx == 0 ? lit_false : idx;
        }

        auto domain(VarId var) const -> const DomainSet & { return _model.variable(var).initial; }

        static auto neg(int l) -> int { return -l; }

        auto clause(std::initializer_list<int> lits) -> void { clause(std::vector<int>(lits)); }

        auto clause(std::vector<int> lits) -> void
        {
            if (std::find(lits.begin(), lits.end(), lit_true) != lits.end())
                return;
            std::erase(lits, lit_false);
            _cnf.clauses.push_back(std::move(lits));
        }

        auto fresh() -> int { return ++_cnf.num_vars; }

        auto exactly_one(VarId v) -> void
        {
            auto values = domain(v).values();
            std::vector<int> alo;
            for (int a : values)
                alo.push_back(lit(v, a));
            clause(alo);
            for (std::size_t i = 0; i < values.size(); ++i)
                for (std::size_t j = i + 1; j < values.size(); ++j)
                    clause({neg(lit(v, values[i])), neg(lit(v, values[j]))});
        }

        // Conflict clauses for every value pair the checker rejects.
        auto binary(const Propagator & p, VarId x, VarId y) -> void
        {
            std::vector<int> scratch(_model.num_vars(), 0);
            if (x == y) {
                domain(x).for_each([&](int a) {
                    scratch[x.index] = a;
                    if (! p.check(scratch))
                        clause({neg(lit(x, a))});
                });
                return;
            }
            domain(x).for_each([&](int a) {
                domain(y).for_each([&](int b) {
                    scratch[x.index] = a;
                    scratch[y.index] = b;
                    if (! p.check(scratch))
                        clause({neg(lit(x, a)), neg(lit(y, b))});
                });
            });
        }

        auto all_different(const AllDifferent & p) -> void
        {
            const auto & vars = p.scope();
            for (std::size_t i = 0; i < vars.size(); ++i)
                for (std::size_t j = i + 1; j < vars.size(); ++j)
                    domain(vars[i]).for_each([&](int a) {
                        if (domain(vars[j]).contains(a))
                            clause({neg(lit(vars[i], a)), neg(lit(vars[j], a))});
                    });
        }

        auto element(const ElementOffsetConst & p) -> void
        {
            domain(p.index()).for_each([&](int idx) {
                auto cell = p.cell_for(idx);
                clause({neg(lit(p.index(), idx)), cell ? lit(*cell, p.value()) : lit_false});
            });
        }

        auto channel(const InverseChannel & p) -> void
        {
            const auto & seq = p.seq();
            const auto & pos = p.pos();
            const int length = static_cast<int>(seq.size());
            const int numbers = static_cast<int>(pos.size());

            for (int i = 1; i <= length; ++i) {
                auto cell = seq[static_cast<std::size_t>(i - 1)];
                domain(cell).for_each([&](int m) {
                    std::vector<int> c{neg(lit(cell, m))};
                    if (m >= 1 && m <= numbers)
                        for (auto pv : pos[static_cast<std::size_t>(m - 1)])
                            c.push_back(lit(pv, i));
                    clause(c);
                });
            }
            for (int m = 1; m <= numbers; ++m)
                for (auto pv : pos[static_cast<std::size_t>(m - 1)])
                    domain(pv).for_each([&](int i) {
                        int target = (i >= 1 && i <= length) ? lit(seq[static_cast<std::size_t>(i - 1)], m) : lit_false;
                        clause({neg(lit(pv, i)), target});
                    });
        }

        // r[t][j] <=> at least j of the first t literals are true, for j up to count + 1.
        auto occurrence(const Occurrence & p) -> void
        {
            const auto & vars = p.scope();
            const int total = static_cast<int>(vars.size());
            const int count = p.count();

            std::vector<std::vector<int>> r(static_cast<std::size_t>(total) + 1,
                std::vector<int>(static_cast<std::size_t>(count) + 2, lit_false));
            for (auto & row : r)
                row[0] = lit_true;

            for (int t = 1; t <= total; ++t) {
                int x = lit(vars[static_cast<std::size_t>(t - 1)], p.value());
                for (int j = 1; j <= std::min(t, count + 1); ++j) {
                    int here = fresh();
                    r[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] = here;
                    int stay = r[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(j)];
                    int step = r[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(j - 1)];
                    clause({neg(stay), here});
                    clause({neg(step), neg(x), here});
                    clause({neg(here), stay, step});
                    clause({neg(here), stay, x});
                }
            }
            clause({r[static_cast<std::size_t>(total)][static_cast<std::size_t>(count)]});
            clause({neg(r[static_cast<std::size_t>(total)][static_cast<std::size_t>(count) + 1])});
        }

        auto encode(const Propagator & p) -> void
        {
            switch (p.kind()) {
            case PropagatorKind::EqOffset: {
                const auto & e = static_cast<const EqOffset &>(p);
                binary(p, e.x(), e.y());
                break;
            }
            case PropagatorKind::LessThan: {
                const auto & e = static_cast<const LessThan &>(p);
                binary(p, e.x(), e.y());
                break;
            }
            case PropagatorKind::SumLeq: {
                const auto & e = static_cast<const SumLeq &>(p);
                binary(p, e.x(), e.y());
                break;
            }
            case PropagatorKind::AllDifferent: all_different(static_cast<const AllDifferent &>(p)); break;
            case PropagatorKind::ElementOffsetConst: element(static_cast<const ElementOffsetConst &>(p)); break;
            case PropagatorKind::Occurrence: occurrence(static_cast<const Occurrence &>(p)); break;
            case PropagatorKind::InverseChannel: channel(static_cast<const InverseChannel &>(p)); break;
            }
        }

        const Model & _model;
        Cnf _cnf;
        std::vector<std::vector<int>> _index;
        std::vector<int> _lower;
    };
}

auto encode(const Model & model) -> Cnf
{
    model.validate();
    return Encoder{model}.run();
}

auto write_dimacs(const Cnf & cnf, std::ostream & out) -> void
{
    for (const auto & e : cnf.literals)
        out << "c map " << cnf.var_names[e.var.index] << ' ' << e.value << ' ' << e.index << '\n';
    out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
    for (const auto & c : cnf.clauses) {
        for (int l : c)
            out << l << ' ';
        out << "0\n";
    }
}

auto write_dimacs(const Cnf & cnf, const std::filesystem::path & path) -> void
{
    std::ofstream out(path);
    if (! out)
        throw DimacsError("cannot open '" + path.string() + "' for writing");
    write_dimacs(cnf, out);
    out.flush();
    if (! out)
        throw DimacsError("error writing '" + path.string() + "'");
}

namespace {
    template <typename Resolve>
    auto parse(std::istream & in, Resolve && resolve) -> Cnf
    {
        Cnf cnf;
        std::string line;
        int line_no = 0;
        bool have_header = false;
        std::size_t expected_clauses = 0;
        std::vector<int> current;

        auto fail = [&](const std::string & what) {
            throw DimacsError("line " + std::to_string(line_no) + ": " + what);
        };

        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream s(line);
            std::string head;
            if (! (s >> head))
                continue;
            if (head == "c") {
                std::string tag;
                if ((s >> tag) && tag == "map") {
                    std::string name;
                    int value = 0, index = 0;
                    if (! (s >> name >> value >> index) || index <= 0)
                        fail("malformed map comment");
                    cnf.literals.push_back({resolve(cnf, name, line_no), value, index});
                }
                continue;
            }
            if (head == "p") {
                std::string fmt;
                long long vars = 0, clauses = 0;
                if (have_header || ! (s >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0)
                    fail("malformed header");
                have_header = true;
                cnf.num_vars = static_cast<int>(vars);
                expected_clauses = static_cast<std::size_t>(clauses);
                continue;
            }
            if (! have_header)
                fail("clause before header");
            std::istringstream body(line);
            long long l;
            while (body >> l) {
                if (l == 0) {
                    cnf.clauses.push_back(std::move(current));
                    current.clear();
                }
                else if (std::llabs(l) > cnf.num_vars)
                    fail("literal " + std::to_string(l) + " out of range");
                else
                    current.push_back(static_cast<int>(l));
            }
            if (! body.eof())
                fail("unexpected token");
        }
        if (! have_header)
            throw DimacsError("missing p cnf header");
        if (! current.empty())
            throw DimacsError("unterminated clause at end of input");
        if (cnf.clauses.size() != expected_clauses)
            throw DimacsError("header announces " + std::to_string(expected_clauses) + " clauses, found "
                + std::to_string(cnf.clauses.size()));
        for (const auto & e : cnf.literals)
            if (e.index > cnf.num_vars)
                throw DimacsError("map index " + std::to_string(e.index) + " exceeds variable count");
        return cnf;
    }
}

auto read_dimacs(std::istream & in) -> Cnf
{
    std::map<std::string, std::size_t> ids;
    return parse(in, [&](Cnf & cnf, const std::string & name, int) {
        auto [it, fresh] = ids.try_emplace(name, cnf.var_names.size());
        if (fresh)
            cnf.var_names.push_back(name);
        return VarId{it->second};
    });
}

auto read_dimacs(std::istream & in, const Model & model) -> Cnf
{
    auto cnf = parse(in, [&](Cnf &, const std::string & name, int line_no) {
        auto v = model.find_variable(name);
        if (! v)
            throw DimacsError("line " + std::to_string(line_no) + ": unknown variable '" + name + "'");
        return *v;
    });
    for (const auto & info : model.variables())
        cnf.var_names.push_back(info.name);
    return cnf;
}

auto decode(const Cnf & cnf, const Assignment & bits) -> std::vector<int>
{
    std::vector<int> values(cnf.var_names.size(), 0);
    for (const auto & e : cnf.literals)
        if (static_cast<std::size_t>(e.index) < bits.size() && bits[static_cast<std::size_t>(e.index)])
            values[e.var.index] = e.value;
    return values;
}

namespace {
    class AllSat {
    public:
        AllSat(const Cnf & cnf, std::optional<std::size_t> limit) :
            _num_vars(cnf.num_vars),
            _limit(limit),
            _value(static_cast<std::size_t>(cnf.num_vars) + 1, unassigned),
            _level_of(_value.size(), 0),
            _watches(2 * (static_cast<std::size_t>(cnf.num_vars) + 1))
        {
            std::vector<char> is_projection(_value.size(), 0);
            for (const auto & e : cnf.literals)
                if (! is_projection[static_cast<std::size_t>(e.index)]) {
                    is_projection[static_cast<std::size_t>(e.index)] = 1;
                    _projection.push_back(e.index);
                }
            std::sort(_projection.begin(), _projection.end());
            std::map<VarId, std::vector<int>> by_var;
            for (const auto & e : cnf.literals)
                by_var[e.var].push_back(e.index);
            for (auto & [var, lits] : by_var) {
                std::sort(lits.begin(), lits.end());
                lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
                _groups.push_back(std::move(lits));
            }
            for (int v = 1; v <= _num_vars; ++v)
                if (! is_projection[static_cast<std::size_t>(v)])
                    _order.push_back(v);

            _ok = true;
            for (const auto & c : cnf.clauses)
                if (! add_input_clause(c)) {
                    _ok = false;
                    break;
                }
        }

        auto run() -> AllSatResult
        {
            AllSatResult result;
            if (! _ok)
                return result;

            while (true) {
                if (! propagate()) {
                    if (! backtrack())
                        break;
                    continue;
                }
                auto next = pick();
                if (next == 0) {
                    if (_limit && result.models.size() >= *_limit) {
                        result.truncated = true;
                        break;
                    }
                    result.models.push_back(snapshot());
                    if (! block())
                        break;
                    continue;
                }
                _trail_lim.push_back(_trail.size());
                _decisions.push_back(next);
                enqueue(next);
            }
            return result;
        }

    private:
        static constexpr signed char unassigned = -1;

        static auto code(int lit) -> std::size_t
        {
            return lit > 0 ? 2 * static_cast<std::size_t>(lit) : 2 * static_cast<std::size_t>(-lit) + 1;
        }

        auto value_of(int lit) const -> signed char
        {
            auto v = _value[static_cast<std::size_t>(std::abs(lit))];
            if (v == unassigned)
                return unassigned;
            return lit > 0 ? v : static_cast<signed char>(1 - v);
        }

        auto level() const -> std::size_t { return _trail_lim.size(); }

        auto enqueue(int lit) -> void
        {
            auto var = static_cast<std::size_t>(std::abs(lit));
            _value[var] = lit > 0 ? 1 : 0;
            _level_of[var] = level();
            _trail.push_back(lit);
        }

        auto add_input_clause(std::vector<int> c) -> bool
        {
            std::sort(c.begin(), c.end());
            c.erase(std::unique(c.begin(), c.end()), c.end());
            for (std::size_t i = 0; i + 1 < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j)
                    if (c[i] == -c[j])
                        return true;
            if (c.empty())
                return false;
            if (c.size() == 1) {
                auto v = value_of(c[0]);
                if (v == 0)
                    return false;
                if (v == unassigned)
                    enqueue(c[0]);
                return true;
            }
            attach(std::move(c));
            return true;
        }

        auto attach(std::vector<int> c) -> std::size_t
        {
            auto id = _clauses.size();
            _watches[code(c[0])].push_back(id);
            _watches[code(c[1])].push_back(id);
            _clauses.push_back(std::move(c));
            return id;
        }

        auto propagate() -> bool
        {
            while (_qhead < _trail.size()) {
                int falsified = -_trail[_qhead++];
                auto & ws = _watches[code(falsified)];
                std::size_t keep = 0;
                bool conflict = false;
                for (std::size_t w = 0; w < ws.size(); ++w) {
                    auto ci = ws[w];
                    if (conflict) {
                        ws[keep++] = ci;
                        continue;
                    }
                    auto & c = _clauses[ci];
                    if (c[0] == falsified)
                        std::swap(c[0], c[1]);
                    if (value_of(c[0]) == 1) {
                        ws[keep++] = ci;
                        continue;
                    }
                    bool moved = false;
                    for (std::size_t k = 2; k < c.size(); ++k)
                        if (value_of(c[k]) != 0) {
                            std::swap(c[1], c[k]);
                            _watches[code(c[1])].push_back(ci);
                            moved = true;
                            break;
                        }
                    if (moved)
                        continue;
                    ws[keep++] = ci;
                    if (value_of(c[0]) == 0)
                        conflict = true;
                    else
                        enqueue(c[0]);
                }
                ws.resize(keep);
                if (conflict) {
                    _qhead = _trail.size();
                    return false;
                }
            }
            return true;
        }

        auto undo_level() -> void
        {
            auto target = _trail_lim.back();
            _trail_lim.pop_back();
            while (_trail.size() > target) {
                auto var = static_cast<std::size_t>(std::abs(_trail.back()));
                _value[var] = unassigned;
                _cursor = 0;
                _trail.pop_back();
            }
            _qhead = _trail.size();
        }

        // Flip the most recent decision; its negation holds one level up.
        auto backtrack() -> bool
        {
            if (_decisions.empty())
                return false;
            int d = _decisions.back();
            _decisions.pop_back();
            undo_level();
            _qhead = _trail.size();
            enqueue(-d);
            return true;
        }

        // Smallest live CSP domain first, then its lowest value; auxiliaries
        // only once every CSP variable is fixed.
        auto pick() -> int
        {
            int best = 0;
            std::size_t best_size = 0;
            for (const auto & g : _groups) {
                std::size_t live = 0;
                int first = 0;
                bool fixed = false;
                for (int lit : g) {
                    auto v = _value[static_cast<std::size_t>(lit)];
                    if (v == 1) {
                        fixed = true;
                        break;
                    }
                    if (v == unassigned) {
                        if (live++ == 0)
                            first = lit;
                    }
                }
                if (fixed || live == 0)
                    continue;
                if (best == 0 || live < best_size) {
                    best = first;
                    best_size = live;
                }
            }
            if (best != 0)
                return best;
            while (_cursor < _order.size() && _value[static_cast<std::size_t>(_order[_cursor])] != unassigned)
                ++_cursor;
            return _cursor < _order.size() ? _order[_cursor] : 0;
        }

        auto snapshot() const -> Assignment
        {
            Assignment bits(_value.size(), false);
            for (std::size_t v = 1; v < _value.size(); ++v)
                bits[v] = _value[v] == 1;
            return bits;
        }

        // Adds the blocking clause for the current model and backtracks until it
        // is no longer falsified. Returns false once the search space is exhausted.
        auto block() -> bool
        {
            std::vector<int> c;
            for (int v : _projection)
                if (_value[static_cast<std::size_t>(v)] == 1)
                    c.push_back(-v);
            if (c.empty())
                return false;
            std::stable_sort(c.begin(), c.end(), [&](int a, int b) {
                return _level_of[static_cast<std::size_t>(std::abs(a))] > _level_of[static_cast<std::size_t>(std::abs(b))];
            });

            std::size_t id = _clauses.size();
            if (c.size() >= 2)
                attach(c);
            else
                _clauses.push_back(c);

            auto unassigned_lits = [&]() {
                return std::count_if(_clauses[id].begin(), _clauses[id].end(), [&](int l) { return value_of(l) == unassigned; });
            };
            do {
                if (! backtrack())
                    return false;
            } while (std::all_of(_clauses[id].begin(), _clauses[id].end(), [&](int l) { return value_of(l) == 0; }));

            if (unassigned_lits() == 1 && std::none_of(_clauses[id].begin(), _clauses[id].end(), [&](int l) { return value_of(l) == 1; }))
                for (int l : _clauses[id])
                    if (value_of(l) == unassigned) {
                        enqueue(l);
                        break;
                    }
            return true;
        }

        int _num_vars;
        std::optional<std::size_t> _limit;
        bool _ok = false;
        std::vector<signed char> _value;
        std::vector<std::size_t> _level_of;
        std::vector<std::vector<std::size_t>> _watches;
        std::vector<std::vector<int>> _clauses;
        std::vector<int> _trail;
        std::vector<std::size_t> _trail_lim;
        std::vector<int> _decisions;
        std::size_t _qhead = 0;
        std::vector<int> _projection;
        std::vector<std::vector<int>> _groups;
        std::vector<int> _order;
        std::size_t _cursor = 0;
    };
}

auto allsat_tiny(const Cnf & cnf, std::optional<std::size_t> limit) -> AllSatResult
{
    if (cnf.num_vars > max_allsat_vars)
        throw GuardViolation("formula has " + std::to_string(cnf.num_vars) + " variables; allsat_tiny accepts at most "
            + std::to_string(max_allsat_vars));
    return AllSat{cnf, limit}.run();
}

} // namespace langford::sat
