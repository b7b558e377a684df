#include "tktile/simplex.hpp"

#include "tktile/error.hpp"

#include <string>

namespace tktile {

namespace {
    class Tableau {
    public:
        Tableau(const LinearProgram & lp, std::uint64_t max_pivots) :
            _m(static_cast<std::size_t>(lp.rows)), _max_pivots(max_pivots)
        {
            _sign.assign(_m, 1);
            _b = lp.b;
            for (std::size_t i = 0; i < _m; ++i)
                if (_b[i] < 0) {
                    _sign[i] = -1;
                    _b[i] = -_b[i];
                }
            _columns.reserve(lp.columns.size() + _m);
            for (auto & col : lp.columns) {
                LinearProgram::Column flipped;
                for (auto & [r, v] : col) {
                    if (r < 0 || static_cast<std::size_t>(r) >= _m)
                        throw Error(ErrorKind::invalid_dimension, "LP column entry row out of range");
                    if (v != 0)
                        flipped.emplace_back(r, _sign[static_cast<std::size_t>(r)] > 0 ? v : Rational(-v));
                }
                _columns.push_back(std::move(flipped));
            }
            _structural = _columns.size();

            // Start from unit columns where they exist, artificials elsewhere.
            _basis.assign(_m, SIZE_MAX);
            for (std::size_t j = 0; j < _structural; ++j) {
                auto & col = _columns[j];
                if (col.size() == 1 && col[0].second == 1 && _basis[static_cast<std::size_t>(col[0].first)] == SIZE_MAX)
                    _basis[static_cast<std::size_t>(col[0].first)] = j;
            }
            for (std::size_t i = 0; i < _m; ++i)
                if (_basis[i] == SIZE_MAX) {
                    _basis[i] = _columns.size();
                    _columns.push_back({{static_cast<int>(i), Rational(1)}});
                }
            _binv.assign(_m, std::vector<Rational>(_m, Rational(0)));
            for (std::size_t i = 0; i < _m; ++i)
                _binv[i][i] = 1;
            _xb = _b;
        }

        auto is_artificial(std::size_t j) const -> bool { return j >= _structural; }
        auto structural() const -> std::size_t { return _structural; }
        auto pivots() const -> std::uint64_t { return _pivots; }

        /// Runs simplex for the given costs (indexed over all columns).
        /// Returns false if unbounded.
        auto optimize(const std::vector<Rational> & cost, bool allow_artificial) -> bool
        {
            std::vector<Rational> y(_m), u(_m);
            while (true) {
                duals(cost, y);
                // Dantzig pricing; after a run of degenerate pivots, Bland's
                // lowest-index rule until progress resumes (no cycling).
                const bool bland = _degenerate_run >= _m;
                std::size_t entering = SIZE_MAX;
                Rational most;
                for (std::size_t j = 0; j < _columns.size(); ++j) {
                    if (! allow_artificial && is_artificial(j))
                        continue;
                    Rational d = reduced_cost(cost, y, j);
                    if (d < 0 && (entering == SIZE_MAX || d < most)) {
                        entering = j;
                        most = d;
                        if (bland)
                            break;
                    }
                }
                if (entering == SIZE_MAX)
                    return true;
                column(entering, u);
                std::size_t leave = SIZE_MAX;
                Rational best;
                for (std::size_t i = 0; i < _m; ++i) {
                    if (u[i] <= 0)
                        continue;
                    Rational ratio = _xb[i] / u[i];
                    if (leave == SIZE_MAX || ratio < best || (ratio == best && _basis[i] < _basis[leave])) {
                        leave = i;
                        best = ratio;
                    }
                }
                if (leave == SIZE_MAX)
                    return false;
                _degenerate_run = best == 0 ? _degenerate_run + 1 : 0;
                pivot(leave, entering, u);
            }
        }

        /// Pivots zero-level artificials out of the basis where possible.
        void drive_out_artificials()
        {
            std::vector<Rational> u(_m);
            for (std::size_t i = 0; i < _m; ++i) {
                if (! is_artificial(_basis[i]))
                    continue;
                for (std::size_t j = 0; j < _structural; ++j) {
                    if (in_basis(j))
                        continue;
                    // Row i of B^-1 A_j.
                    Rational v = 0;
                    for (auto & [r, a] : _columns[j])
                        v += _binv[i][static_cast<std::size_t>(r)] * a;
                    if (v != 0) {
                        column(j, u);
                        pivot(i, j, u);
                        break;
                    }
                }
            }
        }

        void duals(const std::vector<Rational> & cost, std::vector<Rational> & y) const
        {
            for (std::size_t r = 0; r < _m; ++r) {
                Rational s = 0;
                for (std::size_t i = 0; i < _m; ++i)
                    if (cost[_basis[i]] != 0 && _binv[i][r] != 0)
                        s += cost[_basis[i]] * _binv[i][r];
                y[r] = s;
            }
        }

        auto reduced_cost(const std::vector<Rational> & cost, const std::vector<Rational> & y, std::size_t j) const -> Rational
        {
            Rational d = cost[j];
            for (auto & [r, a] : _columns[j])
                d -= y[static_cast<std::size_t>(r)] * a;
            return d;
        }

        auto objective(const std::vector<Rational> & cost) const -> Rational
        {
            Rational z = 0;
            for (std::size_t i = 0; i < _m; ++i)
                z += cost[_basis[i]] * _xb[i];
            return z;
        }

        auto solution() const -> std::vector<Rational>
        {
            std::vector<Rational> x(_structural, Rational(0));
            for (std::size_t i = 0; i < _m; ++i)
                if (! is_artificial(_basis[i]))
                    x[_basis[i]] = _xb[i];
            return x;
        }

        /// Duals mapped back to the caller's row signs.
        auto original_duals(const std::vector<Rational> & y) const -> std::vector<Rational>
        {
            std::vector<Rational> out(_m);
            for (std::size_t i = 0; i < _m; ++i)
                out[i] = _sign[i] > 0 ? y[i] : Rational(-y[i]);
            return out;
        }

        auto columns() const -> std::size_t { return _columns.size(); }
        auto rows() const -> std::size_t { return _m; }

    private:
        auto in_basis(std::size_t j) const -> bool
        {
            for (auto b : _basis)
                if (b == j)
                    return true;
            return false;
        }

        void column(std::size_t j, std::vector<Rational> & u) const
        {
            for (std::size_t i = 0; i < _m; ++i) {
                Rational s = 0;
                for (auto & [r, a] : _columns[j])
                    if (_binv[i][static_cast<std::size_t>(r)] != 0)
                        s += _binv[i][static_cast<std::size_t>(r)] * a;
                u[i] = s;
            }
        }

        void pivot(std::size_t leave, std::size_t entering, const std::vector<Rational> & u)
        {
            if (++_pivots > _max_pivots)
                throw BudgetExceeded("simplex pivot limit " + std::to_string(_max_pivots), _pivots - 1);
            Rational p = u[leave];
            for (auto & v : _binv[leave])
                v /= p;
            _xb[leave] /= p;
            for (std::size_t i = 0; i < _m; ++i) {
                if (i == leave || u[i] == 0)
                    continue;
                Rational f = u[i];
                for (std::size_t r = 0; r < _m; ++r)
                    if (_binv[leave][r] != 0)
                        _binv[i][r] -= f * _binv[leave][r];
                _xb[i] -= f * _xb[leave];
            }
            _basis[leave] = entering;
        }

        std::size_t _m;
        std::uint64_t _max_pivots;
        std::uint64_t _pivots = 0;
        std::size_t _degenerate_run = 0;
        std::vector<int> _sign;
        std::vector<Rational> _b;
        std::vector<LinearProgram::Column> _columns;
        std::size_t _structural = 0;
        std::vector<std::size_t> _basis;
        std::vector<std::vector<Rational>> _binv;
        std::vector<Rational> _xb;
    };
}

auto solve_lp(const LinearProgram & lp, std::uint64_t max_pivots) -> LpResult
{
    if (lp.rows < 0 || lp.b.size() != static_cast<std::size_t>(lp.rows) || lp.c.size() != lp.columns.size())
        throw Error(ErrorKind::invalid_dimension, "linear program dimensions are inconsistent");
    Tableau t(lp, max_pivots);
    LpResult result;

    std::vector<Rational> phase1(t.columns(), Rational(0));
    for (std::size_t j = t.structural(); j < t.columns(); ++j)
        phase1[j] = 1;
    t.optimize(phase1, true);
    std::vector<Rational> y(t.rows());
    if (t.objective(phase1) > 0) {
        // Phase-1 duals: every structural column has 0 - y.A_j >= 0 and y.b > 0.
        t.duals(phase1, y);
        result.status = LpStatus::infeasible;
        result.y = t.original_duals(y);
        result.pivots = t.pivots();
        return result;
    }
    t.drive_out_artificials();

    std::vector<Rational> phase2(t.columns(), Rational(0));
    for (std::size_t j = 0; j < t.structural(); ++j)
        phase2[j] = lp.c[j];
    bool bounded = t.optimize(phase2, false);
    result.status = bounded ? LpStatus::optimal : LpStatus::unbounded;
    result.x = t.solution();
    result.objective = t.objective(phase2);
    t.duals(phase2, y);
    result.y = t.original_duals(y);
    result.pivots = t.pivots();
    return result;
}

}
