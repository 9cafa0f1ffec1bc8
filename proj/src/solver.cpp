#include "drd/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace drd {

namespace {

using Clock = std::chrono::steady_clock;

class BranchAndBound {
public:
    BranchAndBound(const Graph& g, const SolveOptions& opts)
        : g_(g), opts_(opts), n_(g.order())
    {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (g_.degree(a) != g_.degree(b))
                return g_.degree(a) > g_.degree(b);
            return a < b;
        });
        val_.assign(n_, -1);
        cnt2_.assign(n_, 0);
        cnt3_.assign(n_, 0);
        un_.assign(n_, 0);
        for (int v = 0; v < n_; ++v)
            un_[v] = g_.degree(v);
        needy_ = 0;
        for (int v = 0; v < n_; ++v)
            needy_ += is_needy(v);
        min_positive_ = opts_.allow_ones ? 1 : 2;
    }

    SolveResult run()
    {
        start_ = Clock::now();
        if (opts_.initial) {
            if (!is_valid_drdf(g_, *opts_.initial))
                throw std::invalid_argument("gamma_dr: initial labeling is not a valid DRDF");
            best_ = weight(*opts_.initial);
            witness_ = *opts_.initial;
        } else {
            best_ = 3LL * n_;
            witness_ = Labeling(n_, 3);
        }
        abandoned_min_ = best_;
        dfs(0, 0);

        SolveResult res;
        res.value = best_;
        res.witness = witness_;
        res.nodes_expanded = nodes_;
        res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
        if (aborted_) {
            res.status = SolveStatus::Timeout;
            res.lower = std::min(best_, abandoned_min_);
            res.upper = best_;
        } else {
            res.status = SolveStatus::Optimal;
            res.lower = res.upper = best_;
        }
        return res;
    }

private:
    bool is_needy(int v) const
    {
        int w = val_[v];
        if (w == -1 || w == 0)
            return cnt3_[v] == 0 && cnt2_[v] < 2;
        if (w == 1)
            return cnt2_[v] + cnt3_[v] == 0;
        return false;
    }

    // Admissible completion bound: every needy vertex must be resolved by a
    // future positive assignment, and one assignment to x resolves at most
    // |N[x]| of them at cost >= min_positive.
    long long bound_increment(int depth) const
    {
        if (needy_ == 0)
            return 0;
        if (depth >= n_)
            return 3LL * n_; // needy with nothing unassigned: dead
        long long max_closed = g_.degree(order_[depth]) + 1;
        return (needy_ + max_closed - 1) / max_closed * min_positive_;
    }

    // Applies val to x, updating neighbor counters and the needy count.
    // Returns false if some finished vertex became unsatisfiable.
    bool assign(int x, int w, bool& dead)
    {
        dead = false;
        val_[x] = w;
        // x's own neediness may change with its value
        needy_ -= (cnt3_[x] == 0 && cnt2_[x] < 2); // was counted as unassigned-needy
        needy_ += is_needy(x);
        for (int u : g_.neighbors(x)) {
            if (w >= 2) {
                bool before = is_needy(u);
                if (w == 2)
                    ++cnt2_[u];
                else
                    ++cnt3_[u];
                bool after = is_needy(u);
                needy_ += after - before;
            }
            --un_[u];
            if (un_[u] == 0 && (val_[u] == 0 || val_[u] == 1) && is_needy(u))
                dead = true;
        }
        if (un_[x] == 0 && (w == 0 || w == 1) && is_needy(x))
            dead = true;
        return true;
    }

    void unassign(int x, int w)
    {
        for (int u : g_.neighbors(x)) {
            ++un_[u];
            if (w >= 2) {
                bool before = is_needy(u);
                if (w == 2)
                    --cnt2_[u];
                else
                    --cnt3_[u];
                bool after = is_needy(u);
                needy_ += after - before;
            }
        }
        needy_ -= is_needy(x);
        val_[x] = -1;
        needy_ += (cnt3_[x] == 0 && cnt2_[x] < 2);
    }

    void dfs(int depth, long long partial)
    {
        long long entry_f = partial + bound_increment(depth);
        if (aborted_) {
            abandoned_min_ = std::min(abandoned_min_, entry_f);
            return;
        }
        if (entry_f >= best_)
            return;
        if (depth == n_) {
            // incremental checks guarantee validity here
            best_ = partial;
            witness_.values = val_;
            return;
        }
        if (++nodes_ % 1024 == 0 && opts_.timeout.count() > 0 &&
            Clock::now() - start_ >= opts_.timeout) {
            aborted_ = true;
            abandoned_min_ = std::min(abandoned_min_, entry_f);
            return;
        }

        const int x = order_[depth];
        static constexpr int order_no_ones[] = {3, 2, 0};
        static constexpr int order_with_ones[] = {3, 2, 1, 0};
        const int* values = opts_.allow_ones ? order_with_ones : order_no_ones;
        const int nvalues = opts_.allow_ones ? 4 : 3;

        for (int i = 0; i < nvalues; ++i) {
            const int w = values[i];
            if (partial + w >= best_)
                continue;
            bool dead = false;
            assign(x, w, dead);
            if (!dead)
                dfs(depth + 1, partial + w);
            unassign(x, w);
            if (aborted_) {
                abandoned_min_ = std::min(abandoned_min_, entry_f);
                return;
            }
        }
    }

    const Graph& g_;
    const SolveOptions& opts_;
    int n_;
    std::vector<int> order_;
    std::vector<int> val_;
    std::vector<int> cnt2_, cnt3_, un_;
    long long needy_ = 0;
    int min_positive_ = 2;

    long long best_ = 0;
    Labeling witness_;
    long long nodes_ = 0;
    long long abandoned_min_ = 0;
    bool aborted_ = false;
    Clock::time_point start_;
};

} // namespace

SolveResult gamma_dr(const Graph& g, const SolveOptions& opts)
{
    if (g.order() == 0)
        throw std::invalid_argument("gamma_dr requires a non-empty graph");
    BranchAndBound bb(g, opts);
    return bb.run();
}

long long gamma_dr_naive(const Graph& g, bool allow_ones)
{
    const int n = g.order();
    if (n == 0)
        throw std::invalid_argument("gamma_dr_naive requires a non-empty graph");
    if (n > 12)
        throw std::invalid_argument("gamma_dr_naive is capped at n <= 12");

    std::uint16_t nbr[12] = {};
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            nbr[v] |= std::uint16_t(1) << u;

    const int domain[4] = {0, 1, 2, 3};
    const int dsize = allow_ones ? 4 : 3;
    auto digit_value = [&](int d) { return allow_ones ? domain[d] : (d == 0 ? 0 : d + 1); };

    std::vector<int> digits(n, 0);
    long long best = 3LL * n;
    for (;;) {
        long long w = 0;
        for (int v = 0; v < n; ++v)
            w += digit_value(digits[v]);
        if (w < best) {
            std::uint16_t m1 = 0, m2 = 0, m3 = 0;
            for (int v = 0; v < n; ++v) {
                int fv = digit_value(digits[v]);
                if (fv == 1)
                    m1 |= std::uint16_t(1) << v;
                else if (fv == 2)
                    m2 |= std::uint16_t(1) << v;
                else if (fv == 3)
                    m3 |= std::uint16_t(1) << v;
            }
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                int fv = digit_value(digits[v]);
                if (fv == 0) {
                    if (!(nbr[v] & m3) && __builtin_popcount(nbr[v] & m2) < 2)
                        ok = false;
                } else if (fv == 1) {
                    if (!(nbr[v] & (m2 | m3)))
                        ok = false;
                }
            }
            if (ok)
                best = w;
        }
        int pos = 0;
        while (pos < n && ++digits[pos] == dsize) {
            digits[pos] = 0;
            ++pos;
        }
        if (pos == n)
            break;
    }
    return best;
}

} // namespace drd
