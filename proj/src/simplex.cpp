#include "pslat/simplex.hpp"

#include <cstddef>

namespace pslat {

namespace {

struct Tableau {
    // rows: kDim equality constraints; columns: n structural, kDim artificial, rhs.
    std::size_t n = 0;
    std::vector<std::vector<Rat>> row;   // kDim x (n + kDim + 1)
    std::vector<Rat> reduced;            // reduced costs, length n + kDim
    Rat objective = 0;                   // current phase-1 objective (>= 0)
    std::vector<std::size_t> basis;      // basic column per row
    std::vector<bool> retired;           // artificial columns dropped from pricing

    std::size_t rhs() const { return n + kDim; }
};

void pivot(Tableau& t, std::size_t pr, std::size_t pc) {
    auto& prow = t.row[pr];
    const Rat inv = 1 / prow[pc];
    for (auto& x : prow) x *= inv;
    for (std::size_t i = 0; i < kDim; ++i) {
        if (i == pr) continue;
        const Rat f = t.row[i][pc];
        if (f == 0) continue;
        auto& r = t.row[i];
        for (std::size_t j = 0; j <= t.rhs(); ++j) r[j] -= f * prow[j];
    }
    const Rat f = t.reduced[pc];
    if (f != 0) {
        for (std::size_t j = 0; j < t.rhs(); ++j) t.reduced[j] -= f * prow[j];
        t.objective += f * prow[t.rhs()];  // step length is the normalized pivot rhs
    }
    if (t.basis[pr] >= t.n) t.retired[t.basis[pr] - t.n] = true;
    t.basis[pr] = pc;
}

}  // namespace

std::optional<std::vector<Rat>> conic_combination(const std::vector<Ray>& cols,
                                                  const Vec8& target) {
    Tableau t;
    t.n = cols.size();
    t.row.assign(kDim, std::vector<Rat>(t.n + kDim + 1, Rat(0)));
    t.basis.resize(kDim);
    t.retired.assign(kDim, false);

    for (std::size_t i = 0; i < kDim; ++i) {
        const bool flip = target[i] < 0;  // keep rhs nonnegative
        for (std::size_t j = 0; j < t.n; ++j) {
            Rat v(cols[j][i]);
            t.row[i][j] = flip ? Rat(-v) : v;
        }
        t.row[i][t.n + i] = 1;
        t.row[i][t.rhs()] = flip ? Rat(-target[i]) : target[i];
        t.basis[i] = t.n + i;
    }

    // Phase-1 costs: 1 on artificials, 0 on structural columns.
    t.reduced.assign(t.n + kDim, Rat(0));
    for (std::size_t j = 0; j < t.n; ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < kDim; ++i) s += t.row[i][j];
        t.reduced[j] = -s;
    }
    for (std::size_t i = 0; i < kDim; ++i) t.objective += t.row[i][t.rhs()];

    for (;;) {
        // Bland: entering column = smallest index with negative reduced cost.
        std::size_t enter = t.rhs();
        for (std::size_t j = 0; j < t.rhs(); ++j) {
            if (j >= t.n && t.retired[j - t.n]) continue;
            if (t.reduced[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == t.rhs()) break;

        std::size_t leave = kDim;
        Rat best;
        for (std::size_t i = 0; i < kDim; ++i) {
            if (t.row[i][enter] <= 0) continue;
            Rat ratio = t.row[i][t.rhs()] / t.row[i][enter];
            if (leave == kDim || ratio < best ||
                (ratio == best && t.basis[i] < t.basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        // Phase-1 objective is bounded below by 0, so an improving column
        // always admits a pivot.
        if (leave == kDim) throw std::logic_error("phase-1 simplex: unbounded column");
        pivot(t, leave, enter);
    }

    if (t.objective != 0) return std::nullopt;

    std::vector<Rat> lambda(t.n, Rat(0));
    for (std::size_t i = 0; i < kDim; ++i)
        if (t.basis[i] < t.n) lambda[t.basis[i]] = t.row[i][t.rhs()];
    return lambda;
}

bool in_conic_hull(const std::vector<Ray>& cols, const Vec8& target) {
    return conic_combination(cols, target).has_value();
}

}  // namespace pslat
