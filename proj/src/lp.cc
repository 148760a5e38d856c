// Copyright 2026 The qlhv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlhv/lp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qlhv {

namespace {

constexpr double kPivotTolerance = 1e-11;
constexpr double kReducedCostTolerance = 1e-12;
constexpr double kInsideTolerance = 1e-10;
constexpr int kDegenerateSwitch = 50;

/// Dense tableau for: minimize sum(artificials) s.t. A w + art = b, b >= 0.
class Tableau {
   public:
    Tableau(std::size_t rows, std::size_t structural)
        : m_(rows), n_(structural), width_(structural + rows + 1), cells_((rows + 1) * width_, 0.0), basis_(rows) {}

    double &at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
    double at(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }
    double &rhs(std::size_t r) { return at(r, width_ - 1); }
    double rhs(std::size_t r) const { return at(r, width_ - 1); }
    /// Objective row sits at index m_.
    std::size_t cost_row() const { return m_; }
    std::size_t columns() const { return width_ - 1; }
    std::vector<std::size_t> &basis() { return basis_; }

    void pivot(std::size_t pr, std::size_t pc) {
        const double inv = 1.0 / at(pr, pc);
        for (std::size_t c = 0; c < width_; ++c) {
            at(pr, c) *= inv;
        }
        for (std::size_t r = 0; r <= m_; ++r) {
            if (r == pr) {
                continue;
            }
            const double f = at(r, pc);
            if (f == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c < width_; ++c) {
                at(r, c) -= f * at(pr, c);
            }
            at(r, pc) = 0.0;
        }
        basis_[pr] = pc;
    }

    std::size_t rows() const { return m_; }
    std::size_t structural() const { return n_; }

   private:
    std::size_t m_;
    std::size_t n_;
    std::size_t width_;
    std::vector<double> cells_;
    std::vector<std::size_t> basis_;
};

}  // namespace

HullMembership solve_lp(const std::vector<std::vector<double>> &vertices, const std::vector<double> &target) {
    if (vertices.empty()) {
        throw std::invalid_argument("solve_lp: no vertices");
    }
    const std::size_t d = target.size();
    for (std::size_t j = 0; j < vertices.size(); ++j) {
        if (vertices[j].size() != d) {
            throw std::invalid_argument("solve_lp: vertex " + std::to_string(j) + " has length " +
                                        std::to_string(vertices[j].size()) + ", target has " + std::to_string(d));
        }
    }
    const std::size_t n = vertices.size();
    const std::size_t m = d + 1;

    // Row r < d: sum_j v_j[r] w_j = target[r]; row d: sum_j w_j = 1.
    Tableau tab(m, n);
    std::vector<double> row_sign(m, 1.0);
    for (std::size_t r = 0; r < m; ++r) {
        const double b = r < d ? target[r] : 1.0;
        row_sign[r] = b < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            tab.at(r, j) = row_sign[r] * (r < d ? vertices[j][r] : 1.0);
        }
        tab.at(r, n + r) = 1.0;
        tab.rhs(r) = row_sign[r] * b;
        tab.basis()[r] = n + r;
    }
    // Reduced costs: artificials cost 1, so the priced-out row is -sum of rows.
    const std::size_t z = tab.cost_row();
    for (std::size_t c = 0; c <= tab.columns(); ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
            s += tab.at(r, c);
        }
        tab.at(z, c) = c >= n && c < n + m ? 0.0 : -s;
    }

    HullMembership out;
    int degenerate_run = 0;
    const std::size_t max_pivots = 50 * (n + m);
    while (true) {
        const bool bland = degenerate_run >= kDegenerateSwitch;
        std::size_t enter = tab.columns();
        double best = -kReducedCostTolerance;
        for (std::size_t c = 0; c < tab.columns(); ++c) {
            const double rc = tab.at(z, c);
            if (rc < best) {
                enter = c;
                if (bland) {
                    break;
                }
                best = rc;
            }
        }
        if (enter == tab.columns()) {
            break;
        }
        std::size_t leave = m;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < m; ++r) {
            const double a = tab.at(r, enter);
            if (a > kPivotTolerance) {
                const double ratio = tab.rhs(r) / a;
                if (ratio < best_ratio - 1e-15 ||
                    (ratio <= best_ratio + 1e-15 && leave < m && tab.basis()[r] < tab.basis()[leave])) {
                    best_ratio = ratio;
                    leave = r;
                }
            }
        }
        if (leave == m) {
            // Phase-1 objective is bounded below by zero; an unbounded ray means
            // the tableau has lost accuracy.
            throw std::runtime_error("solve_lp: numerical breakdown (unbounded phase-1 ray)");
        }
        degenerate_run = best_ratio <= 1e-14 ? degenerate_run + 1 : 0;
        tab.pivot(leave, enter);
        ++out.pivots;
        if (static_cast<std::size_t>(out.pivots) > max_pivots) {
            throw std::runtime_error("solve_lp: pivot limit exceeded");
        }
    }

    const double infeasibility = -tab.rhs(z);
    if (infeasibility <= kInsideTolerance * static_cast<double>(m)) {
        out.inside = true;
        out.weights.assign(n, 0.0);
        for (std::size_t r = 0; r < m; ++r) {
            if (tab.basis()[r] < n) {
                out.weights[tab.basis()[r]] = std::max(0.0, tab.rhs(r));
            }
        }
        double total = 0.0;
        for (double w : out.weights) {
            total += w;
        }
        for (double &w : out.weights) {
            w /= total;
        }
        for (std::size_t r = 0; r < d; ++r) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                s += out.weights[j] * vertices[j][r];
            }
            out.residual = std::max(out.residual, std::abs(s - target[r]));
        }
        return out;
    }

    // Simplex multipliers y_r = 1 - reduced cost of artificial r (flipped rows
    // undone). Optimality gives y.(v, 1) <= 0 for every vertex while
    // y.(target, 1) = phase-1 optimum > 0.
    std::vector<double> f(d);
    double scale = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        f[r] = row_sign[r] * (1.0 - tab.at(z, n + r));
        scale = std::max(scale, std::abs(f[r]));
    }
    if (scale == 0.0) {
        throw std::runtime_error("solve_lp: degenerate separating functional");
    }
    for (double &v : f) {
        v /= scale;
    }
    double best_vertex = -std::numeric_limits<double>::infinity();
    for (const auto &v : vertices) {
        double s = 0.0;
        for (std::size_t r = 0; r < d; ++r) {
            s += f[r] * v[r];
        }
        best_vertex = std::max(best_vertex, s);
    }
    double at_target = 0.0;
    for (std::size_t r = 0; r < d; ++r) {
        at_target += f[r] * target[r];
    }
    out.inside = false;
    out.functional = std::move(f);
    out.margin = at_target - best_vertex;
    return out;
}

}  // namespace qlhv
