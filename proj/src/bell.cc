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

#include "qlhv/bell.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qlhv/lp.h"

namespace qlhv {

namespace {

constexpr double kBehaviorTolerance = 1e-10;

/// p_A(+|x), p_B(+|y), p(+,+|x,y).
std::vector<double> collins_gisin(const Behavior &b) {
    const std::size_t na = b.n_settings_a();
    const std::size_t nb = b.n_settings_b();
    std::vector<double> v;
    v.reserve(na + nb + na * nb);
    for (std::size_t x = 0; x < na; ++x) {
        v.push_back(b.marginal_a(x, +1));
    }
    for (std::size_t y = 0; y < nb; ++y) {
        v.push_back(b.marginal_b(y, +1));
    }
    for (std::size_t x = 0; x < na; ++x) {
        for (std::size_t y = 0; y < nb; ++y) {
            v.push_back(b.p(x, y, +1, +1));
        }
    }
    return v;
}

std::vector<double> deterministic_collins_gisin(std::size_t na, std::size_t nb, std::size_t k) {
    std::vector<double> v;
    v.reserve(na + nb + na * nb);
    for (std::size_t x = 0; x < na; ++x) {
        v.push_back((k >> x) & 1U ? 0.0 : 1.0);
    }
    for (std::size_t y = 0; y < nb; ++y) {
        v.push_back((k >> (na + y)) & 1U ? 0.0 : 1.0);
    }
    for (std::size_t x = 0; x < na; ++x) {
        for (std::size_t y = 0; y < nb; ++y) {
            v.push_back(v[x] * v[na + y]);
        }
    }
    return v;
}

double dot(const std::vector<double> &a, const std::vector<double> &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

}  // namespace

int outcome_index(int outcome) {
    if (outcome == 1) {
        return 0;
    }
    if (outcome == -1) {
        return 1;
    }
    throw std::invalid_argument("outcome must be +1 or -1, got " + std::to_string(outcome));
}

bool BehaviorCheck::valid(double tolerance) const {
    return min_entry >= -tolerance && normalization_error <= tolerance && signaling <= tolerance;
}

BehaviorCheck check_behavior(std::size_t n_a, std::size_t n_b, const std::vector<double> &table) {
    if (n_a == 0 || n_b == 0) {
        throw std::invalid_argument("behavior: each party needs at least one setting");
    }
    if (table.size() != Behavior::table_size(n_a, n_b)) {
        throw std::invalid_argument("behavior: table has " + std::to_string(table.size()) + " entries, expected " +
                                    std::to_string(Behavior::table_size(n_a, n_b)));
    }
    auto at = [&](std::size_t x, std::size_t y, int ia, int ib) { return table[((x * n_b + y) * 2 + ia) * 2 + ib]; };
    BehaviorCheck c;
    c.min_entry = *std::min_element(table.begin(), table.end());
    for (std::size_t x = 0; x < n_a; ++x) {
        for (std::size_t y = 0; y < n_b; ++y) {
            const double s = at(x, y, 0, 0) + at(x, y, 0, 1) + at(x, y, 1, 0) + at(x, y, 1, 1);
            c.normalization_error = std::max(c.normalization_error, std::abs(s - 1.0));
            // Alice's marginal against Bob's first setting, and vice versa.
            for (int ia = 0; ia < 2; ++ia) {
                const double m = at(x, y, ia, 0) + at(x, y, ia, 1);
                const double m0 = at(x, 0, ia, 0) + at(x, 0, ia, 1);
                c.signaling = std::max(c.signaling, std::abs(m - m0));
            }
            for (int ib = 0; ib < 2; ++ib) {
                const double m = at(x, y, 0, ib) + at(x, y, 1, ib);
                const double m0 = at(0, y, 0, ib) + at(0, y, 1, ib);
                c.signaling = std::max(c.signaling, std::abs(m - m0));
            }
        }
    }
    return c;
}

Behavior::Behavior(std::size_t n_settings_a, std::size_t n_settings_b, std::vector<double> table)
    : n_a_(n_settings_a), n_b_(n_settings_b), table_(std::move(table)) {
    const BehaviorCheck c = check_behavior(n_a_, n_b_, table_);
    if (c.min_entry < -kBehaviorTolerance) {
        throw std::invalid_argument("behavior: negative probability " + std::to_string(c.min_entry));
    }
    if (c.normalization_error > kBehaviorTolerance) {
        throw std::invalid_argument("behavior: normalization off by " + std::to_string(c.normalization_error));
    }
    if (c.signaling > kBehaviorTolerance) {
        throw std::invalid_argument("behavior: signaling by " + std::to_string(c.signaling));
    }
}

double Behavior::marginal_a(std::size_t x, int a) const { return p(x, 0, a, +1) + p(x, 0, a, -1); }

double Behavior::marginal_b(std::size_t y, int b) const { return p(0, y, +1, b) + p(0, y, -1, b); }

double Behavior::correlator(std::size_t x, std::size_t y) const {
    return p(x, y, +1, +1) - p(x, y, +1, -1) - p(x, y, -1, +1) + p(x, y, -1, -1);
}

DeterministicStrategy DeterministicStrategy::from_index(std::size_t n_a, std::size_t n_b, std::size_t k) {
    DeterministicStrategy s;
    for (std::size_t x = 0; x < n_a; ++x) {
        s.assign_a.push_back((k >> x) & 1U ? -1 : +1);
    }
    for (std::size_t y = 0; y < n_b; ++y) {
        s.assign_b.push_back((k >> (n_a + y)) & 1U ? -1 : +1);
    }
    return s;
}

Behavior DeterministicStrategy::behavior() const {
    const std::size_t na = assign_a.size();
    const std::size_t nb = assign_b.size();
    std::vector<double> table(Behavior::table_size(na, nb), 0.0);
    for (std::size_t x = 0; x < na; ++x) {
        for (std::size_t y = 0; y < nb; ++y) {
            const std::size_t i = ((x * nb + y) * 2 + outcome_index(assign_a[x])) * 2 + outcome_index(assign_b[y]);
            table[i] = 1.0;
        }
    }
    return Behavior(na, nb, std::move(table));
}

Behavior build_behavior(const DensityMatrix &state, const std::vector<Povm> &alice, const std::vector<Povm> &bob) {
    if (!state.bipartite()) {
        throw std::invalid_argument("build_behavior: state must be a two-qubit density matrix");
    }
    if (alice.empty() || bob.empty()) {
        throw std::invalid_argument("build_behavior: each party needs at least one measurement");
    }
    auto check = [](const std::vector<Povm> &ms, const char *who) {
        for (const Povm &m : ms) {
            if (m.dim() != 2 || m.size() != 2) {
                throw std::invalid_argument(std::string("build_behavior: ") + who +
                                            " measurements must be dichotomic qubit POVMs");
            }
        }
    };
    check(alice, "Alice");
    check(bob, "Bob");
    const std::size_t na = alice.size();
    const std::size_t nb = bob.size();
    std::vector<double> table(Behavior::table_size(na, nb));
    for (std::size_t x = 0; x < na; ++x) {
        for (std::size_t y = 0; y < nb; ++y) {
            for (int a : kOutcomes) {
                for (int b : kOutcomes) {
                    const std::size_t i = ((x * nb + y) * 2 + outcome_index(a)) * 2 + outcome_index(b);
                    table[i] = born_probability(state, alice[x].effect_for(a), bob[y].effect_for(b));
                }
            }
        }
    }
    return Behavior(na, nb, std::move(table));
}

LocalityResult is_local(const Behavior &behavior) {
    const std::size_t na = behavior.n_settings_a();
    const std::size_t nb = behavior.n_settings_b();
    if (na > kMaxBellSettings || nb > kMaxBellSettings) {
        throw std::invalid_argument("is_local: " + std::to_string(na) + "x" + std::to_string(nb) +
                                    " scenario exceeds the " + std::to_string(kMaxBellSettings) +
                                    "-setting cap (" + std::to_string(1ULL << (na + nb)) +
                                    " deterministic strategies)");
    }
    const std::size_t count = std::size_t{1} << (na + nb);
    std::vector<std::vector<double>> vertices(count);
    for (std::size_t k = 0; k < count; ++k) {
        vertices[k] = deterministic_collins_gisin(na, nb, k);
    }
    const HullMembership hull = solve_lp(vertices, collins_gisin(behavior));

    LocalityResult out;
    out.pivots = hull.pivots;
    if (hull.inside) {
        out.local = true;
        out.weights = hull.weights;
        std::vector<double> mix(behavior.table().size(), 0.0);
        for (std::size_t k = 0; k < count; ++k) {
            if (out.weights[k] == 0.0) {
                continue;
            }
            const Behavior v = DeterministicStrategy::from_index(na, nb, k).behavior();
            for (std::size_t i = 0; i < mix.size(); ++i) {
                mix[i] += out.weights[k] * v.table()[i];
            }
        }
        for (std::size_t i = 0; i < mix.size(); ++i) {
            out.reconstruction_error = std::max(out.reconstruction_error, std::abs(mix[i] - behavior.table()[i]));
        }
        return out;
    }

    // Lift the functional to the full table so it can be evaluated on any
    // behavior without going through Collins-Gisin coordinates.
    const std::vector<double> &f = hull.functional;
    std::vector<double> g(behavior.table().size(), 0.0);
    for (std::size_t x = 0; x < na; ++x) {
        for (int b : kOutcomes) {
            g[behavior.index(x, 0, +1, b)] += f[x];
        }
    }
    for (std::size_t y = 0; y < nb; ++y) {
        for (int a : kOutcomes) {
            g[behavior.index(0, y, a, +1)] += f[na + y];
        }
    }
    for (std::size_t x = 0; x < na; ++x) {
        for (std::size_t y = 0; y < nb; ++y) {
            g[behavior.index(x, y, +1, +1)] += f[na + nb + x * nb + y];
        }
    }
    out.local_bound = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < count; ++k) {
        out.local_bound = std::max(out.local_bound, dot(g, DeterministicStrategy::from_index(na, nb, k).behavior().table()));
    }
    out.value = dot(g, behavior.table());
    out.margin = out.value - out.local_bound;
    out.functional = std::move(g);
    return out;
}

double chsh_value(const Behavior &behavior) {
    if (behavior.n_settings_a() != 2 || behavior.n_settings_b() != 2) {
        throw std::invalid_argument("chsh_value: needs a 2x2 scenario");
    }
    double best = 0.0;
    for (std::size_t flip = 0; flip < 4; ++flip) {
        double s = 0.0;
        for (std::size_t x = 0; x < 2; ++x) {
            for (std::size_t y = 0; y < 2; ++y) {
                const double sign = (x * 2 + y) == flip ? -1.0 : 1.0;
                s += sign * behavior.correlator(x, y);
            }
        }
        best = std::max(best, std::abs(s));
    }
    return best;
}

ChshSettings chsh_settings() {
    const double r = 1.0 / std::sqrt(2.0);
    return {{BlochVector::unit_z(), BlochVector::unit_x()},
            {BlochVector::normalized(r, 0.0, r), BlochVector::normalized(-r, 0.0, r)}};
}

}  // namespace qlhv
