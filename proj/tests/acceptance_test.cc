// Copyright 2026 The qgd Authors
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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero if any fails.

#include <bit>
#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qgd/analytics.h"
#include "qgd/circuit.h"
#include "qgd/expander.h"
#include "qgd/gray_code.h"
#include "qgd/synthesizer.h"
#include "test_util.h"

using namespace qgd;

namespace {

/// Collects failures for one criterion; the first few are printed.
class Check {
   public:
    void expect(bool ok, const std::string &what) {
        ++checks_;
        if (!ok) {
            failures_.push_back(what);
        }
    }
    bool ok() const {
        return failures_.empty() && checks_ > 0;
    }
    std::size_t checks() const {
        return checks_;
    }
    const std::vector<std::string> &failures() const {
        return failures_;
    }
    std::string note;

   private:
    std::size_t checks_ = 0;
    std::vector<std::string> failures_;
};

std::string str(const std::vector<Control> &controls) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < controls.size(); ++i) {
        out << (i ? ", " : "") << "q" << controls[i].qubit << "=" << controls[i].value;
    }
    out << "}";
    return out.str();
}

double limit_for(int n, double per_dim) {
    return per_dim * static_cast<double>(std::uint64_t{1} << n);
}

void reconstruction(Check &c) {
    double worst = 0;
    for (int n = 1; n <= 6; ++n) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            UnitaryMatrix u = haar_random_unitary(n, seed);
            DecompositionResult r = decompose(u);
            double d = distance_up_to_phase(simulate(r.circuit), u);
            worst = std::max(worst, d / limit_for(n, 1.0));
            c.expect(d <= limit_for(n, 1e-9),
                     "n=" + std::to_string(n) + " seed=" + std::to_string(seed) + " distance " + std::to_string(d));
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "worst distance/2^n %.3g", worst);
    c.note = buf;
}

void count_exactness(Check &c) {
    for (int n = 2; n <= 7; ++n) {
        for (std::uint64_t seed = 100; seed < 103; ++seed) {
            DecompositionResult r = decompose(haar_random_unitary(n, seed));
            GateCountProfile expected = recursion_profile(n);
            c.expect(r.profile == expected,
                     "n=" + std::to_string(n) + " profile " + r.profile.str() + " vs " + expected.str());
            c.expect(r.profile.total() == rotation_count(n), "n=" + std::to_string(n) + " rotation total");
            c.expect(r.circuit.gates.size() == rotation_count(n), "n=" + std::to_string(n) + " gate total");
        }
    }
}

void closed_form(Check &c) {
    for (int n = 2; n <= 12; ++n) {
        std::uint64_t expected = 3 * (std::uint64_t{1} << (n - 1)) - 2;
        c.expect(g(n, n - 1) == expected, "n=" + std::to_string(n) + " g(n,n-1)=" + std::to_string(g(n, n - 1)));
    }
}

void bound(Check &c) {
    for (int n = 2; n <= 12; ++n) {
        for (int i = 1; i <= n - 1; ++i) {
            c.expect(g(n, n - i) <= (std::uint64_t{1} << (n + i)),
                     "n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
    }
}

void quarter_formula(Check &c) {
    for (int n = 2; n <= 8; ++n) {
        auto by_pairs = test_support::enumerate_quarter(n);
        auto by_bits = test_support::enumerate_quarter_by_bits(n);
        for (int k = 0; k < n; ++k) {
            c.expect(g0(n, k) == by_pairs[k] && g0(n, k) == by_bits[k],
                     "n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
}

void rule_safety(Check &c) {
    std::size_t total = 0;
    for (int n = 1; n <= 6; ++n) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            DecompositionResult r = decompose(haar_random_unitary(n, seed));
            total += r.escalations;
            c.expect(r.escalations == 0, "n=" + std::to_string(n) + " seed=" + std::to_string(seed) + " escalated " +
                                             std::to_string(r.escalations) + " gates");
        }
    }
    c.note = "escalations " + std::to_string(total);
}

void narrative(Check &c) {
    ControlSpec a = minimal_controls(4, 1, 16);
    c.expect(a.controls.empty(), "(1,16) controls " + str(a.controls));
    ControlSpec b = minimal_controls(4, 1, 15);
    c.expect(b.controls == std::vector<Control>{{1, 1}}, "(1,15) controls " + str(b.controls));
    for (std::size_t j = 10; j <= 16; ++j) {
        if (changed_bit(j, 4) != 1) {
            continue;
        }
        ControlSpec s = minimal_controls(4, 2, j);
        c.expect(s.controls == std::vector<Control>{{4, 1}}, "(2," + std::to_string(j) + ") controls " + str(s.controls));
    }
    GateCountProfile table = control_count_table(4).distribution();
    c.expect(table.counts == std::vector<std::uint64_t>{8, 50, 40, 22}, "n=4 table distribution " + table.str());
    c.expect(recursion_profile(4).str() == "{0:8, 1:50, 2:40, 3:22}", "recursion profile " + recursion_profile(4).str());
}

void expansion(Check &c) {
    for (int n = 1; n <= 4; ++n) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            UnitaryMatrix u = haar_random_unitary(n, 500 + seed);
            Circuit e = expand_circuit(decompose(u).circuit);
            bool elementary = true;
            for (const auto &gate : e.gates) {
                elementary &= std::holds_alternative<SingleQubitGate>(gate) || std::holds_alternative<CnotGate>(gate);
            }
            std::string tag = "n=" + std::to_string(n) + " seed=" + std::to_string(500 + seed);
            c.expect(elementary, tag + " non-elementary gate");
            double d = distance_up_to_phase(simulate(e), u);
            c.expect(d <= limit_for(n, 1e-8), tag + " distance " + std::to_string(d));
        }
    }
    std::mt19937_64 rng(42);
    for (int value : {0, 1}) {
        auto gates = expand_gate(ControlledU2Gate{ControlSpec{1, {{2, value}}}, test_support::random_su2(rng)});
        std::size_t cnots = 0;
        for (const auto &gate : gates) {
            cnots += std::holds_alternative<CnotGate>(gate) ? 1 : 0;
        }
        c.expect(cnots == 2, "single C1 gate with control value " + std::to_string(value) + " has " +
                                 std::to_string(cnots) + " CNOTs");
    }
}

void reference_report(Check &c) {
    std::string text = render_reference_comparison(CostModel::emitted());
    std::size_t differing = 0;
    for (const auto &row : reference_counts()) {
        char prefix[64];
        std::snprintf(prefix, sizeof(prefix), "\n%3d %12llu %12llu ", row.n, static_cast<unsigned long long>(row.cnot),
                      static_cast<unsigned long long>(row.total));
        auto pos = text.find(prefix);
        c.expect(pos != std::string::npos, "row n=" + std::to_string(row.n) + " missing");
        if (pos == std::string::npos) {
            continue;
        }
        std::string line = text.substr(pos + 1, text.find('\n', pos + 1) - pos - 1);
        CnotReport r = cnot_report(row.n, CostModel::emitted());
        bool same = r.cnot == row.cnot && r.total == row.total;
        differing += same ? 0 : 1;
        c.expect(line.find(same ? "match" : "DIFFERS") != std::string::npos,
                 "row n=" + std::to_string(row.n) + " status not reported: " + line);
        c.expect(line.find(std::to_string(r.cnot)) != std::string::npos, "row n=" + std::to_string(row.n) + " model");
    }
    c.expect(reference_counts()[2].cnot == 64 && reference_counts()[2].total == 136, "n=3 reference row");
    c.expect(reference_counts()[8].cnot == 2078668 && reference_counts()[8].total == 4062520, "n=9 reference row");
    c.note = std::to_string(differing) + " of 9 rows differ from the emitted model (reported)";
}

void gray_invariants(Check &c) {
    for (int n = 1; n <= 12; ++n) {
        GrayCodeTable t = gray_code(n);
        const std::size_t size = t.size();
        const std::string tag = "n=" + std::to_string(n);
        c.expect(size == (std::size_t{1} << n), tag + " size");
        std::set<std::uint64_t> seen(t.codes().begin(), t.codes().end());
        c.expect(seen.size() == size && *seen.rbegin() == size - 1, tag + " bijectivity");
        bool half = true;
        for (std::size_t p = 1; p <= size / 2; ++p) {
            half &= t.bit(p, n) == 0 && t.bit(size + 1 - p, n) == 1;
            half &= (t.code(size + 1 - p) ^ t.code(p)) == (std::uint64_t{1} << (n - 1));
        }
        c.expect(half, tag + " half split");
        bool adjacent = true;
        bool transition = true;
        for (std::size_t p = 2; p <= size; ++p) {
            std::uint64_t diff = t.code(p) ^ t.code(p - 1);
            int b = changed_bit(p, n);
            adjacent &= std::popcount(diff) == 1 && diff == (std::uint64_t{1} << (b - 1));
            if (b >= 2) {
                transition &= t.bit(p, b - 1) == 1 && t.bit(p - 1, b - 1) == 1;
                std::uint64_t low = (std::uint64_t{1} << (b - 2)) - 1;
                transition &= (t.code(p) & low) == 0;
            }
        }
        c.expect(adjacent, tag + " adjacency");
        c.expect(transition, tag + " bit b-1 transition");
    }
}

struct Criterion {
    const char *name;
    std::function<void(Check &)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"reconstruction, n = 1..6, 20 Haar seeds each", reconstruction},
        {"control-count profile equals recursion, n = 2..7", count_exactness},
        {"closed form g(n, n-1) = 3*2^(n-1) - 2, n <= 12", closed_form},
        {"bound g(n, n-i) <= 2^(n+i), n <= 12", bound},
        {"quarter formula equals enumeration, n <= 8", quarter_formula},
        {"no control escalations, n <= 6", rule_safety},
        {"four-qubit worked example and distribution", narrative},
        {"elementary expansion, n <= 4", expansion},
        {"reference table report", reference_report},
        {"Gray code invariants, n <= 12", gray_invariants},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].run(check);
        } catch (const std::exception &e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %zu: %s (%zu checks, %.2fs%s%s)\n", check.ok() ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, check.checks(), seconds, check.note.empty() ? "" : "; ", check.note.c_str());
        std::size_t shown = 0;
        for (const auto &f : check.failures()) {
            if (shown++ == 5) {
                std::printf("    ... %zu more\n", check.failures().size() - 5);
                break;
            }
            std::printf("    %s\n", f.c_str());
        }
        failed += check.ok() ? 0 : 1;
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
