// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Each criterion pins its expected values and time budget.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hnk/autsearch.hpp"
#include "hnk/counts.hpp"
#include "hnk/hgraph.hpp"
#include "hnk/io.hpp"
#include "hnk/transitivity.hpp"

using namespace hnk;

namespace {

int failures = 0;
std::uint64_t sampling_seed = 0x484e4bULL;

struct Criterion {
    int number;
    const char* description;
    double time_limit_seconds;
};

void report_line(const Criterion& c, bool ok, const std::string& detail, double seconds) {
    const bool in_time = seconds <= c.time_limit_seconds;
    const bool pass = ok && in_time;
    if (!pass) ++failures;
    std::printf("[%2d] %s  %s  (%s; %.2fs%s)\n", c.number, pass ? "PASS" : "FAIL", c.description,
                detail.c_str(), seconds,
                in_time ? "" : " OVER TIME BUDGET");
    std::fflush(stdout);
}

template <typename Fn>
void run(const Criterion& c, Fn&& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& err) {
        detail = std::string("exception: ") + err.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report_line(c, ok, detail, seconds);
}

// 1. Brute-force order of the (5,3) graph.
void criterion_order_5_3() {
    run({1, "brute-force automorphism order of H(5,3) equals 23040", 60.0},
        [](std::string& detail) {
            const std::uint64_t order = aut_order(HGraph(GraphParams{5, 3}));
            detail = "order=" + std::to_string(order);
            return order == 23040;
        });
}

// 2. Brute-force order of the even component at (6,2).
void criterion_order_6_2_component() {
    run({2, "brute-force automorphism order of the even component of H(6,2) equals 23040", 60.0},
        [](std::string& detail) {
            const std::uint64_t order = aut_order(HGraph(GraphParams{6, 2, Component::even}));
            detail = "order=" + std::to_string(order);
            return order == 23040;
        });
}

// 3. Every stabilizer element of H(5,3) is an extended action for a unique
//    permutation of {1,...,6}.
void criterion_stabilizer_decomposition() {
    run({3, "all 720 stabilizer elements of H(5,3) decompose with distinct sigma in S_6", 300.0},
        [](std::string& detail) {
            const HGraph g(GraphParams{5, 3});
            const StabilizerResult stab = stabilizer_of_empty(g);
            if (stab.order() != 720) {
                detail = "stabilizer order " + std::to_string(stab.order());
                return false;
            }
            std::set<std::size_t> ranks;
            for (std::size_t i = 0; i < stab.order(); ++i) {
                const auto decomposed = decompose_known(stab.element(i), g);
                if (!decomposed || !decomposed->translation_part().is_empty()) {
                    detail = "element #" + std::to_string(i) + " failed to decompose";
                    return false;
                }
                Permutation sigma = decomposed->perm();
                if (decomposed->family() == Family::plain) {
                    std::vector<int> images = sigma.images();
                    images.push_back(6);
                    sigma = Permutation::from_images(std::move(images));
                }
                if (!ranks.insert(permutation_rank(sigma)).second) {
                    detail = "duplicate sigma at element #" + std::to_string(i);
                    return false;
                }
            }
            detail = "decomposed=" + std::to_string(ranks.size()) + "/720";
            return ranks.size() == 720;
        });
}

// 4. Composition law for the extended actions at (5,3), all pairs.
void criterion_composition_law_all_pairs() {
    run({4, "extended-action composition law over all 518400 pairs at (5,3)", 120.0},
        [](std::string& detail) {
            const auto perms = all_permutations(6);
            std::vector<std::array<std::uint8_t, 32>> tables(perms.size());
            for (std::size_t i = 0; i < perms.size(); ++i) {
                for (std::uint32_t x = 0; x < 32; ++x) {
                    tables[i][x] =
                        static_cast<std::uint8_t>(apply_extended_a(perms[i], Subset(5, x)).bits());
                }
            }
            std::size_t checked = 0;
            for (std::size_t i = 0; i < perms.size(); ++i) {
                for (std::size_t j = 0; j < perms.size(); ++j) {
                    const std::size_t product = permutation_rank(perms[i].after(perms[j]));
                    for (std::uint32_t x = 0; x < 32; ++x) {
                        if (tables[i][tables[j][x]] != tables[product][x]) {
                            detail = "law fails at pair (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")";
                            return false;
                        }
                    }
                    ++checked;
                }
            }
            detail = "pairs=" + std::to_string(checked);
            return checked == 518400;
        });
}

// 5. Composition law and automorphism property for the parity-aware family
//    at (7,3), randomized.
void criterion_parity_family_7_3() {
    run({5, "parity-aware family at (7,3): 10^4 composition pairs and 10^3 automorphism checks",
         120.0},
        [](std::string& detail) {
            std::mt19937_64 rng(sampling_seed);
            for (int trial = 0; trial < 10'000; ++trial) {
                const Permutation s1 = random_permutation(8, rng);
                const Permutation s2 = random_permutation(8, rng);
                const Permutation s12 = s1.after(s2);
                for (std::uint32_t x = 0; x < 128; ++x) {
                    const Subset inner = apply_extended_b(s2, Subset(7, x));
                    if (apply_extended_b(s1, inner) != apply_extended_b(s12, Subset(7, x))) {
                        detail = "composition law fails at trial " + std::to_string(trial);
                        return false;
                    }
                }
            }
            const HGraph g(GraphParams{7, 3});
            for (int trial = 0; trial < 1'000; ++trial) {
                const Permutation sigma = random_permutation(8, rng);
                const SymmetryElement e(Subset::empty(7), sigma, Family::extended_b);
                if (!verify_automorphism(e, g).ok) {
                    detail = "action " + sigma.cycle_string() + " is not an automorphism";
                    return false;
                }
            }
            detail = "pairs=10000 automorphism_checks=1000 seed=" + std::to_string(sampling_seed);
            return true;
        });
}

// 6. Weight preservation of the linear transform, exhaustive at both
//    boundary sizes.
void criterion_weight_preservation() {
    run({6, "weight preservation: all of S_6 x weight-3 at n=5 and S_8 x weight-4 at n=7", 300.0},
        [](std::string& detail) {
            std::size_t cases = 0;
            for (const Permutation& sigma : all_permutations(6)) {
                for (const Subset& v : subsets_of_size(5, 3)) {
                    if (apply_extended_linear(sigma, v).weight() != 3) {
                        detail = "violation at n=5, " + sigma.cycle_string();
                        return false;
                    }
                    ++cases;
                }
            }
            for (const Permutation& sigma : all_permutations(8)) {
                for (const Subset& v : subsets_of_size(7, 4)) {
                    if (apply_extended_linear(sigma, v).weight() != 4) {
                        detail = "violation at n=7, " + sigma.cycle_string();
                        return false;
                    }
                    ++cases;
                }
            }
            detail = "cases=" + std::to_string(cases);
            return cases == 720u * 10u + 40320u * 35u;
        });
}

// 7. Diameter formula across both regimes, plus the k=2 components.
void criterion_diameters() {
    run({7, "BFS diameters match the closed forms (odd k <= 5, n <= 12; k=2 components, n <= 10)",
         300.0},
        [](std::string& detail) {
            std::size_t checked = 0;
            for (int k : {1, 3, 5}) {
                for (int n = k + 1; n <= 12; ++n) {
                    const HGraph g(GraphParams{n, k});
                    const PredictedDiameter predicted = predicted_diameter(n, k);
                    if (!predicted.covered) {
                        detail = "missing closed form at (" + std::to_string(n) + "," +
                                 std::to_string(k) + ")";
                        return false;
                    }
                    if (diameter(g) != predicted.value) {
                        detail = "mismatch at (" + std::to_string(n) + "," + std::to_string(k) + ")";
                        return false;
                    }
                    ++checked;
                }
            }
            for (int n = 3; n <= 10; ++n) {
                const HGraph g(GraphParams{n, 2, Component::even});
                if (diameter(g) != n / 2) {
                    detail = "k=2 component mismatch at n=" + std::to_string(n);
                    return false;
                }
                ++checked;
            }
            detail = "grid_points=" + std::to_string(checked);
            return true;
        });
}

// 8. Strict decrease of the general count sequence over its window.
void criterion_monotonicity() {
    run({8, "count sequences strictly decrease on their windows for k <= 25, n = 2k+2 .. 2k+10",
         5.0},
        [](std::string& detail) {
            std::size_t tables = 0;
            for (int k = 2; k <= 25; ++k) {
                for (int n = 2 * k + 2; n <= 2 * k + 10; ++n) {
                    if (!monotonicity_check(u_sequence(SequenceFamily::u_general, k, n)).ok) {
                        detail = "u-general violation at k=" + std::to_string(k) +
                                 ", n=" + std::to_string(n);
                        return false;
                    }
                    ++tables;
                }
            }
            detail = "tables=" + std::to_string(tables);
            return true;
        });
}

// 9. Geodesic transitivity verdicts.
void criterion_geodesic_transitivity() {
    run({9, "geodesic transitivity: H(n,1) n<=5, even components of H(n,2) n<=8, H(5,3); "
            "H(6,3) fails at 2-geodesics",
         900.0},
        [](std::string& detail) {
            for (int n = 2; n <= 5; ++n) {
                const HGraph g(GraphParams{n, 1});
                if (!full_transitivity(g).geodesic_transitive) {
                    detail = "H(" + std::to_string(n) + ",1) not geodesic transitive";
                    return false;
                }
            }
            for (int n = 3; n <= 8; ++n) {
                const HGraph g(GraphParams{n, 2, Component::even});
                if (!full_transitivity(g).geodesic_transitive) {
                    detail = "even component of H(" + std::to_string(n) +
                             ",2) not geodesic transitive";
                    return false;
                }
            }
            {
                const HGraph g(GraphParams{5, 3});
                if (!full_transitivity(g).geodesic_transitive) {
                    detail = "H(5,3) not geodesic transitive";
                    return false;
                }
            }
            {
                // The (6,3) stabilizer has twin swaps and is too large to
                // enumerate; invariant classes certify distinct orbits.
                const HGraph g(GraphParams{6, 3});
                const auto classes = geodesic_invariant_classes(g, 2);
                if (classes.class_count < 2 || classes.representatives.size() < 2) {
                    detail = "H(6,3) did not exhibit >= 2 orbits of 2-geodesics";
                    return false;
                }
                detail = "H(6,3) 2-geodesic invariant classes=" +
                         std::to_string(classes.class_count) + " (distinct orbits certified)";
            }
            return true;
        });
}

// 10. Closed-form neighbor counts equal enumeration everywhere applicable.
void criterion_counts_vs_enumeration() {
    run({10, "closed-form neighbor counts equal enumeration for every family, n <= 10", 300.0},
        [](std::string& detail) {
            std::size_t comparisons = 0;
            for (int k = 2; 2 * k - 1 <= 10; ++k) {
                const int n = 2 * k - 1;
                const HGraph g(GraphParams{n, k});
                const SequenceTable t = u_sequence(SequenceFamily::u_2km1, k);
                for (int m = 1; m <= k - 1; ++m) {
                    for (const Subset& x : subsets_of_size(n, 2 * m)) {
                        if (BigInt(neighbor_count_bruteforce(g, x, k)) != t.at(m)) {
                            detail = "u-2km1 fails at k=" + std::to_string(k) +
                                     ", m=" + std::to_string(m);
                            return false;
                        }
                        ++comparisons;
                    }
                }
            }
            for (int k = 1; 2 * k + 1 <= 10; ++k) {
                const int n = 2 * k + 1;
                const HGraph g(GraphParams{n, k});
                const SequenceTable t = u_sequence(SequenceFamily::u_2kp1, k);
                for (int m = 1; m <= k; ++m) {
                    for (const Subset& x : subsets_of_size(n, 2 * m)) {
                        if (BigInt(neighbor_count_bruteforce(g, x, k)) != t.at(m)) {
                            detail = "u-2kp1 fails at k=" + std::to_string(k) +
                                     ", m=" + std::to_string(m);
                            return false;
                        }
                        ++comparisons;
                    }
                }
                for (int m = 1; m <= k + 1 && 2 * m - 1 <= n; ++m) {
                    for (const Subset& x : subsets_of_size(n, 2 * m - 1)) {
                        const BigInt enumerated(neighbor_count_bruteforce(g, x, k + 1));
                        if (enumerated != odd_size_upper_neighbor_count(k, m)) {
                            detail = "odd-size closed form fails at k=" + std::to_string(k) +
                                     ", m=" + std::to_string(m);
                            return false;
                        }
                        if (m <= k &&
                            enumerated == odd_size_upper_neighbor_count_variant(k, m)) {
                            detail = "rejected variant unexpectedly matches at k=" +
                                     std::to_string(k) + ", m=" + std::to_string(m);
                            return false;
                        }
                        ++comparisons;
                    }
                }
            }
            for (int n = 4; n <= 10; ++n) {
                for (int k = 1; 2 * k + 2 <= n; ++k) {
                    const HGraph g(GraphParams{n, k});
                    const SequenceTable u = u_sequence(SequenceFamily::u_general, k, n);
                    const SequenceTable v = u_sequence(SequenceFamily::v_general, k, n);
                    const Subset a = Subset::singleton(n, 1);
                    for (int p = 1; p <= k - 1 && 2 * p + 1 <= n; ++p) {
                        for (const Subset& x : subsets_of_size(n, 2 * p + 1)) {
                            const BigInt total(common_neighbor_count_bruteforce(g, a, x));
                            const BigInt expected = x.contains(1) ? u.at(p) : v.at(p);
                            if (total != expected) {
                                detail = "common-neighbor count fails at (" + std::to_string(n) +
                                         "," + std::to_string(k) + "), p=" + std::to_string(p);
                                return false;
                            }
                            ++comparisons;
                        }
                    }
                }
            }
            detail = "comparisons=" + std::to_string(comparisons);
            return comparisons > 0;
        });
}

// 11. Report-only probes of the disconnected whole-graph orders.
void criterion_discrepancy_probes() {
    run({11, "discrepancy probes at (3,2) and (5,2): orders recorded, witnesses on disagreement",
         900.0},
        [](std::string& detail) {
            std::string summary;
            for (const auto& [n, k, claimed] :
                 std::vector<std::tuple<int, int, std::uint64_t>>{{3, 2, 192}, {5, 2, 3840}}) {
                const HGraph g(GraphParams{n, k});
                const AutOrderResult oracle = aut_order_detail(g);
                const bool agrees = (oracle.order == claimed);
                std::uint64_t outside = 0;
                std::string witness;
                if (!agrees) {
                    const StabilizerResult stab = stabilizer_of_empty(g);
                    for (std::size_t i = 0; i < stab.order(); ++i) {
                        if (!decompose_known(stab.element(i), g)) {
                            ++outside;
                            if (witness.empty()) {
                                witness = " witness=element#" + std::to_string(i);
                            }
                        }
                    }
                    if (outside == 0) {
                        detail = "disagreement without witness at (" + std::to_string(n) + "," +
                                 std::to_string(k) + ")";
                        return false;
                    }
                }
                summary += "(" + std::to_string(n) + "," + std::to_string(k) +
                           "): oracle=" + std::to_string(oracle.order) +
                           " claimed=" + std::to_string(claimed) +
                           " agrees=" + (agrees ? "true" : "false") + witness + "; ";
            }
            detail = summary + "report-only";
            return true;  // non-failing by design: the record itself is the deliverable
        });
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            sampling_seed = std::strtoull(argv[++i], nullptr, 10);
        }
    }
    std::printf("acceptance suite (seed=%llu)\n",
                static_cast<unsigned long long>(sampling_seed));
    criterion_order_5_3();
    criterion_order_6_2_component();
    criterion_stabilizer_decomposition();
    criterion_composition_law_all_pairs();
    criterion_parity_family_7_3();
    criterion_weight_preservation();
    criterion_diameters();
    criterion_monotonicity();
    criterion_geodesic_transitivity();
    criterion_counts_vs_enumeration();
    criterion_discrepancy_probes();
    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
