#include "chromsym/classify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "chromsym/tableaux.hpp"

namespace chromsym {

nlohmann::json VerificationReport::to_json() const {
    return {{"scope", scope},
            {"instances", instances},
            {"failures", failures},
            {"elapsed_ms", elapsed_ms}};
}

int sweep_worker_count() {
    if (const char* env = std::getenv("CHROMSYM_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs check(i) over 0..count-1, split across sweep_worker_count() threads.
// check returns an empty string on success, a failure message otherwise.
template <typename Check>
std::vector<std::string> parallel_sweep(long count, Check check) {
    const int workers = sweep_worker_count();
    if (workers <= 1) {
        std::vector<std::string> failures;
        for (long i = 0; i < count; ++i) {
            std::string msg = check(i);
            if (!msg.empty()) failures.push_back(std::move(msg));
        }
        return failures;
    }
    std::vector<std::vector<std::string>> per_worker(static_cast<size_t>(workers));
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            for (long i = w; i < count; i += workers) {
                std::string msg = check(i);
                if (!msg.empty()) per_worker[static_cast<size_t>(w)].push_back(std::move(msg));
            }
        });
    }
    for (auto& t : threads) t.join();
    std::vector<std::string> failures;
    for (auto& chunk : per_worker)
        failures.insert(failures.end(), chunk.begin(), chunk.end());
    std::sort(failures.begin(), failures.end());
    return failures;
}

}  // namespace

PPositivityResult ppositivity_classifier(const SkewDiagram& d) {
    PPositivityResult r;
    r.strip = classify_strip(d);
    r.positive = r.strip.kind == StripKind::horizontal || r.strip.kind == StripKind::both;
    r.signature = p_signature(skew_schur(d));
    const bool sign_positive = r.signature.sign == PSign::positive;
    if (sign_positive != r.positive)
        throw std::logic_error("ppositivity_classifier: strip predicate and p-expansion "
                               "sign disagree on " + d.to_string());
    return r;
}

Realization realize_skew(const SkewDiagram& d) {
    if (d.size() < 1) throw std::domain_error("realize_skew: diagram must be nonempty");
    Realization r;
    const StripClassification sc = classify_strip(d);
    if (sc.kind == StripKind::vertical || sc.kind == StripKind::both) {
        r.realized = true;
        r.scalar = 1;
        std::optional<Graph> g;
        for (int a : sc.col_profile) {
            r.scalar *= factorial(a);
            Graph k = Graph::complete(a);
            g = g ? g->disjoint_union(k) : k;
        }
        r.graph = *g;
        const SymFunc lhs = chromatic_sym(*r.graph);
        const SymFunc rhs = Rational(r.scalar) * skew_schur(d);
        if (lhs != rhs)
            throw std::logic_error("realize_skew: verification failed on " + d.to_string());
    } else {
        const PSignature sig = p_signature(skew_schur(d.transpose()));
        if (sig.sign != PSign::mixed)
            throw std::logic_error("realize_skew: expected mixed signs for " +
                                   d.transpose().to_string());
        r.realized = false;
        r.witness_positive = sig.positive_witness;
        r.witness_negative = sig.negative_witness;
    }
    return r;
}

unsigned long long canonical_adjacency(const Graph& g) {
    const int n = g.vertex_count();
    auto pair_index = [n](int u, int v) {  // 0-based u < v
        return u * n - u * (u + 1) / 2 + (v - u - 1);
    };
    unsigned long long mask = 0;
    for (auto [u, v] : g.edges()) mask |= 1ULL << pair_index(u - 1, v - 1);

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    unsigned long long best = ~0ULL;
    do {
        unsigned long long relabeled = 0;
        for (auto [u, v] : g.edges()) {
            int a = perm[static_cast<size_t>(u - 1)];
            int b = perm[static_cast<size_t>(v - 1)];
            if (a > b) std::swap(a, b);
            relabeled |= 1ULL << pair_index(a, b);
        }
        best = std::min(best, relabeled);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

Graph graph_from_mask(int n, unsigned long long mask) {
    std::vector<std::pair<int, int>> edges;
    int idx = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v, ++idx)
            if (mask & (1ULL << idx)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

std::mutex class_cache_mutex;

// Isomorphism-class representatives together with their chromatic symmetric
// functions, memoized per vertex count.
const std::vector<std::pair<Graph, SymFunc>>& chromatic_classes(int n, int cap) {
    if (n < 1 || n > cap)
        throw ResourceError("graph search: n = " + std::to_string(n) +
                            " outside cap " + std::to_string(cap));
    static std::map<int, std::vector<std::pair<Graph, SymFunc>>> cache;
    std::lock_guard lock(class_cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<std::pair<Graph, SymFunc>> classes;
    const int pairs = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ULL << pairs); ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (canonical_adjacency(g) == mask)
            classes.emplace_back(g, chromatic_sym_edges(g));
    }
    return cache.emplace(n, std::move(classes)).first->second;
}

}  // namespace

const std::vector<Graph>& graphs_up_to_iso(int n, int cap) {
    static std::map<int, std::vector<Graph>> cache;
    const auto& classes = chromatic_classes(n, cap);
    std::lock_guard lock(class_cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Graph> graphs;
    for (const auto& [g, x] : classes) graphs.push_back(g);
    return cache.emplace(n, std::move(graphs)).first->second;
}

std::vector<Graph> find_graphs_with(const SymFunc& f, int n, int cap) {
    std::vector<Graph> out;
    for (const auto& [g, x] : chromatic_classes(n, cap))
        if (x == f) out.push_back(g);
    return out;
}

std::vector<SkewDiagram> skew_diagrams_of_size(int s) {
    if (s < 0) throw std::domain_error("skew_diagrams_of_size: negative size");
    std::vector<SkewDiagram> out;
    if (s == 0) return out;

    // A representative with no empty rows or columns fits in an s x s box;
    // its cell set determines the (outer, inner) pair uniquely.
    std::vector<int> outer;
    auto emit_inners = [&]() {
        const int rows = static_cast<int>(outer.size());
        std::vector<int> inner(static_cast<size_t>(rows), 0);
        const int total = std::accumulate(outer.begin(), outer.end(), 0);
        auto rec = [&](auto&& self, int r, int prev, int removed) -> void {
            if (r == rows) {
                if (total - removed != s) return;
                // Column coverage: every column 1..outer[0] must hold a cell.
                std::vector<bool> covered(static_cast<size_t>(outer[0]), false);
                for (int i = 0; i < rows; ++i)
                    for (int c = inner[static_cast<size_t>(i)]; c < outer[static_cast<size_t>(i)]; ++c)
                        covered[static_cast<size_t>(c)] = true;
                if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
                    return;
                std::vector<int> mu;
                for (int v : inner)
                    if (v > 0) mu.push_back(v);
                out.emplace_back(Partition(outer), Partition(std::move(mu)));
                return;
            }
            const int hi = std::min(prev, outer[static_cast<size_t>(r)] - 1);
            for (int v = 0; v <= hi; ++v) {
                if (removed + v > total - s) break;
                inner[static_cast<size_t>(r)] = v;
                self(self, r + 1, v, removed + v);
            }
            inner[static_cast<size_t>(r)] = 0;
        };
        rec(rec, 0, s, 0);
    };
    auto gen_outer = [&](auto&& self, int remaining_budget, int max_part) -> void {
        if (!outer.empty()) emit_inners();
        if (static_cast<int>(outer.size()) == s) return;
        for (int p = std::min(remaining_budget, max_part); p >= 1; --p) {
            outer.push_back(p);
            self(self, remaining_budget - p, p);
            outer.pop_back();
        }
    };
    // Outer partitions in the s x s box with at least s cells overall.
    gen_outer(gen_outer, s * s, s);

    std::sort(out.begin(), out.end());
    return out;
}

VerificationReport verify_ppositive(int max_size) {
    const auto start = Clock::now();
    VerificationReport report;
    report.scope = "p-positivity biconditional over skew diagrams of size 1.." +
                   std::to_string(max_size);

    std::vector<SkewDiagram> diagrams;
    for (int s = 1; s <= max_size; ++s) {
        auto ds = skew_diagrams_of_size(s);
        diagrams.insert(diagrams.end(), ds.begin(), ds.end());
    }
    report.instances = static_cast<long>(diagrams.size());
    report.failures = parallel_sweep(report.instances, [&](long i) -> std::string {
        const SkewDiagram& d = diagrams[static_cast<size_t>(i)];
        try {
            ppositivity_classifier(d);
        } catch (const std::logic_error& e) {
            return e.what();
        }
        return {};
    });
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_skew_theorem(int max_size) {
    const auto start = Clock::now();
    VerificationReport report;
    report.scope = "skew Schur realizability over skew diagrams of size 1.." +
                   std::to_string(max_size);

    std::vector<SkewDiagram> diagrams;
    for (int s = 1; s <= max_size; ++s) {
        auto ds = skew_diagrams_of_size(s);
        diagrams.insert(diagrams.end(), ds.begin(), ds.end());
    }
    report.instances = static_cast<long>(diagrams.size());
    report.failures = parallel_sweep(report.instances, [&](long i) -> std::string {
        const SkewDiagram& d = diagrams[static_cast<size_t>(i)];
        try {
            const Realization r = realize_skew(d);
            if (!r.realized) {
                // Re-extract the witness coefficients and confirm the signs.
                const SymFunc st = skew_schur(d.transpose());
                if (!r.witness_positive || !r.witness_negative ||
                    st.coefficient(*r.witness_positive) <= 0 ||
                    st.coefficient(*r.witness_negative) >= 0)
                    return "bad sign witnesses for " + d.to_string();
            }
        } catch (const std::logic_error& e) {
            return e.what();
        }
        return {};
    });
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_bases_theorem(int max_n, int graph_n_cap) {
    const auto start = Clock::now();
    VerificationReport report;
    report.scope = "classical-basis realizability for partitions of n <= " +
                   std::to_string(max_n);
    if (max_n > graph_n_cap)
        throw ResourceError("verify_bases_theorem: max_n exceeds the graph cap");

    for (int n = 1; n <= max_n; ++n) {
        const Partition ones(std::vector<int>(static_cast<size_t>(n), 1));
        for (const Partition& lam : partitions_of(n)) {
            // Positive half: e_lambda scaled by prod(lambda_i!) is realized
            // by the matching union of complete graphs.
            ++report.instances;
            Integer scalar = 1;
            std::optional<Graph> g;
            for (int part : lam.parts()) {
                scalar *= factorial(part);
                Graph k = Graph::complete(part);
                g = g ? g->disjoint_union(k) : k;
            }
            const SymFunc target = Rational(scalar) * from_basis(BasisName::e, lam);
            if (chromatic_sym(*g) != target) {
                report.failures.push_back("e positive half fails at " + lam.to_string());
            } else {
                const auto found = find_graphs_with(target, n, graph_n_cap);
                const auto canon = canonical_adjacency(*g);
                const bool present =
                    std::any_of(found.begin(), found.end(), [&](const Graph& h) {
                        return canonical_adjacency(h) == canon;
                    });
                if (!present)
                    report.failures.push_back("realizing graph missing for e" + lam.to_string());
            }

            // Negative half: no scalar multiple of h/m/p/s_lambda is a
            // chromatic symmetric function, except the coincidences at
            // lambda = (1^n). The scalar is forced by the m_(1^n)
            // coefficient, which is n! in every X_G.
            for (BasisName b : {BasisName::h, BasisName::m, BasisName::p, BasisName::s}) {
                ++report.instances;
                const SymFunc f = from_basis(b, lam);
                const auto m_coeffs = to_basis(f, BasisName::m);
                const auto it = m_coeffs.find(ones);
                const Rational c0 = it == m_coeffs.end() ? Rational(0) : it->second;
                const bool exempt = lam == ones;
                if (c0 == 0) {
                    if (exempt)
                        report.failures.push_back("exempt basis element has zero leading "
                                                  "coefficient: " + lam.to_string());
                    continue;  // no scalar can match the forced n! coefficient
                }
                const Rational c = Rational(factorial(n)) / c0;
                const auto found = find_graphs_with(c * f, n, graph_n_cap);
                if (exempt && found.empty())
                    report.failures.push_back(std::string(1, basis_letter(b)) +
                                              lam.to_string() + " coincidence not realized");
                if (!exempt && !found.empty())
                    report.failures.push_back(std::string(1, basis_letter(b)) +
                                              lam.to_string() + " unexpectedly realized");
            }
        }
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerificationReport verify_basis_identities(int max_degree) {
    const auto start = Clock::now();
    VerificationReport report;
    report.scope = "basis round trips, orthonormality, omega, h_r cross-check up to degree " +
                   std::to_string(max_degree);

    // Round trip: to_basis(from_basis(b, lam), b) is the point mass at lam.
    for (int n = 0; n <= max_degree; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            for (BasisName b :
                 {BasisName::e, BasisName::h, BasisName::m, BasisName::p, BasisName::s}) {
                ++report.instances;
                const auto coeffs = to_basis(from_basis(b, lam), b);
                if (coeffs.size() != 1 || coeffs.begin()->first != lam ||
                    coeffs.begin()->second != 1)
                    report.failures.push_back(std::string("round trip fails: ") +
                                              basis_letter(b) + lam.to_string());
            }
        }
    }

    // Schur orthonormality.
    for (int n = 1; n <= std::min(max_degree, 7); ++n) {
        const auto parts = partitions_of(n);
        for (const Partition& lam : parts)
            for (const Partition& mu : parts) {
                ++report.instances;
                const Rational got = scalar_product(from_basis(BasisName::s, lam),
                                                    from_basis(BasisName::s, mu));
                if (got != (lam == mu ? 1 : 0))
                    report.failures.push_back("<s" + lam.to_string() + ", s" + mu.to_string() +
                                              "> = " + rational_to_string(got));
            }
    }

    // omega involution and omega(s_D) = s_{D^t}.
    for (int s = 1; s <= std::min(max_degree, 8); ++s) {
        for (const SkewDiagram& d : skew_diagrams_of_size(s)) {
            ++report.instances;
            const SymFunc sd = skew_schur(d);
            if (omega(sd) != skew_schur(d.transpose()) || omega(omega(sd)) != sd)
                report.failures.push_back("omega mismatch at " + d.to_string());
        }
    }

    // h_r two ways: the z_lambda expansion against the Kostka route
    // h_r = sum over mu of m_mu.
    for (int r = 1; r <= max_degree; ++r) {
        ++report.instances;
        SymFunc kostka_route;
        for (const Partition& mu : partitions_of(r))
            kostka_route = kostka_route + from_basis(BasisName::m, mu);
        if (from_basis(BasisName::h, Partition({r})) != kostka_route)
            report.failures.push_back("h_" + std::to_string(r) + " cross-check fails");
    }

    report.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace chromsym
