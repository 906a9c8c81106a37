#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chromsym/graph.hpp"
#include "chromsym/numeric.hpp"
#include "chromsym/partition.hpp"
#include "chromsym/symfunc.hpp"

namespace chromsym {

/// Outcome of the skew-Schur realizability test: either the realizing
/// scalar and union of complete graphs, or a pair of p-coefficient sign
/// witnesses from the transposed diagram showing no graph exists.
struct Realization {
    bool realized = false;
    Integer scalar;  // product of column-profile factorials
    std::optional<Graph> graph;
    std::optional<Partition> witness_positive;
    std::optional<Partition> witness_negative;
};

struct VerificationReport {
    std::string scope;
    long instances = 0;
    std::vector<std::string> failures;
    double elapsed_ms = 0.0;

    bool passed() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

struct PPositivityResult {
    bool positive = false;
    StripClassification strip;
    PSignature signature;
};

/// s_D is p-positive iff D is a horizontal strip. Evaluates both routes
/// (strip predicate and p-expansion signs) and throws std::logic_error if
/// they ever disagree.
PPositivityResult ppositivity_classifier(const SkewDiagram& d);

/// X_G = c s_D has a solution iff D is a vertical strip, in which case
/// c = prod(alpha_i!) and G is the union of complete graphs over the column
/// profile alpha; the realized branch is verified by direct computation.
Realization realize_skew(const SkewDiagram& d);

/// All graphs on n vertices (one per isomorphism class) whose chromatic
/// symmetric function equals f exactly. ResourceError above the cap.
std::vector<Graph> find_graphs_with(const SymFunc& f, int n, int cap = 6);

/// Skew diagrams of the given size, one per distinct cell configuration
/// (no empty rows or columns).
std::vector<SkewDiagram> skew_diagrams_of_size(int s);

/// One representative per isomorphism class, by minimal adjacency bitmask
/// over all vertex permutations.
const std::vector<Graph>& graphs_up_to_iso(int n, int cap = 6);

/// Canonical adjacency bitmask of g (minimum over vertex permutations).
unsigned long long canonical_adjacency(const Graph& g);

/// Worker count for verification sweeps, from CHROMSYM_WORKERS (default 1).
int sweep_worker_count();

VerificationReport verify_ppositive(int max_size);
VerificationReport verify_skew_theorem(int max_size);
VerificationReport verify_bases_theorem(int max_n, int graph_n_cap);

/// Basis-integrity sweep: round trips up to max_degree, Schur
/// orthonormality to degree 7, omega involution and omega(s_D) = s_{D^t}
/// to size 8, and the two-route h_r cross-check up to max_degree.
VerificationReport verify_basis_identities(int max_degree);

}  // namespace chromsym
