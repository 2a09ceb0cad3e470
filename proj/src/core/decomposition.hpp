#pragma once

#include "graph.hpp"
#include "token_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tokentw {

// Identifies the token graph F_k(family_n) a decomposition or bramble lives on.
struct HostRef {
    Family family = Family::Complete;
    int n = 0;
    int k = 0;
    bool operator==(const HostRef&) const = default;
};

// Builds the host token graph named by `ref`.
TokenGraph build_host(const HostRef& ref, std::size_t cap = kDefaultTokenCap);

struct TreeDecomposition {
    Graph tree;
    // Tree-node label -> sorted token-vertex indices.
    std::map<int, std::vector<std::size_t>> bags;
    bool is_path = false;
    std::optional<HostRef> host;
};

struct ValidationReport {
    bool tree_ok = false;         // T is a tree with one bag per node
    bool path_ok = true;          // only meaningful when is_path is set
    bool coverage_ok = false;     // every vertex in some bag
    bool edge_ok = false;         // every edge inside some bag
    bool connectivity_ok = false; // every vertex trace is a subtree

    std::string tree_message;
    std::optional<std::size_t> uncovered_vertex;
    std::optional<Edge> uncovered_edge;  // host vertex indices
    struct TraceBreak {
        std::size_t vertex;
        int node_a;
        int node_b;
    };
    std::optional<TraceBreak> broken_trace;

    bool ok() const { return tree_ok && path_ok && coverage_ok && edge_ok && connectivity_ok; }
};

// Checks the three decomposition conditions against `host`, whose vertices
// are addressed by index. Throws InvalidParameter if a bag mentions an index
// outside the host or a bag's node is missing from the tree.
ValidationReport validate(const TreeDecomposition& d, const Graph& host);
ValidationReport validate(const TreeDecomposition& d, const TokenGraph& host);

// max bag size - 1; throws InvalidParameter on an empty decomposition.
std::int64_t width(const TreeDecomposition& d);

// Star-shaped decomposition of F_k(S_n): a center bag of all (k-1)-sets
// joined with the center vertex 0, and one leaf bag per k-subset A of [n]
// holding A and each A - a + 0.
TreeDecomposition star_decomposition(int n, int k);

// Path decomposition of F_2(K_n) with bags V_l = {{i,j}: i <= l <= j},
// l = 1..n (node labels are l).
TreeDecomposition f2kn_path_decomposition(int n);

// Node of the lexicographic path decomposition of F_k(K_n): a (k-1)-subset
// of [n] that avoids n.
class BagIndex {
public:
    // Throws InvalidParameter unless members is strictly increasing inside
    // [1, n-1].
    BagIndex(std::vector<int> members, int n);

    std::span<const int> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    int operator[](std::size_t i) const { return members_[i]; }
    bool operator==(const BagIndex& other) const { return members_ == other.members_; }

private:
    std::vector<int> members_;
};

// All path nodes in lexicographic order.
std::vector<BagIndex> lex_path_nodes(int n, int k);

// {A in ([n] choose k): A_s <= X <= A_t} for any (k-1)-subset X of [n]
// (X may contain n here), as sorted tuples in lexicographic order.
std::vector<std::vector<int>> lex_bag(int n, int k, std::span<const int> x);

// Path over lex_path_nodes(n, k) (node labels are positions 0..m-1) with bags
// V_X over F_k(K_n). Throws ResourceLimit if C(n,k) exceeds cap.
TreeDecomposition fkkn_lex_decomposition(int n, int k, std::size_t cap = kDefaultTokenCap);

// Closed form for |V_X| with x_k = n.
std::int64_t bag_size_formula(const BagIndex& x, int n, int k);

struct MaxBag {
    BagIndex index;
    std::int64_t size;
};

// Maximizer over the lemma-constrained candidates: x_1 in
// {floor((n+1)/k), ceil(n/k)} and, for i = 2..k-1,
// x_i in {n-(k-i)x_1, n-(k-i)x_1+1} when n-(k-i)x_1+1 >= x_1+i-1, else
// x_i = x_1+i-1. Ties go to the lexicographically smaller X.
MaxBag max_bag(int n, int k);

// Same quantity by scanning every path node and counting its bag directly.
MaxBag max_bag_exhaustive(int n, int k);

struct MaximizerLemmaCheck {
    bool first_entry_ok = false;  // x_1 in {floor((n+1)/k), ceil(n/k)}
    bool tail_ok = false;         // x_i rules for i = 2..k-1
    int failing_position = 0;     // 1-based; 0 when both hold
};

MaximizerLemmaCheck check_maximizer_lemmas(const BagIndex& x, int n, int k);

// The closed-form upper bound on tw(F_k(K_n)) evaluated branch by branch.
struct TwKnBranch {
    int first_entry = 0;         // x_1 of this branch
    std::vector<int> tail;       // x_i = n-(k-i)x_1, i = 2..k-1
    bool index_valid = false;    // (x_1, tail) is a strictly increasing path node
    std::int64_t closed_form = 0;  // literal expression value (bag size, before -1)
    std::int64_t bag_size = 0;     // size actually used for this branch
};

struct TwKnEvaluation {
    TwKnBranch floor_branch;  // x_1 = floor((n+1)/k)
    TwKnBranch ceil_branch;   // x_1 = ceil(n/k)
    std::int64_t literal_bound = 0;  // max(closed forms) - 1
    std::int64_t bound = 0;          // max(bag sizes) - 1
};

// When a branch's literal tail is not a valid path node, the closed form
// stops describing a bag; that branch then uses the best lemma-constrained
// tail for its x_1 instead.
TwKnEvaluation evaluate_tw_kn_bound(int n, int k);

std::int64_t upper_bound_tw_kn(int n, int k);

} // namespace tokentw
