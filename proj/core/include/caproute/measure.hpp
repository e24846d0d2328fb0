#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace caproute {

// Largest clique size accepted anywhere; C(n,k) enumeration cost grows too
// fast past this.
inline constexpr int kMaxCliqueSize = 6;

enum class MeasureKind {
    EdgeDensity,       // |E(S)| / |V(S)|
    MinDegree,         // min degree in S
    KCliqueDensity,    // (#k-cliques in S) / |V(S)|, carries k
    SquaredDegree,     // (sum of squared degrees) / |V(S)|
    EdgeConnectivity,  // global min edge cut of S
    Min,               // pointwise minimum of >= 2 children
    Max,               // pointwise maximum of >= 2 children
};

// Immutable expression tree over the five leaf measures.
struct MeasureExpr {
    MeasureKind kind;
    int k = 0;  // clique size, KCliqueDensity only
    std::vector<std::shared_ptr<const MeasureExpr>> children;

    bool is_leaf() const { return kind != MeasureKind::Min && kind != MeasureKind::Max; }
};

using MeasurePtr = std::shared_ptr<const MeasureExpr>;

MeasurePtr make_leaf(MeasureKind kind, int k = 0);
MeasurePtr make_min(std::vector<MeasurePtr> children);
MeasurePtr make_max(std::vector<MeasurePtr> children);

// Mini-language: `edge`, `mindeg`, `kclique:<k>`, `sqdeg`, `conn`, and
// `min(a,b,...)` / `max(a,b,...)` with >= 2 arguments, arbitrarily nested.
// Example: min(max(edge,mindeg),max(kclique:3,sqdeg))
MeasurePtr parse_measure(std::string_view text);

// Canonical text form; parse_measure(measure_to_string(m)) reproduces m.
std::string measure_to_string(const MeasureExpr& m);

// Leaves of the tree in preorder (with duplicates removed, order kept).
std::vector<const MeasureExpr*> measure_leaves(const MeasureExpr& m);

}  // namespace caproute
