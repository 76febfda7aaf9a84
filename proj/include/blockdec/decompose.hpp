#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockdec/glue.hpp"

namespace blockdec {

struct Decomposition {
    GluePlan plan;
    std::string canonical_key;
};

struct Enumeration {
    std::vector<Decomposition> decompositions;  // sorted by canonical_key
    bool limit_exceeded = false;
};

// Partial placement over the input nodes.  Per ordered pair we keep the net
// unit-arrow count and any heavy (weight 2/4) edge; nodes are closed in id
// order once no further block may touch them.
struct SearchState {
    int n = 0;
    std::vector<int> unit, units, heavy, heavies;  // n*n
    std::vector<int> cover;
    std::vector<char> sat, closed;
    std::vector<BlockInstance> placed;
    int last_pivot = -1;
    std::string last_key;
};

class Decomposer {
public:
    Decomposer(const Diagram& d, const BlockLibrary& lib);

    SearchState initial() const;
    int pivot(const SearchState& s) const;  // -1 when every node is closed
    bool is_success(const SearchState& s) const { return pivot(s) < 0; }
    std::vector<SearchState> search_step(const SearchState& s) const;

    // value of pair (i, j) as a signed weight: +w for i -> j, -w for j -> i
    int target(int i, int j) const { return tval_[i * n_ + j]; }
    static int value(const SearchState& s, int i, int j);

    Enumeration enumerate(std::optional<size_t> limit = std::nullopt, int threads = 1) const;
    std::optional<Decomposition> first() const;

private:
    struct Order {
        int tmpl, start;
        std::vector<int> labels;   // assignment order
        std::vector<int> anchor;   // earlier label adjacent in the template
    };

    void candidates(const SearchState& s, int v, std::vector<BlockInstance>& out) const;
    bool apply(const SearchState& s, const BlockInstance& b, SearchState& next) const;
    bool closable(const SearchState& s, int v) const;

    const Diagram& d_;
    const BlockLibrary& lib_;
    int n_;
    std::vector<int> tval_;
    std::vector<std::vector<int>> nbr_;
    std::vector<Order> orders_;
};

std::optional<Decomposition> is_decomposable(const Diagram& d, const BlockLibrary& lib = default_library());
Enumeration enumerate_decompositions(const Diagram& d, std::optional<size_t> limit = std::nullopt, int threads = 1,
                                     const BlockLibrary& lib = default_library());

}  // namespace blockdec
