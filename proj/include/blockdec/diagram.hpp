#pragma once

#include <string>
#include <vector>

#include "blockdec/error.hpp"

namespace blockdec {

enum class Mode { Quiver, S };

const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);
bool weight_allowed(Mode m, int w);

struct Edge {
    int from = 0;
    int to = 0;
    int weight = 1;
    auto operator<=>(const Edge&) const = default;
};

struct ExchangeMatrix {
    int n = 0;
    std::vector<int> b;  // row-major
    int at(int i, int j) const { return b[i * n + j]; }
    int& at(int i, int j) { return b[i * n + j]; }
    bool operator==(const ExchangeMatrix&) const = default;
};

// Directed graph on nodes 0..n-1.  At most one edge per unordered pair; weight
// is |b_ij * b_ji|, so 1 = arrow, 2 = unfolded edge, 4 = double arrow.
class Diagram {
public:
    explicit Diagram(int n = 0, Mode mode = Mode::Quiver);

    int size() const { return n_; }
    Mode mode() const { return mode_; }
    void set_mode(Mode m);

    void add_edge(int from, int to, int weight);
    // weight of the arrow from -> to, 0 when absent or pointing the other way
    int arrow(int from, int to) const { return w_[from * n_ + to]; }
    int weight(int a, int b) const { return arrow(a, b) ? arrow(a, b) : arrow(b, a); }
    std::vector<Edge> edges() const;
    std::vector<int> neighbors(int v) const;
    bool connected() const;

    bool operator==(const Diagram& o) const { return n_ == o.n_ && mode_ == o.mode_ && w_ == o.w_; }

private:
    int n_;
    Mode mode_;
    std::vector<int> w_;
};

ExchangeMatrix to_matrix(const Diagram& d);
Diagram from_matrix(const ExchangeMatrix& m, Mode mode);

Diagram parse_diagram(const std::string& text, Mode mode = Mode::Quiver);
std::string serialize_diagram(const Diagram& d);

struct CanonicalForm {
    std::string key;
    std::vector<int> labeling;  // labeling[old] = new
};

CanonicalForm canonical_form(const Diagram& d);
std::vector<std::vector<int>> canonical_labelings(const Diagram& d);
Diagram relabel(const Diagram& d, const std::vector<int>& labeling);

}  // namespace blockdec
