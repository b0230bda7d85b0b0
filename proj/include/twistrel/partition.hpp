#pragma once

#include <string>
#include <vector>

namespace twistrel {

// Weakly decreasing tuple of positive integers.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {}
    Partition(std::initializer_list<int> p) : parts(p) {}

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    // Throws std::invalid_argument unless weakly decreasing with parts >= 1.
    void validate() const;
};

bool operator==(const Partition& x, const Partition& y);
bool operator!=(const Partition& x, const Partition& y);

// Lexicographic order comparing largest parts first; shorter prefix < longer.
bool lex_less(const Partition& x, const Partition& y);

struct PartitionLess {
    bool operator()(const Partition& x, const Partition& y) const { return lex_less(x, y); }
};

// "5522" when all parts are single-digit, otherwise dot-separated "10.10.8.7".
// The empty partition renders as "-".
std::string to_string(const Partition& p);
Partition parse_partition(const std::string& s);

// All partitions of n into exactly `length` parts from [minPart, maxPart], ascending lex.
std::vector<Partition> partitions_fixed(int n, int length, int minPart, int maxPart);

}  // namespace twistrel
