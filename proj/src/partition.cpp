#include "twistrel/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twistrel {

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

void Partition::validate() const {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("partition part < 1");
        if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("partition not weakly decreasing");
    }
}

bool operator==(const Partition& x, const Partition& y) { return x.parts == y.parts; }
bool operator!=(const Partition& x, const Partition& y) { return !(x == y); }

bool lex_less(const Partition& x, const Partition& y) {
    return std::lexicographical_compare(x.parts.begin(), x.parts.end(), y.parts.begin(), y.parts.end());
}

std::string to_string(const Partition& p) {
    if (p.parts.empty()) return "-";
    bool compact = std::all_of(p.parts.begin(), p.parts.end(), [](int v) { return v <= 9; });
    std::ostringstream os;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i && !compact) os << ".";
        os << p.parts[i];
    }
    return os.str();
}

Partition parse_partition(const std::string& s) {
    Partition p;
    if (s.empty() || s == "-") return p;
    if (s.find('.') != std::string::npos) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, '.')) {
            if (tok.empty()) throw std::invalid_argument("parse_partition: empty part in '" + s + "'");
            p.parts.push_back(std::stoi(tok));
        }
    } else {
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("parse_partition: bad character in '" + s + "'");
            p.parts.push_back(c - '0');
        }
    }
    p.validate();
    return p;
}

std::vector<Partition> partitions_fixed(int n, int length, int minPart, int maxPart) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descending recursion keeps each prefix weakly decreasing.
    auto rec = [&](auto&& self, int rem, int k, int mx) -> void {
        if (k == 0) {
            if (rem == 0) out.emplace_back(cur);
            return;
        }
        int hi = std::min(mx, rem - minPart * (k - 1));
        for (int x = hi; x >= minPart; --x) {
            if (rem - x > (k - 1) * x) continue;  // remaining parts capped at x
            cur.push_back(x);
            self(self, rem - x, k - 1, x);
            cur.pop_back();
        }
    };
    if (length >= 0 && maxPart >= minPart) rec(rec, n, length, maxPart);
    std::sort(out.begin(), out.end(), PartitionLess{});
    return out;
}

}  // namespace twistrel
