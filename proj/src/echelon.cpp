#include "twistrel/echelon.hpp"

#include <omp.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace twistrel {

RelationMatrix build_matrix(int degree, int length, int maxPart,
                            const std::vector<RelationDescriptor>& descriptors, int psiOrder,
                            bool parallel) {
    RelationMatrix m;
    m.degree = degree;
    m.length = length;
    m.maxPart = maxPart;
    m.columns = partitions_fixed(degree, length, 2, maxPart);
    std::map<Partition, int, PartitionLess> colIndex;
    for (size_t i = 0; i < m.columns.size(); ++i) colIndex[m.columns[i]] = static_cast<int>(i);

    std::vector<Relation> rels(descriptors.size());
    int n = static_cast<int>(descriptors.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < n; ++i) rels[i] = generate_relation(descriptors[i], maxPart, psiOrder);

    std::set<std::string> seen;
    for (int i = 0; i < n; ++i) {
        MatrixRow row;
        row.label = rels[i].label;
        row.coeffs.assign(m.columns.size(), CycNum());
        CycNum scale(descriptors[i].scale, BigRational(0));
        bool nonzero = false;
        for (const auto& [key, val] : rels[i].terms) {
            auto it = colIndex.find(key);
            if (it == colIndex.end())
                throw std::logic_error("relation term outside column set: " + to_string(key));
            row.coeffs[it->second] = scale * val;
            nonzero = true;
        }
        if (!nonzero) continue;
        std::ostringstream fp;
        for (const auto& c : row.coeffs) fp << to_string(c) << ";";
        if (!seen.insert(fp.str()).second) continue;  // drop duplicate coefficient rows
        m.rows.push_back(std::move(row));
    }
    m.basisLabels.clear();
    for (const auto& row : m.rows) m.basisLabels.push_back(row.label);
    return m;
}

RelationMatrix row_reduce(const RelationMatrix& input) {
    RelationMatrix m = input;
    size_t nrows = m.rows.size(), ncols = m.columns.size();
    bool seedCerts = true;
    for (const auto& row : m.rows)
        if (!row.cert.empty()) seedCerts = false;
    if (seedCerts) {
        m.basisLabels.clear();
        for (size_t i = 0; i < nrows; ++i) {
            m.rows[i].cert.assign(nrows, CycNum());
            m.rows[i].cert[i] = CycNum(1);
            m.basisLabels.push_back(m.rows[i].label);
        }
    }
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < nrows; ++col) {
        size_t piv = rank;
        while (piv < nrows && m.rows[piv].coeffs[col].is_zero()) ++piv;
        if (piv == nrows) continue;
        std::swap(m.rows[rank], m.rows[piv]);
        MatrixRow& prow = m.rows[rank];
        if (prow.coeffs[col] != CycNum(1)) {
            CycNum f = inv(prow.coeffs[col]);
            for (auto& c : prow.coeffs) c *= f;
            for (auto& c : prow.cert) c *= f;
        }
        for (size_t r = 0; r < nrows; ++r) {
            if (r == rank || m.rows[r].coeffs[col].is_zero()) continue;
            CycNum f = m.rows[r].coeffs[col];
            for (size_t c = 0; c < ncols; ++c) m.rows[r].coeffs[c] -= f * prow.coeffs[c];
            for (size_t c = 0; c < m.rows[r].cert.size(); ++c) m.rows[r].cert[c] -= f * prow.cert[c];
        }
        ++rank;
    }
    return m;
}

namespace {

int first_nonzero(const std::vector<CycNum>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
}

}  // namespace

bool is_rref(const RelationMatrix& m) {
    int prev = -1;
    for (size_t r = 0; r < m.rows.size(); ++r) {
        int lead = first_nonzero(m.rows[r].coeffs);
        if (lead < 0) {
            for (size_t r2 = r; r2 < m.rows.size(); ++r2)
                if (first_nonzero(m.rows[r2].coeffs) >= 0) return false;
            return true;
        }
        if (lead <= prev) return false;
        if (m.rows[r].coeffs[lead] != CycNum(1)) return false;
        for (size_t r2 = 0; r2 < m.rows.size(); ++r2)
            if (r2 != r && !m.rows[r2].coeffs[lead].is_zero()) return false;
        prev = lead;
    }
    return true;
}

LeadingTermReport leading_terms(const RelationMatrix& input, const ConditionSet& cs) {
    const RelationMatrix* mp = &input;
    RelationMatrix reduced;
    if (!is_rref(input)) {
        reduced = row_reduce(input);
        mp = &reduced;
    }
    const RelationMatrix& m = *mp;

    LeadingTermReport rep;
    rep.degree = m.degree;
    rep.length = m.length;
    rep.maxPart = m.maxPart;
    for (const auto& row : m.rows) {
        int lead = first_nonzero(row.coeffs);
        if (lead < 0) continue;
        const Partition& pivot = m.columns[lead];
        rep.pivots.push_back(pivot);

        auto matches = find_matches(pivot, cs);
        std::vector<int> ids;
        bool shorterWindow = false;
        for (const auto& match : matches) {
            ids.push_back(match.id);
            if (match.len < pivot.length()) shorterWindow = true;
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        rep.matchedConditions[pivot] = ids;
        if (!shorterWindow) rep.newPivots.push_back(pivot);

        PivotCertificate cert;
        cert.pivot = pivot;
        for (size_t i = 0; i < row.cert.size(); ++i)
            if (!row.cert[i].is_zero())
                cert.combination.emplace_back(i < m.basisLabels.size() ? m.basisLabels[i] : "",
                                              row.cert[i]);
        rep.certificates.push_back(std::move(cert));
    }
    std::sort(rep.pivots.begin(), rep.pivots.end(), PartitionLess{});
    std::sort(rep.newPivots.begin(), rep.newPivots.end(), PartitionLess{});
    return rep;
}

namespace {

LeadingTermReport scan_cell(int degree, int length, const ConditionSet& cs, const ScanOptions& opt,
                            bool innerParallel) {
    int maxPart = degree - 2 * (length - 1);
    if (opt.maxPartCap > 0) maxPart = std::min(maxPart, opt.maxPartCap);
    if (maxPart < 2) {
        LeadingTermReport rep;
        rep.degree = degree;
        rep.length = length;
        rep.maxPart = maxPart;
        return rep;
    }
    auto descriptors = enumerate_descriptors(degree, length, maxPart);
    int total = static_cast<int>(descriptors.size());
    bool exceeded = opt.descriptorBudget > 0 && total > opt.descriptorBudget;
    if (exceeded) descriptors.resize(opt.descriptorBudget);
    auto matrix = build_matrix(degree, length, maxPart, descriptors, opt.psiOrder, innerParallel);
    auto rep = leading_terms(row_reduce(matrix), cs);
    rep.descriptorCount = total;
    rep.budgetExceeded = exceeded;
    return rep;
}

}  // namespace

std::vector<LeadingTermReport> scan(int degreeLo, int degreeHi, std::vector<int> lengths,
                                    const ConditionSet& cs, const ScanOptions& opt) {
    if (degreeHi < degreeLo || lengths.empty())
        throw std::invalid_argument("scan: empty degree range or lengths");
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

    std::vector<std::pair<int, int>> cells;
    for (int d = degreeLo; d <= degreeHi; ++d)
        for (int l : lengths) cells.emplace_back(d, l);

    std::vector<LeadingTermReport> reports(cells.size());
    if (opt.parallel && cells.size() > 1) {
        int n = static_cast<int>(cells.size());
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i)
            reports[i] = scan_cell(cells[i].first, cells[i].second, cs, opt, false);
    } else {
        for (size_t i = 0; i < cells.size(); ++i)
            reports[i] = scan_cell(cells[i].first, cells[i].second, cs, opt, opt.parallel);
    }
    return reports;
}

bool verify_certificate(const RelationMatrix& original, const PivotCertificate& cert) {
    std::map<std::string, const MatrixRow*> byLabel;
    for (const auto& row : original.rows) byLabel[row.label] = &row;
    std::vector<CycNum> acc(original.columns.size(), CycNum());
    for (const auto& [label, mult] : cert.combination) {
        auto it = byLabel.find(label);
        if (it == byLabel.end()) return false;
        for (size_t c = 0; c < acc.size(); ++c) acc[c] += mult * it->second->coeffs[c];
    }
    int lead = first_nonzero(acc);
    return lead >= 0 && original.columns[lead] == cert.pivot;
}

std::string matrix_to_tsv(const RelationMatrix& m) {
    std::ostringstream os;
    os << "label";
    for (const auto& col : m.columns) os << "\t" << to_string(col);
    os << "\n";
    for (const auto& row : m.rows) {
        os << row.label;
        for (const auto& c : row.coeffs) os << "\t" << to_string(c);
        os << "\n";
    }
    return os.str();
}

RelationMatrix matrix_from_tsv(const std::string& text) {
    RelationMatrix m;
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("matrix_from_tsv: empty input");
    std::istringstream header(line);
    std::string cell;
    if (!std::getline(header, cell, '\t') || cell != "label")
        throw std::invalid_argument("matrix_from_tsv: bad header");
    while (std::getline(header, cell, '\t')) m.columns.push_back(parse_partition(cell));
    for (const auto& col : m.columns) m.maxPart = std::max(m.maxPart, col.parts.empty() ? 0 : col.parts[0]);
    if (!m.columns.empty()) {
        m.degree = m.columns[0].weight();
        m.length = m.columns[0].length();
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        MatrixRow row;
        if (!std::getline(ls, row.label, '\t')) throw std::invalid_argument("matrix_from_tsv: bad row");
        while (std::getline(ls, cell, '\t')) row.coeffs.push_back(parse_cycnum(cell));
        if (row.coeffs.size() != m.columns.size())
            throw std::invalid_argument("matrix_from_tsv: row width mismatch");
        m.rows.push_back(std::move(row));
    }
    for (const auto& row : m.rows) m.basisLabels.push_back(row.label);
    return m;
}

std::string matrix_to_json(const RelationMatrix& m) {
    nlohmann::json j;
    j["degree"] = m.degree;
    j["length"] = m.length;
    j["maxPart"] = m.maxPart;
    auto& cols = j["columns"] = nlohmann::json::array();
    for (const auto& col : m.columns) cols.push_back(to_string(col));
    j["basisLabels"] = m.basisLabels;
    auto& rows = j["rows"] = nlohmann::json::array();
    for (const auto& row : m.rows) {
        nlohmann::json jr;
        jr["label"] = row.label;
        auto& cs = jr["coeffs"] = nlohmann::json::array();
        for (const auto& c : row.coeffs) cs.push_back(to_string(c));
        if (!row.cert.empty()) {
            auto& ct = jr["cert"] = nlohmann::json::array();
            for (const auto& c : row.cert) ct.push_back(to_string(c));
        }
        rows.push_back(std::move(jr));
    }
    return j.dump();
}

RelationMatrix matrix_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    RelationMatrix m;
    m.degree = j.at("degree").get<int>();
    m.length = j.at("length").get<int>();
    m.maxPart = j.at("maxPart").get<int>();
    for (const auto& col : j.at("columns")) m.columns.push_back(parse_partition(col.get<std::string>()));
    if (j.contains("basisLabels")) m.basisLabels = j.at("basisLabels").get<std::vector<std::string>>();
    for (const auto& jr : j.at("rows")) {
        MatrixRow row;
        row.label = jr.at("label").get<std::string>();
        for (const auto& c : jr.at("coeffs")) row.coeffs.push_back(parse_cycnum(c.get<std::string>()));
        if (jr.contains("cert"))
            for (const auto& c : jr.at("cert")) row.cert.push_back(parse_cycnum(c.get<std::string>()));
        m.rows.push_back(std::move(row));
    }
    return m;
}

std::string report_to_json(const LeadingTermReport& r) {
    nlohmann::json j;
    j["degree"] = r.degree;
    j["length"] = r.length;
    j["maxPart"] = r.maxPart;
    j["descriptorCount"] = r.descriptorCount;
    j["budgetExceeded"] = r.budgetExceeded;
    auto& piv = j["pivots"] = nlohmann::json::array();
    for (const auto& p : r.pivots) piv.push_back(to_string(p));
    auto& np = j["newPivots"] = nlohmann::json::array();
    for (const auto& p : r.newPivots) np.push_back(to_string(p));
    auto& mc = j["matchedConditions"] = nlohmann::json::object();
    for (const auto& [p, ids] : r.matchedConditions) mc[to_string(p)] = ids;
    auto& certs = j["certificates"] = nlohmann::json::array();
    for (const auto& cert : r.certificates) {
        nlohmann::json jc;
        jc["pivot"] = to_string(cert.pivot);
        auto& comb = jc["combination"] = nlohmann::json::array();
        for (const auto& [label, mult] : cert.combination) comb.push_back({label, to_string(mult)});
        certs.push_back(std::move(jc));
    }
    return j.dump();
}

}  // namespace twistrel
