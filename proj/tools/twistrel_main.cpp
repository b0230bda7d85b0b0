#include <omp.h>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "twistrel/characters.hpp"
#include "twistrel/echelon.hpp"
#include "twistrel/verify.hpp"

using namespace twistrel;

namespace {

// Descriptor syntax: optional "(a/b)*" scale, then X(-q).. R(-p)/S(-p) ..X(-r).
RelationDescriptor parse_descriptor(const std::string& text) {
    RelationDescriptor d;
    d.p = 0;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i < text.size() && text[i] == '(') {  // scale prefix "(rational)*"
        size_t close = text.find(')', i);
        if (close == std::string::npos || close + 1 >= text.size() || text[close + 1] != '*')
            throw std::invalid_argument("descriptor: bad scale prefix");
        d.scale = BigRational(text.substr(i + 1, close - i - 1));
        d.scale.canonicalize();
        i = close + 2;
    }
    bool sawKind = false;
    while (skip(), i < text.size()) {
        char op = text[i];
        if (op != 'X' && op != 'R' && op != 'S')
            throw std::invalid_argument("descriptor: expected X, R or S");
        if (i + 2 >= text.size() || text[i + 1] != '(' || text[i + 2] != '-')
            throw std::invalid_argument("descriptor: expected \"(-n)\" after operator");
        size_t close = text.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("descriptor: missing ')'");
        int n = std::stoi(text.substr(i + 3, close - i - 3));
        if (op == 'X') {
            (sawKind ? d.rightMultipliers : d.leftMultipliers).push_back(n);
        } else {
            if (sawKind) throw std::invalid_argument("descriptor: more than one R/S factor");
            sawKind = true;
            d.kind = op == 'R' ? RelKind::R : RelKind::S;
            d.p = n;
        }
        i = close + 1;
    }
    if (!sawKind) throw std::invalid_argument("descriptor: missing R/S factor");
    d.validate();
    return d;
}

RelationDescriptor descriptor_from_json(const nlohmann::json& j) {
    RelationDescriptor d;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "R")
        d.kind = RelKind::R;
    else if (kind == "S")
        d.kind = RelKind::S;
    else
        throw std::invalid_argument("descriptor kind must be \"R\" or \"S\"");
    d.p = j.at("p").get<int>();
    if (j.contains("left")) d.leftMultipliers = j.at("left").get<std::vector<int>>();
    if (j.contains("right")) d.rightMultipliers = j.at("right").get<std::vector<int>>();
    if (j.contains("scale")) {
        d.scale = BigRational(j.at("scale").get<std::string>());
        d.scale.canonicalize();
    }
    d.validate();
    return d;
}

std::vector<RelationDescriptor> load_descriptors(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open descriptor file: " + path);
    std::vector<RelationDescriptor> out;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(descriptor_from_json(nlohmann::json::parse(line)));
        } catch (const std::exception& e) {
            throw std::invalid_argument(path + ":" + std::to_string(lineNo) + ": " + e.what());
        }
    }
    return out;
}

ConditionSet resolve_set(const std::string& nameOrPath) {
    if (std::filesystem::exists(nameOrPath)) return load_condition_set(nameOrPath);
    return builtin_condition_set(nameOrPath);
}

// Output sink honoring --out (parent directories created on demand).
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        auto parent = std::filesystem::path(path).parent_path();
        if (!parent.empty()) std::filesystem::create_directories(parent);
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open output file: " + path);
        os = &file;
    }
    std::ostream& out() { return *os; }
};

void parse_degree_range(const std::string& s, int& lo, int& hi) {
    auto colon = s.find(':');
    if (colon == std::string::npos) {
        lo = hi = std::stoi(s);
    } else {
        lo = std::stoi(s.substr(0, colon));
        hi = std::stoi(s.substr(colon + 1));
    }
    if (lo < 0 || hi < lo) throw std::invalid_argument("bad degree range: " + s);
}

std::string series_tsv(const TruncatedSeries& f, const char* valueHeader) {
    std::ostringstream os;
    os << "n\t" << valueHeader << "\n";
    for (int n = 0; n <= f.order; ++n) os << n << "\t" << f.coeffs[n].get_str() << "\n";
    return os.str();
}

void print_report_text(std::ostream& os, const LeadingTermReport& r) {
    os << "degree " << r.degree << " length " << r.length << " maxPart " << r.maxPart
       << " descriptors " << r.descriptorCount << (r.budgetExceeded ? " (budget exceeded)" : "")
       << "\n";
    os << "  pivots:";
    for (const auto& p : r.pivots) os << " " << to_string(p);
    os << "\n  new:";
    for (const auto& p : r.newPivots) {
        os << " " << to_string(p) << " [";
        const auto& ids = r.matchedConditions.at(p);
        for (size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
        os << "]";
    }
    os << "\n";
}

void print_report_tsv(std::ostream& os, const LeadingTermReport& r) {
    for (const auto& p : r.pivots) {
        bool isNew = std::find(r.newPivots.begin(), r.newPivots.end(), p) != r.newPivots.end();
        os << r.degree << "\t" << r.length << "\t" << r.maxPart << "\t" << to_string(p) << "\t"
           << (isNew ? 1 : 0) << "\t";
        const auto& ids = r.matchedConditions.at(p);
        for (size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
        os << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relation calculus and character checks for the level-5 twisted module"};
    app.require_subcommand(1);
    int jobs = 0;
    app.add_option("--jobs", jobs, "OpenMP thread count (0 = runtime default)");

    std::string format = "text", outPath, setName = "a22-level5";

    auto addCommon = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "tsv", "json"}));
        cmd->add_option("--out", outPath, "Write output to this file");
    };

    // relation
    std::string descriptorText;
    int maxPart = 0, psiOrder = 64;
    auto* cmdRel = app.add_subcommand("relation", "Expand one relation descriptor");
    cmdRel->add_option("descriptor", descriptorText, "e.g. \"S(-11)X(-3)\" or \"(1/3)*X(-6)R(-8)\"")
        ->required();
    cmdRel->add_option("--max-part", maxPart, "Largest allowed part (default degree - 2(len-1))");
    cmdRel->add_option("--psi-order", psiOrder, "Psi shift cutoff");
    addCommon(cmdRel);

    // scan
    std::string degreeRange;
    std::vector<int> lengths;
    int budget = 0, maxPartCap = 0;
    std::string descriptorFile;
    bool emitMatrix = false;
    auto* cmdScan = app.add_subcommand("scan", "Row-reduce relation cells and report leading terms");
    cmdScan->add_option("--degree", degreeRange, "Degree or range LO:HI")->required();
    cmdScan->add_option("--length", lengths, "Leading lengths (repeatable)")->required();
    cmdScan->add_option("--max-part", maxPartCap, "Cap on the largest part (0 = none)");
    cmdScan->add_option("--set", setName, "Condition set name or file");
    cmdScan->add_option("--budget", budget, "Descriptor budget per cell (0 = unlimited)");
    cmdScan->add_option("--psi-order", psiOrder, "Psi shift cutoff");
    cmdScan->add_option("--descriptors", descriptorFile,
                        "JSON-lines descriptor file replacing enumeration (single cell)");
    cmdScan->add_flag("--emit-matrix", emitMatrix, "Also print the row-reduced matrix");
    addCommon(cmdScan);

    // gseries
    int order = 0;
    bool vsChi5 = false;
    auto* cmdG = app.add_subcommand("gseries", "Generating series of admissible partitions");
    cmdG->add_option("--set", setName, "Condition set name or file");
    cmdG->add_option("--order", order, "Truncation order")->required();
    cmdG->add_flag("--vs-chi5", vsChi5, "Add chi5 and delta columns");
    addCommon(cmdG);

    // character
    std::vector<int> weight;
    auto* cmdChar = app.add_subcommand("character", "Principally specialized character");
    cmdChar->add_option("--weight", weight, "m0 m1 of the highest weight")
        ->expected(2)
        ->required();
    cmdChar->add_option("--order", order, "Truncation order")->required();
    addCommon(cmdChar);

    // borcea
    auto* cmdBor = app.add_subcommand("borcea", "Level-2 A1 counts against chi5");
    cmdBor->add_option("--order", order, "Truncation order")->required();
    addCommon(cmdBor);

    // verify
    std::vector<int> only;
    auto* cmdVerify = app.add_subcommand("verify", "Run the acceptance suite");
    cmdVerify->add_option("--only", only, "Criteria indices to run (default all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (jobs > 0) omp_set_num_threads(jobs);
        Sink sink(outPath);
        std::ostream& os = sink.out();

        if (cmdRel->parsed()) {
            auto d = parse_descriptor(descriptorText);
            int mp = maxPart > 0 ? maxPart : d.degree() - 2 * (d.leading_length() - 1);
            auto rel = generate_relation(d, mp, psiOrder);
            if (d.scale != BigRational(1)) {
                CycNum s(d.scale, BigRational(0));
                for (auto& [key, val] : rel.terms) val *= s;
            }
            if (format == "json") {
                os << relation_to_json(rel) << "\n";
            } else if (format == "tsv") {
                auto m = build_matrix(rel.degree, rel.length, mp, {d}, psiOrder);
                os << matrix_to_tsv(m);
            } else {
                os << rel.label << "  (degree " << rel.degree << ", length " << rel.length
                   << ", maxPart " << mp << ")\n";
                for (const auto& [key, val] : rel.terms)
                    os << "  [" << to_string(val) << "]  " << to_string(key) << "\n";
                if (rel.terms.empty()) os << "  (empty relation)\n";
            }
            return 0;
        }

        if (cmdScan->parsed()) {
            int lo = 0, hi = 0;
            parse_degree_range(degreeRange, lo, hi);
            auto cs = resolve_set(setName);
            std::vector<LeadingTermReport> reports;
            RelationMatrix replayMatrix;
            bool haveMatrix = false;
            if (!descriptorFile.empty()) {
                if (lo != hi || lengths.size() != 1)
                    throw std::invalid_argument("--descriptors needs a single degree and length");
                auto descs = load_descriptors(descriptorFile);
                int mp = maxPartCap > 0 ? maxPartCap : lo - 2 * (lengths[0] - 1);
                replayMatrix = row_reduce(build_matrix(lo, lengths[0], mp, descs, psiOrder));
                haveMatrix = true;
                auto rep = leading_terms(replayMatrix, cs);
                rep.descriptorCount = static_cast<int>(descs.size());
                reports.push_back(rep);
            } else {
                ScanOptions opt;
                opt.maxPartCap = maxPartCap;
                opt.descriptorBudget = budget;
                opt.psiOrder = psiOrder;
                reports = scan(lo, hi, lengths, cs, opt);
            }
            if (format == "json") {
                os << "[";
                for (size_t i = 0; i < reports.size(); ++i)
                    os << (i ? ",\n " : "") << report_to_json(reports[i]);
                os << "]\n";
            } else if (format == "tsv") {
                os << "degree\tlength\tmaxPart\tpivot\tnew\tconditions\n";
                for (const auto& r : reports) print_report_tsv(os, r);
            } else {
                for (const auto& r : reports) print_report_text(os, r);
            }
            if (emitMatrix) {
                if (!haveMatrix)
                    throw std::invalid_argument("--emit-matrix requires --descriptors");
                os << (format == "json" ? matrix_to_json(replayMatrix) + "\n"
                                        : matrix_to_tsv(replayMatrix));
            }
            return 0;
        }

        if (cmdG->parsed()) {
            auto cs = resolve_set(setName);
            if (vsChi5) {
                auto rows = compare_with_character(cs, chi5(order), order);
                if (format == "json") {
                    nlohmann::json j = nlohmann::json::array();
                    for (const auto& r : rows)
                        j.push_back({{"n", r.n},
                                     {"count", r.gCoeff.get_str()},
                                     {"chi", r.chiCoeff.get_str()},
                                     {"delta", r.delta.get_str()}});
                    os << j.dump() << "\n";
                } else {
                    os << "n\tcount\tchi\tdelta\n";
                    for (const auto& r : rows)
                        os << r.n << "\t" << r.gCoeff.get_str() << "\t" << r.chiCoeff.get_str()
                           << "\t" << r.delta.get_str() << "\n";
                }
            } else {
                auto f = count_series(cs, order);
                if (format == "json")
                    os << to_json(f) << "\n";
                else if (format == "tsv")
                    os << series_tsv(f, "count");
                else
                    os << to_string(f) << "\n";
            }
            return 0;
        }

        if (cmdChar->parsed()) {
            DominantWeight w{weight[0], weight[1]};
            auto data = specialization_data(w);
            auto f = principal_character(w, order);
            if (format == "json") {
                nlohmann::json j;
                j["weight"] = {w.m0, w.m1};
                j["modulus"] = data.modulus;
                j["jResidues"] = data.jResidues;
                j["kResidues"] = data.kResidues;
                j["coeffs"] = nlohmann::json::parse(to_json(f));
                os << j.dump() << "\n";
            } else if (format == "tsv") {
                os << series_tsv(f, "coeff");
            } else {
                os << "weight (" << w.m0 << "," << w.m1 << ")  modulus " << data.modulus
                   << "\n  J residues:";
                for (int r : data.jResidues) os << " " << r;
                os << "\n  K residues:";
                for (int r : data.kResidues) os << " " << r;
                os << "\n  " << to_string(f) << "\n";
            }
            return 0;
        }

        if (cmdBor->parsed()) {
            auto rows = borcea_compare(order);
            if (format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& r : rows)
                    j.push_back({{"n", r.n}, {"count", r.a1Count}, {"chi", r.chiCoeff}});
                os << j.dump() << "\n";
            } else {
                os << "n\tcount\tchi\tdelta\n";
                for (const auto& r : rows)
                    os << r.n << "\t" << r.a1Count << "\t" << r.chiCoeff << "\t"
                       << (r.a1Count - r.chiCoeff) << "\n";
            }
            return 0;
        }

        if (cmdVerify->parsed()) return run_acceptance(std::cout, only) == 0 ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
