#include "cellform/io.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace cellform {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

}  // namespace

IncidenceMatrix parse_incidence(std::istream& in) {
    std::string line;
    int line_no = 0;
    int m = -1, n = -1;
    int header_line = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        auto toks = tokens_of(line);
        if (toks.size() != 2)
            throw parse_error("line " + std::to_string(line_no) +
                              ": expected header \"m n\", got " + std::to_string(toks.size()) +
                              " tokens");
        try {
            m = std::stoi(toks[0]);
            n = std::stoi(toks[1]);
        } catch (const std::exception&) {
            throw parse_error("line " + std::to_string(line_no) + ": malformed header token");
        }
        header_line = line_no;
        break;
    }
    if (m < 0) throw parse_error("empty input: no \"m n\" header found");
    if (m < 2 || n < 2)
        throw parse_error("line " + std::to_string(header_line) +
                          ": matrix must be at least 2x2, got " + std::to_string(m) + "x" +
                          std::to_string(n));

    std::vector<std::uint8_t> entries;
    entries.reserve(static_cast<std::size_t>(m) * n);
    int rows_read = 0;
    while (rows_read < m && std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        auto toks = tokens_of(line);
        if (static_cast<int>(toks.size()) != n)
            throw parse_error("line " + std::to_string(line_no) + ": expected " +
                              std::to_string(n) + " values, got " + std::to_string(toks.size()));
        for (const auto& t : toks) {
            if (t == "0")
                entries.push_back(0);
            else if (t == "1")
                entries.push_back(1);
            else
                throw parse_error("line " + std::to_string(line_no) + ": invalid token '" + t +
                                  "', expected 0 or 1");
        }
        ++rows_read;
    }
    if (rows_read < m)
        throw parse_error("unexpected end of input: got " + std::to_string(rows_read) + " of " +
                          std::to_string(m) + " rows");

    try {
        return IncidenceMatrix(m, n, std::move(entries));
    } catch (const validation_error& e) {
        throw parse_error(e.what());
    }
}

void write_incidence(const IncidenceMatrix& matrix, std::ostream& out) {
    out << matrix.machines() << ' ' << matrix.parts() << '\n';
    for (int i = 0; i < matrix.machines(); ++i) {
        for (int j = 0; j < matrix.parts(); ++j) {
            if (j) out << ' ';
            out << (matrix.at(i, j) ? '1' : '0');
        }
        out << '\n';
    }
}

std::vector<ProblemRecord> load_manifest(std::istream& in) {
    std::vector<ProblemRecord> records;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        auto toks = tokens_of(line);
        if (toks.size() < 4 || toks.size() > 6)
            throw parse_error("manifest line " + std::to_string(line_no) +
                              ": expected 4-6 fields, got " + std::to_string(toks.size()));
        ProblemRecord rec;
        rec.name = toks[0];
        rec.size = toks[1];
        rec.source = toks[2];
        rec.path = toks[3];
        auto parse_pct = [&](const std::string& t) -> std::optional<double> {
            if (t == "-") return std::nullopt;
            double v;
            try {
                v = std::stod(t);
            } catch (const std::exception&) {
                throw parse_error("manifest line " + std::to_string(line_no) +
                                  ": malformed percentage '" + t + "'");
            }
            if (v < 0.0 || v > 100.0)
                throw parse_error("manifest line " + std::to_string(line_no) + ": percentage " +
                                  t + " out of [0,100]");
            return v;
        };
        if (toks.size() >= 5) rec.reported_best = parse_pct(toks[4]);
        if (toks.size() == 6) rec.reported_hybrid = parse_pct(toks[5]);
        records.push_back(std::move(rec));
    }
    return records;
}

namespace {

// Machines grouped by cell, then parts grouped by cell, each ascending.
struct BlockOrder {
    std::vector<std::vector<int>> machines_by_cell;
    std::vector<std::vector<int>> parts_by_cell;
};

BlockOrder block_order(const IncidenceMatrix& matrix, const CellConfiguration& config) {
    BlockOrder order;
    order.machines_by_cell.resize(config.cell_count);
    order.parts_by_cell.resize(config.cell_count);
    for (int i = 0; i < matrix.machines(); ++i)
        order.machines_by_cell[config.machine_cell[i]].push_back(i);
    for (int j = 0; j < matrix.parts(); ++j)
        order.parts_by_cell[config.part_cell[j]].push_back(j);
    return order;
}

void write_text_report(const IncidenceMatrix& matrix, const SolveReport& report,
                       std::ostream& out) {
    const auto& config = report.best;
    const auto order = block_order(matrix, config);

    out << "machines " << matrix.machines() << '\n';
    out << "parts " << matrix.parts() << '\n';
    out << "best_k " << report.best_k << '\n';
    for (int c = 0; c < config.cell_count; ++c) {
        out << "cell " << c + 1 << ": machines";
        for (int i : order.machines_by_cell[c]) out << " m" << i + 1;
        out << " | parts";
        for (int j : order.parts_by_cell[c]) out << " p" << j + 1;
        out << '\n';
    }

    std::vector<int> cols;
    for (const auto& parts : order.parts_by_cell)
        cols.insert(cols.end(), parts.begin(), parts.end());

    const int label_w = 1 + static_cast<int>(std::to_string(matrix.machines()).size());
    out << "block matrix:\n";
    out << std::setw(label_w) << "";
    for (int j : cols) out << ' ' << std::setw(3) << ("p" + std::to_string(j + 1));
    out << '\n';
    for (int c = 0; c < config.cell_count; ++c) {
        for (int i : order.machines_by_cell[c]) {
            out << std::setw(label_w) << ("m" + std::to_string(i + 1));
            for (int j : cols) out << ' ' << std::setw(3) << (matrix.at(i, j) ? '1' : '0');
            out << '\n';
        }
    }

    out << "E " << report.breakdown.total_ones << '\n';
    out << "E_e " << report.breakdown.exceptional << '\n';
    out << "E_v " << report.breakdown.voids << '\n';
    out << "efficacy " << report.breakdown.efficacy.percent() << '\n';

    out << "per-cut:\n";
    for (const auto& cut : report.per_cut)
        out << "k " << cut.k << " efficacy " << cut.efficacy.percent() << '\n';

    out << "trace:\n";
    for (const auto& entry : report.trace)
        out << entry.iteration << ' ' << entry.efficacy.percent() << ' '
            << (entry.accepted ? "accepted" : "rejected") << '\n';
}

void write_json_report(const IncidenceMatrix& matrix, const SolveReport& report,
                       std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["machines"] = matrix.machines();
    doc["parts"] = matrix.parts();
    doc["best_k"] = report.best_k;
    doc["efficacy"] = {{"E", report.breakdown.total_ones},
                       {"E_e", report.breakdown.exceptional},
                       {"E_v", report.breakdown.voids},
                       {"tau_num", report.breakdown.efficacy.num},
                       {"tau_den", report.breakdown.efficacy.den},
                       {"percent", report.breakdown.efficacy.percent()}};

    const auto order = block_order(matrix, report.best);
    auto cells = nlohmann::ordered_json::array();
    for (int c = 0; c < report.best.cell_count; ++c) {
        nlohmann::ordered_json cell;
        auto machines = nlohmann::ordered_json::array();
        for (int i : order.machines_by_cell[c]) machines.push_back(i + 1);
        auto parts = nlohmann::ordered_json::array();
        for (int j : order.parts_by_cell[c]) parts.push_back(j + 1);
        cell["machines"] = machines;
        cell["parts"] = parts;
        cells.push_back(cell);
    }
    doc["cells"] = cells;

    auto per_cut = nlohmann::ordered_json::array();
    for (const auto& cut : report.per_cut)
        per_cut.push_back({{"k", cut.k}, {"percent", cut.efficacy.percent()}});
    doc["per_cut"] = per_cut;

    auto trace = nlohmann::ordered_json::array();
    for (const auto& entry : report.trace)
        trace.push_back({{"iteration", entry.iteration},
                         {"percent", entry.efficacy.percent()},
                         {"accepted", entry.accepted}});
    doc["trace"] = trace;

    auto dendro = nlohmann::ordered_json::array();
    for (const auto& merge : report.dendrogram.merges)
        dendro.push_back({merge.left, merge.right, merge.level});
    doc["dendrogram"] = dendro;

    out << doc.dump(2) << '\n';
}

}  // namespace

void write_report(const IncidenceMatrix& matrix, const SolveReport& report, ReportFormat format,
                  std::ostream& out) {
    if (format == ReportFormat::text)
        write_text_report(matrix, report, out);
    else
        write_json_report(matrix, report, out);
}

void write_dendrogram(const LinkageTree& tree, std::ostream& out) {
    char buf[64];
    for (const auto& merge : tree.merges) {
        std::snprintf(buf, sizeof(buf), "%d %d %.3f", merge.left, merge.right, merge.level);
        out << buf << '\n';
    }
}

}  // namespace cellform
