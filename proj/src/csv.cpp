#include "glsfun/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace glsfun::csv {

std::string format_full(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

const char* mono_name(Monotonicity m) {
    switch (m) {
        case Monotonicity::increasing: return "increasing";
        case Monotonicity::decreasing: return "decreasing";
        default: return "unknown";
    }
}

const char* conv_name(Convexity c) {
    switch (c) {
        case Convexity::convex: return "convex";
        case Convexity::concave: return "concave";
        default: return "unknown";
    }
}

double parse_double(const std::string& s, const std::string& path, int line_no) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str())
        throw IoError(path + ":" + std::to_string(line_no) + ": cannot parse number '" + s + "'");
    return v;
}

std::pair<std::string, std::string> split_pair(const std::string& line, const std::string& path,
                                               int line_no) {
    const auto comma = line.find(',');
    if (comma == std::string::npos)
        throw IoError(path + ":" + std::to_string(line_no) + ": expected two comma-separated fields");
    return {line.substr(0, comma), line.substr(comma + 1)};
}

}  // namespace

void save_tabulation(const ScalarFunction& tab, const std::string& path) {
    const Tabulation* t = tab.as_tabulation();
    if (!t) throw IoError("save_tabulation: " + tab.describe() + " is not a tabulation");
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << "# interp=" << (t->rule == Interp::linear ? "linear" : "loglog")
        << " monotonicity=" << mono_name(tab.monotonicity())
        << " convexity=" << conv_name(tab.convexity()) << "\n";
    out << "x,value\n";
    for (std::size_t i = 0; i < t->x.size(); ++i)
        out << format_full(t->x[i]) << "," << format_full(t->y[i]) << "\n";
    if (!out) throw IoError("write failed on '" + path + "'");
}

ScalarFunction load_tabulation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::string line;
    std::vector<double> xs, ys;
    Interp rule = Interp::linear;
    Monotonicity mono = Monotonicity::unknown;
    Convexity conv = Convexity::unknown;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream meta(line.substr(1));
            std::string kv;
            while (meta >> kv) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                if (key == "interp") rule = val == "loglog" ? Interp::loglog : Interp::linear;
                if (key == "monotonicity")
                    mono = val == "increasing"   ? Monotonicity::increasing
                           : val == "decreasing" ? Monotonicity::decreasing
                                                 : Monotonicity::unknown;
                if (key == "convexity")
                    conv = val == "convex"    ? Convexity::convex
                           : val == "concave" ? Convexity::concave
                                              : Convexity::unknown;
            }
            continue;
        }
        if (line.rfind("x,", 0) == 0) continue;  // header
        auto [a, b] = split_pair(line, path, line_no);
        xs.push_back(parse_double(a, path, line_no));
        ys.push_back(parse_double(b, path, line_no));
    }
    if (xs.size() < 2) throw IoError(path + ": needs at least two knot rows");
    ScalarFunction tab = ScalarFunction::tabulation(std::move(xs), std::move(ys), rule);
    if (mono != Monotonicity::unknown) tab = tab.with_monotonicity(mono);
    if (conv != Convexity::unknown) tab = tab.with_convexity(conv);
    return tab;
}

WeightedSamples load_weighted(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    WeightedSamples ws;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("weight,", 0) == 0) continue;  // header
        auto [a, b] = split_pair(line, path, line_no);
        ws.weights.push_back(parse_double(a, path, line_no));
        ws.values.push_back(parse_double(b, path, line_no));
    }
    if (ws.weights.empty()) throw IoError(path + ": no data rows");
    return ws;
}

std::string table_to_string(const std::vector<std::string>& comments, const std::string& header,
                            const std::vector<std::vector<double>>& rows) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << "\n";
    out << header << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_full(row[i]);
        out << "\n";
    }
    return out.str();
}

void write_table(const std::string& path, const std::vector<std::string>& comments,
                 const std::string& header, const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << table_to_string(comments, header, rows);
    if (!out) throw IoError("write failed on '" + path + "'");
}

}  // namespace glsfun::csv
