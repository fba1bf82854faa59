// Copyright 2026 The fermiqi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fermiqi/text_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "fermiqi/error.hpp"

namespace fermiqi {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

struct Line {
    std::string_view text;
    std::size_t number;  // 1-based
};

// Non-blank lines with `#` comments removed.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        number++;
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        line = line.substr(0, line.find('#'));
        if (line.find_first_not_of(" \t") != std::string_view::npos) {
            out.push_back({line, number});
        }
        if (end == text.size()) {
            break;
        }
        start = end + 1;
    }
    return out;
}

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            i++;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
            j++;
        }
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

double parse_double(const Token &token, std::size_t line) {
    std::string_view s = token.text;
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(line, token.column, "expected a number, got '" + std::string(token.text) + "'");
    }
    return value;
}

long parse_integer(const Token &token, std::size_t line) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
    if (ec != std::errc() || ptr != token.text.data() + token.text.size() || value < 0) {
        throw ParseError(line, token.column, "expected a non-negative integer, got '" + std::string(token.text) + "'");
    }
    return value;
}

// Parses `<keyword>:` followed by the rest of the line.
std::optional<std::string_view> keyword_value(const Line &line, std::string_view keyword) {
    std::string_view t = line.text;
    std::size_t first = t.find_first_not_of(" \t");
    t.remove_prefix(first);
    if (t.substr(0, keyword.size()) != keyword || t.size() <= keyword.size() || t[keyword.size()] != ':') {
        return std::nullopt;
    }
    return t.substr(keyword.size() + 1);
}

ModeOrder parse_modes_header(const std::vector<Line> &lines, std::size_t total_lines, bool allow_empty) {
    if (lines.empty()) {
        throw ParseError(total_lines ? total_lines : 1, 0, "missing 'modes:' header (empty input)");
    }
    auto value = keyword_value(lines[0], "modes");
    if (!value) {
        throw ParseError(lines[0].number, 1, "expected 'modes: <label> ...' header");
    }
    auto tokens = tokenize(*value);
    if (tokens.empty()) {
        if (allow_empty) {
            return ModeOrder::none();
        }
        throw ParseError(lines[0].number, 0, "'modes:' header lists no modes");
    }
    std::vector<std::string> labels;
    for (const auto &t : tokens) {
        labels.emplace_back(t.text);
    }
    try {
        return ModeOrder(std::move(labels));
    } catch (const ParseError &) {
        throw;
    } catch (const Error &e) {
        throw ParseError(lines[0].number, 0, e.what());
    }
}

std::size_t count_lines(std::string_view text) {
    std::size_t n = 1;
    for (char c : text) {
        n += c == '\n';
    }
    return n;
}

// Reads `count` numbers from the lines starting at `first_line`, enforcing that
// no extra numbers follow.
std::vector<double> read_numbers(const std::vector<Line> &lines, std::size_t &cursor, std::size_t count,
                                 bool stop_at_count) {
    std::vector<double> out;
    out.reserve(count);
    while (cursor < lines.size() && out.size() < count) {
        for (const auto &t : tokenize(lines[cursor].text)) {
            if (out.size() == count) {
                throw ParseError(lines[cursor].number, t.column, "unexpected extra value");
            }
            out.push_back(parse_double(t, lines[cursor].number));
        }
        cursor++;
    }
    if (out.size() < count) {
        std::size_t line = lines.empty() ? 1 : lines.back().number;
        throw ParseError(line, 0,
                         "expected " + std::to_string(count) + " numbers, found " + std::to_string(out.size()));
    }
    if (!stop_at_count && cursor < lines.size()) {
        throw ParseError(lines[cursor].number, 1, "unexpected trailing content");
    }
    return out;
}

Eigen::MatrixXcd read_matrix(const std::vector<Line> &lines, std::size_t &cursor, Eigen::Index rows,
                             Eigen::Index cols, bool stop_at_count) {
    auto numbers = read_numbers(lines, cursor, static_cast<std::size_t>(2 * rows * cols), stop_at_count);
    Eigen::MatrixXcd m(rows, cols);
    std::size_t k = 0;
    for (Eigen::Index i = 0; i < rows; i++) {
        for (Eigen::Index j = 0; j < cols; j++) {
            m(i, j) = Complex(numbers[k], numbers[k + 1]);
            k += 2;
        }
    }
    return m;
}

void write_matrix_rows(std::ostringstream &out, const Eigen::MatrixXcd &m) {
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            if (j) {
                out << ' ';
            }
            out << format_number(m(i, j).real()) << ' ' << format_number(m(i, j).imag());
        }
        out << '\n';
    }
}

}  // namespace

std::string format_number(double value, int significant_digits) {
    if (value == 0) {
        return "0";
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, significant_digits);
    if (ec != std::errc()) {
        throw Error("number formatting failed");
    }
    return std::string(buf, ptr);
}

FockVector parse_state(std::string_view text) {
    auto lines = content_lines(text);
    ModeOrder order = parse_modes_header(lines, count_lines(text), false);
    std::vector<std::pair<Occupation, Complex>> terms;
    for (std::size_t k = 1; k < lines.size(); k++) {
        const auto &line = lines[k];
        auto tokens = tokenize(line.text);
        if (tokens.size() != 3) {
            throw ParseError(line.number, tokens.size() > 3 ? tokens[3].column : 0,
                             "expected '<re> <im> |<bits>>'");
        }
        double re = parse_double(tokens[0], line.number);
        double im = parse_double(tokens[1], line.number);
        std::string_view ket = tokens[2].text;
        if (ket.size() < 2 || ket.front() != '|' || ket.back() != '>') {
            throw ParseError(line.number, tokens[2].column, "expected a ket '|<bits>>'");
        }
        std::string_view bits = ket.substr(1, ket.size() - 2);
        if (bits.size() != order.size()) {
            throw ParseError(line.number, tokens[2].column + 1,
                             "ket has " + std::to_string(bits.size()) + " bits, expected " +
                                 std::to_string(order.size()));
        }
        for (std::size_t b = 0; b < bits.size(); b++) {
            if (bits[b] != '0' && bits[b] != '1') {
                throw ParseError(line.number, tokens[2].column + 1 + b, "occupation must be 0 or 1");
            }
        }
        terms.emplace_back(Occupation::from_string(bits), Complex(re, im));
    }
    return FockVector(std::move(order), terms);
}

std::string write_state(const FockVector &state) {
    std::ostringstream out;
    out << "modes: " << state.order().to_string() << '\n';
    for (const auto &[occ, amp] : state.terms()) {
        out << format_number(amp.real()) << ' ' << format_number(amp.imag()) << " |" << occ.to_string() << ">\n";
    }
    return out.str();
}

DensityMatrix parse_density(std::string_view text) {
    auto lines = content_lines(text);
    ModeOrder order = parse_modes_header(lines, count_lines(text), true);
    if (lines.size() < 2) {
        throw ParseError(lines[0].number + 1, 0, "missing dimension line");
    }
    auto dim_tokens = tokenize(lines[1].text);
    if (dim_tokens.size() != 1) {
        throw ParseError(lines[1].number, 0, "expected a single dimension");
    }
    long dim = parse_integer(dim_tokens[0], lines[1].number);
    const long expected = 1L << order.size();
    if (dim != expected) {
        throw ParseError(lines[1].number, dim_tokens[0].column,
                         "dimension " + std::to_string(dim) + " does not match " + std::to_string(order.size()) +
                             " modes (expected " + std::to_string(expected) + ")");
    }
    std::size_t cursor = 2;
    Eigen::MatrixXcd m = read_matrix(lines, cursor, dim, dim, false);
    try {
        return DensityMatrix(std::move(order), std::move(m));
    } catch (const Error &e) {
        throw ParseError(lines[1].number, 0, e.what());
    }
}

std::string write_density(const DensityMatrix &rho) {
    std::ostringstream out;
    out << "modes:";
    if (!rho.order().empty()) {
        out << ' ' << rho.order().to_string();
    }
    out << '\n' << rho.dimension() << '\n';
    write_matrix_rows(out, rho.matrix());
    return out.str();
}

KrausChannel parse_channel(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) {
        throw ParseError(1, 0, "missing 'kraus:' header (empty input)");
    }
    auto value = keyword_value(lines[0], "kraus");
    if (!value) {
        throw ParseError(lines[0].number, 1, "expected 'kraus: <count>' header");
    }
    auto count_tokens = tokenize(*value);
    if (count_tokens.size() != 1) {
        throw ParseError(lines[0].number, 0, "expected a single operator count");
    }
    long count = parse_integer(count_tokens[0], lines[0].number);
    std::vector<Eigen::MatrixXcd> ops;
    std::size_t cursor = 1;
    for (long k = 0; k < count; k++) {
        if (cursor >= lines.size()) {
            throw ParseError(lines.back().number, 0, "missing Kraus operator " + std::to_string(k + 1));
        }
        auto shape = tokenize(lines[cursor].text);
        if (shape.size() != 2) {
            throw ParseError(lines[cursor].number, 0, "expected '<rows> <cols>'");
        }
        long rows = parse_integer(shape[0], lines[cursor].number);
        long cols = parse_integer(shape[1], lines[cursor].number);
        cursor++;
        ops.push_back(read_matrix(lines, cursor, rows, cols, true));
    }
    if (cursor < lines.size()) {
        throw ParseError(lines[cursor].number, 1, "unexpected trailing content");
    }
    try {
        return KrausChannel(std::move(ops));
    } catch (const Error &e) {
        throw ParseError(lines[0].number, 0, e.what());
    }
}

std::string write_channel(const KrausChannel &channel) {
    std::ostringstream out;
    out << "kraus: " << channel.operators().size() << '\n';
    for (const auto &k : channel.operators()) {
        out << k.rows() << ' ' << k.cols() << '\n';
        write_matrix_rows(out, k);
    }
    return out.str();
}

std::string format_report(const EntanglementReport &report) {
    return "measure=" + report.measure + " value=" + format_number(report.value) +
           " restarts=" + std::to_string(report.restarts) + " residual=" + format_number(report.residual);
}

EntanglementReport parse_report(std::string_view line) {
    EntanglementReport out;
    bool seen[4] = {false, false, false, false};
    for (const auto &t : tokenize(line)) {
        auto eq = t.text.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(1, t.column, "expected key=value");
        }
        std::string_view key = t.text.substr(0, eq);
        Token value{t.text.substr(eq + 1), t.column + eq + 1};
        if (key == "measure") {
            out.measure = std::string(value.text);
            seen[0] = true;
        } else if (key == "value") {
            out.value = parse_double(value, 1);
            seen[1] = true;
        } else if (key == "restarts") {
            out.restarts = static_cast<int>(parse_integer(value, 1));
            seen[2] = true;
        } else if (key == "residual") {
            out.residual = parse_double(value, 1);
            seen[3] = true;
        } else {
            throw ParseError(1, t.column, "unknown report key '" + std::string(key) + "'");
        }
    }
    if (!(seen[0] && seen[1] && seen[2] && seen[3])) {
        throw ParseError(1, 0, "report needs measure, value, restarts and residual");
    }
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace fermiqi
