// Copyright 2026 The qgd Authors
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

#include "qgd/matrix_io.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "qgd/errors.h"

namespace qgd {

namespace {

std::string_view trim(std::string_view s) {
    const char *ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string &what) {
    throw ParseError("matrix line " + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view token, std::size_t line) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        fail(line, "bad number '" + std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) {
            ++pos;
        }
        std::size_t start = pos;
        while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t') {
            ++pos;
        }
        if (pos > start) {
            out.push_back(s.substr(start, pos - start));
        }
    }
    return out;
}

}  // namespace

UnitaryMatrix parse_matrix_text(std::string_view text) {
    int n = -1;
    Eigen::Index dim = 0;
    Matrix m;
    Eigen::Index row = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        auto tokens = split_ws(line);
        if (n < 0) {
            if (tokens.size() != 2 || tokens[0] != "n") {
                fail(line_no, "expected header 'n <integer>'");
            }
            auto [ptr, ec] = std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), n);
            if (ec != std::errc{} || ptr != tokens[1].data() + tokens[1].size() || n < 1) {
                fail(line_no, "bad qubit count '" + std::string(tokens[1]) + "'");
            }
            if (n > kMaxQubits) {
                throw CapacityError("matrix of " + std::to_string(n) + " qubits exceeds the dense limit");
            }
            dim = Eigen::Index{1} << n;
            m = Matrix::Zero(dim, dim);
            continue;
        }
        if (row >= dim) {
            fail(line_no, "more than " + std::to_string(dim) + " rows");
        }
        if (static_cast<Eigen::Index>(tokens.size()) != dim) {
            fail(line_no, "expected " + std::to_string(dim) + " entries, got " + std::to_string(tokens.size()));
        }
        for (Eigen::Index c = 0; c < dim; ++c) {
            auto tok = tokens[static_cast<std::size_t>(c)];
            auto comma = tok.find(',');
            if (comma == std::string_view::npos) {
                fail(line_no, "entry " + std::to_string(c + 1) + " is not of the form re,im");
            }
            m(row, c) = Complex(parse_double(tok.substr(0, comma), line_no), parse_double(tok.substr(comma + 1), line_no));
        }
        ++row;
    }
    if (n < 0) {
        throw ParseError("matrix: missing header 'n <integer>'");
    }
    if (row != dim) {
        throw ParseError("matrix: expected " + std::to_string(dim) + " rows, got " + std::to_string(row));
    }
    return UnitaryMatrix(std::move(m));
}

std::string format_matrix_text(const UnitaryMatrix &u) {
    std::string out = "n " + std::to_string(u.num_qubits()) + "\n";
    char buf[64];
    const Matrix &m = u.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g", m(r, c).real(), m(r, c).imag());
            if (c > 0) {
                out += ' ';
            }
            out += buf;
        }
        out += '\n';
    }
    return out;
}

UnitaryMatrix read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open matrix file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix_text(buffer.str());
}

void write_matrix_file(const std::string &path, const UnitaryMatrix &u) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write matrix file '" + path + "'");
    }
    out << format_matrix_text(u);
}

}  // namespace qgd
