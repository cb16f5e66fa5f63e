// Copyright 2026 colorproj Contributors
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

#include <istream>
#include <ostream>
#include <sstream>

#include "colorproj/tiling.h"

namespace colorproj {

namespace {

std::string next_line(std::istream &in, const char *expecting) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        return line;
    }
    throw std::invalid_argument(std::string("tiling file truncated; expected ") + expecting);
}

size_t parse_header_count(const std::string &line, const std::string &key) {
    std::istringstream ss(line);
    std::string word;
    size_t count = 0;
    if (!(ss >> word) || word != key || !(ss >> count)) {
        throw std::invalid_argument("tiling file: expected '" + key + " <count>', got '" + line + "'");
    }
    std::string extra;
    if (ss >> extra) {
        throw std::invalid_argument("tiling file: trailing data after '" + key + "'");
    }
    return count;
}

}  // namespace

void write_tiling(std::ostream &out, const SurfaceTiling &t) {
    out << "tiling v1\n";
    out << "vertices " << t.num_vertices() << "\n";
    out << "edges " << t.num_edges() << "\n";
    for (const auto &e : t.edges()) {
        out << e.u << " " << e.v << "\n";
    }
    out << "faces " << t.num_faces() << "\n";
    for (const auto &f : t.faces()) {
        for (size_t i = 0; i < f.size(); i++) {
            if (i) {
                out << " ";
            }
            out << f[i];
        }
        out << "\n";
    }
    if (t.has_colors()) {
        out << "vertex_colors ";
        for (Color c : *t.vertex_colors()) {
            out << color_letter(c);
        }
        out << "\n";
    }
}

SurfaceTiling read_tiling(std::istream &in) {
    if (next_line(in, "header") != "tiling v1") {
        throw std::invalid_argument("tiling file: missing 'tiling v1' header");
    }
    size_t n = parse_header_count(next_line(in, "vertices"), "vertices");
    size_t m = parse_header_count(next_line(in, "edges"), "edges");
    std::vector<TilingEdge> edges(m);
    for (size_t i = 0; i < m; i++) {
        std::istringstream ss(next_line(in, "edge"));
        if (!(ss >> edges[i].u >> edges[i].v)) {
            throw std::invalid_argument("tiling file: bad edge line " + std::to_string(i));
        }
    }
    size_t k = parse_header_count(next_line(in, "faces"), "faces");
    std::vector<std::vector<uint32_t>> faces(k);
    for (size_t i = 0; i < k; i++) {
        std::istringstream ss(next_line(in, "face"));
        uint32_t e;
        while (ss >> e) {
            faces[i].push_back(e);
        }
        if (!ss.eof()) {
            throw std::invalid_argument("tiling file: bad face line " + std::to_string(i));
        }
    }
    std::optional<std::vector<Color>> colors;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::istringstream ss(line);
        std::string key, letters;
        ss >> key >> letters;
        if (key != "vertex_colors" || colors) {
            throw std::invalid_argument("tiling file: unexpected line '" + line + "'");
        }
        if (letters.size() != n) {
            throw std::invalid_argument("tiling file: vertex_colors length does not match vertex count");
        }
        colors.emplace();
        for (char ch : letters) {
            colors->push_back(color_from_letter(ch));
        }
    }
    return SurfaceTiling(n, std::move(edges), std::move(faces), std::move(colors));
}

std::string save_tiling(const SurfaceTiling &t) {
    std::ostringstream ss;
    write_tiling(ss, t);
    return ss.str();
}

SurfaceTiling load_tiling(const std::string &text) {
    std::istringstream ss(text);
    return read_tiling(ss);
}

}  // namespace colorproj
