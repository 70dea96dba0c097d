#pragma once

// CSV serialization of fields and checksum helpers for run manifests.
// Output is byte-deterministic: fixed %.17g formatting, storage-order
// sites, ascending blade masks, LF line endings.

#include <latdirac/lattice.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace latdirac {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Schema: header "i0,...,i{n-1},blade,re,im"; one row per (site, blade)
// holding a nonzero coefficient.  The blade column is the decimal bitmask.
inline std::string field_csv_header(const LatticeGrid& g) {
    std::string h;
    for (int a = 0; a < g.n; ++a) h += "i" + std::to_string(a) + ",";
    return h + "blade,re,im";
}

inline std::string field_to_csv(const CliffordField& f) {
    const LatticeGrid& g = f.grid();
    std::string out = field_csv_header(g) + "\n";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.at(i).is_zero()) continue;
        auto m = g.coords(i);
        std::string prefix;
        for (int a = 0; a < g.n; ++a) prefix += std::to_string(m[static_cast<std::size_t>(a)]) + ",";
        for (const auto& [mask, c] : f.at(i).terms()) {
            out += prefix + std::to_string(mask) + "," + format_g17(c.real()) + "," +
                   format_g17(c.imag()) + "\n";
        }
    }
    return out;
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open for writing: " + path);
    os << content;
    if (!os) throw IoError("write failed: " + path);
}

inline void write_field_csv(const std::string& path, const CliffordField& f) {
    write_text_file(path, field_to_csv(f));
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

inline CliffordField read_field_csv(const std::string& path, const LatticeGrid& grid) {
    std::istringstream is(read_text_file(path));
    std::string line;
    if (!std::getline(is, line)) throw IoError("empty field file: " + path);
    // Strip a possible trailing CR before matching the header.
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != field_csv_header(grid))
        throw IoError("field file header does not match the configured grid: " + path);

    CliffordField f(grid);
    std::vector<int> m(static_cast<std::size_t>(grid.n));
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        auto next_cell = [&]() {
            if (!std::getline(row, cell, ','))
                throw IoError(path + ":" + std::to_string(lineno) + ": too few columns");
            return cell;
        };
        try {
            for (int a = 0; a < grid.n; ++a) {
                int v = std::stoi(next_cell());
                if (v < 0 || v >= grid.N)
                    throw IoError(path + ":" + std::to_string(lineno) + ": site index out of range");
                m[static_cast<std::size_t>(a)] = v;
            }
            auto mask = static_cast<std::uint32_t>(std::stoul(next_cell()));
            if (mask >= (1u << grid.sig().generators()))
                throw IoError(path + ":" + std::to_string(lineno) + ": blade outside the algebra");
            double re = std::stod(next_cell());
            double im = std::stod(next_cell());
            f.at(grid.index(m)).add_term(mask, cplx{re, im});
        } catch (const IoError&) {
            throw;
        } catch (const std::exception&) {
            throw IoError(path + ":" + std::to_string(lineno) + ": malformed row");
        }
        if (std::getline(row, cell, ','))
            throw IoError(path + ":" + std::to_string(lineno) + ": too many columns");
    }
    return f;
}

inline std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& bytes) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

}  // namespace latdirac
