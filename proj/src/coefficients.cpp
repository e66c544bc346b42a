#include "quarklet/coefficients.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace quarklet {

void write_coefficients_csv(std::ostream& os, const CoefficientSet& c) {
    os << "p,j,k,value\n";
    for (const auto& [idx, v] : c.entries) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << idx.p << ',' << idx.j << ',' << idx.k << ',' << buf << '\n';
    }
}

CoefficientSet read_coefficients_csv(std::istream& is) {
    CoefficientSet c;
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty coefficient CSV");
    if (line != "p,j,k,value" && line != "p,j,k,value\r")
        throw std::runtime_error("coefficient CSV must start with header 'p,j,k,value'");
    size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        QuarkletIndex idx;
        double v = 0.0;
        char c1, c2, c3;
        if (!(ls >> idx.p >> c1 >> idx.j >> c2 >> idx.k >> c3 >> v) || c1 != ',' || c2 != ',' || c3 != ',')
            throw std::runtime_error("malformed coefficient CSV at line " + std::to_string(lineno));
        if (idx.p < 0 || idx.j < -1) throw std::runtime_error("invalid index in coefficient CSV at line " + std::to_string(lineno));
        c.set(idx, v);
        if (idx.j > c.meta.max_level) c.meta.max_level = idx.j;
    }
    return c;
}

void save_coefficients_csv(const std::string& path, const CoefficientSet& c) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    write_coefficients_csv(os, c);
    if (!os.good()) throw std::runtime_error("write failure on " + path);
}

CoefficientSet load_coefficients_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_coefficients_csv(is);
}

}  // namespace quarklet
