#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "quarklet/filters.hpp"
#include "quarklet/grid_function.hpp"

namespace quarklet {

/// Finite sparse map QuarkletIndex -> value, with the filter/window metadata
/// the entries were produced under.
struct CoefficientSet {
    struct Meta {
        int m = 0;
        int mtilde = 0;
        int max_level = 0;  // largest wavelet level J present by construction
        Window window{0, 0};
    };

    std::map<QuarkletIndex, double> entries;
    Meta meta;

    bool empty() const { return entries.empty(); }
    size_t size() const { return entries.size(); }
    double at(const QuarkletIndex& idx) const {
        auto it = entries.find(idx);
        return it == entries.end() ? 0.0 : it->second;
    }
    void set(const QuarkletIndex& idx, double v) {
        if (v == 0.0)
            entries.erase(idx);
        else
            entries[idx] = v;
    }
};

/// CSV with header "p,j,k,value"; integers in decimal, values with 17
/// significant digits.
void write_coefficients_csv(std::ostream& os, const CoefficientSet& c);
CoefficientSet read_coefficients_csv(std::istream& is);

void save_coefficients_csv(const std::string& path, const CoefficientSet& c);
CoefficientSet load_coefficients_csv(const std::string& path);

}  // namespace quarklet
