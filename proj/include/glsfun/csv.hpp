#pragma once

#include <string>
#include <vector>

#include "glsfun/scalar_fn.hpp"

namespace glsfun::csv {

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

// Full-precision decimal rendering so saved tables reload bit-identically.
std::string format_full(double x);

// Layout: optional `# key=value ...` metadata comment, `x,value` header, one
// knot per row. Metadata keys: interp, monotonicity, convexity.
void save_tabulation(const ScalarFunction& tab, const std::string& path);
ScalarFunction load_tabulation(const std::string& path);

struct WeightedSamples {
    std::vector<double> weights;
    std::vector<double> values;
};

// `weight,value` rows; `#` comment lines ignored.
WeightedSamples load_weighted(const std::string& path);

std::string table_to_string(const std::vector<std::string>& comments, const std::string& header,
                            const std::vector<std::vector<double>>& rows);
void write_table(const std::string& path, const std::vector<std::string>& comments,
                 const std::string& header, const std::vector<std::vector<double>>& rows);

}  // namespace glsfun::csv
