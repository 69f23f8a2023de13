#include "respen/dataset.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "respen/csv.hpp"

namespace respen {

void validate_dataset(const Dataset& dataset) {
    if (dataset.x.size() != dataset.y.size()) {
        throw std::invalid_argument("x and y must have the same length");
    }
    if (dataset.x.empty()) {
        throw std::invalid_argument("dataset must contain at least one point");
    }
    for (double xi : dataset.x) {
        if (!(xi >= 0.0 && xi <= 1.0)) {
            throw std::invalid_argument("every x must lie in [0, 1]");
        }
    }
    for (double yi : dataset.y) {
        if (!std::isfinite(yi)) {
            throw std::invalid_argument("every y must be finite");
        }
    }
}

Dataset read_dataset_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open dataset file: " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("empty dataset file: " + path);
    }
    Dataset ds;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("malformed dataset row: '" + line + "'");
        }
        ds.x.push_back(parse_double(line.substr(0, comma)));
        ds.y.push_back(parse_double(line.substr(comma + 1)));
    }
    validate_dataset(ds);
    return ds;
}

void write_dataset_csv(const std::string& path, const Dataset& dataset) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write dataset file: " + path);
    }
    out << "x,y\n";
    for (int i = 0; i < dataset.n(); ++i) {
        out << format_double(dataset.x[i]) << ',' << format_double(dataset.y[i])
            << '\n';
    }
    if (!out) {
        throw std::runtime_error("error while writing: " + path);
    }
}

}  // namespace respen
