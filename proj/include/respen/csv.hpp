#ifndef RESPEN_CSV_HPP
#define RESPEN_CSV_HPP

#include <string>

namespace respen {

// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

// Strict double parse of a whole field; throws std::invalid_argument.
double parse_double(const std::string& field);

}  // namespace respen

#endif  // RESPEN_CSV_HPP
