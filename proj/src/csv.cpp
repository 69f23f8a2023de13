#include "respen/csv.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace respen {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& field) {
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) {
        throw std::invalid_argument("bad numeric field: '" + field + "'");
    }
    return v;
}

}  // namespace respen
