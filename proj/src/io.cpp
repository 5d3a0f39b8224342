#include "qroots/io.hpp"

#include <fstream>
#include <sstream>

namespace qroots {

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Poly read_poly(std::istream& in) {
    std::vector<Rat> coeffs;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;
        coeffs.push_back(parse_rational(t));
    }
    if (coeffs.empty()) throw parse_error("no coefficients found");
    return Poly(std::move(coeffs));
}

Poly read_poly_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open '" + path + "'");
    return read_poly(f);
}

Poly parse_poly_text(const std::string& text) {
    std::istringstream is(text);
    return read_poly(is);
}

void write_poly(std::ostream& out, const Poly& p) {
    if (p.is_zero()) {
        out << "0\n";
        return;
    }
    for (int k = 0; k <= p.degree(); ++k) out << p[k].get_str() << "\n";
}

std::string poly_to_text(const Poly& p) {
    std::ostringstream os;
    write_poly(os, p);
    return os.str();
}

}  // namespace qroots
