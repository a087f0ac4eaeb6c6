#pragma once
// Deterministic CSV / JSON / SVG emitters. All numbers are written with 17
// significant digits for double round-trip fidelity.

#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qd {

inline std::string num17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// ---- flat JSON object builder (string/number/number-array values) ----
class JsonObject {
  public:
    void add(const std::string& key, double v) { fields_.push_back({key, num17(v)}); }
    void add(const std::string& key, int v) { fields_.push_back({key, std::to_string(v)}); }
    void add(const std::string& key, const std::string& v) {
        fields_.push_back({key, "\"" + v + "\""});
    }
    void add(const std::string& key, const std::vector<double>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += num17(v[i]);
        }
        fields_.push_back({key, s + "]"});
    }
    void add_raw(const std::string& key, const std::string& raw) {
        fields_.push_back({key, raw});
    }
    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < fields_.size(); ++i) {
            if (i) s += ", ";
            s += "\"" + fields_[i].first + "\": " + fields_[i].second;
        }
        return s + "}";
    }

  private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

inline std::string csv_table(const std::vector<std::string>& header,
                             const std::vector<std::vector<double>>& rows) {
    std::string s;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) s += ",";
        s += header[i];
    }
    s += "\n";
    for (auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) s += ",";
            s += num17(r[i]);
        }
        s += "\n";
    }
    return s;
}

// Closed polyline as a single-path SVG, viewBox fitted with a 5% margin.
inline std::string svg_curve(const std::vector<std::complex<double>>& pts) {
    double lox = 1e300, hix = -1e300, loy = 1e300, hiy = -1e300;
    for (auto& z : pts) {
        lox = std::min(lox, z.real());
        hix = std::max(hix, z.real());
        loy = std::min(loy, z.imag());
        hiy = std::max(hiy, z.imag());
    }
    double mx = 0.05 * (hix - lox), my = 0.05 * (hiy - loy);
    lox -= mx;
    hix += mx;
    loy -= my;
    hiy += my;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    // y axis flipped for SVG coordinates
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num17(lox) << " "
        << num17(-hiy) << " " << num17(hix - lox) << " " << num17(hiy - loy) << "\">\n";
    out << "<path fill=\"none\" stroke=\"black\" stroke-width=\"" << num17((hix - lox) / 400.0)
        << "\" d=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out << (i == 0 ? "M " : "L ") << num17(pts[i].real()) << " "
            << num17(-pts[i].imag()) + " ";
    }
    out << "Z\"/>\n</svg>\n";
    return out.str();
}

} // namespace qd
