#include "nw/io.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace nw {

std::string provenance_name(CellSource s) {
    switch (s) {
        case CellSource::first_row: return "first_row";
        case CellSource::cross_rule: return "cross_rule";
        case CellSource::oracle: return "oracle";
        case CellSource::virtual_row: return "virtual";
        case CellSource::outside: return "outside";
    }
    return "?";
}

Json poly_coeffs_json(const Poly& p) {
    Json arr = Json::array();
    for (std::uint64_t c : p.coeffs()) arr.push_back(c);
    return arr;
}

Json wall_to_json(const WallRegion& region) {
    Json j;
    j["modulus"] = region.modulus();
    j["j_range"] = Json::array({1, region.rows()});
    j["k_range"] = Json::array({region.col_min(), region.col_max()});
    Json cells = Json::array();
    Json prov = Json::array();
    std::string run_name;
    long long run_len = 0;
    auto flush = [&]() {
        if (run_len > 0) prov.push_back(Json::array({run_name, run_len}));
    };
    for (int row = 1; row <= region.rows(); ++row) {
        for (int k = region.col_min(); k <= region.col_max(); ++k) {
            cells.push_back(region.value(row, k));
            std::string name = provenance_name(region.source(row, k));
            if (name == run_name) {
                ++run_len;
            } else {
                flush();
                run_name = std::move(name);
                run_len = 1;
            }
        }
    }
    flush();
    j["cells"] = std::move(cells);
    j["provenance"] = std::move(prov);
    return j;
}

std::string wall_to_csv(const WallRegion& region) {
    std::ostringstream os;
    os << "j,k,value\n";
    for (int row = 1; row <= region.rows(); ++row)
        for (int k = region.col_min(); k <= region.col_max(); ++k)
            os << row << "," << k << "," << region.value(row, k) << "\n";
    return os.str();
}

Json windows_to_json(const WallRegion& region, const std::vector<Window>& windows) {
    Json arr = Json::array();
    for (const auto& w : windows) {
        Json jw;
        jw["j_corner"] = w.j_corner;
        jw["k_corner"] = w.k_corner;
        jw["size"] = w.size;
        jw["truncated"] = w.truncated;
        if (!w.truncated && w.j_corner >= 2) {
            jw["q_coeffs"] = poly_coeffs_json(window_convergent(region, w).den);
        } else {
            jw["q_coeffs"] = Json::array();
        }
        arr.push_back(std::move(jw));
    }
    return arr;
}

Json report_to_json(const VerificationReport& report) {
    Json j;
    j["suite"] = report.suite;
    Json params;
    for (const auto& [key, value] : report.params) params[key] = value;
    j["params"] = std::move(params);
    j["checks_run"] = report.checks_run;
    j["failure_count"] = report.failure_count;
    Json fails = Json::array();
    for (const auto& fail : report.failures) {
        Json jf;
        jf["identity"] = fail.identity;
        jf["modulus"] = fail.modulus;
        jf["m"] = fail.m;
        jf["n"] = fail.n;
        jf["lhs"] = fail.lhs;
        jf["rhs"] = fail.rhs;
        jf["context"] = fail.context;
        fails.push_back(std::move(jf));
    }
    j["failures"] = std::move(fails);
    return j;
}

void write_ppm(const WallRegion& region, std::ostream& out) {
    int width = region.col_max() - region.col_min() + 1;
    int height = region.rows();
    out << "P6\n" << width << " " << height << "\n255\n";
    double denom = region.modulus() >= 2 ? static_cast<double>(region.modulus() - 1) : 1.0;
    for (int row = 1; row <= height; ++row) {
        for (int k = region.col_min(); k <= region.col_max(); ++k) {
            unsigned char rgb[3];
            if (!region.known(row, k)) {
                rgb[0] = 0;
                rgb[1] = 0;
                rgb[2] = 255;
            } else if (region.value(row, k) == 0) {
                rgb[0] = 255;
                rgb[1] = 0;
                rgb[2] = 0;
            } else {
                auto g = static_cast<unsigned char>(
                    std::lround(255.0 * static_cast<double>(region.value(row, k)) / denom));
                rgb[0] = rgb[1] = rgb[2] = g;
            }
            out.write(reinterpret_cast<const char*>(rgb), 3);
        }
    }
}

}  // namespace nw
